fn main() {
    println!("g2abv");
}
