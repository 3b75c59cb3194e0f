//! The G2 root system on the dual side: the 12 roots in the basis of
//! simple roots (g1 long, g2 short), dual-torus elements in the fixed
//! coordinates m(x, y), root evaluation, coroots, and the Weyl group.

use crate::exactnum::{NumError, QValue};
use std::fmt;
use std::sync::OnceLock;

/// A root p*g1 + r*g2 in the simple-root basis of the dual group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub p: i32,
    pub r: i32,
}

impl Root {
    pub const fn new(p: i32, r: i32) -> Self {
        Root { p, r }
    }

    pub fn is_valid(&self) -> bool {
        ALL_ROOTS.contains(self)
    }

    pub fn is_long(&self) -> bool {
        matches!(
            (self.p.abs(), self.r.abs()),
            (1, 0) | (1, 3) | (2, 3)
        ) && self.is_valid()
    }

    pub fn is_short(&self) -> bool {
        self.is_valid() && !self.is_long()
    }

    pub fn neg(&self) -> Self {
        Root::new(-self.p, -self.r)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(f: &mut fmt::Formatter<'_>, c: i32, name: &str, lead: bool) -> fmt::Result {
            if c == 0 {
                return Ok(());
            }
            if !lead {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{name}")
        }
        if self.p == 0 && self.r == 0 {
            return write!(f, "0");
        }
        term(f, self.p, "g1", true)?;
        term(f, self.r, "g2", self.p == 0)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub const G1: Root = Root::new(1, 0);
pub const G2R: Root = Root::new(0, 1);
pub const G1_G2: Root = Root::new(1, 1);
pub const G1_2G2: Root = Root::new(1, 2);
pub const G1_3G2: Root = Root::new(1, 3);
pub const TWO_G1_3G2: Root = Root::new(2, 3);

/// The 12 roots of G2, positives first.
pub const ALL_ROOTS: [Root; 12] = [
    G1,
    G2R,
    G1_G2,
    G1_2G2,
    G1_3G2,
    TWO_G1_3G2,
    Root::new(-1, 0),
    Root::new(0, -1),
    Root::new(-1, -1),
    Root::new(-1, -2),
    Root::new(-1, -3),
    Root::new(-2, -3),
];

/// A dual-torus element, stored through the fixed coordinates
/// x = (g1+2g2)(t), y = (g1+g2)(t) of the isomorphism m(x, y).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusElement {
    pub x: QValue,
    pub y: QValue,
}

impl TorusElement {
    pub fn new(x: QValue, y: QValue) -> Self {
        TorusElement { x, y }
    }

    pub fn identity() -> Self {
        TorusElement::new(QValue::one(), QValue::one())
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_one() && self.y.is_one()
    }

    pub fn mul(&self, other: &TorusElement) -> TorusElement {
        TorusElement::new(&self.x * &other.x, &self.y * &other.y)
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("({0}, {1}) is not a root of G2")]
    InvalidRoot(i32, i32),
}

/// Evaluate a root at m(x, y).
///
/// From g1(m(x,y)) = x^{-1} y^2 and g2(m(x,y)) = x y^{-1}, extended
/// additively: (p*g1 + r*g2)(m(x,y)) = x^{r-p} * y^{2p-r}.
pub fn eval_root(root: Root, t: &TorusElement) -> Result<QValue, RootError> {
    if !root.is_valid() {
        return Err(RootError::InvalidRoot(root.p, root.r));
    }
    let ex = (root.r - root.p) as i64;
    let ey = (2 * root.p - root.r) as i64;
    Ok(t.x.pow(ex) * t.y.pow(ey))
}

/// The coroot of a root, as the cocharacter a -> m(a^{c2}, a^{c1-c2})
/// where the coroot is c1*g1^ + c2*g2^ under the standard identification.
/// Coefficient table for the positive roots; negatives invert.
fn coroot_coeffs(root: Root) -> (i64, i64) {
    let (c1, c2) = match (root.p.abs(), root.r.abs()) {
        (1, 0) => (1, 0),
        (0, 1) => (0, 1),
        (1, 1) => (3, 1),
        (1, 2) => (3, 2),
        (1, 3) => (1, 1),
        (2, 3) => (2, 1),
        _ => panic!("coroot of a non-root"),
    };
    if root.p < 0 || (root.p == 0 && root.r < 0) {
        (-c1, -c2)
    } else {
        (c1, c2)
    }
}

/// coroot(root)(a) as a torus element, for a given as a QValue.
/// Using g1^(a) = m(1, a) and g2^(a) = m(a, a^{-1}).
pub fn coroot(root: Root, a: &QValue) -> TorusElement {
    let (c1, c2) = coroot_coeffs(root);
    // g1^(a)^{c1} * g2^(a)^{c2} = m(a^{c2}, a^{c1-c2})
    TorusElement::new(a.pow(c2), a.pow(c1 - c2))
}

/// A Weyl group element as its 2x2 integer matrix on the root lattice in
/// the (g1, g2) basis; columns are the images of g1 and g2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub m: [[i64; 2]; 2],
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement {
            m: [[1, 0], [0, 1]],
        }
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let a = &self.m;
        let b = &other.m;
        let mut m = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        WeylElement { m }
    }

    pub fn inverse(&self) -> WeylElement {
        let [[a, b], [c, d]] = self.m;
        let det = a * d - b * c;
        assert!(det == 1 || det == -1, "Weyl matrix must be unimodular");
        WeylElement {
            m: [[d * det, -b * det], [-c * det, a * det]],
        }
    }

    pub fn act_root(&self, root: Root) -> Root {
        let p = self.m[0][0] * root.p as i64 + self.m[0][1] * root.r as i64;
        let r = self.m[1][0] * root.p as i64 + self.m[1][1] * root.r as i64;
        Root::new(p as i32, r as i32)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// The 12 Weyl elements, generated from the two simple reflections and
/// memoized, sorted lexicographically on matrix entries.  The fixed total
/// order is the tie-break used by the classifier.
pub fn weyl_elements() -> &'static [WeylElement] {
    static CELL: OnceLock<Vec<WeylElement>> = OnceLock::new();
    CELL.get_or_init(|| {
        // Simple reflections from the G2 Cartan pairings with g1 long:
        // <g2, g1^> = -1, <g1, g2^> = -3.
        // s1: g1 -> -g1, g2 -> g2 + g1.  s2: g2 -> -g2, g1 -> g1 + 3 g2.
        let s1 = WeylElement {
            m: [[-1, 1], [0, 1]],
        };
        let s2 = WeylElement {
            m: [[1, 0], [3, -1]],
        };
        let mut group = vec![WeylElement::identity()];
        loop {
            let mut added = false;
            let current = group.clone();
            for w in &current {
                for s in [&s1, &s2] {
                    let next = w.compose(s);
                    if !group.contains(&next) {
                        group.push(next);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        group.sort();
        assert_eq!(group.len(), 12, "W(G2) has order 12");
        group
    })
}

/// Contragredient action on torus elements: characters satisfy
/// chi(w . t) = (w^{-1} chi)(t), so the coordinates of w . t are the
/// w^{-1}-translates of (g1+2g2) and (g1+g2) evaluated at t.
pub fn weyl_act_torus(w: &WeylElement, t: &TorusElement) -> TorusElement {
    let winv = w.inverse();
    let x = eval_root(winv.act_root(G1_2G2), t).expect("Weyl permutes roots");
    let y = eval_root(winv.act_root(G1_G2), t).expect("Weyl permutes roots");
    TorusElement::new(x, y)
}

/// Parse helper shared by the CLI: a torus element from two value strings.
pub fn torus_from_strs(x: &str, y: &str) -> Result<TorusElement, NumError> {
    Ok(TorusElement::new(x.parse()?, y.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, QValue, RootOfUnity};

    #[test]
    fn twelve_roots_six_long() {
        assert_eq!(ALL_ROOTS.len(), 12);
        assert_eq!(ALL_ROOTS.iter().filter(|r| r.is_long()).count(), 6);
        assert_eq!(ALL_ROOTS.iter().filter(|r| r.is_short()).count(), 6);
    }

    #[test]
    fn eval_table() {
        // g2 and g1+g2 both give q at m(q^2, q)
        let t = TorusElement::new(QValue::q_pow(2, 1), QValue::q());
        assert_eq!(eval_root(G2R, &t).unwrap(), QValue::q());
        assert_eq!(eval_root(G1_G2, &t).unwrap(), QValue::q());
        // identity element: every root evaluates to 1
        for r in ALL_ROOTS {
            assert!(eval_root(r, &TorusElement::identity()).unwrap().is_one());
        }
        // the full monomial table: g1+g2 -> y, g1+2g2 -> x, g1+3g2 -> x^2 y^{-1},
        // 2g1+3g2 -> x y; cross-check that m(q, -q) gives q exactly on g1 and g1+2g2
        let t = TorusElement::new(
            QValue::q(),
            QValue::new(RootOfUnity::minus_one(), rat(1, 1)),
        );
        let q_roots: Vec<Root> = ALL_ROOTS
            .into_iter()
            .filter(|r| eval_root(*r, &t).unwrap().is_q())
            .collect();
        assert_eq!(q_roots, vec![G1, G1_2G2]);
        assert!(eval_root(Root::new(2, 1), &t).is_err());
    }

    #[test]
    fn eval_is_multiplicative_on_root_sums() {
        let t = TorusElement::new(
            QValue::new(RootOfUnity::new(1, 3), rat(2, 3)),
            QValue::q_pow(1, 2),
        );
        for a in ALL_ROOTS {
            for b in ALL_ROOTS {
                let sum = Root::new(a.p + b.p, a.r + b.r);
                if sum.is_valid() {
                    assert_eq!(
                        eval_root(sum, &t).unwrap(),
                        eval_root(a, &t).unwrap() * eval_root(b, &t).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn weyl_group_structure() {
        let ws = weyl_elements();
        assert_eq!(ws.len(), 12);
        // closure under composition
        for a in ws {
            for b in ws {
                assert!(ws.contains(&a.compose(b)));
            }
        }
        // each element permutes the 12 roots, preserving length
        for w in ws {
            let mut imgs: Vec<Root> = ALL_ROOTS.iter().map(|r| w.act_root(*r)).collect();
            for (r, img) in ALL_ROOTS.iter().zip(&imgs) {
                assert!(img.is_valid());
                assert_eq!(r.is_long(), img.is_long());
            }
            imgs.sort();
            let mut all = ALL_ROOTS.to_vec();
            all.sort();
            assert_eq!(imgs, all);
        }
        // the reflection in g1 sends g2 to g1+g2
        let s1 = WeylElement {
            m: [[-1, 1], [0, 1]],
        };
        assert!(ws.contains(&s1));
        assert_eq!(s1.act_root(G2R), G1_G2);
    }

    #[test]
    fn contragredient_compatibility() {
        let t = TorusElement::new(
            QValue::new(RootOfUnity::new(1, 4), rat(3, 2)),
            QValue::new(RootOfUnity::new(5, 6), rat(-1, 3)),
        );
        for w in weyl_elements() {
            let wt = weyl_act_torus(w, &t);
            for r in ALL_ROOTS {
                assert_eq!(
                    eval_root(w.act_root(r), &wt).unwrap(),
                    eval_root(r, &t).unwrap()
                );
            }
            // multiset of root values is Weyl-invariant
            let mut vals: Vec<String> = ALL_ROOTS
                .iter()
                .map(|r| eval_root(*r, &wt).unwrap().to_string())
                .collect();
            let mut base: Vec<String> = ALL_ROOTS
                .iter()
                .map(|r| eval_root(*r, &t).unwrap().to_string())
                .collect();
            vals.sort();
            base.sort();
            assert_eq!(vals, base);
        }
    }

    #[test]
    fn coroot_pairings() {
        // <root, coroot(root)> = 2: evaluating a root on its own coroot at a
        // gives a^2
        let a = QValue::new(RootOfUnity::new(1, 6), rat(1, 5));
        for r in ALL_ROOTS {
            let t = coroot(r, &a);
            assert_eq!(eval_root(r, &t).unwrap(), a.pow(2));
        }
        // the two printed coroot formulas
        assert_eq!(
            coroot(G1, &QValue::q()),
            TorusElement::new(QValue::one(), QValue::q())
        );
        assert_eq!(
            coroot(G2R, &QValue::q()),
            TorusElement::new(QValue::q(), QValue::q_pow(-1, 1))
        );
    }
}
