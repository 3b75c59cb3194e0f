//! Exact arithmetic: rationals, roots of unity, the degree-4 cyclotomic
//! field generated by a primitive 12th root of unity, and formal q-power
//! values.  Everything downstream computes in these rings; there is no
//! floating point anywhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num_rational`).
pub type Rational = BigRational;

/// Shorthand constructor: `rat(p, q)` is p/q in lowest terms.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("root of unity of order {0} does not embed in the 12th cyclotomic field")]
    OrderNotDividing12(u64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

// ---------------------------------------------------------------------------
// Roots of unity
// ---------------------------------------------------------------------------

/// A root of unity, stored as the reduced fraction k/n of a full turn,
/// normalized to 0 <= k/n < 1.  Equality of the fraction is equality of the
/// root; multiplication adds fractions mod 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    turns: Rational,
}

impl RootOfUnity {
    pub fn one() -> Self {
        RootOfUnity {
            turns: Rational::zero(),
        }
    }

    /// zeta(n)^k, the k-th power of a fixed primitive n-th root of unity.
    pub fn new(k: i64, n: u64) -> Self {
        assert!(n > 0, "order must be positive");
        Self::from_turns(rat(k, n as i64))
    }

    pub fn from_turns(t: Rational) -> Self {
        let f = t.fract();
        let turns = if f.is_negative() { f + Rational::one() } else { f };
        RootOfUnity { turns }
    }

    pub fn minus_one() -> Self {
        Self::new(1, 2)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        if self.turns.is_zero() {
            1
        } else {
            // turns = k/n reduced, so the order is n
            num_traits::ToPrimitive::to_u64(self.turns.denom()).expect("order fits in u64")
        }
    }

    /// Numerator k of the reduced fraction k/n.
    pub fn exponent(&self) -> u64 {
        num_traits::ToPrimitive::to_u64(self.turns.numer()).expect("exponent fits in u64")
    }

    pub fn is_one(&self) -> bool {
        self.turns.is_zero()
    }

    pub fn inverse(&self) -> Self {
        Self::from_turns(-self.turns.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::from_turns(self.turns.clone() * rat_int(k))
    }

    /// Embed into the 12th cyclotomic field.  Errors unless the order
    /// divides 12; an out-of-table trace request surfaces here.
    pub fn embed(&self) -> Result<Cyclo, NumError> {
        let n = self.order();
        if 12 % n != 0 {
            return Err(NumError::OrderNotDividing12(n));
        }
        let k = self.exponent() * (12 / n);
        Ok(Cyclo::zeta12_pow(k))
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        RootOfUnity::from_turns(self.turns + rhs.turns)
    }
}

impl<'a> Mul<&'a RootOfUnity> for &'a RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: &RootOfUnity) -> RootOfUnity {
        RootOfUnity::from_turns(self.turns.clone() + rhs.turns.clone())
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, n) = (self.exponent(), self.order());
        match (k, n) {
            (_, 1) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (k, n) if k == 1 => write!(f, "zeta({n})"),
            (k, n) => write!(f, "zeta({n})^{k}"),
        }
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// The 12th cyclotomic field
// ---------------------------------------------------------------------------

/// An element of Q(zeta_12) on the power basis 1, z, z^2, z^3 of the
/// degree-4 extension, reduced by the minimal polynomial z^4 = z^2 - 1.
///
/// Every root of unity produced by the trace tables in this crate has
/// order dividing 12 = lcm(2,3,4), so this one field carries all packet
/// coefficients and traces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    c: [Rational; 4],
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            c: [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = Self::zero();
        c.c[0] = r;
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// The rational part, when `is_rational` holds.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// z^k for the primitive 12th root z, any integer k.
    pub fn zeta12_pow(k: u64) -> Self {
        // z^6 = -1, so reduce mod 12 and fold the sign.
        let k = (k % 12) as usize;
        let (k, sign) = if k >= 6 { (k - 6, -1i64) } else { (k, 1) };
        let s = rat_int(sign);
        let mut c = Self::zero();
        match k {
            0..=3 => c.c[k] = s,
            // z^4 = z^2 - 1, z^5 = z^3 - z
            4 => {
                c.c[2] = s.clone();
                c.c[0] = -s;
            }
            5 => {
                c.c[3] = s.clone();
                c.c[1] = -s;
            }
            _ => unreachable!(),
        }
        c
    }

    /// A fixed primitive cube root of unity: theta_3 = z^4.
    pub fn theta3() -> Self {
        Self::zeta12_pow(4)
    }

    /// The primitive square root of unity: theta_2 = z^6 = -1.
    pub fn theta2() -> Self {
        Self::from_int(-1)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        for x in &mut out.c {
            *x *= r.clone();
        }
        out
    }

    /// Complex conjugation, the automorphism z -> z^{-1}.
    pub fn conj(&self) -> Self {
        // conj(1) = 1, conj(z) = z - z^3, conj(z^2) = 1 - z^2, conj(z^3) = -z^3
        let mut out = Self::from_rational(self.c[0].clone());
        out = out + Self::zeta12_pow(11).scale(&self.c[1]);
        out = out + Self::zeta12_pow(10).scale(&self.c[2]);
        out = out + Self::zeta12_pow(9).scale(&self.c[3]);
        out
    }

    /// The Galois twist z -> z^k for k coprime to 12.
    fn galois(&self, k: u64) -> Self {
        let mut out = Self::from_rational(self.c[0].clone());
        for (i, ci) in self.c.iter().enumerate().skip(1) {
            out = out + Self::zeta12_pow((i as u64 * k) % 12).scale(ci);
        }
        out
    }

    /// Multiplicative inverse; panics on zero (the linear solves guard this).
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(zeta_12)");
        // Norm = product over Gal(Q(z)/Q) = {1,5,7,11}; x^{-1} = (prod of the
        // three nontrivial twists) / Norm, and the norm is rational.
        let g5 = self.galois(5);
        let g7 = self.galois(7);
        let g11 = self.galois(11);
        let cof = g5 * g7 * g11;
        let norm = self.clone() * cof.clone();
        let n = norm
            .as_rational()
            .expect("field norm must be rational");
        cof.scale(&n.recip())
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        let mut out = self;
        for i in 0..4 {
            out.c[i] += rhs.c[i].clone();
        }
        out
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self + (-rhs)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        let mut out = self;
        for x in &mut out.c {
            *x = -x.clone();
        }
        out
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        // Convolve to degree 6, then reduce z^4 = z^2-1, z^5 = z^3-z, z^6 = -1.
        let mut raw = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                raw[i + j] += self.c[i].clone() * rhs.c[j].clone();
            }
        }
        let mut out = Cyclo::zero();
        out.c[0] = raw[0].clone() - raw[4].clone() - raw[6].clone();
        out.c[1] = raw[1].clone() - raw[5].clone();
        out.c[2] = raw[2].clone() + raw[4].clone();
        out.c[3] = raw[3].clone() + raw[5].clone();
        out
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        self.clone() * rhs.clone()
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let (sign, mag) = if ci.is_negative() {
                ("-", -ci.clone())
            } else {
                ("+", ci.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let unit_coeff = mag.is_one();
            if i == 0 || !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}z", if unit_coeff { "" } else { "*" })?,
                k => write!(f, "{}z^{}", if unit_coeff { "" } else { "*" }, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Formal q-power values
// ---------------------------------------------------------------------------

/// A formal scalar u * q^a: a root of unity times a rational power of a
/// formal symbol q, treated as a transcendental real > 1.  Equality is
/// componentwise, which makes every comparison in the classification
/// decidable, uniformly in q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QValue {
    pub unit: RootOfUnity,
    pub exponent: Rational,
}

impl QValue {
    pub fn new(unit: RootOfUnity, exponent: Rational) -> Self {
        QValue { unit, exponent }
    }

    pub fn one() -> Self {
        QValue::new(RootOfUnity::one(), Rational::zero())
    }

    /// The formal q itself.
    pub fn q() -> Self {
        QValue::new(RootOfUnity::one(), Rational::one())
    }

    /// q^(p/r).
    pub fn q_pow(p: i64, r: i64) -> Self {
        QValue::new(RootOfUnity::one(), rat(p, r))
    }

    /// u alone (exponent zero).
    pub fn unit(u: RootOfUnity) -> Self {
        QValue::new(u, Rational::zero())
    }

    pub fn is_one(&self) -> bool {
        self.unit.is_one() && self.exponent.is_zero()
    }

    /// Is this exactly the formal q?
    pub fn is_q(&self) -> bool {
        self.unit.is_one() && self.exponent.is_one()
    }

    pub fn inverse(&self) -> Self {
        QValue::new(self.unit.inverse(), -self.exponent.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        QValue::new(self.unit.pow(k), self.exponent.clone() * rat_int(k))
    }
}

impl Mul for QValue {
    type Output = QValue;
    fn mul(self, rhs: QValue) -> QValue {
        QValue::new(self.unit * rhs.unit, self.exponent + rhs.exponent)
    }
}

impl<'a> Mul<&'a QValue> for &'a QValue {
    type Output = QValue;
    fn mul(self, rhs: &QValue) -> QValue {
        self.clone() * rhs.clone()
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u1 = self.unit.is_one();
        let e0 = self.exponent.is_zero();
        if u1 && e0 {
            return write!(f, "1");
        }
        if !u1 {
            write!(f, "{}", self.unit)?;
            if !e0 {
                write!(f, "*")?;
            }
        }
        if !e0 {
            if self.exponent.is_one() {
                write!(f, "q")?;
            } else if self.exponent.is_integer() {
                write!(f, "q^{}", self.exponent.numer())?;
            } else {
                write!(f, "q^({})", self.exponent)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Text grammar for QValue: `zeta(n)^k * q^(p/r)` with optional parts,
// plus the sugar `1`, `-1`, `q`, `-q`, `q^2`, `-zeta(3)*q`, ...
// ---------------------------------------------------------------------------

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            s: s.as_bytes(),
            pos: 0,
        }
    }
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }
    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }
    fn expect(&mut self, c: u8) -> Result<(), NumError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            _ => Err(self.err(format!("expected '{}'", c as char))),
        }
    }
    fn err(&self, msg: String) -> NumError {
        NumError::Parse { pos: self.pos, msg }
    }
    fn integer(&mut self) -> Result<i64, NumError> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer".into()));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let v: i64 = txt
            .parse()
            .map_err(|e| self.err(format!("bad integer: {e}")))?;
        Ok(if neg { -v } else { v })
    }
    // `k`, `(p/r)`, or `(p)`
    fn exponent(&mut self) -> Result<Rational, NumError> {
        if self.peek() == Some(b'(') {
            self.bump();
            let p = self.integer()?;
            let rr = if self.peek() == Some(b'/') {
                self.bump();
                self.integer()?
            } else {
                1
            };
            self.expect(b')')?;
            if rr == 0 {
                return Err(self.err("zero denominator".into()));
            }
            Ok(rat(p, rr))
        } else {
            Ok(rat_int(self.integer()?))
        }
    }
}

impl FromStr for QValue {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, NumError> {
        let mut lx = Lexer::new(s);
        let mut value = QValue::one();
        // optional leading sign
        if lx.peek() == Some(b'-') {
            lx.bump();
            value = value * QValue::unit(RootOfUnity::minus_one());
        }
        let mut expect_factor = true;
        while expect_factor {
            match lx.peek() {
                Some(b'z') => {
                    for c in b"zeta" {
                        lx.expect(*c)?;
                    }
                    lx.expect(b'(')?;
                    let n = lx.integer()?;
                    lx.expect(b')')?;
                    if n <= 0 {
                        return Err(lx.err("root-of-unity order must be positive".into()));
                    }
                    let k = if lx.peek() == Some(b'^') {
                        lx.bump();
                        lx.integer()?
                    } else {
                        1
                    };
                    value = value * QValue::unit(RootOfUnity::new(k, n as u64));
                }
                Some(b'q') => {
                    lx.bump();
                    let e = if lx.peek() == Some(b'^') {
                        lx.bump();
                        lx.exponent()?
                    } else {
                        Rational::one()
                    };
                    value = value * QValue::new(RootOfUnity::one(), e);
                }
                Some(b'1') => {
                    lx.bump();
                }
                Some(c) => return Err(lx.err(format!("unexpected '{}'", c as char))),
                None => return Err(lx.err("empty factor".into())),
            }
            expect_factor = lx.peek() == Some(b'*');
            if expect_factor {
                lx.bump();
            }
        }
        if lx.peek().is_some() {
            return Err(lx.err("trailing input".into()));
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta3_minimal_polynomial() {
        // embed(theta3) + embed(theta3^2) = -1
        let t = RootOfUnity::new(1, 3).embed().unwrap();
        let t2 = RootOfUnity::new(2, 3).embed().unwrap();
        assert_eq!(t.clone() + t2, Cyclo::from_int(-1));
        assert_eq!(RootOfUnity::new(1, 2).embed().unwrap(), Cyclo::from_int(-1));
    }

    #[test]
    fn theta3_conj_and_order() {
        let t = RootOfUnity::new(1, 3).embed().unwrap();
        let t2 = RootOfUnity::new(2, 3).embed().unwrap();
        assert_eq!(t.conj(), t2);
        assert_eq!(t.clone() * t.clone() * t.clone(), Cyclo::one());
    }

    #[test]
    fn qvalue_group_laws() {
        // (q^{1/3})^3 = q
        assert_eq!(QValue::q_pow(1, 3).pow(3), QValue::q());
        // (theta3, 1/3) * (theta3^2, 2/3) = (1, 1)
        let a = QValue::new(RootOfUnity::new(1, 3), rat(1, 3));
        let b = QValue::new(RootOfUnity::new(2, 3), rat(2, 3));
        assert_eq!(a * b, QValue::q());
        // unitary parts distinguish values
        let minus_q = QValue::new(RootOfUnity::minus_one(), rat_int(1));
        assert_ne!(minus_q, QValue::q());
    }

    #[test]
    fn embed_rejects_out_of_table_orders() {
        assert_eq!(
            RootOfUnity::new(1, 5).embed(),
            Err(NumError::OrderNotDividing12(5))
        );
        // order-4 roots embed (4 | 12)
        assert!(RootOfUnity::new(1, 4).embed().is_ok());
    }

    #[test]
    fn cyclo_inverse() {
        let x = Cyclo::zeta12_pow(1) + Cyclo::from_int(2);
        assert_eq!(x.clone() * x.inverse(), Cyclo::one());
    }

    #[test]
    fn parse_grammar() {
        let v: QValue = "zeta(3)^2*q^(2/3)".parse().unwrap();
        assert_eq!(v, QValue::new(RootOfUnity::new(2, 3), rat(2, 3)));
        assert_eq!("q".parse::<QValue>().unwrap(), QValue::q());
        assert_eq!(
            "-q".parse::<QValue>().unwrap(),
            QValue::new(RootOfUnity::minus_one(), rat_int(1))
        );
        assert_eq!("1".parse::<QValue>().unwrap(), QValue::one());
        assert_eq!("q^2".parse::<QValue>().unwrap(), QValue::q_pow(2, 1));
        assert_eq!("q^(-1)".parse::<QValue>().unwrap(), QValue::q_pow(-1, 1));
        assert!("q^".parse::<QValue>().is_err());
        assert!("zeta(0)".parse::<QValue>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["1", "-1", "q", "-q", "zeta(3)*q", "zeta(3)^2*q^(2/3)", "q^(1/2)"] {
            let v: QValue = s.parse().unwrap();
            let w: QValue = v.to_string().parse().unwrap();
            assert_eq!(v, w);
        }
    }
}
