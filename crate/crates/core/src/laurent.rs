//! Exact Laurent polynomials in one variable `q` with big-integer coefficients.
//!
//! This is the ground ring `Z[q, q^-1]` for every Hecke, module and Schur
//! computation in the crate. Storage is sparse: a map from exponent to a
//! nonzero coefficient.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q, q^-1]`.
///
/// No stored coefficient is ever zero, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(1, exp)
    }

    /// `c * q^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, T>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    /// `q^-1 - q`, the constant in the quadratic relation.
    pub fn qinv_minus_q() -> Self {
        Self::from_terms([(-1, 1), (1, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// If the polynomial is `c q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    fn add_term(&mut self, exp: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * q^shift * other` in place.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &BigInt, shift: i32) {
        if c.is_zero() {
            return;
        }
        for (e, oc) in &other.terms {
            self.add_term(e + shift, oc * c);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Membership in `qZ[q]`: every exponent is at least one.
    pub fn is_in_q_zq(&self) -> bool {
        self.min_degree().is_none_or(|e| e >= 1)
    }

    /// Membership in `N[q, q^-1]`: every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The part with exponents `>= 1`.
    pub fn positive_part(&self) -> Self {
        LaurentPoly {
            terms: self.terms.range(1..).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Specialization at a rational value of `q`. Zero is rejected for
    /// polynomials with negative exponents.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        if q.is_zero() && self.min_degree().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = pow_rational(q, *e);
            acc += p * BigRational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Specialization at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c, 0);
        out
    }
}

fn pow_rational(q: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.add_scaled(rhs, c, *e);
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `-q + q^-1` prints as `-q + q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{}", mag)?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{}q", mag)?,
                _ if unit => write!(f, "q^{}", e)?,
                _ => write!(f, "{}q^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

/// Error from [`LaurentPoly::parse`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError(pub String);

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse Laurent polynomial: {}", self.0)
    }
}

impl LaurentPoly {
    /// Parses the text form produced by `Display`, e.g. `2q^-1 - 3 + q^2`.
    pub fn parse(s: &str) -> Result<Self, ParsePolyError> {
        let err = || ParsePolyError(String::from(s));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    pieces.push((neg, core::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(err());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(err());
        }
        pieces.push((neg, cur));
        let mut out = Self::zero();
        for (neg, body) in pieces {
            let (coef, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| err())?, 0),
                Some(pos) => {
                    let cs = &body[..pos];
                    let c = if cs.is_empty() {
                        BigInt::one()
                    } else {
                        cs.parse::<BigInt>().map_err(|_| err())?
                    };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        let r = rest.strip_prefix('^').ok_or_else(err)?;
                        r.parse::<i32>().map_err(|_| err())?
                    };
                    (c, e)
                }
            };
            out.add_term(exp, if neg { -coef } else { coef });
        }
        Ok(out)
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::*;
    use alloc::string::ToString;
    use serde::de::{MapAccess, Visitor};
    use serde::ser::SerializeMap;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for LaurentPoly {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut m = s.serialize_map(Some(self.terms.len()))?;
            for (e, c) in &self.terms {
                m.serialize_entry(&e.to_string(), &c.to_string())?;
            }
            m.end()
        }
    }

    struct PolyVisitor;

    impl<'de> Visitor<'de> for PolyVisitor {
        type Value = LaurentPoly;
        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a map from exponent strings to coefficient strings")
        }
        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<LaurentPoly, A::Error> {
            let mut p = LaurentPoly::zero();
            while let Some((k, v)) = map.next_entry::<String, String>()? {
                let e: i32 = k.parse().map_err(serde::de::Error::custom)?;
                let c: BigInt = v.parse().map_err(serde::de::Error::custom)?;
                p.add_term(e, c);
            }
            Ok(p)
        }
    }

    impl<'de> Deserialize<'de> for LaurentPoly {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<LaurentPoly, D::Error> {
            d.deserialize_map(PolyVisitor)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn add_cancels() {
        assert_eq!(p("q^-1 - q") + p("q"), p("q^-1"));
        assert_eq!(LaurentPoly::zero() + p("3q^2 - 1"), p("3q^2 - 1"));
        assert_eq!(p("1 + q") + p("1 + q"), p("2 + 2q"));
    }

    #[test]
    fn mul_examples() {
        let u = LaurentPoly::qinv_minus_q();
        assert_eq!(&u * &u, p("q^-2 - 2 + q^2"));
        assert_eq!(p("q^3") * p("q^-3"), LaurentPoly::one());
        assert_eq!(p("1 + q") * p("1 - q"), p("1 - q^2"));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("q").bar(), p("q^-1"));
        assert_eq!(p("3").bar(), p("3"));
        assert_eq!(p("q^-1 - q").bar(), p("q - q^-1"));
    }

    #[test]
    fn membership() {
        assert!(p("q + 3q^2").is_in_q_zq());
        assert!(!p("1 + q").is_in_q_zq());
        let x = p("q - q^3");
        assert!(x.is_in_q_zq());
        assert!(!x.is_nonnegative());
        assert!(LaurentPoly::zero().is_in_q_zq());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "1", "-q", "q^-1 - q", "2q^5 + 3 - 7q^-4", "q^2 + 2q + 1"] {
            let x = p(s);
            assert_eq!(p(&alloc::format!("{}", x)), x);
        }
        assert_eq!(alloc::format!("{}", LaurentPoly::qinv_minus_q()), "-q + q^-1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(LaurentPoly::parse("").is_err());
        assert!(LaurentPoly::parse("q^").is_err());
        assert!(LaurentPoly::parse("1 +").is_err());
        assert!(LaurentPoly::parse("x").is_err());
    }

    #[test]
    fn eval_points() {
        let x = p("q^-1 - q");
        let two = BigRational::from_integer(2.into());
        assert_eq!(x.eval(&two).unwrap(), BigRational::new((-3).into(), 2.into()));
        assert_eq!(x.eval_one(), BigInt::zero());
        assert!(x.eval(&BigRational::zero()).is_none());
    }
}
