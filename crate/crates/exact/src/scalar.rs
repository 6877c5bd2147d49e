//! The exact scalar type used by every matrix in the workspace.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::rational::Rational;

/// Largest cyclotomic order accepted by [`Field::parse`].
pub const MAX_CYCLOTOMIC_ORDER: u32 = 24;

/// An element of `Q` or of some `Q(zeta_N)`.
///
/// Cyclotomic values that happen to be rational are stored as `Rat`, so
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Box<Cyclotomic>),
}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Rat(Rational::ZERO);
    pub const ONE: Scalar = Scalar::Rat(Rational::ONE);

    pub fn int(n: i64) -> Scalar {
        Scalar::Rat(Rational::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Rational::new(n, d))
    }

    /// `zeta_N^k`.
    pub fn zeta_pow(order: u32, k: i64) -> Scalar {
        Scalar::from_cyc(Cyclotomic::zeta_pow(order, k))
    }

    pub fn from_cyc(c: Cyclotomic) -> Scalar {
        match c.as_rational() {
            Some(r) => Scalar::Rat(r),
            None => Scalar::Cyc(Box::new(c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Cyc(_) => None,
        }
    }

    /// Cyclotomic order this value needs, if it is not rational.
    pub fn order(&self) -> Option<u32> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Cyc(c) => Some(c.order()),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.inv().map(Scalar::Rat),
            Scalar::Cyc(c) => c.inv().map(Scalar::from_cyc),
        }
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut acc = Scalar::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `(-1)^k`.
    pub fn sign(k: usize) -> Scalar {
        if k % 2 == 0 {
            Scalar::ONE
        } else {
            Scalar::int(-1)
        }
    }

    fn cyc_pair(a: &Scalar, b: &Scalar) -> (Cyclotomic, Cyclotomic) {
        let order = match (a, b) {
            (Scalar::Cyc(x), Scalar::Cyc(y)) => {
                assert_eq!(x.order(), y.order(), "scalars from different cyclotomic fields");
                x.order()
            }
            (Scalar::Cyc(x), _) | (_, Scalar::Cyc(x)) => x.order(),
            _ => unreachable!(),
        };
        let lift = |s: &Scalar| match s {
            Scalar::Rat(r) => Cyclotomic::from_rational(order, r.clone()),
            Scalar::Cyc(c) => (**c).clone(),
        };
        (lift(a), lift(b))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => {
                let (a, b) = Scalar::cyc_pair(self, rhs);
                Scalar::from_cyc(a.add(&b))
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => {
                let (a, b) = Scalar::cyc_pair(self, rhs);
                Scalar::from_cyc(a.sub(&b))
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::ZERO
                } else {
                    Scalar::from_cyc(c.scale(a))
                }
            }
            (Scalar::Cyc(x), Scalar::Cyc(y)) => {
                assert_eq!(x.order(), y.order(), "scalars from different cyclotomic fields");
                Scalar::from_cyc(x.mul(y))
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(Box::new(c.neg())),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rationals serialize as `"p/q"` strings; cyclotomic values as
/// `{"order": N, "coeffs": ["p/q", ...]}` in the power basis.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rat(r) => s.serialize_str(&r.to_string()),
            Scalar::Cyc(c) => {
                let mut st = s.serialize_struct("Cyclotomic", 2)?;
                st.serialize_field("order", &c.order())?;
                let coeffs: Vec<String> = c.coeffs().iter().map(|r| r.to_string()).collect();
                st.serialize_field("coeffs", &coeffs)?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Str(String),
            Int(i64),
            Cyc { order: u32, coeffs: Vec<String> },
        }
        match Repr::deserialize(d)? {
            Repr::Str(s) => s.parse::<Rational>().map(Scalar::Rat).map_err(de::Error::custom),
            Repr::Int(n) => Ok(Scalar::int(n)),
            Repr::Cyc { order, coeffs } => {
                if order == 0 || order > MAX_CYCLOTOMIC_ORDER {
                    return Err(de::Error::custom(format!("unsupported cyclotomic order {order}")));
                }
                let cs = coeffs
                    .iter()
                    .map(|c| c.parse::<Rational>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(de::Error::custom)?;
                Ok(Scalar::from_cyc(Cyclotomic::from_poly(order, cs)))
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = crate::rational::ParseRationalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<Rational>().map(Scalar::Rat)
    }
}

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Cyclotomic(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("unsupported field {0:?}: expected `rational` or `cyclotomic:N` with 1 <= N <= {MAX_CYCLOTOMIC_ORDER}")]
    Unsupported(String),
}

impl Field {
    pub fn parse(s: &str) -> Result<Field, FieldError> {
        let t = s.trim();
        if t == "rational" || t == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(n) = t.strip_prefix("cyclotomic:") {
            if let Ok(n) = n.parse::<u32>() {
                return Field::cyclotomic(n).map_err(|_| FieldError::Unsupported(s.to_string()));
            }
        }
        Err(FieldError::Unsupported(s.to_string()))
    }

    /// `Q(zeta_n)`; orders with `phi(n) = 1` collapse to `Q`.
    pub fn cyclotomic(n: u32) -> Result<Field, FieldError> {
        if n == 0 || n > MAX_CYCLOTOMIC_ORDER {
            return Err(FieldError::Unsupported(format!("cyclotomic:{n}")));
        }
        Ok(if n <= 2 { Field::Rational } else { Field::Cyclotomic(n) })
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s.order()) {
            (_, None) => true,
            (Field::Rational, Some(_)) => false,
            (Field::Cyclotomic(n), Some(m)) => *n == m,
        }
    }

    /// Whether every element of `other` lies in `self`.
    pub fn extends(&self, other: &Field) -> bool {
        match (self, other) {
            (_, Field::Rational) => true,
            (Field::Cyclotomic(a), Field::Cyclotomic(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_is_rational() {
        let z = Scalar::zeta_pow(2, 1);
        assert_eq!(z, Scalar::int(-1));
        assert_eq!(z.pow(3), Scalar::int(-1));
    }

    #[test]
    fn mixed_arithmetic_normalizes() {
        let z = Scalar::zeta_pow(3, 1);
        let z2 = Scalar::zeta_pow(3, 2);
        // 1 + z + z^2 = 0
        let s = &(&Scalar::ONE + &z) + &z2;
        assert!(s.is_zero());
        assert_eq!(&z * &z2, Scalar::ONE);
        assert_eq!(&z / &z, Scalar::ONE);
    }

    #[test]
    fn serde_round_trip() {
        for s in [Scalar::frac(-3, 4), Scalar::zeta_pow(5, 2)] {
            let j = serde_json::to_string(&s).unwrap();
            let back: Scalar = serde_json::from_str(&j).unwrap();
            assert_eq!(back, s);
        }
        assert_eq!(serde_json::to_string(&Scalar::frac(1, 2)).unwrap(), "\"1/2\"");
    }

    #[test]
    fn field_parsing() {
        assert_eq!(Field::parse("rational").unwrap(), Field::Rational);
        assert_eq!(Field::parse("cyclotomic:5").unwrap(), Field::Cyclotomic(5));
        assert_eq!(Field::parse("cyclotomic:2").unwrap(), Field::Rational);
        assert!(Field::parse("cyclotomic:25").is_err());
        assert!(Field::parse("reals").is_err());
        assert!(Field::Cyclotomic(5).contains(&Scalar::zeta_pow(5, 1)));
        assert!(!Field::Rational.contains(&Scalar::zeta_pow(5, 1)));
    }
}
