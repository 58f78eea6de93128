//! Exact dyadic rationals `m / 2^k`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use thiserror::Error;

/// Largest exponent we accept; keeps every aligned numerator inside `i128`.
const MAX_EXPONENT: u32 = 62;

/// A number of the form `numerator / 2^exponent`, always in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: i64,
    exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyadicParseError {
    #[error("empty number")]
    Empty,
    #[error("invalid integer `{0}`")]
    InvalidInteger(alloc::string::String),
    #[error("denominator {0} is not a positive power of two")]
    NotDyadic(i64),
}

impl Dyadic {
    pub const ZERO: Self = Self::integer(0);
    pub const ONE: Self = Self::integer(1);
    pub const MINUS_ONE: Self = Self::integer(-1);

    /// `numerator / 2^exponent`, reduced.
    ///
    /// Panics if `exponent` exceeds 62.
    pub fn new(numerator: i64, exponent: u32) -> Self {
        assert!(exponent <= MAX_EXPONENT, "dyadic exponent {exponent} out of range");
        let mut d = Self { numerator, exponent };
        d.reduce();
        d
    }

    pub const fn integer(value: i64) -> Self {
        Self { numerator: value, exponent: 0 }
    }

    pub const fn numerator(self) -> i64 {
        self.numerator
    }

    /// The `k` in `m / 2^k`.
    pub const fn exponent(self) -> u32 {
        self.exponent
    }

    pub const fn denominator(self) -> i64 {
        1 << self.exponent
    }

    pub const fn is_integer(self) -> bool {
        self.exponent == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.numerator)
    }

    fn reduce(&mut self) {
        if self.numerator == 0 {
            self.exponent = 0;
            return;
        }
        let shift = self.numerator.trailing_zeros().min(self.exponent);
        self.numerator >>= shift;
        self.exponent -= shift;
    }

    fn from_wide(numerator: i128, exponent: u32) -> Option<Self> {
        let mut n = numerator;
        let mut e = exponent;
        if n == 0 {
            return Some(Self::ZERO);
        }
        let shift = n.trailing_zeros().min(e);
        n >>= shift;
        e -= shift;
        if e > MAX_EXPONENT {
            return None;
        }
        Some(Self { numerator: i64::try_from(n).ok()?, exponent: e })
    }

    /// Both numerators scaled to the common exponent.
    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let e = self.exponent.max(other.exponent);
        let a = i128::from(self.numerator) << (e - self.exponent);
        let b = i128::from(other.numerator) << (e - other.exponent);
        (a, b, e)
    }

    pub fn checked_add(self, other: Self) -> Option<Self> {
        let (a, b, e) = self.aligned(other);
        Self::from_wide(a + b, e)
    }

    pub fn checked_sub(self, other: Self) -> Option<Self> {
        let (a, b, e) = self.aligned(other);
        Self::from_wide(a - b, e)
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(Self { numerator: self.numerator.checked_neg()?, exponent: self.exponent })
    }

    /// Multiplication by a (small) integer.
    pub fn checked_mul_int(self, k: i64) -> Option<Self> {
        Self::from_wide(i128::from(self.numerator) * i128::from(k), self.exponent)
    }

    /// Division by `2^k`.
    pub fn checked_shr(self, k: u32) -> Option<Self> {
        Self::from_wide(i128::from(self.numerator), self.exponent.checked_add(k)?)
    }

    pub fn half(self) -> Self {
        self.checked_shr(1).expect("dyadic overflow")
    }

    /// Division by a nonzero integer, `None` when the quotient is not dyadic
    /// (or overflows).
    pub fn checked_div_int(self, k: i64) -> Option<Self> {
        if k == 0 {
            return None;
        }
        let (sign, magnitude) = if k < 0 { (-1, k.unsigned_abs()) } else { (1, k.unsigned_abs()) };
        let shift = magnitude.trailing_zeros();
        let odd = magnitude >> shift;
        if self.numerator % (odd as i64) != 0 {
            return None;
        }
        let n = (self.numerator / odd as i64).checked_mul(sign)?;
        Self::from_wide(i128::from(n), self.exponent.checked_add(shift)?)
    }

    pub fn floor(self) -> i64 {
        self.numerator >> self.exponent
    }

    pub fn ceil(self) -> i64 {
        -((-self.numerator) >> self.exponent)
    }

    pub fn abs(self) -> Self {
        if self.numerator < 0 {
            -self
        } else {
            self
        }
    }

    pub fn signum(self) -> i64 {
        self.numerator.signum()
    }

    /// The simplest dyadic strictly between `low` and `high` (`low < high`):
    /// the integer of least magnitude if one fits, otherwise the one with the
    /// smallest denominator.
    pub fn simplest_between(low: Self, high: Self) -> Self {
        assert!(low < high, "empty interval ({low}, {high})");
        if low < Self::ZERO && Self::ZERO < high {
            return Self::ZERO;
        }
        if high <= Self::ZERO {
            return -Self::simplest_between(-high, -low);
        }
        // 0 <= low < high
        let mut exponent = 0;
        loop {
            let scaled = low.checked_mul_int(1 << exponent).expect("dyadic overflow");
            let candidate = Self::new(scaled.floor() + 1, exponent);
            if candidate < high {
                return candidate;
            }
            exponent += 1;
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Dyadic {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("dyadic overflow")
    }
}

impl Sub for Dyadic {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("dyadic overflow")
    }
}

impl Neg for Dyadic {
    type Output = Self;

    fn neg(self) -> Self {
        self.checked_neg().expect("dyadic overflow")
    }
}

impl From<i64> for Dyadic {
    fn from(value: i64) -> Self {
        Self::integer(value)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator())
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = DyadicParseError;

    /// Accepts `n` or `p/q` with `q` a power of two.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(DyadicParseError::Empty);
        }
        let parse_int = |t: &str| t.parse::<i64>().map_err(|_| DyadicParseError::InvalidInteger(t.into()));
        match s.split_once('/') {
            None => Ok(Self::integer(parse_int(s)?)),
            Some((p, q)) => {
                let numerator = parse_int(p)?;
                let denominator = parse_int(q)?;
                if denominator <= 0 || denominator.count_ones() != 1 {
                    return Err(DyadicParseError::NotDyadic(denominator));
                }
                let exponent = denominator.trailing_zeros();
                if exponent > MAX_EXPONENT {
                    return Err(DyadicParseError::NotDyadic(denominator));
                }
                Ok(Self::new(numerator, exponent))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn constructs_reduced() {
        assert_eq!(Dyadic::new(15, 3).to_string(), "15/8");
        let one = Dyadic::new(4, 2);
        assert_eq!(one, Dyadic::ONE);
        assert_eq!(one.exponent(), 0);
        assert_eq!(Dyadic::new(31, 4).to_string(), "31/16");
        assert_eq!(Dyadic::new(0, 7).exponent(), 0);
        assert_eq!(Dyadic::new(-6, 2).to_string(), "-3/2");
    }

    #[test]
    fn parses_fractions() {
        assert_eq!("7/4".parse::<Dyadic>().unwrap(), Dyadic::new(7, 2));
        assert_eq!("-1/2".parse::<Dyadic>().unwrap(), Dyadic::new(-1, 1));
        assert_eq!("2".parse::<Dyadic>().unwrap(), Dyadic::integer(2));
        assert_eq!("6/8".parse::<Dyadic>().unwrap(), Dyadic::new(3, 2));
        assert!(matches!("1/3".parse::<Dyadic>(), Err(DyadicParseError::NotDyadic(3))));
        assert!("1/0".parse::<Dyadic>().is_err());
        assert!("x".parse::<Dyadic>().is_err());
        assert!("".parse::<Dyadic>().is_err());
    }

    #[test]
    fn floor_and_ceil() {
        let d = Dyadic::new(-3, 1);
        assert_eq!(d.floor(), -2);
        assert_eq!(d.ceil(), -1);
        assert_eq!(Dyadic::new(7, 2).floor(), 1);
        assert_eq!(Dyadic::new(7, 2).ceil(), 2);
    }

    #[test]
    fn simplest_numbers() {
        let s = |a: (i64, u32), b: (i64, u32)| {
            Dyadic::simplest_between(Dyadic::new(a.0, a.1), Dyadic::new(b.0, b.1))
        };
        assert_eq!(s((0, 0), (1, 0)), Dyadic::new(1, 1));
        assert_eq!(s((-1, 0), (1, 0)), Dyadic::ZERO);
        assert_eq!(s((1, 0), (3, 0)), Dyadic::integer(2));
        assert_eq!(s((1, 1), (1, 0)), Dyadic::new(3, 2));
        assert_eq!(s((-3, 0), (-1, 0)), Dyadic::integer(-2));
        assert_eq!(s((-1, 0), (0, 0)), Dyadic::new(-1, 1));
        assert_eq!(s((0, 0), (5, 0)), Dyadic::ONE);
    }

    #[test]
    fn division_by_integers() {
        assert_eq!(Dyadic::integer(3).checked_div_int(2), Some(Dyadic::new(3, 1)));
        assert_eq!(Dyadic::integer(6).checked_div_int(-3), Some(Dyadic::integer(-2)));
        assert_eq!(Dyadic::integer(1).checked_div_int(3), None);
        assert_eq!(Dyadic::integer(1).checked_div_int(0), None);
    }

    #[test]
    fn overflow_is_reported() {
        let big = Dyadic::integer(i64::MAX);
        assert_eq!(big.checked_add(Dyadic::ONE), None);
        assert_eq!(Dyadic::integer(i64::MIN).checked_neg(), None);
    }

    fn small() -> impl Strategy<Value = Dyadic> {
        (-10_000i64..10_000, 0u32..12).prop_map(|(n, e)| Dyadic::new(n, e))
    }

    proptest! {
        #[test]
        fn lowest_terms(d in small()) {
            prop_assert!(d.exponent() == 0 || d.numerator() % 2 != 0);
        }

        #[test]
        fn order_matches_rationals(a in small(), b in small()) {
            let lhs = i128::from(a.numerator()) * i128::from(b.denominator());
            let rhs = i128::from(b.numerator()) * i128::from(a.denominator());
            prop_assert_eq!(a.cmp(&b), lhs.cmp(&rhs));
        }

        #[test]
        fn add_sub_roundtrip(a in small(), b in small()) {
            prop_assert_eq!(a + b - b, a);
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a - a, Dyadic::ZERO);
        }

        #[test]
        fn display_parse_roundtrip(a in small()) {
            prop_assert_eq!(a.to_string().parse::<Dyadic>().unwrap(), a);
        }

        #[test]
        fn simplest_is_inside(a in small(), b in small()) {
            prop_assume!(a < b);
            let s = Dyadic::simplest_between(a, b);
            prop_assert!(a < s && s < b);
            prop_assert!(s.exponent() <= a.exponent().max(b.exponent()));
        }
    }
}
