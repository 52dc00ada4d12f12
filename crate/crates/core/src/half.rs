//! Exact half-integers.
//!
//! Colors of 6j-symbols live in `ℕ/2`; the parity condition of admissibility
//! must be decided exactly, so a half-integer is stored as its doubled value.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    /// From the doubled value: `Half::from_doubled(3)` is `3/2`.
    pub const fn from_doubled(doubled: i64) -> Half {
        Half(doubled)
    }

    /// From a plain integer.
    pub const fn from_int(value: i64) -> Half {
        Half(2 * value)
    }

    /// From a float that must be an exact half-integer.
    pub fn try_from_f64(value: f64) -> Result<Half> {
        let doubled = 2.0 * value;
        if doubled.fract() != 0.0 || doubled.abs() > (i64::MAX / 4) as f64 {
            return Err(Error::NotHalfInteger { value });
        }
        Ok(Half(doubled as i64))
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_nonnegative(self) -> bool {
        self.0 >= 0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Sum for Half {
    fn sum<I: Iterator<Item = Half>>(iter: I) -> Half {
        Half(iter.map(|h| h.0).sum())
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactness() {
        assert_eq!(Half::try_from_f64(1.5).unwrap().doubled(), 3);
        assert_eq!(Half::try_from_f64(2.0).unwrap(), Half::from_int(2));
        assert!(Half::try_from_f64(0.3).is_err());
    }

    #[test]
    fn arithmetic_and_display() {
        let a = Half::from_doubled(3); // 3/2
        let b = Half::from_int(1);
        assert_eq!((a + b).doubled(), 5);
        assert_eq!((a - b).to_f64(), 0.5);
        assert!(!a.is_integer());
        assert_eq!(a.to_string(), "3/2");
        assert_eq!(b.to_string(), "1");
    }
}
