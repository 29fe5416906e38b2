use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// An exact angle on the circle R/Z: a reduced rational in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(Rational64);

impl Angle {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Angle::from_ratio(Rational64::new(num, den))
    }

    pub fn from_ratio(r: Rational64) -> Self {
        let mut r = r;
        let one = Rational64::from_integer(1);
        // Reduce mod 1 into [0, 1).
        let floor = r.floor();
        r -= floor;
        if r.is_negative() {
            r += one;
        }
        debug_assert!(!r.is_negative() && r < one);
        Angle(r)
    }

    pub fn ratio(self) -> Rational64 {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// Circular distance to another angle: min(|a-b|, 1-|a-b|), exact.
    pub fn circular_distance(self, other: Angle) -> Rational64 {
        let d = (self.0 - other.0).abs();
        let alt = Rational64::from_integer(1) - d;
        if d <= alt {
            d
        } else {
            alt
        }
    }

    /// Whether this angle lies strictly inside the counterclockwise open arc
    /// from `a` to `b`.
    pub fn in_open_arc(self, a: Angle, b: Angle) -> bool {
        if a == b {
            return false;
        }
        if a < b {
            a.0 < self.0 && self.0 < b.0
        } else {
            self.0 > a.0 || self.0 < b.0
        }
    }

    /// Counterclockwise arc length from `self` to `other`.
    pub fn ccw_to(self, other: Angle) -> Rational64 {
        let d = other.0 - self.0;
        if d.is_negative() {
            d + Rational64::from_integer(1)
        } else {
            d
        }
    }

    pub fn as_f64(self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

/// Angle d-tupling `a -> d*a mod 1`, exact; the denominator of the image
/// divides the denominator of the input.
pub fn sigma(a: Angle, d: u32) -> Angle {
    Angle::from_ratio(a.ratio() * Rational64::from_integer(d as i64))
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Angle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let d: i64 = d.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
            if d == 0 {
                return Err("zero denominator".into());
            }
            Ok(Angle::new(n, d))
        } else {
            let n: i64 = s.parse().map_err(|e| format!("bad integer angle: {e}"))?;
            Ok(Angle::new(n, 1))
        }
    }
}

impl Serialize for Angle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
