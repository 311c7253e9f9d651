//! Closed floating-point intervals with outward rounding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::polyring::Coeff;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    /// Smallest representable interval containing the rational `c`.
    pub fn from_rational(c: &Coeff) -> Self {
        if c.is_zero() {
            return Interval::point(0.0);
        }
        let x = c.to_f64().expect("rational converts to f64");
        if let Some(back) = BigRational::from_float(x) {
            if &back == c {
                return Interval::point(x);
            }
        }
        Interval {
            lo: x.next_down(),
            hi: x.next_up(),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Encloses `(self + other) / 2`.
    pub fn midpoint_with(&self, other: &Interval) -> Interval {
        let s = *self + *other;
        let half = |x: f64| {
            let h = x * 0.5;
            (h, h * 2.0 == x)
        };
        let (lo, exact_lo) = half(s.lo);
        let (hi, exact_hi) = half(s.hi);
        Interval {
            lo: if exact_lo { lo } else { lo.next_down() },
            hi: if exact_hi { hi } else { hi.next_up() },
        }
    }
}

/// Rounded sum with the sign of its rounding error.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Largest float not above the exact value `x + err`.
fn lower((x, err): (f64, f64)) -> f64 {
    if err < 0.0 {
        x.next_down()
    } else {
        x
    }
}

/// Smallest float not below the exact value `x + err`.
fn upper((x, err): (f64, f64)) -> f64 {
    if err > 0.0 {
        x.next_up()
    } else {
        x
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, o: Interval) -> Interval {
        Interval {
            lo: lower(two_sum(self.lo, o.lo)),
            hi: upper(two_sum(self.hi, o.hi)),
        }
    }
}

impl Neg for Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Sub for Interval {
    type Output = Interval;

    fn sub(self, o: Interval) -> Interval {
        self + (-o)
    }
}

impl Mul for Interval {
    type Output = Interval;

    fn mul(self, o: Interval) -> Interval {
        let p = [
            two_prod(self.lo, o.lo),
            two_prod(self.lo, o.hi),
            two_prod(self.hi, o.lo),
            two_prod(self.hi, o.hi),
        ];
        Interval {
            lo: p.iter().map(|&x| lower(x)).fold(f64::INFINITY, f64::min),
            hi: p.iter().map(|&x| upper(x)).fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ratio;

    #[test]
    fn rational_enclosure() {
        let third = Interval::from_rational(&ratio(1, 3));
        assert!(third.lo < 1.0 / 3.0 + 1e-17 && third.hi > 1.0 / 3.0 - 1e-17);
        assert!(third.lo < third.hi);
        assert_eq!(Interval::from_rational(&ratio(1, 4)), Interval::point(0.25));
    }

    #[test]
    fn arithmetic_is_outward() {
        let a = Interval::from_rational(&ratio(1, 10));
        let s = a + a + a;
        assert!(s.contains(0.3));
        let p = a * a;
        assert!(p.lo <= 0.01 && 0.01 <= p.hi);
        let m = Interval::new(-1.0, 2.0) * Interval::new(-3.0, 1.0);
        assert!(m.lo <= -6.0 && m.hi >= 3.0);
    }
}
