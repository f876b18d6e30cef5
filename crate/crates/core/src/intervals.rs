//! Closed real intervals used as grey numbers: an imprecise score known only
//! to lie between two bounds.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// Closed interval `[lower, upper]` with `lower <= upper`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lower: f64,
    upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::NonFiniteEndpoint);
        }
        if lower > upper {
            return Err(Error::InvalidInterval { lower, upper });
        }
        Ok(Interval { lower, upper })
    }

    /// The degenerate interval `[value, value]`.
    pub fn point(value: f64) -> Result<Self> {
        Interval::new(value, value)
    }

    pub const ZERO: Interval = Interval {
        lower: 0.0,
        upper: 0.0,
    };

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }

    /// Midpoint, taken as the representative value of the grey number.
    pub fn representative_value(&self) -> f64 {
        (self.lower + self.upper) / 2.0
    }

    /// Distance from `value` to the nearest point of the interval.
    pub fn distance_to(&self, value: f64) -> f64 {
        if value < self.lower {
            self.lower - value
        } else if value > self.upper {
            value - self.upper
        } else {
            0.0
        }
    }

    /// Scalar product `k * [x, y] = [k x, k y]` for `k >= 0`.
    pub fn scale(self, k: f64) -> Result<Interval> {
        if !k.is_finite() {
            return Err(Error::NonFiniteEndpoint);
        }
        if k < 0.0 {
            return Err(Error::NegativeScalar(k));
        }
        Ok(Interval {
            lower: k * self.lower,
            upper: k * self.upper,
        })
    }

    pub fn approx_eq(&self, other: &Interval, tol: f64) -> bool {
        (self.lower - other.lower).abs() <= tol && (self.upper - other.upper).abs() <= tol
    }
}

impl Add for Interval {
    type Output = Interval;

    /// Endpoint-wise sum.
    fn add(self, rhs: Interval) -> Interval {
        // Endpoint sums of ordered pairs stay ordered.
        Interval {
            lower: self.lower + rhs.lower,
            upper: self.upper + rhs.upper,
        }
    }
}

impl std::iter::Sum for Interval {
    fn sum<I: Iterator<Item = Interval>>(iter: I) -> Interval {
        iter.fold(Interval::ZERO, Add::add)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

pub fn representative_value(i: Interval) -> f64 {
    i.representative_value()
}

pub fn add(i1: Interval, i2: Interval) -> Interval {
    i1 + i2
}

pub fn scale(k: f64, i: Interval) -> Result<Interval> {
    i.scale(k)
}

/// A multiset of intervals: each interval paired with how often it occurs.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedIntervalBag {
    entries: Vec<(Interval, u64)>,
}

impl WeightedIntervalBag {
    pub fn new(entries: Vec<(Interval, u64)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyBag);
        }
        if entries.iter().any(|&(_, n)| n == 0) {
            return Err(Error::ZeroCount);
        }
        Ok(WeightedIntervalBag { entries })
    }

    pub fn entries(&self) -> &[(Interval, u64)] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&(_, n)| n).sum()
    }

    /// `(1/n)(n_1 I_1 + ... + n_k I_k)`, built from interval sums and scalar products.
    pub fn mean(&self) -> Interval {
        let n = self.total() as f64;
        let sum: Interval = self
            .entries
            .iter()
            .map(|&(interval, count)| interval.scale(count as f64).expect("counts are positive"))
            .sum();
        sum.scale(1.0 / n).expect("total count is positive")
    }
}

pub fn mean(bag: &WeightedIntervalBag) -> Interval {
    bag.mean()
}
