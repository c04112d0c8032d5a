//! Exact non-negative integer accumulation with overflow escalation.
//!
//! Clique counts are sums of binomial coefficients and outgrow 64 bits on
//! dense inputs. Hot loops add into a `u128` and spill into a `BigUint` only
//! when the fixed-width sum would overflow.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// A binomial coefficient, kept fixed-width when it fits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binom {
    Small(u128),
    Big(BigUint),
}

impl Binom {
    pub fn is_zero(&self) -> bool {
        matches!(self, Binom::Small(0))
    }

    pub fn to_biguint(&self) -> BigUint {
        match self {
            Binom::Small(x) => BigUint::from(*x),
            Binom::Big(b) => b.clone(),
        }
    }
}

/// Pascal triangle `binom(p, r)` for `p <= max_n`, `r <= max_r`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    max_r: usize,
    rows: Vec<Binom>,
}

impl BinomialTable {
    pub fn new(max_n: usize, max_r: usize) -> Self {
        let width = max_r + 1;
        let mut rows: Vec<Binom> = Vec::with_capacity((max_n + 1) * width);
        for p in 0..=max_n {
            for r in 0..=max_r {
                let value = if r == 0 {
                    Binom::Small(1)
                } else if p == 0 || r > p {
                    Binom::Small(0)
                } else {
                    let a = &rows[(p - 1) * width + r - 1];
                    let b = &rows[(p - 1) * width + r];
                    match (a, b) {
                        (Binom::Small(x), Binom::Small(y)) => match x.checked_add(*y) {
                            Some(s) => Binom::Small(s),
                            None => Binom::Big(BigUint::from(*x) + BigUint::from(*y)),
                        },
                        _ => Binom::Big(a.to_biguint() + b.to_biguint()),
                    }
                };
                rows.push(value);
            }
        }
        BinomialTable { max_r, rows }
    }

    /// `binom(p, r)`; `r < 0` yields zero.
    #[inline]
    pub fn get(&self, p: usize, r: isize) -> &Binom {
        const ZERO: Binom = Binom::Small(0);
        if r < 0 || r as usize > self.max_r {
            return &ZERO;
        }
        &self.rows[p * (self.max_r + 1) + r as usize]
    }
}

/// Accumulator for an exact non-negative sum.
#[derive(Debug, Clone, Default)]
pub struct ExactCounter {
    small: u128,
    spill: BigUint,
}

impl ExactCounter {
    #[inline]
    pub fn add_u128(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.spill += self.small;
                self.small = x;
            }
        }
    }

    #[inline]
    pub fn add_binom(&mut self, b: &Binom) {
        match b {
            Binom::Small(x) => self.add_u128(*x),
            Binom::Big(big) => self.spill += big,
        }
    }

    pub fn merge(&mut self, other: &ExactCounter) {
        self.add_u128(other.small);
        if !other.spill.is_zero() {
            self.spill += &other.spill;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.small == 0 && self.spill.is_zero()
    }

    pub fn value(&self) -> BigUint {
        &self.spill + self.small
    }

    pub fn reset(&mut self) {
        self.small = 0;
        if !self.spill.is_zero() {
            self.spill = BigUint::zero();
        }
    }
}

/// Nearest `f64` to an exact count.
pub fn to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}
