//! Minute criteria for fully and weakly fully Hodge-Newton decomposable pairs.
//!
//! For split `GL_n` and dominant integral `mu`, the pairing of `mu` with the
//! `m`-th relative fundamental weight is `P_mu(m) - m |mu| / n`. The pair is
//! fully HN-decomposable when every pairing is at most 1, and weakly fully
//! HN-decomposable when every *integral* pairing is at most 1.
//!
//! For adjoint type `A_n` with `mu = ω_i^∨` and inner twist `ξ = ω_{i'}^∨`
//! the pairings are `θ_i(j) = min(i, j) - i j / (n + 1)`.
//!
//! Reference data for the non-type-A minuscule cases (weakly fully
//! HN-decomposable but not fully HN-decomposable), not computed here:
//!
//! | type | Galois orbit | μ | ξ |
//! |------|--------------|---|---|
//! | A3   | 2 | ω2 | ω1 |
//! | C3   | 1 | ω3 | 0 |
//! | Dn   | 1 | ω1 | ωn |
//! | D5   | 1 | ω5 | 0, ω1 |
//! | Dn   | 2 | ω1 | ωn |
//! | D4   | 2 | ω4 | 0 |

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, from_usize, int, is_integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinuteQueryGL {
    pub n: usize,
    pub mu: Vec<i64>,
}

impl MinuteQueryGL {
    pub fn new(mu: Vec<i64>) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::Precondition("mu must be non-empty".into()));
        }
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition("mu must be weakly decreasing".into()));
        }
        Ok(MinuteQueryGL { n: mu.len(), mu })
    }

    /// `(1^(r), 0^(n-r))`.
    pub fn minuscule(n: usize, r: usize) -> Self {
        let mu = (0..n).map(|i| i64::from(i < r)).collect();
        MinuteQueryGL { n, mu }
    }

    /// Pairing with the `m`-th relative fundamental weight.
    pub fn pairing(&self, m: usize) -> Rational {
        let total: i64 = self.mu.iter().sum();
        let head: i64 = self.mu[..m].iter().sum();
        int(head) - int(total) * from_usize(m) / from_usize(self.n)
    }

    /// The dominant representative of `-mu`.
    pub fn inverse(&self) -> Self {
        MinuteQueryGL { n: self.n, mu: self.mu.iter().rev().map(|x| -x).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinuteQueryTypeA {
    pub n: usize,
    pub i: usize,
    pub i_prime: usize,
}

impl MinuteQueryTypeA {
    pub fn new(n: usize, i: usize, i_prime: usize) -> Result<Self> {
        if n == 0 || i > n || i_prime > n {
            return Err(Error::Precondition(format!("need n >= 1 and 0 <= i, i' <= n, got n = {n}, i = {i}, i' = {i_prime}")));
        }
        Ok(MinuteQueryTypeA { n, i, i_prime })
    }
}

/// Verdict plus the indices (`m` or `j`) where the inequality fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinuteOutcome {
    pub holds: bool,
    pub violations: Vec<usize>,
}

impl MinuteOutcome {
    fn from_violations(violations: Vec<usize>) -> Self {
        MinuteOutcome { holds: violations.is_empty(), violations }
    }
}

pub fn fully_hn_gl(q: &MinuteQueryGL) -> MinuteOutcome {
    let one = int(1);
    MinuteOutcome::from_violations((1..q.n).filter(|&m| q.pairing(m) > one).collect())
}

pub fn weakly_fully_hn_gl(q: &MinuteQueryGL) -> MinuteOutcome {
    let one = int(1);
    MinuteOutcome::from_violations(
        (1..q.n)
            .filter(|&m| {
                let p = q.pairing(m);
                is_integer(&p) && p > one
            })
            .collect(),
    )
}

/// `θ_i(j) = min(i, j) - i j / (n + 1)`; zero for `i = 0`.
pub fn theta(n: usize, i: usize, j: usize) -> Rational {
    from_usize(i.min(j)) - from_usize(i * j) / from_usize(n + 1)
}

pub fn fully_hn_type_a(q: &MinuteQueryTypeA) -> MinuteOutcome {
    let one = int(1);
    MinuteOutcome::from_violations((1..=q.n).filter(|&j| theta(q.n, q.i, j) + frac(&theta(q.n, q.i_prime, j)) > one).collect())
}

pub fn weakly_fully_hn_type_a(q: &MinuteQueryTypeA) -> MinuteOutcome {
    let one = int(1);
    MinuteOutcome::from_violations(
        (1..=q.n).filter(|&j| ((q.i + q.i_prime) * j).is_multiple_of(q.n + 1) && theta(q.n, q.i, j) > one).collect(),
    )
}
