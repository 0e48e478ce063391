//! Constructive interpolation between two polygons.
//!
//! Given `a >= c` coordinatewise and an integer `m` between their degrees,
//! these functions produce a bundle polygon `b` (integral breakpoints) with
//! `c_i <= b_i <= a_i` and `|b| = m`. Outputs are not unique; callers should
//! rely on those postconditions only.

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::polygon::{check_rank, EpsilonClass, HNPolygon};
use crate::rational::{from_usize, is_integer, Rational};

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn sandwiched(c: &[Rational], b: &[Rational], a: &[Rational]) -> bool {
    c.iter().zip(b).zip(a).all(|((lo, x), hi)| lo <= x && x <= hi)
}

/// Whether `b` satisfies the interpolation postconditions for `(a, c, m)`.
pub fn is_valid_interpolant(a: &HNPolygon, c: &HNPolygon, m: &BigInt, b: &HNPolygon) -> bool {
    b.rank() == a.rank()
        && b.has_integral_breakpoints()
        && b.degree() == Rational::from_integer(m.clone())
        && sandwiched(&c.coords(), &b.coords(), &a.coords())
}

fn check_common(a: &HNPolygon, c: &HNPolygon, m: &BigInt) -> Result<(Rational, EpsilonClass)> {
    check_rank(a.rank(), c.rank())?;
    let eps = a.epsilon_class().ok_or_else(|| precondition(format!("{a} has no epsilon-breakpoints")))?;
    if !a.coords().iter().zip(c.coords()).all(|(x, y)| *x >= y) {
        return Err(precondition("a_i >= c_i must hold for every i"));
    }
    let m = Rational::from_integer(m.clone());
    if m < c.degree() || m > a.degree() {
        return Err(precondition(format!("need |c| <= m <= |a|, got |c| = {}, m = {m}, |a| = {}", c.degree(), a.degree())));
    }
    Ok((m, eps))
}

/// Interpolation for `a` with epsilon-breakpoints and `c` with integral
/// breakpoints.
///
/// Lowers `a` step by step. With `eps` the breakpoint class of the current
/// `a`, put `delta = 1` if `eps = 0` and `delta = 0` otherwise, let `m1` be
/// the least index with `P_a(m1) ∈ Z + eps` and `P_a(m1) - P_c(m1) >= delta + eps`,
/// and `n0` the largest index with `P_c(n0) ∈ Z` and
/// `P_a(n0) - P_c(n0) < delta + eps`. The next `a` is the sorted vector
/// that follows `c` up to `n0`, is constant on `(n0, m1]` and follows the old
/// `a` afterwards, of degree `|a| - delta - eps`.
pub fn interpolate_general(a: &HNPolygon, c: &HNPolygon, m: &BigInt) -> Result<HNPolygon> {
    let (target, _) = check_common(a, c, m)?;
    if !c.has_integral_breakpoints() {
        return Err(precondition(format!("{c} must have integral breakpoints")));
    }
    let n = a.rank();
    let cc = c.coords();
    let pc = c.prefix_sums();
    let mut cur = a.clone();
    loop {
        let eps = cur.epsilon_class().expect("descent keeps epsilon-breakpoints");
        let deg = cur.degree();
        if eps.value().is_zero() && deg == target {
            return Ok(cur);
        }
        if c.degree() == target {
            return Ok(c.clone());
        }
        let delta = if eps.value().is_zero() { Rational::one() } else { Rational::zero() };
        let drop = &delta + eps.value();
        let pa = cur.prefix_sums();
        let m1 = (0..=n)
            .find(|&i| eps.contains(&pa[i]) && &pa[i] - &pc[i] >= drop)
            .ok_or_else(|| precondition("no lower cut index; |a| - |c| is too small"))?;
        let n0 = (0..=n).rev().find(|&i| is_integer(&pc[i]) && &pa[i] - &pc[i] < drop).ok_or_else(|| precondition("no upper cut index"))?;
        if n0 >= m1 {
            return Err(precondition(format!("cut indices out of order: n0 = {n0}, m1 = {m1}")));
        }
        let level = (&pa[m1] - &drop - &pc[n0]) / from_usize(m1 - n0);
        let ac = cur.coords();
        let mut next: Vec<Rational> = Vec::with_capacity(n);
        next.extend(cc[..n0].iter().cloned());
        next.extend(std::iter::repeat_n(level, m1 - n0));
        next.extend(ac[m1..].iter().cloned());
        if !sandwiched(&cc, &next, &ac) {
            return Err(precondition("intermediate vector leaves the band between c and a"));
        }
        // Sorting keeps the band and the integrality of the breakpoints.
        cur = HNPolygon::from_unsorted(next);
    }
}

/// Interpolation when `c` is constant (any rational slope).
///
/// First finds `b` of degree `ceil(|c|)`: either the constant polygon of that
/// degree, or recursively the last stable run `(s/r)^(r)` of `a` followed by
/// an interpolant of the first `n - r` coordinates. Then lifts to degree `m`
/// with [`interpolate_general`].
pub fn interpolate_constant(a: &HNPolygon, c: &HNPolygon, m: &BigInt) -> Result<HNPolygon> {
    if c.blocks().len() > 1 {
        return Err(precondition(format!("{c} is not constant")));
    }
    check_common(a, c, m)?;
    if a.rank() == 0 {
        return Ok(HNPolygon::empty());
    }
    let m0 = c.degree().ceil().to_integer();
    let base = lowest_constant(a, &Rational::from_integer(m0.clone()))?;
    if &m0 == m {
        Ok(base)
    } else {
        interpolate_general(a, &base, m)
    }
}

/// Some `b` with integral breakpoints, `a_n <= b_i <= a_i` and `|b| = target`,
/// where `n * a_n < target <= |a|` or `n * a_n` is at least `target`.
fn lowest_constant(a: &HNPolygon, target: &Rational) -> Result<HNPolygon> {
    let n = a.rank();
    let last = a.min_slope().expect("non-empty").clone();
    if &last * from_usize(n) >= *target {
        return Ok(HNPolygon::constant(target / from_usize(n), n));
    }
    let r: usize = last.denom().try_into().map_err(|_| precondition("denominator too large"))?;
    let s = Rational::from_integer(last.numer().clone());
    if r >= n || a.blocks().last().expect("non-empty").mult < r {
        return Err(precondition(format!("{a} has no epsilon-breakpoints")));
    }
    let head = lowest_constant(&a.truncate(n - r), &(target - s))?;
    Ok(head.direct_sum(&HNPolygon::constant(last, r)))
}

/// Interpolation for a shifted band: `a` of rank `n` with epsilon-breakpoints,
/// `c` of rank `n - shift` (`0 < shift < n`) with `a_{i+shift} >= c_i`, and
/// `|c| + shift * c_1 <= m <= |a|`. Returns `b` with `b_i <= a_i`,
/// `b_{i+shift} >= c_i` and `|b| = m`. Requires `c` to be constant or to have
/// integer coordinates.
pub fn interpolate_shifted(a: &HNPolygon, c: &HNPolygon, shift: usize, m: &BigInt) -> Result<HNPolygon> {
    let n = a.rank();
    if shift == 0 || shift >= n {
        return Err(precondition(format!("shift must lie strictly between 0 and {n}")));
    }
    check_rank(n - shift, c.rank())?;
    let c1 = c.max_slope().expect("0 < shift < n").clone();
    if c.is_semistable() {
        interpolate_constant(a, &HNPolygon::constant(c1, n), m)
    } else if c.is_integral() {
        interpolate_general(a, &HNPolygon::constant(c1, shift).direct_sum(c), m)
    } else {
        Err(precondition(format!("{c} must be constant or integral")))
    }
}
