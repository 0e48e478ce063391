//! Extensions of bundles `0 -> O(d) -> O(a) -> O(c) -> 0`, seen through
//! their HN polygons.
//!
//! [`tilde_ext_contains`] decides the combinatorial partition condition
//! (the set written `~Ext(c, d)` below). It is necessary for `a` to be the
//! polygon of an extension and sufficient when `c` or `d` is semistable, or
//! when two of `a`, `c`, `d` have integer coordinates. The exact set
//! `Ext(c, d)` is computed by peeling one stable piece off `c` at a time:
//!
//! ```text
//! Ext(c, d) = union over e in Ext(c', d) of ~Ext(c'', e)
//! ```
//!
//! where `c'' = (q/p)^(p)` is the last stable piece of `c` and `c'` the rest.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kottwitz::{integral_degree, KottwitzCache, KottwitzQuery};
use crate::polygon::HNPolygon;
use crate::rational::Rational;

/// A partition `{1..n} = H ⊔ K` certifying `a ∈ ~Ext(c, d)`. Positions are
/// 1-based. `b_vector` places `c` in order on `H` and `d` in order on `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub h_positions: Vec<usize>,
    pub k_positions: Vec<usize>,
    #[serde(serialize_with = "serialize_rationals")]
    pub b_vector: Vec<Rational>,
}

fn serialize_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl PathWitness {
    /// Re-checks the three partition conditions against `a`.
    pub fn verify(&self, a: &HNPolygon) -> bool {
        let ac = a.coords();
        if ac.len() != self.b_vector.len() {
            return false;
        }
        let on_h = self.h_positions.iter().all(|&i| self.b_vector[i - 1] >= ac[i - 1]);
        let on_k = self.k_positions.iter().all(|&i| self.b_vector[i - 1] <= ac[i - 1]);
        let mut pb = Rational::default();
        let mut pa = Rational::default();
        let mut dominated = true;
        for (x, y) in self.b_vector.iter().zip(&ac) {
            pb += x;
            pa += y;
            dominated &= pb >= pa;
        }
        on_h && on_k && dominated && pb == pa
    }
}

/// Decides `a ∈ ~Ext(c, d)` and returns the witness with the
/// lexicographically least `H`.
///
/// It is enough to look at arrangements keeping `c` and `d` in their own
/// order, so a witness is a monotone lattice path from `(0,0)` to `(r,s)`.
/// An `H` step into `(h,k)` needs `c_h >= a_{h+k}`, a `K` step needs
/// `d_k <= a_{h+k}`, every node needs `P_c(h) + P_d(k) >= P_a(h+k)`, and the
/// final node needs equality.
pub fn tilde_ext_contains(a: &HNPolygon, c: &HNPolygon, d: &HNPolygon) -> Result<Option<PathWitness>> {
    let (r, s) = (c.rank(), d.rank());
    if a.rank() != r + s {
        return Err(Error::RankMismatch { expected: r + s, found: a.rank() });
    }
    let (ac, cc, dc) = (a.coords(), c.coords(), d.coords());
    let (pa, pc, pd) = (a.prefix_sums(), c.prefix_sums(), d.prefix_sums());
    if pc[r].clone() + &pd[s] != pa[r + s] {
        return Ok(None);
    }
    // reach[h][k]: a valid path continues from (h,k) to (r,s).
    let mut reach = vec![vec![false; s + 1]; r + 1];
    for h in (0..=r).rev() {
        for k in (0..=s).rev() {
            if pc[h].clone() + &pd[k] < pa[h + k] {
                continue;
            }
            reach[h][k] =
                (h == r && k == s) || (h < r && cc[h] >= ac[h + k] && reach[h + 1][k]) || (k < s && dc[k] <= ac[h + k] && reach[h][k + 1]);
        }
    }
    if !reach[0][0] {
        return Ok(None);
    }
    let (mut h, mut k) = (0, 0);
    let mut hs = Vec::with_capacity(r);
    let mut ks = Vec::with_capacity(s);
    let mut b = Vec::with_capacity(r + s);
    while h < r || k < s {
        let pos = h + k;
        if h < r && cc[h] >= ac[pos] && reach[h + 1][k] {
            hs.push(pos + 1);
            b.push(cc[h].clone());
            h += 1;
        } else {
            ks.push(pos + 1);
            b.push(dc[k].clone());
            k += 1;
        }
    }
    Ok(Some(PathWitness { h_positions: hs, k_positions: ks, b_vector: b }))
}

/// Answers from the partition condition alone are exact in these cases.
pub fn tilde_is_exact(a: &HNPolygon, c: &HNPolygon, d: &HNPolygon) -> bool {
    let integral = [a.is_integral(), c.is_integral(), d.is_integral()];
    c.rank() <= 1 || d.rank() <= 1 || c.is_semistable() || d.is_semistable() || integral.iter().filter(|&&x| x).count() >= 2
}

/// Extension sets for two semistable polygons: the split sum alone when
/// `slope(c) <= slope(d)`, otherwise everything on or below `c ⊕ d`.
pub fn ext_semistable_pair(c: &HNPolygon, d: &HNPolygon) -> Result<Vec<HNPolygon>> {
    for p in [c, d] {
        if !p.is_semistable() {
            return Err(Error::NotSemistable(p.to_string()));
        }
    }
    if !c.has_integral_breakpoints() || !d.has_integral_breakpoints() {
        return Ok(Vec::new());
    }
    if c.max_slope() <= d.max_slope() {
        return Ok(vec![c.direct_sum(d)]);
    }
    let sum = c.direct_sum(d);
    let k = integral_degree(&sum).expect("integral inputs");
    Ok(crate::kottwitz::kottwitz_set(&KottwitzQuery { n: sum.rank(), k, delta: sum }))
}

/// `Ext(c, d)`, sorted in decreasing lexicographic order. Inputs without
/// integral breakpoints are not bundle polygons and give the empty set.
pub fn ext_enumerate(c: &HNPolygon, d: &HNPolygon) -> Vec<HNPolygon> {
    ExtEngine::default().ext_enumerate(c, d).expect("no limit set").to_vec()
}

/// Whether `a ∈ Ext(c, d)`. Rank and degree of `a` must match `c ⊕ d`.
pub fn ext_contains(a: &HNPolygon, c: &HNPolygon, d: &HNPolygon) -> Result<bool> {
    ExtEngine::default().ext_contains(a, c, d)
}

type Pair = (HNPolygon, HNPolygon);

/// Memo tables and the optional candidate bound for one computation.
/// An engine is meant to be owned by a single task; results do not depend
/// on what was cached before.
#[derive(Debug, Default)]
pub struct ExtEngine {
    limit: Option<usize>,
    kottwitz: KottwitzCache,
    ext_memo: HashMap<Pair, Arc<Vec<HNPolygon>>>,
    tilde_memo: HashMap<Pair, Arc<Vec<HNPolygon>>>,
    contains_memo: HashMap<(HNPolygon, Pair), bool>,
}

impl ExtEngine {
    /// Every single Kottwitz enumeration performed by the engine fails with
    /// [`Error::CandidateLimit`] once it would produce more than `limit` candidates.
    pub fn with_limit(limit: Option<usize>) -> Self {
        ExtEngine { limit, ..Default::default() }
    }

    pub fn kottwitz_set(&mut self, q: &KottwitzQuery) -> Result<Arc<Vec<HNPolygon>>> {
        self.kottwitz.get_or_compute(q, self.limit)
    }

    /// Integral-breakpoint polygons on or below `bound` with the same rank and degree.
    fn candidates(&mut self, bound: &HNPolygon) -> Result<Arc<Vec<HNPolygon>>> {
        match integral_degree(bound) {
            Some(k) => self.kottwitz_set(&KottwitzQuery { n: bound.rank(), k, delta: bound.clone() }),
            None => Ok(Arc::new(Vec::new())),
        }
    }

    /// All bundle polygons in `~Ext(c, d)`.
    pub fn tilde_ext_set(&mut self, c: &HNPolygon, d: &HNPolygon) -> Result<Arc<Vec<HNPolygon>>> {
        let key = (c.clone(), d.clone());
        if let Some(hit) = self.tilde_memo.get(&key) {
            return Ok(hit.clone());
        }
        let cd = c.dual();
        let mut out = Vec::new();
        for a in self.candidates(&c.direct_sum(d))?.iter() {
            if !a.strongly_slopewise_dominates(d) || !a.dual().strongly_slopewise_dominates(&cd) {
                continue;
            }
            if tilde_ext_contains(a, c, d)?.is_some() {
                out.push(a.clone());
            }
        }
        let out = Arc::new(out);
        self.tilde_memo.insert(key, out.clone());
        Ok(out)
    }

    pub fn ext_enumerate(&mut self, c: &HNPolygon, d: &HNPolygon) -> Result<Arc<Vec<HNPolygon>>> {
        if !c.has_integral_breakpoints() || !d.has_integral_breakpoints() {
            return Ok(Arc::new(Vec::new()));
        }
        if c.is_empty() {
            return Ok(Arc::new(vec![d.clone()]));
        }
        if d.is_empty() {
            return Ok(Arc::new(vec![c.clone()]));
        }
        let key = (c.clone(), d.clone());
        if let Some(hit) = self.ext_memo.get(&key) {
            return Ok(hit.clone());
        }
        let (head, piece) = c.split_last_stable().expect("integral breakpoints");
        let mut acc = BTreeSet::new();
        for e in self.ext_enumerate(&head, d)?.iter() {
            acc.extend(self.tilde_ext_set(&piece, e)?.iter().cloned());
        }
        let out: Arc<Vec<HNPolygon>> = Arc::new(acc.into_iter().rev().collect());
        self.ext_memo.insert(key, out.clone());
        Ok(out)
    }

    pub fn ext_contains(&mut self, a: &HNPolygon, c: &HNPolygon, d: &HNPolygon) -> Result<bool> {
        let rank = c.rank() + d.rank();
        if a.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: a.rank() });
        }
        let degree = c.degree() + d.degree();
        if a.degree() != degree {
            return Err(Error::DegreeMismatch { expected: degree.to_string(), found: a.degree().to_string() });
        }
        self.contains_unchecked(a, c, d)
    }

    fn contains_unchecked(&mut self, a: &HNPolygon, c: &HNPolygon, d: &HNPolygon) -> Result<bool> {
        if ![a, c, d].iter().all(|p| p.has_integral_breakpoints()) {
            return Ok(false);
        }
        if c.is_empty() {
            return Ok(a == d);
        }
        if d.is_empty() {
            return Ok(a == c);
        }
        let necessary = tilde_ext_contains(a, c, d)?.is_some();
        if !necessary || tilde_is_exact(a, c, d) {
            return Ok(necessary);
        }
        let key = (a.clone(), (c.clone(), d.clone()));
        if let Some(&hit) = self.contains_memo.get(&key) {
            return Ok(hit);
        }
        // a ∈ Ext(c, d) iff some e ∈ Ext(c', d) has a ∈ ~Ext(c'', e); such an
        // e lies on or below c' ⊕ d.
        let (head, piece) = c.split_last_stable().expect("integral breakpoints");
        let mut found = false;
        for e in self.candidates(&head.direct_sum(d))?.iter() {
            if tilde_ext_contains(a, &piece, e)?.is_some() && self.contains_unchecked(e, &head, d)? {
                found = true;
                break;
            }
        }
        self.contains_memo.insert(key, found);
        Ok(found)
    }
}
