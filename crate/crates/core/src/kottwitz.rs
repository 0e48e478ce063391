//! Generalized Kottwitz sets for split `GL_n`.
//!
//! `B(GL_n, k, delta)` is the set of Newton points of degree `k` lying on or
//! below the dominant bound `delta`. For `GL_n` the Newton points are exactly
//! the concave polygons with integral breakpoints, and the Kottwitz invariant
//! is the total degree.

use std::collections::HashMap;
use std::sync::Arc;

use num::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{check_rank, HNPolygon};
use crate::rational::{from_usize, int, is_integer, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KottwitzQuery {
    pub n: usize,
    pub k: i64,
    pub delta: HNPolygon,
}

impl KottwitzQuery {
    pub fn new(n: usize, k: i64, delta: HNPolygon) -> Result<Self> {
        check_rank(n, delta.rank())?;
        Ok(KottwitzQuery { n, k, delta })
    }

    /// `k` agrees with the (integral) degree of the bound.
    pub fn is_consistent(&self) -> bool {
        let deg = self.delta.degree();
        is_integer(&deg) && deg == int(self.k)
    }
}

/// Enumerates `B(GL_n, k, delta)`, sorted in decreasing lexicographic order of
/// the coordinate expansion.
pub fn kottwitz_set(q: &KottwitzQuery) -> Vec<HNPolygon> {
    enumerate(q, None).expect("no limit set")
}

/// Same as [`kottwitz_set`] but fails once more than `limit` elements are found.
pub fn kottwitz_set_bounded(q: &KottwitzQuery, limit: Option<usize>) -> Result<Vec<HNPolygon>> {
    enumerate(q, limit)
}

fn enumerate(q: &KottwitzQuery, limit: Option<usize>) -> Result<Vec<HNPolygon>> {
    if !q.is_consistent() || q.delta.rank() != q.n {
        return Ok(Vec::new());
    }
    let ceilings: Vec<i64> =
        q.delta.prefix_sums().iter().map(|p| p.floor().to_integer().to_i64().expect("prefix sum fits in i64")).collect();
    let mut walk = Walk { n: q.n as i64, k: q.k, ceilings, verts: vec![(0, 0)], out: Vec::new(), limit };
    walk.descend(0, 0, None)?;
    let mut out = walk.out;
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Depth-first walk over the vertices of a concave lattice path from `(0,0)`
/// to `(n,k)`. Every partial path stays strictly above the chord to `(n,k)`
/// and below the ceilings, so each node has at least one completion.
struct Walk {
    n: i64,
    k: i64,
    ceilings: Vec<i64>,
    verts: Vec<(i64, i64)>,
    out: Vec<HNPolygon>,
    limit: Option<usize>,
}

impl Walk {
    /// `prev` is the previous slope as an unreduced fraction `(rise, run)`.
    fn descend(&mut self, l: i64, p: i64, prev: Option<(i64, i64)>) -> Result<()> {
        if l == self.n {
            if p == self.k {
                self.emit()?;
            }
            return Ok(());
        }
        for next in l + 1..=self.n {
            let run = next - l;
            let mut hi = self.ceilings[next as usize];
            if let Some((dt, dl)) = prev {
                // slope (t - p) / run must be strictly below dt / dl
                hi = hi.min((p * dl + dt * run - 1).div_euclid(dl));
            }
            let lo = if next == self.n {
                if self.k > hi {
                    continue;
                }
                hi = self.k;
                self.k
            } else {
                // strictly above the chord from (l, p) to (n, k)
                (self.k * run + p * (self.n - next)).div_euclid(self.n - l) + 1
            };
            for t in lo..=hi {
                self.verts.push((next, t));
                self.descend(next, t, Some((t - p, run)))?;
                self.verts.pop();
            }
        }
        Ok(())
    }

    fn emit(&mut self) -> Result<()> {
        if let Some(limit) = self.limit {
            if self.out.len() >= limit {
                return Err(Error::CandidateLimit { limit });
            }
        }
        let blocks = self.verts.windows(2).map(|w| {
            let (l0, p0) = w[0];
            let (l1, p1) = w[1];
            (rat(p1 - p0, l1 - l0), (l1 - l0) as usize)
        });
        self.out.push(HNPolygon::from_blocks(blocks).expect("concave walk"));
        Ok(())
    }
}

/// The basic element `(k/n)^(n)`.
pub fn basic_element(q: &KottwitzQuery) -> Result<HNPolygon> {
    if !q.is_consistent() {
        return Err(Error::DegreeMismatch { expected: q.delta.degree().to_string(), found: q.k.to_string() });
    }
    if q.n == 0 {
        return Ok(HNPolygon::empty());
    }
    Ok(HNPolygon::constant(int(q.k) / from_usize(q.n), q.n))
}

/// Positions `0 < j < n` where `v` has a breakpoint touching `delta`.
/// The pair is HN-decomposable exactly when the list is non-empty.
pub fn hn_cuts(v: &HNPolygon, delta: &HNPolygon) -> Result<Vec<usize>> {
    check_rank(delta.rank(), v.rank())?;
    if !v.dominated_by_unchecked(delta) {
        return Err(Error::NotDominated(v.to_string()));
    }
    Ok(v.vertices()[1..].iter().filter(|(j, p)| *j < v.rank() && *p == delta.prefix(*j)).map(|(j, _)| *j).collect())
}

pub fn is_hn_decomposable(v: &HNPolygon, delta: &HNPolygon) -> Result<bool> {
    Ok(!hn_cuts(v, delta)?.is_empty())
}

/// Checks that dualizing maps `B(GL_n, k, delta)` onto `B(GL_n, -k, dual delta)`.
pub fn involution_check(q: &KottwitzQuery) -> bool {
    let mut left: Vec<HNPolygon> = kottwitz_set(q).iter().map(HNPolygon::dual).collect();
    let dual_q = KottwitzQuery { n: q.n, k: -q.k, delta: q.delta.dual() };
    let mut right = kottwitz_set(&dual_q);
    left.sort();
    right.sort();
    left == right
}

/// Size-bounded memo table for Kottwitz sets. Once full, new entries are
/// computed but not stored.
#[derive(Debug)]
pub struct KottwitzCache {
    capacity: usize,
    map: HashMap<KottwitzQuery, Arc<Vec<HNPolygon>>>,
}

/// Environment variable overriding the cache bound.
pub const CACHE_SIZE_ENV: &str = "HN_STRATA_CACHE_SIZE";
pub const DEFAULT_CACHE_SIZE: usize = 4096;

impl Default for KottwitzCache {
    fn default() -> Self {
        let capacity = std::env::var(CACHE_SIZE_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_CACHE_SIZE);
        KottwitzCache::with_capacity(capacity)
    }
}

impl KottwitzCache {
    pub fn with_capacity(capacity: usize) -> Self {
        KottwitzCache { capacity, map: HashMap::new() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get_or_compute(&mut self, q: &KottwitzQuery, limit: Option<usize>) -> Result<Arc<Vec<HNPolygon>>> {
        if let Some(hit) = self.map.get(q) {
            return Ok(hit.clone());
        }
        let set = Arc::new(kottwitz_set_bounded(q, limit)?);
        if self.map.len() < self.capacity {
            self.map.insert(q.clone(), set.clone());
        }
        Ok(set)
    }
}

/// Degree of a polygon as an `i64`, if integral.
pub(crate) fn integral_degree(p: &HNPolygon) -> Option<i64> {
    let d: Rational = p.degree();
    if is_integer(&d) {
        d.to_integer().to_i64()
    } else {
        None
    }
}
