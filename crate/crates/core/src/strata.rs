//! Newton strata of the flag variety for `(GL_n, mu = (1^(r), 0^(n-r)), b basic)`
//! and their position relative to the weakly admissible locus.
//!
//! A stratum `[b']` is non-empty exactly when `nu_{b'}` lies in
//! `B(GL_n, 0, delta)` with `delta = nu_b - w0 mu`. A non-empty stratum is
//!
//! * `DISJOINT` from the weakly admissible locus if `nu_{b'}` touches `delta`
//!   at a breakpoint (HN-decomposable);
//! * `PROPER_INTERSECT` if it is HN-indecomposable and the bundle of `b'` is
//!   an extension `0 -> E1 -> E -> E2 -> 0` where `E1`, `E2` come from a Levi
//!   reduction `GL_m x GL_{n-m}` of `b` and a mu-negative distribution of the
//!   weights, which makes `E1` of positive degree;
//! * `CONTAINED` otherwise.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::ExtEngine;
use crate::kottwitz::{hn_cuts, KottwitzQuery};
use crate::polygon::{check_rank, HNPolygon};
use crate::rational::{from_usize, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StrataConfig {
    pub n: usize,
    pub r: usize,
}

impl StrataConfig {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::Precondition(format!("need 0 < r < n, got n = {n}, r = {r}")));
        }
        Ok(StrataConfig { n, r })
    }

    fn ratio(&self) -> Rational {
        from_usize(self.r) / from_usize(self.n)
    }

    pub fn mu(&self) -> HNPolygon {
        HNPolygon::constant(int(1), self.r).direct_sum(&HNPolygon::constant(int(0), self.n - self.r))
    }

    /// `(r/n)^(n)`.
    pub fn nu_b(&self) -> HNPolygon {
        HNPolygon::constant(self.ratio(), self.n)
    }

    /// `((r/n)^(n-r), ((r-n)/n)^(r))`.
    pub fn delta(&self) -> HNPolygon {
        shifted_bound(&self.ratio(), self.n, self.r)
    }

    /// The Kottwitz set whose members index the non-empty strata.
    pub fn strata_query(&self) -> KottwitzQuery {
        KottwitzQuery { n: self.n, k: 0, delta: self.delta() }
    }

    /// All `0 < m < n` such that `b` reduces to `GL_m x GL_{n-m}`, i.e. `n | m r`.
    pub fn levi_reductions(&self) -> Vec<usize> {
        (1..self.n).filter(|m| (m * self.r).is_multiple_of(self.n)).collect()
    }

    /// The mu-negative weight distributions for the Levi cut at `m`.
    pub fn mu_negative_splits(&self, m: usize) -> Vec<LeviSplit> {
        let lo = self.r.saturating_sub(self.n - m);
        let hi = m.min(self.r);
        (lo..=hi).filter(|&s| s * self.n > m * self.r).map(|s| LeviSplit { n: self.n, r: self.r, m, s }).collect()
    }

    pub fn all_splits(&self) -> Vec<LeviSplit> {
        self.levi_reductions().into_iter().flat_map(|m| self.mu_negative_splits(m)).collect()
    }
}

/// `(x)^(n)` minus `(1^(ones), 0^(n - ones))`, sorted.
fn shifted_bound(x: &Rational, n: usize, ones: usize) -> HNPolygon {
    HNPolygon::constant(x.clone(), n - ones).direct_sum(&HNPolygon::constant(x - int(1), ones))
}

/// A Levi cut `GL_m x GL_{n-m}` together with the number `s` of weights `1`
/// of `w mu` falling into the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeviSplit {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    pub s: usize,
}

impl LeviSplit {
    fn ratio(&self) -> Rational {
        from_usize(self.r) / from_usize(self.n)
    }

    /// `m r / n - s`; negative for a mu-negative split.
    pub fn first_degree(&self) -> i64 {
        (self.m * self.r / self.n) as i64 - self.s as i64
    }

    pub fn first_bound(&self) -> HNPolygon {
        shifted_bound(&self.ratio(), self.m, self.s)
    }

    pub fn second_bound(&self) -> HNPolygon {
        shifted_bound(&self.ratio(), self.n - self.m, self.r - self.s)
    }

    pub fn first_query(&self) -> KottwitzQuery {
        KottwitzQuery { n: self.m, k: self.first_degree(), delta: self.first_bound() }
    }

    pub fn second_query(&self) -> KottwitzQuery {
        KottwitzQuery { n: self.n - self.m, k: -self.first_degree(), delta: self.second_bound() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WaStatus {
    Disjoint,
    ProperIntersect,
    Contained,
}

/// Data exhibiting a non-weakly-admissible point in a stratum: Newton
/// points `x1`, `x2` of the two Levi blocks and the extension whose middle
/// term is the stratum's bundle. `sub = bundle_vector(x1)` has positive degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub m: usize,
    pub s: usize,
    pub x1: HNPolygon,
    pub x2: HNPolygon,
    pub quotient: HNPolygon,
    pub sub: HNPolygon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumRecord {
    pub nu_b_prime: HNPolygon,
    pub nonempty: bool,
    pub hn_decomposable: bool,
    /// Positions where `nu_b_prime` touches `delta` at one of its breakpoints.
    pub hn_cuts: Vec<usize>,
    /// `None` for empty strata.
    pub wa_status: Option<WaStatus>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StrataSummary {
    pub nonempty: usize,
    pub hn_decomposable: usize,
    pub hn_indecomposable: usize,
    pub contained: usize,
    pub proper_intersect: usize,
    pub disjoint: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct StrataReport {
    pub config: StrataConfig,
    pub delta: HNPolygon,
    pub levi_reductions: Vec<usize>,
    pub summary: StrataSummary,
    pub records: Vec<StratumRecord>,
}

/// The union of all extension sets reachable from mu-negative Levi splits,
/// as bundle slope vectors, with the first witness found for each member.
#[derive(Clone, Debug, Default)]
pub struct ExtensionUnion {
    pub members: BTreeMap<HNPolygon, Witness>,
    /// Direct sums `bundle_vector(x1) ⊕ bundle_vector(x2)` over all tuples.
    pub split_sums: BTreeSet<HNPolygon>,
}

impl ExtensionUnion {
    pub fn contains(&self, v: &HNPolygon) -> bool {
        self.members.contains_key(v)
    }

    /// Members that are not a split direct sum, in decreasing order.
    pub fn non_split(&self) -> Vec<HNPolygon> {
        self.members.keys().rev().filter(|v| !self.split_sums.contains(*v)).cloned().collect()
    }
}

/// Every Levi tuple `(split, x1, x2)` with `x1`, `x2` in the block Kottwitz sets.
fn for_each_tuple<F>(cfg: &StrataConfig, engine: &mut ExtEngine, mut f: F) -> Result<()>
where
    F: FnMut(&mut ExtEngine, &LeviSplit, &HNPolygon, &HNPolygon) -> Result<bool>,
{
    for split in cfg.all_splits() {
        let firsts = engine.kottwitz_set(&split.first_query())?;
        let seconds = engine.kottwitz_set(&split.second_query())?;
        for x1 in firsts.iter() {
            for x2 in seconds.iter() {
                if !f(engine, &split, x1, x2)? {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn witness(split: &LeviSplit, x1: &HNPolygon, x2: &HNPolygon) -> Witness {
    Witness { m: split.m, s: split.s, x1: x1.clone(), x2: x2.clone(), quotient: x2.bundle_vector(), sub: x1.bundle_vector() }
}

pub fn extension_union(cfg: &StrataConfig, engine: &mut ExtEngine) -> Result<ExtensionUnion> {
    let mut union = ExtensionUnion::default();
    for_each_tuple(cfg, engine, |engine, split, x1, x2| {
        let w = witness(split, x1, x2);
        union.split_sums.insert(w.sub.direct_sum(&w.quotient));
        for v in engine.ext_enumerate(&w.quotient, &w.sub)?.iter() {
            union.members.entry(v.clone()).or_insert_with(|| w.clone());
        }
        Ok(true)
    })?;
    Ok(union)
}

fn classify(
    cfg: &StrataConfig,
    nu: &HNPolygon,
    nonempty: bool,
    lookup: impl FnOnce(&HNPolygon) -> Result<Option<Witness>>,
) -> Result<StratumRecord> {
    let delta = cfg.delta();
    if !nonempty {
        return Ok(StratumRecord {
            nu_b_prime: nu.clone(),
            nonempty,
            hn_decomposable: false,
            hn_cuts: Vec::new(),
            wa_status: None,
            witness: None,
        });
    }
    let cuts = hn_cuts(nu, &delta)?;
    let (status, witness) = if !cuts.is_empty() {
        (WaStatus::Disjoint, None)
    } else {
        match lookup(&nu.bundle_vector())? {
            Some(w) => (WaStatus::ProperIntersect, Some(w)),
            None => (WaStatus::Contained, None),
        }
    };
    Ok(StratumRecord {
        nu_b_prime: nu.clone(),
        nonempty,
        hn_decomposable: !cuts.is_empty(),
        hn_cuts: cuts,
        wa_status: Some(status),
        witness,
    })
}

fn is_member(cfg: &StrataConfig, nu: &HNPolygon) -> bool {
    nu.has_integral_breakpoints() && nu.degree() == int(0) && nu.dominated_by_unchecked(&cfg.delta())
}

/// Classifies a single stratum, testing only the extensions it needs.
pub fn stratum_status(cfg: &StrataConfig, nu: &HNPolygon, engine: &mut ExtEngine) -> Result<StratumRecord> {
    check_rank(cfg.n, nu.rank())?;
    let nonempty = is_member(cfg, nu);
    classify(cfg, nu, nonempty, |v| {
        let mut found = None;
        for_each_tuple(cfg, engine, |engine, split, x1, x2| {
            let w = witness(split, x1, x2);
            if engine.ext_contains(v, &w.quotient, &w.sub)? {
                found = Some(w);
                return Ok(false);
            }
            Ok(true)
        })?;
        Ok(found)
    })
}

/// One record per non-empty stratum, in decreasing order of `nu_{b'}`.
pub fn stratification_report(cfg: &StrataConfig, engine: &mut ExtEngine) -> Result<StrataReport> {
    let union = extension_union(cfg, engine)?;
    let strata = engine.kottwitz_set(&cfg.strata_query())?;
    let mut records = Vec::with_capacity(strata.len());
    let mut summary = StrataSummary::default();
    for nu in strata.iter() {
        let rec = classify(cfg, nu, true, |v| Ok(union.members.get(v).cloned()))?;
        summary.nonempty += 1;
        if rec.hn_decomposable {
            summary.hn_decomposable += 1;
        } else {
            summary.hn_indecomposable += 1;
        }
        match rec.wa_status {
            Some(WaStatus::Contained) => summary.contained += 1,
            Some(WaStatus::ProperIntersect) => summary.proper_intersect += 1,
            Some(WaStatus::Disjoint) => summary.disjoint += 1,
            None => {}
        }
        records.push(rec);
    }
    Ok(StrataReport { config: *cfg, delta: cfg.delta(), levi_reductions: cfg.levi_reductions(), summary, records })
}
