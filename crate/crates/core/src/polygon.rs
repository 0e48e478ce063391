//! Harder-Narasimhan polygons: weakly decreasing rational vectors stored as
//! run-length blocks of `(slope, multiplicity)`.
//!
//! A polygon of rank `n` is the same thing as a dominant rational vector
//! `a_1 >= ... >= a_n`; its prefix-sum function `P(l) = a_1 + ... + a_l` is
//! concave. The same type is used for Newton points, HN slope vectors of
//! bundles and elements of Kottwitz sets.
//!
//! Text form: `(2/5^(6),-3/5^(4))`. When the exponent is omitted the block
//! multiplicity is the denominator of the reduced slope, so `(3/8,-1/2^(6))`
//! has rank 14 and `(0)` has rank 1.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{denom_usize, frac, from_usize, is_integer, parse_rational, Rational};

/// One run of equal slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub slope: Rational,
    pub mult: usize,
}

/// Residue class `epsilon` in `[0, 1)` of the prefix sums at the breakpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsilonClass(Rational);

impl EpsilonClass {
    /// Reduces `x` modulo 1.
    pub fn new(x: &Rational) -> Self {
        EpsilonClass(frac(x))
    }

    pub fn zero() -> Self {
        EpsilonClass(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn contains(&self, x: &Rational) -> bool {
        frac(x) == self.0
    }
}

/// A concave polygon in canonical block form: slopes strictly decreasing,
/// every multiplicity positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HNPolygon {
    blocks: Vec<Block>,
}

impl HNPolygon {
    /// The rank-0 polygon.
    pub fn empty() -> Self {
        HNPolygon { blocks: Vec::new() }
    }

    /// `slope^(mult)`; the empty polygon when `mult == 0`.
    pub fn constant(slope: Rational, mult: usize) -> Self {
        if mult == 0 {
            return Self::empty();
        }
        HNPolygon { blocks: vec![Block { slope, mult }] }
    }

    /// Builds a polygon from weakly decreasing blocks, fusing equal slopes.
    pub fn from_blocks<I>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, usize)>,
    {
        let mut out: Vec<Block> = Vec::new();
        for (slope, mult) in blocks {
            if mult == 0 {
                return Err(Error::Precondition("block multiplicity must be positive".into()));
            }
            match out.last_mut() {
                Some(last) if last.slope == slope => last.mult += mult,
                Some(last) if last.slope < slope => {
                    return Err(Error::Precondition(format!("slopes must be weakly decreasing, found {} before {}", last.slope, slope)))
                }
                _ => out.push(Block { slope, mult }),
            }
        }
        Ok(HNPolygon { blocks: out })
    }

    /// Builds a polygon from a weakly decreasing coordinate vector.
    pub fn from_coords(coords: &[Rational]) -> Result<Self> {
        Self::from_blocks(coords.iter().map(|c| (c.clone(), 1)))
    }

    /// Sorts an arbitrary vector into dominant order.
    pub fn from_unsorted(mut coords: Vec<Rational>) -> Self {
        coords.sort_by(|a, b| b.cmp(a));
        Self::from_coords(&coords).expect("sorted input")
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.mult).sum()
    }

    pub fn degree(&self) -> Rational {
        self.blocks.iter().fold(Rational::zero(), |acc, b| acc + &b.slope * from_usize(b.mult))
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Exactly one slope block.
    pub fn is_semistable(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.blocks.iter().all(|b| is_integer(&b.slope))
    }

    pub fn max_slope(&self) -> Option<&Rational> {
        self.blocks.first().map(|b| &b.slope)
    }

    pub fn min_slope(&self) -> Option<&Rational> {
        self.blocks.last().map(|b| &b.slope)
    }

    /// Coordinate expansion `a_1 >= ... >= a_n`.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = Vec::with_capacity(self.rank());
        for b in &self.blocks {
            v.extend(std::iter::repeat_n(b.slope.clone(), b.mult));
        }
        v
    }

    /// `[P(0), P(1), ..., P(n)]`.
    pub fn prefix_sums(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.rank() + 1);
        let mut acc = Rational::zero();
        out.push(acc.clone());
        for b in &self.blocks {
            for _ in 0..b.mult {
                acc += &b.slope;
                out.push(acc.clone());
            }
        }
        out
    }

    /// `P(l)`, with `l` clamped to the rank.
    pub fn prefix(&self, l: usize) -> Rational {
        let mut acc = Rational::zero();
        let mut left = l;
        for b in &self.blocks {
            let take = left.min(b.mult);
            acc += &b.slope * from_usize(take);
            left -= take;
            if left == 0 {
                break;
            }
        }
        acc
    }

    /// Vertices `(l, P(l))` at the end of every block, starting with `(0, 0)`.
    pub fn vertices(&self) -> Vec<(usize, Rational)> {
        let mut out = vec![(0, Rational::zero())];
        let mut pos = 0;
        let mut acc = Rational::zero();
        for b in &self.blocks {
            pos += b.mult;
            acc += &b.slope * from_usize(b.mult);
            out.push((pos, acc.clone()));
        }
        out
    }

    /// Interior positions `0 < j < n` where the slope drops.
    pub fn breakpoints(&self) -> Vec<usize> {
        let v = self.vertices();
        v[1..v.len().saturating_sub(1)].iter().map(|(l, _)| *l).collect()
    }

    /// `P` is an integer at every breakpoint and at `n`. This is the
    /// condition for being the HN polygon of a vector bundle.
    pub fn has_integral_breakpoints(&self) -> bool {
        self.vertices().iter().all(|(_, p)| is_integer(p))
    }

    pub fn has_epsilon_breakpoints(&self, eps: &EpsilonClass) -> bool {
        self.vertices()[1..].iter().all(|(_, p)| eps.contains(p))
    }

    /// The class `epsilon` for which the polygon has epsilon-breakpoints, if any.
    pub fn epsilon_class(&self) -> Option<EpsilonClass> {
        let eps = EpsilonClass::new(&self.degree());
        self.has_epsilon_breakpoints(&eps).then_some(eps)
    }

    /// Merge of the two block lists.
    pub fn direct_sum(&self, other: &HNPolygon) -> HNPolygon {
        let mut all: Vec<Block> = self.blocks.iter().chain(&other.blocks).cloned().collect();
        all.sort_by(|a, b| b.slope.cmp(&a.slope));
        HNPolygon::from_blocks(all.into_iter().map(|b| (b.slope, b.mult))).expect("sorted blocks")
    }

    /// `(-a_n, ..., -a_1)`.
    pub fn dual(&self) -> HNPolygon {
        HNPolygon { blocks: self.blocks.iter().rev().map(|b| Block { slope: -&b.slope, mult: b.mult }).collect() }
    }

    /// Converts a Newton point into the HN slope vector of the associated
    /// bundle and back; both directions are `v -> -w0 v`, i.e. the dual.
    pub fn bundle_vector(&self) -> HNPolygon {
        self.dual()
    }

    /// `self ⪯ other`: every prefix sum is at most the other's, with equal totals.
    pub fn leq_dominance(&self, other: &HNPolygon) -> Result<bool> {
        check_rank(other.rank(), self.rank())?;
        Ok(self.dominated_by_unchecked(other))
    }

    pub(crate) fn dominated_by_unchecked(&self, other: &HNPolygon) -> bool {
        let p = self.prefix_sums();
        let q = other.prefix_sums();
        p.last() == q.last() && p.iter().zip(&q).all(|(x, y)| x <= y)
    }

    /// Strong slopewise dominance of `d` by `self`: for every threshold `mu`,
    /// `#{a_i >= mu} >= #{d_i >= mu}`, and when the counts agree the leading
    /// coordinates of both vectors coincide. Returns `false` when `d` has the
    /// larger rank.
    pub fn strongly_slopewise_dominates(&self, d: &HNPolygon) -> bool {
        if self.rank() < d.rank() {
            return false;
        }
        let a = self.coords();
        let dc = d.coords();
        let count = |v: &[Rational], mu: &Rational| v.iter().take_while(|x| *x >= mu).count();
        a.iter().chain(&dc).all(|mu| {
            let na = count(&a, mu);
            let nd = count(&dc, mu);
            na > nd || (na == nd && a[..na] == dc[..na])
        })
    }

    /// The first `k` coordinates.
    pub fn truncate(&self, k: usize) -> HNPolygon {
        let mut out = Vec::new();
        let mut left = k;
        for b in &self.blocks {
            if left == 0 {
                break;
            }
            let take = left.min(b.mult);
            out.push(Block { slope: b.slope.clone(), mult: take });
            left -= take;
        }
        HNPolygon { blocks: out }
    }

    /// Splits off the last stable piece: writing the smallest slope as `q/p`
    /// in lowest terms, returns `(c', (q/p)^(p))` where `c'` is the rest.
    /// `None` when the polygon is empty or the last block is shorter than `p`.
    pub fn split_last_stable(&self) -> Option<(HNPolygon, HNPolygon)> {
        let last = self.blocks.last()?;
        let p = denom_usize(&last.slope)?;
        if last.mult < p {
            return None;
        }
        let head = self.truncate(self.rank() - p);
        Some((head, HNPolygon::constant(last.slope.clone(), p)))
    }

    /// Number of coordinates `>= mu`.
    pub fn count_at_least(&self, mu: &Rational) -> usize {
        self.blocks.iter().take_while(|b| &b.slope >= mu).map(|b| b.mult).sum()
    }
}

pub(crate) fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

/// Lexicographic order on the coordinate expansions, shorter vectors first
/// on a common prefix. For equal ranks it refines the dominance order.
impl Ord for HNPolygon {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.blocks.iter().map(|b| (&b.slope, b.mult));
        let mut b = other.blocks.iter().map(|b| (&b.slope, b.mult));
        let mut x = a.next();
        let mut y = b.next();
        loop {
            match (x, y) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((sa, ma)), Some((sb, mb))) => {
                    if sa != sb {
                        return sa.cmp(sb);
                    }
                    let m = ma.min(mb);
                    x = if ma > m { Some((sa, ma - m)) } else { a.next() };
                    y = if mb > m { Some((sb, mb - m)) } else { b.next() };
                }
            }
        }
    }
}

impl PartialOrd for HNPolygon {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HNPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}^({})", b.slope, b.mult)?;
        }
        f.write_str(")")
    }
}

impl FromStr for HNPolygon {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse(text)
    }
}

/// Parses the polygon grammar
/// `"(" item ("," item)* ")"`, `item := slope ["^(" mult ")"]`,
/// `slope := ["-"] int ["/" posint]`. The empty polygon is written `()`.
/// Whitespace between tokens is ignored.
pub fn parse(text: &str) -> Result<HNPolygon> {
    let fail = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.to_string() };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    // Accept U+2212 as a minus sign so typeset lists paste in directly.
    let compact = compact.replace('\u{2212}', "-");
    let inner = compact.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(|| fail("expected surrounding parentheses"))?;
    if inner.is_empty() {
        return Ok(HNPolygon::empty());
    }
    let mut blocks: Vec<(Rational, usize)> = Vec::new();
    for item in split_items(inner) {
        let (slope_txt, mult_txt) = match item.split_once('^') {
            Some((s, m)) => {
                let m = m.strip_prefix('(').and_then(|m| m.strip_suffix(')')).ok_or_else(|| fail("exponent must be written ^(k)"))?;
                (s, Some(m))
            }
            None => (item, None),
        };
        let slope = parse_rational(slope_txt).ok_or_else(|| fail(&format!("bad slope {slope_txt:?}")))?;
        let mult = match mult_txt {
            Some(m) => {
                let k: usize = m.parse().map_err(|_| fail(&format!("bad multiplicity {m:?}")))?;
                if k == 0 {
                    return Err(fail("multiplicity must be positive"));
                }
                k
            }
            None => denom_usize(&slope).ok_or_else(|| fail("denominator too large"))?,
        };
        if let Some((prev, _)) = blocks.last() {
            if *prev < slope {
                return Err(fail("slopes must not increase"));
            }
        }
        blocks.push((slope, mult));
    }
    HNPolygon::from_blocks(blocks)
}

/// Splits on commas that are not inside an exponent's parentheses.
fn split_items(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl Serialize for HNPolygon {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HNPolygon {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the tests and examples. Panics on bad input.
pub fn poly(text: &str) -> HNPolygon {
    parse(text).unwrap_or_else(|e| panic!("{e}"))
}
