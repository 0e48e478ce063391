//! Brute-force oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use hn_strata::polygon::HNPolygon;
use hn_strata::rational::{int, rat, Rational};
use num::{ToPrimitive, Zero};
use proptest::prelude::*;

/// All concave polygons with integral breakpoints, rank `n`, degree `k`,
/// lying everywhere on or below `delta`. Enumerates breakpoint subsets and
/// integer heights independently of the library's walk.
pub fn brute_kottwitz(n: usize, k: i64, delta: &HNPolygon) -> Vec<HNPolygon> {
    if delta.rank() != n || delta.degree() != int(k) {
        return Vec::new();
    }
    if n == 0 {
        return vec![HNPolygon::empty()];
    }
    let pd = delta.prefix_sums();
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let cuts: Vec<usize> = (1..n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        let ranges: Vec<(i64, i64)> = cuts
            .iter()
            .map(|&j| {
                let lo = (int(k) * int(j as i64) / int(n as i64)).ceil().to_integer().to_i64().unwrap();
                let hi = pd[j].floor().to_integer().to_i64().unwrap();
                (lo, hi)
            })
            .collect();
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            continue;
        }
        // odometer over the product of ranges
        let mut heights: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        loop {
            let mut verts = vec![(0usize, 0i64)];
            verts.extend(cuts.iter().copied().zip(heights.iter().copied()));
            verts.push((n, k));
            let slopes: Vec<Rational> = verts.windows(2).map(|w| rat(w[1].1 - w[0].1, (w[1].0 - w[0].0) as i64)).collect();
            if slopes.windows(2).all(|s| s[0] > s[1]) {
                let coords: Vec<Rational> =
                    verts.windows(2).zip(&slopes).flat_map(|(w, s)| std::iter::repeat_n(s.clone(), w[1].0 - w[0].0)).collect();
                let p = HNPolygon::from_coords(&coords).unwrap();
                let pp = p.prefix_sums();
                if pp.iter().zip(&pd).all(|(x, y)| x <= y) {
                    out.push(p);
                }
            }
            let mut i = 0;
            while i < heights.len() {
                if heights[i] < ranges[i].1 {
                    heights[i] += 1;
                    break;
                }
                heights[i] = ranges[i].0;
                i += 1;
            }
            if i == heights.len() {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Polygons with integral breakpoints, rank and degree of `c ⊕ d`, on or
/// below `c ⊕ d`, satisfying the partition condition checked by brute force.
pub fn brute_tilde_set(c: &HNPolygon, d: &HNPolygon) -> Vec<HNPolygon> {
    let sum = c.direct_sum(d);
    let Some(k) = integer(&sum.degree()) else { return Vec::new() };
    brute_kottwitz(sum.rank(), k, &sum).into_iter().filter(|a| brute_tilde(a, c, d)).collect()
}

pub fn integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Partition condition by trying every subset `H` with `c` and `d` placed in order.
pub fn brute_tilde(a: &HNPolygon, c: &HNPolygon, d: &HNPolygon) -> bool {
    let (ac, cc, dc) = (a.coords(), c.coords(), d.coords());
    let n = ac.len();
    if n != cc.len() + dc.len() {
        return false;
    }
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == cc.len()).any(|mask| {
        let (mut i, mut j) = (0, 0);
        let mut b = Vec::with_capacity(n);
        let mut ok = true;
        for (pos, x) in ac.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                ok &= cc[i] >= *x;
                b.push(cc[i].clone());
                i += 1;
            } else {
                ok &= dc[j] <= *x;
                b.push(dc[j].clone());
                j += 1;
            }
        }
        ok && dominates(&b, &ac)
    })
}

/// Prefix sums of `b` dominate those of `a`, with equal totals.
pub fn dominates(b: &[Rational], a: &[Rational]) -> bool {
    let (mut pb, mut pa) = (Rational::zero(), Rational::zero());
    for (x, y) in b.iter().zip(a) {
        pb += x;
        pa += y;
        if pb < pa {
            return false;
        }
    }
    pb == pa
}

/// Every bundle polygon `b` of rank `n` with `c <= b <= a` coordinatewise and `|b| = m`.
pub fn brute_interpolants(a: &HNPolygon, c: &HNPolygon, m: i64) -> Vec<HNPolygon> {
    let n = a.rank();
    let pa = a.prefix_sums();
    let pc = c.prefix_sums();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n.saturating_sub(1)) {
        let cuts: Vec<usize> = (1..n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        let ranges: Vec<(i64, i64)> =
            cuts.iter().map(|&j| (pc[j].ceil().to_integer().to_i64().unwrap(), pa[j].floor().to_integer().to_i64().unwrap())).collect();
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            continue;
        }
        let mut heights: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        loop {
            let mut verts = vec![(0usize, 0i64)];
            verts.extend(cuts.iter().copied().zip(heights.iter().copied()));
            verts.push((n, m));
            let slopes: Vec<Rational> = verts.windows(2).map(|w| rat(w[1].1 - w[0].1, (w[1].0 - w[0].0) as i64)).collect();
            if slopes.windows(2).all(|s| s[0] > s[1]) {
                let coords: Vec<Rational> =
                    verts.windows(2).zip(&slopes).flat_map(|(w, s)| std::iter::repeat_n(s.clone(), w[1].0 - w[0].0)).collect();
                let (ac, cc) = (a.coords(), c.coords());
                if coords.iter().zip(&ac).zip(&cc).all(|((b, hi), lo)| lo <= b && b <= hi) {
                    out.push(HNPolygon::from_coords(&coords).unwrap());
                }
            }
            let mut i = 0;
            while i < heights.len() {
                if heights[i] < ranges[i].1 {
                    heights[i] += 1;
                    break;
                }
                heights[i] = ranges[i].0;
                i += 1;
            }
            if i == heights.len() {
                break;
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Generators. Slopes have denominators at most 4.

/// One stable-ish block `(p/q)^(q t)`, so the block alone has integral breakpoints.
fn integral_block(max_rank: usize) -> impl Strategy<Value = (Rational, usize)> {
    (1i64..=4).prop_flat_map(move |q| {
        let max_t = (max_rank / q as usize).max(1);
        (-2 * q..=2 * q, 1..=max_t).prop_map(move |(p, t)| (rat(p, q), q as usize * t))
    })
}

/// Random bundle polygon (integral breakpoints) of rank in `1..=max_rank`.
pub fn bundle_polygon(max_rank: usize) -> impl Strategy<Value = HNPolygon> {
    prop::collection::vec(integral_block(max_rank), 1..=3).prop_map(move |blocks| {
        let mut p = HNPolygon::empty();
        for (s, m) in blocks {
            if p.rank() + m <= max_rank {
                p = p.direct_sum(&HNPolygon::constant(s, m));
            }
        }
        if p.is_empty() {
            HNPolygon::constant(int(0), 1)
        } else {
            p
        }
    })
}

/// Random polygon with integer coordinates.
pub fn integral_polygon(max_rank: usize) -> impl Strategy<Value = HNPolygon> {
    prop::collection::vec(-3i64..=3, 1..=max_rank).prop_map(|v| HNPolygon::from_unsorted(v.into_iter().map(int).collect()))
}

/// Random semistable bundle polygon `(p/q)^(q t)`.
pub fn semistable_polygon(max_rank: usize) -> impl Strategy<Value = HNPolygon> {
    integral_block(max_rank).prop_filter_map("fits", move |(s, m)| (m <= max_rank).then(|| HNPolygon::constant(s, m)))
}

/// Arbitrary dominant rational vector of rank `1..=max_rank`.
pub fn rational_polygon(max_rank: usize) -> impl Strategy<Value = HNPolygon> {
    prop::collection::vec((-8i64..=8, 1i64..=4), 1..=max_rank)
        .prop_map(|v| HNPolygon::from_unsorted(v.into_iter().map(|(p, q)| rat(p, q)).collect()))
}

/// Replaces consecutive runs of the sorted coordinates by their averages,
/// which yields polygons on or below the input with the same degree.
pub fn average_runs(p: &HNPolygon, cuts: &[bool]) -> HNPolygon {
    let coords = p.coords();
    let mut out = Vec::with_capacity(coords.len());
    let mut run: Vec<Rational> = Vec::new();
    for (i, x) in coords.iter().enumerate() {
        run.push(x.clone());
        let close = i + 1 == coords.len() || cuts.get(i).copied().unwrap_or(true);
        if close {
            let avg = run.iter().fold(Rational::zero(), |acc, y| acc + y) / int(run.len() as i64);
            out.extend(std::iter::repeat_n(avg, run.len()));
            run.clear();
        }
    }
    HNPolygon::from_unsorted(out)
}

/// A polygon below `p` obtained by averaging random runs.
pub fn below(p: HNPolygon) -> impl Strategy<Value = (HNPolygon, HNPolygon)> {
    let n = p.rank();
    prop::collection::vec(any::<bool>(), n).prop_map(move |cuts| {
        let a = average_runs(&p, &cuts);
        (p.clone(), a)
    })
}

/// A pair `(c, d)` of bundle polygons with total rank at most `max_rank`.
pub fn bundle_pair(max_rank: usize) -> impl Strategy<Value = (HNPolygon, HNPolygon)> {
    (1..max_rank).prop_flat_map(move |rc| (bundle_polygon(rc), bundle_polygon(max_rank - rc)))
}

/// A random Kottwitz bound: integer vector averaged on random runs, so the
/// degree is an integer and the polygon is usually not a bundle polygon.
pub fn kottwitz_bound(max_rank: usize) -> impl Strategy<Value = HNPolygon> {
    (integral_polygon(max_rank), prop::collection::vec(any::<bool>(), max_rank)).prop_map(|(p, cuts)| average_runs(&p, &cuts))
}

/// Moves the first vertex group of a bundle polygon up by `eps`, giving a
/// polygon with `eps`-breakpoints.
pub fn lift_by_epsilon(b: &HNPolygon, eps: &Rational) -> Option<HNPolygon> {
    let mut blocks: Vec<(Rational, usize)> = b.blocks().iter().map(|bl| (bl.slope.clone(), bl.mult)).collect();
    let m = blocks[0].1;
    blocks[0].0 += eps / int(m as i64);
    HNPolygon::from_blocks(blocks).ok()
}

pub fn epsilon() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![rat(0, 1), rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4)])
}

/// `(a, c)` with `a` having epsilon-breakpoints and `c` integral-breakpoint
/// below it coordinatewise.
pub fn band(max_rank: usize) -> impl Strategy<Value = (HNPolygon, HNPolygon)> {
    (bundle_polygon(max_rank), epsilon(), prop::collection::vec(0i64..=2, max_rank)).prop_filter_map("valid lift", |(b, eps, drops)| {
        let a = lift_by_epsilon(&b, &eps)?;
        let c: Vec<Rational> =
            a.coords().iter().zip(&drops).map(|(x, d)| Rational::from_integer(x.floor().to_integer()) - int(*d)).collect();
        Some((a, HNPolygon::from_unsorted(c)))
    })
}

/// Integer degrees between `|c|` and `|a|`.
pub fn band_degrees(a: &HNPolygon, c: &HNPolygon) -> Vec<i64> {
    let lo = c.degree().ceil().to_integer();
    let hi = a.degree().floor().to_integer();
    let (lo, hi): (i64, i64) = (lo.try_into().unwrap(), hi.try_into().unwrap());
    (lo..=hi).collect()
}
