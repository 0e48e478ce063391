mod common;

use common::brute_kottwitz;
use hn_strata::rational::{from_usize, gcd_u64, int};
use hn_strata::strata::StratumRecord;
use hn_strata::{ext_contains, extension_union, kottwitz_set, poly, stratification_report, stratum_status};
use hn_strata::{Error, ExtEngine, StrataConfig, WaStatus};

fn cfg(n: usize, r: usize) -> StrataConfig {
    StrataConfig::new(n, r).unwrap()
}

fn status(n: usize, r: usize, nu: &str) -> StratumRecord {
    stratum_status(&cfg(n, r), &poly(nu), &mut ExtEngine::default()).unwrap()
}

#[test]
fn config_rejects_degenerate_r() {
    assert!(StrataConfig::new(4, 0).is_err());
    assert!(StrataConfig::new(4, 4).is_err());
}

#[test]
fn delta_and_basic_point() {
    let c = cfg(10, 4);
    assert_eq!(c.delta(), poly("(2/5^(6),-3/5^(4))"));
    assert_eq!(c.nu_b(), poly("(2/5^(10))"));
    assert_eq!(c.mu(), poly("(1^(4),0^(6))"));
    assert_eq!(cfg(14, 6).delta(), poly("(3/7^(8),-4/7^(6))"));
}

#[test]
fn levi_reduction_examples() {
    assert_eq!(cfg(14, 6).levi_reductions(), vec![7]);
    assert_eq!(cfg(21, 9).levi_reductions(), vec![7, 14]);
    assert_eq!(cfg(10, 4).levi_reductions(), vec![5]);
    assert!(cfg(7, 3).levi_reductions().is_empty());
}

#[test]
fn mu_negative_split_examples() {
    let s = |n, r, m| cfg(n, r).mu_negative_splits(m).iter().map(|x| x.s).collect::<Vec<_>>();
    assert_eq!(s(14, 6, 7), vec![4, 5, 6]);
    assert_eq!(s(10, 4, 5), vec![3, 4]);
    assert_eq!(s(21, 9, 14), vec![7, 8, 9]);
    assert_eq!(s(21, 9, 7), vec![4, 5, 6, 7]);
}

#[test]
fn split_bounds_for_gl14() {
    let splits = cfg(14, 6).mu_negative_splits(7);
    let first = &splits[0];
    assert_eq!(first.first_degree(), -1);
    assert_eq!(first.first_bound(), poly("(3/7^(3),-4/7^(4))"));
    assert_eq!(first.second_bound(), poly("(3/7^(5),-4/7^(2))"));
}

#[test]
fn gl10_single_strata() {
    let rec = status(10, 4, "(2/5^(5),0,-1/2^(4))");
    assert_eq!(rec.wa_status, Some(WaStatus::Disjoint));
    assert_eq!(rec.hn_cuts, vec![5]);
    let rec = status(10, 4, "(0^(10))");
    assert_eq!(rec.wa_status, Some(WaStatus::Contained));
    assert!(rec.witness.is_none());
}

#[test]
fn empty_stratum_has_no_status() {
    // degree 0 but above delta at the first vertex
    let rec = status(10, 4, "(1,0^(8),-1)");
    assert!(!rec.nonempty);
    assert_eq!(rec.wa_status, None);
    let err = stratum_status(&cfg(10, 4), &poly("(0)"), &mut ExtEngine::default());
    assert!(matches!(err, Err(Error::RankMismatch { .. })));
}

#[test]
fn rank_two_has_only_the_basic_stratum() {
    // (1/2, -1/2) is dominated by delta but its breakpoint is not integral,
    // so it is not a Newton point of GL_2.
    let c = cfg(2, 1);
    let report = stratification_report(&c, &mut ExtEngine::default()).unwrap();
    assert_eq!(report.records.len(), 1);
    assert_eq!(report.records[0].nu_b_prime, poly("(0^(2))"));
    assert_eq!(report.records[0].wa_status, Some(WaStatus::Contained));
    assert!(extension_union(&c, &mut ExtEngine::default()).unwrap().members.is_empty());
    assert!(!status(2, 1, "(1/2^(1),-1/2^(1))").nonempty);
}

#[test]
fn gl10_summary() {
    let report = stratification_report(&cfg(10, 4), &mut ExtEngine::default()).unwrap();
    let s = report.summary;
    assert_eq!((s.nonempty, s.contained, s.disjoint, s.proper_intersect), (26, 11, 3, 12));
    assert_eq!(s.hn_indecomposable, 23);
}

#[test]
fn report_agrees_with_single_stratum_queries() {
    for (n, r) in [(10, 4), (6, 2), (8, 4), (9, 3)] {
        let c = cfg(n, r);
        let report = stratification_report(&c, &mut ExtEngine::default()).unwrap();
        let mut engine = ExtEngine::default();
        for rec in &report.records {
            let single = stratum_status(&c, &rec.nu_b_prime, &mut engine).unwrap();
            assert_eq!(single.wa_status, rec.wa_status, "{n} {r} {}", rec.nu_b_prime);
            assert_eq!(single.witness.is_some(), rec.witness.is_some());
        }
    }
}

#[test]
fn structural_invariants_for_small_groups() {
    for n in 2..=9 {
        for r in 1..n {
            let c = cfg(n, r);
            let report = stratification_report(&c, &mut ExtEngine::default()).unwrap();
            let delta = c.delta();
            // records are exactly the members of the Kottwitz set, in decreasing order
            let members = brute_kottwitz(n, 0, &delta);
            assert_eq!(report.records.len(), members.len(), "n = {n}, r = {r}");
            assert!(report.records.windows(2).all(|w| w[0].nu_b_prime > w[1].nu_b_prime));
            let coprime = gcd_u64(n as u64, r as u64) == 1;
            for rec in &report.records {
                let st = rec.wa_status.expect("non-empty");
                assert_eq!(rec.hn_decomposable, st == WaStatus::Disjoint);
                assert_eq!(rec.witness.is_some(), st == WaStatus::ProperIntersect);
                if coprime {
                    assert_eq!(st, WaStatus::Contained);
                }
                if let Some(w) = &rec.witness {
                    let share = from_usize(w.m * r) / from_usize(n);
                    assert_eq!(w.sub.degree(), from_usize(w.s) - share.clone());
                    assert!(w.sub.degree() > int(0));
                    assert_eq!(w.quotient.degree(), share - from_usize(w.s));
                    assert!(ext_contains(&rec.nu_b_prime.bundle_vector(), &w.quotient, &w.sub).unwrap());
                    let split = c.mu_negative_splits(w.m).into_iter().find(|x| x.s == w.s).unwrap();
                    assert!(kottwitz_set(&split.first_query()).contains(&w.x1));
                    assert!(kottwitz_set(&split.second_query()).contains(&w.x2));
                }
            }
        }
    }
}
