//! GL_14 with r = 6: summary counts and the extensions that do not split.
//!
//! Takes well under a second with `--release`.

use hn_strata::{extension_union, stratification_report, ExtEngine, StrataConfig, WaStatus};

fn main() -> hn_strata::Result<()> {
    let cfg = StrataConfig::new(14, 6)?;
    let mut engine = ExtEngine::default();
    let report = stratification_report(&cfg, &mut engine)?;
    println!("{:?}", report.summary);

    let proper: Vec<_> = report.records.iter().filter(|r| r.wa_status == Some(WaStatus::ProperIntersect)).collect();
    println!("{} strata meet the weakly admissible locus properly, e.g.", proper.len());
    for rec in proper.iter().take(5) {
        println!("    {}", rec.nu_b_prime);
    }

    let union = extension_union(&cfg, &mut engine)?;
    println!("non-split extension vectors ({} of {} in the union):", union.non_split().len(), union.members.len());
    for v in union.non_split() {
        println!("    {v}");
    }
    Ok(())
}
