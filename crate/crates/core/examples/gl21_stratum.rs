//! A single GL_21 stratum, decided without building the full report.

use hn_strata::{poly, stratum_status, ExtEngine, StrataConfig};
use std::time::Instant;

fn main() -> hn_strata::Result<()> {
    let cfg = StrataConfig::new(21, 9)?;
    let nu = poly("(5/12^(12),-5/9^(9))");
    let start = Instant::now();
    let rec = stratum_status(&cfg, &nu, &mut ExtEngine::default())?;
    println!("{nu}: {:?} ({:.2?})", rec.wa_status, start.elapsed());
    println!("Levi reductions: {:?}", cfg.levi_reductions());
    Ok(())
}
