//! Full weakly admissible stratification report for GL_10 with a rank-4
//! minuscule cocharacter.

use hn_strata::{stratification_report, ExtEngine, StrataConfig};

fn main() -> hn_strata::Result<()> {
    let cfg = StrataConfig::new(10, 4)?;
    let report = stratification_report(&cfg, &mut ExtEngine::default())?;
    println!("delta = {}, Levi reductions at {:?}", report.delta, report.levi_reductions);
    for rec in &report.records {
        let status = rec.wa_status.map(|s| format!("{s:?}")).unwrap_or_else(|| "empty".into());
        print!("{:<32} {status}", rec.nu_b_prime.to_string());
        if let Some(w) = &rec.witness {
            print!("  via m = {}, s = {}: {} by {}", w.m, w.s, w.quotient, w.sub);
        }
        println!();
    }
    println!("{:?}", report.summary);
    Ok(())
}
