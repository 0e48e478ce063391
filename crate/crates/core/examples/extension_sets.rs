//! Which slope vectors arise as extensions of one bundle by another.

use hn_strata::{ext_contains, ext_enumerate, ext_semistable_pair, poly, tilde_ext_contains};

fn main() -> hn_strata::Result<()> {
    let (c, d) = (poly("(0,-1/6^(6))"), poly("(-1/3^(3))"));
    println!("Ext({c}, {d}):");
    for a in ext_enumerate(&c, &d) {
        println!("    {a}");
    }

    // Both sides semistable: the answer comes from a direct lattice-path
    // description rather than the recursive peeling.
    let (c, d) = (poly("(-1/6^(6))"), poly("(0)"));
    println!("Ext({c}, {d}) = {:?}", ext_semistable_pair(&c, &d)?.iter().map(ToString::to_string).collect::<Vec<_>>());

    let a = poly("(0,-1/5^(5),-1/4^(4))");
    let (c, d) = (poly("(0,-1/6^(6))"), poly("(-1/3^(3))"));
    println!("{a} in Ext({c}, {d}): {}", ext_contains(&a, &c, &d)?);
    if let Some(w) = tilde_ext_contains(&a, &c, &d)? {
        println!("  partition witness, positions taken from d: {:?}", w.h_positions);
    }
    Ok(())
}
