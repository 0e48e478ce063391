//! A triple where the slope-partition condition has a witness but the
//! vector is still not an extension.

use hn_strata::{ext_contains, poly, tilde_ext_contains};

fn main() -> hn_strata::Result<()> {
    let a = poly("(1,5/7^(7),4/7^(7),0)");
    let c = poly("(3,3/5^(5))");
    let d = poly("(5/9^(9),-1)");

    let witness = tilde_ext_contains(&a, &c, &d)?.expect("partition witness exists");
    println!("a = {a}\nc = {c}\nd = {d}");
    println!("positions of a assigned to d: {:?}", witness.h_positions);
    println!("witness verifies: {}", witness.verify(&a));
    println!("a is an extension of c by d: {}", ext_contains(&a, &c, &d)?);
    Ok(())
}
