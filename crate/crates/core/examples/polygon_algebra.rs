//! Parsing, formatting and the basic operations on slope polygons.
//!
//! Run with `cargo run --example polygon_algebra`.

use hn_strata::{parse, poly};

fn main() -> hn_strata::Result<()> {
    // An omitted exponent means "as many copies as the denominator", so
    // `3/5` is a stable block of rank 5 and degree 3.
    let p = parse("(3,3/5)")?;
    println!("p          = {p}  (rank {}, degree {})", p.rank(), p.degree());
    println!("dual       = {}", p.dual());
    println!("vertices   = {:?}", p.vertices().iter().map(|(x, y)| format!("({x}, {y})")).collect::<Vec<_>>());
    println!("breakpoints= {:?}", p.breakpoints());

    let q = poly("(1^(6))");
    println!("p <= q     : {}", p.leq_dominance(&q)?);
    println!("q <= p     : {}", q.leq_dominance(&p)?);

    let s = p.direct_sum(&poly("(1/2^(2))"));
    println!("p + O(1/2) = {s}");
    println!("bundle vec = {}", s.bundle_vector());

    if let Some((rest, last)) = s.split_last_stable() {
        println!("last stable piece {last} splits off, leaving {rest}");
    }

    match parse("(1/2,1)") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected (1/2,1): {e}"),
    }
    Ok(())
}
