//! Integral polygons squeezed between two given ones.

use hn_strata::interpolate::is_valid_interpolant;
use hn_strata::{interpolate_constant, interpolate_general, interpolate_shifted, poly};
use num::BigInt;

fn main() -> hn_strata::Result<()> {
    let a = poly("(1/2^(2),0^(2))");
    let c = poly("(0^(4))");
    for m in 0..=1 {
        let m = BigInt::from(m);
        let b = interpolate_general(&a, &c, &m)?;
        println!("between {c} and {a}, degree {m}: {b} (valid: {})", is_valid_interpolant(&a, &c, &m, &b));
    }

    // A constant lower bound of fractional degree.
    let c = poly("(-1/8^(4))");
    let b = interpolate_constant(&a, &c, &BigInt::from(0))?;
    println!("between {c} and {a}, degree 0: {b}");

    // The lower bound only constrains the coordinates after the first two.
    let b = interpolate_shifted(&poly("(1,1/2^(2),0)"), &poly("(0^(2))"), 2, &BigInt::from(1))?;
    println!("shifted by 2, degree 1: {b}");

    match interpolate_general(&poly("(4/7^(2),0)"), &poly("(5/9^(2),-1)"), &BigInt::from(1)) {
        Ok(b) => println!("unexpected interpolant {b}"),
        Err(e) => println!("no interpolant for the rank-3 obstruction: {e}"),
    }
    Ok(())
}
