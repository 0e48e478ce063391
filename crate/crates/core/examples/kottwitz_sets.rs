//! Enumerates the six rank-7 sets B(GL_7, k, delta) that appear as Levi
//! blocks of the GL_14 stratification, and checks the duality involution.

use hn_strata::{basic_element, involution_check, is_hn_decomposable, kottwitz_set, poly, KottwitzQuery};

fn main() -> hn_strata::Result<()> {
    let cases = [
        (-1, "(3/7^(3),-4/7^(4))"),
        (1, "(3/7^(5),-4/7^(2))"),
        (-2, "(3/7^(2),-4/7^(5))"),
        (2, "(3/7^(6),-4/7^(1))"),
        (-3, "(3/7^(1),-4/7^(6))"),
        (3, "(3/7^(7))"),
    ];
    for (k, delta) in cases {
        let q = KottwitzQuery::new(7, k, poly(delta))?;
        let set = kottwitz_set(&q);
        println!("B(GL_7, {k}, {delta}): {} elements, basic {}, involution ok: {}", set.len(), basic_element(&q)?, involution_check(&q));
        for v in &set {
            let tag = if is_hn_decomposable(v, &q.delta)? { "  (HN-decomposable)" } else { "" };
            println!("    {v}{tag}");
        }
    }
    Ok(())
}
