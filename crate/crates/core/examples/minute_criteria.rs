//! Tabulates the minute criteria for minuscule cocharacters.

use hn_strata::minute::{fully_hn_gl, fully_hn_type_a, weakly_fully_hn_gl, weakly_fully_hn_type_a, MinuteQueryGL, MinuteQueryTypeA};

fn main() -> hn_strata::Result<()> {
    println!("GL_n, mu = (1^(r), 0^(n-r)): F = fully, W = weakly fully HN-decomposable");
    for n in 2..=10 {
        let row: String = (1..n)
            .map(|r| {
                let q = MinuteQueryGL::minuscule(n, r);
                match (fully_hn_gl(&q).holds, weakly_fully_hn_gl(&q).holds) {
                    (true, _) => 'F',
                    (false, true) => 'W',
                    _ => '.',
                }
            })
            .collect();
        println!("  n = {n:>2}: {row}");
    }

    let n = 5;
    println!("type A_{n}, rows i, columns i' = 0..{n}");
    for i in 1..=n {
        let mut row = String::new();
        for ip in 0..=n {
            let q = MinuteQueryTypeA::new(n, i, ip)?;
            row.push(match (fully_hn_type_a(&q).holds, weakly_fully_hn_type_a(&q).holds) {
                (true, _) => 'F',
                (false, true) => 'W',
                _ => '.',
            });
        }
        println!("  i = {i}: {row}");
    }
    Ok(())
}
