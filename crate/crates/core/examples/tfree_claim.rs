//! Y(X) for triangle-free X: edge counts against |E(X)| - floor(m/2).

use algshift::combinatorics::{Family, KSet};
use algshift::constructions::{claim_tfree_check, random_triangle_free};

fn main() -> algshift::Result<()> {
    for (m, seed) in [(6, 1), (9, 2), (12, 3)] {
        let x = random_triangle_free(m, seed)?;
        let c = claim_tfree_check(&x)?;
        println!("m={m:>2} |E(X)|={:>2} |E(Y)|={:>2} holds={} tight={}", c.edges_x, c.edges_y, c.holds, c.is_tight());
    }
    let matching = Family::from_sets(8, 2, (1..=4).map(|i| KSet::pair(2 * i - 1, 2 * i).unwrap()))?;
    let c = claim_tfree_check(&matching)?;
    println!("perfect matching on 8: |E(Y)|={} tight={}", c.edges_y, c.is_tight());
    Ok(())
}
