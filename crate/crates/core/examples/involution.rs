//! Minimum edge counts under the involution condition, by exhaustive search.

use algshift::combinatorics::{turan_edge_count, Permutation};
use algshift::constructions::min_edges_involution;

fn main() -> algshift::Result<()> {
    println!(" n  transpositions  min |E|  |E(T(n))|  graphs examined");
    for n in 2..=6 {
        for t in 0..=n / 2 {
            let tau = Permutation::involution_with(n, t)?;
            let r = min_edges_involution(n, &tau, 6)?;
            println!(
                "{n:>2}  {t:>14}  {:>7}  {:>9}  {:>15}",
                r.min_edges,
                turan_edge_count(n),
                r.graphs_checked
            );
        }
    }
    Ok(())
}
