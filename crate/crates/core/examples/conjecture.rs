//! The (3,4) construction against C(n): sizes, Turán property, dominance.

use algshift::combinatorics::{c_family, h_value, TermOrder};
use algshift::constructions::{is_turan_hypergraph, turan_34_hypergraph};
use algshift::dominance::{dominates, GenericSource};
use algshift::shifting::exterior_shift;

fn main() -> algshift::Result<()> {
    let src = GenericSource::with_seed(3);
    println!(" n  |H|  h(n)  turan  H dominates C(n)  C(n) initial in <_c  C(n) in <_c shift");
    for n in 4..=11 {
        let h = turan_34_hypergraph(n, None)?;
        let c = c_family(n)?;
        let v = dominates(&h, &c, &src)?;
        let sc = exterior_shift(&h, TermOrder::CTriple, &src)?.family;
        let initial = TermOrder::CTriple.sorted_ksets(n, 3)?.iter().take(c.len()).all(|s| c.contains(*s));
        println!(
            "{n:>2}  {:>3}  {:>4}  {:>5}  {:>16}  {:>18}  {}",
            h.len(),
            h_value(n),
            is_turan_hypergraph(&h)?.holds(),
            format!("{:?}", v.outcome),
            initial,
            c.is_subset_of(&sc)
        );
    }
    Ok(())
}
