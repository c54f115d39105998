//! Exterior shifts of the 5-cycle under every order that applies to graphs.

use algshift::combinatorics::{Family, TermOrder};
use algshift::dominance::GenericSource;
use algshift::shifting::exterior_shift;

fn main() -> algshift::Result<()> {
    let c5 = Family::from_lists(5, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])?;
    let src = GenericSource::with_seed(2024);
    println!("input: {c5}");
    for order in [TermOrder::Lex, TermOrder::RevLex, TermOrder::SumLex] {
        let r = exterior_shift(&c5, order, &src)?;
        println!(
            "{:>7}: {}  (shifted: {}, unanimous over {} trials: {})",
            order.name(),
            r.family,
            r.family.is_shifted(),
            r.trials,
            r.unanimous
        );
    }
    Ok(())
}
