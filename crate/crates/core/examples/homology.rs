//! Reduced Betti numbers of K(H) and their relation to the shifted complex.

use algshift::combinatorics::Family;
use algshift::constructions::random_turan_hypergraph;
use algshift::dominance::GenericSource;
use algshift::homology::{complex_of, homology_shift_check, reduced_betti, reduced_euler_characteristic};

fn main() -> algshift::Result<()> {
    let src = GenericSource::with_seed(11);
    let examples = [
        ("5-cycle", Family::from_lists(5, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])?),
        ("two edges", Family::from_lists(4, 2, &[&[1, 2], &[3, 4]])?),
        ("octahedron", Family::from_lists(6, 3, &[
            &[1, 2, 3], &[1, 2, 4], &[1, 3, 5], &[1, 4, 5],
            &[2, 3, 6], &[2, 4, 6], &[3, 5, 6], &[4, 5, 6],
        ])?),
        ("random Turán, n=7", random_turan_hypergraph(7, 5)?),
    ];
    for (name, h) in &examples {
        let c = complex_of(h);
        let b = reduced_betti(&c);
        let check = homology_shift_check(&c, &src)?;
        println!("{name}: betti {:?}, reduced euler {}", b.betti, reduced_euler_characteristic(&c));
        for d in &check.dims {
            println!(
                "   dim {}: betti {} vs {} shifted faces outside the apex cone",
                d.dim, d.betti, d.shifted_count
            );
        }
    }
    Ok(())
}
