//! Mantel covers: domination of B(n), and both shifts containing it.

use algshift::combinatorics::{b_family, TermOrder};
use algshift::constructions::{enumerate_mantel_covers, random_mantel_cover};
use algshift::dominance::{dominates, GenericSource};
use algshift::shifting::{comb_shift_turan, exterior_shift};

fn main() -> algshift::Result<()> {
    let src = GenericSource::with_seed(1);
    for n in 3..=6 {
        let b = b_family(n)?;
        let (mut total, mut ok) = (0, 0);
        for g in enumerate_mantel_covers(n)? {
            total += 1;
            let shifted = exterior_shift(&g, TermOrder::SumLex, &src)?.family;
            if dominates(&g, &b, &src)?.is_yes() && b.is_subset_of(&shifted) {
                ok += 1;
            }
        }
        println!("n={n}: {ok}/{total} covers dominate B(n) and shift above it");
    }

    let g = random_mantel_cover(8, 99)?;
    let t = comb_shift_turan(&g)?;
    println!("random cover on 8 vertices: {g}");
    println!("  relabeled by {:?}", t.labeling.images());
    println!("  combinatorial shift: {}", t.family);
    println!("  contains B(8): {}", b_family(8)?.is_subset_of(&t.family));
    Ok(())
}
