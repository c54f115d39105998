//! Dominance between graphs, and how it tracks connectivity against a star.

use algshift::combinatorics::{star, Family};
use algshift::constructions::{is_acyclic, is_connected};
use algshift::dominance::{dominates, rank_r, weakly_isomorphic, GenericSource};

fn main() -> algshift::Result<()> {
    let src = GenericSource::with_seed(7);
    let s = star(6, 2, 1)?;
    let graphs = [
        ("path", Family::from_lists(6, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6]])?),
        ("two triangles", Family::from_lists(6, 2, &[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6]])?),
        ("hexagon", Family::from_lists(6, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]])?),
    ];
    for (name, g) in &graphs {
        let over = dominates(g, &s, &src)?;
        let under = dominates(&s, g, &src)?;
        println!(
            "{name:>13}: connected={} acyclic={}  G dominates star: {:?}  star dominates G: {:?}",
            is_connected(g),
            is_acyclic(g),
            over.outcome,
            under.outcome
        );
    }

    let (fwd, bwd) = weakly_isomorphic(&graphs[0].1, &s, &src)?;
    println!("path ~ star: {:?} / {:?}", fwd.outcome, bwd.outcome);

    for r in 1..=3 {
        let rep = rank_r(&graphs[2].1, r, &src)?;
        println!("hexagon rank_{r} = {} ({} x {})", rep.rank, rep.rows, rep.cols);
    }
    Ok(())
}
