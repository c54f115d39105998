//! Combinatorial shifting, one pivot at a time and to a fixed point.

use algshift::combinatorics::Family;
use algshift::shifting::{comb_shift, comb_shift_step, turan_pivots};

fn main() -> algshift::Result<()> {
    let g = Family::from_lists(5, 2, &[&[2, 3], &[3, 4], &[4, 5], &[2, 5]])?;
    println!("start      {g}");
    let step = comb_shift_step(&g, 1, 2)?;
    println!("sh_12      {step}");

    let (fixed, log) = comb_shift(&g, None)?;
    println!("fixed      {fixed}  (shifted: {})", fixed.is_shifted());
    println!("moves      {log:?}");

    let pivots = turan_pivots(5);
    let (t, _) = comb_shift(&g, Some(&pivots))?;
    println!("pivots     {pivots:?}");
    println!("along them {t}");
    Ok(())
}
