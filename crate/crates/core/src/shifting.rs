//! Exterior (algebraic) shifting and combinatorial shifting.

use std::cmp::Ordering;

use serde::Serialize;

use crate::combinatorics::{Family, KSet, Permutation, TermOrder};
use crate::constructions::is_mantel_cover;
use crate::dominance::{minor_unchecked, GenericSource};
use crate::error::{Error, Result};
use crate::linalg::{EchelonState, FieldMatrix, PrimeModulus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftResult {
    pub family: Family,
    pub shifted_flag: bool,
    pub trials: usize,
    /// Every trial produced the same family.
    pub unanimous: bool,
}

/// Greedy shift against an explicit invertible matrix: scan all k-sets in
/// `order`, keeping each one whose row of minors (against the columns `f`)
/// is independent of the rows kept so far.
pub fn exterior_shift_with(f: &Family, order: TermOrder, a: &FieldMatrix) -> Result<Family> {
    order.check_applicable(f.k())?;
    let n = f.n() as usize;
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if !a.is_invertible() {
        return Err(Error::Singular);
    }
    let cols: Vec<KSet> = f.iter().collect();
    let mut out = Family::empty(f.n(), f.k())?;
    if cols.is_empty() {
        return Ok(out);
    }
    let mut state = EchelonState::new(cols.len(), a.modulus());
    let mut row = vec![0u64; cols.len()];
    for t in order.sorted_ksets(f.n(), f.k())? {
        for (x, &c) in row.iter_mut().zip(&cols) {
            *x = minor_unchecked(a, t, c);
        }
        if state.insert(&row)? {
            out.insert_unchecked(t);
            if state.is_full() {
                break;
            }
        }
    }
    debug_assert_eq!(out.len(), f.len());
    Ok(out)
}

/// Generic shift: the order-smallest greedy result over the source's trials.
pub fn exterior_shift(f: &Family, order: TermOrder, src: &GenericSource) -> Result<ShiftResult> {
    order.check_applicable(f.k())?;
    let mut best: Option<Family> = None;
    let mut unanimous = true;
    for t in 0..src.trials {
        let g = exterior_shift_with(f, order, &src.matrix(f.n(), t))?;
        best = Some(match best {
            None => g,
            Some(b) => match g.order_compare(&b, order)? {
                Ordering::Equal => b,
                Ordering::Less => {
                    unanimous = false;
                    g
                }
                Ordering::Greater => {
                    unanimous = false;
                    b
                }
            },
        });
    }
    let family = best.expect("at least one trial");
    Ok(ShiftResult {
        shifted_flag: family.is_shifted(),
        family,
        trials: src.trials,
        unanimous,
    })
}

/// `sh_ij`: replace `j` by `i` in every member containing `j` but not `i`,
/// unless the replacement is already present.
pub fn comb_shift_step(f: &Family, i: u32, j: u32) -> Result<Family> {
    if i == 0 || i >= j || j > f.n() {
        return Err(Error::InvalidArgument(format!(
            "pivot ({i}, {j}) needs 1 <= i < j <= {}",
            f.n()
        )));
    }
    let mut out = Family::empty(f.n(), f.k())?;
    for s in f.iter() {
        let moved = if s.contains(j) && !s.contains(i) {
            s.replace(j, i).filter(|t| !f.contains(*t))
        } else {
            None
        };
        out.insert_unchecked(moved.unwrap_or(s));
    }
    Ok(out)
}

/// Combinatorial shifting. Explicit pivots are applied in order; otherwise
/// all `(i, j)` are swept in lexicographic order until nothing moves. The
/// log lists the pivots that changed the family.
pub fn comb_shift(f: &Family, pivots: Option<&[(u32, u32)]>) -> Result<(Family, Vec<(u32, u32)>)> {
    let mut cur = f.clone();
    let mut log = Vec::new();
    let mut apply = |cur: &mut Family, i: u32, j: u32| -> Result<bool> {
        let next = comb_shift_step(cur, i, j)?;
        let moved = next != *cur;
        if moved {
            log.push((i, j));
            *cur = next;
        }
        Ok(moved)
    };
    match pivots {
        Some(ps) => {
            for &(i, j) in ps {
                apply(&mut cur, i, j)?;
            }
        }
        None => loop {
            let mut moved = false;
            for i in 1..f.n() {
                for j in i + 1..=f.n() {
                    moved |= apply(&mut cur, i, j)?;
                }
            }
            if !moved {
                break;
            }
        },
    }
    Ok((cur, log))
}

/// Relabeling for a Mantel cover: repeatedly give the two largest free labels
/// to a nonadjacent pair of the remaining vertices (first such pair in
/// vertex order); once the rest is complete, label it in input order.
pub fn turan_labeling(g: &Family) -> Result<Permutation> {
    if let Some(w) = is_mantel_cover(g)?.witness() {
        return Err(Error::PredicateViolated { witness: w.set });
    }
    let n = g.n();
    let adj = g.adjacency();
    let mut images = vec![0u32; n as usize];
    let mut rest: Vec<u32> = (1..=n).collect();
    let mut top = n;
    'outer: while rest.len() >= 2 {
        for (x, &u) in rest.iter().enumerate() {
            for &v in &rest[x + 1..] {
                if adj[(u - 1) as usize] >> (v - 1) & 1 == 0 {
                    images[(u - 1) as usize] = top - 1;
                    images[(v - 1) as usize] = top;
                    top -= 2;
                    rest.retain(|&w| w != u && w != v);
                    continue 'outer;
                }
            }
        }
        break;
    }
    for (label, &v) in rest.iter().enumerate() {
        images[(v - 1) as usize] = label as u32 + 1;
    }
    Permutation::new(images)
}

/// `P(m) = P(m-2), sh_{1,m-1}, …, sh_{m-2,m-1}, sh_{1,m}, …, sh_{m-1,m}`,
/// with `P(2) = sh_12` and `P(1) = P(0)` empty.
///
/// The closing `sh_{m-1,m}` at every level is needed: without it an edge
/// `{a, m}` can be stranded while `{a, m-1}` stays empty.
pub fn turan_pivots(m: u32) -> Vec<(u32, u32)> {
    if m <= 1 {
        return Vec::new();
    }
    if m == 2 {
        return vec![(1, 2)];
    }
    let mut out = turan_pivots(m - 2);
    out.extend((1..=m - 2).map(|i| (i, m - 1)));
    out.extend((1..=m - 1).map(|i| (i, m)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuranShift {
    pub labeling: Permutation,
    pub relabeled: Family,
    pub family: Family,
}

/// Relabels by `turan_labeling`, then applies `turan_pivots(n)`.
pub fn comb_shift_turan(g: &Family) -> Result<TuranShift> {
    let labeling = turan_labeling(g)?;
    let relabeled = g.apply_permutation(&labeling)?;
    let (family, _) = comb_shift(&relabeled, Some(&turan_pivots(g.n())))?;
    Ok(TuranShift {
        labeling,
        relabeled,
        family,
    })
}

/// `φ(e_j) = e_i + e_j`, all other basis vectors fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementaryMap {
    pub n: u32,
    pub i: u32,
    pub j: u32,
}

impl ElementaryMap {
    pub fn new(n: u32, i: u32, j: u32) -> Result<Self> {
        if i == 0 || i >= j || j > n {
            return Err(Error::InvalidArgument(format!(
                "elementary map ({i}, {j}) needs 1 <= i < j <= {n}"
            )));
        }
        Ok(ElementaryMap { n, i, j })
    }
}

/// Identity plus a unit entry in row `i`, column `j`.
pub fn elementary_shift_matrix(m: ElementaryMap, modulus: PrimeModulus) -> FieldMatrix {
    let mut a = FieldMatrix::identity(m.n as usize, modulus);
    a.set((m.i - 1) as usize, (m.j - 1) as usize, 1);
    a
}

/// `|{T ∈ K : T ≤ S}|` with `≤` the term order.
pub fn m_value(order: TermOrder, s: KSet, k: &Family) -> Result<usize> {
    if s.k() != k.k() {
        return Err(Error::SizeMismatch {
            left: s.k(),
            right: k.k(),
        });
    }
    order.check_applicable(s.k())?;
    Ok(k.iter()
        .filter(|&t| order.cmp_unchecked(t, s) != Ordering::Greater)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{b_family, turan_graph};
    use crate::constructions::complement_graph;
    use crate::linalg::random_invertible;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: PrimeModulus = PrimeModulus::MERSENNE_61;

    fn ks(v: &[u32]) -> KSet {
        KSet::from_sorted(v).unwrap()
    }

    fn fam(n: u32, k: usize, lists: &[&[u32]]) -> Family {
        Family::from_lists(n, k, lists).unwrap()
    }

    fn c5() -> Family {
        fam(5, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])
    }

    #[test]
    fn c5_shifts() {
        let src = GenericSource::with_seed(7);
        let lex = exterior_shift(&c5(), TermOrder::Lex, &src).unwrap();
        assert_eq!(lex.family, fam(5, 2, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3]]));
        assert!(lex.unanimous && lex.shifted_flag);
        let rl = exterior_shift(&c5(), TermOrder::RevLex, &src).unwrap();
        assert_eq!(rl.family, fam(5, 2, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
        assert!(rl.unanimous && rl.shifted_flag);
    }

    #[test]
    fn shifted_families_are_fixed() {
        let b8 = b_family(8).unwrap();
        let r = exterior_shift(&b8, TermOrder::SumLex, &GenericSource::with_seed(1)).unwrap();
        assert_eq!(r.family, b8);
        let g1 = fam(5, 2, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3]]);
        let r = exterior_shift(&g1, TermOrder::Lex, &GenericSource::with_seed(2)).unwrap();
        assert_eq!(r.family, g1);
    }

    #[test]
    fn single_edge_goes_to_12() {
        for seed in 0..4 {
            let e = fam(6, 2, &[&[4, 6]]);
            let r = exterior_shift(&e, TermOrder::Lex, &GenericSource::with_seed(seed)).unwrap();
            assert_eq!(r.family, fam(6, 2, &[&[1, 2]]));
        }
    }

    #[test]
    fn singular_and_mismatched_matrices() {
        let z = FieldMatrix::zeros(5, 5, P);
        assert!(matches!(exterior_shift_with(&c5(), TermOrder::Lex, &z), Err(Error::Singular)));
        let id = FieldMatrix::identity(4, P);
        assert!(exterior_shift_with(&c5(), TermOrder::Lex, &id).is_err());
        assert!(exterior_shift_with(&c5(), TermOrder::CTriple, &FieldMatrix::identity(5, P)).is_err());
    }

    #[test]
    fn identity_matrix_shift_is_identity() {
        let f = fam(6, 3, &[&[1, 4, 6], &[2, 3, 5], &[3, 5, 6]]);
        let r = exterior_shift_with(&f, TermOrder::Lex, &FieldMatrix::identity(6, P)).unwrap();
        assert_eq!(r, f);
    }

    #[test]
    fn elementary_map_matches_sh_ij_on_singletons() {
        let m = ElementaryMap::new(2, 1, 2).unwrap();
        let a = elementary_shift_matrix(m, P);
        assert_eq!(a, FieldMatrix::from_rows(&[vec![1, 1], vec![0, 1]], P).unwrap());
        assert_eq!(a.det().unwrap(), 1);

        let phi = elementary_shift_matrix(ElementaryMap::new(3, 1, 2).unwrap(), P);
        let f = fam(3, 2, &[&[2, 3]]);
        assert_eq!(
            exterior_shift_with(&f, TermOrder::Lex, &phi).unwrap(),
            comb_shift_step(&f, 1, 2).unwrap()
        );
        for n in 3..=5u32 {
            for k in 1..=2usize {
                for s in Family::complete(n, k).unwrap().iter() {
                    let single = Family::from_sets(n, k, [s]).unwrap();
                    for i in 1..n {
                        for j in i + 1..=n {
                            let phi = elementary_shift_matrix(ElementaryMap::new(n, i, j).unwrap(), P);
                            assert_eq!(
                                exterior_shift_with(&single, TermOrder::Lex, &phi).unwrap(),
                                comb_shift_step(&single, i, j).unwrap(),
                                "{s} under ({i},{j})"
                            );
                        }
                    }
                }
            }
        }
        assert!(ElementaryMap::new(3, 2, 2).is_err());
    }

    #[test]
    fn sh_ij_examples() {
        let f = fam(3, 2, &[&[2, 3]]);
        assert_eq!(comb_shift_step(&f, 1, 2).unwrap(), fam(3, 2, &[&[1, 3]]));
        let blocked = fam(3, 2, &[&[1, 3], &[2, 3]]);
        assert_eq!(comb_shift_step(&blocked, 1, 2).unwrap(), blocked);
        assert_eq!(comb_shift_step(&c5(), 1, 3).unwrap().len(), 5);
        assert!(comb_shift_step(&f, 2, 2).is_err());
        assert!(comb_shift_step(&f, 3, 2).is_err());
    }

    #[test]
    fn comb_shift_sweeps() {
        let (g, log) = comb_shift(&c5(), None).unwrap();
        assert!(g.is_shifted());
        assert_eq!(g.len(), 5);
        assert!(!log.is_empty());
        let (g, log) = comb_shift(&fam(3, 2, &[&[2, 3]]), None).unwrap();
        assert_eq!(g, fam(3, 2, &[&[1, 2]]));
        assert!(!log.is_empty());
        let b6 = b_family(6).unwrap();
        let (g, log) = comb_shift(&b6, None).unwrap();
        assert_eq!(g, b6);
        assert!(log.is_empty());
        let (g, log) = comb_shift(&c5(), Some(&[(1, 3)])).unwrap();
        assert_eq!(g, comb_shift_step(&c5(), 1, 3).unwrap());
        assert_eq!(log, vec![(1, 3)]);
    }

    #[test]
    fn turan_pivot_composition() {
        assert!(turan_pivots(1).is_empty());
        assert_eq!(turan_pivots(2), vec![(1, 2)]);
        assert_eq!(turan_pivots(3), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            turan_pivots(5),
            vec![
                (1, 2),
                (1, 3),
                (2, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (1, 5),
                (2, 5),
                (3, 5),
                (4, 5)
            ]
        );
    }

    #[test]
    fn turan_labeling_examples() {
        let k5 = Family::complete(5, 2).unwrap();
        assert!(turan_labeling(&k5).unwrap().is_identity());
        let lonely = Family::empty(2, 2).unwrap();
        let p = turan_labeling(&lonely).unwrap();
        assert_eq!(p.apply_set(ks(&[1, 2])), ks(&[1, 2]));

        let g = complement_graph(&fam(6, 2, &[&[1, 4], &[2, 5], &[3, 6], &[1, 5]])).unwrap();
        let p = turan_labeling(&g).unwrap();
        let top = KSet::from_sorted(&[5, 6]).unwrap();
        let h = g.apply_permutation(&p).unwrap();
        assert!(!h.contains(top));

        let matching = fam(6, 2, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert!(matches!(turan_labeling(&matching), Err(Error::PredicateViolated { .. })));
    }

    #[test]
    fn turan_shift_contains_b() {
        let k4 = Family::complete(4, 2).unwrap();
        assert!(b_family(4).unwrap().is_subset_of(&comb_shift_turan(&k4).unwrap().family));
        let pm = complement_graph(&fam(6, 2, &[&[1, 2], &[3, 4], &[5, 6]])).unwrap();
        assert!(is_mantel_cover(&pm).unwrap().holds());
        assert!(b_family(6).unwrap().is_subset_of(&comb_shift_turan(&pm).unwrap().family));
        let t6 = turan_graph(6).unwrap();
        let r = comb_shift_turan(&t6).unwrap();
        assert_eq!(r.family, b_family(6).unwrap());
    }

    #[test]
    fn m_value_examples() {
        let k = fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(m_value(TermOrder::Lex, ks(&[1, 3]), &k).unwrap(), 2);
        assert_eq!(m_value(TermOrder::Lex, ks(&[2, 3]), &k).unwrap(), 3);
        let k2 = fam(3, 2, &[&[1, 3], &[2, 3]]);
        assert_eq!(m_value(TermOrder::RevLex, ks(&[1, 2]), &k2).unwrap(), 0);
        assert!(m_value(TermOrder::Lex, ks(&[1]), &k).is_err());
    }

    #[test]
    fn k1_shift() {
        let f = fam(5, 1, &[&[3], &[5]]);
        let r = exterior_shift(&f, TermOrder::Lex, &GenericSource::with_seed(3)).unwrap();
        assert_eq!(r.family, fam(5, 1, &[&[1], &[2]]));
    }

    #[test]
    fn random_matrix_greedy_sizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = fam(6, 3, &[&[1, 2, 6], &[2, 4, 5], &[3, 5, 6], &[1, 3, 4]]);
        for order in [TermOrder::Lex, TermOrder::RevLex, TermOrder::SumLex, TermOrder::CTriple] {
            let a = random_invertible(6, &mut rng, P);
            let g = exterior_shift_with(&f, order, &a).unwrap();
            assert_eq!(g.len(), f.len());
            assert!(g.is_shifted(), "{order}");
        }
    }
}
