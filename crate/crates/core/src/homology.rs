//! Reduced rational homology of `K(H)`: the complex whose top faces are the
//! members of a k-uniform family, over the complete (k-2)-skeleton.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{k_subsets, star, Family, KSet, TermOrder};
use crate::dominance::{dominates, GenericSource, Verdict};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::shifting::exterior_shift;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformComplex {
    top: Family,
}

pub fn complex_of(h: &Family) -> UniformComplex {
    UniformComplex { top: h.clone() }
}

impl UniformComplex {
    pub fn n(&self) -> u32 {
        self.top.n()
    }

    pub fn k(&self) -> usize {
        self.top.k()
    }

    /// Top dimension, `k - 1`.
    pub fn dim(&self) -> usize {
        self.k() - 1
    }

    pub fn top_faces(&self) -> &Family {
        &self.top
    }

    /// Faces of dimension `d` (vertex sets of size `d + 1`) in lex order.
    pub fn faces(&self, d: usize) -> Vec<KSet> {
        match (d + 1).cmp(&self.k()) {
            std::cmp::Ordering::Less => k_subsets(self.n(), d + 1).collect(),
            std::cmp::Ordering::Equal => self.top.iter().collect(),
            std::cmp::Ordering::Greater => Vec::new(),
        }
    }

    pub fn face_count(&self, d: usize) -> usize {
        if d + 1 < self.k() {
            crate::combinatorics::binomial(self.n() as u64, d as u64 + 1) as usize
        } else if d + 1 == self.k() {
            self.top.len()
        } else {
            0
        }
    }

    /// Membership of an arbitrary vertex set; the empty set is always a face.
    pub fn contains_mask(&self, mask: u64) -> bool {
        let size = mask.count_ones() as usize;
        if size < self.k() {
            let n = self.n();
            let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
            mask & !full == 0
        } else if size == self.k() {
            KSet::from_mask(mask).is_ok_and(|s| self.top.contains(s))
        } else {
            false
        }
    }
}

/// `∂_i` with rows the (i-1)-faces and columns the i-faces; `∂_0` is the
/// augmentation row of ones. Removing the `j`-th smallest vertex (from 0)
/// carries the sign `(-1)^j`.
pub fn boundary_matrix(c: &UniformComplex, i: usize) -> Result<IntMatrix> {
    if i > c.dim() {
        return Err(Error::InvalidArgument(format!(
            "boundary index {i} above the top dimension {}",
            c.dim()
        )));
    }
    let cols = c.faces(i);
    if i == 0 {
        let mut m = IntMatrix::zeros(1, cols.len());
        for j in 0..cols.len() {
            m.set(0, j, 1);
        }
        return Ok(m);
    }
    let rows = c.faces(i - 1);
    let index: BTreeMap<u64, usize> = rows.iter().enumerate().map(|(r, s)| (s.mask(), r)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (col, face) in cols.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let r = index[&(face.mask() & !(1u64 << (v - 1)))];
            m.set(r, col, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    /// `dim H̃_i` for `i = -1, 0, …, k-1`.
    pub betti: BTreeMap<i32, usize>,
    /// `rank ∂_i` for `i = 0, …, k-1`.
    pub boundary_ranks: Vec<usize>,
}

impl BettiReport {
    pub fn get(&self, i: i32) -> usize {
        self.betti.get(&i).copied().unwrap_or(0)
    }
}

pub fn reduced_betti(c: &UniformComplex) -> BettiReport {
    let top = c.dim();
    let ranks: Vec<usize> = (0..=top)
        .into_par_iter()
        .map(|i| boundary_matrix(c, i).expect("index in range").rank())
        .collect();
    let rank = |i: usize| ranks.get(i).copied().unwrap_or(0);
    let mut betti = BTreeMap::new();
    betti.insert(-1, 1 - rank(0));
    for i in 0..=top {
        betti.insert(i as i32, c.face_count(i) - rank(i) - rank(i + 1));
    }
    BettiReport {
        betti,
        boundary_ranks: ranks,
    }
}

/// `Σ_{i ≥ -1} (-1)^i f_i` with `f_{-1} = 1`.
pub fn reduced_euler_characteristic(c: &UniformComplex) -> i64 {
    let mut chi = -1i64;
    for i in 0..=c.dim() {
        let f = c.face_count(i) as i64;
        chi += if i % 2 == 0 { f } else { -f };
    }
    chi
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCheck {
    pub dim: usize,
    pub betti: usize,
    /// Faces `F` of the shifted complex, `|F| = dim + 1`, with `{1} ∪ F`
    /// outside the shifted complex.
    pub shifted_count: usize,
    /// Same count, testing `{1} ∪ F` against the original complex.
    pub original_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyShiftCheck {
    pub dims: Vec<DimensionCheck>,
    pub shifted_top: Family,
    pub unanimous: bool,
}

impl HomologyShiftCheck {
    pub fn holds(&self) -> bool {
        self.dims.iter().all(|d| d.betti == d.shifted_count)
    }

    pub fn readings_diverge(&self) -> bool {
        self.dims.iter().any(|d| d.shifted_count != d.original_count)
    }
}

/// Compares `dim H̃_i` with the face count read off the lex shift, in every
/// dimension. Lower skeleta are complete and shift to themselves, so the
/// shifted complex is `K` of the shifted top faces.
pub fn homology_shift_check(c: &UniformComplex, src: &GenericSource) -> Result<HomologyShiftCheck> {
    let betti = reduced_betti(c);
    let shift = exterior_shift(c.top_faces(), TermOrder::Lex, src)?;
    let shifted = complex_of(&shift.family);
    let dims = (0..=c.dim())
        .map(|i| {
            let mut shifted_count = 0;
            let mut original_count = 0;
            for f in shifted.faces(i) {
                let coned = f.mask() | 1;
                shifted_count += usize::from(!shifted.contains_mask(coned));
                original_count += usize::from(!c.contains_mask(coned));
            }
            DimensionCheck {
                dim: i,
                betti: betti.get(i as i32),
                shifted_count,
                original_count,
            }
        })
        .collect();
    Ok(HomologyShiftCheck {
        dims,
        shifted_top: shift.family,
        unanimous: shift.unanimous,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarPredicates {
    pub dominates_star: Verdict,
    pub dominated_by_star: Verdict,
    /// `dim H̃_{k-2}(K(H))`.
    pub h_low: usize,
    /// `dim H̃_{k-1}(K(H))`.
    pub h_top: usize,
}

impl StarPredicates {
    /// Both equivalences: dominating the star iff `H̃_{k-2} = 0`, being
    /// dominated by it iff `H̃_{k-1} = 0`.
    pub fn consistent(&self) -> bool {
        self.dominates_star.is_yes() == (self.h_low == 0)
            && self.dominated_by_star.is_yes() == (self.h_top == 0)
    }
}

/// Dominance against the k-star with apex 1, next to the two Betti numbers.
pub fn star_domination_predicates(h: &Family, src: &GenericSource) -> Result<StarPredicates> {
    if h.k() < 2 {
        return Err(Error::InvalidArgument("star predicates need k >= 2".into()));
    }
    let s = star(h.n(), h.k(), 1)?;
    let betti = reduced_betti(&complex_of(h));
    Ok(StarPredicates {
        dominates_star: dominates(h, &s, src)?,
        dominated_by_star: dominates(&s, h, src)?,
        h_low: betti.get(h.k() as i32 - 2),
        h_top: betti.get(h.k() as i32 - 1),
    })
}
