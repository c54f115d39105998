//! Dominance between uniform families via compound-matrix minors.
//!
//! The generic matrix of variables is replaced by random invertible matrices
//! over a large prime field. Rank can only drop under specialization, so a
//! single full-rank trial certifies a "yes"; a "no" is only ever probable.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::{Family, KSet};
use crate::error::{Error, Result};
use crate::linalg::{random_invertible, FieldMatrix, PrimeModulus};

/// Reproducible stand-in for the generic matrix: trial `t` draws its matrix
/// from ChaCha8 seeded with `seed` on stream `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenericSource {
    pub modulus: PrimeModulus,
    pub seed: u64,
    pub trials: usize,
}

impl GenericSource {
    pub const DEFAULT_TRIALS: usize = 3;
    pub const ESCALATED_TRIALS: usize = 10;

    pub fn new(modulus: PrimeModulus, seed: u64, trials: usize) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidArgument("at least one trial is required".into()));
        }
        Ok(GenericSource {
            modulus,
            seed,
            trials,
        })
    }

    pub fn with_seed(seed: u64) -> Self {
        GenericSource {
            modulus: PrimeModulus::default(),
            seed,
            trials: Self::DEFAULT_TRIALS,
        }
    }

    /// More trials on the cross-check prime.
    pub fn escalated(&self) -> Self {
        GenericSource {
            modulus: if self.modulus == PrimeModulus::SECONDARY {
                PrimeModulus::MERSENNE_61
            } else {
                PrimeModulus::SECONDARY
            },
            seed: self.seed,
            trials: self.trials.max(Self::ESCALATED_TRIALS),
        }
    }

    pub fn trial_rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }

    /// The specialized matrix for one trial.
    pub fn matrix(&self, n: u32, trial: usize) -> FieldMatrix {
        random_invertible(n as usize, &mut self.trial_rng(trial), self.modulus)
    }
}

impl Default for GenericSource {
    fn default() -> Self {
        GenericSource::with_seed(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    CertifiedYes,
    ProbableNo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Best rank seen over the trials.
    pub achieved_rank: usize,
    pub required_rank: usize,
    pub trials_used: usize,
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        self.outcome == Outcome::CertifiedYes
    }
}

/// Determinant of the submatrix of `a` on rows `rows` and columns `cols`.
pub fn minor_det(a: &FieldMatrix, rows: KSet, cols: KSet) -> Result<u64> {
    if rows.k() != cols.k() {
        return Err(Error::SizeMismatch {
            left: rows.k(),
            right: cols.k(),
        });
    }
    let bound = rows.max().max(cols.max()) as usize;
    if bound > a.rows() || bound > a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "minor {rows}x{cols} of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    Ok(minor_unchecked(a, rows, cols))
}

pub(crate) fn minor_unchecked(a: &FieldMatrix, rows: KSet, cols: KSet) -> u64 {
    let p = a.modulus();
    let mut r = [0usize; 3];
    let mut c = [0usize; 3];
    match rows.k() {
        1 => a.get((rows.min() - 1) as usize, (cols.min() - 1) as usize),
        2 => {
            for (slot, v) in r.iter_mut().zip(rows.iter()) {
                *slot = (v - 1) as usize;
            }
            for (slot, v) in c.iter_mut().zip(cols.iter()) {
                *slot = (v - 1) as usize;
            }
            let ad = p.mul(a.get(r[0], c[0]), a.get(r[1], c[1]));
            let bc = p.mul(a.get(r[0], c[1]), a.get(r[1], c[0]));
            p.sub(ad, bc)
        }
        3 => {
            for (slot, v) in r.iter_mut().zip(rows.iter()) {
                *slot = (v - 1) as usize;
            }
            for (slot, v) in c.iter_mut().zip(cols.iter()) {
                *slot = (v - 1) as usize;
            }
            let e = |i: usize, j: usize| a.get(r[i], c[j]);
            let cof = |i1: usize, i2: usize| {
                // 2x2 minor of rows 1, 2 on columns i1, i2
                p.sub(p.mul(e(1, i1), e(2, i2)), p.mul(e(1, i2), e(2, i1)))
            };
            let t0 = p.mul(e(0, 0), cof(1, 2));
            let t1 = p.mul(e(0, 1), cof(0, 2));
            let t2 = p.mul(e(0, 2), cof(0, 1));
            p.add(p.sub(t0, t1), t2)
        }
        k => {
            let data = rows
                .iter()
                .flat_map(|i| cols.iter().map(move |j| (i, j)))
                .map(|(i, j)| a.get((i - 1) as usize, (j - 1) as usize))
                .collect();
            FieldMatrix::from_data(k, k, p, data)
                .det()
                .expect("square by construction")
        }
    }
}

/// Matrix of minors with one row per member of `rows` and one column per
/// member of `cols`, both in family (lexicographic) order.
pub fn dominance_matrix(a: &FieldMatrix, cols: &Family, rows: &Family) -> Result<FieldMatrix> {
    cols.check_compatible(rows)?;
    let n = cols.n() as usize;
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let col_sets: Vec<KSet> = cols.iter().collect();
    let data = rows
        .iter()
        .flat_map(|s| col_sets.iter().map(move |&t| (s, t)))
        .map(|(s, t)| minor_unchecked(a, s, t))
        .collect();
    Ok(FieldMatrix::from_data(rows.len(), col_sets.len(), a.modulus(), data))
}

/// Whether `f1` dominates `f2`: the minors with rows `f2`, columns `f1`
/// have full row rank `|f2|`.
pub fn dominates(f1: &Family, f2: &Family, src: &GenericSource) -> Result<Verdict> {
    f1.check_compatible(f2)?;
    let required = f2.len();
    if required == 0 {
        return Ok(Verdict {
            outcome: Outcome::CertifiedYes,
            achieved_rank: 0,
            required_rank: 0,
            trials_used: 0,
        });
    }
    let mut best = 0;
    for t in 0..src.trials {
        let a = src.matrix(f1.n(), t);
        let rank = dominance_matrix(&a, f1, f2)?.rank();
        best = best.max(rank);
        if rank == required {
            return Ok(Verdict {
                outcome: Outcome::CertifiedYes,
                achieved_rank: rank,
                required_rank: required,
                trials_used: t + 1,
            });
        }
    }
    Ok(Verdict {
        outcome: Outcome::ProbableNo,
        achieved_rank: best,
        required_rank: required,
        trials_used: src.trials,
    })
}

/// Both directional verdicts; each trial evaluates both directions on the
/// same specialized matrix.
pub fn weakly_isomorphic(
    f1: &Family,
    f2: &Family,
    src: &GenericSource,
) -> Result<(Verdict, Verdict)> {
    f1.check_compatible(f2)?;
    let mut fwd = Verdict {
        outcome: Outcome::ProbableNo,
        achieved_rank: 0,
        required_rank: f2.len(),
        trials_used: 0,
    };
    let mut bwd = Verdict {
        outcome: Outcome::ProbableNo,
        achieved_rank: 0,
        required_rank: f1.len(),
        trials_used: 0,
    };
    for v in [&mut fwd, &mut bwd] {
        if v.required_rank == 0 {
            v.outcome = Outcome::CertifiedYes;
        }
    }
    for t in 0..src.trials {
        if fwd.is_yes() && bwd.is_yes() {
            break;
        }
        let a = src.matrix(f1.n(), t);
        for (v, cols, rows) in [(&mut fwd, f1, f2), (&mut bwd, f2, f1)] {
            if v.is_yes() {
                continue;
            }
            let rank = dominance_matrix(&a, cols, rows)?.rank();
            v.achieved_rank = v.achieved_rank.max(rank);
            v.trials_used = t + 1;
            if rank == v.required_rank {
                v.outcome = Outcome::CertifiedYes;
            }
        }
    }
    Ok((fwd, bwd))
}

/// `{F ⊆ [n], |F| = k : F ∩ [r] ≠ ∅}`.
pub fn prefix_meeting_family(n: u32, k: usize, r: u32) -> Result<Family> {
    let all = Family::complete(n, k)?;
    let prefix = if r >= 64 { u64::MAX } else { (1u64 << r) - 1 };
    Family::from_sets(n, k, all.iter().filter(|s| s.mask() & prefix != 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankReport {
    /// Best rank over the trials; a certified lower bound on the generic rank.
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    pub trials_used: usize,
}

/// Rank of the minors with rows `{F : F ∩ [r] ≠ ∅}` and columns `h`.
pub fn rank_r(h: &Family, r: u32, src: &GenericSource) -> Result<RankReport> {
    if r == 0 || r > h.n() {
        return Err(Error::InvalidArgument(format!("r = {r} outside [1, {}]", h.n())));
    }
    let rows = prefix_meeting_family(h.n(), h.k(), r)?;
    let ceiling = rows.len().min(h.len());
    let mut best = 0;
    let mut used = 0;
    for t in 0..src.trials {
        used = t + 1;
        let a = src.matrix(h.n(), t);
        best = best.max(dominance_matrix(&a, h, &rows)?.rank());
        if best == ceiling {
            break;
        }
    }
    Ok(RankReport {
        rank: best,
        rows: rows.len(),
        cols: h.len(),
        trials_used: used,
    })
}
