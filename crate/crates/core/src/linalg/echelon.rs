use super::field::PrimeModulus;
use crate::error::{Error, Result};

/// Incrementally maintained row space over a prime field.
///
/// Basis rows are kept in reduced row-echelon form: each has a leading 1 in
/// its pivot column and zeros in every other basis row's pivot column, so a
/// membership test is one reduction pass.
#[derive(Debug, Clone)]
pub struct EchelonState {
    width: usize,
    modulus: PrimeModulus,
    pivots: Vec<usize>,
    basis: Vec<Vec<u64>>,
}

impl EchelonState {
    pub fn new(width: usize, modulus: PrimeModulus) -> Self {
        EchelonState {
            width,
            modulus,
            pivots: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.width
    }

    /// Adds `row` to the basis if it lies outside the current row space.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: &[u64]) -> Result<bool> {
        if row.len() != self.width {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} into echelon state of width {}",
                row.len(),
                self.width
            )));
        }
        let p = self.modulus;
        let mut r: Vec<u64> = row.iter().map(|&v| v % p.value()).collect();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let f = r[pc];
            if f == 0 {
                continue;
            }
            for j in 0..self.width {
                if b[j] != 0 {
                    r[j] = p.sub(r[j], p.mul(f, b[j]));
                }
            }
        }
        let Some(pc) = r.iter().position(|&v| v != 0) else {
            return Ok(false);
        };
        let inv = p.inv(r[pc]);
        for v in r.iter_mut() {
            *v = p.mul(*v, inv);
        }
        for b in self.basis.iter_mut() {
            let f = b[pc];
            if f == 0 {
                continue;
            }
            for j in 0..self.width {
                if r[j] != 0 {
                    b[j] = p.sub(b[j], p.mul(f, r[j]));
                }
            }
        }
        self.basis.push(r);
        self.pivots.push(pc);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: PrimeModulus = PrimeModulus::MERSENNE_61;

    #[test]
    fn basic_membership() {
        let mut st = EchelonState::new(3, P);
        assert!(st.insert(&[1, 0, 0]).unwrap());
        assert!(!st.insert(&[1, 0, 0]).unwrap());
        assert!(st.insert(&[0, 1, 0]).unwrap());
        assert!(!st.insert(&[1, 1, 0]).unwrap());
        assert_eq!(st.rank(), 2);
        assert!(st.insert(&[5, 7, 3]).unwrap());
        assert!(st.is_full());
        assert!(!st.insert(&[0, 0, 0]).unwrap());
    }

    #[test]
    fn width_mismatch() {
        let mut st = EchelonState::new(3, P);
        assert!(matches!(st.insert(&[1, 0]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn basis_stays_reduced() {
        let mut st = EchelonState::new(4, P);
        for row in [[2, 4, 1, 0], [1, 2, 3, 4], [0, 1, 1, 1]] {
            st.insert(&row).unwrap();
        }
        for (i, &pc) in st.pivots().iter().enumerate() {
            for (j, b) in st.basis.iter().enumerate() {
                assert_eq!(b[pc], u64::from(i == j));
            }
        }
    }
}
