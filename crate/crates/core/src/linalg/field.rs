use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// A prime above 2^60 used as the specialization field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    /// 2^61 − 1.
    pub const MERSENNE_61: PrimeModulus = PrimeModulus((1u64 << 61) - 1);
    /// 2^62 − 57, the largest prime below 2^62; the cross-check prime.
    pub const SECONDARY: PrimeModulus = PrimeModulus((1u64 << 62) - 57);

    pub fn new(p: u64) -> Result<Self> {
        if p <= 1u64 << 60 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        let p = self.0 as u128;
        (if s >= p { s - p } else { s }) as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        let prod = a as u128 * b as u128;
        if self == Self::MERSENNE_61 {
            let p = self.0;
            let lo = (prod as u64) & p;
            let hi = (prod >> 61) as u64;
            let s = lo + hi;
            if s >= p {
                s - p
            } else {
                s
            }
        } else {
            (prod % self.0 as u128) as u64
        }
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.0 - 2)
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce_i64(self, v: i64) -> u64 {
        let r = (v as i128).rem_euclid(self.0 as i128);
        r as u64
    }

    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.0)
    }
}

impl Default for PrimeModulus {
    fn default() -> Self {
        Self::MERSENNE_61
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Miller–Rabin with the first twelve prime bases, which is deterministic
/// for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Dense row-major matrix of residues.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    modulus: PrimeModulus,
    data: Vec<u64>,
}

impl std::fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldMatrix({}x{} mod {}) ", self.rows, self.cols, self.modulus.0)?;
        f.debug_list()
            .entries((0..self.rows).map(|r| self.row(r)))
            .finish()
    }
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: PrimeModulus) -> Self {
        FieldMatrix {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, modulus: PrimeModulus) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// From signed integer rows, reduced mod p.
    pub fn from_rows(rows: &[Vec<i64>], modulus: PrimeModulus) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| modulus.reduce_i64(v)))
            .collect();
        Ok(FieldMatrix {
            rows: rows.len(),
            cols,
            modulus,
            data,
        })
    }

    pub(crate) fn from_data(rows: usize, cols: usize, modulus: PrimeModulus, data: Vec<u64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        FieldMatrix {
            rows,
            cols,
            modulus,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.modulus.0;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != other.rows || self.modulus != other.modulus {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.modulus;
        let mut out = FieldMatrix::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = p.add(out.data[idx], p.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row rank over the prime field.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        eliminate(&mut work, self.rows, self.cols, self.modulus).0
    }

    pub fn det(&self) -> Result<u64> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut work = self.data.clone();
        let (rank, sign_flips, diag) = eliminate(&mut work, self.rows, self.cols, self.modulus);
        if rank < self.rows {
            return Ok(0);
        }
        let d = diag;
        Ok(if sign_flips % 2 == 1 { self.modulus.neg(d) } else { d })
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// In-place forward elimination. Returns (rank, row swaps, product of pivots).
fn eliminate(a: &mut [u64], rows: usize, cols: usize, p: PrimeModulus) -> (usize, usize, u64) {
    let mut rank = 0;
    let mut swaps = 0;
    let mut diag = 1u64;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
            swaps += 1;
        }
        let pv = a[rank * cols + c];
        diag = p.mul(diag, pv);
        let inv = p.inv(pv);
        for r in rank + 1..rows {
            let f = a[r * cols + c];
            if f == 0 {
                continue;
            }
            let f = p.mul(f, inv);
            for j in c..cols {
                let sub = p.mul(f, a[rank * cols + j]);
                a[r * cols + j] = p.sub(a[r * cols + j], sub);
            }
        }
        rank += 1;
    }
    (rank, swaps, diag)
}

/// A uniformly random `n × n` matrix with nonzero determinant.
pub fn random_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R, modulus: PrimeModulus) -> FieldMatrix {
    loop {
        let data = (0..n * n).map(|_| modulus.random(rng)).collect();
        let m = FieldMatrix::from_data(n, n, modulus, data);
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: PrimeModulus = PrimeModulus::MERSENNE_61;

    #[test]
    fn primes() {
        assert!(is_prime((1u64 << 61) - 1));
        assert!(is_prime((1u64 << 62) - 57));
        assert!(!is_prime((1u64 << 62) - 1));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(PrimeModulus::new(97).is_err());
        assert!(PrimeModulus::new((1u64 << 61) + 1).is_err());
        assert_eq!(PrimeModulus::new((1u64 << 62) - 57).unwrap(), PrimeModulus::SECONDARY);
    }

    #[test]
    fn mersenne_reduction_matches_generic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            let a = P.random(&mut rng);
            let b = P.random(&mut rng);
            assert_eq!(P.mul(a, b), mulmod(a, b, P.value()));
        }
        assert_eq!(P.mul(P.value() - 1, P.value() - 1), 1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FieldMatrix::identity(4, P).rank(), 4);
        assert_eq!(FieldMatrix::zeros(3, 5, P).rank(), 0);
        let m = FieldMatrix::from_rows(&[vec![1, 2], vec![2, 4]], P).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn det_examples() {
        assert_eq!(FieldMatrix::identity(5, P).det().unwrap(), 1);
        let sing = FieldMatrix::from_rows(&[vec![1, 2], vec![2, 4]], P).unwrap();
        assert_eq!(sing.det().unwrap(), 0);
        let swap = FieldMatrix::from_rows(&[vec![0, 1], vec![1, 0]], P).unwrap();
        assert_eq!(swap.det().unwrap(), P.value() - 1);
        let m = FieldMatrix::from_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]], P).unwrap();
        assert_eq!(m.det().unwrap(), 6);
        assert!(FieldMatrix::zeros(2, 3, P).det().is_err());
    }

    #[test]
    fn random_invertible_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let one = random_invertible(1, &mut rng, P);
        assert_ne!(one.get(0, 0), 0);
        let a = random_invertible(6, &mut ChaCha8Rng::seed_from_u64(5), P);
        let b = random_invertible(6, &mut ChaCha8Rng::seed_from_u64(5), P);
        assert_eq!(a, b);
        let big = random_invertible(10, &mut rng, P);
        assert_ne!(big.det().unwrap(), 0);
    }
}
