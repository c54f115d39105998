use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ambient vertex count supported by the bitmask encoding.
pub const MAX_VERTICES: u32 = 64;

/// A nonempty subset of `[1, 64]`, held as a bitmask (bit `v - 1` for vertex `v`).
///
/// The canonical form is the strictly increasing element sequence; the mask
/// is what makes symmetric differences and extremal elements cheap.
/// `Ord` sorts by size first, then lexicographically on the sorted sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSet(u64);

/// Outcome of the componentwise comparison of two equal-size sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PartialRelation {
    LessOrEqual,
    GreaterOrEqual,
    Equal,
    Incomparable,
}

impl KSet {
    /// Builds a set from a strictly increasing list of 1-based vertices.
    pub fn from_sorted(elements: &[u32]) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidKSet("empty set".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidKSet(format!(
                "{elements:?} is not strictly increasing"
            )));
        }
        Self::from_vertices(elements.iter().copied())
    }

    /// Builds a set from vertices in any order; duplicates are rejected.
    pub fn from_vertices(vertices: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::InvalidKSet(format!("vertex {v} repeated")));
            }
            mask |= bit;
        }
        Self::from_mask(mask)
    }

    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask == 0 {
            return Err(Error::InvalidKSet("empty set".into()));
        }
        Ok(KSet(mask))
    }

    pub(crate) const fn from_mask_unchecked(mask: u64) -> Self {
        KSet(mask)
    }

    pub fn pair(a: u32, b: u32) -> Result<Self> {
        Self::from_vertices([a, b])
    }

    pub fn triple(a: u32, b: u32, c: u32) -> Result<Self> {
        Self::from_vertices([a, b, c])
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn k(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub fn min(self) -> u32 {
        self.0.trailing_zeros() + 1
    }

    #[inline]
    pub fn max(self) -> u32 {
        MAX_VERTICES - self.0.leading_zeros()
    }

    pub fn sum(self) -> u32 {
        self.iter().sum()
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() + 1;
                m &= m - 1;
                Some(v)
            }
        })
    }

    pub fn elements(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// `(self \ {out}) ∪ {inn}`; `None` if the result would be empty.
    pub fn replace(self, out: u32, inn: u32) -> Option<Self> {
        let m = (self.0 & !(1u64 << (out - 1))) | (1u64 << (inn - 1));
        (m != 0).then_some(KSet(m))
    }

    pub fn union(self, other: KSet) -> KSet {
        KSet(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: KSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Componentwise comparison of the sorted element sequences.
    pub fn partial_compare(self, other: KSet) -> Result<PartialRelation> {
        if self.k() != other.k() {
            return Err(Error::SizeMismatch {
                left: self.k(),
                right: other.k(),
            });
        }
        if self == other {
            return Ok(PartialRelation::Equal);
        }
        let (mut le, mut ge) = (true, true);
        for (s, t) in self.iter().zip(other.iter()) {
            le &= s <= t;
            ge &= s >= t;
        }
        Ok(match (le, ge) {
            (true, _) => PartialRelation::LessOrEqual,
            (_, true) => PartialRelation::GreaterOrEqual,
            _ => PartialRelation::Incomparable,
        })
    }
}

impl Ord for KSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k().cmp(&other.k()).then_with(|| {
            let d = self.0 ^ other.0;
            if d == 0 {
                Ordering::Equal
            } else if self.0 & (d & d.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for KSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for KSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// All k-subsets of `[n]` in increasing mask order (Gosper's hack).
pub(crate) fn k_subsets(n: u32, k: usize) -> impl Iterator<Item = KSet> {
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k == 0 || k as u32 > n {
        limit
    } else {
        (1u128 << k) - 1
    };
    std::iter::from_fn(move || {
        if cur >= limit {
            return None;
        }
        let out = KSet(cur as u64);
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        cur = (((r ^ cur) >> 2) / c) | r;
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(v: &[u32]) -> KSet {
        KSet::from_sorted(v).unwrap()
    }

    #[test]
    fn partial_compare_examples() {
        assert_eq!(
            ks(&[1, 3]).partial_compare(ks(&[2, 3])).unwrap(),
            PartialRelation::LessOrEqual
        );
        assert_eq!(
            ks(&[1, 4]).partial_compare(ks(&[2, 3])).unwrap(),
            PartialRelation::Incomparable
        );
        assert_eq!(
            ks(&[2, 3]).partial_compare(ks(&[2, 3])).unwrap(),
            PartialRelation::Equal
        );
        assert_eq!(
            ks(&[2, 3]).partial_compare(ks(&[1, 3])).unwrap(),
            PartialRelation::GreaterOrEqual
        );
        assert!(matches!(
            ks(&[1]).partial_compare(ks(&[1, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(KSet::from_sorted(&[]).is_err());
        assert!(KSet::from_sorted(&[2, 1]).is_err());
        assert!(KSet::from_sorted(&[0, 1]).is_err());
        assert!(KSet::from_vertices([3, 3]).is_err());
        assert!(KSet::from_vertices([65]).is_err());
    }

    #[test]
    fn extremal_elements() {
        let s = ks(&[3, 7, 64]);
        assert_eq!((s.min(), s.max(), s.k(), s.sum()), (3, 64, 3, 74));
        assert_eq!(s.elements(), vec![3, 7, 64]);
        assert_eq!(s.to_string(), "{3,7,64}");
    }

    #[test]
    fn subsets_are_counted_and_ordered() {
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(5, 0).count(), 0);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(64, 1).count(), 64);
        let v: Vec<_> = k_subsets(4, 2).collect();
        assert!(v.windows(2).all(|w| w[0].mask() < w[1].mask()));
    }

    #[test]
    fn ord_is_lexicographic_on_sorted_elements() {
        let mut v: Vec<_> = k_subsets(5, 2).collect();
        v.sort();
        let as_vecs: Vec<_> = v.iter().map(|s| s.elements()).collect();
        let mut expect = as_vecs.clone();
        expect.sort();
        assert_eq!(as_vecs, expect);
    }
}
