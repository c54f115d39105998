use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::kset::{k_subsets, KSet, MAX_VERTICES};
use super::order::TermOrder;
use crate::error::{Error, Result};

/// A k-uniform hypergraph on `[n]`.
///
/// Members iterate in lexicographic order, which is also the order used by
/// the text format.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Family {
    n: u32,
    k: usize,
    members: BTreeSet<KSet>,
}

impl Family {
    pub fn empty(n: u32, k: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::BoundExceeded {
                what: "n",
                value: n as usize,
                bound: MAX_VERTICES as usize,
            });
        }
        if k == 0 {
            return Err(Error::InvalidArgument("uniformity k must be at least 1".into()));
        }
        Ok(Family {
            n,
            k,
            members: BTreeSet::new(),
        })
    }

    pub fn from_sets(n: u32, k: usize, sets: impl IntoIterator<Item = KSet>) -> Result<Self> {
        let mut f = Family::empty(n, k)?;
        for s in sets {
            f.insert(s)?;
        }
        Ok(f)
    }

    /// Convenience constructor from explicit vertex lists, e.g. `&[&[1, 2], &[2, 3]]`.
    pub fn from_lists(n: u32, k: usize, lists: &[&[u32]]) -> Result<Self> {
        Family::from_sets(
            n,
            k,
            lists
                .iter()
                .map(|l| KSet::from_vertices(l.iter().copied()))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Every k-subset of `[n]`.
    pub fn complete(n: u32, k: usize) -> Result<Self> {
        let mut f = Family::empty(n, k)?;
        f.members.extend(k_subsets(n, k));
        Ok(f)
    }

    /// Inserts a member; returns whether it was new.
    pub fn insert(&mut self, s: KSet) -> Result<bool> {
        if s.k() != self.k {
            return Err(Error::SizeMismatch {
                left: s.k(),
                right: self.k,
            });
        }
        if s.max() > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: s.max(),
                n: self.n,
            });
        }
        Ok(self.members.insert(s))
    }

    pub(crate) fn insert_unchecked(&mut self, s: KSet) {
        self.members.insert(s);
    }

    pub fn remove(&mut self, s: KSet) -> bool {
        self.members.remove(&s)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: KSet) -> bool {
        self.members.contains(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = KSet> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &BTreeSet<KSet> {
        &self.members
    }

    pub fn is_subset_of(&self, other: &Family) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Members sorted ascending by a term order.
    pub fn sorted_by(&self, order: TermOrder) -> Result<Vec<KSet>> {
        order.check_applicable(self.k)?;
        let mut v: Vec<KSet> = self.iter().collect();
        v.sort_by(|a, b| order.cmp_unchecked(*a, *b));
        Ok(v)
    }

    pub(crate) fn check_compatible(&self, other: &Family) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::FamilyMismatch(format!(
                "(n={}, k={}) vs (n={}, k={})",
                self.n, self.k, other.n, other.k
            )));
        }
        Ok(())
    }

    /// A witness `(F, S)` with `F` in the family, `S = (F \ {j}) ∪ {i}` for some
    /// `i < j`, `j ∈ F`, `i ∉ F`, and `S` missing; `None` when shifted.
    pub fn shifted_violation(&self) -> Option<(KSet, KSet)> {
        for f in self.iter() {
            for j in f.iter() {
                for i in 1..j {
                    if f.contains(i) {
                        continue;
                    }
                    let s = f.replace(j, i).expect("nonempty");
                    if !self.contains(s) {
                        return Some((f, s));
                    }
                }
            }
        }
        None
    }

    /// Closed downward under the componentwise order.
    pub fn is_shifted(&self) -> bool {
        self.shifted_violation().is_none()
    }

    /// Number of members meeting `{1, …, r}`.
    pub fn count_meeting_prefix(&self, r: u32) -> usize {
        let prefix = if r >= 64 { u64::MAX } else { (1u64 << r) - 1 };
        self.iter().filter(|s| s.mask() & prefix != 0).count()
    }

    pub fn apply_permutation(&self, perm: &Permutation) -> Result<Family> {
        if perm.n() != self.n {
            return Err(Error::FamilyMismatch(format!(
                "permutation on {} points applied to a family on [{}]",
                perm.n(),
                self.n
            )));
        }
        let mut out = Family::empty(self.n, self.k)?;
        for s in self.iter() {
            out.insert_unchecked(perm.apply_set(s));
        }
        Ok(out)
    }

    /// Compares two families on the same `(n, k)` by which one owns the
    /// order-least element of their symmetric difference.
    pub fn order_compare(&self, other: &Family, order: TermOrder) -> Result<Ordering> {
        self.check_compatible(other)?;
        order.check_applicable(self.k)?;
        let least = self
            .members
            .symmetric_difference(&other.members)
            .copied()
            .min_by(|a, b| order.cmp_unchecked(*a, *b));
        Ok(match least {
            None => Ordering::Equal,
            Some(s) if self.contains(s) => Ordering::Less,
            Some(_) => Ordering::Greater,
        })
    }

    /// For graphs: per-vertex neighbour masks, indexed by `v - 1`.
    pub(crate) fn adjacency(&self) -> Vec<u64> {
        debug_assert_eq!(self.k, 2);
        let mut adj = vec![0u64; self.n as usize];
        for e in self.iter() {
            let (a, b) = (e.min(), e.max());
            adj[(a - 1) as usize] |= 1u64 << (b - 1);
            adj[(b - 1) as usize] |= 1u64 << (a - 1);
        }
        adj
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}, k={}, ", self.n, self.k)?;
        f.debug_set().entries(self.members.iter()).finish()?;
        f.write_str(")")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if self.n < 10 {
                for v in s.iter() {
                    write!(f, "{v}")?;
                }
            } else {
                write!(f, "{s}")?;
            }
        }
        f.write_str("}")
    }
}

/// A bijection on `[n]`, stored by its images of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n as u32 > MAX_VERTICES {
            return Err(Error::InvalidPermutation(format!("{n} points")));
        }
        let mut seen = 0u64;
        for &v in &images {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation(format!("image {v} outside [1, {n}]")));
            }
            let bit = 1u64 << (v - 1);
            if seen & bit != 0 {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen |= bit;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        let mut images: Vec<u32> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("({a} {b}) on [{n}]")));
        }
        images.swap((a - 1) as usize, (b - 1) as usize);
        Ok(Permutation { images })
    }

    /// `i ↦ n + 1 - i`.
    pub fn reversal(n: u32) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// The involution swapping `(1, n), (2, n-1), …` for the first
    /// `transpositions` pairs and fixing everything else.
    pub fn involution_with(n: u32, transpositions: u32) -> Result<Self> {
        if 2 * transpositions > n {
            return Err(Error::InvalidArgument(format!(
                "{transpositions} disjoint transpositions do not fit in [{n}]"
            )));
        }
        let mut images: Vec<u32> = (1..=n).collect();
        for i in 1..=transpositions {
            images.swap((i - 1) as usize, (n - i) as usize);
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        self.images[(v - 1) as usize]
    }

    pub fn apply_set(&self, s: KSet) -> KSet {
        let mut m = 0u64;
        for v in s.iter() {
            m |= 1u64 << (self.apply(v) - 1);
        }
        KSet::from_mask_unchecked(m)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::InvalidPermutation("composing different sizes".into()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n()).all(|v| self.apply(self.apply(v)) == v)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> Family {
        Family::from_lists(5, 2, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3]]).unwrap()
    }

    fn g2() -> Family {
        Family::from_lists(5, 2, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]).unwrap()
    }

    fn c5() -> Family {
        Family::from_lists(5, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]).unwrap()
    }

    #[test]
    fn shifted_examples() {
        assert!(g1().is_shifted());
        assert!(g2().is_shifted());
        let (f, s) = c5().shifted_violation().unwrap();
        assert!(c5().contains(f) && !c5().contains(s));
        assert!(!c5().is_shifted());
    }

    #[test]
    fn family_order_examples() {
        assert_eq!(g1().order_compare(&g2(), TermOrder::Lex).unwrap(), Ordering::Less);
        assert_eq!(g2().order_compare(&g1(), TermOrder::Lex).unwrap(), Ordering::Greater);
        for o in [TermOrder::Lex, TermOrder::RevLex, TermOrder::SumLex] {
            assert_eq!(c5().order_compare(&c5(), o).unwrap(), Ordering::Equal);
        }
        let b6 = Family::from_lists(
            6,
            2,
            &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 4]],
        )
        .unwrap();
        let other = Family::from_lists(
            6,
            2,
            &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 5]],
        )
        .unwrap();
        assert_eq!(b6.order_compare(&other, TermOrder::SumLex).unwrap(), Ordering::Less);
    }

    #[test]
    fn order_compare_rejects_mismatch() {
        let f = Family::empty(5, 2).unwrap();
        let g = Family::empty(6, 2).unwrap();
        assert!(f.order_compare(&g, TermOrder::Lex).is_err());
    }

    #[test]
    fn permutation_examples() {
        let f = Family::from_lists(3, 2, &[&[1, 2], &[1, 3]]).unwrap();
        assert_eq!(f.apply_permutation(&Permutation::identity(3)).unwrap(), f);
        let single = Family::from_lists(3, 2, &[&[1, 2]]).unwrap();
        let swapped = single
            .apply_permutation(&Permutation::transposition(3, 1, 3).unwrap())
            .unwrap();
        assert_eq!(swapped, Family::from_lists(3, 2, &[&[2, 3]]).unwrap());
        let rot = Permutation::new(vec![3, 5, 1, 2, 4]).unwrap();
        let image = c5().apply_permutation(&rot).unwrap();
        assert_eq!(image.len(), 5);
        assert!(image.adjacency().iter().all(|m| m.count_ones() == 2));
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        assert!(!p.is_involution());
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(Permutation::reversal(6).is_involution());
        let inv = Permutation::involution_with(5, 2).unwrap();
        assert_eq!(inv.images(), &[5, 4, 3, 2, 1]);
        assert!(Permutation::involution_with(5, 3).is_err());
    }

    #[test]
    fn prefix_counts() {
        let f = c5();
        assert_eq!(f.count_meeting_prefix(0), 0);
        assert_eq!(f.count_meeting_prefix(5), 5);
        assert_eq!(f.count_meeting_prefix(1), 2);
    }

    #[test]
    fn insert_validates() {
        let mut f = Family::empty(4, 2).unwrap();
        assert!(f.insert(KSet::pair(1, 5).unwrap()).is_err());
        assert!(f.insert(KSet::triple(1, 2, 3).unwrap()).is_err());
        assert!(f.insert(KSet::pair(1, 4).unwrap()).unwrap());
        assert!(!f.insert(KSet::pair(1, 4).unwrap()).unwrap());
    }
}
