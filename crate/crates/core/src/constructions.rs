//! Extremal constructions, cover predicates, and instance generators.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::{balanced_parts, k_subsets, Family, KSet, Permutation};
use crate::error::{Error, Result};

/// Largest `n` for exhaustive graph enumeration (`2^21` labeled graphs).
pub const MAX_EXHAUSTIVE_GRAPH_N: u32 = 7;

/// A vertex subset on which a cover predicate fails, with the counts seen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverWitness {
    pub set: KSet,
    pub counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CoverCheck {
    Satisfied,
    Violated(CoverWitness),
}

impl CoverCheck {
    pub fn holds(&self) -> bool {
        matches!(self, CoverCheck::Satisfied)
    }

    pub fn witness(&self) -> Option<&CoverWitness> {
        match self {
            CoverCheck::Satisfied => None,
            CoverCheck::Violated(w) => Some(w),
        }
    }
}

fn require_k(f: &Family, k: usize) -> Result<()> {
    if f.k() != k {
        return Err(Error::InvalidArgument(format!(
            "expected a {k}-uniform family, got k = {}",
            f.k()
        )));
    }
    Ok(())
}

/// Edges of the graph (as neighbour masks) inside the vertex set `mask`.
#[inline]
fn induced_edges(adj: &[u64], mask: u64) -> usize {
    let mut m = mask;
    let mut twice = 0;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        twice += (adj[v] & mask).count_ones() as usize;
    }
    twice / 2
}

/// Every 3-subset of `[n]` contains an edge.
pub fn is_mantel_cover(g: &Family) -> Result<CoverCheck> {
    require_k(g, 2)?;
    let adj = g.adjacency();
    for t in k_subsets(g.n(), 3) {
        if induced_edges(&adj, t.mask()) == 0 {
            return Ok(CoverCheck::Violated(CoverWitness {
                set: t,
                counts: vec![0],
            }));
        }
    }
    Ok(CoverCheck::Satisfied)
}

/// Every 3-set `S` has `e(G[S]) + e(G[τ(S)]) ≥ 2`.
pub fn involution_condition(g: &Family, tau: &Permutation) -> Result<CoverCheck> {
    require_k(g, 2)?;
    if !tau.is_involution() {
        return Err(Error::NotInvolution);
    }
    if tau.n() != g.n() {
        return Err(Error::FamilyMismatch("involution acts on a different [n]".into()));
    }
    let adj = g.adjacency();
    for s in k_subsets(g.n(), 3) {
        let a = induced_edges(&adj, s.mask());
        let b = induced_edges(&adj, tau.apply_set(s).mask());
        if a + b < 2 {
            return Ok(CoverCheck::Violated(CoverWitness {
                set: s,
                counts: vec![a, b],
            }));
        }
    }
    Ok(CoverCheck::Satisfied)
}

/// A finite group of permutations of `[n]`, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupAction {
    n: u32,
    elements: Vec<Permutation>,
}

impl GroupAction {
    pub fn new(n: u32, elements: Vec<Permutation>) -> Result<Self> {
        if elements.iter().any(|g| g.n() != n) {
            return Err(Error::InvalidGroup("elements act on different sets".into()));
        }
        let set: HashSet<&Permutation> = elements.iter().collect();
        if set.len() != elements.len() {
            return Err(Error::InvalidGroup("repeated element".into()));
        }
        if !elements.iter().any(Permutation::is_identity) {
            return Err(Error::InvalidGroup("missing identity".into()));
        }
        for g in &elements {
            if !set.contains(&g.inverse()) {
                return Err(Error::InvalidGroup(format!("{g:?} has no inverse")));
            }
            for h in &elements {
                if !set.contains(&g.compose(h)?) {
                    return Err(Error::InvalidGroup("not closed under composition".into()));
                }
            }
        }
        Ok(GroupAction { n, elements })
    }

    pub fn trivial(n: u32) -> Self {
        GroupAction {
            n,
            elements: vec![Permutation::identity(n)],
        }
    }

    /// `{id, τ}`, or just `{id}` when `τ` is the identity.
    pub fn from_involution(tau: &Permutation) -> Result<Self> {
        if !tau.is_involution() {
            return Err(Error::NotInvolution);
        }
        let id = Permutation::identity(tau.n());
        let elements = if tau.is_identity() {
            vec![id]
        } else {
            vec![id, tau.clone()]
        };
        GroupAction::new(tau.n(), elements)
    }

    /// The full symmetric group; only for small `n`.
    pub fn symmetric(n: u32) -> Result<Self> {
        if n > 6 {
            return Err(Error::BoundExceeded {
                what: "n",
                value: n as usize,
                bound: 6,
            });
        }
        let mut out = Vec::new();
        let mut images: Vec<u32> = (1..=n).collect();
        permute(&mut images, 0, &mut out);
        GroupAction::new(n, out)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
}

fn permute(images: &mut Vec<u32>, at: usize, out: &mut Vec<Permutation>) {
    if at == images.len() {
        out.push(Permutation::new(images.clone()).expect("a permutation"));
        return;
    }
    for i in at..images.len() {
        images.swap(at, i);
        permute(images, at + 1, out);
        images.swap(at, i);
    }
}

/// Every 3-set `T` has `Σ_g e(G[g(T)]) ≥ |Γ|`.
pub fn group_condition(g: &Family, group: &GroupAction) -> Result<CoverCheck> {
    require_k(g, 2)?;
    if group.n() != g.n() {
        return Err(Error::FamilyMismatch("group acts on a different [n]".into()));
    }
    let adj = g.adjacency();
    for t in k_subsets(g.n(), 3) {
        let counts: Vec<usize> = group
            .elements()
            .iter()
            .map(|p| induced_edges(&adj, p.apply_set(t).mask()))
            .collect();
        if counts.iter().sum::<usize>() < group.order() {
            return Ok(CoverCheck::Violated(CoverWitness { set: t, counts }));
        }
    }
    Ok(CoverCheck::Satisfied)
}

/// Turán's (3,4) construction: parts `A_1, A_2, A_3` of consecutive labels,
/// with every triple inside a part or with two vertices in `A_i` and one in
/// `A_{i+1 mod 3}`. Defaults to balanced parts.
pub fn turan_34_hypergraph(n: u32, sizes: Option<(u32, u32, u32)>) -> Result<Family> {
    let (s1, s2, s3) = match sizes {
        Some(s) => {
            if s.0 + s.1 + s.2 != n {
                return Err(Error::InvalidArgument(format!(
                    "part sizes {s:?} do not sum to {n}"
                )));
            }
            s
        }
        None => balanced_parts(n),
    };
    let part = |v: u32| -> usize {
        if v <= s1 {
            0
        } else if v <= s1 + s2 {
            1
        } else {
            2
        }
    };
    let _ = s3;
    let mut h = Family::empty(n, 3)?;
    for t in k_subsets(n, 3) {
        let mut count = [0usize; 3];
        for v in t.iter() {
            count[part(v)] += 1;
        }
        let keep = (0..3).any(|i| count[i] == 3 || (count[i] == 2 && count[(i + 1) % 3] == 1));
        if keep {
            h.insert_unchecked(t);
        }
    }
    Ok(h)
}

/// Every 4-subset of `[n]` contains a member of `h`.
pub fn is_turan_hypergraph(h: &Family) -> Result<CoverCheck> {
    require_k(h, 3)?;
    let members: HashSet<u64> = h.iter().map(KSet::mask).collect();
    for q in k_subsets(h.n(), 4) {
        if !covers_quad(&members, q.mask()) {
            return Ok(CoverCheck::Violated(CoverWitness {
                set: q,
                counts: vec![0],
            }));
        }
    }
    Ok(CoverCheck::Satisfied)
}

fn covers_quad(members: &HashSet<u64>, quad: u64) -> bool {
    let mut m = quad;
    while m != 0 {
        let bit = m & m.wrapping_neg();
        m &= m - 1;
        if members.contains(&(quad & !bit)) {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinEdgesReport {
    pub n: u32,
    pub min_edges: usize,
    /// Up to `MIN_EDGES_EXAMPLE_CAP` minimizers, in enumeration order.
    pub examples: Vec<Family>,
    pub graphs_checked: u64,
}

pub const MIN_EDGES_EXAMPLE_CAP: usize = 100;

/// Exact minimum edge count over all graphs on `[n]` satisfying the
/// involution condition for `tau`.
///
/// Edge counts are tried in increasing order, so the first level holding a
/// valid graph is the minimum and no larger graph is ever examined.
pub fn min_edges_involution(n: u32, tau: &Permutation, bound: u32) -> Result<MinEdgesReport> {
    if n > bound.min(MAX_EXHAUSTIVE_GRAPH_N) {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n as usize,
            bound: bound.min(MAX_EXHAUSTIVE_GRAPH_N) as usize,
        });
    }
    if !tau.is_involution() {
        return Err(Error::NotInvolution);
    }
    if tau.n() != n {
        return Err(Error::FamilyMismatch("involution acts on a different [n]".into()));
    }
    let edges: Vec<(usize, usize)> = k_subsets(n, 2)
        .map(|e| ((e.min() - 1) as usize, (e.max() - 1) as usize))
        .collect();
    let triples: Vec<(u64, u64)> = k_subsets(n, 3)
        .map(|s| (s.mask(), tau.apply_set(s).mask()))
        .collect();
    let satisfied = |adj: &[u64]| {
        triples
            .iter()
            .all(|&(a, b)| induced_edges(adj, a) + induced_edges(adj, b) >= 2)
    };
    let mut checked = 0u64;
    for size in 0..=edges.len() {
        let mut examples = Vec::new();
        let mut chosen: Vec<usize> = (0..size).collect();
        loop {
            let mut adj = vec![0u64; n as usize];
            for &i in &chosen {
                let (a, b) = edges[i];
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            checked += 1;
            if satisfied(&adj) && examples.len() < MIN_EDGES_EXAMPLE_CAP {
                let fam = Family::from_sets(
                    n,
                    2,
                    chosen.iter().map(|&i| {
                        KSet::pair(edges[i].0 as u32 + 1, edges[i].1 as u32 + 1).expect("edge")
                    }),
                )?;
                examples.push(fam);
            }
            if !next_combination(&mut chosen, edges.len()) {
                break;
            }
        }
        if !examples.is_empty() {
            return Ok(MinEdgesReport {
                n,
                min_edges: size,
                examples,
                graphs_checked: checked,
            });
        }
    }
    unreachable!("the complete graph satisfies every involution condition")
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `Y(X)`: `uw` is an edge iff `u` and `w` share a neighbour in `X`.
pub fn y_graph(x: &Family) -> Result<Family> {
    require_k(x, 2)?;
    let adj = x.adjacency();
    let mut y = Family::empty(x.n(), 2)?;
    for nb in &adj {
        let verts: Vec<u32> = KSet::from_mask(*nb).map(|s| s.elements()).unwrap_or_default();
        for (i, &u) in verts.iter().enumerate() {
            for &w in &verts[i + 1..] {
                y.insert_unchecked(KSet::pair(u, w)?);
            }
        }
    }
    Ok(y)
}

pub fn find_triangle(g: &Family) -> Option<KSet> {
    let adj = g.adjacency();
    for e in g.iter() {
        let (a, b) = ((e.min() - 1) as usize, (e.max() - 1) as usize);
        let common = adj[a] & adj[b];
        if common != 0 {
            return Some(KSet::from_mask_unchecked(e.mask() | (common & common.wrapping_neg())));
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangleFreeClaim {
    pub m: u32,
    pub edges_x: usize,
    pub edges_y: usize,
    pub holds: bool,
}

impl TriangleFreeClaim {
    pub fn is_tight(&self) -> bool {
        self.edges_y + (self.m / 2) as usize == self.edges_x
    }
}

/// Evaluates `|E(Y(X))| + ⌊m/2⌋ ≥ |E(X)|` for a triangle-free graph on `[m]`.
pub fn claim_tfree_check(x: &Family) -> Result<TriangleFreeClaim> {
    require_k(x, 2)?;
    if let Some(t) = find_triangle(x) {
        return Err(Error::HasTriangle { witness: t });
    }
    let y = y_graph(x)?;
    let m = x.n();
    Ok(TriangleFreeClaim {
        m,
        edges_x: x.len(),
        edges_y: y.len(),
        holds: y.len() + (m / 2) as usize >= x.len(),
    })
}

/// Seeded triangle-free graph: random bipartite edges across a random
/// bipartition, then random non-triangle-creating additions. Not uniform.
pub fn random_triangle_free(m: u32, seed: u64) -> Result<Family> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Family::empty(m, 2)?;
    if m < 2 {
        return Ok(g);
    }
    let side: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.5)).collect();
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut adj = vec![0u64; m as usize];
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            pairs.push((a, b));
            if side[a as usize] != side[b as usize] && rng.gen_bool(density) {
                adj[a as usize] |= 1 << b;
                adj[b as usize] |= 1 << a;
            }
        }
    }
    pairs.shuffle(&mut rng);
    let extra = rng.gen_range(0..=pairs.len());
    for &(a, b) in pairs.iter().take(extra) {
        let (a, b) = (a as usize, b as usize);
        if adj[a] & (1 << b) == 0 && adj[a] & adj[b] == 0 {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    for a in 0..m as usize {
        for b in a + 1..m as usize {
            if adj[a] & (1 << b) != 0 {
                g.insert_unchecked(KSet::pair(a as u32 + 1, b as u32 + 1)?);
            }
        }
    }
    Ok(g)
}

pub fn complement_graph(g: &Family) -> Result<Family> {
    require_k(g, 2)?;
    Family::from_sets(g.n(), 2, k_subsets(g.n(), 2).filter(|e| !g.contains(*e)))
}

/// A seeded Mantel cover: the complement of a random triangle-free graph.
pub fn random_mantel_cover(n: u32, seed: u64) -> Result<Family> {
    complement_graph(&random_triangle_free(n, seed)?)
}

/// All labeled graphs on `[n]` in which every 3-set spans an edge, in
/// increasing edge-bitmask order.
pub fn enumerate_mantel_covers(n: u32) -> Result<impl Iterator<Item = Family>> {
    enumerate_graphs(n).map(|it| it.filter(|g| is_mantel_cover(g).map(|c| c.holds()).unwrap_or(false)))
}

/// All labeled graphs on `[n]`, indexed by edge bitmask.
pub fn enumerate_graphs(n: u32) -> Result<impl Iterator<Item = Family>> {
    if n > MAX_EXHAUSTIVE_GRAPH_N {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n as usize,
            bound: MAX_EXHAUSTIVE_GRAPH_N as usize,
        });
    }
    let edges: Vec<KSet> = k_subsets(n, 2).collect();
    let total = 1u64 << edges.len();
    Ok((0..total).map(move |bits| {
        let mut g = Family::empty(n, 2).expect("valid n");
        for (i, &e) in edges.iter().enumerate() {
            if bits >> i & 1 == 1 {
                g.insert_unchecked(e);
            }
        }
        g
    }))
}

/// A minimal Turán hypergraph: start from all triples and drop them in
/// seeded random order whenever the 4-set cover survives.
pub fn random_turan_hypergraph(n: u32, seed: u64) -> Result<Family> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<KSet> = k_subsets(n, 3).collect();
    order.shuffle(&mut rng);
    let mut members: HashSet<u64> = order.iter().map(|s| s.mask()).collect();
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    for t in order {
        members.remove(&t.mask());
        let mut rest = full & !t.mask();
        let mut ok = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if !covers_quad(&members, t.mask() | bit) {
                ok = false;
                break;
            }
        }
        if !ok {
            members.insert(t.mask());
        }
    }
    Family::from_sets(n, 3, members.into_iter().map(KSet::from_mask_unchecked))
}

pub fn is_connected(g: &Family) -> bool {
    let adj = g.adjacency();
    let n = g.n() as usize;
    if n == 0 {
        return true;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

pub fn is_acyclic(g: &Family) -> bool {
    // union-find over vertices
    let mut parent: Vec<usize> = (0..g.n() as usize).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in g.iter() {
        let (a, b) = (
            root(&mut parent, (e.min() - 1) as usize),
            root(&mut parent, (e.max() - 1) as usize),
        );
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{b_family, h_value, turan_edge_count, turan_graph};

    fn fam(n: u32, lists: &[&[u32]]) -> Family {
        Family::from_lists(n, 2, lists).unwrap()
    }

    #[test]
    fn turan_34_counts() {
        assert_eq!(turan_34_hypergraph(6, None).unwrap().len(), 6);
        assert_eq!(turan_34_hypergraph(9, None).unwrap().len() as u64, h_value(9));
        let small = turan_34_hypergraph(4, Some((2, 1, 1))).unwrap();
        assert!(is_turan_hypergraph(&small).unwrap().holds());
        assert!(turan_34_hypergraph(5, Some((2, 2, 2))).is_err());
    }

    #[test]
    fn turan_hypergraph_predicate() {
        assert!(is_turan_hypergraph(&turan_34_hypergraph(7, None).unwrap())
            .unwrap()
            .holds());
        assert!(is_turan_hypergraph(&Family::complete(5, 3).unwrap()).unwrap().holds());
        let w = is_turan_hypergraph(&Family::empty(4, 3).unwrap()).unwrap();
        assert_eq!(w.witness().unwrap().set, KSet::from_sorted(&[1, 2, 3, 4]).unwrap());
        assert!(is_turan_hypergraph(&fam(4, &[&[1, 2]])).is_err());
    }

    #[test]
    fn mantel_predicate() {
        assert!(is_mantel_cover(&turan_graph(5).unwrap()).unwrap().holds());
        let matching = fam(6, &[&[1, 2], &[3, 4], &[5, 6]]);
        let w = is_mantel_cover(&matching).unwrap();
        let set = w.witness().unwrap().set;
        assert_eq!(set.k(), 3);
        assert!(matching.iter().all(|e| !e.is_subset_of(set)));
        assert!(is_mantel_cover(&Family::complete(6, 2).unwrap()).unwrap().holds());
    }

    #[test]
    fn involution_examples() {
        assert!(involution_condition(&b_family(4).unwrap(), &Permutation::reversal(4))
            .unwrap()
            .holds());
        assert!(involution_condition(&b_family(6).unwrap(), &Permutation::reversal(6))
            .unwrap()
            .holds());
        let w = involution_condition(&Family::empty(3, 2).unwrap(), &Permutation::identity(3))
            .unwrap();
        assert_eq!(w.witness().unwrap().counts, vec![0, 0]);
        let cyc = Permutation::new(vec![2, 3, 1]).unwrap();
        assert!(matches!(
            involution_condition(&Family::empty(3, 2).unwrap(), &cyc),
            Err(Error::NotInvolution)
        ));
    }

    #[test]
    fn group_validation() {
        let cyc = Permutation::new(vec![2, 3, 1]).unwrap();
        assert!(GroupAction::new(3, vec![Permutation::identity(3), cyc.clone()]).is_err());
        let c3 = GroupAction::new(
            3,
            vec![Permutation::identity(3), cyc.clone(), cyc.inverse()],
        )
        .unwrap();
        assert_eq!(c3.order(), 3);
        assert!(GroupAction::new(3, vec![cyc]).is_err());
        assert_eq!(GroupAction::symmetric(4).unwrap().order(), 24);
    }

    /// Under the full symmetric group the condition only constrains the
    /// edge count; on five vertices ⌈5·4/6⌉ = 4 edges already pass.
    #[test]
    fn symmetric_group_passing_instance() {
        let s5 = GroupAction::symmetric(5).unwrap();
        let found = enumerate_graphs(5)
            .unwrap()
            .filter(|g| g.len() == 4)
            .any(|g| group_condition(&g, &s5).unwrap().holds());
        assert!(found);
        let none_below = enumerate_graphs(5)
            .unwrap()
            .filter(|g| g.len() == 3)
            .all(|g| !group_condition(&g, &s5).unwrap().holds());
        assert!(none_below);
    }

    #[test]
    fn min_edges_small() {
        let r = min_edges_involution(4, &Permutation::reversal(4), 7).unwrap();
        assert_eq!(r.min_edges as u64, turan_edge_count(4));
        assert!(r.examples.iter().all(|g| g.len() == 2));
        let tau = Permutation::new(vec![5, 4, 3, 2, 1]).unwrap();
        assert_eq!(min_edges_involution(5, &tau, 7).unwrap().min_edges, 4);
        assert_eq!(
            min_edges_involution(6, &Permutation::identity(6), 7).unwrap().min_edges,
            6
        );
        assert!(min_edges_involution(8, &Permutation::identity(8), 7).is_err());
    }

    #[test]
    fn y_graph_examples() {
        let path = fam(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(y_graph(&path).unwrap(), fam(3, &[&[1, 3]]));
        let matching = fam(6, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert!(y_graph(&matching).unwrap().is_empty());
        let star = fam(5, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5]]);
        assert_eq!(y_graph(&star).unwrap().len(), 6);
    }

    #[test]
    fn claim_examples() {
        let matching = fam(6, &[&[1, 2], &[3, 4], &[5, 6]]);
        let c = claim_tfree_check(&matching).unwrap();
        assert!(c.holds && c.is_tight());
        let c5 = fam(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let c = claim_tfree_check(&c5).unwrap();
        assert_eq!((c.edges_y, c.edges_x), (5, 5));
        let k33 = Family::from_sets(
            6,
            2,
            (1..=3).flat_map(|a| (4..=6).map(move |b| KSet::pair(a, b).unwrap())),
        )
        .unwrap();
        let c = claim_tfree_check(&k33).unwrap();
        assert_eq!((c.edges_y, c.edges_x), (6, 9));
        assert!(c.holds);
        let tri = fam(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(matches!(claim_tfree_check(&tri), Err(Error::HasTriangle { .. })));
    }

    #[test]
    fn mantel_enumeration() {
        assert_eq!(enumerate_mantel_covers(3).unwrap().count(), 7);
        assert!(enumerate_mantel_covers(4)
            .unwrap()
            .all(|g| is_mantel_cover(&g).unwrap().holds()));
        assert!(enumerate_mantel_covers(5).unwrap().all(|g| g.len() >= 4));
        assert!(enumerate_mantel_covers(8).is_err());
    }

    #[test]
    fn random_generators() {
        for seed in 0..20 {
            let g = random_triangle_free(9, seed).unwrap();
            assert!(find_triangle(&g).is_none());
            assert!(is_mantel_cover(&random_mantel_cover(8, seed).unwrap()).unwrap().holds());
            let h = random_turan_hypergraph(6, seed).unwrap();
            assert!(is_turan_hypergraph(&h).unwrap().holds());
            assert!(h.len() >= 6);
            for t in h.iter() {
                let mut smaller = h.clone();
                smaller.remove(t);
                assert!(!is_turan_hypergraph(&smaller).unwrap().holds());
            }
        }
        assert_eq!(random_turan_hypergraph(7, 3).unwrap(), random_turan_hypergraph(7, 3).unwrap());
    }

    #[test]
    fn graph_predicates() {
        assert!(is_connected(&fam(3, &[&[1, 2], &[2, 3]])));
        assert!(!is_connected(&fam(4, &[&[1, 2], &[3, 4]])));
        assert!(is_acyclic(&fam(4, &[&[1, 2], &[3, 4]])));
        assert!(!is_acyclic(&fam(3, &[&[1, 2], &[2, 3], &[1, 3]])));
    }
}
