//! `H`-assignments, `H`-factor search and the Lu–Kano criterion.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`find_h_factor`] and [`all_even_h_assignments`].
pub const FACTOR_SEARCH_CAP: usize = 16;

/// Largest order accepted by [`lu_kano_deficiency`].
pub const LU_KANO_CAP: usize = 24;

/// Admissible degree set of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HTag {
    /// Degree exactly 1.
    One,
    /// Degree 0 or 2.
    ZeroTwo,
}

impl HTag {
    fn admits(self, degree: usize) -> bool {
        match self {
            HTag::One => degree == 1,
            HTag::ZeroTwo => degree == 0 || degree == 2,
        }
    }

    fn max_degree(self) -> usize {
        match self {
            HTag::One => 1,
            HTag::ZeroTwo => 2,
        }
    }
}

/// A per-vertex choice of `{1}` or `{0, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HAssignment(Vec<HTag>);

impl HAssignment {
    pub fn new(tags: Vec<HTag>) -> HAssignment {
        HAssignment(tags)
    }

    pub fn all(n: usize, tag: HTag) -> HAssignment {
        HAssignment(vec![tag; n])
    }

    /// Bit `v` of `mask` set means vertex `v` is `One`.
    pub fn from_mask(n: usize, mask: u64) -> HAssignment {
        HAssignment((0..n).map(|v| if mask >> v & 1 == 1 { HTag::One } else { HTag::ZeroTwo }).collect())
    }

    /// Parses `'1'` (= `One`) / `'0'` (= `ZeroTwo`) per vertex.
    pub fn from_bitstring(s: &str) -> Result<HAssignment> {
        s.chars()
            .map(|c| match c {
                '1' => Ok(HTag::One),
                '0' => Ok(HTag::ZeroTwo),
                other => Err(Error::AssignmentChar(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(HAssignment)
    }

    pub fn to_bitstring(&self) -> String {
        self.0.iter().map(|t| if *t == HTag::One { '1' } else { '0' }).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tag(&self, v: usize) -> HTag {
        self.0[v]
    }

    pub fn tags(&self) -> &[HTag] {
        &self.0
    }

    /// `H^{-1}(1)`.
    pub fn ones(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, t)| **t == HTag::One).map(|(v, _)| v).collect()
    }

    pub fn ones_count(&self) -> usize {
        self.0.iter().filter(|t| **t == HTag::One).count()
    }

    pub fn is_even(&self) -> bool {
        self.ones_count().is_multiple_of(2)
    }

    fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() == g.order() {
            Ok(())
        } else {
            Err(Error::AssignmentLength { got: self.len(), expected: g.order() })
        }
    }
}

impl fmt::Display for HAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

/// Spanning subgraph given by its edge set; edges are normalized to
/// `u < v` and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactorSubgraph {
    edges: Vec<(usize, usize)>,
}

impl FactorSubgraph {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> FactorSubgraph {
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        edges.sort_unstable();
        edges.dedup();
        FactorSubgraph { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut deg = vec![0; n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

/// `true` iff `d_F(v) ∈ H(v)` for every vertex.
pub fn verify_h_factor(g: &Graph, h: &HAssignment, f: &FactorSubgraph) -> Result<bool> {
    h.check_for(g)?;
    if let Some(&(u, v)) = f.edges().iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::EdgeNotInHost(u, v));
    }
    Ok(f.degrees(g.order()).iter().enumerate().all(|(v, &d)| h.tag(v).admits(d)))
}

/// First `H`-factor in edge order, or `None`.
///
/// Backtracks over the edges of `g` in lexicographic order, trying
/// inclusion before exclusion. A branch is cut as soon as a vertex exceeds
/// its degree budget, a vertex with no undecided edges left has an
/// inadmissible degree, or some component of the still-usable edges holds
/// an odd number of vertices that need exactly one more edge.
pub fn find_h_factor(g: &Graph, h: &HAssignment) -> Result<Option<FactorSubgraph>> {
    h.check_for(g)?;
    if g.order() > FACTOR_SEARCH_CAP {
        return Err(Error::SizeCap { op: "find_h_factor", order: g.order(), cap: FACTOR_SEARCH_CAP });
    }
    if !h.is_even() {
        return Ok(None);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut search = FactorSearch {
        tags: h.tags(),
        remaining: g.degrees(),
        degree: vec![0; g.order()],
        chosen: Vec::new(),
        edges: &edges,
    };
    Ok(search.run(0).then(|| FactorSubgraph::new(search.chosen.iter().map(|&i| edges[i]))))
}

struct FactorSearch<'a> {
    tags: &'a [HTag],
    edges: &'a [(usize, usize)],
    /// Undecided incident edges.
    remaining: Vec<usize>,
    degree: Vec<usize>,
    chosen: Vec<usize>,
}

impl FactorSearch<'_> {
    fn run(&mut self, idx: usize) -> bool {
        if idx == self.edges.len() {
            return (0..self.tags.len()).all(|v| self.tags[v].admits(self.degree[v]));
        }
        if !self.parity_feasible(idx) {
            return false;
        }
        let (u, v) = self.edges[idx];
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        if self.has_room(u) && self.has_room(v) {
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen.push(idx);
            if self.settled(u) && self.settled(v) && self.run(idx + 1) {
                return true;
            }
            self.chosen.pop();
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        if self.settled(u) && self.settled(v) && self.run(idx + 1) {
            return true;
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        false
    }

    fn has_room(&self, v: usize) -> bool {
        self.degree[v] < self.tags[v].max_degree()
    }

    /// A vertex with no undecided edges must already be admissible.
    fn settled(&self, v: usize) -> bool {
        self.remaining[v] > 0 || self.tags[v].admits(self.degree[v])
    }

    fn needs_odd(&self, v: usize) -> bool {
        match self.tags[v] {
            HTag::One => self.degree[v] == 0,
            HTag::ZeroTwo => self.degree[v] == 1,
        }
    }

    /// Edges still usable from `idx` on form a graph in which every
    /// vertex needing one more edge must be paired within its component.
    fn parity_feasible(&self, idx: usize) -> bool {
        let n = self.tags.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges[idx..] {
            if self.has_room(u) && self.has_room(v) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
        let mut odd = vec![false; n];
        for v in (0..n).filter(|&v| self.needs_odd(v)) {
            let root = find(&mut parent, v);
            odd[root] = !odd[root];
        }
        !odd.contains(&true)
    }
}

/// Every assignment with `|H^{-1}(1)|` even, in increasing order of the
/// bitmask whose bit `v` marks vertex `v` as `One`.
pub fn all_even_h_assignments(g: &Graph) -> Result<impl Iterator<Item = HAssignment>> {
    let n = g.order();
    if n > FACTOR_SEARCH_CAP {
        return Err(Error::SizeCap { op: "all_even_h_assignments", order: n, cap: FACTOR_SEARCH_CAP });
    }
    Ok((0u64..1 << n).filter(|m| m.count_ones() % 2 == 0).map(move |m| HAssignment::from_mask(n, m)))
}

/// Maximum of `ω(G - S) - |S|` over all `S ⊆ V(G)` and a smallest,
/// lexicographically first maximizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LuKanoResult {
    pub max_deficiency: i64,
    pub witness: VertexSet,
}

impl LuKanoResult {
    /// `ω(G - S) ≤ |S| + 1` for every `S`.
    pub fn criterion_holds(&self) -> bool {
        self.max_deficiency <= 1
    }
}

fn components_in(g: &Graph, mut alive: u64) -> i64 {
    let mut count = 0;
    while alive != 0 {
        let mut comp = alive & alive.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grown |= g.neighbor_mask(v);
            }
            grown &= alive;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        alive &= !comp;
        count += 1;
    }
    count
}

/// Next `k`-combination of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// The Lu–Kano deficiency scan over every vertex subset (including `∅`).
///
/// Subsets are visited by size, then lexicographically, so the first strict
/// improvement is the tie-broken witness. Since `ω(G - S) ≤ n - |S|`, sizes
/// with `n - 2|S|` not above the running maximum are skipped.
pub fn lu_kano_deficiency(g: &Graph) -> Result<LuKanoResult> {
    let n = g.order();
    if n > LU_KANO_CAP {
        return Err(Error::SizeCap { op: "lu_kano_deficiency", order: n, cap: LU_KANO_CAP });
    }
    let full: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut best = LuKanoResult { max_deficiency: components_in(g, full), witness: VertexSet::empty() };
    for k in 1..=n {
        if n as i64 - 2 * k as i64 <= best.max_deficiency {
            break;
        }
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let mask = comb.iter().fold(0u64, |m, &v| m | 1 << v);
            let deficiency = components_in(g, full & !mask) - k as i64;
            if deficiency > best.max_deficiency {
                best = LuKanoResult { max_deficiency: deficiency, witness: VertexSet::new(comb.clone()) };
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    Ok(best)
}

/// `true` iff `ω(G - S) ≤ |S| + 1` for all `S`, i.e. (for connected `G`) an
/// `H`-factor exists for every even assignment.
pub fn has_all_h_factors(g: &Graph) -> Result<bool> {
    Ok(lu_kano_deficiency(g)?.criterion_holds())
}
