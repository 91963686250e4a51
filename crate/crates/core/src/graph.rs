//! Simple undirected graphs on dense vertex labels `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A finite simple graph. Vertices are `0..order()`.
///
/// Adjacency is stored as one bitset row per vertex, so the graph is
/// symmetric and loop-free by construction. Graphs are immutable once
/// built; operations that "modify" a graph return a new one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph of order `n` (`nK_1`).
    pub fn empty(n: usize) -> Graph {
        let stride = n.div_ceil(64);
        Graph { n, stride, rows: vec![0; n * stride] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidOrder { got: 0, min: 1 });
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v);
            }
        }
        Ok(g)
    }

    /// `P_n`, vertices in path order.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidOrder { got: 0, min: 1 });
        }
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidOrder { got: n, min: 3 });
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set(0, v);
        }
        g
    }

    /// `kG`: `k` disjoint copies of `g`.
    pub fn copies(k: usize, g: &Graph) -> Graph {
        (0..k).fold(Graph::empty(0), |acc, _| acc.union(g))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        for (u, v) in other.edges() {
            g.set(u + shift, v + shift);
        }
        g
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v);
            }
        }
        g
    }

    /// A copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// A copy of this graph with the edge `uv` removed (if present).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.clear(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Neighborhood of `v` as a bitmask. Only meaningful for graphs of order
    /// at most 64; used by the exhaustive subset scans.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.stride]
    }

    /// `N_G(S)`: every vertex adjacent to some member of `s`. May intersect `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut acc = vec![0u64; self.stride];
        for v in s.iter() {
            for (a, w) in acc.iter_mut().zip(self.row(v)) {
                *a |= *w;
            }
        }
        Ok(VertexSet::from_words(&acc))
    }

    /// Connected components in ascending order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&vec![false; self.n])
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// `true` iff the graph has exactly one component.
    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.components().len() == 1
    }

    /// Deletes `s` and reports the components of `G - S`.
    pub fn remove_and_analyze(&self, s: &VertexSet) -> Result<RemovalAnalysis> {
        self.check_set(s)?;
        let mut removed = vec![false; self.n];
        for v in s.iter() {
            removed[v] = true;
        }
        let components = self.components_avoiding(&removed);
        let isolated_count = components.iter().filter(|c| c.len() == 1).count();
        Ok(RemovalAnalysis { removed: s.clone(), component_count: components.len(), components, isolated_count })
    }

    /// `G[S]` with vertices relabeled `0..|S|` in increasing order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain("permutation length differs from graph order".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check_vertex(p)?;
            if core::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain("not a permutation".into()));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// `true` if every edge of `self` is an edge of `host` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.n == host.n && self.rows.iter().zip(&host.rows).all(|(a, b)| a & !b == 0)
    }

    fn components_avoiding(&self, removed: &[bool]) -> Vec<VertexSet> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(members));
        }
        out
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    fn clear(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.stride + u / 64] &= !(1 << (u % 64));
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A set of vertices, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet::from_words(&[mask])
    }

    fn from_words(words: &[u64]) -> VertexSet {
        let mut members = Vec::new();
        for (i, &word) in words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                members.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        VertexSet(members)
    }

    /// Bitmask form; every member must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| {
            debug_assert!(v < 64);
            m | 1 << v
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Outcome of deleting a vertex set `S`: the components of `G - S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalAnalysis {
    pub removed: VertexSet,
    /// `ω(G - S)`.
    pub component_count: usize,
    /// Ordered by smallest member.
    pub components: Vec<VertexSet>,
    /// Size-1 components, i.e. `i(G - S)`.
    pub isolated_count: usize,
}

impl RemovalAnalysis {
    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(VertexSet::len).collect()
    }
}
