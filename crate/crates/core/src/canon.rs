//! Canonical labeling, small-order enumeration and isomorphism testing.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle adjacency bitstring over all vertex permutations, with
//! bits taken column by column (`(0,1), (0,2), (1,2), (0,3), ...`). The
//! search fixes one position at a time and prunes any partial labeling
//! whose prefix already exceeds the best complete string found.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_code`] (the bitstring must fit a `u64`).
pub const CANON_MAX_ORDER: usize = 11;

/// Largest order accepted by [`enumerate_connected`].
pub const ENUMERATE_MAX_ORDER: usize = 8;

/// Canonical bitstring packed into an integer, first bit most significant.
/// Two graphs of the same order are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::SizeCap { op: "canonical_code", order: n, cap: CANON_MAX_ORDER });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut best = if total == 0 { 0 } else { u64::MAX >> (64 - total) };
    let mut perm = Vec::with_capacity(n);
    search(g, total, 0, &mut perm, 0, &mut best);
    Ok(best)
}

fn search(g: &Graph, total: usize, used: u64, perm: &mut Vec<usize>, prefix: u64, best: &mut u64) {
    let depth = perm.len();
    if depth == g.order() {
        *best = (*best).min(prefix);
        return;
    }
    let len = depth * (depth + 1) / 2;
    for v in 0..g.order() {
        if used >> v & 1 == 1 {
            continue;
        }
        let column = perm.iter().fold(0u64, |acc, &u| acc << 1 | g.has_edge(u, v) as u64);
        let next = prefix << depth | column;
        if next > *best >> (total - len) {
            continue;
        }
        perm.push(v);
        search(g, total, used | 1 << v, perm, next, best);
        perm.pop();
    }
}

/// Rebuilds the graph of order `n` whose canonical bitstring is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code describes a simple graph")
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.order(), canonical_code(g)?))
}

/// One canonical representative per isomorphism class of connected graphs
/// of order `n`, sorted by canonical code.
///
/// Built by vertex extension: every connected graph has a vertex whose
/// removal leaves it connected, so extending each connected graph of order
/// `n - 1` by a vertex with every nonempty neighbor set reaches all classes.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > ENUMERATE_MAX_ORDER {
        return Err(Error::Domain(alloc::format!(
            "enumerate_connected supports 1 <= n <= {ENUMERATE_MAX_ORDER}, got {n}"
        )));
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_from_code(order - 1, code);
            for mask in 1u64..1 << (order - 1) {
                let extended = Graph::from_edges(
                    order,
                    base.edges().chain((0..order - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, order - 1))),
                )?;
                next.insert(canonical_code(&extended)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(move |code| graph_from_code(n, code)))
}

/// Color refinement run on both graphs at once so colors are comparable.
fn refined_colors(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g1.order();
    let mut colors: Vec<usize> = g1.degrees().into_iter().chain(g2.degrees()).collect();
    let graph_of = |v: usize| if v < n { (g1, v) } else { (g2, v - n) };
    loop {
        let mut signatures = Vec::with_capacity(2 * n);
        for v in 0..2 * n {
            let (g, local) = graph_of(v);
            let offset = if v < n { 0 } else { n };
            let mut around: Vec<usize> = g.neighbors(local).map(|w| colors[w + offset]).collect();
            around.sort_unstable();
            signatures.push((colors[v], around));
        }
        let palette: BTreeMap<_, usize> =
            signatures.iter().cloned().collect::<BTreeSet<_>>().into_iter().zip(0..).collect();
        let refined: Vec<usize> = signatures.iter().map(|s| palette[s]).collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        let after = palette.len();
        colors = refined;
        if after == before {
            break;
        }
    }
    let second = colors.split_off(n);
    (colors, second)
}

/// `true` iff an adjacency-preserving bijection exists. Graphs of different
/// order are simply non-isomorphic.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    let n = g1.order();
    if n != g2.order() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let (c1, c2) = refined_colors(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return false;
    }
    // map rarest colors first
    let mut freq = BTreeMap::new();
    for &c in &c1 {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (freq[&c1[v]], c1[v], v));
    let mut mapping = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    extend_mapping(g1, g2, &c1, &c2, &order, 0, &mut mapping, &mut taken)
}

#[allow(clippy::too_many_arguments)]
fn extend_mapping(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    taken: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.order() {
        if taken[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g1.has_edge(u, v) == g2.has_edge(mapping[u], w));
        if !consistent {
            continue;
        }
        mapping[v] = w;
        taken[w] = true;
        if extend_mapping(g1, g2, c1, c2, order, depth + 1, mapping, taken) {
            return true;
        }
        taken[w] = false;
    }
    mapping[v] = usize::MAX;
    false
}
