//! Binding number by exhaustive subset scan with exact rational comparison.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`binding_number`].
pub const BINDING_CAP: usize = 22;

/// `bind(G)` as an exact ratio `|N(S)| / |S|` (not reduced), or infinite
/// when no set `S` qualifies.
#[derive(Clone, Copy, Debug)]
pub enum BindingValue {
    Finite { neighbors: usize, size: usize },
    Infinite,
}

impl BindingValue {
    /// `self ≥ num/den`, compared exactly.
    pub fn at_least(&self, num: usize, den: usize) -> bool {
        match *self {
            BindingValue::Finite { neighbors, size } => neighbors * den >= num * size,
            BindingValue::Infinite => true,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match *self {
            BindingValue::Finite { neighbors, size } => neighbors as f64 / size as f64,
            BindingValue::Infinite => f64::INFINITY,
        }
    }

    /// Reduced `(numerator, denominator)`.
    pub fn reduced(&self) -> Option<(usize, usize)> {
        match *self {
            BindingValue::Finite { neighbors, size } => {
                let g = num_integer::gcd(neighbors, size);
                Some((neighbors / g, size / g))
            }
            BindingValue::Infinite => None,
        }
    }
}

impl PartialEq for BindingValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BindingValue {}

impl PartialOrd for BindingValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BindingValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use BindingValue::*;
        match (*self, *other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, _) => Ordering::Greater,
            (_, Infinite) => Ordering::Less,
            (Finite { neighbors: a, size: b }, Finite { neighbors: c, size: d }) => (a * d).cmp(&(c * b)),
        }
    }
}

impl fmt::Display for BindingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reduced() {
            Some((p, 1)) => write!(f, "{p}"),
            Some((p, q)) => write!(f, "{p}/{q}"),
            None => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BindingResult {
    pub value: BindingValue,
    /// A minimizing `S` (the first in increasing bitmask order); empty when
    /// the value is infinite.
    pub witness: VertexSet,
}

/// `bind(G) = min |N(S)|/|S|` over nonempty `S` with `N(S) ≠ V(G)`.
pub fn binding_number(g: &Graph) -> Result<BindingResult> {
    let n = g.order();
    if n > BINDING_CAP {
        return Err(Error::SizeCap { op: "binding_number", order: n, cap: BINDING_CAP });
    }
    let full: u64 = if n == 0 { 0 } else { (1 << n) - 1 };
    let nbr: alloc::vec::Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let mut best = BindingResult { value: BindingValue::Infinite, witness: VertexSet::empty() };
    for s in 1..=full {
        let mut reach = 0u64;
        let mut bits = s;
        while bits != 0 {
            reach |= nbr[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if reach == full {
            continue;
        }
        let value = BindingValue::Finite { neighbors: reach.count_ones() as usize, size: s.count_ones() as usize };
        if value < best.value {
            best = BindingResult { value, witness: VertexSet::from_mask(s) };
            if reach == 0 {
                break;
            }
        }
    }
    Ok(best)
}

/// `bind(G) ≥ 1`.
pub fn is_one_binding(g: &Graph) -> Result<bool> {
    Ok(binding_number(g)?.value.at_least(1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn complete_graphs() {
        for n in 2..=8 {
            let r = binding_number(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!(r.value.reduced(), Some((n - 1, 1)));
            assert_eq!(r.witness.len(), 1);
        }
    }

    #[test]
    fn stars() {
        for m in 2..=8 {
            let r = binding_number(&Graph::star(m)).unwrap();
            assert_eq!(r.value.reduced(), Some((1, m)));
            assert_eq!(r.witness, (1..=m).collect());
        }
        assert!(!is_one_binding(&Graph::star(3)).unwrap());
    }

    #[test]
    fn five_cycle() {
        let r = binding_number(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(r.value.to_string(), "4/3");
        assert_eq!(r.witness.len(), 3);
    }

    #[test]
    fn exact_ordering_separates_close_ratios() {
        let a = BindingValue::Finite { neighbors: 4, size: 3 };
        let b = BindingValue::Finite { neighbors: 7, size: 5 };
        assert!(a < b);
        assert_eq!(BindingValue::Finite { neighbors: 2, size: 2 }, BindingValue::Finite { neighbors: 1, size: 1 });
        assert!(BindingValue::Finite { neighbors: 3, size: 3 }.at_least(1, 1));
    }

    #[test]
    fn one_binding_examples() {
        assert!(is_one_binding(&Graph::complete(5).unwrap()).unwrap());
        let k = |n| Graph::complete(n).unwrap();
        let gstar = k(1).join(&k(7).union(&k(2)).union(&k(1)));
        assert!(is_one_binding(&gstar).unwrap());
        assert!(matches!(binding_number(&Graph::empty(23)), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn isolated_vertex_gives_zero() {
        let r = binding_number(&Graph::complete(3).unwrap().union(&Graph::empty(1))).unwrap();
        assert_eq!(r.value.reduced(), Some((0, 1)));
        assert_eq!(r.witness, VertexSet::new(alloc::vec![3]));
    }
}
