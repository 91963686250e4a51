//! Exact integer and rational matrices, partitions, quotient matrices and
//! characteristic polynomials.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

/// Square matrix of machine integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> IntMatrix {
        IntMatrix { order, entries: vec![0; order * order] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::NotSquare);
        }
        Ok(IntMatrix { order, entries: rows.concat() })
    }

    /// `A(G)`: `a_ij = 1` iff `ij` is an edge.
    pub fn adjacency(g: &Graph) -> IntMatrix {
        let n = g.order();
        let mut m = IntMatrix::zeros(n);
        for (u, v) in g.edges() {
            m.entries[u * n + v] = 1;
            m.entries[v * n + u] = 1;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&e| BigRational::from_integer(e.into())).collect(),
        }
    }

    /// `det(xI - M)`, exact.
    pub fn char_poly(&self) -> IntPolynomial {
        let rows: Vec<Vec<BigInt>> =
            (0..self.order).map(|i| self.row(i).iter().map(|&e| BigInt::from(e)).collect()).collect();
        let coeffs = faddeev_leverrier(&rows, |num, k| {
            let (q, r) = num.div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier division is exact over the integers");
            q
        });
        IntPolynomial::new(coeffs)
    }
}

/// `A(G)` for a graph.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::adjacency(g)
}

/// `det(xI - M)` computed by Faddeev–LeVerrier in exact integer arithmetic.
pub fn char_poly_exact(m: &IntMatrix) -> IntPolynomial {
    m.char_poly()
}

/// Square matrix of exact rationals (quotient matrices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    /// The integer matrix with the same entries, if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| if e.is_integer() { i64::try_from(e.to_integer()).ok() } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(IntMatrix { order: self.order, entries })
    }

    /// Monic `det(xI - M)` with rational coefficients, ascending.
    pub fn char_poly(&self) -> Vec<BigRational> {
        let rows: Vec<Vec<BigRational>> =
            (0..self.order).map(|i| self.entries[i * self.order..(i + 1) * self.order].to_vec()).collect();
        faddeev_leverrier(&rows, |num, k| num / BigRational::from_integer(BigInt::from(k)))
    }

    /// The characteristic polynomial scaled by the LCM of its denominators,
    /// giving an integer polynomial with the same roots.
    pub fn char_poly_cleared(&self) -> IntPolynomial {
        clear_denominators(&self.char_poly())
    }
}

/// Multiplies rational coefficients by the LCM of their denominators.
pub fn clear_denominators(coeffs: &[BigRational]) -> IntPolynomial {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPolynomial::new(coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect())
}

/// Coefficients of `det(xI - A)`, ascending, via
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
fn faddeev_leverrier<T>(a: &[Vec<T>], divide: impl Fn(T, usize) -> T) -> Vec<T>
where
    T: Clone + Zero + One + core::ops::Neg<Output = T>,
    for<'x> &'x T: core::ops::Mul<&'x T, Output = T>,
{
    let n = a.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].clone() + coeffs[n - k + 1].clone();
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace = (0..n).fold(T::zero(), |acc, i| acc + am[i][i].clone());
        coeffs[n - k] = divide(-trace, k);
    }
    coeffs
}

fn mat_mul<T>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>>
where
    T: Clone + Zero,
    for<'x> &'x T: core::ops::Mul<&'x T, Output = T>,
{
    let n = a.len();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].clone() + &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// An ordered partition of `0..n` into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that `blocks` are nonempty, disjoint and cover `0..n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::InvalidPartition(format!("index {i} out of range 0..{n}")));
                }
                if core::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidPartition(format!("index {i} appears twice")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("index {i} not covered")));
        }
        Ok(Partition { blocks })
    }

    /// Contiguous blocks of the given sizes: `[0..s0), [s0..s0+s1), ...`.
    pub fn contiguous(sizes: &[usize]) -> Result<Partition> {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&len| {
                let block: Vec<usize> = (start..start + len).collect();
                start += len;
                block
            })
            .collect();
        Partition::new(start, blocks)
    }

    pub fn singletons(n: usize) -> Partition {
        Partition { blocks: (0..n).map(|i| vec![i]).collect() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    fn covered(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn check_against(&self, m: &IntMatrix) -> Result<()> {
        if self.covered() != m.order() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} indices, matrix has order {}",
                self.covered(),
                m.order()
            )));
        }
        Ok(())
    }
}

fn block_row_sum(m: &IntMatrix, row: usize, cols: &[usize]) -> i64 {
    cols.iter().map(|&j| m.get(row, j)).sum()
}

/// Quotient matrix: entry `(i, j)` is the sum of block `M_ij` divided by
/// the number of rows of the block.
pub fn quotient_matrix(m: &IntMatrix, p: &Partition) -> Result<RatMatrix> {
    p.check_against(m)?;
    let r = p.len();
    let mut entries = Vec::with_capacity(r * r);
    for rows in p.blocks() {
        for cols in p.blocks() {
            let total: i64 = rows.iter().map(|&i| block_row_sum(m, i, cols)).sum();
            entries.push(BigRational::new(total.into(), (rows.len() as i64).into()));
        }
    }
    Ok(RatMatrix { order: r, entries })
}

/// `true` iff every block `M_ij` has constant row sums.
pub fn is_equitable(m: &IntMatrix, p: &Partition) -> Result<bool> {
    p.check_against(m)?;
    Ok(p.blocks().iter().all(|rows| {
        p.blocks().iter().all(|cols| {
            let first = block_row_sum(m, rows[0], cols);
            rows.iter().all(|&i| block_row_sum(m, i, cols) == first)
        })
    }))
}
