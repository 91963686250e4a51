//! Clique-join graphs `K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})`, the extremal members
//! `G_2 = K_s ∨ (K_{n-2s-2} ∪ K_2 ∪ sK_1)` and `G_* = K_1 ∨ (K_{n-4} ∪ K_2 ∪ K_1)`,
//! the closed-form characteristic polynomials of their equitable quotient
//! matrices, and the numeric inequality chains comparing `ρ(G_2)` with
//! `ρ(G_*)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Partition;
use crate::poly::IntPolynomial;
use crate::roots::largest_real_root;
use crate::spectral::spectral_radius;
use num_bigint::BigInt;

/// Bisection tolerance used inside the case chains.
pub const CASE_ROOT_TOL: f64 = 1e-12;

/// `K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})` with `n_1 ≤ … ≤ n_t`.
///
/// Vertex layout: the `K_s` block is `0..s`, then each part in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueJoinSpec {
    s: usize,
    parts: Vec<usize>,
}

impl CliqueJoinSpec {
    pub fn new(s: usize, parts: Vec<usize>) -> Result<CliqueJoinSpec> {
        if parts.is_empty() {
            return Err(Error::Domain("a clique join needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Domain(format!("zero-sized part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain(format!("parts must be nondecreasing, got {parts:?}")));
        }
        Ok(CliqueJoinSpec { s, parts })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.s + self.parts.iter().sum::<usize>()
    }

    /// Vertex ranges: the `K_s` block followed by one block per part.
    pub fn blocks(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let mut start = self.s;
        let parts = self
            .parts
            .iter()
            .map(|&len| {
                let b: Vec<usize> = (start..start + len).collect();
                start += len;
                b
            })
            .collect();
        ((0..self.s).collect(), parts)
    }

    pub fn build(&self) -> Graph {
        let cliques = self
            .parts
            .iter()
            .fold(Graph::empty(0), |acc, &k| acc.union(&Graph::complete(k).expect("parts are positive")));
        if self.s == 0 {
            cliques
        } else {
            Graph::complete(self.s).expect("s > 0").join(&cliques)
        }
    }
}

pub fn build_clique_join(spec: &CliqueJoinSpec) -> Graph {
    spec.build()
}

pub fn g2_spec(n: usize, s: usize) -> Result<CliqueJoinSpec> {
    if s < 1 || n < 2 * s + 4 {
        return Err(Error::Domain(format!("G_2 needs s >= 1 and n >= 2s+4, got n={n}, s={s}")));
    }
    let mut parts = vec![1; s];
    parts.extend([2, n - 2 * s - 2]);
    CliqueJoinSpec::new(s, parts)
}

/// `G_2 = K_s ∨ (K_{n-2s-2} ∪ K_2 ∪ sK_1)`.
pub fn build_g2(n: usize, s: usize) -> Result<Graph> {
    Ok(g2_spec(n, s)?.build())
}

pub fn gstar_spec(n: usize) -> Result<CliqueJoinSpec> {
    if n < 5 {
        return Err(Error::Domain(format!("G_* needs n >= 5, got {n}")));
    }
    let mut parts = vec![1, 2, n - 4];
    parts.sort_unstable();
    CliqueJoinSpec::new(1, parts)
}

/// `G_* = K_1 ∨ (K_{n-4} ∪ K_2 ∪ K_1)`.
pub fn build_gstar(n: usize) -> Result<Graph> {
    Ok(gstar_spec(n)?.build())
}

/// `K_s ∨ (s+4)K_1`.
pub fn b4_spec(s: usize) -> Result<CliqueJoinSpec> {
    if s < 1 {
        return Err(Error::Domain("s must be at least 1".into()));
    }
    CliqueJoinSpec::new(s, vec![1; s + 4])
}

/// `V(K_s) ∪ V(K_{n-2s-2}) ∪ V(K_2) ∪ V(sK_1)`, the partition behind `B_2`.
pub fn g2_partition(n: usize, s: usize) -> Result<Partition> {
    g2_spec(n, s)?;
    Partition::new(
        n,
        vec![(0..s).collect(), (2 * s + 2..n).collect(), (2 * s..2 * s + 2).collect(), (s..2 * s).collect()],
    )
}

/// `V(K_s) ∪ V(2K_2) ∪ V(sK_1)` for `n = 2s+4`, the partition behind `B_3`.
pub fn g2_case2_partition(s: usize) -> Result<Partition> {
    let n = 2 * s + 4;
    g2_spec(n, s)?;
    Partition::new(n, vec![(0..s).collect(), (2 * s..n).collect(), (s..2 * s).collect()])
}

/// `V(K_s) ∪ V((s+4)K_1)`, the partition behind `B_4`.
pub fn b4_partition(s: usize) -> Result<Partition> {
    b4_spec(s)?;
    Partition::contiguous(&[s, s + 4])
}

/// `V(K_1) ∪ V(K_{n-4}) ∪ V(K_2) ∪ V(K_1)`, the partition behind `B_*`.
pub fn gstar_partition(n: usize) -> Result<Partition> {
    let (_, parts) = gstar_spec(n)?.blocks();
    let (big, pair) = if n == 5 { (1, 2) } else { (2, 1) };
    Partition::new(n, vec![vec![0], parts[big].clone(), parts[pair].clone(), parts[0].clone()])
}

fn int(x: usize) -> i128 {
    x as i128
}

/// `φ_{B_2}(x) = x^4 - (n-s-3)x^3 - (s^2+2s+1)x^2 + (s^2n+2sn+n-2s^3-6s^2-7s-3)x - s^2n + 2s^3 + 3s^2`.
pub fn phi_b2(n: usize, s: usize) -> IntPolynomial {
    let (n, s) = (int(n), int(s));
    IntPolynomial::from_descending(&[
        1,
        -(n - s - 3),
        -(s * s + 2 * s + 1),
        s * s * n + 2 * s * n + n - 2 * s * s * s - 6 * s * s - 7 * s - 3,
        -s * s * n + 2 * s * s * s + 3 * s * s,
    ])
}

/// `φ_{B_3}(x) = x^3 - sx^2 - (s^2+3s+1)x + s^2`.
pub fn phi_b3(s: usize) -> IntPolynomial {
    let s = int(s);
    IntPolynomial::from_descending(&[1, -s, -(s * s + 3 * s + 1), s * s])
}

/// `φ_{B_4}(x) = x^2 - (s-1)x - s(s+4)`.
pub fn phi_b4(s: usize) -> IntPolynomial {
    let s = int(s);
    IntPolynomial::from_descending(&[1, -(s - 1), -s * (s + 4)])
}

/// `φ_{B_*}(x) = x^4 - (n-4)x^3 - 4x^2 + (4n-18)x - n + 5`.
pub fn phi_bstar(n: usize) -> IntPolynomial {
    let n = int(n);
    IntPolynomial::from_descending(&[1, -(n - 4), -4, 4 * n - 18, -n + 5])
}

/// Largest root of `φ_{B_4}` in closed form: `(s - 1 + √(5s² + 14s + 1)) / 2`.
pub fn b4_closed_form_root(s: usize) -> f64 {
    let s = s as f64;
    (s - 1.0 + (5.0 * s * s + 14.0 * s + 1.0).sqrt()) / 2.0
}

/// `f(x) = -x^3 + (s+3)x^2 - ((s+3)n - 2s^2 - 8s - 15)x + (s+1)n - 2s^2 - 5s - 5` as a polynomial in `x`.
pub fn aux_f_poly(n: usize, s: usize) -> IntPolynomial {
    let (n, s) = (int(n), int(s));
    IntPolynomial::from_descending(&[
        -1,
        s + 3,
        -((s + 3) * n - 2 * s * s - 8 * s - 15),
        (s + 1) * n - 2 * s * s - 5 * s - 5,
    ])
}

/// `h(x) = -sx^3 + (s^2+3s-3)x^2 - (s^2-8s+2)x - 2s + 1` as a polynomial in `x`.
pub fn aux_h_poly(s: usize) -> IntPolynomial {
    let s = int(s);
    IntPolynomial::from_descending(&[-s, s * s + 3 * s - 3, -(s * s - 8 * s + 2), -2 * s + 1])
}

pub fn aux_f(x: f64, n: usize, s: usize) -> f64 {
    aux_f_poly(n, s).eval_f64(x)
}

/// `g(n) = -n^3 + (3s+9)n^2 - (2s^2+15s+20)n + 2s^2 + 10s + 4`, exact.
pub fn aux_g_exact(n: usize, s: usize) -> i128 {
    let (n, s) = (int(n), int(s));
    -n * n * n + (3 * s + 9) * n * n - (2 * s * s + 15 * s + 20) * n + 2 * s * s + 10 * s + 4
}

pub fn aux_g(n: usize, s: usize) -> f64 {
    aux_g_exact(n, s) as f64
}

pub fn aux_h(x: f64, s: usize) -> f64 {
    aux_h_poly(s).eval_f64(x)
}

/// Outcome of comparing both sides of the clique-join inequality
/// `ρ(K_s ∨ (K_{n_t} ∪ … ∪ K_{n_1})) < ρ(K_s ∨ (K_{n-s-t-p+2} ∪ K_p ∪ (t-2)K_1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct CliqueJoinComparison {
    pub lhs: CliqueJoinSpec,
    pub rhs: CliqueJoinSpec,
    pub rho_lhs: f64,
    pub rho_rhs: f64,
    /// `ρ(rhs) - ρ(lhs)`.
    pub margin: f64,
    /// `margin > 10·tol`.
    pub passed: bool,
}

/// The right-hand graph for `(s, parts, p)` after checking the hypotheses
/// `s ≥ 1`, `t ≥ 2`, `n_{t-1} ≥ p ≥ 1` and `n_t < n-s-t-p+2`.
pub fn clique_join_rhs(s: usize, parts: &[usize], p: usize) -> Result<CliqueJoinSpec> {
    let lhs = CliqueJoinSpec::new(s, parts.to_vec())?;
    let t = parts.len();
    if s < 1 || t < 2 {
        return Err(Error::Domain(format!("need s >= 1 and t >= 2, got s={s}, t={t}")));
    }
    let n = lhs.order();
    if p < 1 || p > parts[t - 2] {
        return Err(Error::Domain(format!("need n_(t-1) >= p >= 1, got p={p}, n_(t-1)={}", parts[t - 2])));
    }
    // n_t < n - s - t - p + 2
    if parts[t - 1] + s + t + p >= n + 2 {
        return Err(Error::Domain(format!("need n_t < n-s-t-p+2, got n_t={}, n={n}", parts[t - 1])));
    }
    let mut rhs = vec![1; t - 2];
    rhs.extend([p, n + 2 - s - t - p]);
    CliqueJoinSpec::new(s, rhs)
}

pub fn check_lemma22(s: usize, parts: &[usize], p: usize, tol: f64) -> Result<CliqueJoinComparison> {
    let rhs = clique_join_rhs(s, parts, p)?;
    let lhs = CliqueJoinSpec::new(s, parts.to_vec())?;
    let rho_lhs = spectral_radius(&lhs.build(), tol)?.radius;
    let rho_rhs = spectral_radius(&rhs.build(), tol)?.radius;
    let margin = rho_rhs - rho_lhs;
    Ok(CliqueJoinComparison { lhs, rhs, rho_lhs, rho_rhs, margin, passed: margin > 10.0 * tol })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofCase {
    /// `n ≥ 2s + 5`, `s ≥ 2`.
    One,
    /// `n = 2s + 4`, `s ≥ 4`.
    Two,
}

impl ProofCase {
    pub fn number(self) -> u8 {
        match self {
            ProofCase::One => 1,
            ProofCase::Two => 2,
        }
    }
}

/// One link of an inequality chain: `lhs` compared against `rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainStep {
    pub label: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl ChainStep {
    fn less(label: &'static str, lhs: f64, rhs: f64) -> ChainStep {
        ChainStep { label, lhs, rhs, holds: lhs < rhs }
    }

    fn exact(label: &'static str, holds: bool) -> ChainStep {
        ChainStep { label, lhs: 0.0, rhs: 0.0, holds }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseCheckRecord {
    pub n: usize,
    pub s: usize,
    pub case: ProofCase,
    pub rho_g2: f64,
    pub rho_gstar: f64,
    /// `φ_{B_*}(ρ(G_2))`.
    pub phi_star_at_rho: f64,
    /// `|φ_{B_*}(ρ(G_2))|`.
    pub margin: f64,
    /// `φ_{B_*}(ρ(G_2)) < 0`.
    pub passed: bool,
    /// Every step of the chain holds, the final one included.
    pub chain_holds: bool,
    pub steps: Vec<ChainStep>,
}

impl CaseCheckRecord {
    pub fn failed_steps(&self) -> impl Iterator<Item = &ChainStep> {
        self.steps.iter().filter(|s| !s.holds)
    }
}

fn finish(n: usize, s: usize, case: ProofCase, rho_g2: f64, steps: Vec<ChainStep>) -> Result<CaseCheckRecord> {
    let rho_gstar = largest_real_root(&phi_bstar(n), CASE_ROOT_TOL)?;
    let phi_star_at_rho = phi_bstar(n).eval_f64(rho_g2);
    let mut steps = steps;
    steps.push(ChainStep::less("phi_Bstar(rho(G2)) < 0", phi_star_at_rho, 0.0));
    steps.push(ChainStep::less("rho(G2) < rho(G*)", rho_g2, rho_gstar));
    let chain_holds = steps.iter().all(|s| s.holds);
    Ok(CaseCheckRecord {
        n,
        s,
        case,
        rho_g2,
        rho_gstar,
        phi_star_at_rho,
        margin: phi_star_at_rho.abs(),
        passed: phi_star_at_rho < 0.0,
        chain_holds,
        steps,
    })
}

/// Case `n ≥ 2s+5`: `φ_{B_*}(ρ(G_2)) = (s-1)f(ρ(G_2)) < (s-1)g(n) < 0`.
pub fn check_case1(n: usize, s: usize) -> Result<CaseCheckRecord> {
    if s < 2 || n < 2 * s + 5 {
        return Err(Error::Domain(format!("case 1 needs s >= 2 and n >= 2s+5, got n={n}, s={s}")));
    }
    let rho = largest_real_root(&phi_b2(n, s), CASE_ROOT_TOL)?;
    let lower = (n - s - 3) as f64;
    let identity = &phi_bstar(n) - &phi_b2(n, s) == aux_f_poly(n, s).scale(&BigInt::from(s - 1));
    let f_at_lower_is_g = aux_f_poly(n, s).eval_int(&BigInt::from(n - s - 3)) == BigInt::from(aux_g_exact(n, s));
    let g = aux_g(n, s);
    let steps = vec![
        ChainStep::exact("phi_Bstar - phi_B2 = (s-1) f", identity),
        ChainStep::less("n-s-3 < rho(G2)", lower, rho),
        ChainStep::exact("f(n-s-3) = g(n)", f_at_lower_is_g),
        ChainStep::less("f(rho(G2)) < g(n)", aux_f(rho, n, s), g),
        ChainStep::less("g(n) < 0", g, 0.0),
    ];
    finish(n, s, ProofCase::One, rho, steps)
}

/// Case `n = 2s+4`: `φ_{B_*}(ρ(G_2)) = h(ρ(G_2)) < 0`.
pub fn check_case2(s: usize) -> Result<CaseCheckRecord> {
    if s < 4 {
        return Err(Error::Domain(format!("case 2 needs s >= 4, got s={s}")));
    }
    let n = 2 * s + 4;
    let rho = largest_real_root(&phi_b3(s), CASE_ROOT_TOL)?;
    let identity = &phi_bstar(n) - &(&IntPolynomial::x() * &phi_b3(s)) == aux_h_poly(s);
    let rho_b4 = largest_real_root(&phi_b4(s), CASE_ROOT_TOL)?;
    let closed = b4_closed_form_root(s);
    let floor = 1.5 * s as f64 + 1.0;
    let steps = vec![
        ChainStep::exact("phi_Bstar - x phi_B3 = h", identity),
        ChainStep::less("rho(K_s v (s+4)K_1) < rho(G2)", rho_b4, rho),
        ChainStep {
            label: "rho(K_s v (s+4)K_1) = (s-1+sqrt(5s^2+14s+1))/2",
            lhs: rho_b4,
            rhs: closed,
            holds: (rho_b4 - closed).abs() <= 1e-9,
        },
        ChainStep { label: "3s/2+1 <= closed form", lhs: floor, rhs: closed, holds: floor <= closed },
        ChainStep::less("h(rho(G2)) < h(closed form)", aux_h(rho, s), aux_h(closed, s)),
        ChainStep::less("h(closed form) < 0", aux_h(closed, s), 0.0),
    ];
    finish(n, s, ProofCase::Two, rho, steps)
}

/// Dispatches to the case covering `(n, s)`.
pub fn check_case(n: usize, s: usize) -> Result<CaseCheckRecord> {
    if n == 2 * s + 4 {
        check_case2(s)
    } else if n >= 2 * s + 5 {
        check_case1(n, s)
    } else {
        Err(Error::Domain(format!("(n={n}, s={s}) is outside both cases")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::matrix::{adjacency_matrix, char_poly_exact, is_equitable, quotient_matrix, IntMatrix};
    use crate::DEFAULT_POWER_TOL;

    fn quotient_int(g: &Graph, p: &Partition) -> IntMatrix {
        quotient_matrix(&adjacency_matrix(g), p).unwrap().to_integer().unwrap()
    }

    #[test]
    fn clique_join_examples() {
        let g = build_clique_join(&CliqueJoinSpec::new(1, vec![1, 2, 7]).unwrap());
        assert_eq!((g.order(), g.edge_count()), (11, 32));
        assert_eq!(build_clique_join(&CliqueJoinSpec::new(0, vec![6]).unwrap()), Graph::complete(6).unwrap());
        let g2 = build_clique_join(&CliqueJoinSpec::new(2, vec![1, 1, 2, 5]).unwrap());
        assert_eq!(g2, build_g2(11, 2).unwrap());
        assert!(CliqueJoinSpec::new(1, vec![0, 2]).is_err());
        assert!(CliqueJoinSpec::new(1, vec![3, 2]).is_err());
        assert!(CliqueJoinSpec::new(1, vec![]).is_err());
    }

    #[test]
    fn g2_domain() {
        assert!(build_g2(10, 3).is_ok());
        assert!(build_g2(9, 3).is_err());
        assert!(build_g2(8, 0).is_err());
        let g = build_g2(2 * 4 + 4, 4).unwrap();
        let expected =
            Graph::complete(4).unwrap().join(&Graph::copies(2, &Graph::complete(2).unwrap()).union(&Graph::empty(4)));
        assert!(is_isomorphic(&g, &expected));
    }

    #[test]
    fn gstar_examples() {
        assert_eq!(build_gstar(11).unwrap().edge_count(), 32);
        let k = |n| Graph::complete(n).unwrap();
        assert!(is_isomorphic(&build_gstar(5).unwrap(), &k(1).join(&k(1).union(&k(2)).union(&k(1)))));
        assert!(build_gstar(4).is_err());
        for n in 6..=16 {
            assert!(is_isomorphic(&build_gstar(n).unwrap(), &build_g2(n, 1).unwrap()));
        }
    }

    #[test]
    fn displayed_quotient_matrices() {
        let (n, s) = (13i64, 3i64);
        let q = quotient_int(&build_g2(13, 3).unwrap(), &g2_partition(13, 3).unwrap());
        let b2 = IntMatrix::from_rows(&[
            vec![s - 1, n - 2 * s - 2, 2, s],
            vec![s, n - 2 * s - 3, 0, 0],
            vec![s, 0, 1, 0],
            vec![s, 0, 0, 0],
        ])
        .unwrap();
        assert_eq!(q, b2);

        let q = quotient_int(&build_g2(12, 4).unwrap(), &g2_case2_partition(4).unwrap());
        assert_eq!(q, IntMatrix::from_rows(&[vec![3, 4, 4], vec![4, 1, 0], vec![4, 0, 0]]).unwrap());

        let q = quotient_int(&b4_spec(2).unwrap().build(), &b4_partition(2).unwrap());
        assert_eq!(q, IntMatrix::from_rows(&[vec![1, 6], vec![2, 0]]).unwrap());

        let q = quotient_int(&build_gstar(11).unwrap(), &gstar_partition(11).unwrap());
        let bstar =
            IntMatrix::from_rows(&[vec![0, 7, 2, 1], vec![1, 6, 0, 0], vec![1, 0, 1, 0], vec![1, 0, 0, 0]]).unwrap();
        assert_eq!(q, bstar);
    }

    #[test]
    fn partitions_are_equitable() {
        for n in 5..=20 {
            let g = build_gstar(n).unwrap();
            assert!(is_equitable(&adjacency_matrix(&g), &gstar_partition(n).unwrap()).unwrap(), "n={n}");
        }
        for s in 1..=4 {
            for n in 2 * s + 4..=2 * s + 10 {
                let g = build_g2(n, s).unwrap();
                assert!(is_equitable(&adjacency_matrix(&g), &g2_partition(n, s).unwrap()).unwrap());
            }
            let g = build_g2(2 * s + 4, s).unwrap();
            assert!(is_equitable(&adjacency_matrix(&g), &g2_case2_partition(s).unwrap()).unwrap());
        }
    }

    #[test]
    fn closed_form_polynomials_instantiated() {
        assert_eq!(phi_b2(11, 2), IntPolynomial::from_descending(&[1, -6, -9, 42, -16]));
        assert_eq!(phi_b3(4), IntPolynomial::from_descending(&[1, -4, -29, 16]));
        assert_eq!(phi_b4(2), IntPolynomial::from_descending(&[1, -1, -12]));
        assert_eq!(phi_bstar(11), IntPolynomial::from_descending(&[1, -7, -4, 26, -6]));
    }

    #[test]
    fn closed_forms_match_quotient_char_polys() {
        let q = quotient_int(&build_g2(12, 2).unwrap(), &g2_partition(12, 2).unwrap());
        assert_eq!(char_poly_exact(&q), phi_b2(12, 2));
        for s in 4..=8 {
            let q = quotient_int(&build_g2(2 * s + 4, s).unwrap(), &g2_case2_partition(s).unwrap());
            assert_eq!(char_poly_exact(&q), phi_b3(s));
        }
        // s = 1: K_1 v (2K_2 u K_1) still follows the formula
        let q = quotient_int(&build_g2(6, 1).unwrap(), &g2_case2_partition(1).unwrap());
        assert_eq!(char_poly_exact(&q), phi_b3(1));
    }

    #[test]
    fn bstar_is_b2_at_s_one() {
        for n in 5..=40 {
            assert_eq!(phi_bstar(n), phi_b2(n, 1));
        }
    }

    #[test]
    fn b2_at_smallest_case_one_order() {
        // n = 2s+5: x^4 - (s+2)x^3 - (s+1)^2 x^2 + ...
        for s in 1..=10usize {
            let p = phi_b2(2 * s + 5, s);
            assert_eq!(p.coeff(4), BigInt::from(1));
            assert_eq!(p.coeff(3), BigInt::from(-(s as i64 + 2)));
            assert_eq!(p.coeff(2), BigInt::from(-((s as i64 + 1).pow(2))));
        }
    }

    #[test]
    fn auxiliary_identities() {
        for s in 2..=10 {
            assert_eq!(aux_g_exact(2 * s + 5, s), -2 * (s as i128).pow(2) + 4);
            for n in 2 * s + 5..=2 * s + 25 {
                let lhs = &phi_bstar(n) - &phi_b2(n, s);
                assert_eq!(lhs, aux_f_poly(n, s).scale(&BigInt::from(s - 1)));
                assert_eq!(aux_f_poly(n, s).eval_int(&BigInt::from(n - s - 3)), BigInt::from(aux_g_exact(n, s)));
            }
        }
        for s in 1..=12 {
            let lhs = &phi_bstar(2 * s + 4) - &(&IntPolynomial::x() * &phi_b3(s));
            assert_eq!(lhs, aux_h_poly(s));
        }
    }

    #[test]
    fn derivative_signs_on_grids() {
        // f' < 0 for x >= n-s-3 and g decreasing for n >= 2s+5 (s >= 2)
        for s in 2..=10 {
            for n in 2 * s + 5..=60 {
                let fp = aux_f_poly(n, s).derivative();
                for k in 0..40 {
                    let x = (n - s - 3) as f64 + k as f64 * 0.5;
                    assert!(fp.eval_f64(x) < 0.0, "f'({x}) n={n} s={s}");
                }
                assert!(aux_g_exact(n + 1, s) < aux_g_exact(n, s));
            }
        }
        // h' < 0 for x >= 3s/2 + 1 (s >= 4)
        for s in 4..=20 {
            let hp = aux_h_poly(s).derivative();
            for k in 0..40 {
                let x = 1.5 * s as f64 + 1.0 + k as f64 * 0.5;
                assert!(hp.eval_f64(x) < 0.0);
            }
        }
    }

    #[test]
    fn b4_root_closed_form() {
        for s in 2..=12 {
            let r = largest_real_root(&phi_b4(s), crate::DEFAULT_ROOT_TOL).unwrap();
            assert!((r - b4_closed_form_root(s)).abs() <= 1e-9);
            assert!(b4_closed_form_root(s) >= 1.5 * s as f64 + 1.0 - 1e-12);
        }
        assert_eq!(largest_real_root(&phi_b4(2), crate::DEFAULT_ROOT_TOL).unwrap(), 4.0);
    }

    #[test]
    fn gstar_radius_from_both_routes() {
        for n in 11..=20 {
            let full = spectral_radius(&build_gstar(n).unwrap(), DEFAULT_POWER_TOL).unwrap().radius;
            let quotient = largest_real_root(&phi_bstar(n), crate::DEFAULT_ROOT_TOL).unwrap();
            assert!((full - quotient).abs() <= 2e-9, "n={n}: {full} vs {quotient}");
        }
    }

    #[test]
    fn clique_join_comparison_examples() {
        let c = check_lemma22(1, &[1, 2, 3], 1, DEFAULT_POWER_TOL).unwrap();
        assert_eq!(c.rhs, CliqueJoinSpec::new(1, vec![1, 1, 4]).unwrap());
        assert!(c.passed && c.margin > 0.0);
        let c = check_lemma22(2, &[1, 1, 2, 4], 1, DEFAULT_POWER_TOL).unwrap();
        assert_eq!(c.rhs, CliqueJoinSpec::new(2, vec![1, 1, 1, 5]).unwrap());
        assert!(c.passed);
        // n_t = 3 is not below n-s-t-p+2 = 7-1-3-2+2 = 3
        assert!(check_lemma22(1, &[1, 2, 3], 2, DEFAULT_POWER_TOL).is_err());
        assert!(check_lemma22(2, &[1, 1, 2, 4], 2, DEFAULT_POWER_TOL).is_err());
        assert!(check_lemma22(1, &[2, 2, 5], 3, DEFAULT_POWER_TOL).is_err());
        assert!(check_lemma22(0, &[1, 2, 3], 1, DEFAULT_POWER_TOL).is_err());
        assert!(check_lemma22(1, &[4], 1, DEFAULT_POWER_TOL).is_err());
    }

    #[test]
    fn case_checks() {
        let r = check_case1(12, 2).unwrap();
        assert!(r.passed && r.chain_holds, "{:?}", r.steps);
        assert!(r.phi_star_at_rho < 0.0);
        let r = check_case2(4).unwrap();
        assert_eq!(r.n, 12);
        assert!(r.passed && r.chain_holds, "{:?}", r.steps);
        assert!(check_case(11, 3).unwrap().passed);
        assert!(check_case(9, 3).is_err());
        assert!(check_case1(8, 2).is_err());
        assert!(check_case2(3).is_err());
    }
}
