//! Spectral radius and Perron vector by power iteration.
//!
//! Iteration runs on `A + I` rather than `A`: for a connected graph the
//! shifted matrix is primitive, so bipartite graphs (whose spectrum is
//! symmetric about zero) converge instead of oscillating. The eigenvalue
//! estimate is the Rayleigh quotient of `A` at the current unit vector and
//! the stopping rule is the residual `‖Ax − ρx‖∞ ≤ tol`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Iteration cap for power iteration.
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct PerronData {
    /// `ρ(G)`.
    pub radius: f64,
    /// Unit-norm, nonnegative; zero outside the component attaining `ρ`
    /// for disconnected graphs.
    pub vector: Vec<f64>,
    /// `‖Ax − ρx‖∞` at termination.
    pub residual: f64,
    pub iterations: usize,
}

fn neighbor_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).collect()).collect()
}

fn multiply(adj: &[Vec<usize>], x: &[f64], out: &mut [f64]) {
    for (o, nbrs) in out.iter_mut().zip(adj) {
        *o = nbrs.iter().map(|&w| x[w]).sum();
    }
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
}

/// Power iteration for a connected graph.
fn iterate_connected(g: &Graph, tol: f64, max_iterations: usize) -> Result<PerronData> {
    let n = g.order();
    let adj = neighbor_lists(g);
    let mut x = vec![1.0; n];
    normalize(&mut x);
    let mut ax = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 0..max_iterations {
        multiply(&adj, &x, &mut ax);
        let rho: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        residual = x.iter().zip(&ax).map(|(xi, yi)| (yi - rho * xi).abs()).fold(0.0, f64::max);
        if residual <= tol {
            return Ok(PerronData { radius: rho, vector: x, residual, iterations: it });
        }
        for (xi, yi) in x.iter_mut().zip(&ax) {
            *xi += yi;
        }
        normalize(&mut x);
    }
    Err(Error::NoConvergence { iterations: max_iterations, residual })
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(alloc::format!("tolerance must be positive, got {tol}")))
    }
}

/// `ρ(G)` with its Perron vector. Disconnected graphs are handled per
/// component; the vector of the component with the largest radius (first
/// one on ties) is zero-padded to the full vertex set.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<PerronData> {
    spectral_radius_capped(g, tol, MAX_ITERATIONS)
}

pub fn spectral_radius_capped(g: &Graph, tol: f64, max_iterations: usize) -> Result<PerronData> {
    check_tol(tol)?;
    if g.order() == 0 {
        return Err(Error::InvalidOrder { got: 0, min: 1 });
    }
    let components = g.components();
    if components.len() == 1 {
        return iterate_connected(g, tol, max_iterations);
    }
    let mut best: Option<(PerronData, &crate::graph::VertexSet)> = None;
    let mut iterations = 0;
    let mut residual: f64 = 0.0;
    for comp in &components {
        let data = iterate_connected(&g.induced_subgraph(comp)?, tol, max_iterations)?;
        iterations += data.iterations;
        residual = residual.max(data.residual);
        if best.as_ref().is_none_or(|(b, _)| data.radius > b.radius) {
            best = Some((data, comp));
        }
    }
    let (data, comp) = best.expect("at least one component");
    let mut vector = vec![0.0; g.order()];
    for (local, v) in comp.iter().enumerate() {
        vector[v] = data.vector[local];
    }
    Ok(PerronData { radius: data.radius, vector, residual, iterations })
}

/// Perron vector of a connected graph.
pub fn perron_vector(g: &Graph, tol: f64) -> Result<PerronData> {
    check_tol(tol)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    iterate_connected(g, tol, MAX_ITERATIONS)
}
