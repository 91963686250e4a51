//! Verification campaigns: the Lu–Kano equivalence on all small connected
//! graphs, the clique-join family scan against `G_*`, a seeded random search
//! for counterexamples to the spectral condition, and the sharpness checks
//! on `G_*` itself.

use std::collections::BTreeMap;
use std::time::Instant;

use hfactor_core::extremal::{build_gstar, phi_bstar, CliqueJoinSpec};
use hfactor_core::{
    all_even_h_assignments, binding_number, enumerate_connected, find_h_factor, has_all_h_factors, is_isomorphic,
    largest_real_root, lu_kano_deficiency, spectral_radius, Graph, HAssignment, HTag, VertexSet, DEFAULT_POWER_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::graph6::write_graph6;
use crate::report::{VerificationReport, Violation};
use crate::Error;

pub const EQUIVALENCE_MAX_ORDER: usize = 7;
pub const SEARCH_MIN_ORDER: usize = 11;
pub const SEARCH_MAX_ORDER: usize = 13;
/// Largest order for which sharpness exhibits a concrete factorless assignment.
pub const SHARPNESS_CONSTRUCTIVE_CAP: usize = 13;
/// Strict margin required between `ρ(G_*)` and every other family member.
pub const FAMILY_MARGIN: f64 = 1e-6;
/// Slack in `ρ(G) ≥ ρ(G_*) − tol` so rounding never hides a candidate.
pub const HYPOTHESIS_TOL: f64 = 1e-9;
/// Edge probabilities cycled through by the random search.
pub const SEARCH_PROBABILITIES: [f64; 4] = [0.7, 0.8, 0.9, 0.95];

const ROOT_TOL: f64 = 1e-12;

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn elapsed(start: Instant) -> f64 {
    start.elapsed().as_secs_f64()
}

fn gstar_radius(n: usize) -> Result<f64, Error> {
    Ok(largest_real_root(&phi_bstar(n), ROOT_TOL)?)
}

/// `true` when `S` certifies that `h` has no factor: more components of
/// `G − S` carry an odd number of `{1}`-vertices than the edges `S` can
/// send out (one per `{1}`-vertex, two per `{0,2}`-vertex).
pub fn parity_certificate(g: &Graph, h: &HAssignment, s: &VertexSet) -> Result<bool, Error> {
    let analysis = g.remove_and_analyze(s)?;
    let odd =
        analysis.components.iter().filter(|c| c.iter().filter(|&v| h.tag(v) == HTag::One).count() % 2 == 1).count();
    let capacity: usize = s.iter().map(|v| if h.tag(v) == HTag::One { 1 } else { 2 }).sum();
    Ok(odd > capacity)
}

struct EquivalenceRow {
    order: usize,
    criterion: bool,
    factorless: Option<HAssignment>,
    graph: Graph,
}

/// Lu–Kano criterion against exhaustive factor search over every even
/// assignment, for all connected graphs of order `1..=n_max`.
pub fn verify_theorem11(n_max: usize) -> Result<VerificationReport, Error> {
    if n_max > EQUIVALENCE_MAX_ORDER {
        return Err(
            hfactor_core::Error::SizeCap { op: "verify_theorem11", order: n_max, cap: EQUIVALENCE_MAX_ORDER }.into()
        );
    }
    let start = Instant::now();
    let mut graphs = Vec::new();
    for n in 1..=n_max {
        graphs.extend(enumerate_connected(n)?.map(|g| (n, g)));
    }
    let rows: Vec<EquivalenceRow> = graphs
        .into_par_iter()
        .map(|(order, graph)| -> Result<EquivalenceRow, Error> {
            let criterion = has_all_h_factors(&graph)?;
            let mut factorless = None;
            for h in all_even_h_assignments(&graph)? {
                if find_h_factor(&graph, &h)?.is_none() {
                    factorless = Some(h);
                    break;
                }
            }
            Ok(EquivalenceRow { order, criterion, factorless, graph })
        })
        .collect::<Result<_, _>>()?;

    let mut report = VerificationReport::new("thm11", params(&[("n_max", json!(n_max))]));
    let mut per_order = BTreeMap::new();
    let (mut holds, mut fails) = (0u64, 0u64);
    for row in &rows {
        *per_order.entry(row.order.to_string()).or_insert(0u64) += 1;
        if row.criterion {
            holds += 1;
        } else {
            fails += 1;
        }
        let searched = row.factorless.is_none();
        if row.criterion != searched {
            let detail = match &row.factorless {
                Some(h) => format!("criterion holds but H={h} has no factor"),
                None => "criterion fails but every even H has a factor".to_string(),
            };
            report.violations.push(Violation { graph6: write_graph6(&row.graph), detail });
        }
    }
    report.checked = rows.len() as u64;
    report.summary.insert("per_order".into(), json!(per_order));
    report.summary.insert("criterion_holds".into(), json!(holds));
    report.summary.insert("criterion_fails".into(), json!(fails));
    Ok(report.finish(elapsed(start)))
}

/// Number of partitions of `a` into exactly `k` positive parts.
fn partitions_exact(a: usize, k: usize) -> u64 {
    let mut table = vec![vec![0u64; k + 1]; a + 1];
    table[0][0] = 1;
    for x in 1..=a {
        for j in 1..=k.min(x) {
            table[x][j] = table[x - 1][j - 1] + table[x - j][j];
        }
    }
    table[a][k]
}

/// Predicted size of the family scanned by [`verify_theorem12_family`]:
/// with `j ≤ s` parts equal to 1 and the other `t − j` parts at least 2,
/// subtracting one from every part leaves a partition of `n − s − t` into
/// `t − j` positive parts.
pub fn family_size_oracle(n: usize, extra_parts: usize) -> u64 {
    let mut total = 0;
    for s in 1..n {
        for t in s + 2..=s + 2 + extra_parts {
            let m = n - s;
            if m < t {
                continue;
            }
            total += (0..=s.min(t)).map(|j| partitions_exact(m - t, t - j)).sum::<u64>();
        }
    }
    total
}

fn extend_parts(s: usize, t: usize, remaining: usize, parts: &mut Vec<usize>, out: &mut Vec<CliqueJoinSpec>) {
    let i = parts.len();
    let floor = parts.last().copied().unwrap_or(1).max(if i >= s { 2 } else { 1 });
    if i + 1 == t {
        if remaining >= floor {
            parts.push(remaining);
            out.push(CliqueJoinSpec::new(s, parts.clone()).expect("parts are positive and sorted"));
            parts.pop();
        }
        return;
    }
    let slots = t - i;
    for v in floor..=remaining / slots {
        parts.push(v);
        extend_parts(s, t, remaining - v, parts, out);
        parts.pop();
    }
}

/// Every `K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})` of order `n` with `s ≥ 1`,
/// `t = s + 2 + e` for `e ≤ extra_parts`, and all parts past the first `s`
/// at least 2.
pub fn clique_join_family(n: usize, extra_parts: usize) -> Vec<CliqueJoinSpec> {
    let mut out = Vec::new();
    for s in 1..n {
        for t in s + 2..=s + 2 + extra_parts {
            if s + t <= n {
                extend_parts(s, t, n - s, &mut Vec::with_capacity(t), &mut out);
            }
        }
    }
    out
}

/// Every family member has `ρ ≤ ρ(G_*)`, with equality only when the member
/// is isomorphic to `G_*`.
pub fn verify_theorem12_family(n: usize, extra_parts: usize) -> Result<VerificationReport, Error> {
    if n < SEARCH_MIN_ORDER {
        return Err(hfactor_core::Error::Domain(format!("family scan needs n >= 11, got {n}")).into());
    }
    let start = Instant::now();
    let gstar = build_gstar(n)?;
    let rho_star = gstar_radius(n)?;
    let family = clique_join_family(n, extra_parts);
    let rows: Vec<(CliqueJoinSpec, Graph, f64, bool)> = family
        .into_par_iter()
        .map(|spec| -> Result<_, Error> {
            let g = spec.build();
            let rho = spectral_radius(&g, DEFAULT_POWER_TOL)?.radius;
            let iso = is_isomorphic(&g, &gstar);
            Ok((spec, g, rho, iso))
        })
        .collect::<Result<_, _>>()?;

    let mut report =
        VerificationReport::new("thm12-family", params(&[("n", json!(n)), ("extra_parts", json!(extra_parts))]));
    let mut min_margin = f64::INFINITY;
    let mut maximizers = Vec::new();
    for (spec, g, rho, iso) in &rows {
        let margin = rho_star - rho;
        if *iso {
            maximizers.push(format!("s={} parts={:?}", spec.s(), spec.parts()));
            if margin.abs() > 1e-8 {
                report.violations.push(Violation {
                    graph6: write_graph6(g),
                    detail: format!("isomorphic to G_* but rho={rho} differs from {rho_star}"),
                });
            }
            continue;
        }
        min_margin = min_margin.min(margin);
        if margin <= FAMILY_MARGIN {
            report.violations.push(Violation {
                graph6: write_graph6(g),
                detail: format!("s={} parts={:?}: rho={rho} vs rho(G*)={rho_star}", spec.s(), spec.parts()),
            });
        }
    }
    let oracle = family_size_oracle(n, extra_parts);
    if oracle != rows.len() as u64 {
        report.violations.push(Violation {
            graph6: write_graph6(&gstar),
            detail: format!("enumerated {} specs, partition count predicts {oracle}", rows.len()),
        });
    }
    if maximizers.len() != 1 {
        report.violations.push(Violation {
            graph6: write_graph6(&gstar),
            detail: format!("expected exactly one spec isomorphic to G_*, found {}", maximizers.len()),
        });
    }
    report.checked = rows.len() as u64;
    report.summary.insert("rho_gstar".into(), json!(rho_star));
    report.summary.insert("min_margin".into(), json!(min_margin));
    report.summary.insert("oracle_count".into(), json!(oracle));
    report.summary.insert("maximizers".into(), json!(maximizers));
    Ok(report.finish(elapsed(start)))
}

fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("edges are in range");
        if g.is_connected() {
            return g;
        }
    }
}

enum Outcome {
    Vacuous,
    Excluded,
    Holds,
    Violated(String),
}

/// Random connected graphs of order `n` (plus `K_n` and `G_*(n)` injected
/// first): every 1-binding graph with `ρ(G) ≥ ρ(G_*) − tol` other than
/// `G_*` must have all even `H`-factors.
pub fn search_counterexample(n: usize, samples: usize, seed: u64) -> Result<VerificationReport, Error> {
    if !(SEARCH_MIN_ORDER..=SEARCH_MAX_ORDER).contains(&n) {
        return Err(
            hfactor_core::Error::SizeCap { op: "search_counterexample", order: n, cap: SEARCH_MAX_ORDER }.into()
        );
    }
    let start = Instant::now();
    let gstar = build_gstar(n)?;
    let threshold = gstar_radius(n)? - HYPOTHESIS_TOL;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = vec![Graph::complete(n)?, gstar.clone()];
    for i in 0..samples {
        graphs.push(random_connected(n, SEARCH_PROBABILITIES[i % SEARCH_PROBABILITIES.len()], &mut rng));
    }
    let outcomes: Vec<Outcome> = graphs
        .par_iter()
        .map(|g| -> Result<Outcome, Error> {
            if spectral_radius(g, DEFAULT_POWER_TOL)?.radius < threshold {
                return Ok(Outcome::Vacuous);
            }
            if !binding_number(g)?.value.at_least(1, 1) {
                return Ok(Outcome::Vacuous);
            }
            if is_isomorphic(g, &gstar) {
                return Ok(Outcome::Excluded);
            }
            let lk = lu_kano_deficiency(g)?;
            Ok(if lk.criterion_holds() {
                Outcome::Holds
            } else {
                Outcome::Violated(format!("deficiency {} at S={}", lk.max_deficiency, lk.witness))
            })
        })
        .collect::<Result<_, _>>()?;

    let mut report = VerificationReport::new(
        "search",
        params(&[
            ("n", json!(n)),
            ("samples", json!(samples)),
            ("seed", json!(seed)),
            ("probabilities", json!(SEARCH_PROBABILITIES)),
            ("hypothesis_tol", json!(HYPOTHESIS_TOL)),
        ]),
    );
    let (mut vacuous, mut excluded, mut met) = (0u64, 0u64, 0u64);
    for (g, outcome) in graphs.iter().zip(outcomes) {
        match outcome {
            Outcome::Vacuous => vacuous += 1,
            Outcome::Excluded => excluded += 1,
            Outcome::Holds => met += 1,
            Outcome::Violated(detail) => {
                met += 1;
                report.violations.push(Violation { graph6: write_graph6(g), detail });
            }
        }
    }
    report.checked = graphs.len() as u64;
    report.summary.insert("injected".into(), json!(2));
    report.summary.insert("hypothesis_met".into(), json!(met));
    report.summary.insert("excluded_isomorphic".into(), json!(excluded));
    report.summary.insert("vacuous".into(), json!(vacuous));
    report.summary.insert("rho_threshold".into(), json!(threshold));
    Ok(report.finish(elapsed(start)))
}

/// `G_*(n)` is connected and 1-binding, has Lu–Kano deficiency 2 at the
/// join vertex, and (for `n ≤ 13`) an explicit even assignment without a
/// factor whose absence is confirmed by a parity certificate.
pub fn verify_sharpness(n: usize) -> Result<VerificationReport, Error> {
    if n < SEARCH_MIN_ORDER {
        return Err(hfactor_core::Error::Domain(format!("sharpness needs n >= 11, got {n}")).into());
    }
    let start = Instant::now();
    let g = build_gstar(n)?;
    let code = write_graph6(&g);
    let mut report = VerificationReport::new("sharpness", params(&[("n", json!(n))]));
    let fail = |detail: String, report: &mut VerificationReport| {
        report.violations.push(Violation { graph6: code.clone(), detail });
    };

    if !g.is_connected() {
        fail("G_* is disconnected".into(), &mut report);
    }
    let binding = binding_number(&g)?;
    if !binding.value.at_least(1, 1) {
        fail(format!("bind(G_*) = {} < 1", binding.value), &mut report);
    }
    let lk = lu_kano_deficiency(&g)?;
    let join_vertex = VertexSet::new(vec![0]);
    if lk.max_deficiency != 2 || lk.witness != join_vertex {
        fail(format!("deficiency {} at S={}, expected 2 at S={{0}}", lk.max_deficiency, lk.witness), &mut report);
    }
    let rho_power = spectral_radius(&g, DEFAULT_POWER_TOL)?.radius;
    let rho_root = gstar_radius(n)?;
    if (rho_power - rho_root).abs() > 2e-9 {
        fail(format!("power iteration {rho_power} vs quotient root {rho_root}"), &mut report);
    }
    report.checked = 4;
    report.summary.insert("binding_number".into(), json!(binding.value.to_string()));
    report.summary.insert("deficiency".into(), json!(lk.max_deficiency));
    report.summary.insert("deficiency_witness".into(), json!(lk.witness.to_string()));
    report.summary.insert("rho".into(), json!(rho_root));

    if n <= SHARPNESS_CONSTRUCTIVE_CAP {
        report.checked += 1;
        let mut witness = None;
        for h in all_even_h_assignments(&g)? {
            if find_h_factor(&g, &h)?.is_none() {
                witness = Some(h);
                break;
            }
        }
        match witness {
            Some(h) => {
                let certified = parity_certificate(&g, &h, &join_vertex)?;
                if !certified {
                    fail(
                        format!("search reports no factor for H={h} but S={{0}} gives no parity certificate"),
                        &mut report,
                    );
                }
                report.summary.insert("factorless_h".into(), json!(h.to_bitstring()));
                report.summary.insert("certified".into(), json!(certified));
            }
            None => fail("every even H has a factor".into(), &mut report),
        }
    } else {
        report.summary.insert("factorless_h".into(), json!(null));
        report.summary.insert("constructive_part".into(), json!("skipped above the factor-search cap"));
    }
    Ok(report.finish(elapsed(start)))
}
