//! Spectral radius of the adjacency and signless Laplacian tensors of a
//! k-uniform hypergraph.
//!
//! The tensors are never materialized: applying one to a positive vector
//! walks the edge list, each edge contributing the product of its members'
//! entries (leave-one-out per incident vertex). For any positive vector the
//! ratios `y_i / x_i^{k-1}` are the row sums of the diagonally rescaled
//! tensor, so their min and max bracket the spectral radius; the power
//! iteration drives that bracket shut. A positive diagonal shift keeps the
//! iteration primitive (unshifted, bipartite-like structures oscillate),
//! and the shift is subtracted back out of the reported values.
//!
//! For graphs (`k = 2`) an independent oracle computes the dominant
//! eigenvalue by repeated squaring of the dense shifted matrix; it shares no
//! code with the power iteration and exists to cross-check it.

use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Which tensor to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Adjacency,
    Signless,
}

impl Operator {
    pub fn as_str(self) -> &'static str {
        match self {
            Operator::Adjacency => "adjacency",
            Operator::Signless => "signless",
        }
    }
}

/// Stopping parameters for the power iteration.
#[derive(Debug, Clone)]
pub struct SpectralConfig {
    /// Stop once `upper - lower` drops below this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Positive diagonal shift added inside the iteration.
    pub shift: f64,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig {
            tolerance: 1e-10,
            max_iterations: 1_000_000,
            shift: 1.0,
        }
    }
}

/// A bracketed spectral radius estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEstimate {
    pub lower: f64,
    pub upper: f64,
    /// Midpoint of the final bracket.
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Perron vector approximation, max-norm 1; zero on vertices of edgeless
    /// components.
    pub eigenvector: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("vector has length {found}, hypergraph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector entry {index} is {value}, need strictly positive finite entries")]
    InvalidEntry { index: usize, value: f64 },
    #[error("hypergraph is not connected; use spectral_radius for general inputs")]
    NotConnected,
    #[error("matrix oracle requires k = 2, got k = {0}")]
    NotAGraph(usize),
    #[error("invalid config: {0}")]
    InvalidConfig(&'static str),
}

/// Below this, per-edge full products switch to leave-one-out form rather
/// than dividing by a potentially tiny factor.
const SAFE_FACTOR: f64 = 1e-150;

fn check_vector(h: &Hypergraph, x: &[f64]) -> Result<(), SpectralError> {
    if x.len() != h.vertex_count() {
        return Err(SpectralError::DimensionMismatch {
            expected: h.vertex_count(),
            found: x.len(),
        });
    }
    for (i, &v) in x.iter().enumerate() {
        if !(v > 0.0 && v.is_finite()) {
            return Err(SpectralError::InvalidEntry {
                index: i + 1,
                value: v,
            });
        }
    }
    Ok(())
}

fn check_config(config: &SpectralConfig) -> Result<(), SpectralError> {
    if !config.tolerance.is_finite() || config.tolerance <= 0.0 {
        return Err(SpectralError::InvalidConfig("tolerance must be positive"));
    }
    if !config.shift.is_finite() || config.shift <= 0.0 {
        return Err(SpectralError::InvalidConfig("shift must be positive"));
    }
    if config.max_iterations == 0 {
        return Err(SpectralError::InvalidConfig("max_iterations must be positive"));
    }
    Ok(())
}

/// One edge's contribution: each member receives the product over the other
/// members. Falls back to prefix/suffix leave-one-out products when any
/// factor is small enough to make the division unstable.
fn accumulate_edge(edge: &[usize], x: &[f64], y: &mut [f64]) {
    let mut product = 1.0;
    let mut safe = true;
    for &v in edge {
        let factor = x[v - 1];
        if factor < SAFE_FACTOR {
            safe = false;
        }
        product *= factor;
    }
    if safe {
        for &v in edge {
            y[v - 1] += product / x[v - 1];
        }
    } else {
        let k = edge.len();
        let mut suffix = vec![1.0; k + 1];
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1] * x[edge[i] - 1];
        }
        let mut prefix = 1.0;
        for i in 0..k {
            y[edge[i] - 1] += prefix * suffix[i + 1];
            prefix *= x[edge[i] - 1];
        }
    }
}

fn apply_edges(h: &Hypergraph, x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; h.vertex_count()];
    for edge in h.edges() {
        accumulate_edge(edge, x, &mut y);
    }
    y
}

fn add_degree_term(degrees: &[u64], k: usize, x: &[f64], y: &mut [f64]) {
    let exponent = (k - 1) as i32;
    for i in 0..x.len() {
        y[i] += degrees[i] as f64 * x[i].powi(exponent);
    }
}

/// `y_i = sum over edges e containing i of prod_{j in e, j != i} x_j`.
pub fn apply_adjacency(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>, SpectralError> {
    check_vector(h, x)?;
    Ok(apply_edges(h, x))
}

/// `y_i = d_i x_i^{k-1} + (adjacency apply)_i`.
pub fn apply_signless(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>, SpectralError> {
    check_vector(h, x)?;
    let mut y = apply_edges(h, x);
    add_degree_term(&h.degrees(), h.uniformity(), x, &mut y);
    Ok(y)
}

/// Dispatching form of the two applies.
pub fn apply(h: &Hypergraph, operator: Operator, x: &[f64]) -> Result<Vec<f64>, SpectralError> {
    match operator {
        Operator::Adjacency => apply_adjacency(h, x),
        Operator::Signless => apply_signless(h, x),
    }
}

fn bracket_of(y: &[f64], x: &[f64], k: usize) -> (f64, f64) {
    let exponent = (k - 1) as i32;
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    for i in 0..x.len() {
        let power = x[i].powi(exponent).max(f64::MIN_POSITIVE);
        let ratio = y[i] / power;
        lower = lower.min(ratio);
        upper = upper.max(ratio);
    }
    (lower, upper)
}

/// Collatz-Wielandt bracket: for strictly positive `x`, the ratios
/// `y_i / x_i^{k-1}` are the row sums of the conjugated tensor, so
/// `lower <= rho <= upper`.
pub fn cw_bracket(
    h: &Hypergraph,
    operator: Operator,
    x: &[f64],
) -> Result<(f64, f64), SpectralError> {
    let y = apply(h, operator, x)?;
    Ok(bracket_of(&y, x, h.uniformity()))
}

/// Conjugated apply `y_i = z_i^{-(k-1)} [T (z .* x)]_i` for positive `z`;
/// the conjugation preserves the spectrum, which the tests lean on.
pub fn scaled_apply(
    h: &Hypergraph,
    operator: Operator,
    z: &[f64],
    x: &[f64],
) -> Result<Vec<f64>, SpectralError> {
    check_vector(h, z)?;
    check_vector(h, x)?;
    let scaled: Vec<f64> = z.iter().zip(x).map(|(a, b)| a * b).collect();
    let mut y = apply(h, operator, &scaled)?;
    let exponent = (h.uniformity() - 1) as i32;
    for i in 0..y.len() {
        y[i] /= z[i].powi(exponent);
    }
    Ok(y)
}

fn zero_estimate(n: usize) -> SpectralEstimate {
    SpectralEstimate {
        lower: 0.0,
        upper: 0.0,
        value: 0.0,
        iterations: 0,
        converged: true,
        eigenvector: vec![0.0; n],
    }
}

/// The core loop, generic over the operator application so the scaled
/// variant can reuse it verbatim.
fn run_power_iteration<F, G>(
    n: usize,
    k: usize,
    config: &SpectralConfig,
    mut apply_fn: F,
    mut on_bracket: G,
) -> SpectralEstimate
where
    F: FnMut(&[f64]) -> Vec<f64>,
    G: FnMut(f64, f64),
{
    let exponent = (k - 1) as i32;
    let root = 1.0 / (k as f64 - 1.0);
    let mut x = vec![1.0; n];
    let mut bracket = (f64::NEG_INFINITY, f64::INFINITY);
    for iteration in 1..=config.max_iterations {
        let mut y = apply_fn(&x);
        let mut lower = f64::INFINITY;
        let mut upper = f64::NEG_INFINITY;
        for i in 0..n {
            let power = x[i].powi(exponent).max(f64::MIN_POSITIVE);
            y[i] += config.shift * power;
            let ratio = y[i] / power;
            lower = lower.min(ratio);
            upper = upper.max(ratio);
        }
        on_bracket(lower - config.shift, upper - config.shift);
        bracket = (lower, upper);
        if upper - lower < config.tolerance {
            return SpectralEstimate {
                lower: lower - config.shift,
                upper: upper - config.shift,
                value: (lower + upper) / 2.0 - config.shift,
                iterations: iteration,
                converged: true,
                eigenvector: x,
            };
        }
        let mut max_entry = 0.0f64;
        for entry in &mut y {
            if exponent != 1 {
                *entry = entry.powf(root);
            }
            max_entry = max_entry.max(*entry);
        }
        for entry in &mut y {
            *entry = (*entry / max_entry).max(f64::MIN_POSITIVE);
        }
        x = y;
    }
    SpectralEstimate {
        lower: bracket.0 - config.shift,
        upper: bracket.1 - config.shift,
        value: (bracket.0 + bracket.1) / 2.0 - config.shift,
        iterations: config.max_iterations,
        converged: false,
        eigenvector: x,
    }
}

fn power_iteration_connected<G: FnMut(f64, f64)>(
    h: &Hypergraph,
    operator: Operator,
    config: &SpectralConfig,
    on_bracket: G,
) -> SpectralEstimate {
    if h.edge_count() == 0 {
        return zero_estimate(h.vertex_count());
    }
    let degrees = h.degrees();
    let k = h.uniformity();
    let apply_fn = |x: &[f64]| {
        let mut y = apply_edges(h, x);
        if operator == Operator::Signless {
            add_degree_term(&degrees, k, x, &mut y);
        }
        y
    };
    run_power_iteration(h.vertex_count(), k, config, apply_fn, on_bracket)
}

/// Shifted power iteration on a connected hypergraph. Non-convergence is
/// reported through the `converged` flag, not an error, so batch runs keep
/// going; the final bracket is still valid.
pub fn power_iteration(
    h: &Hypergraph,
    operator: Operator,
    config: &SpectralConfig,
) -> Result<SpectralEstimate, SpectralError> {
    check_config(config)?;
    if h.components().count() != 1 {
        return Err(SpectralError::NotConnected);
    }
    Ok(power_iteration_connected(h, operator, config, |_, _| {}))
}

/// Like [`power_iteration`] but records every iterate's shifted-back
/// bracket; each recorded interval must contain the final value.
pub fn power_iteration_traced(
    h: &Hypergraph,
    operator: Operator,
    config: &SpectralConfig,
    trace: &mut Vec<(f64, f64)>,
) -> Result<SpectralEstimate, SpectralError> {
    check_config(config)?;
    if h.components().count() != 1 {
        return Err(SpectralError::NotConnected);
    }
    Ok(power_iteration_connected(h, operator, config, |lo, hi| {
        trace.push((lo, hi))
    }))
}

/// Power iteration run through [`scaled_apply`] with a fixed positive
/// scaling `z`; converges to the same spectral radius as the unscaled run.
pub fn power_iteration_scaled(
    h: &Hypergraph,
    operator: Operator,
    z: &[f64],
    config: &SpectralConfig,
) -> Result<SpectralEstimate, SpectralError> {
    check_config(config)?;
    check_vector(h, z)?;
    if h.components().count() != 1 {
        return Err(SpectralError::NotConnected);
    }
    if h.edge_count() == 0 {
        return Ok(zero_estimate(h.vertex_count()));
    }
    let degrees = h.degrees();
    let k = h.uniformity();
    let exponent = (k - 1) as i32;
    let apply_fn = |x: &[f64]| {
        let scaled: Vec<f64> = z.iter().zip(x).map(|(a, b)| a * b).collect();
        let mut y = apply_edges(h, &scaled);
        if operator == Operator::Signless {
            add_degree_term(&degrees, k, &scaled, &mut y);
        }
        for i in 0..y.len() {
            y[i] /= z[i].powi(exponent);
        }
        y
    };
    Ok(run_power_iteration(
        h.vertex_count(),
        k,
        config,
        apply_fn,
        |_, _| {},
    ))
}

/// Spectral radius of a general hypergraph: decomposes into connected
/// components, runs the power iteration per component with at least one
/// edge, and returns the max. Isolated vertices contribute zero and get a
/// zero eigenvector entry.
pub fn spectral_radius(
    h: &Hypergraph,
    operator: Operator,
    config: &SpectralConfig,
) -> Result<SpectralEstimate, SpectralError> {
    check_config(config)?;
    let groups = h.components().vertex_groups();
    let mut eigenvector = vec![0.0; h.vertex_count()];
    let mut best: Option<(f64, f64, f64)> = None;
    let mut iterations = 0;
    let mut converged = true;
    for group in &groups {
        if group.len() == 1 {
            continue; // isolated vertex, contributes 0
        }
        let sub = induced_subhypergraph(h, group);
        let estimate = power_iteration_connected(&sub, operator, config, |_, _| {});
        iterations += estimate.iterations;
        converged &= estimate.converged;
        for (local, &vertex) in group.iter().enumerate() {
            eigenvector[vertex - 1] = estimate.eigenvector[local];
        }
        let candidate = (estimate.value, estimate.lower, estimate.upper);
        if best.is_none_or(|(value, _, _)| candidate.0 > value) {
            best = Some(candidate);
        }
    }
    let (value, lower, upper) = best.unwrap_or((0.0, 0.0, 0.0));
    Ok(SpectralEstimate {
        lower,
        upper,
        value,
        iterations,
        converged,
        eigenvector,
    })
}

/// Sub-hypergraph induced by one component's (ascending) vertex list,
/// relabeled 1..=len.
fn induced_subhypergraph(h: &Hypergraph, vertices: &[usize]) -> Hypergraph {
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .filter(|edge| vertices.binary_search(&edge[0]).is_ok())
        .map(|edge| {
            edge.iter()
                .map(|v| vertices.binary_search(v).expect("edge inside component") + 1)
                .collect()
        })
        .collect();
    Hypergraph::new(vertices.len(), h.uniformity(), edges)
        .expect("induced subhypergraph of a valid hypergraph is valid")
}

/// Dominant eigenvalue of the dense n x n matrix (k = 2 only) by repeated
/// squaring of the shifted matrix with max-norm renormalization; an
/// independent code path used to cross-check the power iteration.
pub fn matrix_oracle(h: &Hypergraph, operator: Operator) -> Result<f64, SpectralError> {
    if h.uniformity() != 2 {
        return Err(SpectralError::NotAGraph(h.uniformity()));
    }
    if h.components().count() != 1 {
        return Err(SpectralError::NotConnected);
    }
    let n = h.vertex_count();
    if h.edge_count() == 0 {
        return Ok(0.0);
    }
    let mut matrix = vec![0.0f64; n * n];
    for edge in h.edges() {
        let (a, b) = (edge[0] - 1, edge[1] - 1);
        matrix[a * n + b] = 1.0;
        matrix[b * n + a] = 1.0;
    }
    if operator == Operator::Signless {
        for (i, d) in h.degrees().iter().enumerate() {
            matrix[i * n + i] += *d as f64;
        }
    }
    let mut power = matrix.clone();
    for i in 0..n {
        power[i * n + i] += 1.0; // shift by 1 so the dominant eigenvalue is simple and positive
    }
    let mut best = (f64::INFINITY, 0.0); // (gap, midpoint)
    for _ in 0..64 {
        // square and renormalize
        let mut squared = vec![0.0f64; n * n];
        let mut max_entry = 0.0f64;
        for i in 0..n {
            for l in 0..n {
                let factor = power[i * n + l];
                if factor == 0.0 {
                    continue;
                }
                for j in 0..n {
                    squared[i * n + j] += factor * power[l * n + j];
                }
            }
        }
        for &entry in &squared {
            max_entry = max_entry.max(entry);
        }
        for entry in &mut squared {
            *entry /= max_entry;
        }
        power = squared;

        // row sums approximate the dominant eigenvector
        let mut v = vec![0.0f64; n];
        for i in 0..n {
            for j in 0..n {
                v[i] += power[i * n + j];
            }
        }
        if v.iter().any(|&e| e <= 0.0) {
            continue;
        }
        let mut lower = f64::INFINITY;
        let mut upper = f64::NEG_INFINITY;
        for i in 0..n {
            let mut applied = 0.0;
            for j in 0..n {
                applied += matrix[i * n + j] * v[j];
            }
            let ratio = applied / v[i];
            lower = lower.min(ratio);
            upper = upper.max(ratio);
        }
        let gap = upper - lower;
        if gap < best.0 {
            best = (gap, (lower + upper) / 2.0);
        }
        if gap < 1e-12 {
            break;
        }
    }
    Ok(best.1)
}
