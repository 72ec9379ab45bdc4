//! Degree-sequence upper bounds on the adjacency spectral radius (`phi_s`)
//! and the signless Laplacian spectral radius (`psi_s`) of a k-uniform
//! hypergraph, their minima over `s`, and the corollary forms in terms of
//! the minimum degree and the edge count.
//!
//! Every bound is the larger root of a quadratic whose coefficients are
//! binomial expressions in `(n, k, s)` and partial degree sums. The
//! coefficients, the discriminant and the constant term are carried as
//! exact rationals; only the final square root is floating point, and when
//! the discriminant is a perfect square of a rational even that collapse is
//! exact. This makes `phi_1 = d_1` and `psi_1 = 2 d_1` hold with no float
//! error at all.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("uniformity k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("need n >= k, got n = {n}, k = {k}")]
    NSmallerThanK { n: usize, k: usize },
    #[error("index s = {s} out of range 1..={n}")]
    SOutOfRange { s: usize, n: usize },
    #[error("degree input must be sorted non-increasing")]
    UnsortedDegrees,
    #[error("inconsistent inputs: k m = {km} is smaller than n delta = {ndelta}")]
    InconsistentCorollary { km: u128, ndelta: u128 },
}

/// Which tensor the bound targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Adjacency,
    Signless,
}

impl BoundKind {
    /// Degree multiplier: the signless bound doubles every degree term.
    fn degree_factor(self) -> i64 {
        match self {
            BoundKind::Adjacency => 1,
            BoundKind::Signless => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Adjacency => "adjacency",
            BoundKind::Signless => "signless",
        }
    }
}

/// Which form of the minimum-degree corollary to evaluate.
///
/// `TheoremConsistent` substitutes the coefficient the underlying `s = n`
/// bound actually uses, `C(n-1, k-1)`; `AsPrinted` substitutes `C(n-1, k-2)`
/// exactly as the corollary is usually displayed. The two disagree (the
/// printed form is not the `s = n` bound), so both are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaryMode {
    TheoremConsistent,
    AsPrinted,
}

/// The bound value at one index `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundAtS {
    pub s: usize,
    pub value: f64,
}

/// All per-s bound values for one kind, with the minimizing index.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub per_s: Vec<BoundAtS>,
    /// Smallest s attaining the minimum.
    pub argmin_s: usize,
    pub min_value: f64,
    /// Max over s of the exactly measured relative quadratic residual of the
    /// reported floating value.
    pub exact_quadratic_residual: f64,
}

/// Exact data of one bound quadratic `x^2 - linear x - constant`, whose
/// larger root is the bound; `discriminant = linear^2 + 4 constant`.
struct BoundQuadratic {
    linear: BigRational,
    constant: BigRational,
    discriminant: BigRational,
}

impl BoundQuadratic {
    /// Larger root, floating only at the final square root. A perfect-square
    /// discriminant is detected and rooted exactly; otherwise the root is
    /// evaluated in the cancellation-free form for its sign pattern.
    fn larger_root(&self) -> f64 {
        debug_assert!(!self.discriminant.is_negative());
        if let Some(root) = exact::sqrt_if_square(&self.discriminant) {
            let two = BigRational::from_integer(BigInt::from(2));
            return rat_to_f64(&((&self.linear + root) / two));
        }
        let linear = rat_to_f64(&self.linear);
        let sqrt_disc = rat_to_f64(&self.discriminant).max(0.0).sqrt();
        if linear >= 0.0 {
            (linear + sqrt_disc) / 2.0
        } else {
            // larger root rewritten as 2c / (sqrt(disc) - b): no cancellation
            // when the linear coefficient is negative
            2.0 * rat_to_f64(&self.constant) / (sqrt_disc - linear)
        }
    }

    /// Relative residual of `value` in the quadratic, measured in exact
    /// arithmetic: |v^2 - linear v - constant| over the largest term.
    fn relative_residual(&self, value: f64) -> f64 {
        let v = match BigRational::from_float(value) {
            Some(v) => v,
            None => return f64::INFINITY,
        };
        let residual = &v * &v - &self.linear * &v - &self.constant;
        let scale = 1.0f64
            .max(value * value)
            .max((rat_to_f64(&self.linear) * value).abs())
            .max(rat_to_f64(&self.constant).abs());
        rat_to_f64(&residual.abs()) / scale
    }
}

fn rat_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn validate_sequence(degrees: &[u64], k: usize) -> Result<(), BoundsError> {
    if k < 2 {
        return Err(BoundsError::KTooSmall(k));
    }
    if degrees.len() < k {
        return Err(BoundsError::NSmallerThanK {
            n: degrees.len(),
            k,
        });
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) {
        return Err(BoundsError::UnsortedDegrees);
    }
    Ok(())
}

/// Exact quadratic for the bound of `kind` at index `s`.
fn bound_quadratic(degrees: &[u64], k: usize, s: usize, kind: BoundKind) -> BoundQuadratic {
    let n = degrees.len() as i64;
    let k_i = k as i64;
    let s_i = s as i64;
    let factor = kind.degree_factor();

    let a1 = exact::a1(n, k_i).expect("k validated");
    let a2 = exact::a2(n, k_i, s_i).expect("k and s validated");
    let d_s = BigRational::from_integer(BigInt::from(degrees[s - 1]) * factor);

    let mut excess = BigInt::zero();
    for &d_t in &degrees[..s - 1] {
        excess += BigInt::from(d_t - degrees[s - 1]);
    }
    let excess = BigRational::from_integer(BigInt::from(factor) * excess);

    let s_rat = |v: i64| BigRational::from_integer(BigInt::from(v));
    let linear = &d_s - &a2 + &a1 * s_rat(s_i - 2);
    let half_trace = &d_s - &a2 + &a1 * s_rat(s_i);
    let discriminant = &half_trace * &half_trace + s_rat(4) * &a1 * &excess;
    let constant = (&discriminant - &linear * &linear) / s_rat(4);
    BoundQuadratic {
        linear,
        constant,
        discriminant,
    }
}

fn bound_value(degrees: &[u64], k: usize, s: usize, kind: BoundKind) -> Result<f64, BoundsError> {
    validate_sequence(degrees, k)?;
    if s < 1 || s > degrees.len() {
        return Err(BoundsError::SOutOfRange {
            s,
            n: degrees.len(),
        });
    }
    let value = bound_quadratic(degrees, k, s, kind).larger_root();
    debug_assert!(value.is_finite() && value >= 0.0);
    Ok(value)
}

/// Adjacency bound `phi_s` for a non-increasing degree sequence.
pub fn phi(degrees: &[u64], k: usize, s: usize) -> Result<f64, BoundsError> {
    bound_value(degrees, k, s, BoundKind::Adjacency)
}

/// Signless Laplacian bound `psi_s` for a non-increasing degree sequence.
pub fn psi(degrees: &[u64], k: usize, s: usize) -> Result<f64, BoundsError> {
    bound_value(degrees, k, s, BoundKind::Signless)
}

fn bound_report(degrees: &[u64], k: usize, kind: BoundKind) -> Result<BoundReport, BoundsError> {
    validate_sequence(degrees, k)?;
    let n = degrees.len();
    let mut per_s = Vec::with_capacity(n);
    let mut argmin_s = 1;
    let mut min_value = f64::INFINITY;
    let mut worst_residual = 0.0f64;
    for s in 1..=n {
        let quadratic = bound_quadratic(degrees, k, s, kind);
        let value = quadratic.larger_root();
        worst_residual = worst_residual.max(quadratic.relative_residual(value));
        if value < min_value {
            min_value = value;
            argmin_s = s;
        }
        per_s.push(BoundAtS { s, value });
    }
    Ok(BoundReport {
        kind,
        per_s,
        argmin_s,
        min_value,
        exact_quadratic_residual: worst_residual,
    })
}

/// Evaluates `phi_s` for every `s = 1..=n` and reports the minimum.
pub fn adjacency_bound(degrees: &[u64], k: usize) -> Result<BoundReport, BoundsError> {
    bound_report(degrees, k, BoundKind::Adjacency)
}

/// Evaluates `psi_s` for every `s = 1..=n` and reports the minimum. The
/// formula is evaluated exactly as stated; whether it actually bounds the
/// signless spectral radius is the validator's business (it does not on all
/// instances -- see the campaign machinery).
pub fn signless_bound(degrees: &[u64], k: usize) -> Result<BoundReport, BoundsError> {
    bound_report(degrees, k, BoundKind::Signless)
}

fn corollary_quadratic(
    n: usize,
    k: usize,
    delta: u64,
    m: u64,
    kind: BoundKind,
    mode: CorollaryMode,
) -> Result<BoundQuadratic, BoundsError> {
    if k < 2 {
        return Err(BoundsError::KTooSmall(k));
    }
    if n < k {
        return Err(BoundsError::NSmallerThanK { n, k });
    }
    let km = k as u128 * m as u128;
    let ndelta = n as u128 * delta as u128;
    if km < ndelta {
        return Err(BoundsError::InconsistentCorollary { km, ndelta });
    }
    let n_i = n as i64;
    let k_i = k as i64;
    let factor = kind.degree_factor();

    let a1 = exact::a1(n_i, k_i).expect("k validated");
    // the s = n bound uses C(n-1, k-1) here; the printed corollary shows
    // C(n-1, k-2)
    let a2 = BigRational::from_integer(match mode {
        CorollaryMode::TheoremConsistent => exact::binom(n_i - 1, k_i - 1),
        CorollaryMode::AsPrinted => exact::binom(n_i - 1, k_i - 2),
    });
    let rat = |v: i64| BigRational::from_integer(BigInt::from(v));
    let d = BigRational::from_integer(BigInt::from(delta) * factor);
    let excess = rat(factor) * BigRational::from_integer(BigInt::from(km - ndelta));

    let linear = &d - &a2 + &a1 * rat(n_i - 2);
    let half_trace = &d - &a2 + &a1 * rat(n_i);
    let discriminant = &half_trace * &half_trace + rat(4) * &a1 * &excess;
    let constant = (&discriminant - &linear * &linear) / rat(4);
    Ok(BoundQuadratic {
        linear,
        constant,
        discriminant,
    })
}

/// Adjacency spectral radius bound from the minimum degree and edge count
/// (the `s = n` bound with the degree sum replaced by `k m`).
pub fn corollary_rho(
    n: usize,
    k: usize,
    delta: u64,
    m: u64,
    mode: CorollaryMode,
) -> Result<f64, BoundsError> {
    Ok(corollary_quadratic(n, k, delta, m, BoundKind::Adjacency, mode)?.larger_root())
}

/// Signless Laplacian analogue of [`corollary_rho`].
pub fn corollary_q(
    n: usize,
    k: usize,
    delta: u64,
    m: u64,
    mode: CorollaryMode,
) -> Result<f64, BoundsError> {
    Ok(corollary_quadratic(n, k, delta, m, BoundKind::Signless, mode)?.larger_root())
}

/// Exactly measured relative quadratic residual of `value` against the bound
/// quadratic of `kind` at index `s`; the report's residual field is the max
/// of this over s.
pub fn quadratic_residual(
    degrees: &[u64],
    k: usize,
    s: usize,
    kind: BoundKind,
    value: f64,
) -> Result<f64, BoundsError> {
    validate_sequence(degrees, k)?;
    if s < 1 || s > degrees.len() {
        return Err(BoundsError::SOutOfRange {
            s,
            n: degrees.len(),
        });
    }
    Ok(bound_quadratic(degrees, k, s, kind).relative_residual(value))
}
