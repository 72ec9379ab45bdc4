//! Randomized validation campaigns: generate instances, compare the degree
//! bound against the computed spectral radius, and surface every violation.

use hyperbounds::bounds::{self, BoundKind, BoundsError};
use hyperbounds::spectral::{self, Operator, SpectralConfig, SpectralError};
use hyperbounds::Hypergraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// A trial counts as a violation when `bound < computed - VIOLATION_THRESHOLD`.
/// Kept well above the spectral tolerance so float noise cannot fabricate
/// violations.
pub const VIOLATION_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone)]
pub enum InstanceSource {
    /// Check one fixed instance.
    Fixed(Hypergraph),
    /// Random connected instances with m drawn uniformly from the inclusive
    /// range, one derived seed per trial.
    Random {
        n: usize,
        k: usize,
        m_range: (usize, usize),
    },
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub kind: BoundKind,
    pub trials: usize,
    pub seed: u64,
    pub spectral: SpectralConfig,
    pub source: InstanceSource,
}

#[derive(Debug, Clone, Error)]
pub enum CampaignError {
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// One trial whose bound fell below the computed spectral radius.
#[derive(Debug, Clone)]
pub struct Violation {
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub bound: f64,
    pub computed: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct MarginStats {
    pub min: f64,
    pub median: f64,
    pub max: f64,
}

#[derive(Debug, Clone)]
pub struct CampaignResult {
    pub kind: BoundKind,
    pub trials: usize,
    pub violations: Vec<Violation>,
    /// Over (bound - computed) of converged trials; `None` if none converged.
    pub margin_stats: Option<MarginStats>,
    pub non_converged: usize,
    /// Trials skipped because connected-instance sampling hit its attempt cap.
    pub generation_failures: usize,
    /// Trials where the computed radius escaped the all-ones degree bracket.
    pub degree_bracket_failures: usize,
}

/// Runs the campaign. Per-trial seeds are `seed + trial index`, so any trial
/// can be reproduced in isolation; the whole run is byte-deterministic.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignResult, CampaignError> {
    let operator = match config.kind {
        BoundKind::Adjacency => Operator::Adjacency,
        BoundKind::Signless => Operator::Signless,
    };
    let mut violations = Vec::new();
    let mut margins: Vec<f64> = Vec::new();
    let mut non_converged = 0;
    let mut generation_failures = 0;
    let mut degree_bracket_failures = 0;

    for trial in 0..config.trials {
        let trial_seed = config.seed.wrapping_add(trial as u64);
        let instance = match &config.source {
            InstanceSource::Fixed(h) => h.clone(),
            InstanceSource::Random { n, k, m_range } => {
                let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
                let m = rng.gen_range(m_range.0..=m_range.1);
                match Hypergraph::random_connected(*n, *k, m, rng.gen()) {
                    Ok(h) => h,
                    Err(_) => {
                        generation_failures += 1;
                        continue;
                    }
                }
            }
        };
        let sequence = instance.degree_sequence();
        let degrees = sequence.degrees();
        let report = match config.kind {
            BoundKind::Adjacency => bounds::adjacency_bound(degrees, instance.uniformity())?,
            BoundKind::Signless => bounds::signless_bound(degrees, instance.uniformity())?,
        };
        let estimate = spectral::spectral_radius(&instance, operator, &config.spectral)?;

        let factor = match config.kind {
            BoundKind::Adjacency => 1.0,
            BoundKind::Signless => 2.0,
        };
        let d_max = factor * degrees[0] as f64;
        let d_min = factor * degrees[degrees.len() - 1] as f64;
        if estimate.value < d_min - VIOLATION_THRESHOLD || estimate.value > d_max + VIOLATION_THRESHOLD
        {
            degree_bracket_failures += 1;
        }
        if !estimate.converged {
            non_converged += 1;
        } else {
            margins.push(report.min_value - estimate.value);
        }
        let margin = report.min_value - estimate.value;
        if margin < -VIOLATION_THRESHOLD {
            violations.push(Violation {
                seed: trial_seed,
                n: instance.vertex_count(),
                k: instance.uniformity(),
                m: instance.edge_count(),
                bound: report.min_value,
                computed: estimate.value,
                margin,
            });
        }
    }

    Ok(CampaignResult {
        kind: config.kind,
        trials: config.trials,
        violations,
        margin_stats: margin_stats(&mut margins),
        non_converged,
        generation_failures,
        degree_bracket_failures,
    })
}

fn margin_stats(margins: &mut [f64]) -> Option<MarginStats> {
    if margins.is_empty() {
        return None;
    }
    margins.sort_by(|a, b| a.partial_cmp(b).expect("margins are finite"));
    let len = margins.len();
    let median = if len % 2 == 1 {
        margins[len / 2]
    } else {
        (margins[len / 2 - 1] + margins[len / 2]) / 2.0
    };
    Some(MarginStats {
        min: margins[0],
        median,
        max: margins[len - 1],
    })
}
