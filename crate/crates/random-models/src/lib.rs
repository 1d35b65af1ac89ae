//! Seeded random-graph models: G(n,p) and uniform random regular graphs.
//!
//! Reproducibility contract: every trial draws from its own stream derived
//! from `(master seed, trial index)` by a fixed splitmix-style mix, so trials
//! can run concurrently in any order and still produce identical graphs.

use graph_core::{Graph, GraphError};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Vertex cap for generators that materialize a [`Graph`].
pub const MAX_GRAPH_N: usize = graph_core::MAX_VERTICES;

/// Vertex cap for the degree-only G(n,p) sampler.
pub const MAX_DEGREE_ONLY_N: usize = 1024;

/// Redraw cap for the pairing model before giving up.
pub const PAIRING_REDRAW_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("pairing model failed to produce a simple graph after {attempts} redraws")]
    GenerationFailed { attempts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Master seed for an experiment; per-trial streams are derived, not drawn
/// sequentially, so concurrent trials are schedule-independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed {
    pub master: u64,
}

impl Seed {
    pub fn new(master: u64) -> Self {
        Seed { master }
    }

    /// The stream seed for trial `i`: splitmix64 of master + (i+1)·phi64.
    pub fn stream(&self, trial: u64) -> u64 {
        splitmix64(
            self.master
                .wrapping_add(trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        )
    }

    /// A reproducible RNG for trial `i`.
    pub fn trial_rng(&self, trial: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.stream(trial))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Edge probability for G(n,p): direct, or the power law `min(1, mu·n^-alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProbSpec {
    Direct(f64),
    PowerLaw { alpha: f64, mu: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GnpParams {
    pub n: usize,
    pub p: ProbSpec,
}

impl GnpParams {
    pub fn direct(n: usize, p: f64) -> Self {
        GnpParams {
            n,
            p: ProbSpec::Direct(p),
        }
    }

    pub fn power_law(n: usize, alpha: f64, mu: f64) -> Self {
        GnpParams {
            n,
            p: ProbSpec::PowerLaw { alpha, mu },
        }
    }

    /// The realized edge probability, clamped to [0, 1].
    pub fn realized_p(&self) -> f64 {
        match self.p {
            ProbSpec::Direct(p) => p.clamp(0.0, 1.0),
            ProbSpec::PowerLaw { alpha, mu } => {
                (mu * (self.n as f64).powf(-alpha)).clamp(0.0, 1.0)
            }
        }
    }
}

/// Samples G(n,p): each of the C(n,2) edges independently present with
/// probability p, drawn in (u,v) lexicographic order from the trial stream.
pub fn gnp(params: &GnpParams, seed: &Seed, trial: u64) -> Result<Graph, RandomError> {
    if params.n < 1 || params.n > MAX_GRAPH_N {
        return Err(RandomError::InvalidParameter(format!(
            "gnp graph generation needs 1 <= n <= {MAX_GRAPH_N}, got {}",
            params.n
        )));
    }
    let p = params.realized_p();
    let mut rng = seed.trial_rng(trial);
    let mut pairs = Vec::new();
    for u in 0..params.n {
        for v in (u + 1)..params.n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Ok(Graph::from_pairs(params.n, &pairs)?)
}

/// Degree-only G(n,p) sampler for statistics at sizes beyond the exact cap.
/// Uses the same edge stream order as [`gnp`], so for n <= 64 the degree
/// vector matches the materialized graph.
pub fn gnp_degrees(params: &GnpParams, seed: &Seed, trial: u64) -> Result<Vec<u32>, RandomError> {
    if params.n < 1 || params.n > MAX_DEGREE_ONLY_N {
        return Err(RandomError::InvalidParameter(format!(
            "degree-only sampler needs 1 <= n <= {MAX_DEGREE_ONLY_N}, got {}",
            params.n
        )));
    }
    let p = params.realized_p();
    let mut rng = seed.trial_rng(trial);
    let mut deg = vec![0u32; params.n];
    for u in 0..params.n {
        for v in (u + 1)..params.n {
            if rng.random_bool(p) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    Ok(deg)
}

/// Samples a uniform random simple d-regular graph by the pairing
/// (configuration) model: match nd half-edges uniformly, redraw the whole
/// pairing whenever a loop or multi-edge appears. Conditioned on success the
/// result is exactly uniform over simple d-regular graphs.
pub fn random_regular(n: usize, d: usize, seed: &Seed, trial: u64) -> Result<Graph, RandomError> {
    if n < 1 || n > MAX_GRAPH_N {
        return Err(RandomError::InvalidParameter(format!(
            "random_regular needs 1 <= n <= {MAX_GRAPH_N}, got n = {n}"
        )));
    }
    if d >= n {
        return Err(RandomError::InvalidParameter(format!(
            "degree {d} must be below vertex count {n}"
        )));
    }
    if (n * d) % 2 != 0 {
        return Err(RandomError::InvalidParameter(format!(
            "n*d must be even, got n = {n}, d = {d}"
        )));
    }
    let mut rng = seed.trial_rng(trial);
    let mut stubs: Vec<usize> = (0..n * d).map(|i| i / d).collect();
    'redraw: for _attempt in 0..PAIRING_REDRAW_CAP {
        // Fisher-Yates over the stub array.
        for i in (1..stubs.len()).rev() {
            let j = rng.random_range(0..=i);
            stubs.swap(i, j);
        }
        let mut pairs = Vec::with_capacity(n * d / 2);
        for chunk in stubs.chunks_exact(2) {
            let (a, b) = (chunk[0], chunk[1]);
            if a == b {
                continue 'redraw;
            }
            let e = (a.min(b), a.max(b));
            if pairs.contains(&e) {
                continue 'redraw;
            }
            pairs.push(e);
        }
        return Ok(Graph::from_pairs(n, &pairs)?);
    }
    Err(RandomError::GenerationFailed {
        attempts: PAIRING_REDRAW_CAP,
    })
}

/// Exact pairwise codegree statistics next to the d²/n reference value
/// expected of a d-regular graph with well-spread neighborhoods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CodegreeReport {
    pub min_codegree: usize,
    pub max_codegree: usize,
    pub mean_codegree: f64,
    pub reference: f64,
    pub is_regular: bool,
}

pub fn codegree_report(g: &Graph, d: usize) -> CodegreeReport {
    let n = g.n();
    let mut min_c = usize::MAX;
    let mut max_c = 0usize;
    let mut total = 0usize;
    let mut pairs = 0usize;
    for u in 0..n {
        for v in (u + 1)..n {
            let c = g.neighbors(u).intersection(g.neighbors(v)).len();
            min_c = min_c.min(c);
            max_c = max_c.max(c);
            total += c;
            pairs += 1;
        }
    }
    if pairs == 0 {
        min_c = 0;
    }
    CodegreeReport {
        min_codegree: min_c,
        max_codegree: max_c,
        mean_codegree: if pairs == 0 {
            0.0
        } else {
            total as f64 / pairs as f64
        },
        reference: (d * d) as f64 / n as f64,
        is_regular: g.is_regular() && (n == 0 || g.degree(0) == d),
    }
}
