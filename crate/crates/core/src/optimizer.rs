//! Genetic-algorithm search over masked weight vectors, the two optimized
//! weight presets, and great-arc interpolation between weight vectors.

use crate::catalog::MotifCatalog;
use crate::error::{Error, Result};
use crate::generator::{generate_mbn, MbnOptions};
use crate::graph::InDegreeSpec;
use crate::metrics::{
    hamming_distance_matrix, hierarchical_clustering, modularity, small_worldness,
    ModularityVariant,
};
use crate::rng::RngStream;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

/// Free motif indices (1-based) of a weight vector; everything off the mask
/// is pinned at zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTemplate {
    n_mot: usize,
    mask: Vec<usize>,
}

impl WeightTemplate {
    pub fn new(n_mot: usize, mask: &[usize]) -> Result<Self> {
        if mask.is_empty() {
            return Err(Error::EmptyMask);
        }
        let mut mask = mask.to_vec();
        mask.sort_unstable();
        mask.dedup();
        if mask[0] < 1 || *mask.last().unwrap() > n_mot {
            return Err(Error::InvalidWeights(format!(
                "mask indices must lie in 1..={n_mot}"
            )));
        }
        Ok(Self { n_mot, mask })
    }

    pub fn mask(&self) -> &[usize] {
        &self.mask
    }

    pub fn dim(&self) -> usize {
        self.mask.len()
    }

    /// Full weight vector with `alpha` on the mask and zeros elsewhere.
    pub fn expand(&self, alpha: &[f64]) -> Vec<f64> {
        assert_eq!(alpha.len(), self.mask.len());
        let mut w = vec![0.0; self.n_mot];
        for (&idx, &a) in self.mask.iter().zip(alpha) {
            w[idx - 1] = a;
        }
        w
    }
}

/// Mask of the motifs containing only bidirected edges; adequate for
/// promoting the neighbourhood structure behind high small-worldness.
pub const MASK_SMALLWORLD: [usize; 4] = [1, 4, 12, 16];
/// Small-world mask plus the single-edge motif and the dyad-with-output
/// motif, which allow community structure to form.
pub const MASK_MODULARITY: [usize; 6] = [1, 2, 4, 9, 12, 16];
/// Alternative modularity mask: divergent pair and fed-dyad motifs instead
/// of the single edge and the dyad with output. Nearly as effective; no
/// tuned preset exists for it.
pub const MASK_MODULARITY_ALT: [usize; 6] = [1, 4, 6, 7, 12, 16];

/// Tuned preferred-weight vector that promotes small-worldness.
pub fn preset_smallworld() -> Vec<f64> {
    let mut w = vec![0.0; 16];
    w[0] = -1.351;
    w[3] = 1.407;
    w[11] = 1.755;
    w[15] = 0.567;
    w
}

/// Tuned preferred-weight vector that promotes modularity.
pub fn preset_modularity() -> Vec<f64> {
    let mut w = vec![0.0; 16];
    w[0] = 1.852;
    w[1] = 1.3;
    w[3] = 0.838;
    w[8] = 0.084;
    w[11] = -2.111;
    w[15] = 0.1317;
    w
}

/// Looks up a preset weight vector by its CLI-facing name.
pub fn preset_by_name(name: &str) -> Option<Vec<f64>> {
    match name {
        "smallworld" => Some(preset_smallworld()),
        "modularity" => Some(preset_modularity()),
        _ => None,
    }
}

/// GA knobs. The evaluation protocol (network counts and sizes) lives in
/// the objective configurations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GaConfig {
    pub population: usize,
    pub generations: usize,
    pub tournament_size: usize,
    pub crossover_rate: f64,
    pub mutation_scale: f64,
    /// Per-gene Gaussian mutation probability; defaults to 1/dim at run
    /// time when unset.
    pub mutation_rate: Option<f64>,
    /// Initial genes are drawn uniformly from this symmetric range.
    pub init_range: f64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            population: 40,
            generations: 60,
            tournament_size: 3,
            crossover_rate: 0.8,
            mutation_scale: 0.3,
            mutation_rate: None,
            init_range: 2.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GaResult {
    pub best_wtilde: Vec<f64>,
    pub best_alpha: Vec<f64>,
    pub best_objective: f64,
    /// Best-so-far objective after each generation; non-decreasing.
    pub trace: Vec<f64>,
}

/// Maximizes `objective` over the template's free coordinates with a
/// generational GA: tournament selection, uniform crossover, per-gene
/// Gaussian mutation, elitism of one. Each evaluation gets a stream derived
/// from the run seed, so results are reproducible regardless of scheduling.
pub fn ga_optimize<F>(
    mut objective: F,
    template: &WeightTemplate,
    cfg: &GaConfig,
    rng: &mut RngStream,
) -> Result<GaResult>
where
    F: FnMut(&[f64], &mut RngStream) -> f64,
{
    if template.dim() == 0 {
        return Err(Error::EmptyMask);
    }
    let dim = template.dim();
    let mutation_rate = cfg.mutation_rate.unwrap_or(1.0 / dim as f64);
    let normal = Normal::new(0.0, cfg.mutation_scale).expect("positive scale");
    let eval_root = rng.derive(0x6741);

    let mut population: Vec<Vec<f64>> = (0..cfg.population)
        .map(|_| {
            (0..dim)
                .map(|_| rng.gen_range(-cfg.init_range..=cfg.init_range))
                .collect()
        })
        .collect();

    let evaluate = |alpha: &[f64], tag: u64, objective: &mut F| -> f64 {
        let full = template.expand(alpha);
        let mut stream = eval_root.derive(tag);
        objective(&full, &mut stream)
    };

    let mut fitness: Vec<f64> = population
        .iter()
        .enumerate()
        .map(|(i, a)| evaluate(a, i as u64, &mut objective))
        .collect();

    let mut best_idx = argmax(&fitness);
    let mut best_alpha = population[best_idx].clone();
    let mut best_fitness = fitness[best_idx];
    let mut trace = vec![best_fitness];

    for generation in 1..=cfg.generations {
        let mut next: Vec<Vec<f64>> = Vec::with_capacity(cfg.population);
        next.push(best_alpha.clone());
        while next.len() < cfg.population {
            let a = tournament(&fitness, cfg.tournament_size, rng);
            let b = tournament(&fitness, cfg.tournament_size, rng);
            let mut child = if rng.gen_bool(cfg.crossover_rate) {
                population[a]
                    .iter()
                    .zip(&population[b])
                    .map(|(&x, &y)| if rng.gen_bool(0.5) { x } else { y })
                    .collect()
            } else {
                population[a].clone()
            };
            for gene in &mut child {
                if rng.gen_bool(mutation_rate) {
                    *gene += normal.sample(rng);
                }
            }
            next.push(child);
        }
        population = next;
        fitness = population
            .iter()
            .enumerate()
            .map(|(i, a)| {
                evaluate(
                    a,
                    (generation * cfg.population + i) as u64,
                    &mut objective,
                )
            })
            .collect();
        best_idx = argmax(&fitness);
        if fitness[best_idx] > best_fitness {
            best_fitness = fitness[best_idx];
            best_alpha = population[best_idx].clone();
        }
        trace.push(best_fitness);
    }

    Ok(GaResult {
        best_wtilde: template.expand(&best_alpha),
        best_alpha,
        best_objective: best_fitness,
        trace,
    })
}

fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

fn tournament(fitness: &[f64], size: usize, rng: &mut RngStream) -> usize {
    let mut winner = rng.gen_range(0..fitness.len());
    for _ in 1..size {
        let challenger = rng.gen_range(0..fitness.len());
        if fitness[challenger] > fitness[winner] {
            winner = challenger;
        }
    }
    winner
}

/// Evaluation protocol for the small-worldness objective: delta in-degree
/// distributions, one mean index per K, averaged across K.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SmallWorldObjective {
    pub k_values: Vec<usize>,
    pub network_size: usize,
    pub networks_per_case: usize,
    pub reference_samples: usize,
}

impl Default for SmallWorldObjective {
    fn default() -> Self {
        Self {
            k_values: (2..=6).collect(),
            network_size: 100,
            networks_per_case: 20,
            reference_samples: 20,
        }
    }
}

/// Mean small-worldness of generated networks across the in-degree cases;
/// evaluation failures score negative infinity.
pub fn objective_smallworld(
    cat: &MotifCatalog,
    wtilde: &[f64],
    cfg: &SmallWorldObjective,
    rng: &mut RngStream,
) -> f64 {
    let mut total = 0.0;
    let mut count = 0usize;
    for &k in &cfg.k_values {
        let spec = InDegreeSpec::Delta { k };
        for _ in 0..cfg.networks_per_case {
            let outcome = generate_mbn(
                cat,
                cfg.network_size,
                &spec,
                wtilde,
                &MbnOptions::default(),
                rng,
            )
            .and_then(|g| small_worldness(&g, &spec, cfg.reference_samples, rng));
            match outcome {
                Ok(report) => {
                    total += report.s;
                    count += 1;
                }
                Err(_) => return f64::NEG_INFINITY,
            }
        }
    }
    total / count as f64
}

/// Evaluation protocol for the modularity objective: binomial in-degrees
/// with p = 1/N_clust and hierarchical clustering into N_clust communities.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModularityObjective {
    pub n_clust_values: Vec<usize>,
    pub network_size: usize,
    pub networks_per_case: usize,
}

impl Default for ModularityObjective {
    fn default() -> Self {
        Self {
            n_clust_values: (2..=20).collect(),
            network_size: 60,
            networks_per_case: 20,
        }
    }
}

/// Mean full-variant modularity of generated networks under hierarchical
/// clustering; evaluation failures score negative infinity.
pub fn objective_modularity(
    cat: &MotifCatalog,
    wtilde: &[f64],
    cfg: &ModularityObjective,
    rng: &mut RngStream,
) -> f64 {
    let mut total = 0.0;
    let mut count = 0usize;
    for &n_clust in &cfg.n_clust_values {
        let spec = InDegreeSpec::Binomial {
            p: 1.0 / n_clust as f64,
        };
        for _ in 0..cfg.networks_per_case {
            let outcome = generate_mbn(
                cat,
                cfg.network_size,
                &spec,
                wtilde,
                &MbnOptions::default(),
                rng,
            )
            .and_then(|g| {
                let part = hierarchical_clustering(&hamming_distance_matrix(&g), n_clust)?;
                modularity(&g, &part, ModularityVariant::Full)
            });
            match outcome {
                Ok(report) => {
                    total += report.q;
                    count += 1;
                }
                Err(_) => return f64::NEG_INFINITY,
            }
        }
    }
    total / count as f64
}

/// Angle between two weight vectors: arccos of the normalized dot product.
pub fn angle(a: &[f64], b: &[f64]) -> Result<f64> {
    let (na, nb) = (norm(a), norm(b));
    if na == 0.0 || nb == 0.0 {
        return Err(Error::InvalidWeights("zero-length weight vector".into()));
    }
    let dot: f64 = a.iter().zip(b).map(|(&x, &y)| x * y).sum();
    Ok((dot / (na * nb)).clamp(-1.0, 1.0).acos())
}

/// Point at parameter t on the unit-sphere great arc from normalized `a`
/// (t = 0) to normalized `b` (t = 1). Antiparallel endpoints leave the arc
/// undefined.
pub fn arc_interpolate(a: &[f64], b: &[f64], t: f64) -> Result<Vec<f64>> {
    assert_eq!(a.len(), b.len());
    assert!((0.0..=1.0).contains(&t), "arc parameter {t} outside [0, 1]");
    let phi = angle(a, b)?;
    let (na, nb) = (norm(a), norm(b));
    let ua: Vec<f64> = a.iter().map(|&x| x / na).collect();
    let ub: Vec<f64> = b.iter().map(|&x| x / nb).collect();
    if phi == 0.0 {
        return Ok(ua);
    }
    let sin_phi = phi.sin();
    if sin_phi < 1e-12 {
        return Err(Error::InvalidWeights(
            "antiparallel weight vectors have no unique arc".into(),
        ));
    }
    let (ca, cb) = (((1.0 - t) * phi).sin() / sin_phi, (t * phi).sin() / sin_phi);
    Ok(ua
        .iter()
        .zip(&ub)
        .map(|(&x, &y)| ca * x + cb * y)
        .collect())
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|&x| x * x).sum::<f64>().sqrt()
}
