//! Parameter sweeps over a registry of networks.
//!
//! Every `(network, beta, mu, lambda, strategy)` cell runs `n_trials`
//! seeded epidemics. A trial contributes its average infected count per
//! round divided by the node count, and the cell reports the mean of those
//! per-trial fractions.

mod heatmap;
mod manifest;
mod output;
mod ratio;

use rayon::prelude::*;

use crate::centrality::{degree_centrality, nbnc_tuples, VaccineeSet};
use crate::centrality::{rank_by_degree, rank_by_tuples, select_from_ranking, Strategy};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::derive_seed;
use crate::sis::{check_probability, run_trials, SimConfig};

pub use heatmap::{emit_heatmap, heatmap_layout, render_svg, HeatCell, HeatmapLayout, Rgb};
pub use heatmap::{GREEN, RED, YELLOW};
pub use manifest::{load_registry, parse_manifest, ManifestEntry, Registry};
pub use output::{read_records_csv, write_file, write_ratios_csv, write_records_csv};
pub use output::{write_summary_csv, RATIOS_HEADER, RECORDS_HEADER, SUMMARY_HEADER};
pub use ratio::{compute_ratios, quantile, summarize_ratios, RatioRecord, RatioSummary};
pub use ratio::{Condition, SummaryRow};

#[derive(Clone, Debug, PartialEq)]
pub struct Network {
    pub name: String,
    pub graph: Graph,
}

impl Network {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Network {
            name: name.into(),
            graph,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepGrid {
    pub betas: Vec<f64>,
    pub mus: Vec<f64>,
    pub lambdas: Vec<f64>,
    pub strategies: Vec<Strategy>,
    pub n_trials: usize,
    pub max_rounds: usize,
    pub base_seed: u64,
}

impl Default for SweepGrid {
    /// 3 infection rates x 2 recovery rates x 5 vaccination fractions x 2
    /// strategies, 50 trials of at most 20 rounds.
    fn default() -> Self {
        SweepGrid {
            betas: vec![0.3, 0.5, 0.7],
            mus: vec![0.25, 0.5],
            lambdas: vec![0.05, 0.10, 0.15, 0.20, 0.30],
            strategies: Strategy::ALL.to_vec(),
            n_trials: 50,
            max_rounds: 20,
            base_seed: 0,
        }
    }
}

impl SweepGrid {
    pub fn validate(&self) -> Result<()> {
        for (name, values) in [
            ("beta", &self.betas),
            ("mu", &self.mus),
            ("lambda", &self.lambdas),
        ] {
            if values.is_empty() {
                return Err(Error::invalid(format!("grid has no {name} values")));
            }
            for &p in values {
                check_probability(name, p)?;
            }
        }
        if self.strategies.is_empty() {
            return Err(Error::invalid("grid has no strategies"));
        }
        if self.n_trials == 0 || self.max_rounds == 0 {
            return Err(Error::invalid("n_trials and max_rounds must be at least 1"));
        }
        Ok(())
    }

    /// `(beta, mu, lambda)` triples in row order.
    pub fn conditions(&self) -> Vec<Condition> {
        let mut out = Vec::with_capacity(self.betas.len() * self.mus.len() * self.lambdas.len());
        for &beta in &self.betas {
            for &mu in &self.mus {
                for &lambda in &self.lambdas {
                    out.push(Condition { beta, mu, lambda });
                }
            }
        }
        out
    }

    pub fn cells_per_network(&self) -> usize {
        self.betas.len() * self.mus.len() * self.lambdas.len() * self.strategies.len()
    }

    /// Seed for one operating condition of one network. Both strategies of
    /// a condition share it, so their trials start from the same streams.
    pub fn cell_seed(&self, network_index: usize, condition_index: usize) -> u64 {
        derive_seed(
            derive_seed(self.base_seed, network_index as u64),
            condition_index as u64,
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub network: String,
    pub beta: f64,
    pub mu: f64,
    pub lambda: f64,
    pub strategy: Strategy,
    pub avg_infected_fraction: f64,
    pub n_trials: usize,
    /// Standard error of the per-trial fractions; absent when read from CSV.
    pub std_error: Option<f64>,
}

impl SweepRecord {
    pub fn condition(&self) -> Condition {
        Condition {
            beta: self.beta,
            mu: self.mu,
            lambda: self.lambda,
        }
    }
}

struct Job<'a> {
    network_index: usize,
    network: &'a Network,
    condition_index: usize,
    condition: Condition,
    strategy: Strategy,
    vaccinees: &'a VaccineeSet,
}

/// Runs every cell of `grid` on every network. Cells execute on the
/// current rayon pool; output order is always
/// `(network, beta, mu, lambda, strategy)` in registry and grid order.
pub fn run_sweep(registry: &[Network], grid: &SweepGrid) -> Result<Vec<SweepRecord>> {
    if registry.is_empty() {
        return Err(Error::invalid("network registry is empty"));
    }
    grid.validate()?;
    let conditions = grid.conditions();

    // vaccinees[network][strategy][lambda]
    let vaccinees: Vec<Vec<Vec<VaccineeSet>>> = registry
        .iter()
        .map(|net| {
            grid.strategies
                .iter()
                .map(|&s| {
                    let ranking = match s {
                        Strategy::Nbnc => rank_by_tuples(&nbnc_tuples(&net.graph)?),
                        Strategy::Deg => rank_by_degree(&degree_centrality(&net.graph)),
                    };
                    grid.lambdas
                        .iter()
                        .map(|&l| select_from_ranking(&ranking, l))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut jobs = Vec::with_capacity(registry.len() * grid.cells_per_network());
    for (ni, network) in registry.iter().enumerate() {
        for (ci, &condition) in conditions.iter().enumerate() {
            let li = ci % grid.lambdas.len();
            for (si, &strategy) in grid.strategies.iter().enumerate() {
                jobs.push(Job {
                    network_index: ni,
                    network,
                    condition_index: ci,
                    condition,
                    strategy,
                    vaccinees: &vaccinees[ni][si][li],
                });
            }
        }
    }

    jobs.par_iter().map(|job| run_cell(job, grid)).collect()
}

fn run_cell(job: &Job<'_>, grid: &SweepGrid) -> Result<SweepRecord> {
    let g = &job.network.graph;
    let config = SimConfig::new(
        job.condition.beta,
        job.condition.mu,
        grid.max_rounds,
        grid.cell_seed(job.network_index, job.condition_index),
    )?;
    let trials = run_trials(g, &config, job.vaccinees, grid.n_trials)?;
    let n = g.node_count();
    let fractions: Vec<f64> = trials
        .iter()
        .map(|t| {
            if n == 0 {
                0.0
            } else {
                t.avg_infected_per_round / n as f64
            }
        })
        .collect();
    let (mean, std_error) = mean_and_std_error(&fractions);
    Ok(SweepRecord {
        network: job.network.name.clone(),
        beta: job.condition.beta,
        mu: job.condition.mu,
        lambda: job.condition.lambda,
        strategy: job.strategy,
        avg_infected_fraction: mean,
        n_trials: grid.n_trials,
        std_error: Some(std_error),
    })
}

fn mean_and_std_error(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}
