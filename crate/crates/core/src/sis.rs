//! Discrete-round SIS epidemics with pre-vaccinated nodes.
//!
//! A round is two phases: every infected node recovers with probability
//! `mu`; then every node still infected tries to infect each susceptible
//! neighbor with probability `beta`, one draw per link. Only nodes infected
//! at the start of the second phase transmit. A round in which nobody is
//! infected after recovery is not counted and ends the run.
//!
//! Draws are uniform in `[0, 1)` and an event fires when `u <= p`, so
//! `p = 0` never fires and `p = 1` always does. Draw order is ascending
//! node ID (and ascending neighbor ID within a node), which makes every
//! seeded run replayable.

use crate::centrality::VaccineeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeState {
    Susceptible,
    Infected,
    Vaccinated,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimConfig {
    pub beta: f64,
    pub mu: f64,
    pub max_rounds: usize,
    pub seed: u64,
}

impl SimConfig {
    pub fn new(beta: f64, mu: f64, max_rounds: usize, seed: u64) -> Result<Self> {
        let config = SimConfig {
            beta,
            mu,
            max_rounds,
            seed,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        check_probability("beta", self.beta)?;
        check_probability("mu", self.mu)?;
        if self.max_rounds == 0 {
            return Err(Error::invalid("max_rounds must be at least 1"));
        }
        Ok(())
    }
}

pub(crate) fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "{name} must lie in [0, 1], got {p}"
        )))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimResult {
    /// Infected count after the infection phase of each counted round.
    pub per_round_infected: Vec<usize>,
    pub rounds_executed: usize,
    pub total_infected: usize,
    pub avg_infected_per_round: f64,
}

impl SimResult {
    fn from_rounds(per_round_infected: Vec<usize>) -> Self {
        let rounds_executed = per_round_infected.len();
        let total_infected: usize = per_round_infected.iter().sum();
        let avg_infected_per_round = if rounds_executed == 0 {
            0.0
        } else {
            total_infected as f64 / rounds_executed as f64
        };
        SimResult {
            per_round_infected,
            rounds_executed,
            total_infected,
            avg_infected_per_round,
        }
    }
}

/// Vaccinees become `Vaccinated` without consuming a draw; every other node
/// draws once and starts `Infected` when the draw is `<= beta`.
pub fn initialize(
    g: &Graph,
    vaccinees: &VaccineeSet,
    beta: f64,
    rng: &mut SplitMix64,
) -> Vec<NodeState> {
    debug_assert_eq!(g.node_count(), vaccinees.node_count());
    vaccinees
        .mask()
        .iter()
        .map(|&vaccinated| {
            if vaccinated {
                NodeState::Vaccinated
            } else if rng.next_f64() <= beta {
                NodeState::Infected
            } else {
                NodeState::Susceptible
            }
        })
        .collect()
}

/// Phase one: each infected node draws once and recovers when `<= mu`.
pub fn phase_recovery(states: &mut [NodeState], mu: f64, rng: &mut SplitMix64) {
    for state in states.iter_mut() {
        if *state == NodeState::Infected && rng.next_f64() <= mu {
            *state = NodeState::Susceptible;
        }
    }
}

/// Phase two: nodes infected on entry transmit over each link to a node
/// susceptible on entry. Every such link consumes one draw even when its
/// target is already marked, so a node with `d` infected neighbors gets
/// `d` independent chances.
pub fn phase_infection(g: &Graph, states: &mut [NodeState], beta: f64, rng: &mut SplitMix64) {
    let mut newly = vec![false; states.len()];
    for u in 0..states.len() {
        if states[u] != NodeState::Infected {
            continue;
        }
        for &w in g.neighbors(u) {
            if states[w] == NodeState::Susceptible && rng.next_f64() <= beta {
                newly[w] = true;
            }
        }
    }
    for (state, hit) in states.iter_mut().zip(newly) {
        if hit {
            *state = NodeState::Infected;
        }
    }
}

pub fn count_infected(states: &[NodeState]) -> usize {
    states.iter().filter(|&&s| s == NodeState::Infected).count()
}

/// A single epidemic advanced one round at a time.
#[derive(Clone, Debug)]
pub struct Epidemic<'g> {
    graph: &'g Graph,
    states: Vec<NodeState>,
    beta: f64,
    mu: f64,
    stopped: bool,
}

impl<'g> Epidemic<'g> {
    pub fn new(
        graph: &'g Graph,
        vaccinees: &VaccineeSet,
        beta: f64,
        mu: f64,
        rng: &mut SplitMix64,
    ) -> Self {
        let states = initialize(graph, vaccinees, beta, rng);
        Epidemic {
            graph,
            states,
            beta,
            mu,
            stopped: false,
        }
    }

    pub fn states(&self) -> &[NodeState] {
        &self.states
    }

    pub fn is_stopped(&self) -> bool {
        self.stopped
    }

    /// Runs one round and returns the infected count after phase two, or
    /// `None` when nobody was left infected after phase one. Once `None`
    /// has been returned every later call returns `None` without drawing.
    pub fn step(&mut self, rng: &mut SplitMix64) -> Option<usize> {
        if self.stopped {
            return None;
        }
        phase_recovery(&mut self.states, self.mu, rng);
        if count_infected(&self.states) == 0 {
            self.stopped = true;
            return None;
        }
        phase_infection(self.graph, &mut self.states, self.beta, rng);
        Some(count_infected(&self.states))
    }
}

/// Runs one epidemic, calling `observe(round, states)` after each counted
/// round (rounds numbered from 1).
pub fn simulate_with<F>(
    g: &Graph,
    beta: f64,
    mu: f64,
    max_rounds: usize,
    vaccinees: &VaccineeSet,
    rng: &mut SplitMix64,
    mut observe: F,
) -> SimResult
where
    F: FnMut(usize, &[NodeState]),
{
    let mut epidemic = Epidemic::new(g, vaccinees, beta, mu, rng);
    let mut per_round = Vec::with_capacity(max_rounds);
    while per_round.len() < max_rounds {
        match epidemic.step(rng) {
            Some(infected) => {
                per_round.push(infected);
                observe(per_round.len(), epidemic.states());
            }
            None => break,
        }
    }
    SimResult::from_rounds(per_round)
}

/// One run on stream `(config.seed, 0)`.
pub fn run_simulation(g: &Graph, config: &SimConfig, vaccinees: &VaccineeSet) -> SimResult {
    let mut rng = SplitMix64::stream(config.seed, 0);
    simulate_with(
        g,
        config.beta,
        config.mu,
        config.max_rounds,
        vaccinees,
        &mut rng,
        |_, _| {},
    )
}

/// Trial `t` runs on stream `(config.seed, t)`; results are in trial order.
pub fn run_trials(
    g: &Graph,
    config: &SimConfig,
    vaccinees: &VaccineeSet,
    n_trials: usize,
) -> Result<Vec<SimResult>> {
    config.validate()?;
    if n_trials == 0 {
        return Err(Error::invalid("n_trials must be at least 1"));
    }
    if vaccinees.node_count() != g.node_count() {
        return Err(Error::invalid(
            "vaccinee set was built for a different graph",
        ));
    }
    Ok((0..n_trials as u64)
        .map(|t| {
            let mut rng = SplitMix64::stream(config.seed, t);
            simulate_with(
                g,
                config.beta,
                config.mu,
                config.max_rounds,
                vaccinees,
                &mut rng,
                |_, _| {},
            )
        })
        .collect())
}
