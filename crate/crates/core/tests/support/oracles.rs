//! Brute-force reference computations used by the integration and
//! acceptance suites. Nothing here calls the code paths it is used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use std::cmp::Ordering;
use std::collections::HashMap;

use nbnc_core::{compare_nbnc, Graph, NbncTuple, NodeState};

/// Component count via boolean transitive closure (Warshall).
pub fn closure_component_count(g: &Graph) -> usize {
    let n = g.node_count();
    let mut reach = vec![vec![false; n]; n];
    for u in 0..n {
        reach[u][u] = true;
        for v in 0..n {
            if g.has_edge(u, v) {
                reach[u][v] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    // a node starts a new component if no lower node reaches it
    (0..n).filter(|&v| (0..v).all(|u| !reach[u][v])).count()
}

pub fn closure_connected(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if g.has_edge(x, y) && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen[v]
}

/// Order and tie groups from the pairwise comparator: a node's rank is the
/// number of nodes strictly above it; ties share a rank.
pub fn pairwise_ranking(tuples: &[NbncTuple]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let above: Vec<usize> = (0..tuples.len())
        .map(|v| {
            (0..tuples.len())
                .filter(|&w| compare_nbnc(&tuples[w], &tuples[v]) == Ordering::Greater)
                .count()
        })
        .collect();
    let mut order: Vec<usize> = (0..tuples.len()).collect();
    order.sort_by_key(|&v| (above[v], v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(g) if above[g[0]] == above[v] => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    (order, groups)
}

/// Same as [`pairwise_ranking`] for plain degrees.
pub fn pairwise_degree_ranking(degrees: &[usize]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let above: Vec<usize> = (0..degrees.len())
        .map(|v| {
            (0..degrees.len())
                .filter(|&w| degrees[w] > degrees[v])
                .count()
        })
        .collect();
    let mut order: Vec<usize> = (0..degrees.len()).collect();
    order.sort_by_key(|&v| (above[v], v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(g) if above[g[0]] == above[v] => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    (order, groups)
}

fn bernoulli_outcomes(k: usize, p: f64) -> impl Iterator<Item = (u32, f64)> {
    (0u32..(1 << k)).map(move |mask| {
        let prob = (0..k)
            .map(|i| if mask >> i & 1 == 1 { p } else { 1.0 - p })
            .product();
        (mask, prob)
    })
}

/// Exact distribution of the node-state vector after one SIS round,
/// obtained by enumerating every initial-infection, recovery, and per-link
/// transmission outcome. If nobody is infected after recovery the state
/// after recovery is final.
pub fn exact_one_round(
    g: &Graph,
    vaccinated: &[bool],
    beta: f64,
    mu: f64,
) -> HashMap<Vec<NodeState>, f64> {
    use NodeState::*;
    let n = g.node_count();
    let free: Vec<usize> = (0..n).filter(|&v| !vaccinated[v]).collect();
    let mut dist: HashMap<Vec<NodeState>, f64> = HashMap::new();
    for (init, p_init) in bernoulli_outcomes(free.len(), beta) {
        let infected0: Vec<usize> = (0..free.len())
            .filter(|&i| init >> i & 1 == 1)
            .map(|i| free[i])
            .collect();
        for (recovered, p_rec) in bernoulli_outcomes(infected0.len(), mu) {
            let mut state: Vec<NodeState> = (0..n)
                .map(|v| {
                    if vaccinated[v] {
                        Vaccinated
                    } else {
                        Susceptible
                    }
                })
                .collect();
            for (i, &v) in infected0.iter().enumerate() {
                if recovered >> i & 1 == 0 {
                    state[v] = Infected;
                }
            }
            let mut links = Vec::new();
            for u in 0..n {
                if state[u] == Infected {
                    for w in 0..n {
                        if g.has_edge(u, w) && state[w] == Susceptible {
                            links.push(w);
                        }
                    }
                }
            }
            for (hits, p_link) in bernoulli_outcomes(links.len(), beta) {
                let mut next = state.clone();
                for (i, &w) in links.iter().enumerate() {
                    if hits >> i & 1 == 1 {
                        next[w] = Infected;
                    }
                }
                *dist.entry(next).or_insert(0.0) += p_init * p_rec * p_link;
            }
        }
    }
    dist
}

/// Laplacian spectra of every graph on at most 4 nodes, keyed by the sorted
/// degree sequence (which determines the isomorphism class for n <= 4).
pub fn small_laplacian_spectrum(degrees: &[usize]) -> Vec<f64> {
    let mut key = degrees.to_vec();
    key.sort_unstable();
    let r2 = std::f64::consts::SQRT_2;
    match key.as_slice() {
        [] => vec![],
        [0] => vec![0.0],
        [0, 0] => vec![0.0, 0.0],
        [1, 1] => vec![0.0, 2.0],
        [0, 0, 0] => vec![0.0; 3],
        [0, 1, 1] => vec![0.0, 0.0, 2.0],
        [1, 1, 2] => vec![0.0, 1.0, 3.0],
        [2, 2, 2] => vec![0.0, 3.0, 3.0],
        [0, 0, 0, 0] => vec![0.0; 4],
        [0, 0, 1, 1] => vec![0.0, 0.0, 0.0, 2.0],
        [1, 1, 1, 1] => vec![0.0, 0.0, 2.0, 2.0],
        [0, 1, 1, 2] => vec![0.0, 0.0, 1.0, 3.0],
        [0, 2, 2, 2] => vec![0.0, 0.0, 3.0, 3.0],
        [1, 1, 1, 3] => vec![0.0, 1.0, 1.0, 4.0],
        [1, 1, 2, 2] => vec![0.0, 2.0 - r2, 2.0, 2.0 + r2],
        [2, 2, 2, 2] => vec![0.0, 2.0, 2.0, 4.0],
        [1, 2, 2, 3] => vec![0.0, 1.0, 3.0, 4.0],
        [2, 2, 3, 3] => vec![0.0, 2.0, 4.0, 4.0],
        [3, 3, 3, 3] => vec![0.0, 4.0, 4.0, 4.0],
        other => panic!("no closed form for degree sequence {other:?}"),
    }
}

/// Every labeled simple graph on `n` nodes.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}
