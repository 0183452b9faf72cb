//! Bridge-node centrality tuples, degree centrality, rankings, and
//! vaccinee selection.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, NodeId};
use crate::spectral;

/// ACR values closer than this compare equal.
pub const ACR_TOL: f64 = 1e-9;

/// `(components of NG(v), ACR of NG(v), |NG(v)|)` for a node `v`, where
/// NG(v) is the subgraph induced on v's neighbors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NbncTuple {
    pub components: usize,
    pub acr: f64,
    pub degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    Nbnc,
    Deg,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::Nbnc, Strategy::Deg];
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Nbnc => "NBNC",
            Strategy::Deg => "DEG",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nbnc" => Ok(Strategy::Nbnc),
            "deg" => Ok(Strategy::Deg),
            _ => Err(Error::invalid(format!(
                "unknown strategy {s:?} (expected nbnc or deg)"
            ))),
        }
    }
}

/// Degree-0 nodes get `(0, 0, 0)`. Degree-1 nodes have a one-vertex
/// neighborhood with no second eigenvalue; their ACR is taken as 0.
pub fn nbnc_tuple(g: &Graph, v: NodeId) -> Result<NbncTuple> {
    let ng = g.neighborhood_graph(v)?;
    let degree = ng.node_count();
    let components = connected_components(&ng).component_count;
    let acr = if components == 1 && degree >= 2 {
        spectral::acr(&ng)?
    } else {
        0.0
    };
    Ok(NbncTuple {
        components,
        acr,
        degree,
    })
}

/// Tuples for every node, computed in parallel.
pub fn nbnc_tuples(g: &Graph) -> Result<Vec<NbncTuple>> {
    (0..g.node_count())
        .into_par_iter()
        .map(|v| nbnc_tuple(g, v))
        .collect()
}

/// `Greater` when `a` ranks above `b`: more neighborhood components first,
/// then lower ACR, then higher degree.
pub fn compare_nbnc(a: &NbncTuple, b: &NbncTuple) -> Ordering {
    a.components
        .cmp(&b.components)
        .then_with(|| {
            if (a.acr - b.acr).abs() <= ACR_TOL {
                Ordering::Equal
            } else {
                b.acr.total_cmp(&a.acr)
            }
        })
        .then_with(|| a.degree.cmp(&b.degree))
}

pub fn degree_centrality(g: &Graph) -> Vec<usize> {
    (0..g.node_count()).map(|v| g.neighbors(v).len()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranking {
    /// Highest-ranked first; ties broken by ascending node ID.
    pub order: Vec<NodeId>,
    /// Equal-rank classes in rank order, each sorted ascending.
    pub tie_groups: Vec<Vec<NodeId>>,
}

impl Ranking {
    /// Index of each node's tie group.
    pub fn group_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order.len()];
        for (g, members) in self.tie_groups.iter().enumerate() {
            for &v in members {
                idx[v] = g;
            }
        }
        idx
    }

    fn from_sorted<F>(order: Vec<NodeId>, mut same_rank: F) -> Self
    where
        F: FnMut(NodeId, NodeId) -> bool,
    {
        let mut tie_groups: Vec<Vec<NodeId>> = Vec::new();
        for &v in &order {
            match tie_groups.last_mut() {
                Some(group) if same_rank(group[0], v) => group.push(v),
                _ => tie_groups.push(vec![v]),
            }
        }
        Ranking { order, tie_groups }
    }
}

/// Ranks nodes from precomputed tuples.
///
/// ACR values are first snapped to the smallest member of their
/// `ACR_TOL`-chain so that the sort key is an exact total order.
pub fn rank_by_tuples(tuples: &[NbncTuple]) -> Ranking {
    let snapped = snap_acr(tuples);
    let key = |v: NodeId| NbncTuple {
        acr: snapped[v],
        ..tuples[v]
    };
    let mut order: Vec<NodeId> = (0..tuples.len()).collect();
    order.sort_by(|&a, &b| {
        let (ka, kb) = (key(a), key(b));
        kb.components
            .cmp(&ka.components)
            .then(ka.acr.total_cmp(&kb.acr))
            .then(kb.degree.cmp(&ka.degree))
            .then(a.cmp(&b))
    });
    Ranking::from_sorted(order, |a, b| {
        let (ka, kb) = (key(a), key(b));
        ka.components == kb.components && ka.acr == kb.acr && ka.degree == kb.degree
    })
}

fn snap_acr(tuples: &[NbncTuple]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..tuples.len()).collect();
    idx.sort_by(|&a, &b| tuples[a].acr.total_cmp(&tuples[b].acr));
    let mut snapped = vec![0.0; tuples.len()];
    let mut anchor = 0.0;
    let mut prev: Option<f64> = None;
    for v in idx {
        let x = tuples[v].acr;
        if prev.is_none_or(|p| x - p > ACR_TOL) {
            anchor = x;
        }
        snapped[v] = anchor;
        prev = Some(x);
    }
    snapped
}

pub fn rank_by_degree(degrees: &[usize]) -> Ranking {
    let mut order: Vec<NodeId> = (0..degrees.len()).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
    Ranking::from_sorted(order, |a, b| degrees[a] == degrees[b])
}

pub fn rank_nodes(g: &Graph, strategy: Strategy) -> Result<Ranking> {
    Ok(match strategy {
        Strategy::Nbnc => rank_by_tuples(&nbnc_tuples(g)?),
        Strategy::Deg => rank_by_degree(&degree_centrality(g)),
    })
}

/// Nodes pre-selected as immune. Membership is checked through a mask;
/// `members` keeps selection order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VaccineeSet {
    members: Vec<NodeId>,
    mask: Vec<bool>,
}

impl VaccineeSet {
    pub fn new(node_count: usize, ids: impl IntoIterator<Item = NodeId>) -> Result<Self> {
        let mut mask = vec![false; node_count];
        let mut members = Vec::new();
        for v in ids {
            if v >= node_count {
                return Err(Error::NodeOutOfRange {
                    node: v,
                    node_count,
                });
            }
            if !mask[v] {
                mask[v] = true;
                members.push(v);
            }
        }
        Ok(VaccineeSet { members, mask })
    }

    pub fn none(node_count: usize) -> Self {
        VaccineeSet {
            members: Vec::new(),
            mask: vec![false; node_count],
        }
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.mask.len()
    }

    /// Members in selection (rank) order.
    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    pub fn sorted(&self) -> Vec<NodeId> {
        let mut ids = self.members.clone();
        ids.sort_unstable();
        ids
    }

    pub(crate) fn mask(&self) -> &[bool] {
        &self.mask
    }
}

/// `round_half_up(lambda * n)`. The tiny bias keeps products such as
/// `0.35 * 10 = 3.4999999999999996` on the intended side of the half.
pub fn vaccinee_count(node_count: usize, lambda: f64) -> Result<usize> {
    check_fraction(lambda)?;
    let k = (lambda * node_count as f64 + 0.5 + 1e-9).floor() as usize;
    Ok(k.min(node_count))
}

fn check_fraction(lambda: f64) -> Result<()> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "lambda must lie in [0, 1], got {lambda}"
        )))
    }
}

/// Top `vaccinee_count(n, lambda)` nodes of an existing ranking.
pub fn select_from_ranking(ranking: &Ranking, lambda: f64) -> Result<VaccineeSet> {
    let n = ranking.order.len();
    let k = vaccinee_count(n, lambda)?;
    VaccineeSet::new(n, ranking.order[..k].iter().copied())
}

pub fn select_vaccinees(g: &Graph, strategy: Strategy, lambda: f64) -> Result<VaccineeSet> {
    check_fraction(lambda)?;
    select_from_ranking(&rank_nodes(g, strategy)?, lambda)
}
