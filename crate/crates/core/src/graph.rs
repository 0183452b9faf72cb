//! Immutable simple undirected graphs over dense `0..n` node IDs.
//!
//! Ingestion is forgiving: self-loops are dropped, duplicate and reversed
//! edges collapse, and an ID gap simply yields isolated nodes.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
    name: Option<String>,
}

impl Graph {
    /// A graph with `node_count` isolated nodes.
    pub fn empty(node_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); node_count],
            edge_count: 0,
            name: None,
        }
    }

    /// Builds a graph from an edge iterator. Self-loops are dropped and
    /// duplicates collapsed; an endpoint `>= node_count` is an error.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut adjacency = vec![Vec::new(); node_count];
        for (u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_edges += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: twice_edges / 2,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.check_node(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    /// Subgraph induced on the neighbors of `v` (excluding `v`), relabeled
    /// `0..deg(v)` in ascending original-ID order.
    pub fn neighborhood_graph(&self, v: NodeId) -> Result<Graph> {
        self.check_node(v)?;
        let members = &self.adjacency[v];
        let mut adjacency = vec![Vec::new(); members.len()];
        let mut twice_edges = 0;
        for (i, &a) in members.iter().enumerate() {
            // Both lists are sorted, so a merge walk finds the common neighbors
            // in ascending order, which is also ascending local index.
            let (mut p, mut q) = (0, 0);
            let other = &self.adjacency[a];
            while p < members.len() && q < other.len() {
                match members[p].cmp(&other[q]) {
                    std::cmp::Ordering::Less => p += 1,
                    std::cmp::Ordering::Greater => q += 1,
                    std::cmp::Ordering::Equal => {
                        adjacency[i].push(p);
                        p += 1;
                        q += 1;
                    }
                }
            }
            twice_edges += adjacency[i].len();
        }
        Ok(Graph {
            adjacency,
            edge_count: twice_edges / 2,
            name: None,
        })
    }

    /// Canonical edge list: one `u v` line per edge with `u < v`, sorted.
    ///
    /// When the highest-ID node is isolated a trailing `n-1 n-1` line is
    /// written; the parser drops it as a self-loop but still counts the ID,
    /// so the node count survives a round trip.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        if let Some(last) = self.adjacency.last() {
            if last.is_empty() {
                let id = self.node_count() - 1;
                let _ = writeln!(out, "{id} {id}");
            }
        }
        out
    }
}

/// Parses whitespace-separated `u v` pairs. Lines starting with `#` or `%`
/// are comments; columns after the second (weights, timestamps) are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id: Option<NodeId> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut endpoint = || -> Result<NodeId> {
            let token = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected two node IDs".into(),
            })?;
            token.parse::<NodeId>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid node ID {token:?}"),
            })
        };
        let u = endpoint()?;
        let v = endpoint()?;
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let node_count = match max_id {
        Some(m) => m.checked_add(1).ok_or_else(|| Error::Parse {
            line: 0,
            message: "node ID overflow".into(),
        })?,
        None => 0,
    };
    Graph::from_edges(node_count, edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub component_count: usize,
}

/// Breadth-first labeling; the component holding the lowest unlabeled ID
/// always receives the next label.
pub fn connected_components(g: &Graph) -> ComponentLabeling {
    const UNSEEN: usize = usize::MAX;
    let n = g.node_count();
    let mut labels = vec![UNSEEN; n];
    let mut queue = VecDeque::new();
    let mut next = 0;
    for start in 0..n {
        if labels[start] != UNSEEN {
            continue;
        }
        labels[start] = next;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if labels[w] == UNSEEN {
                    labels[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    ComponentLabeling {
        labels,
        component_count: next,
    }
}
