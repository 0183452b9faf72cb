//! Network manifests: one `name path expected_nodes` entry per line.

use std::fs;
use std::path::{Path, PathBuf};

use super::Network;
use crate::error::{Error, Result};
use crate::graph::parse_edge_list;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub path: PathBuf,
    pub expected_nodes: usize,
}

/// Parses manifest text. `#` starts a comment line; blank lines are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        if fields.len() != 3 {
            return Err(parse_err(format!(
                "expected `name path expected_nodes`, found {} fields",
                fields.len()
            )));
        }
        let expected_nodes = fields[2]
            .parse()
            .map_err(|_| parse_err(format!("invalid node count {:?}", fields[2])))?;
        if entries.iter().any(|e: &ManifestEntry| e.name == fields[0]) {
            return Err(parse_err(format!("duplicate network name {:?}", fields[0])));
        }
        entries.push(ManifestEntry {
            name: fields[0].to_string(),
            path: PathBuf::from(fields[1]),
            expected_nodes,
        });
    }
    Ok(entries)
}

/// Loaded networks plus any node-count mismatch warnings.
#[derive(Clone, Debug, PartialEq)]
pub struct Registry {
    pub networks: Vec<Network>,
    pub warnings: Vec<String>,
}

/// Reads a manifest and every edge list it names. Relative paths resolve
/// against the manifest's directory. A node count that differs from the
/// expected one is a warning, not an error.
pub fn load_registry(manifest_path: &Path) -> Result<Registry> {
    let text = fs::read_to_string(manifest_path).map_err(|source| Error::Io {
        path: manifest_path.to_path_buf(),
        source,
    })?;
    let entries = parse_manifest(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", manifest_path.display()),
        },
        other => other,
    })?;
    let base = manifest_path.parent().unwrap_or_else(|| Path::new("."));
    let mut registry = Registry {
        networks: Vec::with_capacity(entries.len()),
        warnings: Vec::new(),
    };
    for entry in entries {
        let path = base.join(&entry.path);
        let graph = fs::read_to_string(&path)
            .map_err(|e| Error::Data(format!("network {}: {}: {e}", entry.name, path.display())))
            .and_then(|text| {
                parse_edge_list(&text).map_err(|e| {
                    Error::Data(format!("network {}: {}: {e}", entry.name, path.display()))
                })
            })?;
        if graph.node_count() != entry.expected_nodes {
            registry.warnings.push(format!(
                "network {}: expected {} nodes, loaded {}",
                entry.name,
                entry.expected_nodes,
                graph.node_count()
            ));
        }
        let graph = graph.with_name(entry.name.clone());
        registry.networks.push(Network::new(entry.name, graph));
    }
    Ok(registry)
}
