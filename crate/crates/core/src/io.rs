//! JSON graph and allocation files.
//!
//! Two graph shapes are accepted:
//! - `{"nu": 4, "arcs": [[1, 2], ...]}`: a general digraph;
//! - `{"kind": "jaco", "n": 5, "arcs": [[1, 2], ...]}`: a Jaco graph export.
//!   With `"kind": "jaco"` the arcs must be exactly those of `J_n(1)`.

use serde::{Deserialize, Serialize};

use crate::cleaning::BrushAllocation;
use crate::digraph::DiGraph;
use crate::error::{domain, Result};
use crate::jaco::{build_jaco, JacoGraph};

pub const JACO_KIND: &str = "jaco";

#[derive(Debug, Serialize)]
struct JacoExport<'a> {
    kind: &'static str,
    n: usize,
    arcs: &'a [(usize, usize)],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default)]
    kind: Option<String>,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    nu: Option<usize>,
    arcs: Vec<(usize, usize)>,
}

/// A parsed graph file: always a digraph, plus the Jaco graph when the file
/// declared itself one.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub digraph: DiGraph,
    pub jaco: Option<JacoGraph>,
}

pub fn jaco_to_json(g: &JacoGraph) -> Result<String> {
    Ok(serde_json::to_string(&JacoExport {
        kind: JACO_KIND,
        n: g.n(),
        arcs: g.arcs(),
    })?)
}

pub fn parse_graph(text: &str) -> Result<LoadedGraph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let nu = match (doc.n, doc.nu) {
        (Some(n), None) | (None, Some(n)) => n,
        (Some(_), Some(_)) => return Err(domain("graph file has both \"n\" and \"nu\"")),
        (None, None) => return Err(domain("graph file needs a vertex count \"n\" or \"nu\"")),
    };
    match doc.kind.as_deref() {
        None => Ok(LoadedGraph {
            digraph: DiGraph::new(nu, doc.arcs)?,
            jaco: None,
        }),
        Some(JACO_KIND) => {
            let g = build_jaco(nu)?;
            let mut arcs = doc.arcs;
            arcs.sort_unstable();
            if arcs != g.arcs() {
                let bad = arcs
                    .iter()
                    .find(|&&(a, b)| !g.has_arc(a, b))
                    .map(|(a, b)| format!("arc ({a}, {b}) breaks the Jaco arc rule"))
                    .unwrap_or_else(|| format!("arc list is missing arcs of J_{nu}(1)"));
                return Err(domain(format!("not a Jaco graph: {bad}")));
            }
            Ok(LoadedGraph {
                digraph: g.to_digraph(),
                jaco: Some(g),
            })
        }
        Some(other) => Err(domain(format!("unknown graph kind {other:?}"))),
    }
}

/// An allocation file is a JSON array of non-negative integers.
pub fn parse_allocation(text: &str) -> Result<BrushAllocation> {
    Ok(serde_json::from_str(text)?)
}
