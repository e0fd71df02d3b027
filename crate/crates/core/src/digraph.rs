//! Plain finite digraphs and their underlying undirected graphs.
//!
//! Vertices are 1-based (`1..=nu`) in every public API and serialized form.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A finite simple digraph: no self-loops, no repeated arcs. Antiparallel
/// arcs (`(a, b)` and `(b, a)`) are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiGraph", into = "RawDiGraph")]
pub struct DiGraph {
    nu: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawDiGraph {
    nu: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawDiGraph> for DiGraph {
    type Error = crate::JacoError;

    fn try_from(raw: RawDiGraph) -> Result<Self> {
        DiGraph::new(raw.nu, raw.arcs)
    }
}

impl From<DiGraph> for RawDiGraph {
    fn from(g: DiGraph) -> Self {
        RawDiGraph {
            nu: g.nu,
            arcs: g.arcs,
        }
    }
}

impl DiGraph {
    pub fn new(nu: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(t, h) in &arcs {
            if t == h {
                return Err(domain(format!("self-loop at vertex {t}")));
            }
            if t == 0 || h == 0 || t > nu || h > nu {
                return Err(domain(format!("arc ({t}, {h}) out of range 1..={nu}")));
            }
            if !seen.insert((t, h)) {
                return Err(domain(format!("duplicate arc ({t}, {h})")));
            }
        }
        Ok(DiGraph { nu, arcs })
    }

    /// Vertex count ν.
    pub fn nu(&self) -> usize {
        self.nu
    }

    /// Arc count ε.
    pub fn eps(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Out-degrees, indexed `0..nu` for `v_1..v_nu`.
    pub fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.nu];
        for &(t, _) in &self.arcs {
            out[t - 1] += 1;
        }
        out
    }

    /// In-degrees, indexed `0..nu` for `v_1..v_nu`.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut inn = vec![0; self.nu];
        for &(_, h) in &self.arcs {
            inn[h - 1] += 1;
        }
        inn
    }

    /// A topological order of the vertices (1-based), or `None` if the
    /// digraph has a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.nu];
        let mut pending = self.in_degrees();
        for &(t, h) in &self.arcs {
            succ[t - 1].push(h - 1);
        }
        let mut ready: Vec<usize> = (0..self.nu).rev().filter(|&v| pending[v] == 0).collect();
        let mut order = Vec::with_capacity(self.nu);
        while let Some(v) = ready.pop() {
            order.push(v + 1);
            for &w in &succ[v] {
                pending[w] -= 1;
                if pending[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == self.nu).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Forgets arc directions. Fails if the digraph has antiparallel arcs,
    /// since those would collapse onto one edge.
    pub fn underlying(&self) -> Result<UndirectedGraph> {
        let edges: Vec<_> = self
            .arcs
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let count = edges.len();
        let g = UndirectedGraph::new(self.nu, edges)?;
        if g.eps() != count {
            return Err(domain("antiparallel arcs have no simple underlying graph"));
        }
        Ok(g)
    }
}

/// A finite simple undirected graph with a fixed edge labelling `e_1..e_ε`:
/// edges are stored as `(low, high)` pairs sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UndirectedGraph {
    nu: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Normalizes each pair to `(low, high)`, sorts, and drops repeats.
    pub fn new(nu: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(domain(format!("self-loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > nu || b > nu {
                return Err(domain(format!("edge {{{a}, {b}}} out of range 1..={nu}")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(UndirectedGraph {
            nu,
            edges: normalized,
        })
    }

    /// The complete graph K_m.
    pub fn complete(m: usize) -> Self {
        let edges = (1..=m)
            .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
            .collect();
        UndirectedGraph { nu: m, edges }
    }

    /// The path on `m` vertices `1 - 2 - ... - m`.
    pub fn path(m: usize) -> Self {
        let edges = (1..m).map(|a| (a, a + 1)).collect();
        UndirectedGraph { nu: m, edges }
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn eps(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Orientation selected by `mask`: bit `k` clear orients `e_{k+1}`
    /// low→high, set orients it high→low.
    pub fn orient(&self, mask: u64) -> DiGraph {
        let arcs = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| if mask >> k & 1 == 0 { (a, b) } else { (b, a) })
            .collect();
        DiGraph { nu: self.nu, arcs }
    }

    /// Disjoint union; vertices of later components are shifted past earlier ones.
    pub fn disjoint_union<'a>(parts: impl IntoIterator<Item = &'a UndirectedGraph>) -> Self {
        let mut nu = 0;
        let mut edges = Vec::new();
        for g in parts {
            edges.extend(g.edges.iter().map(|&(a, b)| (a + nu, b + nu)));
            nu += g.nu;
        }
        UndirectedGraph { nu, edges }
    }
}
