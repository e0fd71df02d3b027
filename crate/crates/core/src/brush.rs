//! Brush numbers: the closed form for `J_n(1)`, the per-orientation cost of
//! an arbitrary digraph, and minimal allocations.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cleaning::BrushAllocation;
use crate::digraph::DiGraph;
use crate::error::{JacoError, Result};
use crate::jaco::JacoGraph;

/// Minimum brushes that clean one fixed orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cost {
    Finite(u64),
    /// The orientation has a directed cycle; no allocation cleans it.
    Undoable,
}

impl Cost {
    pub fn finite(self) -> Option<u64> {
        match self {
            Cost::Finite(c) => Some(c),
            Cost::Undoable => None,
        }
    }

    pub fn is_undoable(self) -> bool {
        self == Cost::Undoable
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(c) => write!(f, "{c}"),
            Cost::Undoable => f.write_str("undoable"),
        }
    }
}

impl Serialize for Cost {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cost::Finite(c) => s.serialize_u64(*c),
            Cost::Undoable => s.serialize_str("undoable"),
        }
    }
}

/// Reusable buffers for evaluating many orientations of one vertex set.
#[derive(Debug, Default)]
pub(crate) struct CostScratch {
    in_deg: Vec<u32>,
    out_deg: Vec<u32>,
    start: Vec<u32>,
    succ: Vec<u32>,
    pending: Vec<u32>,
    stack: Vec<u32>,
}

impl CostScratch {
    /// Cost of the digraph on `nu` vertices with the given 1-based arcs.
    pub(crate) fn cost(&mut self, nu: usize, arcs: &[(usize, usize)]) -> Cost {
        self.in_deg.clear();
        self.in_deg.resize(nu, 0);
        self.out_deg.clear();
        self.out_deg.resize(nu, 0);
        for &(t, h) in arcs {
            self.out_deg[t - 1] += 1;
            self.in_deg[h - 1] += 1;
        }

        self.start.clear();
        self.start.push(0);
        for v in 0..nu {
            let next = self.start[v] + self.out_deg[v];
            self.start.push(next);
        }
        self.succ.clear();
        self.succ.resize(arcs.len(), 0);
        self.pending.clear();
        self.pending.extend_from_slice(&self.start[..nu]);
        for &(t, h) in arcs {
            let slot = &mut self.pending[t - 1];
            self.succ[*slot as usize] = (h - 1) as u32;
            *slot += 1;
        }

        // Kahn's algorithm; `pending` now holds remaining in-degrees.
        self.pending.clear();
        self.pending.extend_from_slice(&self.in_deg);
        self.stack.clear();
        self.stack
            .extend((0..nu as u32).filter(|&v| self.in_deg[v as usize] == 0));
        let mut seen = 0;
        while let Some(v) = self.stack.pop() {
            seen += 1;
            let v = v as usize;
            for k in self.start[v]..self.start[v + 1] {
                let w = self.succ[k as usize] as usize;
                self.pending[w] -= 1;
                if self.pending[w] == 0 {
                    self.stack.push(w as u32);
                }
            }
        }
        if seen < nu {
            return Cost::Undoable;
        }
        let total = self
            .out_deg
            .iter()
            .zip(&self.in_deg)
            .map(|(&o, &i)| o.saturating_sub(i) as u64)
            .sum();
        Cost::Finite(total)
    }
}

/// `Σ_v max{0, d^+(v) − d^-(v)}` for an acyclic digraph, `Undoable` otherwise.
///
/// In a DAG every vertex receives exactly `d^-(v)` brushes before it fires
/// and must then cover its `d^+(v)` out-arcs, so this sum is both necessary
/// and sufficient.
pub fn orientation_cost(g: &DiGraph) -> Cost {
    CostScratch::default().cost(g.nu(), g.arcs())
}

/// Per-vertex `max{0, d^+(v) − d^-(v)}`; the smallest allocation that cleans `g`.
pub fn minimal_allocation(g: &DiGraph) -> Result<BrushAllocation> {
    if !g.is_acyclic() {
        return Err(JacoError::Undoable);
    }
    let beta = g
        .out_degrees()
        .into_iter()
        .zip(g.in_degrees())
        .map(|(o, i)| o.saturating_sub(i) as u64)
        .collect();
    Ok(BrushAllocation::new(beta))
}

/// Closed-form brush number of a Jaco graph together with a witness allocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrushReport {
    pub n: usize,
    pub prime_index: usize,
    /// `Σ_{j ≤ i} (d^+(v_j) − d^-(v_j))`
    pub sum_prefix: u64,
    /// `Σ_{j > i} max{0, (n − j) − d^-(v_j)}`
    pub sum_hope: u64,
    #[serde(rename = "br")]
    pub b_r: u64,
    pub allocation: BrushAllocation,
}

/// Brush number of `J_n(1)` with `i` its prime Jaconian vertex:
///
/// `b_r = Σ_{j=1..i} (d^+(v_j) − d^-(v_j)) + Σ_{j=i+1..n} max{0, (n−j) − d^-(v_j)}`
///
/// using degrees of the finite graph.
pub fn brush_number(g: &JacoGraph) -> Result<BrushReport> {
    let n = g.n();
    let prime = g.prime_jaconian();

    let mut sum_prefix = 0u64;
    for j in 1..=prime {
        let (out, inn) = (g.out_deg(j), g.in_deg(j));
        if out < inn {
            return Err(JacoError::Consistency(format!(
                "d^+(v_{j}) = {out} < d^-(v_{j}) = {inn} before the prime Jaconian vertex of J_{n}"
            )));
        }
        sum_prefix += (out - inn) as u64;
    }
    let sum_hope: u64 = (prime + 1..=n)
        .map(|j| (n - j).saturating_sub(g.in_deg(j)) as u64)
        .sum();
    let b_r = sum_prefix + sum_hope;

    let allocation = minimal_allocation(&g.to_digraph())?;
    if allocation.total() != b_r {
        return Err(JacoError::Consistency(format!(
            "allocation of J_{n} totals {} but the closed form gives {b_r}",
            allocation.total()
        )));
    }

    Ok(BrushReport {
        n,
        prime_index: prime,
        sum_prefix,
        sum_hope,
        b_r,
        allocation,
    })
}
