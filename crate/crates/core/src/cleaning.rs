//! Directed brush cleaning.
//!
//! All arcs start dirty. A vertex may fire once every in-arc is clean and it
//! holds at least one brush per dirty out-arc; firing sends one brush down
//! each dirty out-arc, cleaning it and handing the brush to the head. Brushes
//! beyond the dirty out-degree stay parked at the vertex for good.

use serde::{Deserialize, Serialize};

use crate::digraph::DiGraph;
use crate::error::{domain, Result};

/// Brushes initially placed on `v_1..v_nu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BrushAllocation(Vec<u64>);

impl BrushAllocation {
    pub fn new(beta: Vec<u64>) -> Self {
        BrushAllocation(beta)
    }

    pub fn zeros(nu: usize) -> Self {
        BrushAllocation(vec![0; nu])
    }

    /// `β(v) = d^+(v)` everywhere: enough for any acyclic digraph.
    pub fn saturating(g: &DiGraph) -> Self {
        BrushAllocation(g.out_degrees().into_iter().map(|d| d as u64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `β(v_i)`, 1-based.
    pub fn get(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [u64] {
        &mut self.0
    }
}

impl From<Vec<u64>> for BrushAllocation {
    fn from(beta: Vec<u64>) -> Self {
        BrushAllocation(beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Cleaned,
    Undoable,
}

/// One firing: the vertex, the brushes it held when it fired, and the arcs it cleaned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub vertex: usize,
    pub held: u64,
    pub cleaned: Vec<(usize, usize)>,
}

impl Step {
    /// Brushes left parked at the vertex after it fired.
    pub fn surplus(&self) -> u64 {
        self.held - self.cleaned.len() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleaningTrace {
    pub outcome: Outcome,
    pub steps: Vec<Step>,
    pub remaining_dirty: Vec<(usize, usize)>,
}

impl CleaningTrace {
    pub fn is_cleaned(&self) -> bool {
        self.outcome == Outcome::Cleaned
    }

    /// Vertices in firing order.
    pub fn cleaning_sequence(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }
}

/// Runs the process, always firing the lowest-indexed eligible vertex.
pub fn simulate(g: &DiGraph, alloc: &BrushAllocation) -> Result<CleaningTrace> {
    simulate_by(g, alloc, |_| 0)
}

/// Runs the process with a caller-chosen firing order: `choose` receives the
/// eligible vertices in ascending order and returns the position to fire.
pub fn simulate_by<F>(g: &DiGraph, alloc: &BrushAllocation, mut choose: F) -> Result<CleaningTrace>
where
    F: FnMut(&[usize]) -> usize,
{
    if alloc.len() != g.nu() {
        return Err(domain(format!(
            "allocation has {} entries but the graph has {} vertices",
            alloc.len(),
            g.nu()
        )));
    }
    let nu = g.nu();
    let mut held = alloc.as_slice().to_vec();
    let mut out_arcs = vec![Vec::new(); nu];
    let mut dirty_in = vec![0usize; nu];
    for (idx, &(t, h)) in g.arcs().iter().enumerate() {
        out_arcs[t - 1].push(idx);
        dirty_in[h - 1] += 1;
    }
    let mut dirty = vec![true; g.eps()];
    let mut dirty_count = g.eps();
    let mut fired = vec![false; nu];
    let mut steps = Vec::new();
    let mut eligible = Vec::with_capacity(nu);

    while dirty_count > 0 {
        eligible.clear();
        eligible.extend((0..nu).filter(|&v| {
            !fired[v]
                && dirty_in[v] == 0
                && held[v] >= out_arcs[v].iter().filter(|&&a| dirty[a]).count() as u64
        }));
        let v = match eligible.as_slice() {
            [] => break,
            [only] => *only,
            _ => {
                let ones: Vec<usize> = eligible.iter().map(|v| v + 1).collect();
                eligible[choose(&ones)]
            }
        };

        fired[v] = true;
        let at_fire = held[v];
        let mut cleaned = Vec::new();
        for &a in &out_arcs[v] {
            if dirty[a] {
                dirty[a] = false;
                dirty_count -= 1;
                let (t, h) = g.arcs()[a];
                held[h - 1] += 1;
                dirty_in[h - 1] -= 1;
                cleaned.push((t, h));
            }
        }
        held[v] -= cleaned.len() as u64;
        steps.push(Step {
            vertex: v + 1,
            held: at_fire,
            cleaned,
        });
    }

    let remaining_dirty: Vec<_> = g
        .arcs()
        .iter()
        .zip(&dirty)
        .filter(|(_, &d)| d)
        .map(|(&a, _)| a)
        .collect();
    let outcome = if remaining_dirty.is_empty() {
        Outcome::Cleaned
    } else {
        Outcome::Undoable
    };
    Ok(CleaningTrace {
        outcome,
        steps,
        remaining_dirty,
    })
}

/// Some finite allocation cleans `g` iff `g` has no directed cycle.
pub fn is_cleanable(g: &DiGraph) -> bool {
    g.is_acyclic()
}

pub fn verify_allocation(g: &DiGraph, alloc: &BrushAllocation) -> Result<bool> {
    Ok(simulate(g, alloc)?.is_cleaned())
}
