//! Exhaustive orientation search.
//!
//! Every one of the `2^ε` orientations of a small undirected graph is costed
//! and the brush number is read off as the least finite cost. Nothing here
//! depends on the Jaco closed form, so it serves as ground truth for it.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::brush::{Cost, CostScratch};
use crate::digraph::UndirectedGraph;
use crate::error::{domain, JacoError, Result};

/// Default largest edge count the oracle will enumerate (about 16.7M orientations).
pub const DEFAULT_CAP_EPS: usize = 24;

/// Masks are `u64`, so this is a hard ceiling whatever the configured cap.
const MASK_BITS: usize = 63;

fn check_cap(g: &UndirectedGraph, cap: usize) -> Result<()> {
    let eps = g.eps();
    if eps > cap || eps > MASK_BITS {
        return Err(JacoError::CapExceeded {
            eps,
            cap: cap.min(MASK_BITS),
        });
    }
    Ok(())
}

fn mask_cost(
    g: &UndirectedGraph,
    mask: u64,
    scratch: &mut CostScratch,
    arcs: &mut Vec<(usize, usize)>,
) -> Cost {
    arcs.clear();
    arcs.extend(g.edges().iter().enumerate().map(
        |(k, &(a, b))| {
            if mask >> k & 1 == 0 {
                (a, b)
            } else {
                (b, a)
            }
        },
    ));
    scratch.cost(g.nu(), arcs)
}

/// Costs of every orientation, indexed by mask.
///
/// Bit `k` of a mask is clear when `e_{k+1}` points from its lower to its
/// higher endpoint, so entry 0 of a Jaco graph's census is its defined
/// orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationCensus {
    pub edge_order: Vec<(usize, usize)>,
    costs: Vec<Cost>,
    pub minimum: u64,
    pub undoable_count: usize,
}

impl OrientationCensus {
    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn cost(&self, mask: u64) -> Cost {
        self.costs[mask as usize]
    }

    /// `(mask, cost)` pairs in mask order.
    pub fn entries(&self) -> impl Iterator<Item = (u64, Cost)> + '_ {
        self.costs.iter().enumerate().map(|(m, &c)| (m as u64, c))
    }

    /// Masks attaining the minimum.
    pub fn optimal_masks(&self) -> Vec<u64> {
        self.entries()
            .filter(|&(_, c)| c == Cost::Finite(self.minimum))
            .map(|(m, _)| m)
            .collect()
    }

    /// Costs listed with `e_1` varying slowest and `e_ε` fastest, the usual
    /// layout of a hand-written orientation table.
    pub fn in_row_order(&self) -> Vec<Cost> {
        let eps = self.edge_order.len();
        (0..self.costs.len() as u64)
            .map(|row| self.cost(row_mask(row, eps)))
            .collect()
    }
}

/// Mask of the orientation at position `row` of a table in which `e_1`
/// varies slowest: the low `eps` bits of `row`, reversed.
pub fn row_mask(row: u64, eps: usize) -> u64 {
    if eps == 0 {
        0
    } else {
        row.reverse_bits() >> (64 - eps)
    }
}

impl Serialize for OrientationCensus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            mask: u64,
            cost: Cost,
        }
        let entries: Vec<Entry> = self
            .entries()
            .map(|(mask, cost)| Entry { mask, cost })
            .collect();
        let mut st = s.serialize_struct("OrientationCensus", 4)?;
        st.serialize_field("edges", &self.edge_order)?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("min", &self.minimum)?;
        st.serialize_field("undoable_count", &self.undoable_count)?;
        st.end()
    }
}

/// Costs all `2^ε` orientations. Work is split across threads but the
/// result is always in mask order.
pub fn census(g: &UndirectedGraph, cap_eps: usize) -> Result<OrientationCensus> {
    check_cap(g, cap_eps)?;
    let total = 1u64 << g.eps();
    let costs: Vec<Cost> = (0..total)
        .into_par_iter()
        .map_init(
            || (CostScratch::default(), Vec::new()),
            |(scratch, arcs), mask| mask_cost(g, mask, scratch, arcs),
        )
        .collect();
    let undoable_count = costs.iter().filter(|c| c.is_undoable()).count();
    let minimum = costs
        .iter()
        .filter_map(|c| c.finite())
        .min()
        .ok_or_else(|| JacoError::Consistency("no acyclic orientation found".into()))?;
    Ok(OrientationCensus {
        edge_order: g.edges().to_vec(),
        costs,
        minimum,
        undoable_count,
    })
}

/// Brush number of an undirected graph: least cost over all orientations.
/// Same result as `census(g, cap).minimum` without storing the table.
pub fn brute_force_brush_number(g: &UndirectedGraph, cap_eps: usize) -> Result<u64> {
    check_cap(g, cap_eps)?;
    let total = 1u64 << g.eps();
    (0..total)
        .into_par_iter()
        .map_init(
            || (CostScratch::default(), Vec::new()),
            |(scratch, arcs), mask| mask_cost(g, mask, scratch, arcs).finite(),
        )
        .flatten()
        .min()
        .ok_or_else(|| JacoError::Consistency("no acyclic orientation found".into()))
}

/// `b_r(K_m) = ⌊m²/4⌋`.
pub fn complete_graph_brush_number(m: usize) -> Result<u64> {
    if m < 1 {
        return Err(domain("complete graph needs at least one vertex"));
    }
    let m = m as u64;
    Ok(m * m / 4)
}
