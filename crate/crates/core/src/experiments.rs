//! Data tables over families of Jaco graphs: the degree/brush table, the
//! Hope-subgraph lower bound, linking-edge counts, and union additivity.
//!
//! These only report what they compute. A failed bound is a row with
//! `bound_holds = false`, never an error.

use rayon::prelude::*;
use serde::Serialize;

use crate::brush::brush_number;
use crate::digraph::UndirectedGraph;
use crate::error::Result;
use crate::jaco::{build_jaco, JacoGraph};
use crate::oracle::{brute_force_brush_number, complete_graph_brush_number};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub i: usize,
    /// `d^-(v_i)`
    pub d_minus: usize,
    /// `d^+(v_i)` in a graph large enough not to truncate it
    pub d_plus_inf: usize,
    /// Prime Jaconian vertex of `J_i(1)`
    pub prime_vertex: usize,
    /// `b_r(J_i(1))`
    pub br: u64,
}

/// One row per `i = 1..=max_n`.
pub fn table1(max_n: usize) -> Result<Vec<TableRow>> {
    let big = build_jaco(2 * max_n.max(1))?;
    (1..=max_n)
        .into_par_iter()
        .map(|i| {
            let g = build_jaco(i)?;
            Ok(TableRow {
                i,
                d_minus: big.in_deg(i),
                d_plus_inf: big.inf_out_deg(i),
                prime_vertex: g.prime_jaconian(),
                br: brush_number(&g)?.b_r,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopeBoundRow {
    pub n: usize,
    pub prime_index: usize,
    pub br_jaco: u64,
    pub hope_size: usize,
    /// `b_r(K_{n-i}) = ⌊(n−i)²/4⌋`
    pub br_hope: u64,
    pub bound_holds: bool,
    pub linking_edges: usize,
}

fn hope_row(n: usize) -> Result<HopeBoundRow> {
    let g = build_jaco(n)?;
    let report = brush_number(&g)?;
    let hope_size = n - report.prime_index;
    let br_hope = if hope_size == 0 {
        0
    } else {
        complete_graph_brush_number(hope_size)?
    };
    Ok(HopeBoundRow {
        n,
        prime_index: report.prime_index,
        br_jaco: report.b_r,
        hope_size,
        br_hope,
        bound_holds: report.b_r >= br_hope,
        linking_edges: count_linking(&g, report.prime_index),
    })
}

/// Compares `b_r(J_n(1))` with the brush number of its Hope subgraph for `n = 1..=max_n`.
pub fn hope_bound_experiment(max_n: usize) -> Result<Vec<HopeBoundRow>> {
    (1..=max_n).into_par_iter().map(hope_row).collect()
}

fn count_linking(g: &JacoGraph, prime: usize) -> usize {
    g.arcs()
        .iter()
        .filter(|&&(a, b)| a <= prime && prime < b)
        .count()
}

/// Arcs of `J_n(1)` from `{v_1..v_i}` into the Hope subgraph, `i` the prime
/// Jaconian index.
pub fn linking_edges(n: usize) -> Result<usize> {
    let g = build_jaco(n)?;
    Ok(count_linking(&g, g.prime_jaconian()))
}

/// How the arcs of `J_n(1)` split across the cut at the prime Jaconian vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingRow {
    pub n: usize,
    pub prime_index: usize,
    pub eps: usize,
    pub prefix_arcs: usize,
    pub hope_arcs: usize,
    pub linking_edges: usize,
    pub br: u64,
}

pub fn linking_experiment(max_n: usize) -> Result<Vec<LinkingRow>> {
    (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let g = build_jaco(n)?;
            let report = brush_number(&g)?;
            let i = report.prime_index;
            Ok(LinkingRow {
                n,
                prime_index: i,
                eps: g.eps(),
                prefix_arcs: g.arcs().iter().filter(|a| a.1 <= i).count(),
                hope_arcs: g.arcs().iter().filter(|a| a.0 > i).count(),
                linking_edges: count_linking(&g, i),
                br: report.b_r,
            })
        })
        .collect()
}

/// True iff the brute-force brush number of the disjoint union equals the sum
/// over the components.
pub fn union_additivity_check(components: &[UndirectedGraph], cap_eps: usize) -> Result<bool> {
    let union = UndirectedGraph::disjoint_union(components);
    let whole = brute_force_brush_number(&union, cap_eps)?;
    let mut parts = 0;
    for g in components {
        parts += brute_force_brush_number(g, cap_eps)?;
    }
    Ok(whole == parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_CAP_EPS;

    #[test]
    fn table_rows() {
        let rows = table1(16).unwrap();
        assert_eq!(rows.len(), 16);
        assert_eq!(
            rows[0],
            TableRow {
                i: 1,
                d_minus: 0,
                d_plus_inf: 1,
                prime_vertex: 1,
                br: 0
            }
        );
        assert_eq!(
            rows[9],
            TableRow {
                i: 10,
                d_minus: 4,
                d_plus_inf: 6,
                prime_vertex: 6,
                br: 7
            }
        );
        assert_eq!(
            rows[12],
            TableRow {
                i: 13,
                d_minus: 5,
                d_plus_inf: 8,
                prime_vertex: 8,
                br: 11
            }
        );
    }

    #[test]
    fn hope_rows() {
        let rows = hope_bound_experiment(16).unwrap();
        let r5 = &rows[4];
        assert_eq!((r5.br_jaco, r5.br_hope, r5.bound_holds), (2, 1, true));
        let r16 = &rows[15];
        assert_eq!((r16.br_jaco, r16.br_hope, r16.bound_holds), (16, 9, true));
        let r1 = &rows[0];
        assert_eq!((r1.hope_size, r1.br_hope, r1.bound_holds), (0, 0, true));
    }

    #[test]
    fn linking_counts() {
        assert_eq!(linking_edges(5).unwrap(), 2);
        assert_eq!(linking_edges(1).unwrap(), 0);
        let g = build_jaco(9).unwrap();
        let within = |lo: usize, hi: usize| {
            g.arcs()
                .iter()
                .filter(|&&(a, b)| lo <= a && b <= hi)
                .count()
        };
        assert_eq!(
            linking_edges(9).unwrap(),
            g.eps() - within(1, 5) - within(6, 9)
        );
    }

    #[test]
    fn additivity_examples() {
        let cap = DEFAULT_CAP_EPS;
        let j = |n| build_jaco(n).unwrap().underlying();
        assert!(union_additivity_check(&[j(2), j(2)], cap).unwrap());
        assert!(union_additivity_check(&[j(1)], cap).unwrap());
        assert!(union_additivity_check(&[j(4), UndirectedGraph::complete(3)], cap).unwrap());
        assert!(union_additivity_check(&[j(5), j(5), j(5), j(5), j(5)], 20).is_err());
    }
}
