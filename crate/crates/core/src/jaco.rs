//! Finite Jaco graphs `J_n(1)`.
//!
//! Arc rule: `(v_i, v_j)` is an arc iff `i < j <= 2i - d^-(v_i)`. Every
//! in-arc of `v_i` comes from a lower index, so in-degrees can be fixed in a
//! single left-to-right sweep, and both neighbourhoods of each vertex are
//! contiguous index ranges.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::digraph::{DiGraph, UndirectedGraph};
use crate::error::{domain, JacoError, Result};

/// In-degrees of `v_1..v_m` in the Jaco prefix on `m` vertices.
///
/// Each vertex adds one to the in-degree of every vertex in its contiguous
/// out-range, accumulated through a difference array.
fn in_degree_prefix(m: usize) -> Vec<usize> {
    let mut in_deg = Vec::with_capacity(m);
    let mut delta = vec![0isize; m + 2];
    let mut running = 0isize;
    for i in 1..=m {
        running += delta[i];
        in_deg.push(running as usize);
        let last = m.min(2 * i - running as usize);
        if last > i {
            delta[i + 1] += 1;
            delta[last + 1] -= 1;
        }
    }
    in_deg
}

/// The finite Jaco graph `J_n(1)` with its degree tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    in_deg: Vec<usize>,
    out_deg: Vec<usize>,
    inf_out_deg: Vec<usize>,
}

/// Builds `J_n(1)`.
///
/// Out-degrees in the infinite graph come from the `2n`-vertex prefix, which
/// is enough because every out-neighbour of `v_i` has index at most `2i`.
pub fn build_jaco(n: usize) -> Result<JacoGraph> {
    if n < 1 {
        return Err(domain("vertex count must be ≥ 1"));
    }
    let ext = in_degree_prefix(2 * n);
    let in_deg = ext[..n].to_vec();

    let mut out_deg = Vec::with_capacity(n);
    let mut inf_out_deg = Vec::with_capacity(n);
    let mut arcs = Vec::new();
    for (idx, &d_in) in in_deg.iter().enumerate() {
        let i = idx + 1;
        let reach = 2 * i - d_in;
        inf_out_deg.push(reach.min(2 * n) - i);
        let last = reach.min(n);
        out_deg.push(last - i);
        arcs.extend((i + 1..=last).map(|j| (i, j)));
    }

    Ok(JacoGraph {
        n,
        arcs,
        in_deg,
        out_deg,
        inf_out_deg,
    })
}

impl JacoGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs `(i, j)` with `i < j`, sorted lexicographically.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn eps(&self) -> usize {
        self.arcs.len()
    }

    fn check(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n {
            Err(domain(format!(
                "vertex index {i} out of range 1..={}",
                self.n
            )))
        } else {
            Ok(i - 1)
        }
    }

    /// `d^-(v_i)`. Panics if `i` is not in `1..=n`.
    pub fn in_deg(&self, i: usize) -> usize {
        self.in_deg[i - 1]
    }

    /// `d^+(v_i)` within `J_n(1)`. Panics if `i` is not in `1..=n`.
    pub fn out_deg(&self, i: usize) -> usize {
        self.out_deg[i - 1]
    }

    /// `d^+(v_i)` in any sufficiently large Jaco graph.
    pub fn inf_out_deg(&self, i: usize) -> usize {
        self.inf_out_deg[i - 1]
    }

    /// In-degree table for `v_1..v_n`.
    pub fn in_degrees(&self) -> &[usize] {
        &self.in_deg
    }

    /// Out-degree table (within `J_n(1)`) for `v_1..v_n`.
    pub fn out_degrees(&self) -> &[usize] {
        &self.out_deg
    }

    /// Out-degree table in the infinite graph for `v_1..v_n`.
    pub fn inf_out_degrees(&self) -> &[usize] {
        &self.inf_out_deg
    }

    /// Degree of `v_i` in the finite graph `J_n(1)`.
    pub fn finite_degree(&self, i: usize) -> Result<usize> {
        let k = self.check(i)?;
        Ok(self.in_deg[k] + self.out_deg[k])
    }

    /// Finite degrees of `v_1..v_n`.
    pub fn degrees(&self) -> Vec<usize> {
        self.in_deg
            .iter()
            .zip(&self.out_deg)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Out-neighbours of `v_i`: always `i+1 ..= i + d^+(v_i)`.
    pub fn out_range(&self, i: usize) -> Result<RangeInclusive<usize>> {
        let k = self.check(i)?;
        Ok(i + 1..=i + self.out_deg[k])
    }

    /// In-neighbours of `v_i`: always `i - d^-(v_i) ..= i - 1`.
    pub fn in_range(&self, i: usize) -> Result<RangeInclusive<usize>> {
        let k = self.check(i)?;
        Ok(i - self.in_deg[k]..=i - 1)
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        i >= 1 && i < j && j <= self.n && j <= i + self.out_deg[i - 1]
    }

    /// All vertices of maximum finite degree, ascending.
    pub fn jaconian_set(&self) -> Vec<usize> {
        let degrees = self.degrees();
        let max = degrees.iter().copied().max().unwrap_or(0);
        degrees
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == max)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Lowest-indexed vertex of maximum degree.
    pub fn prime_jaconian(&self) -> usize {
        let degrees = self.degrees();
        let max = degrees.iter().copied().max().unwrap_or(0);
        degrees.iter().position(|&d| d == max).map_or(1, |k| k + 1)
    }

    /// The subgraph induced on the vertices after the prime Jaconian vertex,
    /// which must be complete.
    pub fn hope_subgraph(&self) -> Result<HopeView> {
        let prime = self.prime_jaconian();
        let vertices = prime + 1..=self.n;
        let arcs: Vec<_> = self
            .arcs
            .iter()
            .copied()
            .filter(|&(a, _)| a > prime)
            .collect();
        let m = self.n - prime;
        let complete = arcs.len() == m * m.saturating_sub(1) / 2
            && vertices
                .clone()
                .all(|a| (a + 1..=self.n).all(|b| self.has_arc(a, b)));
        if !complete {
            return Err(JacoError::Consistency(format!(
                "subgraph on v_{}..v_{} of J_{} is not complete",
                prime + 1,
                self.n,
                self.n
            )));
        }
        Ok(HopeView {
            prime_index: prime,
            vertices,
            arcs,
        })
    }

    /// The defined orientation as a plain digraph.
    pub fn to_digraph(&self) -> DiGraph {
        DiGraph::new(self.n, self.arcs.clone()).expect("Jaco arcs are simple")
    }

    /// The underlying undirected graph; edge `e_k` is the k-th arc, so mask 0
    /// of the orientation enumeration is the defined orientation.
    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.n, self.arcs.iter().copied()).expect("Jaco arcs are simple")
    }
}

/// The complete subgraph following the prime Jaconian vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopeView {
    pub prime_index: usize,
    pub vertices: RangeInclusive<usize>,
    pub arcs: Vec<(usize, usize)>,
}

impl HopeView {
    pub fn size(&self) -> usize {
        self.vertices.clone().count()
    }
}
