//! Text renderings (Markdown, CSV, JSON) of every result type.
//!
//! Output is byte-stable: fixed column order, struct-order JSON keys, `\n`
//! line endings, no locale-dependent formatting.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::brush::BrushReport;
use crate::cleaning::{BrushAllocation, CleaningTrace};
use crate::error::{domain, JacoError, Result};
use crate::experiments::{HopeBoundRow, LinkingRow, TableRow};
use crate::jaco::JacoGraph;
use crate::oracle::OrientationCensus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Md,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = JacoError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(domain(format!(
                "unknown format {other:?} (expected md, csv or json)"
            ))),
        }
    }
}

/// A header row plus string cells, rendered as Markdown or CSV.
#[derive(Debug, Clone, Default)]
pub struct TextTable {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl TextTable {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        TextTable {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows
            .push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let line = |s: &mut String, cells: &[String]| {
            s.push('|');
            for c in cells {
                let _ = write!(s, " {c} |");
            }
            s.push('\n');
        };
        line(&mut s, &self.headers);
        s.push('|');
        for _ in &self.headers {
            s.push_str("---|");
        }
        s.push('\n');
        for row in &self.rows {
            line(&mut s, row);
        }
        s
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| JacoError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    fn render(&self, fmt: Format) -> Result<String> {
        match fmt {
            Format::Csv => self.to_csv(),
            _ => Ok(self.to_markdown()),
        }
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

fn arc_label((a, b): (usize, usize)) -> String {
    format!("{a}->{b}")
}

fn arc_list(arcs: &[(usize, usize)]) -> String {
    if arcs.is_empty() {
        "-".to_string()
    } else {
        arcs.iter()
            .map(|&a| arc_label(a))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn render_graph(g: &JacoGraph, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => {
            let mut s = crate::io::jaco_to_json(g)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut t = TextTable::new(["tail", "head"]);
            for &(a, b) in g.arcs() {
                t.push([a, b]);
            }
            t.to_csv()
        }
        Format::Md => {
            let mut t =
                TextTable::new(["i", "d^-(v_i)", "d^+(v_i)", "d^+(v_i) unbounded", "d(v_i)"]);
            for i in 1..=g.n() {
                t.push([
                    i,
                    g.in_deg(i),
                    g.out_deg(i),
                    g.inf_out_deg(i),
                    g.in_deg(i) + g.out_deg(i),
                ]);
            }
            let mut s = format!("# J_{}(1): {} vertices, {} arcs\n\n", g.n(), g.n(), g.eps());
            s += &t.to_markdown();
            let _ = writeln!(s, "\narcs: {}", arc_list(g.arcs()));
            Ok(s)
        }
    }
}

fn join_allocation(a: &BrushAllocation) -> String {
    a.as_slice()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_brush_report(r: &BrushReport, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => {
            let mut t = TextTable::new([
                "n",
                "prime_index",
                "sum_prefix",
                "sum_hope",
                "br",
                "allocation",
            ]);
            t.push([
                r.n.to_string(),
                r.prime_index.to_string(),
                r.sum_prefix.to_string(),
                r.sum_hope.to_string(),
                r.b_r.to_string(),
                join_allocation(&r.allocation),
            ]);
            t.to_csv()
        }
        Format::Md => {
            let mut t = TextTable::new(["quantity", "value"]);
            t.push(["n".to_string(), r.n.to_string()]);
            t.push([
                "prime Jaconian vertex".to_string(),
                format!("v_{}", r.prime_index),
            ]);
            t.push(["prefix sum".to_string(), r.sum_prefix.to_string()]);
            t.push(["Hope sum".to_string(), r.sum_hope.to_string()]);
            t.push(["b_r".to_string(), r.b_r.to_string()]);
            t.push(["allocation".to_string(), join_allocation(&r.allocation)]);
            Ok(format!(
                "# b_r(J_{}(1)) = {}\n\n{}",
                r.n,
                r.b_r,
                t.to_markdown()
            ))
        }
    }
}

pub fn render_allocation(a: &BrushAllocation, fmt: Format) -> Result<String> {
    if fmt == Format::Json {
        return json(a);
    }
    let mut t = TextTable::new(["vertex", "beta"]);
    for (k, b) in a.as_slice().iter().enumerate() {
        t.push([k + 1, *b as usize]);
    }
    match fmt {
        Format::Csv => t.to_csv(),
        _ => Ok(format!("{}\ntotal: {}\n", t.to_markdown(), a.total())),
    }
}

pub fn render_trace(trace: &CleaningTrace, fmt: Format) -> Result<String> {
    if fmt == Format::Json {
        return json(trace);
    }
    let mut t = TextTable::new(["step", "vertex", "held", "cleaned"]);
    for (k, s) in trace.steps.iter().enumerate() {
        t.push([
            (k + 1).to_string(),
            s.vertex.to_string(),
            s.held.to_string(),
            arc_list(&s.cleaned),
        ]);
    }
    match fmt {
        Format::Csv => t.to_csv(),
        _ => {
            let outcome = if trace.is_cleaned() {
                "cleaned"
            } else {
                "undoable"
            };
            Ok(format!(
                "outcome: {outcome}\n\n{}\nremaining dirty: {}\n",
                t.to_markdown(),
                arc_list(&trace.remaining_dirty)
            ))
        }
    }
}

fn census_table(c: &OrientationCensus) -> TextTable {
    let mut headers = vec!["mask".to_string()];
    headers.extend((1..=c.edge_order.len()).map(|k| format!("e_{k}-dir")));
    headers.push("cost".to_string());
    let mut t = TextTable::new(headers);
    for (mask, cost) in c.entries() {
        let mut row = vec![mask.to_string()];
        row.extend(
            c.edge_order
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| arc_label(if mask >> k & 1 == 0 { (a, b) } else { (b, a) })),
        );
        row.push(cost.to_string());
        t.rows.push(row);
    }
    t
}

pub fn render_census(c: &OrientationCensus, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(c),
        Format::Csv => census_table(c).to_csv(),
        Format::Md => {
            let edges: Vec<_> = c
                .edge_order
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| format!("e_{}={{{a},{b}}}", k + 1))
                .collect();
            Ok(format!(
                "edges: {}\norientations: {}\nminimum: {}\nundoable: {}\n\n{}",
                edges.join(" "),
                c.len(),
                c.minimum,
                c.undoable_count,
                census_table(c).to_markdown()
            ))
        }
    }
}

/// Result of an exhaustive brush-number search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub nu: usize,
    pub eps: usize,
    pub orientations: u64,
    pub br: u64,
}

pub fn render_oracle(o: &OracleSummary, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(o),
        Format::Csv => {
            let mut t = TextTable::new(["nu", "eps", "orientations", "br"]);
            t.push([o.nu as u64, o.eps as u64, o.orientations, o.br]);
            t.to_csv()
        }
        Format::Md => Ok(format!(
            "b_r = {} (minimum over {} orientations of {} edges on {} vertices)\n",
            o.br, o.orientations, o.eps, o.nu
        )),
    }
}

pub fn render_table1(rows: &[TableRow], fmt: Format) -> Result<String> {
    if fmt == Format::Json {
        return json(rows);
    }
    let mut t = TextTable::new(["i", "d^-(v_i)", "d^+(v_i)", "v_j^*", "b_r(J_i(1))"]);
    for r in rows {
        t.push([
            r.i.to_string(),
            r.d_minus.to_string(),
            r.d_plus_inf.to_string(),
            format!("v_{}", r.prime_vertex),
            r.br.to_string(),
        ]);
    }
    t.render(fmt)
}

pub fn render_hope(rows: &[HopeBoundRow], fmt: Format) -> Result<String> {
    if fmt == Format::Json {
        return json(rows);
    }
    let mut t = TextTable::new([
        "n",
        "prime_index",
        "br_jaco",
        "hope_size",
        "br_hope",
        "bound_holds",
        "linking_edges",
    ]);
    for r in rows {
        t.push([
            r.n.to_string(),
            r.prime_index.to_string(),
            r.br_jaco.to_string(),
            r.hope_size.to_string(),
            r.br_hope.to_string(),
            r.bound_holds.to_string(),
            r.linking_edges.to_string(),
        ]);
    }
    t.render(fmt)
}

pub fn render_linking(rows: &[LinkingRow], fmt: Format) -> Result<String> {
    if fmt == Format::Json {
        return json(rows);
    }
    let mut t = TextTable::new([
        "n",
        "prime_index",
        "eps",
        "prefix_arcs",
        "hope_arcs",
        "linking_edges",
        "br",
    ]);
    for r in rows {
        t.push([
            r.n as u64,
            r.prime_index as u64,
            r.eps as u64,
            r.prefix_arcs as u64,
            r.hope_arcs as u64,
            r.linking_edges as u64,
            r.br,
        ]);
    }
    t.render(fmt)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markdown_and_csv_tables() {
        let mut t = TextTable::new(["a", "b"]);
        t.push([1, 2]);
        assert_eq!(t.to_markdown(), "| a | b |\n|---|---|\n| 1 | 2 |\n");
        assert_eq!(t.to_csv().unwrap(), "a,b\n1,2\n");
    }

    #[test]
    fn parses_formats() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn census_csv_columns() {
        let c = crate::oracle::census(&crate::digraph::UndirectedGraph::path(3), 24).unwrap();
        let csv = render_census(&c, Format::Csv).unwrap();
        assert_eq!(csv.lines().next().unwrap(), "mask,e_1-dir,e_2-dir,cost");
        assert_eq!(csv.lines().nth(2).unwrap(), "1,2->1,2->3,2");
    }
}
