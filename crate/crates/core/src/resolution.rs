//! Crepant resolutions of the local models `a_1^{d_1} .. a_k^{d_k} = lambda x_1 .. x_s`.
//!
//! Two things live here:
//!
//! * the counting functions `F(d, s)` (components over `lambda = 0`) and
//!   `G(d, s)` (divisors centred on the deepest stratum), both through their
//!   mutual recursion and their binomial closed forms;
//! * a chart rewriting simulator for the blow-up procedure, which records the
//!   tree of charts and checks that the weight `(s, sum d)` strictly
//!   decreases along every edge.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{choose, ExactInt};

/// Memo tables for the mutual recursion
/// `F(d, s) = sum_i C(s, i) G(d, i)`, `G(d, s) = F(d - s, s)`, `G(d, 0) = 1`,
/// `F(r, s) = 0` for `r <= 0`.
///
/// One table per computation; not shared across threads.
#[derive(Debug, Default)]
pub struct FgTable {
    f: HashMap<(u32, u32), ExactInt>,
    g: HashMap<(u32, u32), ExactInt>,
}

impl FgTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn f(&mut self, d: i64, s: u32) -> ExactInt {
        if d <= 0 {
            return ExactInt::zero();
        }
        let key = (d as u32, s);
        if let Some(v) = self.f.get(&key) {
            return v.clone();
        }
        let mut total = ExactInt::zero();
        for i in 0..=s {
            let g = self.g(d as u32, i);
            if !g.is_zero() {
                total += choose(s as u64, i as i64) * g;
            }
        }
        self.f.insert(key, total.clone());
        total
    }

    /// `d >= 1` is assumed; see [`g_rec`] for the checked entry point.
    pub fn g(&mut self, d: u32, s: u32) -> ExactInt {
        if s == 0 {
            return ExactInt::one();
        }
        let key = (d, s);
        if let Some(v) = self.g.get(&key) {
            return v.clone();
        }
        let v = self.f(d as i64 - s as i64, s);
        self.g.insert(key, v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.f.len() + self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty() && self.g.is_empty()
    }
}

/// `F(d, s)` by the recursion, with a fresh memo table.
pub fn f_rec(d: i64, s: u32) -> ExactInt {
    FgTable::new().f(d, s)
}

/// `G(d, s)` by the recursion, with a fresh memo table.
pub fn g_rec(d: i64, s: u32) -> Result<ExactInt> {
    if d < 1 {
        return Err(Error::NonPositiveDegree(d));
    }
    Ok(FgTable::new().g(d as u32, s))
}

/// `G(d, s) = C(d - 1, s)`.
pub fn g_closed(d: i64, s: u32) -> Result<ExactInt> {
    if d < 1 {
        return Err(Error::NonPositiveDegree(d));
    }
    Ok(choose(d as u64 - 1, s as i64))
}

/// `F(d, s) = C(d + s - 1, s)`.
pub fn f_closed(d: i64, s: u32) -> Result<ExactInt> {
    if d < 1 {
        return Err(Error::NonPositiveDegree(d));
    }
    Ok(choose(d as u64 + s as u64 - 1, s as i64))
}

fn check_dbar(dbar: &[u32]) -> Result<()> {
    if dbar.is_empty() {
        return Err(Error::EmptyDegreeVector);
    }
    if dbar.contains(&0) {
        return Err(Error::NonPositiveDegree(0));
    }
    Ok(())
}

/// `F(dbar, s) = sum_i C(d_i + s - 1, s)`.
pub fn f_multi(dbar: &[u32], s: u32) -> Result<ExactInt> {
    check_dbar(dbar)?;
    dbar.iter().map(|&d| f_closed(d as i64, s)).sum()
}

/// `F(dbar, s) = sum_i F(d_i, s)` with each summand from the recursion.
pub fn f_multi_rec(dbar: &[u32], s: u32) -> Result<ExactInt> {
    check_dbar(dbar)?;
    let mut table = FgTable::new();
    Ok(dbar.iter().map(|&d| table.f(d as i64, s)).sum())
}

/// Local model `L_{dbar, s}`: `a_1^{d_1} .. a_k^{d_k} = lambda x_1 .. x_s`.
///
/// `dbar` is ordered; the blow-up step always acts on `a_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChartType {
    dbar: Vec<u32>,
    s: u32,
}

impl ChartType {
    pub fn new(dbar: Vec<u32>, s: u32) -> Result<Self> {
        if dbar.contains(&0) {
            return Err(Error::ZeroChartExponent(dbar));
        }
        Ok(ChartType { dbar, s })
    }

    pub fn dbar(&self) -> &[u32] {
        &self.dbar
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `(s, sum d)`, compared lexicographically.
    pub fn weight(&self) -> (u32, u64) {
        (self.s, self.dbar.iter().map(|&d| d as u64).sum())
    }

    /// Smooth: no `a` variables or no `x` variables.
    pub fn is_terminal(&self) -> bool {
        self.dbar.is_empty() || self.s == 0
    }
}

impl fmt::Display for ChartType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.dbar.iter().map(u32::to_string).collect();
        write!(f, "L_({}),{}", d.join(","), self.s)
    }
}

/// The blown-up stratum `{a_1 = x_1 = .. = x_m = 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUpCenter {
    pub x_count: u32,
}

impl fmt::Display for BlowUpCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a1")?;
        for i in 1..=self.x_count {
            write!(f, "=x{i}")?;
        }
        write!(f, "=0")
    }
}

/// Affine chart of a blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChartLabel {
    /// `a_1 != 0`
    A,
    /// `x_i != 0`
    X { i: u32 },
    /// `x_i != 0` for every `i` in `first..=last`; these charts are all of the same type.
    XRange { first: u32, last: u32 },
}

impl fmt::Display for ChartLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartLabel::A => write!(f, "a1!=0"),
            ChartLabel::X { i } => write!(f, "x{i}!=0"),
            ChartLabel::XRange { first, last } if first == last => write!(f, "x{first}!=0"),
            ChartLabel::XRange { first, last } => write!(f, "x{first}..x{last}!=0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartChild {
    pub center: BlowUpCenter,
    pub label: ChartLabel,
    pub chart: ChartType,
}

/// One step of the blow-up procedure on a non-terminal chart.
///
/// * `d_1 >= s`: blow up `{a_1 = x_1 = .. = x_s = 0}`; the chart `a_1 != 0`
///   is `L_{(d_1 - s, d_2, .., d_k), s}` and each `x_i != 0` is
///   `L_{(d_1, .., d_k, d_1 - s), s - 1}`.
/// * `d_1 < s`: blow up `{a_1 = x_1 = .. = x_{d_1} = 0}`; the chart `a_1 != 0`
///   is `L_{(d_2, .., d_k), s}` and each of the `d_1` charts `x_i != 0` is
///   `L_{dbar, s - 1}`.
///
/// Exponents that become zero are removed.
pub fn chart_children(chart: &ChartType) -> Result<Vec<ChartChild>> {
    if chart.is_terminal() {
        return Err(Error::TerminalChart(chart.to_string()));
    }
    let d1 = chart.dbar[0];
    let s = chart.s;
    let rest = &chart.dbar[1..];
    let (center, a_chart, x_chart) = if d1 >= s {
        let mut a_dbar = Vec::with_capacity(chart.dbar.len());
        if d1 > s {
            a_dbar.push(d1 - s);
        }
        a_dbar.extend_from_slice(rest);
        let mut x_dbar = chart.dbar.clone();
        if d1 > s {
            x_dbar.push(d1 - s);
        }
        (
            BlowUpCenter { x_count: s },
            ChartType { dbar: a_dbar, s },
            ChartType {
                dbar: x_dbar,
                s: s - 1,
            },
        )
    } else {
        (
            BlowUpCenter { x_count: d1 },
            ChartType {
                dbar: rest.to_vec(),
                s,
            },
            ChartType {
                dbar: chart.dbar.clone(),
                s: s - 1,
            },
        )
    };
    let mut out = Vec::with_capacity(center.x_count as usize + 1);
    out.push(ChartChild {
        center,
        label: ChartLabel::A,
        chart: a_chart,
    });
    for i in 1..=center.x_count {
        out.push(ChartChild {
            center,
            label: ChartLabel::X { i },
            chart: x_chart.clone(),
        });
    }
    Ok(out)
}

/// Edge of a [`ResolutionTrace`]. `multiplicity` counts the identical
/// sibling charts folded into this edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEdge {
    pub label: ChartLabel,
    pub multiplicity: u32,
    pub child: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceNode {
    pub chart: ChartType,
    pub weight: (u32, u64),
    pub center: Option<BlowUpCenter>,
    pub edges: Vec<TraceEdge>,
}

/// The tree of charts produced by running the blow-up procedure to the end.
/// Node 0 is the root. The `x_i != 0` charts of one blow-up are identical and
/// are stored once, with their count on the edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTrace {
    pub nodes: Vec<TraceNode>,
}

/// Runs the procedure from `chart` until every leaf is smooth.
/// Fails once more than `node_limit` nodes have been created.
pub fn resolution_trace(chart: &ChartType, node_limit: usize) -> Result<ResolutionTrace> {
    let mut nodes = vec![TraceNode {
        chart: chart.clone(),
        weight: chart.weight(),
        center: None,
        edges: Vec::new(),
    }];
    if nodes.len() > node_limit {
        return Err(Error::NodeLimitExceeded(node_limit));
    }
    let mut pending = vec![0usize];
    while let Some(id) = pending.pop() {
        if nodes[id].chart.is_terminal() {
            continue;
        }
        let children = chart_children(&nodes[id].chart)?;
        let center = children[0].center;
        let x_count = center.x_count;
        let mut edges = Vec::with_capacity(2);
        let groups = [
            (ChartLabel::A, 1u32, children[0].chart.clone()),
            (
                ChartLabel::XRange {
                    first: 1,
                    last: x_count,
                },
                x_count,
                children[1].chart.clone(),
            ),
        ];
        for (label, multiplicity, child_chart) in groups {
            if nodes.len() >= node_limit {
                return Err(Error::NodeLimitExceeded(node_limit));
            }
            let child = nodes.len();
            nodes.push(TraceNode {
                weight: child_chart.weight(),
                chart: child_chart,
                center: None,
                edges: Vec::new(),
            });
            pending.push(child);
            edges.push(TraceEdge {
                label,
                multiplicity,
                child,
            });
        }
        nodes[id].center = Some(center);
        nodes[id].edges = edges;
    }
    Ok(ResolutionTrace { nodes })
}

impl ResolutionTrace {
    pub fn root(&self) -> &TraceNode {
        &self.nodes[0]
    }

    /// Stored nodes (sibling `x` charts folded).
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of charts in the unfolded tree.
    pub fn expanded_chart_count(&self) -> ExactInt {
        let mut counts = vec![ExactInt::one(); self.nodes.len()];
        // children always have larger ids than their parent
        for id in (0..self.nodes.len()).rev() {
            let mut total = ExactInt::one();
            for e in &self.nodes[id].edges {
                total += ExactInt::from(e.multiplicity) * &counts[e.child];
            }
            counts[id] = total;
        }
        counts.swap_remove(0)
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TraceNode> {
        self.nodes.iter().filter(|n| n.edges.is_empty())
    }

    /// Every edge goes to a strictly smaller weight.
    pub fn weights_strictly_decrease(&self) -> bool {
        self.nodes.iter().all(|n| {
            n.edges
                .iter()
                .all(|e| self.nodes[e.child].weight < n.weight)
        })
    }

    pub fn all_leaves_terminal(&self) -> bool {
        self.leaves().all(|n| n.chart.is_terminal())
    }

    /// Edges on the path that always follows the `a_1 != 0` chart.
    pub fn a_chain_length(&self) -> usize {
        let mut len = 0;
        let mut id = 0;
        while let Some(e) = self.nodes[id]
            .edges
            .iter()
            .find(|e| e.label == ChartLabel::A)
        {
            len += 1;
            id = e.child;
        }
        len
    }

    /// Longest root-to-leaf path, in edges.
    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.nodes.len()];
        for id in (0..self.nodes.len()).rev() {
            depth[id] = self.nodes[id]
                .edges
                .iter()
                .map(|e| depth[e.child] + 1)
                .max()
                .unwrap_or(0);
        }
        depth[0]
    }

    /// Graphviz rendering; node labels show the chart and its weight,
    /// edge labels the local chart.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph resolution {\n  node [shape=box];\n");
        for (id, n) in self.nodes.iter().enumerate() {
            let center = n
                .center
                .map(|c| format!("\\nblow up {c}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "  n{id} [label=\"{} w=({},{}){center}\"];\n",
                n.chart, n.weight.0, n.weight.1
            ));
        }
        for (id, n) in self.nodes.iter().enumerate() {
            for e in &n.edges {
                let mult = if e.multiplicity > 1 {
                    format!(" x{}", e.multiplicity)
                } else {
                    String::new()
                };
                out.push_str(&format!(
                    "  n{id} -> n{} [label=\"{}{mult}\"];\n",
                    e.child, e.label
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}
