//! Interchange formats: graph JSON, trace JSON, solve reports and DOT.
//!
//! Every top-level JSON document carries `"schema": 1`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::engine::{run, Label, LabelState, Mode, Placement, Strategy, Trace};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::solver::{SolveReport, StepsReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    pub n: usize,
    pub edges: Vec<EdgeJson>,
}

impl GraphJson {
    pub fn from_graph(g: &SignedGraph) -> Self {
        Self {
            schema: None,
            n: g.n(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeJson { u: e.u, v: e.v, sign: e.sign.as_i64() })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<SignedGraph> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Sign::from_i64(e.sign)
                    .map(|s| (e.u, e.v, s))
                    .ok_or_else(|| Error::Parse(format!("edge sign must be 1 or -1, got {}", e.sign)))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedGraph::new(self.n, edges)
    }
}

pub fn graph_to_json(g: &SignedGraph) -> String {
    let doc = GraphJson { schema: Some(SCHEMA_VERSION), ..GraphJson::from_graph(g) };
    serde_json::to_string(&doc).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<SignedGraph> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    pub graph: GraphJson,
    pub mode: Mode,
    pub placements: Vec<Placement>,
    pub snapshots: Vec<Vec<String>>,
    pub confused: Vec<usize>,
    #[serde(default)]
    pub complete: bool,
}

impl TraceJson {
    pub fn from_trace(t: &Trace) -> Self {
        Self {
            schema: Some(SCHEMA_VERSION),
            graph: GraphJson::from_graph(&t.graph),
            mode: t.strategy.mode,
            placements: t.strategy.placements.clone(),
            snapshots: t
                .snapshots
                .iter()
                .map(|s| s.labels().map(|l| l.symbol().to_string()).collect())
                .collect(),
            confused: t.confused(),
            complete: t.is_complete(),
        }
    }

    /// Rebuilds the trace by replaying the placements and checks that the
    /// recorded snapshots agree with the replay.
    pub fn replay(&self) -> Result<Trace> {
        let g = self.graph.to_graph()?;
        let strategy = Strategy { mode: self.mode, placements: self.placements.clone() };
        let trace = run(&g, &strategy)?;
        let recorded = self
            .snapshots
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| Label::parse(s).ok_or_else(|| Error::Parse(format!("bad label `{s}`"))))
                    .collect::<Result<Vec<_>>>()
                    .map(|labels| LabelState::from_labels(&labels))
            })
            .collect::<Result<Vec<_>>>()?;
        if recorded != trace.snapshots {
            return Err(Error::Parse("recorded snapshots disagree with the replay".into()));
        }
        if self.confused != trace.confused() {
            return Err(Error::Parse("recorded confused set disagrees with the replay".into()));
        }
        Ok(trace)
    }
}

pub fn trace_to_json(t: &Trace) -> String {
    serde_json::to_string(&TraceJson::from_trace(t)).expect("trace serializes")
}

pub fn trace_from_json(text: &str) -> Result<Trace> {
    serde_json::from_str::<TraceJson>(text)?.replay()
}

pub fn report_to_value(r: &SolveReport) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "mode": r.mode,
        "optimum": r.optimum,
        "witness": r.witness.placements,
        "optimal": r.optimal,
        "nodes": r.nodes_explored,
        "millis": r.wall_time.as_millis() as u64,
    })
}

pub fn steps_to_value(r: &StepsReport) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "mode": r.mode,
        "steps": r.steps,
        "witness": r.witness.placements,
        "optimal": r.optimal,
        "nodes": r.nodes_explored,
        "millis": r.wall_time.as_millis() as u64,
    })
}

/// DOT rendering. Negative edges are red and dashed; with a label state,
/// vertices show their label and confused vertices are filled.
pub fn to_dot(g: &SignedGraph, state: Option<&LabelState>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        match state.map(|s| s.get(v)) {
            Some(Label::C) => out.push_str(&format!(
                "  {v} [label=\"{v}\\nC\", style=filled, fillcolor=gray40, fontcolor=white];\n"
            )),
            Some(l) => out.push_str(&format!("  {v} [label=\"{v}\\n{l}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for e in g.edges() {
        match e.sign {
            Sign::Positive => out.push_str(&format!("  {} -- {} [color=black];\n", e.u, e.v)),
            Sign::Negative => {
                out.push_str(&format!("  {} -- {} [color=red, style=dashed];\n", e.u, e.v))
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_cycle, gen_gn};

    #[test]
    fn graph_json_shape() {
        let g = SignedGraph::new(3, [(1, 0, Sign::Negative), (1, 2, Sign::Positive)]).unwrap();
        assert_eq!(
            graph_to_json(&g),
            r#"{"schema":1,"n":3,"edges":[{"u":0,"v":1,"sign":-1},{"u":1,"v":2,"sign":1}]}"#
        );
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn graph_json_rejects_bad_edges() {
        assert_eq!(
            graph_from_json(r#"{"n":2,"edges":[{"u":0,"v":1,"sign":1},{"u":1,"v":0,"sign":1}]}"#),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            graph_from_json(r#"{"n":2,"edges":[{"u":1,"v":1,"sign":1}]}"#),
            Err(Error::SelfLoop(1))
        );
        assert!(matches!(
            graph_from_json(r#"{"n":2,"edges":[{"u":0,"v":1,"sign":2}]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(graph_from_json(""), Err(Error::Parse(_))));
    }

    #[test]
    fn trace_json_replays() {
        let g = gen_cycle(&[Sign::Negative; 5]).unwrap();
        let t = run(&g, &Strategy::id([0, 2])).unwrap();
        let text = trace_to_json(&t);
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["confused"], json!([3]));
        assert_eq!(doc["mode"], json!("ID"));
        assert_eq!(doc["snapshots"][2], json!(["A", "-A", "A", "C", "-A"]));
        assert_eq!(trace_from_json(&text).unwrap(), t);
        let tampered = text.replace(r#""C""#, r#""A""#);
        assert!(trace_from_json(&tampered).is_err());
    }

    #[test]
    fn dot_marks_negative_edges_and_confusion() {
        let g = gen_gn(6).unwrap();
        let dot = to_dot(&g, None);
        assert_eq!(dot.matches("color=red").count(), 3);
        let c5 = gen_cycle(&[Sign::Negative; 5]).unwrap();
        let t = run(&c5, &Strategy::id([0, 2])).unwrap();
        let dot = to_dot(&c5, Some(t.final_state()));
        assert_eq!(dot.matches("style=filled").count(), 1);
        assert!(dot.ends_with("}\n"));
    }
}
