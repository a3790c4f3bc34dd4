//! Output assembly: every document opens with the resolved run
//! configuration so a result can be reproduced from its own metadata.

use std::path::Path;

use serde_json::{json, Value};
use tropnev::SphereQuadrature;

use crate::config::RunConfig;

/// Run metadata embedded in every output: the tool, the quadrature
/// actually used (or `none`), node count, seed, tolerance, and the grid
/// when one was consumed, plus command-specific extras.
#[derive(Debug, Clone)]
pub struct Meta {
    pub tool: &'static str,
    pub scheme: String,
    pub dim: Option<usize>,
    pub k: usize,
    pub seed: u64,
    pub tol: f64,
    pub grid: Option<String>,
    pub extra: Vec<(String, String)>,
}

impl Meta {
    /// `dim_for_k` picks the node-count default when no quadrature was
    /// built; commands without any ambient dimension pass 1.
    pub fn new(
        tool: &'static str,
        cfg: &RunConfig,
        quad: Option<&SphereQuadrature>,
        dim_for_k: usize,
    ) -> Meta {
        Meta {
            tool,
            scheme: quad.map_or_else(|| "none".to_string(), |q| q.scheme().to_string()),
            dim: quad.map(|q| q.dim()),
            k: quad.map_or_else(|| cfg.resolved_k(dim_for_k), |q| q.len()),
            seed: cfg.seed,
            tol: cfg.tol,
            grid: None,
            extra: Vec::new(),
        }
    }

    pub fn with_grid(mut self, cfg: &RunConfig) -> Meta {
        self.grid = Some(cfg.grid.render());
        self
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.extra.push((key.into(), value.to_string()));
    }

    pub fn csv_block(&self) -> String {
        let mut s = format!("# tool: tropnev {}\n# scheme: {}\n", self.tool, self.scheme);
        if let Some(d) = self.dim {
            s.push_str(&format!("# dim: {d}\n"));
        }
        s.push_str(&format!(
            "# K: {}\n# seed: {}\n# tol: {:e}\n",
            self.k, self.seed, self.tol
        ));
        if let Some(g) = &self.grid {
            s.push_str(&format!("# grid: {g}\n"));
        }
        for (k, v) in &self.extra {
            s.push_str(&format!("# {k}: {v}\n"));
        }
        s
    }

    pub fn json_value(&self) -> Value {
        let mut doc = serde_json::Map::new();
        doc.insert("tool".into(), json!(self.tool));
        doc.insert("scheme".into(), json!(self.scheme));
        if let Some(d) = self.dim {
            doc.insert("dim".into(), json!(d));
        }
        doc.insert("K".into(), json!(self.k));
        doc.insert("seed".into(), json!(self.seed));
        doc.insert("tol".into(), json!(self.tol));
        if let Some(g) = &self.grid {
            doc.insert("grid".into(), json!(g));
        }
        for (k, v) in &self.extra {
            doc.insert(k.clone(), json!(v));
        }
        Value::Object(doc)
    }
}

/// Metadata block plus CSV body.
pub fn render_csv(meta: &Meta, body: &str) -> String {
    format!("{}{}", meta.csv_block(), body)
}

/// `{"config": ..., "result": ...}` pretty-printed.
pub fn render_json(meta: &Meta, result: Value) -> String {
    let doc = json!({"config": meta.json_value(), "result": result});
    let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
    s.push('\n');
    s
}

/// Drops the quadrature comment lines a library table carries, keeping
/// table-specific ones; the wrapping metadata block already covers them.
pub fn strip_quad_comments(csv: &str) -> String {
    let mut out = String::new();
    for line in csv.lines() {
        let dup = ["# dim:", "# scheme:", "# nodes:", "# seed:"]
            .iter()
            .any(|p| line.starts_with(p));
        if !dup {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

pub fn emit(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
