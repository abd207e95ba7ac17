//! JSON variety spec:
//!
//! ```json
//! { "kind": "revolution", "f": "1", "h": "u", "u1_domain": "unbounded" }
//! ```
//!
//! Required keys per kind:
//! - `euclidean`: `n`; optional `u1_domain` (applied to every coordinate).
//! - `graph`: `components` (univariate polynomials in `x`).
//! - `revolution`: `f`, `h` (univariate in `u`); optional `u1_domain`.
//! - `modulus_graph`: `F` (univariate in `z`, complex coefficients allowed).
//! - `circle`: nothing.
//!
//! Unknown keys, and keys that do not apply to the kind, are rejected.

use std::path::Path;

use serde::Deserialize;

use super::chart::{
    chart_circle, chart_euclidean, chart_euclidean_box, chart_graph, chart_modulus_graph,
    chart_revolution, ParamDomain, VarietyChart,
};
use crate::error::{Error, Result};
use crate::polyring::{parse_complex_poly, parse_real_poly};

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum U1Domain {
    Interval([f64; 2]),
    Named(String),
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VarietySpec {
    pub kind: String,
    #[serde(default)]
    pub f: Option<String>,
    #[serde(default)]
    pub h: Option<String>,
    #[serde(default, rename = "F")]
    pub big_f: Option<String>,
    #[serde(default)]
    pub components: Option<Vec<String>>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub u1_domain: Option<U1Domain>,
}

impl VarietySpec {
    pub fn from_json(text: &str) -> std::result::Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    fn present_keys(&self) -> Vec<&'static str> {
        let mut keys = Vec::new();
        if self.f.is_some() {
            keys.push("f");
        }
        if self.h.is_some() {
            keys.push("h");
        }
        if self.big_f.is_some() {
            keys.push("F");
        }
        if self.components.is_some() {
            keys.push("components");
        }
        if self.n.is_some() {
            keys.push("n");
        }
        if self.u1_domain.is_some() {
            keys.push("u1_domain");
        }
        keys
    }

    /// Builds the chart; errors are plain messages for the caller to wrap.
    pub fn build(&self) -> std::result::Result<VarietyChart, String> {
        let (required, optional): (&[&str], &[&str]) = match self.kind.as_str() {
            "euclidean" => (&["n"], &["u1_domain"]),
            "graph" => (&["components"], &[]),
            "revolution" => (&["f", "h"], &["u1_domain"]),
            "modulus_graph" => (&["F"], &[]),
            "circle" => (&[], &[]),
            other => return Err(format!("unknown kind '{other}'")),
        };
        let present = self.present_keys();
        for key in required {
            if !present.contains(key) {
                return Err(format!("kind '{}' requires key '{key}'", self.kind));
            }
        }
        for key in &present {
            if !required.contains(key) && !optional.contains(key) {
                return Err(format!("key '{key}' does not apply to kind '{}'", self.kind));
            }
        }
        let domain = self.domain()?;
        let poly1 = |s: &str| parse_real_poly(s, 1).map_err(|e| e.to_string());
        let chart = match self.kind.as_str() {
            "euclidean" => {
                let n = self.n.unwrap_or(0);
                if n == 0 {
                    return Err("n must be positive".into());
                }
                match domain {
                    ParamDomain::Bounded { lo, hi } => chart_euclidean_box(n, lo, hi),
                    _ => Ok(chart_euclidean(n)),
                }
            }
            "graph" => {
                let comps = self
                    .components
                    .as_ref()
                    .expect("checked above")
                    .iter()
                    .map(|s| poly1(s))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                if comps.is_empty() {
                    return Err("graph needs at least one component".into());
                }
                chart_graph(&comps)
            }
            "revolution" => chart_revolution(
                &poly1(self.f.as_deref().expect("checked above"))?,
                &poly1(self.h.as_deref().expect("checked above"))?,
                domain,
            ),
            "modulus_graph" => chart_modulus_graph(
                &parse_complex_poly(self.big_f.as_deref().expect("checked above"), 1)
                    .map_err(|e| e.to_string())?,
            ),
            _ => Ok(chart_circle()),
        };
        chart.map_err(|e| e.to_string())
    }

    fn domain(&self) -> std::result::Result<ParamDomain, String> {
        match &self.u1_domain {
            None => Ok(ParamDomain::Unbounded),
            Some(U1Domain::Named(s)) if s == "unbounded" => Ok(ParamDomain::Unbounded),
            Some(U1Domain::Named(s)) => Err(format!("u1_domain must be [lo, hi] or \"unbounded\", got '{s}'")),
            Some(U1Domain::Interval([lo, hi])) if lo < hi => Ok(ParamDomain::Bounded { lo: *lo, hi: *hi }),
            Some(U1Domain::Interval([lo, hi])) => Err(format!("empty u1_domain [{lo}, {hi}]")),
        }
    }
}

/// Reads and builds a chart from a JSON variety spec file.
pub fn load_variety_spec(path: &Path) -> Result<VarietyChart> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let spec_err = |msg: String| Error::Spec {
        path: path.to_path_buf(),
        msg,
    };
    VarietySpec::from_json(&text)
        .map_err(spec_err)?
        .build()
        .map_err(spec_err)
}
