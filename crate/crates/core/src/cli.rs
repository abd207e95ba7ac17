//! Batch front end: one command, one study, one output directory.

use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};

use crate::approxlemma::{cm_csv, cm_sequence};
use crate::csvout::{CsvTable, Field};
use crate::error::{Error, Result};
use crate::orthobasis::{
    basis_on, degree_sweep, equivalence_sweep, projection_csv, projection_sweep, study_rule,
};
use crate::quadrature::{default_nodes, moment_table, uniform_nodes, Weight};
use crate::variety::{estimate_growth, load_variety_spec, VarietyChart};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Gaussian moments I_m -> moments.csv
    Moments,
    /// Ball volumes and growth fit -> growth.csv
    Growth,
    /// Orthonormal basis -> basis.csv, gram.csv
    Basis,
    /// Projection of e^(alpha r^2) over a degree sweep -> projection.csv
    Project,
    /// C_m constants -> cm.csv
    Lemma,
    /// Both sides of the weighted identity -> equivalence.csv
    Equivalence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeightArg {
    Gauss,
    None,
}

/// Numerics on varieties under the Gaussian measure e^(-r^2) dmu.
#[derive(Clone, Debug, Parser)]
#[command(name = "gauss-variety", version)]
pub struct RunConfig {
    pub command: Command,
    /// JSON variety spec (every command except `lemma`)
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Degree cap D; project/equivalence sweep D, D-2, ...
    #[arg(long, default_value_t = 4)]
    pub degree: u32,
    /// Largest moment order (moments, default 6) or largest m (lemma, default 60)
    #[arg(long)]
    pub mmax: Option<u32>,
    /// Tail budget for the truncation radius
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    /// Nodes per parameter direction [default: 64 unbounded/periodic, 48 bounded]
    #[arg(long)]
    pub nodes: Option<usize>,
    /// Output directory, created if absent
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Weight for the basis command
    #[arg(long, value_enum, default_value_t = WeightArg::Gauss)]
    pub weight: WeightArg,
    /// Exponent of the target e^(alpha r^2)
    #[arg(long, default_value_t = 0.25)]
    pub alpha: f64,
    /// Wavevector lengths for the lemma command
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub k: Vec<f64>,
    /// Relative residual below which a monomial is dropped
    #[arg(long, default_value_t = 1e-9)]
    pub rank_tol: f64,
}

/// Radii for the growth command: 13 log-spaced values over `[2, 100]`.
pub fn growth_radii() -> Vec<f64> {
    (0..13).map(|i| 2.0 * 50f64.powf(i as f64 / 12.0)).collect()
}

impl RunConfig {
    fn chart(&self) -> Result<VarietyChart> {
        let path = self.spec.as_deref().ok_or_else(|| {
            Error::InvalidArgument(format!("{:?} needs --spec", self.command))
        })?;
        load_variety_spec(path)
    }

    fn nodes_for(&self, chart: &VarietyChart) -> Vec<usize> {
        self.nodes
            .map_or_else(|| default_nodes(chart), |n| uniform_nodes(chart, n))
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidArgument(what.to_string()));
        if !(self.eps > 0.0) {
            return bad("--eps must be positive");
        }
        if !(self.rank_tol > 0.0) {
            return bad("--rank-tol must be positive");
        }
        if matches!(self.nodes, Some(n) if n < 4) {
            return bad("--nodes must be at least 4");
        }
        if self.degree == 0 && self.command != Command::Moments {
            return bad("--degree must be positive");
        }
        if self.command == Command::Lemma && self.k.iter().any(|k| !(*k > 0.0)) {
            return bad("--k values must be positive");
        }
        if self.command == Command::Lemma && self.mmax == Some(0) {
            return bad("--mmax must be positive for lemma");
        }
        Ok(())
    }
}

/// Runs one command and returns the files written.
pub fn run(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.out).map_err(|source| Error::Io {
        path: cfg.out.clone(),
        source,
    })?;
    let tables = match cfg.command {
        Command::Moments => vec![("moments.csv", moments(cfg)?)],
        Command::Growth => vec![("growth.csv", growth(cfg)?)],
        Command::Basis => basis(cfg)?,
        Command::Project => vec![("projection.csv", project(cfg)?)],
        Command::Lemma => vec![("cm.csv", lemma(cfg)?)],
        Command::Equivalence => vec![("equivalence.csv", equivalence(cfg)?)],
    };
    tables
        .into_iter()
        .map(|(name, t)| {
            let path = cfg.out.join(name);
            t.write_to(&path)?;
            Ok(path)
        })
        .collect()
}

fn moments(cfg: &RunConfig) -> Result<CsvTable> {
    let chart = cfg.chart()?;
    let growth = estimate_growth(&chart, &crate::variety::default_growth_radii())?;
    let table = moment_table(
        &chart,
        cfg.mmax.unwrap_or(6),
        Some(&growth),
        cfg.eps,
        &cfg.nodes_for(&chart),
    )?;
    Ok(table.to_csv())
}

fn growth(cfg: &RunConfig) -> Result<CsvTable> {
    let chart = cfg.chart()?;
    let est = estimate_growth(&chart, &growth_radii())?;
    let mut t = CsvTable::new(&["r", "volume", "C", "l", "slope"]);
    for (s, slope) in est.samples.iter().zip(est.local_slopes()) {
        t.row(&[
            Field::F(s.r),
            Field::F(s.volume),
            Field::F(est.c),
            Field::I(est.l as i64),
            Field::F(slope.unwrap_or(f64::NAN)),
        ]);
    }
    Ok(t)
}

fn basis(cfg: &RunConfig) -> Result<Vec<(&'static str, CsvTable)>> {
    let chart = cfg.chart()?;
    let weight = match cfg.weight {
        WeightArg::Gauss => Weight::Gauss,
        WeightArg::None => Weight::None,
    };
    if weight == Weight::None && chart.domain().iter().any(|d| d.is_unbounded()) {
        return Err(Error::InvalidArgument(
            "--weight none needs a chart with no unbounded direction".into(),
        ));
    }
    let rule = study_rule(&chart, cfg.degree, 0.0, cfg.eps, &cfg.nodes_for(&chart))?;
    let gb = basis_on(&chart, cfg.degree, &rule, weight, cfg.rank_tol)?;
    Ok(vec![("basis.csv", gb.basis_csv()), ("gram.csv", gb.gram_csv())])
}

fn project(cfg: &RunConfig) -> Result<CsvTable> {
    let chart = cfg.chart()?;
    let rule = study_rule(&chart, cfg.degree, cfg.alpha, cfg.eps, &cfg.nodes_for(&chart))?;
    let reports = projection_sweep(&chart, &degree_sweep(cfg.degree), cfg.alpha, &rule, cfg.rank_tol)?;
    Ok(projection_csv(&reports))
}

fn lemma(cfg: &RunConfig) -> Result<CsvTable> {
    let m_max = cfg.mmax.unwrap_or(60);
    let mut records = Vec::new();
    for &k in &cfg.k {
        records.extend(cm_sequence(k, m_max)?);
    }
    Ok(cm_csv(&records))
}

fn equivalence(cfg: &RunConfig) -> Result<CsvTable> {
    let chart = cfg.chart()?;
    let rule = study_rule(&chart, cfg.degree, cfg.alpha, cfg.eps, &cfg.nodes_for(&chart))?;
    let rows = equivalence_sweep(&chart, &degree_sweep(cfg.degree), cfg.alpha, &rule, cfg.rank_tol)?;
    let mut t = CsvTable::new(&["D", "lhs", "rhs", "rel_gap"]);
    for r in rows {
        t.row(&[
            Field::I(r.degree_cap as i64),
            Field::F(r.lhs),
            Field::F(r.rhs),
            Field::F(r.rel_gap()),
        ]);
    }
    Ok(t)
}

/// Exit status for a finished run: 0, 1 for numerical failures, 2 for I/O
/// and configuration errors.
pub fn exit_code(result: &Result<Vec<PathBuf>>) -> i32 {
    match result {
        Ok(_) => 0,
        Err(e) if e.is_config() => 2,
        Err(_) => 1,
    }
}

/// Parses `args`, runs, prints written paths or a one-line diagnostic, and
/// returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = run(&cfg);
    match &result {
        Ok(paths) => paths.iter().for_each(|p| println!("{}", display(p))),
        Err(e) => eprintln!("error: {e}"),
    }
    exit_code(&result)
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_parse() {
        let cfg = RunConfig::try_parse_from([
            "gauss-variety", "lemma", "--k", "0.5,1,2", "--mmax", "10", "--out", "x",
        ])
        .unwrap();
        assert_eq!(cfg.command, Command::Lemma);
        assert_eq!(cfg.k, vec![0.5, 1.0, 2.0]);
        assert_eq!(cfg.mmax, Some(10));
        assert_eq!(cfg.weight, WeightArg::Gauss);
    }

    #[test]
    fn missing_spec_is_config_error() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = RunConfig::try_parse_from([
            "gauss-variety",
            "moments",
            "--spec",
            "/nonexistent/spec.json",
            "--out",
            dir.path().to_str().unwrap(),
        ])
        .unwrap();
        let r = run(&cfg);
        assert_eq!(exit_code(&r), 2);
        assert!(r.unwrap_err().to_string().contains("/nonexistent/spec.json"));
    }

    #[test]
    fn radii_cover_range() {
        let r = growth_radii();
        assert!((r[0] - 2.0).abs() < 1e-12 && (r[12] - 100.0).abs() < 1e-9);
    }
}
