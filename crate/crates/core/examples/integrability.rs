//! `e^{alpha r^2}` is square integrable against `e^{-r^2} dμ` exactly when
//! `alpha < 1/2`; watch the truncated norms settle or blow up.
//!
//!     cargo run --release --example integrability

use gauss_variety::polyring::parse_real_poly;
use gauss_variety::quadrature::{default_nodes, integrability_study};
use gauss_variety::variety::{chart_euclidean, chart_revolution, ParamDomain, VarietyChart};

fn study(name: &str, chart: &VarietyChart) -> gauss_variety::Result<()> {
    let radii: Vec<f64> = (2..=12).map(f64::from).collect();
    for alpha in [0.1, 0.25, 0.4, 0.6] {
        let s = integrability_study(chart, alpha, &radii, &default_nodes(chart))?;
        println!("{name} alpha={alpha}: last ‖·‖² = {:.6e}  {:?}", s.values.last().unwrap(), s.verdict);
    }
    Ok(())
}

fn main() -> gauss_variety::Result<()> {
    study("line", &chart_euclidean(1))?;
    let cylinder = chart_revolution(
        &parse_real_poly("1", 1)?,
        &parse_real_poly("u", 1)?,
        ParamDomain::Unbounded,
    )?;
    study("cylinder", &cylinder)
}
