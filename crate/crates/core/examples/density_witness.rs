//! Best polynomial approximation of `e^{r^2/4}` in `L^2(M, e^{-r^2} dμ)`:
//! the relative residual shrinks as the degree cap grows.
//!
//!     cargo run --release --example density_witness

use gauss_variety::orthobasis::{projection_sweep, study_rule, DEFAULT_RANK_TOL};
use gauss_variety::polyring::parse_real_poly;
use gauss_variety::quadrature::default_nodes;
use gauss_variety::variety::{chart_graph, chart_revolution, ParamDomain, VarietyChart};

fn sweep(name: &str, chart: &VarietyChart) -> gauss_variety::Result<()> {
    let rule = study_rule(chart, 8, 0.25, 1e-12, &default_nodes(chart))?;
    println!("{name} ({} nodes, R = {})", rule.n_nodes(), rule.truncation_radius());
    for r in projection_sweep(chart, &[2, 4, 6, 8], 0.25, &rule, DEFAULT_RANK_TOL)? {
        println!(
            "  D={}  |f|={:.6}  |f - P f|={:.3e}  relative {:.3e}  ({} basis functions)",
            r.degree_cap,
            r.f_norm,
            r.residual_norm,
            r.rel_residual(),
            r.coefficients.len()
        );
    }
    Ok(())
}

fn main() -> gauss_variety::Result<()> {
    let cylinder = chart_revolution(
        &parse_real_poly("1", 1)?,
        &parse_real_poly("u", 1)?,
        ParamDomain::Unbounded,
    )?;
    sweep("cylinder", &cylinder)?;
    sweep("graph of x^2", &chart_graph(&[parse_real_poly("x^2", 1)?])?)?;
    Ok(())
}
