//! Gaussian moments `I_m = ∫ r^m e^{-r^2} dμ` on the line, compared with
//! `Γ((m+1)/2)`, and the total mass of the cylinder.
//!
//!     cargo run --release --example gaussian_moments

use gauss_variety::polyring::parse_real_poly;
use gauss_variety::quadrature::{default_nodes, moment_table};
use gauss_variety::variety::{
    chart_euclidean, chart_revolution, default_growth_radii, estimate_growth, ParamDomain,
};
use statrs::function::gamma::gamma;

fn main() -> gauss_variety::Result<()> {
    let line = chart_euclidean(1);
    let growth = estimate_growth(&line, &default_growth_radii())?;
    let table = moment_table(&line, 6, Some(&growth), 1e-12, &default_nodes(&line))?;
    println!("line, R = {}, {} nodes", table.radius, table.nodes);
    for e in &table.entries {
        let exact = gamma((e.m as f64 + 1.0) / 2.0);
        println!(
            "  m={}  I_m={:.15}  Γ={:.15}  rel err {:.1e}  tail ≤ {:.1e}",
            e.m,
            e.value,
            exact,
            (e.value - exact).abs() / exact,
            e.tail_bound
        );
    }

    let cylinder = chart_revolution(
        &parse_real_poly("1", 1)?,
        &parse_real_poly("u", 1)?,
        ParamDomain::Unbounded,
    )?;
    let growth = estimate_growth(&cylinder, &default_growth_radii())?;
    let t = moment_table(&cylinder, 0, Some(&growth), 1e-12, &default_nodes(&cylinder))?;
    let exact = 2.0 * std::f64::consts::PI * std::f64::consts::PI.sqrt() / std::f64::consts::E;
    println!("cylinder mass {:.15} vs 2π√π/e = {:.15}", t.entries[0].value, exact);
    Ok(())
}
