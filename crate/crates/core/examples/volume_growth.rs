//! Ball volumes `vol(M ∩ B_r)` and the fitted polynomial growth bound.
//!
//!     cargo run --release --example volume_growth

use gauss_variety::polyring::parse_real_poly;
use gauss_variety::variety::{chart_euclidean, chart_graph, estimate_growth, VarietyChart};

fn report(name: &str, chart: &VarietyChart) -> gauss_variety::Result<()> {
    let radii: Vec<f64> = (0..13).map(|i| 2.0 * 50f64.powf(i as f64 / 12.0)).collect();
    let g = estimate_growth(chart, &radii)?;
    println!("{name}: vol <= {:.4} r^{}, fitted slope {:.4}", g.c, g.l, g.slope);
    for (s, slope) in g.samples.iter().zip(g.local_slopes()) {
        println!("  r={:8.3}  vol={:12.5}  local slope {:.4}", s.r, s.volume, slope.unwrap_or(f64::NAN));
    }
    Ok(())
}

fn main() -> gauss_variety::Result<()> {
    report("line", &chart_euclidean(1))?;
    report("plane", &chart_euclidean(2))?;
    report("graph of x^2", &chart_graph(&[parse_real_poly("x^2", 1)?])?)?;
    Ok(())
}
