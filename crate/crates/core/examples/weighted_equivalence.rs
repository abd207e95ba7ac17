//! `∫ |(f - p) e^{-r^2/4}|^2 e^{-r^2/2} dμ` and `∫ |f - p|^2 e^{-r^2} dμ`
//! computed in separate passes.
//!
//!     cargo run --release --example weighted_equivalence

use gauss_variety::orthobasis::{
    equivalence_sweep, study_rule, weighted_equivalence_check, DEFAULT_RANK_TOL,
};
use gauss_variety::polyring::{parse_real_poly, RealPoly};
use gauss_variety::quadrature::default_nodes;
use gauss_variety::variety::chart_euclidean;

fn main() -> gauss_variety::Result<()> {
    let line = chart_euclidean(1);
    let rule = study_rule(&line, 6, 0.25, 1e-14, &default_nodes(&line))?;

    let (lhs, rhs) = weighted_equivalence_check(&line, &RealPoly::zero(1), |n| n.x[0] * n.x[0], &rule)?;
    println!("f = x^2, p = 0: {lhs:.15} {rhs:.15} (3√π/4 = {:.15})", 0.75 * std::f64::consts::PI.sqrt());

    let p = parse_real_poly("1 + 0.5*x^2", 1)?;
    let (lhs, rhs) = weighted_equivalence_check(&line, &p, |n| (0.25 * n.r2).exp(), &rule)?;
    println!("f = e^(r^2/4), p = 1 + 0.5 x^2: {lhs:.15e} {rhs:.15e}");

    for row in equivalence_sweep(&line, &[2, 4, 6], 0.25, &rule, DEFAULT_RANK_TOL)? {
        println!("f = e^(r^2/4), p = P_{} f: {:.15e} {:.15e} gap {:.1e}", row.degree_cap, row.lhs, row.rhs, row.rel_gap());
    }
    Ok(())
}
