//! On the unit circle `x^2 + y^2 = 1` the six monomials of degree <= 2 span
//! only five functions; the threshold Cholesky drops `y^2`.
//!
//!     cargo run --release --example circle_rank

use gauss_variety::orthobasis::{gram_matrix, orthonormalize};
use gauss_variety::quadrature::{build_rule, default_nodes};
use gauss_variety::variety::chart_circle;

fn main() -> gauss_variety::Result<()> {
    let chart = chart_circle();
    let rule = build_rule(&chart, 1.0, &default_nodes(&chart))?;
    let gram = gram_matrix(&chart, 2, &rule)?;
    println!("smallest/largest Gram eigenvalue: {:.3e}", gram.min_eigen_ratio());
    for tol in [1e-12, 1e-10, 1e-9, 1e-8, 1e-6] {
        let b = orthonormalize(&gram, tol)?;
        let dropped: Vec<String> = b.dropped_monomials().iter().map(|m| m.to_string()).collect();
        println!("rank_tol {tol:.0e}: rank {} of 6, dropped {:?}", b.rank, dropped);
    }
    Ok(())
}
