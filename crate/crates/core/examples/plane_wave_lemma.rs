//! Taylor polynomials `p_m` of `e^{i<k,x>}` converge to it uniformly after
//! multiplying by `e^{-r^2}`, with error at most `C_m`.
//!
//!     cargo run --release --example plane_wave_lemma

use gauss_variety::approxlemma::{
    axis_grid, cm_record, uniform_error, AXIS_GRID_POINTS,
};
use gauss_variety::polyring::Wavevector;

fn main() -> gauss_variety::Result<()> {
    for k in [0.5, 1.0, 2.0, 4.0] {
        let first = (1..=200).find(|&m| cm_record(k, m).is_ok_and(|r| r.cm_closed < 1e-8));
        println!("k={k}: C_m < 1e-8 from m = {first:?}");
    }

    let k = Wavevector::new(vec![1.0, 0.0]);
    println!("\n m   grid sup          C_m               C*_m");
    for m in [1, 2, 5, 10, 15, 20, 25, 30] {
        let rec = cm_record(1.0, m)?;
        let err = uniform_error(&k, m, &axis_grid(&k, m, AXIS_GRID_POINTS))?;
        println!("{m:3}   {err:.6e}   {:.6e}   {:.4}", rec.cm_closed, rec.cstar);
    }
    Ok(())
}
