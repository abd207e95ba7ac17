//! The constants `C_m = sup_y (y^m/m!) e^{y - y^2/k^2}` bounding how fast the
//! Taylor partial sums of a plane wave converge in the Gaussian-weighted sup
//! norm, and a numerical check of that convergence.

mod cm;
mod uniform;

pub use cm::{
    cm_brute, cm_closed_form, cm_csv, cm_record, cm_sequence, cstar, ln_cm_closed_form,
    log_gap, maximize_log_term, stationary_point, BruteMax, CmRecord,
};
pub use uniform::{axis_grid, uniform_error, uniform_error_taylor, AXIS_GRID_POINTS, EVAL_FLOOR};
