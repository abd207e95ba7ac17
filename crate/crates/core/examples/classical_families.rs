//! The Gram pipeline recovers Hermite polynomials on the line with weight
//! `e^{-x^2}` and Legendre polynomials on `[-1, 1]` without weight.
//!
//!     cargo run --release --example classical_families

use gauss_variety::orthobasis::{classic_recovery, ClassicKind};

fn main() -> gauss_variety::Result<()> {
    for kind in [ClassicKind::Hermite, ClassicKind::Legendre] {
        let r = classic_recovery(kind, 6)?;
        println!(
            "{kind:?}: max rel coeff error {:.2e}, max spurious coeff {:.2e}",
            r.max_rel_error, r.max_zero_violation
        );
        for (n, c) in r.computed.iter().enumerate() {
            let shown: Vec<String> = c.iter().map(|v| format!("{v:+.6}")).collect();
            println!("  {n}: [{}]", shown.join(", "));
        }
    }
    Ok(())
}
