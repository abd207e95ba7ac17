//! Loads a JSON variety spec and prints what the chart looks like.
//!
//!     cargo run --release --example variety_spec -- crates/core/specs/hyperboloid.json

use std::path::PathBuf;

use gauss_variety::variety::{ball_volume, load_variety_spec};

fn main() -> gauss_variety::Result<()> {
    let path: PathBuf = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/specs/cylinder.json").into());
    let chart = load_variety_spec(&path)?;
    println!("{}: {:?}", path.display(), chart.kind());
    println!("  id {}", chart.id());
    println!("  dim {} in R^{}", chart.intrinsic_dim(), chart.ambient_dim());
    println!("  domain {:?}", chart.domain());
    let u = vec![0.5; chart.intrinsic_dim()];
    println!("  at u={u:?}: x={:?}, r^2={:.6}, density={:.6}", chart.embed(&u)?, chart.radial_sq(&u), chart.volume_density(&u));
    for r in [1.0, 2.0, 4.0] {
        println!("  vol(B_{r}) = {:.6}", ball_volume(&chart, r)?);
    }
    Ok(())
}
