//! Sparse polynomial arithmetic, text round trips and the truncated
//! exponential.
//!
//!     cargo run --release --example polynomials

use gauss_variety::polyring::{
    parse_real_poly, truncated_exponential, ComplexPoly, RealPoly, Wavevector,
};

fn main() -> gauss_variety::Result<()> {
    let p = parse_real_poly("x1^2 - 3*x1*x2 + 0.5", 2)?;
    let q = parse_real_poly("x2 + 1", 2)?;
    let prod = p.try_mul(&q)?;
    println!("p*q = {prod}");
    println!("d/dx2 (p*q) = {}", prod.derivative(1));
    println!("(p*q)(1, 2) = {}", prod.eval_real(&[1.0, 2.0])?);

    let text = prod.to_string();
    let back: RealPoly = parse_real_poly(&text, 2)?;
    println!("round trip exact: {}", back == prod);

    let e: ComplexPoly = truncated_exponential(&Wavevector::new(vec![1.0, 2.0]), 3);
    println!("p_3 for k=(1,2): {e}");
    Ok(())
}
