//! Exact integration of polynomials over the unit cosphere `S³ ⊂ R⁴` of
//! the boundary tangential covariables `ξ₁ … ξ₄`.
//!
//! For even exponents `βᵢ = 2aᵢ` the Gamma-function formula
//!
//! ```text
//! ∫_{S³} Π ξᵢ^{βᵢ} dσ(ξ′) = 2 Γ(a₁+½)⋯Γ(a₄+½) / Γ(m+2),   m = Σ aᵢ,
//! ```
//!
//! reduces with `Γ(a+½) = (2a−1)!!·√π/2^a` and `Γ(m+2) = (m+1)!` to
//!
//! ```text
//! ∫_{S³} Π ξᵢ^{βᵢ} dσ(ξ′) = Ω₃ · Π (βᵢ−1)!! / (2^m (m+1)!),
//! ```
//!
//! with `Ω₃ = 2π²` the volume of `S³`; any odd exponent gives zero.
//! Every routine here returns the coefficient of `Ω₃` so the final
//! assembly can attach the transcendental factor symbolically.
//!
//! Spot values: `∫1 = Ω₃`, `∫ξ₁² = Ω₃/4`, `∫ξ₁²ξ₂² = Ω₃/24`, `∫ξ₁⁴ = Ω₃/8`.

use crate::poly::{Generator, Poly};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Moment `∫_{S³} ξ₁^{β₁}⋯ξ₄^{β₄} dσ` in units of `Ω₃`.
pub fn sphere_moment(beta: [u32; 4]) -> BigRational {
    if beta.iter().any(|b| b % 2 == 1) {
        return BigRational::from_integer(0.into());
    }
    let m: u32 = beta.iter().map(|b| b / 2).sum();
    // Numerator Π (βᵢ − 1)!!.
    let mut num = BigInt::from(1);
    for b in beta {
        let mut k = b as i64 - 1;
        while k >= 2 {
            num *= k;
            k -= 2;
        }
    }
    // Denominator 2^m (m+1)!.
    let mut den = BigInt::from(1) << m;
    for f in 2..=(m as i64 + 1) {
        den *= f;
    }
    BigRational::new(num, den)
}

/// Integrate a polynomial over the cosphere: each monomial's `ξ`-part is
/// replaced by its moment; all other generators pass through untouched.
/// The result is in units of `Ω₃`.
pub fn integrate_sphere(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (mono, coeff) in p.terms() {
        let mut beta = [0u32; 4];
        let mut rest = crate::poly::Mono::new();
        for (g, e) in mono {
            match g {
                Generator::Xi(k) => beta[(*k - 1) as usize] = *e,
                other => {
                    rest.insert(*other, *e);
                }
            }
        }
        let w = sphere_moment(beta);
        if w == BigRational::from_integer(0.into()) {
            continue;
        }
        out.add_term(rest, coeff.scale(&w));
    }
    out
}
