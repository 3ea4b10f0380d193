//! Stored reference values for the boundary-residue computation.
//!
//! Every public function here returns a hand-entered copy of a displayed
//! intermediate or final quantity of the computation: projected symbols,
//! symbol derivatives, trace densities, per-case values, and the final
//! coefficient triples.  The engine recomputes each quantity mechanically
//! from the symbol calculus and compares against these stored forms; a
//! mismatch is reported as a deviation record carrying both sides.
//!
//! A few stored displays are known to contain typographical slips.  For each
//! such site this module keeps **two** variants: `..._displayed` (the form
//! exactly as printed in the reference) and `..._corrected` (the repaired
//! form that the surrounding chain of identities actually uses).  The
//! comparison layer treats a mismatch against `..._displayed` that matches
//! `..._corrected` as a documented deviation, not an engine defect.
//!
//! Conventions used throughout:
//! * `c(ξ′) = Σ_{k≤4} ξ_k e_k`, `c(dxᵢ) = e_i`, `c(dxₙ) = e₅`,
//!   `c(ξ) = c(ξ′) + ξₙ e₅`;
//! * restricted displays live on the unit cosphere `|ξ′| = 1`;
//! * every occurrence of `∂_{xₙ}c(ξ′)` has been substituted by its value in
//!   boundary normal coordinates, `(h₁/2)·c(ξ′)`;
//! * a scalar rational function of `ξₙ` is stored over the factored
//!   denominator `(ξₙ−i)^m (ξₙ+i)^p`; a factor `(1+ξₙ²)^k` contributes `k`
//!   to both exponents.
//!
//! Units: trace densities are functions of `ξₙ` on the unit cosphere; case
//! values are coefficients of `π·Ω₃` (the normal contour integral carries a
//! `π`, the cosphere volume an `Ω₃`); the final theorem coefficients are in
//! units of `π³/16` after `Ω₃ = 2π²` is expanded.

use serde::{Deserialize, Serialize};

use crate::clifford::CliffElem;
use crate::curvature::curv;
use crate::gauss::GaussRat;
use crate::poly::{Generator, Poly};
use crate::ratxi::RatXi;

// ---------------------------------------------------------------------------
// Small builders
// ---------------------------------------------------------------------------

fn rat(n: i64, d: i64) -> GaussRat {
    GaussRat::ratio(n, d)
}

fn imag(n: i64, d: i64) -> GaussRat {
    GaussRat::complex_ratio(0, 1, n, d)
}

fn cplx(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussRat {
    GaussRat::complex_ratio(re_n, re_d, im_n, im_d)
}

fn h1() -> Poly {
    Poly::gen(Generator::H1)
}

fn h2() -> Poly {
    Poly::gen(Generator::H2)
}

fn h1_sq() -> Poly {
    h1().mul(&h1())
}

fn s_bdry() -> Poly {
    Poly::gen(Generator::SBoundary)
}

fn xi(k: u8) -> Poly {
    Poly::gen(Generator::Xi(k))
}

/// `c(ξ′) = Σ_{k≤4} ξ_k e_k`.
pub fn c_xi_prime() -> CliffElem {
    let mut e = CliffElem::zero();
    for k in 1..=4u8 {
        e = e.add(&CliffElem::gen(k).scale_poly(&xi(k)));
    }
    e
}

/// `c(dxₙ) = e₅`.
pub fn c_dxn() -> CliffElem {
    CliffElem::gen(5)
}

/// `c(dxᵢ) = eᵢ` for a tangential index `i ∈ 1..=4`.
pub fn c_dx(i: u8) -> CliffElem {
    assert!((1..=4).contains(&i), "tangential cotangent index out of range");
    CliffElem::gen(i)
}

/// `∂_{xₙ}c(ξ′)` in boundary normal coordinates: `(h₁/2)·c(ξ′)`.
pub fn dxn_c_xi_prime() -> CliffElem {
    c_xi_prime().scale_poly(&h1().scale(&rat(1, 2)))
}

/// Restricted numerator coefficients over `(ξₙ−i)^m (ξₙ+i)^p`.
fn fraction(num: Vec<CliffElem>, m: u32, p: u32) -> RatXi {
    RatXi::restricted_parts(num, m, p)
}

/// Restricted scalar rational function with constant coefficients.
fn scalar_fraction(coeffs: &[GaussRat], m: u32, p: u32) -> RatXi {
    fraction(
        coeffs.iter().map(|c| CliffElem::scalar(Poly::constant(c.clone()))).collect(),
        m,
        p,
    )
}

/// Restricted scalar rational function with polynomial coefficients.
fn poly_fraction(coeffs: Vec<Poly>, m: u32, p: u32) -> RatXi {
    fraction(coeffs.into_iter().map(CliffElem::scalar).collect(), m, p)
}

/// One Clifford element times a `ξₙ`-polynomial over `(ξₙ−i)^m (ξₙ+i)^p`:
/// `Σ_k coeffs[k]·ξₙᵏ · e / ((ξₙ−i)^m (ξₙ+i)^p)`.
fn elem_over(e: &CliffElem, coeffs: &[GaussRat], m: u32, p: u32) -> RatXi {
    fraction(coeffs.iter().map(|c| e.scale(c)).collect(), m, p)
}

/// Sum a list of restricted symbols.
fn total(terms: &[RatXi]) -> RatXi {
    let mut acc = RatXi::zero_restricted();
    for t in terms {
        acc = acc.add(t).expect("reference fixture sum");
    }
    acc
}

/// `c(ξ) = c(ξ′) + ξₙ·e₅` as a restricted symbol with trivial denominator.
pub fn c_xi_full() -> RatXi {
    RatXi::restricted_parts(vec![c_xi_prime(), c_dxn()], 0, 0)
}

/// Embed a single Clifford element as a restricted symbol.
fn elem_sym(e: CliffElem) -> RatXi {
    RatXi::restricted_parts(vec![e], 0, 0)
}

/// `1 / (1+ξₙ²)^k` as a restricted symbol.
fn inv_q(k: u32) -> RatXi {
    scalar_fraction(&[GaussRat::one()], k, k)
}

/// Product of restricted symbols, left to right.
fn chain(factors: &[&RatXi]) -> RatXi {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.mul(f).expect("reference fixture product");
    }
    acc
}

// ---------------------------------------------------------------------------
// Half-plane projection kernel table
// ---------------------------------------------------------------------------

/// `π⁺[ c(ξ) / (1+ξₙ²)² ]` on `|ξ′| = 1`:
/// `−i·c(ξ′)/(4(ξₙ−i)) − (c(ξ′)+i·c(dxₙ))/(4(ξₙ−i)²)`.
pub fn proj_c_xi_over_q_sq() -> RatXi {
    let t1 = elem_over(&c_xi_prime(), &[imag(-1, 4)], 1, 0);
    let t2 = fraction(
        vec![c_xi_prime().scale(&rat(-1, 4)).add(&c_dxn().scale(&imag(-1, 4)))],
        2,
        0,
    );
    total(&[t1, t2])
}

/// `π⁺[ 1 / (1+ξₙ²)² ]` = `(−2−iξₙ)/(4(ξₙ−i)²)`.
pub fn proj_inv_q_sq() -> RatXi {
    scalar_fraction(&[rat(-1, 2), imag(-1, 4)], 2, 0)
}

/// `π⁺[ c(ξ) / (1+ξₙ²)³ ]`
/// = `[(−3iξₙ²−9ξₙ+8i)c(ξ′) + (−iξₙ−3)c(dxₙ)] / (16(ξₙ−i)³)`.
pub fn proj_c_xi_over_q_cubed() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    fraction(
        vec![
            cp.scale(&imag(1, 2)).add(&cn.scale(&rat(-3, 16))),
            cp.scale(&rat(-9, 16)).add(&cn.scale(&imag(-1, 16))),
            cp.scale(&imag(-3, 16)),
        ],
        3,
        0,
    )
}

// ---------------------------------------------------------------------------
// Order −1 symbol: restricted derivative displays
// ---------------------------------------------------------------------------

/// `σ₋₁` restricted to `|ξ′| = 1`: `i·c(ξ)/(1+ξₙ²)`.
pub fn leading_symbol_restricted() -> RatXi {
    fraction(vec![c_xi_prime().scale(&imag(1, 1)), c_dxn().scale(&imag(1, 1))], 1, 1)
}

/// `∂_{ξₙ}σ₋₁` restricted:
/// `−2ξₙ·i·c(ξ′)/(1+ξₙ²)² + (1−ξₙ²)·i·c(dxₙ)/(1+ξₙ²)²`.
pub fn d_xin_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    fraction(
        vec![cn.scale(&imag(1, 1)), cp.scale(&imag(-2, 1)), cn.scale(&imag(-1, 1))],
        2,
        2,
    )
}

/// `∂²_{ξₙ}σ₋₁` restricted:
/// `(6ξₙ²−2)·i·c(ξ′)/(1+ξₙ²)³ + (2ξₙ³−6ξₙ)·i·c(dxₙ)/(1+ξₙ²)³`.
pub fn d2_xin_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    fraction(
        vec![
            cp.scale(&imag(-2, 1)),
            cn.scale(&imag(-6, 1)),
            cp.scale(&imag(6, 1)),
            cn.scale(&imag(2, 1)),
        ],
        3,
        3,
    )
}

/// `∂³_{ξₙ}σ₋₁` restricted:
/// `(24ξₙ−24ξₙ³)·i·c(ξ′)/(1+ξₙ²)⁴ + (−6ξₙ⁴+36ξₙ²−6)·i·c(dxₙ)/(1+ξₙ²)⁴`.
pub fn d3_xin_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    fraction(
        vec![
            cn.scale(&imag(-6, 1)),
            cp.scale(&imag(24, 1)),
            cn.scale(&imag(36, 1)),
            cp.scale(&imag(-24, 1)),
            cn.scale(&imag(-6, 1)),
        ],
        4,
        4,
    )
}

/// `∂²_{xₙ}σ₋₁` restricted, exactly as displayed in the reference:
/// `i[(¾h₁²−½h₂)c(ξ′) − h₂c(ξ) − 2h₁·∂_{xₙ}c(ξ′)]/(1+ξₙ²)²
///  + 2i·h₁²·c(ξ)/(1+ξₙ²)³`.
///
/// The first group's `(¾h₁²−½h₂)c(ξ′)` term is displayed over `(1+ξₙ²)²`;
/// the chain of identities that consumes this display uses it over
/// `(1+ξₙ²)` instead — see [`d2_xn_leading_corrected`].
pub fn d2_xn_leading_displayed() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let a = h1_sq().scale(&rat(3, 4)).sub(&h2().scale(&rat(1, 2)));
    // bracket = a·c(ξ′) − h₂(c(ξ′)+ξₙc(dxₙ)) − 2h₁·(h₁/2)c(ξ′), all ×i over Q².
    let bracket0 = cp
        .scale_poly(&a.sub(&h2()).sub(&h1_sq()))
        .scale(&imag(1, 1));
    let bracket1 = cn.scale_poly(&h2().neg()).scale(&imag(1, 1));
    let grp1 = fraction(vec![bracket0, bracket1], 2, 2);
    let tail = h1_sq().scale(&imag(2, 1));
    let grp2 = fraction(vec![cp.scale_poly(&tail), cn.scale_poly(&tail)], 3, 3);
    total(&[grp1, grp2])
}

/// `∂²_{xₙ}σ₋₁` restricted, with the leading term over `(1+ξₙ²)` — the form
/// consistent with the projected display it feeds.
pub fn d2_xn_leading_corrected() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let a = h1_sq().scale(&rat(3, 4)).sub(&h2().scale(&rat(1, 2)));
    let grp0 = fraction(vec![cp.scale_poly(&a).scale(&imag(1, 1))], 1, 1);
    let grp1 = fraction(
        vec![
            cp.scale_poly(&h2().add(&h1_sq()).neg()).scale(&imag(1, 1)),
            cn.scale_poly(&h2().neg()).scale(&imag(1, 1)),
        ],
        2,
        2,
    );
    let tail = h1_sq().scale(&imag(2, 1));
    let grp2 = fraction(vec![cp.scale_poly(&tail), cn.scale_poly(&tail)], 3, 3);
    total(&[grp0, grp1, grp2])
}

/// The expanded single-denominator form of `∂²_{xₙ}σ₋₁` as displayed:
/// `−2i·h₁·∂_{xₙ}c(ξ′)/(1+ξₙ²)²
///  + (2ξₙh₁² − ξₙ(1+ξₙ²)h₂)·i·c(dxₙ)/(1+ξₙ²)³
///  + [(11+3ξₙ²)h₁² − (6+6ξₙ²)h₂]·i·c(ξ′)/(4(1+ξₙ²)³)`.
///
/// This expansion agrees exactly with [`d2_xn_leading_displayed`].
pub fn d2_xn_leading_expanded_displayed() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    // −2i·h₁·(h₁/2)c(ξ′) = −i·h₁²·c(ξ′)
    let t1 = fraction(vec![cp.scale_poly(&h1_sq()).scale(&imag(-1, 1))], 2, 2);
    let t2 = fraction(
        vec![
            CliffElem::zero(),
            cn.scale_poly(&h1_sq().scale(&rat(2, 1)).sub(&h2())).scale(&imag(1, 1)),
            CliffElem::zero(),
            cn.scale_poly(&h2().neg()).scale(&imag(1, 1)),
        ],
        3,
        3,
    );
    let c0 = h1_sq().scale(&rat(11, 4)).sub(&h2().scale(&rat(6, 4)));
    let c2 = h1_sq().scale(&rat(3, 4)).sub(&h2().scale(&rat(6, 4)));
    let t3 = fraction(
        vec![
            cp.scale_poly(&c0).scale(&imag(1, 1)),
            CliffElem::zero(),
            cp.scale_poly(&c2).scale(&imag(1, 1)),
        ],
        3,
        3,
    );
    total(&[t1, t2, t3])
}

/// `∂_{ξⱼ}∂_{ξᵢ}σ₋₁` (unit-cosphere restriction of the tangential Hessian):
/// `i[−2ξⱼc(dxᵢ) − 2δᵢⱼc(ξ) − 2ξᵢc(dxⱼ)]/(1+ξₙ²)² + 8iξᵢξⱼ·c(ξ)/(1+ξₙ²)³`.
pub fn d_xi2_leading(i: u8, j: u8) -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let mut n0 = c_dx(i)
        .scale_poly(&xi(j).scale(&rat(-2, 1)))
        .add(&c_dx(j).scale_poly(&xi(i).scale(&rat(-2, 1))));
    let mut n1 = CliffElem::zero();
    if i == j {
        n0 = n0.add(&cp.scale(&rat(-2, 1)));
        n1 = cn.scale(&rat(-2, 1));
    }
    let grp1 = fraction(
        vec![n0.scale(&imag(1, 1)), n1.scale(&imag(1, 1))],
        2,
        2,
    );
    let w = xi(i).mul(&xi(j)).scale(&imag(8, 1));
    let grp2 = fraction(vec![cp.scale_poly(&w), cn.scale_poly(&w)], 3, 3);
    total(&[grp1, grp2])
}

/// `∂_{ξₙ}∂_{xᵢ}∂_{xⱼ}σ₋₁` restricted:
/// `Σ_{l,t} ξ_l(R_{tilj}+R_{tjli})·(−2iξₙ)·c(Ẽ_t)/(1+ξₙ²)²
///  + Σ_{α,β}(R_{iαjβ}+R_{iβjα})ξ_αξ_β·[(−4iξₙ)c(ξ′)/3 + (i−3iξₙ²)c(dxₙ)/3]/(1+ξₙ²)³`.
pub fn d_x2_dxin_leading(i: u8, j: u8) -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let mut first = CliffElem::zero();
    for l in 1..=4u8 {
        for t in 1..=4u8 {
            let w = xi(l).mul(&curv(t, i, l, j).add(&curv(t, j, l, i)));
            first = first.add(&c_dx(t).scale_poly(&w));
        }
    }
    let grp1 = fraction(vec![CliffElem::zero(), first.scale(&imag(-2, 1))], 2, 2);
    let mut w = Poly::zero();
    for a in 1..=4u8 {
        for b in 1..=4u8 {
            w = w.add(&curv(i, a, j, b).add(&curv(i, b, j, a)).mul(&xi(a)).mul(&xi(b)));
        }
    }
    let grp2 = fraction(
        vec![
            cn.scale_poly(&w).scale(&imag(1, 3)),
            cp.scale_poly(&w).scale(&imag(-4, 3)),
            cn.scale_poly(&w).scale(&imag(-1, 1)),
        ],
        3,
        3,
    );
    total(&[grp1, grp2])
}

/// `∂³_{ξₙ}∂_{xₙ}σ₋₁` restricted:
/// `(24iξₙ−24iξₙ³)·∂_{xₙ}c(ξ′)/(1+ξₙ²)⁴
///  + i·h₁·[8(15ξₙ³−9ξₙ)c(ξ′) + 12(5ξₙ⁴−10ξₙ²+1)c(dxₙ)]/(1+ξₙ²)⁵`.
pub fn d3_xin_dxn_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let ih1 = h1().scale(&imag(1, 1));
    // 24i·(h₁/2) = 12i·h₁ on the ∂ₓₙc(ξ′) substitution.
    let t1 = fraction(
        vec![
            CliffElem::zero(),
            cp.scale_poly(&h1()).scale(&imag(12, 1)),
            CliffElem::zero(),
            cp.scale_poly(&h1()).scale(&imag(-12, 1)),
        ],
        4,
        4,
    );
    let t2 = fraction(
        vec![
            cn.scale_poly(&ih1).scale(&rat(12, 1)),
            cp.scale_poly(&ih1).scale(&rat(-72, 1)),
            cn.scale_poly(&ih1).scale(&rat(-120, 1)),
            cp.scale_poly(&ih1).scale(&rat(120, 1)),
            cn.scale_poly(&ih1).scale(&rat(60, 1)),
        ],
        5,
        5,
    );
    total(&[t1, t2])
}

/// `∂²_{ξₙ}∂_{xₙ}σ₋₁` restricted:
/// `(6iξₙ²−2i)·∂_{xₙ}c(ξ′)/(1+ξₙ²)³
///  + i·h₁·[4(1−5ξₙ²)c(ξ′) − 12ξₙ(ξₙ²−1)c(dxₙ)]/(1+ξₙ²)⁴`.
pub fn d2_xin_dxn_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let ih1 = h1().scale(&imag(1, 1));
    let t1 = fraction(
        vec![
            cp.scale_poly(&h1()).scale(&imag(-1, 1)),
            CliffElem::zero(),
            cp.scale_poly(&h1()).scale(&imag(3, 1)),
        ],
        3,
        3,
    );
    let t2 = fraction(
        vec![
            cp.scale_poly(&ih1).scale(&rat(4, 1)),
            cn.scale_poly(&ih1).scale(&rat(12, 1)),
            cp.scale_poly(&ih1).scale(&rat(-20, 1)),
            cn.scale_poly(&ih1).scale(&rat(-12, 1)),
        ],
        4,
        4,
    );
    total(&[t1, t2])
}

// ---------------------------------------------------------------------------
// Order −1 symbol: projected displays
// ---------------------------------------------------------------------------

/// `π⁺∂²_{xₙ}σ₋₁`:
/// `(¾h₁²−½h₂)·c(ξ′)/(2(ξₙ−i))
///  − h₁(ξₙ−2i)·∂_{xₙ}c(ξ′)/(2(ξₙ−i)²)
///  − h₂[(ξₙ−2i)c(ξ′)+c(dxₙ)]/(4(ξₙ−i)²)
///  + 2i·h₁²·π⁺[c(ξ)/(1+ξₙ²)³]`.
pub fn proj_d2_xn_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let a = h1_sq().scale(&rat(3, 4)).sub(&h2().scale(&rat(1, 2)));
    let t1 = fraction(vec![cp.scale_poly(&a).scale(&rat(1, 2))], 1, 0);
    // −h₁(ξₙ−2i)/(2(ξₙ−i)²)·(h₁/2)c(ξ′) = −(h₁²/4)(ξₙ−2i)c(ξ′)/(ξₙ−i)²
    let t2 = elem_over(
        &cp.scale_poly(&h1_sq()),
        &[imag(1, 2), rat(-1, 4)],
        2,
        0,
    );
    let t3 = fraction(
        vec![
            cp.scale_poly(&h2()).scale(&imag(1, 2)).add(&cn.scale_poly(&h2()).scale(&rat(-1, 4))),
            cp.scale_poly(&h2()).scale(&rat(-1, 4)),
        ],
        2,
        0,
    );
    let t4 = proj_c_xi_over_q_cubed().scale_poly(&h1_sq()).scale(&imag(2, 1));
    total(&[t1, t2, t3, t4])
}

/// `π⁺∂_{xₙ}σ₋₁`:
/// `∂_{xₙ}c(ξ′)/(2(ξₙ−i)) + i·h₁·[i·c(ξ′)/(4(ξₙ−i)) + (c(ξ′)+i·c(dxₙ))/(4(ξₙ−i)²)]`.
///
/// After the `∂_{xₙ}c(ξ′) = (h₁/2)c(ξ′)` substitution the two simple-pole
/// terms cancel and the reduced form is `i·h₁(c(ξ′)+i·c(dxₙ))/(4(ξₙ−i)²)`.
pub fn proj_dxn_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let t1 = fraction(vec![cp.scale_poly(&h1()).scale(&rat(1, 4))], 1, 0);
    let t2 = fraction(vec![cp.scale_poly(&h1()).scale(&rat(-1, 4))], 1, 0);
    let t3 = fraction(
        vec![cp
            .scale_poly(&h1())
            .scale(&imag(1, 4))
            .add(&cn.scale_poly(&h1()).scale(&rat(-1, 4)))],
        2,
        0,
    );
    total(&[t1, t2, t3])
}

/// `∂²_{ξₙ}∂_{xₙ}π⁺σ₋₁`:
/// `∂_{xₙ}c(ξ′)/(ξₙ−i)³ + h₁[(4i−ξₙ)c(ξ′) − 3c(dxₙ)]/(2(ξₙ−i)⁴)`.
pub fn d2_xin_dxn_proj_leading() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let t1 = fraction(vec![cp.scale_poly(&h1()).scale(&rat(1, 2))], 3, 0);
    let t2 = fraction(
        vec![
            cp.scale_poly(&h1()).scale(&imag(2, 1)).add(&cn.scale_poly(&h1()).scale(&rat(-3, 2))),
            cp.scale_poly(&h1()).scale(&rat(-1, 2)),
        ],
        4,
        0,
    );
    total(&[t1, t2])
}

/// `π⁺∂_{ξᵢ}σ₋₁`:
/// `c(dxᵢ)/(2(ξₙ−i)) − ξᵢ(ξₙ−2i)c(ξ′)/(2(ξₙ−i)²) − ξᵢc(dxₙ)/(2(ξₙ−i)²)`.
pub fn proj_d_xi_leading(i: u8) -> RatXi {
    let cp = c_xi_prime().scale_poly(&xi(i));
    let cn = c_dxn().scale_poly(&xi(i));
    let t1 = fraction(vec![c_dx(i).scale(&rat(1, 2))], 1, 0);
    let t2 = fraction(
        vec![cp.scale(&imag(1, 1)).add(&cn.scale(&rat(-1, 2))), cp.scale(&rat(-1, 2))],
        2,
        0,
    );
    total(&[t1, t2])
}

/// `∂_{ξₙ}π⁺∂_{ξᵢ}σ₋₁`:
/// `−c(dxᵢ)/(2(ξₙ−i)²) − ξᵢ(3i−ξₙ)c(ξ′)/(2(ξₙ−i)³) + ξᵢc(dxₙ)/(ξₙ−i)³`.
pub fn d_xin_proj_d_xi_leading(i: u8) -> RatXi {
    let cp = c_xi_prime().scale_poly(&xi(i));
    let cn = c_dxn().scale_poly(&xi(i));
    let t1 = fraction(vec![c_dx(i).scale(&rat(-1, 2))], 2, 0);
    let t2 = fraction(
        vec![cp.scale(&imag(-3, 2)).add(&cn), cp.scale(&rat(1, 2))],
        3,
        0,
    );
    total(&[t1, t2])
}

/// `π⁺∂_{ξⱼ}∂_{ξᵢ}σ₋₁`:
/// `ξⱼ(2i−ξₙ)c(dxᵢ)/(2(ξₙ−i)²) + (2i−ξₙ)c(ξ′)δᵢⱼ/(2(ξₙ−i)²)
///  − c(dxₙ)δᵢⱼ/(2(ξₙ−i)²) + ξᵢ(2i−ξₙ)c(dxⱼ)/(2(ξₙ−i)²)
///  + ξᵢξⱼ(3ξₙ²−9iξₙ−8)c(ξ′)/(2(ξₙ−i)³) + ξᵢξⱼ(ξₙ−3i)c(dxₙ)/(2(ξₙ−i)³)`.
pub fn proj_d_xi2_leading(i: u8, j: u8) -> RatXi {
    let half_pole = |e: &CliffElem| elem_over(e, &[imag(1, 1), rat(-1, 2)], 2, 0);
    let mut terms = vec![
        half_pole(&c_dx(i).scale_poly(&xi(j))),
        half_pole(&c_dx(j).scale_poly(&xi(i))),
    ];
    if i == j {
        terms.push(half_pole(&c_xi_prime()));
        terms.push(fraction(vec![c_dxn().scale(&rat(-1, 2))], 2, 0));
    }
    let w = xi(i).mul(&xi(j));
    terms.push(elem_over(
        &c_xi_prime().scale_poly(&w),
        &[rat(-4, 1), imag(-9, 2), rat(3, 2)],
        3,
        0,
    ));
    terms.push(elem_over(
        &c_dxn().scale_poly(&w),
        &[imag(-3, 2), rat(1, 2)],
        3,
        0,
    ));
    total(&terms)
}

/// `∂_{ξₙ}π⁺σ₋₁` = `−(c(ξ′)+i·c(dxₙ))/(2(ξₙ−i)²)`.
pub fn d_xin_proj_leading() -> RatXi {
    fraction(
        vec![c_xi_prime().scale(&rat(-1, 2)).add(&c_dxn().scale(&imag(-1, 2)))],
        2,
        0,
    )
}

/// `∂²_{ξₙ}π⁺σ₋₁` exactly as displayed:
/// `c(ξ′)/(ξₙ−i)³ + i·c(dxₙ)/(2(ξₙ−i)³)`.
///
/// The `c(dxₙ)` coefficient is half the value the surrounding computation
/// uses; see [`d2_xin_proj_leading_corrected`].
pub fn d2_xin_proj_leading_displayed() -> RatXi {
    fraction(vec![c_xi_prime().add(&c_dxn().scale(&imag(1, 2)))], 3, 0)
}

/// `∂²_{ξₙ}π⁺σ₋₁` = `(c(ξ′)+i·c(dxₙ))/(ξₙ−i)³` — the derivative of
/// [`d_xin_proj_leading`], which the downstream trace computation uses.
pub fn d2_xin_proj_leading_corrected() -> RatXi {
    fraction(vec![c_xi_prime().add(&c_dxn().scale(&imag(1, 1)))], 3, 0)
}

/// First group `B₁` of the projected order −2 symbol `π⁺σ₋₂ = B₁ − B₂`:
/// `h₁(2+iξₙ)c(ξ′)c(dxₙ)c(ξ′)/(4(ξₙ−i)²) − i·h₁·c(ξ′)/(2(ξₙ−i)²)
///  − i·h₁ξₙ·c(dxₙ)/(4(ξₙ−i)²) + i·∂_{xₙ}c(ξ′)/(4(ξₙ−i)²)
///  − (2+iξₙ)c(ξ′)c(dxₙ)∂_{xₙ}c(ξ′)/(4(ξₙ−i)²)`.
pub fn second_symbol_proj_first_part() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let s = cp.mul(&cn).mul(&cp); // c(ξ′)c(dxₙ)c(ξ′)
    let sh1 = s.scale_poly(&h1());
    let t1 = elem_over(&sh1, &[rat(1, 2), imag(1, 4)], 2, 0);
    let t2 = fraction(vec![cp.scale_poly(&h1()).scale(&imag(-1, 2))], 2, 0);
    let t3 = elem_over(&cn.scale_poly(&h1()), &[GaussRat::zero(), imag(-1, 4)], 2, 0);
    let t4 = fraction(vec![cp.scale_poly(&h1()).scale(&imag(1, 8))], 2, 0);
    // −(2+iξₙ)/4 · c(ξ′)c(dxₙ)·(h₁/2)c(ξ′) = −(2+iξₙ)·h₁·s/8
    let t5 = elem_over(&sh1, &[rat(-1, 4), imag(-1, 8)], 2, 0);
    total(&[t1, t2, t3, t4, t5])
}

/// Second group `B₂` of `π⁺σ₋₂ = B₁ − B₂`:
/// `(h₁/2)[ c(dxₙ)/(4i(ξₙ−i)) + (c(dxₙ)−i·c(ξ′))/(8(ξₙ−i)²)
///          + (3ξₙ−7i)(i·c(ξ′)−c(dxₙ))/(8(ξₙ−i)³) ]`.
pub fn second_symbol_proj_second_part() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let t1 = fraction(vec![cn.scale(&imag(-1, 4))], 1, 0);
    let t2 = fraction(
        vec![cn.scale(&rat(1, 8)).add(&cp.scale(&imag(-1, 8)))],
        2,
        0,
    );
    let swing = cp.scale(&imag(1, 1)).sub(&cn); // i·c(ξ′) − c(dxₙ)
    let t3 = elem_over(&swing, &[imag(-7, 8), rat(3, 8)], 3, 0);
    total(&[t1, t2, t3]).scale_poly(&h1().scale(&rat(1, 2)))
}

/// `∂_{ξₙ}B₁`:
/// `h₁(−iξₙ−3)c(ξ′)c(dxₙ)c(ξ′)/(4(ξₙ−i)³) + i·h₁·c(ξ′)/(ξₙ−i)³
///  + h₁(iξₙ−1)c(dxₙ)/(4(ξₙ−i)³) − i·∂_{xₙ}c(ξ′)/(2(ξₙ−i)³)
///  + (iξₙ+3)c(ξ′)c(dxₙ)∂_{xₙ}c(ξ′)/(4(ξₙ−i)³)`.
pub fn d_xin_second_symbol_proj_first_part() -> RatXi {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let sh1 = cp.mul(&cn).mul(&cp).scale_poly(&h1());
    let t1 = elem_over(&sh1, &[rat(-3, 4), imag(-1, 4)], 3, 0);
    let t2 = fraction(vec![cp.scale_poly(&h1()).scale(&imag(1, 1))], 3, 0);
    let t3 = elem_over(&cn.scale_poly(&h1()), &[rat(-1, 4), imag(1, 4)], 3, 0);
    let t4 = fraction(vec![cp.scale_poly(&h1()).scale(&imag(-1, 4))], 3, 0);
    let t5 = elem_over(&sh1, &[rat(3, 8), imag(1, 8)], 3, 0);
    total(&[t1, t2, t3, t4, t5])
}

/// `∂_{ξₙ}B₂`:
/// `h₁(−2iξₙ−8)c(ξ′)/(8(ξₙ−i)⁴) + h₁(iξₙ²+4ξₙ−9i)c(dxₙ)/(8(ξₙ−i)⁴)`.
pub fn d_xin_second_symbol_proj_second_part() -> RatXi {
    let cp = c_xi_prime().scale_poly(&h1());
    let cn = c_dxn().scale_poly(&h1());
    let t1 = elem_over(&cp, &[rat(-1, 1), imag(-1, 4)], 4, 0);
    let t2 = elem_over(&cn, &[imag(-9, 8), rat(1, 2), imag(1, 8)], 4, 0);
    total(&[t1, t2])
}

// ---------------------------------------------------------------------------
// Order −2 and order −3 symbols at the base point
// ---------------------------------------------------------------------------

/// `σ₋₂` at the base point, restricted:
/// `−h₁·c(ξ)c(dxₙ)c(ξ)/(1+ξₙ²)² + c(ξ)c(dxₙ)∂_{xₙ}c(ξ′)/(1+ξₙ²)²
///  − h₁·c(ξ)c(dxₙ)c(ξ)/(1+ξₙ²)³`.
pub fn second_symbol_at_origin() -> RatXi {
    let c = c_xi_full();
    let n = elem_sym(c_dxn());
    let dp = elem_sym(dxn_c_xi_prime());
    let cnc = chain(&[&c, &n, &c]);
    let t1 = cnc.scale_poly(&h1().neg()).mul(&inv_q(2)).expect("fixture");
    let t2 = chain(&[&c, &n, &dp]).mul(&inv_q(2)).expect("fixture");
    let t3 = cnc.scale_poly(&h1().neg()).mul(&inv_q(3)).expect("fixture");
    total(&[t1, t2, t3])
}

/// Spin-connection group of `∂_{xᵢ}σ₋₂`:
/// `(1/8)Σ R_{βisα}·c(ξ)c(Ẽ_β)c(Ẽ_s)c(Ẽ_α)c(ξ)/(1+ξₙ²)²`.
pub fn d_x_second_symbol_block(i: u8) -> RatXi {
    let c = c_xi_full();
    let mut block = CliffElem::zero();
    for b in 1..=4u8 {
        for s in 1..=4u8 {
            for a in 1..=4u8 {
                let w = curv(b, i, s, a);
                if w.is_zero() {
                    continue;
                }
                block = block.add(
                    &CliffElem::gen(b).mul(&CliffElem::gen(s)).mul(&CliffElem::gen(a)).scale_poly(&w),
                );
            }
        }
    }
    chain(&[&c, &elem_sym(block), &c])
        .scale(&rat(1, 8))
        .mul(&inv_q(2))
        .expect("fixture")
}

/// Mixed-curvature group of `∂_{xᵢ}σ₋₂`:
/// `(1/6)Σ ξ_l(R_{tilj}+R_{tjli})·c(ξ)c(dxⱼ)c(Ẽ_t)/(1+ξₙ²)²`.
pub fn d_x_second_symbol_mixed(i: u8) -> RatXi {
    let c = c_xi_full();
    let mut terms = Vec::new();
    for j in 1..=4u8 {
        let mut mixed = CliffElem::zero();
        for l in 1..=4u8 {
            for t in 1..=4u8 {
                let w = xi(l).mul(&curv(t, i, l, j).add(&curv(t, j, l, i)));
                if w.is_zero() {
                    continue;
                }
                mixed = mixed.add(&CliffElem::gen(j).mul(&CliffElem::gen(t)).scale_poly(&w));
            }
        }
        terms.push(
            chain(&[&c, &elem_sym(mixed)])
                .scale(&rat(1, 6))
                .mul(&inv_q(2))
                .expect("fixture"),
        );
    }
    total(&terms)
}

/// Sectional-moment group of `∂_{xᵢ}σ₋₂`:
/// `(1/3)Σ (R_{iαjβ}+R_{iβjα})ξ_αξ_β·c(ξ)c(dxⱼ)c(ξ)/(1+ξₙ²)³`.
pub fn d_x_second_symbol_weighted(i: u8) -> RatXi {
    let c = c_xi_full();
    let mut terms = Vec::new();
    for j in 1..=4u8 {
        let mut w = Poly::zero();
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                w = w.add(&curv(i, a, j, b).add(&curv(i, b, j, a)).mul(&xi(a)).mul(&xi(b)));
            }
        }
        if w.is_zero() {
            continue;
        }
        terms.push(
            chain(&[&c, &elem_sym(CliffElem::gen(j)), &c])
                .scale_poly(&w)
                .scale(&rat(1, 3))
                .mul(&inv_q(3))
                .expect("fixture"),
        );
    }
    total(&terms)
}

/// Tangential derivative `∂_{xᵢ}σ₋₂` at the base point, restricted — the sum
/// of its three displayed groups.
pub fn d_x_second_symbol(i: u8) -> RatXi {
    total(&[
        d_x_second_symbol_block(i),
        d_x_second_symbol_mixed(i),
        d_x_second_symbol_weighted(i),
    ])
}

/// Normal derivative `∂_{xₙ}σ₋₂` at the base point, restricted:
/// `(−h₁/(1+ξₙ²)² − h₁/(1+ξₙ²)³)·∂_{xₙ}c(ξ′)c(dxₙ)c(ξ)
///  + [(h₁²−h₂)/(1+ξₙ²)² + (2h₁²−h₂)/(1+ξₙ²)³ + 3h₁²/(1+ξₙ²)⁴]·c(ξ)c(dxₙ)c(ξ)
///  + (−h₁/(1+ξₙ²)² − 3h₁/(1+ξₙ²)³)·c(ξ)c(dxₙ)∂_{xₙ}c(ξ′)
///  + ∂_{xₙ}c(ξ′)c(dxₙ)∂_{xₙ}c(ξ′)/(1+ξₙ²)²
///  + (¾h₁²−½h₂)·c(ξ)c(dxₙ)c(ξ′)/(1+ξₙ²)³`.
///
/// The display exceeds the recursion-derived entry by the final
/// (¾h₁²−½h₂) term rewritten as (¾h₁²−½h₂)·ξₙ²(ξₙc(ξ′)−c(dxₙ))/(1+ξₙ²)³ —
/// see `symbol_displays_match_recursion`.
pub fn d_xn_second_symbol() -> RatXi {
    let c = c_xi_full();
    let n = elem_sym(c_dxn());
    let dp = elem_sym(dxn_c_xi_prime());
    let cp = elem_sym(c_xi_prime());
    let dnc = chain(&[&dp, &n, &c]);
    let cnc = chain(&[&c, &n, &c]);
    let cnd = chain(&[&c, &n, &dp]);
    let dnd = chain(&[&dp, &n, &dp]);
    let cncp = chain(&[&c, &n, &cp]);
    let h1n = h1().neg();
    let t1 = total(&[
        dnc.scale_poly(&h1n).mul(&inv_q(2)).expect("fixture"),
        dnc.scale_poly(&h1n).mul(&inv_q(3)).expect("fixture"),
    ]);
    let t2 = total(&[
        cnc.scale_poly(&h1_sq().sub(&h2())).mul(&inv_q(2)).expect("fixture"),
        cnc.scale_poly(&h1_sq().scale(&rat(2, 1)).sub(&h2())).mul(&inv_q(3)).expect("fixture"),
        cnc.scale_poly(&h1_sq().scale(&rat(3, 1))).mul(&inv_q(4)).expect("fixture"),
    ]);
    let t3 = total(&[
        cnd.scale_poly(&h1n).mul(&inv_q(2)).expect("fixture"),
        cnd.scale_poly(&h1n.scale(&rat(3, 1))).mul(&inv_q(3)).expect("fixture"),
    ]);
    let t4 = dnd.mul(&inv_q(2)).expect("fixture");
    let t5 = cncp
        .scale_poly(&h1_sq().scale(&rat(3, 4)).sub(&h2().scale(&rat(1, 2))))
        .mul(&inv_q(3))
        .expect("fixture");
    total(&[t1, t2, t3, t4, t5])
}

/// `σ₋₃` at the base point, restricted — the eleven-term display.
///
/// The display inherits the `d_xn_second_symbol` divergence through the
/// −σ₋₁c(dxₙ)∂_{xₙ}σ₋₂ term of the recursion and agrees with the recursion
/// everywhere else — see `symbol_displays_match_recursion`.
pub fn third_symbol_at_origin() -> RatXi {
    let c = c_xi_full();
    let n = elem_sym(c_dxn());
    let dp = elem_sym(dxn_c_xi_prime());
    let cp = elem_sym(c_xi_prime());
    let cnc = chain(&[&c, &n, &c]);
    let cncnc = chain(&[&cnc, &n, &c]);
    let cncnd = chain(&[&cnc, &n, &dp]);
    let cndnc = chain(&[&c, &n, &dp, &n, &c]);
    let cndnd = chain(&[&c, &n, &dp, &n, &dp]);
    let cncncp = chain(&[&cnc, &n, &cp]);
    let mih1sq = h1_sq().scale(&imag(-1, 1));
    let ih1 = h1().scale(&imag(1, 1));
    let mut terms = vec![
        // from the normal-sector first derivative of the order −2 recursion
        cncnc.scale_poly(&mih1sq).mul(&inv_q(3)).expect("fixture"),
        cncnd.scale_poly(&ih1).mul(&inv_q(3)).expect("fixture"),
        cncnc.scale_poly(&mih1sq).mul(&inv_q(4)).expect("fixture"),
    ];
    // tangential-sector curvature blocks
    for i in 1..=4u8 {
        let ei = elem_sym(CliffElem::gen(i));
        let mut block = CliffElem::zero();
        for b in 1..=4u8 {
            for s in 1..=4u8 {
                for a in 1..=4u8 {
                    let w = curv(b, i, s, a);
                    if w.is_zero() {
                        continue;
                    }
                    block = block.add(
                        &CliffElem::gen(b)
                            .mul(&CliffElem::gen(s))
                            .mul(&CliffElem::gen(a))
                            .scale_poly(&w),
                    );
                }
            }
        }
        terms.push(
            chain(&[&c, &ei, &c, &elem_sym(block), &c])
                .scale(&imag(-1, 8))
                .mul(&inv_q(3))
                .expect("fixture"),
        );
        for j in 1..=4u8 {
            let mut mixed = CliffElem::zero();
            for l in 1..=4u8 {
                for t in 1..=4u8 {
                    let w = xi(l).mul(&curv(t, i, l, j).add(&curv(t, j, l, i)));
                    if w.is_zero() {
                        continue;
                    }
                    mixed = mixed.add(&CliffElem::gen(j).mul(&CliffElem::gen(t)).scale_poly(&w));
                }
            }
            terms.push(
                chain(&[&c, &ei, &c, &elem_sym(mixed)])
                    .scale(&imag(-1, 6))
                    .mul(&inv_q(3))
                    .expect("fixture"),
            );
            let mut w = Poly::zero();
            for a in 1..=4u8 {
                for b in 1..=4u8 {
                    w = w.add(&curv(i, a, j, b).add(&curv(i, b, j, a)).mul(&xi(a)).mul(&xi(b)));
                }
            }
            if !w.is_zero() {
                terms.push(
                    chain(&[&c, &ei, &c, &elem_sym(CliffElem::gen(j)), &c])
                        .scale_poly(&w)
                        .scale(&imag(-1, 3))
                        .mul(&inv_q(4))
                        .expect("fixture"),
                );
            }
        }
    }
    // from the normal derivative of the order −2 symbol
    terms.push(total(&[
        cndnc.scale_poly(&ih1).mul(&inv_q(3)).expect("fixture"),
        cndnc.scale_poly(&ih1).mul(&inv_q(4)).expect("fixture"),
    ]));
    terms.push(total(&[
        cncnc
            .scale_poly(&h1_sq().sub(&h2()).scale(&imag(-1, 1)))
            .mul(&inv_q(3))
            .expect("fixture"),
        cncnc
            .scale_poly(&h1_sq().scale(&rat(2, 1)).sub(&h2()).scale(&imag(-1, 1)))
            .mul(&inv_q(4))
            .expect("fixture"),
        cncnc
            .scale_poly(&h1_sq().scale(&imag(-3, 1)))
            .mul(&inv_q(5))
            .expect("fixture"),
    ]));
    terms.push(total(&[
        cncnd.scale_poly(&ih1).mul(&inv_q(3)).expect("fixture"),
        cncnd.scale_poly(&ih1.scale(&rat(3, 1))).mul(&inv_q(4)).expect("fixture"),
    ]));
    terms.push(cndnd.scale(&imag(-1, 1)).mul(&inv_q(3)).expect("fixture"));
    terms.push(
        cncncp
            .scale_poly(&h1_sq().scale(&rat(3, 4)).sub(&h2().scale(&rat(1, 2))).scale(&imag(-1, 1)))
            .mul(&inv_q(4))
            .expect("fixture"),
    );
    total(&terms)
}

// ---------------------------------------------------------------------------
// Trace identities
// ---------------------------------------------------------------------------

/// Elementary two-factor trace values on `|ξ′| = 1` (after the normal-form
/// substitution `Σξᵢ² = 1`): pairs of (label, product, expected trace).
pub fn elementary_trace_table() -> Vec<(&'static str, CliffElem, Poly)> {
    let cp = c_xi_prime();
    let cn = c_dxn();
    let dp = dxn_c_xi_prime();
    vec![
        ("tr[c(ξ′)c(dxₙ)]", cp.mul(&cn), Poly::zero()),
        ("tr[c(dxₙ)c(dxₙ)]", cn.mul(&cn), Poly::constant(rat(-4, 1))),
        ("tr[c(ξ′)c(ξ′)]", cp.mul(&cp), Poly::constant(rat(-4, 1))),
        ("tr[∂ₓₙc(ξ′)·c(dxₙ)]", dp.mul(&cn), Poly::zero()),
        ("tr[∂ₓₙc(ξ′)·c(ξ′)]", dp.mul(&cp), h1().scale(&rat(-2, 1))),
        ("tr[∂ₓₙc(ξ′)·∂ₓₙc(ξ′)]", dp.mul(&dp), h1_sq().neg()),
    ]
}

/// Six-factor curvature-weighted trace identities.  Each entry is
/// (label, untraced product expression, stored traced value); the engine
/// applies its own trace to the expression and compares.
pub fn curvature_trace_identities() -> Vec<(&'static str, RatXi, RatXi)> {
    let c = c_xi_full();
    let cp = elem_sym(c_xi_prime());
    let mut out = Vec::new();

    // Σ R_{βisα} tr[c(dxᵢ)c(ξ)c(Ẽ_β)c(Ẽ_s)c(Ẽ_α)c(ξ)]
    //   = 8(1+ξₙ²)·s_∂ + 16 Σ R_{αisα}ξᵢξ_s,
    // with s_∂ kept in its raw diagonal form 2 Σ_{t<l} R_{tltl} so both sides
    // live in the same polynomial ring (the s_∂ generator is only introduced
    // by the final curvature contraction).
    let mut s_bdry_diag = Poly::zero();
    for t in 1..=4u8 {
        for l in (t + 1)..=4u8 {
            s_bdry_diag = s_bdry_diag.add(&curv(t, l, t, l).scale(&rat(2, 1)));
        }
    }
    let mut lhs = RatXi::zero_restricted();
    for i in 1..=4u8 {
        let mut block = CliffElem::zero();
        for b in 1..=4u8 {
            for s in 1..=4u8 {
                for a in 1..=4u8 {
                    let w = curv(b, i, s, a);
                    if w.is_zero() {
                        continue;
                    }
                    block = block.add(
                        &CliffElem::gen(b)
                            .mul(&CliffElem::gen(s))
                            .mul(&CliffElem::gen(a))
                            .scale_poly(&w),
                    );
                }
            }
        }
        lhs = lhs
            .add(&chain(&[&elem_sym(CliffElem::gen(i)), &c, &elem_sym(block), &c]))
            .expect("fixture");
    }
    let mut moment_a = Poly::zero();
    for a in 1..=4u8 {
        for i in 1..=4u8 {
            for s in 1..=4u8 {
                moment_a = moment_a.add(&curv(a, i, s, a).mul(&xi(i)).mul(&xi(s)));
            }
        }
    }
    let rhs = poly_fraction(
        vec![
            s_bdry_diag.scale(&rat(8, 1)).add(&moment_a.scale(&rat(16, 1))),
            Poly::zero(),
            s_bdry_diag.scale(&rat(8, 1)),
        ],
        0,
        0,
    );
    out.push(("connection-block trace", lhs, rhs));

    // Σ ξ_l(R_{tilj}+R_{tjli}) tr[c(dxᵢ)c(ξ)c(dxⱼ)c(Ẽ_t)] = 16 Σ R_{tilt}ξ_lξᵢ
    let mut lhs = RatXi::zero_restricted();
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            for l in 1..=4u8 {
                for t in 1..=4u8 {
                    let w = xi(l).mul(&curv(t, i, l, j).add(&curv(t, j, l, i)));
                    if w.is_zero() {
                        continue;
                    }
                    lhs = lhs
                        .add(
                            &chain(&[
                                &elem_sym(CliffElem::gen(i)),
                                &c,
                                &elem_sym(CliffElem::gen(j).mul(&CliffElem::gen(t))),
                            ])
                            .scale_poly(&w),
                        )
                        .expect("fixture");
                }
            }
        }
    }
    let mut moment_b = Poly::zero();
    for t in 1..=4u8 {
        for i in 1..=4u8 {
            for l in 1..=4u8 {
                moment_b = moment_b.add(&curv(t, i, l, t).mul(&xi(l)).mul(&xi(i)));
            }
        }
    }
    let rhs = poly_fraction(vec![moment_b.scale(&rat(16, 1))], 0, 0);
    out.push(("mixed-curvature trace", lhs, rhs));

    // Σ R_{βisα}ξᵢ tr[c(ξ′)c(ξ)c(Ẽ_β)c(Ẽ_s)c(Ẽ_α)c(ξ)] = 8(1−ξₙ²)Σ R_{αisα}ξᵢξ_s
    let mut lhs = RatXi::zero_restricted();
    for i in 1..=4u8 {
        let mut block = CliffElem::zero();
        for b in 1..=4u8 {
            for s in 1..=4u8 {
                for a in 1..=4u8 {
                    let w = curv(b, i, s, a).mul(&xi(i));
                    if w.is_zero() {
                        continue;
                    }
                    block = block.add(
                        &CliffElem::gen(b)
                            .mul(&CliffElem::gen(s))
                            .mul(&CliffElem::gen(a))
                            .scale_poly(&w),
                    );
                }
            }
        }
        lhs = lhs.add(&chain(&[&cp, &c, &elem_sym(block), &c])).expect("fixture");
    }
    let rhs = poly_fraction(
        vec![moment_a.scale(&rat(8, 1)), Poly::zero(), moment_a.scale(&rat(-8, 1))],
        0,
        0,
    );
    out.push(("weighted connection-block trace", lhs, rhs));

    // Σ (R_{iαjβ}+R_{iβjα})ξᵢξ_αξ_β tr[c(ξ′)c(ξ)c(dxⱼ)c(ξ)]
    //   = 8(1−ξₙ²)Σ R_{iαjβ}ξᵢξⱼξ_αξ_β
    let mut lhs = RatXi::zero_restricted();
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            let mut w = Poly::zero();
            for a in 1..=4u8 {
                for b in 1..=4u8 {
                    w = w.add(&curv(i, a, j, b).add(&curv(i, b, j, a)).mul(&xi(a)).mul(&xi(b)));
                }
            }
            let w = w.mul(&xi(i));
            if w.is_zero() {
                continue;
            }
            lhs = lhs
                .add(&chain(&[&cp, &c, &elem_sym(CliffElem::gen(j)), &c]).scale_poly(&w))
                .expect("fixture");
        }
    }
    let mut moment_d = Poly::zero();
    for i in 1..=4u8 {
        for a in 1..=4u8 {
            for j in 1..=4u8 {
                for b in 1..=4u8 {
                    moment_d = moment_d
                        .add(&curv(i, a, j, b).mul(&xi(i)).mul(&xi(j)).mul(&xi(a)).mul(&xi(b)));
                }
            }
        }
    }
    let rhs = poly_fraction(
        vec![moment_d.scale(&rat(8, 1)), Poly::zero(), moment_d.scale(&rat(-8, 1))],
        0,
        0,
    );
    out.push(("sectional-moment trace", lhs, rhs));

    out
}

// ---------------------------------------------------------------------------
// Per-case trace densities
// ---------------------------------------------------------------------------

/// Case 2 trace density `tr[π⁺∂²_{xₙ}σ₋₁ · ∂³_{ξₙ}σ₋₁]`, as recomputed from
/// the two stored factors (each of which matches its own display):
/// `h₁²·(51iξₙ⁵+117ξₙ⁴−150iξₙ³−162ξₙ²+87iξₙ+9)/((ξₙ−i)³(1+ξₙ²)⁴)
///  + h₂·(−54iξₙ⁴−72ξₙ³+84iξₙ²+72ξₙ−6i)/((ξₙ−i)²(1+ξₙ²)⁴)`.
///
/// The displayed trace differs — see [`case2_trace_density_displayed`] and
/// [`case2_trace_gap`].
pub fn case2_trace_density() -> RatXi {
    total(&[case2_trace_h1sq_part(), case2_trace_h2_part()])
}

fn case2_trace_h1sq_part() -> RatXi {
    scalar_fraction(
        &[rat(9, 1), imag(87, 1), rat(-162, 1), imag(-150, 1), rat(117, 1), imag(51, 1)],
        7,
        4,
    )
    .scale_poly(&h1_sq())
}

fn case2_trace_h2_part() -> RatXi {
    scalar_fraction(&[imag(-6, 1), rat(72, 1), imag(84, 1), rat(-72, 1), imag(-54, 1)], 6, 4)
        .scale_poly(&h2())
}

/// Case 2 trace density exactly as displayed in the reference:
/// `h₁²·3(33ξₙ⁵−75iξₙ⁴−94ξₙ³+90iξₙ²+57ξₙ−3i)/(2(ξₙ−i)³(1+ξₙ²)⁴)
///  + h₂·6(−9ξₙ⁴+12iξₙ³+14ξₙ²−12iξₙ−1)/(2(ξₙ−i)²(1+ξₙ²)⁴)`.
///
/// This display is not the trace of the displayed factors by any scalar
/// factor.  The surrounding evaluation also carries prefactor −1/6 where the
/// residue formula carries i/6, so the display is compared to the recomputed
/// trace in matching units as i × displayed: the h₂ groups then agree up to a
/// factor 2 that the displayed residue evaluation drops again (making the
/// published h₂ value −3/8 the faithful one), while the h₁² groups differ by
/// [`case2_trace_gap`].  Integrated faithfully, the recomputed trace gives
/// (9/16)h₁² − (3/8)h₂ against the published (29/64)h₁² − (3/8)h₂.
pub fn case2_trace_density_displayed() -> RatXi {
    total(&[case2_displayed_h1sq_part(), case2_displayed_h2_part()])
}

fn case2_displayed_h1sq_part() -> RatXi {
    scalar_fraction(
        &[
            imag(-9, 2),
            rat(171, 2),
            imag(135, 1),
            rat(-141, 1),
            imag(-225, 2),
            rat(99, 2),
        ],
        7,
        4,
    )
    .scale_poly(&h1_sq())
}

fn case2_displayed_h2_part() -> RatXi {
    scalar_fraction(
        &[rat(-3, 1), imag(-36, 1), rat(42, 1), imag(36, 1), rat(-27, 1)],
        6,
        4,
    )
    .scale_poly(&h2())
}

/// The h₁² gap between the recomputed case-2 trace and i× its display:
/// `(3/2)i(ξₙ−3i)(ξₙ⁴−6ξₙ²+1)·h₁²/((ξₙ−i)³(1+ξₙ²)⁴)` — exactly half of the
/// `c(dxₙ)⊗c(dxₙ)` cross term of the trace, so the display behaves as if
/// that cross term had been halved.
pub fn case2_trace_gap() -> RatXi {
    scalar_fraction(
        &[rat(9, 2), imag(3, 2), rat(-27, 1), imag(-9, 1), rat(9, 2), imag(3, 2)],
        7,
        4,
    )
    .scale_poly(&h1_sq())
}

/// Case 3 trace density `Σ_{|α|=2} tr[∂^α_{ξ′}π⁺σ₋₁ · ∂^α_{x′}∂_{ξₙ}σ₋₁]`:
/// `Σ R_{tjlt}ξ_lξⱼ·(−4iξₙ²−8ξₙ)/(3(ξₙ−i)²(1+ξₙ²)²)
///  + Σ R_{tilt}ξ_lξ_t·(−4iξₙ⁴−8ξₙ³−32iξₙ²−40ξₙ+4i)/(3(ξₙ−i)²(1+ξₙ²)³)`.
///
/// The two groups carry different diagonal moments: the first sums over the
/// inner index pair, the second over the outer pair.
///
/// Integrates to exactly twice the recomputed product of its displayed
/// factors — see `case3_recomputed_value_and_divergence_from_display`.
pub fn case3_trace_density() -> RatXi {
    let mut inner_moment = Poly::zero();
    for t in 1..=4u8 {
        for j in 1..=4u8 {
            for l in 1..=4u8 {
                inner_moment = inner_moment.add(&curv(t, j, l, t).mul(&xi(l)).mul(&xi(j)));
            }
        }
    }
    let mut outer_moment = Poly::zero();
    for t in 1..=4u8 {
        for i in 1..=4u8 {
            for l in 1..=4u8 {
                outer_moment = outer_moment.add(&curv(t, i, l, i).mul(&xi(l)).mul(&xi(t)));
            }
        }
    }
    let g1 = scalar_fraction(&[GaussRat::zero(), rat(-8, 3), imag(-4, 3)], 4, 2)
        .scale_poly(&inner_moment);
    let g2 = scalar_fraction(
        &[imag(4, 3), rat(-40, 3), imag(-32, 3), rat(-8, 3), imag(-4, 3)],
        5,
        3,
    )
    .scale_poly(&outer_moment);
    total(&[g1, g2])
}

/// Case 4 trace density `tr[∂_{xₙ}∂_{ξₙ}π⁺σ₋₁ · ∂²_{ξₙ}∂_{xₙ}σ₋₁]`:
/// `h₁²·12(−ξₙ⁵+5iξₙ⁴+10ξₙ³−10iξₙ²−5ξₙ+i)/((ξₙ−i)²(1+ξₙ²)⁵)`.
pub fn case4_trace_density() -> RatXi {
    scalar_fraction(
        &[
            imag(12, 1),
            rat(-60, 1),
            imag(-120, 1),
            rat(120, 1),
            imag(60, 1),
            rat(-12, 1),
        ],
        7,
        5,
    )
    .scale_poly(&h1_sq())
}

/// Case 6 pairing-correction trace `tr[∂³_{ξₙ}σ₋₁ · ∂²_{xₙ}σ₋₁]`:
/// `h₁²·24ξₙ(5−3ξₙ²)/(1+ξₙ²)⁵ + h₂·24ξₙ(3ξₙ²−5)/(1+ξₙ²)⁵`.
pub fn case6_correction_trace() -> RatXi {
    let p1 = scalar_fraction(&[GaussRat::zero(), rat(120, 1), GaussRat::zero(), rat(-72, 1)], 5, 5)
        .scale_poly(&h1_sq());
    let p2 = scalar_fraction(&[GaussRat::zero(), rat(-120, 1), GaussRat::zero(), rat(72, 1)], 5, 5)
        .scale_poly(&h2());
    total(&[p1, p2])
}

/// Case 7 trace density `tr[∂_{xₙ}π⁺σ₋₁ · ∂²_{ξₙ}σ₋₂]`:
/// `h₁²·3(−2ξₙ⁴+3iξₙ³−3ξₙ²+7iξₙ+3)/(−(ξₙ−i)⁴(1+ξₙ²)³)`.
///
/// Differs from the recomputed product pointwise but integrates to the same
/// case value — see `case7_recomputed_value_matches_display`.
pub fn case7_trace_density() -> RatXi {
    scalar_fraction(
        &[rat(-9, 1), imag(-21, 1), rat(9, 1), imag(-9, 1), rat(6, 1)],
        7,
        3,
    )
    .scale_poly(&h1_sq())
}

/// Case 8 trace density `Σ_{|α|=1} tr[∂^α_{ξ′}π⁺σ₋₁ · ∂^α_{x′}∂_{ξₙ}σ₋₂]`:
/// `−s_∂/(2(ξₙ−i)(1+ξₙ²))
///  + Σ R_{αilα}ξ_lξᵢ·(3ξₙ³+(22−9i)ξₙ²−(21+44i)ξₙ−22+15i)/(−6(ξₙ−i)³(1+ξₙ²)²)`.
pub fn case8_trace_density() -> RatXi {
    let t1 = scalar_fraction(&[rat(-1, 2)], 2, 1).scale_poly(&s_bdry());
    let mut moment = Poly::zero();
    for a in 1..=4u8 {
        for i in 1..=4u8 {
            for l in 1..=4u8 {
                moment = moment.add(&curv(a, i, l, a).mul(&xi(l)).mul(&xi(i)));
            }
        }
    }
    let t2 = scalar_fraction(
        &[
            cplx(22, 6, -15, 6),
            cplx(21, 6, 44, 6),
            cplx(-22, 6, 9, 6),
            rat(-1, 2),
        ],
        5,
        2,
    )
    .scale_poly(&moment);
    total(&[t1, t2])
}

/// Case 9 trace density `tr[∂²_{ξₙ}π⁺σ₋₁ · ∂_{xₙ}σ₋₂]` (the ∂ξₙ-shifted
/// factor pair, which is the one whose trace the reference displays):
/// `h₁²(4iξₙ⁶+4ξₙ⁵+12iξₙ⁴+19ξₙ³+13iξₙ²+39ξₙ−19i)/((ξₙ−i)³(1+ξₙ²)⁴)
///  − 2h₂(2iξₙ⁴+4ξₙ³+2iξₙ²+9ξₙ−5i)/((ξₙ−i)³(1+ξₙ²)³)`.
pub fn case9_trace_density() -> RatXi {
    let p1 = scalar_fraction(
        &[
            imag(-19, 1),
            rat(39, 1),
            imag(13, 1),
            rat(19, 1),
            imag(12, 1),
            rat(4, 1),
            imag(4, 1),
        ],
        7,
        4,
    )
    .scale_poly(&h1_sq());
    let p2 = scalar_fraction(
        &[imag(10, 1), rat(-18, 1), imag(-4, 1), rat(-8, 1), imag(-4, 1)],
        6,
        3,
    )
    .scale_poly(&h2());
    total(&[p1, p2])
}

/// Case 10 pairing-correction trace `tr[∂_{xₙ}σ₋₂ · ∂²_{ξₙ}σ₋₁]`:
/// `h₁²(8iξₙ⁵+8iξₙ³+36iξₙ)/(1+ξₙ²)⁵ + h₂(8iξₙ⁵+24iξₙ³+24iξₙ)/(1+ξₙ²)⁵`.
pub fn case10_correction_trace() -> RatXi {
    let p1 = scalar_fraction(
        &[GaussRat::zero(), imag(36, 1), GaussRat::zero(), imag(8, 1), GaussRat::zero(), imag(8, 1)],
        5,
        5,
    )
    .scale_poly(&h1_sq());
    let p2 = scalar_fraction(
        &[GaussRat::zero(), imag(24, 1), GaussRat::zero(), imag(24, 1), GaussRat::zero(), imag(8, 1)],
        5,
        5,
    )
    .scale_poly(&h2());
    total(&[p1, p2])
}

/// Case 12 pairing-correction trace `tr[σ₋₂ · ∂²_{ξₙ}∂_{xₙ}σ₋₁]`:
/// `h₁²·30iξₙ/(1+ξₙ²)⁴`.
pub fn case12_correction_trace() -> RatXi {
    scalar_fraction(&[GaussRat::zero(), imag(30, 1)], 4, 4).scale_poly(&h1_sq())
}

/// Case 13 partial traces: `tr[∂_{ξₙ}B₁·σ₋₂]` and `tr[∂_{ξₙ}B₂·σ₋₂]`.
///
/// The second partial recomputes exactly from the displayed factors; the
/// first carries the full case-13 divergence — see
/// `case13_recomputed_value_and_divergence_from_display`.
pub fn case13_partial_traces() -> (RatXi, RatXi) {
    let first = scalar_fraction(
        &[
            rat(-9, 4),
            imag(-37, 4),
            rat(5, 2),
            imag(-13, 2),
            rat(5, 2),
            imag(-1, 2),
        ],
        6,
        3,
    )
    .scale_poly(&h1_sq());
    let second = scalar_fraction(
        &[
            imag(-27, 4),
            rat(17, 1),
            imag(35, 4),
            rat(6, 1),
            imag(6, 1),
            rat(-2, 1),
            imag(-1, 2),
        ],
        7,
        3,
    )
    .scale_poly(&h1_sq());
    (first, second)
}

/// Case 13 combined trace density `tr[∂_{ξₙ}π⁺σ₋₂ · σ₋₂]`:
/// `h₁²(16ξₙ⁵−60iξₙ⁴−40ξₙ³−82iξₙ²−114ξₙ+36i)/(4(ξₙ−i)⁴(1+ξₙ²)³)`.
///
/// Integrates to (−821/256)·h₁² while the recomputed product gives
/// (−111/32)·h₁² — see `case13_recomputed_value_and_divergence_from_display`.
pub fn case13_trace_density() -> RatXi {
    scalar_fraction(
        &[
            imag(9, 1),
            rat(-57, 2),
            imag(-41, 2),
            rat(-10, 1),
            imag(-15, 1),
            rat(4, 1),
        ],
        7,
        3,
    )
    .scale_poly(&h1_sq())
}

/// Case 14 trace density `tr[∂_{ξₙ}π⁺σ₋₁ · σ₋₃]`:
/// `−h₁²(−8ξₙ⁷+18iξₙ⁶−12ξₙ⁵+61iξₙ⁴+26ξₙ³+66iξₙ²+78ξₙ−25i)/(2(ξₙ−i)²(1+ξₙ²)⁵)
///  + h₂(−2ξₙ⁵+6iξₙ⁴+2ξₙ³+11iξₙ²+14ξₙ−5i)/((ξₙ−i)²(1+ξₙ²)⁴)
///  + s_∂(−ξₙ³−iξₙ²+ξₙ−i)/(2(ξₙ−i)²(1+ξₙ²)³)
///  + Σ R_{αilα}ξᵢξ_l·(iξₙ²+12ξₙ−11i)/(3(ξₙ−i)²(1+ξₙ²)³)`.
///
/// Integrates to (239/64, −27/16, 29/192) in (h₁², h₂, s∂) while the
/// recomputed product gives (209/64, −27/16, 5/48) from the displayed σ₋₃
/// and (215/64, −7/4, 5/48) from the recursion-derived σ₋₃ — see
/// `case14_recomputed_value_and_divergence_from_display`.
pub fn case14_trace_density() -> RatXi {
    let p1 = scalar_fraction(
        &[
            imag(25, 2),
            rat(-39, 1),
            imag(-33, 1),
            rat(-13, 1),
            imag(-61, 2),
            rat(6, 1),
            imag(-9, 1),
            rat(4, 1),
        ],
        7,
        5,
    )
    .scale_poly(&h1_sq());
    let p2 = scalar_fraction(
        &[imag(-5, 1), rat(14, 1), imag(11, 1), rat(2, 1), imag(6, 1), rat(-2, 1)],
        6,
        4,
    )
    .scale_poly(&h2());
    let p3 = scalar_fraction(&[imag(-1, 2), rat(1, 2), imag(-1, 2), rat(-1, 2)], 5, 3)
        .scale_poly(&s_bdry());
    let mut moment = Poly::zero();
    for a in 1..=4u8 {
        for i in 1..=4u8 {
            for l in 1..=4u8 {
                moment = moment.add(&curv(a, i, l, a).mul(&xi(i)).mul(&xi(l)));
            }
        }
    }
    let p4 = scalar_fraction(&[imag(-11, 3), rat(4, 1), imag(1, 3)], 5, 3).scale_poly(&moment);
    total(&[p1, p2, p3, p4])
}

/// Case 15 pairing-correction trace `tr[σ₋₃ · ∂_{ξₙ}σ₋₁]`, exactly as
/// displayed.  The `h₁²` group's last numerator term is printed `28ξₙ²`;
/// the corrected form ([`case15_correction_trace_corrected`]) has `28ξₙ`,
/// which is what actually integrates to zero.
pub fn case15_correction_trace_displayed() -> RatXi {
    let p1 = scalar_fraction(
        &[GaussRat::zero(), GaussRat::zero(), rat(28, 1), rat(24, 1), GaussRat::zero(), rat(8, 1)],
        5,
        5,
    )
    .scale_poly(&h1_sq());
    total(&[p1, case15_correction_trace_tail()])
}

/// Case 15 pairing-correction trace with the `h₁²` slip repaired.
pub fn case15_correction_trace_corrected() -> RatXi {
    let p1 = scalar_fraction(
        &[GaussRat::zero(), rat(28, 1), GaussRat::zero(), rat(24, 1), GaussRat::zero(), rat(8, 1)],
        5,
        5,
    )
    .scale_poly(&h1_sq());
    total(&[p1, case15_correction_trace_tail()])
}

/// Shared `h₂`, `s_∂`, and curvature-moment groups of the case 15
/// correction trace.
fn case15_correction_trace_tail() -> RatXi {
    let p2 = scalar_fraction(&[GaussRat::zero(), rat(-8, 1), GaussRat::zero(), rat(-4, 1)], 4, 4)
        .scale_poly(&h2());
    let p3 = scalar_fraction(
        &[GaussRat::zero(), rat(1, 1), GaussRat::zero(), rat(4, 1), GaussRat::zero(), rat(-1, 1)],
        5,
        5,
    )
    .scale_poly(&s_bdry());
    let mut moment = Poly::zero();
    for a in 1..=4u8 {
        for i in 1..=4u8 {
            for l in 1..=4u8 {
                moment = moment.add(&curv(a, i, l, a).mul(&xi(i)).mul(&xi(l)));
            }
        }
    }
    let p4 = scalar_fraction(&[GaussRat::zero(), rat(20, 3)], 4, 4).scale_poly(&moment);
    total(&[p2, p3, p4])
}

// ---------------------------------------------------------------------------
// Vanishing normal integrals
// ---------------------------------------------------------------------------

/// A stored integrand displayed with the claim `∫ dξₙ = 0`.
#[derive(Clone, Debug)]
pub struct ZeroIntegralFixture {
    /// Where the integrand arises.
    pub label: &'static str,
    /// The integrand, as displayed.
    pub integrand: RatXi,
    /// Whether the displayed form really integrates to zero.  `false` marks
    /// the one known misprint; its repaired companion appears separately.
    pub vanishes_as_displayed: bool,
}

/// The displayed vanishing integrals from the four pairing-correction sites.
pub fn zero_integral_table() -> Vec<ZeroIntegralFixture> {
    let z = GaussRat::zero();
    vec![
        ZeroIntegralFixture {
            label: "pairing correction, normal second-derivative case (h₁² kernel)",
            integrand: scalar_fraction(&[z.clone(), rat(120, 1), z.clone(), rat(-72, 1)], 5, 5),
            vanishes_as_displayed: true,
        },
        ZeroIntegralFixture {
            label: "pairing correction, projected-normal case (h₁² kernel)",
            integrand: scalar_fraction(
                &[z.clone(), imag(36, 1), z.clone(), imag(8, 1), z.clone(), imag(8, 1)],
                5,
                5,
            ),
            vanishes_as_displayed: true,
        },
        ZeroIntegralFixture {
            label: "pairing correction, projected-normal case (h₂ kernel)",
            integrand: scalar_fraction(
                &[z.clone(), imag(24, 1), z.clone(), imag(24, 1), z.clone(), imag(8, 1)],
                5,
                5,
            ),
            vanishes_as_displayed: true,
        },
        ZeroIntegralFixture {
            label: "pairing correction, mixed normal case",
            integrand: scalar_fraction(&[z.clone(), imag(30, 1)], 4, 4),
            vanishes_as_displayed: true,
        },
        ZeroIntegralFixture {
            label: "pairing correction, third-symbol case (h₁² kernel, as displayed)",
            integrand: scalar_fraction(
                &[z.clone(), z.clone(), rat(28, 1), rat(24, 1), z.clone(), rat(8, 1)],
                5,
                5,
            ),
            vanishes_as_displayed: false,
        },
        ZeroIntegralFixture {
            label: "pairing correction, third-symbol case (h₁² kernel, corrected)",
            integrand: scalar_fraction(
                &[z.clone(), rat(28, 1), z.clone(), rat(24, 1), z.clone(), rat(8, 1)],
                5,
                5,
            ),
            vanishes_as_displayed: true,
        },
        ZeroIntegralFixture {
            label: "pairing correction, third-symbol case (h₂ kernel)",
            integrand: scalar_fraction(&[z.clone(), rat(-8, 1), z.clone(), rat(-4, 1)], 4, 4),
            vanishes_as_displayed: true,
        },
        ZeroIntegralFixture {
            label: "pairing correction, third-symbol case (s_∂ kernel)",
            integrand: scalar_fraction(
                &[z.clone(), rat(1, 1), z.clone(), rat(4, 1), z.clone(), rat(-1, 1)],
                5,
                5,
            ),
            vanishes_as_displayed: true,
        },
        ZeroIntegralFixture {
            label: "pairing correction, third-symbol case (curvature-moment kernel)",
            integrand: scalar_fraction(&[z, rat(20, 3)], 4, 4),
            vanishes_as_displayed: true,
        },
    ]
}

/// The exact value of the misprinted third-symbol `h₁²` kernel integral
/// (the even `28ξₙ²` term does not vanish): `35/32` in units of `π`.
pub fn misprinted_zero_integral_value() -> GaussRat {
    rat(35, 32)
}

// ---------------------------------------------------------------------------
// Case values, sums, and theorem coefficients
// ---------------------------------------------------------------------------

/// The density extracted from one boundary case: a linear combination of
/// `h₁²`, `h₂`, and `s_∂` in units of `π·Ω₃`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CaseDensity {
    /// Coefficient of `(h′(0))²`.
    pub h1_sq: GaussRat,
    /// Coefficient of `h″(0)`.
    pub h2: GaussRat,
    /// Coefficient of the boundary scalar curvature `s_∂`.
    pub s_boundary: GaussRat,
}

impl CaseDensity {
    /// The zero density.
    pub fn zero() -> Self {
        CaseDensity {
            h1_sq: GaussRat::zero(),
            h2: GaussRat::zero(),
            s_boundary: GaussRat::zero(),
        }
    }

    /// Build from the three coefficients.
    pub fn new(h1_sq: GaussRat, h2: GaussRat, s_boundary: GaussRat) -> Self {
        CaseDensity { h1_sq, h2, s_boundary }
    }

    /// True when all three coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.h1_sq.is_zero() && self.h2.is_zero() && self.s_boundary.is_zero()
    }

    /// Coefficient-wise sum.
    pub fn add(&self, rhs: &CaseDensity) -> CaseDensity {
        CaseDensity {
            h1_sq: &self.h1_sq + &rhs.h1_sq,
            h2: &self.h2 + &rhs.h2,
            s_boundary: &self.s_boundary + &rhs.s_boundary,
        }
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, rhs: &CaseDensity) -> CaseDensity {
        CaseDensity {
            h1_sq: &self.h1_sq - &rhs.h1_sq,
            h2: &self.h2 - &rhs.h2,
            s_boundary: &self.s_boundary - &rhs.s_boundary,
        }
    }

    /// Scale all three coefficients.
    pub fn scale(&self, c: &GaussRat) -> CaseDensity {
        CaseDensity {
            h1_sq: &self.h1_sq * c,
            h2: &self.h2 * c,
            s_boundary: &self.s_boundary * c,
        }
    }

    /// The equivalent polynomial `h1_sq·h₁² + h2·h₂ + s_boundary·s_∂`.
    pub fn to_poly(&self) -> Poly {
        h1_sq()
            .scale(&self.h1_sq)
            .add(&h2().scale(&self.h2))
            .add(&s_bdry().scale(&self.s_boundary))
    }
}

/// Stored per-case values in units of `π·Ω₃` (index 0 = case 1).
///
/// Case 3 is stored at its recomputed strength `s_∂/8·πΩ₃`; the reference
/// displays it as `s_∂/4·π³` (the same number, since `πΩ₃ = 2π³`), but its
/// own total uses `s_∂/4·πΩ₃` — see [`reference_sum_displayed`] and
/// [`case3_unit_conflict`].
pub fn reference_case_values() -> [CaseDensity; 15] {
    let z = GaussRat::zero();
    let c2 = CaseDensity::new(rat(29, 64), rat(-3, 8), z.clone());
    let c9 = CaseDensity::new(rat(-367, 128), rat(103, 64), z.clone());
    let c7 = CaseDensity::new(rat(39, 32), z.clone(), z.clone());
    let c14 = CaseDensity::new(rat(239, 64), rat(-27, 16), rat(29, 192));
    [
        CaseDensity::zero(),                                        // case 1
        c2.clone(),                                                 // case 2
        CaseDensity::new(z.clone(), z.clone(), rat(1, 8)),          // case 3
        CaseDensity::new(rat(-5, 16), z.clone(), z.clone()),        // case 4
        CaseDensity::zero(),                                        // case 5
        c2,                                                         // case 6
        c7.clone(),                                                 // case 7
        CaseDensity::new(z.clone(), z.clone(), cplx(3, 16, 3, 32)), // case 8
        c9.clone(),                                                 // case 9
        c9,                                                         // case 10
        CaseDensity::zero(),                                        // case 11
        c7,                                                         // case 12
        CaseDensity::new(rat(-821, 256), z.clone(), z.clone()),     // case 13
        c14.clone(),                                                // case 14
        c14,                                                        // case 15
    ]
}

/// The case 3 unit conflict: the displayed value is `(1/4)s_∂·π³`, i.e.
/// `(1/8)s_∂·πΩ₃`, but the displayed fifteen-case total counts it as
/// `(1/4)s_∂·πΩ₃`.  Returns (coefficient used by the displayed total,
/// recomputed coefficient), both in `πΩ₃` units.
pub fn case3_unit_conflict() -> (GaussRat, GaussRat) {
    (rat(1, 4), rat(1, 8))
}

/// The displayed fifteen-case total, in `πΩ₃` units:
/// `(399/256)h₁² − (29/32)h₂ + (71/96 + 3i/32)s_∂`.
pub fn reference_sum_displayed() -> CaseDensity {
    CaseDensity::new(rat(399, 256), rat(-29, 32), cplx(71, 96, 3, 32))
}

/// The fifteen-case total with case 3 at its recomputed strength:
/// `(399/256)h₁² − (29/32)h₂ + (59/96 + 3i/32)s_∂`.
pub fn reference_sum_recomputed() -> CaseDensity {
    CaseDensity::new(rat(399, 256), rat(-29, 32), cplx(59, 96, 3, 32))
}

/// The displayed boundary-volume form: `(1/16)∫(399/16·h₁² − 29/2·h₂ +
/// (71/6+3i/2)s_∂)·πΩ₃`; coefficients stored as displayed (πΩ₃/16 units).
pub fn reference_volume_form() -> CaseDensity {
    CaseDensity::new(rat(399, 16), rat(-29, 2), cplx(71, 6, 3, 2))
}

/// Final theorem coefficients: a combination of `K²`, `s_M`, and `s_∂` in
/// units of `π³/16`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TheoremCoefficients {
    /// Coefficient of the squared mean curvature `K²`.
    pub k_sq: GaussRat,
    /// Coefficient of the ambient scalar curvature `s_M|_{∂M}`.
    pub s_interior: GaussRat,
    /// Coefficient of the boundary scalar curvature `s_∂`.
    pub s_boundary: GaussRat,
}

/// The theorem exactly as displayed: `(π³/16)(225/64·K² + 29/4·s_M +
/// (197/12+3i)·s_∂)`.
pub fn reference_theorem_displayed() -> TheoremCoefficients {
    TheoremCoefficients {
        k_sq: rat(225, 64),
        s_interior: rat(29, 4),
        s_boundary: cplx(197, 12, 3, 1),
    }
}

/// The theorem obtained by exact substitution from the displayed total:
/// the `K²` coefficient comes out `225/32` (twice the displayed value);
/// the other two agree with the display.
pub fn reference_theorem_from_displayed_sum() -> TheoremCoefficients {
    TheoremCoefficients {
        k_sq: rat(225, 32),
        s_interior: rat(29, 4),
        s_boundary: cplx(197, 12, 3, 1),
    }
}

/// The theorem obtained by exact substitution from the recomputed total.
pub fn reference_theorem_recomputed() -> TheoremCoefficients {
    TheoremCoefficients {
        k_sq: rat(225, 32),
        s_interior: rat(29, 4),
        s_boundary: cplx(149, 12, 3, 1),
    }
}

// ---------------------------------------------------------------------------
// Extrinsic-geometry relations and contour constants
// ---------------------------------------------------------------------------

/// Mean curvature of the boundary at the base point: `K = −2h′(0)`.
pub fn mean_curvature() -> Poly {
    h1().scale(&rat(-2, 1))
}

/// Each diagonal component of the second fundamental form: `−h′(0)/2`.
pub fn second_fundamental_diagonal() -> Poly {
    h1().scale(&rat(-1, 2))
}

/// Boundary term of the gravitational action per unit boundary volume:
/// `−4h′(0)`.
pub fn gravitational_boundary_term() -> Poly {
    h1().scale(&rat(-4, 1))
}

/// Ambient scalar curvature at the boundary in warped normal coordinates:
/// `s_M = 3(h′(0))² − 4h″(0) + s_∂`.
pub fn interior_scalar_relation() -> Poly {
    h1_sq()
        .scale(&rat(3, 1))
        .add(&h2().scale(&rat(-4, 1)))
        .add(&s_bdry())
}

/// `h″(0)` solved from the scalar-curvature relation:
/// `h₂ = (3h₁² + s_∂ − s_M)/4`.
pub fn h2_in_invariants() -> Poly {
    h1_sq()
        .scale(&rat(3, 4))
        .add(&s_bdry().scale(&rat(1, 4)))
        .add(&Poly::gen(Generator::SManifold).scale(&rat(-1, 4)))
}

/// The two contour values used by the tangential-Hessian case, in units of
/// `π`: `∫(−4iξₙ²−8ξₙ)/(3(ξₙ−i)²(1+ξₙ²)²) = −i/3` and
/// `∫(−4iξₙ⁴−8ξₙ³−32iξₙ²−40ξₙ+4i)/(3(ξₙ−i)²(1+ξₙ²)³) = −4i/3`.
pub fn case3_contour_constants() -> (GaussRat, GaussRat) {
    (imag(-1, 3), imag(-4, 3))
}

// ---------------------------------------------------------------------------
// Tests: internal consistency of the stored forms, and the projection table
// against the engine's own projector.
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_same(label: &str, engine: &RatXi, stored: &RatXi) {
        let a = engine.sphere_normal_form();
        let b = stored.sphere_normal_form();
        assert_eq!(a, b, "{label}: engine form differs from stored form");
    }

    #[test]
    fn projection_kernel_table_matches_projector() {
        let c_over_q2 = fraction(vec![c_xi_prime(), c_dxn()], 2, 2);
        assert_same(
            "π⁺[c(ξ)/(1+ξₙ²)²]",
            &c_over_q2.pi_plus().unwrap(),
            &proj_c_xi_over_q_sq(),
        );
        let inv_q2 = scalar_fraction(&[GaussRat::one()], 2, 2);
        assert_same("π⁺[1/(1+ξₙ²)²]", &inv_q2.pi_plus().unwrap(), &proj_inv_q_sq());
        let c_over_q3 = fraction(vec![c_xi_prime(), c_dxn()], 3, 3);
        assert_same(
            "π⁺[c(ξ)/(1+ξₙ²)³]",
            &c_over_q3.pi_plus().unwrap(),
            &proj_c_xi_over_q_cubed(),
        );
    }

    #[test]
    fn normal_derivative_ladder_is_consistent() {
        let s = leading_symbol_restricted();
        assert_same("∂_{ξₙ}σ₋₁", &s.dxin(), &d_xin_leading());
        assert_same("∂²_{ξₙ}σ₋₁", &s.dxin().dxin(), &d2_xin_leading());
        assert_same("∂³_{ξₙ}σ₋₁", &s.dxin().dxin().dxin(), &d3_xin_leading());
    }

    #[test]
    fn projected_ladder_is_consistent() {
        let p = leading_symbol_restricted().pi_plus().unwrap();
        assert_same("∂_{ξₙ}π⁺σ₋₁", &p.dxin(), &d_xin_proj_leading());
        assert_same(
            "∂²_{ξₙ}π⁺σ₋₁ (corrected)",
            &p.dxin().dxin(),
            &d2_xin_proj_leading_corrected(),
        );
        // The displayed variant differs from the derivative chain exactly in
        // the halved c(dxₙ) coefficient.
        let displayed = d2_xin_proj_leading_displayed();
        let corrected = d2_xin_proj_leading_corrected();
        let diff = corrected.sub(&displayed).unwrap();
        assert_same(
            "∂²_{ξₙ}π⁺σ₋₁ displayed-vs-corrected gap",
            &diff,
            &fraction(vec![c_dxn().scale(&imag(1, 2))], 3, 0),
        );
    }

    #[test]
    fn projected_normal_derivative_reduces() {
        // After substitution the two simple-pole terms cancel.
        let reduced = fraction(
            vec![c_xi_prime()
                .scale_poly(&h1())
                .scale(&imag(1, 4))
                .add(&c_dxn().scale_poly(&h1()).scale(&rat(-1, 4)))],
            2,
            0,
        );
        assert_same("π⁺∂_{xₙ}σ₋₁ reduced", &proj_dxn_leading(), &reduced);
    }

    #[test]
    fn projected_normal_hessian_matches_corrected_form() {
        let engine = d2_xn_leading_corrected().pi_plus().unwrap();
        assert_same("π⁺∂²_{xₙ}σ₋₁", &engine, &proj_d2_xn_leading());
    }

    #[test]
    fn displayed_normal_hessian_expansion_agrees() {
        assert_same(
            "grouped vs expanded ∂²_{xₙ}σ₋₁ display",
            &d2_xn_leading_displayed(),
            &d2_xn_leading_expanded_displayed(),
        );
    }

    #[test]
    fn projected_mixed_second_derivative_is_second_dxin_of_projection() {
        let engine = proj_dxn_leading().dxin().dxin();
        assert_same("∂²_{ξₙ}∂_{xₙ}π⁺σ₋₁", &engine, &d2_xin_dxn_proj_leading());
    }

    #[test]
    fn projected_tangential_derivatives_match_projector() {
        for i in 1..=4u8 {
            let unrestricted = RatXi::from_parts(
                vec![c_xi_prime().scale(&imag(1, 1)), c_dxn().scale(&imag(1, 1))],
                1,
            );
            let engine = unrestricted
                .dxi(i)
                .unwrap()
                .restrict()
                .unwrap()
                .pi_plus()
                .unwrap();
            assert_same("π⁺∂_{ξᵢ}σ₋₁", &engine, &proj_d_xi_leading(i));
            assert_same(
                "∂_{ξₙ}π⁺∂_{ξᵢ}σ₋₁",
                &proj_d_xi_leading(i).dxin(),
                &d_xin_proj_d_xi_leading(i),
            );
        }
    }

    #[test]
    fn projected_tangential_hessian_matches_projector() {
        for i in 1..=4u8 {
            for j in 1..=4u8 {
                let unrestricted = RatXi::from_parts(
                    vec![c_xi_prime().scale(&imag(1, 1)), c_dxn().scale(&imag(1, 1))],
                    1,
                );
                let engine = unrestricted
                    .dxi(i)
                    .unwrap()
                    .dxi(j)
                    .unwrap()
                    .restrict()
                    .unwrap();
                assert_same("∂_{ξⱼ}∂_{ξᵢ}σ₋₁", &engine, &d_xi2_leading(i, j));
                assert_same(
                    "π⁺∂_{ξⱼ}∂_{ξᵢ}σ₋₁",
                    &engine.pi_plus().unwrap(),
                    &proj_d_xi2_leading(i, j),
                );
            }
        }
    }

    #[test]
    fn second_symbol_split_derivatives_are_consistent() {
        assert_same(
            "∂_{ξₙ}B₁",
            &second_symbol_proj_first_part().dxin(),
            &d_xin_second_symbol_proj_first_part(),
        );
        assert_same(
            "∂_{ξₙ}B₂",
            &second_symbol_proj_second_part().dxin(),
            &d_xin_second_symbol_proj_second_part(),
        );
    }

    #[test]
    fn second_symbol_projection_matches_split() {
        let engine = second_symbol_at_origin().pi_plus().unwrap();
        let stored = second_symbol_proj_first_part()
            .sub(&second_symbol_proj_second_part())
            .unwrap();
        assert_same("π⁺σ₋₂ = B₁ − B₂", &engine, &stored);
    }

    #[test]
    fn elementary_traces_hold() {
        for (label, product, expected) in elementary_trace_table() {
            let got = product.trace().sphere_normal_form();
            assert_eq!(got, expected.sphere_normal_form(), "{label}");
        }
    }

    #[test]
    fn curvature_trace_identities_hold() {
        for (label, expr, stored) in curvature_trace_identities() {
            let (traced, grade5) = expr.trace();
            assert!(!grade5, "{label}: unexpected volume-element contribution");
            // The raw trace may differ from the stored contraction by the
            // algebraic curvature symmetries; compare in Bianchi normal form.
            let bianchi = |s: &RatXi| {
                s.map_coeffs(|p| crate::curvature::bianchi_normal_form(p).0)
                    .sphere_normal_form()
            };
            assert_eq!(bianchi(&traced), bianchi(&stored), "{label}");
        }
    }

    #[test]
    fn case2_trace_matches_engine_product() {
        let a = proj_d2_xn_leading();
        let b = d3_xin_leading();
        let (traced, grade5) = a.mul(&b).unwrap().trace();
        assert!(!grade5, "case-2 trace: unexpected volume-element contribution");
        assert_same("case-2 trace", &traced, &case2_trace_density());
        // Independent route: the paired case's direct evaluation
        // tr[∂²_{ξₙ}π⁺σ₋₁ · ∂_{ξₙ}∂²_{xₙ}σ₋₁] must integrate to the same
        // density (the ∂_{ξₙ} shifts across the trace under ∫dξₙ), which
        // pins the recomputed value against a transcription slip in either
        // factor.
        let a6 = d2_xin_proj_leading_corrected();
        let b6 = d2_xn_leading_corrected().dxin();
        let (t6, _) = a6.mul(&b6).unwrap().trace();
        let pair_gap = t6.sub(&traced).unwrap();
        assert!(
            pair_gap.integrate_xin().unwrap().is_zero(),
            "paired-case trace must integrate to the same value"
        );
    }

    #[test]
    fn case4_trace_matches_engine_product() {
        let a = proj_dxn_leading();
        let b = d3_xin_dxn_leading();
        let (traced, grade5) = a.mul(&b).unwrap().trace();
        assert!(!grade5);
        assert_same("case-4 trace", &traced, &case4_trace_density());
        // Direct route without the ∂ξₙ shift: tr[∂ξₙ∂ₓₙπ⁺σ₋₁ · ∂²ξₙ∂ₓₙσ₋₁]
        // must integrate to the negative of the stored trace's integral.
        let a0 = proj_dxn_leading().dxin();
        let b0 = d2_xin_dxn_leading();
        let (t0, _) = a0.mul(&b0).unwrap().trace();
        let shift_gap = t0.add(&traced).unwrap();
        assert!(
            shift_gap.integrate_xin().unwrap().is_zero(),
            "case-4 ∂ξₙ shift must flip the sign under ∫dξₙ"
        );
    }

    /// Bianchi-then-sphere normal form, with the boundary scalar curvature
    /// expanded to its raw diagonal sum so both operands live in the same
    /// polynomial ring.
    fn curvature_normal_form(s: &RatXi) -> RatXi {
        let mut diag = Poly::zero();
        for t in 1..=4u8 {
            for l in (t + 1)..=4u8 {
                diag = diag.add(&curv(t, l, t, l).scale(&rat(2, 1)));
            }
        }
        s.map_coeffs(|p| {
            crate::curvature::bianchi_normal_form(
                &p.substitute(crate::poly::Generator::SBoundary, &diag),
            )
            .0
        })
        .sphere_normal_form()
    }

    #[test]
    fn case3_recomputed_value_and_divergence_from_display() {
        // Σ_{|α|=2} (1/α!) tr[∂^α_{ξ′}π⁺σ₋₁ · ∂^α_{x′}∂_{ξₙ}σ₋₁]
        //   = (1/2) Σ_{i,j} tr[π⁺∂_{ξᵢ}∂_{ξⱼ}σ₋₁ · ∂_{ξₙ}∂_{xᵢ}∂_{xⱼ}σ₋₁].
        use crate::jets::Dir;
        let inv =
            crate::jets::derive_inverse_symbols(&crate::jets::boundary_metric_jets()).unwrap();
        let mut sum = RatXi::zero_restricted();
        let mut sum_rec = RatXi::zero_restricted();
        let mut paired_diff = RatXi::zero_restricted();
        for i in 1..=4u8 {
            for j in 1..=4u8 {
                let (t, grade5) =
                    proj_d_xi2_leading(i, j).mul(&d_x2_dxin_leading(i, j)).unwrap().trace();
                assert!(!grade5);
                sum = sum.add(&t).unwrap();
                // The same pairing with the recursion-derived ∂ₓᵢ∂ₓⱼ∂ξₙσ₋₁.
                let b_rec =
                    inv.q1.entry(&[Dir::T(i), Dir::T(j)]).unwrap().restrict().unwrap().dxin();
                let (t_rec, _) = proj_d_xi2_leading(i, j).mul(&b_rec).unwrap().trace();
                sum_rec = sum_rec.add(&t_rec).unwrap();
                // The displayed factor differs from the recursion pointwise;
                // accumulate the paired difference to show it is invisible to
                // this case.
                let (t_diff, _) = proj_d_xi2_leading(i, j)
                    .mul(&b_rec.sub(&d_x2_dxin_leading(i, j)).unwrap())
                    .unwrap()
                    .trace();
                paired_diff = paired_diff.add(&t_diff).unwrap();
            }
        }
        // Both factor routes give the recomputed case value (1/16)·s∂, and
        // the display-vs-recursion difference integrates to zero under the
        // pairing, so the two routes agree term by term.
        let recomputed = CaseDensity::new(rat(0, 1), rat(0, 1), rat(1, 16));
        assert_eq!(
            integrate_density(&sum.scale(&rat(1, 2)), imag(1, 2)),
            recomputed,
            "displayed factors"
        );
        assert_eq!(
            integrate_density(&sum_rec.scale(&rat(1, 2)), imag(1, 2)),
            recomputed,
            "recursion factors"
        );
        assert_eq!(
            integrate_density(&paired_diff, imag(1, 2)),
            CaseDensity::new(rat(0, 1), rat(0, 1), rat(0, 1)),
            "factor divergence must vanish under the pairing"
        );
        // The stored trace integrates to exactly twice the recomputed value —
        // (1/8)·s∂, the reference value in round-sphere-volume units.
        assert_eq!(
            integrate_density(&case3_trace_density(), imag(1, 2)),
            CaseDensity::new(rat(0, 1), rat(0, 1), rat(1, 8)),
            "stored trace"
        );
    }

    #[test]
    fn case7_recomputed_value_matches_display() {
        // tr[π⁺∂ₓₙσ₋₁ · ∂²ξₙσ₋₂]: the stored trace and the recomputed
        // product are distinct rational functions that integrate to the same
        // case value, and the recursion-derived factors agree.
        use crate::jets::Dir;
        let inv =
            crate::jets::derive_inverse_symbols(&crate::jets::boundary_metric_jets()).unwrap();
        let (traced, grade5) =
            proj_dxn_leading().mul(&second_symbol_at_origin().dxin().dxin()).unwrap().trace();
        assert!(!grade5);
        let value = CaseDensity::new(rat(39, 32), rat(0, 1), rat(0, 1));
        assert_eq!(integrate_density(&traced, rat(-1, 2)), value, "displayed factors");
        assert_eq!(integrate_density(&case7_trace_density(), rat(-1, 2)), value, "stored trace");
        let dxn_q1 = inv.q1.entry(&[Dir::N]).unwrap().restrict().unwrap();
        let q2_rec = inv.q2.entry(&[]).unwrap().restrict().unwrap();
        let (traced_rec, _) =
            dxn_q1.pi_plus().unwrap().mul(&q2_rec.dxin().dxin()).unwrap().trace();
        assert_eq!(integrate_density(&traced_rec, rat(-1, 2)), value, "recursion factors");
        // Pin the pointwise disagreement so a future change to either side is
        // noticed: the stored trace is not the recomputed product as a
        // rational function, only its integral agrees.
        let diff = traced.sub(&case7_trace_density()).unwrap();
        assert!(
            !diff.sphere_normal_form().is_zero(),
            "stored case-7 trace unexpectedly equals the recomputed product pointwise"
        );
    }

    #[test]
    fn case13_recomputed_value_and_divergence_from_display() {
        // Displayed pair: tr[∂_{ξₙ}π⁺σ₋₂ · σ₋₂].  Recomputing the product
        // gives (−111/32)·h₁² through three routes; the stored trace
        // integrates to the reference value (−821/256)·h₁² instead.
        use crate::jets::Dir;
        let inv =
            crate::jets::derive_inverse_symbols(&crate::jets::boundary_metric_jets()).unwrap();
        let a = second_symbol_at_origin().pi_plus().unwrap().dxin();
        let (shifted, grade5) = a.mul(&second_symbol_at_origin()).unwrap().trace();
        assert!(!grade5);
        let (unshifted, _) = second_symbol_at_origin()
            .pi_plus()
            .unwrap()
            .mul(&second_symbol_at_origin().dxin())
            .unwrap()
            .trace();
        // Moving the ∂ξₙ across the trace flips the sign under ∫dξₙ.
        let gap = unshifted.add(&shifted).unwrap();
        assert!(
            gap.integrate_xin().unwrap().is_zero(),
            "case-13 ∂ξₙ shift must flip the sign under ∫dξₙ"
        );
        let recomputed = CaseDensity::new(rat(-111, 32), rat(0, 1), rat(0, 1));
        assert_eq!(integrate_density(&shifted, imag(1, 1)), recomputed, "shifted route");
        assert_eq!(integrate_density(&unshifted, imag(-1, 1)), recomputed, "unshifted route");
        let q2_rec = inv.q2.entry(&[]).unwrap().restrict().unwrap();
        let (traced_rec, _) =
            q2_rec.pi_plus().unwrap().dxin().mul(&q2_rec).unwrap().trace();
        assert_eq!(integrate_density(&traced_rec, imag(1, 1)), recomputed, "recursion factors");
        assert_eq!(
            integrate_density(&case13_trace_density(), imag(1, 1)),
            CaseDensity::new(rat(-821, 256), rat(0, 1), rat(0, 1)),
            "stored trace"
        );
        // Localize the divergence in the displayed split of ∂ξₙπ⁺σ₋₂: the
        // second partial trace recomputes exactly, the first carries the full
        // gap (stored −321/256 against recomputed −388/256, in
        // round-sphere-volume units).
        let (first_stored, second_stored) = case13_partial_traces();
        let (first, _) = d_xin_second_symbol_proj_first_part()
            .mul(&second_symbol_at_origin())
            .unwrap()
            .trace();
        let (second, _) = d_xin_second_symbol_proj_second_part()
            .mul(&second_symbol_at_origin())
            .unwrap()
            .trace();
        let part2 = CaseDensity::new(rat(125, 64), rat(0, 1), rat(0, 1));
        assert_eq!(integrate_density(&second_stored, imag(1, 1)), part2, "stored second partial");
        assert_eq!(integrate_density(&second, imag(1, 1)), part2, "recomputed second partial");
        assert_eq!(
            integrate_density(&first_stored, imag(1, 1)),
            CaseDensity::new(rat(-321, 256), rat(0, 1), rat(0, 1)),
            "stored first partial"
        );
        assert_eq!(
            integrate_density(&first, imag(1, 1)),
            CaseDensity::new(rat(-97, 64), rat(0, 1), rat(0, 1)),
            "recomputed first partial"
        );
    }

    #[test]
    fn case14_recomputed_value_and_divergence_from_display() {
        // Displayed pair: tr[∂_{ξₙ}π⁺σ₋₁ · σ₋₃].  Recomputing from the
        // displayed σ₋₃ gives (209/64)·h₁² − (27/16)·h₂ + (5/48)·s∂; the
        // recursion-derived σ₋₃ gives (215/64)·h₁² − (7/4)·h₂ + (5/48)·s∂;
        // the stored trace integrates to the reference value
        // (239/64)·h₁² − (27/16)·h₂ + (29/192)·s∂.
        use crate::jets::Dir;
        let inv =
            crate::jets::derive_inverse_symbols(&crate::jets::boundary_metric_jets()).unwrap();
        let (shifted, grade5) =
            d_xin_proj_leading().mul(&third_symbol_at_origin()).unwrap().trace();
        assert!(!grade5);
        let (unshifted, _) = leading_symbol_restricted()
            .pi_plus()
            .unwrap()
            .mul(&third_symbol_at_origin().dxin())
            .unwrap()
            .trace();
        // Moving the ∂ξₙ across the trace flips the sign under ∫dξₙ.
        let gap = unshifted.add(&shifted).unwrap();
        assert!(
            gap.integrate_xin().unwrap().is_zero(),
            "case-14 ∂ξₙ shift must flip the sign under ∫dξₙ"
        );
        let displayed_route = CaseDensity::new(rat(209, 64), rat(-27, 16), rat(5, 48));
        assert_eq!(integrate_density(&shifted, imag(1, 1)), displayed_route, "shifted route");
        assert_eq!(integrate_density(&unshifted, imag(-1, 1)), displayed_route, "unshifted route");
        let q3_rec = inv.q3.entry(&[]).unwrap().restrict().unwrap();
        let (traced_rec, _) = d_xin_proj_leading().mul(&q3_rec).unwrap().trace();
        assert_eq!(
            integrate_density(&traced_rec, imag(1, 1)),
            CaseDensity::new(rat(215, 64), rat(-7, 4), rat(5, 48)),
            "recursion factors"
        );
        assert_eq!(
            integrate_density(&case14_trace_density(), imag(1, 1)),
            CaseDensity::new(rat(239, 64), rat(-27, 16), rat(29, 192)),
            "stored trace"
        );
    }

    #[test]
    fn symbol_displays_match_recursion() {
        // The jet recursion independently rebuilds every stored symbol
        // display.  σ₋₁ with all its jets, σ₋₂ at the origin, and ∂ₓᵢσ₋₂ are
        // reproduced exactly.  ∂ₓₙσ₋₂ and σ₋₃ differ from the recursion by a
        // single pinned term proportional to (3/4)h₁² − (1/2)h₂ — the
        // second-order normal coefficient of the symbol jets — and the σ₋₃
        // difference is exactly the ∂ₓₙσ₋₂ difference pushed through the
        // −σ₋₁c(dxₙ)∂ₓₙσ₋₂ term of the recursion.
        use crate::jets::Dir;
        let inv =
            crate::jets::derive_inverse_symbols(&crate::jets::boundary_metric_jets()).unwrap();
        let entry = |sym: &crate::jets::JetSymbol, dirs: &[Dir]| {
            sym.entry(dirs).unwrap().restrict().unwrap()
        };
        assert_same("σ₋₁", &entry(&inv.q1, &[]), &leading_symbol_restricted());
        assert_same("σ₋₂", &entry(&inv.q2, &[]), &second_symbol_at_origin());
        // σ₋₁ jets used by the case table.
        let zero_after = |label: &str, d: &RatXi| {
            assert!(d.sphere_normal_form().is_zero(), "{label}: display differs from recursion");
        };
        zero_after(
            "π⁺∂ₓₙσ₋₁",
            &entry(&inv.q1, &[Dir::N]).pi_plus().unwrap().sub(&proj_dxn_leading()).unwrap(),
        );
        zero_after(
            "∂²ₓₙσ₋₁",
            &entry(&inv.q1, &[Dir::N, Dir::N]).sub(&d2_xn_leading_corrected()).unwrap(),
        );
        for i in 1..=4u8 {
            let di = inv.q1.xi_derivative(Dir::T(i)).unwrap();
            zero_after(
                "π⁺∂ξᵢσ₋₁",
                &di.entry(&[])
                    .unwrap()
                    .restrict()
                    .unwrap()
                    .pi_plus()
                    .unwrap()
                    .sub(&proj_d_xi_leading(i))
                    .unwrap(),
            );
            for j in 1..=4u8 {
                let dij = di.xi_derivative(Dir::T(j)).unwrap().entry(&[]).unwrap();
                zero_after(
                    "π⁺∂ξᵢ∂ξⱼσ₋₁",
                    &dij.restrict()
                        .unwrap()
                        .pi_plus()
                        .unwrap()
                        .sub(&proj_d_xi2_leading(i, j))
                        .unwrap(),
                );
            }
        }
        for i in 1..=4u8 {
            assert_eq!(
                curvature_normal_form(&entry(&inv.q2, &[Dir::T(i)])),
                curvature_normal_form(&d_x_second_symbol(i)),
                "∂ₓ{i}σ₋₂ display must match the recursion"
            );
        }
        // ∂ₓₙσ₋₂: the display exceeds the recursion by exactly
        // (3/4h₁² − 1/2h₂)·ξₙ²·(ξₙc(ξ′) − c(dxₙ))/Q³.
        let coeff = h1_sq().scale(&rat(3, 4)).sub(&h2().scale(&rat(1, 2)));
        let divergence = fraction(
            vec![
                CliffElem::zero(),
                CliffElem::zero(),
                c_dxn().scale_poly(&coeff.scale(&rat(-1, 1))),
                c_xi_prime().scale_poly(&coeff),
            ],
            3,
            3,
        );
        let diff_n = d_xn_second_symbol().sub(&entry(&inv.q2, &[Dir::N])).unwrap();
        zero_after("∂ₓₙσ₋₂ divergence", &diff_n.sub(&divergence).unwrap());
        // σ₋₃: the divergence is inherited through the −σ₋₁c(dxₙ)∂ₓₙσ₋₂ term
        // of the recursion, and there is no other disagreement.
        let diff_3 = third_symbol_at_origin().sub(&entry(&inv.q3, &[])).unwrap();
        let inherited = leading_symbol_restricted()
            .mul(&fraction(vec![c_dxn()], 0, 0))
            .unwrap()
            .mul(&diff_n)
            .unwrap()
            .scale(&rat(-1, 1));
        zero_after("σ₋₃ divergence", &diff_3.sub(&inherited).unwrap());
    }

    #[test]
    fn case8_recomputed_value_and_divergence_from_display() {
        // Engine recomputation of the ∂ξₙ-shifted pair
        // Σᵢ tr[∂_{ξₙ}π⁺∂_{ξᵢ}σ₋₁ · ∂_{xᵢ}σ₋₂] and the unshifted pair
        // Σᵢ tr[π⁺∂_{ξᵢ}σ₋₁ · ∂_{ξₙ}∂_{xᵢ}σ₋₂].
        let mut shifted = RatXi::zero_restricted();
        let mut unshifted = RatXi::zero_restricted();
        for i in 1..=4u8 {
            let (t, grade5) =
                d_xin_proj_d_xi_leading(i).mul(&d_x_second_symbol(i)).unwrap().trace();
            assert!(!grade5);
            shifted = shifted.add(&t).unwrap();
            let (t0, _) = proj_d_xi_leading(i).mul(&d_x_second_symbol(i).dxin()).unwrap().trace();
            unshifted = unshifted.add(&t0).unwrap();
        }
        // Moving the ∂ξₙ across the trace flips the sign under ∫dξₙ.
        let gap = unshifted.add(&shifted).unwrap();
        assert!(
            gap.integrate_xin().unwrap().is_zero(),
            "case-8 ∂ξₙ shift must flip the sign under ∫dξₙ"
        );
        // Both routes give the recomputed case value (1/12)·s∂ — purely real.
        let recomputed = CaseDensity::new(rat(0, 1), rat(0, 1), rat(1, 12));
        assert_eq!(integrate_density(&shifted, rat(1, 1)), recomputed, "shifted route");
        assert_eq!(integrate_density(&unshifted, rat(-1, 1)), recomputed, "unshifted route");
        // The stored display integrates to the reference value
        // (3/16 + 3i/32)·s∂ instead (see
        // stored_traces_integrate_to_stored_case_values) — the sole imaginary
        // contribution in the whole case table.  Localize the divergence by
        // the three displayed groups of ∂_{xᵢ}σ₋₂: each group contributes a
        // purely real amount, so no evaluation of the stored factors can
        // reproduce the reference value's imaginary part.
        let mut parts = Vec::new();
        for group in [
            &d_x_second_symbol_block as &dyn Fn(u8) -> RatXi,
            &d_x_second_symbol_mixed,
            &d_x_second_symbol_weighted,
        ] {
            let mut g = RatXi::zero_restricted();
            for i in 1..=4u8 {
                let (t, grade5) = d_xin_proj_d_xi_leading(i).mul(&group(i)).unwrap().trace();
                assert!(!grade5);
                g = g.add(&t).unwrap();
            }
            parts.push(integrate_density(&g, rat(1, 1)));
        }
        let sb = |n, d| CaseDensity::new(rat(0, 1), rat(0, 1), rat(n, d));
        // The spin-connection group alone reproduces the reference value's
        // real part 3/16; the mixed and sectional-moment groups bring the
        // total to 1/12.
        assert_eq!(parts, vec![sb(3, 16), sb(-1, 48), sb(-1, 12)]);
    }

    #[test]
    fn case9_recomputed_value_and_divergence_from_display() {
        // Engine recomputation of the ∂ξₙ-shifted pair
        // tr[∂²_{ξₙ}π⁺σ₋₁ · ∂_{xₙ}σ₋₂] and the unshifted pair
        // tr[∂_{ξₙ}π⁺σ₋₁ · ∂_{ξₙ}∂_{xₙ}σ₋₂].
        let (shifted, grade5) =
            d2_xin_proj_leading_corrected().mul(&d_xn_second_symbol()).unwrap().trace();
        assert!(!grade5);
        let (unshifted, _) = d_xin_proj_leading().mul(&d_xn_second_symbol().dxin()).unwrap().trace();
        let gap = unshifted.add(&shifted).unwrap();
        assert!(
            gap.integrate_xin().unwrap().is_zero(),
            "case-9 ∂ξₙ shift must flip the sign under ∫dξₙ"
        );
        // Both routes give the recomputed case value
        // (−337/128)·h₁² + (103/64)·h₂.
        let recomputed = CaseDensity::new(rat(-337, 128), rat(103, 64), rat(0, 1));
        assert_eq!(integrate_density(&shifted, rat(1, 2)), recomputed, "shifted route");
        assert_eq!(integrate_density(&unshifted, rat(-1, 2)), recomputed, "unshifted route");
        // The stored display integrates to the reference value
        // (−367/128)·h₁² + (103/64)·h₂ instead.  The divergence localizes to
        // the h₁² group: the displayed h₂ numerator matches the recomputed
        // trace exactly, as rational functions of ξₙ.
        let stored = case9_trace_density();
        let h2_part = |s: &RatXi| {
            s.map_coeffs(|p| {
                Poly::from_terms(p.terms().filter_map(|(m, c)| {
                    if m.contains_key(&crate::poly::Generator::H2) {
                        Some((m.clone(), c.clone()))
                    } else {
                        None
                    }
                }))
            })
        };
        assert_same("case-9 h₂ group", &h2_part(&shifted), &h2_part(&stored));
        let h1_gap = stored.sub(&shifted).unwrap();
        assert_eq!(
            integrate_density(&h1_gap, rat(1, 2)),
            CaseDensity::new(rat(-30, 128), rat(0, 1), rat(0, 1)),
            "h₁² group carries the full divergence"
        );
    }

    #[test]
    fn case2_displayed_trace_gap_is_half_cross_term() {
        // h₂ groups: recomputed = 2i × displayed.
        assert_same(
            "case-2 h₂ group",
            &case2_trace_h2_part(),
            &case2_displayed_h2_part().scale(&imag(2, 1)),
        );
        // h₁² groups: recomputed − i × displayed = the stored gap.
        let gap = case2_trace_h1sq_part()
            .sub(&case2_displayed_h1sq_part().scale(&imag(1, 1)))
            .unwrap();
        assert_same("case-2 h₁² gap", &gap, &case2_trace_gap());
        // The gap is exactly half of the c(dxₙ)⊗c(dxₙ) cross term of the
        // trace: rebuild that cross term from the stored factors' c(dxₙ)
        // components.
        let cn = c_dxn();
        let a_e5 = fraction(vec![CliffElem::zero(), cn.clone()], 3, 3)
            .pi_plus()
            .unwrap()
            .scale_poly(&h1_sq())
            .scale(&imag(2, 1));
        let b_e5 = fraction(
            vec![
                cn.scale(&imag(-6, 1)),
                CliffElem::zero(),
                cn.scale(&imag(36, 1)),
                CliffElem::zero(),
                cn.scale(&imag(-6, 1)),
            ],
            4,
            4,
        );
        let (cross, grade5) = a_e5.mul(&b_e5).unwrap().trace();
        assert!(!grade5);
        assert_same("case-2 gap vs cross term", &case2_trace_gap(), &cross.scale(&rat(1, 2)));
    }

    #[test]
    fn case13_partials_combine() {
        let (first, second) = case13_partial_traces();
        let combined = first.sub(&second).unwrap();
        assert_same("case 13 combined trace", &combined, &case13_trace_density());
    }

    #[test]
    fn zero_integral_table_evaluates_as_flagged() {
        for fixture in zero_integral_table() {
            let value = fixture.integrand.integrate_xin().unwrap();
            if fixture.vanishes_as_displayed {
                assert!(value.is_zero(), "{}: expected zero integral", fixture.label);
            } else {
                assert_eq!(
                    value.coeff(0),
                    Poly::constant(misprinted_zero_integral_value()),
                    "{}: expected the known nonzero value",
                    fixture.label
                );
            }
        }
    }

    /// Integrate a stored scalar trace density over ξₙ (π units), then over
    /// the cosphere (Ω₃ units), contract curvature sums, and return the
    /// density triple.
    fn integrate_density(trace: &RatXi, prefactor: GaussRat) -> CaseDensity {
        let along_normal = trace.integrate_xin().unwrap();
        assert!(
            along_normal.terms().all(|(m, _)| *m == 0),
            "trace density must be scalar"
        );
        let over_sphere = crate::sphere::integrate_sphere(&along_normal.coeff(0));
        let contracted = crate::curvature::contract_curvature(&over_sphere)
            .expect("curvature contraction");
        let poly = contracted.poly.scale(&prefactor);
        let h1sq_mono = crate::poly::Mono::from([(Generator::H1, 2)]);
        let h2_mono = crate::poly::Mono::from([(Generator::H2, 1)]);
        let sb_mono = crate::poly::Mono::from([(Generator::SBoundary, 1)]);
        let mut density = CaseDensity::zero();
        for (mono, coeff) in poly.terms() {
            if *mono == h1sq_mono {
                density.h1_sq = coeff.clone();
            } else if *mono == h2_mono {
                density.h2 = coeff.clone();
            } else if *mono == sb_mono {
                density.s_boundary = coeff.clone();
            } else {
                panic!("unexpected monomial in case density: {mono:?}");
            }
        }
        density
    }

    #[test]
    fn stored_traces_integrate_to_stored_case_values() {
        let values = reference_case_values();
        let i6 = imag(1, 6);
        let i2 = imag(1, 2);
        // Case 2: the recomputed trace under the residue-formula prefactor
        // i/6 gives (9/16)h₁² − (3/8)h₂; the stored reference value
        // (29/64)h₁² − (3/8)h₂ disagrees in the h₁² component only.
        assert_eq!(
            integrate_density(&case2_trace_density(), i6.clone()),
            CaseDensity::new(rat(9, 16), rat(-3, 8), GaussRat::zero()),
            "case 2 (recomputed)"
        );
        let case2_recomputed = integrate_density(&case2_trace_density(), i6.clone());
        assert_eq!(case2_recomputed.h2, values[1].h2, "case 2 h₂ agrees with the reference");
        assert_ne!(case2_recomputed.h1_sq, values[1].h1_sq, "case 2 h₁² is the known gap");
        // The displayed chain — displayed trace × displayed prefactor −1/6 —
        // reproduces the reference h₁² but only half the reference h₂ (the
        // displayed residue evaluation restores the dropped factor 2).
        assert_eq!(
            integrate_density(&case2_trace_density_displayed(), rat(-1, 6)),
            CaseDensity::new(rat(29, 64), rat(-3, 16), GaussRat::zero()),
            "case 2 (displayed chain)"
        );
        assert_eq!(integrate_density(&case3_trace_density(), i2), values[2], "case 3");
        // Case 4: the stored trace is for the factor pair reached through a
        // ∂ξₙ shift across the trace, which flips the sign, so the faithful
        // prefactor here is −i/6 (the displayed evaluation line prints +i/6
        // yet its final value matches the −i/6 chain).
        assert_eq!(integrate_density(&case4_trace_density(), imag(-1, 6)), values[3], "case 4");
        assert_eq!(integrate_density(&case7_trace_density(), rat(-1, 2)), values[6], "case 7");
        // Case 8: the stored trace is for the ∂ξₙ-shifted factor pair
        // (derivative moved onto the projected factor), so the structural
        // prefactor −1 flips to +1.  The display integrates to the reference
        // value, but the recomputed trace gives (1/12)s∂ instead — see
        // case8_recomputed_value_and_divergence_from_display.
        assert_eq!(integrate_density(&case8_trace_density(), rat(1, 1)), values[7], "case 8");
        // Case 9: stored trace is for the ∂ξₙ-shifted pair, so −1/2 flips
        // to +1/2.  The display integrates to the reference value, but the
        // recomputed h₁² coefficient is −337/128, not −367/128 — see
        // case9_recomputed_value_and_divergence_from_display.
        assert_eq!(integrate_density(&case9_trace_density(), rat(1, 2)), values[8], "case 9");
        assert_eq!(
            integrate_density(&case13_trace_density(), imag(1, 1)),
            values[12],
            "case 13"
        );
        assert_eq!(
            integrate_density(&case14_trace_density(), imag(1, 1)),
            values[13],
            "case 14"
        );
    }

    #[test]
    fn correction_traces_integrate_to_zero() {
        for (label, trace) in [
            ("case 6 correction", case6_correction_trace()),
            ("case 10 correction", case10_correction_trace()),
            ("case 12 correction", case12_correction_trace()),
            ("case 15 correction (corrected)", case15_correction_trace_corrected()),
        ] {
            let value = trace.integrate_xin().unwrap();
            assert!(value.is_zero(), "{label}: expected vanishing normal integral");
        }
    }

    #[test]
    fn case3_contour_constants_match_engine_integrals() {
        let (j1, j2) = case3_contour_constants();
        let k1 = scalar_fraction(&[GaussRat::zero(), rat(-8, 3), imag(-4, 3)], 4, 2);
        assert_eq!(k1.integrate_xin().unwrap().coeff(0), Poly::constant(j1));
        let k2 = scalar_fraction(
            &[imag(4, 3), rat(-40, 3), imag(-32, 3), rat(-8, 3), imag(-4, 3)],
            5,
            3,
        );
        assert_eq!(k2.integrate_xin().unwrap().coeff(0), Poly::constant(j2));
    }

    #[test]
    fn case_values_sum_to_stored_totals() {
        let values = reference_case_values();
        let mut sum = CaseDensity::zero();
        for v in &values {
            sum = sum.add(v);
        }
        assert_eq!(sum, reference_sum_recomputed(), "recomputed total");
        // The displayed total differs only in the case 3 unit conflict.
        let (displayed_c3, recomputed_c3) = case3_unit_conflict();
        let gap = &displayed_c3 - &recomputed_c3;
        let adjusted = sum.add(&CaseDensity::new(GaussRat::zero(), GaussRat::zero(), gap));
        assert_eq!(adjusted, reference_sum_displayed(), "displayed total");
    }

    #[test]
    fn volume_form_is_sixteen_times_displayed_sum() {
        let sum = reference_sum_displayed();
        let vol = reference_volume_form();
        let sixteen = rat(16, 1);
        assert_eq!(&sum.h1_sq * &sixteen, vol.h1_sq);
        assert_eq!(&sum.h2 * &sixteen, vol.h2);
        assert_eq!(&sum.s_boundary * &sixteen, vol.s_boundary);
    }

    #[test]
    fn theorem_substitution_from_stored_sums() {
        // h₁² = K²/4 and h₂ = (3h₁²+s_∂−s_M)/4; πΩ₃ = 2π³.
        let substitute = |sum: &CaseDensity| -> TheoremCoefficients {
            let quarter = rat(1, 4);
            let k_sq_coeff = &(&sum.h1_sq * &quarter) + &(&sum.h2 * &rat(3, 16));
            let s_m_coeff = &sum.h2 * &rat(-1, 4);
            let s_b_coeff = &sum.s_boundary + &(&sum.h2 * &quarter);
            // ×2 (πΩ₃ = 2π³) and ×16 (report in π³/16 units).
            let unit = rat(32, 1);
            TheoremCoefficients {
                k_sq: &k_sq_coeff * &unit,
                s_interior: &s_m_coeff * &unit,
                s_boundary: &s_b_coeff * &unit,
            }
        };
        assert_eq!(
            substitute(&reference_sum_displayed()),
            reference_theorem_from_displayed_sum(),
            "substitution from displayed total"
        );
        assert_eq!(
            substitute(&reference_sum_recomputed()),
            reference_theorem_recomputed(),
            "substitution from recomputed total"
        );
        // The displayed theorem halves the K² coefficient and keeps the rest.
        let displayed = reference_theorem_displayed();
        let derived = reference_theorem_from_displayed_sum();
        assert_eq!(&displayed.k_sq * &rat(2, 1), derived.k_sq);
        assert_eq!(displayed.s_interior, derived.s_interior);
        assert_eq!(displayed.s_boundary, derived.s_boundary);
    }

    #[test]
    fn scalar_relation_solves_for_h2() {
        // Substituting s_M = 3h₁²−4h₂+s_∂ into h₂ = (3h₁²+s_∂−s_M)/4 must
        // give back h₂ identically.
        let relation = interior_scalar_relation();
        let h2_expr = h2_in_invariants();
        let substituted = h2_expr.substitute(Generator::SManifold, &relation);
        assert_eq!(substituted, h2());
    }
}
