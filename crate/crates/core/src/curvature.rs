//! Boundary Riemann tensor bookkeeping.
//!
//! The curvature of the 4-dimensional boundary enters the pipeline through
//! explicit component sums: every second-jet entry of the symbol is expanded
//! over indices `1..=4` at construction time, so no Kronecker-delta objects
//! ever flow through the algebra. What this module provides is
//!
//! * canonicalization of a component `R(a,b,c,d)` under the algebraic
//!   symmetries `R_{abcd} = −R_{bacd} = −R_{abdc} = R_{cdab}` (with the
//!   zero cases `a = b`, `c = d`),
//! * the first-Bianchi rewrite, which in four indices eliminates one of the
//!   three all-distinct canonical components: `R[1,4,2,3] = R[1,3,2,4] −
//!   R[1,2,3,4]`,
//! * contraction of a curvature-linear polynomial onto the boundary scalar
//!   curvature `sB = Σ_{t,l} R(t,l,t,l) = 2 Σ_{t<l} R[t,l,t,l]`,
//! * random exact instantiations satisfying all symmetries, for the
//!   floating-point oracle.

use crate::gauss::GaussRat;
use crate::poly::{Generator, Poly};
use rand::Rng;
use std::collections::BTreeMap;
use thiserror::Error;

/// Failure modes of the scalar contraction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurvatureError {
    /// A monomial carries two or more Riemann factors. The densities this
    /// engine produces are linear in curvature, so a higher degree always
    /// indicates an upstream bug rather than new geometry.
    #[error("curvature degree {0} in a single term; densities are curvature-linear")]
    HigherDegree(u32),
    /// After Bianchi reduction, a non-diagonal component or an off-pattern
    /// monomial survives, or the diagonal coefficients disagree: the sum is
    /// not a multiple of the scalar curvature.
    #[error("unreduced tensor: {0}")]
    Unreduced(String),
}

/// Canonicalize index order: returns `None` when the component vanishes by
/// antisymmetry, otherwise the canonical generator and the sign (`±1`)
/// relating `R(a,b,c,d)` to it.
pub fn canonicalize(a: u8, b: u8, c: u8, d: u8) -> Option<(Generator, i8)> {
    assert!(
        (1..=4).contains(&a) && (1..=4).contains(&b) && (1..=4).contains(&c) && (1..=4).contains(&d),
        "curvature index out of range 1..=4"
    );
    if a == b || c == d {
        return None;
    }
    let mut sign = 1i8;
    let (p, q) = if a < b { (a, b) } else { (b, a) };
    if a > b {
        sign = -sign;
    }
    let (r, s) = if c < d { (c, d) } else { (d, c) };
    if c > d {
        sign = -sign;
    }
    // Pair exchange R_{cdab} = R_{abcd} carries no sign.
    if (p, q) <= (r, s) {
        Some((Generator::Curv(p, q, r, s), sign))
    } else {
        Some((Generator::Curv(r, s, p, q), sign))
    }
}

/// The component `R(a,b,c,d)` as a polynomial (possibly zero).
pub fn curv(a: u8, b: u8, c: u8, d: u8) -> Poly {
    match canonicalize(a, b, c, d) {
        None => Poly::zero(),
        Some((g, sign)) => {
            let c = if sign > 0 { GaussRat::one() } else { -GaussRat::one() };
            Poly::gen(g).scale(&c)
        }
    }
}

/// All 21 canonical generators, in lexicographic pair order.
pub fn canonical_generators() -> Vec<Generator> {
    let pairs: Vec<(u8, u8)> = vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let mut out = Vec::new();
    for (i, &(p, q)) in pairs.iter().enumerate() {
        for &(r, s) in &pairs[i..] {
            out.push(Generator::Curv(p, q, r, s));
        }
    }
    out
}

/// The canonical component the Bianchi identity eliminates.
pub const BIANCHI_ELIMINATED: Generator = Generator::Curv(1, 4, 2, 3);

/// Rewrite modulo the first Bianchi identity: `R[1,4,2,3] := R[1,3,2,4] −
/// R[1,2,3,4]`. Returns the normal form and whether the rewrite actually
/// fired anywhere (coverage data for the reduction path).
pub fn bianchi_normal_form(p: &Poly) -> (Poly, bool) {
    let fired = p.terms().any(|(m, _)| m.contains_key(&BIANCHI_ELIMINATED));
    if !fired {
        return (p.clone(), false);
    }
    let replacement = Poly::gen(Generator::Curv(1, 3, 2, 4)).sub(&Poly::gen(Generator::Curv(1, 2, 3, 4)));
    (p.substitute(BIANCHI_ELIMINATED, &replacement), true)
}

/// The six diagonal canonical components `R[t,l,t,l]`, `t < l`.
fn diagonal_generators() -> [Generator; 6] {
    [
        Generator::Curv(1, 2, 1, 2),
        Generator::Curv(1, 3, 1, 3),
        Generator::Curv(1, 4, 1, 4),
        Generator::Curv(2, 3, 2, 3),
        Generator::Curv(2, 4, 2, 4),
        Generator::Curv(3, 4, 3, 4),
    ]
}

/// Outcome of a scalar contraction, including whether the Bianchi rewrite
/// was needed to reach the diagonal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    /// The contracted polynomial: curvature components replaced by `sB`.
    pub poly: Poly,
    /// True when the Bianchi rewrite fired during reduction.
    pub bianchi_fired: bool,
}

/// Project a curvature-linear polynomial onto the boundary scalar curvature.
///
/// After Bianchi reduction the curvature part must be `λ · Σ_{t<l}
/// R[t,l,t,l]` for a single coefficient `λ`; the result replaces it by
/// `(λ/2) sB`. Anything else — unequal diagonal coefficients, surviving
/// off-diagonal components, curvature mixed with other generators in one
/// monomial — is an error: the geometric densities this engine produces
/// reduce to scalar curvature, so a leftover pattern means a bug upstream.
pub fn contract_curvature(p: &Poly) -> Result<Contraction, CurvatureError> {
    for (m, _) in p.terms() {
        let deg = Poly::curv_degree(m);
        if deg >= 2 {
            return Err(CurvatureError::HigherDegree(deg));
        }
    }
    let (nf, bianchi_fired) = bianchi_normal_form(p);
    let mut rest = Poly::zero();
    let mut diag: BTreeMap<Generator, GaussRat> = BTreeMap::new();
    let diagonals = diagonal_generators();
    for (m, c) in nf.terms() {
        let curv_gens: Vec<Generator> = m.keys().copied().filter(Generator::is_curv).collect();
        match curv_gens.as_slice() {
            [] => rest.add_term(m.clone(), c.clone()),
            [g] => {
                if m.len() != 1 {
                    return Err(CurvatureError::Unreduced(format!(
                        "curvature factor {g} multiplied by other generators"
                    )));
                }
                if !diagonals.contains(g) {
                    return Err(CurvatureError::Unreduced(format!(
                        "off-diagonal component {g} survives reduction"
                    )));
                }
                diag.insert(*g, c.clone());
            }
            _ => unreachable!("degree filtered above"),
        }
    }
    if diag.is_empty() {
        return Ok(Contraction { poly: rest, bianchi_fired });
    }
    let lambda = diag.values().next().cloned().unwrap();
    for g in diagonals {
        match diag.get(&g) {
            Some(c) if *c == lambda => {}
            Some(c) => {
                return Err(CurvatureError::Unreduced(format!(
                    "diagonal coefficients disagree: {g} has {c}, expected {lambda}"
                )))
            }
            None => {
                return Err(CurvatureError::Unreduced(format!(
                    "diagonal component {g} missing from an otherwise diagonal sum"
                )))
            }
        }
    }
    // λ Σ_{t<l} R[t,l,t,l] = (λ/2) sB.
    let half = &lambda * &GaussRat::ratio(1, 2);
    let mut out = rest;
    out = out.add(&Poly::gen(Generator::SBoundary).scale(&half));
    Ok(Contraction { poly: out, bianchi_fired })
}

/// A random exact curvature assignment: values for all 21 canonical
/// components satisfying the Bianchi identity, plus the matching `sB`.
/// Numerators and denominators stay tiny so downstream `f64` evaluation is
/// well-conditioned.
pub fn random_curvature_assignment(rng: &mut impl Rng) -> BTreeMap<Generator, GaussRat> {
    let mut assign = BTreeMap::new();
    for g in canonical_generators() {
        if g == BIANCHI_ELIMINATED {
            continue;
        }
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=4);
        assign.insert(g, GaussRat::ratio(num, den));
    }
    let r1324 = assign[&Generator::Curv(1, 3, 2, 4)].clone();
    let r1234 = assign[&Generator::Curv(1, 2, 3, 4)].clone();
    assign.insert(BIANCHI_ELIMINATED, &r1324 - &r1234);
    let mut sb = GaussRat::zero();
    for g in diagonal_generators() {
        sb = &sb + &assign[&g];
    }
    assign.insert(Generator::SBoundary, sb.scale(&num_rational::BigRational::from_integer(2.into())));
    assign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetry_and_zero_cases() {
        assert!(curv(1, 1, 2, 3).is_zero());
        assert!(curv(1, 2, 3, 3).is_zero());
        // R(2,1,1,2) = −R(1,2,1,2)
        assert_eq!(curv(2, 1, 1, 2), curv(1, 2, 1, 2).neg());
        // Double swap restores the sign.
        assert_eq!(curv(2, 1, 2, 1), curv(1, 2, 1, 2));
        // Pair exchange is symmetric.
        assert_eq!(curv(3, 4, 1, 2), curv(1, 2, 3, 4));
    }

    #[test]
    fn there_are_21_canonical_components() {
        assert_eq!(canonical_generators().len(), 21);
    }

    #[test]
    fn bianchi_rewrite_eliminates_the_third_distinct_component() {
        // R(1,4,2,3) + R(1,2,3,4) − R(1,3,2,4) reduces to zero.
        let p = curv(1, 4, 2, 3).add(&curv(1, 2, 3, 4)).sub(&curv(1, 3, 2, 4));
        let (nf, fired) = bianchi_normal_form(&p);
        assert!(fired);
        assert!(nf.is_zero());
    }

    #[test]
    fn full_diagonal_sum_contracts_to_scalar() {
        // Σ_{t,l} R(t,l,t,l) over all ordered pairs = 2 Σ_{t<l} R[t,l,t,l] = sB.
        let mut p = Poly::zero();
        for t in 1..=4u8 {
            for l in 1..=4u8 {
                p = p.add(&curv(t, l, t, l));
            }
        }
        let c = contract_curvature(&p).unwrap();
        assert_eq!(c.poly, Poly::gen(Generator::SBoundary));
        assert!(!c.bianchi_fired);
    }

    #[test]
    fn ricci_style_sum_contracts_to_minus_scalar() {
        // Σ_{a,i} R(a,i,i,a) = −sB.
        let mut p = Poly::zero();
        for a in 1..=4u8 {
            for i in 1..=4u8 {
                p = p.add(&curv(a, i, i, a));
            }
        }
        let c = contract_curvature(&p).unwrap();
        assert_eq!(c.poly, Poly::gen(Generator::SBoundary).neg());
    }

    #[test]
    fn off_diagonal_survivor_is_an_error() {
        let p = curv(1, 2, 1, 3);
        assert!(matches!(contract_curvature(&p), Err(CurvatureError::Unreduced(_))));
    }

    #[test]
    fn unequal_diagonal_coefficients_are_an_error() {
        let mut p = Poly::zero();
        for g in super::diagonal_generators() {
            p = p.add(&Poly::gen(g));
        }
        let p = p.add(&Poly::gen(Generator::Curv(1, 2, 1, 2)));
        assert!(matches!(contract_curvature(&p), Err(CurvatureError::Unreduced(_))));
    }

    #[test]
    fn quadratic_curvature_is_an_error() {
        let p = Poly::gen(Generator::Curv(1, 2, 1, 2)).pow(2);
        assert_eq!(contract_curvature(&p), Err(CurvatureError::HigherDegree(2)));
    }

    #[test]
    fn random_assignment_satisfies_bianchi_and_scalar_sum() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let assign = random_curvature_assignment(&mut rng);
        let lhs = &assign[&Generator::Curv(1, 4, 2, 3)];
        let rhs = &(&assign[&Generator::Curv(1, 3, 2, 4)] - &assign[&Generator::Curv(1, 2, 3, 4)]);
        assert_eq!(lhs, rhs);
        // sB equals the double diagonal sum.
        let mut p = Poly::zero();
        for t in 1..=4u8 {
            for l in 1..=4u8 {
                p = p.add(&curv(t, l, t, l));
            }
        }
        assert_eq!(p.eval(&assign).unwrap(), assign[&Generator::SBoundary]);
    }
}
