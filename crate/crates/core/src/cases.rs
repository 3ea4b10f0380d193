//! The fifteen boundary cases of the residue pairing, evaluated exactly from
//! the recursion-derived symbol jets.
//!
//! Each case pairs a projected symbol factor with a free one:
//!
//! ```text
//! Σ_{|α|=m} (−i)^{m+j+k+1}/(α!·(j+k+1)!) ·
//!     tr[ ∂ʲ_{xₙ} ∂^α_{ξ′} ∂ᵏ_{ξₙ} π⁺σ_r  ·  ∂^α_{x′} ∂^{j+1}_{ξₙ} ∂ᵏ_{xₙ} σ_ℓ ]
//! ```
//!
//! summed over the cases with `r − k + m + ℓ − j − 1 = −5`, `r, ℓ ≤ −1`.
//! The engine evaluates the pairing exactly as written — x-derivatives by jet
//! lookup, ξ′-derivatives before restriction to `|ξ′| = 1`, `π⁺` on the
//! order-`r` factor, ξₙ-derivatives on the restricted line, Clifford product,
//! trace, contour integral over ξₙ, cosphere integral, curvature
//! contraction — with no integration by parts and no reuse of the stored
//! trace displays, so the resulting densities are an independent check of
//! the stored case values.

use serde::{Deserialize, Serialize};

use crate::curvature::{contract_curvature, CurvatureError};
use crate::gauss::GaussRat;
use crate::jets::{Dir, InverseSymbols, JetError, JetSymbol};
use crate::poly::{Generator, Mono};
use crate::ratxi::{RatXi, RatXiError};
use crate::reference::{h2_in_invariants, CaseDensity, TheoremCoefficients};
use crate::sphere::integrate_sphere;

/// Failure while evaluating a case or assembling the final coefficients.
#[derive(Debug, thiserror::Error)]
pub enum CaseError {
    /// Jet lookup failed (missing expansion order or symbol arithmetic).
    #[error(transparent)]
    Jet(#[from] JetError),
    /// Rational-function arithmetic failed.
    #[error(transparent)]
    RatXi(#[from] RatXiError),
    /// Curvature contraction found a non-scalar-curvature pattern.
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    /// No symbol of the requested order is tracked.
    #[error("no inverse-symbol factor of order {0}")]
    UnknownOrder(i8),
    /// The ξₙ integral of a trace density kept a Clifford component.
    #[error("case {0}: the ξₙ integral left a non-scalar Clifford element")]
    NonScalarTrace(u8),
    /// The contracted density contains a monomial outside the
    /// `h₁²/h₂/s_∂` span.
    #[error("case {case}: unexpected monomial {mono} in the contracted density")]
    UnexpectedMonomial {
        /// Case id (0 for sums outside a single case).
        case: u8,
        /// Debug form of the offending monomial.
        mono: String,
    },
    /// A generator other than `h₁², s_∂, s_M` survived theorem substitution.
    #[error("theorem assembly: residual monomial {0} after substitution")]
    StrayGenerator(String),
}

/// Structural data of one boundary case.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CaseSpec {
    /// Case number, 1..=15.
    pub id: u8,
    /// Order `r` of the projected factor (−1, −2, or −3).
    pub projected_order: i8,
    /// Order `ℓ` of the free factor.
    pub free_order: i8,
    /// `k`: ξₙ-derivatives on the projected factor and normal x-derivatives
    /// on the free factor.
    pub xi_n_derivatives: u8,
    /// `j`: normal x-derivatives on the projected factor; the free factor
    /// carries `j + 1` ξₙ-derivatives.
    pub x_n_derivatives: u8,
    /// `m = |α|`: order of the tangential multi-index shared by the
    /// projected factor's ξ′-derivatives and the free factor's
    /// x′-derivatives.
    pub tangential_order: u8,
}

impl CaseSpec {
    /// Total homogeneity order `r − k + m + ℓ − j − 1` of the pairing; every
    /// boundary case must sit at `−5`.
    pub fn residue_order(&self) -> i32 {
        i32::from(self.projected_order) - i32::from(self.xi_n_derivatives)
            + i32::from(self.tangential_order)
            + i32::from(self.free_order)
            - i32::from(self.x_n_derivatives)
            - 1
    }

    /// The case prefactor `(−i)^{m+j+k+1}/(m!·(j+k+1)!)`, with the `1/α!`
    /// already folded into `1/m!` for the ordered-tuple expansion of the
    /// multi-index sum.
    pub fn prefactor(&self) -> GaussRat {
        let power =
            u32::from(self.tangential_order + self.x_n_derivatives + self.xi_n_derivatives + 1);
        let minus_i = GaussRat::complex_ratio(0, 1, -1, 1);
        let denom = factorial(u32::from(self.x_n_derivatives + self.xi_n_derivatives + 1))
            * factorial(u32::from(self.tangential_order));
        &minus_i.pow(power) * &GaussRat::ratio(1, denom)
    }
}

fn factorial(n: u32) -> i64 {
    (1..=i64::from(n)).product::<i64>().max(1)
}

/// The fifteen boundary cases in their published order.
pub fn case_table() -> [CaseSpec; 15] {
    let spec = |id, r, l, k, j, m| CaseSpec {
        id,
        projected_order: r,
        free_order: l,
        xi_n_derivatives: k,
        x_n_derivatives: j,
        tangential_order: m,
    };
    [
        spec(1, -1, -1, 0, 1, 1),
        spec(2, -1, -1, 0, 2, 0),
        spec(3, -1, -1, 0, 0, 2),
        spec(4, -1, -1, 1, 1, 0),
        spec(5, -1, -1, 1, 0, 1),
        spec(6, -1, -1, 2, 0, 0),
        spec(7, -1, -2, 0, 1, 0),
        spec(8, -1, -2, 0, 0, 1),
        spec(9, -1, -2, 1, 0, 0),
        spec(10, -2, -1, 0, 1, 0),
        spec(11, -2, -1, 0, 0, 1),
        spec(12, -2, -1, 1, 0, 0),
        spec(13, -2, -2, 0, 0, 0),
        spec(14, -1, -3, 0, 0, 0),
        spec(15, -3, -1, 0, 0, 0),
    ]
}

/// One evaluated case: its structural data and the exact density it
/// contributes, in `πΩ₃` units.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CaseEvaluation {
    /// The case evaluated.
    pub spec: CaseSpec,
    /// The exact density `(h₁², h₂, s_∂)` triple.
    pub density: CaseDensity,
    /// True when a grade-5 Clifford component appeared at the trace and was
    /// dropped under the traceless-volume-element convention.
    pub grade5_dropped: bool,
    /// True when the first Bianchi identity fired during curvature
    /// contraction.
    pub bianchi_fired: bool,
}

fn symbol_of_order(inv: &InverseSymbols, order: i8) -> Result<&JetSymbol, CaseError> {
    match order {
        -1 => Ok(&inv.q1),
        -2 => Ok(&inv.q2),
        -3 => Ok(&inv.q3),
        other => Err(CaseError::UnknownOrder(other)),
    }
}

/// Ordered tangential index tuples `{1..4}^m`.
fn tangential_tuples(m: u8) -> Vec<Vec<u8>> {
    let mut tuples = vec![Vec::new()];
    for _ in 0..m {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (1..=4u8).map(move |i| {
                    let mut next = t.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    tuples
}

/// Evaluate one case from the inverse-symbol jets.
pub fn evaluate_case(spec: &CaseSpec, inv: &InverseSymbols) -> Result<CaseEvaluation, CaseError> {
    let projected_symbol = symbol_of_order(inv, spec.projected_order)?;
    let free_symbol = symbol_of_order(inv, spec.free_order)?;
    let mut total = RatXi::zero_restricted();
    let mut grade5_dropped = false;
    for alpha in tangential_tuples(spec.tangential_order) {
        // Projected factor: ξ′-derivatives at the symbol level (before
        // restriction), then the xₙ-jet lookup, restriction, π⁺, and
        // ξₙ-derivatives on the restricted line.
        let mut symbol = projected_symbol.clone();
        for &t in &alpha {
            symbol = symbol.xi_derivative(Dir::T(t))?;
        }
        let x_dirs = vec![Dir::N; usize::from(spec.x_n_derivatives)];
        let mut projected = symbol.entry(&x_dirs)?.restrict()?.pi_plus()?;
        for _ in 0..spec.xi_n_derivatives {
            projected = projected.dxin();
        }
        // Free factor: tangential and normal x-jet lookup, restriction, and
        // j+1 ξₙ-derivatives.
        let mut dirs: Vec<Dir> = alpha.iter().map(|&t| Dir::T(t)).collect();
        dirs.extend(std::iter::repeat(Dir::N).take(usize::from(spec.xi_n_derivatives)));
        let mut free = free_symbol.entry(&dirs)?.restrict()?;
        for _ in 0..=spec.x_n_derivatives {
            free = free.dxin();
        }
        let (traced, saw_grade5) = projected.mul(&free)?.trace();
        grade5_dropped |= saw_grade5;
        total = total.add(&traced)?;
    }
    let (density, bianchi_fired) = density_from_trace(spec.id, &total, &spec.prefactor())?;
    Ok(CaseEvaluation { spec: *spec, density, grade5_dropped, bianchi_fired })
}

/// Evaluate the full fifteen-case table.
pub fn evaluate_all(inv: &InverseSymbols) -> Result<Vec<CaseEvaluation>, CaseError> {
    case_table().iter().map(|spec| evaluate_case(spec, inv)).collect()
}

/// Run a scalar trace density through the tail of the case pipeline:
/// contour integral over ξₙ (π units), cosphere integral (Ω₃ units),
/// curvature contraction, prefactor scaling, and decomposition into the
/// `(h₁², h₂, s_∂)` triple.  Returns the density and whether the Bianchi
/// rewrite fired.
pub fn density_from_trace(
    case_id: u8,
    trace: &RatXi,
    prefactor: &GaussRat,
) -> Result<(CaseDensity, bool), CaseError> {
    let along_normal = trace.integrate_xin()?;
    if !along_normal.terms().all(|(mono, _)| *mono == 0) {
        return Err(CaseError::NonScalarTrace(case_id));
    }
    let over_sphere = integrate_sphere(&along_normal.coeff(0));
    let contracted = contract_curvature(&over_sphere)?;
    let poly = contracted.poly.scale(prefactor);
    let h1_sq_mono = Mono::from([(Generator::H1, 2)]);
    let h2_mono = Mono::from([(Generator::H2, 1)]);
    let s_boundary_mono = Mono::from([(Generator::SBoundary, 1)]);
    let mut density = CaseDensity::zero();
    for (mono, coeff) in poly.terms() {
        if *mono == h1_sq_mono {
            density.h1_sq = coeff.clone();
        } else if *mono == h2_mono {
            density.h2 = coeff.clone();
        } else if *mono == s_boundary_mono {
            density.s_boundary = coeff.clone();
        } else {
            return Err(CaseError::UnexpectedMonomial {
                case: case_id,
                mono: format!("{mono:?}"),
            });
        }
    }
    Ok((density, contracted.bianchi_fired))
}

/// Sum the densities of an evaluated case table.
pub fn sum_cases(evaluations: &[CaseEvaluation]) -> CaseDensity {
    evaluations.iter().fold(CaseDensity::zero(), |acc, e| acc.add(&e.density))
}

/// The final coefficients in both unit systems.
///
/// The case densities live in `πΩ₃` units and the final display divides by
/// 16, so the natural staging reports coefficients per `πΩ₃/16`; converting
/// the round volume `Ω₃ = 2π²` turns these into `π³/16` units by doubling.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TheoremAssembly {
    /// Coefficients of `(K², s_M, s_∂)` in `πΩ₃/16` units.
    pub round_units: TheoremCoefficients,
    /// Coefficients of `(K², s_M, s_∂)` in `π³/16` units (twice the round
    /// values).
    pub cubic_units: TheoremCoefficients,
}

/// Substitute the geometric invariants into a fifteen-case total:
/// `h₂ = (3h₁² + s_∂ − s_M)/4` and `h₁² = K²/4`, reporting the resulting
/// `(K², s_M, s_∂)` coefficients in both unit systems.  Errors if any other
/// generator pattern survives the substitution.
pub fn assemble_theorem(sum: &CaseDensity) -> Result<TheoremAssembly, CaseError> {
    let substituted = sum.to_poly().substitute(Generator::H2, &h2_in_invariants());
    let h1_sq_mono = Mono::from([(Generator::H1, 2)]);
    let s_boundary_mono = Mono::from([(Generator::SBoundary, 1)]);
    let s_interior_mono = Mono::from([(Generator::SManifold, 1)]);
    let mut k_sq = GaussRat::zero();
    let mut s_interior = GaussRat::zero();
    let mut s_boundary = GaussRat::zero();
    for (mono, coeff) in substituted.terms() {
        if *mono == h1_sq_mono {
            // h₁² = K²/4.
            k_sq = &k_sq + &(coeff * &GaussRat::ratio(1, 4));
        } else if *mono == s_interior_mono {
            s_interior = &s_interior + coeff;
        } else if *mono == s_boundary_mono {
            s_boundary = &s_boundary + coeff;
        } else {
            return Err(CaseError::StrayGenerator(format!("{mono:?}")));
        }
    }
    let stage = |unit: i64| TheoremCoefficients {
        k_sq: &k_sq * &GaussRat::from_int(unit),
        s_interior: &s_interior * &GaussRat::from_int(unit),
        s_boundary: &s_boundary * &GaussRat::from_int(unit),
    };
    Ok(TheoremAssembly { round_units: stage(16), cubic_units: stage(32) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::{boundary_metric_jets, derive_inverse_symbols};
    use crate::reference::{
        reference_sum_displayed, reference_theorem_displayed, reference_theorem_from_displayed_sum,
        reference_theorem_recomputed,
    };

    fn rat(n: i64, d: i64) -> GaussRat {
        GaussRat::ratio(n, d)
    }

    fn density(h1: (i64, i64), h2: (i64, i64), sb: (i64, i64)) -> CaseDensity {
        CaseDensity::new(rat(h1.0, h1.1), rat(h2.0, h2.1), rat(sb.0, sb.1))
    }

    #[test]
    fn case_table_is_structurally_valid() {
        let table = case_table();
        for (index, spec) in table.iter().enumerate() {
            assert_eq!(usize::from(spec.id), index + 1, "table order");
            assert_eq!(spec.residue_order(), -5, "case {} homogeneity", spec.id);
            assert!(spec.projected_order <= -1 && spec.free_order <= -1);
        }
        // The structural prefactors of the fifteen printed case headings.
        let i = |n: i64, d: i64| GaussRat::complex_ratio(0, 1, n, d);
        let expected = [
            i(1, 2),
            i(1, 6),
            i(1, 2),
            i(1, 6),
            i(1, 2),
            i(1, 6),
            rat(-1, 2),
            rat(-1, 1),
            rat(-1, 2),
            rat(-1, 2),
            rat(-1, 1),
            rat(-1, 2),
            i(-1, 1),
            i(-1, 1),
            i(-1, 1),
        ];
        for (spec, want) in table.iter().zip(expected.iter()) {
            assert_eq!(&spec.prefactor(), want, "case {} prefactor", spec.id);
        }
    }

    #[test]
    fn engine_case_values() {
        let inv = derive_inverse_symbols(&boundary_metric_jets()).unwrap();
        let evaluations = evaluate_all(&inv).unwrap();
        let zero = CaseDensity::zero();
        let expected = [
            zero.clone(),                          // case 1
            density((9, 16), (-3, 8), (0, 1)),     // case 2
            density((0, 1), (0, 1), (1, 16)),      // case 3
            density((-5, 16), (0, 1), (0, 1)),     // case 4
            zero.clone(),                          // case 5
            density((9, 16), (-3, 8), (0, 1)),     // case 6
            density((39, 32), (0, 1), (0, 1)),     // case 7
            density((0, 1), (0, 1), (1, 12)),      // case 8
            density((-85, 32), (13, 8), (0, 1)),   // case 9
            density((-85, 32), (13, 8), (0, 1)),   // case 10
            zero,                                  // case 11
            density((39, 32), (0, 1), (0, 1)),     // case 12
            density((-111, 32), (0, 1), (0, 1)),   // case 13
            density((215, 64), (-7, 4), (5, 48)),  // case 14
            density((215, 64), (-7, 4), (5, 48)),  // case 15
        ];
        for (evaluation, want) in evaluations.iter().zip(expected.iter()) {
            assert_eq!(
                &evaluation.density, want,
                "case {} engine density",
                evaluation.spec.id
            );
            assert!(
                !evaluation.grade5_dropped,
                "case {} unexpectedly dropped a grade-5 component",
                evaluation.spec.id
            );
        }
    }

    #[test]
    fn paired_cases_agree_and_odd_cases_vanish() {
        let inv = derive_inverse_symbols(&boundary_metric_jets()).unwrap();
        let evaluations = evaluate_all(&inv).unwrap();
        let by_id = |id: u8| &evaluations[usize::from(id) - 1].density;
        for (a, b) in [(2u8, 6u8), (7, 12), (9, 10), (14, 15)] {
            assert_eq!(by_id(a), by_id(b), "cases {a} and {b} must agree");
        }
        for id in [1u8, 5, 11] {
            assert!(by_id(id).is_zero(), "case {id} must vanish");
        }
    }

    #[test]
    fn engine_sum_and_theorem() {
        let inv = derive_inverse_symbols(&boundary_metric_jets()).unwrap();
        let evaluations = evaluate_all(&inv).unwrap();
        let sum = sum_cases(&evaluations);
        assert_eq!(sum, density((19, 16), (-1, 1), (17, 48)), "engine fifteen-case total");
        let assembly = assemble_theorem(&sum).unwrap();
        assert_eq!(
            assembly.round_units,
            TheoremCoefficients {
                k_sq: rat(7, 4),
                s_interior: rat(4, 1),
                s_boundary: rat(5, 3),
            },
            "engine theorem, πΩ₃/16 units"
        );
        assert_eq!(
            assembly.cubic_units,
            TheoremCoefficients {
                k_sq: rat(7, 2),
                s_interior: rat(8, 1),
                s_boundary: rat(10, 3),
            },
            "engine theorem, π³/16 units"
        );
    }

    #[test]
    fn theorem_assembly_reproduces_reference_readings() {
        // From the displayed fifteen-case total, the cubic-unit stage gives
        // the self-consistent triple, and the displayed theorem's K² matches
        // the round-unit stage instead (the documented mixed-unit print).
        let assembly = assemble_theorem(&reference_sum_displayed()).unwrap();
        assert_eq!(assembly.cubic_units, reference_theorem_from_displayed_sum());
        let displayed = reference_theorem_displayed();
        assert_eq!(assembly.round_units.k_sq, displayed.k_sq);
        assert_eq!(assembly.cubic_units.s_interior, displayed.s_interior);
        assert_eq!(assembly.cubic_units.s_boundary, displayed.s_boundary);
        // The recomputed-unit total gives the recomputed triple.
        let recomputed =
            assemble_theorem(&crate::reference::reference_sum_recomputed()).unwrap();
        assert_eq!(recomputed.cubic_units, reference_theorem_recomputed());
    }
}
