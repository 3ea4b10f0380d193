//! Exact symbolic engine for the boundary residue density of the squared
//! inverse Dirac operator on a five-dimensional manifold with boundary.
//!
//! The engine rebuilds the symbol 2-jets of the Dirac operator in boundary
//! normal coordinates, inverts them order by order, and evaluates the
//! fifteen boundary-term cases of the residue pairing with exact Gaussian
//! rational arithmetic, comparing every stage against stored reference
//! values and independent numeric oracles.

pub mod cases;
pub mod clifford;
pub mod curvature;
pub mod gamma;
pub mod gauss;
pub mod jets;
pub mod poly;
pub mod ratxi;
pub mod reference;
pub mod sphere;

pub use cases::{
    assemble_theorem, case_table, evaluate_all, evaluate_case, sum_cases, CaseError,
    CaseEvaluation, CaseSpec, TheoremAssembly,
};
pub use clifford::{CliffElem, CliffMono};
pub use curvature::{contract_curvature, Contraction, CurvatureError};
pub use gauss::GaussRat;
pub use jets::{
    boundary_metric_jets, derive_inverse_symbols, verify_composition, Dir, InverseSymbols,
    JetError, JetSymbol, MetricJets,
};
pub use poly::{Generator, Mono, Poly};
pub use ratxi::{RatXi, RatXiError};
pub use reference::{CaseDensity, TheoremCoefficients, ZeroIntegralFixture};
pub use sphere::{integrate_sphere, sphere_moment};
