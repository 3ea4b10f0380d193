//! Symbol jets of the Dirac operator in boundary normal coordinates.
//!
//! Near the boundary the metric is `dxₙ² + (1/h(xₙ)) g^∂`; every symbol is
//! expanded to second order in `x` around a fixed boundary point `x₀`:
//!
//! ```text
//! σ(x,ξ) = j0(ξ) + Σ_μ x_μ · j1[μ](ξ) + ½ Σ_{μ,ν} x_μ x_ν · j2[(μ,ν)](ξ),
//! ```
//!
//! where the entries are the *derivative values* `∂_{x_μ}σ|₀`,
//! `∂_{x_μ}∂_{x_ν}σ|₀` (not Taylor coefficients) and live in
//! [`RatXi`]. The stored jet data for the Dirac symbol pieces
//! (`|ξ|²`-jet, `c(ξ)`-jet, subleading term) encodes the geometry through
//! `h1 = h′(0)`, `h2 = h″(0)` and the boundary curvature generators; all
//! curvature sums are expanded over explicit tangential indices `1..4` at
//! construction time.
//!
//! The inverse-operator symbols are built by the quotient rule and the
//! parametrix recursion:
//!
//! * scalar jet of `1/|ξ|²` from the `|ξ|²`-jet: `(1/Q)′ = −Q′/Q²`,
//!   `(1/Q)″ = −Q″/Q² + 2Q′²/Q³`;
//! * `q₋₁ = i · (c(ξ)-jet) ⊛ (1/|ξ|²-jet)`;
//! * `q₋₂ = −q₋₁ ⊛ [p₀ ⊛ q₋₁ + Σ_j ∂_{ξ_j}p₁ ⊛ D_{x_j}q₋₁]`,
//!   `D_x = −i∂_x`;
//! * `q₋₃ = −q₋₁ ⊛ [p₀ ⊛ q₋₂ + Σ_j ∂_{ξ_j}p₁ ⊛ D_{x_j}q₋₂]` at order zero
//!   (exact: `p₁` is linear in `ξ` and `p₀` is `ξ`-free, so no higher
//!   `ξ`-derivative terms survive).
//!
//! [`verify_composition`] multiplies `p₁ ⊛ q₋₁` back out. The stored metric
//! jet tables are *mutually inconsistent at second order* — `c(ξ)² + |ξ|²`
//! has a curvature defect in the tangential sector and an
//! `(h1² − h2)`-defect in the normal sector — so the product is the
//! identity only through first order, with two pinned second-order
//! residuals that the engine reports rather than hides (see
//! [`CompositionReport`] and the deviation records in the final report).

use crate::clifford::CliffElem;
use crate::curvature::curv;
use crate::gauss::GaussRat;
use crate::poly::{Generator, Poly};
use crate::ratxi::{tangential_norm_sq, RatXi, RatXiError};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A coordinate direction at the boundary point: tangential `x1..x4` or
/// normal `xn`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Dir {
    /// Tangential direction, index `1..=4`.
    T(u8),
    /// The inward normal direction.
    N,
}

/// All five directions in canonical order.
pub const DIRECTIONS: [Dir; 5] = [Dir::T(1), Dir::T(2), Dir::T(3), Dir::T(4), Dir::N];

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dir::T(k) => write!(f, "x{k}"),
            Dir::N => write!(f, "xn"),
        }
    }
}

fn sorted_pair(a: Dir, b: Dir) -> (Dir, Dir) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Errors from jet arithmetic.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum JetError {
    /// A derivative entry was requested beyond the tracked expansion order.
    #[error("jet entry {entry} is not tracked at this expansion order")]
    MissingOrder { entry: String },
    /// Underlying symbol arithmetic failed.
    #[error(transparent)]
    Arithmetic(#[from] RatXiError),
}

/// A symbol together with its `x`-derivative data at `x₀` up to second,
/// first, or zeroth order. Absent map keys are zero; an absent *map* means
/// that expansion order is not tracked, and looking it up is an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetSymbol {
    j0: RatXi,
    j1: Option<BTreeMap<Dir, RatXi>>,
    j2: Option<BTreeMap<(Dir, Dir), RatXi>>,
}

impl JetSymbol {
    /// A 2-jet. Second-order keys are sorted internally.
    pub fn full(
        j0: RatXi,
        j1: BTreeMap<Dir, RatXi>,
        j2: BTreeMap<(Dir, Dir), RatXi>,
    ) -> Self {
        let j2 = j2
            .into_iter()
            .map(|((a, b), v)| (sorted_pair(a, b), v))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let j1 = j1.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        JetSymbol { j0, j1: Some(j1), j2: Some(j2) }
    }

    /// A 1-jet: first-order data only.
    pub fn first_order(j0: RatXi, j1: BTreeMap<Dir, RatXi>) -> Self {
        let j1 = j1.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        JetSymbol { j0, j1: Some(j1), j2: None }
    }

    /// A 0-jet: the value at `x₀` alone.
    pub fn value_only(j0: RatXi) -> Self {
        JetSymbol { j0, j1: None, j2: None }
    }

    /// The constant-in-`x` identity jet.
    pub fn identity() -> Self {
        JetSymbol {
            j0: RatXi::constant(GaussRat::one()),
            j1: Some(BTreeMap::new()),
            j2: Some(BTreeMap::new()),
        }
    }

    /// Value at `x₀`.
    pub fn j0(&self) -> &RatXi {
        &self.j0
    }

    /// Whether first-order data is tracked.
    pub fn has_first_order(&self) -> bool {
        self.j1.is_some()
    }

    /// Whether second-order data is tracked.
    pub fn has_second_order(&self) -> bool {
        self.j2.is_some()
    }

    /// First-order entry `∂_{x_d}σ|₀`.
    pub fn j1_entry(&self, d: Dir) -> Result<RatXi, JetError> {
        match &self.j1 {
            None => Err(JetError::MissingOrder { entry: format!("d/d{d}") }),
            Some(map) => Ok(map.get(&d).cloned().unwrap_or_else(RatXi::zero)),
        }
    }

    /// Second-order entry `∂_{x_a}∂_{x_b}σ|₀` (order-insensitive).
    pub fn j2_entry(&self, a: Dir, b: Dir) -> Result<RatXi, JetError> {
        match &self.j2 {
            None => Err(JetError::MissingOrder { entry: format!("d²/d{a} d{b}") }),
            Some(map) => Ok(map.get(&sorted_pair(a, b)).cloned().unwrap_or_else(RatXi::zero)),
        }
    }

    /// Derivative entry addressed by a list of directions (length ≤ 2).
    pub fn entry(&self, derivs: &[Dir]) -> Result<RatXi, JetError> {
        match derivs {
            [] => Ok(self.j0.clone()),
            [d] => self.j1_entry(*d),
            [a, b] => self.j2_entry(*a, *b),
            _ => Err(JetError::MissingOrder {
                entry: format!("order-{} x-derivative", derivs.len()),
            }),
        }
    }

    /// Negation.
    pub fn neg(&self) -> JetSymbol {
        JetSymbol {
            j0: self.j0.neg(),
            j1: self
                .j1
                .as_ref()
                .map(|m| m.iter().map(|(k, v)| (*k, v.neg())).collect()),
            j2: self
                .j2
                .as_ref()
                .map(|m| m.iter().map(|(k, v)| (*k, v.neg())).collect()),
        }
    }

    /// Scale by a constant.
    pub fn scale(&self, c: &GaussRat) -> JetSymbol {
        JetSymbol {
            j0: self.j0.scale(c),
            j1: self
                .j1
                .as_ref()
                .map(|m| m.iter().map(|(k, v)| (*k, v.scale(c))).collect()),
            j2: self
                .j2
                .as_ref()
                .map(|m| m.iter().map(|(k, v)| (*k, v.scale(c))).collect()),
        }
    }

    /// Sum, tracked to the smaller of the two expansion orders.
    pub fn add(&self, rhs: &JetSymbol) -> Result<JetSymbol, JetError> {
        let j0 = self.j0.add(&rhs.j0)?;
        let j1 = match (&self.j1, &rhs.j1) {
            (Some(a), Some(b)) => {
                let mut out = a.clone();
                for (k, v) in b {
                    let cur = out.remove(k).unwrap_or_else(RatXi::zero);
                    let sum = cur.add(v)?;
                    if !sum.is_zero() {
                        out.insert(*k, sum);
                    }
                }
                Some(out)
            }
            _ => None,
        };
        let j2 = match (&self.j2, &rhs.j2) {
            (Some(a), Some(b)) => {
                let mut out = a.clone();
                for (k, v) in b {
                    let cur = out.remove(k).unwrap_or_else(RatXi::zero);
                    let sum = cur.add(v)?;
                    if !sum.is_zero() {
                        out.insert(*k, sum);
                    }
                }
                Some(out)
            }
            _ => None,
        };
        Ok(JetSymbol { j0, j1, j2 })
    }

    /// Leibniz product, tracked to the smaller of the two expansion orders:
    /// `(fg)″ = f″g + f′g′ + g′f′ + fg″` entrywise, preserving operand
    /// order (the coefficients are Clifford-valued).
    pub fn mul(&self, rhs: &JetSymbol) -> Result<JetSymbol, JetError> {
        let j0 = self.j0.mul(&rhs.j0)?;
        let j1 = match (&self.j1, &rhs.j1) {
            (Some(a), Some(b)) => {
                let mut out: BTreeMap<Dir, RatXi> = BTreeMap::new();
                let mut dirs: Vec<Dir> = a.keys().chain(b.keys()).copied().collect();
                dirs.sort();
                dirs.dedup();
                for d in dirs {
                    let fa = a.get(&d).cloned().unwrap_or_else(RatXi::zero);
                    let fb = b.get(&d).cloned().unwrap_or_else(RatXi::zero);
                    let v = fa.mul(&rhs.j0)?.add(&self.j0.mul(&fb)?)?;
                    if !v.is_zero() {
                        out.insert(d, v);
                    }
                }
                Some(out)
            }
            _ => None,
        };
        let j2 = match ((&self.j1, &self.j2), (&rhs.j1, &rhs.j2)) {
            ((Some(a1), Some(a2)), (Some(b1), Some(b2))) => {
                let mut keys: Vec<(Dir, Dir)> = a2.keys().chain(b2.keys()).copied().collect();
                for da in a1.keys() {
                    for db in b1.keys() {
                        keys.push(sorted_pair(*da, *db));
                    }
                }
                keys.sort();
                keys.dedup();
                let mut out: BTreeMap<(Dir, Dir), RatXi> = BTreeMap::new();
                let get1 = |m: &BTreeMap<Dir, RatXi>, d: Dir| {
                    m.get(&d).cloned().unwrap_or_else(RatXi::zero)
                };
                for (da, db) in keys {
                    // ∂a∂b(fg) = f_ab g + f_a g_b + f_b g_a + f g_ab.
                    let mut v = a2
                        .get(&(da, db))
                        .cloned()
                        .unwrap_or_else(RatXi::zero)
                        .mul(&rhs.j0)?;
                    v = v.add(&get1(a1, da).mul(&get1(b1, db))?)?;
                    v = v.add(&get1(a1, db).mul(&get1(b1, da))?)?;
                    v = v.add(
                        &self
                            .j0
                            .mul(&b2.get(&(da, db)).cloned().unwrap_or_else(RatXi::zero))?,
                    )?;
                    if !v.is_zero() {
                        out.insert((da, db), v);
                    }
                }
                Some(out)
            }
            _ => None,
        };
        Ok(JetSymbol { j0, j1, j2 })
    }

    /// Entrywise `ξ`-derivative: every jet entry is differentiated in the
    /// covariable (tangential ones require unrestricted entries).
    pub fn xi_derivative(&self, d: Dir) -> Result<JetSymbol, JetError> {
        let apply = |r: &RatXi| -> Result<RatXi, RatXiError> {
            match d {
                Dir::T(k) => r.dxi(k),
                Dir::N => Ok(r.dxin()),
            }
        };
        let j0 = apply(&self.j0)?;
        let j1 = match &self.j1 {
            None => None,
            Some(m) => {
                let mut out = BTreeMap::new();
                for (k, v) in m {
                    let dv = apply(v)?;
                    if !dv.is_zero() {
                        out.insert(*k, dv);
                    }
                }
                Some(out)
            }
        };
        let j2 = match &self.j2 {
            None => None,
            Some(m) => {
                let mut out = BTreeMap::new();
                for (k, v) in m {
                    let dv = apply(v)?;
                    if !dv.is_zero() {
                        out.insert(*k, dv);
                    }
                }
                Some(out)
            }
        };
        Ok(JetSymbol { j0, j1, j2 })
    }

    /// The jet of `∂_{x_d}σ`: drops one expansion order
    /// (`j0 ← j1[d]`, `j1[ν] ← j2[(d,ν)]`).
    pub fn x_derivative(&self, d: Dir) -> Result<JetSymbol, JetError> {
        let j0 = self.j1_entry(d)?;
        match &self.j2 {
            None => Ok(JetSymbol::value_only(j0)),
            Some(map) => {
                let mut j1 = BTreeMap::new();
                for nu in DIRECTIONS {
                    let v = map.get(&sorted_pair(d, nu)).cloned().unwrap_or_else(RatXi::zero);
                    if !v.is_zero() {
                        j1.insert(nu, v);
                    }
                }
                Ok(JetSymbol::first_order(j0, j1))
            }
        }
    }
}

/// `Σ_k ξ_k e_k`, the tangential Clifford symbol.
pub fn c_xi_tangential() -> CliffElem {
    let mut e = CliffElem::zero();
    for k in 1..=4u8 {
        e.add_term(1 << (k - 1), Poly::gen(Generator::Xi(k)));
    }
    e
}

/// The stored jet tables for the Dirac symbol pieces at `x₀`.
pub struct MetricJets {
    /// 2-jet of `|ξ|² = ξₙ² + |ξ′|²_{h}`.
    pub norm_sq: JetSymbol,
    /// 2-jet of `1/|ξ|²`, derived by the quotient rule.
    pub inv_norm_sq: JetSymbol,
    /// 2-jet of `c(ξ)`.
    pub c_xi: JetSymbol,
    /// 2-jet of the leading Dirac symbol `p₁ = i c(ξ)`.
    pub p1: JetSymbol,
    /// 1-jet of the subleading Dirac symbol `p₀`.
    pub p0: JetSymbol,
}

/// Build the metric jet tables. `h1`, `h2` are the first and second normal
/// derivatives of the warping function at the boundary; curvature entries
/// are the boundary curvature generators, expanded over explicit indices.
pub fn boundary_metric_jets() -> MetricJets {
    let h1 = Poly::gen(Generator::H1);
    let h2 = Poly::gen(Generator::H2);
    let w = tangential_norm_sq();

    // ---- |ξ|² ----------------------------------------------------------
    let q_j0 = RatXi::from_parts(
        vec![CliffElem::scalar(w.clone()), CliffElem::zero(), CliffElem::scalar(Poly::one())],
        0,
    );
    let mut q_j1 = BTreeMap::new();
    q_j1.insert(Dir::N, RatXi::from_poly(h1.mul(&w)));
    let mut q_j2 = BTreeMap::new();
    q_j2.insert((Dir::N, Dir::N), RatXi::from_poly(h2.mul(&w)));
    for i in 1..=4u8 {
        for j in i..=4u8 {
            // −(1/3) Σ_{α,β} (R_{iαjβ} + R_{iβjα}) ξ_α ξ_β.
            let mut s = Poly::zero();
            for alpha in 1..=4u8 {
                for beta in 1..=4u8 {
                    let r = curv(i, alpha, j, beta).add(&curv(i, beta, j, alpha));
                    if r.is_zero() {
                        continue;
                    }
                    s = s.add(
                        &r.mul(&Poly::gen(Generator::Xi(alpha)))
                            .mul(&Poly::gen(Generator::Xi(beta))),
                    );
                }
            }
            let entry = s.scale(&GaussRat::ratio(-1, 3));
            if !entry.is_zero() {
                q_j2.insert((Dir::T(i), Dir::T(j)), RatXi::from_poly(entry));
            }
        }
    }
    let norm_sq = JetSymbol::full(q_j0, q_j1, q_j2);

    // ---- 1/|ξ|² by the quotient rule ------------------------------------
    let inv_norm_sq = inverse_norm_jet(&norm_sq);

    // ---- c(ξ) ------------------------------------------------------------
    let c_j0 = RatXi::from_parts(vec![c_xi_tangential(), CliffElem::gen(5)], 0);
    let mut c_j1 = BTreeMap::new();
    c_j1.insert(
        Dir::N,
        RatXi::from_elem(c_xi_tangential().scale_poly(&h1.scale(&GaussRat::ratio(1, 2)))),
    );
    let mut c_j2 = BTreeMap::new();
    // (3/4 h1² − 1/2 h2) c(ξ′).
    let nn_coeff = h1
        .pow(2)
        .scale(&GaussRat::ratio(3, 4))
        .add(&h2.scale(&GaussRat::ratio(-1, 2)));
    c_j2.insert(
        (Dir::N, Dir::N),
        RatXi::from_elem(c_xi_tangential().scale_poly(&nn_coeff)),
    );
    for i in 1..=4u8 {
        for j in i..=4u8 {
            // (1/6) Σ_{l,t} ξ_l (R_{tilj} + R_{tjli}) e_t.
            let mut e = CliffElem::zero();
            for l in 1..=4u8 {
                for t in 1..=4u8 {
                    let r = curv(t, i, l, j).add(&curv(t, j, l, i));
                    if r.is_zero() {
                        continue;
                    }
                    e.add_term(
                        1 << (t - 1),
                        r.mul(&Poly::gen(Generator::Xi(l))).scale(&GaussRat::ratio(1, 6)),
                    );
                }
            }
            if !e.is_zero() {
                c_j2.insert((Dir::T(i), Dir::T(j)), RatXi::from_elem(e));
            }
        }
    }
    let c_xi = JetSymbol::full(c_j0, c_j1, c_j2);

    // ---- p₁ = i c(ξ) ------------------------------------------------------
    let p1 = c_xi.scale(&GaussRat::i());

    // ---- p₀ ---------------------------------------------------------------
    let p0_j0 = RatXi::from_elem(CliffElem::gen(5).scale_poly(&h1.neg()));
    let mut p0_j1 = BTreeMap::new();
    p0_j1.insert(
        Dir::N,
        RatXi::from_elem(
            CliffElem::gen(5).scale_poly(&h1.pow(2).sub(&h2)),
        ),
    );
    for i in 1..=4u8 {
        // (1/8) Σ_{β,s,α} R_{βisα} e_β e_s e_α.
        let mut acc = CliffElem::zero();
        for b in 1..=4u8 {
            for s in 1..=4u8 {
                for a in 1..=4u8 {
                    let r = curv(b, i, s, a);
                    if r.is_zero() {
                        continue;
                    }
                    let prod = CliffElem::gen(b).mul(&CliffElem::gen(s)).mul(&CliffElem::gen(a));
                    acc = acc.add(&prod.scale_poly(&r.scale(&GaussRat::ratio(1, 8))));
                }
            }
        }
        if !acc.is_zero() {
            p0_j1.insert(Dir::T(i), RatXi::from_elem(acc));
        }
    }
    let p0 = JetSymbol::first_order(p0_j0, p0_j1);

    MetricJets { norm_sq, inv_norm_sq, c_xi, p1, p0 }
}

/// Quotient-rule 2-jet of `1/|ξ|²` from the `|ξ|²` 2-jet:
/// `(1/Q)_μ = −Q_μ/Q²`, `(1/Q)_{μν} = −Q_{μν}/Q² + 2 Q_μ Q_ν /Q³`.
pub fn inverse_norm_jet(norm_sq: &JetSymbol) -> JetSymbol {
    // The jet entries of |ξ|² are polynomial (no denominators); read out
    // their numerators and build the rational entries directly.
    let j0 = RatXi::from_parts(vec![CliffElem::scalar(Poly::one())], 1);
    let mut j1 = BTreeMap::new();
    let mut j2 = BTreeMap::new();
    let poly_of = |r: &RatXi| -> Vec<CliffElem> { r.num().to_vec() };
    for d in DIRECTIONS {
        let qd = norm_sq.j1_entry(d).expect("norm-square jet is second order");
        if qd.is_zero() {
            continue;
        }
        // −Q_d / Q².
        let num: Vec<CliffElem> = poly_of(&qd).iter().map(|e| e.neg()).collect();
        j1.insert(d, RatXi::from_parts(num, 2));
    }
    for (ai, a) in DIRECTIONS.iter().enumerate() {
        for b in &DIRECTIONS[ai..] {
            let qab = norm_sq.j2_entry(*a, *b).expect("norm-square jet is second order");
            let qa = norm_sq.j1_entry(*a).expect("norm-square jet is second order");
            let qb = norm_sq.j1_entry(*b).expect("norm-square jet is second order");
            // −Q_ab/Q².
            let mut term = RatXi::from_parts(
                poly_of(&qab).iter().map(|e| e.neg()).collect(),
                2,
            );
            // +2 Q_a Q_b / Q³.
            if !qa.is_zero() && !qb.is_zero() {
                let prod = qa.mul(&qb).expect("polynomial product");
                let num: Vec<CliffElem> =
                    prod.num().iter().map(|e| e.scale(&GaussRat::from_int(2))).collect();
                let lifted = RatXi::from_parts(num, 3 + prod.q_power());
                term = term.add(&lifted).expect("same restriction state");
            }
            if !term.is_zero() {
                j2.insert((*a, *b), term);
            }
        }
    }
    JetSymbol::full(j0, j1, j2)
}

/// The inverse-operator symbol jets.
pub struct InverseSymbols {
    /// 2-jet of the order `−1` symbol `i c(ξ)/|ξ|²`.
    pub q1: JetSymbol,
    /// 1-jet of the order `−2` symbol.
    pub q2: JetSymbol,
    /// 0-jet of the order `−3` symbol.
    pub q3: JetSymbol,
}

/// Build the inverse symbols by the parametrix recursion (see module docs).
pub fn derive_inverse_symbols(m: &MetricJets) -> Result<InverseSymbols, JetError> {
    let minus_i = -GaussRat::i();
    // q₋₁ = i · c(ξ)-jet ⊛ (1/|ξ|²)-jet.
    let q1 = m.c_xi.mul(&m.inv_norm_sq)?.scale(&GaussRat::i());

    // bracket = p₀ ⊛ q₋₁ + Σ_j ∂_{ξ_j} p₁ ⊛ (−i) ∂_{x_j} q₋₁  (1-jet).
    let mut bracket = m.p0.mul(&q1)?;
    for d in DIRECTIONS {
        let dp1 = m.p1.xi_derivative(d)?;
        let dq1 = q1.x_derivative(d)?.scale(&minus_i);
        bracket = bracket.add(&dp1.mul(&dq1)?)?;
    }
    let q2 = q1.mul(&bracket)?.neg();

    // q₋₃ value: −q₋₁ [p₀ q₋₂ + Σ_j ∂_{ξ_j}p₁ · (−i) ∂_{x_j}q₋₂] at x₀.
    let mut acc = m.p0.j0().mul(q2.j0())?;
    for d in DIRECTIONS {
        let dp1_val = m.p1.xi_derivative(d)?.j0().clone();
        let dq2_val = q2.j1_entry(d)?.scale(&minus_i);
        acc = acc.add(&dp1_val.mul(&dq2_val)?)?;
    }
    let q3 = JetSymbol::value_only(q1.j0().mul(&acc)?.neg());

    Ok(InverseSymbols { q1, q2, q3 })
}

/// The per-entry residuals of `p₁ ⊛ q₋₁ − 1`.
pub struct CompositionReport {
    /// Nonzero residual entries, named like `"d²/dx1 dx2"`.
    pub residuals: Vec<(String, RatXi)>,
}

impl CompositionReport {
    /// True when the composition is the identity through first order and
    /// the only defects sit in second-order entries.
    pub fn first_order_exact(&self) -> bool {
        self.residuals.iter().all(|(name, _)| name.starts_with("d²"))
    }
}

/// Multiply `p₁ ⊛ q₋₁` and report every entry of the difference from the
/// identity jet.
pub fn verify_composition(
    m: &MetricJets,
    inv: &InverseSymbols,
) -> Result<CompositionReport, JetError> {
    let prod = m.p1.mul(&inv.q1)?;
    let delta = prod.add(&JetSymbol::identity().neg())?;
    let mut residuals = Vec::new();
    if !delta.j0().is_zero() {
        residuals.push(("value".to_string(), delta.j0().clone()));
    }
    for d in DIRECTIONS {
        let v = delta.j1_entry(d)?;
        if !v.is_zero() {
            residuals.push((format!("d/d{d}"), v));
        }
    }
    for (ai, a) in DIRECTIONS.iter().enumerate() {
        for b in &DIRECTIONS[ai..] {
            let v = delta.j2_entry(*a, *b)?;
            if !v.is_zero() {
                residuals.push((format!("d²/d{a} d{b}"), v));
            }
        }
    }
    Ok(CompositionReport { residuals })
}
