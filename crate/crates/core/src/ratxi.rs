//! Rational functions of the normal covariable `ξₙ` with Clifford-algebra
//! coefficients — the data a boundary symbol computation lives in.
//!
//! An element represents
//!
//! ```text
//!   Σ_j  N_j · ξₙ^j
//!   ───────────────────────────────     (before restriction: D = Q^q)
//!   (ξₙ − i)^m (ξₙ + i)^p               (after restriction)
//! ```
//!
//! where each `N_j` is a Clifford element whose polynomial coefficients
//! never mention `ξₙ` (its powers are the vector index), and
//! `Q = ξₙ² + ξ₁² + ⋯ + ξ₄²` is the full covariable norm square.
//!
//! *Restriction* imposes `|ξ′| = 1`: the denominator `Q^q` factors as
//! `(ξₙ−i)^q (ξₙ+i)^q` and nothing else changes — numerator `ξ`-sums are
//! left untouched (the sphere integral evaluates them exactly later), so
//! only the structurally-tracked denominator is rewritten.
//!
//! After every arithmetic operation the fraction is reduced: common linear
//! factors `(ξₙ ∓ i)` are cancelled by synthetic division (post-restriction)
//! and common factors of `Q` by exact long division (pre-restriction).
//!
//! `π⁺` projects onto the part holomorphic in the lower half-plane and
//! decaying at infinity — for a proper rational function with poles only at
//! `±i` that is exactly the principal part at `ξₙ = i`, computed here by an
//! exact Taylor expansion of `N(i+t)·(2i+t)^{−p}` truncated at `t^{m−1}`.
//! The same expansion's top coefficient gives the residue, hence the
//! contour integral `∮ dξₙ = 2πi · Res_{ξₙ=i}`, which `integrate_xin`
//! returns in units of `π`.

use crate::clifford::CliffElem;
use crate::gauss::GaussRat;
use crate::poly::{Generator, Poly};
use num_integer::binomial;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Errors from symbol arithmetic and the contour operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RatXiError {
    /// Tangential `ξ`-derivatives only make sense before `|ξ′| = 1` is imposed.
    #[error("tangential ξ-derivative applied after restriction to the unit cosphere")]
    RestrictedTangentialDerivative,
    /// `restrict` applied twice.
    #[error("symbol is already restricted to the unit cosphere")]
    AlreadyRestricted,
    /// An operation that needs `|ξ′| = 1` was called on an unrestricted symbol.
    #[error("{0} requires a symbol restricted to |ξ'| = 1")]
    NotRestricted(&'static str),
    /// Mixed restricted/unrestricted operands.
    #[error("restriction state mismatch between operands")]
    RestrictionMismatch,
    /// `π⁺` needs the rational function to vanish at `ξₙ → ∞`.
    #[error("π⁺ undefined: no decay (numerator degree {num_deg} ≥ pole order {pole_order})")]
    NoDecay { num_deg: usize, pole_order: usize },
    /// The contour integral needs decay of order two.
    #[error(
        "contour integral diverges: insufficient decay (numerator degree {num_deg}, pole order {pole_order})"
    )]
    InsufficientDecay { num_deg: usize, pole_order: usize },
}

/// A rational function of `ξₙ` with Clifford coefficients; see module docs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatXi {
    /// `num[j]` is the Clifford coefficient of `ξₙ^j`; no trailing zeros.
    num: Vec<CliffElem>,
    /// Power of `Q` in the denominator (zero once restricted).
    q: u32,
    /// Power of `(ξₙ − i)` in the denominator (zero before restriction).
    m: u32,
    /// Power of `(ξₙ + i)` in the denominator (zero before restriction).
    p: u32,
    /// Whether `|ξ′| = 1` has been imposed.
    restricted: bool,
}

/// `|ξ′|² = ξ₁² + ξ₂² + ξ₃² + ξ₄²` as a polynomial.
pub fn tangential_norm_sq() -> Poly {
    let mut w = Poly::zero();
    for k in 1..=4 {
        w = w.add(&Poly::gen(Generator::Xi(k)).pow(2));
    }
    w
}

fn trim(num: &mut Vec<CliffElem>) {
    while num.last().map(|e| e.is_zero()).unwrap_or(false) {
        num.pop();
    }
}

/// Convolution of two numerator vectors (polynomial product in `ξₙ`).
fn conv_elem(a: &[CliffElem], b: &[CliffElem]) -> Vec<CliffElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![CliffElem::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(&mut out);
    out
}

/// Multiply a numerator vector by a scalar polynomial in `ξₙ` whose
/// coefficients are commuting polynomials.
fn conv_scalar(a: &[CliffElem], b: &[Poly]) -> Vec<CliffElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![CliffElem::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.scale_poly(y));
        }
    }
    trim(&mut out);
    out
}

/// Coefficients of `(ξₙ + root)^k` as GaussRat constants.
fn linear_power(root: &GaussRat, k: u32) -> Vec<Poly> {
    let mut out = Vec::with_capacity(k as usize + 1);
    for r in 0..=k {
        let b = GaussRat::from_int(binomial(k as u64, r as u64) as i64);
        let c = &b * &root.pow(k - r);
        out.push(Poly::constant(c));
    }
    out
}

/// Coefficients of `Q^k = (ξₙ² + |ξ′|²)^k`.
fn q_power(k: u32) -> Vec<Poly> {
    let w = tangential_norm_sq();
    let mut out = vec![Poly::one()];
    for _ in 0..k {
        // Multiply by (W + ξₙ²).
        let mut next = vec![Poly::zero(); out.len() + 2];
        for (j, c) in out.iter().enumerate() {
            next[j] = next[j].add(&c.mul(&w));
            next[j + 2] = next[j + 2].add(c);
        }
        out = next;
    }
    out
}

/// Horner evaluation of the numerator at `ξₙ = c`.
fn eval_at(num: &[CliffElem], c: &GaussRat) -> CliffElem {
    let mut acc = CliffElem::zero();
    for coeff in num.iter().rev() {
        acc = acc.scale(c).add(coeff);
    }
    acc
}

/// Synthetic division of the numerator by `(ξₙ − c)`; the remainder must be
/// zero (checked by the caller via [`eval_at`]).
fn synth_div(num: &[CliffElem], c: &GaussRat) -> Vec<CliffElem> {
    let d = num.len();
    debug_assert!(d >= 1);
    let mut out = vec![CliffElem::zero(); d - 1];
    let mut carry = CliffElem::zero();
    for j in (1..d).rev() {
        carry = num[j].add(&carry.scale(c));
        out[j - 1] = carry.clone();
    }
    let mut v = out;
    trim(&mut v);
    v
}

/// Exact long division of the numerator by `Q = ξₙ² + |ξ′|²` (monic in
/// `ξₙ`); returns the quotient if the remainder vanishes.
fn div_q(num: &[CliffElem]) -> Option<Vec<CliffElem>> {
    if num.len() < 3 {
        // Degree < 2 can only be divisible if identically zero.
        return if num.iter().all(|e| e.is_zero()) { Some(Vec::new()) } else { None };
    }
    let w = tangential_norm_sq();
    let mut rem: Vec<CliffElem> = num.to_vec();
    let mut quot = vec![CliffElem::zero(); num.len() - 2];
    for j in (2..rem.len()).rev() {
        let lead = rem[j].clone();
        if lead.is_zero() {
            continue;
        }
        quot[j - 2] = lead.clone();
        rem[j] = CliffElem::zero();
        rem[j - 2] = rem[j - 2].sub(&lead.scale_poly(&w));
    }
    if rem[0].is_zero() && rem[1].is_zero() {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

impl RatXi {
    /// The zero symbol (unrestricted).
    pub fn zero() -> Self {
        RatXi { num: Vec::new(), q: 0, m: 0, p: 0, restricted: false }
    }

    /// The zero symbol on the cosphere.
    pub fn zero_restricted() -> Self {
        RatXi { num: Vec::new(), q: 0, m: 0, p: 0, restricted: true }
    }

    /// A polynomial symbol `Σ num[j] ξₙ^j / Q^q` (unrestricted).
    pub fn from_parts(num: Vec<CliffElem>, q: u32) -> Self {
        let mut s = RatXi { num, q, m: 0, p: 0, restricted: false };
        s.reduce_in_place();
        s
    }

    /// A restricted symbol `Σ num[j] ξₙ^j / ((ξₙ−i)^m (ξₙ+i)^p)`.
    pub fn restricted_parts(num: Vec<CliffElem>, m: u32, p: u32) -> Self {
        let mut s = RatXi { num, q: 0, m, p, restricted: true };
        s.reduce_in_place();
        s
    }

    /// A `ξₙ`-free Clifford element as an unrestricted symbol.
    pub fn from_elem(e: CliffElem) -> Self {
        RatXi::from_parts(vec![e], 0)
    }

    /// A commuting polynomial as an unrestricted symbol.
    pub fn from_poly(p: Poly) -> Self {
        RatXi::from_elem(CliffElem::scalar(p))
    }

    /// A constant as an unrestricted symbol.
    pub fn constant(c: GaussRat) -> Self {
        RatXi::from_poly(Poly::constant(c))
    }

    /// True for the zero symbol.
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Whether `|ξ′| = 1` has been imposed.
    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    /// Numerator coefficients (`ξₙ`-power ascending, no trailing zeros).
    pub fn num(&self) -> &[CliffElem] {
        &self.num
    }

    /// Denominator power of `Q`.
    pub fn q_power(&self) -> u32 {
        self.q
    }

    /// Denominator power of `(ξₙ − i)`.
    pub fn m_power(&self) -> u32 {
        self.m
    }

    /// Denominator power of `(ξₙ + i)`.
    pub fn p_power(&self) -> u32 {
        self.p
    }

    /// Degree of the numerator in `ξₙ`, `None` for zero.
    pub fn xin_degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    fn reduce_in_place(&mut self) {
        trim(&mut self.num);
        if self.num.is_empty() {
            self.q = 0;
            self.m = 0;
            self.p = 0;
            return;
        }
        if self.restricted {
            debug_assert_eq!(self.q, 0);
            let i = GaussRat::i();
            while self.m > 0 && eval_at(&self.num, &i).is_zero() {
                self.num = synth_div(&self.num, &i);
                self.m -= 1;
            }
            let minus_i = -GaussRat::i();
            while self.p > 0 && eval_at(&self.num, &minus_i).is_zero() {
                self.num = synth_div(&self.num, &minus_i);
                self.p -= 1;
            }
        } else {
            debug_assert_eq!((self.m, self.p), (0, 0));
            while self.q > 0 {
                match div_q(&self.num) {
                    Some(quot) => {
                        self.num = quot;
                        self.q -= 1;
                    }
                    None => break,
                }
            }
        }
        trim(&mut self.num);
        if self.num.is_empty() {
            self.q = 0;
            self.m = 0;
            self.p = 0;
        }
    }

    /// Negation.
    pub fn neg(&self) -> RatXi {
        let mut out = self.clone();
        out.num = out.num.iter().map(|e| e.neg()).collect();
        out
    }

    /// Scale by a constant.
    pub fn scale(&self, c: &GaussRat) -> RatXi {
        if c.is_zero() {
            return if self.restricted { RatXi::zero_restricted() } else { RatXi::zero() };
        }
        let mut out = self.clone();
        out.num = out.num.iter().map(|e| e.scale(c)).collect();
        out
    }

    /// Scale by a `ξₙ`-free commuting polynomial.
    pub fn scale_poly(&self, po: &Poly) -> RatXi {
        let mut out = self.clone();
        out.num = out.num.iter().map(|e| e.scale_poly(po)).collect();
        out.reduce_in_place();
        out
    }

    /// Multiply by `ξₙ^k`.
    pub fn mul_xin(&self, k: usize) -> RatXi {
        if self.is_zero() {
            return self.clone();
        }
        let mut num = vec![CliffElem::zero(); k];
        num.extend(self.num.iter().cloned());
        let mut out = self.clone();
        out.num = num;
        out.reduce_in_place();
        out
    }

    /// Sum; operands must agree on restriction (zero is neutral).
    pub fn add(&self, rhs: &RatXi) -> Result<RatXi, RatXiError> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.restricted != rhs.restricted {
            return Err(RatXiError::RestrictionMismatch);
        }
        let mut out;
        if self.restricted {
            let m = self.m.max(rhs.m);
            let p = self.p.max(rhs.p);
            let lift = |s: &RatXi| -> Vec<CliffElem> {
                let mut v = s.num.clone();
                if m > s.m {
                    v = conv_scalar(&v, &linear_power(&(-GaussRat::i()), m - s.m));
                }
                if p > s.p {
                    v = conv_scalar(&v, &linear_power(&GaussRat::i(), p - s.p));
                }
                v
            };
            let a = lift(self);
            let b = lift(rhs);
            let n = a.len().max(b.len());
            let mut num = vec![CliffElem::zero(); n];
            for (j, e) in a.into_iter().enumerate() {
                num[j] = num[j].add(&e);
            }
            for (j, e) in b.into_iter().enumerate() {
                num[j] = num[j].add(&e);
            }
            out = RatXi { num, q: 0, m, p, restricted: true };
        } else {
            let q = self.q.max(rhs.q);
            let lift = |s: &RatXi| -> Vec<CliffElem> {
                if q > s.q {
                    conv_scalar(&s.num, &q_power(q - s.q))
                } else {
                    s.num.clone()
                }
            };
            let a = lift(self);
            let b = lift(rhs);
            let n = a.len().max(b.len());
            let mut num = vec![CliffElem::zero(); n];
            for (j, e) in a.into_iter().enumerate() {
                num[j] = num[j].add(&e);
            }
            for (j, e) in b.into_iter().enumerate() {
                num[j] = num[j].add(&e);
            }
            out = RatXi { num, q, m: 0, p: 0, restricted: false };
        }
        out.reduce_in_place();
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, rhs: &RatXi) -> Result<RatXi, RatXiError> {
        self.add(&rhs.neg())
    }

    /// Clifford product (numerators convolve, denominator exponents add).
    pub fn mul(&self, rhs: &RatXi) -> Result<RatXi, RatXiError> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(if self.restricted || rhs.restricted {
                RatXi::zero_restricted()
            } else {
                RatXi::zero()
            });
        }
        if self.restricted != rhs.restricted {
            return Err(RatXiError::RestrictionMismatch);
        }
        let mut out = RatXi {
            num: conv_elem(&self.num, &rhs.num),
            q: self.q + rhs.q,
            m: self.m + rhs.m,
            p: self.p + rhs.p,
            restricted: self.restricted,
        };
        out.reduce_in_place();
        Ok(out)
    }

    /// Tangential derivative `∂/∂ξ_k`, `k ∈ 1..=4`; only defined before
    /// restriction (on the cosphere the tangential covariables are no longer
    /// independent coordinates).
    pub fn dxi(&self, k: u8) -> Result<RatXi, RatXiError> {
        assert!((1..=4).contains(&k), "tangential covariable index out of range");
        if self.restricted {
            return Err(RatXiError::RestrictedTangentialDerivative);
        }
        let dnum: Vec<CliffElem> =
            self.num.iter().map(|e| e.map_coeffs(|po| po.dxi(k))).collect();
        if self.q == 0 {
            let mut out = RatXi { num: dnum, q: 0, m: 0, p: 0, restricted: false };
            out.reduce_in_place();
            return Ok(out);
        }
        // (N/Q^q)' = N'/Q^q − 2q ξ_k N / Q^{q+1} = (N' Q − 2q ξ_k N)/Q^{q+1}.
        let term1 = conv_scalar(&dnum, &q_power(1));
        let factor = Poly::gen(Generator::Xi(k)).scale(&GaussRat::from_int(2 * self.q as i64));
        let term2: Vec<CliffElem> = self.num.iter().map(|e| e.scale_poly(&factor)).collect();
        let n = term1.len().max(term2.len());
        let mut num = vec![CliffElem::zero(); n];
        for (j, e) in term1.into_iter().enumerate() {
            num[j] = num[j].add(&e);
        }
        for (j, e) in term2.into_iter().enumerate() {
            num[j] = num[j].sub(&e);
        }
        let mut out = RatXi { num, q: self.q + 1, m: 0, p: 0, restricted: false };
        out.reduce_in_place();
        Ok(out)
    }

    /// Normal derivative `∂/∂ξₙ`, valid before and after restriction.
    pub fn dxin(&self) -> RatXi {
        if self.is_zero() {
            return self.clone();
        }
        // N' = Σ_{j≥1} j N_j ξₙ^{j−1}.
        let dnum: Vec<CliffElem> = self
            .num
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, e)| e.scale(&GaussRat::from_int(j as i64)))
            .collect();
        let mut out = if !self.restricted {
            if self.q == 0 {
                RatXi { num: dnum, q: 0, m: 0, p: 0, restricted: false }
            } else {
                // (N' Q − 2q ξₙ N) / Q^{q+1}.
                let term1 = conv_scalar(&dnum, &q_power(1));
                let shifted: Vec<CliffElem> = std::iter::once(CliffElem::zero())
                    .chain(
                        self.num
                            .iter()
                            .map(|e| e.scale(&GaussRat::from_int(2 * self.q as i64))),
                    )
                    .collect();
                let n = term1.len().max(shifted.len());
                let mut num = vec![CliffElem::zero(); n];
                for (j, e) in term1.into_iter().enumerate() {
                    num[j] = num[j].add(&e);
                }
                for (j, e) in shifted.into_iter().enumerate() {
                    num[j] = num[j].sub(&e);
                }
                RatXi { num, q: self.q + 1, m: 0, p: 0, restricted: false }
            }
        } else {
            match (self.m, self.p) {
                (0, 0) => RatXi { num: dnum, q: 0, m: 0, p: 0, restricted: true },
                (m, p) => {
                    // N'·D_lin − N·(m (ξₙ+i) + p (ξₙ−i))-style factor, one
                    // extra power per active linear factor.
                    let mut keep: Vec<Poly> = vec![Poly::one()];
                    let mut dlog: Vec<Poly> = Vec::new();
                    if m > 0 {
                        keep = {
                            let f = linear_power(&(-GaussRat::i()), 1);
                            conv_poly(&keep, &f)
                        };
                    }
                    if p > 0 {
                        keep = {
                            let f = linear_power(&GaussRat::i(), 1);
                            conv_poly(&keep, &f)
                        };
                    }
                    // d/dξₙ log D = m/(ξₙ−i) + p/(ξₙ+i); multiplied by the
                    // kept linear factors this is a polynomial.
                    if m > 0 && p > 0 {
                        dlog = vec![
                            Poly::constant(
                                &GaussRat::from_int(m as i64 - p as i64) * &GaussRat::i(),
                            ),
                            Poly::constant(GaussRat::from_int((m + p) as i64)),
                        ];
                    } else if m > 0 {
                        dlog = vec![Poly::constant(GaussRat::from_int(m as i64))];
                    } else if p > 0 {
                        dlog = vec![Poly::constant(GaussRat::from_int(p as i64))];
                    }
                    let term1 = conv_scalar(&dnum, &keep);
                    let term2 = conv_scalar(&self.num, &dlog);
                    let n = term1.len().max(term2.len());
                    let mut num = vec![CliffElem::zero(); n];
                    for (j, e) in term1.into_iter().enumerate() {
                        num[j] = num[j].add(&e);
                    }
                    for (j, e) in term2.into_iter().enumerate() {
                        num[j] = num[j].sub(&e);
                    }
                    RatXi {
                        num,
                        q: 0,
                        m: m + u32::from(m > 0),
                        p: p + u32::from(p > 0),
                        restricted: true,
                    }
                }
            }
        };
        out.reduce_in_place();
        out
    }

    /// Impose `|ξ′| = 1`: the denominator `Q^q` becomes
    /// `(ξₙ−i)^q (ξₙ+i)^q`; the numerator is untouched.
    pub fn restrict(&self) -> Result<RatXi, RatXiError> {
        if self.restricted {
            return Err(RatXiError::AlreadyRestricted);
        }
        let mut out = RatXi {
            num: self.num.clone(),
            q: 0,
            m: self.q,
            p: self.q,
            restricted: true,
        };
        out.reduce_in_place();
        Ok(out)
    }

    /// Reinterpret a denominator-free symbol as restricted. Errors with
    /// [`RatXiError::RestrictionMismatch`] if a `Q`-power is present.
    pub fn as_restricted(&self) -> Result<RatXi, RatXiError> {
        if self.restricted {
            return Ok(self.clone());
        }
        if self.q != 0 {
            return Err(RatXiError::RestrictionMismatch);
        }
        Ok(RatXi { num: self.num.clone(), q: 0, m: 0, p: 0, restricted: true })
    }

    /// Taylor coefficients `c_0 … c_{upto−1}` of `N(i+t)·(2i+t)^{−p}`
    /// around `t = 0`; shared by `pi_plus` and `integrate_xin`.
    fn taylor_at_pole(&self, upto: usize) -> Vec<CliffElem> {
        let i = GaussRat::i();
        // a_l = Σ_{j≥l} N_j C(j,l) i^{j−l}.
        let mut a = vec![CliffElem::zero(); upto];
        for (j, nj) in self.num.iter().enumerate() {
            for l in 0..upto.min(j + 1) {
                let c = &GaussRat::from_int(binomial(j as u64, l as u64) as i64)
                    * &i.pow(((j - l) % 4) as u32);
                a[l] = a[l].add(&nj.scale(&c));
            }
        }
        if self.p == 0 {
            return a;
        }
        // g_k = (−1)^k C(p+k−1, k) (2i)^{−p−k}.
        let two_i = &GaussRat::from_int(2) * &i;
        let mut g = Vec::with_capacity(upto);
        for k in 0..upto as u64 {
            let mut c = GaussRat::from_int(binomial(self.p as u64 + k - 1, k) as i64);
            if k % 2 == 1 {
                c = -&c;
            }
            c = &c * &two_i.pow(self.p
                + k as u32).inv();
            g.push(c);
        }
        let mut out = vec![CliffElem::zero(); upto];
        for k in 0..upto {
            for l in 0..=k {
                out[k] = out[k].add(&a[l].scale(&g[k - l]));
            }
        }
        out
    }

    /// Projection onto the part with poles only at `ξₙ = i` (holomorphic in
    /// the lower half-plane, decaying at infinity): the principal part at
    /// `ξₙ = i`, returned as a single fraction over `(ξₙ−i)^m`.
    pub fn pi_plus(&self) -> Result<RatXi, RatXiError> {
        if !self.restricted {
            return Err(RatXiError::NotRestricted("π⁺"));
        }
        if self.is_zero() || self.m == 0 {
            return Ok(RatXi::zero_restricted());
        }
        let deg = self.num.len() - 1;
        let pole_order = (self.m + self.p) as usize;
        if deg >= pole_order {
            return Err(RatXiError::NoDecay { num_deg: deg, pole_order });
        }
        let c = self.taylor_at_pole(self.m as usize);
        // Numerator Σ_k c_k (ξₙ − i)^k expanded back into ξₙ-powers.
        let mut num = vec![CliffElem::zero(); self.m as usize];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (r, coeff) in linear_power(&(-GaussRat::i()), k as u32).iter().enumerate() {
                let cc = coeff.constant_term();
                num[r] = num[r].add(&ck.scale(&cc));
            }
        }
        Ok(RatXi::restricted_parts(num, self.m, 0))
    }

    /// Contour integral `∮ dξₙ` over the real line closed in the upper
    /// half-plane, in units of `π`: `2πi·Res_{ξₙ=i} = π · (2i c_{m−1})`.
    /// Requires decay of order ≥ 2 so the real-line integral converges.
    pub fn integrate_xin(&self) -> Result<CliffElem, RatXiError> {
        if !self.restricted {
            return Err(RatXiError::NotRestricted("contour integration"));
        }
        if self.is_zero() {
            return Ok(CliffElem::zero());
        }
        let deg = self.num.len() - 1;
        let pole_order = (self.m + self.p) as usize;
        if deg + 2 > pole_order {
            return Err(RatXiError::InsufficientDecay { num_deg: deg, pole_order });
        }
        if self.m == 0 {
            return Ok(CliffElem::zero());
        }
        let c = self.taylor_at_pole(self.m as usize);
        let res = c[self.m as usize - 1].clone();
        Ok(res.scale(&(&GaussRat::from_int(2) * &GaussRat::i())))
    }

    /// Component-wise spinor trace; returns the scalar symbol and whether a
    /// nonzero grade-5 coefficient was discarded anywhere.
    pub fn trace(&self) -> (RatXi, bool) {
        let mut grade5 = false;
        let num: Vec<CliffElem> = self
            .num
            .iter()
            .map(|e| {
                let t = e.trace_detailed();
                grade5 |= t.grade5_discarded;
                CliffElem::scalar(t.value)
            })
            .collect();
        let mut out = RatXi {
            num,
            q: self.q,
            m: self.m,
            p: self.p,
            restricted: self.restricted,
        };
        out.reduce_in_place();
        (out, grade5)
    }

    /// Map every commuting-polynomial coefficient (e.g. to apply an
    /// `x`-space substitution); reduces afterwards.
    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> RatXi {
        let mut out = self.clone();
        out.num = out.num.iter().map(|e| e.map_coeffs(&f)).collect();
        out.reduce_in_place();
        out
    }

    /// Canonical representative modulo the unit-sphere relation
    /// `x4² = 1 − x1² − x2² − x3²`. Two restricted symbols represent the
    /// same function on `|ξ′| = 1` iff their normal forms are equal; the
    /// pipeline itself never rewrites numerators, this exists only for
    /// comparisons.
    pub fn sphere_normal_form(&self) -> RatXi {
        self.map_coeffs(|po| po.sphere_normal_form())
    }
}

/// Convolution of two scalar `ξₙ`-polynomials.
fn conv_poly(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Poly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

impl fmt::Display for RatXi {
    /// Renders per the engine grammar, e.g.
    /// `((-1/2 - 1/4*i*xn)*e1 - 1/4*i*e5) / (xn-i)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Transpose: Clifford monomial → [(ξₙ-power, scalar coefficient)].
        let mut monos: BTreeSet<u8> = BTreeSet::new();
        for e in &self.num {
            for (mk, _) in e.terms() {
                monos.insert(*mk);
            }
        }
        // Count atomic terms to decide whether the numerator needs parens.
        let mut atom_count = 0usize;
        for e in &self.num {
            for (_, po) in e.terms() {
                atom_count += po.len();
            }
        }
        let has_den = self.q > 0 || self.m > 0 || self.p > 0;

        let mut groups: Vec<(bool, String)> = Vec::new(); // (leading_neg, body)
        for mk in monos {
            let mono_str: String =
                (0..5).filter(|k| mk & (1 << k) != 0).map(|k| format!("e{}", k + 1)).collect();
            // Gather the scalar sum for this monomial.
            let mut parts: Vec<(bool, String)> = Vec::new();
            for (j, e) in self.num.iter().enumerate() {
                let po = e.coeff(mk);
                for (m, c) in po.terms() {
                    parts.push(crate::poly::fmt_term_with_xin(m, c, j));
                }
            }
            if parts.is_empty() {
                continue;
            }
            if mono_str.is_empty() {
                // Scalar group: emit terms individually.
                for part in parts {
                    groups.push(part);
                }
            } else if parts.len() == 1 {
                let (neg, body) = parts.into_iter().next().unwrap();
                let body = if body == "1" {
                    mono_str
                } else {
                    format!("{body}*{mono_str}")
                };
                groups.push((neg, body));
            } else {
                let mut s = String::new();
                for (idx, (neg, body)) in parts.into_iter().enumerate() {
                    if idx == 0 {
                        if neg {
                            s.push('-');
                        }
                        s.push_str(&body);
                    } else if neg {
                        s.push_str(" - ");
                        s.push_str(&body);
                    } else {
                        s.push_str(" + ");
                        s.push_str(&body);
                    }
                }
                groups.push((false, format!("({s})*{mono_str}")));
            }
        }
        let mut numerator = String::new();
        for (idx, (neg, body)) in groups.into_iter().enumerate() {
            if idx == 0 {
                if neg {
                    numerator.push('-');
                }
                numerator.push_str(&body);
            } else if neg {
                numerator.push_str(" - ");
                numerator.push_str(&body);
            } else {
                numerator.push_str(" + ");
                numerator.push_str(&body);
            }
        }
        if !has_den {
            return write!(f, "{numerator}");
        }
        let mut den_factors: Vec<String> = Vec::new();
        if self.q > 0 {
            den_factors.push(if self.q == 1 { "Q".into() } else { format!("Q^{}", self.q) });
        }
        if self.m > 0 {
            den_factors
                .push(if self.m == 1 { "(xn-i)".into() } else { format!("(xn-i)^{}", self.m) });
        }
        if self.p > 0 {
            den_factors
                .push(if self.p == 1 { "(xn+i)".into() } else { format!("(xn+i)^{}", self.p) });
        }
        let den = den_factors.join("*");
        if atom_count > 1 {
            write!(f, "({numerator}) / {den}")
        } else {
            write!(f, "{numerator} / {den}")
        }
    }
}

/// Random symbol generation for oracle and property tests. When
/// `restricted`, `min_decay` bounds the numerator degree by
/// `m + p − min_decay` so projection (needs 1) and contour integration
/// (needs 2) stay defined.
pub fn random_symbol(rng: &mut impl rand::Rng, restricted: bool, min_decay: u32) -> RatXi {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let gens = [
        Generator::H1,
        Generator::H2,
        Generator::Xi(1),
        Generator::Xi(2),
        Generator::Xi(3),
        Generator::Xi(4),
    ];
    let random_poly = |rng: &mut dyn rand::RngCore| {
        let mut po = Poly::zero();
        for _ in 0..rng.gen_range(1..=2u32) {
            let mut coeff = GaussRat::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            if rng.gen_bool(0.5) {
                coeff = &coeff * &GaussRat::i();
            }
            if coeff.is_zero() {
                coeff = GaussRat::one();
            }
            let mut mono = Poly::constant(coeff);
            for _ in 0..rng.gen_range(0..=2u32) {
                mono = mono.mul(&Poly::gen(*gens.choose(rng).unwrap()));
            }
            po = po.add(&mono);
        }
        po
    };
    let (m, p, q, max_len);
    if restricted {
        m = rng.gen_range(1..=3u32);
        p = rng.gen_range(1..=3u32);
        q = 0;
        max_len = (m + p + 1).saturating_sub(min_decay).max(1);
    } else {
        m = 0;
        p = 0;
        q = rng.gen_range(0..=2u32);
        max_len = 4;
    }
    let len = rng.gen_range(1..=max_len) as usize;
    let mut num = Vec::with_capacity(len);
    for _ in 0..len {
        let mut e = CliffElem::zero();
        for _ in 0..rng.gen_range(1..=2u32) {
            let mono = rng.gen_range(0..32u8);
            e.add_term(mono, random_poly(rng));
        }
        num.push(e);
    }
    if restricted {
        RatXi::restricted_parts(num, m, p)
    } else {
        RatXi::from_parts(num, q)
    }
}
