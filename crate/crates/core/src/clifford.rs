//! The Clifford algebra Cl(5) acting on boundary spinors.
//!
//! Five anticommuting generators `e1 … e5` with `eᵢeⱼ + eⱼeᵢ = −2δᵢⱼ` (so
//! `eᵢ² = −1`) span a 32-dimensional algebra; `e1 … e4` are the tangential
//! coframe directions and `e5` is the conormal `c(dxₙ)`. An element is
//! stored as a map from basis monomial — a 5-bit mask, bit `k−1` standing
//! for `e_k`, bits multiplied in ascending index order — to a polynomial
//! coefficient from the commuting generator ring.
//!
//! The spinor trace used throughout is `tr[1] = 4` with every positive-grade
//! basis monomial traceless. That includes the grade-5 volume element
//! `e1e2e3e4e5`: in the irreducible 4-dimensional representation the volume
//! element acts as `∓i·id` and has nonzero trace, but the pairing that
//! defines the residue density sums the two inequivalent representations,
//! and their volume traces cancel. `trace_detailed` reports whether a
//! grade-5 coefficient was actually discarded so callers can surface the
//! convention when it matters.

use crate::gauss::GaussRat;
use crate::poly::Poly;
use std::collections::BTreeMap;
use std::fmt;

/// A basis monomial of Cl(5): 5-bit mask, bit `k-1` ⇔ factor `e_k`.
pub type CliffMono = u8;

/// All 32 basis monomials in mask order.
pub const MONO_COUNT: usize = 32;

/// Multiply two basis monomials. Returns the product monomial and its sign,
/// applying `eᵢeⱼ = −eⱼeᵢ` (i ≠ j) and `eᵢ² = −1`.
pub fn mono_mul(a: CliffMono, b: CliffMono) -> (CliffMono, i8) {
    let mut acc = a;
    let mut sign = 1i8;
    for j in 0..5u8 {
        if b & (1 << j) == 0 {
            continue;
        }
        // e_j moves left past every factor of `acc` with index > j.
        let higher = (acc >> (j + 1)).count_ones();
        if higher % 2 == 1 {
            sign = -sign;
        }
        if acc & (1 << j) != 0 {
            sign = -sign; // e_j² = −1
            acc &= !(1 << j);
        } else {
            acc |= 1 << j;
        }
    }
    (acc, sign)
}

/// An element of Cl(5) with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct CliffElem {
    terms: BTreeMap<CliffMono, Poly>,
}

/// Result of a trace together with convention bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceOutcome {
    /// `4 ×` the grade-0 coefficient.
    pub value: Poly,
    /// True when a nonzero grade-5 coefficient was present and discarded
    /// under the summed-representation convention.
    pub grade5_discarded: bool,
}

impl CliffElem {
    /// The zero element.
    pub fn zero() -> Self {
        CliffElem { terms: BTreeMap::new() }
    }

    /// A scalar (grade-0) element.
    pub fn scalar(p: Poly) -> Self {
        let mut e = CliffElem::zero();
        e.add_term(0, p);
        e
    }

    /// The generator `e_k`, `k ∈ 1..=5`.
    pub fn gen(k: u8) -> Self {
        assert!((1..=5).contains(&k), "Clifford generator index out of range");
        let mut e = CliffElem::zero();
        e.add_term(1 << (k - 1), Poly::one());
        e
    }

    /// Add `p · mono` in place, dropping zeros.
    pub fn add_term(&mut self, mono: CliffMono, p: Poly) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&p);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate `(monomial, coefficient)` pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (&CliffMono, &Poly)> {
        self.terms.iter()
    }

    /// Coefficient of a basis monomial (zero if absent).
    pub fn coeff(&self, mono: CliffMono) -> Poly {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    /// Sum.
    pub fn add(&self, rhs: &CliffElem) -> CliffElem {
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.add_term(*m, p.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, rhs: &CliffElem) -> CliffElem {
        self.add(&rhs.neg())
    }

    /// Negation.
    pub fn neg(&self) -> CliffElem {
        CliffElem { terms: self.terms.iter().map(|(m, p)| (*m, p.neg())).collect() }
    }

    /// Clifford product.
    pub fn mul(&self, rhs: &CliffElem) -> CliffElem {
        let mut out = CliffElem::zero();
        for (ma, pa) in &self.terms {
            for (mb, pb) in &rhs.terms {
                let (m, sign) = mono_mul(*ma, *mb);
                let mut prod = pa.mul(pb);
                if sign < 0 {
                    prod = prod.neg();
                }
                out.add_term(m, prod);
            }
        }
        out
    }

    /// Multiply every coefficient by a polynomial.
    pub fn scale_poly(&self, p: &Poly) -> CliffElem {
        if p.is_zero() {
            return CliffElem::zero();
        }
        let mut out = CliffElem::zero();
        for (m, q) in &self.terms {
            out.add_term(*m, q.mul(p));
        }
        out
    }

    /// Multiply every coefficient by a constant.
    pub fn scale(&self, c: &GaussRat) -> CliffElem {
        self.scale_poly(&Poly::constant(c.clone()))
    }

    /// Apply a map to every coefficient (e.g. a `ξ`-derivative), dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> CliffElem {
        let mut out = CliffElem::zero();
        for (m, p) in &self.terms {
            out.add_term(*m, f(p));
        }
        out
    }

    /// Spinor trace with convention bookkeeping: `tr[1] = 4`, all positive
    /// grades traceless (grade 5 included, see module docs).
    pub fn trace_detailed(&self) -> TraceOutcome {
        let grade5_discarded = self
            .terms
            .get(&0b11111)
            .map(|p| !p.is_zero())
            .unwrap_or(false);
        TraceOutcome {
            value: self.coeff(0).scale(&GaussRat::from_int(4)),
            grade5_discarded,
        }
    }

    /// Spinor trace, discarding the bookkeeping.
    pub fn trace(&self) -> Poly {
        self.trace_detailed().value
    }
}

impl fmt::Display for CliffElem {
    /// Renders e.g. `29/64*h1^2 + (x1 + x2)*e1e3 - e5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, p) in &self.terms {
            let mono: String = (0..5)
                .filter(|k| m & (1 << k) != 0)
                .map(|k| format!("e{}", k + 1))
                .collect();
            let body = if mono.is_empty() {
                p.to_string()
            } else if *p == Poly::one() {
                mono
            } else if p.neg() == Poly::one() {
                format!("-{mono}")
            } else if p.len() == 1 {
                format!("{p}*{mono}")
            } else {
                format!("({p})*{mono}")
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(stripped) = body.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Wick-pairing trace of a product of basis vectors: with the bilinear form
/// `η(e_a, e_b) = −δ_ab`, the normalized trace of `e_{v₁}⋯e_{v_k}` satisfies
/// `T(v) = Σ_{j≥2} (−1)^j η(v₁, v_j) T(v \ {1, j})`, `T(∅) = 1`, and odd
/// lengths vanish. This is an independent combinatorial model of the trace
/// used to cross-check the algebraic one.
pub fn wick_trace(indices: &[u8]) -> GaussRat {
    if indices.is_empty() {
        return GaussRat::one();
    }
    if indices.len() % 2 == 1 {
        return GaussRat::zero();
    }
    let mut total = GaussRat::zero();
    for j in 1..indices.len() {
        if indices[0] != indices[j] {
            continue; // η(e_a, e_b) = −δ_ab
        }
        let rest: Vec<u8> = indices[1..]
            .iter()
            .enumerate()
            .filter(|(pos, _)| *pos != j - 1)
            .map(|(_, &v)| v)
            .collect();
        // (−1)^j with j 1-based as in the recursion (j≥2 ⇔ position index ≥ 1),
        // times η = −1.
        let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
        let contrib = wick_trace(&rest).scale(&num_rational::BigRational::from_integer((-sign).into()));
        total = &total + &contrib;
    }
    total
}
