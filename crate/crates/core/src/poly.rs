//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! The symbolic state of the pipeline is a polynomial in a fixed set of
//! commuting generators:
//!
//! * `h1`, `h2` — first and second normal derivatives of the metric warp
//!   factor at the boundary point,
//! * `sB`, `sM` — scalar curvature of the boundary and of the ambient
//!   manifold (these appear only in the final assembly),
//! * `R[a,b,c,d]` — components of the boundary Riemann tensor in canonical
//!   index order,
//! * `x1 … x4` — the tangential cotangent coordinates `ξ₁ … ξ₄`.
//!
//! The normal coordinate `ξₙ` is deliberately *not* a generator: rational
//! functions track its powers structurally (see the `ratxi` module), so a
//! polynomial here is always polynomial data attached to one `ξₙ`-power.
//!
//! Monomials are total-degree-free `BTreeMap`s from generator to exponent;
//! the polynomial maps monomials to nonzero coefficients. `BTreeMap` keeps
//! every iteration order deterministic, which the byte-identical output
//! guarantee relies on.

use crate::gauss::GaussRat;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A commuting generator. The declaration order defines the `Ord` used for
/// monomial keys and therefore the rendering order: metric parameters and
/// curvatures print before the `ξ` coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Generator {
    /// `h′(0)`, first normal derivative of the warp factor.
    H1,
    /// `h″(0)`, second normal derivative of the warp factor.
    H2,
    /// Scalar curvature of the boundary.
    SBoundary,
    /// Scalar curvature of the ambient manifold restricted to the boundary.
    SManifold,
    /// Boundary Riemann component `R[a,b,c,d]` in canonical index order
    /// (see `curvature::canonicalize`). Indices range over `1..=4`.
    Curv(u8, u8, u8, u8),
    /// Tangential cotangent coordinate `ξ_k`, `k ∈ 1..=4`.
    Xi(u8),
}

impl Generator {
    /// True for the `ξ_k` coordinate generators.
    pub fn is_xi(&self) -> bool {
        matches!(self, Generator::Xi(_))
    }

    /// True for Riemann-component generators.
    pub fn is_curv(&self) -> bool {
        matches!(self, Generator::Curv(..))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::H1 => write!(f, "h1"),
            Generator::H2 => write!(f, "h2"),
            Generator::SBoundary => write!(f, "sB"),
            Generator::SManifold => write!(f, "sM"),
            Generator::Curv(a, b, c, d) => write!(f, "R[{a},{b},{c},{d}]"),
            Generator::Xi(k) => write!(f, "x{k}"),
        }
    }
}

/// A monomial: generator → positive exponent. The empty map is `1`.
pub type Mono = BTreeMap<Generator, u32>;

/// Multiply two monomials (add exponents).
pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = a.clone();
    for (g, e) in b {
        *out.entry(*g).or_insert(0) += e;
    }
    out
}

/// A sparse polynomial with `GaussRat` coefficients. Zero coefficients are
/// never stored; the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Poly {
    terms: BTreeMap<Mono, GaussRat>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(), c);
        }
        Poly { terms }
    }

    /// The generator `g` as a degree-one polynomial.
    pub fn gen(g: Generator) -> Self {
        let mut m = Mono::new();
        m.insert(g, 1);
        let mut terms = BTreeMap::new();
        terms.insert(m, GaussRat::one());
        Poly { terms }
    }

    /// Build from raw terms, dropping zero coefficients.
    pub fn from_terms(it: impl IntoIterator<Item = (Mono, GaussRat)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Add `c · m` in place.
    pub fn add_term(&mut self, m: Mono, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant term (coefficient of the empty monomial).
    pub fn constant_term(&self) -> GaussRat {
        self.terms.get(&Mono::new()).cloned().unwrap_or_default()
    }

    /// True when the polynomial is a constant (zero or a single empty-monomial term).
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::new()))
    }

    /// Iterate terms in deterministic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &GaussRat)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when there are no stored terms (same as `is_zero`).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pointwise negation.
    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    /// Sum.
    pub fn add(&self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    /// Product.
    pub fn mul(&self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }

    /// Scale by a constant.
    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    /// `self^k` for small nonnegative `k`.
    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to the tangential coordinate `ξ_k`.
    pub fn dxi(&self, k: u8) -> Poly {
        let g = Generator::Xi(k);
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some(&e) = m.get(&g) {
                let mut m2 = m.clone();
                if e == 1 {
                    m2.remove(&g);
                } else {
                    m2.insert(g, e - 1);
                }
                out.add_term(m2, c.scale(&num_rational::BigRational::from_integer(e.into())));
            }
        }
        out
    }

    /// Substitute `g := replacement`, expanding powers.
    pub fn substitute(&self, g: Generator, replacement: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some(&e) = m.get(&g) {
                let mut rest = m.clone();
                rest.remove(&g);
                let mut base = Poly::from_terms([(rest, c.clone())]);
                base = base.mul(&replacement.pow(e));
                out = out.add(&base);
            } else {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Total degree in the `ξ` generators of the monomial `m`.
    pub fn xi_degree(m: &Mono) -> u32 {
        m.iter().filter(|(g, _)| g.is_xi()).map(|(_, e)| e).sum()
    }

    /// Number of Riemann-component factors (with multiplicity) in `m`.
    pub fn curv_degree(m: &Mono) -> u32 {
        m.iter().filter(|(g, _)| g.is_curv()).map(|(_, e)| e).sum()
    }

    /// Largest `ξ`-degree across all terms (0 for constants and zero).
    pub fn max_xi_degree(&self) -> u32 {
        self.terms.keys().map(Poly::xi_degree).max().unwrap_or(0)
    }

    /// Evaluate exactly under a full assignment of every generator that
    /// occurs. Returns an error naming the first missing generator.
    pub fn eval(&self, assign: &BTreeMap<Generator, GaussRat>) -> Result<GaussRat, String> {
        let mut total = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (g, e) in m {
                let v = assign
                    .get(g)
                    .ok_or_else(|| format!("no value assigned to generator {g}"))?;
                term = &term * &v.pow(*e);
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Numeric evaluation with real values for the generators; the complex
    /// result is returned as `(re, im)`. Used by the floating-point oracles.
    pub fn eval_f64(&self, vals: &BTreeMap<Generator, f64>) -> Result<(f64, f64), String> {
        let mut re = 0.0;
        let mut im = 0.0;
        for (m, c) in &self.terms {
            let mut factor = 1.0;
            for (g, e) in m {
                let v = vals
                    .get(g)
                    .ok_or_else(|| format!("no value assigned to generator {g}"))?;
                factor *= v.powi(*e as i32);
            }
            let (cr, ci) = c.to_f64();
            re += cr * factor;
            im += ci * factor;
        }
        Ok((re, im))
    }

    /// Normal form modulo the unit-sphere relation `x4² = 1 − x1² − x2² − x3²`.
    /// Used only when comparing two polynomials that may differ by the
    /// relation; the pipeline itself never rewrites `ξ` sums.
    pub fn sphere_normal_form(&self) -> Poly {
        let replacement = Poly::constant(GaussRat::one())
            .sub(&Poly::gen(Generator::Xi(1)).pow(2))
            .sub(&Poly::gen(Generator::Xi(2)).pow(2))
            .sub(&Poly::gen(Generator::Xi(3)).pow(2));
        let mut cur = self.clone();
        loop {
            // Pull x4-degree down two at a time until every term has degree ≤ 1.
            let mut next = Poly::zero();
            let mut changed = false;
            for (m, c) in &cur.terms {
                let e = m.get(&Generator::Xi(4)).copied().unwrap_or(0);
                if e >= 2 {
                    changed = true;
                    let mut m2 = m.clone();
                    if e == 2 {
                        m2.remove(&Generator::Xi(4));
                    } else {
                        m2.insert(Generator::Xi(4), e - 2);
                    }
                    let part = Poly::from_terms([(m2, c.clone())]).mul(&replacement);
                    next = next.add(&part);
                } else {
                    next.add_term(m.clone(), c.clone());
                }
            }
            cur = next;
            if !changed {
                return cur;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Rendering: sum of `*`-joined factors, e.g. `29/64*h1^2 - 3/8*h2 + x1*x2`.
// ---------------------------------------------------------------------------

fn fmt_mono(m: &Mono) -> String {
    m.iter()
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Render one term; `coeff` is assumed nonzero. Returns (is_negative, body):
/// real negative coefficients are pulled out so sums can join with " - ".
fn fmt_term(m: &Mono, c: &GaussRat) -> (bool, String) {
    fmt_term_with_xin(m, c, 0)
}

/// Like [`fmt_term`] but with an extra `xn^j` factor appended after the
/// commuting generators; used by rational-function rendering where the
/// normal covariable is tracked structurally rather than as a generator.
pub(crate) fn fmt_term_with_xin(m: &Mono, c: &GaussRat, xin_pow: usize) -> (bool, String) {
    use num_traits::Signed;
    let (neg, c_abs);
    if c.im.is_zero() && c.re.is_negative() {
        neg = true;
        c_abs = -c;
    } else if c.re.is_zero() && c.im.is_negative() {
        neg = true;
        c_abs = -c;
    } else {
        neg = false;
        c_abs = c.clone();
    }
    let mut mono = fmt_mono(m);
    if xin_pow == 1 {
        if !mono.is_empty() {
            mono.push('*');
        }
        mono.push_str("xn");
    } else if xin_pow > 1 {
        if !mono.is_empty() {
            mono.push('*');
        }
        mono.push_str(&format!("xn^{xin_pow}"));
    }
    let body = if mono.is_empty() {
        c_abs.to_string()
    } else if c_abs == GaussRat::one() {
        mono
    } else {
        format!("{c_abs}*{mono}")
    };
    (neg, body)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (neg, body) = fmt_term(m, c);
            if first {
                if neg {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h1() -> Poly {
        Poly::gen(Generator::H1)
    }
    fn x(k: u8) -> Poly {
        Poly::gen(Generator::Xi(k))
    }

    #[test]
    fn ring_arithmetic() {
        // (h1 + x1)² = h1² + 2 h1 x1 + x1²
        let s = h1().add(&x(1));
        let sq = s.mul(&s);
        let expect = h1()
            .pow(2)
            .add(&h1().mul(&x(1)).scale(&GaussRat::from_int(2)))
            .add(&x(1).pow(2));
        assert_eq!(sq, expect);
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let p = h1().sub(&h1());
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
        let q = h1().add(&h1().neg()).add(&x(2));
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn xi_derivative() {
        // ∂₁ (x1² x2 + x2) = 2 x1 x2
        let p = x(1).pow(2).mul(&x(2)).add(&x(2));
        let d = p.dxi(1);
        assert_eq!(d, x(1).mul(&x(2)).scale(&GaussRat::from_int(2)));
        assert!(p.dxi(3).is_zero());
    }

    #[test]
    fn parameters_render_before_coordinates() {
        let p = x(1).mul(&h1()).mul(&Poly::gen(Generator::Curv(1, 2, 1, 2)));
        assert_eq!(p.to_string(), "h1*R[1,2,1,2]*x1");
    }

    #[test]
    fn display_signs_and_units() {
        let p = Poly::constant(GaussRat::ratio(29, 64))
            .mul(&h1().pow(2))
            .sub(&Poly::constant(GaussRat::ratio(3, 8)).mul(&Poly::gen(Generator::H2)));
        assert_eq!(p.to_string(), "29/64*h1^2 - 3/8*h2");
        let q = x(1).sub(&x(2));
        assert_eq!(q.to_string(), "x1 - x2");
        let r = Poly::constant(GaussRat::i()).mul(&x(1));
        assert_eq!(r.to_string(), "i*x1");
    }

    #[test]
    fn sphere_normal_form_reduces_x4_squares() {
        // x4² ↦ 1 − x1² − x2² − x3²
        let p = x(4).pow(2);
        let nf = p.sphere_normal_form();
        let expect = Poly::one().sub(&x(1).pow(2)).sub(&x(2).pow(2)).sub(&x(3).pow(2));
        assert_eq!(nf, expect);
        // Degree-3 power keeps one bare x4.
        let p3 = x(4).pow(3);
        assert_eq!(p3.sphere_normal_form(), expect.mul(&x(4)));
        // |ξ'|² − 1 reduces to zero.
        let qm1 = x(1).pow(2).add(&x(2).pow(2)).add(&x(3).pow(2)).add(&x(4).pow(2)).sub(&Poly::one());
        assert!(qm1.sphere_normal_form().is_zero());
    }

    #[test]
    fn exact_evaluation_demands_full_assignment() {
        let p = h1().mul(&x(1));
        let mut assign = BTreeMap::new();
        assign.insert(Generator::H1, GaussRat::from_int(3));
        assert!(p.eval(&assign).is_err());
        assign.insert(Generator::Xi(1), GaussRat::ratio(1, 2));
        assert_eq!(p.eval(&assign).unwrap(), GaussRat::ratio(3, 2));
    }
}
