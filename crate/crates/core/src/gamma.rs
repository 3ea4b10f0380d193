//! Exact gamma-matrix representation of Cl(5), used as an independent
//! oracle for the spinor trace.
//!
//! The two inequivalent irreducible representations of Cl(5) act on C⁴.
//! We realize the first through Pauli-matrix Kronecker products,
//!
//! ```text
//! γ₁ = σ₁⊗1,  γ₂ = σ₂⊗1,  γ₃ = σ₃⊗σ₁,  γ₄ = σ₃⊗σ₂,  γ₅ = σ₃⊗σ₃,
//! ```
//!
//! which satisfy `γᵢγⱼ + γⱼγᵢ = 2δᵢⱼ`, and set `e_k = iγ_k` so `e_k² = −1`.
//! The second representation flips the sign of `e₅`. The trace convention
//! of [`crate::clifford`] — `tr[1] = 4`, every positive grade traceless,
//! grade 5 included — is exactly half the matrix trace on the rank-8 block
//! sum of the two representations: the grade-5 volume element acts as
//! `−i·id` in one block and `+i·id` in the other, so their traces cancel.
//! Every entry of every `e_k` lies in `{0, ±1, ±i}`, so all arithmetic here
//! is exact.

use crate::clifford::CliffElem;
use crate::gauss::GaussRat;
use crate::poly::Generator;
use std::collections::BTreeMap;

/// An exact 4×4 matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat4 {
    /// Row-major entries.
    pub a: [[GaussRat; 4]; 4],
}

impl Mat4 {
    /// The zero matrix.
    pub fn zero() -> Self {
        Mat4 { a: Default::default() }
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        let mut m = Mat4::zero();
        for k in 0..4 {
            m.a[k][k] = GaussRat::one();
        }
        m
    }

    /// Matrix product.
    pub fn mul(&self, rhs: &Mat4) -> Mat4 {
        let mut out = Mat4::zero();
        for i in 0..4 {
            for k in 0..4 {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..4 {
                    let add = &self.a[i][k] * &rhs.a[k][j];
                    out.a[i][j] = &out.a[i][j] + &add;
                }
            }
        }
        out
    }

    /// Matrix sum.
    pub fn add(&self, rhs: &Mat4) -> Mat4 {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.a[i][j] = &out.a[i][j] + &rhs.a[i][j];
            }
        }
        out
    }

    /// Scale every entry.
    pub fn scale(&self, c: &GaussRat) -> Mat4 {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.a[i][j] = &out.a[i][j] * c;
            }
        }
        out
    }

    /// Matrix trace.
    pub fn trace(&self) -> GaussRat {
        let mut t = GaussRat::zero();
        for k in 0..4 {
            t = &t + &self.a[k][k];
        }
        t
    }
}

/// Kronecker product of two exact 2×2 matrices.
fn kron(a: &[[GaussRat; 2]; 2], b: &[[GaussRat; 2]; 2]) -> Mat4 {
    let mut m = Mat4::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m.a[2 * i + k][2 * j + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    m
}

fn pauli(which: u8) -> [[GaussRat; 2]; 2] {
    let z = GaussRat::zero;
    let o = GaussRat::one;
    let i = GaussRat::i;
    match which {
        0 => [[o(), z()], [z(), o()]],
        1 => [[z(), o()], [o(), z()]],
        2 => [[z(), -i()], [i(), z()]],
        3 => [[o(), z()], [z(), -o()]],
        _ => unreachable!("Pauli index"),
    }
}

/// The matrix of `e_k = iγ_k` in the first irreducible representation.
pub fn e_matrix(k: u8) -> Mat4 {
    let g = match k {
        1 => kron(&pauli(1), &pauli(0)),
        2 => kron(&pauli(2), &pauli(0)),
        3 => kron(&pauli(3), &pauli(1)),
        4 => kron(&pauli(3), &pauli(2)),
        5 => kron(&pauli(3), &pauli(3)),
        _ => panic!("Clifford generator index out of range"),
    };
    g.scale(&GaussRat::i())
}

/// Both 4×4 blocks of the rank-8 representation of a basis monomial:
/// generators multiplied in ascending index order, with `e₅ → −e₅` in the
/// second block.
pub fn mono_blocks(mono: u8) -> (Mat4, Mat4) {
    let mut b1 = Mat4::identity();
    let mut b2 = Mat4::identity();
    for k in 1..=5u8 {
        if mono & (1 << (k - 1)) == 0 {
            continue;
        }
        let m = e_matrix(k);
        b1 = b1.mul(&m);
        if k == 5 {
            b2 = b2.mul(&m.scale(&(-GaussRat::one())));
        } else {
            b2 = b2.mul(&m);
        }
    }
    (b1, b2)
}

/// Evaluate a Clifford element's trace through the rank-8 representation:
/// instantiate each polynomial coefficient with `assignment`, form
/// `Σ coeff · (block₁ ⊕ block₂)` and take half the matrix trace.
/// Errors if a coefficient mentions a generator missing from `assignment`.
pub fn rep_trace(
    elem: &CliffElem,
    assignment: &BTreeMap<Generator, GaussRat>,
) -> Result<GaussRat, String> {
    let mut b1 = Mat4::zero();
    let mut b2 = Mat4::zero();
    for (mono, poly) in elem.terms() {
        let c = poly.eval(assignment)?;
        if c.is_zero() {
            continue;
        }
        let (m1, m2) = mono_blocks(*mono);
        b1 = b1.add(&m1.scale(&c));
        b2 = b2.add(&m2.scale(&c));
    }
    let t8 = &b1.trace() + &b2.trace();
    Ok(&t8 / &GaussRat::from_int(2))
}
