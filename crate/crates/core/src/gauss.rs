//! Exact Gaussian-rational arithmetic.
//!
//! Every quantity in the boundary-residue pipeline is a complex number of the
//! form `a + b·i` with `a, b ∈ ℚ`. Gaussian rationals form a field: addition,
//! multiplication and division (via the conjugate, `1/z = z̄/|z|²`) stay exact,
//! so the entire computation runs without rounding. Arbitrary-precision
//! rationals back the two components because intermediate residue expansions
//! routinely produce numerators far outside `i64` range even though the final
//! published coefficients are small.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// An exact complex rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    /// Real part.
    pub re: BigRational,
    /// Imaginary part.
    pub im: BigRational,
}

impl GaussRat {
    /// `0`.
    pub fn zero() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::zero() }
    }

    /// `1`.
    pub fn one() -> Self {
        GaussRat { re: BigRational::one(), im: BigRational::zero() }
    }

    /// `i`.
    pub fn i() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::one() }
    }

    /// The real integer `n`.
    pub fn from_int(n: i64) -> Self {
        GaussRat { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// The real rational `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// The complex rational `a/b + (c/d)·i`. Panics if `b == 0` or `d == 0`.
    pub fn complex_ratio(a: i64, b: i64, c: i64, d: i64) -> Self {
        assert!(b != 0 && d != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    /// True when both components are zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True when the value is real (zero imaginary part).
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate `re − im·i`.
    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re² + im²` (a nonnegative rational).
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n = self.norm_sq();
        GaussRat { re: &self.re / &n, im: -(&self.im / &n) }
    }

    /// `self^k` for a nonnegative exponent (exponentiation by squaring).
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Scale by an exact rational.
    pub fn scale(&self, r: &BigRational) -> Self {
        GaussRat { re: &self.re * r, im: &self.im * r }
    }

    /// Approximate value as a pair of `f64`s (for the floating-point oracle
    /// only; the symbolic pipeline never rounds).
    pub fn to_f64(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// Convert an exact rational to `f64`, falling back to a quotient of
/// approximations when numerator or denominator exceed `f64` range.
fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::MAX.copysign(if r.numer().is_negative() { -1.0 } else { 1.0 }));
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

impl Default for GaussRat {
    fn default() -> Self {
        GaussRat::zero()
    }
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

impl<'a, 'b> Add<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a, 'b> Sub<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a, 'b> Mul<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &'b GaussRat) -> GaussRat {
        // (a+bi)(c+di) = (ac − bd) + (ad + bc)i
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a, 'b> Div<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &'b GaussRat) -> GaussRat {
        self * &rhs.inv()
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl $assign_trait for GaussRat {
            fn $assign_method(&mut self, rhs: GaussRat) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

forward_owned_binop!(Add, add, AddAssign, add_assign);
forward_owned_binop!(Sub, sub, SubAssign, sub_assign);
forward_owned_binop!(Mul, mul, MulAssign, mul_assign);
forward_owned_binop!(Div, div, DivAssign, div_assign);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// Format a real rational as `p` or `p/q`.
fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Format the imaginary component `b·i` with `1`/`−1` contracted to `i`/`-i`.
fn fmt_imag(b: &BigRational) -> String {
    if b.is_one() {
        "i".to_string()
    } else if (-b).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", fmt_rational(b))
    }
}

impl fmt::Display for GaussRat {
    /// Renders `0`, a pure-real `p/q`, a pure-imaginary `p/q*i`, or the
    /// parenthesized pair `(p/q+r/s*i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}", fmt_imag(&self.im));
        }
        let imag = fmt_imag(&self.im);
        if imag.starts_with('-') {
            write!(f, "({}{})", fmt_rational(&self.re), imag)
        } else {
            write!(f, "({}+{})", fmt_rational(&self.re), imag)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// Serialization: {"re":[num,den],"im":[num,den]} with i64-checked components.
// ---------------------------------------------------------------------------

fn rational_parts(r: &BigRational) -> Result<(i64, i64), String> {
    let num = r
        .numer()
        .to_i64()
        .ok_or_else(|| format!("numerator {} exceeds i64 range", r.numer()))?;
    let den = r
        .denom()
        .to_i64()
        .ok_or_else(|| format!("denominator {} exceeds i64 range", r.denom()))?;
    Ok((num, den))
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        use serde::ser::SerializeStruct;
        let re = rational_parts(&self.re).map_err(S::Error::custom)?;
        let im = rational_parts(&self.im).map_err(S::Error::custom)?;
        let mut s = serializer.serialize_struct("GaussRat", 2)?;
        s.serialize_field("re", &[re.0, re.1])?;
        s.serialize_field("im", &[im.0, im.1])?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            re: [i64; 2],
            im: [i64; 2],
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.re[1] == 0 || raw.im[1] == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(GaussRat {
            re: BigRational::new(BigInt::from(raw.re[0]), BigInt::from(raw.re[1])),
            im: BigRational::new(BigInt::from(raw.im[0]), BigInt::from(raw.im[1])),
        })
    }
}
