//! Exact coefficient ring: Gaussian rationals and Laurent polynomials over them.
//!
//! Every matrix entry handled by the crate is a [`LaurentScalar`], a finitely
//! supported map from integer degrees to [`GaussianRational`] coefficients.
//! Zero coefficients are never stored, so derived equality is exact equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

/// Build a rational from an integer numerator and denominator.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integral rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Render a rational as `a` or `a/b`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `a` or `a/b` into a rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Serde adapter writing nested rational vectors as `"a/b"` strings.
pub mod q_rows {
    use super::{fmt_q, parse_q, Q};
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(fmt_q).collect()).collect();
        s.collect_seq(text)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Q>>, D::Error> {
        let text: Vec<Vec<String>> = Vec::deserialize(d)?;
        text.iter()
            .map(|r| r.iter().map(|x| parse_q(x).ok_or_else(|| D::Error::custom(format!("bad rational {x:?}")))).collect())
            .collect()
    }
}

/// A complex number `re + i·im` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Q,
    pub im: Q,
}

impl GaussianRational {
    pub fn new(re: Q, im: Q) -> Self {
        Self { re, im }
    }

    pub fn real(re: Q) -> Self {
        Self { re, im: Q::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(qi(n))
    }

    pub fn zero() -> Self {
        Self { re: Q::zero(), im: Q::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: Q::zero(), im: Q::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re² + im²`.
    pub fn norm_sqr(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self { re: &self.re * k, im: &self.im * k }
    }

    /// Multiply by `i`.
    pub fn times_i(&self) -> Self {
        Self { re: -self.im.clone(), im: self.re.clone() }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_q(&self.re)),
            (true, false) => write!(f, "{} i", fmt_q(&self.im)),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{} - {} i", fmt_q(&self.re), fmt_q(&-self.im.clone()))
                } else {
                    write!(f, "{} + {} i", fmt_q(&self.re), fmt_q(&self.im))
                }
            }
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}
impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: GaussianRational) -> GaussianRational {
        &self + &o
    }
}
impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}
impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: GaussianRational) -> GaussianRational {
        &self - &o
    }
}
impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}
impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: GaussianRational) -> GaussianRational {
        &self * &o
    }
}
impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like primitive integer division.
    fn div(self, o: &GaussianRational) -> GaussianRational {
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}
impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}
impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}
impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

/// The sign `u ∈ {+1, −1}` used when substituting `t ↦ u·t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(u: i64) -> Option<Sign> {
        match u {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `uⁿ` for this sign.
    pub fn pow(self, n: i32) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if n.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// A Laurent polynomial `Σ cₙ tⁿ` with Gaussian-rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    coeffs: BTreeMap<i32, GaussianRational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(0, c)
    }

    /// The monomial `c·tⁿ`.
    pub fn monomial(n: i32, c: GaussianRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(n, c);
        }
        Self { coeffs }
    }

    /// `tⁿ` with unit coefficient.
    pub fn t_pow(n: i32) -> Self {
        Self::monomial(n, GaussianRational::one())
    }

    /// Build from `(degree, coefficient)` pairs, summing repeated degrees.
    pub fn from_terms<I: IntoIterator<Item = (i32, GaussianRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (n, c) in terms {
            out.add_term(n, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `tⁿ`.
    pub fn coeff(&self, n: i32) -> GaussianRational {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussianRational)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Add `c·tⁿ` in place, keeping the zero-free normal form.
    pub fn add_term(&mut self, n: i32, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(n).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(n, c)| (*n, c * k)).collect() }
    }

    pub fn scale_q(&self, k: &Q) -> Self {
        self.scale(&GaussianRational::real(k.clone()))
    }

    /// Multiply by `tᵏ`.
    pub fn shift(&self, k: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(n, c)| (n + k, c.clone())).collect() }
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs.iter().map(|(n, c)| (n - 1, c.scale(&qi(*n as i64)))),
        )
    }

    /// Apply the Euler operator `t·d/dt`, which scales `tⁿ` by `n`.
    pub fn euler(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(n, c)| (*n, c.scale(&qi(*n as i64)))))
    }

    /// The coefficient of `t⁻¹`.
    pub fn residue(&self) -> GaussianRational {
        self.coeff(-1)
    }

    /// Substitute `t ↦ u·t`: the degree-`n` coefficient picks up `uⁿ`.
    pub fn substitute_sign(&self, u: Sign) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(n, c)| (*n, if u.pow(*n) == 1 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Complex-conjugate every coefficient, and optionally send `tⁿ` to `t⁻ⁿ`.
    pub fn conjugate_bar(&self, invert_t: bool) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(n, c)| (if invert_t { -n } else { *n }, c.conj()))
                .collect(),
        }
    }

    /// Keep only the terms whose degree satisfies `keep`.
    pub fn filter_degrees<F: Fn(i32) -> bool>(&self, keep: F) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(n, _)| keep(**n))
                .map(|(n, c)| (*n, c.clone()))
                .collect(),
        }
    }

    /// Value at `t = 1`, the sum of all coefficients.
    pub fn eval_one(&self) -> GaussianRational {
        let mut s = GaussianRational::zero();
        for c in self.coeffs.values() {
            s += c;
        }
        s
    }

    /// If this is a single nonzero monomial `c·tᵏ`, return `(k, c)`.
    pub fn as_monomial(&self) -> Option<(i32, &GaussianRational)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(n, c)| (*n, c))
        } else {
            None
        }
    }

    /// Inverse of a unit `c·tᵏ`; other Laurent polynomials are not invertible.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (k, c) = self.as_monomial()?;
        Some(Self::monomial(-k, c.inv()?))
    }

    /// Multiply two Laurent polynomials (convolution of supports).
    pub fn laurent_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let body = c.to_string();
            let body = if !c.re.is_zero() && !c.im.is_zero() { format!("({body})") } else { body };
            if *n == 0 {
                write!(f, "{body}")?;
            } else {
                write!(f, "{body} t^{n}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, o: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (n, c) in &o.coeffs {
            out.add_term(*n, c);
        }
        out
    }
}
impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, o: LaurentScalar) -> LaurentScalar {
        &self + &o
    }
}
impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, o: &LaurentScalar) {
        for (n, c) in &o.coeffs {
            self.add_term(*n, c);
        }
    }
}
impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, o: &LaurentScalar) {
        for (n, c) in &o.coeffs {
            self.add_term(*n, &-c);
        }
    }
}
impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, o: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= o;
        out
    }
}
impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, o: LaurentScalar) -> LaurentScalar {
        &self - &o
    }
}
impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { coeffs: self.coeffs.iter().map(|(n, c)| (*n, -c)).collect() }
    }
}
impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}
impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, o: &LaurentScalar) -> LaurentScalar {
        self.laurent_mul(o)
    }
}
impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, o: LaurentScalar) -> LaurentScalar {
        self.laurent_mul(&o)
    }
}

/// Free-function form of [`LaurentScalar::laurent_mul`].
pub fn laurent_mul(p: &LaurentScalar, q: &LaurentScalar) -> LaurentScalar {
    p.laurent_mul(q)
}

/// Free-function form of [`LaurentScalar::derivative`].
pub fn laurent_derivative(p: &LaurentScalar) -> LaurentScalar {
    p.derivative()
}

/// Free-function form of [`LaurentScalar::residue`].
pub fn residue(p: &LaurentScalar) -> GaussianRational {
    p.residue()
}

/// Free-function form of [`LaurentScalar::substitute_sign`].
pub fn substitute_sign(p: &LaurentScalar, u: Sign) -> LaurentScalar {
    p.substitute_sign(u)
}

/// Free-function form of [`LaurentScalar::conjugate_bar`].
pub fn conjugate_bar(p: &LaurentScalar, invert_t: bool) -> LaurentScalar {
    p.conjugate_bar(invert_t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(qi(re), qi(im))
    }

    fn t(n: i32) -> LaurentScalar {
        LaurentScalar::t_pow(n)
    }

    #[test]
    fn difference_of_squares() {
        let p = &t(1) + &t(-1);
        let m = &t(1) - &t(-1);
        assert_eq!(p.laurent_mul(&m), &t(2) - &t(-2));
    }

    #[test]
    fn degree_cancellation_and_identity() {
        let a = LaurentScalar::monomial(3, g(2, 0));
        let b = LaurentScalar::monomial(-3, g(3, 0));
        assert_eq!(a.laurent_mul(&b), LaurentScalar::constant(g(6, 0)));
        assert_eq!(a.laurent_mul(&LaurentScalar::one()), a);
    }

    #[test]
    fn derivatives() {
        assert_eq!(t(2).derivative(), LaurentScalar::monomial(1, g(2, 0)));
        assert!(LaurentScalar::constant(g(5, 0)).derivative().is_zero());
        assert_eq!(t(-1).derivative(), LaurentScalar::monomial(-2, g(-1, 0)));
    }

    #[test]
    fn residues() {
        let p = &LaurentScalar::monomial(-1, g(3, 0)) + &LaurentScalar::monomial(1, g(2, 0));
        assert_eq!(p.residue(), g(3, 0));
        assert!(LaurentScalar::constant(g(7, 0)).residue().is_zero());
    }

    #[test]
    fn sign_substitution() {
        assert_eq!(t(3).substitute_sign(Sign::Minus), -t(3));
        let even = &t(2) + &t(-2);
        assert_eq!(even.substitute_sign(Sign::Minus), even);
        assert_eq!(even.substitute_sign(Sign::Plus), even);
    }

    #[test]
    fn bar_conjugation() {
        let it = LaurentScalar::monomial(1, g(0, 1));
        assert_eq!(it.conjugate_bar(true), LaurentScalar::monomial(-1, g(0, -1)));
        let three = LaurentScalar::constant(g(3, 0));
        assert_eq!(three.conjugate_bar(true), three);
        assert_eq!(three.conjugate_bar(false), three);
        let p = LaurentScalar::monomial(2, g(1, 1));
        assert_eq!(p.conjugate_bar(false), LaurentScalar::monomial(2, g(1, -1)));
    }

    #[test]
    fn zero_terms_are_stripped() {
        let p = &t(4) - &t(4);
        assert!(p.is_zero());
        assert_eq!(p, LaurentScalar::zero());
    }

    #[test]
    fn rendering() {
        let p = &LaurentScalar::monomial(-1, GaussianRational::new(q(1, 2), q(-3, 4)))
            + &LaurentScalar::constant(g(2, 0));
        assert_eq!(p.to_string(), "(1/2 - 3/4 i) t^-1 + 2");
        assert_eq!(GaussianRational::new(q(1, 2), q(3, 4)).to_string(), "1/2 + 3/4 i");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
    }

    #[test]
    fn gaussian_inverse() {
        let z = g(3, 4);
        assert_eq!(&z * &z.inv().unwrap(), GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(parse_q("-3/6"), Some(q(-1, 2)));
        assert_eq!(parse_q("1/0"), None);
    }
}
