//! Involutive automorphisms of untwisted affine algebras and the real forms they cut out.
//!
//! A [`RealSubspace`] is a rational span of [`AffineElement`]s whose loop
//! degrees lie in a window `[−N, N]`. The compact real form is spanned by
//! the fixed points of the Cartan semi-involution; an involution `σ` that
//! commutes with it splits this span into `K = ker(σ − 1)` and
//! `P = ker(σ + 1)`, and `K ⊕ iP` is the associated non-compact form.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanError, Series};
use crate::degree0::{identify_matrix_algebra, Degree0Error, Degree0Type};
use crate::linalg::{inertia, nullspace, EchelonBasis};
use crate::loop_algebra::{bracket, realize, AffineElement, LoopError};
use crate::matrix::LaurentMatrix;
use crate::scalars::{fmt_q, qi, GaussianRational, LaurentScalar, Sign, Q};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error(transparent)]
    Loop(#[from] LoopError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Degree0(#[from] Degree0Error),
    #[error("U(t) is not invertible over Laurent polynomials (determinant {0})")]
    NotInvertible(String),
    #[error("U(t) has size {got}, the algebra needs {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gamma must be nonzero")]
    ZeroGamma,
    #[error("window must be at least 1")]
    EmptyWindow,
    #[error("σ is not involutive on loop elements: {0}")]
    NotInvolutive(String),
    #[error("pairing of real elements has imaginary part {0}")]
    NotReal(String),
    #[error("unknown worked case {0}")]
    UnknownCase(String),
}

/// The four automorphism families: inner (`a`) or composed with `X ↦ −Xᵀ` (`b`),
/// and optionally preceded by the Cartan semi-involution (kind 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AutomorphismKind {
    #[serde(rename = "1a")]
    OneA,
    #[serde(rename = "1b")]
    OneB,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
}

impl AutomorphismKind {
    fn transposes(self) -> bool {
        matches!(self, Self::OneB | Self::TwoB)
    }

    fn conjugates(self) -> bool {
        matches!(self, Self::TwoA | Self::TwoB)
    }
}

impl fmt::Display for AutomorphismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::OneA => "1a",
            Self::OneB => "1b",
            Self::TwoA => "2a",
            Self::TwoB => "2b",
        })
    }
}

/// `σ(X(t)) = U(t)·X(ut)·U(t)⁻¹ + (1/γ)·Res tr(U⁻¹U′X(ut))·c`, with the variants of
/// [`AutomorphismKind`], and `σ(d) = Φ(U) + ξc + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSpec {
    pub u_matrix: LaurentMatrix,
    u_inverse: LaurentMatrix,
    pub u: Sign,
    pub xi: Q,
    pub kind: AutomorphismKind,
    pub gamma: Q,
}

impl AutomorphismSpec {
    pub fn new(u_matrix: LaurentMatrix, u: Sign, xi: Q, kind: AutomorphismKind) -> Result<Self, InvolutionError> {
        Self::with_gamma(u_matrix, u, xi, kind, Q::one())
    }

    pub fn with_gamma(
        u_matrix: LaurentMatrix,
        u: Sign,
        xi: Q,
        kind: AutomorphismKind,
        gamma: Q,
    ) -> Result<Self, InvolutionError> {
        if gamma.is_zero() {
            return Err(InvolutionError::ZeroGamma);
        }
        let u_inverse = u_matrix
            .inverse()
            .ok_or_else(|| InvolutionError::NotInvertible(u_matrix.determinant().to_string()))?;
        Ok(Self { u_matrix, u_inverse, u, xi, kind, gamma })
    }

    /// The identity automorphism on `n × n` loop matrices.
    pub fn identity(n: usize) -> Self {
        Self::new(LaurentMatrix::identity(n), Sign::Plus, Q::zero(), AutomorphismKind::OneA).expect("identity is invertible")
    }

    pub fn size(&self) -> usize {
        self.u_matrix.size()
    }

    pub fn u_inverse(&self) -> &LaurentMatrix {
        &self.u_inverse
    }

    /// Maximal `|k|` such that `U·E_ab·U⁻¹` has a term of degree `k` for some matrix unit.
    pub fn degree_shift(&self) -> i32 {
        let n = self.size();
        let range = |entries: Vec<&LaurentScalar>| -> Option<(i32, i32)> {
            let mut out: Option<(i32, i32)> = None;
            for p in entries {
                if let (Some(a), Some(b)) = (p.min_degree(), p.max_degree()) {
                    out = Some(out.map_or((a, b), |(x, y)| (x.min(a), y.max(b))));
                }
            }
            out
        };
        let mut s = 0;
        for a in 0..n {
            let col = range((0..n).map(|i| self.u_matrix.get(i, a)).collect());
            for b in 0..n {
                let row = range((0..n).map(|j| self.u_inverse.get(b, j)).collect());
                if let (Some((c0, c1)), Some((r0, r1))) = (col, row) {
                    s = s.max((c0 + r0).abs()).max((c1 + r1).abs());
                }
            }
        }
        s
    }

    /// `Φ(U)` for this spec's `U`.
    pub fn phi(&self) -> LaurentMatrix {
        phi_with_inverse(&self.u_matrix, &self.u_inverse)
    }

    fn check_size(&self, x: &AffineElement) -> Result<(), InvolutionError> {
        if x.size() != self.size() {
            Err(InvolutionError::DimensionMismatch { expected: x.size(), got: self.size() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for AutomorphismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kind {} u={} ξ={} γ={} U=\n{}",
            self.kind,
            self.u.as_int(),
            fmt_q(&self.xi),
            fmt_q(&self.gamma),
            self.u_matrix
        )
    }
}

/// `Φ(U) = −t·U′·U⁻¹ + (1/d)·tr(t·U′·U⁻¹)·I`.
pub fn phi_matrix(u: &LaurentMatrix) -> Result<LaurentMatrix, InvolutionError> {
    let inv = u.inverse().ok_or_else(|| InvolutionError::NotInvertible(u.determinant().to_string()))?;
    Ok(phi_with_inverse(u, &inv))
}

/// `Φ(U)` evaluated with a caller-supplied `U⁻¹`, which is not checked.
pub fn phi_with_inverse(u: &LaurentMatrix, u_inv: &LaurentMatrix) -> LaurentMatrix {
    let n = u.size();
    let m = &u.euler() * u_inv;
    let tr = m.trace().scale_q(&Q::new(1.into(), (n as i64).into()));
    &(-&m) + &LaurentMatrix::identity(n).scale_laurent(&tr)
}

/// Apply `σ` to an affine element.
pub fn apply_automorphism(spec: &AutomorphismSpec, x: &AffineElement) -> Result<AffineElement, InvolutionError> {
    spec.check_size(x)?;
    let x = if spec.kind.conjugates() { x.cartan_semi_involution() } else { x.clone() };
    let mut c_loop = x.loop_part.substitute_sign(spec.u);
    if spec.kind.transposes() {
        c_loop = -&c_loop.transpose();
    }
    let mut loop_part = &(&spec.u_matrix * &c_loop) * &spec.u_inverse;
    let correction = (&(&spec.u_inverse * &spec.u_matrix.derivative()) * &c_loop).trace().residue();
    let gamma_inv = GaussianRational::real(spec.gamma.recip());
    let xi = GaussianRational::real(spec.xi.clone());
    let c_coeff = &(&x.c_coeff + &(&correction * &gamma_inv)) + &(&xi * &x.d_coeff);
    if !x.d_coeff.is_zero() {
        loop_part = &loop_part + &spec.phi().scale(&x.d_coeff);
    }
    Ok(AffineElement { loop_part, c_coeff, d_coeff: x.d_coeff.clone() })
}

/// A real span of affine elements, all supported in the degree window `[−window, window]`.
#[derive(Clone, Debug)]
pub struct RealSubspace {
    pub series: Series,
    pub rank: usize,
    size: usize,
    pub basis: Vec<AffineElement>,
    pub window: i32,
    pub core: i32,
    /// Loop-variable sign of the involution that produced this space.
    pub twist: Sign,
}

fn real_vector(x: &AffineElement, window: i32) -> Vec<Q> {
    x.to_real_vector(-window, window).expect("element lies in its window")
}

impl RealSubspace {
    fn from_spanning(series: Series, rank: usize, size: usize, window: i32, core: i32, twist: Sign, elems: Vec<AffineElement>) -> Self {
        let mut ech = EchelonBasis::new(size * size * 2 * (2 * window as usize + 1) + 4);
        let mut basis = Vec::new();
        for e in elems {
            let Some(v) = e.to_real_vector(-window, window) else { continue };
            if ech.insert(&v) {
                basis.push(e);
            }
        }
        Self { series, rank, size, basis, window, core, twist }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn echelon(&self) -> EchelonBasis<Q> {
        let mut ech = EchelonBasis::new(self.vector_len());
        for b in &self.basis {
            ech.insert(&real_vector(b, self.window));
        }
        ech
    }

    fn vector_len(&self) -> usize {
        self.size * self.size * 2 * (2 * self.window as usize + 1) + 4
    }

    pub fn contains(&self, x: &AffineElement) -> bool {
        match x.to_real_vector(-self.window, self.window) {
            Some(v) => self.echelon().contains(&v),
            None => false,
        }
    }

    /// Whether both spaces have the same real span.
    pub fn same_span(&self, other: &RealSubspace) -> bool {
        let mine = self.echelon();
        let theirs = other.echelon();
        mine.rank() == theirs.rank() && other.basis.iter().all(|b| match b.to_real_vector(-self.window, self.window) {
            Some(v) => mine.contains(&v),
            None => false,
        })
    }

    /// A new subspace with the same ambient data and the given spanning set.
    pub fn with_elements(&self, elems: Vec<AffineElement>) -> RealSubspace {
        Self::from_spanning(self.series, self.rank, self.size, self.window, self.core, self.twist, elems)
    }

    /// Elements of the span whose loop degrees satisfy `keep`; `c`, `d` survive only if `keep_cd`.
    pub fn restrict<F: Fn(i32) -> bool>(&self, keep: F, keep_cd: bool) -> RealSubspace {
        let vecs: Vec<Vec<Q>> = self.basis.iter().map(|b| real_vector(b, self.window)).collect();
        let n = self.size;
        let per_degree = n * n * 2;
        let len = self.vector_len();
        let mut banned: Vec<usize> = Vec::new();
        for (k, deg) in (-self.window..=self.window).enumerate() {
            if !keep(deg) {
                banned.extend(k * per_degree..(k + 1) * per_degree);
            }
        }
        if !keep_cd {
            banned.extend(len - 4..len);
        }
        let rows: Vec<Vec<Q>> = banned.iter().map(|&c| vecs.iter().map(|v| v[c].clone()).collect()).collect();
        let combos = if rows.is_empty() {
            (0..vecs.len()).map(|i| (0..vecs.len()).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
        } else {
            nullspace(&rows, vecs.len())
        };
        let elems = combos.iter().map(|a| self.combine(a)).collect();
        self.with_elements(elems)
    }

    /// Basis elements whose loop support lies within `[−k, k]`.
    pub fn truncated(&self, k: i32) -> RealSubspace {
        self.restrict(|d| d.abs() <= k, true)
    }

    /// `Σ aᵢ·basisᵢ`.
    pub fn combine(&self, coeffs: &[Q]) -> AffineElement {
        let mut acc = AffineElement::zero(self.size);
        for (a, b) in coeffs.iter().zip(&self.basis) {
            if !a.is_zero() {
                acc = &acc + &b.scale_q(a);
            }
        }
        acc
    }
}

/// Real basis of the compact form over `|n| ≤ window`, plus `ic` and `id`.
pub fn compact_form(series: Series, rank: usize, window: i32) -> Result<RealSubspace, InvolutionError> {
    if window < 1 {
        return Err(InvolutionError::EmptyWindow);
    }
    let alg = realize(series, rank)?;
    let n = alg.size();
    let mut elems = Vec::new();
    for deg in 0..=window {
        for x in alg.basis() {
            let z = AffineElement::monomial(deg, &x);
            elems.push(&z + &z.cartan_semi_involution());
            let iz = z.times_i();
            elems.push(&iz + &iz.cartan_semi_involution());
        }
    }
    elems.push(AffineElement::central(n, GaussianRational::i()));
    elems.push(AffineElement::derivation(n, GaussianRational::i()));
    Ok(RealSubspace::from_spanning(series, rank, n, window, window, Sign::Plus, elems))
}

/// A basis element on which `σ²` differs from the identity.
#[derive(Clone, Debug, Serialize)]
pub struct InvolutionFailure {
    pub element: String,
    pub defect: String,
    /// True when the element has a nonzero `d` component.
    pub involves_d: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionCheck {
    pub core: i32,
    pub checked: usize,
    pub failures: Vec<InvolutionFailure>,
}

impl InvolutionCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    /// Holds once elements with a `d` component are set aside.
    pub fn holds_on_loop_and_center(&self) -> bool {
        self.failures.iter().all(|f| f.involves_d)
    }
}

/// Apply `σ` twice to each basis element supported in the core and compare.
pub fn check_involution(spec: &AutomorphismSpec, space: &RealSubspace) -> Result<InvolutionCheck, InvolutionError> {
    let core = space.core;
    let mut failures = Vec::new();
    let mut checked = 0;
    for b in &space.basis {
        if let Some((lo, hi)) = b.degree_range() {
            if lo < -core || hi > core {
                continue;
            }
        }
        checked += 1;
        let twice = apply_automorphism(spec, &apply_automorphism(spec, b)?)?;
        let defect = &twice - b;
        if !defect.is_zero() {
            failures.push(InvolutionFailure {
                element: b.to_string(),
                defect: defect.to_string(),
                involves_d: !b.d_coeff.is_zero(),
            });
        }
    }
    Ok(InvolutionCheck { core, checked, failures })
}

/// `K`, `P` and `K ⊕ iP` for an involution on a compact slice.
#[derive(Clone, Debug)]
pub struct CartanDecomposition {
    pub k: RealSubspace,
    pub p: RealSubspace,
    pub noncompact: RealSubspace,
    pub involution: InvolutionCheck,
    /// Every element of the core slice splits as `k + p` inside the window.
    pub core_covered: bool,
    pub discrepancies: Vec<String>,
}

fn eigenspace(spec: &AutomorphismSpec, space: &RealSubspace, sign: i64) -> Result<RealSubspace, InvolutionError> {
    let reach = space.window + spec.degree_shift();
    let mut cols = Vec::with_capacity(space.dim());
    for b in &space.basis {
        let image = apply_automorphism(spec, b)?;
        let diff = &image - &b.scale_q(&qi(sign));
        cols.push(diff.to_real_vector(-reach, reach).expect("shift bound covers the image"));
    }
    let rows: Vec<Vec<Q>> = (0..cols.first().map_or(0, Vec::len))
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let combos = nullspace(&rows, space.dim());
    Ok(space.with_elements(combos.iter().map(|a| space.combine(a)).collect()))
}

/// Split the compact slice into `±1` eigenspaces of `σ`, solved exactly over ℚ.
pub fn split_eigenspaces(spec: &AutomorphismSpec, compact: &RealSubspace) -> Result<CartanDecomposition, InvolutionError> {
    let involution = check_involution(spec, compact)?;
    if !involution.holds_on_loop_and_center() {
        let first = involution.failures.iter().find(|f| !f.involves_d).expect("a loop failure exists");
        return Err(InvolutionError::NotInvolutive(format!("{} ↦ defect {}", first.element, first.defect)));
    }
    let mut discrepancies = Vec::new();
    for f in &involution.failures {
        discrepancies.push(format!("σ² ≠ id on {}: defect {}", f.element.trim(), f.defect.trim()));
    }
    let mut k = eigenspace(spec, compact, 1)?;
    let mut p = eigenspace(spec, compact, -1)?;
    k.twist = spec.u;
    p.twist = spec.u;
    let noncompact = k.with_elements(k.basis.iter().cloned().chain(p.basis.iter().map(AffineElement::times_i)).collect());
    let mut sum = k.echelon();
    for b in &p.basis {
        sum.insert(&real_vector(b, compact.window));
    }
    let core_space = compact.truncated(compact.window - spec.degree_shift());
    let core_covered = core_space.basis.iter().all(|b| sum.contains(&real_vector(b, compact.window)));
    if !core_covered {
        discrepancies.push("core slice is not contained in K ⊕ P".to_string());
    }
    Ok(CartanDecomposition { k, p, noncompact, involution, core_covered, discrepancies })
}

/// Outcome of checking `[K,K] ⊆ K`, `[K,P] ⊆ P`, `[P,P] ⊆ K`.
#[derive(Clone, Debug, Serialize)]
pub struct BracketCheck {
    pub pairs_checked: usize,
    pub violation: Option<String>,
}

/// Check the Cartan-decomposition bracket relations on pairs whose bracket stays in the window.
pub fn check_bracket_relations(dec: &CartanDecomposition) -> Result<BracketCheck, InvolutionError> {
    let half = dec.k.window / 2;
    let k_half = dec.k.truncated(half);
    let p_half = dec.p.truncated(half);
    let mut pairs = 0;
    let groups: [(&RealSubspace, &RealSubspace, &RealSubspace, &str); 3] = [
        (&k_half, &k_half, &dec.k, "[K,K] ⊆ K"),
        (&k_half, &p_half, &dec.p, "[K,P] ⊆ P"),
        (&p_half, &p_half, &dec.k, "[P,P] ⊆ K"),
    ];
    for (a, b, target, name) in groups {
        let ech = target.echelon();
        for x in &a.basis {
            for y in &b.basis {
                pairs += 1;
                let z = bracket(x, y)?;
                let ok = z.to_real_vector(-target.window, target.window).is_some_and(|v| ech.contains(&v));
                if !ok {
                    return Ok(BracketCheck { pairs_checked: pairs, violation: Some(format!("{name} fails for [{x}, {y}]")) });
                }
            }
        }
    }
    Ok(BracketCheck { pairs_checked: pairs, violation: None })
}

/// Inertia of a real symmetric pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub negatives: usize,
    pub positives: usize,
    pub nulls: usize,
}

fn real_part_checked(z: GaussianRational) -> Result<Q, InvolutionError> {
    if z.is_real() {
        Ok(z.re)
    } else {
        Err(InvolutionError::NotReal(z.to_string()))
    }
}

fn gram_signature<F>(elems: &[AffineElement], pair: F) -> Result<Signature, InvolutionError>
where
    F: Fn(&AffineElement, &AffineElement) -> GaussianRational,
{
    let mut gram = vec![vec![Q::zero(); elems.len()]; elems.len()];
    for i in 0..elems.len() {
        for j in i..elems.len() {
            let v = real_part_checked(pair(&elems[i], &elems[j]))?;
            gram[i][j] = v.clone();
            gram[j][i] = v;
        }
    }
    let (negatives, positives, nulls) = inertia(&gram);
    Ok(Signature { negatives, positives, nulls })
}

/// Signature of the trace pairing `(x, y) ↦ [t⁰] tr(X·Y)` on the loop parts of a subspace.
///
/// The `c` and `d` components are dropped, so directions such as `ic` and `id`
/// show up as nulls; use [`center_derivation_signature`] for those.
pub fn killing_signature(space: &RealSubspace) -> Result<Signature, InvolutionError> {
    let loops: Vec<AffineElement> = space.basis.iter().map(|b| AffineElement::from_loop(b.loop_part.clone())).collect();
    gram_signature(&loops, |x, y| (&x.loop_part * &y.loop_part).trace().coeff(0))
}

/// Signature of the extended form on the `c`, `d` components of a subspace.
pub fn center_derivation_signature(space: &RealSubspace) -> Result<Signature, InvolutionError> {
    let n = space.size();
    let cd: Vec<AffineElement> = space
        .basis
        .iter()
        .filter(|b| !b.c_coeff.is_zero() || !b.d_coeff.is_zero())
        .map(|b| AffineElement { loop_part: LaurentMatrix::zeros(n), c_coeff: b.c_coeff.clone(), d_coeff: b.d_coeff.clone() })
        .collect();
    gram_signature(&cd, |x, y| &(&x.c_coeff * &y.d_coeff) + &(&x.d_coeff * &y.c_coeff))
}

/// Identify the reductive algebra obtained by evaluating `K` at `t = 1`.
///
/// When the involution substitutes `t ↦ −t` only even-degree loop terms are
/// evaluated, since evaluation intertwines `σ` with its constant part only there.
pub fn identify_degree0_type(k: &RealSubspace) -> Result<Degree0Type, InvolutionError> {
    Ok(identify_matrix_algebra(&degree0_matrices(k))?)
}

/// The constant matrices `X(1)` (even part only under a sign twist) for each basis element.
pub fn degree0_matrices(k: &RealSubspace) -> Vec<Vec<Vec<GaussianRational>>> {
    k.basis
        .iter()
        .map(|b| match k.twist {
            Sign::Plus => b.loop_part.eval_one(),
            Sign::Minus => b.loop_part.map(|p| p.filter_degrees(|d| d % 2 == 0)).eval_one(),
        })
        .collect()
}

/// A worked case: an automorphism spec on a named algebra.
#[derive(Clone, Debug)]
pub struct WorkedCase {
    pub name: &'static str,
    pub series: Series,
    pub rank: usize,
    pub spec: AutomorphismSpec,
}

fn const_matrix(rows: &[&[i64]]) -> LaurentMatrix {
    LaurentMatrix::from_ints(rows)
}

/// Names of the built-in worked cases, as accepted by [`worked_case`].
pub fn worked_case_names(series: Series, rank: usize) -> &'static [&'static str] {
    match (series, rank) {
        (Series::A, 1) => &["I", "II", "III"],
        (Series::A, 2) => &["I", "II", "III", "IV"],
        _ => &[],
    }
}

/// Built-in involutions for `A₁⁽¹⁾` (cases I–III) and `A₂⁽¹⁾` (cases I–IV).
pub fn worked_case(series: Series, rank: usize, name: &str) -> Result<WorkedCase, InvolutionError> {
    use AutomorphismKind::*;
    let unknown = || InvolutionError::UnknownCase(format!("{series}{rank} {name}"));
    let key = worked_case_names(series, rank).iter().find(|n| n.eq_ignore_ascii_case(name)).ok_or_else(unknown)?;
    let spec = match (rank, *key) {
        (1, "I") => AutomorphismSpec::new(const_matrix(&[&[1, 0], &[0, -1]]), Sign::Plus, Q::zero(), OneA)?,
        (1, "II") => AutomorphismSpec::new(const_matrix(&[&[1, 0], &[0, -1]]), Sign::Minus, Q::zero(), OneA)?,
        (1, "III") => {
            let mut u = LaurentMatrix::zeros(2);
            u.set(0, 1, LaurentScalar::one());
            u.set(1, 0, -LaurentScalar::t_pow(1));
            AutomorphismSpec::new(u, Sign::Plus, qi(-1), OneA)?
        }
        (2, "I") => AutomorphismSpec::new(const_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]), Sign::Plus, Q::zero(), OneA)?,
        (2, "II") => AutomorphismSpec::new(const_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]), Sign::Minus, Q::zero(), OneA)?,
        (2, "III") => AutomorphismSpec::new(const_matrix(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]), Sign::Plus, Q::zero(), OneB)?,
        (2, "IV") => AutomorphismSpec::new(const_matrix(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]), Sign::Minus, Q::zero(), OneB)?,
        _ => return Err(unknown()),
    };
    Ok(WorkedCase { name: key, series, rank, spec })
}

/// Machine-readable summary of one involution run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub case: String,
    pub series: Series,
    pub rank: usize,
    pub kind: AutomorphismKind,
    pub u: i64,
    pub xi: String,
    pub gamma: String,
    pub u_matrix: Vec<Vec<String>>,
    pub window: i32,
    pub core: i32,
    pub degree_shift: i32,
    pub dim_compact: usize,
    pub dim_k: usize,
    pub dim_p: usize,
    /// `dim K ∩ {|deg| ≤ n}` for `n = 0..=core`.
    pub k_profile: Vec<usize>,
    pub p_profile: Vec<usize>,
    pub degree0_type: Option<Degree0Type>,
    pub k_signature: Signature,
    pub ip_signature: Signature,
    pub cd_signature: Signature,
    pub involution_holds: bool,
    pub involution_holds_on_loop_and_center: bool,
    pub core_covered: bool,
    pub bracket_relations_hold: bool,
    pub discrepancies: Vec<String>,
}

/// Run the full pipeline for one spec with core window `core`.
pub fn verify_case(case: &WorkedCase, core: i32) -> Result<(VerificationReport, CartanDecomposition), InvolutionError> {
    let shift = case.spec.degree_shift();
    let window = core + shift;
    let mut compact = compact_form(case.series, case.rank, window)?;
    compact.core = core;
    let dec = split_eigenspaces(&case.spec, &compact)?;
    let brackets = check_bracket_relations(&dec)?;
    let mut discrepancies = dec.discrepancies.clone();
    if let Some(v) = &brackets.violation {
        discrepancies.push(v.clone());
    }
    let degree0_type = match identify_degree0_type(&dec.k) {
        Ok(t) => Some(t),
        Err(e) => {
            discrepancies.push(format!("degree-0 identification failed: {e}"));
            None
        }
    };
    let ip = dec.p.with_elements(dec.p.basis.iter().map(AffineElement::times_i).collect());
    let profile = |s: &RealSubspace| (0..=core).map(|n| s.truncated(n).dim()).collect::<Vec<_>>();
    let report = VerificationReport {
        schema: crate::SCHEMA.to_string(),
        case: case.name.to_string(),
        series: case.series,
        rank: case.rank,
        kind: case.spec.kind,
        u: case.spec.u.as_int(),
        xi: fmt_q(&case.spec.xi),
        gamma: fmt_q(&case.spec.gamma),
        u_matrix: (0..case.spec.size())
            .map(|i| (0..case.spec.size()).map(|j| case.spec.u_matrix.get(i, j).to_string()).collect())
            .collect(),
        window,
        core,
        degree_shift: shift,
        dim_compact: compact.dim(),
        dim_k: dec.k.dim(),
        dim_p: dec.p.dim(),
        k_profile: profile(&dec.k),
        p_profile: profile(&dec.p),
        degree0_type,
        k_signature: killing_signature(&dec.k)?,
        ip_signature: killing_signature(&ip)?,
        cd_signature: center_derivation_signature(&compact)?,
        involution_holds: dec.involution.holds(),
        involution_holds_on_loop_and_center: dec.involution.holds_on_loop_and_center(),
        core_covered: dec.core_covered,
        bracket_relations_hold: brackets.violation.is_none(),
        discrepancies,
    };
    Ok((report, dec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_algebra::scalar_form;
    use crate::scalars::q;

    fn t(n: i32) -> LaurentScalar {
        LaurentScalar::t_pow(n)
    }

    fn a1(case: &str) -> WorkedCase {
        worked_case(Series::A, 1, case).unwrap()
    }

    #[test]
    fn compact_slice_dimension() {
        for n in 1..=3 {
            assert_eq!(compact_form(Series::A, 1, n).unwrap().dim() as i32, 3 * (2 * n + 1) + 2);
        }
        let c = compact_form(Series::A, 1, 1).unwrap();
        let e = LaurentMatrix::unit(2, 0, 1, LaurentScalar::one());
        let f = LaurentMatrix::unit(2, 1, 0, LaurentScalar::one());
        let x = &AffineElement::monomial(1, &e) - &AffineElement::monomial(-1, &f);
        assert!(c.contains(&x));
        assert!(c.contains(&AffineElement::central(2, GaussianRational::i())));
        assert!(c.contains(&AffineElement::derivation(2, GaussianRational::i())));
    }

    #[test]
    fn case_one_block_map() {
        let spec = a1("I").spec;
        let m = LaurentMatrix::from_entries(2, vec![t(1), t(2), t(3), t(4)]);
        let out = apply_automorphism(&spec, &AffineElement::from_loop(m)).unwrap();
        assert_eq!(out.loop_part, LaurentMatrix::from_entries(2, vec![t(1), -t(2), -t(3), t(4)]));
    }

    #[test]
    fn case_three_block_map() {
        let spec = a1("III").spec;
        let (a, b, c, d) = (t(2), &t(1) + &t(-3), t(0), t(5));
        let m = LaurentMatrix::from_entries(2, vec![a.clone(), b.clone(), c.clone(), d.clone()]);
        let out = apply_automorphism(&spec, &AffineElement::from_loop(m)).unwrap();
        let expected = LaurentMatrix::from_entries(2, vec![d, -c.shift(-1), -b.shift(1), a]);
        assert_eq!(out.loop_part, expected);
    }

    #[test]
    fn phi_values() {
        assert!(phi_matrix(&LaurentMatrix::from_ints(&[&[1, 0], &[0, -1]])).unwrap().is_zero());
        let spec = a1("III").spec;
        let half = GaussianRational::real(q(1, 2));
        let mut expected = LaurentMatrix::zeros(2);
        expected.set(0, 0, LaurentScalar::constant(half.clone()));
        expected.set(1, 1, LaurentScalar::constant(-half.clone()));
        assert_eq!(spec.phi(), expected);
        let mut wrong_inv = LaurentMatrix::zeros(2);
        wrong_inv.set(0, 1, -t(1));
        wrong_inv.set(1, 0, LaurentScalar::one());
        let mut wrong = LaurentMatrix::zeros(2);
        wrong.set(0, 0, LaurentScalar::monomial(2, half.clone()));
        wrong.set(1, 1, LaurentScalar::monomial(2, -half));
        assert_eq!(phi_with_inverse(&spec.u_matrix, &wrong_inv), wrong);
    }

    #[test]
    fn automorphisms_preserve_brackets() {
        let alg = realize(Series::A, 1).unwrap();
        let basis = alg.basis();
        let mut elems: Vec<AffineElement> = Vec::new();
        for (k, x) in basis.iter().enumerate() {
            elems.push(AffineElement::monomial(k as i32 - 1, x));
        }
        elems.push(AffineElement::derivation(2, GaussianRational::one()));
        elems.push(AffineElement::central(2, GaussianRational::one()));
        for case in ["I", "II", "III"] {
            let spec = a1(case).spec;
            for x in &elems {
                for y in &elems {
                    let lhs = apply_automorphism(&spec, &bracket(x, y).unwrap()).unwrap();
                    let rhs = bracket(&apply_automorphism(&spec, x).unwrap(), &apply_automorphism(&spec, y).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "case {case}: [{x}, {y}]");
                }
            }
        }
    }

    #[test]
    fn case_three_is_involutive_except_on_d() {
        let c = a1("III");
        let mut compact = compact_form(Series::A, 1, 3).unwrap();
        compact.core = 2;
        let check = check_involution(&c.spec, &compact).unwrap();
        assert!(check.holds_on_loop_and_center());
        assert!(!check.holds());
        // σ²(d) − d = (2ξ + 1/2)·c, so ξ = −1/4 would make it involutive.
        let d = AffineElement::derivation(2, GaussianRational::one());
        let twice = apply_automorphism(&c.spec, &apply_automorphism(&c.spec, &d).unwrap()).unwrap();
        assert_eq!(&twice - &d, AffineElement::central(2, GaussianRational::real(q(-3, 2))));
        let fixed = AutomorphismSpec::new(c.spec.u_matrix.clone(), Sign::Plus, q(-1, 4), AutomorphismKind::OneA).unwrap();
        assert!(check_involution(&fixed, &compact).unwrap().holds());
    }

    #[test]
    fn identity_and_degree_shifting_specs() {
        let compact = compact_form(Series::A, 1, 2).unwrap();
        assert!(check_involution(&AutomorphismSpec::identity(2), &compact).unwrap().holds());
        let mut u = LaurentMatrix::identity(2);
        u.set(1, 1, t(1));
        let spec = AutomorphismSpec::new(u, Sign::Plus, Q::zero(), AutomorphismKind::OneA).unwrap();
        assert!(!check_involution(&spec, &compact).unwrap().holds());
        let dec = split_eigenspaces(&AutomorphismSpec::identity(2), &compact).unwrap();
        assert_eq!(dec.k.dim(), compact.dim());
        assert_eq!(dec.p.dim(), 0);
    }

    #[test]
    fn non_invertible_u_is_rejected() {
        let mut u = LaurentMatrix::identity(2);
        u.set(0, 0, &t(0) + &t(1));
        assert!(matches!(
            AutomorphismSpec::new(u, Sign::Plus, Q::zero(), AutomorphismKind::OneA),
            Err(InvolutionError::NotInvertible(_))
        ));
    }

    #[test]
    fn form_is_preserved_by_case_one() {
        let spec = a1("I").spec;
        let alg = realize(Series::A, 1).unwrap();
        for x in alg.basis() {
            for y in alg.basis() {
                let (x, y) = (AffineElement::monomial(1, &x), AffineElement::monomial(-1, &y));
                let before = scalar_form(&x, &y).unwrap();
                let after = scalar_form(&apply_automorphism(&spec, &x).unwrap(), &apply_automorphism(&spec, &y).unwrap()).unwrap();
                assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn case_one_signatures() {
        let (rep, _) = verify_case(&a1("I"), 2).unwrap();
        assert_eq!(rep.k_signature.positives, 0);
        assert_eq!(rep.ip_signature.negatives, 0);
        assert_eq!(rep.cd_signature, Signature { negatives: 1, positives: 1, nulls: 0 });
        assert_eq!(rep.dim_k + rep.dim_p, rep.dim_compact);
        assert!(rep.bracket_relations_hold);
    }
}
