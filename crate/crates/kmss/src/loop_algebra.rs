//! Matrix realizations of classical Lie algebras and their affinizations.
//!
//! An [`AffineElement`] is `X(t) + λc + μd` where `X(t)` is a matrix of
//! Laurent polynomials. The bracket is the centrally extended loop bracket
//! with `d` acting as `t·d/dt` and central term `Res tr(X′ Y)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::cartan::{build_affine_diagram, root_system, AffineDiagram, CartanError, Root, Series};
use crate::matrix::LaurentMatrix;
use crate::scalars::{qi, GaussianRational, LaurentScalar, Q};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum LoopError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("matrix sizes differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

/// A classical simple Lie algebra realized by constant complex matrices.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    pub series: Series,
    pub rank: usize,
    size: usize,
    /// Invariant form `J` for the orthogonal and symplectic series.
    form: Option<LaurentMatrix>,
    cartan: Vec<LaurentMatrix>,
    root_vectors: Vec<(Root, LaurentMatrix)>,
}

fn int_matrix(n: usize, entries: &[(usize, usize, i64)]) -> LaurentMatrix {
    let mut m = LaurentMatrix::zeros(n);
    for &(i, j, v) in entries {
        m.set(i, j, LaurentScalar::constant(GaussianRational::from_int(v)));
    }
    m
}

fn unit(n: usize, i: usize, j: usize) -> LaurentMatrix {
    LaurentMatrix::unit(n, i, j, LaurentScalar::one())
}

impl MatrixLieAlgebra {
    /// Matrix size of the defining representation.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.cartan.len() + self.root_vectors.len()
    }

    /// Diagonal Cartan subalgebra basis.
    pub fn cartan_basis(&self) -> &[LaurentMatrix] {
        &self.cartan
    }

    pub fn root_vectors(&self) -> &[(Root, LaurentMatrix)] {
        &self.root_vectors
    }

    /// Cartan elements followed by root vectors.
    pub fn basis(&self) -> Vec<LaurentMatrix> {
        self.cartan.iter().cloned().chain(self.root_vectors.iter().map(|(_, m)| m.clone())).collect()
    }

    pub fn root_vector(&self, root: &[i64]) -> Option<&LaurentMatrix> {
        self.root_vectors.iter().find(|(r, _)| r.as_slice() == root).map(|(_, m)| m)
    }

    /// The invariant bilinear form matrix, if the algebra is orthogonal or symplectic.
    pub fn form_matrix(&self) -> Option<&LaurentMatrix> {
        self.form.as_ref()
    }

    /// The compact involution `θ(x) = −x*` on constant matrices.
    pub fn compact_involution(&self, x: &LaurentMatrix) -> LaurentMatrix {
        -&x.star()
    }

    /// Whether a matrix (with Laurent entries) lies in the loop algebra.
    pub fn contains(&self, x: &LaurentMatrix) -> bool {
        if x.size() != self.size {
            return false;
        }
        match &self.form {
            None => x.trace().is_zero(),
            Some(j) => (&(&x.transpose() * j) + &(j * x)).is_zero(),
        }
    }

    /// `α(h)` for a diagonal `h` and the root carried by a root vector.
    pub fn root_value(root_vector: &LaurentMatrix, h: &LaurentMatrix) -> GaussianRational {
        let n = root_vector.size();
        for a in 0..n {
            for b in 0..n {
                if !root_vector.get(a, b).is_zero() {
                    return (h.get(a, a) - h.get(b, b)).coeff(0);
                }
            }
        }
        GaussianRational::zero()
    }
}

/// Build the standard matrix realization of a classical algebra.
pub fn realize(series: Series, rank: usize) -> Result<MatrixLieAlgebra, LoopError> {
    series.check_rank(rank)?;
    let n = rank;
    if series == Series::A {
        let size = n + 1;
        let cartan = (0..n).map(|i| int_matrix(size, &[(i, i, 1), (i + 1, i + 1, -1)])).collect();
        let mut root_vectors = Vec::new();
        for a in 0..size {
            for b in 0..size {
                if a != b {
                    let mut r = vec![0; size];
                    r[a] += 1;
                    r[b] -= 1;
                    root_vectors.push((r, unit(size, a, b)));
                }
            }
        }
        return Ok(MatrixLieAlgebra { series, rank, size, form: None, cartan, root_vectors });
    }
    let (size, j_entries, sign): (usize, Vec<(usize, usize, i64)>, i64) = match series {
        Series::B => {
            let mut e: Vec<(usize, usize, i64)> = (0..n).flat_map(|i| [(i, n + i, 1), (n + i, i, 1)]).collect();
            e.push((2 * n, 2 * n, 1));
            (2 * n + 1, e, 1)
        }
        Series::C => (2 * n, (0..n).flat_map(|i| [(i, n + i, 1), (n + i, i, -1)]).collect(), -1),
        Series::D => (2 * n, (0..n).flat_map(|i| [(i, n + i, 1), (n + i, i, 1)]).collect(), 1),
        Series::A => unreachable!(),
    };
    let j = int_matrix(size, &j_entries);
    // J is a signed permutation with J² = ±I, so J⁻¹ = sign·J.
    let j_inv = j.scale_q(&qi(sign));
    let weight = |k: usize| -> Root {
        let mut w = vec![0; n];
        if k < n {
            w[k] = 1;
        } else if k < 2 * n {
            w[k - n] = -1;
        }
        w
    };
    let cartan: Vec<LaurentMatrix> = (0..n).map(|i| int_matrix(size, &[(i, i, 1), (n + i, n + i, -1)])).collect();
    let mut root_vectors: Vec<(Root, LaurentMatrix)> = Vec::new();
    for a in 0..size {
        for b in 0..size {
            let root: Root = weight(a).iter().zip(weight(b)).map(|(x, y)| x - y).collect();
            if root.iter().all(|x| *x == 0) || root_vectors.iter().any(|(r, _)| *r == root) {
                continue;
            }
            let x = &unit(size, a, b) - &(&(&j_inv * &unit(size, b, a)) * &j);
            if !x.is_zero() {
                root_vectors.push((root, x));
            }
        }
    }
    Ok(MatrixLieAlgebra { series, rank, size, form: Some(j), cartan, root_vectors })
}

/// `X(t) + λc + μd` in the untwisted affine algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub loop_part: LaurentMatrix,
    pub c_coeff: GaussianRational,
    pub d_coeff: GaussianRational,
}

impl AffineElement {
    pub fn zero(size: usize) -> Self {
        Self::from_loop(LaurentMatrix::zeros(size))
    }

    pub fn from_loop(loop_part: LaurentMatrix) -> Self {
        Self { loop_part, c_coeff: GaussianRational::zero(), d_coeff: GaussianRational::zero() }
    }

    /// `tⁿ ⊗ x` for a constant matrix `x`.
    pub fn monomial(n: i32, x: &LaurentMatrix) -> Self {
        Self::from_loop(x.shift(n))
    }

    pub fn central(size: usize, k: GaussianRational) -> Self {
        Self { loop_part: LaurentMatrix::zeros(size), c_coeff: k, d_coeff: GaussianRational::zero() }
    }

    pub fn derivation(size: usize, k: GaussianRational) -> Self {
        Self { loop_part: LaurentMatrix::zeros(size), c_coeff: GaussianRational::zero(), d_coeff: k }
    }

    pub fn size(&self) -> usize {
        self.loop_part.size()
    }

    pub fn is_zero(&self) -> bool {
        self.loop_part.is_zero() && self.c_coeff.is_zero() && self.d_coeff.is_zero()
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self { loop_part: self.loop_part.scale(k), c_coeff: &self.c_coeff * k, d_coeff: &self.d_coeff * k }
    }

    pub fn scale_q(&self, k: &Q) -> Self {
        self.scale(&GaussianRational::real(k.clone()))
    }

    pub fn times_i(&self) -> Self {
        self.scale(&GaussianRational::i())
    }

    /// The Cartan semi-involution `ω`: `tⁿx ↦ −t⁻ⁿx*`, `c ↦ −c`, `d ↦ −d`, antilinear.
    pub fn cartan_semi_involution(&self) -> Self {
        Self {
            loop_part: -&self.loop_part.star(),
            c_coeff: -self.c_coeff.conj(),
            d_coeff: -self.d_coeff.conj(),
        }
    }

    /// Degree range of the loop part.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        self.loop_part.degree_range()
    }

    /// Keep only loop terms with degree satisfying `keep`; `c` and `d` parts are kept.
    pub fn filter_degrees<F: Fn(i32) -> bool + Copy>(&self, keep: F) -> Self {
        Self {
            loop_part: self.loop_part.map(|p| p.filter_degrees(keep)),
            c_coeff: self.c_coeff.clone(),
            d_coeff: self.d_coeff.clone(),
        }
    }

    /// Real coordinates over the degree range `[lo, hi]`; `None` if the support leaves it.
    ///
    /// Layout: for each degree, each entry's real then imaginary part, then `c`, then `d`.
    pub fn to_real_vector(&self, lo: i32, hi: i32) -> Option<Vec<Q>> {
        if let Some((a, b)) = self.degree_range() {
            if a < lo || b > hi {
                return None;
            }
        }
        let n = self.size();
        let width = (hi - lo + 1) as usize;
        let mut v = vec![Q::zero(); width * n * n * 2 + 4];
        for i in 0..n {
            for j in 0..n {
                for (deg, c) in self.loop_part.get(i, j).terms() {
                    let base = (((deg - lo) as usize * n + i) * n + j) * 2;
                    v[base] = c.re.clone();
                    v[base + 1] = c.im.clone();
                }
            }
        }
        let tail = width * n * n * 2;
        v[tail] = self.c_coeff.re.clone();
        v[tail + 1] = self.c_coeff.im.clone();
        v[tail + 2] = self.d_coeff.re.clone();
        v[tail + 3] = self.d_coeff.im.clone();
        Some(v)
    }

    /// Inverse of [`AffineElement::to_real_vector`].
    pub fn from_real_vector(v: &[Q], size: usize, lo: i32, hi: i32) -> Self {
        let n = size;
        let width = (hi - lo + 1) as usize;
        let mut m = LaurentMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut p = LaurentScalar::zero();
                for k in 0..width {
                    let base = ((k * n + i) * n + j) * 2;
                    let c = GaussianRational::new(v[base].clone(), v[base + 1].clone());
                    p.add_term(lo + k as i32, &c);
                }
                m.set(i, j, p);
            }
        }
        let tail = width * n * n * 2;
        Self {
            loop_part: m,
            c_coeff: GaussianRational::new(v[tail].clone(), v[tail + 1].clone()),
            d_coeff: GaussianRational::new(v[tail + 2].clone(), v[tail + 3].clone()),
        }
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+ ({})·c + ({})·d", self.loop_part, self.c_coeff, self.d_coeff)
    }
}

impl Add for &AffineElement {
    type Output = AffineElement;
    fn add(self, o: &AffineElement) -> AffineElement {
        AffineElement {
            loop_part: &self.loop_part + &o.loop_part,
            c_coeff: &self.c_coeff + &o.c_coeff,
            d_coeff: &self.d_coeff + &o.d_coeff,
        }
    }
}
impl Sub for &AffineElement {
    type Output = AffineElement;
    fn sub(self, o: &AffineElement) -> AffineElement {
        AffineElement {
            loop_part: &self.loop_part - &o.loop_part,
            c_coeff: &self.c_coeff - &o.c_coeff,
            d_coeff: &self.d_coeff - &o.d_coeff,
        }
    }
}
impl Neg for &AffineElement {
    type Output = AffineElement;
    fn neg(self) -> AffineElement {
        AffineElement { loop_part: -&self.loop_part, c_coeff: -&self.c_coeff, d_coeff: -&self.d_coeff }
    }
}

fn check_sizes(x: &AffineElement, y: &AffineElement) -> Result<(), LoopError> {
    if x.size() != y.size() {
        Err(LoopError::DimensionMismatch { left: x.size(), right: y.size() })
    } else {
        Ok(())
    }
}

/// The affine bracket, including the derivation action and the central cocycle.
pub fn bracket(x: &AffineElement, y: &AffineElement) -> Result<AffineElement, LoopError> {
    check_sizes(x, y)?;
    let mut loop_part = x.loop_part.commutator(&y.loop_part);
    if !x.d_coeff.is_zero() {
        loop_part = &loop_part + &y.loop_part.euler().scale(&x.d_coeff);
    }
    if !y.d_coeff.is_zero() {
        loop_part = &loop_part - &x.loop_part.euler().scale(&y.d_coeff);
    }
    Ok(AffineElement { loop_part, c_coeff: cocycle(x, y)?, d_coeff: GaussianRational::zero() })
}

/// `(x, y)_t = tr(X(t)·Y(t))`, the Laurent-valued trace form on loop parts.
pub fn invariant_form(x: &AffineElement, y: &AffineElement) -> Result<LaurentScalar, LoopError> {
    check_sizes(x, y)?;
    Ok((&x.loop_part * &y.loop_part).trace())
}

/// `ψ(a, b) = Res tr(A′(t)·B(t))`.
pub fn cocycle(a: &AffineElement, b: &AffineElement) -> Result<GaussianRational, LoopError> {
    check_sizes(a, b)?;
    Ok((&a.loop_part.derivative() * &b.loop_part).trace().residue())
}

/// The scalar invariant form: constant term of the trace form plus `(c, d) = 1`.
pub fn scalar_form(x: &AffineElement, y: &AffineElement) -> Result<GaussianRational, LoopError> {
    let loop_term = invariant_form(x, y)?.coeff(0);
    Ok(&(&loop_term + &(&x.c_coeff * &y.d_coeff)) + &(&x.d_coeff * &y.c_coeff))
}

/// Chevalley generators `eᵢ, fᵢ, hᵢ` for `i = 0..n`, index 0 affine.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub e: Vec<AffineElement>,
    pub f: Vec<AffineElement>,
    pub h: Vec<AffineElement>,
}

/// Normalize `f` so that `α([e, f]) = 2`, returning `(f, h)`.
fn normalize_pair(e: &AffineElement, f: &AffineElement) -> (AffineElement, AffineElement) {
    let h = bracket(e, f).expect("same size");
    let probe = bracket(&h, e).expect("same size");
    // [h, e] = λ e; find λ from any nonzero entry of e.
    let n = e.size();
    let mut lambda = GaussianRational::zero();
    'outer: for a in 0..n {
        for b in 0..n {
            let p = e.loop_part.get(a, b);
            if let Some(deg) = p.min_degree() {
                lambda = &probe.loop_part.get(a, b).coeff(deg) / &p.coeff(deg);
                break 'outer;
            }
        }
    }
    let k = &GaussianRational::from_int(2) / &lambda;
    (f.scale(&k), h.scale(&k))
}

/// Chevalley generators of `Xₙ⁽¹⁾`, with `e₀ = t⊗x₋θ` and `f₀ = t⁻¹⊗x_θ`.
pub fn chevalley_generators(alg: &MatrixLieAlgebra) -> Result<GeneratorSet, LoopError> {
    let rs = root_system(alg.series, alg.rank)?;
    let theta = rs.largest_root.clone();
    let minus_theta: Root = theta.iter().map(|x| -x).collect();
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut h = Vec::new();
    let mut push = |ep: AffineElement, fp: AffineElement| {
        let (fp, hp) = normalize_pair(&ep, &fp);
        e.push(ep);
        f.push(fp);
        h.push(hp);
    };
    let vec_of = |r: &Root| alg.root_vector(r).cloned().expect("root vector exists");
    push(
        AffineElement::monomial(1, &vec_of(&minus_theta)),
        AffineElement::monomial(-1, &vec_of(&theta)),
    );
    for alpha in &rs.simple_roots {
        let neg: Root = alpha.iter().map(|x| -x).collect();
        push(AffineElement::monomial(0, &vec_of(alpha)), AffineElement::monomial(0, &vec_of(&neg)));
    }
    Ok(GeneratorSet { e, f, h })
}

/// A failed defining relation together with the nonzero element witnessing it.
#[derive(Clone, Debug, Serialize)]
pub struct SerreFailure {
    pub relation: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SerreReport {
    pub series: Series,
    pub rank: usize,
    pub relations_checked: usize,
    pub failure: Option<SerreFailure>,
}

impl SerreReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

fn ad_power(x: &AffineElement, y: &AffineElement, k: i64) -> AffineElement {
    let mut z = y.clone();
    for _ in 0..k {
        z = bracket(x, &z).expect("same size");
    }
    z
}

/// Verify the Serre relations and the Chevalley relations of the affine algebra.
pub fn check_serre(series: Series, rank: usize) -> Result<SerreReport, LoopError> {
    let alg = realize(series, rank)?;
    let diag = build_affine_diagram(series, rank)?;
    let gens = chevalley_generators(&alg)?;
    Ok(check_relations(&diag, &gens))
}

/// Check all defining relations of `g(A)` on a generator set against a diagram.
pub fn check_relations(diag: &AffineDiagram, gens: &GeneratorSet) -> SerreReport {
    let n = diag.node_count();
    let mut checked = 0;
    let fail = |relation: String, witness: &AffineElement| SerreFailure { relation, witness: witness.to_string() };
    for i in 0..n {
        for j in 0..n {
            let a = diag.cartan_entry(i, j);
            let hij = bracket(&gens.h[i], &gens.h[j]).expect("same size");
            checked += 1;
            if !hij.is_zero() {
                return report(diag, checked, Some(fail(format!("[h{i}, h{j}] = 0"), &hij)));
            }
            let he = &bracket(&gens.h[i], &gens.e[j]).expect("same size") - &gens.e[j].scale_q(&qi(a));
            checked += 1;
            if !he.is_zero() {
                return report(diag, checked, Some(fail(format!("[h{i}, e{j}] = {a}·e{j}"), &he)));
            }
            let hf = &bracket(&gens.h[i], &gens.f[j]).expect("same size") + &gens.f[j].scale_q(&qi(a));
            checked += 1;
            if !hf.is_zero() {
                return report(diag, checked, Some(fail(format!("[h{i}, f{j}] = {}·f{j}", -a), &hf)));
            }
            let ef = bracket(&gens.e[i], &gens.f[j]).expect("same size");
            let expected = if i == j { gens.h[i].clone() } else { AffineElement::zero(ef.size()) };
            checked += 1;
            if ef != expected {
                return report(diag, checked, Some(fail(format!("[e{i}, f{j}] = δ·h{i}"), &(&ef - &expected))));
            }
            if i != j {
                let se = ad_power(&gens.e[i], &gens.e[j], 1 - a);
                checked += 1;
                if !se.is_zero() {
                    return report(diag, checked, Some(fail(format!("(ad e{i})^{} e{j} = 0", 1 - a), &se)));
                }
                let sf = ad_power(&gens.f[i], &gens.f[j], 1 - a);
                checked += 1;
                if !sf.is_zero() {
                    return report(diag, checked, Some(fail(format!("(ad f{i})^{} f{j} = 0", 1 - a), &sf)));
                }
            }
        }
    }
    report(diag, checked, None)
}

fn report(diag: &AffineDiagram, checked: usize, failure: Option<SerreFailure>) -> SerreReport {
    SerreReport { series: diag.series, rank: diag.rank, relations_checked: checked, failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i32) -> LaurentScalar {
        LaurentScalar::t_pow(n)
    }

    #[test]
    fn dimensions() {
        assert_eq!(realize(Series::A, 1).unwrap().dim(), 3);
        assert_eq!(realize(Series::A, 2).unwrap().dim(), 8);
        assert_eq!(realize(Series::C, 3).unwrap().dim(), 21);
        assert_eq!(realize(Series::B, 3).unwrap().dim(), 21);
        assert_eq!(realize(Series::D, 4).unwrap().dim(), 28);
    }

    #[test]
    fn basis_elements_satisfy_the_defining_condition() {
        for (s, r) in [(Series::A, 3), (Series::B, 2), (Series::C, 3), (Series::D, 4)] {
            let alg = realize(s, r).unwrap();
            for x in alg.basis() {
                assert!(alg.contains(&x), "{s}{r}");
                assert!(alg.contains(&alg.compact_involution(&x)), "{s}{r} not θ-stable");
            }
        }
    }

    #[test]
    fn a1_generators_match_the_loop_matrices() {
        let alg = realize(Series::A, 1).unwrap();
        let g = chevalley_generators(&alg).unwrap();
        assert_eq!(g.e[0].loop_part, LaurentMatrix::unit(2, 1, 0, t(1)));
        assert_eq!(g.f[0].loop_part, LaurentMatrix::unit(2, 0, 1, t(-1)));
        assert_eq!(g.h[1].loop_part, LaurentMatrix::from_ints(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn a2_affine_generators() {
        let alg = realize(Series::A, 2).unwrap();
        let g = chevalley_generators(&alg).unwrap();
        assert_eq!(g.e[0].loop_part, LaurentMatrix::unit(3, 2, 0, t(1)));
        assert_eq!(g.f[0].loop_part, LaurentMatrix::unit(3, 0, 2, t(-1)));
    }

    #[test]
    fn bracket_examples() {
        let n = 2;
        let e = LaurentMatrix::unit(n, 0, 1, LaurentScalar::one());
        let f = LaurentMatrix::unit(n, 1, 0, LaurentScalar::one());
        let h = LaurentMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        let d = AffineElement::derivation(n, GaussianRational::one());
        let x = AffineElement::monomial(3, &e);
        assert_eq!(bracket(&d, &x).unwrap(), x.scale_q(&qi(3)));
        let c = AffineElement::central(n, GaussianRational::one());
        assert!(bracket(&c, &x).unwrap().is_zero());
        let lhs = bracket(&AffineElement::monomial(1, &e), &AffineElement::monomial(-1, &f)).unwrap();
        let rhs = AffineElement { loop_part: h.clone(), c_coeff: GaussianRational::one(), d_coeff: GaussianRational::zero() };
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_and_cocycle_examples() {
        let n = 2;
        let e = LaurentMatrix::unit(n, 0, 1, LaurentScalar::one());
        let f = LaurentMatrix::unit(n, 1, 0, LaurentScalar::one());
        let h = LaurentMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        let te = AffineElement::monomial(1, &e);
        let tf = AffineElement::monomial(-1, &f);
        assert_eq!(invariant_form(&te, &tf).unwrap(), LaurentScalar::one());
        assert!(invariant_form(&te, &te).unwrap().is_zero());
        let hh = AffineElement::monomial(0, &h);
        assert_eq!(invariant_form(&hh, &hh).unwrap(), LaurentScalar::constant(GaussianRational::from_int(2)));
        assert_eq!(cocycle(&te, &tf).unwrap(), GaussianRational::one());
        assert!(cocycle(&AffineElement::monomial(0, &e), &AffineElement::monomial(0, &f)).unwrap().is_zero());
    }

    #[test]
    fn serre_relations_hold() {
        for (s, r) in [(Series::A, 1), (Series::A, 2), (Series::B, 2), (Series::B, 3), (Series::C, 3), (Series::D, 4)] {
            let rep = check_serre(s, r).unwrap();
            assert!(rep.holds(), "{s}{r}: {:?}", rep.failure);
        }
    }

    #[test]
    fn real_vector_round_trip() {
        let e = LaurentMatrix::unit(2, 0, 1, &t(2) + &t(-1));
        let mut x = AffineElement::from_loop(e);
        x.c_coeff = GaussianRational::i();
        let v = x.to_real_vector(-2, 2).unwrap();
        assert_eq!(AffineElement::from_real_vector(&v, 2, -2, 2), x);
        assert!(x.to_real_vector(0, 2).is_none());
    }
}
