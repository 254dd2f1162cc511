//! Exact Gaussian elimination over ℚ and ℚ(i).
//!
//! Vectors are plain `Vec<F>`; matrices are lists of rows. The routines here
//! back every span, eigenspace and signature computation in the crate.

use num_traits::{One, Signed, Zero};

use crate::scalars::{GaussianRational, Q};

/// The field operations needed by elimination.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Q {
    fn zero() -> Self {
        <Q as Zero>::zero()
    }
    fn one() -> Self {
        <Q as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        GaussianRational::inv(self).expect("pivot is nonzero")
    }
}

/// Incrementally maintained echelon basis of a row space.
///
/// Each stored row has a leading 1 at its pivot column and zeros at the
/// pivot columns of all other stored rows, so reduction is a single pass.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let k = w[*p].clone();
                for (x, r) in w.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = x.sub(&k.mul(r));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Field::is_zero)
    }

    /// Insert `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        for x in w.iter_mut() {
            *x = x.mul(&inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let k = row[p].clone();
                for (x, r) in row.iter_mut().zip(&w) {
                    if !r.is_zero() {
                        *x = x.sub(&k.mul(r));
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<F>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Stored rows sorted by pivot column, giving a canonical basis of the span.
    pub fn canonical_rows(&self) -> Vec<Vec<F>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Rank of a list of vectors.
pub fn rank<F: Field>(vectors: &[Vec<F>], dim: usize) -> usize {
    let mut b = EchelonBasis::new(dim);
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}

/// Basis of `{x : M x = 0}` for a matrix given by rows with `ncols` columns.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut b = EchelonBasis::new(ncols);
    for r in rows {
        b.insert(r);
    }
    let reduced = b.canonical_rows();
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![F::zero(); ncols];
        x[free] = F::one();
        for (r, p) in reduced.iter().zip(&pivots) {
            x[*p] = r[free].neg();
        }
        out.push(x);
    }
    out
}

/// Solve `Σ cᵢ · columns[i] = target`; returns the coefficients if solvable.
pub fn solve_combination<F: Field>(columns: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let n = columns.len();
    let m = target.len();
    // Augmented system rows: one per coordinate, unknowns c_0..c_{n-1} then -1.
    let rows: Vec<Vec<F>> = (0..m)
        .map(|k| {
            let mut r: Vec<F> = columns.iter().map(|c| c[k].clone()).collect();
            r.push(target[k].neg());
            r
        })
        .collect();
    let ns = nullspace(&rows, n + 1);
    let sol = ns.into_iter().find(|v| !v[n].is_zero())?;
    let inv = sol[n].inv();
    Some(sol[..n].iter().map(|x| x.mul(&inv)).collect())
}

/// Inertia `(negatives, positives, zeros)` of a real symmetric matrix.
///
/// Uses symmetric congruence elimination, which is exact over ℚ.
pub fn inertia(matrix: &[Vec<Q>]) -> (usize, usize, usize) {
    let n = matrix.len();
    let mut a: Vec<Vec<Q>> = matrix.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut neg, mut pos) = (0, 0);
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !Zero::is_zero(&a[i][i]));
        let k = match pivot {
            Some(k) => k,
            None => {
                let pair = active.iter().copied().find_map(|i| {
                    active.iter().copied().find(|&j| j != i && !Zero::is_zero(&a[i][j])).map(|j| (i, j))
                });
                match pair {
                    Some((i, j)) => {
                        // Replace basis vector i by e_i + e_j, making a[i][i] = 2a[i][j].
                        for r in 0..n {
                            let v = a[r][j].clone();
                            a[r][i] += v;
                        }
                        for c in 0..n {
                            let v = a[j][c].clone();
                            a[i][c] += v;
                        }
                        i
                    }
                    None => break,
                }
            }
        };
        let d = a[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != k);
        for &i in &active {
            if Zero::is_zero(&a[i][k]) {
                continue;
            }
            let f = &a[i][k] / &d;
            for &j in &active {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
        for &i in &active {
            a[i][k] = <Q as Zero>::zero();
            a[k][i] = <Q as Zero>::zero();
        }
    }
    (neg, pos, n - neg - pos)
}

/// Determinant by Gaussian elimination over the field.
pub fn determinant<F: Field>(matrix: &[Vec<F>]) -> F {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero();
        };
        if p != col {
            a.swap(p, col);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].inv();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for c in col..n {
                let v = f.mul(&a[col][c]);
                a[r][c] = a[r][c].sub(&v);
            }
        }
    }
    det
}
