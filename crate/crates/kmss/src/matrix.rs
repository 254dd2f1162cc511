//! Square matrices with Laurent-polynomial entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{GaussianRational, LaurentScalar, Sign, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentScalar>,
}

impl LaurentMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![LaurentScalar::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, LaurentScalar::one());
        }
        m
    }

    /// Matrix unit `E_ij` multiplied by `p`.
    pub fn unit(n: usize, i: usize, j: usize, p: LaurentScalar) -> Self {
        let mut m = Self::zeros(n);
        m.set(i, j, p);
        m
    }

    /// Constant matrix from rows of Gaussian rationals.
    pub fn from_constants(rows: &[Vec<GaussianRational>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, c) in row.iter().enumerate() {
                m.set(i, j, LaurentScalar::constant(c.clone()));
            }
        }
        m
    }

    /// Constant integer matrix.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<GaussianRational>> = rows
            .iter()
            .map(|r| r.iter().map(|x| GaussianRational::from_int(*x)).collect())
            .collect();
        Self::from_constants(&rows)
    }

    pub fn from_entries(n: usize, entries: Vec<LaurentScalar>) -> Self {
        assert_eq!(entries.len(), n * n);
        Self { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentScalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentScalar) {
        self.entries[i * self.n + j] = p;
    }

    pub fn entries(&self) -> &[LaurentScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentScalar::is_zero)
    }

    pub fn map<F: Fn(&LaurentScalar) -> LaurentScalar>(&self, f: F) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        self.map(|p| p.scale(k))
    }

    pub fn scale_q(&self, k: &Q) -> Self {
        self.map(|p| p.scale_q(k))
    }

    /// Multiply every entry by `tᵏ`.
    pub fn shift(&self, k: i32) -> Self {
        self.map(|p| p.shift(k))
    }

    pub fn scale_laurent(&self, p: &LaurentScalar) -> Self {
        self.map(|x| x.laurent_mul(p))
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> LaurentScalar {
        let mut s = LaurentScalar::zero();
        for i in 0..self.n {
            s += self.get(i, i);
        }
        s
    }

    pub fn derivative(&self) -> Self {
        self.map(LaurentScalar::derivative)
    }

    /// Entrywise `t·d/dt`.
    pub fn euler(&self) -> Self {
        self.map(LaurentScalar::euler)
    }

    pub fn substitute_sign(&self, u: Sign) -> Self {
        self.map(|p| p.substitute_sign(u))
    }

    /// Entrywise complex conjugation, optionally with `t ↦ t⁻¹`.
    pub fn conjugate_bar(&self, invert_t: bool) -> Self {
        self.map(|p| p.conjugate_bar(invert_t))
    }

    /// Conjugate transpose with `t ↦ t⁻¹`: the adjoint for the compact real structure.
    pub fn star(&self) -> Self {
        self.conjugate_bar(true).transpose()
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    /// All degrees occurring in any entry.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let mut lo: Option<i32> = None;
        let mut hi: Option<i32> = None;
        for p in &self.entries {
            if let (Some(a), Some(b)) = (p.min_degree(), p.max_degree()) {
                lo = Some(lo.map_or(a, |x| x.min(a)));
                hi = Some(hi.map_or(b, |x| x.max(b)));
            }
        }
        lo.zip(hi)
    }

    /// Value at `t = 1` as a constant matrix.
    pub fn eval_one(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).eval_one()).collect())
            .collect()
    }

    /// Constant matrix of the `tᵏ` coefficients.
    pub fn coefficient(&self, k: i32) -> Vec<Vec<GaussianRational>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).coeff(k)).collect())
            .collect()
    }

    /// Determinant computed by cofactor expansion (sizes here are small).
    pub fn determinant(&self) -> LaurentScalar {
        fn det(m: &LaurentMatrix, rows: &[usize], cols: &[usize]) -> LaurentScalar {
            if rows.is_empty() {
                return LaurentScalar::one();
            }
            let r = rows[0];
            let mut acc = LaurentScalar::zero();
            for (k, &c) in cols.iter().enumerate() {
                let e = m.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = det(m, &rows[1..], &rest);
                let term = e.laurent_mul(&minor);
                if k % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
        let idx: Vec<usize> = (0..self.n).collect();
        det(self, &idx, &idx)
    }

    /// Inverse over the Laurent ring; exists iff the determinant is a unit `c·tᵏ`.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let det_inv = self.determinant().unit_inverse()?;
        let mut inv = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let mut sub = Self::zeros(n - 1);
                for (a, &r) in rows.iter().enumerate() {
                    for (b, &c) in cols.iter().enumerate() {
                        sub.set(a, b, self.get(r, c).clone());
                    }
                }
                let mut cof = sub.determinant().laurent_mul(&det_inv);
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                inv.set(i, j, cof);
            }
        }
        Some(inv)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[ {} ]", row.join(" | "))?;
        }
        Ok(())
    }
}

impl Add for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn add(self, o: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        LaurentMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }
}
impl Sub for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, o: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        LaurentMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect(),
        }
    }
}
impl Neg for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn neg(self) -> LaurentMatrix {
        self.map(|p| -p)
    }
}
impl Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, o: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        let n = self.n;
        let mut m = LaurentMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let mut e = m.get(i, j).clone();
                    e += &a.laurent_mul(b);
                    m.set(i, j, e);
                }
            }
        }
        m
    }
}
