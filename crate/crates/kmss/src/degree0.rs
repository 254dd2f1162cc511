//! Structure of small reductive matrix Lie algebras over ℚ(i).
//!
//! Given a spanning set of `n × n` complex matrices closed under the
//! commutator, [`identify_matrix_algebra`] picks a Cartan subalgebra,
//! decomposes into root spaces, rebuilds the Cartan matrix of the
//! semisimple part and names its simple factors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::{nullspace, EchelonBasis};
use crate::scalars::{GaussianRational, Q};

type CMatrix = Vec<Vec<GaussianRational>>;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Degree0Error {
    #[error("the span is not closed under the commutator")]
    NotClosed,
    #[error("no Cartan subalgebra with eigenvalues in Q(i) was found: {0}")]
    NoSplitCartan(String),
    #[error("root system is not reduced or not recognized: {0}")]
    Unrecognized(String),
}

/// A simple factor `Xₙ` of a reductive algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub family: char,
    pub rank: usize,
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Semisimple factors plus the dimension of the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degree0Type {
    pub factors: Vec<SimpleFactor>,
    pub center: usize,
    pub dim: usize,
    /// How the Cartan subalgebra was found: `diagonal`, `abelian` or `dimension`.
    pub method: String,
}

impl Degree0Type {
    /// Structural equality ignoring the dimension bookkeeping and method.
    pub fn same_structure(&self, other: &Degree0Type) -> bool {
        self.factors == other.factors && self.center == other.center
    }

    pub fn from_parts(mut factors: Vec<SimpleFactor>, center: usize) -> Self {
        factors.sort();
        let dim = factors.iter().map(factor_dim).sum::<usize>() + center;
        Self { factors, center, dim, method: "catalog".into() }
    }
}

impl fmt::Display for Degree0Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        if self.center > 0 {
            parts.push(format!("center({})", self.center));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Dimension of a simple Lie algebra of the given type.
pub fn factor_dim(s: &SimpleFactor) -> usize {
    let n = s.rank;
    match s.family {
        'A' => n * (n + 2),
        'B' | 'C' => n * (2 * n + 1),
        'D' => n * (2 * n - 1),
        'G' => 14,
        'F' => 52,
        'E' => match n {
            6 => 78,
            7 => 133,
            _ => 248,
        },
        _ => 0,
    }
}

fn flatten(m: &CMatrix) -> Vec<GaussianRational> {
    m.iter().flatten().cloned().collect()
}

fn mat_mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.len();
    let mut out = vec![vec![GaussianRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

fn combine(coeffs: &[GaussianRational], basis: &[CMatrix]) -> CMatrix {
    let n = basis[0].len();
    let mut out = vec![vec![GaussianRational::zero(); n]; n];
    for (c, m) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                out[i][j] += &(c * &m[i][j]);
            }
        }
    }
    out
}

/// Lexicographic order on `(re, im)` pairs, compatible with addition.
fn lex_cmp(a: &[GaussianRational], b: &[GaussianRational]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.re.cmp(&y.re).then_with(|| x.im.cmp(&y.im)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn is_positive(v: &[GaussianRational]) -> bool {
    lex_cmp(v, &vec![GaussianRational::zero(); v.len()]) == Ordering::Greater
}

/// Identify the reductive Lie algebra spanned by the given complex matrices.
pub fn identify_matrix_algebra(spanning: &[CMatrix]) -> Result<Degree0Type, Degree0Error> {
    let Some(first) = spanning.first() else {
        return Ok(Degree0Type { factors: vec![], center: 0, dim: 0, method: "abelian".into() });
    };
    let n = first.len();
    let mut ech = EchelonBasis::<GaussianRational>::new(n * n);
    let mut basis: Vec<CMatrix> = Vec::new();
    for m in spanning {
        if ech.insert(&flatten(m)) {
            basis.push(m.clone());
        }
    }
    let dim = basis.len();
    if dim == 0 {
        return Ok(Degree0Type { factors: vec![], center: 0, dim: 0, method: "abelian".into() });
    }
    let mut abelian = true;
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let c = commutator(a, b);
            if !ech.contains(&flatten(&c)) {
                return Err(Degree0Error::NotClosed);
            }
            if c.iter().flatten().any(|x| !x.is_zero()) {
                abelian = false;
            }
        }
    }
    if abelian {
        return Ok(Degree0Type { factors: vec![], center: dim, dim, method: "abelian".into() });
    }

    // Cartan candidate: diagonal matrices in the span.
    let offdiag: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let rows: Vec<Vec<GaussianRational>> = offdiag.iter().map(|&(i, j)| basis.iter().map(|m| m[i][j].clone()).collect()).collect();
    let cartan: Vec<Vec<GaussianRational>> = nullspace(&rows, dim)
        .iter()
        .map(|c| {
            let m = combine(c, &basis);
            (0..n).map(|i| m[i][i].clone()).collect()
        })
        .collect();
    match root_decomposition(&basis, &cartan, n) {
        Ok(t) => Ok(t),
        Err(reason) => dimension_heuristic(&basis).ok_or(Degree0Error::NoSplitCartan(reason)),
    }
}

fn root_decomposition(basis: &[CMatrix], cartan: &[Vec<GaussianRational>], n: usize) -> Result<Degree0Type, String> {
    let dim = basis.len();
    let r = cartan.len();
    if r == 0 {
        return Err("no diagonal elements".into());
    }
    // Group matrix units by weight (h_k[a] − h_k[b])_k.
    let mut groups: BTreeMap<Vec<(Q, Q)>, Vec<(usize, usize)>> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let w: Vec<(Q, Q)> = cartan
                .iter()
                .map(|h| {
                    let z = &h[a] - &h[b];
                    (z.re, z.im)
                })
                .collect();
            groups.entry(w).or_default().push((a, b));
        }
    }
    let zero_key: Vec<(Q, Q)> = vec![(Q::zero(), Q::zero()); r];
    let mut roots: Vec<(Vec<GaussianRational>, CMatrix)> = Vec::new();
    let mut total = 0;
    for (w, cells) in &groups {
        let projections: Vec<Vec<GaussianRational>> =
            basis.iter().map(|m| cells.iter().map(|&(a, b)| m[a][b].clone()).collect()).collect();
        let mut pe = EchelonBasis::<GaussianRational>::new(cells.len());
        for p in &projections {
            pe.insert(p);
        }
        let d = pe.rank();
        total += d;
        if *w == zero_key {
            if d != r {
                return Err(format!("zero weight space has dimension {d}, diagonal part {r}"));
            }
            continue;
        }
        if d == 0 {
            continue;
        }
        if d > 1 {
            return Err(format!("root space of dimension {d}"));
        }
        // The root vector: the span element whose support lies in this weight group.
        let outside: Vec<Vec<GaussianRational>> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|c| !cells.contains(c))
            .map(|(a, b)| basis.iter().map(|m| m[a][b].clone()).collect())
            .collect();
        let coeffs = nullspace(&outside, dim);
        let vec = coeffs
            .iter()
            .map(|c| combine(c, basis))
            .find(|m| m.iter().flatten().any(|x| !x.is_zero()))
            .ok_or("root vector not found")?;
        let root: Vec<GaussianRational> = w.iter().map(|(re, im)| GaussianRational::new(re.clone(), im.clone())).collect();
        roots.push((root, vec));
    }
    if total != dim {
        return Err(format!("weight spaces have total dimension {total}, expected {dim}"));
    }
    let value_on = |vec: &CMatrix, h: &[GaussianRational]| -> GaussianRational {
        for a in 0..n {
            for b in 0..n {
                if !vec[a][b].is_zero() {
                    return &h[a] - &h[b];
                }
            }
        }
        GaussianRational::zero()
    };
    let find = |root: &[GaussianRational]| roots.iter().position(|(r, _)| r.as_slice() == root);
    let mut positives: Vec<usize> = (0..roots.len()).filter(|&i| is_positive(&roots[i].0)).collect();
    positives.sort_by(|&a, &b| lex_cmp(&roots[a].0, &roots[b].0));
    let simple: Vec<usize> = positives
        .iter()
        .copied()
        .filter(|&i| {
            !positives.iter().any(|&j| {
                let diff: Vec<GaussianRational> = roots[i].0.iter().zip(&roots[j].0).map(|(x, y)| x - y).collect();
                j != i && is_positive(&diff) && find(&diff).is_some()
            })
        })
        .collect();
    // Normalized coroots h_α with α(h_α) = 2, as diagonal vectors.
    let mut coroots: Vec<Vec<GaussianRational>> = Vec::new();
    for &i in &simple {
        let neg: Vec<GaussianRational> = roots[i].0.iter().map(|x| -x).collect();
        let j = find(&neg).ok_or("negative root missing")?;
        let h = commutator(&roots[i].1, &roots[j].1);
        let diag: Vec<GaussianRational> = (0..n).map(|a| h[a][a].clone()).collect();
        let val = value_on(&roots[i].1, &diag);
        if val.is_zero() {
            return Err("degenerate coroot".into());
        }
        let k = &GaussianRational::from_int(2) / &val;
        coroots.push(diag.iter().map(|x| x * &k).collect());
    }
    let m = simple.len();
    let mut a = vec![vec![0i64; m]; m];
    for (x, hx) in coroots.iter().enumerate() {
        for (y, &sy) in simple.iter().enumerate() {
            let v = value_on(&roots[sy].1, hx);
            if !v.is_real() || !v.re.is_integer() {
                return Err(format!("non-integral Cartan entry {v}"));
            }
            a[x][y] = v.re.to_integer().try_into().map_err(|_| "Cartan entry overflow")?;
        }
    }
    let mut factors = classify_cartan(&a).map_err(|e| e.to_string())?;
    factors.sort();
    let ss_dim: usize = factors.iter().map(factor_dim).sum();
    if ss_dim + (r - m) != dim {
        return Err(format!("dimension {dim} does not match {factors:?} plus center {}", r - m));
    }
    Ok(Degree0Type { factors, center: r - m, dim, method: "diagonal".into() })
}

/// Identify a reductive algebra from dimension and rank alone when no split Cartan exists.
fn dimension_heuristic(basis: &[CMatrix]) -> Option<Degree0Type> {
    let dim = basis.len();
    // Center: elements commuting with every basis element.
    let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
    for b in basis {
        let images: Vec<Vec<GaussianRational>> = basis.iter().map(|x| flatten(&commutator(x, b))).collect();
        for k in 0..images[0].len() {
            rows.push(images.iter().map(|v| v[k].clone()).collect());
        }
    }
    let center = nullspace(&rows, dim).len();
    // Rank: centralizer dimension of a generic combination.
    let generic: Vec<GaussianRational> = (0..dim).map(|k| GaussianRational::from_int((k * k + 3 * k + 1) as i64)).collect();
    let x = combine(&generic, basis);
    let images: Vec<Vec<GaussianRational>> = basis.iter().map(|b| flatten(&commutator(&x, b))).collect();
    let rows: Vec<Vec<GaussianRational>> = (0..images[0].len()).map(|k| images.iter().map(|v| v[k].clone()).collect()).collect();
    let rank = nullspace(&rows, dim).len();
    let ss_dim = dim - center;
    let ss_rank = rank.checked_sub(center)?;
    let mut candidates = Vec::new();
    for family in ['A', 'B', 'C', 'D'] {
        let f = SimpleFactor { family, rank: ss_rank };
        let valid = match family {
            'A' => ss_rank >= 1,
            'B' => ss_rank >= 2,
            'C' => ss_rank >= 3,
            _ => ss_rank >= 4,
        };
        if valid && factor_dim(&f) == ss_dim {
            candidates.push(f);
        }
    }
    if candidates.len() == 1 {
        Some(Degree0Type { factors: candidates, center, dim, method: "dimension".into() })
    } else {
        None
    }
}

/// Split a Cartan matrix into connected components and name each one.
pub fn classify_cartan(a: &[Vec<i64>]) -> Result<Vec<SimpleFactor>, Degree0Error> {
    let m = a.len();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..m {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| a[i][j]).collect()).collect();
        out.push(classify_connected(&sub)?);
    }
    Ok(out)
}

fn classify_connected(a: &[Vec<i64>]) -> Result<SimpleFactor, Degree0Error> {
    let n = a.len();
    let bad = || Degree0Error::Unrecognized(format!("{a:?}"));
    let sf = |family, rank| Ok(SimpleFactor { family, rank });
    if n == 1 {
        return sf('A', 1);
    }
    let mut edges = Vec::new();
    let mut degree = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            if a[i][j] != 0 {
                edges.push((i, j, a[i][j] * a[j][i]));
                degree[i] += 1;
                degree[j] += 1;
            }
        }
    }
    if edges.len() != n - 1 {
        return Err(bad());
    }
    let multiple: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    match multiple.as_slice() {
        [] => {
            let branch: Vec<usize> = (0..n).filter(|&i| degree[i] >= 3).collect();
            match branch.as_slice() {
                [] => sf('A', n),
                [b] if degree[*b] == 3 => {
                    let mut arms: Vec<usize> = (0..n)
                        .filter(|&j| a[*b][j] != 0 && j != *b)
                        .map(|j| arm_length(a, *b, j))
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => sf('D', n),
                        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => sf('E', n),
                        _ => Err(bad()),
                    }
                }
                _ => Err(bad()),
            }
        }
        [(_, _, 3)] if n == 2 => sf('G', 2),
        [(_, _, 2)] => {
            if degree.iter().any(|&d| d > 2) {
                return Err(bad());
            }
            if n == 2 {
                return sf('B', 2);
            }
            // a_ij = −2 means α_i is the short root of the double bond.
            let short_side = |i: usize, j: usize| if a[i][j] == -2 { i } else { j };
            let &(i, j, _) = multiple[0];
            let short = short_side(i, j);
            let long = if short == i { j } else { i };
            let short_count = 1 + count_beyond(a, short, long);
            let long_count = n - short_count;
            match (short_count, long_count) {
                (1, _) => sf('B', n),
                (_, 1) => sf('C', n),
                (2, 2) => sf('F', 4),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

/// Number of nodes reached from `next` without passing through `from`.
fn arm_length(a: &[Vec<i64>], from: usize, next: usize) -> usize {
    1 + count_beyond(a, next, from)
}

fn count_beyond(a: &[Vec<i64>], node: usize, from: usize) -> usize {
    let n = a.len();
    let mut stack = vec![(node, from)];
    let mut count = 0;
    while let Some((v, p)) = stack.pop() {
        for w in 0..n {
            if w != v && w != p && a[v][w] != 0 {
                count += 1;
                stack.push((w, v));
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: i64) -> GaussianRational {
        GaussianRational::from_int(x)
    }

    fn unit(n: usize, i: usize, j: usize) -> CMatrix {
        let mut m = vec![vec![GaussianRational::zero(); n]; n];
        m[i][j] = g(1);
        m
    }

    fn sl(n: usize) -> Vec<CMatrix> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.push(unit(n, i, j));
                }
            }
        }
        for i in 0..n - 1 {
            let mut h = unit(n, i, i);
            h[i + 1][i + 1] = g(-1);
            out.push(h);
        }
        out
    }

    #[test]
    fn sl_n_is_type_a() {
        for n in 2..=4 {
            let t = identify_matrix_algebra(&sl(n)).unwrap();
            assert_eq!(t.factors, vec![SimpleFactor { family: 'A', rank: n - 1 }]);
            assert_eq!(t.center, 0);
        }
    }

    #[test]
    fn gl2_has_center() {
        let mut b = sl(2);
        b.push(unit(2, 0, 0));
        let t = identify_matrix_algebra(&b).unwrap();
        assert_eq!(t.to_string(), "A1 + center(1)");
    }

    #[test]
    fn rotation_is_abelian() {
        let mut m = vec![vec![g(0), g(1)], vec![g(-1), g(0)]];
        let t = identify_matrix_algebra(&[m.clone()]).unwrap();
        assert_eq!((t.factors.len(), t.center), (0, 1));
        m[0][0] = g(1);
        assert!(identify_matrix_algebra(&[m, unit(2, 0, 1)]).is_err());
    }

    #[test]
    fn cartan_classification() {
        let b3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]];
        assert_eq!(classify_cartan(&b3).unwrap(), vec![SimpleFactor { family: 'B', rank: 3 }]);
        let c3 = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        assert_eq!(classify_cartan(&c3).unwrap(), vec![SimpleFactor { family: 'C', rank: 3 }]);
        let d4 = vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]];
        assert_eq!(classify_cartan(&d4).unwrap(), vec![SimpleFactor { family: 'D', rank: 4 }]);
        let a1a1 = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(classify_cartan(&a1a1).unwrap().len(), 2);
    }
}
