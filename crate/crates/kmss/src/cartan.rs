//! Generalized Cartan matrices, classical root systems and affine Dynkin diagrams.
//!
//! Affine diagrams are derived from the finite root data: the affine node
//! carries `α₀ = −θ` with `θ` the highest root, so bonds, arrows and marks all
//! follow from inner products. Node 0 is always the affine node.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{inertia, nullspace};
use crate::scalars::{qi, Q};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("rank {rank} is outside the supported range for series {series} (minimum {min})")]
    RankOutOfRange { series: Series, rank: usize, min: usize },
    #[error("unknown series tag {0:?}")]
    UnknownSeries(String),
}

/// Classical series of the underlying finite-dimensional algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    pub const ALL: [Series; 4] = [Series::A, Series::B, Series::C, Series::D];

    /// Smallest supported classical rank.
    pub fn min_rank(self) -> usize {
        match self {
            Series::A => 1,
            Series::B | Series::C => 2,
            Series::D => 4,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<(), CartanError> {
        if rank < self.min_rank() {
            Err(CartanError::RankOutOfRange { series: self, rank, min: self.min_rank() })
        } else {
            Ok(())
        }
    }

    /// Number of coordinates in the standard realization of the roots.
    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            Series::A => rank + 1,
            _ => rank,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = CartanError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            other => Err(CartanError::UnknownSeries(other.to_string())),
        }
    }
}

/// Outcome of [`validate_gcm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcmClass {
    Finite,
    /// Indecomposable with a one-dimensional kernel spanned by a positive vector.
    Affine { null_vector: Vec<i64> },
    Other,
    Invalid { reason: String },
}

fn is_indecomposable(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && a[i][j] != 0 {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Positive diagonal `d` with `dᵢ aᵢⱼ = dⱼ aⱼᵢ`, if one exists (connected matrices only).
fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(qi(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].clone().expect("visited");
        for j in 0..n {
            if i == j || a[i][j] == 0 {
                continue;
            }
            let dj = &di * qi(a[i][j]) / qi(a[j][i]);
            match &d[j] {
                None => {
                    d[j] = Some(dj);
                    queue.push_back(j);
                }
                Some(existing) if *existing != dj => return None,
                Some(_) => {}
            }
        }
    }
    d.into_iter().collect()
}

fn gcm_axiom_violation(a: &[Vec<i64>]) -> Option<String> {
    let n = a.len();
    for i in 0..n {
        if a[i][i] != 2 {
            return Some(format!("diagonal entry a[{i}][{i}] = {} is not 2", a[i][i]));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                return Some(format!("off-diagonal entry a[{i}][{j}] = {} is positive", a[i][j]));
            }
            if (a[i][j] == 0) != (a[j][i] == 0) {
                return Some(format!("a[{i}][{j}] and a[{j}][{i}] do not vanish together"));
            }
        }
    }
    None
}

fn classify_indecomposable(a: &[Vec<i64>]) -> GcmClass {
    let n = a.len();
    let Some(d) = symmetrizer(a) else {
        return GcmClass::Other;
    };
    let sym: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| &d[i] * qi(a[i][j])).collect()).collect();
    let (neg, pos, zero) = inertia(&sym);
    if pos == n {
        return GcmClass::Finite;
    }
    if neg == 0 && zero == 1 {
        let rows: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|x| qi(*x)).collect()).collect();
        let ker = nullspace(&rows, n);
        if ker.len() == 1 {
            if let Some(v) = positive_integer_vector(&ker[0]) {
                return GcmClass::Affine { null_vector: v };
            }
        }
    }
    GcmClass::Other
}

/// Scale a rational vector to the primitive integer vector with positive entries, if possible.
fn positive_integer_vector(v: &[Q]) -> Option<Vec<i64>> {
    use num_integer::Integer;
    let sign = if v.iter().all(|x| x.is_positive()) {
        1
    } else if v.iter().all(|x| x.is_negative()) {
        -1
    } else {
        return None;
    };
    let mut lcm = num_bigint::BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<num_bigint::BigInt> =
        v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer() * sign).collect();
    let mut g = num_bigint::BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.iter().map(|x| i64::try_from(x / &g).ok()).collect()
}

/// Classify an integer matrix as a generalized Cartan matrix.
pub fn validate_gcm(a: &[Vec<i64>]) -> Result<GcmClass, CartanError> {
    let n = a.len();
    for (row, r) in a.iter().enumerate() {
        if r.len() != n {
            return Err(CartanError::NotSquare { row, len: r.len(), expected: n });
        }
    }
    if let Some(reason) = gcm_axiom_violation(a) {
        return Ok(GcmClass::Invalid { reason });
    }
    if n == 0 {
        return Ok(GcmClass::Other);
    }
    if is_indecomposable(a) {
        return Ok(classify_indecomposable(a));
    }
    // A decomposable matrix is finite exactly when every block is.
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let block: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| a[i][j]).collect()).collect();
        if classify_indecomposable(&block) != GcmClass::Finite {
            return Ok(GcmClass::Other);
        }
    }
    Ok(GcmClass::Finite)
}

/// Integer coordinate vector of a root in the standard `eᵢ` basis.
pub type Root = Vec<i64>;

/// Root data of a classical finite root system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemData {
    pub series: Series,
    pub rank: usize,
    pub all_roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    pub simple_roots: Vec<Root>,
    pub largest_root: Root,
}

fn unit(dim: usize, i: usize, k: i64) -> Root {
    let mut v = vec![0; dim];
    v[i] = k;
    v
}

fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The classical root system of the given series and rank.
pub fn root_system(series: Series, rank: usize) -> Result<RootSystemData, CartanError> {
    series.check_rank(rank)?;
    let n = rank;
    let dim = series.ambient_dim(n);
    let e = |i: usize, k: i64| unit(dim, i, k);
    let mut positive = Vec::new();
    match series {
        Series::A => {
            for i in 0..=n {
                for j in i + 1..=n {
                    positive.push(add(&e(i, 1), &e(j, -1)));
                }
            }
        }
        _ => {
            for i in 0..n {
                for j in i + 1..n {
                    positive.push(add(&e(i, 1), &e(j, -1)));
                    positive.push(add(&e(i, 1), &e(j, 1)));
                }
                match series {
                    Series::B => positive.push(e(i, 1)),
                    Series::C => positive.push(e(i, 2)),
                    _ => {}
                }
            }
        }
    }
    let mut simple: Vec<Root> = (0..n.min(dim - 1)).map(|i| add(&e(i, 1), &e(i + 1, -1))).collect();
    match series {
        Series::A => {}
        Series::B => {
            simple.truncate(n - 1);
            simple.push(e(n - 1, 1));
        }
        Series::C => {
            simple.truncate(n - 1);
            simple.push(e(n - 1, 2));
        }
        Series::D => {
            simple.truncate(n - 1);
            simple.push(add(&e(n - 2, 1), &e(n - 1, 1)));
        }
    }
    let largest = match series {
        Series::A => add(&e(0, 1), &e(n, -1)),
        Series::B | Series::D => add(&e(0, 1), &e(1, 1)),
        Series::C => e(0, 2),
    };
    let mut all = positive.clone();
    all.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect::<Root>()));
    Ok(RootSystemData { series, rank, all_roots: all, positive_roots: positive, simple_roots: simple, largest_root: largest })
}

/// Direction of the arrow on a multiple bond.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Arrow {
    None,
    /// From the first node (long root) to the second (short root).
    Forward,
    Backward,
    /// The two-headed bond of the rank-one affine diagram.
    Both,
}

impl Arrow {
    pub fn code(self) -> i64 {
        match self {
            Arrow::None => 0,
            Arrow::Forward => 1,
            Arrow::Backward => -1,
            Arrow::Both => 2,
        }
    }

    pub fn from_code(c: i64) -> Option<Arrow> {
        match c {
            0 => Some(Arrow::None),
            1 => Some(Arrow::Forward),
            -1 => Some(Arrow::Backward),
            2 => Some(Arrow::Both),
            _ => None,
        }
    }
}

/// A bond of an affine Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    /// Product `aᵢⱼ·aⱼᵢ`: 1, 2, 3, or 4 for the rank-one affine bond.
    pub mult: u8,
    pub arrow: Arrow,
}

/// An untwisted affine Dynkin diagram `Xₙ⁽¹⁾`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDiagram {
    pub series: Series,
    pub rank: usize,
    pub edges: Vec<Edge>,
    pub marks: Vec<i64>,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Root>,
}

impl AffineDiagram {
    pub fn node_count(&self) -> usize {
        self.rank + 1
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `aᵢⱼ = ⟨αᵢ^∨, αⱼ⟩`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Projected coordinates of `αᵢ`; node 0 is `−θ`.
    pub fn simple_root(&self, i: usize) -> &Root {
        &self.simple_roots[i]
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.node_count()).filter(|&j| j != i && self.cartan[i][j] != 0).collect()
    }

    /// Squared length of `αᵢ` in the standard coordinates.
    pub fn root_length(&self, i: usize) -> i64 {
        dot(&self.simple_roots[i], &self.simple_roots[i])
    }

    /// Whether node `i` is a long root (strictly longer than some other node).
    pub fn is_long(&self, i: usize) -> bool {
        let li = self.root_length(i);
        (0..self.node_count()).any(|j| self.root_length(j) < li)
    }

    /// Whether `map` permutes the nodes preserving the Cartan matrix.
    pub fn is_symmetry(&self, map: &[usize]) -> bool {
        let n = self.node_count();
        if map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in map {
            if m >= n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.cartan[map[i]][map[j]] == self.cartan[i][j]))
    }
}

fn edges_from_cartan(a: &[Vec<i64>]) -> Vec<Edge> {
    let n = a.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a[i][j] == 0 {
                continue;
            }
            let (x, y) = (a[i][j], a[j][i]);
            let mult = (x * y) as u8;
            let arrow = match (x, y) {
                (-1, -1) => Arrow::None,
                (-2, -2) => Arrow::Both,
                (-1, _) => Arrow::Forward,
                _ => Arrow::Backward,
            };
            edges.push(Edge { i, j, mult, arrow });
        }
    }
    edges
}

/// Cartan matrix implied by a list of edges on `n` nodes.
pub fn cartan_from_edges(n: usize, edges: &[Edge]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for e in edges {
        let m = e.mult as i64;
        let (x, y) = match e.arrow {
            Arrow::None => (-1, -1),
            Arrow::Both => (-2, -2),
            Arrow::Forward => (-1, -m),
            Arrow::Backward => (-m, -1),
        };
        if e.i < n && e.j < n {
            a[e.i][e.j] = x;
            a[e.j][e.i] = y;
        }
    }
    a
}

/// The standard untwisted affine diagram of the given series and classical rank.
pub fn build_affine_diagram(series: Series, rank: usize) -> Result<AffineDiagram, CartanError> {
    let rs = root_system(series, rank)?;
    let theta = &rs.largest_root;
    let mut roots: Vec<Root> = vec![theta.iter().map(|x| -x).collect()];
    roots.extend(rs.simple_roots.iter().cloned());
    let n = roots.len();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * dot(&roots[i], &roots[j]) / dot(&roots[i], &roots[i])).collect())
        .collect();
    let marks = match validate_gcm(&cartan)? {
        GcmClass::Affine { null_vector } => null_vector,
        other => unreachable!("affine construction produced {other:?}"),
    };
    Ok(AffineDiagram { series, rank, edges: edges_from_cartan(&cartan), marks, cartan, simple_roots: roots })
}

/// A permutation of the diagram nodes preserving bonds, arrows and marks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    pub name: String,
    pub map: Vec<usize>,
    pub order: usize,
}

impl DiagramAutomorphism {
    pub fn from_map(name: impl Into<String>, map: Vec<usize>) -> Self {
        let order = permutation_order(&map);
        Self { name: name.into(), map, order }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_map("id", (0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.map[i] == i
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &DiagramAutomorphism) -> Vec<usize> {
        other.map.iter().map(|&i| self.map[i]).collect()
    }

    pub fn inverse_map(&self) -> Vec<usize> {
        let mut inv = vec![0; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            inv[m] = i;
        }
        inv
    }
}

pub fn permutation_order(map: &[usize]) -> usize {
    let mut cur: Vec<usize> = map.to_vec();
    let mut k = 1;
    while cur.iter().enumerate().any(|(i, &m)| i != m) {
        cur = cur.iter().map(|&i| map[i]).collect();
        k += 1;
    }
    k
}

/// Named generators of the diagram symmetry group.
pub fn diagram_automorphisms(diag: &AffineDiagram) -> Vec<DiagramAutomorphism> {
    let n = diag.node_count();
    let r = diag.rank;
    let mut gens = Vec::new();
    match diag.series {
        Series::A => {
            gens.push(DiagramAutomorphism::from_map("r", (0..n).map(|i| (i + 1) % n).collect()));
            gens.push(DiagramAutomorphism::from_map("s", (0..n).map(|i| (n - i) % n).collect()));
        }
        Series::B => {
            let mut m: Vec<usize> = (0..n).collect();
            m.swap(0, 1);
            gens.push(DiagramAutomorphism::from_map("γ", m));
        }
        Series::C => {
            gens.push(DiagramAutomorphism::from_map("γ", (0..n).map(|i| r - i).collect()));
        }
        Series::D => {
            let mut v: Vec<usize> = (0..n).collect();
            v.swap(0, 1);
            v.swap(r, r - 1);
            gens.push(DiagramAutomorphism::from_map("σ_v", v));
            let s: Vec<usize> = if r.is_multiple_of(2) {
                (0..n).map(|i| r - i).collect()
            } else {
                let mut s: Vec<usize> = (0..n).map(|i| r - i).collect();
                s[0] = r;
                s[r] = 1;
                s[1] = r - 1;
                s[r - 1] = 0;
                s
            };
            gens.push(DiagramAutomorphism::from_map("σ_s", s));
            let mut g: Vec<usize> = (0..n).collect();
            g.swap(r, r - 1);
            gens.push(DiagramAutomorphism::from_map("γ", g));
        }
    }
    gens.retain(|g| !g.is_identity() && diag.is_symmetry(&g.map));
    gens
}

fn word_name(word: &[String]) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    let mut parts: Vec<(String, usize)> = Vec::new();
    for w in word {
        match parts.last_mut() {
            Some((last, k)) if last == w => *k += 1,
            _ => parts.push((w.clone(), 1)),
        }
    }
    parts
        .into_iter()
        .map(|(g, k)| if k == 1 { g } else { format!("{g}^{k}") })
        .collect::<Vec<_>>()
        .join("·")
}

/// Every symmetry of the diagram, named by a shortest word in the named generators.
///
/// Symmetries outside the generated subgroup (triality on the four-legged
/// diagram) are found by exhaustive search and named by their permutation.
pub fn automorphism_group(diag: &AffineDiagram) -> Vec<DiagramAutomorphism> {
    let n = diag.node_count();
    let gens = diagram_automorphisms(diag);
    let mut names: BTreeMap<Vec<usize>, String> = BTreeMap::new();
    let id: Vec<usize> = (0..n).collect();
    names.insert(id.clone(), "id".to_string());
    let mut queue: VecDeque<(Vec<usize>, Vec<String>)> = VecDeque::from([(id, Vec::new())]);
    while let Some((map, word)) = queue.pop_front() {
        for g in &gens {
            let next: Vec<usize> = map.iter().map(|&i| g.map[i]).collect();
            if !names.contains_key(&next) {
                let mut w = vec![g.name.clone()];
                w.extend(word.iter().cloned());
                names.insert(next.clone(), word_name(&w));
                queue.push_back((next, w));
            }
        }
    }
    let mut out: Vec<DiagramAutomorphism> = all_symmetries(diag)
        .into_iter()
        .map(|map| {
            let name = names.get(&map).cloned().unwrap_or_else(|| format!("perm{map:?}"));
            DiagramAutomorphism::from_map(name, map)
        })
        .collect();
    out.sort_by(|a, b| a.map.cmp(&b.map));
    out
}

/// Symmetries of order one or two, the admissible Vogan automorphisms.
pub fn admissible_automorphisms(diag: &AffineDiagram) -> Vec<DiagramAutomorphism> {
    automorphism_group(diag).into_iter().filter(|a| a.order <= 2).collect()
}

fn all_symmetries(diag: &AffineDiagram) -> Vec<Vec<usize>> {
    fn extend(diag: &AffineDiagram, partial: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = diag.node_count();
        let k = partial.len();
        if k == n {
            out.push(partial.clone());
            return;
        }
        for cand in 0..n {
            if used[cand] || diag.marks[cand] != diag.marks[k] {
                continue;
            }
            let ok = (0..k).all(|j| {
                diag.cartan[cand][partial[j]] == diag.cartan[k][j]
                    && diag.cartan[partial[j]][cand] == diag.cartan[j][k]
            });
            if ok {
                used[cand] = true;
                partial.push(cand);
                extend(diag, partial, used, out);
                partial.pop();
                used[cand] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(diag, &mut Vec::new(), &mut vec![false; diag.node_count()], &mut out);
    out
}
