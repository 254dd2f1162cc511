//! Vogan diagrams on affine Dynkin diagrams and their equivalence classes.
//!
//! A diagram carries a painting of automorphism-fixed nodes and a diagram
//! symmetry of order at most two. Two operations generate equivalence:
//! relabeling by any diagram symmetry and reflection in a painted node.
//! Reflection at `α` flips the color of each fixed neighbor `β` exactly when
//! `⟨β, α^∨⟩` is odd, so a short root never recolors its long neighbor and the
//! doubled bond of the rank-one diagram recolors nothing.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::cartan::{automorphism_group, root_system, AffineDiagram, DiagramAutomorphism, Root};
use crate::scalars::{q, qi, Q};

/// Node budget for class enumeration when the caller does not pass one.
pub const DEFAULT_NODE_LIMIT: usize = 16;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum VoganError {
    #[error("node {node} is outside the diagram (it has {count} nodes)")]
    NodeOutOfRange { node: usize, count: usize },
    #[error("automorphism map {map:?} is not a symmetry of the diagram")]
    NotSymmetry { map: Vec<usize> },
    #[error("automorphism {name} has order {order}; Vogan diagrams need order 1 or 2")]
    OrderTooLarge { name: String, order: usize },
    #[error("painted node {node} lies on a two-element orbit of the automorphism")]
    PaintedOnOrbit { node: usize },
    #[error("cannot reflect at node {node}: it is not painted")]
    Unpainted { node: usize },
    #[error("diagram has {nodes} nodes, above the enumeration limit {limit}")]
    LimitExceeded { nodes: usize, limit: usize },
    #[error("class of size {class_size} has no member with at most two painted nodes (minimum {min_painted})")]
    TheoremViolation { min_painted: usize, class_size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoganDiagram {
    pub diagram: AffineDiagram,
    pub painted: BTreeSet<usize>,
    pub automorphism: DiagramAutomorphism,
}

impl VoganDiagram {
    pub fn painted_vec(&self) -> Vec<usize> {
        self.painted.iter().copied().collect()
    }

    /// Ordering key of the canonical representative: painted count, painted
    /// set, then the automorphism's permutation.
    pub fn sort_key(&self) -> (usize, Vec<usize>, Vec<usize>) {
        (self.painted.len(), self.painted_vec(), self.automorphism.map.clone())
    }

    /// Nodes moved by the automorphism, as sorted two-element orbits.
    pub fn orbits(&self) -> Vec<(usize, usize)> {
        let m = &self.automorphism.map;
        (0..m.len()).filter(|&i| m[i] > i).map(|i| (i, m[i])).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.automorphism.is_identity()
    }

    fn state(&self) -> (Vec<usize>, Vec<usize>) {
        (self.painted_vec(), self.automorphism.map.clone())
    }
}

fn check_node(diag: &AffineDiagram, node: usize) -> Result<(), VoganError> {
    if node >= diag.node_count() {
        Err(VoganError::NodeOutOfRange { node, count: diag.node_count() })
    } else {
        Ok(())
    }
}

/// Build a validated Vogan diagram.
pub fn make_vogan(
    diagram: &AffineDiagram,
    painted: impl IntoIterator<Item = usize>,
    automorphism: &DiagramAutomorphism,
) -> Result<VoganDiagram, VoganError> {
    if !diagram.is_symmetry(&automorphism.map) {
        return Err(VoganError::NotSymmetry { map: automorphism.map.clone() });
    }
    if automorphism.order > 2 {
        return Err(VoganError::OrderTooLarge { name: automorphism.name.clone(), order: automorphism.order });
    }
    let painted: BTreeSet<usize> = painted.into_iter().collect();
    for &p in &painted {
        check_node(diagram, p)?;
        if !automorphism.fixes(p) {
            return Err(VoganError::PaintedOnOrbit { node: p });
        }
    }
    Ok(VoganDiagram { diagram: diagram.clone(), painted, automorphism: automorphism.clone() })
}

/// Trivial-automorphism Vogan diagram.
pub fn make_trivial(diagram: &AffineDiagram, painted: impl IntoIterator<Item = usize>) -> Result<VoganDiagram, VoganError> {
    make_vogan(diagram, painted, &DiagramAutomorphism::identity(diagram.node_count()))
}

/// Reflect in the painted node `node`.
pub fn reflect_at(vd: &VoganDiagram, node: usize) -> Result<VoganDiagram, VoganError> {
    check_node(&vd.diagram, node)?;
    if !vd.painted.contains(&node) {
        return Err(VoganError::Unpainted { node });
    }
    let mut painted = vd.painted.clone();
    for beta in vd.diagram.neighbors(node) {
        if !vd.automorphism.fixes(beta) {
            continue;
        }
        if vd.diagram.cartan_entry(node, beta) % 2 != 0 && !painted.remove(&beta) {
            painted.insert(beta);
        }
    }
    Ok(VoganDiagram { painted, ..vd.clone() })
}

fn named(group: &[DiagramAutomorphism], map: Vec<usize>) -> DiagramAutomorphism {
    group
        .iter()
        .find(|g| g.map == map)
        .cloned()
        .unwrap_or_else(|| DiagramAutomorphism::from_map(format!("perm{map:?}"), map))
}

fn conjugate(vd: &VoganDiagram, aut: &DiagramAutomorphism, group: &[DiagramAutomorphism]) -> VoganDiagram {
    let painted = vd.painted.iter().map(|&i| aut.apply(i)).collect();
    // τ θ τ⁻¹ sends τ(i) to τ(θ(i)).
    let mut map = vec![0; aut.map.len()];
    for i in 0..map.len() {
        map[aut.apply(i)] = aut.apply(vd.automorphism.apply(i));
    }
    VoganDiagram { diagram: vd.diagram.clone(), painted, automorphism: named(group, map) }
}

/// The symmetry with permutation `map`, named as in [`automorphism_group`].
pub fn automorphism_from_map(diagram: &AffineDiagram, map: Vec<usize>) -> Result<DiagramAutomorphism, VoganError> {
    if !diagram.is_symmetry(&map) {
        return Err(VoganError::NotSymmetry { map });
    }
    Ok(named(&automorphism_group(diagram), map))
}

/// Relabel by a diagram symmetry: paint `τ(P)` and conjugate the automorphism.
pub fn apply_diagram_automorphism(vd: &VoganDiagram, aut: &DiagramAutomorphism) -> Result<VoganDiagram, VoganError> {
    if !vd.diagram.is_symmetry(&aut.map) {
        return Err(VoganError::NotSymmetry { map: aut.map.clone() });
    }
    Ok(conjugate(vd, aut, &automorphism_group(&vd.diagram)))
}

/// All diagrams equivalent to `vd`, sorted by [`VoganDiagram::sort_key`].
pub fn equivalence_class(vd: &VoganDiagram, node_limit: usize) -> Result<Vec<VoganDiagram>, VoganError> {
    let nodes = vd.diagram.node_count();
    if nodes > node_limit {
        return Err(VoganError::LimitExceeded { nodes, limit: node_limit });
    }
    let group = automorphism_group(&vd.diagram);
    let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), VoganDiagram> = BTreeMap::new();
    let mut queue = VecDeque::from([vd.clone()]);
    seen.insert(vd.state(), vd.clone());
    while let Some(cur) = queue.pop_front() {
        let mut next: Vec<VoganDiagram> = group.iter().map(|g| conjugate(&cur, g, &group)).collect();
        for &p in &cur.painted {
            next.push(reflect_at(&cur, p)?);
        }
        for d in next {
            if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(d.state()) {
                slot.insert(d.clone());
                queue.push_back(d);
            }
        }
    }
    let mut members: Vec<VoganDiagram> = seen.into_values().collect();
    members.sort_by_key(|d| d.sort_key());
    Ok(members)
}

/// Canonical representative of a class and the class size.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub representative: VoganDiagram,
    pub class_size: usize,
}

/// Canonical member of the class of `vd` together with the class size.
pub fn reduce_with_class(vd: &VoganDiagram, node_limit: usize) -> Result<Reduction, VoganError> {
    let class = equivalence_class(vd, node_limit)?;
    let class_size = class.len();
    let representative = class.into_iter().next().expect("class contains vd");
    if representative.painted.len() > 2 {
        return Err(VoganError::TheoremViolation { min_painted: representative.painted.len(), class_size });
    }
    Ok(Reduction { representative, class_size })
}

/// The least member of the class: fewest painted nodes, then lexicographic
/// painted set, then lexicographic automorphism map.
pub fn reduce_borel_siebenthal(vd: &VoganDiagram) -> Result<VoganDiagram, VoganError> {
    reduce_with_class(vd, DEFAULT_NODE_LIMIT).map(|r| r.representative)
}

/// Every Vogan diagram on `diagram`: all admissible automorphisms and all
/// paintings of their fixed nodes.
pub fn all_vogan_diagrams(diagram: &AffineDiagram) -> Vec<VoganDiagram> {
    let mut out = Vec::new();
    for aut in automorphism_group(diagram).into_iter().filter(|a| a.order <= 2) {
        let fixed: Vec<usize> = (0..diagram.node_count()).filter(|&i| aut.fixes(i)).collect();
        for mask in 0u64..(1u64 << fixed.len()) {
            let painted = fixed.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i);
            out.push(make_vogan(diagram, painted, &aut).expect("painting of fixed nodes"));
        }
    }
    out
}

/// How the supplementary simple root of the fixed algebra was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Supplement {
    None,
    /// Orbit average of a minimal root moved by the automorphism that
    /// contains the painted node; coefficient vector over all nodes.
    AveragedComplexRoot { node: usize, coefficients: Vec<i64> },
    /// Minimal finite root with coefficient two on the painted node.
    DoubledRoot { node: usize, coefficients: Vec<i64> },
    /// The candidate coincided up to sign with a root already listed.
    Redundant { node: usize },
}

/// Simple roots of the fixed algebra in the standard `eᵢ` coordinates.
///
/// Coordinate `k` of each tuple is the coefficient of `e_{k+1}`.
#[derive(Clone, Debug, Serialize)]
pub struct FixedAlgebraRoots {
    #[serde(with = "crate::scalars::q_rows")]
    pub simple_roots: Vec<Vec<Q>>,
    pub supplements: Vec<Supplement>,
    /// Rendered fixed-algebra label of the matching catalog entry.
    pub label: Option<String>,
    /// Root description of the matching entry, when transcribed.
    pub catalog_roots: Option<Vec<String>>,
}

fn to_q(r: &[i64]) -> Vec<Q> {
    r.iter().map(|&x| qi(x)).collect()
}

fn projection(diag: &AffineDiagram, k: &[i64]) -> Root {
    let dim = diag.simple_root(0).len();
    let mut v = vec![0; dim];
    for (i, &c) in k.iter().enumerate() {
        for (x, y) in v.iter_mut().zip(diag.simple_root(i)) {
            *x += c * y;
        }
    }
    v
}

/// Nonnegative integer vectors of length `len` summing to `total`.
fn compositions(len: usize, total: i64, out: &mut Vec<Vec<i64>>) {
    fn go(len: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 1 == len {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in 0..=left {
            cur.push(c);
            go(len, left - c, cur, out);
            cur.pop();
        }
    }
    if len > 0 {
        go(len, total, &mut Vec::new(), out);
    }
}

fn minimal_complex_root(vd: &VoganDiagram, node: usize, roots: &BTreeSet<Root>) -> Option<Vec<i64>> {
    let diag = &vd.diagram;
    let n = diag.node_count();
    let bound: i64 = 2 * diag.marks.iter().sum::<i64>() + 2;
    for h in 1..=bound {
        let mut cands = Vec::new();
        compositions(n, h, &mut cands);
        let found = cands.into_iter().find(|k| {
            let moved: Vec<i64> = (0..n).map(|i| k[vd.automorphism.map[i]]).collect();
            k[node] >= 1 && moved != *k && roots.contains(&projection(diag, k))
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

fn doubled_root(diag: &AffineDiagram, node: usize) -> Option<Vec<i64>> {
    let rs = root_system(diag.series, diag.rank).ok()?;
    // Express positive roots in simple-root coordinates by solving the
    // unitriangular system node by node.
    let simple = &rs.simple_roots;
    let mut best: Option<(i64, Vec<i64>)> = None;
    for r in &rs.positive_roots {
        let coeffs = crate::linalg::solve_combination(
            &simple.iter().map(|s| to_q(s)).collect::<Vec<_>>(),
            &to_q(r),
        )?;
        let ints: Vec<i64> = coeffs.iter().map(|c| c.to_integer().try_into().unwrap_or(0)).collect();
        if ints[node - 1] != 2 {
            continue;
        }
        let h: i64 = ints.iter().sum();
        let mut full = vec![0];
        full.extend(ints);
        if best.as_ref().is_none_or(|(bh, bk)| h < *bh || (h == *bh && full < *bk)) {
            best = Some((h, full));
        }
    }
    best.map(|(_, k)| k)
}

fn contains_up_to_sign(list: &[Vec<Q>], v: &[Q]) -> bool {
    let neg: Vec<Q> = v.iter().map(|x| -x.clone()).collect();
    list.iter().any(|r| r == v || *r == neg)
}

/// Simple roots of the fixed algebra of `vd`, with the catalog label attached.
///
/// Nontrivial automorphism: compact fixed simple roots, the average of each
/// two-element orbit, and for each painted node the orbit average of a
/// minimal moved root containing it. Trivial automorphism: compact simple
/// roots, plus, when a single painted node has mark at least two, the minimal
/// finite root containing that node twice.
pub fn fixed_algebra_roots(vd: &VoganDiagram) -> FixedAlgebraRoots {
    let diag = &vd.diagram;
    let n = diag.node_count();
    let half = q(1, 2);
    let mut roots: Vec<Vec<Q>> = (0..n)
        .filter(|&i| vd.automorphism.fixes(i) && !vd.painted.contains(&i))
        .map(|i| to_q(diag.simple_root(i)))
        .collect();
    for (i, j) in vd.orbits() {
        let avg = diag.simple_root(i).iter().zip(diag.simple_root(j)).map(|(a, b)| qi(a + b) * &half).collect();
        roots.push(avg);
    }
    let mut supplements = Vec::new();
    if !vd.is_trivial() {
        let finite: BTreeSet<Root> = root_system(diag.series, diag.rank)
            .map(|rs| rs.all_roots.into_iter().collect())
            .unwrap_or_default();
        for &p in &vd.painted {
            let Some(k) = minimal_complex_root(vd, p, &finite) else { continue };
            let moved: Vec<i64> = (0..n).map(|i| k[vd.automorphism.map[i]]).collect();
            let (a, b) = (projection(diag, &k), projection(diag, &moved));
            let avg: Vec<Q> = a.iter().zip(&b).map(|(x, y)| qi(x + y) * &half).collect();
            if contains_up_to_sign(&roots, &avg) {
                supplements.push(Supplement::Redundant { node: p });
            } else {
                roots.push(avg);
                supplements.push(Supplement::AveragedComplexRoot { node: p, coefficients: k });
            }
        }
    } else if vd.painted.len() == 1 {
        let p = *vd.painted.iter().next().expect("one painted node");
        if p != 0 && diag.marks[p] >= 2 {
            if let Some(k) = doubled_root(diag, p) {
                let r = to_q(&projection(diag, &k));
                if contains_up_to_sign(&roots, &r) {
                    supplements.push(Supplement::Redundant { node: p });
                } else {
                    roots.push(r);
                    supplements.push(Supplement::DoubledRoot { node: p, coefficients: k });
                }
            }
        }
    }
    if supplements.is_empty() {
        supplements.push(Supplement::None);
    }
    roots.retain(|r| r.iter().any(|x| !x.is_zero()));
    let (label, catalog_roots) = match crate::catalog::classify(vd) {
        Ok(c) => match c.primary() {
            Some(m) => (Some(m.fixed_algebra.clone()), m.root_description.clone()),
            None => (None, None),
        },
        Err(_) => (None, None),
    };
    FixedAlgebraRoots { simple_roots: roots, supplements, label, catalog_roots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_affine_diagram, Series};

    fn diag(s: Series, r: usize) -> AffineDiagram {
        build_affine_diagram(s, r).unwrap()
    }

    fn aut(d: &AffineDiagram, name: &str) -> DiagramAutomorphism {
        automorphism_group(d).into_iter().find(|a| a.name == name).unwrap()
    }

    fn painted(v: &VoganDiagram) -> Vec<usize> {
        v.painted_vec()
    }

    #[test]
    fn construction_errors() {
        let a3 = diag(Series::A, 3);
        assert!(make_trivial(&a3, [0]).is_ok());
        let s = aut(&a3, "s");
        assert_eq!(make_vogan(&a3, [1], &s), Err(VoganError::PaintedOnOrbit { node: 1 }));
        let a2 = diag(Series::A, 2);
        let r = aut(&a2, "r");
        assert!(matches!(make_vogan(&a2, [], &r), Err(VoganError::OrderTooLarge { order: 3, .. })));
        let bogus = DiagramAutomorphism::from_map("x", vec![1, 0, 2, 3]);
        assert!(matches!(make_vogan(&a3, [], &bogus), Err(VoganError::NotSymmetry { .. })));
        assert!(matches!(make_trivial(&a3, [7]), Err(VoganError::NodeOutOfRange { .. })));
    }

    #[test]
    fn reflection_rules() {
        let a3 = diag(Series::A, 3);
        let v = make_trivial(&a3, [1]).unwrap();
        assert_eq!(painted(&reflect_at(&v, 1).unwrap()), vec![0, 1, 2]);
        assert_eq!(reflect_at(&v, 2), Err(VoganError::Unpainted { node: 2 }));

        // C₃: node 3 is long, node 2 short. Short root leaves the long neighbor alone.
        let c3 = diag(Series::C, 3);
        assert!(c3.root_length(3) > c3.root_length(2));
        let v = make_trivial(&c3, [2]).unwrap();
        assert_eq!(painted(&reflect_at(&v, 2).unwrap()), vec![1, 2]);
        let v = make_trivial(&c3, [3]).unwrap();
        assert_eq!(painted(&reflect_at(&v, 3).unwrap()), vec![2, 3]);

        // The doubled rank-one bond recolors nothing.
        let a1 = diag(Series::A, 1);
        let v = make_trivial(&a1, [1]).unwrap();
        assert_eq!(painted(&reflect_at(&v, 1).unwrap()), vec![1]);
    }

    #[test]
    fn reflection_is_an_involution_on_simply_laced_diagrams() {
        for (s, r) in [(Series::A, 2), (Series::A, 3), (Series::A, 4), (Series::D, 4)] {
            let d = diag(s, r);
            for v in all_vogan_diagrams(&d) {
                for &p in &v.painted {
                    let back = reflect_at(&reflect_at(&v, p).unwrap(), p).unwrap();
                    assert_eq!(back, v);
                }
            }
        }
    }

    #[test]
    fn relabeling() {
        let a2 = diag(Series::A, 2);
        let v = make_trivial(&a2, [1]).unwrap();
        let r = aut(&a2, "r");
        assert_eq!(painted(&apply_diagram_automorphism(&v, &r).unwrap()), vec![2]);
        let id = DiagramAutomorphism::identity(3);
        assert_eq!(apply_diagram_automorphism(&v, &id).unwrap(), v);

        let d4 = diag(Series::D, 4);
        let v = make_trivial(&d4, [0]).unwrap();
        let sv = aut(&d4, "σ_v");
        assert_eq!(painted(&apply_diagram_automorphism(&v, &sv).unwrap()), vec![1]);

        let a3 = diag(Series::A, 3);
        let s = aut(&a3, "s");
        let v = make_vogan(&a3, [0], &s).unwrap();
        let r = aut(&a3, "r");
        let w = apply_diagram_automorphism(&v, &r).unwrap();
        assert_eq!(painted(&w), vec![1]);
        assert!(w.automorphism.fixes(1) && w.automorphism.fixes(3));
        assert_eq!(w.automorphism.order, 2);
    }

    #[test]
    fn classes_and_reduction() {
        let a3 = diag(Series::A, 3);
        let v = make_trivial(&a3, []).unwrap();
        assert_eq!(equivalence_class(&v, 8).unwrap().len(), 1);
        assert_eq!(reduce_borel_siebenthal(&v).unwrap(), v);

        let a2 = diag(Series::A, 2);
        let all = make_trivial(&a2, [0, 1, 2]).unwrap();
        let red = reduce_borel_siebenthal(&all).unwrap();
        assert!(red.painted.len() <= 2);
        assert_eq!(painted(&red), vec![0]);
        assert_eq!(painted(&reduce_borel_siebenthal(&make_trivial(&a2, [1, 2]).unwrap()).unwrap()), vec![0, 1]);

        assert_eq!(
            equivalence_class(&v, 2),
            Err(VoganError::LimitExceeded { nodes: 4, limit: 2 })
        );
    }

    #[test]
    fn rank_one_cases_stay_distinct() {
        let a1 = diag(Series::A, 1);
        let both = reduce_borel_siebenthal(&make_trivial(&a1, [0, 1]).unwrap()).unwrap();
        let one = reduce_borel_siebenthal(&make_trivial(&a1, [1]).unwrap()).unwrap();
        assert_eq!(painted(&both), vec![0, 1]);
        assert_eq!(painted(&one), vec![0]);
    }

    #[test]
    fn class_size_is_invariant_under_relabeling() {
        let d = diag(Series::A, 4);
        let group = automorphism_group(&d);
        for v in all_vogan_diagrams(&d).into_iter().step_by(7) {
            let size = equivalence_class(&v, 8).unwrap().len();
            for g in &group {
                let w = apply_diagram_automorphism(&v, g).unwrap();
                assert_eq!(equivalence_class(&w, 8).unwrap().len(), size);
            }
        }
    }

    #[test]
    fn every_b3_painting_reduces() {
        let d = diag(Series::B, 3);
        for v in all_vogan_diagrams(&d) {
            let red = reduce_borel_siebenthal(&v).unwrap();
            assert!(red.painted.len() <= 2, "{:?}", v.painted);
        }
    }

    #[test]
    fn fixed_roots_of_compact_form_are_all_simple_roots() {
        let d = diag(Series::A, 3);
        let f = fixed_algebra_roots(&make_trivial(&d, []).unwrap());
        assert_eq!(f.simple_roots.len(), 4);
        assert_eq!(f.supplements, vec![Supplement::None]);
    }

    #[test]
    fn fixed_roots_supplements() {
        // C₃ with node 2 painted: compact roots plus 2e₂.
        let d = diag(Series::C, 3);
        let f = fixed_algebra_roots(&make_trivial(&d, [2]).unwrap());
        assert!(f.simple_roots.contains(&to_q(&[0, 2, 0])));
        assert!(matches!(f.supplements[0], Supplement::DoubledRoot { node: 2, .. }));
        // With node 1 painted, 2e₁ is the negative of the affine root.
        let f = fixed_algebra_roots(&make_trivial(&d, [1]).unwrap());
        assert_eq!(f.supplements, vec![Supplement::Redundant { node: 1 }]);

        // A₃ with s and node 0 painted: orbit average and one averaged complex root.
        let d = diag(Series::A, 3);
        let s = aut(&d, "s");
        let f = fixed_algebra_roots(&make_vogan(&d, [0], &s).unwrap());
        assert!(matches!(f.supplements[0], Supplement::AveragedComplexRoot { node: 0, .. }));
        assert_eq!(f.simple_roots.len(), 3);
    }
}
