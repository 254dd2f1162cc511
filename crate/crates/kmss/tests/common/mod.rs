//! Random affine elements for property tests.

#![allow(dead_code)]

use std::sync::OnceLock;

use kmss::cartan::Series;
use kmss::loop_algebra::{realize, AffineElement};
use kmss::matrix::LaurentMatrix;
use kmss::scalars::{qi, GaussianRational};
use proptest::prelude::*;

/// Realizations sampled by the generators below.
pub const ALGEBRAS: [(Series, usize); 5] = [(Series::A, 1), (Series::A, 2), (Series::B, 2), (Series::C, 3), (Series::D, 4)];

fn bases() -> &'static Vec<Vec<LaurentMatrix>> {
    static CELL: OnceLock<Vec<Vec<LaurentMatrix>>> = OnceLock::new();
    CELL.get_or_init(|| ALGEBRAS.iter().map(|&(s, r)| realize(s, r).expect("realization").basis()).collect())
}

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| GaussianRational::new(qi(a), qi(b)))
}

/// Up to four monomial terms `z·tⁿ⊗x` with `|n| ≤ 2`, plus optional `c` and `d` parts.
fn element_in(alg: usize, with_d: bool) -> impl Strategy<Value = AffineElement> {
    let dim = bases()[alg].len();
    let term = (0..dim, -2i32..=2, gaussian());
    let d_part = if with_d { gaussian().boxed() } else { Just(GaussianRational::zero()).boxed() };
    (prop::collection::vec(term, 1..=4), gaussian(), d_part).prop_map(move |(terms, c, d)| {
        let basis = &bases()[alg];
        let n = basis[0].size();
        let mut x = &AffineElement::central(n, c) + &AffineElement::derivation(n, d);
        for (k, deg, z) in terms {
            x = &x + &AffineElement::monomial(deg, &basis[k]).scale(&z);
        }
        x
    })
}

/// `k` elements drawn from one randomly chosen realization.
pub fn elements(k: usize, with_d: bool) -> impl Strategy<Value = Vec<AffineElement>> {
    (0..ALGEBRAS.len()).prop_flat_map(move |alg| prop::collection::vec(element_in(alg, with_d), k))
}
