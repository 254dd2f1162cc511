//! Cross-validation of the algebraic backend against the Vogan catalog.
//!
//! A worked involution is run through the eigenspace pipeline, its expected
//! Vogan diagram is classified, and the two descriptions of the degree-zero
//! fixed algebra are compared.

use serde::{Deserialize, Serialize};

use crate::cartan::{build_affine_diagram, CartanError, Series};
use crate::catalog::{classify, Match};
use crate::degree0::Degree0Type;
use crate::involutions::{verify_case, worked_case, InvolutionError, VerificationReport};
use crate::vogan::{automorphism_from_map, make_vogan, VoganDiagram, VoganError};

#[derive(thiserror::Error, Debug)]
pub enum CrosscheckError {
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    Vogan(#[from] VoganError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("no expected Vogan diagram for case {0}")]
    NoExpectation(String),
}

/// Vogan diagram expected for a worked case: painted nodes and the node map
/// of the diagram automorphism.
pub fn expected_vogan(series: Series, rank: usize, case: &str) -> Result<VoganDiagram, CrosscheckError> {
    let key = case.to_ascii_uppercase();
    let (painted, map): (Vec<usize>, Vec<usize>) = match (series, rank, key.as_str()) {
        (Series::A, 1, "I") => (vec![0, 1], vec![0, 1]),
        (Series::A, 1, "II") => (vec![1], vec![0, 1]),
        (Series::A, 1, "III") => (vec![], vec![1, 0]),
        (Series::A, 2, "I") => (vec![0, 1], vec![0, 1, 2]),
        (Series::A, 2, "II") => (vec![1], vec![0, 1, 2]),
        (Series::A, 2, "III") => (vec![0], vec![0, 2, 1]),
        (Series::A, 2, "IV") => (vec![], vec![0, 2, 1]),
        _ => return Err(CrosscheckError::NoExpectation(format!("{series}{rank} {case}"))),
    };
    let diagram = build_affine_diagram(series, rank)?;
    let aut = automorphism_from_map(&diagram, map)?;
    Ok(make_vogan(&diagram, painted, &aut)?)
}

/// Outcome of one cross-validation run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub schema: String,
    pub case: String,
    pub series: Series,
    pub rank: usize,
    pub painted: Vec<usize>,
    pub automorphism: String,
    /// Catalog row reached by classifying the expected diagram.
    pub catalog: Option<Match>,
    pub backend_degree0: Option<Degree0Type>,
    pub catalog_degree0: Option<Degree0Type>,
    pub degree0_agrees: bool,
    /// Dimension of the degree-zero loop part of `K` against the catalog's.
    pub k0_dim_backend: Option<usize>,
    pub k0_dim_catalog: Option<usize>,
    pub profile_agrees: bool,
    pub agree: bool,
    pub details: Vec<String>,
    pub verification: VerificationReport,
}

/// Run worked case `case` on `series`/`rank` at core window `core` and compare
/// it with the catalog entry of its expected Vogan diagram.
pub fn crosscheck(series: Series, rank: usize, case: &str, core: i32) -> Result<CrosscheckReport, CrosscheckError> {
    let vd = expected_vogan(series, rank, case)?;
    let wc = worked_case(series, rank, case)?;
    let (verification, _) = verify_case(&wc, core)?;
    let classification = classify(&vd)?;
    let catalog = classification.primary().cloned();
    let backend = verification.degree0_type.clone();
    let expected = catalog.as_ref().and_then(|m| m.degree0.clone());
    let mut details = Vec::new();

    let degree0_agrees = match (&backend, &expected) {
        (Some(b), Some(e)) if b.same_structure(e) => true,
        (Some(b), Some(e)) => {
            details.push(format!("degree-0 type: backend {b}, catalog {e}"));
            false
        }
        (None, _) => {
            details.push("backend did not identify the degree-0 type".into());
            false
        }
        (_, None) => {
            details.push("catalog label does not determine a degree-0 type".into());
            false
        }
    };
    let k0_dim_backend = backend.as_ref().map(|t| t.dim);
    let k0_dim_catalog = expected.as_ref().map(|t| t.dim);
    let profile_agrees = k0_dim_backend.is_some() && k0_dim_backend == k0_dim_catalog;
    if !profile_agrees {
        details.push(format!("degree-0 K dimension: backend {k0_dim_backend:?}, catalog {k0_dim_catalog:?}"));
    }
    if catalog.is_none() {
        details.push(format!("expected diagram is unclassified; reduced painting {:?}", classification.reduced.painted_vec()));
    }
    details.extend(verification.discrepancies.iter().map(|d| format!("backend note: {}", d.replace('\n', " "))));

    Ok(CrosscheckReport {
        schema: crate::SCHEMA.to_string(),
        case: wc.name.to_string(),
        series,
        rank,
        painted: vd.painted_vec(),
        automorphism: vd.automorphism.name.clone(),
        agree: degree0_agrees && profile_agrees && catalog.is_some(),
        catalog,
        backend_degree0: backend,
        catalog_degree0: expected,
        degree0_agrees,
        k0_dim_backend,
        k0_dim_catalog,
        profile_agrees,
        details,
        verification,
    })
}
