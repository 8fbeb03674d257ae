//! JSON document shapes for the atlas, classification records, orbit
//! listings and Hermitian pair reports.

use serde::Serialize;
use std::collections::BTreeSet;

use isotropy_core::affine::GradingDatum;
use isotropy_core::rootsys::RootVector;

pub fn coeffs(v: &RootVector) -> Vec<i64> {
    v.coeffs.clone()
}

pub fn coeff_set(s: &BTreeSet<RootVector>) -> Vec<Vec<i64>> {
    s.iter().map(coeffs).collect()
}

/// `{type, twist, s, m, pi0, pi1}` with affine node indices (node 0 is the
/// added one; nodes 1.. carry the Bourbaki numbering of the finite part).
#[derive(Serialize)]
pub struct GradingJson {
    pub id: String,
    #[serde(rename = "type")]
    pub diagram: String,
    pub twist: u8,
    pub flip: bool,
    pub s: Vec<i64>,
    pub m: i64,
    pub pi0: Vec<usize>,
    pub pi1: Vec<usize>,
}

impl GradingJson {
    pub fn of(g: &GradingDatum) -> GradingJson {
        GradingJson {
            id: g.id(),
            diagram: g.system.name.clone(),
            twist: g.system.twist,
            flip: g.flip,
            s: g.s.clone(),
            m: g.m,
            pi0: g.pi0.clone(),
            pi1: g.pi1.clone(),
        }
    }
}

/// One element of the subalgebra poset.
#[derive(Serialize)]
pub struct SubalgebraJson {
    pub inversions: Vec<Vec<i64>>,
    pub weights: Vec<Vec<i64>>,
    pub dim: usize,
    pub maximal: bool,
    pub orbit_count: usize,
    pub heights: (i64, i64),
    pub spherical: bool,
    pub abar_contained: bool,
}

#[derive(Serialize)]
pub struct AtlasEntry {
    pub grading: GradingJson,
    pub nonspherical_exists: bool,
    /// Index into `subalgebras` of the minimal non-spherical element.
    pub abar: Option<usize>,
    pub subalgebras: Vec<SubalgebraJson>,
}

#[derive(Serialize)]
pub struct AtlasDoc {
    pub max_rank: usize,
    pub gradings: Vec<AtlasEntry>,
}

/// Flat per-(grading, subalgebra) record.
#[derive(Serialize)]
pub struct ClassifyRecord {
    pub grading: String,
    pub dim: usize,
    pub heights: (i64, i64),
    pub spherical: bool,
    pub abar_contained: bool,
    pub witness: Option<Vec<i64>>,
}

#[derive(Serialize)]
pub struct OrbitJson {
    pub rep: Vec<Vec<i64>>,
    pub dim: usize,
    pub open: bool,
}

#[derive(Serialize)]
pub struct OrtJson {
    pub roots: Vec<Vec<i64>>,
    #[serde(rename = "type")]
    pub ort_type: (usize, usize),
}

#[derive(Serialize)]
pub struct HermitianJson {
    #[serde(rename = "type")]
    pub family: String,
    pub node: usize,
    pub rank: usize,
    pub tube_type: bool,
    pub phi1plus: Vec<Vec<i64>>,
    pub cascade: OrtJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_antichain: Option<OrtJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthogonal_subsets: Option<Vec<OrtJson>>,
}
