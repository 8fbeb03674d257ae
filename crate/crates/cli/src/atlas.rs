//! Atlas and classification sweeps over all involutions up to a rank bound.

use rayon::prelude::*;

use isotropy_core::affine::GradingDatum;
use isotropy_core::iab;
use isotropy_core::orbits;
use isotropy_core::sphericity::{self, WeightTable};
use isotropy_core::sweep;

use crate::json::*;

pub struct SweepConfig {
    pub max_rank: usize,
    pub types: Option<Vec<String>>,
    /// Window bound for the biconvexity validation of every inversion set.
    pub level_bound: i64,
}

pub fn selected_involutions(cfg: &SweepConfig) -> Vec<GradingDatum> {
    sweep::all_involutions(cfg.max_rank)
        .into_iter()
        .filter(|g| match &cfg.types {
            None => true,
            Some(types) => types.iter().any(|t| {
                let base = g.system.name.split('(').next().unwrap_or("");
                t.eq_ignore_ascii_case(base)
            }),
        })
        .collect()
}

fn atlas_entry(g: &GradingDatum, level_bound: i64) -> AtlasEntry {
    let table = WeightTable::new(g);
    let all = iab::enumerate_iab(g).expect("involution");
    let wbar = iab::abar(g).ok();
    let mut subs = Vec::new();
    for (i, w) in all.iter().enumerate() {
        assert_eq!(
            g.is_biconvex(&w.roots, level_bound),
            Ok(true),
            "{}: inversion set fails biconvexity",
            g.id()
        );
        let a = iab::theta(g, w);
        let maximal = all
            .iter()
            .enumerate()
            .all(|(j, other)| j == i || !(other.contains(w) && other.len() > w.len()));
        let orbit_count = orbits::orthogonal_subsets(g, &a.weights).len();
        let verdict = sphericity::is_spherical_subalgebra(&table, &a);
        subs.push(SubalgebraJson {
            inversions: coeff_set(&w.roots),
            weights: coeff_set(&a.weights),
            dim: a.dim(),
            maximal,
            orbit_count,
            heights: verdict.heights,
            spherical: verdict.spherical,
            abar_contained: verdict.abar_contained,
        });
    }
    let abar_index = wbar
        .as_ref()
        .and_then(|w| all.iter().position(|x| x.roots == w.roots));
    AtlasEntry {
        grading: GradingJson::of(g),
        nonspherical_exists: g.m == 2 && sphericity::nonspherical_exists(g),
        abar: abar_index,
        subalgebras: subs,
    }
}

pub fn build_atlas(cfg: &SweepConfig) -> AtlasDoc {
    let gradings = selected_involutions(cfg);
    let entries: Vec<AtlasEntry> = gradings
        .par_iter()
        .map(|g| atlas_entry(g, cfg.level_bound))
        .collect();
    AtlasDoc {
        max_rank: cfg.max_rank,
        gradings: entries,
    }
}

pub fn classify_records(cfg: &SweepConfig) -> Vec<ClassifyRecord> {
    let gradings = selected_involutions(cfg);
    gradings
        .par_iter()
        .flat_map_iter(|g| {
            let table = WeightTable::new(g);
            let id = g.id();
            iab::enumerate_iab(g)
                .expect("involution")
                .iter()
                .map(|w| {
                    let a = iab::theta(g, w);
                    let verdict = sphericity::is_spherical_subalgebra(&table, &a);
                    ClassifyRecord {
                        grading: id.clone(),
                        dim: a.dim(),
                        heights: verdict.heights,
                        spherical: verdict.spherical,
                        abar_contained: verdict.abar_contained,
                        witness: verdict.witness.map(|v| v.coeffs),
                    }
                })
                .collect::<Vec<_>>()
                .into_iter()
        })
        .collect()
}

/// One digraph per grading: the affine diagram with marked nodes doubled.
pub fn atlas_dot(cfg: &SweepConfig) -> String {
    let mut out = String::new();
    for g in selected_involutions(cfg) {
        let mut dot = crate::dot::dynkin_dot(&g.id(), &g.system.gcm, 0);
        for &i in &g.pi1 {
            dot = dot.replace(
                &format!("n{i} [label=\"{i}\"];"),
                &format!("n{i} [label=\"{i}\", shape=doublecircle];"),
            );
        }
        out.push_str(&dot);
    }
    out
}

pub fn atlas_text(doc: &AtlasDoc) -> String {
    let mut out = String::new();
    for e in &doc.gradings {
        let n_sph = e.subalgebras.iter().filter(|s| s.spherical).count();
        out.push_str(&format!(
            "{:<18} |I_ab| = {:<4} spherical = {:<4} nonspherical_exists = {}\n",
            e.grading.id,
            e.subalgebras.len(),
            n_sph,
            e.nonspherical_exists,
        ));
    }
    out
}
