//! Theorem verification sweeps. Each suite returns a summary line or the
//! first violation, naming the grading, subalgebra and witness.

use std::collections::BTreeSet;

use isotropy_core::affine::GradingDatum;
use isotropy_core::hermitian::HermitianPair;
use isotropy_core::iab;
use isotropy_core::oracle;
use isotropy_core::orbits;
use isotropy_core::rootsys::{DiagramClass, FiniteRootSystem, RootVector};
use isotropy_core::sphericity::{self, WeightTable};
use isotropy_core::sweep;

pub const THEOREMS: [&str; 7] = [
    "cor73",
    "mt",
    "p63",
    "antichain",
    "hermitian-ranks",
    "panyushev",
    "orbit-dim",
];

pub fn run(theorem: &str, max_rank: usize) -> Result<String, String> {
    match theorem {
        "cor73" => cor73(max_rank),
        "mt" => mt(max_rank),
        "p63" => p63(max_rank),
        "antichain" => antichain(max_rank),
        "hermitian-ranks" => hermitian_ranks(max_rank),
        "panyushev" => panyushev(max_rank),
        "orbit-dim" => orbit_dim(max_rank),
        other => Err(format!("unknown theorem id: {other}")),
    }
}

fn hermitian_pairs(max_rank: usize) -> Vec<(String, usize, HermitianPair)> {
    let mut out = Vec::new();
    for t in sweep::simple_types_up_to(max_rank) {
        let sys = FiniteRootSystem::from_type(t);
        for node in 1..=sys.rank() {
            if let Ok(pair) = HermitianPair::new(&sys, node) {
                out.push((t.name(), node, pair));
            }
        }
    }
    out
}

fn subalgebras(g: &GradingDatum) -> Vec<iab::AbelianSubalgebra> {
    iab::enumerate_iab(g)
        .expect("involution")
        .iter()
        .map(|w| iab::theta(g, w))
        .collect()
}

pub fn for_each_involution<T: Send>(
    max_rank: usize,
    f: impl Fn(&GradingDatum) -> Result<T, String> + Sync,
) -> Result<Vec<T>, String> {
    use rayon::prelude::*;
    sweep::all_involutions(max_rank)
        .par_iter()
        .map(&f)
        .collect()
}

fn cor73(max_rank: usize) -> Result<String, String> {
    let counts = for_each_involution(max_rank, |g| {
        let table = WeightTable::new(g);
        let mut n = 0u64;
        for a in subalgebras(g) {
            for s in orbits::orthogonal_subsets(g, &a.weights) {
                let (h0, h1, w) = table.grade_heights(&s);
                if h0 > 3 || h1 > 4 {
                    return Err(format!(
                        "{}: heights ({h0},{h1}) at S={s:?} witness {w:?}",
                        g.id()
                    ));
                }
                n += 1;
            }
        }
        Ok(n)
    })?;
    Ok(format!(
        "cor73: height bounds hold on {} orthogonal subsets",
        counts.iter().sum::<u64>()
    ))
}

fn mt(max_rank: usize) -> Result<String, String> {
    let counts = for_each_involution(max_rank, |g| {
        let table = WeightTable::new(g);
        let wbar = iab::abar(g).ok();
        let mut n = 0u64;
        for a in subalgebras(g) {
            let open = orbits::open_orbit_rep(g, &a.weights);
            let (_, h1, witness) = table.grade_heights(&open);
            let nonspherical = h1 >= 4;
            let contained = wbar
                .as_ref()
                .map(|w| a.inversions.contains(w))
                .unwrap_or(false);
            if contained != nonspherical {
                return Err(format!(
                    "{}: containment {contained} vs h1 {h1} on dim-{} subalgebra, witness {witness:?}",
                    g.id(),
                    a.dim()
                ));
            }
            n += 1;
        }
        Ok(n)
    })?;
    Ok(format!(
        "mt: containment criterion matches heights on {} subalgebras",
        counts.iter().sum::<u64>()
    ))
}

fn p63(max_rank: usize) -> Result<String, String> {
    const ALLOWED: [&str; 5] = ["D4(1)", "B3(1)", "D3(2)", "G2(1)", "A2(2)"];
    let counts = for_each_involution(max_rank, |g| {
        let Ok(elems) = sphericity::c1_minus_alpha_p(g) else {
            return Ok(0u64);
        };
        let ctx = iab::special_context(g).unwrap();
        let alpha = g.bar(&ctx.alpha_p.neg()).rep;
        let subsets = sphericity::orthogonal_subsets_of(g, &elems);
        let max_card = subsets.iter().map(|s| s.len()).max().unwrap();
        if max_card > 4 {
            return Err(format!("{}: orthogonal subset of size {max_card}", g.id()));
        }
        let mut n = 0u64;
        for s in subsets.into_iter().filter(|s| s.len() == max_card) {
            let psi = sphericity::negated_bars(g, &s);
            let class = sphericity::pi_s_matrix(g, &psi, &alpha)
                .map_err(|e| format!("{}: {e}", g.id()))?
                .1;
            match class {
                DiagramClass::Affine { ref name, ref labels, twist }
                    if ALLOWED.contains(&name.as_str()) =>
                {
                    let sum: i64 = labels[..labels.len() - 1].iter().sum();
                    if twist as i64 * sum != 4 {
                        return Err(format!("{}: label sum of {name} is not 4", g.id()));
                    }
                }
                other => {
                    return Err(format!("{}: diagram {other:?} for S={s:?}", g.id()));
                }
            }
            n += 1;
        }
        Ok(n)
    })?;
    Ok(format!(
        "p63: {} maximal-cardinality subsets classified within the table",
        counts.iter().sum::<u64>()
    ))
}

fn antichain(max_rank: usize) -> Result<String, String> {
    let mut n = 0u64;
    for (family, node, pair) in hermitian_pairs(max_rank) {
        for b in pair.ort() {
            let a = pair.antichain_below(&b);
            let ok = pair.is_antichain(&a.roots) && a.roots.is_subset(&pair.up_closure(&b.roots));
            let (h, k) = b.ort_type;
            let type_ok = if pair.simply_laced {
                a.roots.len() == b.roots.len()
            } else {
                a.ort_type == (h + k / 2, k - 2 * (k / 2))
            };
            if !ok || !type_ok {
                return Err(format!("({family}, α{node}): B={:?}", b.roots));
            }
            n += 1;
        }
        if pair.is_tube_type() {
            pair.unique_max_antichain()
                .map_err(|e| format!("({family}, α{node}): {e}"))?;
        }
    }
    Ok(format!("antichain: verified on {n} orthogonal subsets"))
}

fn hermitian_ranks(max_rank: usize) -> Result<String, String> {
    let mut n = 0;
    for (family, node, pair) in hermitian_pairs(max_rank) {
        let rank: usize = family[1..].parse().unwrap();
        let expected = HermitianPair::expected_rank(&family[..1], rank, node)
            .ok_or_else(|| format!("({family}, α{node}): not in the rank table"))?;
        if pair.rank_r != expected {
            return Err(format!(
                "({family}, α{node}): cascade size {} expected {expected}",
                pair.rank_r
            ));
        }
        n += 1;
    }
    Ok(format!("hermitian-ranks: {n} pairs match the table"))
}

fn panyushev(max_rank: usize) -> Result<String, String> {
    let counts = for_each_involution(max_rank, |g| {
        let table = WeightTable::new(g);
        let predicted = sphericity::nonspherical_exists(g);
        let mut any = false;
        for a in subalgebras(g) {
            let open = orbits::open_orbit_rep(g, &a.weights);
            let (_, h1, _) = table.grade_heights(&open);
            any |= h1 >= 4;
        }
        if any != predicted {
            return Err(format!(
                "{}: predicate {predicted} but sweep found nonspherical = {any}",
                g.id()
            ));
        }
        Ok(1u64)
    })?;
    Ok(format!(
        "panyushev: existence predicate matches on {} involutions",
        counts.iter().sum::<u64>()
    ))
}

fn orbit_dim(max_rank: usize) -> Result<String, String> {
    let counts = for_each_involution(max_rank, |g| {
        let realization = oracle::realize(g).map(|pair| {
            let dict = oracle::build_dictionary(g, &pair).expect("dictionary");
            (pair, dict)
        });
        let mut n = 0u64;
        for a in subalgebras(g) {
            orbits::check_a1a2a3(g, &a.weights)
                .map_err(|e| format!("{}: {e:?}", g.id()))?;
            let records =
                orbits::enumerate_orbits(g, &a.weights).map_err(|e| format!("{}: {e}", g.id()))?;
            let open: Vec<&orbits::OrbitRecord> =
                records.iter().filter(|r| r.is_open).collect();
            if open.len() != 1 {
                return Err(format!("{}: {} open orbits", g.id(), open.len()));
            }
            if let Some((pair, dict)) = &realization {
                for r in &records {
                    let dim = oracle::bracket_dim_of(pair, dict, &r.rep);
                    if dim != r.dim {
                        return Err(format!(
                            "{}: dim {} vs oracle {dim} at {:?}",
                            g.id(),
                            r.dim,
                            r.rep
                        ));
                    }
                }
            }
            n += records.len() as u64;
        }
        Ok(n)
    })?;
    Ok(format!(
        "orbit-dim: {} orbits verified",
        counts.iter().sum::<u64>()
    ))
}

/// Parses a grading specification: `TYPE:twist:marks` (e.g. `D4:1:00100`)
/// or `flip:TYPE`.
pub fn parse_grading(spec: &str) -> Result<GradingDatum, String> {
    use isotropy_core::affine::{build_affine, build_grading, flip_grading};
    use isotropy_core::rootsys::FiniteType;
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["flip", t] => {
            let t = FiniteType::parse(t).map_err(|e| e.to_string())?;
            Ok(flip_grading(t))
        }
        [t, twist, marks] => {
            let t = FiniteType::parse(t).map_err(|e| e.to_string())?;
            let twist: u8 = twist.parse().map_err(|_| "bad twist".to_string())?;
            let sys = build_affine(t, twist).map_err(|e| e.to_string())?;
            let s: Vec<i64> = marks
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as i64).ok_or("bad mark digit"))
                .collect::<Result<_, _>>()?;
            build_grading(sys, s).map_err(|e| e.to_string())
        }
        _ => Err(format!("cannot parse grading spec '{spec}'")),
    }
}

/// All orthogonal subset data needed by the orbit listing.
pub fn orbit_records(
    g: &GradingDatum,
    a: &iab::AbelianSubalgebra,
) -> Vec<(BTreeSet<RootVector>, usize, bool)> {
    orbits::enumerate_orbits(g, &a.weights)
        .expect("valid subalgebra")
        .into_iter()
        .map(|r| (r.rep, r.dim, r.is_open))
        .collect()
}
