//! Acceptance suite: one test per criterion, exhaustive at the stated rank
//! bounds, printing one PASS line each (visible with `--nocapture`).

use std::collections::BTreeSet;

use isotropy_core::affine::GradingDatum;
use isotropy_core::hermitian::HermitianPair;
use isotropy_core::iab::{self, AbelianSubalgebra};
use isotropy_core::oracle;
use isotropy_core::orbits;
use isotropy_core::rootsys::{DiagramClass, FiniteRootSystem, FiniteType, RootVector};
use isotropy_core::sphericity::{self, WeightTable};
use isotropy_core::sweep;

fn hermitian_pairs_up_to(max_rank: usize) -> Vec<(String, usize, HermitianPair)> {
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

fn subalgebras(g: &GradingDatum) -> Vec<AbelianSubalgebra> {
    iab::enumerate_iab(g)
        .unwrap()
        .iter()
        .map(|w| iab::theta(g, w))
        .collect()
}

/// Criterion 1: the cascade reproduces the rank table of Hermitian pairs up
/// to rank 8.
#[test]
fn criterion_01_hermitian_ranks() {
    let mut checked = 0;
    for (family, node, pair) in hermitian_pairs_up_to(8) {
        let fam = &family[..1];
        let rank: usize = family[1..].parse().unwrap();
        let expected = HermitianPair::expected_rank(fam, rank, node)
            .unwrap_or_else(|| panic!("({family}, α{node}) missing from the rank table"));
        let cascade = pair.harish_chandra_cascade();
        assert_eq!(cascade.roots.len(), expected, "({family}, α{node})");
        assert_eq!(pair.rank_r, expected);
        assert!(cascade.roots.iter().all(|r| pair.is_long(r)));
        checked += 1;
    }
    assert!(checked >= 39, "expected at least 39 Hermitian pairs, saw {checked}");
    println!("ACCEPTANCE PASS: criterion 1 (Hermitian ranks, {checked} pairs)");
}

/// Criterion 2: for every pair up to rank 6 and every orthogonal subset B,
/// the reduction returns an antichain below B of exactly the promised type.
#[test]
fn criterion_02_antichain_theorem() {
    let mut checked = 0;
    for (family, node, pair) in hermitian_pairs_up_to(6) {
        for b in pair.ort() {
            let a = pair.antichain_below(&b);
            assert!(pair.is_antichain(&a.roots), "({family},{node}) B={b:?}");
            // A ⊢ B: A ⊆ B^{≥₀}
            let up = pair.up_closure(&b.roots);
            assert!(a.roots.is_subset(&up), "({family},{node}) B={b:?}");
            let (h, k) = b.ort_type;
            let expected = if pair.simply_laced {
                (h + k, 0) // all roots long: |A| = |B|
            } else {
                (h + k / 2, k - 2 * (k / 2))
            };
            if pair.simply_laced {
                assert_eq!(a.roots.len(), b.roots.len());
            } else {
                assert_eq!(a.ort_type, expected, "({family},{node}) B={b:?}");
            }
            checked += 1;
        }
    }
    println!("ACCEPTANCE PASS: criterion 2 (antichain reduction, {checked} subsets)");
}

/// Criterion 3: tube-type pairs up to rank 6 have exactly one antichain in
/// Ort_max, lying inside both closures of every maximal subset; Ort_max
/// membership matches the 2h + k = r rule in types B and C.
#[test]
fn criterion_03_unique_antichain() {
    let mut tube = 0;
    for (family, node, pair) in hermitian_pairs_up_to(6) {
        if pair.is_tube_type() {
            // unique_max_antichain asserts uniqueness and both closure
            // containments internally
            let star = pair.unique_max_antichain().unwrap();
            assert!(pair.is_antichain(&star.roots));
            tube += 1;
        } else {
            let maxes = pair.ort_max();
            let antichains: Vec<_> = maxes
                .iter()
                .filter(|b| pair.is_antichain(&b.roots))
                .collect();
            let both_closed = antichains.iter().all(|a| {
                maxes.iter().all(|b| {
                    a.roots.is_subset(&pair.up_closure(&b.roots))
                        && a.roots.is_subset(&pair.down_closure(&b.roots))
                })
            });
            assert!(
                antichains.len() != 1 || !both_closed,
                "({family},{node}): non-tube pair behaves like tube type"
            );
        }
        // Ort_max membership rule in the non-simply-laced cases
        if !pair.simply_laced {
            let r = pair.rank_r;
            let maxes: BTreeSet<BTreeSet<RootVector>> =
                pair.ort_max().into_iter().map(|s| s.roots).collect();
            for s in pair.ort() {
                let (h, k) = s.ort_type;
                assert_eq!(
                    maxes.contains(&s.roots),
                    2 * h + k == r,
                    "({family},{node}) S={s:?}"
                );
            }
        }
    }
    assert!(tube >= 10);
    println!("ACCEPTANCE PASS: criterion 3 (unique antichain, {tube} tube-type pairs)");
}

/// Criterion 4: orbit parametrization for every involution up to rank 6:
/// properties (A1)-(A3), the adding-roots lemma, the unique open orbit, and
/// dimension concordance with the matrix models.
#[test]
fn criterion_04_orbit_parametrization() {
    let mut algs = 0;
    let mut oracle_checked = 0;
    for g in sweep::all_involutions(6) {
        let realization = oracle::realize(&g)
            .map(|pair| {
                let dict = oracle::build_dictionary(&g, &pair).expect("dictionary");
                (pair, dict)
            });
        for a in subalgebras(&g) {
            algs += 1;
            orbits::check_a1a2a3(&g, &a.weights).unwrap_or_else(|e| {
                panic!("{}: {e:?}", g.id());
            });
            // adding-roots: α, β ∈ Ψ orthogonal, γ ∈ Φ₀, α+γ ∈ Ψ ⇒ β+γ ∉ Ψ
            for alpha in &a.weights {
                for gamma in &g.phi0 {
                    if !a.weights.contains(&alpha.add(gamma)) {
                        continue;
                    }
                    for beta in &a.weights {
                        if beta != alpha && g.system.form.inner(alpha, beta) == 0 {
                            assert!(
                                !a.weights.contains(&beta.add(gamma)),
                                "{}: adding-roots fails",
                                g.id()
                            );
                        }
                    }
                }
            }
            // one record per orthogonal subset, exactly one open (asserted
            // inside), dimension |S| + |Ψ_S|
            let records = orbits::enumerate_orbits(&g, &a.weights).unwrap();
            if let Some((pair, dict)) = &realization {
                for r in &records {
                    let dim = oracle::bracket_dim_of(pair, dict, &r.rep);
                    assert_eq!(r.dim, dim, "{}: dim of {:?}", g.id(), r.rep);
                    oracle_checked += 1;
                }
            }
        }
    }
    println!(
        "ACCEPTANCE PASS: criterion 4 (orbit parametrization, {algs} subalgebras, {oracle_checked} oracle dims)"
    );
}

/// Criterion 5: the height bounds h₀ ≤ 3, h₁ ≤ 4 for every orthogonal
/// subset of every subalgebra, every involution up to rank 7; the maximum
/// is attained on the open representative, and grade-4 witnesses satisfy
/// the doubling identity.
#[test]
fn criterion_05_height_bounds() {
    let mut subsets = 0u64;
    for g in sweep::all_involutions(7) {
        let table = WeightTable::new(&g);
        // the full weight window for the doubling identity
        let window: Vec<RootVector> = g.phi0.iter().chain(&g.phi1).cloned().collect();
        for a in subalgebras(&g) {
            let elems: Vec<RootVector> = a.weights.iter().cloned().collect();
            let idx: Vec<usize> = elems.iter().map(|w| table.idx(w)).collect();
            let mut max_h1 = 0i64;
            let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, vec![])];
            while let Some((start, cur)) = stack.pop() {
                subsets += 1;
                let s_set: BTreeSet<RootVector> =
                    cur.iter().map(|&i| elems[i].clone()).collect();
                let s_idx: Vec<usize> = cur.iter().map(|&i| idx[i]).collect();
                let (h0, h1, witness) = table.grade_heights(&s_set);
                assert!(h0 <= 3, "{}: h0 = {h0}", g.id());
                assert!(h1 <= 4, "{}: h1 = {h1}", g.id());
                max_h1 = max_h1.max(h1);
                if h1 == 4 {
                    // the attaining weight lies in Φ₁ \ Δ₀ and satisfies
                    // Σ_{γ∈S⁺(α)} ⟨β, γ^∨⟩ = 2⟨β, α^∨⟩ for all β
                    let alpha = witness.unwrap();
                    assert!(!g.bar_in_phi0(&alpha), "{}: grade-4 weight complex", g.id());
                    let ai = table.idx(&alpha);
                    let s_plus: Vec<usize> = s_idx
                        .iter()
                        .copied()
                        .filter(|&j| table.pairing_by_idx(ai, j) > 0)
                        .collect();
                    for beta in &window {
                        let bi = table.idx(beta);
                        let lhs: i64 = s_plus
                            .iter()
                            .map(|&j| table.pairing_by_idx(bi, j))
                            .sum();
                        assert_eq!(
                            lhs,
                            2 * table.pairing_by_idx(bi, ai),
                            "{}: doubling identity",
                            g.id()
                        );
                    }
                }
                for i in start..elems.len() {
                    if cur.iter().all(|&j| table.pairing_by_idx(idx[i], idx[j]) == 0) {
                        let mut next = cur.clone();
                        next.push(i);
                        stack.push((start.max(i) + 1, next));
                    }
                }
            }
            let open = orbits::open_orbit_rep(&g, &a.weights);
            let (_, h1_open, _) = table.grade_heights(&open);
            assert_eq!(max_h1, h1_open, "{}: max attained on open rep", g.id());
        }
    }
    println!("ACCEPTANCE PASS: criterion 5 (height bounds, {subsets} subsets)");
}

/// Criterion 6: for qualifying involutions up to rank 8, every
/// maximal-cardinality orthogonal subset of C¹_σ \ {α_p} has at most 4
/// elements and an affine diagram among the five listed (with the label
/// identity k·Σ = 4).
#[test]
fn criterion_06_prop63_table() {
    const ALLOWED: [&str; 5] = ["D4(1)", "B3(1)", "D3(2)", "G2(1)", "A2(2)"];
    let mut checked = 0;
    for g in sweep::all_involutions(8) {
        let Ok(elems) = sphericity::c1_minus_alpha_p(&g) else {
            continue;
        };
        let subsets = sphericity::orthogonal_subsets_of(&g, &elems);
        let max_card = subsets.iter().map(|s| s.len()).max().unwrap();
        assert!(max_card <= 4, "{}", g.id());
        let ctx = iab::special_context(&g).unwrap();
        let alpha = g.bar(&ctx.alpha_p.neg()).rep;
        for s in subsets.into_iter().filter(|s| s.len() == max_card) {
            let psi = sphericity::negated_bars(&g, &s);
            let (_, class, nodes) = sphericity::pi_s_matrix(&g, &psi, &alpha).unwrap();
            let DiagramClass::Affine { name, labels, twist } = class else {
                panic!("{}: expected affine for S={s:?}", g.id());
            };
            assert!(ALLOWED.contains(&name.as_str()), "{}: {name}", g.id());
            // the −α̂ node is last; k_Ξ (Σ_{ξ≠α} a_{Ξ,ξ}) = 4 and
            // k_Ξ a_{Ξ,ξ} = |⟨α, ξ^∨⟩|
            let last = nodes.len() - 1;
            let sum: i64 = labels[..last].iter().sum();
            assert_eq!(twist as i64 * sum, 4, "{}: {name}", g.id());
            for j in 0..last {
                assert_eq!(
                    twist as i64 * labels[j],
                    g.pairing(&nodes[last], &nodes[j]).abs(),
                    "{}: labels vs edges",
                    g.id()
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
    println!("ACCEPTANCE PASS: criterion 6 (Prop 63 table, {checked} subsets)");
}

/// Criterion 7: the weighted Dynkin formula α(h_S) = −2⟨α, α_p^∨⟩ for all
/// maximal orthogonal subsets, with the grade structure g₁(3) = 0,
/// dim g₁(4) = 1, for qualifying involutions up to rank 7.
#[test]
fn criterion_07_weighted_dynkin() {
    let mut checked = 0;
    for g in sweep::all_involutions(7) {
        let Ok(elems) = sphericity::c1_minus_alpha_p(&g) else {
            continue;
        };
        for s in sphericity::maximal_orthogonal_subsets(&g, &elems) {
            // asserts the closed form on all of Φ and the sum identity
            sphericity::weighted_dynkin(&g, &s).unwrap();
            checked += 1;
        }
        let report = sphericity::special_grading_check(&g).unwrap();
        assert!(report.grade3_phi1.is_empty());
        assert_eq!(report.grade4_phi1.len(), 1);
        assert_eq!(report.dim_g1_grade4, 1);
        assert!(
            sphericity::projected_sum_identity(&g, &report.s),
            "{}: projected sum identity",
            g.id()
        );
        // component pairs are of tube type under the special hypotheses
        let ctx = iab::special_context(&g).unwrap();
        for (nodes, a_sigma) in &ctx.components {
            assert!(iab::component_pair(&g, nodes, *a_sigma).is_tube_type());
        }
    }
    assert!(checked > 0);
    println!("ACCEPTANCE PASS: criterion 7 (weighted Dynkin, {checked} maximal subsets)");
}

/// Criterion 8: the containment criterion matches the height criterion for
/// every subalgebra of every qualifying involution up to rank 7, and the
/// existence predicate matches the sweep outcome for all involutions.
#[test]
fn criterion_08_mt_equivalence() {
    let mut algs = 0;
    for g in sweep::all_involutions(7) {
        let table = WeightTable::new(&g);
        let predicted = sphericity::nonspherical_exists(&g);
        let wbar = iab::abar(&g).ok();
        assert_eq!(wbar.is_some(), predicted, "{}", g.id());
        let mut any_nonspherical = false;
        for a in subalgebras(&g) {
            let open = orbits::open_orbit_rep(&g, &a.weights);
            let (_, h1, _) = table.grade_heights(&open);
            let nonspherical = h1 >= 4;
            any_nonspherical |= nonspherical;
            if let Some(wbar) = &wbar {
                assert_eq!(
                    a.inversions.contains(wbar),
                    nonspherical,
                    "{}: MT containment vs heights",
                    g.id()
                );
            } else {
                assert!(!nonspherical, "{}", g.id());
            }
            algs += 1;
        }
        assert_eq!(any_nonspherical, predicted, "{}: existence", g.id());
        // ā itself is non-spherical and minimal with that property
        if let Some(wbar) = &wbar {
            let abar_alg = iab::theta(&g, wbar);
            let (_, h1, _) =
                table.grade_heights(&orbits::open_orbit_rep(&g, &abar_alg.weights));
            assert!(h1 >= 4);
        }
    }
    println!("ACCEPTANCE PASS: criterion 8 (MT equivalence, {algs} subalgebras)");
}

/// Criterion 9: oracle concordance on the four realized algebras: grade
/// heights equal the matrix eigenvalue heights, the ad-iteration agrees on
/// g₁ and obeys the string bounds on g₀, and orbit dimensions match the
/// tangent-space ranks.
#[test]
fn criterion_09_oracle_concordance() {
    use isotropy_core::affine::{build_affine, build_grading};
    let cases: Vec<GradingDatum> = vec![
        build_grading(build_affine(FiniteType::A(3), 1).unwrap(), vec![1, 1, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::A(3), 1).unwrap(), vec![1, 0, 1, 0]).unwrap(),
        build_grading(build_affine(FiniteType::A(5), 1).unwrap(), vec![1, 1, 0, 0, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::A(5), 1).unwrap(), vec![1, 0, 1, 0, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::A(5), 1).unwrap(), vec![1, 0, 0, 1, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::D(4), 1).unwrap(), vec![0, 0, 1, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::D(4), 1).unwrap(), vec![1, 1, 0, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::D(4), 2).unwrap(), vec![1, 0, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::D(4), 2).unwrap(), vec![0, 1, 0, 0]).unwrap(),
        build_grading(build_affine(FiniteType::C(3), 1).unwrap(), vec![1, 0, 0, 1]).unwrap(),
    ];
    let mut subsets = 0;
    for g in &cases {
        let pair = oracle::realize(g).unwrap_or_else(|| panic!("{} not realized", g.id()));
        let dict = oracle::build_dictionary(g, &pair)
            .unwrap_or_else(|e| panic!("{}: {e}", g.id()));
        let table = WeightTable::new(g);
        for a in subalgebras(g) {
            for s in orbits::orthogonal_subsets(g, &a.weights) {
                let (g0, g1, _) = table.grade_heights(&s);
                assert_eq!(
                    (g0, g1),
                    oracle::eigen_heights(&pair, &dict, &s),
                    "{}: eigen heights of {s:?}",
                    g.id()
                );
                let (h, h0, h1) = oracle::ad_power_height_of(&pair, &dict, &s);
                assert_eq!(h1, g1, "{}: g1 heights of {s:?}", g.id());
                assert_eq!(h, g0.max(g1), "{}: total height of {s:?}", g.id());
                assert!(g0 <= h0 && 2 * h0 <= g0 + g1, "{}: g0 bounds of {s:?}", g.id());
                let dim = s.len() + orbits::psi_s(g, &s).len();
                assert_eq!(
                    dim,
                    oracle::bracket_dim_of(&pair, &dict, &s),
                    "{}: dim of {s:?}",
                    g.id()
                );
                subsets += 1;
            }
        }
    }
    println!("ACCEPTANCE PASS: criterion 9 (oracle concordance, {subsets} subsets)");
}

/// Criterion 10: the flip case counts 2^rank subalgebras (abelian ideals of
/// the Borel), by both enumeration routes.
#[test]
fn criterion_10_flip_counts() {
    use isotropy_core::affine::flip_grading;
    for (t, rank) in [
        (FiniteType::A(1), 1usize),
        (FiniteType::A(2), 2),
        (FiniteType::A(3), 3),
        (FiniteType::A(4), 4),
        (FiniteType::B(2), 2),
        (FiniteType::G2, 2),
    ] {
        let g = flip_grading(t);
        let bfs = iab::enumerate_iab(&g).unwrap().len();
        let direct = iab::enumerate_biconvex_direct(&g).unwrap().len();
        assert_eq!(bfs, 1usize << rank, "{:?}", t);
        assert_eq!(direct, 1usize << rank, "{:?}", t);
    }
    println!("ACCEPTANCE PASS: criterion 10 (flip counts 2^rank)");
}
