//! Enumeration of the finite-order-2 gradings (involutions) up to a rank
//! bound, deduplicated modulo diagram automorphisms.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::affine::{build_affine, build_grading, flip_grading, GradingDatum};
use crate::rootsys::FiniteType;

/// Simple types of rank ≤ `max_rank`, skipping the aliases C2 = B2 and
/// D3 = A3.
pub fn simple_types_up_to(max_rank: usize) -> Vec<FiniteType> {
    let mut v = Vec::new();
    for n in 1..=max_rank {
        v.push(FiniteType::A(n));
    }
    for n in 2..=max_rank {
        v.push(FiniteType::B(n));
    }
    for n in 3..=max_rank {
        v.push(FiniteType::C(n));
    }
    for n in 4..=max_rank {
        v.push(FiniteType::D(n));
    }
    if max_rank >= 2 {
        v.push(FiniteType::G2);
    }
    if max_rank >= 4 {
        v.push(FiniteType::F4);
    }
    if max_rank >= 6 {
        v.push(FiniteType::E6);
    }
    if max_rank >= 7 {
        v.push(FiniteType::E7);
    }
    if max_rank >= 8 {
        v.push(FiniteType::E8);
    }
    v
}

fn mark_vectors_for_involution(labels: &[i64], twist: u8) -> Vec<Vec<i64>> {
    let n = labels.len();
    let mut out = Vec::new();
    match twist {
        1 => {
            // Σ sᵢ aᵢ = 2: one node of label 2, or two nodes of label 1.
            for i in 0..n {
                if labels[i] == 2 {
                    let mut s = alloc::vec![0i64; n];
                    s[i] = 1;
                    out.push(s);
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if labels[i] == 1 && labels[j] == 1 {
                        let mut s = alloc::vec![0i64; n];
                        s[i] = 1;
                        s[j] = 1;
                        out.push(s);
                    }
                }
            }
        }
        2 => {
            // Σ sᵢ aᵢ = 1: one node of label 1.
            for i in 0..n {
                if labels[i] == 1 {
                    let mut s = alloc::vec![0i64; n];
                    s[i] = 1;
                    out.push(s);
                }
            }
        }
        _ => {}
    }
    out
}

fn canonical_marks(s: &[i64], autos: &[Vec<usize>]) -> Vec<i64> {
    let mut best: Option<Vec<i64>> = None;
    for pi in autos {
        // image[pi[i]] = s[i]
        let mut img = alloc::vec![0i64; s.len()];
        for (i, &v) in s.iter().enumerate() {
            img[pi[i]] = v;
        }
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img);
        }
    }
    best.unwrap()
}

/// All inner and outer involutions of the simple algebras of rank ≤
/// `max_rank`, one representative per diagram-automorphism orbit.
pub fn simple_involutions(max_rank: usize) -> Vec<GradingDatum> {
    let mut out = Vec::new();
    for t in simple_types_up_to(max_rank) {
        let sys = build_affine(t, 1).expect("untwisted always exists");
        let autos = sys.gcm.automorphisms();
        let mut seen = BTreeSet::new();
        for s in mark_vectors_for_involution(&sys.labels, 1) {
            let canon = canonical_marks(&s, &autos);
            if seen.insert(canon.clone()) {
                out.push(build_grading(sys.clone(), canon).expect("valid marks"));
            }
        }
        let outer_ok = matches!(t, FiniteType::A(n) if n >= 2)
            || matches!(t, FiniteType::D(n) if n >= 4)
            || t == FiniteType::E6;
        if outer_ok {
            let sys = build_affine(t, 2).expect("legal twist");
            let autos = sys.gcm.automorphisms();
            let mut seen = BTreeSet::new();
            for s in mark_vectors_for_involution(&sys.labels, 2) {
                let canon = canonical_marks(&s, &autos);
                if seen.insert(canon.clone()) {
                    out.push(build_grading(sys.clone(), canon).expect("valid marks"));
                }
            }
        }
    }
    out
}

/// Flip involutions of `k ⊕ k` with `2·rank(k) ≤ max_rank`.
pub fn flip_involutions(max_rank: usize) -> Vec<GradingDatum> {
    simple_types_up_to(max_rank / 2)
        .into_iter()
        .filter(|t| 2 * t.rank() <= max_rank)
        .map(flip_grading)
        .collect()
}

/// Every indecomposable involution of a semisimple algebra of rank ≤
/// `max_rank`: inner, outer, and flip cases.
pub fn all_involutions(max_rank: usize) -> Vec<GradingDatum> {
    let mut v = simple_involutions(max_rank);
    v.extend(flip_involutions(max_rank));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts_small_rank() {
        // sl2: one inner involution (s = (1,1) up to rotation).
        let inv = simple_involutions(1);
        assert_eq!(inv.len(), 1);
        // rank 2: A2 inner (one pair-orbit) + A2 outer, B2 inner: s at the
        // label-2 node α1, plus the pair (α0, α2)-orbit... G2 inner: α2.
        let inv = simple_involutions(2);
        let names: Vec<_> = inv.iter().map(|g| g.id()).collect();
        assert!(names.len() >= 5, "{names:?}");
        for g in &inv {
            assert_eq!(g.m, 2);
        }
    }

    #[test]
    fn flips_have_m_two() {
        for g in flip_involutions(6) {
            assert!(g.flip);
            assert_eq!(g.m, 2);
            assert_eq!(g.s[0], 1);
        }
    }
}
