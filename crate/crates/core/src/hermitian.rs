//! Hermitian pairs `(Π, α_q)` with `[θ : α_q] = 1`: the poset `Φ₁⁺` of
//! weights of the abelian nilradical, orthogonal subsets and their
//! short/long types, antichain reduction, tube-type detection, the unique
//! maximal antichain, and the cascade of strongly orthogonal roots.
//!
//! A pair can live either in a standalone finite system or embedded on a
//! subset of nodes of a larger (affine) basis; in both cases the simple
//! roots of the pair are unit vectors of the ambient basis and the ambient
//! form is inherited.

use alloc::collections::BTreeSet;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::orbits::{self, OrbitAmbient};
use crate::rootsys::{reflection_closure, BilinearForm, FiniteRootSystem, RootVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HermitianError {
    NodeOutOfRange,
    /// `[θ : α_q] ≠ 1`, so the nilradical is not abelian.
    NotHermitian,
    NotIrreducible,
    NotTubeType,
    NoShortRoots,
    NoDecomposition,
}

impl fmt::Display for HermitianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HermitianError::NodeOutOfRange => write!(f, "node index out of range"),
            HermitianError::NotHermitian => write!(f, "the highest root coefficient at the node is not 1"),
            HermitianError::NotIrreducible => write!(f, "system is not irreducible"),
            HermitianError::NotTubeType => write!(f, "pair is not of tube type"),
            HermitianError::NoShortRoots => write!(f, "simply-laced pair has no short roots"),
            HermitianError::NoDecomposition => write!(f, "no decomposition as a half sum exists"),
        }
    }
}

/// A pairwise orthogonal subset of `Φ₁⁺` with its `(short, long)` type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrtSubset {
    pub roots: BTreeSet<RootVector>,
    /// `(h, k)` = (number of short roots, number of long roots).
    pub ort_type: (usize, usize),
}

/// A Hermitian pair: an irreducible finite system together with a node
/// whose highest-root coefficient is 1.
#[derive(Debug, Clone)]
pub struct HermitianPair {
    /// Ambient indices of the simple roots of the pair's system.
    pub nodes: Vec<usize>,
    /// Ambient index of `α_q`.
    pub q_node: usize,
    pub form: BilinearForm,
    pub roots: BTreeSet<RootVector>,
    pub positive: Vec<RootVector>,
    pub phi0_plus: Vec<RootVector>,
    /// Positive roots supported on `α_q`, ordered canonically.
    pub phi1plus: Vec<RootVector>,
    phi1_both: Vec<RootVector>,
    pi0_nodes: Vec<usize>,
    pub highest: RootVector,
    pub long_norm: i64,
    pub simply_laced: bool,
    /// Rank of the symmetric variety: size of the cascade.
    pub rank_r: usize,
    pub name: String,
}

impl OrbitAmbient for HermitianPair {
    fn form(&self) -> &BilinearForm {
        &self.form
    }
    fn phi0_plus(&self) -> &[RootVector] {
        &self.phi0_plus
    }
    fn phi1(&self) -> &[RootVector] {
        &self.phi1_both
    }
    fn pi0(&self) -> &[usize] {
        &self.pi0_nodes
    }
    fn is_real_root(&self, v: &RootVector) -> bool {
        self.roots.contains(v)
    }
    fn is_delta_multiple(&self, v: &RootVector) -> bool {
        v.is_zero()
    }
}

impl HermitianPair {
    /// Builds the pair `(Π, α_node)` of a standalone irreducible system;
    /// `node` is the 1-based Bourbaki index.
    pub fn new(sys: &FiniteRootSystem, node: usize) -> Result<HermitianPair, HermitianError> {
        if node == 0 || node > sys.rank() {
            return Err(HermitianError::NodeOutOfRange);
        }
        if sys.components.len() != 1 {
            return Err(HermitianError::NotIrreducible);
        }
        let nodes: Vec<usize> = (0..sys.rank()).collect();
        Self::from_embedded(&sys.form, &nodes, node - 1, sys.name.clone())
    }

    /// Builds the pair on the subsystem spanned by `nodes` of an ambient
    /// basis carrying `form`; `q_node` is the ambient index of `α_q`.
    pub fn from_embedded(
        form: &BilinearForm,
        nodes: &[usize],
        q_node: usize,
        name: String,
    ) -> Result<HermitianPair, HermitianError> {
        assert!(nodes.contains(&q_node));
        let dim = form.dim();
        let simples: Vec<RootVector> = nodes.iter().map(|&i| RootVector::unit(dim, i)).collect();
        let roots = reflection_closure(
            &simples,
            &|v, s| form.pairing(v, s).expect("root pairing"),
            4096,
        );
        // connectivity of the sub-diagram
        {
            let mut seen = vec![false; nodes.len()];
            seen[0] = true;
            let mut stack = vec![0usize];
            while let Some(i) = stack.pop() {
                for j in 0..nodes.len() {
                    if !seen[j] && form.inner(&simples[i], &simples[j]) != 0 {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            if seen.iter().any(|&x| !x) {
                return Err(HermitianError::NotIrreducible);
            }
        }
        let positive: Vec<RootVector> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        let highest = positive
            .iter()
            .max_by_key(|r| (r.height(), (*r).clone()))
            .expect("nonempty system")
            .clone();
        if highest.coeff(q_node) != 1 {
            return Err(HermitianError::NotHermitian);
        }
        let phi1plus: Vec<RootVector> = positive
            .iter()
            .filter(|r| r.coeff(q_node) > 0)
            .cloned()
            .collect();
        let phi0_plus: Vec<RootVector> = positive
            .iter()
            .filter(|r| r.coeff(q_node) == 0)
            .cloned()
            .collect();
        let mut phi1_both = phi1plus.clone();
        phi1_both.extend(phi1plus.iter().map(|r| r.neg()));
        phi1_both.sort();
        let pi0_nodes: Vec<usize> = nodes.iter().copied().filter(|&i| i != q_node).collect();
        let long_norm = roots.iter().map(|r| form.norm(r)).max().unwrap();
        let simply_laced = roots.iter().all(|r| form.norm(r) == long_norm);
        let mut pair = HermitianPair {
            nodes: nodes.to_vec(),
            q_node,
            form: form.clone(),
            roots,
            positive,
            phi0_plus,
            phi1plus,
            phi1_both,
            pi0_nodes,
            highest,
            long_norm,
            simply_laced,
            rank_r: 0,
            name,
        };
        pair.rank_r = pair.harish_chandra_cascade().roots.len();
        Ok(pair)
    }

    pub fn is_long(&self, v: &RootVector) -> bool {
        self.form.norm(v) == self.long_norm
    }

    pub fn ort_subset(&self, roots: BTreeSet<RootVector>) -> OrtSubset {
        let rs: Vec<&RootVector> = roots.iter().collect();
        for i in 0..rs.len() {
            for j in (i + 1)..rs.len() {
                debug_assert_eq!(self.form.inner(rs[i], rs[j]), 0, "set not orthogonal");
            }
        }
        let long = roots.iter().filter(|r| self.is_long(r)).count();
        OrtSubset {
            ort_type: (roots.len() - long, long),
            roots,
        }
    }

    /// All orthogonal subsets of `Φ₁⁺` (the empty set included).
    pub fn ort(&self) -> Vec<OrtSubset> {
        let psi: BTreeSet<RootVector> = self.phi1plus.iter().cloned().collect();
        orbits::orthogonal_subsets(self, &psi)
            .into_iter()
            .map(|s| self.ort_subset(s))
            .collect()
    }

    /// The inclusion-maximal orthogonal subsets of `Φ₁⁺`.
    pub fn ort_max(&self) -> Vec<OrtSubset> {
        self.ort()
            .into_iter()
            .filter(|s| {
                !self
                    .phi1plus
                    .iter()
                    .any(|x| !s.roots.contains(x) && s.roots.iter().all(|y| self.form.inner(x, y) == 0))
            })
            .collect()
    }

    pub fn leq0(&self, a: &RootVector, b: &RootVector) -> bool {
        crate::rootsys::dominance_leq(a, b, &self.pi0_nodes)
    }

    pub fn is_antichain(&self, set: &BTreeSet<RootVector>) -> bool {
        for a in set {
            for b in set {
                if a != b && self.leq0(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// `B^{≥₀}` inside `Φ₁⁺`.
    pub fn up_closure(&self, b: &BTreeSet<RootVector>) -> BTreeSet<RootVector> {
        self.phi1plus
            .iter()
            .filter(|x| b.iter().any(|y| self.leq0(y, x)))
            .cloned()
            .collect()
    }

    /// `B^{≤₀}` inside `Φ₁⁺`.
    pub fn down_closure(&self, b: &BTreeSet<RootVector>) -> BTreeSet<RootVector> {
        self.phi1plus
            .iter()
            .filter(|x| b.iter().any(|y| self.leq0(x, y)))
            .cloned()
            .collect()
    }

    /// The canonical maximal orthogonal set: open-orbit staircase of the
    /// abelian nilradical. Coincides with the Harish-Chandra strongly
    /// orthogonal roots; all its elements are long.
    pub fn harish_chandra_cascade(&self) -> OrtSubset {
        let psi: BTreeSet<RootVector> = self.phi1plus.iter().cloned().collect();
        let s = orbits::open_orbit_rep(self, &psi);
        assert!(s.iter().all(|r| self.is_long(r)), "cascade roots must be long");
        self.ort_subset(s)
    }

    /// Reduction of an orthogonal subset to an antichain `A ⊢ B` below it:
    /// reflect a minimal comparable pair down, or merge two comparable long
    /// roots into the short half-sum. Simply laced systems keep the
    /// cardinality; otherwise type `(h, k)` becomes
    /// `(h + ⌊k/2⌋, k − 2⌊k/2⌋)`.
    pub fn antichain_below(&self, b: &OrtSubset) -> OrtSubset {
        let mut cur: BTreeSet<RootVector> = b.roots.clone();
        loop {
            let pair = self.comparable_pair(&cur);
            let Some((beta, beta_prime)) = pair else {
                break;
            };
            let dim_before = self.up_closure(&cur).len();
            let mut next: Option<BTreeSet<RootVector>> = None;
            // merge: β′ − β = 2α with α ∈ Φ₀⁺ and (β+β′)/2 a root
            let diff = beta_prime.sub(&beta);
            if diff.coeffs.iter().all(|&c| c % 2 == 0) {
                let alpha = RootVector::new(diff.coeffs.iter().map(|&c| c / 2).collect());
                let mid = beta.add(&alpha);
                if self.roots.contains(&alpha) && alpha.is_positive() && self.roots.contains(&mid)
                {
                    let mut n: BTreeSet<RootVector> = cur.clone();
                    n.remove(&beta);
                    n.remove(&beta_prime);
                    assert!(n.iter().all(|x| self.form.inner(x, &mid) == 0));
                    n.insert(mid);
                    next = Some(n);
                }
            }
            if next.is_none() {
                // reflect both endpoints by a positive g₀-root orthogonal to
                // the rest of the set
                'search: for alpha in &self.phi0_plus {
                    let pb = self.form.pairing(&beta, alpha).unwrap();
                    let pbp = self.form.pairing(&beta_prime, alpha).unwrap();
                    if pb >= 0 || pbp <= 0 {
                        continue;
                    }
                    if cur
                        .iter()
                        .filter(|x| **x != beta && **x != beta_prime)
                        .any(|x| self.form.inner(x, alpha) != 0)
                    {
                        continue;
                    }
                    let nb = self.form.reflect(&beta, alpha);
                    let nbp = self.form.reflect(&beta_prime, alpha);
                    if !self.roots.contains(&nb) || !self.roots.contains(&nbp) {
                        continue;
                    }
                    let mut n: BTreeSet<RootVector> = cur
                        .iter()
                        .filter(|x| **x != beta && **x != beta_prime)
                        .cloned()
                        .collect();
                    n.insert(nb);
                    n.insert(nbp);
                    if self.up_closure(&n).len() < dim_before {
                        next = Some(n);
                        break 'search;
                    }
                }
            }
            let next = next.expect("reduction step must exist for orthogonal subsets");
            let dim_after = self.up_closure(&next).len();
            assert!(dim_after < dim_before, "reduction must shrink the ideal");
            cur = next;
        }
        self.ort_subset(cur)
    }

    /// The lexicographically first comparable pair `(β, β′)` with `β`
    /// minimal in the set and `β <₀ β′`.
    fn comparable_pair(&self, set: &BTreeSet<RootVector>) -> Option<(RootVector, RootVector)> {
        for beta in set {
            if set.iter().any(|y| y != beta && self.leq0(y, beta)) {
                continue; // not minimal
            }
            for bp in set {
                if bp != beta && self.leq0(beta, bp) {
                    return Some((beta.clone(), bp.clone()));
                }
            }
        }
        None
    }

    /// Action of the longest element of the full Weyl group of the pair.
    pub fn longest_element_action(&self, v: &RootVector) -> RootVector {
        let dim = self.form.dim();
        let two_rho = self
            .positive
            .iter()
            .fold(RootVector::zero(dim), |acc, r| acc.add(r));
        let simples: Vec<RootVector> = self
            .nodes
            .iter()
            .map(|&i| RootVector::unit(dim, i))
            .collect();
        let mut w = two_rho;
        let mut word: Vec<usize> = Vec::new();
        loop {
            let mut moved = false;
            for (ix, s) in simples.iter().enumerate() {
                let k = self.form.pairing(&w, s).unwrap();
                if k > 0 {
                    w = w.add_scaled(s, -k);
                    word.push(ix);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        let mut out = v.clone();
        for &ix in &word {
            out = self.form.reflect(&out, &simples[ix]);
        }
        out
    }

    /// Tube type: `w₀(α_q) = −α_q`. When true, the sum-rule
    /// characterization on the cascade is also verified.
    pub fn is_tube_type(&self) -> bool {
        let dim = self.form.dim();
        let alpha_q = RootVector::unit(dim, self.q_node);
        let tube = self.longest_element_action(&alpha_q) == alpha_q.neg();
        if tube {
            let cascade = self.harish_chandra_cascade();
            let total = cascade
                .roots
                .iter()
                .fold(RootVector::zero(dim), |acc, r| acc.add(r));
            let aq_norm = self.form.norm(&alpha_q);
            for alpha in &self.phi0_plus {
                assert_eq!(self.form.inner(&total, alpha), 0, "tube sum rule on Φ₀");
            }
            for alpha in &self.phi1plus {
                assert_eq!(
                    self.form.inner(&total, alpha),
                    aq_norm,
                    "tube sum rule on Φ₁⁺"
                );
            }
        }
        tube
    }

    /// The unique antichain among the maximal orthogonal subsets of a
    /// tube-type pair; it lies below and above every maximal orthogonal
    /// subset in the dominance closures.
    pub fn unique_max_antichain(&self) -> Result<OrtSubset, HermitianError> {
        if !self.is_tube_type() {
            return Err(HermitianError::NotTubeType);
        }
        let maxes = self.ort_max();
        let antichains: Vec<&OrtSubset> =
            maxes.iter().filter(|b| self.is_antichain(&b.roots)).collect();
        assert_eq!(antichains.len(), 1, "tube type must have a unique maximal antichain");
        let star = antichains[0].clone();
        for b in &maxes {
            let up = self.up_closure(&b.roots);
            let down = self.down_closure(&b.roots);
            assert!(star.roots.is_subset(&up), "A* must sit above every maximal B");
            assert!(star.roots.is_subset(&down), "A* must sit below every maximal B");
        }
        Ok(star)
    }

    /// Writes a short root of `Φ₁⁺` as half the sum of two distinct cascade
    /// roots of a maximal-cardinality orthogonal set (tube type only).
    pub fn short_root_decomposition(
        &self,
        beta: &RootVector,
        s: &OrtSubset,
    ) -> Result<(RootVector, RootVector), HermitianError> {
        if self.simply_laced {
            return Err(HermitianError::NoShortRoots);
        }
        let target = beta.scaled(2);
        for g1 in &s.roots {
            for g2 in &s.roots {
                if g1 < g2 && g1.add(g2) == target {
                    return Ok((g1.clone(), g2.clone()));
                }
            }
        }
        Err(HermitianError::NoDecomposition)
    }

    /// Rank table of the Hermitian pairs: expected cascade size, from the
    /// type name and the 1-based node index.
    pub fn expected_rank(family: &str, rank: usize, node: usize) -> Option<usize> {
        match family {
            "A" => Some(node.min(rank + 1 - node)),
            "B" if node == 1 => Some(2),
            "C" if node == rank => Some(rank),
            "D" if node == 1 => Some(2),
            "D" if node == rank || node == rank - 1 => Some(rank / 2),
            "E" if rank == 6 && (node == 1 || node == 6) => Some(2),
            "E" if rank == 7 && node == 7 => Some(3),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::FiniteType;

    fn pair(t: FiniteType, node: usize) -> HermitianPair {
        let sys = FiniteRootSystem::from_type(t);
        HermitianPair::new(&sys, node).unwrap()
    }

    fn v(c: &[i64]) -> RootVector {
        RootVector::new(c.to_vec())
    }

    #[test]
    fn cascade_examples() {
        let p = pair(FiniteType::A(3), 2);
        let s = p.harish_chandra_cascade();
        let expect: BTreeSet<RootVector> = [v(&[0, 1, 0]), v(&[1, 1, 1])].into_iter().collect();
        assert_eq!(s.roots, expect);
        assert_eq!(p.rank_r, 2);

        // (C3, α3): cascade {2ε1, 2ε2, 2ε3}, r = 3
        let p = pair(FiniteType::C(3), 3);
        let s = p.harish_chandra_cascade();
        assert_eq!(s.roots.len(), 3);
        assert!(s.roots.iter().all(|r| p.is_long(r)));
        let expect: BTreeSet<RootVector> =
            [v(&[0, 0, 1]), v(&[0, 2, 1]), v(&[2, 2, 1])].into_iter().collect();
        assert_eq!(s.roots, expect);

        // (B4, α1): r = 2
        let p = pair(FiniteType::B(4), 1);
        assert_eq!(p.rank_r, 2);
    }

    #[test]
    fn invalid_pairs_rejected() {
        let sys = FiniteRootSystem::from_type(FiniteType::B(3));
        // [θ : α2] = 2 in B3
        assert_eq!(
            HermitianPair::new(&sys, 2).err(),
            Some(HermitianError::NotHermitian)
        );
    }

    #[test]
    fn antichain_below_examples() {
        let p = pair(FiniteType::A(3), 2);
        // already an antichain: fixed point
        let b = p.ort_subset([v(&[1, 1, 0]), v(&[0, 1, 1])].into_iter().collect());
        assert_eq!(p.antichain_below(&b).roots, b.roots);
        // B = {α2, θ} reduces to {α1+α2, α2+α3}
        let b = p.ort_subset([v(&[0, 1, 0]), v(&[1, 1, 1])].into_iter().collect());
        let a = p.antichain_below(&b);
        let expect: BTreeSet<RootVector> = [v(&[1, 1, 0]), v(&[0, 1, 1])].into_iter().collect();
        assert_eq!(a.roots, expect);
        assert!(p.is_antichain(&a.roots));
        // A ⊢ B
        assert!(a.roots.is_subset(&p.up_closure(&b.roots)));

        // (C3, α3): the all-long cascade reduces to type (1,1)
        let p = pair(FiniteType::C(3), 3);
        let b = p.harish_chandra_cascade();
        assert_eq!(b.ort_type, (0, 3));
        let a = p.antichain_below(&b);
        assert_eq!(a.ort_type, (1, 1));
    }

    #[test]
    fn tube_type_examples() {
        assert!(pair(FiniteType::A(3), 2).is_tube_type());
        assert!(!pair(FiniteType::A(3), 1).is_tube_type());
        assert!(pair(FiniteType::E7, 7).is_tube_type());
        assert!(!pair(FiniteType::E6, 1).is_tube_type());
        assert!(pair(FiniteType::B(3), 1).is_tube_type());
        assert!(pair(FiniteType::C(3), 3).is_tube_type());
        assert!(pair(FiniteType::D(4), 1).is_tube_type());
    }

    #[test]
    fn unique_antichain_examples() {
        let p = pair(FiniteType::A(3), 2);
        let a = p.unique_max_antichain().unwrap();
        let expect: BTreeSet<RootVector> = [v(&[1, 1, 0]), v(&[0, 1, 1])].into_iter().collect();
        assert_eq!(a.roots, expect);

        // (C3, α3): {ε1+ε3, 2ε2} = {α1+α2+α3 wait—in simple coords}
        let p = pair(FiniteType::C(3), 3);
        let a = p.unique_max_antichain().unwrap();
        assert_eq!(a.ort_type, (1, 1));
        // ε1+ε3 = α1+α2+α3, 2ε2 = 2α2+α3
        let expect: BTreeSet<RootVector> = [v(&[1, 1, 1]), v(&[0, 2, 1])].into_iter().collect();
        assert_eq!(a.roots, expect);

        // (B_n, α1): the unique short root of Φ₁⁺
        let p = pair(FiniteType::B(4), 1);
        let a = p.unique_max_antichain().unwrap();
        assert_eq!(a.ort_type, (1, 0));
        assert_eq!(a.roots, [v(&[1, 1, 1, 1])].into_iter().collect());

        // non-tube pairs are rejected
        assert_eq!(
            pair(FiniteType::A(3), 1).unique_max_antichain().err(),
            Some(HermitianError::NotTubeType)
        );
    }

    #[test]
    fn short_root_decomposition_examples() {
        let p = pair(FiniteType::C(2), 2);
        let s = p.harish_chandra_cascade();
        // β = ε1+ε2 = α1+α2; S = {2ε1, 2ε2} = {2α1+α2, α2}
        let (g1, g2) = p.short_root_decomposition(&v(&[1, 1]), &s).unwrap();
        let got: BTreeSet<RootVector> = [g1, g2].into_iter().collect();
        assert_eq!(got, [v(&[0, 1]), v(&[2, 1])].into_iter().collect());

        let p = pair(FiniteType::C(3), 3);
        let s = p.harish_chandra_cascade();
        // β = ε2+ε3 = α2+α3
        let (g1, g2) = p.short_root_decomposition(&v(&[0, 1, 1]), &s).unwrap();
        let got: BTreeSet<RootVector> = [g1, g2].into_iter().collect();
        // 2ε2 = 2α2+α3, 2ε3 = α3
        assert_eq!(got, [v(&[0, 2, 1]), v(&[0, 0, 1])].into_iter().collect());

        let p = pair(FiniteType::A(3), 2);
        let s = p.harish_chandra_cascade();
        assert_eq!(
            p.short_root_decomposition(&v(&[0, 1, 0]), &s).err(),
            Some(HermitianError::NoShortRoots)
        );

        // a non-maximal S cannot decompose the short root
        let p = pair(FiniteType::C(3), 3);
        let single = p.ort_subset([v(&[0, 0, 1])].into_iter().collect());
        assert_eq!(
            p.short_root_decomposition(&v(&[0, 1, 1]), &single).err(),
            Some(HermitianError::NoDecomposition)
        );
    }

    #[test]
    fn dominance_in_c_type_matches_index_rule() {
        // ε_i + ε_j ≤₀ ε_h + ε_k iff h ≤ i and k ≤ j
        let p = pair(FiniteType::C(4), 4);
        let n = 4usize;
        // ε_i + ε_j = Σ_{t=i}^{j-1} α_t + 2 Σ_{t=j}^{n-1} α_t + α_n (1-based)
        let eps_sum = |i: usize, j: usize| {
            let mut c = vec![0i64; n];
            for t in i..j {
                c[t - 1] += 1;
            }
            for t in j..n {
                c[t - 1] += 2;
            }
            c[n - 1] += 1;
            RootVector::new(c)
        };
        for i in 1..=n {
            for j in i..=n {
                for h in 1..=n {
                    for k in h..=n {
                        let a = eps_sum(i, j);
                        let b = eps_sum(h, k);
                        assert!(p.roots.contains(&a), "{a:?}");
                        assert_eq!(p.leq0(&a, &b), h <= i && k <= j, "{i}{j} vs {h}{k}");
                    }
                }
            }
        }
    }
}
