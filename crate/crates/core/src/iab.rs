//! σ-minuscule elements of the affine Weyl group and the poset of abelian
//! B₀-stable subalgebras of g₁.
//!
//! An element is σ-minuscule when all its inversions have σ-height 1; the
//! inversion sets are exactly the biconvex subsets of the level-1 window,
//! and they are in weight-preserving bijection with the abelian B₀-stable
//! subalgebras. Two independent enumerations are provided: breadth-first
//! search in the weak order, and direct growth of abelian lower ideals.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::affine::GradingDatum;
use crate::hermitian::HermitianPair;
use crate::rootsys::RootVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IabError {
    NotInvolution,
    /// The hypotheses of the special-subalgebra construction fail.
    NotApplicable(&'static str),
}

impl fmt::Display for IabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IabError::NotInvolution => write!(f, "operation requires an involution (m = 2)"),
            IabError::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
        }
    }
}

/// The inversion set of a σ-minuscule element: a biconvex set of positive
/// affine roots of σ-height 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct InversionSet {
    pub roots: BTreeSet<RootVector>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, other: &InversionSet) -> bool {
        other.roots.is_subset(&self.roots)
    }
}

/// An abelian B₀-stable subalgebra named by its weight set
/// `Ψ = {−β̄ : β ∈ N(w)}` (level-1 representatives).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AbelianSubalgebra {
    pub weights: BTreeSet<RootVector>,
    pub inversions: InversionSet,
}

impl AbelianSubalgebra {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }
}

fn simple_reflection(g: &GradingDatum, i: usize, v: &RootVector) -> RootVector {
    let k = g.system.gcm.simple_pairing(v, i);
    v.add_scaled(&g.system.simple(i), -k)
}

fn apply_word(g: &GradingDatum, word: &[usize], v: &RootVector) -> RootVector {
    // w = s_{i₁} ⋯ s_{i_ℓ}: the rightmost letter acts first.
    let mut out = v.clone();
    for &i in word.iter().rev() {
        out = simple_reflection(g, i, &out);
    }
    out
}

/// Enumerates all σ-minuscule inversion sets by breadth-first search in the
/// weak order: extend `w` by `s_i` whenever the new inversion `w(αᵢ)` is
/// positive of σ-height 1. Sorted by (cardinality, lexicographic order).
pub fn enumerate_iab(g: &GradingDatum) -> Result<Vec<InversionSet>, IabError> {
    if g.m != 2 {
        return Err(IabError::NotInvolution);
    }
    let n = g.nodes();
    let mut seen: BTreeSet<BTreeSet<RootVector>> = BTreeSet::new();
    seen.insert(BTreeSet::new());
    let mut frontier: Vec<(Vec<usize>, BTreeSet<RootVector>)> = vec![(vec![], BTreeSet::new())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (word, inv) in &frontier {
            for i in 0..n {
                let beta = apply_word(g, word, &g.system.simple(i));
                if !beta.is_positive() || g.sigma_height(&beta) != 1 {
                    continue;
                }
                let mut ninv = inv.clone();
                ninv.insert(beta);
                if seen.insert(ninv.clone()) {
                    let mut nword = word.clone();
                    nword.push(i);
                    next.push((nword, ninv));
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<InversionSet> = seen
        .into_iter()
        .map(|roots| InversionSet { roots })
        .collect();
    out.sort();
    Ok(out)
}

/// Independent enumeration: grows the abelian lower ideals of the level-1
/// window directly from the closure conditions, without Weyl group words.
pub fn enumerate_biconvex_direct(g: &GradingDatum) -> Result<Vec<BTreeSet<RootVector>>, IabError> {
    if g.m != 2 {
        return Err(IabError::NotInvolution);
    }
    let window: Vec<RootVector> = g.phi1.clone();
    let addable = |a: &BTreeSet<RootVector>, xi: &RootVector| -> bool {
        if a.contains(xi) {
            return false;
        }
        // lower closure under positive g₀-root steps
        for gamma in &g.delta0_plus {
            let down = xi.sub(gamma);
            if down.is_positive() {
                if g.system.is_real_root(&down) && !a.contains(&down) {
                    return false;
                }
                if g.system.is_imaginary_root(&down) {
                    return false;
                }
            }
        }
        // abelian: no sum with the set (or itself) is a root
        for b in a.iter().chain([xi]) {
            let sum = xi.add(b);
            if g.system.is_root(&sum) {
                return false;
            }
        }
        true
    };
    let mut seen: BTreeSet<BTreeSet<RootVector>> = BTreeSet::new();
    seen.insert(BTreeSet::new());
    let mut frontier: Vec<BTreeSet<RootVector>> = vec![BTreeSet::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for xi in &window {
                if addable(a, xi) {
                    let mut na = a.clone();
                    na.insert(xi.clone());
                    if seen.insert(na.clone()) {
                        next.push(na);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// The weight set of the subalgebra attached to a σ-minuscule element:
/// `Ψ(Θ(w)) = {−β̄ : β ∈ N(w)}`, as level-1 representatives.
pub fn theta(g: &GradingDatum, w: &InversionSet) -> AbelianSubalgebra {
    let weights: BTreeSet<RootVector> = w.roots.iter().map(|b| g.bar(&b.neg()).rep).collect();
    assert_eq!(weights.len(), w.roots.len());
    AbelianSubalgebra {
        weights,
        inversions: w.clone(),
    }
}

/// Hypotheses and derived data of the special-subalgebra construction:
/// `Π₁ = {α_p}` with `α_p` long and non-complex.
#[derive(Debug, Clone)]
pub struct SpecialContext {
    /// Node index of α_p.
    pub p: usize,
    pub alpha_p: RootVector,
    /// Components of Π₀ with the unique node attached to α_p in each.
    pub components: Vec<(Vec<usize>, usize)>,
    /// `C¹_σ = {α ∈ Δ̂⁺ : [α : α_p] = 1, α_p + kδ − α ∈ Δ̂⁺}`.
    pub c1_sigma: BTreeSet<RootVector>,
}

pub fn special_context(g: &GradingDatum) -> Result<SpecialContext, IabError> {
    if g.m != 2 {
        return Err(IabError::NotInvolution);
    }
    if g.pi1.len() != 1 {
        return Err(IabError::NotApplicable("g0 is not semisimple"));
    }
    let p = g.pi1[0];
    let alpha_p = g.system.simple(p);
    if !g.system.is_long(&alpha_p) {
        return Err(IabError::NotApplicable("alpha_p is not long"));
    }
    if g.is_complex(&alpha_p) {
        return Err(IabError::NotApplicable("alpha_p is complex"));
    }
    let components = pi0_components(g)
        .into_iter()
        .map(|nodes| {
            let attached: Vec<usize> = nodes
                .iter()
                .copied()
                .filter(|&i| g.system.gcm.entry(i, p) != 0)
                .collect();
            assert_eq!(attached.len(), 1, "one node per component meets alpha_p");
            (nodes, attached[0])
        })
        .collect();
    // α_p + kδ − α must be a positive root, the imaginary kδ included
    // (which admits α_p itself).
    let shift = alpha_p.add(&g.kdelta());
    let c1_sigma: BTreeSet<RootVector> = g
        .phi1
        .iter()
        .filter(|a| {
            let rest = shift.sub(a);
            a.coeff(p) == 1 && rest.is_positive() && g.system.is_root(&rest)
        })
        .cloned()
        .collect();
    Ok(SpecialContext {
        p,
        alpha_p,
        components,
        c1_sigma,
    })
}

/// Connected components of Π₀ in the affine diagram.
pub fn pi0_components(g: &GradingDatum) -> Vec<Vec<usize>> {
    let mut remaining: BTreeSet<usize> = g.pi0.iter().copied().collect();
    let mut comps = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        remaining.remove(&start);
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let adj: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&j| g.system.gcm.entry(i, j) != 0)
                .collect();
            for j in adj {
                remaining.remove(&j);
                comp.push(j);
                stack.push(j);
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// The Hermitian pair `(Σ, α_Σ)` of a component of Π₀, embedded in the
/// affine basis.
pub fn component_pair(g: &GradingDatum, nodes: &[usize], alpha_sigma: usize) -> HermitianPair {
    HermitianPair::from_embedded(
        &g.system.form,
        nodes,
        alpha_sigma,
        alloc::format!("{}|Pi0", g.id()),
    )
    .expect("component of Pi0 is a Hermitian pair")
}

/// The inversion set of the special element `w_p`, built from the closed
/// formula `{α_p} ∪ ⋃_Σ {γ + α_p : γ ∈ Φ(Σ)₁⁺}` and checked against the
/// independent description `N(w_p) = C¹_σ`.
pub fn special_wp(g: &GradingDatum) -> Result<InversionSet, IabError> {
    let ctx = special_context(g)?;
    let mut roots: BTreeSet<RootVector> = BTreeSet::new();
    roots.insert(ctx.alpha_p.clone());
    for (nodes, a_sigma) in &ctx.components {
        let pair = component_pair(g, nodes, *a_sigma);
        for gamma in &pair.phi1plus {
            let lifted = gamma.add(&ctx.alpha_p);
            assert!(g.system.is_real_root(&lifted));
            roots.insert(lifted);
        }
    }
    assert_eq!(roots, ctx.c1_sigma, "closed formula must equal C¹_σ");
    debug_assert_eq!(g.is_biconvex(&roots, 3), Ok(true));
    Ok(InversionSet { roots })
}

/// The minimal non-spherical element: the unique maximal orthogonal
/// antichain of `C¹_σ \ {α_p}` (one tube-type antichain per component of
/// Π₀, lifted by α_p), closed downward under dominance inside `C¹_σ`.
pub fn abar(g: &GradingDatum) -> Result<InversionSet, IabError> {
    let ctx = special_context(g)?;
    let wp = special_wp(g)?;
    let mut antichain: BTreeSet<RootVector> = BTreeSet::new();
    for (nodes, a_sigma) in &ctx.components {
        let pair = component_pair(g, nodes, *a_sigma);
        assert!(pair.is_tube_type(), "component pairs are of tube type");
        let a_star = pair.unique_max_antichain().expect("tube type");
        for eta in &a_star.roots {
            antichain.insert(eta.add(&ctx.alpha_p));
        }
    }
    let roots: BTreeSet<RootVector> = ctx
        .c1_sigma
        .iter()
        .filter(|xi| {
            antichain
                .iter()
                .any(|eta| crate::rootsys::dominance_leq(xi, eta, &g.pi0))
        })
        .cloned()
        .collect();
    assert!(antichain.is_subset(&roots));
    assert!(roots.is_subset(&wp.roots));
    assert_eq!(g.is_biconvex(&roots, 3), Ok(true), "abar inversions must be biconvex");
    assert!(roots.iter().all(|r| g.sigma_height(r) == 1));
    Ok(InversionSet { roots })
}

/// Inclusion poset structure on a list of inversion sets: for each element,
/// the indices of the elements it contains.
pub fn inclusion_order(sets: &[InversionSet]) -> BTreeMap<usize, Vec<usize>> {
    let mut order = BTreeMap::new();
    for (i, a) in sets.iter().enumerate() {
        let below: Vec<usize> = sets
            .iter()
            .enumerate()
            .filter(|(j, b)| *j != i && a.contains(b))
            .map(|(j, _)| j)
            .collect();
        order.insert(i, below);
    }
    order
}
