//! Sphericity machinery: eigenvalue gradings of normal triples, height
//! computations, the affine Cartan matrices attached to orthogonal subsets,
//! weighted Dynkin values of the special subalgebra, and the full decision
//! via containment of the minimal non-spherical element.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::affine::GradingDatum;
use crate::iab::{abar, special_context, AbelianSubalgebra, IabError};
use crate::linalg;
use crate::orbits;
use crate::rootsys::{classify_gcm, DiagramClass, GeneralizedCartanMatrix, RootSysError, RootVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphericityError {
    Iab(IabError),
    /// The subset admits a further orthogonal element.
    NotMaximal(RootVector),
    /// Π_{S,α} classified neither finite nor affine: a theorem violation.
    NotFiniteOrAffine,
    Root(RootSysError),
}

impl fmt::Display for SphericityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphericityError::Iab(e) => write!(f, "{e}"),
            SphericityError::NotMaximal(v) => {
                write!(f, "subset is not maximal: {:?} is orthogonal to it", v.coeffs)
            }
            SphericityError::NotFiniteOrAffine => {
                write!(f, "attached Cartan matrix is neither finite nor affine")
            }
            SphericityError::Root(e) => write!(f, "{e}"),
        }
    }
}

impl From<IabError> for SphericityError {
    fn from(e: IabError) -> Self {
        SphericityError::Iab(e)
    }
}

/// Precomputed pairing tables against the weight windows of a grading.
/// `grade` sums are the hot path of the full sweeps; the table turns them
/// into lookups.
pub struct WeightTable<'a> {
    pub g: &'a GradingDatum,
    pub weights: Vec<RootVector>,
    index: BTreeMap<RootVector, usize>,
    pairing: Vec<Vec<i64>>,
    phi0_range: (usize, usize),
    phi1_range: (usize, usize),
}

impl<'a> WeightTable<'a> {
    pub fn new(g: &'a GradingDatum) -> WeightTable<'a> {
        let mut weights: Vec<RootVector> = Vec::new();
        weights.extend(g.phi0.iter().cloned());
        let phi0_range = (0, weights.len());
        weights.extend(g.phi1.iter().cloned());
        let phi1_range = (phi0_range.1, weights.len());
        let index: BTreeMap<RootVector, usize> = weights
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let form = &g.system.form;
        let n = form.dim();
        // inner(a, b) = aᵀ (G b); cache G·b per weight
        let halves: Vec<Vec<i64>> = weights
            .iter()
            .map(|b| {
                (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|c| form.gram[r][c] * b.coeff(c))
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let norms: Vec<i64> = weights
            .iter()
            .zip(&halves)
            .map(|(w, h)| (0..n).map(|r| w.coeff(r) * h[r]).sum())
            .collect();
        let pairing: Vec<Vec<i64>> = weights
            .iter()
            .map(|a| {
                (0..weights.len())
                    .map(|j| {
                        let inner: i64 = (0..n).map(|r| a.coeff(r) * halves[j][r]).sum();
                        debug_assert!(norms[j] != 0 && (2 * inner) % norms[j] == 0);
                        2 * inner / norms[j]
                    })
                    .collect()
            })
            .collect();
        WeightTable {
            g,
            weights,
            index,
            pairing,
            phi0_range,
            phi1_range,
        }
    }

    pub fn idx(&self, w: &RootVector) -> usize {
        *self.index.get(w).expect("weight not in table")
    }

    pub fn pairing_by_idx(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    /// `α(h_S) = Σ_{γ∈S} ⟨α, γ^∨⟩` for a table-resident α and S.
    pub fn grade(&self, s_idx: &[usize], w_idx: usize) -> i64 {
        s_idx.iter().map(|&j| self.pairing[w_idx][j]).sum()
    }

    pub fn s_indices(&self, s: &BTreeSet<RootVector>) -> Vec<usize> {
        s.iter().map(|w| self.idx(w)).collect()
    }

    /// Heights `(h₀, h₁)` of the `h_S`-grading, with a witness weight
    /// attaining `h₁`. `h₀` ranges over Φ₀ ∪ {0}, `h₁` over Φ₁.
    pub fn grade_heights(&self, s: &BTreeSet<RootVector>) -> (i64, i64, Option<RootVector>) {
        let s_idx = self.s_indices(s);
        let mut h0 = 0i64;
        for i in self.phi0_range.0..self.phi0_range.1 {
            h0 = h0.max(self.grade(&s_idx, i));
        }
        let mut h1 = i64::MIN;
        let mut witness = None;
        for i in self.phi1_range.0..self.phi1_range.1 {
            let v = self.grade(&s_idx, i);
            if v > h1 {
                h1 = v;
                witness = Some(self.weights[i].clone());
            }
        }
        if self.phi1_range.0 == self.phi1_range.1 {
            h1 = 0;
        }
        (h0, h1, witness)
    }
}

/// The coweight grading attached to an orthogonal subset `S ⊆ Ψ(a)`:
/// `h_S = Σ_{γ∈S} γ^∨` and the grade map `α ↦ α(h_S)`.
#[derive(Debug, Clone)]
pub struct TripleGrading {
    pub s: BTreeSet<RootVector>,
}

impl TripleGrading {
    pub fn new(s: BTreeSet<RootVector>) -> TripleGrading {
        TripleGrading { s }
    }

    pub fn grade(&self, g: &GradingDatum, weight: &RootVector) -> i64 {
        self.s.iter().map(|gamma| g.pairing(weight, gamma)).sum()
    }
}

/// Heights `(h₀, h₁)` of the grading by `h_S`, asserting the theorem bounds
/// `h₀ ≤ 3`, `h₁ ≤ 4` that hold for subsets of valid weight sets.
pub fn grade_heights(table: &WeightTable<'_>, s: &BTreeSet<RootVector>) -> (i64, i64) {
    let (h0, h1, _) = table.grade_heights(s);
    assert!(h0 <= 3, "height bound violated on g0");
    assert!(h1 <= 4, "height bound violated on g1");
    (h0, h1)
}

/// Sphericity verdict for one abelian B₀-stable subalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericityVerdict {
    pub heights: (i64, i64),
    pub spherical: bool,
    /// A weight of grade ≥ 4 when non-spherical.
    pub witness: Option<RootVector>,
    /// Whether the minimal non-spherical element is contained (false when
    /// the special hypotheses fail).
    pub abar_contained: bool,
}

/// Decides sphericity of `G₀·a` by the height criterion: the verdict is the
/// maximum of `h₁` over all orthogonal subsets of Ψ(a), which is asserted
/// to be attained on the open-orbit representative.
pub fn is_spherical_subalgebra(
    table: &WeightTable<'_>,
    a: &AbelianSubalgebra,
) -> SphericityVerdict {
    let g = table.g;
    let mut max_h1 = 0i64;
    let mut max_h0 = 0i64;
    let mut witness = None;
    for s in orbits::orthogonal_subsets(g, &a.weights) {
        let (h0, h1, w) = table.grade_heights(&s);
        assert!(h0 <= 3 && h1 <= 4, "height bounds");
        max_h0 = max_h0.max(h0);
        if h1 > max_h1 {
            max_h1 = h1;
            witness = w;
        }
    }
    let open = orbits::open_orbit_rep(g, &a.weights);
    let (_, h1_open, _) = table.grade_heights(&open);
    assert_eq!(
        max_h1, h1_open,
        "maximal height must be attained on the open representative"
    );
    let spherical = max_h1 <= 3;
    let abar_contained = match abar(g) {
        Ok(wbar) => a.inversions.contains(&wbar),
        Err(_) => false,
    };
    SphericityVerdict {
        heights: (max_h0, max_h1),
        spherical,
        witness: if spherical { None } else { witness },
        abar_contained,
    }
}

/// Existence of a non-spherical element: `Π₁ = {α_p}` with `α_p` long and
/// non-complex. A pure hypothesis test.
pub fn nonspherical_exists(g: &GradingDatum) -> bool {
    assert_eq!(g.m, 2, "predicate is about involutions");
    special_context(g).is_ok()
}

/// The containment criterion: `G₀·a` is non-spherical iff `ā ⊆ a`,
/// i.e. `N(w̄) ⊆ N(w_a)`.
pub fn mt_criterion(g: &GradingDatum, a: &AbelianSubalgebra) -> Result<bool, SphericityError> {
    let wbar = abar(g)?;
    Ok(a.inversions.contains(&wbar))
}

/// Builds and classifies the Cartan matrix `Π_{S,α} = Ŝ⁺(α) ∪ {−α̂}`.
///
/// The elements of `S` are level-one representatives already, so their hat
/// lift is the identity; `α` is lifted to its level-zero representative
/// when its restriction is a g₀-weight, and kept at level one otherwise.
/// Returns the matrix, its classification, and the node roots in order
/// (S⁺(α) sorted, then −α̂).
pub fn pi_s_matrix(
    g: &GradingDatum,
    s: &BTreeSet<RootVector>,
    alpha: &RootVector,
) -> Result<(GeneralizedCartanMatrix, DiagramClass, Vec<RootVector>), SphericityError> {
    let s_plus: Vec<RootVector> = s
        .iter()
        .filter(|gamma| g.pairing(alpha, gamma) > 0)
        .cloned()
        .collect();
    let alpha_hat = g
        .phi0
        .iter()
        .find(|b| g.same_bar(alpha, b))
        .cloned()
        .unwrap_or_else(|| alpha.clone());
    let mut nodes = s_plus;
    nodes.push(alpha_hat.neg());
    let entries: Vec<Vec<i64>> = nodes
        .iter()
        .map(|a| nodes.iter().map(|b| g.pairing(a, b)).collect())
        .collect();
    let gcm = GeneralizedCartanMatrix::new(entries).map_err(SphericityError::Root)?;
    let class = classify_gcm(&gcm).map_err(SphericityError::Root)?;
    match class {
        DiagramClass::Finite { .. } | DiagramClass::Affine { .. } => Ok((gcm, class, nodes)),
        _ => Err(SphericityError::NotFiniteOrAffine),
    }
}

/// Orthogonal subsets of an arbitrary list of weights (used on
/// `C¹_σ \ {α_p}`), the empty set included.
pub fn orthogonal_subsets_of(
    g: &GradingDatum,
    elems: &[RootVector],
) -> Vec<BTreeSet<RootVector>> {
    let mut out = vec![BTreeSet::new()];
    let mut stack: Vec<(usize, BTreeSet<RootVector>)> = vec![(0, BTreeSet::new())];
    while let Some((start, cur)) = stack.pop() {
        for i in start..elems.len() {
            if cur.iter().all(|x| g.system.form.inner(x, &elems[i]) == 0) {
                let mut next = cur.clone();
                next.insert(elems[i].clone());
                out.push(next.clone());
                stack.push((i + 1, next));
            }
        }
    }
    out.sort();
    out
}

/// `C¹_σ \ {α_p}` as a sorted list.
pub fn c1_minus_alpha_p(g: &GradingDatum) -> Result<Vec<RootVector>, SphericityError> {
    let ctx = special_context(g)?;
    Ok(ctx
        .c1_sigma
        .iter()
        .filter(|r| **r != ctx.alpha_p)
        .cloned()
        .collect())
}

/// Maximal orthogonal subsets of `C¹_σ \ {α_p}` (maximality in the
/// orthogonal-extension sense).
pub fn maximal_orthogonal_subsets(
    g: &GradingDatum,
    elems: &[RootVector],
) -> Vec<BTreeSet<RootVector>> {
    orthogonal_subsets_of(g, elems)
        .into_iter()
        .filter(|s| {
            !elems
                .iter()
                .any(|x| !s.contains(x) && s.iter().all(|y| g.system.form.inner(x, y) == 0))
        })
        .collect()
}

/// The weight set `{−η̄ : η ∈ S}` of an orthogonal subset of `C¹_σ`.
pub fn negated_bars(g: &GradingDatum, s: &BTreeSet<RootVector>) -> BTreeSet<RootVector> {
    s.iter().map(|eta| g.bar(&eta.neg()).rep).collect()
}

/// Weighted Dynkin values of the special grading: for a maximal orthogonal
/// `S ⊆ C¹_σ \ {α_p}`, checks `α(h_S) = −2⟨α, α_p^∨⟩` on all of Φ₀ ∪ Φ₁
/// and the vector identity `Σ ⟨α_p, η^∨⟩ η = kδ + 2α_p`, and returns the
/// value map on Π₀.
pub fn weighted_dynkin(
    g: &GradingDatum,
    s: &BTreeSet<RootVector>,
) -> Result<BTreeMap<usize, i64>, SphericityError> {
    let ctx = special_context(g)?;
    let elems = c1_minus_alpha_p(g)?;
    debug_assert!(s.iter().all(|x| elems.contains(x)));
    if let Some(x) = elems
        .iter()
        .find(|x| !s.contains(x) && s.iter().all(|y| g.system.form.inner(x, y) == 0))
    {
        return Err(SphericityError::NotMaximal(x.clone()));
    }
    // h_S through the weight set {−η̄}; grades against any representative.
    let psi = negated_bars(g, s);
    let tg = TripleGrading::new(psi);
    for alpha in g.phi0.iter().chain(&g.phi1) {
        let expect = -2 * g.pairing(alpha, &ctx.alpha_p);
        assert_eq!(tg.grade(g, alpha), expect, "weighted Dynkin closed form");
    }
    // Σ_{η∈S} ⟨α_p, η^∨⟩ η = kδ + 2α_p
    let mut acc = RootVector::zero(g.nodes());
    for eta in s {
        acc = acc.add_scaled(eta, g.pairing(&ctx.alpha_p, eta));
    }
    assert_eq!(
        acc,
        g.kdelta().add_scaled(&ctx.alpha_p, 2),
        "sum identity for maximal orthogonal subsets"
    );
    let mut values = BTreeMap::new();
    for &i in &g.pi0 {
        values.insert(i, tg.grade(g, &g.system.simple(i)));
    }
    Ok(values)
}

/// Report of the grade structure of the special grading `h_S` for a
/// maximal-cardinality orthogonal subset of `C¹_σ \ {α_p}`.
#[derive(Debug, Clone)]
pub struct SpecialGradingReport {
    pub s: BTreeSet<RootVector>,
    /// Weights of Φ₁ of grade 4: exactly the lowest weight `−ᾱ_p`.
    pub grade4_phi1: Vec<RootVector>,
    /// Weights of Φ₁ of grade 3: empty.
    pub grade3_phi1: Vec<RootVector>,
    /// Grades attained on Φ₀.
    pub phi0_grades: BTreeSet<i64>,
    /// Simple roots of the Levi `L₀`: the component nodes other than α_Σ.
    pub pi00: Vec<usize>,
    pub dim_g1_grade4: usize,
}

/// Verifies the grade structure used by the complexity computation:
/// no grade-3 weights in Φ₁, Φ₀ graded within {−2, 0, 2}, and a single
/// grade-4 line `−ᾱ_p` that is orthogonal to all of Π₀₀.
pub fn special_grading_check(g: &GradingDatum) -> Result<SpecialGradingReport, SphericityError> {
    let ctx = special_context(g)?;
    let elems = c1_minus_alpha_p(g)?;
    let max_card = orthogonal_subsets_of(g, &elems)
        .into_iter()
        .max_by_key(|s| s.len())
        .expect("nonempty");
    let psi = negated_bars(g, &max_card);
    let tg = TripleGrading::new(psi);
    let mut grade4 = Vec::new();
    let mut grade3 = Vec::new();
    for w in &g.phi1 {
        match tg.grade(g, w) {
            4 => grade4.push(w.clone()),
            3 => grade3.push(w.clone()),
            _ => {}
        }
    }
    let phi0_grades: BTreeSet<i64> = g.phi0.iter().map(|w| tg.grade(g, w)).collect();
    assert!(grade3.is_empty(), "no grade-3 weights in g1");
    assert!(phi0_grades.iter().all(|v| [-2, 0, 2].contains(v)));
    let lowest = g.bar(&ctx.alpha_p.neg()).rep;
    assert_eq!(grade4, vec![lowest.clone()], "grade-4 line is the lowest weight");
    let mut pi00 = Vec::new();
    for (nodes, a_sigma) in &ctx.components {
        for &i in nodes {
            if i != *a_sigma {
                pi00.push(i);
            }
        }
    }
    pi00.sort_unstable();
    for &i in &pi00 {
        assert_eq!(
            g.system.form.inner(&lowest, &g.system.simple(i)),
            0,
            "grade-4 line is L0-trivial"
        );
    }
    Ok(SpecialGradingReport {
        s: max_card,
        grade4_phi1: grade4,
        grade3_phi1: grade3,
        phi0_grades,
        pi00,
        dim_g1_grade4: 1,
    })
}

/// The identity of the projected sum: over each component Σ,
/// `Σ_{i∈I_Σ} Υ(ηᵢ) = (1/e_Σ) (kδ − 2α_p)_Σ` with the orthogonal
/// projection onto the span of Σ. Checked for a maximal-cardinality
/// orthogonal subset.
pub fn projected_sum_identity(g: &GradingDatum, s: &BTreeSet<RootVector>) -> bool {
    let Ok(ctx) = special_context(g) else {
        return false;
    };
    let target = g.kdelta().add_scaled(&ctx.alpha_p, -2);
    for (nodes, alpha_sigma) in &ctx.components {
        // e_Σ = −⟨α_p, α_Σ^∨⟩, the number of edges joining α_Σ to α_p
        let e_sigma = -g.pairing(&ctx.alpha_p, &g.system.simple(*alpha_sigma));
        // Σ Υ(η) over the η with support meeting Σ
        let mut acc = RootVector::zero(g.nodes());
        for eta in s {
            let ups = eta.sub(&ctx.alpha_p);
            if ups.support().iter().all(|i| nodes.contains(i)) && !ups.is_zero() {
                acc = acc.add(&ups);
            }
        }
        // orthogonal projection of target onto span(Σ)
        let k = nodes.len();
        let a: Vec<Vec<linalg::Rat>> = (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| linalg::rat(g.system.form.gram[nodes[r]][nodes[c]]))
                    .collect()
            })
            .collect();
        let b: Vec<linalg::Rat> = (0..k)
            .map(|r| {
                linalg::rat(
                    g.system
                        .form
                        .inner(&target, &g.system.simple(nodes[r])),
                )
            })
            .collect();
        let Some(coeffs) = linalg::solve(&a, &b) else {
            return false;
        };
        // e_Σ · acc must equal the projection
        for (r, &node) in nodes.iter().enumerate() {
            if linalg::rat(e_sigma * acc.coeff(node)) != coeffs[r] {
                return false;
            }
        }
        // the projection must vanish outside Σ in acc
        for (i, &c) in acc.coeffs.iter().enumerate() {
            if !nodes.contains(&i) && c != 0 {
                return false;
            }
        }
    }
    true
}
