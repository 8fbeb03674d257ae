//! Parametrization of Borel orbits in a Borel-stable abelian subalgebra of
//! the odd part: orthogonal subsets of the weight set, orbit dimensions,
//! the open-orbit representative, and generic normal forms.
//!
//! The machinery is shared between two ambients: the graded (affine) picture
//! where weights are level-1 representatives, and the finite Hermitian
//! picture where weights are honest roots. [`OrbitAmbient`] abstracts the
//! few membership predicates that differ.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::affine::GradingDatum;
use crate::rootsys::{dominance_leq, BilinearForm, RootVector};

/// Ambient data for orbit combinatorics on a set of g₁-weights.
pub trait OrbitAmbient {
    fn form(&self) -> &BilinearForm;
    /// Positive roots of g₀.
    fn phi0_plus(&self) -> &[RootVector];
    /// All nonzero weights of g₁ (canonical representatives).
    fn phi1(&self) -> &[RootVector];
    /// Indices of the simple roots of g₀ in the ambient basis.
    fn pi0(&self) -> &[usize];
    /// Membership test for real roots of the ambient system.
    fn is_real_root(&self, v: &RootVector) -> bool;
    /// Does `v` restrict to the zero weight (zero or an imaginary root)?
    fn is_delta_multiple(&self, v: &RootVector) -> bool;

    fn leq0(&self, a: &RootVector, b: &RootVector) -> bool {
        dominance_leq(a, b, self.pi0())
    }
}

impl OrbitAmbient for GradingDatum {
    fn form(&self) -> &BilinearForm {
        &self.system.form
    }
    fn phi0_plus(&self) -> &[RootVector] {
        &self.delta0_plus
    }
    fn phi1(&self) -> &[RootVector] {
        &self.phi1
    }
    fn pi0(&self) -> &[usize] {
        &self.pi0
    }
    fn is_real_root(&self, v: &RootVector) -> bool {
        self.system.is_real_root(v)
    }
    fn is_delta_multiple(&self, v: &RootVector) -> bool {
        v.is_zero() || v.is_multiple_of(&self.system.delta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyViolation {
    /// α and −α both occur.
    A1 { alpha: RootVector },
    /// α + β is a weight of g₂.
    A2 { alpha: RootVector, beta: RootVector },
    /// α + γ lies in Φ₁ but not in Ψ.
    A3 { alpha: RootVector, gamma: RootVector },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitError {
    NotInPsi(RootVector),
    NotDistinct,
    PropertiesViolated(PropertyViolation),
}

impl fmt::Display for OrbitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitError::NotInPsi(v) => write!(f, "weight {:?} is not in Ψ", v.coeffs),
            OrbitError::NotDistinct => write!(f, "weights must be distinct"),
            OrbitError::PropertiesViolated(p) => write!(f, "weight set violates {p:?}"),
        }
    }
}

/// Checks the defining properties of the weight set of a B₀-stable abelian
/// subalgebra: (A1) no weight together with its negative, (A2) no two
/// weights summing into Φ₂, (A3) upward closure under Φ₀⁺-steps inside Φ₁.
pub fn check_a1a2a3<A: OrbitAmbient + ?Sized>(
    amb: &A,
    psi: &BTreeSet<RootVector>,
) -> Result<(), PropertyViolation> {
    let elems: Vec<&RootVector> = psi.iter().collect();
    for (i, a) in elems.iter().enumerate() {
        for b in elems.iter().skip(i) {
            let sum = a.add(b);
            if a != b && amb.is_delta_multiple(&sum) {
                return Err(PropertyViolation::A1 { alpha: (*a).clone() });
            }
            if amb.is_real_root(&sum) {
                return Err(PropertyViolation::A2 {
                    alpha: (*a).clone(),
                    beta: (*b).clone(),
                });
            }
        }
    }
    for a in &elems {
        for gamma in amb.phi0_plus() {
            let up = a.add(gamma);
            if amb.is_real_root(&up) && !psi.contains(&up) {
                return Err(PropertyViolation::A3 {
                    alpha: (*a).clone(),
                    gamma: gamma.clone(),
                });
            }
        }
    }
    Ok(())
}

/// The three equivalent orthogonality tests for distinct weights of Ψ:
/// vanishing pairing, difference outside Φ₀, and strong orthogonality of
/// the level-one lifts. Their agreement is asserted.
pub fn is_orthogonal_pair<A: OrbitAmbient + ?Sized>(
    amb: &A,
    psi: &BTreeSet<RootVector>,
    alpha: &RootVector,
    beta: &RootVector,
) -> Result<bool, OrbitError> {
    if alpha == beta {
        return Err(OrbitError::NotDistinct);
    }
    for v in [alpha, beta] {
        if !psi.contains(v) {
            return Err(OrbitError::NotInPsi(v.clone()));
        }
    }
    let by_form = amb.form().inner(alpha, beta) == 0;
    let diff = alpha.sub(beta);
    let by_difference = !amb.is_real_root(&diff);
    let sum = alpha.add(beta);
    let strongly = !amb.is_real_root(&diff)
        && !amb.is_real_root(&sum)
        && !amb.is_delta_multiple(&sum)
        && by_form;
    assert_eq!(by_form, by_difference, "orthogonality routes disagree");
    assert_eq!(by_form, strongly, "strong orthogonality route disagrees");
    Ok(by_form)
}

fn orthogonal(amb: &(impl OrbitAmbient + ?Sized), a: &RootVector, b: &RootVector) -> bool {
    amb.form().inner(a, b) == 0
}

/// All orthogonal subsets of Ψ, the empty set included.
pub fn orthogonal_subsets<A: OrbitAmbient + ?Sized>(
    amb: &A,
    psi: &BTreeSet<RootVector>,
) -> Vec<BTreeSet<RootVector>> {
    let elems: Vec<RootVector> = psi.iter().cloned().collect();
    let mut out = vec![BTreeSet::new()];
    let mut stack: Vec<(usize, BTreeSet<RootVector>)> = vec![(0, BTreeSet::new())];
    while let Some((start, cur)) = stack.pop() {
        for i in start..elems.len() {
            if cur.iter().all(|x| orthogonal(amb, x, &elems[i])) {
                let mut next = cur.clone();
                next.insert(elems[i].clone());
                out.push(next.clone());
                stack.push((i + 1, next));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `Ψ_S`: weights reachable from S by adding a single positive g₀-root.
pub fn psi_s<A: OrbitAmbient + ?Sized>(
    amb: &A,
    s: &BTreeSet<RootVector>,
) -> BTreeSet<RootVector> {
    let mut out = BTreeSet::new();
    for beta in amb.phi1() {
        for alpha in s {
            let diff = beta.sub(alpha);
            if diff.is_positive() && amb.is_real_root(&diff) {
                out.insert(beta.clone());
                break;
            }
        }
    }
    out
}

/// The minimal elements of a set of weights under the dominance order.
pub fn min_elements<A: OrbitAmbient + ?Sized>(
    amb: &A,
    set: &BTreeSet<RootVector>,
) -> BTreeSet<RootVector> {
    set.iter()
        .filter(|a| !set.iter().any(|b| *b != **a && amb.leq0(b, a)))
        .cloned()
        .collect()
}

/// The canonical representative of the open B₀-orbit: start from the
/// minimal weights and repeatedly adjoin the minimal weights not yet
/// absorbed by the staircase `S ∪ Ψ_S`.
pub fn open_orbit_rep<A: OrbitAmbient + ?Sized>(
    amb: &A,
    psi: &BTreeSet<RootVector>,
) -> BTreeSet<RootVector> {
    generic_normal_form(amb, psi, psi)
}

/// Combinatorial normal form of a generic element with the given support:
/// iteratively take minimal weights and prune the staircase Ψ_S. Exact for
/// generic coefficients only.
pub fn generic_normal_form<A: OrbitAmbient + ?Sized>(
    amb: &A,
    psi: &BTreeSet<RootVector>,
    support: &BTreeSet<RootVector>,
) -> BTreeSet<RootVector> {
    debug_assert!(support.is_subset(psi));
    let mut s: BTreeSet<RootVector> = BTreeSet::new();
    let mut t: BTreeSet<RootVector> = support.clone();
    loop {
        let fresh: BTreeSet<RootVector> = t.difference(&s).cloned().collect();
        if fresh.is_empty() {
            return s;
        }
        s.extend(min_elements(amb, &fresh));
        let stairs = psi_s(amb, &s);
        t = t.difference(&stairs).cloned().collect();
    }
}

/// One record per B₀-orbit of the subalgebra with weight set Ψ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub rep: BTreeSet<RootVector>,
    pub psi_s: BTreeSet<RootVector>,
    pub dim: usize,
    pub is_open: bool,
}

/// Enumerates the B₀-orbits: one per orthogonal subset of Ψ, with the
/// dimension `|S| + |Ψ_S|`; exactly one orbit is open, namely the one whose
/// representative is the canonical staircase set.
pub fn enumerate_orbits<A: OrbitAmbient + ?Sized>(
    amb: &A,
    psi: &BTreeSet<RootVector>,
) -> Result<Vec<OrbitRecord>, OrbitError> {
    check_a1a2a3(amb, psi).map_err(OrbitError::PropertiesViolated)?;
    let open = open_orbit_rep(amb, psi);
    let mut records = Vec::new();
    let mut open_count = 0;
    for s in orthogonal_subsets(amb, psi) {
        let stairs = psi_s(amb, &s);
        debug_assert!(s.is_disjoint(&stairs));
        let dim = s.len() + stairs.len();
        let is_open = dim == psi.len();
        if is_open {
            open_count += 1;
            assert_eq!(s, open, "open orbit must be the canonical representative");
        }
        records.push(OrbitRecord {
            rep: s,
            psi_s: stairs,
            dim,
            is_open,
        });
    }
    assert_eq!(open_count, 1, "exactly one open orbit");
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::HermitianPair;
    use crate::rootsys::{FiniteRootSystem, FiniteType};

    fn a3_hermitian() -> HermitianPair {
        let sys = FiniteRootSystem::from_type(FiniteType::A(3));
        HermitianPair::new(&sys, 2).unwrap()
    }

    fn v(c: &[i64]) -> RootVector {
        RootVector::new(c.to_vec())
    }

    #[test]
    fn orthogonality_examples() {
        // Hermitian (A3, α2), Ψ = Φ₁⁺ (the abelian nilradical).
        let p = a3_hermitian();
        let psi: BTreeSet<RootVector> = p.phi1plus.iter().cloned().collect();
        let alpha2 = v(&[0, 1, 0]);
        let theta = v(&[1, 1, 1]);
        let a12 = v(&[1, 1, 0]);
        assert_eq!(is_orthogonal_pair(&p, &psi, &alpha2, &theta), Ok(true));
        assert_eq!(is_orthogonal_pair(&p, &psi, &alpha2, &a12), Ok(false));
        assert_eq!(
            is_orthogonal_pair(&p, &psi, &alpha2, &alpha2),
            Err(OrbitError::NotDistinct)
        );
        let outside = v(&[0, -1, 0]);
        assert_eq!(
            is_orthogonal_pair(&p, &psi, &alpha2, &outside),
            Err(OrbitError::NotInPsi(outside))
        );
    }

    #[test]
    fn orbit_enumeration_a3() {
        let p = a3_hermitian();
        let psi: BTreeSet<RootVector> = p.phi1plus.iter().cloned().collect();
        let records = enumerate_orbits(&p, &psi).unwrap();
        // ∅, four singletons, {α2, θ}, {α1+α2, α2+α3}
        assert_eq!(records.len(), 7);
        let open: Vec<_> = records.iter().filter(|r| r.is_open).collect();
        assert_eq!(open.len(), 1);
        assert_eq!(open[0].dim, 4);
        let expected: BTreeSet<RootVector> = [v(&[0, 1, 0]), v(&[1, 1, 1])].into_iter().collect();
        assert_eq!(open[0].rep, expected);
    }

    #[test]
    fn open_rep_and_normal_form() {
        let p = a3_hermitian();
        let psi: BTreeSet<RootVector> = p.phi1plus.iter().cloned().collect();
        let open = open_orbit_rep(&p, &psi);
        let expected: BTreeSet<RootVector> = [v(&[0, 1, 0]), v(&[1, 1, 1])].into_iter().collect();
        assert_eq!(open, expected);
        // empty Ψ: empty representative
        assert!(open_orbit_rep(&p, &BTreeSet::new()).is_empty());
        // full support is generic
        assert_eq!(generic_normal_form(&p, &psi, &psi), expected);
        // an orthogonal antichain is its own normal form
        let anti: BTreeSet<RootVector> = [v(&[1, 1, 0]), v(&[0, 1, 1])].into_iter().collect();
        assert_eq!(generic_normal_form(&p, &psi, &anti), anti);
    }

    #[test]
    fn property_violations_detected() {
        let p = a3_hermitian();
        // Ψ ∪ {−α} violates (A1)
        let mut psi: BTreeSet<RootVector> = p.phi1plus.iter().cloned().collect();
        psi.insert(v(&[0, -1, 0]));
        assert!(matches!(
            check_a1a2a3(&p, &psi),
            Err(PropertyViolation::A1 { .. }) | Err(PropertyViolation::A2 { .. })
        ));
        // dropping a maximal weight from Φ₁⁺ violates (A3)
        let mut psi: BTreeSet<RootVector> = p.phi1plus.iter().cloned().collect();
        psi.remove(&v(&[1, 1, 1]));
        assert!(matches!(
            check_a1a2a3(&p, &psi),
            Err(PropertyViolation::A3 { .. })
        ));
    }

    #[test]
    fn single_weight_orbits() {
        let p = a3_hermitian();
        let psi: BTreeSet<RootVector> = [v(&[1, 1, 1])].into_iter().collect();
        let records = enumerate_orbits(&p, &psi).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].rep.len() + records[1].rep.len(), 1);
    }
}
