//! Affine root systems of twisted loop algebras and Kac-normal-form
//! gradings.
//!
//! Roots are stored over the affine simple basis `α₀, …, αₙ`. The
//! δ′-coefficient of a root equals its σ-height `Σ sᵢ[α : αᵢ]`, so weights of
//! the eigenspace `g_i` are represented by their canonical real-root
//! representatives with σ-height reduced into `{0, …, m−1}`; δ′ itself is
//! never materialized, keeping all coordinates integral. The bilinear form
//! on bar weights is the restriction of the affine form, hence pairings are
//! computed directly on representatives.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rootsys::{
    affine_candidates, reflection_closure, untwisted_affine_gcm, BilinearForm, FiniteType,
    GeneralizedCartanMatrix, RootSysError, RootVector,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineError {
    IllegalTwist,
    NotCoprime,
    NotInvolution,
    LevelBoundTooSmall,
}

impl fmt::Display for AffineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineError::IllegalTwist => write!(f, "no affine system for this (type, twist) pair"),
            AffineError::NotCoprime => write!(f, "marks must be nonnegative with gcd 1"),
            AffineError::NotInvolution => write!(f, "operation requires an involution (m = 2)"),
            AffineError::LevelBoundTooSmall => write!(f, "level bound too small for this set"),
        }
    }
}

/// Shape of the real-root translation families, per Kac's description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineKind {
    /// `α + nδ` for every finite root `α` and `n ∈ ℤ`.
    Untwisted,
    /// Short roots at every level, long roots at levels divisible by the
    /// twist. Covers `A_{2n-1}^{(2)}`, `D_{n+1}^{(2)}`, `E6^{(2)}`,
    /// `D4^{(3)}`.
    TwistedStd,
    /// `A_{2n}^{(2)}`: additionally the halves of long roots at odd levels.
    TwistedAEven,
}

/// An affine root system `X_N^{(k)}` over the basis `Π̂ = {α₀, …, αₙ}`.
#[derive(Debug, Clone)]
pub struct AffineRootSystem {
    pub gcm: GeneralizedCartanMatrix,
    pub labels: Vec<i64>,
    pub twist: u8,
    pub kind: AffineKind,
    pub form: BilinearForm,
    pub name: String,
    /// δ = Σ aᵢαᵢ as a coefficient vector.
    pub delta: RootVector,
    /// Roots of the finite subsystem on nodes 1..n, as full-width vectors.
    finite_roots: BTreeSet<RootVector>,
    finite_long_norm: i64,
    /// Scaled norm of the longest real root, for the "long" predicate.
    pub long_norm: i64,
}

impl AffineRootSystem {
    fn assemble(
        gcm: GeneralizedCartanMatrix,
        labels: Vec<i64>,
        twist: u8,
        kind: AffineKind,
        name: String,
    ) -> AffineRootSystem {
        let gram = gcm.gram_connected().expect("affine diagram is symmetrizable");
        let form = BilinearForm { gram };
        let nodes = gcm.rank();
        let delta = RootVector::new(labels.clone());
        debug_assert_eq!(form.norm(&delta), 0);
        let simples: Vec<RootVector> = (1..nodes).map(|i| RootVector::unit(nodes, i)).collect();
        let gcm_ref = &gcm;
        let finite_roots = reflection_closure(
            &simples,
            &|v: &RootVector, s: &RootVector| {
                let i = s.support()[0];
                gcm_ref.simple_pairing(v, i)
            },
            1024,
        );
        let finite_long_norm = finite_roots.iter().map(|r| form.norm(r)).max().unwrap();
        let long_norm = (0..nodes)
            .map(|i| form.gram[i][i])
            .max()
            .unwrap();
        AffineRootSystem {
            gcm,
            labels,
            twist,
            kind,
            form,
            name,
            delta,
            finite_roots,
            finite_long_norm,
            long_norm,
        }
    }

    pub fn nodes(&self) -> usize {
        self.gcm.rank()
    }

    pub fn simple(&self, i: usize) -> RootVector {
        RootVector::unit(self.nodes(), i)
    }

    pub fn pairing(&self, lam: &RootVector, mu: &RootVector) -> i64 {
        self.form.pairing(lam, mu).expect("pairing of real roots")
    }

    pub fn is_long(&self, v: &RootVector) -> bool {
        self.form.norm(v) == self.long_norm
    }

    /// Splits `2v = f2 + c2·δ` with `f2` supported on the finite nodes.
    /// Returns `(f2, c2)`; `v = (f2 + c2·δ)/2`.
    fn split2(&self, v: &RootVector) -> (RootVector, i64) {
        let a0 = self.labels[0];
        debug_assert!((2 * v.coeff(0)) % a0 == 0);
        let c2 = 2 * v.coeff(0) / a0;
        let f2 = v.scaled(2).add_scaled(&self.delta, -c2);
        debug_assert_eq!(f2.coeff(0), 0);
        (f2, c2)
    }

    fn halved(v: &RootVector) -> Option<RootVector> {
        if v.coeffs.iter().all(|&c| c % 2 == 0) {
            Some(RootVector::new(v.coeffs.iter().map(|&c| c / 2).collect()))
        } else {
            None
        }
    }

    pub fn is_real_root(&self, v: &RootVector) -> bool {
        if (2 * v.coeff(0)) % self.labels[0] != 0 {
            return false;
        }
        let (f2, c2) = self.split2(v);
        if c2 % 2 == 0 {
            let Some(f) = Self::halved(&f2) else {
                return false;
            };
            if !self.finite_roots.contains(&f) {
                return false;
            }
            let c = c2 / 2;
            match self.kind {
                AffineKind::Untwisted => true,
                AffineKind::TwistedStd | AffineKind::TwistedAEven => {
                    let step = if self.kind == AffineKind::TwistedAEven {
                        2
                    } else {
                        self.twist as i64
                    };
                    self.form.norm(&f) < self.finite_long_norm || c % step == 0
                }
            }
        } else {
            // halves of long finite roots at odd levels, A_{2n}^{(2)} only
            self.kind == AffineKind::TwistedAEven
                && self.finite_roots.contains(&f2)
                && self.form.norm(&f2) == self.finite_long_norm
        }
    }

    pub fn is_imaginary_root(&self, v: &RootVector) -> bool {
        !v.is_zero() && v.is_multiple_of(&self.delta)
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.is_real_root(v) || self.is_imaginary_root(v)
    }

    pub fn is_root_or_zero(&self, v: &RootVector) -> bool {
        v.is_zero() || self.is_root(v)
    }

    /// Root string `μ − pλ, …, μ + qλ` for a real `λ`.
    pub fn root_string(
        &self,
        mu: &RootVector,
        lam: &RootVector,
    ) -> Result<(i64, i64), RootSysError> {
        crate::rootsys::root_string_by(mu, lam, &|v| self.is_root_or_zero(v))
    }
}

/// Constructs the affine root system of the twisted loop algebra of the
/// given finite type with a diagram automorphism of order `eta_order`.
pub fn build_affine(t: FiniteType, eta_order: u8) -> Result<AffineRootSystem, AffineError> {
    match eta_order {
        1 => {
            let (gcm, labels) = untwisted_affine_gcm(t);
            let name = format!("{}(1)", t.name());
            Ok(AffineRootSystem::assemble(
                gcm,
                labels,
                1,
                AffineKind::Untwisted,
                name,
            ))
        }
        2 => {
            let name = format!("{}(2)", t.name());
            let (nodes, target, kind) = match t {
                FiniteType::A(n) if n >= 2 && n % 2 == 0 => {
                    (n / 2 + 1, format!("A{n}(2)"), AffineKind::TwistedAEven)
                }
                FiniteType::A(3) => (3, "D3(2)".into(), AffineKind::TwistedStd),
                FiniteType::A(n) if n >= 5 => {
                    ((n + 1) / 2 + 1, format!("A{n}(2)"), AffineKind::TwistedStd)
                }
                FiniteType::D(n) if n >= 3 => (n, format!("D{n}(2)"), AffineKind::TwistedStd),
                FiniteType::E6 => (5, "E6(2)".into(), AffineKind::TwistedStd),
                _ => return Err(AffineError::IllegalTwist),
            };
            for (cname, gcm, labels, twist) in affine_candidates(nodes) {
                if twist == 2 && cname == target {
                    return Ok(AffineRootSystem::assemble(gcm, labels, 2, kind, name));
                }
            }
            Err(AffineError::IllegalTwist)
        }
        3 => match t {
            FiniteType::D(4) => {
                for (cname, gcm, labels, twist) in affine_candidates(3) {
                    if twist == 3 && cname == "D4(3)" {
                        return Ok(AffineRootSystem::assemble(
                            gcm,
                            labels,
                            3,
                            AffineKind::TwistedStd,
                            String::from("D4(3)"),
                        ));
                    }
                }
                Err(AffineError::IllegalTwist)
            }
            _ => Err(AffineError::IllegalTwist),
        },
        _ => Err(AffineError::IllegalTwist),
    }
}

/// The flip involution of `g ⊕ g` uses the untwisted diagram of `g` with
/// the order-2 factor exchange as its outer part: the bookkeeping twist is
/// 2, so δ′ = δ and σ-height is the δ-level.
pub fn flip_system(t: FiniteType) -> AffineRootSystem {
    let (gcm, labels) = untwisted_affine_gcm(t);
    let name = format!("{}(1)", t.name());
    AffineRootSystem::assemble(gcm, labels, 2, AffineKind::Untwisted, name)
}

/// A finite-order automorphism in Kac normal form `(η; s₀, …, sₙ)` together
/// with the induced split `Π₀ / Π₁` and cached weight windows.
#[derive(Debug, Clone)]
pub struct GradingDatum {
    pub system: AffineRootSystem,
    pub s: Vec<i64>,
    /// Order of the automorphism: `m = k · Σ sᵢ aᵢ`.
    pub m: i64,
    pub pi0: Vec<usize>,
    pub pi1: Vec<usize>,
    pub flip: bool,
    /// All σ-height-0 roots (the root system Δ₀ of g₀).
    pub phi0: Vec<RootVector>,
    /// Positive σ-height-0 roots, Δ₀⁺.
    pub delta0_plus: Vec<RootVector>,
    /// σ-height-1 real roots: canonical representatives of the nonzero
    /// weights of g₁. These are all positive.
    pub phi1: Vec<RootVector>,
}

/// A weight of `g_i` named by its canonical affine representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BarWeight {
    /// A real root with σ-height in `{0, …, m−1}` restricting to the weight.
    pub rep: RootVector,
    /// σ-height of the representative, i.e. the class in ℤ_m.
    pub class_index: i64,
}

pub fn build_grading(system: AffineRootSystem, s: Vec<i64>) -> Result<GradingDatum, AffineError> {
    build_grading_inner(system, s, false)
}

/// Grading of the flip involution of `g ⊕ g`: marks `(1, 0, …, 0)` on the
/// untwisted diagram of `g`, σ-height = δ-level, m = 2.
pub fn flip_grading(t: FiniteType) -> GradingDatum {
    let sys = flip_system(t);
    let mut s = vec![0i64; sys.nodes()];
    s[0] = 1;
    build_grading_inner(sys, s, true).expect("flip grading is valid")
}

fn build_grading_inner(
    system: AffineRootSystem,
    s: Vec<i64>,
    flip: bool,
) -> Result<GradingDatum, AffineError> {
    if s.len() != system.nodes() || s.iter().any(|&x| x < 0) {
        return Err(AffineError::NotCoprime);
    }
    let mut g: i64 = 0;
    for &x in &s {
        g = crate::linalg::gcd(g as i128, x as i128) as i64;
    }
    if g != 1 {
        return Err(AffineError::NotCoprime);
    }
    let height_delta: i64 = s
        .iter()
        .zip(&system.labels)
        .map(|(&si, &ai)| si * ai)
        .sum();
    let m = system.twist as i64 * height_delta;
    let pi0: Vec<usize> = (0..system.nodes()).filter(|&i| s[i] == 0).collect();
    let pi1: Vec<usize> = (0..system.nodes()).filter(|&i| s[i] != 0).collect();
    let mut g = GradingDatum {
        system,
        s,
        m,
        pi0,
        pi1,
        flip,
        phi0: vec![],
        delta0_plus: vec![],
        phi1: vec![],
    };
    g.phi0 = g.roots_with_sigma_height(0);
    g.delta0_plus = g.phi0.iter().filter(|r| r.is_positive()).cloned().collect();
    g.phi1 = g.roots_with_sigma_height(1);
    debug_assert!(g.phi1.iter().all(|r| r.is_positive()));
    Ok(g)
}

impl GradingDatum {
    pub fn nodes(&self) -> usize {
        self.system.nodes()
    }

    /// Stable human-readable identifier, e.g. `D4(1):00100` or
    /// `flip[A2(1)]`.
    pub fn id(&self) -> String {
        let marks: String = self
            .s
            .iter()
            .map(|&x| char::from_digit(x as u32, 10).unwrap_or('?'))
            .collect();
        if self.flip {
            format!("flip[{}]", self.system.name)
        } else {
            format!("{}:{marks}", self.system.name)
        }
    }

    /// `height_σ(α) = Σ sᵢ [α : αᵢ]`, the δ′-coefficient of α.
    pub fn sigma_height(&self, alpha: &RootVector) -> i64 {
        alpha
            .coeffs
            .iter()
            .zip(&self.s)
            .map(|(&c, &si)| c * si)
            .sum()
    }

    /// σ-height of δ, equal to m/k.
    pub fn height_of_delta(&self) -> i64 {
        self.sigma_height(&self.system.delta)
    }

    /// `k δ`, the step that shifts σ-height by m while fixing the bar.
    pub fn kdelta(&self) -> RootVector {
        self.system.delta.scaled(self.system.twist as i64)
    }

    /// All real roots of σ-height exactly `h`.
    pub fn roots_with_sigma_height(&self, h: i64) -> Vec<RootVector> {
        let sys = &self.system;
        let hd = self.height_of_delta();
        assert!(hd >= 1);
        let mut out = BTreeSet::new();
        for f in &sys.finite_roots {
            let hf = self.sigma_height(f);
            if (h - hf) % hd != 0 {
                continue;
            }
            let c = (h - hf) / hd;
            let v = f.add_scaled(&sys.delta, c);
            if sys.is_real_root(&v) {
                out.insert(v);
            }
        }
        if sys.kind == AffineKind::TwistedAEven {
            for f in &sys.finite_roots {
                if sys.form.norm(f) != sys.finite_long_norm {
                    continue;
                }
                // v = (f + t δ)/2 with t odd
                let hf = self.sigma_height(f);
                if (2 * h - hf) % hd != 0 {
                    continue;
                }
                let t = (2 * h - hf) / hd;
                if t % 2 == 0 {
                    continue;
                }
                let doubled = f.add_scaled(&sys.delta, t);
                if let Some(v) = AffineRootSystem::halved(&doubled) {
                    if sys.is_real_root(&v) {
                        out.insert(v);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// All real roots with |σ-height| ≤ L.
    pub fn real_roots_up_to_level(&self, level: i64) -> Vec<RootVector> {
        let mut out = Vec::new();
        for h in -level..=level {
            out.extend(self.roots_with_sigma_height(h));
        }
        out.sort();
        out
    }

    /// Canonical representative of the restriction of a real root: σ-height
    /// reduced into `{0, …, m−1}` by subtracting multiples of kδ.
    pub fn bar(&self, alpha: &RootVector) -> BarWeight {
        let h = self.sigma_height(alpha);
        let class = h.rem_euclid(self.m);
        let t = (h - class) / self.m;
        let rep = alpha.add_scaled(&self.kdelta(), -t);
        debug_assert!(self.system.is_real_root(&rep));
        BarWeight {
            rep,
            class_index: class,
        }
    }

    /// Do two real roots restrict to the same t₀-weight?
    pub fn same_bar(&self, a: &RootVector, b: &RootVector) -> bool {
        let d = a.sub(b);
        d.is_zero() || d.is_multiple_of(&self.system.delta)
    }

    /// Is the restriction of `alpha` a weight of `g₀` (i.e. in Δ₀ ∪ {0})?
    pub fn bar_in_phi0(&self, alpha: &RootVector) -> bool {
        self.phi0.iter().any(|b| self.same_bar(alpha, b))
    }

    /// Is the restriction of `alpha` a nonzero weight of `g₁`?
    pub fn bar_in_phi1(&self, alpha: &RootVector) -> bool {
        self.phi1.iter().any(|b| self.same_bar(alpha, b))
    }

    /// A real root is complex when its restriction lies in Δ₀ ∩ Δ₁.
    pub fn is_complex(&self, alpha: &RootVector) -> bool {
        self.bar_in_phi0(alpha) && self.bar_in_phi1(alpha)
    }

    pub fn pairing(&self, a: &RootVector, b: &RootVector) -> i64 {
        self.system.pairing(a, b)
    }

    /// Biconvexity of a finite set of positive real roots: both the set and
    /// its complement in Δ̂⁺ are closed under root addition (imaginary
    /// summands included). Sound and complete for sets whose σ-heights stay
    /// within `level_bound`.
    pub fn is_biconvex(
        &self,
        set: &BTreeSet<RootVector>,
        level_bound: i64,
    ) -> Result<bool, AffineError> {
        let elems: Vec<&RootVector> = set.iter().collect();
        let max_h = elems
            .iter()
            .map(|r| self.sigma_height(r))
            .max()
            .unwrap_or(0);
        if max_h > level_bound {
            return Err(AffineError::LevelBoundTooSmall);
        }
        // closure of the set itself
        for i in 0..elems.len() {
            for j in i..elems.len() {
                let sum = elems[i].add(elems[j]);
                if self.system.is_root(&sum) && !set.contains(&sum) {
                    return Ok(false);
                }
            }
        }
        // closure of the complement: no a ∈ set decomposes as ζ + ξ with
        // both summands positive roots outside the set
        let mut window: Vec<RootVector> = Vec::new();
        for h in 0..=max_h {
            window.extend(
                self.roots_with_sigma_height(h)
                    .into_iter()
                    .filter(|r| r.is_positive()),
            );
        }
        let hd = self.height_of_delta();
        let mut j = 1i64;
        while j * hd <= max_h {
            window.push(self.system.delta.scaled(j));
            j += 1;
        }
        for a in &elems {
            for zeta in &window {
                let xi = a.sub(zeta);
                if xi.is_zero() || !xi.is_nonneg() {
                    continue;
                }
                if !self.system.is_root(&xi) {
                    continue;
                }
                if !set.contains(zeta) && !set.contains(&xi) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
