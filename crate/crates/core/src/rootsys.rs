//! Exact finite root-system arithmetic.
//!
//! Roots and weights are integer coefficient vectors over a fixed simple
//! basis. The invariant form is carried as an integer Gram matrix, scaled so
//! that every entry is integral; pairings `⟨λ, μ^∨⟩ = 2(λ,μ)/(μ,μ)` are
//! scale-free and exact. Generalized Cartan matrices follow the convention
//! `entry(i, j) = ⟨αᵢ, αⱼ^∨⟩`, so the label vector of an affine matrix spans
//! the kernel of the transpose.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{self, SymVerdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSysError {
    InvalidCartan(&'static str),
    NotSymmetrizable,
    NotFiniteType,
    IsotropicCoroot,
    NonIntegralPairing,
    SameRootLine,
    NotSimplyLaced,
    NotDominated,
    UnknownType(String),
}

impl fmt::Display for RootSysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSysError::InvalidCartan(msg) => write!(f, "invalid Cartan matrix: {msg}"),
            RootSysError::NotSymmetrizable => write!(f, "matrix is not symmetrizable"),
            RootSysError::NotFiniteType => write!(f, "Cartan matrix is not of finite type"),
            RootSysError::IsotropicCoroot => write!(f, "coroot of an isotropic vector"),
            RootSysError::NonIntegralPairing => write!(f, "pairing is not an integer"),
            RootSysError::SameRootLine => write!(f, "roots lie on the same line"),
            RootSysError::NotSimplyLaced => write!(f, "system is not simply laced"),
            RootSysError::NotDominated => write!(f, "difference is not a sum of positive roots"),
            RootSysError::UnknownType(s) => write!(f, "unknown type label: {s}"),
        }
    }
}

/// A root or weight as an exact integer coefficient vector over the simple
/// basis of the ambient system. Derived `Ord` is lexicographic on the
/// coefficients, which is the canonical ordering used for all set outputs.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    pub coeffs: Vec<i64>,
}

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVector { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        RootVector { coeffs: vec![0; dim] }
    }

    /// The i-th simple basis vector of an ambient of dimension `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i] = 1;
        RootVector { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        self.add_scaled(other, -1)
    }

    pub fn add_scaled(&self, other: &RootVector, k: i64) -> RootVector {
        debug_assert_eq!(self.dim(), other.dim());
        RootVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a + k * b)
                .collect(),
        }
    }

    pub fn neg(&self) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().map(|&c| k * c).collect(),
        }
    }

    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_positive(&self) -> bool {
        self.is_nonneg() && !self.is_zero()
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.coeffs[i] != 0).collect()
    }

    /// True when `self` lies on the rational line spanned by `other`.
    pub fn is_multiple_of(&self, other: &RootVector) -> bool {
        if other.is_zero() {
            return self.is_zero();
        }
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                if self.coeffs[i] * other.coeffs[j] != self.coeffs[j] * other.coeffs[i] {
                    return false;
                }
            }
        }
        true
    }
}

/// Symmetric bilinear form as a scaled integer Gram matrix of the simple
/// basis. Only ratios of form values are ever consumed, so the overall
/// scale is irrelevant; it is chosen to clear denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Vec<Vec<i64>>,
}

impl BilinearForm {
    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn inner(&self, a: &RootVector, b: &RootVector) -> i64 {
        let mut acc = 0i64;
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                if bj != 0 {
                    acc += ai * bj * self.gram[i][j];
                }
            }
        }
        acc
    }

    pub fn norm(&self, a: &RootVector) -> i64 {
        self.inner(a, a)
    }

    /// `⟨λ, μ^∨⟩ = 2(λ,μ)/(μ,μ)`.
    pub fn pairing(&self, lam: &RootVector, mu: &RootVector) -> Result<i64, RootSysError> {
        let nm = self.norm(mu);
        if nm == 0 {
            return Err(RootSysError::IsotropicCoroot);
        }
        let num = 2 * self.inner(lam, mu);
        if num % nm != 0 {
            return Err(RootSysError::NonIntegralPairing);
        }
        Ok(num / nm)
    }

    /// Reflection of `v` in the hyperplane of a non-isotropic `root`.
    pub fn reflect(&self, v: &RootVector, root: &RootVector) -> RootVector {
        let k = self.pairing(v, root).expect("reflection in isotropic root");
        v.add_scaled(root, -k)
    }
}

/// Generalized Cartan matrix with `entry(i, j) = ⟨αᵢ, αⱼ^∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl GeneralizedCartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, RootSysError> {
        let n = entries.len();
        if n == 0 {
            return Err(RootSysError::InvalidCartan("empty matrix"));
        }
        for row in &entries {
            if row.len() != n {
                return Err(RootSysError::InvalidCartan("not square"));
            }
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(RootSysError::InvalidCartan("diagonal entry is not 2"));
            }
            for j in 0..n {
                if i != j {
                    if entries[i][j] > 0 {
                        return Err(RootSysError::InvalidCartan("positive off-diagonal entry"));
                    }
                    if (entries[i][j] == 0) != (entries[j][i] == 0) {
                        return Err(RootSysError::InvalidCartan("zero pattern is not symmetric"));
                    }
                }
            }
        }
        Ok(GeneralizedCartanMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `⟨v, αᵢ^∨⟩` for `v` expressed over the simple basis.
    pub fn simple_pairing(&self, v: &RootVector, i: usize) -> i64 {
        v.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.entries[j][i])
            .sum()
    }

    /// Connected components of the Dynkin graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if !seen[j] && self.entries[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn submatrix(&self, nodes: &[usize]) -> GeneralizedCartanMatrix {
        let entries = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        GeneralizedCartanMatrix { entries }
    }

    /// Positive primitive integer vector `d` with `entry(i,j)·d_j` symmetric,
    /// i.e. `d_j` proportional to `(α_j, α_j)`. Fails on non-symmetrizable
    /// input. Requires a connected matrix.
    pub(crate) fn symmetrizer_connected(&self) -> Result<Vec<i64>, RootSysError> {
        let n = self.rank();
        let mut d: Vec<Option<linalg::Rat>> = vec![None; n];
        d[0] = Some(linalg::rat(1));
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || self.entries[i][j] == 0 {
                    continue;
                }
                // a_ij d_j = a_ji d_i  =>  d_j = d_i a_ji / a_ij
                let dj = di * linalg::rat(self.entries[j][i]) / linalg::rat(self.entries[i][j]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(old) => {
                        if old != dj {
                            return Err(RootSysError::NotSymmetrizable);
                        }
                    }
                }
            }
        }
        let vals: Vec<linalg::Rat> = d.into_iter().map(|x| x.expect("connected")).collect();
        Ok(linalg::primitive_integer(&vals))
    }

    /// Scaled Gram matrix `entry(i,j)·d_j` of a connected Cartan matrix.
    pub(crate) fn gram_connected(&self) -> Result<Vec<Vec<i64>>, RootSysError> {
        let d = self.symmetrizer_connected()?;
        let n = self.rank();
        let gram: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| self.entries[i][j] * d[j]).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(RootSysError::NotSymmetrizable);
                }
            }
        }
        Ok(gram)
    }

    /// All permutations π of the nodes with `entry(π i, π j) = entry(i, j)`.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut image: Vec<usize> = Vec::new();
        let mut used = vec![false; n];
        fn extend(
            n: usize,
            a: &GeneralizedCartanMatrix,
            image: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            let i = image.len();
            if i == n {
                out.push(image.clone());
                return;
            }
            for cand in 0..n {
                if used[cand] {
                    continue;
                }
                let ok = (0..i).all(|k| {
                    a.entries[image[k]][cand] == a.entries[k][i]
                        && a.entries[cand][image[k]] == a.entries[i][k]
                }) && a.entries[cand][cand] == a.entries[i][i];
                if ok {
                    used[cand] = true;
                    image.push(cand);
                    extend(n, a, image, used, out);
                    image.pop();
                    used[cand] = false;
                }
            }
        }
        extend(n, self, &mut image, &mut used, &mut out);
        out
    }

    /// True when some relabeling of `self` equals `other`.
    pub fn is_isomorphic_to(&self, other: &GeneralizedCartanMatrix) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        let n = self.rank();
        // signature: multiset of (out, in) edge pairs
        let sig = |g: &GeneralizedCartanMatrix, i: usize| -> Vec<(i64, i64)> {
            let mut s: Vec<(i64, i64)> = (0..n)
                .filter(|&j| j != i && g.entries[i][j] != 0)
                .map(|j| (g.entries[i][j], g.entries[j][i]))
                .collect();
            s.sort_unstable();
            s
        };
        let sig_self: Vec<_> = (0..n).map(|i| sig(self, i)).collect();
        let sig_other: Vec<_> = (0..n).map(|i| sig(other, i)).collect();
        // map position i of `other` to image[i] in `self`
        let mut image: Vec<usize> = Vec::new();
        let mut used = vec![false; n];
        fn extend(
            n: usize,
            a: &GeneralizedCartanMatrix,
            b: &GeneralizedCartanMatrix,
            sig_a: &[Vec<(i64, i64)>],
            sig_b: &[Vec<(i64, i64)>],
            image: &mut Vec<usize>,
            used: &mut [bool],
        ) -> bool {
            let i = image.len();
            if i == n {
                return true;
            }
            for cand in 0..n {
                if used[cand] || sig_a[cand] != sig_b[i] {
                    continue;
                }
                let ok = (0..i).all(|k| {
                    a.entries[image[k]][cand] == b.entries[k][i]
                        && a.entries[cand][image[k]] == b.entries[i][k]
                });
                if ok {
                    used[cand] = true;
                    image.push(cand);
                    if extend(n, a, b, sig_a, sig_b, image, used) {
                        return true;
                    }
                    image.pop();
                    used[cand] = false;
                }
            }
            false
        }
        extend(n, self, other, &sig_self, &sig_other, &mut image, &mut used)
    }
}

/// Classification verdict for a generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramClass {
    Finite { name: String },
    Affine { name: String, labels: Vec<i64>, twist: u8 },
    Indefinite,
    /// Decomposable input, classified blockwise in node order.
    Product(Vec<DiagramClass>),
}

impl DiagramClass {
    pub fn is_finite(&self) -> bool {
        matches!(self, DiagramClass::Finite { .. })
    }
    pub fn is_affine(&self) -> bool {
        matches!(self, DiagramClass::Affine { .. })
    }
}

/// Named finite types with Bourbaki node numbering (1-based in labels,
/// 0-based in storage).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiniteType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl FiniteType {
    pub fn rank(&self) -> usize {
        match *self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::C(n) | FiniteType::D(n) => n,
            FiniteType::E6 => 6,
            FiniteType::E7 => 7,
            FiniteType::E8 => 8,
            FiniteType::F4 => 4,
            FiniteType::G2 => 2,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            FiniteType::A(n) => format!("A{n}"),
            FiniteType::B(n) => format!("B{n}"),
            FiniteType::C(n) => format!("C{n}"),
            FiniteType::D(n) => format!("D{n}"),
            FiniteType::E6 => "E6".into(),
            FiniteType::E7 => "E7".into(),
            FiniteType::E8 => "E8".into(),
            FiniteType::F4 => "F4".into(),
            FiniteType::G2 => "G2".into(),
        }
    }

    pub fn parse(s: &str) -> Result<FiniteType, RootSysError> {
        let bad = || RootSysError::UnknownType(String::from(s));
        if s.len() < 2 {
            return Err(bad());
        }
        let (fam, num) = s.split_at(1);
        let n: usize = num.parse().map_err(|_| bad())?;
        let t = match (fam, n) {
            ("A" | "a", n) if n >= 1 => FiniteType::A(n),
            ("B" | "b", n) if n >= 2 => FiniteType::B(n),
            ("C" | "c", n) if n >= 2 => FiniteType::C(n),
            ("D" | "d", n) if n >= 3 => FiniteType::D(n),
            ("E" | "e", 6) => FiniteType::E6,
            ("E" | "e", 7) => FiniteType::E7,
            ("E" | "e", 8) => FiniteType::E8,
            ("F" | "f", 4) => FiniteType::F4,
            ("G" | "g", 2) => FiniteType::G2,
            _ => return Err(bad()),
        };
        Ok(t)
    }

    pub fn root_count(&self) -> usize {
        match *self {
            FiniteType::A(n) => n * (n + 1),
            FiniteType::B(n) | FiniteType::C(n) => 2 * n * n,
            FiniteType::D(n) => 2 * n * (n - 1),
            FiniteType::E6 => 72,
            FiniteType::E7 => 126,
            FiniteType::E8 => 240,
            FiniteType::F4 => 48,
            FiniteType::G2 => 12,
        }
    }

    /// Coefficients of the highest root over the Bourbaki simple basis.
    pub fn highest_root_coeffs(&self) -> Vec<i64> {
        match *self {
            FiniteType::A(n) => vec![1; n],
            FiniteType::B(n) => {
                let mut v = vec![2; n];
                v[0] = 1;
                v
            }
            FiniteType::C(n) => {
                let mut v = vec![2; n];
                v[n - 1] = 1;
                v
            }
            FiniteType::D(n) => {
                let mut v = vec![2; n];
                v[0] = 1;
                v[n - 2] = 1;
                v[n - 1] = 1;
                if n == 3 {
                    // D3 = A3 with Bourbaki fork at node 1
                    return vec![1, 1, 1];
                }
                v
            }
            FiniteType::E6 => vec![1, 2, 2, 3, 2, 1],
            FiniteType::E7 => vec![2, 2, 3, 4, 3, 2, 1],
            FiniteType::E8 => vec![2, 3, 4, 6, 5, 4, 3, 2],
            FiniteType::F4 => vec![2, 3, 4, 2],
            FiniteType::G2 => vec![3, 2],
        }
    }

    /// Bourbaki Cartan matrix, convention `entry(i,j) = ⟨αᵢ, αⱼ^∨⟩`.
    pub fn cartan(&self) -> GeneralizedCartanMatrix {
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let single = |i: usize, j: usize, m: &mut Vec<Vec<i64>>| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match *self {
            FiniteType::A(_) => {
                for i in 0..n - 1 {
                    single(i, i + 1, &mut m);
                }
            }
            FiniteType::B(_) => {
                for i in 0..n - 2 {
                    single(i, i + 1, &mut m);
                }
                // α_n short: ⟨α_{n-1}, α_n^∨⟩ = -2
                m[n - 2][n - 1] = -2;
                m[n - 1][n - 2] = -1;
            }
            FiniteType::C(_) => {
                for i in 0..n - 2 {
                    single(i, i + 1, &mut m );
                }
                // α_n long: ⟨α_n, α_{n-1}^∨⟩ = -2
                m[n - 2][n - 1] = -1;
                m[n - 1][n - 2] = -2;
            }
            FiniteType::D(_) => {
                if n == 3 {
                    single(0, 1, &mut m);
                    single(0, 2, &mut m);
                } else {
                    for i in 0..n - 3 {
                        single(i, i + 1, &mut m);
                    }
                    single(n - 3, n - 2, &mut m);
                    single(n - 3, n - 1, &mut m);
                }
            }
            FiniteType::E6 | FiniteType::E7 | FiniteType::E8 => {
                // Bourbaki: chain 1-3-4-5-...-n, branch 2 attached to 4.
                single(0, 2, &mut m);
                single(1, 3, &mut m);
                for i in 2..n - 1 {
                    single(i, i + 1, &mut m);
                }
            }
            FiniteType::F4 => {
                single(0, 1, &mut m);
                single(2, 3, &mut m);
                // α3, α4 short: ⟨α2, α3^∨⟩ = -2
                m[1][2] = -2;
                m[2][1] = -1;
            }
            FiniteType::G2 => {
                // Bourbaki: α1 short, α2 long: ⟨α2, α1^∨⟩ = -3
                m[0][1] = -1;
                m[1][0] = -3;
            }
        }
        GeneralizedCartanMatrix { entries: m }
    }
}

/// `λ ≤₀ μ`: the difference `μ − λ` is a nonnegative integer combination of
/// the simple roots indexed by `pi0` (equivalently of ℕΦ₀⁺).
pub fn dominance_leq(lam: &RootVector, mu: &RootVector, pi0: &[usize]) -> bool {
    let diff = mu.sub(lam);
    for (i, &c) in diff.coeffs.iter().enumerate() {
        if pi0.contains(&i) {
            if c < 0 {
                return false;
            }
        } else if c != 0 {
            return false;
        }
    }
    true
}

/// Closure of a set of simple roots under their own reflections, using the
/// supplied pairing. Terminates only for finite subsystems; `cap` guards
/// against misuse.
pub fn reflection_closure(
    simples: &[RootVector],
    pairing: &dyn Fn(&RootVector, &RootVector) -> i64,
    cap: usize,
) -> BTreeSet<RootVector> {
    let mut roots: BTreeSet<RootVector> = simples.iter().cloned().collect();
    let mut frontier: Vec<RootVector> = simples.to_vec();
    while let Some(r) = frontier.pop() {
        for s in simples {
            let k = pairing(&r, s);
            let image = r.add_scaled(s, -k);
            if roots.insert(image.clone()) {
                frontier.push(image);
            }
        }
        assert!(roots.len() <= cap, "reflection closure exceeded cap; infinite subsystem?");
    }
    roots
}

/// A finite root system: Cartan matrix, full root set, scaled Gram form.
#[derive(Debug, Clone)]
pub struct FiniteRootSystem {
    pub cartan: GeneralizedCartanMatrix,
    pub form: BilinearForm,
    /// All roots, lexicographically sorted.
    pub roots: Vec<RootVector>,
    /// Positive roots, lexicographically sorted.
    pub positive: Vec<RootVector>,
    root_set: BTreeSet<RootVector>,
    pub name: String,
    pub components: Vec<Vec<usize>>,
    /// Scaled squared length of long roots (maximal over each component;
    /// components are normalized to share it).
    pub long_norm: i64,
    pub simply_laced: bool,
    /// Highest root of an irreducible system.
    pub highest: Option<RootVector>,
}

impl FiniteRootSystem {
    pub fn from_type(t: FiniteType) -> FiniteRootSystem {
        let sys = generate_roots(&t.cartan()).expect("named finite type");
        debug_assert_eq!(sys.roots.len(), t.root_count());
        sys
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn simple(&self, i: usize) -> RootVector {
        RootVector::unit(self.rank(), i)
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.root_set.contains(v)
    }

    pub fn is_root_or_zero(&self, v: &RootVector) -> bool {
        v.is_zero() || self.is_root(v)
    }

    pub fn pairing(&self, lam: &RootVector, mu: &RootVector) -> i64 {
        self.form.pairing(lam, mu).expect("pairing of roots")
    }

    pub fn inner(&self, a: &RootVector, b: &RootVector) -> i64 {
        self.form.inner(a, b)
    }

    pub fn norm(&self, a: &RootVector) -> i64 {
        self.form.norm(a)
    }

    pub fn is_long(&self, a: &RootVector) -> bool {
        self.norm(a) == self.long_norm
    }

    pub fn reflect(&self, v: &RootVector, root: &RootVector) -> RootVector {
        self.form.reflect(v, root)
    }

    /// Root string `μ − pλ, …, μ + qλ` through `μ` in the `λ` direction.
    pub fn root_string(
        &self,
        mu: &RootVector,
        lam: &RootVector,
    ) -> Result<(i64, i64), RootSysError> {
        root_string_by(mu, lam, &|v| self.is_root_or_zero(v))
    }

    /// Word for the longest element of the parabolic generated by `nodes`,
    /// as a sequence of simple-reflection indices acting left to right.
    pub fn longest_element_word(&self, nodes: &[usize]) -> Vec<usize> {
        let two_rho: RootVector = self
            .positive
            .iter()
            .filter(|r| r.support().iter().all(|i| nodes.contains(i)))
            .fold(RootVector::zero(self.rank()), |acc, r| acc.add(r));
        let mut v = two_rho;
        let mut word = Vec::new();
        loop {
            let mut moved = false;
            for &i in nodes {
                let k = self.cartan.simple_pairing(&v, i);
                if k > 0 {
                    v = v.add_scaled(&self.simple(i), -k);
                    word.push(i);
                    moved = true;
                }
            }
            if !moved {
                return word;
            }
        }
    }

    /// Applies a word of simple reflections (left to right) to a vector.
    pub fn apply_word(&self, word: &[usize], v: &RootVector) -> RootVector {
        let mut v = v.clone();
        for &i in word {
            let k = self.cartan.simple_pairing(&v, i);
            v = v.add_scaled(&self.simple(i), -k);
        }
        v
    }

    /// Writes `β′ − β` as a sum of positive pairwise orthogonal roots
    /// `γ₁ … γ_m` with every partial sum `β + γ₁ + … + γᵢ` a root.
    /// Requires a simply-laced system.
    pub fn decompose_orthogonal(
        &self,
        beta: &RootVector,
        beta_prime: &RootVector,
    ) -> Result<Vec<RootVector>, RootSysError> {
        if !self.simply_laced {
            return Err(RootSysError::NotSimplyLaced);
        }
        let diff = beta_prime.sub(beta);
        if diff.is_zero() {
            return Ok(vec![]);
        }
        if !diff.is_nonneg() {
            return Err(RootSysError::NotDominated);
        }
        // Shortest chain of positive-root additions from β to β′ staying
        // inside the root set; minimal length forces pairwise orthogonality.
        let mut parent: alloc::collections::BTreeMap<RootVector, (RootVector, RootVector)> =
            alloc::collections::BTreeMap::new();
        let mut frontier = vec![beta.clone()];
        let mut seen: BTreeSet<RootVector> = frontier.iter().cloned().collect();
        'bfs: while !frontier.is_empty() {
            let mut next = Vec::new();
            for cur in &frontier {
                let remaining = beta_prime.sub(cur);
                for gamma in &self.positive {
                    if !remaining.sub(gamma).is_nonneg() {
                        continue;
                    }
                    let step = cur.add(gamma);
                    if !self.is_root(&step) || seen.contains(&step) {
                        continue;
                    }
                    seen.insert(step.clone());
                    parent.insert(step.clone(), (cur.clone(), gamma.clone()));
                    if step == *beta_prime {
                        break 'bfs;
                    }
                    next.push(step);
                }
            }
            frontier = next;
        }
        if !parent.contains_key(beta_prime) {
            return Err(RootSysError::NotDominated);
        }
        let mut gammas = Vec::new();
        let mut cur = beta_prime.clone();
        while cur != *beta {
            let (prev, g) = parent.get(&cur).unwrap().clone();
            gammas.push(g);
            cur = prev;
        }
        gammas.sort();
        for i in 0..gammas.len() {
            for j in (i + 1)..gammas.len() {
                debug_assert_eq!(self.inner(&gammas[i], &gammas[j]), 0);
            }
        }
        Ok(gammas)
    }
}

/// Root string computation against an arbitrary membership oracle.
pub fn root_string_by(
    mu: &RootVector,
    lam: &RootVector,
    is_root_or_zero: &dyn Fn(&RootVector) -> bool,
) -> Result<(i64, i64), RootSysError> {
    if mu == lam || *mu == lam.neg() {
        return Err(RootSysError::SameRootLine);
    }
    let mut p = 0i64;
    while is_root_or_zero(&mu.add_scaled(lam, -(p + 1))) {
        p += 1;
        assert!(p <= 8, "root string badly unbounded");
    }
    let mut q = 0i64;
    while is_root_or_zero(&mu.add_scaled(lam, q + 1)) {
        q += 1;
        assert!(q <= 8, "root string badly unbounded");
    }
    Ok((p, q))
}

/// Generates the full root system of a finite-type Cartan matrix by
/// reflection closure of the simple roots, together with the normalized
/// integral Gram form.
pub fn generate_roots(
    cartan: &GeneralizedCartanMatrix,
) -> Result<FiniteRootSystem, RootSysError> {
    let class = classify_gcm(cartan)?;
    let component_names: Vec<String> = match &class {
        DiagramClass::Finite { name } => vec![name.clone()],
        DiagramClass::Product(parts) => {
            let mut names = Vec::new();
            for p in parts {
                match p {
                    DiagramClass::Finite { name } => names.push(name.clone()),
                    _ => return Err(RootSysError::NotFiniteType),
                }
            }
            names
        }
        _ => return Err(RootSysError::NotFiniteType),
    };
    let n = cartan.rank();
    let simples: Vec<RootVector> = (0..n).map(|i| RootVector::unit(n, i)).collect();

    // Reflection closure over the positive side, then add negatives.
    let mut roots: BTreeSet<RootVector> = simples.iter().cloned().collect();
    let mut frontier: Vec<RootVector> = simples.clone();
    while let Some(r) = frontier.pop() {
        for i in 0..n {
            let k = cartan.simple_pairing(&r, i);
            let image = r.add_scaled(&simples[i], -k);
            if roots.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }

    let components = cartan.components();
    // Per-component Gram matrices, rescaled to a common long-root norm.
    let mut gram = vec![vec![0i64; n]; n];
    let mut comp_long = Vec::new();
    for comp in &components {
        let sub = cartan.submatrix(comp);
        let sub_gram = sub.gram_connected()?;
        for (a, &i) in comp.iter().enumerate() {
            for (b, &j) in comp.iter().enumerate() {
                gram[i][j] = sub_gram[a][b];
            }
        }
        let provisional = BilinearForm { gram: gram.clone() };
        let long = roots
            .iter()
            .filter(|r| r.support().iter().all(|i| comp.contains(i)))
            .map(|r| provisional.norm(r))
            .max()
            .expect("component has roots");
        comp_long.push(long);
    }
    let common: i64 = comp_long.iter().fold(1i64, |acc, &l| {
        acc / linalg::gcd(acc as i128, l as i128) as i64 * l
    });
    for (comp, &long) in components.iter().zip(&comp_long) {
        let factor = common / long;
        for &i in comp {
            for &j in comp {
                gram[i][j] *= factor;
            }
        }
    }
    let form = BilinearForm { gram };

    let positive: Vec<RootVector> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
    let all: BTreeSet<RootVector> = positive
        .iter()
        .cloned()
        .chain(positive.iter().map(|r| r.neg()))
        .collect();
    let expected: usize = component_names
        .iter()
        .map(|s| FiniteType::parse(s).map(|t| t.root_count()).unwrap_or(0))
        .sum();
    assert_eq!(all.len(), expected, "root count mismatch for {component_names:?}");

    let simply_laced = components.iter().all(|comp| {
        let norms: BTreeSet<i64> = all
            .iter()
            .filter(|r| r.support().iter().all(|i| comp.contains(i)))
            .map(|r| form.norm(r))
            .collect();
        norms.len() == 1
    });
    let highest = if components.len() == 1 {
        Some(
            all.iter()
                .max_by_key(|r| (r.height(), (*r).clone()))
                .unwrap()
                .clone(),
        )
    } else {
        None
    };
    Ok(FiniteRootSystem {
        cartan: cartan.clone(),
        form,
        roots: all.iter().cloned().collect(),
        positive,
        root_set: all,
        name: component_names.join("+"),
        components,
        long_norm: common,
        simply_laced,
        highest,
    })
}

/// Classifies a generalized Cartan matrix: finite / affine (named, with
/// labels) / indefinite; decomposable input is classified blockwise.
pub fn classify_gcm(a: &GeneralizedCartanMatrix) -> Result<DiagramClass, RootSysError> {
    let comps = a.components();
    if comps.len() > 1 {
        let parts = comps
            .iter()
            .map(|c| classify_indecomposable(&a.submatrix(c)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(DiagramClass::Product(parts));
    }
    classify_indecomposable(a)
}

fn classify_indecomposable(a: &GeneralizedCartanMatrix) -> Result<DiagramClass, RootSysError> {
    let gram = a.gram_connected()?;
    match linalg::classify_symmetric(&gram) {
        SymVerdict::PositiveDefinite => Ok(DiagramClass::Finite {
            name: finite_name(a),
        }),
        SymVerdict::PositiveSemidefinite { corank: 1 } => {
            let kernel = linalg::kernel_basis(&gram, a.rank());
            assert_eq!(kernel.len(), 1);
            let mut labels = kernel.into_iter().next().unwrap();
            if labels.iter().all(|&x| x <= 0) {
                labels = labels.iter().map(|&x| -x).collect();
            }
            assert!(labels.iter().all(|&x| x > 0), "affine labels must be positive");
            let (name, twist) = affine_name(a);
            Ok(DiagramClass::Affine { name, labels, twist })
        }
        _ => Ok(DiagramClass::Indefinite),
    }
}

fn finite_name(a: &GeneralizedCartanMatrix) -> String {
    let n = a.rank();
    let mut candidates: Vec<FiniteType> = vec![FiniteType::A(n)];
    if n >= 2 {
        candidates.push(FiniteType::B(n));
    }
    if n >= 3 {
        candidates.push(FiniteType::C(n));
    }
    if n >= 4 {
        candidates.push(FiniteType::D(n));
    }
    match n {
        2 => candidates.push(FiniteType::G2),
        4 => candidates.push(FiniteType::F4),
        6 => candidates.push(FiniteType::E6),
        7 => candidates.push(FiniteType::E7),
        8 => candidates.push(FiniteType::E8),
        _ => {}
    }
    for t in candidates {
        if a.is_isomorphic_to(&t.cartan()) {
            return t.name();
        }
    }
    unreachable!("positive definite GCM must match a finite diagram")
}

/// Kac's table of affine diagrams, generated per family.
/// Returns (name, matrix, labels, twist) for every candidate on `nodes` nodes.
pub(crate) fn affine_candidates(nodes: usize) -> Vec<(String, GeneralizedCartanMatrix, Vec<i64>, u8)> {
    let mut out = Vec::new();
    if nodes < 2 {
        return out;
    }
    let n = nodes - 1; // affine rank superscript
    // Aff 1
    let untwisted: Vec<FiniteType> = {
        let mut v = vec![FiniteType::A(n)];
        if n >= 3 {
            v.push(FiniteType::B(n));
        }
        if n >= 2 {
            v.push(FiniteType::C(n));
        }
        if n >= 4 {
            v.push(FiniteType::D(n));
        }
        match n {
            2 => v.push(FiniteType::G2),
            4 => v.push(FiniteType::F4),
            6 => v.push(FiniteType::E6),
            7 => v.push(FiniteType::E7),
            8 => v.push(FiniteType::E8),
            _ => {}
        }
        v
    };
    for t in untwisted {
        let (gcm, labels) = untwisted_affine_gcm(t);
        out.push((format!("{}(1)", t.name()), gcm, labels, 1));
    }
    // Aff 2
    if nodes == 2 {
        let (gcm, labels) = twisted_a_even_gcm(1);
        out.push(("A2(2)".into(), gcm, labels, 2));
    }
    if nodes >= 3 {
        let m = nodes - 1;
        let (gcm, labels) = twisted_a_even_gcm(m);
        out.push((format!("A{}(2)", 2 * m), gcm, labels, 2));
        if m >= 3 {
            let (gcm, labels) = twisted_a_odd_gcm(m);
            out.push((format!("A{}(2)", 2 * m - 1), gcm, labels, 2));
        }
        let (gcm, labels) = twisted_d_gcm(m);
        out.push((format!("D{}(2)", m + 1), gcm, labels, 2));
    }
    if nodes == 5 {
        let (gcm, labels) = twisted_e6_gcm();
        out.push(("E6(2)".into(), gcm, labels, 2));
    }
    // Aff 3
    if nodes == 3 {
        let (gcm, labels) = twisted_d4_triple_gcm();
        out.push(("D4(3)".into(), gcm, labels, 3));
    }
    out
}

fn affine_name(a: &GeneralizedCartanMatrix) -> (String, u8) {
    for (name, gcm, _, twist) in affine_candidates(a.rank()) {
        if a.is_isomorphic_to(&gcm) {
            return (name, twist);
        }
    }
    unreachable!("affine GCM must match a Kac diagram")
}

/// Extended Cartan matrix of an irreducible finite type: node 0 is `δ − θ`.
pub(crate) fn untwisted_affine_gcm(t: FiniteType) -> (GeneralizedCartanMatrix, Vec<i64>) {
    let fin = t.cartan();
    let n = t.rank();
    let theta = RootVector::new(t.highest_root_coeffs());
    let d = fin.symmetrizer_connected().expect("finite symmetrizer");
    let gram: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| fin.entry(i, j) * d[j]).collect())
        .collect();
    let form = BilinearForm { gram };
    let theta_norm = form.norm(&theta);
    let mut m = vec![vec![0i64; n + 1]; n + 1];
    m[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            m[i + 1][j + 1] = fin.entry(i, j);
        }
        // entry(0, j+1) = ⟨-θ, α_j^∨⟩; entry(j+1, 0) = ⟨α_j, -θ^∨⟩
        m[0][i + 1] = -fin.simple_pairing(&theta, i);
        let num = -2 * form.inner(&RootVector::unit(n, i), &theta);
        assert_eq!(num % theta_norm, 0);
        m[i + 1][0] = num / theta_norm;
    }
    let mut labels = vec![1i64];
    labels.extend(theta.coeffs.iter());
    (GeneralizedCartanMatrix { entries: m }, labels)
}

/// `A_{2n}^{(2)}`, n ≥ 1: chain with a short extreme at node 0 and the long
/// extreme at node n; labels (2, …, 2, 1).
fn twisted_a_even_gcm(n: usize) -> (GeneralizedCartanMatrix, Vec<i64>) {
    let nodes = n + 1;
    let mut m = vec![vec![0i64; nodes]; nodes];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    if n == 1 {
        m[0][1] = -1;
        m[1][0] = -4;
    } else {
        m[0][1] = -1;
        m[1][0] = -2;
        for i in 1..n - 1 {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
        m[n - 1][n] = -1;
        m[n][n - 1] = -2;
    }
    let mut labels = vec![2i64; nodes];
    labels[n] = 1;
    (GeneralizedCartanMatrix { entries: m }, labels)
}

/// `A_{2n-1}^{(2)}`, n ≥ 3: fork 0,1 → 2, chain to n−1, double edge to the
/// long node n; labels (1, 1, 2, …, 2, 1).
fn twisted_a_odd_gcm(n: usize) -> (GeneralizedCartanMatrix, Vec<i64>) {
    let nodes = n + 1;
    let mut m = vec![vec![0i64; nodes]; nodes];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let single = |i: usize, j: usize, m: &mut Vec<Vec<i64>>| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    single(0, 2, &mut m);
    single(1, 2, &mut m);
    for i in 2..n - 1 {
        single(i, i + 1, &mut m);
    }
    m[n - 1][n] = -1;
    m[n][n - 1] = -2;
    let mut labels = vec![2i64; nodes];
    labels[0] = 1;
    labels[1] = 1;
    labels[n] = 1;
    (GeneralizedCartanMatrix { entries: m }, labels)
}

/// `D_{n+1}^{(2)}`, n ≥ 2: a chain with short extremes; labels all 1.
pub(crate) fn twisted_d_gcm(n: usize) -> (GeneralizedCartanMatrix, Vec<i64>) {
    let nodes = n + 1;
    let mut m = vec![vec![0i64; nodes]; nodes];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    m[0][1] = -1;
    m[1][0] = -2;
    for i in 1..n - 1 {
        m[i][i + 1] = -1;
        m[i + 1][i] = -1;
    }
    m[n - 1][n] = -2;
    m[n][n - 1] = -1;
    (GeneralizedCartanMatrix { entries: m }, vec![1; nodes])
}

/// `E6^{(2)}`: chain 0–1–2⇐3–4 with long nodes 3, 4; labels (1,2,3,2,1).
fn twisted_e6_gcm() -> (GeneralizedCartanMatrix, Vec<i64>) {
    let mut m = vec![vec![0i64; 5]; 5];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    m[0][1] = -1;
    m[1][0] = -1;
    m[1][2] = -1;
    m[2][1] = -1;
    m[2][3] = -1;
    m[3][2] = -2;
    m[3][4] = -1;
    m[4][3] = -1;
    (GeneralizedCartanMatrix { entries: m }, vec![1, 2, 3, 2, 1])
}

/// `D4^{(3)}`: chain 0–1⇚2 with the long node 2; labels (1,2,1).
fn twisted_d4_triple_gcm() -> (GeneralizedCartanMatrix, Vec<i64>) {
    let mut m = vec![vec![0i64; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    m[0][1] = -1;
    m[1][0] = -1;
    m[1][2] = -1;
    m[2][1] = -3;
    (GeneralizedCartanMatrix { entries: m }, vec![1, 2, 1])
}
