//! Independent ground truth on classical symmetric pairs via exact integer
//! matrix realizations: ad-power heights and tangent-space dimensions,
//! matched to the combinatorial weights through a generated dictionary.
//!
//! Realized families: `(sl(p+q), s(gl_p ⊕ gl_q))` with the block-sign
//! involution, `(so(p+q), so_p ⊕ so_q)` with block split forms, and
//! `(sp(2n), gl_n)`. The dictionary between combinatorial weights and
//! matrix weight vectors is produced by matching pairing fingerprints, not
//! written by hand, and is validated against bracket non-vanishing.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::affine::GradingDatum;
use crate::linalg;
use crate::rootsys::RootVector;

pub type Mat = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    DictionaryMismatch(&'static str),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::DictionaryMismatch(msg) => write!(f, "dictionary mismatch: {msg}"),
        }
    }
}

fn mat_zero(n: usize) -> Mat {
    vec![vec![0; n]; n]
}

fn mat_is_zero(m: &Mat) -> bool {
    m.iter().all(|row| row.iter().all(|&x| x == 0))
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = mat_zero(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn bracket(a: &Mat, b: &Mat) -> Mat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    let n = a.len();
    let mut out = mat_zero(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = ab[i][j] - ba[i][j];
        }
    }
    out
}

fn mat_add_into(acc: &mut Mat, m: &Mat) {
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (a, &b) in ra.iter_mut().zip(rm) {
            *a += b;
        }
    }
}

/// A basis element of g that is a t₀-weight vector.
#[derive(Debug, Clone)]
pub struct WeightVector {
    /// Evaluations of the weight against the t₀ basis; the canonical key.
    pub key: Vec<i64>,
    /// A functional on diagonal matrices representing the weight.
    eps: (usize, usize),
    pub mat: Mat,
}

impl WeightVector {
    /// Evaluates the weight on a diagonal matrix in t₀.
    pub fn eval(&self, c: &Mat) -> i64 {
        c[self.eps.0][self.eps.0] - c[self.eps.1][self.eps.1]
    }
}

/// One of the three realized families of classical symmetric pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairFamily {
    /// sl(p+q) with σ = Ad(diag(1_p, −1_q)); g₀ = s(gl_p ⊕ gl_q).
    SlBlocks { p: usize, q: usize },
    /// so(p+q) for the block form J_p ⊕ J_q; g₀ = so_p ⊕ so_q.
    SoBlocks { p: usize, q: usize },
    /// sp(2n) with σ negating the off-diagonal n-blocks; g₀ = gl_n.
    SpGl { n: usize },
}

/// Exact matrix model of a classical symmetric pair.
#[derive(Debug, Clone)]
pub struct MatrixPair {
    pub family: PairFamily,
    pub name: String,
    pub size: usize,
    /// Basis of t₀ as diagonal matrices.
    pub t0: Vec<Mat>,
    /// Nonzero-weight basis vectors of g₀.
    pub g0_roots: Vec<WeightVector>,
    /// All weight basis vectors of g₁ (zero weights included).
    pub g1: Vec<WeightVector>,
}

fn antidiag(n: usize) -> Mat {
    let mut m = mat_zero(n);
    for i in 0..n {
        m[i][n - 1 - i] = 1;
    }
    m
}

fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let n = a.len() + b.len();
    let mut m = mat_zero(n);
    for i in 0..a.len() {
        for j in 0..a.len() {
            m[i][j] = a[i][j];
        }
    }
    for i in 0..b.len() {
        for j in 0..b.len() {
            m[a.len() + i][a.len() + j] = b[i][j];
        }
    }
    m
}

/// Splits raw basis matrices into (t0-part handled separately), g₀ roots and
/// g₁ vectors, computing keys against the given t₀ basis. `sign[r]·sign[c]`
/// decides the σ-eigenvalue of an entry at (r, c).
fn organize(
    raw: Vec<Mat>,
    t0: &[Mat],
    sign: &[i64],
) -> (Vec<WeightVector>, Vec<WeightVector>) {
    let mut g0_roots = Vec::new();
    let mut g1 = Vec::new();
    for m in raw {
        let entries: Vec<(usize, usize)> = (0..m.len())
            .flat_map(|r| (0..m.len()).map(move |c| (r, c)))
            .filter(|&(r, c)| m[r][c] != 0)
            .collect();
        assert!(!entries.is_empty());
        let sigma: BTreeSet<i64> = entries.iter().map(|&(r, c)| sign[r] * sign[c]).collect();
        assert_eq!(sigma.len(), 1, "basis element not σ-homogeneous");
        let even = sigma.contains(&1);
        let (r0, c0) = entries[0];
        // all entries must carry the same t₀-weight
        for h in t0 {
            let v0 = h[r0][r0] - h[c0][c0];
            for &(r, c) in &entries {
                assert_eq!(h[r][r] - h[c][c], v0, "entries with different weights");
            }
        }
        let key: Vec<i64> = t0.iter().map(|h| h[r0][r0] - h[c0][c0]).collect();
        let wv = WeightVector {
            key,
            eps: (r0, c0),
            mat: m,
        };
        if even {
            if wv.key.iter().any(|&x| x != 0) {
                g0_roots.push(wv);
            }
            // zero-weight even vectors are the Cartan directions, carried by t0
        } else {
            g1.push(wv);
        }
    }
    (g0_roots, g1)
}

impl MatrixPair {
    pub fn sl_blocks(p: usize, q: usize) -> MatrixPair {
        let n = p + q;
        let sign: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
        let mut raw = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = mat_zero(n);
                    m[i][j] = 1;
                    raw.push(m);
                }
            }
        }
        let t0: Vec<Mat> = (0..n - 1)
            .map(|i| {
                let mut m = mat_zero(n);
                m[i][i] = 1;
                m[i + 1][i + 1] = -1;
                m
            })
            .collect();
        let (g0_roots, g1) = organize(raw, &t0, &sign);
        MatrixPair {
            family: PairFamily::SlBlocks { p, q },
            name: format!("sl{}|gl{}+gl{}", n, p, q),
            size: n,
            t0,
            g0_roots,
            g1,
        }
    }

    pub fn so_blocks(p: usize, q: usize) -> MatrixPair {
        let n = p + q;
        let big_q = block_diag(&antidiag(p), &antidiag(q));
        let sign: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
        // so(Q) = { Q·A : A antisymmetric }
        let mut raw = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut a = mat_zero(n);
                a[i][j] = 1;
                a[j][i] = -1;
                let m = mat_mul(&big_q, &a);
                raw.push(m);
            }
        }
        // t₀: block Cartans d with d_{π(i)} = −d_i
        let mut t0 = Vec::new();
        for (start, len) in [(0usize, p), (p, q)] {
            for t in 0..len / 2 {
                let mut m = mat_zero(n);
                m[start + t][start + t] = 1;
                m[start + len - 1 - t][start + len - 1 - t] = -1;
                t0.push(m);
            }
        }
        // diagonal raw elements coincide with t₀ directions; organize drops them
        let raw: Vec<Mat> = raw
            .into_iter()
            .filter(|m| {
                !(0..n).all(|r| (0..n).all(|c| r == c || m[r][c] == 0))
            })
            .collect();
        let (g0_roots, g1) = organize(raw, &t0, &sign);
        MatrixPair {
            family: PairFamily::SoBlocks { p, q },
            name: format!("so{}|so{}+so{}", n, p, q),
            size: n,
            t0,
            g0_roots,
            g1,
        }
    }

    pub fn sp_gl(n: usize) -> MatrixPair {
        let size = 2 * n;
        let mut omega = mat_zero(size);
        for i in 0..n {
            omega[i][size - 1 - i] = 1;
            omega[size - 1 - i][i] = -1;
        }
        let sign: Vec<i64> = (0..size).map(|i| if i < n { 1 } else { -1 }).collect();
        // sp(Ω) = { Ω⁻¹·S : S symmetric } and Ω⁻¹ = −Ω
        let neg_omega: Mat = omega
            .iter()
            .map(|row| row.iter().map(|&x| -x).collect())
            .collect();
        let mut raw = Vec::new();
        for i in 0..size {
            for j in i..size {
                let mut s = mat_zero(size);
                s[i][j] += 1;
                s[j][i] += 1;
                let m = mat_mul(&neg_omega, &s);
                raw.push(m);
            }
        }
        let t0: Vec<Mat> = (0..n)
            .map(|t| {
                let mut m = mat_zero(size);
                m[t][t] = 1;
                m[size - 1 - t][size - 1 - t] = -1;
                m
            })
            .collect();
        let raw: Vec<Mat> = raw
            .into_iter()
            .filter(|m| !(0..size).all(|r| (0..size).all(|c| r == c || m[r][c] == 0)))
            .collect();
        let (g0_roots, g1) = organize(raw, &t0, &sign);
        MatrixPair {
            family: PairFamily::SpGl { n },
            name: format!("sp{}|gl{}", size, n),
            size,
            t0,
            g0_roots,
            g1,
        }
    }

    pub fn rank_t0(&self) -> usize {
        self.t0.len()
    }

    fn find_by_key<'a>(&self, list: &'a [WeightVector], key: &[i64]) -> Option<&'a WeightVector> {
        list.iter().find(|w| w.key == key)
    }

    /// Coroot of a nonzero weight: the diagonal `[x_κ, x_{−κ}]` with the
    /// evaluation `κ(c)` for normalization.
    fn coroot(&self, list: &[WeightVector], w: &WeightVector) -> (Mat, i64) {
        let neg: Vec<i64> = w.key.iter().map(|&x| -x).collect();
        let partner = self
            .find_by_key(list, &neg)
            .expect("opposite weight exists");
        let c = bracket(&w.mat, &partner.mat);
        let kc = w.eval(&c);
        assert!(kc != 0, "degenerate coroot");
        (c, kc)
    }

    /// `⟨μ, κ^∨⟩` for weights μ, κ in the model, via the coroot of κ.
    fn mat_pairing(&self, mu: &WeightVector, kappa_coroot: &(Mat, i64)) -> i64 {
        let num = 2 * mu.eval(&kappa_coroot.0);
        assert_eq!(num % kappa_coroot.1, 0, "non-integral model pairing");
        num / kappa_coroot.1
    }
}

/// Weight dictionary between a grading and a matrix realization.
pub struct Dictionary {
    /// Combinatorial Φ₁ representative → index into `pair.g1`.
    pub g1_map: BTreeMap<RootVector, usize>,
    /// Indices into `pair.g0_roots` of the positive g₀ roots.
    pub positive_g0: Vec<usize>,
}

fn lex_positive(key: &[i64]) -> bool {
    for &x in key {
        if x != 0 {
            return x > 0;
        }
    }
    false
}

/// Generates the dictionary by matching pairing fingerprints: a diagram
/// isomorphism on the simple g₀-roots, extended over Φ₁ by Gram-consistent
/// backtracking, then validated against bracket non-vanishing.
pub fn build_dictionary(g: &GradingDatum, pair: &MatrixPair) -> Result<Dictionary, OracleError> {
    // matrix side: positive root keys, simples
    let pos_idx: Vec<usize> = (0..pair.g0_roots.len())
        .filter(|&i| lex_positive(&pair.g0_roots[i].key))
        .collect();
    let pos_keys: BTreeSet<Vec<i64>> = pos_idx
        .iter()
        .map(|&i| pair.g0_roots[i].key.clone())
        .collect();
    let simple_idx: Vec<usize> = pos_idx
        .iter()
        .copied()
        .filter(|&i| {
            let k = &pair.g0_roots[i].key;
            !pos_keys.iter().any(|a| {
                let b: Vec<i64> = k.iter().zip(a).map(|(x, y)| x - y).collect();
                pos_keys.contains(&b)
            })
        })
        .collect();
    if simple_idx.len() != g.pi0.len() {
        return Err(OracleError::DictionaryMismatch("rank of g0"));
    }
    let mat_coroots: Vec<(Mat, i64)> = simple_idx
        .iter()
        .map(|&i| pair.coroot(&pair.g0_roots, &pair.g0_roots[i]))
        .collect();
    let r = simple_idx.len();
    let mat_cartan: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| pair.mat_pairing(&pair.g0_roots[simple_idx[i]], &mat_coroots[j]))
                .collect()
        })
        .collect();
    let comb_cartan: Vec<Vec<i64>> = g
        .pi0
        .iter()
        .map(|&i| {
            g.pi0
                .iter()
                .map(|&j| g.pairing(&g.system.simple(i), &g.system.simple(j)))
                .collect()
        })
        .collect();

    // all diagram isomorphisms comb → mat
    let mut isos: Vec<Vec<usize>> = Vec::new();
    {
        let mut image: Vec<usize> = Vec::new();
        let mut used = vec![false; r];
        fn extend(
            r: usize,
            a: &[Vec<i64>],
            b: &[Vec<i64>],
            image: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            let i = image.len();
            if i == r {
                out.push(image.clone());
                return;
            }
            for cand in 0..r {
                if used[cand] {
                    continue;
                }
                let ok = (0..i)
                    .all(|k| a[k][i] == b[image[k]][cand] && a[i][k] == b[cand][image[k]]);
                if ok {
                    used[cand] = true;
                    image.push(cand);
                    extend(r, a, b, image, used, out);
                    image.pop();
                    used[cand] = false;
                }
            }
        }
        extend(r, &comb_cartan, &mat_cartan, &mut image, &mut used, &mut isos);
    }
    if isos.is_empty() {
        return Err(OracleError::DictionaryMismatch("g0 diagrams differ"));
    }

    // g1 side: nonzero-weight model vectors with coroots
    let g1_nonzero: Vec<usize> = (0..pair.g1.len())
        .filter(|&i| pair.g1[i].key.iter().any(|&x| x != 0))
        .collect();
    if g1_nonzero.len() != g.phi1.len() {
        return Err(OracleError::DictionaryMismatch("dim of g1 weight part"));
    }
    {
        let keys: BTreeSet<&Vec<i64>> = g1_nonzero.iter().map(|&i| &pair.g1[i].key).collect();
        if keys.len() != g1_nonzero.len() {
            return Err(OracleError::DictionaryMismatch("g1 weight multiplicity"));
        }
    }
    let g1_coroots: Vec<(Mat, i64)> = g1_nonzero
        .iter()
        .map(|&i| pair.coroot(&pair.g1, &pair.g1[i]))
        .collect();

    let comb_phi1: Vec<RootVector> = g.phi1.clone();
    for iso in &isos {
        // fingerprint per comb weight: pairings against Π₀ under the iso
        let mut cand: Vec<Vec<usize>> = Vec::new();
        for lam in &comb_phi1 {
            let fp: Vec<i64> = g
                .pi0
                .iter()
                .map(|&i| g.pairing(lam, &g.system.simple(i)))
                .collect();
            let matches: Vec<usize> = (0..g1_nonzero.len())
                .filter(|&j| {
                    (0..r).all(|i| {
                        pair.mat_pairing(&pair.g1[g1_nonzero[j]], &mat_coroots[iso[i]]) == fp[i]
                    })
                })
                .collect();
            cand.push(matches);
        }
        // backtracking assignment with Gram consistency
        let mut assign: Vec<Option<usize>> = vec![None; comb_phi1.len()];
        let mut used = vec![false; g1_nonzero.len()];
        fn assign_next(
            g: &GradingDatum,
            pair: &MatrixPair,
            comb: &[RootVector],
            g1_nonzero: &[usize],
            g1_coroots: &[(Mat, i64)],
            cand: &[Vec<usize>],
            assign: &mut Vec<Option<usize>>,
            used: &mut [bool],
        ) -> bool {
            let Some(i) = assign.iter().position(|a| a.is_none()) else {
                return true;
            };
            for &j in &cand[i] {
                if used[j] {
                    continue;
                }
                let ok = (0..comb.len()).filter(|k| assign[*k].is_some()).all(|k| {
                    let l = assign[k].unwrap();
                    let comb_pq = g.pairing(&comb[i], &comb[k]);
                    let mat_pq = pair.mat_pairing(&pair.g1[g1_nonzero[j]], &g1_coroots[l]);
                    comb_pq == mat_pq
                });
                if ok {
                    assign[i] = Some(j);
                    used[j] = true;
                    if assign_next(g, pair, comb, g1_nonzero, g1_coroots, cand, assign, used) {
                        return true;
                    }
                    assign[i] = None;
                    used[j] = false;
                }
            }
            false
        }
        if !assign_next(
            g,
            pair,
            &comb_phi1,
            &g1_nonzero,
            &g1_coroots,
            &cand,
            &mut assign,
            &mut used,
        ) {
            continue;
        }
        let g1_map: BTreeMap<RootVector, usize> = comb_phi1
            .iter()
            .zip(&assign)
            .map(|(lam, a)| (lam.clone(), g1_nonzero[a.unwrap()]))
            .collect();
        // validation: bracket non-vanishing must mirror root sums
        let mut valid = true;
        'check: for (la, &ja) in &g1_map {
            for (lb, &jb) in &g1_map {
                let sum = la.add(lb);
                let expects = g.system.is_root(&sum);
                let br = bracket(&pair.g1[ja].mat, &pair.g1[jb].mat);
                if expects != !mat_is_zero(&br) {
                    valid = false;
                    break 'check;
                }
            }
        }
        if valid {
            return Ok(Dictionary {
                g1_map,
                positive_g0: pos_idx,
            });
        }
    }
    Err(OracleError::DictionaryMismatch("no consistent weight matching"))
}

/// `x_S = Σ_{γ∈S} x^γ` in the model.
pub fn x_s(pair: &MatrixPair, dict: &Dictionary, s: &BTreeSet<RootVector>) -> Mat {
    let mut acc = mat_zero(pair.size);
    for gamma in s {
        let idx = *dict.g1_map.get(gamma).expect("weight in dictionary");
        mat_add_into(&mut acc, &pair.g1[idx].mat);
    }
    acc
}

/// Heights of the eigenvalue grading of the normal triple through `x_S`:
/// the coweight `h_S = Σ γ^∨` acts on every basis vector by an integer,
/// computed from model brackets; returns the maxima over g₀ ∪ {0} and g₁.
///
/// This is the matrix-side counterpart of the combinatorial grade heights.
pub fn eigen_heights(
    pair: &MatrixPair,
    dict: &Dictionary,
    s: &BTreeSet<RootVector>,
) -> (i64, i64) {
    // normalized coroots of the weights of S
    let coroots: Vec<(Mat, i64)> = s
        .iter()
        .map(|gamma| {
            let idx = *dict.g1_map.get(gamma).expect("weight in dictionary");
            pair.coroot(&pair.g1, &pair.g1[idx])
        })
        .collect();
    let grade = |w: &WeightVector| -> i64 {
        coroots
            .iter()
            .map(|c| {
                let num = 2 * w.eval(&c.0);
                assert_eq!(num % c.1, 0);
                num / c.1
            })
            .sum()
    };
    let h0 = pair.g0_roots.iter().map(&grade).max().unwrap_or(0).max(0);
    let h1 = pair.g1.iter().map(&grade).max().unwrap_or(0);
    (h0, h1)
}

/// Ad-power heights `(h, h₀, h₁)` of a nilpotent element: maximal n with
/// `ad(x)ⁿ` nonzero on g, g₀, g₁ respectively, by exact iteration.
///
/// Note that the domain-restricted `h₀` is a step count along the
/// sl₂-strings, not the top eigenvalue of the grading on g₀: it satisfies
/// `G₀ ≤ h₀ ≤ (G₁ + G₀)/2` for the eigenvalue heights `(G₀, G₁)`, with the
/// upper bound from the maximal grade and the lower one from string
/// symmetry. On g₁ the two notions coincide.
pub fn ad_power_height(pair: &MatrixPair, x: &Mat) -> (i64, i64, i64) {
    let height_on = |basis: Vec<Mat>| -> i64 {
        let mut cur: Vec<Mat> = basis.into_iter().filter(|m| !mat_is_zero(m)).collect();
        let mut t = 0i64;
        loop {
            let next: Vec<Mat> = cur
                .iter()
                .map(|m| bracket(x, m))
                .filter(|m| !mat_is_zero(m))
                .collect();
            if next.is_empty() {
                return t;
            }
            t += 1;
            cur = next;
            assert!(t <= 16, "ad iteration unbounded; element not nilpotent?");
        }
    };
    let basis0: Vec<Mat> = pair
        .g0_roots
        .iter()
        .map(|w| w.mat.clone())
        .chain(pair.t0.iter().cloned())
        .collect();
    let basis1: Vec<Mat> = pair.g1.iter().map(|w| w.mat.clone()).collect();
    let h0 = height_on(basis0);
    let h1 = height_on(basis1);
    (h0.max(h1), h0, h1)
}

/// Dimension of the tangent space `[b₀, x]`: rank of the bracket map from
/// the Borel of g₀ (t₀ plus the positive root vectors).
pub fn bracket_dim(pair: &MatrixPair, dict: &Dictionary, x: &Mat) -> usize {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for h in &pair.t0 {
        let b = bracket(h, x);
        rows.push(b.into_iter().flatten().collect());
    }
    for &i in &dict.positive_g0 {
        let b = bracket(&pair.g0_roots[i].mat, x);
        rows.push(b.into_iter().flatten().collect());
    }
    linalg::rank(&rows)
}

/// Convenience wrappers taking the combinatorial orthogonal subset.
pub fn ad_power_height_of(
    pair: &MatrixPair,
    dict: &Dictionary,
    s: &BTreeSet<RootVector>,
) -> (i64, i64, i64) {
    ad_power_height(pair, &x_s(pair, dict, s))
}

pub fn bracket_dim_of(pair: &MatrixPair, dict: &Dictionary, s: &BTreeSet<RootVector>) -> usize {
    bracket_dim(pair, dict, &x_s(pair, dict, s))
}

/// The matrix realization of a grading, when one of the three families
/// covers it: inner sl and sp pairs, and all so pairs.
pub fn realize(g: &GradingDatum) -> Option<MatrixPair> {
    if g.flip || g.m != 2 {
        return None;
    }
    let name = &g.system.name;
    let marks: Vec<usize> = g.pi1.clone();
    if name.starts_with('A') && name.ends_with("(1)") {
        // s(gl_p + gl_q): marks at two nodes of the cycle at distances p, q
        if marks.len() != 2 {
            return None;
        }
        let n = g.nodes();
        let p = marks[1] - marks[0];
        let q = n - p;
        return Some(MatrixPair::sl_blocks(p, q));
    }
    if name.starts_with('D') && name.ends_with("(1)") {
        let m = g.nodes() - 1; // so_{2m}
        if marks.len() == 2 {
            // so2 + so(2m−2) for adjacent extreme pairs {0,1} or {m−1, m};
            // gl_m for mixed extreme pairs
            let extremes: BTreeSet<usize> = [0, 1, m - 1, m].into_iter().collect();
            if !marks.iter().all(|i| extremes.contains(i)) {
                return None;
            }
            let fork_left: BTreeSet<usize> = [0usize, 1].into_iter().collect();
            let fork_right: BTreeSet<usize> = [m - 1, m].into_iter().collect();
            let set: BTreeSet<usize> = marks.iter().copied().collect();
            if set == fork_left || set == fork_right {
                return Some(MatrixPair::so_blocks(2, 2 * m - 2));
            }
            return None; // gl_m inside so_{2m}: not in the realized families
        }
        let i = marks[0];
        return Some(MatrixPair::so_blocks(2 * i, 2 * m - 2 * i));
    }
    if name.starts_with('D') && name.ends_with("(2)") {
        // so(2i+1) + so(2m−2i−1) inside so_{2m}, marks on the chain
        let nodes = g.nodes();
        let i = marks[0];
        let total = 2 * nodes; // D_{nodes}^{(2)} sits inside so_{2·nodes}
        return Some(MatrixPair::so_blocks(2 * i + 1, total - 2 * i - 1));
    }
    if name.starts_with('B') && name.ends_with("(1)") {
        // so_{2n+1} ⊃ so_p + so_q: a pair of fork marks gives p = 2, a
        // single mark at node i gives p = 2i
        let n = g.nodes() - 1;
        if marks.len() == 2 {
            let fork: BTreeSet<usize> = [0usize, 1].into_iter().collect();
            let set: BTreeSet<usize> = marks.iter().copied().collect();
            if set == fork {
                return Some(MatrixPair::so_blocks(2, 2 * n - 1));
            }
            return None;
        }
        let i = marks[0];
        return Some(MatrixPair::so_blocks(2 * i, 2 * n + 1 - 2 * i));
    }
    if name.starts_with('C') && name.ends_with("(1)") {
        let n = g.nodes() - 1;
        if marks.len() == 2 && marks[0] == 0 && marks[1] == n {
            return Some(MatrixPair::sp_gl(n));
        }
        return None;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{build_affine, build_grading};
    use crate::iab::{enumerate_iab, theta};
    use crate::orbits;
    use crate::rootsys::FiniteType;
    use crate::sphericity::WeightTable;

    fn grading(t: FiniteType, k: u8, marks: &[i64]) -> GradingDatum {
        let sys = build_affine(t, k).unwrap();
        build_grading(sys, marks.to_vec()).unwrap()
    }

    #[test]
    fn sl4_dictionary_and_heights() {
        let g = grading(FiniteType::A(3), 1, &[1, 0, 1, 0]);
        let pair = realize(&g).unwrap();
        assert_eq!(pair.family, PairFamily::SlBlocks { p: 2, q: 2 });
        let dict = build_dictionary(&g, &pair).unwrap();
        assert_eq!(dict.g1_map.len(), 8);

        let table = WeightTable::new(&g);
        for w in enumerate_iab(&g).unwrap() {
            let a = theta(&g, &w);
            for s in orbits::orthogonal_subsets(&g, &a.weights) {
                let (h0c, h1c, _) = table.grade_heights(&s);
                assert_eq!((h0c, h1c), eigen_heights(&pair, &dict, &s));
                let (_, h0m, h1m) = ad_power_height_of(&pair, &dict, &s);
                assert_eq!(h1c, h1m, "g1 heights for S={s:?}");
                assert!(h0c <= h0m && 2 * h0m <= h1c + h0c, "string bounds for S={s:?}");
                let dim = s.len() + orbits::psi_s(&g, &s).len();
                assert_eq!(dim, bracket_dim_of(&pair, &dict, &s));
            }
        }
    }

    #[test]
    fn empty_subset_is_zero() {
        let g = grading(FiniteType::A(3), 1, &[1, 0, 1, 0]);
        let pair = realize(&g).unwrap();
        let dict = build_dictionary(&g, &pair).unwrap();
        let s = BTreeSet::new();
        assert_eq!(ad_power_height_of(&pair, &dict, &s), (0, 0, 0));
        assert_eq!(bracket_dim_of(&pair, &dict, &s), 0);
    }

    #[test]
    fn so8_even_split_realizes() {
        let g = grading(FiniteType::D(4), 1, &[0, 0, 1, 0, 0]);
        let pair = realize(&g).unwrap();
        assert_eq!(pair.family, PairFamily::SoBlocks { p: 4, q: 4 });
        let dict = build_dictionary(&g, &pair).unwrap();
        assert_eq!(dict.g1_map.len(), 16);
        // the special subalgebra attains ad-height 4 on g1
        let wp = crate::iab::special_wp(&g).unwrap();
        let a = theta(&g, &wp);
        let open = orbits::open_orbit_rep(&g, &a.weights);
        let (_, _, h1) = ad_power_height_of(&pair, &dict, &open);
        assert_eq!(h1, 4);
    }

    #[test]
    fn so_odd_split_realizes() {
        let g = grading(FiniteType::D(4), 2, &[1, 0, 0, 0]);
        let pair = realize(&g).unwrap();
        assert_eq!(pair.family, PairFamily::SoBlocks { p: 1, q: 7 });
        let dict = build_dictionary(&g, &pair).unwrap();
        assert_eq!(dict.g1_map.len(), 6);
    }

    #[test]
    fn so_b_type_realizes() {
        // so7 ⊃ so4 + so3: the label-2 mark at node 2
        let g = grading(FiniteType::B(3), 1, &[0, 0, 1, 0]);
        let pair = realize(&g).unwrap();
        assert_eq!(pair.family, PairFamily::SoBlocks { p: 4, q: 3 });
        let dict = build_dictionary(&g, &pair).unwrap();
        assert_eq!(dict.g1_map.len(), 12);
        let g = grading(FiniteType::B(3), 1, &[1, 1, 0, 0]);
        let pair = realize(&g).unwrap();
        assert_eq!(pair.family, PairFamily::SoBlocks { p: 2, q: 5 });
        build_dictionary(&g, &pair).unwrap();
    }

    #[test]
    fn bracket_closure_respects_the_grading() {
        // [g_i, g_j] ⊆ g_{i+j mod 2}: every basis bracket is σ-homogeneous
        // of the product class, and in sl4/sp6 it lies in the span of the
        // model basis.
        for pair in [
            MatrixPair::sl_blocks(2, 2),
            MatrixPair::so_blocks(4, 4),
            MatrixPair::so_blocks(1, 7),
            MatrixPair::sp_gl(3),
        ] {
            let (p, q) = match pair.family {
                PairFamily::SlBlocks { p, q } | PairFamily::SoBlocks { p, q } => (p, q),
                PairFamily::SpGl { n } => (n, n),
            };
            let sign: Vec<i64> = (0..pair.size)
                .map(|i| if i < p { 1 } else { -1 })
                .collect();
            assert_eq!(p + q, pair.size);
            let mut elems: Vec<(i64, Mat)> = Vec::new();
            elems.extend(pair.t0.iter().map(|m| (1i64, m.clone())));
            elems.extend(pair.g0_roots.iter().map(|w| (1i64, w.mat.clone())));
            elems.extend(pair.g1.iter().map(|w| (-1i64, w.mat.clone())));
            let span_check = pair.size <= 6;
            let basis_rows: Vec<Vec<i64>> = elems
                .iter()
                .map(|(_, m)| m.iter().flatten().copied().collect())
                .collect();
            let dim = crate::linalg::rank(&basis_rows);
            assert_eq!(dim, elems.len(), "{}: basis independent", pair.name);
            for (ca, a) in &elems {
                for (cb, b) in &elems {
                    let br = bracket(a, b);
                    for r in 0..pair.size {
                        for c in 0..pair.size {
                            if br[r][c] != 0 {
                                assert_eq!(
                                    sign[r] * sign[c],
                                    ca * cb,
                                    "{}: bracket class",
                                    pair.name
                                );
                            }
                        }
                    }
                    if span_check && !mat_is_zero(&br) {
                        let mut rows = basis_rows.clone();
                        rows.push(br.iter().flatten().copied().collect());
                        assert_eq!(crate::linalg::rank(&rows), dim, "{}: closure", pair.name);
                    }
                }
            }
        }
    }

    #[test]
    fn sp6_realizes() {
        let g = grading(FiniteType::C(3), 1, &[1, 0, 0, 1]);
        let pair = realize(&g).unwrap();
        assert_eq!(pair.family, PairFamily::SpGl { n: 3 });
        let dict = build_dictionary(&g, &pair).unwrap();
        assert_eq!(dict.g1_map.len(), 12);
    }
}
