//! Exact rational linear algebra on small integer matrices.
//!
//! Everything the classifiers need reduces to elimination over ℚ on matrices
//! of rank at most a dozen or so: definiteness of a symmetrized Cartan
//! matrix, its corank and kernel, and ranks of bracket maps. `Ratio<i128>`
//! is exact at these sizes; overflow checks stay enabled in release builds.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::Zero;

pub type Rat = Ratio<i128>;

pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(n as i128)
}

/// Verdict of the exact definiteness test for a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymVerdict {
    PositiveDefinite,
    /// Positive semidefinite but singular; `corank` is the kernel dimension.
    PositiveSemidefinite { corank: usize },
    Indefinite,
}

/// Exact definiteness of a symmetric integer matrix by diagonal pivoting.
///
/// A symmetric matrix is positive semidefinite iff repeated Schur
/// complementation on positive diagonal pivots never exposes a negative
/// diagonal entry, and once all remaining diagonal entries vanish the
/// remaining block vanishes entirely.
pub fn classify_symmetric(sym: &[Vec<i64>]) -> SymVerdict {
    let n = sym.len();
    let mut m: Vec<Vec<Rat>> = sym
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut rank = 0usize;
    loop {
        if active.iter().any(|&i| m[i][i] < Rat::zero()) {
            return SymVerdict::Indefinite;
        }
        let pivot = active.iter().copied().find(|&i| m[i][i] > Rat::zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All active diagonal entries are zero; PSD forces the block to vanish.
                for &i in &active {
                    for &j in &active {
                        if !m[i][j].is_zero() {
                            return SymVerdict::Indefinite;
                        }
                    }
                }
                break;
            }
        };
        rank += 1;
        active.retain(|&i| i != p);
        let d = m[p][p];
        for &i in &active {
            if m[i][p].is_zero() {
                continue;
            }
            let f = m[i][p] / d;
            for &j in &active {
                let sub = f * m[p][j];
                m[i][j] -= sub;
            }
        }
        for &i in &active {
            m[i][p] = Rat::zero();
            m[p][i] = Rat::zero();
        }
    }
    if rank == n {
        SymVerdict::PositiveDefinite
    } else {
        SymVerdict::PositiveSemidefinite { corank: n - rank }
    }
}

/// Row-reduces a rational matrix in place; returns the pivot columns.
fn row_reduce(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let d = m[r][c];
        for x in m[r].iter_mut() {
            *x /= d;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = f * m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of an integer matrix over ℚ.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    row_reduce(&mut m).len()
}

/// Basis of the kernel of an integer matrix, as primitive integer vectors.
pub fn kernel_basis(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    if m.is_empty() {
        m.push(vec![Rat::zero(); cols]);
    }
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::from_integer(1);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f];
        }
        basis.push(primitive_integer(&v));
    }
    basis
}

/// Clears denominators and divides by the content, preserving direction.
pub fn primitive_integer(v: &[Rat]) -> Vec<i64> {
    let mut denom: i128 = 1;
    for x in v {
        denom = lcm(denom, *x.denom());
    }
    let ints: Vec<i128> = v.iter().map(|x| x.numer() * (denom / x.denom())).collect();
    let mut g: i128 = 0;
    for &x in &ints {
        g = gcd(g, x.abs());
    }
    if g == 0 {
        g = 1;
    }
    ints.iter().map(|&x| i64::try_from(x / g).expect("kernel entry overflow")).collect()
}

/// Solves `A x = b` over ℚ; returns None when inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r: Vec<Rat> = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][cols];
    }
    Some(x)
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definite_and_semidefinite() {
        // Cartan matrix of A2 (already symmetric).
        let a2 = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(classify_symmetric(&a2), SymVerdict::PositiveDefinite);
        // Symmetrized A1(1): rank one.
        let a11 = vec![vec![2, -2], vec![-2, 2]];
        assert_eq!(
            classify_symmetric(&a11),
            SymVerdict::PositiveSemidefinite { corank: 1 }
        );
        let indef = vec![vec![2, -3], vec![-3, 2]];
        assert_eq!(classify_symmetric(&indef), SymVerdict::Indefinite);
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let a11 = vec![vec![2, -2], vec![-2, 2]];
        let k = kernel_basis(&a11, 2);
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn rank_counts_pivots() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&m), 2);
    }
}
