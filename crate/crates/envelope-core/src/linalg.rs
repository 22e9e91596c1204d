//! Exact linear algebra over the rationals: row echelon forms, spans,
//! nullspaces and dense matrix arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::scalar::Rat;

/// Dense matrix as a list of rows. No padding; all rows share a length.
pub type Mat = Vec<Vec<Rat>>;

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![Rat::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    let t = &a[i][k] * &b[k][j];
                    out[i][j] += t;
                }
            }
        }
    }
    out
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Mat, c: &Rat) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|x| x * c).collect())
        .collect()
}

pub fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn commutator(a: &Mat, b: &Mat) -> Mat {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

pub fn mat_is_zero(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(Rat::is_zero))
}

pub fn flatten(a: &Mat) -> Vec<Rat> {
    a.iter().flat_map(|r| r.iter().cloned()).collect()
}

pub fn unflatten(v: &[Rat], n: usize) -> Mat {
    v.chunks(n).map(|c| c.to_vec()).collect()
}

/// Reduce `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each surviving row, in order.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m);
    m.len()
}

/// Reduce `v` against RREF rows with known pivot columns.
/// Returns (coordinates along the rows, residual).
pub fn reduce_against(rows: &[Vec<Rat>], pivots: &[usize], v: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut res = v.to_vec();
    let mut coords = Vec::with_capacity(rows.len());
    for (row, &p) in rows.iter().zip(pivots) {
        let c = res[p].clone();
        if !c.is_zero() {
            for (x, y) in res.iter_mut().zip(row) {
                let t = &c * y;
                *x -= t;
            }
        }
        coords.push(c);
    }
    (coords, res)
}

/// Nullspace of the linear map given by `rows` (a basis, not necessarily
/// echelonized), as a canonically echelonized list of kernel vectors.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    // already independent; echelonize for a canonical presentation
    rref(&mut basis);
    basis
}

/// Exact inverse of a square matrix, if it exists.
pub fn invert(m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut aug: Mat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solve rows^T x = v exactly, i.e. express `v` as a combination of `rows`.
/// Returns None if `v` is outside the span.
pub fn express_in_span(rows: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    // Gaussian elimination on the augmented transposed system.
    let n = v.len();
    let k = rows.len();
    let mut aug = zeros(n, k + 1);
    for (j, row) in rows.iter().enumerate() {
        for i in 0..n {
            aug[i][j] = row[i].clone();
        }
    }
    for i in 0..n {
        aug[i][k] = v[i].clone();
    }
    let pivots = rref(&mut aug);
    let mut x = vec![Rat::zero(); k];
    for (row, &p) in aug.iter().zip(&pivots) {
        if p == k {
            return None; // inconsistent
        }
        x[p] = row[k].clone();
    }
    // verify free variables set to zero give an exact solution
    let mut check = vec![Rat::zero(); n];
    for (j, row) in rows.iter().enumerate() {
        if x[j].is_zero() {
            continue;
        }
        for i in 0..n {
            let t = &x[j] * &row[i];
            check[i] += t;
        }
    }
    if check == v {
        Some(x)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_canonical() {
        let mut m = vec![rv(&[2, 4, 2]), rv(&[1, 2, 3])];
        let p = rref(&mut m);
        assert_eq!(p, vec![0, 2]);
        assert_eq!(m, vec![rv(&[1, 2, 0]), rv(&[0, 0, 1])]);
    }

    #[test]
    fn nullspace_dim() {
        let m = vec![rv(&[1, 1, 0]), rv(&[0, 0, 1])];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], rv(&[1, -1, 0]));
    }

    #[test]
    fn express_in_span_works() {
        let rows = vec![rv(&[1, 0, 1]), rv(&[0, 1, 1])];
        let x = express_in_span(&rows, &rv(&[2, 3, 5])).unwrap();
        assert_eq!(x, rv(&[2, 3]));
        assert!(express_in_span(&rows, &rv(&[0, 0, 1])).is_none());
    }
}
