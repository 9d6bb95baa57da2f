//! Dense exact linear algebra over [`Ring`]s and [`Field`]s.

use super::scalar::{Field, Ring};

/// Determinant by Laplace expansion along the first row; division-free, so it works
/// over polynomial rings. Intended for `n <= 6`.
pub fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let cols: Vec<usize> = (0..n).collect();
    laplace(m, 0, &cols)
}

fn laplace<R: Ring>(m: &[Vec<R>], row: usize, cols: &[usize]) -> R {
    match cols.len() {
        0 => R::one(),
        1 => m[row][cols[0]].clone(),
        2 => m[row][cols[0]].mul(&m[row + 1][cols[1]]).sub(&m[row][cols[1]].mul(&m[row + 1][cols[0]])),
        _ => {
            let mut acc = R::zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = &m[row][c];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry.mul(&laplace(m, row + 1, &rest));
                acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Determinant of a 4x4 matrix.
pub fn det4<R: Ring>(m: &[Vec<R>; 4]) -> R {
    det(m.as_slice())
}

pub fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Vec<Vec<R>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    let mut acc = R::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&row[k].mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<R: Ring>(a: &[Vec<R>], v: &[R]) -> Vec<R> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(
                R::zero(),
                |acc, (x, y)| {
                    if x.is_zero() || y.is_zero() {
                        acc
                    } else {
                        acc.add(&x.mul(y))
                    }
                },
            )
        })
        .collect()
}

pub fn transpose<R: Clone>(a: &[Vec<R>]) -> Vec<Vec<R>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
///
/// Row operations skip zero entries, which keeps the sparse systems produced by
/// ideal-membership checks cheap.
pub fn row_reduce<F: Field>(m: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        let support: Vec<usize> = (c..m[r].len()).filter(|&j| !m[r][j].is_zero()).collect();
        for &j in &support {
            m[r][j] = m[r][j].mul(&inv);
        }
        let pivot_row: Vec<(usize, F)> = support.iter().map(|&j| (j, m[r][j].clone())).collect();
        for (i, row) in m.iter_mut().enumerate().take(nrows) {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (j, v) in &pivot_row {
                row[*j] = row[*j].sub(&f.mul(v));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A x = b` for each right-hand side; `None` marks an inconsistent system.
/// Free variables are set to zero.
pub fn solve<F: Field>(a: Vec<Vec<F>>, rhs: Vec<Vec<F>>) -> Vec<Option<Vec<F>>> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let k = rhs.len();
    let mut aug: Vec<Vec<F>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug, ncols);
    (0..k)
        .map(|j| {
            let col = ncols + j;
            if (pivots.len()..nrows).any(|i| !aug[i][col].is_zero()) {
                return None;
            }
            let mut x = vec![F::zero(); ncols];
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = aug[i][col].clone();
            }
            Some(x)
        })
        .collect()
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut work = m.to_vec();
    row_reduce(&mut work, ncols).len()
}
