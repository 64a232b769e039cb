//! Small dense integer matrices: Smith normal form and exact integral solving.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Nonzero elementary divisors `d_1 | d_2 | …` of an integer matrix, in order.
/// The number of entries is the rank of the matrix.
///
/// Rows and columns are both allowed to be empty.
#[allow(clippy::needless_range_loop)]
pub fn elementary_divisors(rows: &[Vec<i128>]) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry of the remaining block as pivot
        let mut pivot = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && pivot.is_none_or(|(pi, pj): (usize, usize)| v.abs() < m[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..nrows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..ncols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // the pivot must divide the rest of the block
                let bad = (t + 1..nrows)
                    .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..ncols {
                            let v = m[i][j];
                            m[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row/column t into the pivot position
            let mut best = (t, t);
            for i in t..nrows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..ncols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                m.swap(t, best.0);
            }
            if best.1 != t {
                for row in m.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        divisors.push(m[t][t].abs());
        t += 1;
    }
    divisors
}

/// Index of the sublattice spanned by the rows inside its saturation
/// (product of the elementary divisors). `1` means the span is primitive.
pub fn saturation_index(rows: &[Vec<i128>]) -> i128 {
    elementary_divisors(rows).into_iter().product()
}

/// Solves `Σ_i x_i · basis[i] = target` over the integers. Returns `None` if
/// there is no rational solution, if it is not unique, or if it is not integral.
#[allow(clippy::needless_range_loop)]
pub fn solve_integral(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let n = basis.len();
    let dim = target.len();
    if basis.iter().any(|b| b.len() != dim) {
        return None;
    }
    // augmented system: one equation per coordinate
    let mut rows: Vec<Vec<Ratio<i128>>> = (0..dim)
        .map(|c| {
            let mut r: Vec<Ratio<i128>> = basis.iter().map(|b| Ratio::from_integer(b[c] as i128)).collect();
            r.push(Ratio::from_integer(target[c] as i128));
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..dim).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Ratio::one() / rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= inv;
        }
        for i in 0..dim {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                for j in 0..=n {
                    let sub = f * rows[r][j];
                    rows[i][j] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if pivot_cols.len() != n {
        return None;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![0i64; n];
    for (i, &c) in pivot_cols.iter().enumerate() {
        let v = rows[i][n];
        if !v.denom().is_one() {
            return None;
        }
        x[c] = i64::try_from(*v.numer()).ok()?;
    }
    Some(x)
}

/// Determinant of a square integer matrix (fraction-free elimination).
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// Non-negative gcd of a list of integers.
pub fn gcd_all<I: IntoIterator<Item = i128>>(values: I) -> i128 {
    values.into_iter().fold(0i128, |g, v| g.gcd(&v)).abs()
}
