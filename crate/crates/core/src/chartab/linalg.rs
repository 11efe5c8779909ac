//! Dense linear algebra over `F_q`.

use super::field::{add, inv, mul, sub};

pub(crate) type Matrix = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns the pivot columns.
/// Zero rows are removed.
pub(crate) fn rref(rows: &mut Matrix, q: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let scale = inv(rows[r][c], q).expect("nonzero pivot");
        let mut support = Vec::new();
        for (j, x) in rows[r].iter_mut().enumerate().skip(c) {
            if *x != 0 {
                *x = mul(*x, scale, q);
                support.push(j);
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for &j in &support {
                    row[j] = sub(row[j], mul(f, pivot_row[j], q), q);
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for a square matrix `A`.
pub(crate) fn nullspace(a: &Matrix, q: u64) -> Matrix {
    let n = a.len();
    let mut m = a.clone();
    let pivots = rref(&mut m, q);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; n];
            v[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = sub(0, row[f], q);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, coefficients lowest degree first,
/// via reduction to upper Hessenberg form.
pub(crate) fn charpoly(a: &Matrix, q: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let t = inv(h[m][m - 1], q).expect("nonzero pivot");
        for i in m + 1..n {
            let u = mul(h[i][m - 1], t, q);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let s = mul(u, h[m][j], q);
                h[i][j] = sub(h[i][j], s, q);
            }
            for row in h.iter_mut() {
                let s = mul(u, row[i], q);
                row[m] = add(row[m], s, q);
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - Σ_i (Π sub-diagonal) h_{m-i,m} p_{m-i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut p = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            p[k + 1] = add(p[k + 1], c, q);
            p[k] = sub(p[k], mul(h[m - 1][m - 1], c, q), q);
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul(t, h[m - i][m - i - 1], q);
            let coef = mul(t, h[m - i - 1][m - 1], q);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                p[k] = sub(p[k], mul(coef, c, q), q);
            }
        }
        polys.push(p);
    }
    polys.pop().expect("at least the constant polynomial")
}

pub(crate) fn eval(poly: &[u64], x: u64, q: u64) -> u64 {
    poly.iter()
        .rev()
        .fold(0, |acc, &c| add(mul(acc, x, q), c, q))
}
