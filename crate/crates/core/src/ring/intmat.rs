//! Integer lattice utilities: row Hermite normal form over `Z` and
//! solution modules of linear systems over `Z_n`.

use crate::error::RingError;

fn to_i64(x: i128) -> Result<i64, RingError> {
    i64::try_from(x).map_err(|_| RingError::Overflow)
}

/// Row-style Hermite normal form. Pivots are positive, entries above each
/// pivot lie in `[0, pivot)`, and zero rows are moved to the bottom so the
/// shape is preserved.
pub fn hnf(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, RingError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();

    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // smallest nonzero |a[i][c]| among i >= r
            let Some(p) = (r..rows).filter(|&i| a[i][c] != 0).min_by_key(|&i| a[i][c].abs()) else {
                break;
            };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[r][c]);
                    sub_row(&mut a, i, r, q)?;
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            for x in a[r].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_euclid(a[r][c]);
            if q != 0 {
                sub_row(&mut a, i, r, q)?;
            }
        }
        r += 1;
    }
    a.into_iter().map(|row| row.into_iter().map(to_i64).collect()).collect()
}

fn sub_row(a: &mut [Vec<i128>], i: usize, r: usize, q: i128) -> Result<(), RingError> {
    let (src, dst) = if i < r {
        let (lo, hi) = a.split_at_mut(r);
        (&hi[0], &mut lo[i])
    } else {
        let (lo, hi) = a.split_at_mut(i);
        (&lo[r], &mut hi[0])
    };
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        let prod = q.checked_mul(*s).ok_or(RingError::Overflow)?;
        *d = d.checked_sub(prod).ok_or(RingError::Overflow)?;
    }
    Ok(())
}

/// Nonzero rows of the HNF: the canonical basis of the row lattice.
pub fn lattice_basis(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, RingError> {
    Ok(hnf(m)?.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect())
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    egcd(a.abs(), b.abs()).0
}

/// Solves `b ≡ k·a (mod n)` for `k` when `gcd(a, n)` divides `b`.
fn quotient_mod(a: i64, b: i64, n: i64) -> Option<i64> {
    let g = gcd(a, n);
    if b.rem_euclid(g) != 0 {
        return None;
    }
    let nn = n / g;
    if nn == 1 {
        return Some(0);
    }
    let (_, inv, _) = egcd((a / g).rem_euclid(nn), nn);
    Some(((b / g).rem_euclid(nn) * inv.rem_euclid(nn)).rem_euclid(nn))
}

/// Generating set of `{x in Z_n^cols : A x ≡ 0 (mod n)}`.
///
/// Diagonalizes `A` over `Z_n` with invertible row and column operations
/// (`U A V = D`), then maps the solutions of the diagonal system back through
/// `V`. Arithmetic stays reduced mod `n`.
pub fn kernel_mod(a: &[Vec<i64>], cols: usize, n: i64) -> Vec<Vec<i64>> {
    assert!(n >= 2);
    let rows = a.len();
    let md = |x: i64| x.rem_euclid(n);
    let mut m: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|&x| md(x)).collect()).collect();
    let mut v: Vec<Vec<i64>> = (0..cols).map(|i| (0..cols).map(|j| i64::from(i == j)).collect()).collect();
    let mut diag = vec![0i64; cols];

    let mut t = 0;
    while t < rows.min(cols) {
        // pivot with the smallest gcd against n
        let mut best: Option<(i64, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let g = gcd(x, n);
                    if best.map_or(true, |b| g < b.0) {
                        best = Some((g, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut().chain(v.iter_mut()) {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                let (p, b) = (m[t][t], m[i][t]);
                if b == 0 {
                    continue;
                }
                changed = true;
                if let Some(k) = quotient_mod(p, b, n) {
                    for j in 0..cols {
                        m[i][j] = md(m[i][j] - k * m[t][j]);
                    }
                } else {
                    let (g, s, u) = egcd(p, b);
                    let (pg, bg) = (p / g, b / g);
                    for j in 0..cols {
                        let (x, y) = (m[t][j], m[i][j]);
                        m[t][j] = md(s * x + u * y);
                        m[i][j] = md(-bg * x + pg * y);
                    }
                }
            }
            for j in t + 1..cols {
                let (p, b) = (m[t][t], m[t][j]);
                if b == 0 {
                    continue;
                }
                changed = true;
                if let Some(k) = quotient_mod(p, b, n) {
                    for row in m.iter_mut().chain(v.iter_mut()) {
                        row[j] = md(row[j] - k * row[t]);
                    }
                } else {
                    let (g, s, u) = egcd(p, b);
                    let (pg, bg) = (p / g, b / g);
                    for row in m.iter_mut().chain(v.iter_mut()) {
                        let (x, y) = (row[t], row[j]);
                        row[t] = md(s * x + u * y);
                        row[j] = md(-bg * x + pg * y);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        diag[t] = m[t][t];
        t += 1;
    }

    let mut gens = vec![];
    for (k, &d) in diag.iter().enumerate() {
        let step = n / gcd(d, n);
        if step % n == 0 {
            continue;
        }
        gens.push((0..cols).map(|r| md(v[r][k] * step)).collect());
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_examples() {
        assert_eq!(hnf(&[vec![2, 0], vec![0, 2]]).unwrap(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(hnf(&[vec![1, 1], vec![1, -1]]).unwrap(), vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(hnf(&[vec![0, 0], vec![0, 0]]).unwrap(), vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(hnf(&[]).unwrap(), Vec::<Vec<i64>>::new());
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let h = hnf(&[vec![3, 5, 1], vec![0, 4, 2], vec![6, 0, 7]]).unwrap();
        for (i, row) in h.iter().enumerate() {
            if let Some(pc) = row.iter().position(|&x| x != 0) {
                assert!(row[pc] > 0);
                for above in &h[..i] {
                    assert!(above[pc] >= 0 && above[pc] < row[pc]);
                }
            }
        }
        // lattice determinant is preserved up to sign: |det| = 3*(28-0) - 5*(0-12) + 1*(0-24) = 120
        let d: i64 = (0..3).map(|i| h[i][i]).product();
        assert_eq!(d, 120);
    }

    #[test]
    fn hnf_is_canonical_under_row_ops() {
        let a = vec![vec![4, 6, 2], vec![2, 2, 8]];
        let b = vec![vec![6, 8, 10], vec![-2, -2, -8], vec![0, 0, 0]];
        assert_eq!(lattice_basis(&a).unwrap(), lattice_basis(&b).unwrap());
    }

    fn brute_kernel(a: &[Vec<i64>], cols: usize, n: i64) -> usize {
        let mut count = 0;
        let total = (n as usize).pow(cols as u32);
        for code in 0..total {
            let mut x = vec![0i64; cols];
            let mut c = code;
            for xi in x.iter_mut() {
                *xi = (c % n as usize) as i64;
                c /= n as usize;
            }
            if a.iter().all(|row| row.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>().rem_euclid(n) == 0) {
                count += 1;
            }
        }
        count
    }

    fn span_size(gens: &[Vec<i64>], cols: usize, n: i64) -> usize {
        use std::collections::BTreeSet;
        let mut span: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; cols]]);
        for g in gens {
            let mut next = BTreeSet::new();
            for s in &span {
                for k in 0..n {
                    next.insert(s.iter().zip(g).map(|(a, b)| (a + k * b).rem_euclid(n)).collect());
                }
            }
            span = next;
        }
        span.len()
    }

    #[test]
    fn kernel_matches_brute_force() {
        let cases: Vec<(Vec<Vec<i64>>, usize, i64)> = vec![
            (vec![vec![2, 1, 0], vec![0, 2, 2]], 3, 4),
            (vec![vec![1, 1, 1]], 3, 6),
            (vec![vec![2, 4], vec![3, 0]], 2, 6),
            (vec![vec![0, 0, 0]], 3, 3),
            (vec![vec![6, 3, 2, 1], vec![1, 2, 3, 4]], 4, 12),
        ];
        for (a, cols, n) in cases {
            let gens = kernel_mod(&a, cols, n);
            for g in &gens {
                for row in &a {
                    assert_eq!(row.iter().zip(g).map(|(p, q)| p * q).sum::<i64>().rem_euclid(n), 0);
                }
            }
            assert_eq!(span_size(&gens, cols, n), brute_kernel(&a, cols, n), "{a:?} mod {n}");
        }
    }
}
