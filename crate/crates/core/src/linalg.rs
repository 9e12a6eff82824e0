//! Exact linear algebra on small dense matrices: Hermite normal form over Z,
//! kernels over F_p, Faddeev–LeVerrier characteristic polynomials and
//! Bareiss determinants.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{extended_gcd, Int, Rat};
use crate::error::{Error, Result};

/// Lower-triangular Hermite normal form of the row lattice spanned by
/// `rows` (each of length `n`).
///
/// Row `j` of the result has zeros right of column `j`, a positive pivot at
/// column `j`, and entries left of the pivot reduced into `[0, pivot_s)` where
/// `pivot_s` is the pivot of row `s`. When `modulus` is given the caller
/// guarantees `modulus·Z^n` lies inside the lattice, and all intermediate
/// entries are reduced modulo it.
pub fn hnf_lower(rows: &[Vec<Int>], n: usize, modulus: Option<&Int>) -> Result<Vec<Vec<Int>>> {
    let reduce = |r: &mut Vec<Int>, upto: usize| {
        if let Some(m) = modulus {
            for x in r.iter_mut().take(upto) {
                *x = x.mod_floor(m);
            }
        }
    };
    let mut pending: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            reduce(&mut r, n);
            r
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots: Vec<Option<Vec<Int>>> = vec![None; n];
    for c in (0..n).rev() {
        let mut pivot: Option<Vec<Int>> = modulus.map(|m| {
            let mut e = vec![Int::zero(); n];
            e[c] = m.clone();
            e
        });
        let mut rest = Vec::with_capacity(pending.len());
        for r in pending.drain(..) {
            if r[c].is_zero() {
                rest.push(r);
                continue;
            }
            let Some(pv) = pivot.take() else {
                pivot = Some(r);
                continue;
            };
            let (g, u, v) = extended_gcd(&pv[c], &r[c])?;
            let pc = &pv[c] / &g;
            let rc = &r[c] / &g;
            let mut new_pivot: Vec<Int> = (0..n).map(|i| &u * &pv[i] + &v * &r[i]).collect();
            let mut other: Vec<Int> = (0..n).map(|i| &rc * &pv[i] - &pc * &r[i]).collect();
            reduce(&mut new_pivot, c);
            reduce(&mut other, c);
            if other.iter().any(|x| !x.is_zero()) {
                rest.push(other);
            }
            pivot = Some(new_pivot);
        }
        let mut pv = pivot.ok_or(Error::RankDeficient)?;
        if pv[c].is_negative() {
            pv.iter_mut().for_each(|x| *x = -&*x);
        }
        pivots[c] = Some(pv);
        pending = rest;
    }
    let mut out: Vec<Vec<Int>> = pivots.into_iter().map(|p| p.expect("pivot")).collect();
    for j in 0..n {
        for s in (0..j).rev() {
            let q = out[j][s].div_floor(&out[s][s]);
            if q.is_zero() {
                continue;
            }
            let (lo, hi) = out.split_at_mut(j);
            for (x, y) in hi[0].iter_mut().zip(&lo[s]).take(s + 1) {
                *x -= &q * y;
            }
        }
    }
    Ok(out)
}

/// Solve `x·H = y` for a lower-triangular integer `H` with nonzero diagonal.
/// Returns `None` if the solution is not integral.
pub fn solve_lower_integral(h: &[Vec<Int>], y: &[Int]) -> Option<Vec<Int>> {
    let n = h.len();
    let mut rem = y.to_vec();
    let mut x = vec![Int::zero(); n];
    for j in (0..n).rev() {
        let (q, r) = rem[j].div_rem(&h[j][j]);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (rs, hs) in rem.iter_mut().zip(&h[j]).take(j + 1) {
                *rs -= &q * hs;
            }
        }
        x[j] = q;
    }
    Some(x)
}

/// Basis of `{x ∈ F_p^k : Σ x_i·images[i] = 0}` where each image lies in F_p^m.
pub fn kernel_mod_p(images: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let k = images.len();
    let m = images.first().map_or(0, |r| r.len());
    // augmented rows [image | identity]
    let mut rows: Vec<Vec<u64>> = images
        .iter()
        .enumerate()
        .map(|(i, img)| {
            let mut r: Vec<u64> = img.iter().map(|&x| x % p).collect();
            r.extend((0..k).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut rank = 0;
    for col in 0..m {
        let Some(piv) = (rank..k).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = crate::poly::invmod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mul(f, y)) % p;
            }
        }
        rank += 1;
    }
    rows[rank..].iter().map(|r| r[m..].to_vec()).collect()
}

/// Coefficients `c` with `Σ c_i·basis[i] = target`, for linearly independent
/// `basis`; `None` when `target` is outside their span.
pub fn solve_rational(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    let n = target.len();
    // rows of the augmented system [b_1 … b_k | t]
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut rank = 0;
    for col in 0..k {
        let Some(piv) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut c = vec![Rat::zero(); k];
    for (r, &col) in pivots.iter().enumerate() {
        c[col] = m[r][k].clone();
    }
    Some(c)
}

/// Characteristic polynomial `det(xI − A)` of an integer matrix, returned
/// constant term first (monic, length n+1).
pub fn charpoly_int(a: &[Vec<Int>]) -> Vec<Int> {
    let n = a.len();
    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[n] = Int::one();
    // M_k = A·M_{k-1} + c_{n-k+1}·I, c_{n-k} = −tr(A·M_k)/k
    let mut m: Vec<Vec<Int>> = vec![vec![Int::zero(); n]; n];
    for k in 1..=n {
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        let tr: Int = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -(tr / Int::from(k as u64));
    }
    coeffs
}

pub fn matmul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    let p = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Int::zero(); p]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let x = &a[i][k];
            if x.is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += x * &bk[j];
            }
        }
    }
    out
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_int(a: &[Vec<Int>]) -> Int {
    let n = a.len();
    if n == 0 {
        return Int::one();
    }
    let mut m = a.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinant of a square rational matrix.
pub fn det_rat(a: &[Vec<Rat>]) -> Rat {
    let den = a
        .iter()
        .flatten()
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Vec<Int>> = a
        .iter()
        .map(|r| r.iter().map(|x| x.numer() * (&den / x.denom())).collect())
        .collect();
    let d = det_int(&scaled);
    Rat::new(d, num_traits::pow(den, a.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect()
    }

    #[test]
    fn hnf_small() {
        let h = hnf_lower(&m(&[&[2, 0], &[1, 3], &[0, 6]]), 2, None).unwrap();
        // lattice = {(2a + b, 3b + 6c)}; pivot col1 = 3, col0 = gcd = 2? (2,0),(1,3)
        assert_eq!(h, m(&[&[2, 0], &[1, 3]]));
        let h2 = hnf_lower(&m(&[&[1, 3], &[2, 0]]), 2, Some(&Int::from(6))).unwrap();
        assert_eq!(h, h2);
    }

    #[test]
    fn hnf_rank_deficient() {
        assert_eq!(hnf_lower(&m(&[&[1, 2], &[2, 4]]), 2, None), Err(Error::RankDeficient));
    }

    #[test]
    fn triangular_solve() {
        let h = m(&[&[2, 0], &[1, 3]]);
        assert_eq!(solve_lower_integral(&h, &[Int::from(5), Int::from(3)]), Some(vec![Int::from(2), Int::from(1)]));
        assert_eq!(solve_lower_integral(&h, &[Int::from(5), Int::from(6)]), None);
        assert_eq!(solve_lower_integral(&h, &[Int::from(1), Int::from(0)]), None);
    }

    #[test]
    fn kernel_over_f3() {
        // images of e0, e1, e2: (1, 2), (2, 1), (0, 0)
        let k = kernel_mod_p(&[vec![1, 2], vec![2, 1], vec![0, 0]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s0 = (v[0] + 2 * v[1]) % 3;
            let s1 = (2 * v[0] + v[1]) % 3;
            assert_eq!((s0, s1), (0, 0));
        }
    }

    #[test]
    fn charpoly_companion() {
        // companion of x^3 - 5: columns are images of 1, x, x^2
        let c = m(&[&[0, 0, 5], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(charpoly_int(&c), vec![Int::from(-5), Int::zero(), Int::zero(), Int::one()]);
    }

    #[test]
    fn determinants() {
        assert_eq!(det_int(&m(&[&[0, 2], &[3, 4]])), Int::from(-6));
        assert_eq!(det_int(&m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])), Int::from(4));
    }
}
