//! Exact ranks of small integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over `F_p` of an integer matrix given by rows.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_pow(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let f = row[c];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(prow) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over `Q`. Uses checked `i64` elimination with content removal and
/// restarts with big integers on overflow.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    rank_i64(rows).unwrap_or_else(|| {
        let big: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        rank_big(big)
    })
}

fn rank_i64(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len())
            .filter(|&r| m[r][c] != 0)
            .min_by_key(|&r| m[r][c].unsigned_abs())
        else {
            continue;
        };
        m.swap(rank, piv);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = prow[c];
        for row in bottom.iter_mut() {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let g = p.gcd(&a);
            let (pf, af) = (p / g, a / g);
            let mut content = 0i64;
            for (x, &y) in row.iter_mut().zip(prow) {
                *x = x.checked_mul(pf)?.checked_sub(y.checked_mul(af)?)?;
                content = content.gcd(x);
            }
            if content > 1 {
                row.iter_mut().for_each(|x| *x /= content);
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len())
            .filter(|&r| !m[r][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
        else {
            continue;
        };
        m.swap(rank, piv);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = prow[c].clone();
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = p.gcd(&row[c]);
            let (pf, af) = (&p / &g, &row[c] / &g);
            let mut content = BigInt::zero();
            for (x, y) in row.iter_mut().zip(prow) {
                *x = &*x * &pf - y * &af;
                content = content.gcd(x);
            }
            if content > BigInt::from(1) {
                row.iter_mut().for_each(|x| *x = &*x / &content);
            }
        }
        rank += 1;
    }
    rank
}
