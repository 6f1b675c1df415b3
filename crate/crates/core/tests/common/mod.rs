#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hirzewahl_core::blowup_sections::SectionBasis;
use hirzewahl_core::{BlownSurface, DivisorClass, Surface};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

type Poly = BTreeMap<(u32, u32), BigInt>;

fn section_poly(basis: &SectionBasis, f: usize) -> Poly {
    basis.sections[f]
        .iter()
        .map(|(c, v)| (basis.monomials.exponents[*c], v.clone()))
        .collect()
}

fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for ((i, k), u) in p {
        for ((j, l), v) in q {
            *out.entry((i + j, k + l)).or_insert_with(BigInt::zero) += u * v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn d_dt(p: &Poly) -> Poly {
    p.iter()
        .filter(|((i, _), _)| *i > 0)
        .map(|((i, k), v)| ((i - 1, *k), v * BigInt::from(*i)))
        .collect()
}

fn d_ds(p: &Poly) -> Poly {
    p.iter()
        .filter(|((_, k), _)| *k > 0)
        .map(|((i, k), v)| ((*i, k - 1), v * BigInt::from(*k)))
        .collect()
}

fn sub(p: &Poly, q: &Poly) -> Poly {
    let mut out = p.clone();
    for (e, v) in q {
        *out.entry(*e).or_insert_with(BigInt::zero) -= v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Columns `f dg - g df` built by polynomial arithmetic, keyed by
/// `(block, t-exponent, s-exponent)` with block 0 for `dt`, 1 for `ds`.
pub fn gaussian_columns(basis: &SectionBasis) -> Vec<BTreeMap<(u8, u32, u32), BigInt>> {
    let polys: Vec<Poly> = (0..basis.len()).map(|f| section_poly(basis, f)).collect();
    let mut cols = Vec::new();
    for f in 0..polys.len() {
        for g in f + 1..polys.len() {
            let (pf, pg) = (&polys[f], &polys[g]);
            let dt = sub(&mul(pf, &d_dt(pg)), &mul(pg, &d_dt(pf)));
            let ds = sub(&mul(pf, &d_ds(pg)), &mul(pg, &d_ds(pf)));
            let mut col = BTreeMap::new();
            for ((i, k), v) in dt {
                col.insert((0u8, i, k), v);
            }
            for ((i, k), v) in ds {
                col.insert((1u8, i, k), v);
            }
            cols.push(col);
        }
    }
    cols
}

/// Dense integer matrix (rows × cols) from sparse columns; rows ordered by key.
pub fn dense_from_columns<K: Ord + Clone>(cols: &[BTreeMap<K, BigInt>]) -> Vec<Vec<BigInt>> {
    let keys: BTreeSet<K> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
    let index: BTreeMap<K, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut out = vec![vec![BigInt::zero(); cols.len()]; index.len()];
    for (c, col) in cols.iter().enumerate() {
        for (k, v) in col {
            out[index[k]][c] = v.clone();
        }
    }
    out
}

/// Rank over `Z/p`. A lower bound for the rational rank.
pub fn rank_mod_p(m: &[Vec<BigInt>], p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut rows: Vec<Vec<u64>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.mod_floor(&pb).to_u64().unwrap())
                .collect()
        })
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let iv = inv(rows[rank][c]);
        let pivot: Vec<u64> = rows[rank].iter().map(|&x| mulmod(x, iv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - mulmod(f, y)) % p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Fraction-free Bareiss elimination over the integers.
pub fn bareiss_rank(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Reider verdict by brute-force enumeration of the candidate families with
/// `α, β ≤ bound`. Returns `(verdict, number of blocking classes found)`.
pub fn reider_brute(x: &BlownSurface, d: &DivisorClass, bound: i64) -> (bool, usize) {
    let delta = x.delta();
    let n = i64::from(x.twist());
    let k = x.canonical();
    let nc = d - &k;
    let n2 = x.intersect(&nc, &nc).unwrap();
    let mut found = 0;
    let mut check = |g: &DivisorClass| {
        let nd = x.intersect(&nc, g).unwrap();
        let sq = x.intersect(g, g).unwrap();
        let excluded = nd < 0
            || (nd == 0 && (sq == -1 || sq == -2))
            || (nd == 1 && (sq == -1 || sq == 0))
            || (nd == 2 && sq == 0);
        if excluded {
            found += 1;
        }
    };
    check(&DivisorClass::pullback(0, 1, delta));
    check(&DivisorClass::pullback(1, 0, delta));
    for j in 0..delta {
        check(&DivisorClass::exceptional(j, delta));
        let mut g = DivisorClass::pullback(0, 1, delta);
        g.m[j] = 1;
        check(&g);
    }
    for alpha in 1..=bound {
        for beta in alpha * n..=bound.max(alpha * n) {
            let mut nu = vec![0i64; delta];
            loop {
                check(&DivisorClass::new(alpha, beta, nu.clone()));
                let mut j = 0;
                while j < delta && nu[j] == alpha {
                    nu[j] = 0;
                    j += 1;
                }
                if j == delta {
                    break;
                }
                nu[j] += 1;
            }
        }
    }
    (n2 >= 10 && found == 0, found)
}
