//! Global sections of line bundles on `F_n` as chart polynomials, and
//! sections on the blow-up as the subspace vanishing to prescribed order at
//! the centres.
//!
//! In the torus chart `(t, s)` a section of `aC0 + bF` is a polynomial
//! `Σ c_{ik} t^i s^k` with `0 ≤ k ≤ a` and `0 ≤ i ≤ b - kn`; the exponent `k`
//! is the vanishing order along the section `s = 0` disjoint from `C0`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank_exact};
use crate::picard::{BlownSurface, ChartPoint, DivisorClass, Surface};

pub use crate::linalg::ExactMatrix;

/// Largest numerator / denominator used for sampled point coordinates.
pub const POINT_HEIGHT: i64 = 1009;

/// Exponent pairs `(i, k)` of the chart monomials `t^i s^k` spanning `H0(F_n, D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    pub divisor: DivisorClass,
    pub exponents: Vec<(u32, u32)>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn index_of(&self, exponent: (u32, u32)) -> Option<usize> {
        self.exponents.iter().position(|&e| e == exponent)
    }
}

/// Monomial basis of `H0(F_n, aC0 + bF)`, ordered by `s`-degree then `t`-degree.
/// Only the base part of `d` is used.
pub fn monomial_basis(n: u32, d: &DivisorClass) -> MonomialBasis {
    let mut exponents = Vec::new();
    if d.a >= 0 {
        for k in 0..=d.a {
            let top = d.b - k * i64::from(n);
            for i in 0..=top {
                exponents.push((i as u32, k as u32));
            }
        }
    }
    MonomialBasis {
        divisor: d.clone(),
        exponents,
    }
}

/// Falling factorial `x (x-1) ... (x-r+1)`.
fn falling(x: u32, r: u32) -> BigInt {
    (0..r).fold(BigInt::one(), |acc, j| acc * BigInt::from(x - j))
}

fn powers(x: &BigRational, top: u32) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(top as usize + 1);
    let mut cur = BigRational::one();
    for _ in 0..=top {
        out.push(cur.clone());
        cur *= x;
    }
    out
}

/// One row per point `p_j` and per derivative `∂_t^u ∂_s^v` with
/// `u + v < m_j`; the entry in column `(i, k)` is that derivative of
/// `t^i s^k` evaluated at `p_j`.
pub fn constraint_matrix(
    basis: &MonomialBasis,
    points: &[ChartPoint],
    orders: &[i64],
) -> Result<ExactMatrix> {
    if points.len() != orders.len() {
        return Err(Error::PointCount {
            expected: orders.len(),
            found: points.len(),
        });
    }
    let mut rows = Vec::new();
    let max_i = basis.exponents.iter().map(|e| e.0).max().unwrap_or(0);
    let max_k = basis.exponents.iter().map(|e| e.1).max().unwrap_or(0);
    for (p, &order) in points.iter().zip(orders) {
        if order < 0 {
            return Err(Error::NegativeMultiplicity(order));
        }
        let tp = powers(&p.t, max_i);
        let sp = powers(&p.s, max_k);
        for total in 0..order as u32 {
            for u in 0..=total {
                let v = total - u;
                let row: Vec<BigRational> = basis
                    .exponents
                    .iter()
                    .map(|&(i, k)| {
                        if u > i || v > k {
                            BigRational::zero()
                        } else {
                            let c = falling(i, u) * falling(k, v);
                            BigRational::from_integer(c)
                                * &tp[(i - u) as usize]
                                * &sp[(k - v) as usize]
                        }
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    let mut m = ExactMatrix::zeros(rows.len(), basis.len());
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    Ok(m)
}

fn points_for(x: &BlownSurface) -> Result<&[ChartPoint]> {
    match x.points() {
        Some(p) => Ok(p),
        None if x.delta() == 0 => Ok(&[]),
        None => Err(Error::MissingPoints { delta: x.delta() }),
    }
}

/// `h0(X, σ*(aC0 + bF) - Σ m_j E_j)` for `m_j ≥ 0`: sections of `aC0 + bF`
/// vanishing to order `m_j` at `p_j`.
pub fn h0_blowup(x: &BlownSurface, d: &DivisorClass) -> Result<i128> {
    x.check_class(d)?;
    let points = points_for(x)?;
    let basis = monomial_basis(x.twist(), d);
    let constraints = constraint_matrix(&basis, points, &d.m)?;
    Ok(basis.len() as i128 - rank_exact(&constraints) as i128)
}

/// A basis of `H0(X, D)` expressed in the chart monomials of the base class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionBasis {
    pub monomials: MonomialBasis,
    /// Sparse primitive integer coefficient vectors over `monomials`.
    pub sections: Vec<Vec<(usize, BigInt)>>,
}

impl SectionBasis {
    pub fn len(&self) -> usize {
        self.sections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.is_empty()
    }
}

/// Kernel of the vanishing constraints on the monomial basis.
pub fn section_basis(x: &BlownSurface, d: &DivisorClass) -> Result<SectionBasis> {
    x.check_class(d)?;
    let points = points_for(x)?;
    let monomials = monomial_basis(x.twist(), d);
    let constraints = constraint_matrix(&monomials, points, &d.m)?;
    let sections = if constraints.rows() == 0 {
        (0..monomials.len())
            .map(|c| vec![(c, BigInt::one())])
            .collect()
    } else {
        kernel_basis(&constraints.to_dense(), monomials.len())
    };
    Ok(SectionBasis {
        monomials,
        sections,
    })
}

fn sample_coordinate(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.gen_range(1..=POINT_HEIGHT);
    let num = if rng.gen::<bool>() { -num } else { num };
    let den = rng.gen_range(1..=POINT_HEIGHT);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `delta` torus points with pairwise distinct `t` and nonzero `t`, `s`,
/// drawn from a ChaCha8 stream keyed by `seed` (stream selected by `n`).
pub fn pick_generic_points(n: u32, delta: usize, seed: u64) -> Vec<ChartPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(n));
    let mut points: Vec<ChartPoint> = Vec::with_capacity(delta);
    while points.len() < delta {
        let t = sample_coordinate(&mut rng);
        let s = sample_coordinate(&mut rng);
        if points.iter().all(|p| p.t != t) {
            points.push(ChartPoint::new(t, s));
        }
    }
    points
}

/// Blow-up of `F_n` at `pick_generic_points(n, delta, seed)`.
pub fn generic_blowup(n: u32, delta: usize, seed: u64) -> BlownSurface {
    let base = crate::picard::HirzebruchSurface::new(n);
    BlownSurface::with_points(base, pick_generic_points(n, delta, seed))
        .expect("sampled points satisfy the genericity invariants")
}
