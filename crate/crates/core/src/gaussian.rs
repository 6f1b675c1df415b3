//! Gaussian maps `∧² H0(X, L) → H0(X, Ω¹_X(2L))`, `f ∧ g ↦ f dg - g df`, as
//! explicit matrices in the torus chart.
//!
//! Global sections and global twisted 1-forms restrict injectively to the
//! dense chart, so the rank of the chart matrix is the rank of the map.
//! Columns are the pairs `(f, g)`, `f < g`, of a section basis; rows are the
//! chart monomials of the `dt` and `ds` coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::blowup_sections::{generic_blowup, section_basis, SectionBasis};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::picard::{BlownSurface, ChartPoint, DivisorClass, HirzebruchSurface, NodalCurve};
use crate::riemann_roch::dim_table;

pub use crate::linalg::rank_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FormBlock {
    Dt,
    Ds,
}

/// Row label: the block and the exponent `(x, y)` of `t^x s^y`.
pub type RowKey = (FormBlock, u32, u32);

#[derive(Debug, Clone)]
pub struct GaussianMatrix {
    pub basis: SectionBasis,
    pub matrix: ExactMatrix,
    pub rows: Vec<RowKey>,
    /// `(f, g)` indices into `basis.sections` for each column.
    pub pairs: Vec<(usize, usize)>,
}

/// Image of the monomial pair `t^i s^k ∧ t^p s^q`: the `dt` coefficient is
/// `(p - i) t^{i+p-1} s^{k+q}` and the `ds` coefficient `(q - k) t^{i+p} s^{k+q-1}`.
pub fn monomial_pair_image(f: (u32, u32), g: (u32, u32)) -> [(RowKey, i64); 2] {
    let (i, k) = f;
    let (p, q) = g;
    let dt = i64::from(p) - i64::from(i);
    let ds = i64::from(q) - i64::from(k);
    // A zero coefficient is reported with a dummy in-range key.
    let dt_key = (FormBlock::Dt, (i + p).saturating_sub(1), k + q);
    let ds_key = (FormBlock::Ds, i + p, (k + q).saturating_sub(1));
    [(dt_key, dt), (ds_key, ds)]
}

fn column_image(basis: &SectionBasis, f: usize, g: usize) -> BTreeMap<RowKey, BigInt> {
    let exps = &basis.monomials.exponents;
    let mut acc: BTreeMap<RowKey, BigInt> = BTreeMap::new();
    for (cf, vf) in &basis.sections[f] {
        for (cg, vg) in &basis.sections[g] {
            for (key, coeff) in monomial_pair_image(exps[*cf], exps[*cg]) {
                if coeff != 0 {
                    *acc.entry(key).or_insert_with(BigInt::zero) += vf * vg * BigInt::from(coeff);
                }
            }
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

/// Assembles the Gaussian matrix of `l` from an explicit section basis.
pub fn gaussian_matrix_from_basis(basis: SectionBasis) -> GaussianMatrix {
    let d = basis.len();
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|f| (f + 1..d).map(move |g| (f, g)))
        .collect();
    let columns: Vec<BTreeMap<RowKey, BigInt>> = pairs
        .iter()
        .map(|&(f, g)| column_image(&basis, f, g))
        .collect();
    let mut index: BTreeMap<RowKey, usize> = BTreeMap::new();
    for col in &columns {
        for key in col.keys() {
            index.insert(*key, 0);
        }
    }
    for (i, slot) in index.values_mut().enumerate() {
        *slot = i;
    }
    let mut matrix = ExactMatrix::zeros(index.len(), pairs.len());
    for (c, col) in columns.into_iter().enumerate() {
        for (key, v) in col {
            matrix.set(index[&key], c, BigRational::from_integer(v));
        }
    }
    GaussianMatrix {
        basis,
        matrix,
        rows: index.into_keys().collect(),
        pairs,
    }
}

/// Gaussian matrix of `l` on `x`, using the kernel basis of the vanishing
/// constraints at the points of `x`.
pub fn gaussian_matrix(x: &BlownSurface, l: &DivisorClass) -> Result<GaussianMatrix> {
    Ok(gaussian_matrix_from_basis(section_basis(x, l)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Surjectivity {
    Surjective,
    NotSurjective,
    /// Rank above the asserted target dimension: the dimension formula does
    /// not apply to this input.
    Inconsistent,
    NotAsserted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaussianReport {
    pub curve: NodalCurve,
    pub seed: u64,
    /// `h0(X, K_X + C~)`.
    pub domain_dim: usize,
    pub wedge_dim: usize,
    /// `h0(X, Ω¹_X(2K_X + 2C~)) = 16g - 4C² - 5δ + 14`.
    pub target_dim: i128,
    pub dimension_hypothesis: bool,
    pub rows: usize,
    pub rank: usize,
    pub surjective: Surjectivity,
    #[cfg_attr(
        feature = "serde",
        serde(skip_serializing_if = "Option::is_none", default)
    )]
    pub timing_ms: Option<u64>,
}

impl GaussianReport {
    pub fn corank(&self) -> i128 {
        self.target_dim - self.rank as i128
    }
}

fn wedge(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Rank of `Φ_{X, K_X + C~}` at explicit node positions.
pub fn check_surjectivity_with_points(
    curve: &NodalCurve,
    points: Vec<ChartPoint>,
    seed: u64,
    max_wedge: Option<usize>,
) -> Result<GaussianReport> {
    let delta = curve.delta as usize;
    if points.len() != delta {
        return Err(if points.is_empty() {
            Error::MissingPoints { delta }
        } else {
            Error::PointCount {
                expected: delta,
                found: points.len(),
            }
        });
    }
    let x = BlownSurface::with_points(HirzebruchSurface::new(curve.n), points)?;
    report_on(curve, &x, seed, max_wedge)
}

/// Rank of `Φ_{X, K_X + C~}` with nodes at `pick_generic_points(n, δ, seed)`.
pub fn check_surjectivity_phi_x(
    curve: &NodalCurve,
    seed: u64,
    max_wedge: Option<usize>,
) -> Result<GaussianReport> {
    let x = generic_blowup(curve.n, curve.delta as usize, seed);
    report_on(curve, &x, seed, max_wedge)
}

fn report_on(
    curve: &NodalCurve,
    x: &BlownSurface,
    seed: u64,
    max_wedge: Option<usize>,
) -> Result<GaussianReport> {
    let adjoint = curve.classes().adjoint;
    let basis = section_basis(x, &adjoint)?;
    let domain_dim = basis.len();
    let wedge_dim = wedge(domain_dim);
    if let Some(budget) = max_wedge {
        if wedge_dim > budget {
            return Err(Error::BudgetExceeded {
                wedge: wedge_dim,
                budget,
            });
        }
    }
    let table = dim_table(curve);
    let gm = gaussian_matrix_from_basis(basis);
    let rank = rank_exact(&gm.matrix);
    let target_dim = table.h0_2k_2c;
    let surjective = if !table.hypothesis {
        Surjectivity::NotAsserted
    } else if rank as i128 == target_dim {
        Surjectivity::Surjective
    } else if (rank as i128) < target_dim {
        Surjectivity::NotSurjective
    } else {
        Surjectivity::Inconsistent
    };
    Ok(GaussianReport {
        curve: *curve,
        seed,
        domain_dim,
        wedge_dim,
        target_dim,
        dimension_hypothesis: table.hypothesis,
        rows: gm.matrix.rows(),
        rank,
        surjective,
        timing_ms: None,
    })
}
