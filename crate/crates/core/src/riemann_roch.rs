//! Euler characteristics and cohomology of line bundles and of twisted
//! cotangent bundles on `F_n` and its blow-ups.

use crate::error::{Error, Result};
use crate::picard::{DivisorClass, HirzebruchSurface, NodalCurve, Surface};

/// `(h0, h1, h2)` of a coherent sheaf together with its Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CohomologyTriple {
    pub h0: i128,
    pub h1: i128,
    pub h2: i128,
    pub chi: i128,
}

impl CohomologyTriple {
    /// Returns `None` if any dimension is negative.
    pub fn new(h0: i128, h1: i128, h2: i128) -> Option<Self> {
        (h0 >= 0 && h1 >= 0 && h2 >= 0).then_some(Self {
            h0,
            h1,
            h2,
            chi: h0 - h1 + h2,
        })
    }
}

/// `χ(O(D)) = 1 + (D² - D·K)/2`; every surface here is rational, so `χ(O) = 1`.
pub fn chi_line<S: Surface + ?Sized>(surface: &S, d: &DivisorClass) -> Result<i128> {
    let k = surface.canonical();
    let twice = surface.intersect(d, d)? - surface.intersect(d, &k)?;
    assert!(twice % 2 == 0, "D² - D·K is always even on a lattice class");
    Ok(1 + twice / 2)
}

/// `h0(F_n, aC0 + bF) = Σ_{k=0}^{a} max(0, b - kn + 1)`, via the splitting
/// `π_* O(aC0 + bF) = ⊕_{k ≤ a} O_{P1}(b - kn)`.
pub fn h0_base(n: u32, a: i64, b: i64) -> i128 {
    if a < 0 || b < 0 {
        return 0;
    }
    let (n, a, b) = (i128::from(n), i128::from(a), i128::from(b));
    // Summands are positive exactly for k ≤ b/n.
    let last = if n == 0 { a } else { a.min(b / n) };
    (last + 1) * (b + 1) - n * last * (last + 1) / 2
}

/// Full cohomology of a line bundle on `F_n`: `h0` by fiberwise counting,
/// `h2` by Serre duality, `h1` from Riemann–Roch.
///
/// # Panics
///
/// If the derived `h1` is negative, which would mean one of the three
/// formulas is wrong.
pub fn h_line(surface: &HirzebruchSurface, d: &DivisorClass) -> Result<CohomologyTriple> {
    if !d.m.is_empty() {
        return Err(Error::NotOnBase(d.m.len()));
    }
    let n = surface.n();
    let h0 = h0_base(n, d.a, d.b);
    let dual = &surface.canonical() - d;
    let h2 = h0_base(n, dual.a, dual.b);
    let chi = chi_line(surface, d)?;
    let h1 = h0 + h2 - chi;
    match CohomologyTriple::new(h0, h1, h2) {
        Some(t) => Ok(t),
        None => panic!("internal error: negative h1 = {h1} for {d} on F_{n}"),
    }
}

/// `χ(Ω¹_X(D)) = D² - (2 + δ)`.
pub fn chi_omega_twist<S: Surface + ?Sized>(surface: &S, d: &DivisorClass) -> Result<i128> {
    Ok(surface.intersect(d, d)? - (2 + surface.delta() as i128))
}

/// The same Euler characteristic through rank-two Riemann–Roch,
/// `2χ(O) - c1·K/2 + (c1² - 2c2)/2` with `c1 = K + 2D` and
/// `c2 = c2(Ω¹_X) + K·D + D² = 4 + δ + K·D + D²`.
pub fn chi_omega_twist_rank_two<S: Surface + ?Sized>(
    surface: &S,
    d: &DivisorClass,
) -> Result<i128> {
    let k = surface.canonical();
    let c1 = &k + &(2 * d);
    let c2 = 4 + surface.delta() as i128 + surface.intersect(&k, d)? + surface.intersect(d, d)?;
    let twice = 4 - surface.intersect(&c1, &k)? + surface.intersect(&c1, &c1)? - 2 * c2;
    assert!(
        twice % 2 == 0,
        "rank-two Riemann–Roch produced a half-integer"
    );
    Ok(twice / 2)
}

/// Cohomology dimensions of `Ω¹_X(2K_X + C~)`, `Ω¹_X(2K_X + 2C~)` and of the
/// restriction of the latter to `C~`, as closed formulas in `g`, `C²`, `δ`.
///
/// The values are only meaningful when `hypothesis` is true; outside that
/// region this is a formal evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DimensionTable {
    pub hypothesis: bool,
    pub h0_2k_c: i128,
    pub h1_2k_c: i128,
    pub h2_2k_c: i128,
    pub h0_2k_2c: i128,
    pub h1_2k_2c: i128,
    pub h2_2k_2c: i128,
    pub h0_restricted: i128,
    pub h1_restricted: i128,
}

impl DimensionTable {
    pub fn chi_2k_c(&self) -> i128 {
        self.h0_2k_c - self.h1_2k_c + self.h2_2k_c
    }

    pub fn chi_2k_2c(&self) -> i128 {
        self.h0_2k_2c - self.h1_2k_2c + self.h2_2k_2c
    }

    pub fn chi_restricted(&self) -> i128 {
        self.h0_restricted - self.h1_restricted
    }
}

/// `a ≥ max{5, δ+2}` and `b ≥ max{(a-2)n + 6, (a-1)n + δ + 2}`, or `n = 0`,
/// `a ≥ max{5, δ+2}` and `b ≥ max{5, δ+2}`.
pub fn dimension_hypothesis(curve: &NodalCurve) -> bool {
    let (n, a, b, delta) = curve.ints();
    let a_ok = a >= 5.max(delta + 2);
    let general = a_ok && b >= ((a - 2) * n + 6).max((a - 1) * n + delta + 2);
    let rational_ruling = n == 0 && a_ok && b >= 5.max(delta + 2);
    general || rational_ruling
}

pub fn dim_table(curve: &NodalCurve) -> DimensionTable {
    let (_, _, _, delta) = curve.ints();
    let g = curve.genus().arithmetic;
    let c2 = curve.self_intersection();
    DimensionTable {
        hypothesis: dimension_hypothesis(curve),
        h0_2k_c: 8 * g + 22 - 3 * c2,
        h1_2k_c: delta,
        h2_2k_c: 0,
        h0_2k_2c: 16 * g - 4 * c2 - 5 * delta + 14,
        h1_2k_2c: 0,
        h2_2k_2c: 0,
        h0_restricted: 8 * g - c2 - 4 * delta - 8,
        h1_restricted: 0,
    }
}
