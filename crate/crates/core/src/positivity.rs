//! Positivity on `F_n` and on blow-ups at general points: base-point
//! freeness, very ampleness, Reider and Nakai–Moishezon checks over the
//! candidate curve families of a general blow-up, jet ampleness bounds and
//! the `A/B/M` decomposition.
//!
//! All verdicts are lattice computations. The geometric input is the
//! declared genericity of the blown-up points: off `C0`, on distinct fibers.
//! Under that assumption an irreducible curve on `X` is `E_j`, `σ*C0`,
//! `σ*F`, `σ*F - E_j`, or `ασ*C0 + βσ*F - Σ ν_j E_j` with `α ≥ 1`,
//! `β ≥ αn` and `0 ≤ ν_j ≤ α`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::picard::{BlownSurface, DivisorClass, HirzebruchSurface, Surface};

/// `aC0 + bF` is base-point free on `F_n`.
pub fn is_bpf(surface: &HirzebruchSurface, d: &DivisorClass) -> bool {
    let n = i128::from(surface.n());
    let (a, b) = (i128::from(d.a), i128::from(d.b));
    a >= 0 && b >= 0 && b >= a * n
}

/// `aC0 + bF` is very ample on `F_n`. Multiples of `F` are never very ample.
pub fn is_very_ample(surface: &HirzebruchSurface, d: &DivisorClass) -> bool {
    let n = i128::from(surface.n());
    let (a, b) = (i128::from(d.a), i128::from(d.b));
    a >= 1 && b > a * n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CurveFamily {
    Fiber,
    FiberMinusExceptional,
    Exceptional,
    NegativeSection,
    Cone,
}

/// Why a candidate curve rules out Reider's criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum BlockerKind {
    /// `N·Γ < 0`: `N` is not nef.
    NotNef,
    /// `N·Γ = 0` and `Γ² ∈ {-1, -2}`.
    Contracted,
    /// `N·Γ = 1` and `Γ² ∈ {-1, 0}`.
    DegreeOne,
    /// `N·Γ = 2` and `Γ² = 0`.
    DegreeTwo,
    /// `N·Γ = 0` along a whole ray of the cone; not resolved further.
    DegenerateRay,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Blocker {
    pub family: CurveFamily,
    pub curve: DivisorClass,
    pub n_dot: i128,
    pub self_intersection: i128,
    pub kind: BlockerKind,
}

impl fmt::Display for Blocker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (N.G = {}, G^2 = {})",
            self.curve, self.n_dot, self.self_intersection
        )
    }
}

/// Classifies `(N·Γ, Γ²)` against the exclusions in Reider's criterion.
pub fn reider_case(n_dot: i128, self_intersection: i128) -> Option<BlockerKind> {
    match (n_dot, self_intersection) {
        (d, _) if d < 0 => Some(BlockerKind::NotNef),
        (0, -2..=-1) => Some(BlockerKind::Contracted),
        (1, -1..=0) => Some(BlockerKind::DegreeOne),
        (2, 0) => Some(BlockerKind::DegreeTwo),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReiderReport {
    pub divisor: DivisorClass,
    /// `N = D - K_X`.
    pub n_class: DivisorClass,
    pub n_squared: i128,
    pub blockers: Vec<Blocker>,
    pub verdict: bool,
}

struct Lattice<'a> {
    x: &'a BlownSurface,
    n_class: DivisorClass,
    blockers: Vec<Blocker>,
}

impl Lattice<'_> {
    fn consider(&mut self, family: CurveFamily, curve: DivisorClass) -> Result<()> {
        let n_dot = self.x.intersect(&self.n_class, &curve)?;
        let sq = self.x.intersect(&curve, &curve)?;
        if let Some(kind) = reider_case(n_dot, sq) {
            self.push(family, curve, n_dot, sq, kind);
        }
        Ok(())
    }

    fn push(
        &mut self,
        family: CurveFamily,
        curve: DivisorClass,
        n_dot: i128,
        self_intersection: i128,
        kind: BlockerKind,
    ) {
        self.blockers.push(Blocker {
            family,
            curve,
            n_dot,
            self_intersection,
            kind,
        });
    }
}

fn cone_class(n: i64, alpha: i64, beta_excess: i64, nu: &[i64]) -> DivisorClass {
    DivisorClass::new(alpha, alpha * n + beta_excess, nu.to_vec())
}

/// Reider's criterion for very ampleness of `D = K_X + N` on a blow-up of
/// `F_n` at general points.
///
/// `N² ≥ 10` is checked directly. Curves are drawn from the families in the
/// module docs; on the cone `N·Γ` is minimized symbolically, and the
/// finitely many cone classes that could satisfy an exclusion are
/// enumerated. When the minimum is unbounded or attained along a ray, a
/// single witness class is reported instead.
///
/// Returns [`Error::Inconclusive`] if genericity of the points is not declared.
pub fn reider_very_ample(x: &BlownSurface, d: &DivisorClass) -> Result<ReiderReport> {
    x.check_class(d)?;
    if !x.is_general_position() {
        return Err(Error::Inconclusive);
    }
    let delta = x.delta();
    let n = i64::from(x.twist());
    let n_class = d - &x.canonical();
    let n_squared = x.intersect(&n_class, &n_class)?;
    let mut lat = Lattice {
        x,
        n_class: n_class.clone(),
        blockers: Vec::new(),
    };

    lat.consider(CurveFamily::Fiber, DivisorClass::pullback(0, 1, delta))?;
    for j in 0..delta {
        let mut g = DivisorClass::pullback(0, 1, delta);
        g.m[j] = 1;
        lat.consider(CurveFamily::FiberMinusExceptional, g)?;
        lat.consider(
            CurveFamily::Exceptional,
            DivisorClass::exceptional(j, delta),
        )?;
    }
    lat.consider(
        CurveFamily::NegativeSection,
        DivisorClass::pullback(1, 0, delta),
    )?;
    search_cone(&mut lat, n)?;

    let verdict = n_squared >= 10 && lat.blockers.is_empty();
    Ok(ReiderReport {
        divisor: d.clone(),
        n_class,
        n_squared,
        blockers: lat.blockers,
        verdict,
    })
}

/// For `Γ = ασ*C0 + (αn + β')σ*F - Σ ν_j E_j`,
/// `N·Γ = pβ' + αq - Σ μ_j ν_j ≥ pβ' + α c` with `c = q - Σ_{μ_j > 0} μ_j`.
fn search_cone(lat: &mut Lattice<'_>, n: i64) -> Result<()> {
    let (p, q) = (lat.n_class.a, lat.n_class.b);
    let mu = lat.n_class.m.clone();
    let delta = mu.len();
    let c = q - mu.iter().filter(|&&m| m > 0).sum::<i64>();
    let extremal: Vec<i64> = mu.iter().map(|&m| i64::from(m > 0)).collect();

    if p < 0 {
        let excess = c.max(0) + 1;
        let g = cone_class(n, 1, excess, &extremal);
        let n_dot = lat.x.intersect(&lat.n_class, &g)?;
        let sq = lat.x.intersect(&g, &g)?;
        lat.push(CurveFamily::Cone, g, n_dot, sq, BlockerKind::NotNef);
        return Ok(());
    }
    if c <= 0 {
        let g = cone_class(n, 1, 0, &extremal);
        let n_dot = lat.x.intersect(&lat.n_class, &g)?;
        let sq = lat.x.intersect(&g, &g)?;
        let kind = if n_dot < 0 {
            BlockerKind::NotNef
        } else {
            BlockerKind::DegenerateRay
        };
        lat.push(CurveFamily::Cone, g, n_dot, sq, kind);
        return Ok(());
    }
    // Every exclusion needs N·Γ ≤ 2 and Γ² ≤ 0, so αc ≤ 2 and, from
    // Γ² = 2αβ' + α²n - Σν² ≤ 0, 2β' ≤ α(δ - n).
    for alpha in 1..=2 / c {
        let by_square = (alpha * (delta as i64 - n)).div_euclid(2);
        let by_degree = if p == 0 {
            by_square
        } else {
            (2 - alpha * c).div_euclid(p)
        };
        let top = by_square.min(by_degree);
        for excess in 0..=top {
            let mut nu = vec![0i64; delta];
            enumerate_nu(lat, n, alpha, excess, &mut nu, 0)?;
        }
    }
    Ok(())
}

fn enumerate_nu(
    lat: &mut Lattice<'_>,
    n: i64,
    alpha: i64,
    excess: i64,
    nu: &mut Vec<i64>,
    j: usize,
) -> Result<()> {
    if j == nu.len() {
        return lat.consider(CurveFamily::Cone, cone_class(n, alpha, excess, nu));
    }
    for v in 0..=alpha {
        nu[j] = v;
        enumerate_nu(lat, n, alpha, excess, nu, j + 1)?;
    }
    nu[j] = 0;
    Ok(())
}

/// Nakai–Moishezon on a blow-up of `F_n` at one general point: `D² > 0` and
/// `D·Γ > 0` on every candidate family. `X` is toric, so this also decides
/// very ampleness.
pub fn nakai_moishezon_delta1(x: &BlownSurface, d: &DivisorClass) -> Result<bool> {
    if x.delta() != 1 {
        return Err(Error::NotOneNodal(x.delta()));
    }
    x.check_class(d)?;
    if !x.is_general_position() {
        return Err(Error::Inconclusive);
    }
    let n = i64::from(x.twist());
    let positive = |g: DivisorClass| -> Result<bool> { Ok(x.intersect(d, &g)? > 0) };
    let mu = d.m[0];
    Ok(x.intersect(d, d)? > 0
        && positive(DivisorClass::pullback(0, 1, 1))?
        && positive(DivisorClass::new(0, 1, vec![1]))?
        && positive(DivisorClass::pullback(1, 0, 1))?
        && positive(DivisorClass::exceptional(0, 1))?
        && d.a >= 0
        && d.b - mu.max(0) > 0
        && positive(DivisorClass::new(1, n, vec![i64::from(mu > 0)]))?)
}

/// Certificate for the sufficient condition `a ≥ δ + 2`, `b ≥ (a-1)n + δ + 2`
/// under which `Ω¹_X(2K_X + 2C~)` is `(2δ - 1)`-jet ample at the nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct JetCertificate {
    pub holds: bool,
    pub delta: u32,
    /// `L = (2δ-1)C0 + (2δn + 2δ - n - 1)F`.
    pub l: DivisorClass,
    /// `(2a-3-2δ)C0 + (2b-3-n-2δn-2δ)F`, required to be globally generated.
    pub residual: DivisorClass,
    pub residual_nonnegative: bool,
    pub residual_bpf: bool,
    /// The line bundle `2K + 2C` on `F_n`.
    pub line_twist: DivisorClass,
}

pub fn jet_ample_f(n: u32, a: u32, b: u32, delta: u32) -> JetCertificate {
    let (n64, a64, b64, d64) = (i64::from(n), i64::from(a), i64::from(b), i64::from(delta));
    let holds = a64 >= d64 + 2 && b64 >= (a64 - 1) * n64 + d64 + 2;
    let l = DivisorClass::on_base(2 * d64 - 1, 2 * d64 * n64 + 2 * d64 - n64 - 1);
    let residual = DivisorClass::on_base(
        2 * a64 - 3 - 2 * d64,
        2 * b64 - 3 - n64 - 2 * d64 * n64 - 2 * d64,
    );
    let residual_nonnegative = residual.a >= 0;
    let residual_bpf = residual.b >= residual.a * n64;
    JetCertificate {
        holds,
        delta,
        l,
        residual,
        residual_nonnegative,
        residual_bpf,
        line_twist: DivisorClass::on_base(2 * a64 - 4, 2 * b64 - 4 - 2 * n64),
    }
}

/// `A = ⌊a/3⌋C0 + ⌊b/3⌋F`, `B = aC0 + bF - 2A`, and `M = 2(σ*A - E) + (σ*B - E)`
/// on the blow-up at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DecompositionAbm {
    pub a: DivisorClass,
    pub b: DivisorClass,
    pub m: DivisorClass,
}

impl DecompositionAbm {
    /// `M` on the blow-up at `delta` points.
    pub fn m_on(&self, delta: usize) -> DivisorClass {
        &(2 * &DivisorClass::uniform(self.a.a, self.a.b, 1, delta))
            + &DivisorClass::uniform(self.b.a, self.b.b, 1, delta)
    }
}

pub fn abm_decomposition(a: i64, b: i64) -> DecompositionAbm {
    let big_a = DivisorClass::on_base(a.div_euclid(3), b.div_euclid(3));
    let big_b = DivisorClass::on_base(a - 2 * big_a.a, b - 2 * big_a.b);
    let mut out = DecompositionAbm {
        a: big_a,
        b: big_b,
        m: DivisorClass::zero(1),
    };
    out.m = out.m_on(1);
    debug_assert_eq!(&(2 * &out.a) + &out.b, DivisorClass::on_base(a, b));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SubCheck {
    pub name: String,
    pub divisor: DivisorClass,
    pub verdict: bool,
    pub reider: Option<ReiderReport>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PipelineReport {
    pub hypothesis: bool,
    pub sub_checks: Vec<SubCheck>,
    pub verdict: bool,
}

impl PipelineReport {
    pub fn failed(&self) -> impl Iterator<Item = &str> {
        self.sub_checks
            .iter()
            .filter(|s| !s.verdict)
            .map(|s| s.name.as_str())
    }
}

/// `a ≥ 6` and `b ≥ max{(a+7)n, 6δ - 3n + 3}`.
pub fn bignef_hypothesis(n: u32, a: u32, b: u32, delta: u32) -> bool {
    let (n, a, b, d) = (i64::from(n), i64::from(a), i64::from(b), i64::from(delta));
    a >= 6 && b >= ((a + 7) * n).max(6 * d - 3 * n + 3)
}

/// Very ampleness of `σ*A - E`, `σ*B - E` and every `σ*B - Σ_{i ≤ j} E_i`,
/// the chain behind the vanishing that makes `Φ_{X, K_X + C~}` surjective.
/// For `δ = 0` it checks `A` and `B` on `F_n`.
pub fn thm_pipeline_bignef(n: u32, a: u32, b: u32, delta: u32) -> Result<PipelineReport> {
    let hypothesis = bignef_hypothesis(n, a, b, delta);
    let abm = abm_decomposition(i64::from(a), i64::from(b));
    let mut sub_checks = Vec::new();
    if delta == 0 {
        let f = HirzebruchSurface::new(n);
        for (name, d) in [("A", &abm.a), ("B", &abm.b)] {
            sub_checks.push(SubCheck {
                name: name.into(),
                divisor: d.clone(),
                verdict: is_very_ample(&f, d),
                reider: None,
            });
        }
    } else {
        let dl = delta as usize;
        let x = BlownSurface::general(HirzebruchSurface::new(n), dl);
        let mut targets = vec![
            (
                String::from("A-E"),
                DivisorClass::uniform(abm.a.a, abm.a.b, 1, dl),
            ),
            (
                String::from("B-E"),
                DivisorClass::uniform(abm.b.a, abm.b.b, 1, dl),
            ),
        ];
        for j in 1..=dl {
            let mut d = abm.b.lift(dl);
            d.m[..j].fill(1);
            targets.push((alloc::format!("B-E1..E{j}"), d));
        }
        for (name, d) in targets {
            let report = reider_very_ample(&x, &d)?;
            sub_checks.push(SubCheck {
                name,
                divisor: d,
                verdict: report.verdict,
                reider: Some(report),
            });
        }
    }
    let verdict = hypothesis && sub_checks.iter().all(|s| s.verdict);
    Ok(PipelineReport {
        hypothesis,
        sub_checks,
        verdict,
    })
}
