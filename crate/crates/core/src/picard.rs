//! Picard lattices of `F_n` and of its blow-up `X = Bl_Z F_n`.
//!
//! A class is stored as `a·C0 + b·F - Σ m_j E_j` (pulled back along the
//! blow-up when `m` is non-empty). Positive `m_j` subtracts `m_j E_j`, so the
//! exceptional curve `E_j` itself has `m_j = -1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Anything carrying a Picard lattice of the shape `Z C0 + Z F + Z E_1 + ... + Z E_delta`.
pub trait Surface {
    /// Twist `n` of the underlying Hirzebruch surface.
    fn twist(&self) -> u32;
    /// Number of blown-up points.
    fn delta(&self) -> usize;

    /// Intersection number `d1 · d2`.
    fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i128> {
        intersect(self, d1, d2)
    }

    /// Canonical class `-2C0 - (2+n)F + E`.
    fn canonical(&self) -> DivisorClass {
        canonical(self)
    }

    fn check_class(&self, d: &DivisorClass) -> Result<()> {
        if d.m.len() == self.delta() {
            Ok(())
        } else {
            Err(Error::DeltaMismatch {
                expected: self.delta(),
                found: d.m.len(),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HirzebruchSurface {
    n: u32,
}

impl HirzebruchSurface {
    pub const fn new(n: u32) -> Self {
        Self { n }
    }

    pub const fn n(&self) -> u32 {
        self.n
    }
}

impl Surface for HirzebruchSurface {
    fn twist(&self) -> u32 {
        self.n
    }

    fn delta(&self) -> usize {
        0
    }
}

/// A point of the dense torus chart `(t, s)`, `t` a fiber coordinate and
/// `s = 0` the section disjoint from `C0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChartPoint {
    pub t: BigRational,
    pub s: BigRational,
}

impl ChartPoint {
    pub fn new(t: BigRational, s: BigRational) -> Self {
        Self { t, s }
    }
}

impl fmt::Display for ChartPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t, self.s)
    }
}

/// `F_n` blown up at `delta` points.
///
/// Coordinates are optional: lattice computations never look at them. When
/// they are present they are guaranteed to lie on distinct fibers and off
/// both torus-invariant sections, which in particular keeps them off `C0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlownSurface {
    base: HirzebruchSurface,
    delta: usize,
    points: Option<Vec<ChartPoint>>,
    general_position: bool,
}

impl BlownSurface {
    /// Blow-up at `delta` unspecified points. Genericity is not declared.
    pub fn new(base: HirzebruchSurface, delta: usize) -> Self {
        Self {
            base,
            delta,
            points: None,
            general_position: false,
        }
    }

    /// Blow-up at unspecified points that are declared to be off `C0` and on
    /// pairwise distinct fibers.
    pub fn general(base: HirzebruchSurface, delta: usize) -> Self {
        Self {
            general_position: true,
            ..Self::new(base, delta)
        }
    }

    /// Blow-up at explicit chart points.
    pub fn with_points(base: HirzebruchSurface, points: Vec<ChartPoint>) -> Result<Self> {
        validate_points(&points)?;
        Ok(Self {
            base,
            delta: points.len(),
            points: Some(points),
            general_position: true,
        })
    }

    pub fn base(&self) -> HirzebruchSurface {
        self.base
    }

    pub fn points(&self) -> Option<&[ChartPoint]> {
        self.points.as_deref()
    }

    pub fn is_general_position(&self) -> bool {
        self.general_position
    }
}

impl Surface for BlownSurface {
    fn twist(&self) -> u32 {
        self.base.n
    }

    fn delta(&self) -> usize {
        self.delta
    }
}

pub(crate) fn validate_points(points: &[ChartPoint]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if p.t.is_zero() || p.s.is_zero() {
            return Err(Error::OffTorus(i));
        }
        if let Some(j) = points[..i].iter().position(|q| q.t == p.t) {
            return Err(Error::SameFiber(j, i));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
    pub m: Vec<i64>,
}

impl DivisorClass {
    pub fn new(a: i64, b: i64, m: Vec<i64>) -> Self {
        Self { a, b, m }
    }

    /// `a C0 + b F` on `F_n`.
    pub fn on_base(a: i64, b: i64) -> Self {
        Self::new(a, b, Vec::new())
    }

    /// `σ*(a C0 + b F)` on a blow-up at `delta` points.
    pub fn pullback(a: i64, b: i64, delta: usize) -> Self {
        Self::new(a, b, vec![0; delta])
    }

    /// `σ*(a C0 + b F) - mult·E` with the same multiplicity at every point.
    pub fn uniform(a: i64, b: i64, mult: i64, delta: usize) -> Self {
        Self::new(a, b, vec![mult; delta])
    }

    /// The exceptional curve `E_j` (zero-based `j`).
    pub fn exceptional(j: usize, delta: usize) -> Self {
        let mut m = vec![0; delta];
        m[j] = -1;
        Self::new(0, 0, m)
    }

    pub fn zero(delta: usize) -> Self {
        Self::pullback(0, 0, delta)
    }

    pub fn delta(&self) -> usize {
        self.m.len()
    }

    /// The class with the exceptional part dropped, i.e. its image on `F_n`.
    pub fn base_part(&self) -> Self {
        Self::on_base(self.a, self.b)
    }

    /// Same base part, viewed on a blow-up at `delta` points with zero multiplicities.
    pub fn lift(&self, delta: usize) -> Self {
        Self::pullback(self.a, self.b, delta)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(
            self.m.len(),
            rhs.m.len(),
            "divisor classes live on different blow-ups"
        );
        Self {
            a: f(self.a, rhs.a),
            b: f(self.b, rhs.b),
            m: self.m.iter().zip(&rhs.m).map(|(&x, &y)| f(x, y)).collect(),
        }
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: Self) -> DivisorClass {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: Self) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: Self) -> DivisorClass {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: Self) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass {
            a: -self.a,
            b: -self.b,
            m: self.m.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        -&self
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass {
            a: self * rhs.a,
            b: self * rhs.b,
            m: rhs.m.iter().map(|x| self * x).collect(),
        }
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        self * &rhs
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}C0 + {}F", self.a, self.b)?;
        for (j, &m) in self.m.iter().enumerate() {
            match m {
                0 => {}
                m if m < 0 => write!(f, " + {}E{}", -m, j + 1)?,
                m => write!(f, " - {}E{}", m, j + 1)?,
            }
        }
        Ok(())
    }
}

/// `C0² = -n`, `C0·F = 1`, `F² = 0`, `E_j² = -1`, `E_i·E_j = 0`; pulled-back
/// classes are orthogonal to every `E_j`.
pub fn intersect<S: Surface + ?Sized>(
    surface: &S,
    d1: &DivisorClass,
    d2: &DivisorClass,
) -> Result<i128> {
    surface.check_class(d1)?;
    surface.check_class(d2)?;
    let n = i128::from(surface.twist());
    let (a1, b1, a2, b2) = (
        i128::from(d1.a),
        i128::from(d1.b),
        i128::from(d2.a),
        i128::from(d2.b),
    );
    let base = (a1 * a2)
        .checked_mul(n)
        .and_then(|x| (a1 * b2).checked_sub(x))
        .and_then(|x| x.checked_add(a2 * b1))
        .ok_or(Error::Overflow)?;
    d1.m.iter().zip(&d2.m).try_fold(base, |acc, (&x, &y)| {
        acc.checked_sub(i128::from(x) * i128::from(y))
            .ok_or(Error::Overflow)
    })
}

pub fn canonical<S: Surface + ?Sized>(surface: &S) -> DivisorClass {
    let n = i64::from(surface.twist());
    DivisorClass::new(-2, -(2 + n), vec![-1; surface.delta()])
}

/// A `delta`-nodal curve `C ~ aC0 + bF` on `F_n`, identified by its numerical data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NodalCurve {
    pub n: u32,
    pub a: u32,
    pub b: u32,
    pub delta: u32,
}

/// Divisor classes attached to a nodal curve, all on `Bl_delta F_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodalClasses {
    /// `σ*C`.
    pub c: DivisorClass,
    /// Strict transform `σ*C - 2E`.
    pub c_tilde: DivisorClass,
    pub canonical: DivisorClass,
    /// `K_X + C~`.
    pub adjoint: DivisorClass,
    /// `2K_X + C~`.
    pub two_k_plus_c: DivisorClass,
    /// `2K_X + 2C~`.
    pub two_k_plus_two_c: DivisorClass,
}

/// Arithmetic genus of `C` and geometric genus of its normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Genus {
    pub arithmetic: i128,
    pub geometric: i128,
}

impl NodalCurve {
    pub const fn new(n: u32, a: u32, b: u32, delta: u32) -> Self {
        Self { n, a, b, delta }
    }

    pub fn base(&self) -> HirzebruchSurface {
        HirzebruchSurface::new(self.n)
    }

    pub fn blow_up(&self) -> BlownSurface {
        BlownSurface::general(self.base(), self.delta as usize)
    }

    pub(crate) fn ints(&self) -> (i128, i128, i128, i128) {
        (
            i128::from(self.n),
            i128::from(self.a),
            i128::from(self.b),
            i128::from(self.delta),
        )
    }

    /// `C² = 2ab - a²n` on `F_n`.
    pub fn self_intersection(&self) -> i128 {
        let (n, a, b, _) = self.ints();
        2 * a * b - a * a * n
    }

    pub fn classes(&self) -> NodalClasses {
        let delta = self.delta as usize;
        let (a, b) = (i64::from(self.a), i64::from(self.b));
        let c = DivisorClass::pullback(a, b, delta);
        let c_tilde = DivisorClass::uniform(a, b, 2, delta);
        let canonical = canonical(&self.blow_up());
        let adjoint = &canonical + &c_tilde;
        let two_k_plus_c = &(2 * &canonical) + &c_tilde;
        let two_k_plus_two_c = 2 * &adjoint;
        NodalClasses {
            c,
            c_tilde,
            canonical,
            adjoint,
            two_k_plus_c,
            two_k_plus_two_c,
        }
    }

    /// `g = 1 + ab - a - b + an(1-a)/2`, `g~ = g - delta`.
    pub fn genus(&self) -> Genus {
        let (n, a, b, delta) = self.ints();
        let twisted = a * n * (1 - a);
        debug_assert!(twisted % 2 == 0);
        let arithmetic = 1 + a * b - a - b + twisted / 2;
        Genus {
            arithmetic,
            geometric: arithmetic - delta,
        }
    }
}
