//! Hypothesis ledgers and conclusions for the corank theorems on nodal
//! curves in `F_n`.
//!
//! A [`CorankReport`] lists every inequality with its numeric bound, so a
//! scan can chart where each theorem stops applying. The corank is only
//! filled in when every hypothesis holds.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::blowup_sections::{generic_blowup, h0_blowup};
use crate::error::{Error, Result};
use crate::picard::{DivisorClass, HirzebruchSurface, NodalCurve, Surface};
use crate::riemann_roch::h_line;

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hypothesis {
    pub name: String,
    pub inequality: String,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorankReport {
    pub hypotheses: Vec<Hypothesis>,
    pub corank: Option<i128>,
    pub g: i128,
    pub g_tilde: i128,
    pub notes: Vec<String>,
}

impl CorankReport {
    pub fn fires(&self) -> bool {
        self.hypotheses.iter().all(|h| h.satisfied)
    }
}

fn hyp(name: &str, inequality: String, satisfied: bool) -> Hypothesis {
    Hypothesis {
        name: name.into(),
        inequality,
        satisfied,
    }
}

/// `h0(F_n, -K)`: 9 for `n ≤ 3`, `n + 6` from `n = 3` on.
pub fn anticanonical_h0(n: u32) -> i128 {
    let f = HirzebruchSurface::new(n);
    h_line(&f, &-f.canonical())
        .expect("canonical class lives on F_n")
        .h0
}

fn finish(curve: NodalCurve, hypotheses: Vec<Hypothesis>, notes: Vec<String>) -> CorankReport {
    let genus = curve.genus();
    let mut report = CorankReport {
        hypotheses,
        corank: None,
        g: genus.arithmetic,
        g_tilde: genus.geometric,
        notes,
    };
    if report.fires() {
        report.corank = Some(anticanonical_h0(curve.n));
    }
    report
}

/// `a ≥ 6` and `b ≥ max{(a+7)n, (a-1)n + δ + 2, 6δ - 3n + 3}`; then
/// `corank Φ_{C~} = h0(F_n, -K)`.
pub fn check_thm_a(n: u32, a: u32, b: u32, delta: u32) -> CorankReport {
    let curve = NodalCurve::new(n, a, b, delta);
    let (n, a, b, d) = curve.ints();
    let bounds = [
        ("(a+7)n", (a + 7) * n),
        ("(a-1)n+delta+2", (a - 1) * n + d + 2),
        ("6delta-3n+3", 6 * d - 3 * n + 3),
    ];
    let mut hypotheses = Vec::from([hyp("a", format!("a = {a} >= 6"), a >= 6)]);
    for (name, value) in bounds {
        hypotheses.push(hyp(
            name,
            format!("b = {b} >= {name} = {value}"),
            b >= value,
        ));
    }
    let tight = bounds.iter().map(|x| x.1).max().unwrap_or(0);
    let tight_names: Vec<&str> = bounds
        .iter()
        .filter(|x| x.1 == tight)
        .map(|x| x.0)
        .collect();
    let notes = Vec::from([format!("tight bound: {} = {tight}", tight_names.join(", "))]);
    finish(curve, hypotheses, notes)
}

/// One node off `C0`: `a ≥ 6` and `b ≥ max{(a-2)n + 6, an + 3}`.
pub fn check_thm_1nodal(n: u32, a: u32, b: u32) -> CorankReport {
    let curve = NodalCurve::new(n, a, b, 1);
    let (n_, a_, b_, _) = curve.ints();
    let hypotheses = Vec::from([
        hyp("a", format!("a = {a_} >= 6"), a_ >= 6),
        hyp(
            "(a-2)n+6",
            format!("b = {b_} >= (a-2)n+6 = {}", (a_ - 2) * n_ + 6),
            b_ >= (a_ - 2) * n_ + 6,
        ),
        hyp(
            "an+3",
            format!("b = {b_} >= an+3 = {}", a_ * n_ + 3),
            b_ >= a_ * n_ + 3,
        ),
    ]);
    let mut notes = Vec::new();
    let general = check_thm_a(n, a, b, 1);
    if hypotheses.iter().all(|h| h.satisfied) && !general.fires() {
        notes.push(
            "outside the delta-nodal theorem region; covered only by the 1-nodal bounds".into(),
        );
    }
    finish(curve, hypotheses, notes)
}

/// `a ≥ 5`, `b ≥ (a-2)n + 6` (for `n = 0`: `b ≥ 5`), `δ > a + b - an/2` and
/// `g - δ ≥ 2`.
pub fn h0rho_surjective_regime(n: u32, a: u32, b: u32, delta: u32) -> bool {
    let curve = NodalCurve::new(n, a, b, delta);
    let (n, a, b, d) = curve.ints();
    let base = a >= 5 && (b >= (a - 2) * n + 6 || (n == 0 && b >= 5));
    base && 2 * d > 2 * a + 2 * b - a * n && curve.genus().geometric >= 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "verdict", rename_all = "snake_case"))]
pub enum Embedding {
    CannotEmbed { corank_n: i128, corank_m: i128 },
    NoConclusion { reason: String },
}

/// A curve whose corank theorem fires on `F_n` cannot be a `δ`-nodal curve on
/// `F_m` for `m ≥ 4`, `m ≠ n`, since there the corank would be `m + 6`.
pub fn embedding_obstruction(n: u32, m: u32, a: u32, b: u32, delta: u32) -> Result<Embedding> {
    if m == n {
        return Err(Error::SameSurface(m));
    }
    if m < 4 {
        return Ok(Embedding::NoConclusion {
            reason: format!("m = {m} < 4"),
        });
    }
    let report = check_thm_a(n, a, b, delta);
    let Some(corank_n) = report.corank else {
        return Ok(Embedding::NoConclusion {
            reason: format!("corank theorem does not apply on F_{n}"),
        });
    };
    let corank_m = anticanonical_h0(m);
    if corank_n == corank_m {
        return Ok(Embedding::NoConclusion {
            reason: format!("corank {corank_n} agrees on F_{n} and F_{m}"),
        });
    }
    Ok(Embedding::CannotEmbed { corank_n, corank_m })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConjectureCheck {
    pub n: u32,
    pub delta: u32,
    pub seed: u64,
    /// `h0(F_n, -K)`.
    pub lhs: i128,
    /// `h0(X, -K_X)` at seeded general points.
    pub rhs: i128,
    pub holds: bool,
}

pub fn conjecture_check(n: u32, delta: u32, seed: u64) -> Result<ConjectureCheck> {
    let lhs = anticanonical_h0(n);
    let x = generic_blowup(n, delta as usize, seed);
    let anti = -x.canonical();
    debug_assert_eq!(
        anti,
        DivisorClass::uniform(2, 2 + i64::from(n), 1, delta as usize)
    );
    let rhs = h0_blowup(&x, &anti)?;
    Ok(ConjectureCheck {
        n,
        delta,
        seed,
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WahlDims {
    pub wedge_dim: i128,
    pub codomain_dim: i128,
    pub surjectivity_possible: bool,
}

/// `∧²H0(K)` has dimension `g(g-1)/2`, the target `H0(3K)` has `5g - 5`.
pub fn wahl_dims(g_tilde: i128) -> Result<WahlDims> {
    if g_tilde < 2 {
        return Err(Error::GenusTooSmall(g_tilde));
    }
    let wedge_dim = g_tilde * (g_tilde - 1) / 2;
    let codomain_dim = 5 * g_tilde - 5;
    Ok(WahlDims {
        wedge_dim,
        codomain_dim,
        surjectivity_possible: wedge_dim >= codomain_dim,
    })
}
