//! Grid scans over `(n, a, b, delta)`.
//!
//! Tuples are evaluated on a rayon pool and collected in input order, which
//! is the sorted cartesian order, so output never depends on scheduling.

use anyhow::Result;
use hirzewahl_core::positivity::{abm_decomposition, is_very_ample, reider_very_ample};
use hirzewahl_core::riemann_roch::dimension_hypothesis;
use hirzewahl_core::wahl_report::{check_thm_1nodal, check_thm_a};
use hirzewahl_core::{BlownSurface, DivisorClass, HirzebruchSurface, NodalCurve};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::ScanArgs;
use crate::render::{opt, Report};

pub const HEADER: [&str; 11] = [
    "n", "a", "b", "delta", "g", "g_tilde", "thmA", "corank", "reider_A", "reider_B", "notes",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: u32,
    pub a: u32,
    pub b: u32,
    pub delta: u32,
    pub g: i128,
    pub g_tilde: i128,
    #[serde(rename = "thmA")]
    pub thm_a: bool,
    pub corank: Option<i128>,
    #[serde(rename = "reider_A")]
    pub reider_a: bool,
    #[serde(rename = "reider_B")]
    pub reider_b: bool,
    pub notes: String,
}

impl ScanRow {
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.a.to_string(),
            self.b.to_string(),
            self.delta.to_string(),
            self.g.to_string(),
            self.g_tilde.to_string(),
            self.thm_a.to_string(),
            opt(self.corank),
            self.reider_a.to_string(),
            self.reider_b.to_string(),
            self.notes.clone(),
        ]
    }
}

pub fn tuples(args: &ScanArgs) -> Vec<NodalCurve> {
    let mut out = Vec::new();
    for n in args.n.iter() {
        for a in args.a.iter() {
            for b in args.b.iter() {
                for delta in args.delta.iter() {
                    out.push(NodalCurve::new(n, a, b, delta));
                }
            }
        }
    }
    out
}

fn very_ample_minus_e(curve: &NodalCurve, base: &DivisorClass) -> Result<bool> {
    let delta = curve.delta as usize;
    if delta == 0 {
        return Ok(is_very_ample(&HirzebruchSurface::new(curve.n), base));
    }
    let x = BlownSurface::general(HirzebruchSurface::new(curve.n), delta);
    let d = DivisorClass::uniform(base.a, base.b, 1, delta);
    Ok(reider_very_ample(&x, &d)?.verdict)
}

pub fn evaluate(curve: NodalCurve) -> Result<ScanRow> {
    let NodalCurve { n, a, b, delta } = curve;
    let report = check_thm_a(n, a, b, delta);
    let abm = abm_decomposition(i64::from(a), i64::from(b));
    let (ni, ai, bi, di) = (i64::from(n), i64::from(a), i64::from(b), i64::from(delta));

    let mut notes = Vec::new();
    if n > 0 && ai >= 6 && bi >= (ai + 3) * ni && bi < (ai + 7) * ni {
        notes.push("frontier:(a+3)n<=b<(a+7)n");
    }
    if delta == 1 && !report.fires() && check_thm_1nodal(n, a, b).fires() {
        notes.push("gap:1-nodal-only");
    }
    let floor = 5.max(di + 2);
    if n > 0 && ai >= floor && bi >= floor && !dimension_hypothesis(&curve) {
        notes.push("dim:n=0-variant-not-applied");
    }

    Ok(ScanRow {
        n,
        a,
        b,
        delta,
        g: report.g,
        g_tilde: report.g_tilde,
        thm_a: report.fires(),
        corank: report.corank,
        reider_a: very_ample_minus_e(&curve, &abm.a)?,
        reider_b: very_ample_minus_e(&curve, &abm.b)?,
        notes: if notes.is_empty() {
            "-".into()
        } else {
            notes.join(";")
        },
    })
}

pub fn run(args: &ScanArgs, jobs: usize) -> Result<Vec<ScanRow>> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let curves = tuples(args);
    pool.install(|| curves.into_par_iter().map(evaluate).collect())
}

pub fn report(rows: &[ScanRow]) -> Result<Report> {
    Ok(Report {
        header: HEADER.to_vec(),
        rows: rows.iter().map(ScanRow::cells).collect(),
        json: serde_json::to_value(rows)?,
        text: None,
        ok: true,
    })
}
