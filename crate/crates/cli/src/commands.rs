use std::time::Instant;

use anyhow::{bail, Result};
use hirzewahl_core::blowup_sections::{generic_blowup, h0_blowup};
use hirzewahl_core::gaussian::{check_surjectivity_phi_x, Surjectivity};
use hirzewahl_core::positivity::{
    is_bpf, is_very_ample, jet_ample_f, nakai_moishezon_delta1, reider_very_ample,
};
use hirzewahl_core::riemann_roch::{chi_line, h_line};
use hirzewahl_core::wahl_report::{
    check_thm_1nodal, check_thm_a, conjecture_check, embedding_obstruction, wahl_dims, Embedding,
};
use hirzewahl_core::{BlownSurface, DivisorClass, HirzebruchSurface, NodalCurve, Surface};
use serde_json::json;

use crate::args::{Command, CurveArgs, GlobalOpts};
use crate::render::{opt, Report};
use crate::scan;

fn curve(c: &CurveArgs) -> NodalCurve {
    NodalCurve::new(c.n, c.a, c.b, c.delta)
}

fn general(n: u32, d: &DivisorClass) -> BlownSurface {
    BlownSurface::general(HirzebruchSurface::new(n), d.delta())
}

pub fn execute(command: &Command, opts: &GlobalOpts) -> Result<Report> {
    match command {
        Command::Intersect { n, d1, d2 } => {
            if d1.0.delta() != d2.0.delta() {
                bail!(
                    "classes have {} and {} exceptional coefficients",
                    d1.0.delta(),
                    d2.0.delta()
                );
            }
            let x = BlownSurface::new(HirzebruchSurface::new(*n), d1.0.delta());
            let value = x.intersect(&d1.0, &d2.0)?;
            Ok(Report::single(
                vec![("intersection", value.to_string())],
                json!({ "n": n, "d1": d1.0, "d2": d2.0, "intersection": value }),
                true,
            ))
        }
        Command::Cohomology { n, divisor } => {
            let d = &divisor.0;
            if d.delta() == 0 {
                let t = h_line(&HirzebruchSurface::new(*n), d)?;
                Ok(Report::single(
                    vec![
                        ("h0", t.h0.to_string()),
                        ("h1", t.h1.to_string()),
                        ("h2", t.h2.to_string()),
                        ("chi", t.chi.to_string()),
                    ],
                    json!({ "n": n, "divisor": d, "h0": t.h0, "h1": t.h1, "h2": t.h2, "chi": t.chi }),
                    true,
                ))
            } else {
                let x = generic_blowup(*n, d.delta(), opts.seed);
                let h0 = h0_blowup(&x, d)?;
                let chi = chi_line(&x, d)?;
                Ok(Report::single(
                    vec![
                        ("h0", h0.to_string()),
                        ("chi", chi.to_string()),
                        ("seed", opts.seed.to_string()),
                    ],
                    json!({ "n": n, "divisor": d, "h0": h0, "chi": chi, "seed": opts.seed }),
                    true,
                ))
            }
        }
        Command::Genus(c) => {
            let g = curve(c).genus();
            let json = json!({ "g": g.arithmetic, "g_tilde": g.geometric });
            let text = format!("g={} g~={}", g.arithmetic, g.geometric);
            Ok(Report::single(
                vec![
                    ("g", g.arithmetic.to_string()),
                    ("g_tilde", g.geometric.to_string()),
                ],
                json,
                true,
            )
            .with_text(text))
        }
        Command::CheckAmple { n, divisor } => {
            let d = &divisor.0;
            if d.delta() != 0 {
                bail!(
                    "check-ample works on F_n; use check-reider for classes with exceptional part"
                );
            }
            let f = HirzebruchSurface::new(*n);
            let (bpf, va) = (is_bpf(&f, d), is_very_ample(&f, d));
            Ok(Report::single(
                vec![("bpf", bpf.to_string()), ("very_ample", va.to_string())],
                json!({ "n": n, "divisor": d, "bpf": bpf, "very_ample": va }),
                va,
            ))
        }
        Command::CheckReider { n, divisor } => {
            let d = &divisor.0;
            let x = general(*n, d);
            let r = reider_very_ample(&x, d)?;
            let nm = if d.delta() == 1 {
                Some(nakai_moishezon_delta1(&x, d)?)
            } else {
                None
            };
            let blockers: Vec<String> = r.blockers.iter().map(ToString::to_string).collect();
            let mut fields = vec![
                ("verdict", r.verdict.to_string()),
                ("N", r.n_class.to_string()),
                ("N2", r.n_squared.to_string()),
                (
                    "blockers",
                    if blockers.is_empty() {
                        "-".into()
                    } else {
                        blockers.join("; ")
                    },
                ),
            ];
            fields.push(("nakai_moishezon", opt(nm)));
            let json = json!({ "n": n, "reider": r, "nakai_moishezon": nm });
            Ok(Report::single(fields, json, r.verdict))
        }
        Command::CheckJet(c) => {
            let cert = jet_ample_f(c.n, c.a, c.b, c.delta);
            Ok(Report::single(
                vec![
                    ("jet_ample", cert.holds.to_string()),
                    ("order", (2 * i64::from(c.delta) - 1).to_string()),
                    ("L", cert.l.to_string()),
                    ("residual", cert.residual.to_string()),
                    (
                        "residual_nonnegative",
                        cert.residual_nonnegative.to_string(),
                    ),
                    ("residual_bpf", cert.residual_bpf.to_string()),
                ],
                serde_json::to_value(&cert)?,
                cert.holds,
            ))
        }
        Command::Corank {
            curve: c,
            one_nodal,
            target_m,
        } => {
            let report = if *one_nodal {
                if c.delta != 1 {
                    bail!("--one-nodal needs --delta 1");
                }
                check_thm_1nodal(c.n, c.a, c.b)
            } else {
                check_thm_a(c.n, c.a, c.b, c.delta)
            };
            let embedding = match target_m {
                Some(m) => Some(embedding_obstruction(c.n, *m, c.a, c.b, c.delta)?),
                None => None,
            };
            let wahl = wahl_dims(report.g_tilde).ok();
            let mut fields = vec![
                ("corank", opt(report.corank)),
                ("g", report.g.to_string()),
                ("g_tilde", report.g_tilde.to_string()),
            ];
            let mut text = format!(
                "corank={}\ng={} g~={}\n",
                opt(report.corank),
                report.g,
                report.g_tilde
            );
            for h in &report.hypotheses {
                let mark = if h.satisfied { "ok" } else { "FAILED" };
                text.push_str(&format!("  [{mark}] {}\n", h.inequality));
            }
            for note in &report.notes {
                text.push_str(&format!("note: {note}\n"));
            }
            if let Some(e) = &embedding {
                let line = match e {
                    Embedding::CannotEmbed { corank_n, corank_m } => {
                        format!("cannot embed ({corank_n} vs {corank_m})")
                    }
                    Embedding::NoConclusion { reason } => format!("no conclusion ({reason})"),
                };
                text.push_str(&format!("embedding: {line}\n"));
                fields.push(("embedding", line));
            }
            let ok = report.fires();
            let json = json!({ "corank": report.corank, "g": report.g, "g_tilde": report.g_tilde,
                "hypotheses": report.hypotheses, "notes": report.notes,
                "embedding": embedding, "wahl": wahl });
            Ok(Report::single(fields, json, ok).with_text(text.trim_end().to_string()))
        }
        Command::Conjecture { n, delta } => {
            let c = conjecture_check(*n, *delta, opts.seed)?;
            Ok(Report::single(
                vec![
                    ("lhs", c.lhs.to_string()),
                    ("rhs", c.rhs.to_string()),
                    ("holds", c.holds.to_string()),
                    ("seed", c.seed.to_string()),
                ],
                serde_json::to_value(c)?,
                c.holds,
            ))
        }
        Command::GaussianRank {
            curve: c,
            max_wedge,
        } => {
            let start = Instant::now();
            let r = check_surjectivity_phi_x(&curve(c), opts.seed, Some(*max_wedge))?;
            if opts.timing {
                eprintln!("elapsed_ms={}", start.elapsed().as_millis());
            }
            let verdict = match r.surjective {
                Surjectivity::Surjective => "surjective",
                Surjectivity::NotSurjective => "not_surjective",
                Surjectivity::Inconsistent => "inconsistent",
                Surjectivity::NotAsserted => "not_asserted",
            };
            Ok(Report::single(
                vec![
                    ("domain_dim", r.domain_dim.to_string()),
                    ("wedge_dim", r.wedge_dim.to_string()),
                    ("target_dim", r.target_dim.to_string()),
                    ("rank", r.rank.to_string()),
                    ("surjective", verdict.into()),
                    ("seed", r.seed.to_string()),
                ],
                serde_json::to_value(&r)?,
                r.surjective == Surjectivity::Surjective,
            ))
        }
        Command::Scan(args) => {
            let start = Instant::now();
            let rows = scan::run(args, opts.jobs)?;
            if opts.timing {
                eprintln!(
                    "elapsed_ms={} rows={}",
                    start.elapsed().as_millis(),
                    rows.len()
                );
            }
            scan::report(&rows)
        }
    }
}
