use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hirzewahl_core::DivisorClass;

#[derive(Debug, Parser)]
#[command(
    name = "hirzewahl",
    version,
    about = "Intersection theory, positivity and Gaussian-map ranks for nodal curves on Hirzebruch surfaces"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for the generic node positions.
    #[arg(long, default_value_t = 42, global = true)]
    pub seed: u64,
    /// Exit with status 1 when a checked hypothesis or verdict fails.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Worker threads for scans (0 = one per core).
    #[arg(long, env = "HIRZEWAHL_JOBS", default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Report wall-clock time on standard error.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// `(n, a, b, delta)` of a nodal curve `C ~ aC0 + bF` on `F_n`.
#[derive(Debug, Clone, Copy, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub a: u32,
    #[arg(long)]
    pub b: u32,
    #[arg(long, default_value_t = 0)]
    pub delta: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Intersection number of two classes `a,b[,m1,...]` on the blow-up of F_n.
    Intersect {
        #[arg(long)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        d1: Divisor,
        #[arg(allow_hyphen_values = true)]
        d2: Divisor,
    },
    /// Cohomology of a line bundle; with exceptional part, h0 at generic points.
    Cohomology {
        #[arg(long)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        divisor: Divisor,
    },
    /// Arithmetic and geometric genus.
    Genus(CurveArgs),
    /// Base-point freeness and very ampleness of `aC0 + bF` on F_n.
    CheckAmple {
        #[arg(long)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        divisor: Divisor,
    },
    /// Reider's criterion for a class on the blow-up at general points.
    CheckReider {
        #[arg(long)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        divisor: Divisor,
    },
    /// Jet-ampleness bounds for the twisted cotangent bundle.
    CheckJet(CurveArgs),
    /// Corank report for the Wahl map of the normalization.
    Corank {
        #[command(flatten)]
        curve: CurveArgs,
        /// Use the one-node bounds (requires delta = 1).
        #[arg(long)]
        one_nodal: bool,
        /// Also decide whether the curve can sit on F_m.
        #[arg(long)]
        target_m: Option<u32>,
    },
    /// Compare h0(F_n, -K) with h0(X, -K_X) at seeded points.
    Conjecture {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        delta: u32,
    },
    /// Exact rank of the Gaussian map of K_X + C~.
    GaussianRank {
        #[command(flatten)]
        curve: CurveArgs,
        /// Refuse inputs with more wedge columns than this.
        #[arg(long, default_value_t = 2000)]
        max_wedge: usize,
    },
    /// Corank hypotheses and Reider verdicts over a parameter grid.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: Range,
    #[arg(long)]
    pub a: Range,
    #[arg(long)]
    pub b: Range,
    #[arg(long, default_value = "0")]
    pub delta: Range,
}

/// Inclusive `lo..hi`, or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: u32,
    pub hi: u32,
}

impl Range {
    pub fn iter(self) -> std::ops::RangeInclusive<u32> {
        self.lo..=self.hi
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad bound {t:?}: {e}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((l, h)) => (parse(l)?, parse(h.strip_prefix('=').unwrap_or(h))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Range { lo, hi })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// `a,b[,m1,...,md]` for `aC0 + bF - Σ m_j E_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor(pub DivisorClass);

impl FromStr for Divisor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad coefficient {t:?}: {e}"))
            })
            .collect::<Result<_, _>>()?;
        match parts.as_slice() {
            [a, b, m @ ..] => Ok(Divisor(DivisorClass::new(*a, *b, m.to_vec()))),
            _ => Err("expected a,b[,m1,...]".into()),
        }
    }
}
