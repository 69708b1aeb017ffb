//! Command-line front end for `bihom-core`.
//!
//! [`run`] parses arguments, dispatches one subcommand and writes its result
//! as text or JSON. Exit status is 0 on success, 1 on input errors and 2 when
//! an internal cross-check or a proved inequality fails.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use bihom_core::bounds::rank_intervals;
use bihom_core::polyring::growth_range;
use bihom_core::{
    admissible_ranks, audit, dim_forms, hilbert_ideal, initial_component, is_lex_segment,
    iterated_shift, macaulay_rep, verify_gotzmann, BihomForm, Error, GradedIdeal, HomogPoly,
    SignatureReport,
};
use clap::{Parser, Subcommand, ValueEnum};

use crate::parse::{parse_expression, parse_generators, ParseError};
use crate::report::*;

#[derive(Parser, Debug)]
#[command(
    name = "bihom",
    version,
    about = "Exact analysis of bihomogeneous Hermitian polynomials"
)]
struct Cli {
    /// Number of variables.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Polynomial in z1..zn, w1..wn (w = conj z).
    #[arg(long, global = true, conflicts_with = "file")]
    expr: Option<String>,

    /// File holding the polynomial text.
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cross-check every inertia computation with a second exact method.
    #[arg(long, global = true)]
    verify: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature pair and rank.
    Sig,
    /// Weighted squared norms summing to the form.
    Decompose,
    /// Coefficient matrix of r * |z|^(2d).
    MulNorm {
        #[arg(long)]
        d: usize,
    },
    /// Least d with r * |z|^(2d) a squared norm.
    MinD {
        #[arg(long, default_value_t = 64)]
        max: usize,
    },
    /// Hilbert function of the ideal spanned by generators.
    Hilbert {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        degree: usize,
        /// Report H_{S/I} instead of H_I.
        #[arg(long)]
        quotient: bool,
    },
    /// Lex-leading monomials of a graded component.
    Init {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        lex_segment_check: bool,
    },
    /// Macaulay representation and shift.
    MacaulayRep {
        c: u64,
        m: usize,
        #[arg(long)]
        iterate: Option<usize>,
    },
    /// Growth bound over a window of degrees, plus persistence.
    Growth {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        from: usize,
        #[arg(long, default_value_t = 5)]
        window: usize,
    },
    /// Admissible ranks of r * |z|^(2d) for squared norms r.
    Ranks {
        #[arg(long)]
        rho: Option<u64>,
    },
    /// Evaluate every inequality on the form at exponent d.
    Audit {
        #[arg(long)]
        d: usize,
    },
}

enum Failure {
    Input(String),
    Violation(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Core(c) => c.into(),
            e => Failure::Input(e.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Violation(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    0
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    1
                }
            };
        }
    };
    let (output, violation) = match dispatch(&cli) {
        Ok(v) => v,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
        Err(Failure::Violation(msg)) => {
            let _ = writeln!(err, "invariant violation: {msg}");
            return 2;
        }
    };
    let body = match cli.format {
        Format::Text => output.text(),
        Format::Json => output.json(),
    };
    if out.write_all(body.as_bytes()).is_err() {
        return 1;
    }
    match violation {
        Some(msg) => {
            let _ = writeln!(err, "invariant violation: {msg}");
            2
        }
        None => 0,
    }
}

fn require_n(cli: &Cli) -> Result<usize, Failure> {
    match cli.n {
        Some(0) => Err(Failure::Input("--n must be at least 1".into())),
        Some(n) => Ok(n),
        None => Err(Failure::Input("--n is required".into())),
    }
}

fn load_form(cli: &Cli) -> Result<BihomForm, Failure> {
    let n = require_n(cli)?;
    let text = match (&cli.expr, &cli.file) {
        (Some(e), _) => e.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(Failure::Input("--expr or --file is required".into())),
    };
    Ok(parse_expression(&text, n)?)
}

fn load_ideal(cli: &Cli, gens: &str) -> Result<(usize, GradedIdeal, Vec<String>), Failure> {
    let n = require_n(cli)?;
    let polys = parse_generators(gens, n)?;
    let shown = polys.iter().map(HomogPoly::render).collect();
    Ok((n, GradedIdeal::new(n, polys)?, shown))
}

fn signature_of(form: &BihomForm, verify: bool) -> Result<SignatureReport, Failure> {
    if verify {
        Ok(form.inertia_verified()?)
    } else {
        Ok(form.inertia())
    }
}

type Dispatched = (Output, Option<String>);

fn dispatch(cli: &Cli) -> Result<Dispatched, Failure> {
    let verify = cli.verify;
    let output = match &cli.command {
        Command::Sig => {
            let r = load_form(cli)?;
            Output::Sig(SigOutput {
                n: r.arity(),
                m: r.bidegree(),
                signature: signature_of(&r, verify)?.into(),
                verified: verify,
            })
        }
        Command::Decompose => {
            let r = load_form(cli)?;
            let signature = signature_of(&r, verify)?;
            let terms = r
                .decompose()
                .into_iter()
                .map(|w| WeightedTerm {
                    weight: rational_string(&w.weight),
                    weight_text: w.weight.to_string(),
                    form: w.form.render(),
                })
                .collect();
            Output::Decompose(DecomposeOutput {
                n: r.arity(),
                m: r.bidegree(),
                signature: signature.into(),
                verified: verify,
                terms,
            })
        }
        Command::MulNorm { d } => {
            let r = load_form(cli)?;
            let p = r.mul_norm_power(*d);
            let basis = p.basis();
            let matrix: Vec<Vec<_>> = basis
                .iter()
                .map(|a| basis.iter().map(|b| p.entry(a, b)).collect())
                .collect();
            Output::MulNorm(MulNormOutput {
                n: p.arity(),
                m: r.bidegree(),
                d: *d,
                product_m: p.bidegree(),
                signature: signature_of(&p, verify)?.into(),
                verified: verify,
                basis: basis.iter().map(|a| a.render('z')).collect(),
                matrix_text: matrix
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect(),
                matrix: matrix
                    .iter()
                    .map(|row| row.iter().map(Complex::from).collect())
                    .collect(),
                expression: p.render(),
            })
        }
        Command::MinD { max } => {
            let r = load_form(cli)?;
            let found = r.minimal_d(*max);
            if verify {
                check_minimal(&r, found, *max)?;
            }
            Output::MinD(MinDOutput {
                n: r.arity(),
                m: r.bidegree(),
                max: *max,
                minimal_d: found,
                verified: verify,
            })
        }
        Command::Hilbert {
            gens,
            degree,
            quotient,
        } => {
            let (n, ideal, generators) = load_ideal(cli, gens)?;
            let h = hilbert_ideal(&ideal, *degree);
            let dim = dim_forms(n, *degree);
            Output::Hilbert(HilbertOutput {
                n,
                degree: *degree,
                generators,
                dimension: dim,
                hilbert_ideal: h,
                hilbert_quotient: dim - h,
                quotient: *quotient,
            })
        }
        Command::Init {
            gens,
            degree,
            lex_segment_check,
        } => {
            let (n, ideal, generators) = load_ideal(cli, gens)?;
            let init = initial_component(&ideal, *degree);
            let lex_segment = if *lex_segment_check {
                Some(is_lex_segment(&init, n, *degree)?)
            } else {
                None
            };
            // descending lex order, matching monomials_of_degree
            let ordered: Vec<_> = init.iter().rev().collect();
            Output::Init(InitOutput {
                n,
                degree: *degree,
                generators,
                monomials: ordered.iter().map(|a| a.render('z')).collect(),
                exponents: ordered.iter().map(|a| a.exponents().to_vec()).collect(),
                lex_segment,
            })
        }
        Command::MacaulayRep { c, m, iterate } => {
            if *m == 0 {
                return Err(Failure::Input("M must be at least 1".into()));
            }
            let rep = macaulay_rep(*c, *m);
            let iterate = iterate.map(|d| IterateOut {
                d,
                stepwise: iterated_shift(*c, *m, d),
                closed_form: rep.iterated_shift_closed(d),
            });
            if let Some(it) = &iterate {
                if it.stepwise != it.closed_form {
                    return Err(Failure::Violation(format!(
                        "iterated shift: stepwise {} differs from closed form {}",
                        it.stepwise, it.closed_form
                    )));
                }
            }
            Output::MacaulayRep(MacaulayOutput {
                c: *c,
                m: *m,
                representation: rep.to_string(),
                terms: rep
                    .terms()
                    .iter()
                    .map(|t| MacaulayTermOut {
                        top: t.top,
                        bottom: t.bottom,
                    })
                    .collect(),
                shift: rep.iterated_shift_closed(1),
                iterate,
            })
        }
        Command::Growth { gens, from, window } => {
            if *from == 0 {
                return Err(Failure::Input("--from must be at least 1".into()));
            }
            let (n, ideal, generators) = load_ideal(cli, gens)?;
            let steps: Vec<GrowthStep> = growth_range(&ideal, *from, from + window)
                .into_iter()
                .map(|c| GrowthStep {
                    degree: c.degree,
                    lhs: c.lhs,
                    rhs: c.rhs,
                    holds: c.holds,
                    equality: c.equality,
                })
                .collect();
            let (gotzmann, gotzmann_skipped) = match verify_gotzmann(&ideal, *from, *window) {
                Ok(g) => (
                    Some(GotzmannOut {
                        s: *from,
                        window: *window,
                        triggered: g.triggered,
                        persists: g.persists,
                    }),
                    None,
                ),
                Err(e @ Error::GeneratorDegree { .. }) => (None, Some(e.to_string())),
                Err(e) => return Err(e.into()),
            };
            let broken: Vec<String> = steps
                .iter()
                .filter(|s| !s.holds)
                .map(|s| s.degree.to_string())
                .collect();
            let mut violation = (!broken.is_empty())
                .then(|| format!("growth bound fails at k = {}", broken.join(", ")));
            if let Some(g) = &gotzmann {
                if g.triggered && !g.persists && violation.is_none() {
                    violation = Some(format!("equality at s = {} does not persist", g.s));
                }
            }
            return Ok((
                Output::Growth(GrowthOutput {
                    n,
                    from: *from,
                    window: *window,
                    generators,
                    steps,
                    gotzmann,
                    gotzmann_skipped,
                }),
                violation,
            ));
        }
        Command::Ranks { rho } => {
            let n = require_n(cli)?;
            if n < 2 {
                return Err(Failure::Input("ranks needs --n at least 2".into()));
            }
            let tail = (n * (n + 1) / 2) as u64;
            Output::Ranks(RanksOutput {
                n,
                intervals: rank_intervals(n as u64)
                    .into_iter()
                    .map(|(p, low, high)| Interval { p, low, high })
                    .collect(),
                tail,
                excluded: (1..tail)
                    .filter(|&r| !admissible_ranks(n, r).admissible)
                    .collect(),
                query: rho.map(|rho| {
                    let a = admissible_ranks(n, rho);
                    RankQuery {
                        rho,
                        admissible: a.admissible,
                        witness: a.witness.describe(),
                    }
                }),
            })
        }
        Command::Audit { d } => {
            let r = load_form(cli)?;
            let report = audit(&r, *d)?;
            if verify {
                let s = r.inertia_verified()?;
                let p = r.mul_norm_power(*d).inertia_verified()?;
                if s != report.signature || p != report.product_signature {
                    return Err(Failure::Violation("signature cross-check disagrees".into()));
                }
            }
            let out = AuditOutput::new(&report, verify);
            let violation = (!out.violations.is_empty())
                .then(|| format!("audit verdicts failed: {}", out.violations.join(", ")));
            return Ok((Output::Audit(out), violation));
        }
    };
    Ok((output, None))
}

/// Confirms a `min-d` answer with the dual-method inertia.
fn check_minimal(r: &BihomForm, found: Option<usize>, max: usize) -> Result<(), Failure> {
    let negative_at = |d: usize| -> Result<usize, Failure> {
        Ok(r.mul_norm_power(d).inertia_verified()?.negative)
    };
    let bad = match found {
        Some(d) => negative_at(d)? != 0 || (d > 0 && negative_at(d - 1)? == 0),
        None => negative_at(max)? == 0,
    };
    if bad {
        return Err(Failure::Violation(
            "minimal d disagrees with verified inertia".into(),
        ));
    }
    Ok(())
}
