//! `discrim` — exact degrees of discriminants (projective duals of closed
//! orbits) of irreducible representations, plus the closed-form families.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 internal computation
//! inconsistency (independent methods or evaluation points disagreeing).

mod render;
mod spec;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use discrim::engine::{self, DegreeReport, Method};
use discrim::rational::is_integer;
use discrim::roots::{FactorType, RootSystem, Weight};
use discrim::{closed, symfun};

use render::Output;

struct CliError {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 1,
        message: message.into(),
    }
}

/// Library errors split into bad input (1) vs broken internal cross-checks (2).
fn from_lib(e: discrim::Error) -> CliError {
    use discrim::Error::*;
    let code = match &e {
        PointDisagreement(..)
        | MethodDisagreement { .. }
        | NotInvariantForm
        | NonIntegerDegree(..)
        | NegativeDegree(..)
        | NonIntegerCoefficient(..)
        | DegreeCancellation { .. }
        | SingularSystem
        | InexactDivision
        | DivisionByZero
        | VariableMismatch(..)
        | PointRejection(..) => 2,
        _ => 1,
    };
    CliError {
        code,
        message: e.to_string(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Orbit,
    Symmetric,
    Fg,
    Jacobi,
    Permanent,
    ScalarProduct,
}

#[derive(Parser)]
#[command(
    name = "discrim",
    version,
    about = "Exact degrees of discriminants (projective duals) of irreducible representations"
)]
struct Cli {
    /// Base seed for the generic evaluation points.
    #[arg(long, global = true, default_value_t = 11)]
    seed: u64,
    /// Worker threads for orbit sums (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree of the discriminant for a group and highest weight.
    Degree {
        /// Group spec: factors joined by '+' or 'x', e.g. GL8, A2, B3+GL2.
        #[arg(long)]
        group: String,
        /// Weight spec: 'L:…' ambient or 'w:…' fundamental coordinates.
        #[arg(long)]
        weight: String,
        /// Method to run; repeat the flag to cross-check several.
        #[arg(long = "method", value_enum)]
        methods: Vec<MethodArg>,
    },
    /// Equivariant class data: σ₁ coefficient per GL factor and the u-part.
    Class {
        #[arg(long)]
        group: String,
        #[arg(long)]
        weight: String,
    },
    /// Degree polynomial of a semisimple group in fundamental coordinates.
    Fg {
        #[arg(long)]
        group: String,
    },
    /// Closed form for degree-a forms in n variables.
    Boole { n: usize, a: i64 },
    /// Closed form for duals of Grassmannians Gr(k, n).
    Grassmannian { n: usize, k: usize },
    /// Closed form for duals of Gr(3, n).
    Gr3 { n: usize },
    /// Hyperdeterminant degree for a format like 2x2x3.
    Hyperdet { format: String },
    /// Closed-form GL(n) weight families.
    Family {
        /// Hook weight (a+b, b, …, b, 0); takes n,a,b.
        #[arg(long, value_delimiter = ',')]
        ab: Option<Vec<i64>>,
        /// Two-row weight (a, b, 0, …, 0) with a > b; takes n,a,b.
        #[arg(long = "two-row", value_delimiter = ',')]
        two_row: Option<Vec<i64>>,
        /// Equal two-row weight (a, a, 0, …, 0); takes n,a.
        #[arg(long, value_delimiter = ',')]
        aabb: Option<Vec<i64>>,
    },
    /// Re-run the built-in verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
    },
}

fn weight_ints(w: &Weight) -> Result<Vec<i64>, CliError> {
    w.coords()
        .iter()
        .map(|c| {
            if !is_integer(c) {
                return Err(usage(format!(
                    "this method needs integer weight coordinates, got {c}"
                )));
            }
            c.numer()
                .to_i64()
                .ok_or_else(|| usage("weight coordinate out of range".to_string()))
        })
        .collect()
}

fn big_to_u64(b: &num_bigint::BigInt, what: &str) -> Result<u64, CliError> {
    b.to_u64().ok_or_else(|| CliError {
        code: 2,
        message: format!("{what} does not fit in 64 bits"),
    })
}

/// A report for the symmetric-function routes, which are closed-form
/// evaluations without generic points.
fn symfun_report(lam: &[i64], method: Method, degree: u64) -> Result<DegreeReport, CliError> {
    let (epsilon, stab) = symfun::eps_stab(lam);
    Ok(DegreeReport {
        degree,
        is_hypersurface: degree > 0,
        epsilon,
        stabilizer_order: big_to_u64(&stab, "stabilizer order")?,
        points_used: 0,
        method,
        seeds: Vec::new(),
    })
}

fn run_method(
    rs: &RootSystem,
    lam: &Weight,
    dominant: &Weight,
    method: MethodArg,
    seed: u64,
) -> Result<DegreeReport, CliError> {
    match method {
        MethodArg::Orbit => engine::degree(rs, lam, seed).map_err(from_lib),
        MethodArg::Symmetric => engine::degree_symmetric(rs, lam, seed).map_err(from_lib),
        MethodArg::Fg => {
            // The polynomial route lives on the semisimple part; GL factors
            // map to their A-type part (the center acts by scalars, so the
            // degree agrees).  Simple roots are unchanged, hence so are the
            // fundamental coordinates.
            let fg_rs =
                if rs.is_semisimple() {
                    rs.clone()
                } else {
                    let mut semisimple = Vec::new();
                    for &(typ, n) in rs.factors() {
                        match typ {
                            FactorType::Gl if n >= 2 => semisimple.push((FactorType::A, n - 1)),
                            FactorType::Gl => return Err(usage(
                                "GL1 factors have no semisimple part; drop them for the fg method",
                            )),
                            other => semisimple.push((other, n)),
                        }
                    }
                    RootSystem::build(&semisimple).map_err(from_lib)?
                };
            let fg = engine::fg_polynomial(&fg_rs, seed).map_err(from_lib)?;
            let y: Vec<i64> = rs
                .fundamental_coords(dominant)
                .iter()
                .map(|c| {
                    if !is_integer(c) {
                        return Err(usage(format!(
                            "weight is not in the weight lattice (y coordinate {c})"
                        )));
                    }
                    c.numer()
                        .to_i64()
                        .ok_or_else(|| usage("fundamental coordinate out of range"))
                })
                .collect::<Result<_, _>>()?;
            engine::degree_from_fg(&fg_rs, &fg, &y).map_err(from_lib)
        }
        MethodArg::Jacobi | MethodArg::Permanent | MethodArg::ScalarProduct => {
            if rs.factors().len() != 1 || rs.factors()[0].0 != FactorType::Gl {
                return Err(usage(
                    "symmetric-function methods apply to a single GL(n) factor only",
                ));
            }
            let ints = weight_ints(dominant)?;
            match method {
                MethodArg::Jacobi => symfun_report(
                    &ints,
                    Method::Jacobi,
                    symfun::degree_via_jacobi(&ints).map_err(from_lib)?,
                ),
                MethodArg::Permanent => symfun_report(
                    &ints,
                    Method::Permanent,
                    symfun::degree_via_permanent(&ints).map_err(from_lib)?,
                ),
                _ => symfun_report(
                    &ints,
                    Method::ScalarProduct,
                    symfun::degree_via_scalar_product(&ints).map_err(from_lib)?,
                ),
            }
        }
    }
}

/// Reflects into the dominant chamber for display, warning when the input
/// needed it (the degree itself is invariant).
fn dominant_for_display(rs: &RootSystem, lam: &Weight) -> Weight {
    let (dom, changed) = rs.normalize_dominant(lam);
    if changed {
        eprintln!("note: weight is not dominant; using its dominant representative");
    }
    dom
}

fn cmd_degree(
    output: Output,
    seed: u64,
    group: &str,
    weight: &str,
    methods: &[MethodArg],
) -> Result<(), CliError> {
    let rs = spec::parse_group(group).map_err(usage)?;
    let lam = spec::parse_weight(&rs, weight).map_err(usage)?;
    let dominant = dominant_for_display(&rs, &lam);

    let mut requested: Vec<MethodArg> = Vec::new();
    for m in methods {
        if !requested.contains(m) {
            requested.push(*m);
        }
    }
    if requested.is_empty() {
        requested.push(MethodArg::Orbit);
    }

    let mut reports = Vec::with_capacity(requested.len());
    for m in &requested {
        reports.push(run_method(&rs, &lam, &dominant, *m, seed)?);
    }
    for r in &reports[1..] {
        if r.degree != reports[0].degree {
            return Err(CliError {
                code: 2,
                message: format!(
                    "methods disagree: {} gives {}, {} gives {}",
                    render::method_tag(reports[0].method),
                    reports[0].degree,
                    render::method_tag(r.method),
                    r.degree
                ),
            });
        }
    }

    render::emit_degree(output, group, &rs, &dominant, &reports);
    Ok(())
}

fn cmd_class(output: Output, seed: u64, group: &str, weight: &str) -> Result<(), CliError> {
    let rs = spec::parse_group(group).map_err(usage)?;
    let lam = spec::parse_weight(&rs, weight).map_err(usage)?;
    let dominant = dominant_for_display(&rs, &lam);
    let report = engine::class_report(&rs, &lam, seed).map_err(from_lib)?;
    let stab = big_to_u64(&report.stabilizer_order, "stabilizer order")?;
    render::emit_class(output, group, &rs, &dominant, &report, stab);
    Ok(())
}

fn cmd_fg(output: Output, seed: u64, group: &str) -> Result<(), CliError> {
    let rs = spec::parse_group(group).map_err(usage)?;
    if !rs.is_semisimple() {
        return Err(usage(
            "the degree polynomial is defined for semisimple groups; \
             replace GL factors by their A-type part (e.g. GL3 → A2)",
        ));
    }
    let fg = engine::fg_polynomial(&rs, seed).map_err(from_lib)?;
    render::emit_fg(output, group, &rs, &fg);
    Ok(())
}

fn emit_closed_degree(output: Output, family: &'static str, parameters: Vec<i64>, degree: u64) {
    render::emit_closed(
        output,
        &render::ClosedJson {
            family,
            parameters,
            degree,
            hypersurface: degree > 0,
        },
    );
}

fn cmd_family(
    output: Output,
    ab: Option<Vec<i64>>,
    two_row: Option<Vec<i64>>,
    aabb: Option<Vec<i64>>,
) -> Result<(), CliError> {
    let given = ab.is_some() as u8 + two_row.is_some() as u8 + aabb.is_some() as u8;
    if given != 1 {
        return Err(usage(
            "family needs exactly one of --ab n,a,b / --two-row n,a,b / --aabb n,a",
        ));
    }
    if let Some(v) = ab {
        let &[n, a, b] = v.as_slice() else {
            return Err(usage("--ab takes n,a,b"));
        };
        let n = usize::try_from(n).map_err(|_| usage("n must be positive"))?;
        let degree = closed::gammaab_degree(n, a, b).map_err(from_lib)?;
        emit_closed_degree(output, "hook", vec![n as i64, a, b], degree);
    } else if let Some(v) = two_row {
        let &[n, a, b] = v.as_slice() else {
            return Err(usage("--two-row takes n,a,b"));
        };
        let n = usize::try_from(n).map_err(|_| usage("n must be positive"))?;
        let degree = closed::abn_degree(n, a, b).map_err(from_lib)?;
        emit_closed_degree(output, "two-row", vec![n as i64, a, b], degree);
    } else if let Some(v) = aabb {
        let &[n, a] = v.as_slice() else {
            return Err(usage("--aabb takes n,a"));
        };
        let n = usize::try_from(n).map_err(|_| usage("n must be positive"))?;
        let degree = closed::aa_degree(n, a).map_err(from_lib)?;
        emit_closed_degree(output, "equal-two-row", vec![n as i64, a], degree);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Degree {
            group,
            weight,
            methods,
        } => cmd_degree(cli.output, cli.seed, &group, &weight, &methods),
        Command::Class { group, weight } => cmd_class(cli.output, cli.seed, &group, &weight),
        Command::Fg { group } => cmd_fg(cli.output, cli.seed, &group),
        Command::Boole { n, a } => {
            let degree = closed::boole_degree(n, a).map_err(from_lib)?;
            emit_closed_degree(cli.output, "veronese", vec![n as i64, a], degree);
            Ok(())
        }
        Command::Grassmannian { n, k } => {
            let degree = closed::grassmannian_degree(n, k).map_err(from_lib)?;
            emit_closed_degree(cli.output, "grassmannian", vec![n as i64, k as i64], degree);
            Ok(())
        }
        Command::Gr3 { n } => {
            let degree = closed::gr3_degree(n).map_err(from_lib)?;
            emit_closed_degree(cli.output, "gr3", vec![n as i64], degree);
            Ok(())
        }
        Command::Hyperdet { format } => {
            let dims = spec::parse_format(&format).map_err(usage)?;
            let report = closed::hyperdet_degree(&dims, cli.seed).map_err(from_lib)?;
            render::emit_hyperdet(
                cli.output,
                &render::HyperdetJson {
                    format: dims,
                    degree: report.degree,
                    hypersurface: report.is_hypersurface,
                    method: render::method_tag(report.method),
                },
            );
            Ok(())
        }
        Command::Family { ab, two_row, aabb } => cmd_family(cli.output, ab, two_row, aabb),
        Command::Verify { suite } => {
            if verify::run(suite, cli.seed) {
                Ok(())
            } else {
                Err(CliError {
                    code: 2,
                    message: "verification failed".to_string(),
                })
            }
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version exit 0; real usage errors exit 1.
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: could not size the thread pool: {e}");
            std::process::exit(1);
        }
    }
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}
