//! The `slcinv` command line.
//!
//! Each subcommand builds a JSON request for an operation in [`ops`] and
//! prints either its text rendering or, with `--json`, the full response
//! object. Exit status is 0 on success, 1 when the mathematics rejects the
//! input, and 2 for usage errors.

pub mod batch;
pub mod json;
pub mod ops;

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};

use batch::Response;
use ops::{execute, Failure, FailureKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "slcinv",
    version,
    about = "Exact invariants of surface singularities and surfaces in P^3",
    after_help = "Cycles and weights are magnitudes: 6,2,2,3 means curves of self-intersection -6, -2, -2, -3."
)]
struct Cli {
    /// Print the response as canonical JSON
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cusp resolution cycles
    #[command(subcommand)]
    Cusp(CuspOp),
    /// Plumbing graphs and their intersection forms
    #[command(subcommand)]
    Plumbing(PlumbingOp),
    /// Quotient cusps given by the chain e1,...,ek
    #[command(subcommand)]
    Qcusp(QcuspOp),
    /// Hypersurface cusps x^p + y^q + z^r + xyz = 0
    #[command(subcommand)]
    Pinkham(PinkhamOp),
    /// Cyclic quotient singularities of class T
    #[command(subcommand)]
    Classt(ClassTOp),
    /// Simple elliptic singularity of degree d
    Elliptic {
        #[arg(long)]
        degree: i64,
    },
    /// Smooth surface of degree d in P^3
    Hypersurface {
        #[arg(long)]
        degree: i64,
        /// Also compute the cohomology of the normal and tangent sheaves
        #[arg(long)]
        cohomology: bool,
    },
    /// Virtual dimension 10 chi - 2 K^2
    Vd {
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
    },
    /// The sextic example with its order-72 symmetry group
    #[command(subcommand)]
    Donaldson(DonaldsonOp),
    /// Cross-check of the (6,2,2,3,3,2,2,4) cusp against quoted values
    Report,
    /// Read JSON requests, one per line, from FILE or standard input
    Batch { file: Option<PathBuf> },
}

#[derive(Args, Debug)]
struct CycleArg {
    /// Comma-separated entries, e.g. 6,2,2,3,3,2,2,4
    cycle: String,
}

#[derive(Subcommand, Debug)]
enum CuspOp {
    /// Least rotation or reflection of the cycle
    Canonical(CycleArg),
    /// Monodromy matrix A
    Monodromy(CycleArg),
    /// Dual cusp cycle
    Dual(CycleArg),
    /// Complete intersection test
    Ci(CycleArg),
    /// Discriminant group: torsion of H1 of the link
    Torsion(CycleArg),
    /// Hypersurface (lci) discriminant cover
    LciCover(CycleArg),
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Graph as JSON: {"weights":[...],"edges":[[i,j],...]}
    #[arg(required_unless_present_any = ["chain", "qcusp"])]
    graph: Option<String>,
    /// A linear chain with these weights instead
    #[arg(long, conflicts_with_all = ["graph", "qcusp"])]
    chain: Option<String>,
    /// The resolution graph of the quotient cusp with this chain instead
    #[arg(long, conflicts_with = "graph")]
    qcusp: Option<String>,
}

#[derive(Subcommand, Debug)]
enum PlumbingOp {
    /// Intersection matrix
    Matrix(GraphArg),
    /// Discriminant group
    Disc(GraphArg),
    /// Negative definiteness
    Negdef(GraphArg),
}

#[derive(Args, Debug)]
struct ChainArg {
    /// Comma-separated chain e1,...,ek
    e: String,
}

#[derive(Subcommand, Debug)]
enum QcuspOp {
    /// The matrix B
    Bmatrix(ChainArg),
    /// Order 16b of the cover group
    Order(ChainArg),
    /// Equations of the universal abelian cover
    Equations(ChainArg),
    /// Resolution cycle of the cover
    CoverCycle(ChainArg),
    /// Smoothing family for one exponent tuple
    Smoothing {
        e: String,
        /// alpha,beta,gamma,delta
        #[arg(long)]
        tuple: String,
    },
}

#[derive(Args, Debug)]
struct TripleArg {
    /// p,q,r
    triple: String,
}

#[derive(Subcommand, Debug)]
enum PinkhamOp {
    /// Dual cycle (p-1, q-1, r-1)
    Dual(TripleArg),
    /// Order of the abelianized link group
    Order(TripleArg),
    /// Equivariant smoothing
    Smoothing(TripleArg),
}

#[derive(Subcommand, Debug)]
enum ClassTOp {
    /// Classify 1/m(1,q), written m/q, or 1/m(p,q), written m/p,q
    Check {
        singularity: String,
        /// Read m/p,q as the inverse pair p q = 1 mod m, i.e. 1/m(1,p)
        #[arg(long)]
        inverse_pair: bool,
    },
    /// All non-RDP class T singularities with m <= MAX_M
    Enumerate {
        #[arg(long)]
        max_m: i64,
    },
}

#[derive(Subcommand, Debug)]
enum DonaldsonOp {
    /// GIT fan, the two insertions and the collapse
    Fan,
    /// Invariant sextic polynomials
    Invariants,
    /// Invariant two-forms and the equivariant virtual dimension
    TwoForms,
    /// The tautological invariant I_CM
    Tautological {
        /// <-c1(L_Ob), D_II>
        #[arg(long, allow_hyphen_values = true)]
        ob: Option<String>,
        /// <c1(lambda2), D_II>
        #[arg(long, allow_hyphen_values = true)]
        l2: Option<String>,
        /// <c1(lambda2)^2, [M]>
        #[arg(long, allow_hyphen_values = true)]
        l2sq: Option<String>,
    },
    /// Exponents of lambda_CM = lambda3^(2mu+6) * lambda2^(-6)
    CmExponents {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
}

fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| format!("{x:?} is not a nonnegative integer in {s:?}")))
        .collect()
}

fn cycle_input(c: &CycleArg) -> Result<Value, String> {
    Ok(json!({ "cycle": parse_list(&c.cycle)? }))
}

fn graph_input(g: &GraphArg) -> Result<Value, String> {
    if let Some(chain) = &g.chain {
        let w = parse_list(chain)?;
        let edges: Vec<[usize; 2]> = (1..w.len()).map(|i| [i - 1, i]).collect();
        return Ok(json!({ "weights": w, "edges": edges }));
    }
    if let Some(e) = &g.qcusp {
        let graph = crate::plumbing::quotient_cusp_graph(&parse_list(e)?).map_err(|e| e.to_string())?;
        return serde_json::to_value(graph).map_err(|e| e.to_string());
    }
    let text = g.graph.as_deref().unwrap_or_default();
    serde_json::from_str(text).map_err(|e| format!("graph is not valid JSON: {e}"))
}

fn triple_input(t: &TripleArg) -> Result<Value, String> {
    match parse_list(&t.triple)?.as_slice() {
        [p, q, r] => Ok(json!({ "p": p, "q": q, "r": r })),
        _ => Err(format!("expected p,q,r, got {:?}", t.triple)),
    }
}

fn classt_input(s: &str, inverse_pair: bool) -> Result<Value, String> {
    let bad = || format!("expected m/q or m/p,q, got {s:?}");
    let (m, rest) = s.split_once('/').ok_or_else(bad)?;
    let m: i64 = m.trim().parse().map_err(|_| bad())?;
    let w: Vec<i64> = rest
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match (w.as_slice(), inverse_pair) {
        ([q], false) => Ok(json!({ "m": m, "q": q })),
        ([p, q], _) => Ok(json!({ "m": m, "p": p, "q": q, "inverse_pair": inverse_pair })),
        _ => Err(bad()),
    }
}

/// Maps a parsed command line to `(operation, input)`.
fn request_for(command: &Command) -> Result<(&'static str, Value), String> {
    Ok(match command {
        Command::Cusp(op) => match op {
            CuspOp::Canonical(c) => ("cusp.canonical", cycle_input(c)?),
            CuspOp::Monodromy(c) => ("cusp.monodromy", cycle_input(c)?),
            CuspOp::Dual(c) => ("cusp.dual", cycle_input(c)?),
            CuspOp::Ci(c) => ("cusp.ci", cycle_input(c)?),
            CuspOp::Torsion(c) => ("cusp.torsion", cycle_input(c)?),
            CuspOp::LciCover(c) => ("cusp.lci-cover", cycle_input(c)?),
        },
        Command::Plumbing(op) => match op {
            PlumbingOp::Matrix(g) => ("plumbing.matrix", graph_input(g)?),
            PlumbingOp::Disc(g) => ("plumbing.disc", graph_input(g)?),
            PlumbingOp::Negdef(g) => ("plumbing.negdef", graph_input(g)?),
        },
        Command::Qcusp(op) => match op {
            QcuspOp::Bmatrix(c) => ("qcusp.bmatrix", json!({ "e": parse_list(&c.e)? })),
            QcuspOp::Order(c) => ("qcusp.order", json!({ "e": parse_list(&c.e)? })),
            QcuspOp::Equations(c) => ("qcusp.equations", json!({ "e": parse_list(&c.e)? })),
            QcuspOp::CoverCycle(c) => ("qcusp.cover-cycle", json!({ "e": parse_list(&c.e)? })),
            QcuspOp::Smoothing { e, tuple } => {
                let t = parse_list(tuple)?;
                if t.len() != 4 {
                    return Err(format!("expected alpha,beta,gamma,delta, got {tuple:?}"));
                }
                ("qcusp.smoothing", json!({ "e": parse_list(e)?, "tuple": t }))
            }
        },
        Command::Pinkham(op) => match op {
            PinkhamOp::Dual(t) => ("pinkham.dual", triple_input(t)?),
            PinkhamOp::Order(t) => ("pinkham.order", triple_input(t)?),
            PinkhamOp::Smoothing(t) => ("pinkham.smoothing", triple_input(t)?),
        },
        Command::Classt(op) => match op {
            ClassTOp::Check { singularity, inverse_pair } => ("classt.check", classt_input(singularity, *inverse_pair)?),
            ClassTOp::Enumerate { max_m } => ("classt.enumerate", json!({ "max_m": max_m })),
        },
        Command::Elliptic { degree } => ("elliptic", json!({ "degree": degree })),
        Command::Hypersurface { degree, cohomology } => {
            ("hypersurface", json!({ "degree": degree, "cohomology": cohomology }))
        }
        Command::Vd { k2, chi } => ("vd", json!({ "k2": k2, "chi": chi })),
        Command::Donaldson(op) => match op {
            DonaldsonOp::Fan => ("donaldson.fan", json!({})),
            DonaldsonOp::Invariants => ("donaldson.invariants", json!({})),
            DonaldsonOp::TwoForms => ("donaldson.two-forms", json!({})),
            DonaldsonOp::Tautological { ob, l2, l2sq } => {
                let mut input = serde_json::Map::new();
                for (k, v) in [("ob", ob), ("l2", l2), ("l2sq", l2sq)] {
                    if let Some(v) = v {
                        input.insert(k.into(), json!(v));
                    }
                }
                ("donaldson.tautological", Value::Object(input))
            }
            DonaldsonOp::CmExponents { mu } => ("donaldson.cm-exponents", json!({ "mu": mu })),
        },
        Command::Report => ("report.discrepancy", json!({})),
        Command::Batch { .. } => unreachable!("batch is handled separately"),
    })
}

fn usage_error(stderr: &mut dyn Write, message: &str) -> i32 {
    let usage = Cli::command().render_usage();
    let _ = writeln!(stderr, "error: {message}\n\n{usage}");
    EXIT_USAGE
}

fn run_batch(file: &Option<PathBuf>, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut text = String::new();
    let read = match file {
        Some(path) => std::fs::read_to_string(path).map(|s| text = s),
        None => stdin.read_to_string(&mut text).map(|_| ()),
    };
    if let Err(e) = read {
        return usage_error(stderr, &format!("cannot read batch input: {e}"));
    }
    for response in batch::run_batch(&text) {
        let _ = writeln!(stdout, "{}", response.to_line());
    }
    EXIT_OK
}

/// Runs the command line `argv` (including the program name) against the
/// given streams and returns the exit status.
pub fn run_with_io(argv: &[String], stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{}", rendered.ansi());
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    if let Command::Batch { file } = &cli.command {
        return run_batch(file, stdin, stdout, stderr);
    }
    let (op, input) = match request_for(&cli.command) {
        Ok(r) => r,
        Err(message) => return usage_error(stderr, &message),
    };
    match execute(op, &input) {
        Ok(outcome) => {
            if cli.json {
                let r = Response { ok: true, output: Some(outcome.output), error: None, provenance: outcome.provenance };
                let _ = writeln!(stdout, "{}", r.to_line());
            } else {
                let _ = writeln!(stdout, "{}", outcome.text);
                for p in &outcome.provenance {
                    let _ = writeln!(stdout, "source: {p}");
                }
            }
            EXIT_OK
        }
        Err(failure) => report_failure(failure, cli.json, stdout, stderr),
    }
}

fn report_failure(failure: Failure, as_json: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let kind = failure.kind;
    if as_json {
        let _ = writeln!(stdout, "{}", Response::failure(failure).to_line());
    } else if kind == FailureKind::Usage {
        return usage_error(stderr, &format!("[{}] {}", failure.code, failure.message));
    } else {
        let _ = writeln!(stderr, "error[{}]: {}", failure.code, failure.message);
    }
    match kind {
        FailureKind::Domain => EXIT_DOMAIN,
        FailureKind::Usage => EXIT_USAGE,
    }
}

/// Runs against the process's standard streams.
pub fn run(argv: &[String]) -> i32 {
    let stdin = std::io::stdin();
    let mut stdin = stdin.lock();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    run_with_io(argv, &mut stdin, &mut stdout, &mut stderr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("6,2, 2").unwrap(), vec![6, 2, 2]);
        assert_eq!(parse_list("[3,3]").unwrap(), vec![3, 3]);
        assert!(parse_list("3,x").is_err());
    }

    #[test]
    fn class_t_forms() {
        assert_eq!(classt_input("4/1", false).unwrap(), json!({ "m": 4, "q": 1 }));
        assert_eq!(
            classt_input("9/2,5", true).unwrap(),
            json!({ "m": 9, "p": 2, "q": 5, "inverse_pair": true })
        );
        assert!(classt_input("9", false).is_err());
    }
}
