//! Command-line front end. [`run`] parses arguments, dispatches, and
//! returns the process exit code: 0 on success, 1 on a domain error
//! (the mathematics said no, or a file could not be read), 2 on a usage
//! error (bad flags, malformed polynomial or family text).

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::conjecture::{self, AlgebraicTarget, RealizationResult, SearchBounds};
use crate::factor;
use crate::families;
use crate::galois;
use crate::graphs::{self, FamilySpec};
use crate::intpoly::{self, Bound, DivMode, IntPoly, Rational};
use crate::survey::{self, Shard, SurveyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "chromroots",
    version,
    about = "Chromatic polynomials of graph families, factorization over Z, Galois groups and chromatic-root searches",
    after_help = "Polynomial arguments use the text form, e.g. \"x^2 - 7x + 11\", or @FILE to read it from a file."
)]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Polynomial arithmetic and utilities
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Operations on graphs read from a file
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Chromatic polynomial or interesting factor of a family instance
    Family(FamilyArgs),
    /// Factor a polynomial over the integers
    Factor {
        /// Polynomial to factor
        poly: String,
    },
    /// Galois group of an irreducible polynomial
    Galois {
        /// Irreducible polynomial of degree at least 1
        poly: String,
        /// Frobenius prime samples for degrees 5 and up
        #[arg(long, default_value_t = galois::DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Integer translate with x^(n-1) coefficient in [0, n-1]
    Standardize {
        /// Monic polynomial
        poly: String,
    },
    /// Shifts t for which alpha + t cannot be a chromatic root
    Exclude {
        /// Minimal polynomial of alpha
        poly: String,
        /// Largest shift t to test
        #[arg(long)]
        max_shift: u64,
    },
    /// Ring of cliques realizing a quadratic integer plus a shift
    RealizeQuadratic {
        /// Minimal polynomial of the target
        #[arg(required_unless_present = "disc", conflicts_with = "disc")]
        poly: Option<String>,
        /// Discriminant of the target instead of its polynomial
        #[arg(long, allow_negative_numbers = true)]
        disc: Option<BigInt>,
    },
    /// Search family instances for a root alpha + n
    Search(SearchArgs),
    /// Galois census of ring-of-cliques interesting factors
    Survey(SurveyArgs),
}

#[derive(Debug, Subcommand)]
pub enum PolyOp {
    /// f + g
    Add { f: String, g: String },
    /// f - g
    Sub { f: String, g: String },
    /// f * g
    Mul { f: String, g: String },
    /// Quotient and remainder of f by g
    Divrem {
        f: String,
        g: String,
        /// Pseudo-division instead of exact division
        #[arg(long)]
        pseudo: bool,
    },
    /// f(x + a)
    Shift {
        f: String,
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
    },
    /// Discriminant
    Disc { f: String },
    /// Number of distinct real roots in an interval
    Sturm {
        f: String,
        /// Lower end: integer, fraction p/q or -inf
        #[arg(long, default_value = "-inf", allow_hyphen_values = true)]
        lo: String,
        /// Upper end: integer, fraction p/q or inf
        #[arg(long, default_value = "inf", allow_hyphen_values = true)]
        hi: String,
        /// Include the lower end
        #[arg(long)]
        lo_closed: bool,
        /// Include the upper end
        #[arg(long)]
        hi_closed: bool,
    },
    /// Approximate complex roots, one "re im" pair per line
    Roots {
        f: String,
        /// Convergence tolerance of the root finder
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// n-th cyclotomic polynomial
    Cyclotomic { n: u32 },
    /// q(q-1)...(q-k+1)
    Falling { k: u32 },
    /// Stirling number of the second kind
    Stirling2 { m: u32, k: u32 },
    /// Canonical form of a polynomial
    Format { f: String },
}

#[derive(Debug, Subcommand)]
pub enum GraphOp {
    /// Chromatic polynomial of a graph file ("-" for stdin)
    Chromatic {
        /// Vertex count on the first line, then one "u v" edge per line
        file: PathBuf,
        /// Vertex limit for the deletion-contraction engine
        #[arg(long, default_value_t = graphs::DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[command(subcommand)]
    pub kind: FamilyKind,
    /// Print the interesting factor (default)
    #[arg(long, global = true, conflicts_with_all = ["full", "graph"])]
    pub interesting: bool,
    /// Print the full chromatic polynomial
    #[arg(long, global = true, conflicts_with = "graph")]
    pub full: bool,
    /// Print the graph in the text format read by `graph chromatic`
    #[arg(long, global = true)]
    pub graph: bool,
}

#[derive(Debug, Subcommand)]
pub enum FamilyKind {
    /// Ring of cliques with the given sizes, e.g. 1,1,1,5
    Ring { sizes: String },
    /// Clique on N vertices plus one vertex per set, joined to the set
    Biclique {
        #[arg(long)]
        n: usize,
        /// Sets separated by ';', elements by ',', e.g. "0,1;2,3;4,5,6"
        #[arg(long)]
        sets: String,
    },
    /// Complete bipartite graph K_{m,n}
    Kmn { m: usize, n: usize },
    /// p paths of length s between two vertices
    Theta { s: usize, p: usize },
    /// n paths of lengths ns-n+1..ns between two vertices
    Gentheta { s: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchFamily {
    Ring,
    Biclique,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Minimal polynomial of alpha
    pub poly: String,
    /// Families to enumerate (repeatable)
    #[arg(long, value_enum, required_unless_present = "cycles")]
    pub family: Vec<SearchFamily>,
    /// Largest clique size in rings
    #[arg(long, required_if_eq("family", "ring"))]
    pub max_entry: Option<usize>,
    /// Largest clique C in bicliques
    #[arg(long, required_if_eq("family", "biclique"))]
    pub max_n: Option<usize>,
    /// Also try cycles of length 3..=K
    #[arg(long)]
    pub cycles: Option<usize>,
    /// Largest shift n to try
    #[arg(long)]
    pub max_shift: u64,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    /// Tuple length; factors have degree n - 1
    #[arg(long)]
    pub n: usize,
    /// Largest tuple entry
    #[arg(long = "max")]
    pub max: usize,
    /// JSONL record file; existing records are kept and skipped
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Process tuple indices = i mod w
    #[arg(long, value_name = "i/w")]
    pub shard: Option<String>,
    /// In-process worker threads
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Frobenius prime samples for degrees 5 and up
    #[arg(long, default_value_t = galois::DEFAULT_SAMPLES)]
    pub samples: usize,
}

enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain(e: impl ToString) -> Failure {
    Failure::Domain(e.to_string())
}

/// Parse argv (including the program name) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

/// Polynomial argument; `@path` reads the text from a file.
fn poly_arg(s: &str) -> Result<(IntPoly, char), Failure> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| domain(format!("{path}: {e}")))?,
        None => s.to_string(),
    };
    let p = IntPoly::from_str(text.trim()).map_err(usage)?;
    Ok((p, if text.contains('q') { 'q' } else { 'x' }))
}

fn bound_arg(s: &str) -> Result<Bound, Failure> {
    match s.trim() {
        "-inf" => Ok(Bound::NegInfinity),
        "inf" | "+inf" => Ok(Bound::PosInfinity),
        t => Rational::from_str(t).map(Bound::At).map_err(|_| usage(format!("bad interval end '{t}'"))),
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("output types serialize")
}

fn realization_json(r: &RealizationResult) -> serde_json::Value {
    json!({
        "family": r.family.to_string(),
        "shift": r.shift,
        "vertices": r.vertex_count,
        "factor": r.factor.format_var('q'),
    })
}

fn realization_text(r: &RealizationResult) -> String {
    format!("{} shift={} vertices={} factor={}", r.family, r.shift, r.vertex_count, r.factor.format_var('q'))
}

fn execute(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Poly { op } => poly(op, json),
        Command::Graph { op: GraphOp::Chromatic { file, cap } } => {
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(domain)?;
                s
            } else {
                std::fs::read_to_string(file).map_err(|e| domain(format!("{}: {e}", file.display())))?
            };
            let g = graphs::parse_graph(&text).map_err(domain)?;
            let p = graphs::chromatic_polynomial_with_cap(&g, *cap).map_err(domain)?;
            Ok(if json {
                to_json(&json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "polynomial": p.format_var('q'),
                }))
            } else {
                p.format_var('q')
            })
        }
        Command::Family(args) => family(args, json),
        Command::Factor { poly } => {
            let (p, var) = poly_arg(poly)?;
            if p.is_zero() {
                return Err(domain("cannot factor the zero polynomial"));
            }
            let f = factor::factor(&p);
            Ok(if json { to_json(&f.to_json()) } else { f.format_var(var) })
        }
        Command::Galois { poly, samples } => {
            let (p, _) = poly_arg(poly)?;
            let g = galois::classify(&p, *samples).map_err(domain)?;
            Ok(if json { to_json(&g) } else { g.to_string() })
        }
        Command::Standardize { poly } => {
            let (p, var) = poly_arg(poly)?;
            let s = p.standardize().map_err(domain)?;
            Ok(if json {
                to_json(&json!({ "standard": s.standard.format_var(var), "shift": s.shift.to_string() }))
            } else {
                format!("{} shift={}", s.standard.format_var(var), s.shift)
            })
        }
        Command::Exclude { poly, max_shift } => {
            let (p, _) = poly_arg(poly)?;
            let target = AlgebraicTarget::new(p).map_err(domain)?;
            let e = conjecture::exclusion_min_shift(&target, *max_shift).map_err(domain)?;
            Ok(if json {
                to_json(&e)
            } else {
                let list: Vec<String> = e.excluded.iter().map(u64::to_string).collect();
                let cand = e.min_candidate.map_or("none".to_string(), |c| c.to_string());
                format!("excluded: {}\ncandidate: {cand}", list.join(" "))
            })
        }
        Command::RealizeQuadratic { poly, disc } => {
            let r = match (poly, disc) {
                (_, Some(d)) => conjecture::realize_discriminant(d),
                (Some(p), None) => {
                    let target = AlgebraicTarget::new(poly_arg(p)?.0).map_err(domain)?;
                    conjecture::realize_quadratic(&target)
                }
                (None, None) => unreachable!("clap requires one of them"),
            }
            .map_err(domain)?;
            Ok(if json { to_json(&realization_json(&r)) } else { realization_text(&r) })
        }
        Command::Search(args) => {
            let target = AlgebraicTarget::new(poly_arg(&args.poly)?.0).map_err(domain)?;
            let bounds = SearchBounds {
                ring_max_entry: args.family.contains(&SearchFamily::Ring).then_some(args.max_entry).flatten(),
                biclique_max_n: args.family.contains(&SearchFamily::Biclique).then_some(args.max_n).flatten(),
                cycles_max_k: args.cycles,
            };
            let hits = conjecture::search_alpha_n(&target, &bounds, args.max_shift).map_err(domain)?;
            Ok(if json {
                to_json(&hits.iter().map(realization_json).collect::<Vec<_>>())
            } else if hits.is_empty() {
                "no realization within bounds".to_string()
            } else {
                hits.iter().map(realization_text).collect::<Vec<_>>().join("\n")
            })
        }
        Command::Survey(args) => {
            let shard = match &args.shard {
                Some(s) => Shard::from_str(s).map_err(usage)?,
                None => Shard::ALL,
            };
            if args.workers == 0 {
                return Err(usage("--workers must be at least 1"));
            }
            let config = SurveyConfig { samples: args.samples, workers: args.workers };
            let tally = match &args.out {
                Some(path) => survey::survey_to_file(args.n, args.max, shard, config, path),
                None => survey::survey_run(args.n, args.max, shard, config, &mut |_| Ok(())),
            }
            .map_err(|e| match e {
                survey::SurveyError::InvalidParameters(m) => usage(m),
                other => domain(other),
            })?;
            Ok(if json { to_json(&tally) } else { tally.to_string() })
        }
    }
}

fn poly(op: &PolyOp, json: bool) -> Outcome {
    let emit = |p: &IntPoly, var: char| if json { to_json(&p) } else { p.format_var(var) };
    let binary = |f: &str, g: &str, op: intpoly::ArithOp| -> Outcome {
        let ((f, v), (g, _)) = (poly_arg(f)?, poly_arg(g)?);
        Ok(emit(&intpoly::arith(&f, &g, op), v))
    };
    match op {
        PolyOp::Add { f, g } => binary(f, g, intpoly::ArithOp::Add),
        PolyOp::Sub { f, g } => binary(f, g, intpoly::ArithOp::Sub),
        PolyOp::Mul { f, g } => binary(f, g, intpoly::ArithOp::Mul),
        PolyOp::Divrem { f, g, pseudo } => {
            let ((f, v), (g, _)) = (poly_arg(f)?, poly_arg(g)?);
            let mode = if *pseudo { DivMode::Pseudo } else { DivMode::Exact };
            let (q, r) = f.divrem(&g, mode).map_err(domain)?;
            Ok(if json {
                to_json(&json!({ "quotient": q, "remainder": r }))
            } else {
                format!("quotient: {}\nremainder: {}", q.format_var(v), r.format_var(v))
            })
        }
        PolyOp::Shift { f, a } => {
            let (f, v) = poly_arg(f)?;
            Ok(emit(&f.shift(a), v))
        }
        PolyOp::Disc { f } => {
            let d = poly_arg(f)?.0.discriminant().map_err(domain)?;
            Ok(if json { to_json(&d.to_string()) } else { d.to_string() })
        }
        PolyOp::Sturm { f, lo, hi, lo_closed, hi_closed } => {
            let f = poly_arg(f)?.0;
            let n =
                intpoly::sturm_count(&f, &bound_arg(lo)?, &bound_arg(hi)?, !lo_closed, !hi_closed).map_err(domain)?;
            Ok(n.to_string())
        }
        PolyOp::Roots { f, tol } => {
            let roots = intpoly::numeric_roots(&poly_arg(f)?.0, *tol).map_err(domain)?;
            Ok(if json {
                to_json(&roots.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
            } else {
                roots.iter().map(|z| format!("{:.12} {:.12}", z.re, z.im)).collect::<Vec<_>>().join("\n")
            })
        }
        PolyOp::Cyclotomic { n } => {
            if *n == 0 {
                return Err(usage("n must be positive"));
            }
            Ok(emit(&intpoly::cyclotomic(*n), 'x'))
        }
        PolyOp::Falling { k } => Ok(emit(&intpoly::falling_factorial(*k), 'q')),
        PolyOp::Stirling2 { m, k } => {
            let s = intpoly::stirling2(*m, *k);
            Ok(if json { to_json(&s.to_string()) } else { s.to_string() })
        }
        PolyOp::Format { f } => {
            let (f, v) = poly_arg(f)?;
            Ok(emit(&f, v))
        }
    }
}

fn family(args: &FamilyArgs, json: bool) -> Outcome {
    let spec_text = match &args.kind {
        FamilyKind::Ring { sizes } => format!("ring:{sizes}"),
        FamilyKind::Biclique { n, sets } => format!("biclique:{n}:{sets}"),
        FamilyKind::Kmn { m, n } => format!("kmn:{m},{n}"),
        FamilyKind::Theta { s, p } => format!("theta:{s},{p}"),
        FamilyKind::Gentheta { s, n } => format!("gentheta:{s},{n}"),
    };
    let spec = FamilySpec::from_str(&spec_text).map_err(usage)?;
    spec.validate().map_err(usage)?;
    if args.graph {
        let g = spec.build().map_err(domain)?;
        return Ok(if json {
            to_json(&json!({ "family": spec, "vertices": g.vertex_count(), "edges": g.edges().collect::<Vec<_>>() }))
        } else {
            g.to_text().trim_end().to_string()
        });
    }
    let (label, p) = if args.full {
        ("full", families::full_chromatic(&spec))
    } else {
        ("interesting", families::interesting_factor(&spec))
    };
    let p = p.map_err(domain)?;
    Ok(if json {
        to_json(&json!({ "family": spec, "vertices": spec.vertex_count(), label: p.format_var('q') }))
    } else {
        p.format_var('q')
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["chromroots"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn family_ring() {
        assert_eq!(call(&["family", "ring", "1,1,1,5", "--interesting"]).1, "q^2 - 7q + 11\n");
        assert_eq!(call(&["family", "ring", "1,1,1,5"]).1, "q^2 - 7q + 11\n");
    }

    #[test]
    fn exclude_golden_ratio() {
        let (code, out, _) = call(&["exclude", "x^2+x-1", "--max-shift", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "excluded: 0 1 2\ncandidate: 3\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["factor", "x^^2"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["galois", "x^2-1"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn negative_arguments() {
        let (code, out, _) = call(&["poly", "shift", "x^2", "-1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x^2 - 2x + 1\n");
        let (_, out, _) = call(&["realize-quadratic", "--disc", "-4"]);
        assert!(out.contains("shift="), "{out}");
    }

    #[test]
    fn json_outputs_parse() {
        for args in [
            vec!["--json", "factor", "x^4-1"],
            vec!["--json", "galois", "x^3-3x-1"],
            vec!["--json", "standardize", "x^2-7x+11"],
            vec!["--json", "family", "theta", "3", "2", "--full"],
        ] {
            let (code, out, err) = call(&args);
            assert_eq!(code, 0, "{err}");
            serde_json::from_str::<serde_json::Value>(&out).unwrap();
        }
    }
}
