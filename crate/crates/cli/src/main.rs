use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopf_core::combinatorics::foata::m_count;
use hopf_core::descent_rep::cartan::CartanLabel;
use hopf_core::descent_rep::{
    cartan_d0, cartan_d0_lie, cartan_dk, cartan_dk_lie, cartan_sym, cartan_sym_lie, q_dimension_polynomials,
    triangle_rows, CartanMatrix,
};
use hopf_core::fqsym::pbt::fine_numbers;
use hopf_core::fqsym::{lie_eigenbasis, pbt_sharp_dims, s_sigma_sharp_matrix, tsetlin_spectral};
use hopf_core::nsym::{dnk_dim, parse_element, NsfBasis, NsfElement};
use hopf_core::wqsym::{cartan_wqsym, non_unitary_words, sharp_ranks};
use hopf_core::{Error, Result};

/// Span-method Cartan matrices are cross-checked against the Lie formula up to this degree.
const SPAN_CHECK_MAX_N: usize = 6;
/// `sharp_ranks` confirms the non-unitary counts up to this degree.
const SHARP_RANK_CHECK_MAX_N: usize = 4;

#[derive(Parser)]
#[command(
    name = "hopf",
    version,
    about = "Cartan matrices, dimension tables and spectral data for NSym, FQSym and WQSym"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Largest degree computed without --force.
    #[arg(long, env = "HOPF_MAX_DEGREE", default_value_t = 8, global = true)]
    max_degree: usize,
    /// Ignore --max-degree.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Labeled q-Cartan matrix.
    Cartan {
        #[arg(value_enum)]
        algebra: Algebra,
        #[arg(long)]
        n: usize,
        /// A non-negative integer or "inf"; only for dk.
        #[arg(long)]
        k: Option<String>,
    },
    /// Dimension tables.
    Dims {
        #[command(subcommand)]
        table: Table,
    },
    /// Spectrum, eigenspace dimensions and minimal polynomial of the random-to-top operator.
    Tsetlin {
        #[arg(long)]
        n: usize,
        /// Also print an eigenbasis of each eigenspace.
        #[arg(long)]
        eigenbasis: bool,
    },
    /// Check a conjecture on the computed range.
    Conjecture {
        #[command(subcommand)]
        name: Conjecture,
    },
    /// Evaluate an expression such as "S[2,1]", "sharp(S[3])" or "zeta[4]".
    Element {
        expr: String,
        #[arg(long, value_enum, default_value_t = Basis::S)]
        basis: Basis,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    D0,
    Dk,
    Sym,
    Wqsym,
    WqsymSharp,
}

#[derive(Subcommand)]
enum Table {
    /// Dimensions of D^(k)_n for k = 0, 1, 2, 3, inf.
    Dnk {
        #[arg(long)]
        max_n: usize,
    },
    /// Coefficients of the q-dimensions of D^(inf)_n.
    Triangle {
        #[arg(long)]
        rows: usize,
    },
    /// Maximal elements of X_n^(k) counted by n and k.
    Mnk {
        #[arg(long)]
        max_n: usize,
    },
    Fine {
        #[arg(long)]
        max_n: usize,
    },
    /// Dimensions of the sharp image in WQSym (non-unitary packed words).
    SharpWqsym {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum Conjecture {
    /// Triangularity of the sharp transform in the S^sigma basis.
    SharpTriangular {
        #[arg(long)]
        n: usize,
    },
    /// dim PBT_n^sharp against the Fine numbers.
    PbtFine {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    S,
    R,
}

/// One rendering per format.
struct Out {
    text: String,
    json: Value,
    csv: String,
}

struct Ctx {
    max_degree: usize,
    force: bool,
}

impl Ctx {
    fn guard(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_degree && !self.force {
            return Err(Error::CostGuard { what, n, limit: self.max_degree });
        }
        Ok(())
    }
}

fn parse_k(k: Option<&str>) -> Result<Option<usize>> {
    match k {
        None | Some("inf") => Ok(None),
        Some(s) => s.parse().map(Some).map_err(|_| Error::Invalid(format!("--k expects an integer or inf, got {s:?}"))),
    }
}

fn checked<L: CartanLabel>(span: Result<CartanMatrix<L>>, lie: CartanMatrix<L>, n: usize) -> Result<CartanMatrix<L>> {
    if n > SPAN_CHECK_MAX_N {
        return Ok(lie);
    }
    let span = span?;
    if span.labels != lie.labels || span.entries != lie.entries {
        return Err(Error::Consistency(format!("span and Lie Cartan matrices differ at n = {n}")));
    }
    Ok(span)
}

fn matrix_out<L: CartanLabel>(title: String, m: &CartanMatrix<L>) -> Out {
    let labels: Vec<String> = m.labels.iter().map(CartanLabel::label).collect();
    let text = format!("{title}\nlabels: {}\n{}", labels.join(", "), m.render_text());
    let mut json = m.to_json();
    json["title"] = json!(title);
    Out { text, json, csv: m.to_csv() }
}

fn cmd_cartan(ctx: &Ctx, algebra: Algebra, n: usize, k: Option<&str>) -> Result<Out> {
    ctx.guard("cartan", n)?;
    if k.is_some() && !matches!(algebra, Algebra::Dk) {
        return Err(Error::Invalid("--k only applies to dk".into()));
    }
    Ok(match algebra {
        Algebra::D0 => matrix_out(format!("D^(0)_{n}"), &checked(cartan_d0(n), cartan_d0_lie(n), n)?),
        Algebra::Sym => matrix_out(format!("Sym_{n}"), &checked(cartan_sym(n), cartan_sym_lie(n), n)?),
        Algebra::Dk => {
            let k = parse_k(k)?;
            let name = k.map_or("inf".to_string(), |k| k.to_string());
            matrix_out(format!("D^({name})_{n}"), &checked(cartan_dk(n, k), cartan_dk_lie(n, k), n)?)
        }
        Algebra::Wqsym => matrix_out(format!("W_{n}"), &cartan_wqsym(n, false)?),
        Algebra::WqsymSharp => matrix_out(format!("W#_{n}"), &cartan_wqsym(n, true)?),
    })
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Rows of numbers, each with a leading label.
fn rows_out(header: &str, rows: &[(String, Vec<u64>)], json: Value) -> Out {
    let lw = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let mut text = format!("{header}\n");
    let mut csv = String::new();
    for (l, r) in rows {
        let _ = writeln!(text, "{l:<lw$}  {}", join(r, " "));
        let _ = writeln!(csv, "{l},{}", join(r, ","));
    }
    Out { text, json, csv }
}

fn cmd_dims(ctx: &Ctx, table: &Table) -> Result<Out> {
    Ok(match *table {
        Table::Dnk { max_n } => {
            let ks = [Some(0), Some(1), Some(2), Some(3), None];
            let rows: Vec<(String, Vec<u64>)> = ks
                .iter()
                .map(|&k| {
                    let label = k.map_or("inf".to_string(), |k| k.to_string());
                    (label, (0..=max_n).map(|n| dnk_dim(n, k)).collect())
                })
                .collect();
            let json = json!({
                "n": (0..=max_n).collect::<Vec<_>>(),
                "rows": rows.iter().map(|(k, r)| json!({"k": k, "dims": r})).collect::<Vec<_>>(),
            });
            rows_out(&format!("dim D^(k)_n, n = 0..{max_n}"), &rows, json)
        }
        Table::Triangle { rows } => {
            let tri = triangle_rows(&q_dimension_polynomials(rows));
            let labelled: Vec<(String, Vec<u64>)> = tri
                .iter()
                .enumerate()
                .map(|(i, r)| ((i + 1).to_string(), r.iter().map(|&c| c as u64).collect()))
                .collect();
            let json = json!({"rows": tri});
            rows_out("coefficients of q^0, q^1, ... in the q-dimension of D^(inf)_n", &labelled, json)
        }
        Table::Mnk { max_n } => {
            let rows: Vec<(String, Vec<u64>)> =
                (1..=max_n).map(|n| (n.to_string(), (0..=n).map(|k| m_count(n, k)).collect())).collect();
            let json = json!({"rows": rows.iter().map(|(_, r)| r.clone()).collect::<Vec<_>>()});
            rows_out("m_{n,k}, k = 0..n", &rows, json)
        }
        Table::Fine { max_n } => {
            let f = fine_numbers(max_n);
            rows_out("Fine numbers", &[("F".into(), f.clone())], json!({"fine": f}))
        }
        Table::SharpWqsym { max_n } => {
            ctx.guard("dims sharp-wqsym", max_n)?;
            let mut dims = Vec::new();
            for n in 0..=max_n {
                let d = non_unitary_words(n).len() as u64;
                if n <= SHARP_RANK_CHECK_MAX_N {
                    let r = sharp_ranks(n)?;
                    if r.basis_rank as u64 != d || r.image_rank as u64 != d {
                        return Err(Error::Consistency(format!("rank of the sharp image differs from {d} at n = {n}")));
                    }
                }
                dims.push(d);
            }
            rows_out("dim W#_n", &[("dim".into(), dims.clone())], json!({"dims": dims}))
        }
    })
}

fn minimal_polynomial(spectrum: &[usize]) -> String {
    spectrum.iter().map(|&s| if s == 0 { "x".to_string() } else { format!("(x-{s})") }).collect()
}

fn cmd_tsetlin(ctx: &Ctx, n: usize, eigenbasis: bool) -> Result<Out> {
    ctx.guard("tsetlin", n)?;
    let t = tsetlin_spectral(n)?;
    let poly = minimal_polynomial(&t.spectrum);
    let dims: Vec<u64> = t.spectrum.iter().map(|s| t.dims[s]).collect();
    let mut text =
        format!("spectrum: {}\ndims: {}\nminimal polynomial: {poly}\n", join(&t.spectrum, ","), join(&dims, ","));
    let mut csv = String::from("eigenvalue,dim\n");
    for (s, d) in t.spectrum.iter().zip(&dims) {
        let _ = writeln!(csv, "{s},{d}");
    }
    let mut json = json!({"n": n, "spectrum": t.spectrum, "dims": dims, "minimal_polynomial": poly});
    if eigenbasis {
        let mut bases = serde_json::Map::new();
        for &s in &t.spectrum {
            let b = lie_eigenbasis(n, s)?;
            let _ = writeln!(text, "eigenvalue {s}:");
            for x in &b {
                let _ = writeln!(text, "  {x:?}");
            }
            bases.insert(s.to_string(), Value::Array(b.iter().map(|x| x.to_json()).collect()));
        }
        json["eigenbasis"] = Value::Object(bases);
    }
    Ok(Out { text, json, csv })
}

fn cmd_conjecture(ctx: &Ctx, name: &Conjecture) -> Result<Out> {
    Ok(match *name {
        Conjecture::SharpTriangular { n } => {
            ctx.guard("conjecture sharp-triangular", n)?;
            let r = s_sigma_sharp_matrix(n)?;
            let text = format!(
                "{} (n={n})\nconvention: {}\nliteral reading: {} (n={n})\n",
                r.verdict(),
                r.convention.as_deref().unwrap_or("none"),
                r.literal_verdict()
            );
            let csv = format!("n,verdict,literal_verdict\n{n},{},{}\n", r.verdict(), r.literal_verdict());
            Out { text, json: r.to_json(), csv }
        }
        Conjecture::PbtFine { max_n } => {
            ctx.guard("conjecture pbt-fine", max_n)?;
            let r = pbt_sharp_dims(max_n)?;
            let mut text =
                format!("{} (n<={max_n})\nconvention: {}\n", r.verdict(), r.convention.as_deref().unwrap_or("none"));
            let mut csv = String::from("n,trees,rank,fine,full_coordinates\n");
            for d in &r.degrees {
                let status = match (d.sharp_rank as u64 == d.fine, d.full_coordinates) {
                    (true, _) => "holds",
                    (false, true) => "fails",
                    (false, false) => "unresolved",
                };
                let _ = writeln!(
                    text,
                    "n={}: rank {} fine {} {status}{}",
                    d.n,
                    d.sharp_rank,
                    d.fine,
                    if d.full_coordinates { "" } else { " (sampled coordinates, lower bound)" }
                );
                let _ = writeln!(csv, "{},{},{},{},{}", d.n, d.trees, d.sharp_rank, d.fine, d.full_coordinates);
            }
            Out { text, json: r.to_json(), csv }
        }
    })
}

fn cmd_element(ctx: &Ctx, expr: &str, basis: Basis) -> Result<Out> {
    let x = parse_element(expr)?;
    ctx.guard("element", x.degree())?;
    let x: NsfElement = x.to_basis(match basis {
        Basis::S => NsfBasis::S,
        Basis::R => NsfBasis::R,
    });
    let tag = x.basis().tag();
    let mut csv = String::from("term,coefficient\n");
    for (i, c) in x.terms().iter() {
        let _ = writeln!(csv, "\"{tag}[{}]\",{c}", join(i.parts(), ","));
    }
    Ok(Out { text: format!("{x}\n"), json: x.to_json(), csv })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Invalid(_) => 2,
        Error::CostGuard { .. } => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { max_degree: cli.max_degree, force: cli.force };
    let out = match &cli.cmd {
        Cmd::Cartan { algebra, n, k } => cmd_cartan(&ctx, *algebra, *n, k.as_deref()),
        Cmd::Dims { table } => cmd_dims(&ctx, table),
        Cmd::Tsetlin { n, eigenbasis } => cmd_tsetlin(&ctx, *n, *eigenbasis),
        Cmd::Conjecture { name } => cmd_conjecture(&ctx, name),
        Cmd::Element { expr, basis } => cmd_element(&ctx, expr, *basis),
    };
    let out = match out {
        Ok(o) => o,
        Err(e) => {
            eprintln!("hopf: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let rendered = match cli.format {
        Format::Text => out.text,
        Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable") + "\n",
        Format::Csv => out.csv,
    };
    match &cli.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, rendered) {
                eprintln!("hopf: cannot write {}: {e}", p.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::SUCCESS
}
