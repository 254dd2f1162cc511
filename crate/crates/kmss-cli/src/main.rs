use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use kmss::cartan::Series;
use kmss::catalog::{self, Classification, TableFormat};
use kmss::crosscheck::crosscheck;
use kmss::involutions::{worked_case, worked_case_names};
use kmss::io::{parse_diagram, vogan_to_json};
use kmss::render::{render_diagram, RenderFormat};
use kmss::vogan::{fixed_algebra_roots, reduce_with_class, VoganDiagram, DEFAULT_NODE_LIMIT};

const EXIT_VALIDATION: u8 = 2;
const EXIT_UNCLASSIFIED: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

/// Real forms of untwisted affine Kac-Moody algebras of classical type.
#[derive(Parser)]
#[command(name = "kmss", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every cataloged real form on an affine diagram.
    ListForms {
        series: Series,
        rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Reduce a Vogan diagram to its canonical representative.
    Reduce {
        file: PathBuf,
        /// Largest diagram (node count) the class enumeration accepts.
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: usize,
    },
    /// Name the real form of a Vogan diagram.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Simple roots of the fixed algebra of a Vogan diagram.
    FixedRoots {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run a worked involution and cross-check it against the catalog.
    Verify {
        series: Series,
        rank: usize,
        #[arg(long)]
        case: String,
        /// Degree window N; the checks run on the core [−N+s, N−s].
        #[arg(long, env = "KMSS_WINDOW", default_value_t = 3)]
        window: i32,
    },
    /// Regenerate a classification table at a value of its parameter.
    Table {
        /// A, B, C, D, a table numeral I..VII, or A-odd, A-even, C-odd, C-even.
        selector: String,
        #[arg(long = "param", short = 'n')]
        n: i64,
        #[arg(long, default_value = "md")]
        format: TableFormat,
    },
    /// Draw a Vogan diagram.
    Render {
        file: PathBuf,
        #[arg(long, default_value = "ascii")]
        format: RenderFormat,
    },
}

enum Outcome {
    Success,
    Unclassified,
    Disagreement,
}

fn read_vogan(path: &Path) -> anyhow::Result<VoganDiagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_diagram(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_classification(out: &mut impl Write, c: &Classification) -> std::io::Result<()> {
    let r = &c.reduced;
    writeln!(out, "reduced: automorphism {}, painted {:?}", r.automorphism.name, r.painted_vec())?;
    if c.matches.is_empty() {
        writeln!(out, "unclassified")?;
        return Ok(());
    }
    for (k, m) in c.matches.iter().enumerate() {
        let tag = if k == 0 { "match" } else { "also" };
        let params = [("n", m.params.n), ("p", m.params.p), ("q", m.params.q)]
            .iter()
            .filter_map(|(s, v)| v.map(|v| format!("{s}={v}")))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "{tag}: {} [table {}, row {}{}{}]", m.name, m.table, m.row, if params.is_empty() { "" } else { ", " }, params)?;
        writeln!(out, "  fixed algebra: {}", m.fixed_algebra)?;
        if let Some(c) = &m.constraint {
            writeln!(out, "  constraint: {c}")?;
        }
        if let (Some(a), Some(b)) = (&m.compact_space, &m.noncompact_space) {
            writeln!(out, "  spaces: {a} and {b}")?;
        }
        if !m.in_range {
            writeln!(out, "  note: outside the table's rank condition")?;
        }
        if let Some(d) = &m.disputed {
            writeln!(out, "  disputed: {d}")?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::ListForms { series, rank, json } => {
            series.check_rank(rank)?;
            let forms = catalog::list_forms(series, rank);
            if json {
                let docs: Vec<serde_json::Value> = forms
                    .iter()
                    .map(|(m, vd)| {
                        serde_json::json!({
                            "form": m,
                            "vogan": serde_json::from_str::<serde_json::Value>(&vogan_to_json(vd)).expect("valid JSON"),
                        })
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&docs)?)?;
            } else {
                for (m, vd) in &forms {
                    let p = m.params.p.map(|p| format!(" p={p}")).unwrap_or_default();
                    let mark = if m.in_range { "" } else { "  (outside rank condition)" };
                    writeln!(
                        out,
                        "{:<28} {:<6} {:<10} painted {:<10} fixed {}{}{}",
                        m.name,
                        m.table.to_string(),
                        vd.automorphism.name,
                        format!("{:?}", vd.painted_vec()),
                        m.fixed_algebra,
                        p,
                        mark
                    )?;
                }
            }
        }
        Command::Reduce { file, node_limit } => {
            let vd = read_vogan(&file)?;
            let r = reduce_with_class(&vd, node_limit)?;
            eprintln!("class size {}", r.class_size);
            writeln!(out, "{}", vogan_to_json(&r.representative))?;
        }
        Command::Classify { file, json } => {
            let vd = read_vogan(&file)?;
            let c = catalog::classify(&vd)?;
            if json {
                let doc = serde_json::json!({
                    "schema": kmss::SCHEMA,
                    "reduced": serde_json::from_str::<serde_json::Value>(&vogan_to_json(&c.reduced))?,
                    "classified": c.is_classified(),
                    "matches": c.matches,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                print_classification(&mut out, &c)?;
            }
            if !c.is_classified() {
                return Ok(Outcome::Unclassified);
            }
        }
        Command::FixedRoots { file, json } => {
            let vd = read_vogan(&file)?;
            let f = fixed_algebra_roots(&vd);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&f)?)?;
            } else {
                if let Some(l) = &f.label {
                    writeln!(out, "fixed algebra: {l}")?;
                }
                writeln!(out, "simple roots (coordinates in e₁, e₂, …):")?;
                for r in &f.simple_roots {
                    let coords: Vec<String> = r.iter().map(kmss::scalars::fmt_q).collect();
                    writeln!(out, "  ({})", coords.join(", "))?;
                }
                if let Some(c) = &f.catalog_roots {
                    writeln!(out, "catalog description:")?;
                    for line in c {
                        writeln!(out, "  {line}")?;
                    }
                }
            }
        }
        Command::Verify { series, rank, case, window } => {
            let wc = worked_case(series, rank, &case).map_err(|e| {
                let names = worked_case_names(series, rank);
                anyhow!("{e}; available cases: {}", if names.is_empty() { "none".to_string() } else { names.join(", ") })
            })?;
            let core = window - wc.spec.degree_shift();
            if core < 0 {
                return Err(anyhow!("window {window} is smaller than the degree shift {}", wc.spec.degree_shift()));
            }
            let report = crosscheck(series, rank, &case, core)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            if !report.agree {
                return Ok(Outcome::Disagreement);
            }
        }
        Command::Table { selector, n, format } => {
            let tables = catalog::select_tables(&selector, n)?;
            write!(out, "{}", catalog::emit_table(&tables, n, format)?)?;
        }
        Command::Render { file, format } => {
            let vd = read_vogan(&file)?;
            write!(out, "{}", render_diagram(&vd, format))?;
        }
    }
    Ok(Outcome::Success)
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Unclassified) => ExitCode::from(EXIT_UNCLASSIFIED),
        Ok(Outcome::Disagreement) => ExitCode::from(EXIT_DISAGREEMENT),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}
