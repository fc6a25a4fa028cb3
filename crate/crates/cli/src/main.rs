use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use pnil::construct::{by_name, GroupSpec};
use pnil::hypothesis::{check_hypothesis, check_hypothesis_catalog, large_group_catalog, verify_lemma_2_3};
use pnil::report::{Check, Document, SeriesReport, SieveReport};
use pnil::suite::{self, Status, SuiteOptions, Summary};
use pnil::{arith, limits, structure, Error, PermGroup};

#[derive(Parser)]
#[command(name = "pnil", version, about = "p-nilpotent and prime-index maximal subgroups of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every maximal subgroup is p-nilpotent or of prime index.
    Analyze {
        /// Built-in name such as "PSL(2,11)", or a path to a group file.
        group: String,
        #[arg(long)]
        p: u64,
        /// Write the TOML report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Include elapsed time in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Print the upper p'p-series and the p-length.
    Series {
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List (n, d) with PSL(n, 2^d) passing the arithmetic test for p.
    Sieve {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 7)]
        n_max: u64,
        #[arg(long, default_value_t = 11)]
        d_max: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check the Sylow normalizers of PSL(2,q).
    Lemma23 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the reproduction suite.
    VerifyPaper {
        /// Directory for per-item reports and summary.toml.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run only items with this topic or id prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Replace the expectation of this item with a wrong one (harness self-test).
        #[arg(long, value_name = "ITEM")]
        corrupt: Vec<String>,
        #[arg(long)]
        timings: bool,
    },
    /// Check the hypothesis for a group from the maximal-subgroup catalog.
    CatalogCheck {
        /// Catalog name, e.g. "PSL(5,2)"; omit to list entries.
        name: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn load_group(source: &str) -> pnil::Result<PermGroup> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
        return GroupSpec::parse(&text)?.build();
    }
    by_name(source)
}

fn write_report(path: Option<&Path>, checks: Vec<Check>) -> pnil::Result<()> {
    if let Some(path) = path {
        fs::write(path, Document::new(checks).to_toml())
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn exit_for(pass: bool) -> ExitCode {
    ExitCode::from(if pass { 0 } else { 1 })
}

fn run(cli: Cli) -> pnil::Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            group,
            p,
            report,
            timings,
        } => {
            let g = load_group(&group)?;
            let start = Instant::now();
            let mut r = check_hypothesis(&g, p)?;
            if timings {
                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            println!("group {group} (order {}), p = {p}: {}", r.order, r.verdict);
            for (i, row) in r.rows.iter().enumerate() {
                println!(
                    "  index {:>6}  order {:>6}  x{:<4} prime-index={:<5} {p}-nilpotent={:<5} {}{}",
                    row.index,
                    row.order,
                    row.multiplicity,
                    row.prime_index,
                    row.p_nilpotent,
                    row.identified.as_deref().unwrap_or("-"),
                    if r.witnesses.contains(&i) { "  <- witness" } else { "" }
                );
            }
            if let Some(note) = &r.note {
                println!("  note: {note}");
            }
            let pass = r.passes();
            write_report(report.as_deref(), vec![Check::Hypothesis(r.with_group_name(&group))])?;
            Ok(exit_for(pass))
        }
        Command::Series { group, p, report } => {
            let g = load_group(&group)?;
            let s = structure::upper_p_series(&g, p)?;
            let r = SeriesReport::new(&group, &s);
            let orders: Vec<String> = r.orders.iter().map(u64::to_string).collect();
            println!("group {group}, p = {p}");
            println!("  orders: {}", orders.join(", "));
            println!("  steps: {}", r.steps.join(", "));
            println!("  p-length: {}", r.p_length);
            println!("  reaches G: {}", r.reaches_group);
            write_report(report.as_deref(), vec![Check::Series(r)])?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sieve {
            p,
            n_max,
            d_max,
            report,
        } => {
            let triples = arith::theorem_c_candidates(p, n_max, d_max)?;
            let r = SieveReport::new(p, n_max, d_max, &triples);
            for t in &r.triples {
                println!("n={} d={} points={} {}", t.n, t.d, t.point_count, t.primality);
            }
            if r.triples.is_empty() {
                println!("no candidates");
            }
            write_report(report.as_deref(), vec![Check::Sieve(r)])?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lemma23 { q, report } => {
            let r = verify_lemma_2_3(q)?;
            println!("PSL(2,{q}), d = {}: {}", r.d, r.verdict);
            for row in &r.rows {
                println!(
                    "  r={:<3} case {:<4} |R|={:<4} |N|={:<5} expected {:<5} shape={}",
                    row.r,
                    serde_case(row.case),
                    row.sylow_order,
                    row.normalizer_order,
                    row.expected_normalizer_order,
                    row.shape_holds
                );
            }
            let pass = r.verdict.is_pass();
            write_report(report.as_deref(), vec![Check::Lemma23(r)])?;
            Ok(exit_for(pass))
        }
        Command::VerifyPaper {
            out,
            filter,
            corrupt,
            timings,
        } => {
            let results = suite::run(&SuiteOptions {
                filter,
                corrupt,
                timings,
            })?;
            if let Some(dir) = &out {
                fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
                for r in &results {
                    if let Some(doc) = &r.document {
                        let path = dir.join(format!("{}.toml", r.id));
                        fs::write(&path, doc.to_toml())
                            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    }
                }
            }
            for r in &results {
                let status = match r.status {
                    Status::Match => "MATCH",
                    Status::Mismatch => "MISMATCH",
                    Status::Recorded => "RECORDED",
                    Status::Error => "ERROR",
                };
                println!("{status:<9} {:<22} {}", r.id, r.observed.as_deref().or(r.error.as_deref()).unwrap_or(""));
                if r.status == Status::Mismatch {
                    println!("          expected: {}", r.expected.as_deref().unwrap_or(""));
                }
            }
            let summary = Summary::new(results);
            println!(
                "{} items: {} matched, {} recorded, {} failed{}",
                summary.items,
                summary.matched,
                summary.recorded,
                summary.failed.len(),
                if summary.failed.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", summary.failed.join(", "))
                }
            );
            if let Some(dir) = &out {
                let path = dir.join("summary.toml");
                fs::write(&path, summary.to_toml()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            }
            Ok(exit_for(summary.all_ok()))
        }
        Command::CatalogCheck { name, p, report } => {
            let catalog = large_group_catalog();
            let Some(name) = name else {
                for e in &catalog {
                    println!("{} (order {}, {} maximal descriptors)", e.name, e.order, e.maximals.len());
                }
                return Ok(ExitCode::SUCCESS);
            };
            let p = p.ok_or_else(|| Error::InvalidParameter("--p is required".into()))?;
            let entry = catalog
                .iter()
                .find(|e| e.name == name)
                .ok_or_else(|| Error::InvalidParameter(format!("{name:?} is not in the catalog")))?;
            let r = check_hypothesis_catalog(entry, p)?;
            println!("{} (order {}), p = {p}: {}", r.group, r.order, r.verdict);
            for row in &r.rows {
                println!(
                    "  {:<26} index {:<22} prime-index={:<5} {p}-nilpotent={:<5} ({:?})",
                    row.label.as_deref().unwrap_or("-"),
                    row.index,
                    row.prime_index,
                    row.p_nilpotent,
                    row.basis
                );
            }
            let pass = r.passes();
            write_report(report.as_deref(), vec![Check::Hypothesis(r)])?;
            Ok(exit_for(pass))
        }
    }
}

fn serde_case(c: pnil::hypothesis::Lemma23Case) -> &'static str {
    use pnil::hypothesis::Lemma23Case::*;
    match c {
        Defining => "1",
        Split => "2",
        NonSplit => "3",
        SelfNormalizing => "4.1",
        Alt4 => "4.2",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bad = limits::load_from_env();
    if !bad.is_empty() {
        eprintln!("error: cannot parse {}", bad.join(", "));
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::CutoffExceeded { .. }) {
                eprintln!("hint: groups beyond the cutoff can be checked with `pnil catalog-check`");
            }
            ExitCode::from(2)
        }
    }
}
