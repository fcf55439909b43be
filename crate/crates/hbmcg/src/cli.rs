//! Command line front end.
//!
//! Four subcommands: `presentation` builds and prints the group
//! presentation, `verify` checks it inside the homology representation,
//! `homology` computes one twisted (co)homology group, and `report` prints
//! the full table of computed values next to their reference values.
//!
//! Exit codes: 0 on success (and all values matching, where applicable),
//! 1 when a verification or reference comparison fails, 2 on usage errors.

use crate::action::{verify_presentation, ModuleSpec, Representation};
use crate::error::Error;
use crate::homology::{h0, HomologyResult, PresentationComplex, Theory};
use crate::linalg::Ring;
use crate::report::{format_table, run_report, RowStatus};
use crate::wajnryb::Presentation;
use crate::word::Gen;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "hbmcg", version, about = "Handlebody group presentations and twisted homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build the presentation for a genus and print it.
    Presentation(PresentationArgs),
    /// Evaluate every relation in the chosen module and report failures.
    Verify(VerifyArgs),
    /// Compute one twisted (co)homology group.
    Homology(HomologyArgs),
    /// Compute the full value table and compare against the references.
    Report(ReportArgs),
}

#[derive(Args)]
struct PresentationArgs {
    /// Genus of the handlebody (at least 2).
    #[arg(short, long)]
    genus: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(short, long)]
    genus: u32,
    /// Module to evaluate in: H, L or HmodL.
    #[arg(long, default_value = "H")]
    module: String,
    /// Negative control: corrupt this generator's matrix first. The run
    /// must then fail, exiting 1 with labeled failures.
    #[arg(long)]
    corrupt_generator: Option<String>,
}

#[derive(Args)]
struct HomologyArgs {
    #[arg(short, long)]
    genus: u32,
    /// H, L, HmodL, trivial, LxLdual, LxH, dual(...), tensor(...).
    #[arg(long, default_value = "H")]
    module: String,
    /// Z or Z/n.
    #[arg(long, default_value = "Z")]
    ring: String,
    #[arg(long, default_value = "homology")]
    theory: String,
    /// 0 for (co)invariants, 1 for the degree one group.
    #[arg(long, default_value = "1")]
    degree: u8,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Largest genus to include.
    #[arg(long, default_value = "4")]
    max_genus: u32,
    /// Permit genus five and up (slower; prints a warning).
    #[arg(long)]
    allow_slow: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parse arguments and dispatch; returns the process exit code.
pub fn run() -> i32 {
    init_threads();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Presentation(args) => cmd_presentation(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Homology(args) => cmd_homology(args),
        Command::Report(args) => cmd_report(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Honor HBMCG_THREADS before any parallel work starts.
fn init_threads() {
    if let Ok(value) = std::env::var("HBMCG_THREADS") {
        if let Ok(n) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
}

/// Print a line to stdout, ignoring a closed pipe (e.g. piping into head).
fn say(line: std::fmt::Arguments<'_>) {
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn emit(out: &Option<PathBuf>, payload: &str) -> crate::error::Result<()> {
    match out {
        None => {
            say(format_args!("{payload}"));
            Ok(())
        }
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{payload}")?;
            Ok(())
        }
    }
}

fn cmd_presentation(args: PresentationArgs) -> crate::error::Result<i32> {
    let p = Presentation::wajnryb(args.genus)?;
    let payload = match args.format {
        Format::Json => serde_json::to_string_pretty(&p.to_json()).expect("serializable"),
        Format::Text => {
            let mut lines = Vec::new();
            lines.push(format!(
                "genus {}: {} generators, {} relations",
                p.genus,
                p.gens.len(),
                p.relations.len()
            ));
            let gens: Vec<String> = p.gens.iter().map(|g| g.to_string()).collect();
            lines.push(format!("generators: {}", gens.join(" ")));
            let mut families: BTreeMap<String, usize> = BTreeMap::new();
            for rel in &p.relations {
                let family = rel.label.split('[').next().unwrap_or(&rel.label).to_string();
                *families.entry(family).or_insert(0) += 1;
            }
            for (family, count) in families {
                lines.push(format!("{family}: {count}"));
            }
            lines.join("\n")
        }
    };
    emit(&args.out, &payload)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> crate::error::Result<i32> {
    let p = Presentation::wajnryb(args.genus)?;
    let spec: ModuleSpec = args.module.parse()?;
    let mut rho = Representation::for_module(args.genus, &spec)?;
    if let Some(name) = &args.corrupt_generator {
        let g: Gen = name.parse()?;
        rho.corrupt(g)?;
        eprintln!("note: generator {g} deliberately corrupted");
    }
    let report = verify_presentation(&p, &rho);
    say(format_args!(
        "genus {} module {}: {} relations checked, {} closed form cross checks, {} failures",
        report.genus,
        report.module,
        report.relations_checked,
        report.cross_checks,
        report.failures.len()
    ));
    for f in &report.failures {
        say(format_args!("  FAIL {f}"));
    }
    Ok(if report.ok() { 0 } else { 1 })
}

fn cmd_homology(args: HomologyArgs) -> crate::error::Result<i32> {
    let spec: ModuleSpec = args.module.parse()?;
    let ring: Ring = args.ring.parse()?;
    let theory: Theory = args.theory.parse()?;
    if args.degree > 1 {
        return Err(Error::Usage("degree must be 0 or 1".to_string()));
    }
    let rho = Representation::for_module(args.genus, &spec)?;
    let group = if args.degree == 0 {
        h0(&rho, theory, &ring)?
    } else {
        let p = Presentation::wajnryb(args.genus)?;
        PresentationComplex::new(&p, &rho).h1(theory, &ring)?
    };
    let result = HomologyResult::new(args.genus, &spec.to_string(), &ring, theory, args.degree, &group);
    let payload = match args.format {
        Format::Json => serde_json::to_string(&result).expect("serializable"),
        Format::Text => format!(
            "genus {} module {} ring {} {} degree {}: {}",
            args.genus, spec, ring, theory, args.degree, group
        ),
    };
    emit(&args.out, &payload)?;
    Ok(0)
}

fn cmd_report(args: ReportArgs) -> crate::error::Result<i32> {
    if args.max_genus < 2 {
        return Err(Error::Usage("max-genus must be at least 2".to_string()));
    }
    if args.max_genus >= 5 && !args.allow_slow {
        return Err(Error::Usage(
            "genus 5 and up is slow; pass --allow-slow to confirm".to_string(),
        ));
    }
    if args.max_genus >= 5 {
        eprintln!(
            "warning: genus {} builds {} relation instances; this may take a while",
            args.max_genus,
            Presentation::wajnryb(args.max_genus)?.relations.len()
        );
    }
    let rows = run_report(args.max_genus)?;
    let payload = match args.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializable"),
        Format::Text => format_table(&rows),
    };
    emit(&args.out, &payload)?;
    let mismatches = rows.iter().filter(|r| r.status == RowStatus::Mismatch).count();
    if mismatches > 0 {
        eprintln!("{mismatches} row(s) disagree with the reference table");
        return Ok(1);
    }
    Ok(0)
}
