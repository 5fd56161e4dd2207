//! `closebound` CLI: exact metrics and bound tables for single graphs, the
//! corpus ledger, and the asymptotic sandwich tables.
//!
//! Exit codes: 0 success, 1 asserted violation or oracle mismatch, 2 input
//! error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use closebound::asymptotics::{SandwichFamily, SandwichRow};
use closebound::bounds::{detect_class_tags, BoundId, BoundRecord, BoundValue};
use closebound::generators::{make_family, FamilySpec};
use closebound::graph::{distance_matrix, parse_edge_list, structural_summary, Graph};
use closebound::harness::{run_ledger, CorpusSpec};
use closebound::independence::independence_number_with_limit;
use closebound::metrics::{betweenness_profile, closeness_profile};
use closebound::rational::{fraction_string, to_f64};
use closebound::spectral::laplacian_spectrum;
use closebound::{Error, Result};

/// Single-graph commands compute eigenvalues up to this size.
const SINGLE_GRAPH_SPECTRAL_LIMIT: usize = 512;
/// Single-graph commands compute the independence number up to this size.
const SINGLE_GRAPH_ALPHA_LIMIT: usize = 64;

#[derive(Parser)]
#[command(
    name = "closebound",
    version,
    about = "Exact graph closeness metrics and closeness-bound verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, degree extremes, radius, diameter, and the exact metric
    /// scalars of one graph
    Metrics {
        /// Edge-list file, or `family:SPEC` (e.g. `family:cycle:5`)
        input: String,
    },
    /// Print the bound table for one graph
    Bounds {
        /// Edge-list file, or `family:SPEC`
        input: String,
        /// Restrict output to these bound ids (comma-separated)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Run the full corpus ledger and write report.json + bounds.csv
    Verify {
        /// Corpus spec JSON file (defaults to the built-in corpus)
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Output directory for report.json and bounds.csv
        #[arg(long, default_value = "ledger-out")]
        out: PathBuf,
        /// Worker threads (defaults to all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the asymptotic sandwich table for paths or ladders
    Asymptotics {
        /// `path` or `ladder`
        #[arg(long)]
        family: String,
        /// Sizes to evaluate (comma-separated, each >= 2)
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u64>,
        /// Also write the table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Emit a generated family graph
    Family {
        /// Family spec, e.g. `hypercube:3` or `bipartite:3,4`
        spec: String,
        /// Output format (only `edgelist`)
        #[arg(long, default_value = "edgelist")]
        emit: String,
    },
}

enum Outcome {
    Clean,
    Violations,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Metrics { input } => cmd_metrics(&input),
        Command::Bounds { input, only } => cmd_bounds(&input, &only),
        Command::Verify { corpus, out, jobs } => cmd_verify(corpus.as_deref(), &out, jobs),
        Command::Asymptotics { family, sizes, csv } => {
            cmd_asymptotics(&family, &sizes, csv.as_deref())
        }
        Command::Family { spec, emit } => cmd_family(&spec, &emit),
    }
}

fn load_graph(input: &str) -> Result<Graph> {
    if let Some(spec) = input.strip_prefix("family:") {
        let spec: FamilySpec = spec.parse()?;
        make_family(&spec)
    } else {
        let text =
            std::fs::read_to_string(input).map_err(|e| Error::io(input.to_string(), e))?;
        parse_edge_list(&text)
    }
}

fn cmd_metrics(input: &str) -> Result<Outcome> {
    let g = load_graph(input)?;
    let dm = distance_matrix(&g);
    let summary = structural_summary(&g, &dm)?;
    let closeness = closeness_profile(&g, &dm)?;
    let betweenness = betweenness_profile(&g, &dm)?;

    println!("graph:                {input}");
    println!("n:                    {}", g.vertex_count());
    println!("m:                    {}", g.edge_count());
    println!("degree min:           {}", summary.degree_min);
    println!("degree max:           {}", summary.degree_max);
    println!("radius:               {}", summary.radius);
    println!("diameter:             {}", summary.diameter);
    let scalar = |r| format!("{} ({})", fraction_string(r), to_f64(r));
    println!("mean distance:        {}", scalar(&closeness.mean_distance));
    println!("closeness:            {}", scalar(&closeness.graph_closeness));
    println!(
        "betweenness:          {}",
        scalar(&betweenness.graph_betweenness)
    );
    println!(
        "transmission-regular: {}",
        if closeness.transmission_regular { "yes" } else { "no" }
    );
    Ok(Outcome::Clean)
}

fn bound_records(g: &Graph) -> Result<Vec<BoundRecord>> {
    use closebound::bounds::{
        corollary_lower_bounds, duality_record, family_class_bounds, upper_bounds,
    };
    let dm = distance_matrix(g);
    let summary = structural_summary(g, &dm)?;
    let profile = closeness_profile(g, &dm)?;
    let n = g.vertex_count();
    let spectral = (n <= SINGLE_GRAPH_SPECTRAL_LIMIT).then(|| laplacian_spectrum(g));
    let alpha = if n <= SINGLE_GRAPH_ALPHA_LIMIT {
        Some(independence_number_with_limit(g, SINGLE_GRAPH_ALPHA_LIMIT)?.alpha)
    } else {
        None
    };
    let tags = detect_class_tags(g);
    let mut records = vec![duality_record(&profile)];
    records.extend(corollary_lower_bounds(
        g,
        &summary,
        &profile,
        spectral.as_ref(),
        alpha,
    ));
    records.extend(upper_bounds(g, &summary, &profile));
    records.extend(family_class_bounds(g, &summary, &profile, &tags)?);
    records.sort_by_key(|r| r.id.as_str());
    Ok(records)
}

fn format_value(v: &Option<BoundValue>) -> String {
    match v {
        Some(BoundValue::Exact(r)) => fraction_string(r),
        Some(BoundValue::Float(f)) => format!("{f:.9}"),
        None => "-".to_string(),
    }
}

fn cmd_bounds(input: &str, only: &[String]) -> Result<Outcome> {
    let g = load_graph(input)?;
    let filter: Vec<BoundId> = only
        .iter()
        .map(|s| s.parse::<BoundId>())
        .collect::<Result<_>>()?;
    let records = bound_records(&g)?;

    let dm = distance_matrix(&g);
    let closeness = closeness_profile(&g, &dm)?.graph_closeness;
    println!("graph: {input}");
    println!(
        "closeness: {} ({})",
        fraction_string(&closeness),
        to_f64(&closeness)
    );
    println!(
        "{:<22} {:<6} {:<9} {:<22} {:<6} MARGIN",
        "BOUND", "KIND", "STATUS", "VALUE", "HOLDS"
    );
    for r in &records {
        if !filter.is_empty() && !filter.contains(&r.id) {
            continue;
        }
        let holds = match r.holds {
            Some(h) => h.to_string(),
            None => "-".to_string(),
        };
        let mut line = format!(
            "{:<22} {:<6} {:<9} {:<22} {:<6} {}",
            r.id.to_string(),
            r.kind.as_str(),
            r.status.as_str(),
            format_value(&r.value),
            holds,
            format_value(&r.margin),
        );
        if let Some(reason) = &r.reason {
            line.push_str(&format!("  (inapplicable: {reason})"));
        }
        println!("{line}");
    }
    Ok(Outcome::Clean)
}

fn cmd_verify(corpus: Option<&std::path::Path>, out: &std::path::Path, jobs: Option<usize>) -> Result<Outcome> {
    let spec = match corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::io(path.display().to_string(), e))?;
            serde_json_from_str(&text)?
        }
        None => CorpusSpec::default(),
    };
    let report = run_ledger(&spec, Some(out), jobs)?;

    println!(
        "verified {} graphs ({} skipped)",
        report.summary.graph_count, report.summary.skipped_count
    );
    println!(
        "asserted records: {}/{} hold",
        report.summary.asserted_passed, report.summary.asserted_records
    );
    println!(
        "audit violations: {} (recorded, not failures)",
        report.summary.audit_violations.len()
    );
    println!(
        "documented discrepancies: {}",
        report.summary.documented_discrepancies.len()
    );
    println!(
        "asymptotics contained: {}",
        report.summary.asymptotics.all_contained
    );
    for f in &report.summary.asserted_failures {
        println!("ASSERTED FAILURE: {} {}", f.graph_id, f.bound_id);
    }
    for g in &report.summary.gago_nonzero {
        println!("GAGO RESIDUAL NONZERO: {g}");
    }
    for g in &report.summary.closed_form_mismatches {
        println!("CLOSED-FORM MISMATCH: {g}");
    }
    println!("report: {}", out.join("report.json").display());
    println!("csv:    {}", out.join("bounds.csv").display());

    if report.has_failures() {
        Ok(Outcome::Violations)
    } else {
        Ok(Outcome::Clean)
    }
}

// small helper so the CLI crate does not need serde_json itself
fn serde_json_from_str(text: &str) -> Result<CorpusSpec> {
    closebound::harness::corpus_spec_from_json(text)
}

fn cmd_asymptotics(
    family: &str,
    sizes: &[u64],
    csv: Option<&std::path::Path>,
) -> Result<Outcome> {
    let family: SandwichFamily = family.parse()?;
    let rows = closebound::harness::asymptotic_run(family, sizes)?;

    println!("family: {family}");
    println!(
        "{:>10} {:>14} {:>14} {:>14} {:>12} {:>9}  exact-fraction",
        "n", "lower", "exact", "upper", "pi-gap", "contained"
    );
    let mut all_contained = true;
    for row in &rows {
        let frac = row
            .exact_fraction
            .as_ref()
            .map(|r| abbreviate(&fraction_string(r), 48))
            .unwrap_or_else(|| "-".to_string());
        let contained = row.contained();
        all_contained &= contained;
        println!(
            "{:>10} {:>14.10} {:>14.10} {:>14.10} {:>12.3e} {:>9}  {}",
            row.n,
            row.lower,
            row.exact_as_f64(),
            row.upper,
            row.pi_gap,
            if contained { "yes" } else { "NO" },
            frac
        );
    }
    if let Some(path) = csv {
        std::fs::write(path, asymptotics_csv(family, &rows)?)
            .map_err(|e| Error::io(path.display().to_string(), e))?;
        println!("csv: {}", path.display());
    }
    if all_contained {
        Ok(Outcome::Clean)
    } else {
        println!("containment violated");
        Ok(Outcome::Violations)
    }
}

/// Long exact fractions are kept intact in the CSV; the table shows a prefix.
fn abbreviate(s: &str, max: usize) -> String {
    if s.len() <= max {
        s.to_string()
    } else {
        format!("{}... ({} chars)", &s[..max], s.len())
    }
}

fn asymptotics_csv(family: SandwichFamily, rows: &[SandwichRow]) -> Result<String> {
    let mut out = String::from("family,n,lower,exact,exact_fraction,upper,pi_gap,contained\n");
    for row in rows {
        let frac = row
            .exact_fraction
            .as_ref()
            .map(fraction_string)
            .unwrap_or_default();
        out.push_str(&format!(
            "{family},{},{},{},{frac},{},{},{}\n",
            row.n,
            row.lower,
            row.exact_as_f64(),
            row.upper,
            row.pi_gap,
            row.contained()
        ));
    }
    Ok(out)
}

fn cmd_family(spec: &str, emit: &str) -> Result<Outcome> {
    if emit != "edgelist" {
        return Err(Error::input(format!(
            "unknown emit format `{emit}` (only `edgelist` is supported)"
        )));
    }
    let spec: FamilySpec = spec.parse()?;
    let g = make_family(&spec)?;
    print!("{}", closebound::graph::format_edge_list(&g));
    Ok(Outcome::Clean)
}
