//! Command-line front end: spectrum enumeration, structural
//! classification, bound verification, conjecture scanning, family
//! construction, and an embedded self test.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input
//! parse error, 3 counterexample found.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use distpareto::bound::BoundCheck;
use distpareto::error::Error;
use distpareto::graph::{distance_matrix, is_cycle, is_star, make_family, Graph};
use distpareto::graph6::{emit_graph6, read_stream, Graph6Record};
use distpareto::pareto::{pareto_spectrum_with_budget, ParetoSpectrum};
use distpareto::report::{
    bound_record, csv_header, csv_row, fmt_value, mu5_record, mu6_record, spectrum_record,
    GraphContext,
};
use distpareto::scan::{scan_conjectures, ConjectureId, ScanOptions, ScanReport};
use distpareto::spectral::{all_eigenvalues, spectral_radius};
use distpareto::theorems::{
    check_cycle_gap, check_r1_lower_opt, check_r1_lower_unit, check_ratio_family,
    check_rownorm_gap, check_star_gap, check_transmission_bound, classify_mu5, classify_mu6,
    gamma_defining_matrix, gamma_root, star_spectrum_closed_form,
};

#[derive(Parser)]
#[command(
    name = "distpareto",
    version,
    about = "Distance Pareto spectra of connected graphs: enumeration, classification, \
             bound verification, and conjecture scanning over graph6 corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the distance Pareto spectrum of each input graph.
    Spectrum(SpectrumArgs),
    /// Classify the fifth and sixth smallest values from structure.
    Classify(ClassifyArgs),
    /// Run the inequality suite on each input graph.
    Verify(VerifyArgs),
    /// Scan a corpus for conjecture counterexamples.
    Scan(ScanArgs),
    /// Build a named family graph and print its graph6 line.
    Family(FamilyArgs),
    /// Run the embedded invariant suite (no input files needed).
    Selftest,
}

#[derive(Args)]
struct InputArgs {
    /// graph6 file (one graph per line); "-" or absent reads stdin.
    input: Option<PathBuf>,

    /// Build one family graph instead of reading input: NAME N [M].
    /// Families: K P C S W S+ K-e KB coalesce.
    #[arg(long, num_args = 2..=3, value_names = ["NAME", "N", "M"], conflicts_with = "input")]
    family: Option<Vec<String>>,

    /// Largest host order accepted for full subset enumeration.
    #[arg(long, default_value_t = distpareto::pareto::ENUMERATION_BUDGET)]
    max_n: usize,

    /// Emit the CSV projection (kind,name,n,graph6,value,slack,equality).
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Print only these values: comma-separated muK / rhoK tokens.
    #[arg(long, value_delimiter = ',')]
    k: Vec<String>,

    /// Skip the per-value witness subset lines.
    #[arg(long)]
    no_witnesses: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Also enumerate each spectrum and assert agreement.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Check names to run (default: all). Known suites: avg-row r1-t1
    /// r1-gn transmission diff-rownorm ratio-v ratk diff-v diff-global
    /// diff-cn diff-sn.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Conjectures to scan (1-5; default all).
    #[arg(long, value_delimiter = ',')]
    conjecture: Vec<u8>,

    /// Explicit k values for the top-sum conjectures.
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family id: K P C S W S+ K-e KB coalesce.
    name: String,
    n: usize,
    m: Option<usize>,
    /// Also print the invariant summary line.
    #[arg(long)]
    verbose: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Spectrum(args) => run_spectrum(args),
        Command::Classify(args) => run_classify(args),
        Command::Verify(args) => run_verify(args),
        Command::Scan(args) => run_scan(args),
        Command::Family(args) => run_family(args),
        Command::Selftest => run_selftest(),
    };
    match status {
        Ok(code) => code,
        Err(e) => {
            eprintln!("distpareto: {e}");
            ExitCode::from(2)
        }
    }
}

/// Reads the input graphs: a family construction, a graph6 file, or
/// standard input. Errors here are usage/parse errors (exit 2).
fn resolve_input(args: &InputArgs) -> Result<Vec<Graph6Record>, Error> {
    if let Some(spec) = &args.family {
        let name = spec[0].as_str();
        let n: usize = spec[1]
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("family size {:?}", spec[1])))?;
        let m: Option<usize> = match spec.get(2) {
            Some(raw) => Some(
                raw.parse()
                    .map_err(|_| Error::InvalidParameter(format!("family size {:?}", raw)))?,
            ),
            None => None,
        };
        let graph = make_family(name, n, m)?;
        let line = emit_graph6(&graph)?;
        return Ok(vec![Graph6Record {
            line,
            graph,
            ordinal: 1,
        }]);
    }
    match &args.input {
        Some(path) if path.as_os_str() != "-" => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
            })?;
            read_stream(text.as_bytes())
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::InvalidParameter(format!("cannot read stdin: {e}")))?;
            read_stream(text.as_bytes())
        }
    }
}

fn context(record: &Graph6Record) -> GraphContext {
    GraphContext {
        graph6: record.line.clone(),
        n: record.graph.n(),
        name: record.graph.name(),
    }
}

enum KRequest {
    Mu(usize),
    Rho(usize),
}

fn parse_k_tokens(tokens: &[String]) -> Result<Vec<(String, KRequest)>, Error> {
    tokens
        .iter()
        .map(|t| {
            let parsed = if let Some(rest) = t.strip_prefix("mu") {
                rest.parse().ok().map(KRequest::Mu)
            } else if let Some(rest) = t.strip_prefix("rho") {
                rest.parse().ok().map(KRequest::Rho)
            } else {
                None
            };
            parsed
                .map(|k| (t.clone(), k))
                .ok_or_else(|| Error::InvalidParameter(format!("bad k token {t:?} (use muK or rhoK)")))
        })
        .collect()
}

fn run_spectrum(args: SpectrumArgs) -> Result<ExitCode, Error> {
    let records = resolve_input(&args.input)?;
    let requests = parse_k_tokens(&args.k)?;
    let budget = args.input.max_n;

    let spectra: Vec<Result<ParetoSpectrum, Error>> = records
        .par_iter()
        .map(|r| pareto_spectrum_with_budget(&distance_matrix(&r.graph), budget))
        .collect();

    if args.input.csv {
        println!("{}", csv_header());
    }
    let mut failed = false;
    for (record, spec) in records.iter().zip(&spectra) {
        let ctx = context(record);
        match spec {
            Err(e) => {
                failed = true;
                println!("kind=error graph6={} n={} error=\"{e}\"", ctx.graph6, ctx.n);
            }
            Ok(spec) if requests.is_empty() => {
                if args.input.csv {
                    for v in spec.values() {
                        println!("{}", csv_row("spectrum", &ctx.name, ctx.n, &ctx.graph6, Some(*v), None, None));
                    }
                } else {
                    println!("{}", spectrum_record(&ctx, spec.values()));
                    if !args.no_witnesses {
                        for (v, w) in spec.values().iter().zip(spec.witnesses()) {
                            println!(
                                "kind=witness graph6={} value={} subset={w}",
                                ctx.graph6,
                                fmt_value(*v)
                            );
                        }
                    }
                }
            }
            Ok(spec) => {
                for (token, request) in &requests {
                    let value = match request {
                        KRequest::Mu(k) => spec.mu(*k),
                        KRequest::Rho(k) => spec.rho(*k),
                    };
                    match value {
                        Ok(v) => {
                            if args.input.csv {
                                println!("{}", csv_row("kvalue", token, ctx.n, &ctx.graph6, Some(v), None, None));
                            } else {
                                println!(
                                    "kind=kvalue graph6={} n={} k={token} value={}",
                                    ctx.graph6,
                                    ctx.n,
                                    fmt_value(v)
                                );
                            }
                        }
                        Err(e) => {
                            failed = true;
                            println!(
                                "kind=error graph6={} n={} k={token} error=\"{e}\"",
                                ctx.graph6, ctx.n
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run_classify(args: ClassifyArgs) -> Result<ExitCode, Error> {
    let records = resolve_input(&args.input)?;
    let budget = args.input.max_n;

    struct Row {
        mu5: Result<distpareto::theorems::Mu5Verdict, Error>,
        mu6: Result<distpareto::theorems::Mu6Verdict, Error>,
        enumerated: Option<Result<ParetoSpectrum, Error>>,
    }
    let rows: Vec<Row> = records
        .par_iter()
        .map(|r| Row {
            mu5: classify_mu5(&r.graph),
            mu6: classify_mu6(&r.graph),
            enumerated: args
                .cross_check
                .then(|| pareto_spectrum_with_budget(&distance_matrix(&r.graph), budget)),
        })
        .collect();

    if args.input.csv {
        println!("{}", csv_header());
    }
    let mut failed = false;
    for (record, row) in records.iter().zip(&rows) {
        let ctx = context(record);
        let spec = match &row.enumerated {
            Some(Ok(spec)) => Some(spec),
            Some(Err(e)) => {
                failed = true;
                println!("kind=error graph6={} n={} error=\"{e}\"", ctx.graph6, ctx.n);
                None
            }
            None => None,
        };
        let mut emit = |kind: &str, line: String, value: f64, k: usize| {
            if args.input.csv {
                println!("{}", csv_row(kind, &ctx.name, ctx.n, &ctx.graph6, Some(value), None, None));
                return;
            }
            let mut line = line;
            if let Some(spec) = spec {
                match spec.mu(k) {
                    Ok(enumerated) => {
                        let agree = (enumerated - value).abs() <= 1e-9;
                        if !agree {
                            failed = true;
                        }
                        line.push_str(&format!(
                            " enumerated={} agreement={agree}",
                            fmt_value(enumerated)
                        ));
                    }
                    Err(e) => {
                        failed = true;
                        line.push_str(&format!(" enumerated-error=\"{e}\""));
                    }
                }
            }
            println!("{line}");
        };
        match &row.mu5 {
            Ok(v) => emit("mu5", mu5_record(&ctx, v), v.value, 5),
            Err(e) => println!(
                "kind=skip graph6={} n={} which=mu5 note=\"{e}\"",
                ctx.graph6, ctx.n
            ),
        }
        match &row.mu6 {
            Ok(v) => emit("mu6", mu6_record(&ctx, v), v.value, 6),
            Err(e) => println!(
                "kind=skip graph6={} n={} which=mu6 note=\"{e}\"",
                ctx.graph6, ctx.n
            ),
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

/// The per-graph checks of the verify suite, filtered by name.
fn verify_checks(g: &Graph, suites: &[String]) -> Result<Vec<BoundCheck>, Error> {
    let all = suites.iter().any(|s| s == "all");
    let wanted = |name: &str| all || suites.iter().any(|s| s == name);
    let mut checks = Vec::new();
    if wanted("avg-row") {
        let d = distance_matrix(g);
        checks.push(distpareto::spectral::avg_row_sum_bound(
            &distpareto::matrix::SymMatrix::from_distance(&d),
        )?);
    }
    if wanted("r1-t1") {
        checks.push(check_r1_lower_unit(g)?);
    }
    if wanted("r1-gn") {
        checks.push(check_r1_lower_opt(g)?);
    }
    if wanted("transmission") {
        checks.push(check_transmission_bound(g)?);
    }
    if wanted("diff-rownorm") && g.n() >= 2 {
        checks.push(check_rownorm_gap(g)?);
    }
    if g.n() >= 3 && ["ratio-v", "ratk", "diff-v", "diff-global"].iter().any(|s| wanted(s)) {
        let family = check_ratio_family(g)?;
        for check in [
            family.ratio_at_min,
            family.ratio_global,
            family.gap_at_min,
            family.gap_global,
        ] {
            if wanted(check.name) {
                checks.push(check);
            }
        }
    }
    // Family-shaped inputs pick up their closed-form gap checks.
    if wanted("diff-cn") && is_cycle(g) {
        checks.push(check_cycle_gap(g.n())?);
    }
    if wanted("diff-sn") && is_star(g) && g.n() >= 3 {
        checks.push(check_star_gap(g.n())?);
    }
    Ok(checks)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let known = [
        "all", "avg-row", "r1-t1", "r1-gn", "transmission", "diff-rownorm", "ratio-v", "ratk",
        "diff-v", "diff-global", "diff-cn", "diff-sn",
    ];
    for s in &args.suite {
        if !known.contains(&s.as_str()) {
            return Err(Error::InvalidParameter(format!("unknown suite {s:?}")));
        }
    }
    let records = resolve_input(&args.input)?;
    let results: Vec<Result<Vec<BoundCheck>, Error>> = records
        .par_iter()
        .map(|r| verify_checks(&r.graph, &args.suite))
        .collect();

    if args.input.csv {
        println!("{}", csv_header());
    }
    let mut violations = 0usize;
    let mut failed = false;
    for (record, result) in records.iter().zip(&results) {
        let ctx = context(record);
        match result {
            Err(e) => {
                failed = true;
                println!("kind=error graph6={} n={} error=\"{e}\"", ctx.graph6, ctx.n);
            }
            Ok(checks) => {
                for check in checks {
                    if args.input.csv {
                        println!(
                            "{}",
                            csv_row(
                                "bound",
                                check.name,
                                ctx.n,
                                &ctx.graph6,
                                Some(check.lhs),
                                Some(check.slack),
                                Some(check.equality),
                            )
                        );
                    } else {
                        println!("{}", bound_record(&ctx, check));
                    }
                    if check.violated() {
                        violations += 1;
                    }
                }
            }
        }
    }
    if !args.input.csv {
        println!("kind=verify-summary violations={violations}");
    }
    Ok(if violations > 0 || failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn scan_lines(report: &ScanReport, csv: bool) -> Vec<String> {
    let conj = report.conjecture.number();
    let mut out = Vec::new();
    if csv {
        for c in &report.counterexamples {
            let order = c.graph6.as_bytes().first().map_or(0, |b| (b - 63) as usize);
            out.push(csv_row(
                "counterexample",
                &format!("conjecture-{conj}"),
                order,
                &c.graph6,
                c.values.first().map(|(_, v)| *v),
                None,
                None,
            ));
        }
        for w in &report.extremal {
            out.push(csv_row(
                "extremal",
                &format!("conjecture-{conj}/{}", w.role),
                w.order,
                &w.graph6,
                Some(w.value),
                None,
                None,
            ));
        }
        return out;
    }
    out.push(format!(
        "kind=scan conjecture={conj} scanned={} skipped={} counterexamples={} inconclusive={}",
        report.graphs_scanned,
        report.skipped,
        report.counterexamples.len(),
        report.inconclusive.len(),
    ));
    for note in &report.notes {
        out.push(format!("kind=scan-note conjecture={conj} note=\"{note}\""));
    }
    for (kind, findings) in [
        ("counterexample", &report.counterexamples),
        ("inconclusive", &report.inconclusive),
    ] {
        for f in findings {
            let mut line = format!(
                "kind={kind} conjecture={conj} graph6={} ordinal={} detail=\"{}\"",
                f.graph6, f.ordinal, f.detail
            );
            for (key, value) in &f.values {
                line.push_str(&format!(" {key}={}", fmt_value(*value)));
            }
            out.push(line);
        }
    }
    for w in &report.extremal {
        out.push(format!(
            "kind=extremal conjecture={conj} order={} role=\"{}\" graph6={} value={}",
            w.order,
            w.role,
            w.graph6,
            fmt_value(w.value)
        ));
    }
    out
}

fn run_scan(args: ScanArgs) -> Result<ExitCode, Error> {
    let which: Vec<ConjectureId> = if args.conjecture.is_empty() {
        ConjectureId::ALL.to_vec()
    } else {
        args.conjecture
            .iter()
            .map(|&n| ConjectureId::from_number(n))
            .collect::<Result<_, _>>()?
    };
    let records = resolve_input(&args.input)?;
    let opts = ScanOptions {
        budget: args.input.max_n,
        k_values: if args.k.is_empty() {
            None
        } else {
            Some(args.k.clone())
        },
    };
    let reports = scan_conjectures(&records, &which, &opts)?;
    if args.input.csv {
        println!("{}", csv_header());
    }
    let mut found = false;
    for report in &reports {
        found |= !report.counterexamples.is_empty();
        for line in scan_lines(report, args.input.csv) {
            println!("{line}");
        }
    }
    Ok(if found { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

fn run_family(args: FamilyArgs) -> Result<ExitCode, Error> {
    let g = make_family(&args.name, args.n, args.m)?;
    let token = emit_graph6(&g)?;
    println!("{token}");
    if args.verbose {
        println!(
            "kind=family name={} n={} edges={} diameter={}",
            g.name(),
            g.n(),
            g.edge_count(),
            g.diameter()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run_selftest() -> Result<ExitCode, Error> {
    let mut all_ok = true;
    let mut report = |id: &str, outcome: Result<(), String>| {
        match outcome {
            Ok(()) => println!("selftest {id} ok"),
            Err(detail) => {
                all_ok = false;
                println!("selftest {id} FAIL ({detail})");
            }
        }
    };

    report("spectral-oracle", {
        let mut out = Ok(());
        'families: for (name, n, m) in [("P", 4, None), ("C", 5, None), ("S+", 4, None), ("W", 5, None)] {
            let d = distance_matrix(&make_family(name, n, m).unwrap());
            let host = distpareto::matrix::SymMatrix::from_distance(&d);
            for mask in 1u64..(1 << n) {
                let sub = distpareto::matrix::principal_submatrix(
                    &host,
                    distpareto::matrix::VertexSubset(mask),
                )
                .unwrap();
                let power = match spectral_radius(&sub) {
                    Ok(r) => r,
                    Err(e) => {
                        out = Err(format!("{name}{n} mask {mask:b}: {e}"));
                        break 'families;
                    }
                };
                let jacobi = all_eigenvalues(&sub)[0];
                if (power.radius - jacobi).abs() > 1e-10 {
                    out = Err(format!(
                        "{name}{n} mask {mask:b}: {} vs {}",
                        power.radius, jacobi
                    ));
                    break 'families;
                }
            }
        }
        out
    });

    report("complete-spectrum", {
        let d = distance_matrix(&make_family("K", 7, None).unwrap());
        match pareto_spectrum_with_budget(&d, 18) {
            Ok(spec) => {
                if spec.len() == 7
                    && spec
                        .values()
                        .iter()
                        .enumerate()
                        .all(|(k, v)| (v - k as f64).abs() <= 1e-9)
                {
                    Ok(())
                } else {
                    Err(format!("got {:?}", spec.values()))
                }
            }
            Err(e) => Err(e.to_string()),
        }
    });

    report("star-closed-form", {
        let mut out = Ok(());
        for n in 3..=7 {
            let d = distance_matrix(&make_family("S", n, None).unwrap());
            let enumerated = pareto_spectrum_with_budget(&d, 18).unwrap();
            let closed = star_spectrum_closed_form(n).unwrap();
            if enumerated.len() != closed.len()
                || enumerated
                    .values()
                    .iter()
                    .zip(&closed)
                    .any(|(a, b)| (a - b).abs() > 1e-9)
            {
                out = Err(format!("star order {n}"));
                break;
            }
        }
        out
    });

    report("gamma-root", {
        let gamma = gamma_root();
        let residual = gamma * gamma * gamma - gamma * gamma - 11.0 * gamma - 7.0;
        let by_matrix = spectral_radius(&gamma_defining_matrix()).unwrap().radius;
        if residual.abs() <= 1e-10 && (gamma - by_matrix).abs() <= 1e-9 {
            Ok(())
        } else {
            Err(format!("residual {residual:.2e}, matrix gap {:.2e}", gamma - by_matrix))
        }
    });

    report("graph6-round-trip", {
        let mut out = Ok(());
        for (name, n, m) in [
            ("K", 6, None),
            ("P", 8, None),
            ("C", 7, None),
            ("S", 9, None),
            ("W", 6, None),
            ("S+", 5, None),
            ("KB", 3, Some(4)),
            ("coalesce", 3, Some(3)),
        ] {
            let g = make_family(name, n, m).unwrap();
            let token = emit_graph6(&g).unwrap();
            let back = distpareto::graph6::parse_graph6(&token).unwrap();
            if (0..g.n()).any(|v| back.neighbors(v) != g.neighbors(v)) {
                out = Err(format!("{} does not round trip", g.name()));
                break;
            }
        }
        out
    });

    report("mu4-membership", {
        let target = 1.0 + 3f64.sqrt();
        let mut out = Ok(());
        for (name, n, complete) in [("K", 5, true), ("C", 5, false), ("P", 5, false), ("S", 5, false)] {
            let d = distance_matrix(&make_family(name, n, None).unwrap());
            let spec = pareto_spectrum_with_budget(&d, 18).unwrap();
            let found = spec.values().iter().any(|v| (v - target).abs() <= 1e-9);
            if found == complete {
                out = Err(format!("{name}{n}"));
                break;
            }
        }
        out
    });

    report("rho2-deletion", {
        let mut out = Ok(());
        for (name, n) in [("S", 6), ("W", 6), ("C", 6), ("S+", 6)] {
            let g = make_family(name, n, None).unwrap();
            let (by_deletion, _) = distpareto::pareto::rho2_by_deletion(&g).unwrap();
            let by_enum = pareto_spectrum_with_budget(&distance_matrix(&g), 18)
                .unwrap()
                .rho(2)
                .unwrap();
            if (by_deletion - by_enum).abs() > 1e-9 {
                out = Err(format!("{name}{n}: {by_deletion} vs {by_enum}"));
                break;
            }
        }
        out
    });

    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
