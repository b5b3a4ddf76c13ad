use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tridom::census::{
    self, compare_table1, find_extremal, verify_corpus, CensusConfig, CensusError, CensusRow, Predicate,
    ResultsFile, VerifyOptions,
};
use tridom::embedding::planar_code;
use tridom::families::{self, Family, FamilySpec, DEFAULT_VERIFY_CAP};
use tridom::generator::{self, Level};
use tridom::graph::graph6;
use tridom::solvers::{self, bfs_tree_cds, exact_gamma, exact_gamma_c, gamma_c_by_contraction};
use tridom::{Graph, PlaneTriangulation};

/// Plane triangulations and their (connected) domination numbers.
#[derive(Parser)]
#[command(name = "tridom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all triangulations of one order.
    Generate(GenerateArgs),
    /// Solve γ and γ_c for graphs read from a file or stdin.
    Solve(SolveArgs),
    /// Count triangulations by γ_c and compare with the published table.
    Census(CensusArgs),
    /// Build a member of an extremal family.
    Family(FamilyArgs),
    /// Check the structural bounds over a census, or cross-check an external
    /// planar_code file against the generator.
    Verify(VerifyArgs),
    /// List census graphs selected by their domination numbers.
    Extremal(ExtremalArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(name = "planar_code")]
    PlanarCode,
    Graph6,
    Json,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Scale {
    /// Largest order (default 11, or 13 with --extended, 14 with --long).
    #[arg(long)]
    n: Option<usize>,
    /// Smallest order.
    #[arg(long, default_value_t = census::CENSUS_MIN_ORDER)]
    n_min: usize,
    /// Extend the default range to n = 12..13.
    #[arg(long)]
    extended: bool,
    /// Allow n = 14 (long-running).
    #[arg(long)]
    long: bool,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Stop after this many seconds, reporting partial rows.
    #[arg(long)]
    time_limit: Option<u64>,
}

impl Scale {
    fn config(&self, with_gamma: bool) -> CensusConfig {
        let n_max = self.n.unwrap_or(if self.long {
            14
        } else if self.extended {
            13
        } else {
            11
        });
        let mut cfg = CensusConfig::new(self.n_min, n_max, self.workers);
        cfg.long = self.long;
        cfg.with_gamma = with_gamma;
        cfg.time_limit = self.time_limit.map(Duration::from_secs);
        cfg
    }

    fn run(&self, with_gamma: bool) -> Result<census::Census> {
        match census::run(&self.config(with_gamma)) {
            Ok(c) => Ok(c),
            Err(CensusError::ResourceLimit { reason, partial }) => {
                print_rows(&partial);
                bail!("{reason}; rows above are partial")
            }
            Err(e) => Err(e.into()),
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    /// Δ shortcuts, then contraction.
    Classify,
    /// Subset search.
    Subset,
    /// Edge contraction.
    Contraction,
}

#[derive(Args)]
struct SolveArgs {
    /// planar_code or graph6 input (stdin when omitted); the format is
    /// detected from the content.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "classify")]
    method: SolveMethod,
    /// Also compute γ.
    #[arg(long)]
    gamma: bool,
    /// Also solve with the other γ_c method and fail on disagreement.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    scale: Scale,
    /// Write rows as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write rows as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    A,
    B,
    Chain,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    k: usize,
    /// Largest order at which γ_c is checked during construction.
    #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
    verify_cap: usize,
    /// Print γ and γ_c of the result (exact solvers) to stderr.
    #[arg(long)]
    solve: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    scale: Scale,
    /// Cross-check the subset solver against the census up to this order.
    #[arg(long, default_value_t = 10)]
    cross_check_up_to: usize,
    /// A planar_code file of one order to compare with the generator.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateName {
    /// γ_c ≠ γ
    Differs,
    /// γ_c - γ ≥ --value
    Gap,
    /// γ_c = --value
    GammaC,
}

#[derive(Args)]
struct ExtremalArgs {
    #[command(flatten)]
    scale: Scale,
    #[arg(long, value_enum)]
    predicate: PredicateName,
    #[arg(long, default_value_t = 2)]
    value: usize,
    /// Write records (with the census rows) as JSON to this file.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve(a),
        Command::Census(a) => run_census(a),
        Command::Family(a) => family(a),
        Command::Verify(a) => verify(a),
        Command::Extremal(a) => extremal(a),
    }
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(ts: &[PlaneTriangulation], out: &Output) -> Result<()> {
    let mut w = sink(&out.output)?;
    match out.format {
        Format::PlanarCode => w.write_all(&planar_code::write(ts)?)?,
        Format::Graph6 => {
            for t in ts {
                writeln!(w, "{}", graph6::write(&t.underlying_graph()))?;
            }
        }
        Format::Json => {
            for t in ts {
                let rotation: Vec<&[usize]> = (0..t.order()).map(|v| t.rotation(v)).collect();
                let line = json!({
                    "n": t.order(),
                    "code": t.canonical_code().to_string(),
                    "rotation": rotation,
                });
                writeln!(w, "{line}")?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn generate(a: GenerateArgs) -> Result<bool> {
    let ts = generator::enumerate(a.n)?;
    eprintln!("{} triangulations of order {}", ts.len(), a.n);
    emit(&ts, &a.out)?;
    Ok(true)
}

enum Input {
    Embedded(Vec<PlaneTriangulation>),
    Plain(Vec<Graph>),
}

fn read_input(path: Option<&Path>) -> Result<Input> {
    let mut bytes = Vec::new();
    match path {
        Some(p) => {
            File::open(p)
                .with_context(|| format!("opening {}", p.display()))?
                .read_to_end(&mut bytes)?;
        }
        None => {
            io::stdin().lock().read_to_end(&mut bytes)?;
        }
    }
    if bytes.starts_with(planar_code::HEADER) {
        return Ok(Input::Embedded(planar_code::read(&bytes)?));
    }
    let text = String::from_utf8(bytes).context("input is neither planar_code nor graph6")?;
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(graph6::read)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Input::Plain(graphs))
}

fn solve(a: SolveArgs) -> Result<bool> {
    let graphs: Vec<Graph> = match read_input(a.input.as_deref())? {
        Input::Embedded(ts) => ts.iter().map(PlaneTriangulation::underlying_graph).collect(),
        Input::Plain(gs) => gs,
    };
    let mut ok = true;
    let mut out = io::stdout().lock();
    for (i, g) in graphs.iter().enumerate() {
        let gc = match a.method {
            SolveMethod::Classify => solvers::classify_graph(g)?,
            SolveMethod::Subset => exact_gamma_c(g)?,
            SolveMethod::Contraction => gamma_c_by_contraction(g)?,
        };
        let mut line = json!({
            "index": i,
            "n": g.order(),
            "max_degree": g.degree_stats().max_degree,
            "gamma_c": gc,
            "bfs_bound": bfs_tree_cds(g)?.value,
        });
        if a.gamma {
            line["gamma"] = serde_json::to_value(exact_gamma(g)?)?;
        }
        if a.cross_check {
            let other = match a.method {
                SolveMethod::Subset => gamma_c_by_contraction(g)?,
                _ => exact_gamma_c(g)?,
            };
            if other.value != gc.value {
                ok = false;
                eprintln!("graph {i}: γ_c {} by {:?}, {} by {:?}", gc.value, gc.method, other.value, other.method);
            }
        }
        writeln!(out, "{line}")?;
    }
    Ok(ok)
}

fn print_rows(rows: &[CensusRow]) {
    println!(
        "{:>3} {:>9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>9}",
        "n", "total", "γc=1", "γc=2", "γc=3", "γc=4", "γc=5", "seconds"
    );
    for r in rows {
        println!(
            "{:>3} {:>9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>9.2}{}",
            r.n,
            r.total,
            r.count(1),
            r.count(2),
            r.count(3),
            r.count(4),
            r.count(5),
            r.wall_time,
            if r.partial { "  (partial)" } else { "" }
        );
    }
}

fn run_census(a: CensusArgs) -> Result<bool> {
    let c = a.scale.run(false)?;
    print_rows(&c.rows);
    if let Some(p) = &a.csv {
        census::write_rows_csv(&c.rows, File::create(p)?)?;
    }
    if let Some(p) = &a.json {
        let file = ResultsFile {
            rows: c.rows.clone(),
            records: Vec::new(),
        };
        census::write_json(&file, File::create(p)?)?;
    }
    let diff = compare_table1(&c.rows);
    for m in &diff.mismatches {
        let col = m.column.map_or("total".to_string(), |k| format!("γc={k}"));
        println!("DIFF n={} {col}: table {}, census {}", m.n, m.expected, m.found);
    }
    for n in &diff.no_oracle {
        println!("no oracle for n={n}");
    }
    for (n, k) in &diff.unknown_cells {
        println!("unchecked n={n} γc={k} (not published)");
    }
    if a.scale.long && c.rows.iter().any(|r| r.counts_by_gamma_c.keys().any(|&k| k > 4)) {
        println!("some graph of order ≤ 14 has γ_c > 4");
        return Ok(false);
    }
    Ok(diff.is_empty())
}

fn family(a: FamilyArgs) -> Result<bool> {
    let spec = match a.family {
        FamilyName::A => FamilySpec::Sum(Family::A, a.k),
        FamilyName::B => FamilySpec::Sum(Family::B, a.k),
        FamilyName::Chain => FamilySpec::Chain(a.k),
    };
    let t = spec.build(a.verify_cap)?;
    if a.solve {
        let g = t.underlying_graph();
        eprintln!(
            "n = {}, γ = {}, γ_c = {}",
            t.order(),
            exact_gamma(&g)?.value,
            exact_gamma_c(&g)?.value
        );
    }
    emit(&[t], &a.out)?;
    Ok(true)
}

fn verify(a: VerifyArgs) -> Result<bool> {
    if let Some(path) = &a.input {
        let ts = match read_input(Some(path))? {
            Input::Embedded(ts) => ts,
            Input::Plain(_) => bail!("--input must be a planar_code file"),
        };
        let Some(order) = ts.first().map(PlaneTriangulation::order) else {
            bail!("{} holds no graphs", path.display());
        };
        let theirs = Level::from_triangulations(order, &ts)?;
        let ours = generator::enumerate_level(order)?;
        println!(
            "order {order}: file {} graphs ({} distinct), generator {}",
            ts.len(),
            theirs.len(),
            ours.len()
        );
        let same = theirs.codes == ours.codes;
        println!("{}", if same { "identical sets" } else { "sets differ" });
        return Ok(same && theirs.len() == ts.len());
    }
    let c = a.scale.run(true)?;
    let rep = verify_corpus(
        &c.corpus,
        VerifyOptions {
            cross_check_up_to: a.cross_check_up_to,
        },
    );
    for (p, count) in &rep.checked {
        let bad = rep.violations_of(*p).count();
        println!("{p:?}: {count} checked, {bad} violations");
    }
    for v in &rep.violations {
        println!("VIOLATION {:?} n={} code={}: {}", v.property, v.n, v.code, v.detail);
    }
    let maxes: Vec<String> = rep.max_gamma_c.iter().map(|(n, m)| format!("{n}:{m}")).collect();
    println!("max γ_c by order: {}", maxes.join(" "));
    Ok(rep.is_clean())
}

fn extremal(a: ExtremalArgs) -> Result<bool> {
    let predicate = match a.predicate {
        PredicateName::Differs => Predicate::GammaCDiffersFromGamma,
        PredicateName::Gap => Predicate::GapAtLeast(a.value),
        PredicateName::GammaC => Predicate::GammaCEquals(a.value),
    };
    let c = a.scale.run(predicate.needs_gamma())?;
    let records = find_extremal(&c.corpus, predicate)?;
    let mut ok = true;
    let ico = families::icosahedron().triangulation.canonical_code();
    for r in &records {
        let verified = r.verify()?;
        ok &= verified;
        println!(
            "n={} Δ={} γ={} γ_c={} code={}{}{}",
            r.n,
            r.max_degree,
            r.gamma.value,
            r.gamma_c.value,
            r.code,
            if r.code == ico { " (icosahedron)" } else { "" },
            if verified { "" } else { " WITNESS FAILS" }
        );
    }
    println!("{} graphs", records.len());
    if let Some(p) = &a.json {
        census::write_json(
            &ResultsFile {
                rows: c.rows,
                records,
            },
            File::create(p)?,
        )?;
    }
    Ok(ok)
}
