//! `topolab`: analyze, compactify and reflect finite spaces, enumerate the
//! corpus and run the check suites.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use topolab::bits;
use topolab::corpus::{enumerate_spaces, MAX_CORPUS_POINTS};
use topolab::filters::{lift_space, unit_into, FilterKind, LiftedSpace};
use topolab::io::{self, LiftedFile, MapFile, ReflectionFile, SpaceFile};
use topolab::{run_suite, Fault, FiniteSpace, ReflectorKind, Status, SuiteConfig};

#[derive(Parser)]
#[command(name = "topolab", version, about = "Finite-space workbench for filter monads and reflectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Separation and compactness properties of a space.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift a space into `ΣX`, `𝔓X` or `𝔘X` together with the unit.
    Compactify {
        file: PathBuf,
        #[arg(long, default_value = "sigma", value_parser = parse_kind)]
        monad: FilterKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reflect a space into T0, sober or Hausdorff spaces.
    Reflect {
        file: PathBuf,
        #[arg(long, default_value = "t0", value_parser = parse_reflector)]
        via: ReflectorKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a check suite and print one JSON report per line.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        /// Largest codomain used when deciding epimorphisms; defaults to
        /// one more than the corpus size.
        #[arg(long)]
        epi_cap: Option<usize>,
        #[arg(long, default_value_t = 3)]
        map_points: usize,
        #[arg(long, default_value_t = 4)]
        target_points: usize,
        #[arg(long, default_value_t = 8)]
        lattice_cap: usize,
        #[arg(long, conflicts_with = "labeled")]
        up_to_homeo: bool,
        /// Use every labeled topology instead of homeomorphism classes.
        #[arg(long)]
        labeled: bool,
        #[arg(long, value_parser = parse_fault)]
        inject_fault: Option<Fault>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate topologies on up to N points.
    Corpus {
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        #[arg(long)]
        up_to_homeo: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DOT digraphs of the specialization order of a space and of its lift.
    ExportDot {
        file: PathBuf,
        #[arg(long, default_value = "sigma", value_parser = parse_kind)]
        monad: FilterKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<FilterKind, String> {
    s.parse().map_err(|e: topolab::Error| e.to_string())
}

fn parse_reflector(s: &str) -> Result<ReflectorKind, String> {
    s.parse().map_err(|e: topolab::Error| e.to_string())
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    s.parse().map_err(|e: topolab::Error| e.to_string())
}

/// Invalid input, reported with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_space(path: &Path) -> Result<FiniteSpace, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    io::parse_space(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_files(out: Option<&Path>, files: &[(&str, String)]) -> Result<(), Failure> {
    let Some(dir) = out else { return Ok(()) };
    fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
    for (name, body) in files {
        let path = dir.join(name);
        fs::write(&path, format!("{body}\n")).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value")
}

fn set_label(mask: u64) -> String {
    let members: Vec<String> = bits::to_vec(mask).iter().map(usize::to_string).collect();
    format!("{{{}}}", members.join(","))
}

/// `↑A` for each point of the lift, `A` the generator of its filter.
fn lifted_labels(l: &LiftedSpace) -> Vec<String> {
    l.points().iter().map(|p| format!("↑{}", set_label(p.generator()))).collect()
}

fn analyze(file: &Path, out: Option<&Path>) -> Result<bool, Failure> {
    let x = read_space(file)?;
    let report = json!({
        "space": SpaceFile::from(&x),
        "classification": x.classify(),
        "irreducible_closed_sets": io::mask_lists(&x.irreducible_closed_sets()),
        "specialization_covers": x.specialization().covers(),
    });
    let body = pretty(&report);
    println!("{body}");
    write_files(out, &[("analysis.json", body)])?;
    Ok(true)
}

fn compactify(file: &Path, kind: FilterKind, out: Option<&Path>) -> Result<bool, Failure> {
    let x = read_space(file)?;
    let l = lift_space(kind, &x)?;
    let e = unit_into(&l)?;
    let labels = lifted_labels(&l);
    let sidecar = json!({
        "lifted": LiftedFile::from(&l),
        "labels": labels,
        "unit": e.values().iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
    });
    let report = json!({
        "monad": kind.monad_name(),
        "space": SpaceFile::from(l.space()),
        "unit": MapFile::from(&e),
        "labels": labels,
        "is_embedding": e.is_embedding(),
        "classification": l.space().classify(),
    });
    println!("{}", pretty(&report));
    write_files(
        out,
        &[
            ("space.json", io::space_to_json(l.space())),
            ("unit.json", io::map_to_json(&e)),
            ("lifted.json", pretty(&sidecar)),
            ("report.json", pretty(&report)),
        ],
    )?;
    Ok(true)
}

fn reflect(file: &Path, via: ReflectorKind, out: Option<&Path>) -> Result<bool, Failure> {
    let x = read_space(file)?;
    let r = via.reflect(&x);
    let report = json!({
        "reflector": via.name(),
        "reflection": ReflectionFile::from(&r),
        "classification": r.space.classify(),
    });
    println!("{}", pretty(&report));
    write_files(
        out,
        &[
            ("space.json", io::space_to_json(&r.space)),
            ("unit.json", io::map_to_json(&r.unit)),
            ("report.json", pretty(&report)),
        ],
    )?;
    Ok(true)
}

fn check(suite: &str, config: &SuiteConfig, out: Option<&Path>) -> Result<bool, Failure> {
    let reports = run_suite(suite, config)?;
    let mut lines = String::new();
    for r in &reports {
        writeln!(lines, "{}", r.to_json()).expect("string write");
    }
    print!("{lines}");
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skipped = reports.iter().filter(|r| r.status == Status::NotApplicable).count();
    eprintln!(
        "{} checks: {} passed, {failed} failed, {skipped} not applicable",
        reports.len(),
        reports.len() - failed - skipped
    );
    write_files(out, &[("reports.jsonl", lines.trim_end().to_string())])?;
    Ok(failed == 0)
}

fn corpus(max_points: usize, up_to_homeo: bool, out: Option<&Path>) -> Result<bool, Failure> {
    let mut counts = Vec::new();
    let mut spaces = Vec::new();
    for n in 1..=max_points {
        let found = enumerate_spaces(n, up_to_homeo)?;
        counts.push(json!({ "points": n, "count": found.len() }));
        spaces.extend(found.iter().map(SpaceFile::from));
    }
    let summary = json!({ "up_to_homeo": up_to_homeo, "counts": counts });
    println!("{}", pretty(&summary));
    write_files(out, &[("corpus.json", pretty(&json!({ "up_to_homeo": up_to_homeo, "spaces": spaces })))])?;
    Ok(true)
}

/// Hasse diagram of the specialization order, edges pointing upwards.
/// Indistinguishable points share a cluster.
fn dot(name: &str, x: &FiniteSpace, labels: &[String]) -> String {
    let order = x.specialization();
    let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
    for (i, label) in labels.iter().enumerate() {
        writeln!(s, "  {i} [label=\"{label}\"];").expect("string write");
    }
    for (a, b) in order.covers() {
        writeln!(s, "  {a} -> {b};").expect("string write");
    }
    for a in 0..x.len() {
        for b in a + 1..x.len() {
            if order.le(a, b) && order.le(b, a) {
                writeln!(s, "  {a} -> {b} [dir=both, style=dashed];").expect("string write");
            }
        }
    }
    s.push('}');
    s
}

fn export_dot(file: &Path, kind: FilterKind, out: Option<&Path>) -> Result<bool, Failure> {
    let x = read_space(file)?;
    let l = lift_space(kind, &x)?;
    let base_labels: Vec<String> = (0..x.len()).map(|i| i.to_string()).collect();
    let base = dot("specialization", &x, &base_labels);
    let lifted = dot(kind.monad_name(), l.space(), &lifted_labels(&l));
    println!("{base}\n{lifted}");
    write_files(out, &[("specialization.dot", base), (&format!("{}.dot", kind.monad_name()), lifted)])?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Analyze { file, out } => analyze(&file, out.as_deref()),
        Command::Compactify { file, monad, out } => compactify(&file, monad, out.as_deref()),
        Command::Reflect { file, via, out } => reflect(&file, via, out.as_deref()),
        Command::Check {
            suite,
            max_points,
            epi_cap,
            map_points,
            target_points,
            lattice_cap,
            up_to_homeo: _,
            labeled,
            inject_fault,
            out,
        } => {
            let config = SuiteConfig {
                max_points,
                map_points: map_points.min(max_points),
                epi_cap: epi_cap.unwrap_or((max_points + 1).min(MAX_CORPUS_POINTS)),
                target_points,
                lattice_cap,
                up_to_homeo: !labeled,
                fault: inject_fault,
                ..SuiteConfig::default()
            };
            check(&suite, &config, out.as_deref())
        }
        Command::Corpus { max_points, up_to_homeo, out } => corpus(max_points, up_to_homeo, out.as_deref()),
        Command::ExportDot { file, monad, out } => export_dot(&file, monad, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
