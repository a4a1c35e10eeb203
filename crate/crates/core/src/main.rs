use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cubical_forms::element::DofSet;
use cubical_forms::mesh::{assemble, build_mesh, certify_continuity, mesh_complex_cohomology, MeshSpec};
use cubical_forms::spaces::{basis_s, dim_s_formula};
use cubical_forms::verify::{run_suites, Suite, VerifyConfig};
use cubical_forms::Error;

#[derive(Parser)]
#[command(version, about = "Serendipity finite element differential forms on cubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension table of S_r Λ^k, one block per n.
    Dims {
        /// Single dimension; all of 1..=4 when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 7)]
        rmax: i64,
        /// Also build each basis and compare its rank with the formula.
        #[arg(long)]
        constructive: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites over a parameter grid.
    Verify {
        /// koszul|degree|subcomplex|inclusion|trace|unisolvence|vanishing|commute|all, comma separated.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        n: usize,
        /// Single r; overrides --rmax.
        #[arg(long)]
        r: Option<i64>,
        #[arg(long, default_value_t = 4)]
        rmax: i64,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Basis of S_r Λ^k(ℝ^n) as JSON.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degrees of freedom of S_r Λ^k on [−1,1]^n as JSON.
    Dofs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cohomology and continuity of the assembled complex on a mesh.
    Complex {
        /// grid:AxBxC or a JSON file.
        #[arg(long)]
        mesh: String,
        #[arg(long)]
        r: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Process outcome; carries the exit code.
enum Failure {
    Verification,
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::Io(e.to_string()),
            Error::Singular(_) => Failure::Verification,
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn emit(out: &Option<PathBuf>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Failure::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct DimCell {
    n: usize,
    k: usize,
    r: i64,
    formula: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    constructive: Option<usize>,
}

fn cmd_dims(n: Option<usize>, rmax: i64, constructive: bool, format: Format, out: &Option<PathBuf>) -> Outcome {
    if rmax < 1 || n == Some(0) {
        return Err(Failure::Usage("need n ≥ 1 and rmax ≥ 1".into()));
    }
    let ns: Vec<usize> = n.map_or((1..=4).collect(), |n| vec![n]);
    let mut cells = Vec::new();
    for &n in &ns {
        for k in 0..=n {
            for r in 1..=rmax {
                let formula = dim_s_formula(n, r, k)?;
                let constructive = if constructive { Some(basis_s(n, r, k)?.dim()) } else { None };
                cells.push(DimCell { n, k, r, formula, constructive });
            }
        }
    }
    let mismatches = cells
        .iter()
        .filter(|c| c.constructive.is_some_and(|d| d as u128 != c.formula))
        .count();
    let text = match format {
        Format::Json => json(&cells)?,
        Format::Table => {
            let mut s = String::new();
            for &n in &ns {
                s.push_str(&format!("n = {n}\n  k\\r"));
                for r in 1..=rmax {
                    s.push_str(&format!(" {:>w$}", r, w = if constructive { 13 } else { 6 }));
                }
                s.push('\n');
                for k in 0..=n {
                    s.push_str(&format!("  {k:>3}"));
                    for c in cells.iter().filter(|c| c.n == n && c.k == k) {
                        let cell = match c.constructive {
                            Some(d) => format!("{}/{}", c.formula, d),
                            None => c.formula.to_string(),
                        };
                        s.push_str(&format!(" {:>w$}", cell, w = if constructive { 13 } else { 6 }));
                    }
                    s.push('\n');
                }
            }
            if constructive {
                s.push_str(&format!(
                    "{} of {} cells match (formula/constructive)\n",
                    cells.len() - mismatches,
                    cells.len()
                ));
            }
            s
        }
    };
    emit(out, &text)?;
    if mismatches > 0 {
        return Err(Failure::Verification);
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    n: usize,
    r: Option<i64>,
    rmax: i64,
    k: Option<usize>,
    l: Option<u32>,
    seed: u64,
    format: Format,
    out: &Option<PathBuf>,
) -> Outcome {
    let suites = Suite::parse_list(suite)?;
    if n == 0 {
        return Err(Failure::Usage("need n ≥ 1".into()));
    }
    if n > 4 {
        if suite == "all" {
            return Err(Failure::Usage("verify --suite all is capped at n ≤ 4".into()));
        }
        eprintln!("warning: n = {n} may take a long time");
    }
    let (r_min, r_max) = r.map_or((1, rmax), |r| (r, r));
    let mut cfg = VerifyConfig::new(n, r_min, r_max);
    cfg.k = k;
    cfg.l = l;
    cfg.seed = seed;
    let report = run_suites(&suites, &cfg)?;
    let pass = report.pass();
    if let Some(path) = out {
        emit(&Some(path.clone()), &json(&report)?)?;
    }
    match format {
        Format::Json if out.is_none() => emit(&None, &json(&report)?)?,
        _ => {
            for s in &suites {
                let (ok, total) = report.tally(*s);
                let verdict = if ok == total { "PASS" } else { "FAIL" };
                println!("{:<12} {ok:>4}/{total:<4} {verdict}", s.name());
            }
            for f in report.failures() {
                println!("failed: {}", serde_json::to_string(&f.key).unwrap_or_default());
            }
            println!("seed {seed}: {}", if pass { "all checks pass" } else { "verification FAILED" });
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct ComplexJson {
    mesh: String,
    r: i64,
    cells: usize,
    dims: Vec<usize>,
    ranks: Vec<usize>,
    defects: Vec<usize>,
    products_vanish: bool,
    continuity: Vec<bool>,
    pass: bool,
}

fn cmd_complex(mesh_arg: &str, r: i64, format: Format, out: &Option<PathBuf>) -> Outcome {
    let mesh = build_mesh(&MeshSpec::from_arg(mesh_arg)?)?;
    let rep = mesh_complex_cohomology(&mesh, r)?;
    let mut continuity = Vec::new();
    for k in 0..=mesh.n() {
        let space = assemble(&mesh, r - k as i64, k)?;
        continuity.push(certify_continuity(&space)?.pass());
    }
    let pass = rep.pass() && continuity.iter().all(|&c| c);
    let summary = ComplexJson {
        mesh: mesh_arg.to_string(),
        r,
        cells: mesh.cells().len(),
        dims: rep.dims.clone(),
        ranks: rep.ranks.clone(),
        defects: rep.defects.clone(),
        products_vanish: rep.products_vanish,
        continuity,
        pass,
    };
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let text = match format {
        Format::Json => json(&summary)?,
        Format::Table => format!(
            "mesh {} ({} cells), r = {r}\ndims       {}\nranks      {}\ndefects    {}\nd∘d = 0    {}\ncontinuity {}\n{}\n",
            summary.mesh,
            summary.cells,
            join(&summary.dims),
            join(&summary.ranks),
            join(&summary.defects),
            summary.products_vanish,
            summary.continuity.iter().map(|c| if *c { "pass" } else { "FAIL" }).collect::<Vec<_>>().join(","),
            if pass { "PASS" } else { "FAIL" },
        ),
    };
    emit(out, &text)?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Dims { n, rmax, constructive, format, out } => cmd_dims(n, rmax, constructive, format, &out),
        Command::Verify { suite, n, r, rmax, k, l, seed, format, out } => {
            cmd_verify(&suite, n, r, rmax, k, l, seed, format, &out)
        }
        Command::Basis { n, k, r, out } => emit(&out, &json(&basis_s(n, r, k)?.to_json())?),
        Command::Dofs { n, k, r, out } => emit(&out, &json(&DofSet::reference(n, r, k)?.to_json())?),
        Command::Complex { mesh, r, format, out } => cmd_complex(&mesh, r, format, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
