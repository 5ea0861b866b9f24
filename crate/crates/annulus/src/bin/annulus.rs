use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use annulus::data::{self, DataError, Format};
use annulus::diagram::{parse_pd, Diagram};
use annulus::invariants;
use annulus::obstructions::Computed;

#[derive(Parser)]
#[command(version, about = "Knot invariants and special annulus presentation obstructions")]
struct Cli {
    /// Fixture directory
    #[arg(long, global = true, env = "KNOT_FIXTURE_DIR", default_value = "fixtures")]
    fixtures: PathBuf,
    /// Worker threads (1 = sequential, 0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the invariants of a fixture knot or a PD code
    Invariants { knot: String },
    /// Classify every fixture knot
    Classify {
        /// Invariants CSV replacing the fixture one
        #[arg(long)]
        ext: Option<PathBuf>,
    },
    /// Recompute every expected value
    VerifyPaper,
    /// Emit the classification table
    Table {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Mismatch(String),
    Usage(String),
}

impl From<DataError> for Failure {
    fn from(e: DataError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn show_invariants(d: &Diagram) -> Result<String, DataError> {
    let mut out = String::new();
    let comps = d.component_count();
    out += &format!("components  {comps}\ncrossings   {}\n", d.n_crossings());
    if comps == 1 {
        let c = Computed::of(d)?;
        for (k, v) in c.summary() {
            out += &format!("{k:<11} {v}\n");
        }
    } else {
        out += &format!("jones       {}\n", invariants::jones(d).render());
        out += &format!("conway      {}\n", invariants::conway(d)?.render());
        out += &format!("q           {}\n", invariants::q_poly(d)?.render());
        out += &format!("determinant {}\n", invariants::determinant(d)?);
        out += &format!("d           {}\n", invariants::branched_d(d)?);
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let parallel = cli.threads != 1;
    match &cli.cmd {
        Cmd::Invariants { knot } => {
            let d = if knot.trim_start().starts_with("PD") {
                parse_pd(knot).map_err(|e| Failure::Usage(format!("bad PD code: {e}")))?
            } else if knot == "H+" {
                data::hopf()
            } else {
                let fx = data::load_fixtures(&cli.fixtures)?;
                fx.knot(knot).cloned().ok_or_else(|| Failure::Usage(format!("unknown knot {knot:?}")))?
            };
            Ok(show_invariants(&d)?)
        }
        Cmd::Classify { ext } => {
            let mut fx = data::load_fixtures(&cli.fixtures)?;
            if let Some(path) = ext {
                fx.external = data::load_external(path)?;
            }
            Ok(data::render_table(&data::classify_all(&fx, parallel)?, Format::Text))
        }
        Cmd::VerifyPaper => {
            let fx = data::load_fixtures(&cli.fixtures)?;
            let report = data::verify_paper(&fx, parallel)?;
            let text = data::render_checks(&report);
            if report.mismatches() > 0 {
                Err(Failure::Mismatch(text))
            } else {
                Ok(text)
            }
        }
        Cmd::Table { format } => {
            let fx = data::load_fixtures(&cli.fixtures)?;
            Ok(data::render_table(&data::classify_all(&fx, parallel)?, *format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = annulus::par::with_threads(cli.threads, || run(&cli));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
