use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use hlk_cli::{run_suite, Input, Options, Suite};
use hlk::catalog;
use hlk::io::canonical;
use hlk::lefschetz::ConeMode;
use hlk::llgen::DEFAULT_CAP;

/// Exact checks for Kähler-Lefschetz models, (g,K)-cohomology and Hodge diamonds.
#[derive(Parser)]
#[command(name = "hlk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries, or write the files of one entry.
    Catalog {
        name: Option<String>,
        /// Entry parameter (m, N or λ, see the listing).
        #[arg(long, allow_hyphen_values = true)]
        param: Option<i64>,
        /// Weight window for module files.
        #[arg(long)]
        window: Option<i64>,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Parse and validate any input files.
    Validate(SuiteArgs),
    /// Hard Lefschetz, sl2 triples, polarizations, signature.
    Lefschetz(SuiteArgs),
    /// Generate the Lie algebra of all L and Λ.
    Llgen(SuiteArgs),
    /// Relative Lie algebra cohomology of modules over a pair.
    Gkcoh(SuiteArgs),
    /// Hodge diamond of a mock spectrum.
    Assemble(SuiteArgs),
}

#[derive(Args)]
struct SuiteArgs {
    /// Input file; repeat for several.
    #[arg(long = "input", short = 'i', required = true)]
    inputs: Vec<PathBuf>,
    /// Where to write the JSON report.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Cone membership mode.
    #[arg(long, default_value = "full")]
    mode: ConeMode,
    /// Dimension cap for Lie closures.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Truncate modules to this weight window.
    #[arg(long)]
    window: Option<i64>,
}

/// Failure classes mapped to exit codes.
enum Outcome {
    Pass,
    Fail,
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("HLK_THREADS") {
        let n: usize = v.parse().with_context(|| format!("HLK_THREADS={v} is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn catalog_cmd(name: Option<String>, param: Option<i64>, window: Option<i64>, out: &Path) -> anyhow::Result<Outcome> {
    let Some(name) = name else {
        for (n, p, d) in catalog::ENTRIES {
            let p = if p.is_empty() { String::new() } else { format!(" [--param {p}]") };
            println!("{n:<18} {d}{p}");
        }
        return Ok(Outcome::Pass);
    };
    let files = catalog::files(&name, param, window)?;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    for (file, text) in files {
        let path = out.join(file);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(Outcome::Pass)
}

fn suite_cmd(suite: Suite, a: SuiteArgs) -> anyhow::Result<Outcome> {
    let inputs = a
        .inputs
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(Input::new(p.display().to_string(), text))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let opts = Options {
        mode: a.mode,
        cap: a.cap,
        window: a.window,
    };
    let report = run_suite(suite, &inputs, &opts)?;
    print!("{}", report.summary());
    if let Some(path) = a.report {
        fs::write(&path, canonical(&report.to_json()))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Catalog { name, param, window, out } => catalog_cmd(name, param, window, &out),
        Command::Validate(a) => suite_cmd(Suite::Validate, a),
        Command::Lefschetz(a) => suite_cmd(Suite::Lefschetz, a),
        Command::Llgen(a) => suite_cmd(Suite::Llgen, a),
        Command::Gkcoh(a) => suite_cmd(Suite::Gkcoh, a),
        Command::Assemble(a) => suite_cmd(Suite::Assemble, a),
    });
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
