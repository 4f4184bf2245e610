use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use exceptional::cache::{self, CACHE_ENV};
use exceptional::report::{root_export, run, Config, Suite};
use exceptional::roots::Level;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

/// Runs exact verification suites for the exceptional Lie algebras over Q(i).
#[derive(Debug, Parser)]
#[command(name = "exceptional", version)]
struct Args {
    /// dims, killing, triality, roots-f4, roots-e6, roots-e7, roots-e8, wspace, realforms or all
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Structure constants are read from and written to this directory, and
    /// root tables are exported there when a roots suite runs.
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random samples per sweep (the sampled Jacobi and invariance sweeps scale with it)
    #[arg(long, default_value_t = 20)]
    samples: usize,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("unknown suite {s:?}, expected one of {}", names.join(", "))
    })
}

fn export_roots(dir: &std::path::Path, suite: Suite) -> Result<(), String> {
    let levels: Vec<Level> = match suite {
        Suite::All => Level::ALL.to_vec(),
        Suite::Roots(l) => vec![l],
        _ => return Ok(()),
    };
    std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    for level in levels {
        let export = root_export(level)?;
        let stem = format!("roots-{}", level.label().to_lowercase().replace(|c: char| !c.is_ascii_alphanumeric(), "-"));
        for (ext, text) in [("json", export.to_json()), ("md", export.to_markdown())] {
            let path = dir.join(format!("{stem}.{ext}"));
            std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    cache::set_dir(args.cache_dir.clone());
    let config = Config { suite: args.suite, seed: args.seed, samples: args.samples };
    let report = run(&config);
    match args.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Markdown => print!("{}", report.to_markdown()),
    }
    if let Some(dir) = &args.cache_dir {
        if let Err(e) = export_roots(dir, args.suite) {
            eprintln!("root table export failed: {e}");
            return ExitCode::FAILURE;
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
