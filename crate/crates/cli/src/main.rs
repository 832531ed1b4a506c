mod commands;
mod latex;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use birdtrack::singlets::BasisSource;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "birdtrack", version, about = "SU(N) singlet construction and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the artifact here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Singlet states on Mixed(k, k) with their squared norms.
    Basis {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "builtin", value_parser = parse_source)]
        source: BasisSource,
    },
    /// Gram matrix of the basis states, symbolic or at fixed N.
    Gram {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "builtin", value_parser = parse_source)]
        source: BasisSource,
        #[arg(long = "N")]
        big_n: Option<u32>,
    },
    /// Projector and transition operator table.
    Singlets {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "builtin", value_parser = parse_source)]
        source: BasisSource,
    },
    /// Trace-basis states and their normalized projectors.
    TraceBasis {
        #[arg(long)]
        k: usize,
    },
    /// Irreducible content of V^m (x) V*^n at fixed N.
    Lr {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Transient-singlet parameters (a, b, k, alpha).
    Transient {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Singlet count and null states at fixed N.
    Eval {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long, default_value = "trace", value_parser = parse_source)]
        source: BasisSource,
    },
    /// Run the invariant suite; exit 1 if any check fails.
    Verify,
    /// Correlator matrix of the basis states for seeded special-unitary legs.
    Correlator {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "builtin", value_parser = parse_source)]
        source: BasisSource,
    },
}

fn parse_source(s: &str) -> Result<BasisSource, String> {
    s.parse().map_err(|e: birdtrack::Error| e.to_string())
}

/// Largest `k` any command accepts; the dense cap binds well before this.
const MAX_K: usize = 6;

fn validate(cmd: &Command) -> Result<(), String> {
    let k_range = |k: usize| {
        if (1..=MAX_K).contains(&k) {
            Ok(())
        } else {
            Err(format!("--k must be in 1..={MAX_K}, got {k}"))
        }
    };
    let builtin_k = |k: usize, source: BasisSource| {
        if source == BasisSource::Builtin && k > 3 {
            Err(format!("--source builtin supports k <= 3, got {k}"))
        } else {
            Ok(())
        }
    };
    match *cmd {
        Command::Basis { k, source } | Command::Singlets { k, source } => {
            k_range(k)?;
            builtin_k(k, source)
        }
        Command::Gram { k, source, big_n } => {
            k_range(k)?;
            builtin_k(k, source)?;
            match big_n {
                Some(0) => Err("--N must be positive".into()),
                _ => Ok(()),
            }
        }
        Command::TraceBasis { k } => k_range(k),
        Command::Lr { big_n, .. } | Command::Transient { big_n, .. } if big_n < 2 => {
            Err(format!("--N must be at least 2, got {big_n}"))
        }
        Command::Lr { .. } | Command::Transient { .. } | Command::Verify => Ok(()),
        Command::Eval { k, big_n, source } => {
            k_range(k)?;
            builtin_k(k, source)?;
            if big_n == 0 {
                return Err("--N must be positive".into());
            }
            Ok(())
        }
        Command::Correlator { k, big_n, source, .. } => {
            k_range(k)?;
            builtin_k(k, source)?;
            if big_n < 2 {
                return Err(format!("--N must be at least 2, got {big_n}"));
            }
            Ok(())
        }
    }
}

fn fail(kind: &str, message: &str, code: u8) -> ExitCode {
    let err = json!({ "schema": "1", "error": { "kind": kind, "message": message } });
    eprintln!("{err}");
    ExitCode::from(code)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("BIRDTRACK_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("BIRDTRACK_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(cmd: Command) -> birdtrack::Result<commands::Report> {
    match cmd {
        Command::Basis { k, source } => commands::basis(k, source),
        Command::Gram { k, source, big_n } => commands::gram(k, source, big_n),
        Command::Singlets { k, source } => commands::singlets(k, source),
        Command::TraceBasis { k } => commands::trace_basis(k),
        Command::Lr { m, n, big_n } => commands::lr(m, n, big_n),
        Command::Transient { m, n, big_n } => commands::transient(m, n, big_n),
        Command::Eval { k, big_n, source } => commands::eval(k, big_n, source),
        Command::Verify => commands::verify(),
        Command::Correlator { k, big_n, seed, source } => commands::correlator(k, big_n, seed, source),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("config", e.to_string().trim(), 2),
    };
    if let Err(msg) = configure_threads().and_then(|_| validate(&cli.command)) {
        return fail("config", &msg, 2);
    }
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(e @ (birdtrack::Error::UnsupportedK(_) | birdtrack::Error::TooLarge(_, _))) => {
            return fail(e.kind(), &e.to_string(), 2)
        }
        Err(e) => return fail(e.kind(), &e.to_string(), 1),
    };
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("report values serialize") + "\n",
        Format::Latex => report.latex,
        Format::Text => report.text,
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        return fail("io", &msg, 2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
