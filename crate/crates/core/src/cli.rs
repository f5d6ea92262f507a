//! Command-line driver.
//!
//! Exit codes: 0 decomposition found, 1 none of width ≤ k exists, 2 input or
//! usage error, 3 timeout, 4 engine output failed validation.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};

use crate::cover::CoverMode;
use crate::engine::{Config, Decomposer, EmptyComponents, EngineError, HTNode, Stats};
use crate::format::{parse_hypergraph, serialize_decomposition, Format};
use crate::hypergraph::Hypergraph;
use crate::validate::validate;

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

// The search recurses once per separator level, at most once per edge.
const ENGINE_STACK_BYTES: usize = 512 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum EmptyComponentsMode {
    #[default]
    Accept,
    Reject,
}

/// Decide whether a hypergraph has a hypertree decomposition of width at most k.
#[derive(Debug, Parser)]
#[command(name = "htdecomp", version)]
pub struct CliConfig {
    /// Hypergraph file: edge terms `name(v1,...,vn)` separated by `,` and ended by `.`
    pub input: PathBuf,

    /// Width bound
    #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,

    /// Check the decomposition before printing it; exit 4 if it is invalid
    #[arg(long)]
    pub validate: bool,

    /// Print search counters to standard error
    #[arg(long)]
    pub stats: bool,

    /// Write the decomposition here instead of standard output
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,

    /// Do not memoize failed ⟨separator, component⟩ pairs
    #[arg(long)]
    pub no_fail_cache: bool,

    /// Do not memoize decomposed ⟨separator, component⟩ pairs
    #[arg(long)]
    pub no_succ_cache: bool,

    /// Try redundant covers as separators too
    #[arg(long)]
    pub all_covers: bool,

    /// Whether a separator that leaves no components succeeds
    #[arg(long, value_enum, default_value_t)]
    pub empty_components: EmptyComponentsMode,

    /// Give up after this many seconds
    #[arg(long, value_parser = parse_seconds)]
    pub timeout: Option<Duration>,
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Duration::try_from_secs_f64(secs).map_err(|e| format!("{e}"))
}

impl CliConfig {
    pub fn engine_config(&self, started: Instant) -> Config {
        Config {
            k: self.k as usize,
            use_fail_cache: !self.no_fail_cache,
            use_succ_cache: !self.no_succ_cache,
            cover_mode: if self.all_covers {
                CoverMode::All
            } else {
                CoverMode::Irredundant
            },
            empty_components: match self.empty_components {
                EmptyComponentsMode::Accept => EmptyComponents::Accept,
                EmptyComponentsMode::Reject => EmptyComponents::Reject,
            },
            deadline: self.timeout.map(|t| started + t),
        }
    }
}

pub fn format_stats(stats: &Stats, wall: Duration) -> String {
    format!(
        "decomp_cov_calls={} decomp_add_calls={} cover_candidates={} fail_cache_hits={} succ_cache_hits={} placeholders={} wall_ms={:.3}",
        stats.decomp_cov_calls,
        stats.decomp_add_calls,
        stats.cover_candidates,
        stats.fail_cache_hits,
        stats.succ_cache_hits,
        stats.placeholders_created,
        wall.as_secs_f64() * 1e3,
    )
}

fn run_engine(h: &Hypergraph, config: Config) -> (Result<Option<HTNode>, EngineError>, Stats) {
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .name("htdecomp-engine".into())
            .stack_size(ENGINE_STACK_BYTES)
            .spawn_scoped(scope, move || {
                let mut engine = Decomposer::new(h, config);
                let result = engine.run();
                (result, *engine.stats())
            })
            .expect("failed to spawn engine thread")
            .join()
            .unwrap_or_else(|panic| std::panic::resume_unwind(panic))
    })
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match CliConfig::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                let _ = write!(stderr, "{err}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{err}");
                EXIT_FOUND
            };
            return code;
        }
    };

    let text = match fs::read_to_string(&cli.input) {
        Ok(text) => text,
        Err(err) => {
            let _ = writeln!(stderr, "error: cannot read {}: {err}", cli.input.display());
            return EXIT_USAGE;
        }
    };
    let h = match parse_hypergraph(&text) {
        Ok(h) => h,
        Err(err) => {
            let _ = writeln!(stderr, "error: {}: {err}", cli.input.display());
            return EXIT_USAGE;
        }
    };

    let started = Instant::now();
    let (result, stats) = run_engine(&h, cli.engine_config(started));
    let wall = started.elapsed();
    if cli.stats {
        let _ = writeln!(stderr, "{}", format_stats(&stats, wall));
    }

    let tree = match result {
        Ok(Some(tree)) => tree,
        Ok(None) => {
            let _ = writeln!(stderr, "no hypertree decomposition of width <= {}", cli.k);
            return EXIT_NONE;
        }
        Err(EngineError::Timeout) => {
            let _ = writeln!(stderr, "error: timeout exceeded");
            return EXIT_TIMEOUT;
        }
        Err(err @ EngineError::ExpansionFailure { .. }) => {
            let _ = writeln!(stderr, "internal error: {err}");
            return EXIT_INVALID;
        }
    };

    let mut code = EXIT_FOUND;
    if cli.validate {
        let report = validate(&h, &tree, cli.k as usize);
        if !report.is_valid_within_width() {
            for violation in &report.violations {
                let _ = writeln!(stderr, "validation: {violation}");
            }
            if !report.width_ok {
                let _ = writeln!(stderr, "validation: width {} exceeds {}", report.width, cli.k);
            }
            code = EXIT_INVALID;
        }
    }

    let rendered = match serialize_decomposition(&h, &tree, cli.format) {
        Ok(rendered) => rendered,
        Err(err) => {
            let _ = writeln!(stderr, "internal error: {err}");
            return EXIT_INVALID;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, rendered.as_bytes()),
        None => stdout.write_all(rendered.as_bytes()),
    };
    if let Err(err) = written {
        let _ = writeln!(stderr, "error: cannot write output: {err}");
        return EXIT_USAGE;
    }
    code
}
