//! Command-line front end for `treelap`.
//!
//! [`run`] parses arguments, runs one subcommand and maps the outcome to an
//! exit status: 0 on success, 1 when a verification finds a violation, 2 on
//! usage or input errors.

mod args;
mod commands;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};

use clap::Parser;

pub use args::{parse_class, Cli, Command, Engine, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a subcommand produced: its rendered output and whether every check
/// it ran came out clean.
pub struct Report {
    pub body: String,
    pub clean: bool,
}

impl Report {
    fn ok(body: String) -> Report {
        Report { body, clean: true }
    }
}

/// Runs the command line `args` (program name first), writing results to
/// standard output or the `--output` file and diagnostics to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Some(jobs) = cli.jobs {
        // fails only if the pool was already built, e.g. by an earlier call
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global();
    }
    let report = match commands::execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(treelap::Error::TooLarge { .. }) = e.downcast_ref() {
                eprintln!("hint: pass --force to lift the size guard");
            }
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &report.body),
        None => io::stdout().lock().write_all(report.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if report.clean {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

/// Runs `args` and returns the report instead of writing it. Used by tests.
pub fn execute_args<I, T>(args: I) -> anyhow::Result<Report>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    commands::execute(&cli)
}
