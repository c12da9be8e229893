use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arfcover::Error;
use arfcover_cli::commands::{self, FoxMode};
use arfcover_cli::ReportDocument;

#[derive(Parser)]
#[command(
    name = "arfcover",
    version,
    about = "Special 2-fold coverings, Arf invariants and derived matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Enumerate groups on all cores. Results do not depend on it.
    #[arg(long, global = true)]
    parallel: bool,

    /// Record wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct SectionArgs {
    /// Section bits r₁…r₂g (default all zero).
    #[arg(long)]
    section: Option<String>,

    /// Use the all-one section.
    #[arg(long)]
    johnson: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The two orbits of E(q) under Sp(Z₂, 2g).
    Orbits {
        #[arg(short, long, alias = "g")]
        genus: usize,
        #[arg(short = 'q', long, alias = "q", allow_negative_numbers = true)]
        chern: i64,
        #[command(flatten)]
        section: SectionArgs,
    },
    /// Derived matrix of a covering.
    Fox {
        #[arg(short, long, alias = "g")]
        genus: usize,
        #[arg(short = 'q', long, alias = "q", allow_negative_numbers = true)]
        chern: i64,
        /// Covering bits n₁…n₂g.
        covering: String,
        /// Integral matrix over Z[Z₂] (default).
        #[arg(long, group = "mode")]
        integral: bool,
        /// Matrix over Z₂[Z₂].
        #[arg(long, group = "mode")]
        mod2: bool,
        /// Normal form in the (V, Q) bases and the module structure.
        #[arg(long, group = "mode")]
        vq: bool,
    },
    /// Congruence witness for two coverings.
    Congruent {
        #[arg(short, long, alias = "g")]
        genus: usize,
        #[arg(short = 'q', long, alias = "q", allow_negative_numbers = true)]
        chern: i64,
        phi: String,
        phi2: String,
        #[command(flatten)]
        section: SectionArgs,
    },
    /// Orders and generators of Sp, Sp₀ and Sp₁.
    Sp {
        #[arg(short, long, alias = "g")]
        genus: usize,
    },
    /// Conjugacy certificate for a symplectic matrix.
    Witness {
        #[arg(short, long, alias = "g")]
        genus: usize,
        /// 2g×2g bits, row-major.
        matrix: String,
    },
    /// Run a verification suite.
    Verify {
        /// arf, orbits, generators, cover, fox, congruence, star or all.
        suite: String,
        /// A genus or an inclusive range such as 1..2.
        #[arg(short, long = "genus", alias = "g", default_value = "1..2")]
        genera: String,
    },
}

fn run(cli: &Cli, echo: String) -> arfcover::Result<ReportDocument> {
    let parallel = cli.parallel;
    match &cli.command {
        Command::Orbits {
            genus,
            chern,
            section,
        } => {
            let s = commands::section(*genus, section.section.as_deref(), section.johnson)?;
            commands::orbits(echo, *genus, *chern, &s, parallel)
        }
        Command::Fox {
            genus,
            chern,
            covering,
            mod2,
            vq,
            ..
        } => {
            let mode = if *mod2 {
                FoxMode::Mod2
            } else if *vq {
                FoxMode::Vq
            } else {
                FoxMode::Integral
            };
            commands::fox(echo, *genus, *chern, covering, mode)
        }
        Command::Congruent {
            genus,
            chern,
            phi,
            phi2,
            section,
        } => {
            let s = commands::section(*genus, section.section.as_deref(), section.johnson)?;
            commands::congruent_cmd(echo, *genus, *chern, phi, phi2, &s)
        }
        Command::Sp { genus } => commands::sp(echo, *genus, parallel),
        Command::Witness { genus, matrix } => commands::witness(echo, *genus, matrix),
        Command::Verify { suite, genera } => {
            let range = commands::parse_genus_range(genera)?;
            commands::verify(echo, suite, range, parallel)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| run(&cli, echo));
    let mut doc = match outcome {
        Ok(Ok(doc)) => doc,
        Ok(Err(e @ Error::Internal(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(_) => return ExitCode::from(1),
    };
    if cli.timing {
        doc.timing_us = Some(start.elapsed().as_micros() as u64);
    }
    match cli.format {
        Format::Json => println!("{}", doc.to_json()),
        Format::Table => print!("{}", doc.to_table()),
    }
    if doc.passed() {
        ExitCode::SUCCESS
    } else {
        if let Some(v) = doc.verdicts.iter().find(|v| v.counterexample.is_some()) {
            eprintln!(
                "verification failed: {}: {}",
                v.name,
                v.counterexample.as_deref().unwrap_or_default()
            );
        }
        ExitCode::from(1)
    }
}
