use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use moufang::fixtures::generate_fixture;
use moufang::format::{digest, load_document, write_document, Document};
use moufang::suite::{run_suites, verify_witness, MachineValue, OutputFormat, Suite, SuiteConfig};
use moufang::triality::DEFAULT_SAMPLE_CAP;
use moufang::{Bilinear, Error};

/// Exit status for usage, parse and I/O errors. Failed-suite counts are
/// capped below it.
const EXIT_ERROR: u8 = 64;

#[derive(Parser)]
#[command(
    name = "moufang-verify",
    version,
    about = "Exact checks of Moufang-Mal'tsev operator identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named fixture in canonical form.
    Gen {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Load a file and report its shape.
    Validate { file: PathBuf },
    /// Run check suites; the exit status is the number of failed suites.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated suite names, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLE_CAP)]
        cap: usize,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-evaluate one witness recorded in a machine report.
    VerifyWitness {
        report: PathBuf,
        #[arg(long)]
        index: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Gen { name, seed, out } => {
            let doc = generate_fixture(&name, seed)?;
            std::fs::write(&out, write_document(&doc))?;
            Ok(0)
        }
        Command::Validate { file } => {
            let (doc, bytes) = load_document(&file)?;
            println!("{}: {}", file.display(), describe(&doc));
            println!("sha256 {}", digest(&bytes));
            Ok(0)
        }
        Command::Check {
            files,
            suite,
            seed,
            cap,
            format,
            out,
        } => {
            let format: OutputFormat = format.parse()?;
            let mut config = SuiteConfig::new(files, Suite::parse_list(&suite)?);
            config.seed = seed;
            config.cap = cap;
            config.format = format;
            let report = run_suites(&config)?;
            let text = report.render(format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text)?;
                    let total: usize = report.inputs.iter().map(|i| i.suites.len()).sum();
                    eprintln!(
                        "{total} suites, {} failed; report written to {}",
                        report.failed_suites(),
                        path.display()
                    );
                }
                None => print!("{text}"),
            }
            Ok(report.failed_suites().min(EXIT_ERROR as usize - 1) as u8)
        }
        Command::VerifyWitness { report, index } => {
            let text = std::fs::read_to_string(&report)?;
            let check = verify_witness(&text, index)?;
            println!(
                "witness #{}: {} / {} at {:?} in {}",
                check.index, check.check, check.law, check.indices, check.input
            );
            println!("recorded lhs:\n{}", show(&check.recorded.0));
            println!("recorded rhs:\n{}", show(&check.recorded.1));
            println!("recomputed lhs:\n{}", show(&check.recomputed.0));
            println!("recomputed rhs:\n{}", show(&check.recomputed.1));
            if check.reproduced() {
                println!("reproduced");
                Ok(0)
            } else {
                println!("MISMATCH");
                Ok(1)
            }
        }
    }
}

fn describe(doc: &Document) -> String {
    match doc {
        Document::Binary(a) => {
            let unit = a
                .unit_index()
                .map_or("no unit".to_string(), |u| format!("unit e{u}"));
            format!("binary-algebra, dim {}, {unit}", a.dim())
        }
        Document::Anticomm(g) => format!("anticomm-algebra, dim {}", g.dim()),
        Document::Pair(p) => {
            let mut s = format!("pair, dim {}, rep_dim {}", p.dim(), p.rep_dim());
            for flag in p.flags() {
                s.push_str(&format!(", {flag}"));
            }
            s
        }
        Document::Tensor4(t) => format!("tensor4, dims {:?}", t.dims()),
    }
}

fn show(v: &MachineValue) -> String {
    match v {
        MachineValue::Vector { entries } => format!("  ({})", entries.join(", ")),
        MachineValue::Matrix { rows } => rows
            .iter()
            .map(|r| format!("  [{}]", r.join(", ")))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}
