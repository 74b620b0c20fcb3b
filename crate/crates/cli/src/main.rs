use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Constacyclic codes of length p^s n over F_{p^m} + uF_{p^m}.
#[derive(Parser, Debug)]
#[command(name = "constacyclic", version, about)]
struct Cli {
    #[command(flatten)]
    instance: InstanceArgs,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on enumerated elements for exhaustive work.
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InstanceArgs {
    /// Characteristic of the residue field.
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Extension degree of the residue field.
    #[arg(long, global = true, default_value_t = 1)]
    m: usize,
    /// Length exponent: the code length is p^s n.
    #[arg(long, global = true)]
    s: Option<u32>,
    /// Length cofactor, coprime to p.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Encoding of alpha in F_{p^m}.
    #[arg(long, global = true)]
    alpha: Option<u64>,
    /// Encoding of beta in F_{p^m}.
    #[arg(long, global = true)]
    beta: Option<u64>,
    /// Ascending coefficients of a monic irreducible modulus for F_{p^m}.
    #[arg(long, global = true, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    /// Exponent of each factor, in factor order.
    #[arg(long, value_delimiter = ',', conflicts_with = "descriptor")]
    exponents: Option<Vec<u32>>,
    /// Read the code from a JSON descriptor file ("-" for stdin).
    #[arg(long)]
    descriptor: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MethodArg {
    Residue,
    Exhaustive,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - alpha0 into monic irreducibles.
    Factor,
    /// Stream every code of the instance.
    ListCodes {
        /// Print at most this many codes; 0 prints only the count.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Describe one code.
    Info(CodeArgs),
    /// The Euclidean dual of a code.
    Dual(CodeArgs),
    /// Minimum Hamming distance of a code.
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Residue)]
        method: MethodArg,
    },
    /// Run the brute-force checks on the instance.
    Verify,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn precondition(message: impl ToString) -> Failure {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<constacyclic::Error> for Failure {
    fn from(e: constacyclic::Error) -> Failure {
        Failure::precondition(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        // a closed pipe ends the output early but is not an error
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure {
                code: 0,
                message: String::new(),
            };
        }
        Failure::precondition(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let ctx = commands::Context {
        instance: cli.instance,
        json: cli.json,
        budget: cli.budget,
    };
    let result = match cli.command {
        Command::Factor => commands::factor(&ctx, &mut out),
        Command::ListCodes { limit } => commands::list_codes(&ctx, limit, &mut out),
        Command::Info(code) => commands::info(&ctx, &code, &mut out),
        Command::Dual(code) => commands::dual(&ctx, &code, &mut out),
        Command::Distance { code, method } => commands::distance(&ctx, &code, method, &mut out),
        Command::Verify => commands::verify(&ctx, &mut out),
    };
    let flushed = out.flush();
    match result {
        Ok(()) => match flushed {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
            _ => ExitCode::SUCCESS,
        },
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
