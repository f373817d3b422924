use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod render;

use bordism_core::bordism::{char_vector, from_char_vector};
use bordism_core::charnum::{ch_boxtimes_generators, CharMatrix};
use bordism_core::partitions::{self, Partition};
use bordism_core::verify::{self, VerifyOptions, MAX_VERIFY_N};
use bordism_core::{CharVector, GrassmannPair, Rational, VirtualClass};

#[derive(Parser, Debug)]
#[command(name = "bordism", version, about = "Exact computations in the rational bordism ring of SU-pairs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of N into parts >= 2, in canonical order.
    Partitions { n: u32 },
    /// Characteristic-number matrix over the partitions of N, with determinant.
    Matrix { n: u32 },
    /// Express a characteristic-number vector in the t-monomial basis.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// With --l, reject degrees outside the stable range of Gr_{k,l}.
        #[arg(long, requires = "l")]
        k: Option<u32>,
        #[arg(long, requires = "k")]
        l: Option<u32>,
    },
    /// Run the self-check suites up to weight --max-n.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Negative control: bump the entry "M:NU", e.g. "2,4:3,3".
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Chern character of the product of generator bundles over S^{2n1} x ... x S^{2nr}.
    Ch {
        #[arg(required = true)]
        parts: Vec<u32>,
    },
    /// Stable-range and Thom-space facts for the Grassmannian Gr_{k,l}.
    Gr {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        d: u32,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<bordism_core::Error> for Failure {
    fn from(e: bordism_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Partitions { n } => Ok(render::partitions(*n, &partitions::enumerate(*n), fmt)),
        Command::Matrix { n } => {
            if *n < 2 {
                return Err(Failure::Usage(format!("matrix needs n >= 2, got {n}")));
            }
            Ok(render::matrix(&CharMatrix::new(*n), fmt))
        }
        Command::Solve { input, k, l } => {
            let text = fs::read_to_string(input)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
            let v: CharVector = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("malformed characteristic vector: {e}")))?;
            if let (Some(k), Some(l)) = (k, l) {
                let pair = GrassmannPair::new(*k, *l)?;
                let d = 2 * u64::from(v.n());
                if !pair.in_stable_range(d) {
                    return Err(Failure::Usage(format!(
                        "degree {d} is not below the stable range {} of Gr_{{{k},{l}}}",
                        pair.stable_range()
                    )));
                }
            }
            let element = from_char_vector(&v);
            let residual_ok = char_vector(&element, v.n()) == v;
            let out = render::solution(v.n(), &element, residual_ok, fmt);
            if residual_ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Verify { max_n, seed, corrupt } => {
            if *max_n > MAX_VERIFY_N {
                return Err(Failure::Usage(format!("--max-n is capped at {MAX_VERIFY_N}")));
            }
            let corrupt = corrupt.as_deref().map(parse_entry).transpose()?;
            let report = verify::run(&VerifyOptions { max_n: *max_n, seed: *seed, corrupt })?;
            let out = render::report(&report, fmt);
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Ch { parts } => {
            let nu = Partition::new(parts.clone())?;
            let class = VirtualClass::from_ch(ch_boxtimes_generators::<Rational>(&nu)?)?;
            Ok(render::ch(&class, fmt))
        }
        Command::Gr { k, l, d } => {
            let pair = GrassmannPair::new(*k, *l)?;
            Ok(render::thom(&pair, *d, &pair.thom_facts(*d), fmt))
        }
    }
}

/// `"2,4:3,3"` → `((2,4), (3,3))`.
fn parse_entry(s: &str) -> Result<(Partition, Partition), Failure> {
    let bad = || Failure::Usage(format!("expected M:NU like 2,4:3,3, got {s:?}"));
    let (m, nu) = s.split_once(':').ok_or_else(bad)?;
    let parse = |t: &str| -> Result<Partition, Failure> {
        let parts = t.split(',').map(|x| x.trim().parse::<u32>()).collect::<Result<Vec<_>, _>>().map_err(|_| bad())?;
        Ok(Partition::new(parts)?)
    };
    Ok((parse(m)?, parse(nu)?))
}
