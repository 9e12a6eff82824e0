use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nonic::report::{
    analysis_text, cmd_analyze, cmd_pbasis, cmd_sweep, pbasis_text, sweep_text, AnalyzeOptions, SweepOptions,
};
use nonic::{Error, Int};

#[derive(Parser)]
#[command(name = "nonic", version, about = "Integral bases of pure nonic fields Q(θ), θ^9 = a")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of x^9 - a
    Analyze {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        json: bool,
        /// Certify the result with the maximal-order oracle
        #[arg(long)]
        verify: bool,
        /// Recompute local data with Newton polygons and compare
        #[arg(long)]
        newton: bool,
    },
    /// The p-integral basis and v_p(I) for one prime
    Pbasis {
        #[arg(allow_hyphen_values = true)]
        a: String,
        p: String,
        #[arg(long)]
        json: bool,
    },
    /// One summary line per valid radicand in [lo, hi]
    Sweep {
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Reducible(_) | Error::InvalidInput(_) | Error::NotPrime(_) => 2,
        Error::IncompleteFactorization { .. } | Error::UncertifiedPrime(_) => 3,
        Error::Disagreement(_) | Error::Internal(_) => 4,
        _ => 1,
    }
}

fn int(s: &str) -> Result<Int, Error> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("{s:?} is not an integer")))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Analyze { a, json, verify, newton } => {
            let r = cmd_analyze(&int(&a)?, &AnalyzeOptions { verify, newton })?;
            if !r.all_checks_passed() {
                let failed: Vec<&str> = r
                    .verification
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                return Err(Error::Disagreement(format!(
                    "oracle rejected the closed-form result ({})\n{}",
                    failed.join(", "),
                    analysis_text(&r)
                )));
            }
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{}", analysis_text(&r));
            }
        }
        Command::Pbasis { a, p, json } => {
            let r = cmd_pbasis(&int(&a)?, &int(&p)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
            } else {
                print!("{}", pbasis_text(&r));
            }
        }
        Command::Sweep { lo, hi, json, verify, jobs } => {
            let r = cmd_sweep(&int(&lo)?, &int(&hi)?, &SweepOptions { verify, jobs })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
            } else {
                print!("{}", sweep_text(&r));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Reducible(Int::from(8))), 2);
        assert_eq!(exit_code(&Error::NotPrime(Int::from(4))), 2);
        assert_eq!(exit_code(&Error::UncertifiedPrime(Int::from(7))), 3);
        assert_eq!(exit_code(&Error::Disagreement("x".into())), 4);
        assert_eq!(exit_code(&Error::Internal("x".into())), 4);
        assert_eq!(exit_code(&Error::RankDeficient), 1);
    }
}
