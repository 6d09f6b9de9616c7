use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

use knotrank::arith::cyclotomic::{set_start_precision, CircleAngle};
use knotrank::catalog::write_index;
use knotrank::instanton::{generate_family_with, verdict, verify_certificate, RankCertificate, TauOracle, Verdict};
use knotrank::io::{canonical, knot_to_json, load_knot, load_pattern, read_file};
use knotrank::seifert::{axis_self_linking, genus1_enumerate, genus1_value};
use knotrank::signature::{independence_rank, jump_spectrum, tl_signature, torus_seifert};
use knotrank::Error;

const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_MISSING_TAU: u8 = 4;

#[derive(Parser)]
#[command(name = "knotrank", version, about = "Certify infinite rank of satellite operators on knot concordance")]
struct Cli {
    /// Initial bit precision for certified sign evaluation (results do not depend on it)
    #[arg(long, global = true, value_name = "BITS")]
    precision_start: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rational self-linking l of the lifted axis in the branched double cover
    Linking { pattern: PathBuf },

    /// Verdict for a pattern, optionally with a certified torus-knot family
    #[command(group(ArgGroup::new("pq").args(["p", "q"]).multiple(true).requires_all(["p", "q"])))]
    Certify {
        /// Pattern file (not needed with --verify)
        #[arg(required_unless_present = "verify")]
        pattern: Option<PathBuf>,
        /// Number of torus knots in the family
        #[arg(long, value_name = "N")]
        family: Option<usize>,
        /// Tau-bound table
        #[arg(long, value_name = "FILE")]
        tau: Option<PathBuf>,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        /// Write the certificate here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Re-check an existing certificate against the tau table
        #[arg(long, value_name = "CERT", conflicts_with_all = ["family", "p", "q", "out"])]
        verify: Option<PathBuf>,
    },

    /// Tristram-Levine signature at an angle, or the full jump spectrum
    #[command(group(ArgGroup::new("mode").args(["at", "jumps"]).required(true)))]
    Signature {
        knot: PathBuf,
        /// Angle a/n, for ζ = exp(2πi·a/n)
        #[arg(long, value_name = "A/N")]
        at: Option<String>,
        #[arg(long)]
        jumps: bool,
    },

    /// Torus knot T(r,s): Seifert matrix or jump spectrum
    #[command(group(ArgGroup::new("mode").args(["seifert", "jumps"]).required(true)))]
    Torus {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        seifert: bool,
        #[arg(long)]
        jumps: bool,
    },

    /// Rank of the jump functions of the given knots
    Independence {
        #[arg(required = true)]
        knots: Vec<PathBuf>,
    },

    /// Genus-one Alexander-polynomial-one patterns with a nonzero axis linking
    Genus1 {
        #[arg(long, default_value_t = 2)]
        max_m: u32,
        #[arg(long, default_value_t = 2)]
        max_l: u32,
    },

    /// Pattern catalog maintenance
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Write index.json for a directory of pattern files
    Index { dir: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MissingTau(_) => EXIT_MISSING_TAU,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn load_oracle(path: Option<&PathBuf>) -> Result<TauOracle, Failure> {
    match path {
        Some(p) => TauOracle::from_json(&read_file(p)?).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", p.display()))),
        None => Ok(TauOracle::new()),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if let Some(bits) = cli.precision_start {
        set_start_precision(bits);
    }
    match cli.command {
        Command::Linking { pattern } => {
            let p = load_pattern(&pattern)?;
            let l = axis_self_linking(&p)?;
            println!("l = {l}");
            Ok(if l.is_zero() { EXIT_INCONCLUSIVE } else { 0 })
        }

        Command::Certify { verify: Some(cert_path), tau, .. } => {
            let cert = RankCertificate::from_json(&read_file(&cert_path)?)?;
            let oracle = load_oracle(tau.as_ref())?;
            let report = verify_certificate(&cert, &oracle);
            match report.failure {
                None => {
                    println!("certificate verified: {} torus knots for {}", cert.entries.len(), cert.pattern);
                    Ok(0)
                }
                Some(reason) => Err(fail(1, format!("certificate rejected: {reason}"))),
            }
        }

        Command::Certify { pattern, family, tau, p, q, out, verify: None } => {
            let pattern = pattern.expect("required unless --verify");
            let pat = load_pattern(&pattern)?;
            match verdict(&pat, None) {
                Verdict::Inconclusive { l } => {
                    println!("inconclusive: l = {l}");
                    Ok(EXIT_INCONCLUSIVE)
                }
                Verdict::InfiniteRank { l: None, .. } => {
                    println!("infinite rank via signature jumps (winding number {})", pat.winding);
                    Ok(0)
                }
                Verdict::InfiniteRank { l: Some(l), mirror_used, .. } => {
                    let mirror = if mirror_used { ", via the mirror pattern" } else { "" };
                    println!("infinite rank via instanton criterion: l = {l}{mirror}");
                    if let Some(n) = family {
                        if n == 0 {
                            return Err(fail(EXIT_INPUT, "--family must be at least 1"));
                        }
                        let oracle = load_oracle(tau.as_ref())?;
                        let pq = p.zip(q);
                        let cert = generate_family_with(&pat, n, &oracle, pq)?;
                        emit(&cert.to_json(), out.as_ref())?;
                    }
                    Ok(0)
                }
            }
        }

        Command::Signature { knot, at, jumps } => {
            let k = load_knot(&knot)?;
            if jumps {
                println!("{}", canonical(&jump_spectrum(&k)?.to_json()));
                return Ok(0);
            }
            let angle = CircleAngle::parse(at.as_deref().expect("group requires one"))?;
            println!("{}", tl_signature(&k, &angle)?);
            Ok(0)
        }

        Command::Torus { r, s, seifert, jumps: _ } => {
            let v = torus_seifert(r, s)?;
            if seifert {
                println!("{}", knot_to_json(&format!("T({r},{s})"), &v)?);
            } else {
                println!("{}", canonical(&jump_spectrum(&v)?.to_json()));
            }
            Ok(0)
        }

        Command::Independence { knots } => {
            let forms = knots.iter().map(|p| load_knot(p)).collect::<Result<Vec<_>, _>>()?;
            let rank = independence_rank(&forms)?;
            let verdict = if rank == forms.len() { "independent" } else { "dependent" };
            println!("rank = {rank} of {} ({verdict})", forms.len());
            Ok(0)
        }

        Command::Genus1 { max_m, max_l } => {
            let mut out = Vec::new();
            for (n, m, l) in genus1_enumerate(max_m, max_l) {
                let mut witnesses = Vec::new();
                for (x, y) in [(1, 0), (0, 1), (1, 1), (-1, 1)] {
                    let value = genus1_value(n, m, l, x, y)?;
                    if !value.is_zero() {
                        let value = value.to_i64().expect("small enumeration bounds");
                        witnesses.push(json!({ "x": x, "y": y, "value": value }));
                    }
                }
                if !witnesses.is_empty() {
                    out.push(json!({ "n": n, "m": m, "l": l, "witnesses": witnesses }));
                }
            }
            println!("{}", canonical(&serde_json::Value::Array(out)));
            Ok(0)
        }

        Command::Catalog { action: CatalogAction::Index { dir } } => {
            let index = write_index(&dir)?;
            for (file, reason) in &index.rejected {
                eprintln!("skipped {file}: {reason}");
            }
            for e in &index.entries {
                let l = e.l.as_deref().map(|s| format!(" l = {s}")).unwrap_or_default();
                println!("{}: {}{l}", e.name, e.verdict);
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
