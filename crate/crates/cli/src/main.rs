//! `sixjvol` — quantum 6j-symbols at roots of unity and hyperbolic volumes
//! from the command line.
//!
//! Single results print as JSON on stdout; the convergence subcommands
//! print CSV (or JSON with `--format json`). Validation failures exit
//! with code 2, numeric/domain failures with code 3, and errors go to
//! stderr as one machine-readable JSON line.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use sixjvol_core::error::Error;
use sixjvol_core::experiments::{self, csv_string, ConvergenceRow};
use sixjvol_core::hypgeom::{
    dblock_volume, dilog, lobachevsky, volume_my, TruncTetra,
};
use sixjvol_core::rootval::{LaurentLead, Sign, SineTable};
use sixjvol_core::shadow::{colored_jones_lead, complement_volume, HolonomyParams, ShadowLink};
use sixjvol_core::sixj::{sixj_lead, AdmissibleSix, ThetaSix};
use sixjvol_core::Half;

#[derive(Parser)]
#[command(
    name = "sixjvol",
    version,
    about = "6j-symbols at roots of unity, truncated-tetrahedron volumes, and convergence experiments",
    after_help = "Set SIXJVOL_THREADS to cap experiment parallelism (0 = auto)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Lobachevsky function Λ(x) (radians)
    Lob {
        #[arg(long)]
        x: f64,
    },
    /// Dilogarithm Li₂(z) on the closed unit disk
    Dilog {
        /// z as "re,im"
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        z: Vec<f64>,
    },
    /// Classify a real 6-tuple (R-admissible / RT-type / hyperbolic-type)
    Classify {
        #[arg(long, value_delimiter = ',')]
        theta: Vec<f64>,
    },
    /// Leading Laurent coefficient of a 6j-symbol at q_n
    Sixj {
        /// six colors as half-integers, e.g. "1,1,1,1,1,1" or "0.5,0.5,1,0.5,0.5,1"
        #[arg(long, value_delimiter = ',', conflicts_with = "b2", required_unless_present = "b2")]
        b: Option<Vec<f64>>,
        /// six doubled colors (exact half-integers), e.g. "2,2,2,2,2,2" for b = 1,…
        #[arg(long, value_delimiter = ',')]
        b2: Option<Vec<i64>>,
        /// root order of q_n = exp(2πi/n)
        #[arg(long)]
        n: u32,
    },
    /// Volume of a truncated tetrahedron from its six dihedral angles
    TetraVol {
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<f64>,
    },
    /// Volume of a D-block D(u)
    DblockVol {
        #[arg(long, value_delimiter = ',')]
        u: Vec<f64>,
    },
    /// Leading coefficient of the colored Jones invariant of a shadow link
    Jones {
        #[arg(long)]
        link: PathBuf,
        /// r colors as half-integers
        #[arg(long, value_delimiter = ',', conflicts_with = "b2", required_unless_present = "b2")]
        b: Option<Vec<f64>>,
        /// r doubled colors
        #[arg(long, value_delimiter = ',')]
        b2: Option<Vec<i64>>,
        #[arg(long)]
        n: u32,
    },
    /// Volume of the deformed link complement (one D-block per vertex)
    LinkVol {
        #[arg(long)]
        link: PathBuf,
        /// r meridian deformation parameters (a = 0 is the complete structure)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<f64>,
    },
    /// Convergence table of (2π/n)·log|ev(\[n\]·6j)| toward the doubled tetrahedron volume
    ConvergeSixj {
        #[arg(long, value_delimiter = ',')]
        theta: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        ns: Vec<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Convergence table of (2π/n)·log|ev(J)| toward the complement volume
    ConvergeGcv {
        #[arg(long)]
        link: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        ns: Vec<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_thread_pool();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!(
                "{}",
                serde_json::json!({ "error": e.code(), "message": e.to_string() })
            );
            if e.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

/// SIXJVOL_THREADS caps rayon parallelism; 0 or unset means automatic.
fn init_thread_pool() {
    if let Ok(v) = std::env::var("SIXJVOL_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            if k > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Lob { x } => {
            print_json(serde_json::json!({ "lambda": lobachevsky(x) }));
            Ok(())
        }
        Command::Dilog { z } => {
            let [re, im] = fixed::<_, 2>(&z, "z (re,im)")?;
            let v = dilog(Complex64::new(re, im))?;
            print_json(serde_json::json!({ "re": v.re, "im": v.im }));
            Ok(())
        }
        Command::Classify { theta } => {
            let t = ThetaSix::classify(fixed::<_, 6>(&theta, "theta")?)?;
            print_json(serde_json::json!({
                "class": t.class().as_str(),
                "triangles": t.triangles(),
                "squares": t.squares(),
            }));
            Ok(())
        }
        Command::Sixj { b, b2, n } => {
            require_root_order(n)?;
            let six = AdmissibleSix::new(fixed::<_, 6>(&colors(b, b2)?, "b")?)?;
            let need = experiments::required_table_arg(&six);
            let table = SineTable::new(n, need.max((2.6 * n as f64).ceil() as u32));
            print_json(lead_json(&sixj_lead(&six, &table)?));
            Ok(())
        }
        Command::TetraVol { alpha } => {
            let tetra = TruncTetra::new(fixed::<_, 6>(&alpha, "alpha")?)?;
            print_json(serde_json::json!({ "volume": volume_my(&tetra)? }));
            Ok(())
        }
        Command::DblockVol { u } => {
            let v = dblock_volume(&fixed::<_, 6>(&u, "u")?)?;
            print_json(serde_json::json!({ "volume": v }));
            Ok(())
        }
        Command::Jones { link, b, b2, n } => {
            require_root_order(n)?;
            let link = ShadowLink::from_path(&link)?;
            let b = colors(b, b2)?;
            let mut need = 0u32;
            for vertex in 0..link.g {
                if b.len() == link.r {
                    if let Ok(six) = AdmissibleSix::new(link.induced_colors(vertex, &b)) {
                        need = need.max(experiments::required_table_arg(&six));
                    }
                }
            }
            let table = SineTable::new(n, need.max((2.6 * n as f64).ceil() as u32));
            print_json(lead_json(&colored_jones_lead(&link, &b, &table)?));
            Ok(())
        }
        Command::LinkVol { link, a } => {
            let link = ShadowLink::from_path(&link)?;
            let v = complement_volume(&link, &HolonomyParams::new(a))?;
            print_json(serde_json::json!({ "volume": v }));
            Ok(())
        }
        Command::ConvergeSixj { theta, ns, out, format } => {
            let t = ThetaSix::classify(fixed::<_, 6>(&theta, "theta")?)?;
            let rows = experiments::converge_sixj(&t, &ns)?;
            emit_rows(&rows, format, out)
        }
        Command::ConvergeGcv { link, a, ns, out, format } => {
            let link = ShadowLink::from_path(&link)?;
            let rows = experiments::converge_gcv(&link, &HolonomyParams::new(a), &ns)?;
            emit_rows(&rows, format, out)
        }
    }
}

fn require_root_order(n: u32) -> Result<(), Error> {
    if n < 3 {
        return Err(Error::RootOrderTooSmall { n });
    }
    Ok(())
}

fn fixed<T: Copy, const K: usize>(values: &[T], what: &'static str) -> Result<[T; K], Error> {
    values.try_into().map_err(|_| Error::LengthMismatch {
        what,
        expected: K,
        actual: values.len(),
    })
}

/// Colors from `--b` (half-integers, exactness enforced) or `--b2`
/// (doubled integers).
fn colors(b: Option<Vec<f64>>, b2: Option<Vec<i64>>) -> Result<Vec<Half>, Error> {
    match (b, b2) {
        (Some(b), None) => b.into_iter().map(Half::try_from_f64).collect(),
        (None, Some(b2)) => Ok(b2.into_iter().map(Half::from_doubled).collect()),
        _ => unreachable!("clap enforces exactly one of --b/--b2"),
    }
}

fn sign_str(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "+1",
        Sign::Minus => "-1",
        Sign::Indeterminate => "indeterminate",
    }
}

fn lead_json(lead: &LaurentLead) -> serde_json::Value {
    if lead.is_zero() {
        serde_json::json!({
            "zero": true,
            "near_cancellation": lead.near_cancellation(),
        })
    } else {
        serde_json::json!({
            "order": lead.order(),
            "log_mag": lead.log_mag(),
            "sign": sign_str(lead.sign()),
            "phase_units": lead.phase_units(),
            "near_cancellation": lead.near_cancellation(),
        })
    }
}

fn print_json(value: serde_json::Value) {
    println!("{value}");
}

fn emit_rows(rows: &[ConvergenceRow], format: Format, out: Option<PathBuf>) -> Result<(), Error> {
    let text = match format {
        Format::Csv => csv_string(rows),
        Format::Json => {
            let mut s = serde_json::to_string(rows).expect("rows serialize");
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(text.as_bytes())?;
        }
        None => print!("{text}"),
    }
    Ok(())
}
