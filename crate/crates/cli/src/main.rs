//! `dharm`: command-line front end for discrete-harmonic.
//!
//! Exit codes: 0 success (or "yes" for `check`), 1 a checked property is
//! false or an input violates a precondition, 2 usage or parse error, 3 an
//! internal invariant failed. Failures print one JSON record
//! `{"code", "message", "location"}` on stderr.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use discrete_harmonic::completion::complete;
use discrete_harmonic::format::{
    matrix_to_csv, parse_matrix, parse_matrix_with_holes, parse_poly, poly_to_json, poly_to_text,
    rational_to_string,
};
use discrete_harmonic::grid::{
    discrete_laplacian_matrix, evaluate_on_lattice, interpolates, is_inner_harmonic,
};
use discrete_harmonic::interpolate::{bilinear, telescopic};
use discrete_harmonic::poly::{discrete_laplacian_poly, generate_basis, is_discrete_harmonic};
use discrete_harmonic::sandpile::{gf_x, gf_x2_minus_y2, gf_y, phi};
use discrete_harmonic::{BiPoly, BorderSpec, Error, RatMatrix, SandConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "dharm",
    version,
    about = "Exact inner-harmonic matrices and discrete harmonic polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exit 0 if the matrix is inner-harmonic, 1 if not.
    Check {
        /// Matrix CSV (standard input if omitted).
        input: Option<PathBuf>,
    },
    /// Fill the `?` interior of a matrix CSV with its inner-harmonic completion.
    Complete { input: Option<PathBuf> },
    /// Discrete harmonic polynomial interpolating an inner-harmonic matrix.
    Interpolate {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Oracle::Telescopic)]
        oracle: Oracle,
        /// Re-evaluate the result on the lattice and re-check harmonicity.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Evaluate a polynomial (JSON or text) on the `size x size` lattice.
    Eval {
        input: Option<PathBuf>,
        #[arg(long)]
        size: usize,
    },
    /// Discrete Laplacian of a matrix (interior values) or, with `--poly`, of
    /// a polynomial.
    Laplacian {
        input: Option<PathBuf>,
        #[arg(long)]
        poly: bool,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Basis of the discrete harmonic polynomials up to a degree, one per line.
    Basis {
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Run the parallel sandpile and check that the functional of a
    /// generating function stays constant.
    SandpileVerify {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `i`, `j`, `i2-j2` or a matrix CSV file.
        #[arg(long)]
        gf: String,
        /// Initial heights are drawn from `0..=max-height`.
        #[arg(long, default_value_t = 4)]
        max_height: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Telescopic,
    Bilinear,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Json,
    Text,
}

struct Failure {
    exit: u8,
    code: &'static str,
    message: String,
    location: serde_json::Value,
}

impl Failure {
    fn new(exit: u8, code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            exit,
            code,
            message: message.into(),
            location: serde_json::Value::Null,
        }
    }

    fn checked(message: impl Into<String>) -> Self {
        Failure::new(1, "check_failed", message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::Parse { line, column, .. } => Failure {
                exit: 2,
                code: "parse_error",
                message,
                location: json!({ "line": line, "column": column }),
            },
            Error::Invariant(_) => Failure::new(3, "invariant_violation", message),
            Error::Construction(_) => Failure::new(3, "construction_failed", message),
            Error::Size(_) | Error::Range { .. } | Error::Dimension(_) => {
                Failure::new(1, "size_error", message)
            }
            Error::Precondition(_) => Failure::new(1, "precondition_failed", message),
            Error::Singular { .. } => Failure::new(3, "singular_system", message),
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure {
            exit: 2,
            code: "io_error",
            message: format!("{}: {e}", p.display()),
            location: json!({ "file": p.display().to_string() }),
        }),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::new(2, "io_error", format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn write_poly(p: &BiPoly, format: PolyFormat) {
    match format {
        PolyFormat::Json => println!("{}", poly_to_json(p)),
        PolyFormat::Text => println!("{}", poly_to_text(p)),
    }
}

fn cmd_check(input: &Option<PathBuf>) -> Result<(), Failure> {
    let h = parse_matrix(&read_input(input)?)?;
    if is_inner_harmonic(&h)? {
        println!("inner-harmonic");
        Ok(())
    } else {
        println!("not inner-harmonic");
        Err(Failure::checked("matrix is not inner-harmonic"))
    }
}

fn cmd_complete(input: &Option<PathBuf>) -> Result<(), Failure> {
    let rows = parse_matrix_with_holes(&read_input(input)?)?;
    let size = rows.len();
    let on_border = |i: usize, j: usize| i == 0 || j == 0 || i + 1 == size || j + 1 == size;
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            if on_border(i, j) && cell.is_none() {
                return Err(Failure {
                    location: json!({ "line": i + 1, "column": j + 1 }),
                    ..Failure::new(2, "parse_error", "'?' on the border")
                });
            }
        }
    }
    let filled: Vec<_> = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|c| c.unwrap_or_else(num_traits::Zero::zero))
                .collect()
        })
        .collect();
    let m = RatMatrix::from_rows(filled)?;
    let c = complete(&BorderSpec::from_matrix(&m)?);
    print!("{}", matrix_to_csv(&c));
    Ok(())
}

fn cmd_interpolate(
    input: &Option<PathBuf>,
    oracle: Oracle,
    verify: bool,
    format: PolyFormat,
) -> Result<(), Failure> {
    let h = parse_matrix(&read_input(input)?)?;
    let p = match oracle {
        Oracle::Telescopic => telescopic(&h)?,
        Oracle::Bilinear => bilinear(&h),
    };
    write_poly(&p, format);
    if verify {
        if !interpolates(&p, &h) {
            return Err(Failure::new(
                3,
                "verify_failed",
                "polynomial does not interpolate the matrix",
            ));
        }
        if !is_discrete_harmonic(&p) {
            let exit = match oracle {
                Oracle::Telescopic => 3,
                Oracle::Bilinear => 1,
            };
            return Err(Failure::new(
                exit,
                "verify_failed",
                "polynomial is not discrete harmonic",
            ));
        }
        eprintln!("verified: degree {}", p.degree());
    }
    Ok(())
}

fn cmd_eval(input: &Option<PathBuf>, size: usize) -> Result<(), Failure> {
    if size == 0 {
        return Err(Failure::new(2, "usage_error", "--size must be positive"));
    }
    let p = parse_poly(&read_input(input)?)?;
    print!("{}", matrix_to_csv(&evaluate_on_lattice(&p, size)));
    Ok(())
}

fn cmd_laplacian(input: &Option<PathBuf>, poly: bool, format: PolyFormat) -> Result<(), Failure> {
    let text = read_input(input)?;
    if poly {
        write_poly(&discrete_laplacian_poly(&parse_poly(&text)?), format);
    } else {
        print!(
            "{}",
            matrix_to_csv(&discrete_laplacian_matrix(&parse_matrix(&text)?)?)
        );
    }
    Ok(())
}

fn cmd_basis(degree: u32, format: PolyFormat) -> Result<(), Failure> {
    for p in generate_basis(degree).elements {
        write_poly(&p, format);
    }
    Ok(())
}

fn cmd_sandpile(
    size: usize,
    steps: usize,
    seed: u64,
    gf: &str,
    max_height: u32,
) -> Result<(), Failure> {
    if size == 0 {
        return Err(Failure::new(2, "usage_error", "--size must be positive"));
    }
    let f = match gf {
        "i" => gf_x(size),
        "j" => gf_y(size),
        "i2-j2" => gf_x2_minus_y2(size),
        path => parse_matrix(&read_input(&Some(PathBuf::from(path)))?)?,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = SandConfig::random(size, max_height, &mut rng);
    let energy = c.energy();
    let start = phi(&f, &c)?;
    let mut violation = None;
    println!("step,energy,phi");
    println!("0,{energy},{}", rational_to_string(&start));
    for t in 1..=steps {
        c = c.step();
        let v = phi(&f, &c)?;
        println!("{t},{},{}", c.energy(), rational_to_string(&v));
        if violation.is_none() && (v != start || c.energy() != energy) {
            violation = Some(t);
        }
    }
    match violation {
        None => Ok(()),
        Some(t) => Err(Failure {
            location: json!({ "step": t }),
            ..Failure::checked("functional or energy changed")
        }),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { input } => cmd_check(&input),
        Command::Complete { input } => cmd_complete(&input),
        Command::Interpolate {
            input,
            oracle,
            verify,
            format,
        } => cmd_interpolate(&input, oracle, verify, format),
        Command::Eval { input, size } => cmd_eval(&input, size),
        Command::Laplacian {
            input,
            poly,
            format,
        } => cmd_laplacian(&input, poly, format),
        Command::Basis { degree, format } => cmd_basis(degree, format),
        Command::SandpileVerify {
            size,
            steps,
            seed,
            gf,
            max_height,
        } => cmd_sandpile(size, steps, seed, &gf, max_height),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                // --help and --version
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let record = json!({
                "code": "usage_error",
                "message": e.to_string().trim(),
                "location": serde_json::Value::Null,
            });
            eprintln!("{record}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let record = json!({
                "code": f.code,
                "message": f.message,
                "location": f.location,
            });
            eprintln!("{record}");
            ExitCode::from(f.exit)
        }
    }
}
