//! `equivar`: equivariant mod-2 cohomology, Smith sequences and surface
//! formulas from the command line. Every command prints one report, JSON by
//! default.

mod commands;
mod error;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equivar::equivariant::{FiltrationKind, PageMethod};
use equivar::fixtures;
use equivar::formulas::{EnriquesLatticeInvariants, HodgeInput, SurfaceCohomologyProfile};

use commands::FormulaArgs;
use error::{CliError, EXIT_OK};
use input::{sha256_hex, ComplexFile};
use report::Report;

#[derive(Parser)]
#[command(
    name = "equivar",
    version,
    about = "Equivariant mod-2 cohomology of simplicial complexes with an involution"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Input {
    /// Complex file: {"vertices", "maximal_simplices", "involution"?}.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    path: Option<PathBuf>,
    /// Use a built-in model instead of a file.
    #[arg(long)]
    fixture: Option<String>,
    /// Do not subdivide a non-regular action.
    #[arg(long)]
    no_subdivide: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Pairing,
    Subquotient,
}

#[derive(Subcommand)]
enum Command {
    /// Mod-2 and rational Betti numbers of the complex, its fixed part and quotient.
    Cohomology(Input),
    /// Dimensions of the equivariant cohomology H^n(K; G, F₂).
    Equivariant {
        #[command(flatten)]
        input: Input,
        /// Highest degree; defaults to dim K + 3.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Pages of one of the two spectral sequences.
    Pages {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Kind::I)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Method::Pairing)]
        method: Method,
        /// Last page to print; defaults to dim K + 2.
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// The homological Smith exact sequence and its saturation data.
    Smith(Input),
    /// Obstruction to surjectivity of the component map.
    Obstruction(Input),
    /// Degeneration test for the second spectral sequence.
    Krasnov(Input),
    /// Lefschetz number against the Euler characteristic of the fixed part.
    Lefschetz(Input),
    /// Closed-form formulas; never reads a complex.
    Formulas {
        #[command(subcommand)]
        which: FormulaCommand,
    },
    /// Compares the surface formulas with the engine on a 4-dimensional model.
    CrossCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        h20: usize,
        #[arg(long, default_value_t = 0)]
        h11_minus: usize,
        #[arg(long, default_value_t = 0)]
        rho_plus: usize,
    },
    /// Runs every invariant check on the input.
    Verify(Input),
    /// Prints a built-in model as a complex file, or writes all of them.
    Fixtures {
        /// Fixture to print; omit to list the names.
        name: Option<String>,
        /// Write every fixture as NAME.json into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone, Copy)]
struct ProfileArgs {
    #[arg(long, default_value_t = 0)]
    b1: usize,
    #[arg(long, default_value_t = 0)]
    b2: usize,
    /// dim H²(X(ℂ); F₂); defaults to b2 + 2 b1.
    #[arg(long)]
    h2: Option<usize>,
    /// dim H²(X(ℂ); F₂)^G.
    #[arg(long, default_value_t = 0)]
    h2g: usize,
    #[arg(long, default_value_t = 0)]
    b2_plus: usize,
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long, default_value_t = 0)]
    total_fixed_betti: usize,
}

impl ProfileArgs {
    fn profile(&self) -> SurfaceCohomologyProfile {
        SurfaceCohomologyProfile {
            b1_mod2: self.b1,
            b2: self.b2,
            h2_mod2: self.h2.unwrap_or(self.b2 + 2 * self.b1),
            h2g_mod2: self.h2g,
            b2_plus: self.b2_plus,
            s: self.s,
            total_fixed_betti: self.total_fixed_betti,
        }
    }
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// Étale cohomology dimensions of a real surface.
    Etale {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Brauer dimension from H²_et and Pic/2.
    Kummer {
        #[arg(long)]
        h2_et: usize,
        #[arg(long)]
        pic: usize,
    },
    /// Brauer dimension of a real surface along every route.
    Brauer {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value_t = 0)]
        h20: usize,
        #[arg(long, default_value_t = 0)]
        h11_minus: usize,
        #[arg(long, default_value_t = 0)]
        rho_plus: usize,
    },
    /// Euler characteristic of the real part from the action on H².
    Lefschetz {
        #[arg(long)]
        b2_plus: usize,
        #[arg(long)]
        b2: usize,
    },
    /// Invariants of a real Enriques surface from lattice data.
    Enriques {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        alpha: u8,
        /// Sets both deltas.
        #[arg(long)]
        delta: Option<u8>,
        #[arg(long)]
        delta1: Option<u8>,
        #[arg(long)]
        delta2: Option<u8>,
        #[arg(long = "dimHminus", default_value_t = 0)]
        dim_h_minus: usize,
        #[arg(long = "dimHcap", default_value_t = 0)]
        dim_h_cap: usize,
        #[arg(long)]
        s_or: Option<usize>,
        #[arg(long)]
        s_nor: Option<usize>,
        /// One of the two liftings has no real points.
        #[arg(long)]
        lifting_without_real_points: bool,
    },
    /// Brauer dimension of a real Enriques surface from b and ε, with its bounds.
    Bounds {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        epsilon: u8,
        #[arg(long)]
        s: usize,
        /// The real part is empty.
        #[arg(long)]
        real_empty: bool,
    },
}

fn formula_args(which: &FormulaCommand) -> FormulaArgs {
    match *which {
        FormulaCommand::Etale {
            profile,
            max_degree,
        } => FormulaArgs::Etale {
            profile: profile.profile(),
            max_degree,
        },
        FormulaCommand::Kummer { h2_et, pic } => FormulaArgs::Kummer { h2_et, pic },
        FormulaCommand::Brauer {
            profile,
            h20,
            h11_minus,
            rho_plus,
        } => FormulaArgs::Brauer {
            profile: profile.profile(),
            hodge: HodgeInput {
                h20,
                h11_minus,
                rho_plus,
            },
        },
        FormulaCommand::Lefschetz { b2_plus, b2 } => FormulaArgs::Lefschetz { b2_plus, b2 },
        FormulaCommand::Enriques {
            r,
            a,
            alpha,
            delta,
            delta1,
            delta2,
            dim_h_minus,
            dim_h_cap,
            s_or,
            s_nor,
            lifting_without_real_points,
        } => FormulaArgs::Enriques(EnriquesLatticeInvariants {
            r_theta: r,
            a_theta: a,
            alpha_sigma: alpha,
            delta1: delta1.or(delta).unwrap_or(0),
            delta2: delta2.or(delta).unwrap_or(0),
            dim_h_minus,
            dim_hperp_cap: dim_h_cap,
            s_or,
            s_nor,
            both_liftings_real: !lifting_without_real_points,
        }),
        FormulaCommand::Bounds {
            b,
            epsilon,
            s,
            real_empty,
        } => FormulaArgs::Bounds {
            b,
            epsilon,
            s,
            real_nonempty: !real_empty,
        },
    }
}

fn load(input: &Input) -> Result<input::Loaded, CliError> {
    input::load(input.path.as_deref(), input.fixture.as_deref(), input.no_subdivide)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Cohomology(_) => "cohomology",
        Command::Equivariant { .. } => "equivariant",
        Command::Pages { .. } => "pages",
        Command::Smith(_) => "smith",
        Command::Obstruction(_) => "obstruction",
        Command::Krasnov(_) => "krasnov",
        Command::Lefschetz(_) => "lefschetz",
        Command::Formulas { .. } => "formulas",
        Command::CrossCheck { .. } => "cross-check",
        Command::Verify(_) => "verify",
        Command::Fixtures { .. } => "fixtures",
    }
}

fn fixtures_command(name: Option<&str>, out: Option<&PathBuf>) -> Result<Option<String>, CliError> {
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::parse("io.write_failed", format!("{}: {e}", dir.display())))?;
        for n in fixtures::NAMES {
            let ic = fixtures::named(n).expect("listed fixture");
            let path = dir.join(format!("{n}.json"));
            std::fs::write(&path, ComplexFile::from_involutive(&ic).to_json() + "\n").map_err(
                |e| CliError::parse("io.write_failed", format!("{}: {e}", path.display())),
            )?;
        }
        return Ok(None);
    }
    match name {
        Some(n) => {
            let ic = fixtures::named(n).ok_or_else(|| {
                CliError::parse("input.unknown_fixture", format!("unknown fixture {n:?}"))
            })?;
            Ok(Some(ComplexFile::from_involutive(&ic).to_json()))
        }
        None => Ok(Some(fixtures::NAMES.join("\n"))),
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Cohomology(i) => commands::cohomology(&load(i)?),
        Command::Equivariant { input, max_degree } => {
            commands::equivariant(&load(input)?, *max_degree)
        }
        Command::Pages {
            input,
            kind,
            method,
            r_max,
            max_degree,
        } => {
            let kind = match kind {
                Kind::I => FiltrationKind::I,
                Kind::II => FiltrationKind::II,
            };
            let method = match method {
                Method::Pairing => PageMethod::Pairing,
                Method::Subquotient => PageMethod::Subquotient,
            };
            commands::pages(&load(input)?, kind, method, *r_max, *max_degree)
        }
        Command::Smith(i) => commands::smith(&load(i)?),
        Command::Obstruction(i) => commands::obstruction(&load(i)?),
        Command::Krasnov(i) => commands::krasnov(&load(i)?),
        Command::Lefschetz(i) => commands::lefschetz(&load(i)?),
        Command::Formulas { which } => {
            let args: Vec<String> = std::env::args().skip(1).collect();
            commands::formulas(&formula_args(which), sha256_hex(args.join("\0").as_bytes()))
        }
        Command::CrossCheck {
            input,
            h20,
            h11_minus,
            rho_plus,
        } => commands::cross_check(
            &load(input)?,
            &HodgeInput {
                h20: *h20,
                h11_minus: *h11_minus,
                rho_plus: *rho_plus,
            },
        ),
        Command::Verify(i) => commands::verify(&load(i)?),
        Command::Fixtures { .. } => unreachable!("handled before dispatch"),
    }
}

/// Writes to stdout; a closed pipe downstream is not an error worth a panic.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Json => write_stdout(&(report.to_json() + "\n")),
        Format::Text => write_stdout(&report.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Fixtures { name, out } = &cli.command {
        return match fixtures_command(name.as_deref(), out.as_ref()) {
            Ok(text) => {
                if let Some(text) = text {
                    write_stdout(&(text + "\n"));
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error [{}]: {}", e.code, e.message);
                ExitCode::from(e.exit as u8)
            }
        };
    }
    let (report, code) = match run(&cli) {
        Ok(r) => {
            let code = r.exit_code();
            (r, code)
        }
        Err(e) => {
            eprintln!("error [{}]: {}", e.code, e.message);
            (Report::failed(command_name(&cli.command), &e), e.exit)
        }
    };
    emit(&report, cli.format);
    if code == EXIT_OK {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(code as u8)
    }
}
