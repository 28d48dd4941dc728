//! Command-line front end: argument parsing, command dispatch and the JSON
//! report format.

pub mod commands;
pub mod report;
mod verify;

use clap::{Parser, Subcommand};

use commands::{CliError, Options, Outcome, Source};

#[derive(Debug, Parser)]
#[command(name = "gentle", version, about = "Invariants of gentle and locally gentle algebras kQ/I")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report on stdout instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Restrict per-vertex commands to this vertex.
    #[arg(long, global = true, value_name = "V")]
    pub vertex: Option<String>,
    /// Cohomological degree for `ext`.
    #[arg(long, global = true, value_name = "I")]
    pub degree: Option<usize>,
    /// Number of terms kept from an infinite projective resolution.
    #[arg(long, global = true, default_value_t = 32, value_name = "K")]
    pub steps: usize,
    /// Path-length bound for brute-force checks.
    #[arg(long, global = true, default_value_t = 12, value_name = "N")]
    pub truncation: usize,
    /// Number of Hilbert series coefficients to print.
    #[arg(long, global = true, default_value_t = 20, value_name = "T")]
    pub terms: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a presentation is gentle or locally gentle.
    Validate { input: String },
    /// Homological and ring-theoretic invariants.
    Invariants { input: String },
    /// The Hilbert series as a rational function and its expansion.
    Hilbert { input: String },
    /// The Koszul dual presentation.
    Dual { input: String },
    /// The partition of the arrows into maximal paths.
    Maximal { input: String },
    /// Generators of the center.
    Center { input: String },
    /// The prime ideals and their inclusions.
    Spectrum {
        input: String,
        /// Also instantiate the polynomial family at this polynomial in t.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Minimal graded projective resolutions of the simples.
    ResolveProj { input: String },
    /// Graded injective resolutions of the indecomposable projectives.
    ResolveInj { input: String },
    /// `Ext^i(S(v), A)` for `i = --degree`.
    Ext { input: String },
    /// One-line classification.
    Classify { input: String },
    /// Cross-check closed forms against the truncated algebra.
    Verify { input: String },
    /// Every gentle relation set on a bare quiver.
    Enumerate {
        input: String,
        /// Classify each enumerated presentation.
        #[arg(long)]
        classify: bool,
    },
}

impl Command {
    fn input(&self) -> &str {
        match self {
            Command::Validate { input }
            | Command::Invariants { input }
            | Command::Hilbert { input }
            | Command::Dual { input }
            | Command::Maximal { input }
            | Command::Center { input }
            | Command::Spectrum { input, .. }
            | Command::ResolveProj { input }
            | Command::ResolveInj { input }
            | Command::Ext { input }
            | Command::Classify { input }
            | Command::Verify { input }
            | Command::Enumerate { input, .. } => input,
        }
    }
}

impl Cli {
    fn options(&self) -> Options {
        Options {
            vertex: self.vertex.clone(),
            degree: self.degree,
            steps: self.steps,
            truncation: self.truncation,
            terms: self.terms,
            classify: matches!(self.command, Command::Enumerate { classify: true, .. }),
            poly: match &self.command {
                Command::Spectrum { poly, .. } => poly.clone(),
                _ => None,
            },
        }
    }
}

/// Runs one command. Errors carry their exit code.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = cli.options();
    let source = Source::load(cli.command.input())?;
    if let Command::Enumerate { .. } = cli.command {
        return commands::enumerate(&source, &opts);
    }
    let p = source.presentation()?;
    Ok(match cli.command {
        Command::Validate { .. } => commands::validate(&p),
        Command::Invariants { .. } => commands::invariants(&p),
        Command::Hilbert { .. } => commands::hilbert(&p, &opts),
        Command::Dual { .. } => commands::dual(&p),
        Command::Maximal { .. } => commands::maximal(&p),
        Command::Center { .. } => commands::center_cmd(&p),
        Command::Spectrum { .. } => commands::spectrum(&p, &opts)?,
        Command::ResolveProj { .. } => commands::resolve_proj(&p, &opts)?,
        Command::ResolveInj { .. } => commands::resolve_inj(&p, &opts)?,
        Command::Ext { .. } => commands::ext(&p, &opts)?,
        Command::Classify { .. } => commands::classify_cmd(&p),
        Command::Verify { .. } => commands::verify(&p, &opts),
        Command::Enumerate { .. } => unreachable!("handled above"),
    })
}
