//! Command line front end: validates algebra files, computes braid quiver
//! invariants (optionally cocycle weighted), exports quivers as DOT,
//! explores degree-two cohomology, and compares words by their invariants.
//!
//! Exit codes: 0 on success, 1 when a semantic check fails (an algebra
//! violates the axioms, a cochain is not a cocycle, two words are
//! distinguished), 2 for usage and input errors.

use braidforge_core::algebra::{load_algebra, FiniteBirack, LoadError, LoadedAlgebra};
use braidforge_core::braidword::{parse_word, BraidWord};
use braidforge_core::catalog::{self, CatalogEntry};
use braidforge_core::cocycle_quiver::{
    build_weighted_quiver_opts, edge_polynomial, vertex_polynomial, WeightedQuiver,
};
use braidforge_core::homology::{
    format_cochain2, in_span, is_two_cocycle, load_cochain2, two_cocycle_basis, Cochain2,
};
use braidforge_core::quiver::{
    build_quiver_opts, closure_coloring_count, export_dot, quiver_polynomial, BraidQuiver,
};
use braidforge_core::representation::{SweepOptions, DEFAULT_MAX_VERTICES};
use clap::{Args, Parser, Subcommand};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "braidforge", version, about = "Braid invariants from finite biracks and switches")]
struct Cli {
    /// Worker threads for state sweeps; 0 keeps the library default.
    #[arg(long, global = true, env = "BRAIDFORGE_THREADS", default_value_t = 0)]
    threads: usize,

    /// Largest number of colored states a sweep may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AlgebraSource {
    /// Path to an algebra file.
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,

    /// Name of a built-in algebra.
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra file against the axioms.
    Validate {
        #[arg(long, value_name = "FILE")]
        algebra: PathBuf,
    },
    /// Cycle-structure invariants of one braid word.
    Invariant {
        #[command(flatten)]
        source: AlgebraSource,
        /// Number of strands the word acts on.
        #[arg(long)]
        strands: usize,
        /// Letters of the word, space separated; negative letters invert.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        /// Bundled cocycle name or cochain file, for weighted invariants.
        #[arg(long, value_name = "NAME_OR_FILE")]
        cocycle: Option<String>,
        /// Also count the colorings fixed by this power of the word.
        #[arg(long)]
        power: Option<u32>,
    },
    /// Export the action graph of one braid word in DOT format.
    Quiver {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        /// Bundled cocycle name or cochain file, to label vertices with weights.
        #[arg(long, value_name = "NAME_OR_FILE")]
        cocycle: Option<String>,
        /// Write the DOT text here instead of standard output.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Degree-two cocycle checks and cohomology dimensions.
    Cocycle {
        #[command(flatten)]
        source: AlgebraSource,
        #[command(subcommand)]
        action: CocycleAction,
    },
    /// Compare two words by every invariant the inputs support.
    Distinguish {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word_a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word_b: String,
        #[arg(long, value_name = "NAME_OR_FILE")]
        cocycle: Option<String>,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CocycleAction {
    /// Check that a cochain file is a two-cocycle of the algebra.
    Check {
        #[arg(value_name = "FILE")]
        file: PathBuf,
    },
    /// Dimensions of the cocycle, coboundary, and quotient spaces.
    Basis {
        /// Prime modulus for the coefficients.
        #[arg(long)]
        modulus: u32,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the built-in algebras.
    List,
    /// Print a built-in algebra (or one of its cocycles) as a loadable file.
    Show {
        #[arg(value_name = "NAME")]
        name: String,
        /// Print this bundled cocycle instead of the algebra.
        #[arg(long, value_name = "NAME")]
        cocycle: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(error) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: cannot use {} threads: {error}", cli.threads);
            return ExitCode::from(2);
        }
    }
    let opts = SweepOptions {
        max_vertices: cli.max_vertices,
        ..SweepOptions::default()
    };
    match run(cli.command, opts) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|error| format!("cannot read {}: {error}", path.display()))
}

impl AlgebraSource {
    fn load(&self) -> Result<(LoadedAlgebra, Option<&'static CatalogEntry>), String> {
        if let Some(path) = &self.algebra {
            let text = read_file(path)?;
            let algebra =
                load_algebra(&text).map_err(|error| format!("{}: {error}", path.display()))?;
            Ok((algebra, None))
        } else {
            let name = self.catalog.as_deref().expect("the group is required");
            let entry =
                catalog::find(name).ok_or_else(|| format!("no catalog entry named `{name}`"))?;
            Ok((entry.algebra.clone(), Some(entry)))
        }
    }
}

fn assemble_word(strands: usize, letters: &str) -> Result<BraidWord, String> {
    parse_word(&format!("{strands} : {letters}")).map_err(|error| error.to_string())
}

fn require_birack(algebra: &LoadedAlgebra) -> Result<&FiniteBirack, String> {
    algebra
        .birack()
        .ok_or_else(|| "cocycle weights need a birack, but this algebra is a plain switch".into())
}

/// Resolves a cocycle argument: a bundled name when the source is a catalog
/// entry carrying one, otherwise a cochain file path.
fn resolve_cocycle(
    spec: &str,
    entry: Option<&'static CatalogEntry>,
) -> Result<Cochain2, String> {
    if let Some(cochain) = entry.and_then(|e| e.cocycle(spec)) {
        return Ok(cochain.clone());
    }
    let path = Path::new(spec);
    let text = read_file(path)?;
    load_cochain2(&text).map_err(|error| format!("{spec}: {error}"))
}

fn plain_quiver(
    algebra: &LoadedAlgebra,
    word: &BraidWord,
    opts: SweepOptions,
) -> Result<BraidQuiver, String> {
    build_quiver_opts(&algebra.switch(), word, opts).map_err(|error| error.to_string())
}

fn weighted_quiver(
    algebra: &LoadedAlgebra,
    phi: &Cochain2,
    word: &BraidWord,
    opts: SweepOptions,
) -> Result<WeightedQuiver, String> {
    let birack = require_birack(algebra)?;
    build_weighted_quiver_opts(birack, phi, word, opts).map_err(|error| error.to_string())
}

fn run(command: Command, opts: SweepOptions) -> Result<ExitCode, String> {
    match command {
        Command::Validate { algebra } => {
            let text = read_file(&algebra)?;
            match load_algebra(&text) {
                Ok(loaded) => {
                    println!("ok: {} of size {}", loaded.kind_name(), loaded.size());
                    Ok(ExitCode::SUCCESS)
                }
                Err(LoadError::Algebra(error)) => {
                    println!("invalid: {error}");
                    Ok(ExitCode::from(1))
                }
                Err(LoadError::Parse(error)) => {
                    Err(format!("{}: {error}", algebra.display()))
                }
            }
        }

        Command::Invariant {
            source,
            strands,
            word,
            cocycle,
            power,
        } => {
            let (algebra, entry) = source.load()?;
            let word = assemble_word(strands, &word)?;
            let quiver = match cocycle {
                None => {
                    let quiver = plain_quiver(&algebra, &word, opts)?;
                    println!("quiver polynomial: {}", quiver_polynomial(&quiver));
                    quiver
                }
                Some(spec) => {
                    let phi = resolve_cocycle(&spec, entry)?;
                    let weighted = weighted_quiver(&algebra, &phi, &word, opts)?;
                    println!("quiver polynomial: {}", quiver_polynomial(weighted.quiver()));
                    println!("vertex polynomial: {}", vertex_polynomial(&weighted));
                    println!("edge polynomial: {}", edge_polynomial(&weighted));
                    weighted.quiver().clone()
                }
            };
            if let Some(power) = power {
                if power == 0 {
                    return Err("the closure power must be at least 1".into());
                }
                println!(
                    "closure colorings for power {power}: {}",
                    closure_coloring_count(&quiver, power)
                );
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Quiver {
            source,
            strands,
            word,
            cocycle,
            dot,
        } => {
            let (algebra, entry) = source.load()?;
            let word = assemble_word(strands, &word)?;
            let text = match cocycle {
                None => export_dot(&plain_quiver(&algebra, &word, opts)?, "quiver"),
                Some(spec) => {
                    let phi = resolve_cocycle(&spec, entry)?;
                    export_dot(weighted_quiver(&algebra, &phi, &word, opts)?.quiver(), "quiver")
                }
            };
            match dot {
                None => print!("{text}"),
                Some(path) => fs::write(&path, text)
                    .map_err(|error| format!("cannot write {}: {error}", path.display()))?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Cocycle { source, action } => {
            let (algebra, entry) = source.load()?;
            let birack = require_birack(&algebra)?;
            match action {
                CocycleAction::Check { file } => {
                    let text = read_file(&file)?;
                    let cochain =
                        load_cochain2(&text).map_err(|error| format!("{}: {error}", file.display()))?;
                    if cochain.size() != birack.size() {
                        return Err(format!(
                            "cochain covers a set of size {}, the algebra has size {}",
                            cochain.size(),
                            birack.size()
                        ));
                    }
                    match is_two_cocycle(birack, &cochain) {
                        Ok(()) => {
                            println!("cocycle: ok");
                            Ok(ExitCode::SUCCESS)
                        }
                        Err(violation) => {
                            println!("not a cocycle: {violation}");
                            Ok(ExitCode::from(1))
                        }
                    }
                }
                CocycleAction::Basis { modulus } => {
                    let basis =
                        two_cocycle_basis(birack, modulus).map_err(|error| error.to_string())?;
                    println!("dim Z^2 = {}", basis.z2.len());
                    println!("dim B^2 = {}", basis.b2.len());
                    println!("dim H^2 = {}", basis.h2_dim);
                    if let Some(entry) = entry {
                        for (name, cochain) in &entry.cocycles {
                            if cochain.modulus() != modulus {
                                continue;
                            }
                            let class = if in_span(&basis.b2, cochain)
                                .map_err(|error| error.to_string())?
                                .is_some()
                            {
                                "a coboundary"
                            } else {
                                "a nontrivial class"
                            };
                            println!("{name}: {class}");
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }

        Command::Distinguish {
            source,
            strands,
            word_a,
            word_b,
            cocycle,
        } => {
            let (algebra, entry) = source.load()?;
            let a = assemble_word(strands, &word_a)?;
            let b = assemble_word(strands, &word_b)?;
            let mut comparisons: Vec<(&str, String, String)> = Vec::new();
            match cocycle {
                None => {
                    let qa = plain_quiver(&algebra, &a, opts)?;
                    let qb = plain_quiver(&algebra, &b, opts)?;
                    comparisons.push((
                        "quiver polynomial",
                        quiver_polynomial(&qa).to_string(),
                        quiver_polynomial(&qb).to_string(),
                    ));
                }
                Some(spec) => {
                    let phi = resolve_cocycle(&spec, entry)?;
                    let wa = weighted_quiver(&algebra, &phi, &a, opts)?;
                    let wb = weighted_quiver(&algebra, &phi, &b, opts)?;
                    comparisons.push((
                        "quiver polynomial",
                        quiver_polynomial(wa.quiver()).to_string(),
                        quiver_polynomial(wb.quiver()).to_string(),
                    ));
                    comparisons.push((
                        "vertex polynomial",
                        vertex_polynomial(&wa).to_string(),
                        vertex_polynomial(&wb).to_string(),
                    ));
                    comparisons.push((
                        "edge polynomial",
                        edge_polynomial(&wa).to_string(),
                        edge_polynomial(&wb).to_string(),
                    ));
                }
            }
            for (label, left, right) in comparisons {
                if left != right {
                    println!("distinguished by {label}: {left} vs {right}");
                    return Ok(ExitCode::from(1));
                }
            }
            println!("indistinguishable by these invariants");
            Ok(ExitCode::SUCCESS)
        }

        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for entry in catalog::entries() {
                    println!(
                        "{:<12} {} of size {:>2}   {}",
                        entry.name,
                        entry.algebra.kind_name(),
                        entry.algebra.size(),
                        entry.description
                    );
                }
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Show { name, cocycle } => {
                let entry = catalog::find(&name)
                    .ok_or_else(|| format!("no catalog entry named `{name}`"))?;
                match cocycle {
                    None => print!("{}", braidforge_core::algebra::format_algebra(&entry.algebra)),
                    Some(cocycle_name) => {
                        let cochain = entry.cocycle(&cocycle_name).ok_or_else(|| {
                            format!("`{name}` has no bundled cocycle named `{cocycle_name}`")
                        })?;
                        print!("{}", format_cochain2(cochain));
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}
