//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when the input is mathematically invalid
//! (bad brace, bad Gauss code, failed move check) and 2 on usage or I/O
//! errors.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::{BraceFile, SkewBrace};
use crate::biquandle::{derive_biquandle, derive_biquandle_unchecked, is_involutive};
use crate::coloring::solve;
use crate::diagram::{build_constraints, parse_gauss_code, parse_link_file, random_moves, NamedLink};
use crate::invariants::{accumulate, compute_invariants, Invariants};
use crate::structures::enumerate_ideals;

/// Environment variable read for the default worker count.
pub const THREADS_ENV: &str = "SKEWBRACE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "skewbrace", version, about = "Skew brace invariants of classical and virtual links")]
pub struct RunConfig {
    /// Worker threads for coloring enumeration (default: all cores)
    #[arg(long, global = true, env = THREADS_ENV)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct LinkArgs {
    /// Link file with `name := code` lines
    pub link: Option<PathBuf>,
    /// Inline Gauss code instead of a link file
    #[arg(long, conflicts_with = "link")]
    pub code: Option<String>,
    /// Which link of a multi-link file to use
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantType {
    Count,
    Sb,
    Ideal,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a pair of structure tables is a skew brace
    Validate { brace: PathBuf },
    /// Print the derived ⊴ and ⊵ tables
    Biquandle {
        brace: PathBuf,
        /// Also print the axiom report
        #[arg(long)]
        axioms: bool,
    },
    /// List all nonempty ideals, one per line
    Ideals { brace: PathBuf },
    /// List all colorings of a link
    Color {
        brace: PathBuf,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Compute an invariant of a link
    Invariant {
        brace: PathBuf,
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long = "type", value_enum, default_value = "sb")]
        kind: InvariantType,
        #[arg(long)]
        json: bool,
    },
    /// Compare invariants across random R1/R2 rewrites of a link
    CheckMoves {
        brace: PathBuf,
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Moves per trial are drawn from 1..=max-moves
        #[arg(long, default_value_t = 3)]
        max_moves: usize,
    },
    /// One invariant line per link of a link file
    Batch {
        brace: PathBuf,
        links: PathBuf,
        #[arg(long = "type", value_enum, default_value = "all")]
        kind: InvariantType,
        #[arg(long)]
        json: bool,
    },
}

/// A failed run, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(format!("write failed: {e}"))
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    if let Some(jobs) = config.jobs {
        // the global pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match execute(&config.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_brace(path: &Path) -> Result<SkewBrace, CliError> {
    let text = read(path)?;
    let file: BraceFile = text
        .parse()
        .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    file.to_brace()
        .map_err(|e| CliError::Domain(format!("{}: invalid skew brace: {e}", path.display())))
}

fn load_links(path: &Path) -> Result<Vec<NamedLink>, CliError> {
    let text = read(path)?;
    parse_link_file(&text).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn resolve_link(args: &LinkArgs) -> Result<NamedLink, CliError> {
    if let Some(code) = &args.code {
        let diagram =
            parse_gauss_code(code).map_err(|e| CliError::Domain(format!("--code: {e}")))?;
        return Ok(NamedLink {
            name: "code".into(),
            diagram,
        });
    }
    let path = args
        .link
        .as_ref()
        .ok_or_else(|| CliError::Usage("a link file or --code is required".into()))?;
    let links = load_links(path)?;
    match &args.name {
        Some(name) => links.into_iter().find(|l| &l.name == name).ok_or_else(|| {
            CliError::Usage(format!("no link named {name:?} in {}", path.display()))
        }),
        None if links.len() == 1 => Ok(links.into_iter().next().expect("one link")),
        None if links.is_empty() => {
            Err(CliError::Usage(format!("{} contains no links", path.display())))
        }
        None => {
            let names: Vec<&str> = links.iter().map(|l| l.name.as_str()).collect();
            Err(CliError::Usage(format!(
                "{} holds several links ({}); choose one with --name",
                path.display(),
                names.join(", ")
            )))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn invariant_text(inv: &Invariants, kind: InvariantType) -> String {
    match kind {
        InvariantType::Count => inv.count.to_string(),
        InvariantType::Sb => inv.sb.to_string(),
        InvariantType::Ideal => inv.ideal.to_string(),
        InvariantType::All => format!("count={} sb={} ideal={}", inv.count, inv.sb, inv.ideal),
    }
}

fn invariant_json(inv: &Invariants, kind: InvariantType) -> serde_json::Value {
    match kind {
        InvariantType::Count => json!({ "count": inv.count }),
        InvariantType::Sb => inv.sb.to_json(),
        InvariantType::Ideal => inv.ideal.to_json(),
        InvariantType::All => json!({
            "count": inv.count,
            "sb": inv.sb.to_json(),
            "ideal": inv.ideal.to_json(),
        }),
    }
}

/// Runs one parsed command, writing results to `out`.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Validate { brace } => {
            let b = load_brace(brace)?;
            writeln!(
                out,
                "valid skew brace, n={}, *-commutative: {}, involutive: {}",
                b.size(),
                yes_no(b.is_star_commutative()),
                yes_no(is_involutive(&b))
            )?;
        }
        Command::Biquandle { brace, axioms } => {
            let b = load_brace(brace)?;
            let bq = derive_biquandle(&b).map_err(|e| CliError::Domain(e.to_string()))?;
            write!(out, "{}", bq.tables_text())?;
            if *axioms {
                writeln!(out)?;
                write!(out, "{}", crate::biquandle::verify_biquandle_axioms(&bq))?;
            }
        }
        Command::Ideals { brace } => {
            let b = load_brace(brace)?;
            for ideal in enumerate_ideals(&b) {
                writeln!(out, "{}", ideal.to_csv())?;
            }
        }
        Command::Color { brace, link } => {
            let b = load_brace(brace)?;
            let link = resolve_link(link)?;
            let bq = derive_biquandle_unchecked(&b);
            let sys = build_constraints(&link.diagram);
            let header: Vec<String> = (0..sys.semiarc_count).map(|s| s.to_string()).collect();
            writeln!(out, "# semiarcs: {}", header.join(" "))?;
            for c in solve(&bq, &sys) {
                writeln!(out, "{c}")?;
            }
        }
        Command::Invariant {
            brace,
            link,
            kind,
            json,
        } => {
            let b = load_brace(brace)?;
            let link = resolve_link(link)?;
            let inv = compute_invariants(&b, &link.diagram);
            if *json {
                writeln!(out, "{}", invariant_json(&inv, *kind))?;
            } else {
                writeln!(out, "{}", invariant_text(&inv, *kind))?;
            }
        }
        Command::CheckMoves {
            brace,
            link,
            trials,
            seed,
            max_moves,
        } => {
            let b = load_brace(brace)?;
            let link = resolve_link(link)?;
            check_moves(&b, &link, *trials, *seed, *max_moves, out)?;
        }
        Command::Batch {
            brace,
            links,
            kind,
            json,
        } => {
            let b = load_brace(brace)?;
            let bq = derive_biquandle_unchecked(&b);
            for link in load_links(links)? {
                let colorings = solve(&bq, &build_constraints(&link.diagram));
                let inv = accumulate(&b, &bq, &colorings);
                if *json {
                    let mut v = json!({ "name": link.name });
                    v["value"] = invariant_json(&inv, *kind);
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "{}: {}", link.name, invariant_text(&inv, *kind))?;
                }
            }
        }
    }
    Ok(())
}

fn check_moves(
    brace: &SkewBrace,
    link: &NamedLink,
    trials: usize,
    seed: u64,
    max_moves: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if max_moves == 0 {
        return Err(CliError::Usage("--max-moves must be at least 1".into()));
    }
    let base = compute_invariants(brace, &link.diagram);
    writeln!(
        out,
        "{}: {}",
        link.name,
        invariant_text(&base, InvariantType::All)
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let moves = rng.random_range(1..=max_moves);
        let d = random_moves(&link.diagram, moves, &mut rng);
        let inv = compute_invariants(brace, &d);
        if inv != base {
            return Err(CliError::Domain(format!(
                "trial {trial}: invariants changed on {d}: {}",
                invariant_text(&inv, InvariantType::All)
            )));
        }
    }
    writeln!(
        out,
        "{trials} trials (seed {seed}): invariants unchanged under R1/R2 moves"
    )?;
    Ok(())
}
