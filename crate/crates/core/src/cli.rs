//! Command-line front end. [`run`] takes the argument list and output
//! streams so it can be driven from tests.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canonical::{
    algorithm1_with_stats, canonical_from_worlds, canonical_one_fd, canonical_one_key, BuildMode,
    BuildOptions,
};
use crate::conflict::ConflictHypergraph;
use crate::constraints::{classify_set, parse_constraints_with_schema, ConstraintClass, DenialConstraint};
use crate::disjunctive::{minimal_models, DisjunctiveDatabase, EnumerationLimits};
use crate::error::Error;
use crate::families::{expected_size, generate, FamilySpec};
use crate::model::{parse_facts, Database};
use crate::repairs::{brute_force_repairs, repairs, RepairKind, RepairSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "repairforge", version, about = "Canonical disjunctive databases for database repairs")]
pub struct CommandSpec {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the canonical disjunctive database.
    Build(BuildArgs),
    /// Enumerate S- or C-repairs.
    Repairs(RepairsArgs),
    /// Cross-check the canonical database against exhaustive enumeration.
    Check(CheckArgs),
    /// Write a generated instance family as facts and constraints files.
    Gen(GenArgs),
    /// Print the closed-form size of a family's canonical database.
    Expect(ExpectArgs),
    /// Print the conflict hypergraph as JSON.
    DumpHypergraph(InputArgs),
    /// Print construction statistics as JSON.
    Stats(BuildArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Semantics {
    S,
    C,
}

impl From<Semantics> for RepairKind {
    fn from(s: Semantics) -> Self {
        match s {
            Semantics::S => RepairKind::SRepair,
            Semantics::C => RepairKind::CRepair,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Faithful,
    Eager,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FastPath {
    Off,
    Auto,
    ForceKey,
    ForceFd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Dn,
    Fd,
    Key,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Facts file.
    #[arg(short = 'f', long = "facts")]
    pub facts: PathBuf,
    /// Denial constraints file.
    #[arg(short = 'c', long = "constraints")]
    pub constraints: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long, default_value_t = 24)]
    pub max_facts: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_worlds: usize,
}

impl LimitArgs {
    fn limits(&self) -> EnumerationLimits {
        EnumerationLimits {
            max_facts: self.max_facts,
            max_results: self.max_worlds,
        }
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Faithful)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = FastPath::Off)]
    pub fast_path: FastPath,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_disjunctions: usize,
    /// Defaults to the number of facts.
    #[arg(long)]
    pub max_width: Option<usize>,
}

impl BuildArgs {
    fn options(&self) -> BuildOptions {
        BuildOptions {
            mode: match self.mode {
                ModeArg::Faithful => BuildMode::Faithful,
                ModeArg::Eager => BuildMode::EagerSubsumption,
            },
            max_disjunctions: self.max_disjunctions,
            max_disjunction_width: self.max_width,
        }
    }
}

#[derive(Debug, Args)]
pub struct RepairsArgs {
    /// Facts file (not needed with --from-disjdb).
    #[arg(short = 'f', long = "facts", required_unless_present = "from_disjdb")]
    pub facts: Option<PathBuf>,
    #[arg(short = 'c', long = "constraints", required_unless_present = "from_disjdb")]
    pub constraints: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Semantics::S)]
    pub semantics: Semantics,
    /// Print the minimal models of a saved disjunctive database instead.
    #[arg(long, conflicts_with_all = ["facts", "constraints"])]
    pub from_disjdb: Option<PathBuf>,
    /// Use exhaustive subset enumeration.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Semantics::S)]
    pub semantics: Semantics,
    #[arg(long, value_enum, default_value_t = ModeArg::Faithful)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, required_unless_present = "sizes")]
    pub n: Option<usize>,
    /// Clique sizes for the key family, e.g. `3,1,2`.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Error> {
        let n = || {
            self.n
                .ok_or_else(|| Error::Precondition("--n is required for this family".into()))
        };
        Ok(match self.family {
            FamilyArg::Dn => FamilySpec::DnTwoKeys { n: n()? },
            FamilyArg::Fd => FamilySpec::OneFdExponential { n: n()? },
            FamilyArg::Key => {
                let sizes = if self.sizes.is_empty() {
                    vec![1; n()?]
                } else {
                    self.sizes.clone()
                };
                FamilySpec::OneKeyCliques { sizes }
            }
        })
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Directory receiving `<name>.facts` and `<name>.dc`.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct ExpectArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Semantics::S)]
    pub semantics: Semantics,
}

enum Failure {
    Error(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(facts: &Path, constraints: &Path) -> Result<(Database, Vec<DenialConstraint>), Failure> {
    let db = parse_facts(&read(facts)?)?;
    let cs = parse_constraints_with_schema(&read(constraints)?, db.schema())?;
    Ok((db, cs))
}

fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let spec = match CommandSpec::try_parse_from(args) {
        Ok(s) => s,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let json_errors = matches!(
        &spec.command,
        Command::Build(BuildArgs { input: InputArgs { format: Format::Json, .. }, .. })
            | Command::Repairs(RepairsArgs { format: Format::Json, .. })
            | Command::DumpHypergraph(_)
            | Command::Stats(_)
    );
    match execute(&spec.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let (kind, message) = match failure {
                Failure::Error(e) => (e.kind(), e.to_string()),
                Failure::Io(m) => ("io", m),
            };
            let _ = if json_errors {
                writeln!(err, "{}", serde_json::json!({ "error": kind, "message": message }))
            } else {
                writeln!(err, "error: {message}")
            };
            EXIT_ERROR
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Build(args) => {
            let (db, cs) = load(&args.input.facts, &args.input.constraints)?;
            let dd = build(&db, &cs, args)?;
            match args.input.format {
                Format::Text => out.write_all(dd.to_text().as_bytes())?,
                Format::Json => emit_json(out, &dd.to_json())?,
            }
        }
        Command::Stats(args) => {
            let (db, cs) = load(&args.input.facts, &args.input.constraints)?;
            let (_, stats) = algorithm1_with_stats(&db, &cs, &args.options())?;
            emit_json(out, &stats.to_json())?;
        }
        Command::Repairs(args) => {
            let set = if let Some(path) = &args.from_disjdb {
                let text = read(path)?;
                let dd = if text.trim_start().starts_with('{') {
                    DisjunctiveDatabase::parse_json(&text)?
                } else {
                    DisjunctiveDatabase::parse_text(&text)?
                };
                RepairSet::new(RepairKind::SRepair, minimal_models(&dd, &args.limits.limits())?)
            } else {
                let (db, cs) = load(
                    args.facts.as_deref().expect("required by clap"),
                    args.constraints.as_deref().expect("required by clap"),
                )?;
                let kind = args.semantics.into();
                if args.oracle {
                    brute_force_repairs(&db, &cs, kind)?
                } else {
                    repairs(&db, &cs, kind, &args.limits.limits())?
                }
            };
            match args.format {
                Format::Text => out.write_all(set.to_text().as_bytes())?,
                Format::Json => emit_json(out, &set.to_json())?,
            }
        }
        Command::Check(args) => {
            let (db, cs) = load(&args.input.facts, &args.input.constraints)?;
            let kind: RepairKind = args.semantics.into();
            let oracle_worlds = brute_force_repairs(&db, &cs, kind)?;
            let expected = canonical_from_worlds(oracle_worlds.worlds())?;
            let opts = BuildOptions {
                mode: match args.mode {
                    ModeArg::Faithful => BuildMode::Faithful,
                    ModeArg::Eager => BuildMode::EagerSubsumption,
                },
                ..BuildOptions::default()
            };
            let built = match kind {
                RepairKind::SRepair => algorithm1_with_stats(&db, &cs, &opts)?.0,
                RepairKind::CRepair => {
                    canonical_from_worlds(repairs(&db, &cs, kind, &args.limits.limits())?.worlds())?
                }
            };
            let models = RepairSet::new(kind, minimal_models(&built, &args.limits.limits())?);
            if built == expected && models == oracle_worlds {
                writeln!(
                    out,
                    "MATCH {} disjunctions, size {}, {} {}s",
                    built.len(),
                    built.size(),
                    oracle_worlds.len(),
                    kind
                )?;
            } else {
                writeln!(out, "MISMATCH")?;
                writeln!(out, "-- computed\n{}", built.to_text().trim_end())?;
                writeln!(out, "-- expected\n{}", expected.to_text().trim_end())?;
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Gen(args) => {
            let spec = args.family.spec()?;
            let (db, cs) = generate(&spec)?;
            std::fs::create_dir_all(&args.out_dir)?;
            let facts_path = args.out_dir.join(format!("{spec}.facts"));
            let dc_path = args.out_dir.join(format!("{spec}.dc"));
            std::fs::write(&facts_path, db.to_facts_text())?;
            let dc: String = cs.iter().map(|c| format!("{c}\n")).collect();
            std::fs::write(&dc_path, dc)?;
            writeln!(out, "{}\n{}", facts_path.display(), dc_path.display())?;
        }
        Command::Expect(args) => {
            let spec = args.family.spec()?;
            writeln!(out, "{}", expected_size(&spec, args.semantics.into()))?;
        }
        Command::DumpHypergraph(args) => {
            let (db, cs) = load(&args.facts, &args.constraints)?;
            let g = ConflictHypergraph::build(&db, &cs)?;
            emit_json(out, &g.to_json())?;
        }
    }
    Ok(EXIT_OK)
}

fn build(db: &Database, cs: &[DenialConstraint], args: &BuildArgs) -> Result<DisjunctiveDatabase, Error> {
    let opts = args.options();
    let class = || classify_set(cs, db.schema());
    match args.fast_path {
        FastPath::Off => Ok(algorithm1_with_stats(db, cs, &opts)?.0),
        FastPath::ForceKey => canonical_one_key(db, &class()),
        FastPath::ForceFd => canonical_one_fd(db, &class(), &opts),
        FastPath::Auto => {
            let class = class();
            let single_relation = |rel: &str| db.iter().all(|f| f.relation() == rel);
            match &class {
                ConstraintClass::Key { relation, .. } if single_relation(relation) => {
                    log::info!("fast path: {class}");
                    canonical_one_key(db, &class)
                }
                ConstraintClass::FunctionalDependency { relation, .. } if single_relation(relation) => {
                    log::info!("fast path: {class}");
                    canonical_one_fd(db, &class, &opts)
                }
                _ => Ok(algorithm1_with_stats(db, cs, &opts)?.0),
            }
        }
    }
}
