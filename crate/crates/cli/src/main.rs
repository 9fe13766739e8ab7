use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use monobasis::sequences::{
    operators_listing, seq_fflv, seq_from_coeffs, seq_from_indices, seq_lusztig, seq_nz,
    seq_string, BirationalSequence, Preset,
};
use monobasis::{
    generator_census, kodaira, CensusOptions, CensusResult, ChevalleyBasis, Engine, EngineOptions,
    Error, EssentialSet, Family, KodairaResult, MonomialOrder, RootSystem, Weight, WeylWord,
};

const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_NOT_BIRATIONAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "monobasis",
    version,
    about = "Essential monomial bases of irreducible modules of simple Lie algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for parallel stages (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct TypeArgs {
    /// Family letter, A to G.
    family: String,
    rank: usize,
}

#[derive(Args, Debug, Clone)]
struct EngineArgs {
    /// Cap on candidate exponents per weight space (overrides ESSENTIAL_BUDGET).
    #[arg(long)]
    budget: Option<u128>,

    /// Stop collecting Minkowski sums once they give the full dimension.
    #[arg(long)]
    early_exit: bool,
}

#[derive(Args, Debug, Clone)]
struct WeightArg {
    /// Highest weight in fundamental-weight coordinates, e.g. 2,1,2,1.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the positive roots with their indices.
    Operators {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Essential basis for an explicit sequence.
    Basis {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        /// Comma-separated root indices, or a list of coefficient vectors like [[1,0],[0,1]].
        #[arg(long)]
        sequence: String,
        /// lex, invlex, neglex, deglex, degrevlex or wdegrevlex:w1,w2,...
        #[arg(long, default_value = "degrevlex")]
        order: String,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// All positive roots by descending height, with degrevlex.
    BasisFflv {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Simple roots of a reduced word of w0, with neglex.
    BasisString {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        /// Reduced word, e.g. 1,2,1 (defaults to a fixed longest word).
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Roots along a reduced word of w0, with height-weighted degrevlex.
    BasisLusztig {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Simple roots of a reduced word of w0, with degrevlex.
    BasisNz {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Generators of the monoid truncated above a degree.
    Kodaira {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        degree: u32,
        /// Defaults to the FFLV sequence.
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Monoid generators for every commutation class of reduced words of w0.
    Census {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        /// Allow ranks above the default limit.
        #[arg(long)]
        long_run: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::Budget { .. }) | Some(Error::CensusTooLarge { .. }) => EXIT_BUDGET,
            Some(Error::NotBirational { .. }) => EXIT_NOT_BIRATIONAL,
            _ => EXIT_USAGE,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::new(e).into()
    }
}

fn root_system(ty: &TypeArgs) -> Result<Arc<RootSystem>, Failure> {
    let family: Family = ty.family.parse().map_err(|e| match e {
        Error::InvalidType { family, reason, .. } => Error::InvalidType {
            family,
            rank: ty.rank,
            reason,
        },
        other => other,
    })?;
    Ok(Arc::new(RootSystem::new(family, ty.rank)?))
}

fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight, Failure> {
    let w: Weight = s
        .parse()
        .map_err(|e| anyhow!("cannot parse weight `{s}`: {e}"))?;
    rs.check_dominant(&w)?;
    Ok(w)
}

fn parse_word(s: &str) -> Result<WeylWord, Failure> {
    let letters = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("cannot parse word `{s}`"))?;
    Ok(WeylWord(letters))
}

fn parse_sequence(rs: &RootSystem, s: &str) -> Result<BirationalSequence, Failure> {
    let t = s.trim();
    if t.starts_with("[[") {
        let vectors: Vec<Vec<i64>> = serde_json::from_str(t)
            .with_context(|| format!("cannot parse coefficient vectors `{s}`"))?;
        Ok(seq_from_coeffs(rs, &vectors)?)
    } else {
        let indices = t
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("cannot parse root indices `{s}`"))?;
        Ok(seq_from_indices(rs, &indices)?)
    }
}

fn parse_order(s: &str) -> Result<MonomialOrder, Failure> {
    Ok(s.parse::<MonomialOrder>()?)
}

fn engine_options(args: &EngineArgs) -> Result<EngineOptions, Failure> {
    let mut opts = EngineOptions {
        early_exit: args.early_exit,
        ..EngineOptions::default()
    };
    if let Ok(v) = std::env::var("ESSENTIAL_BUDGET") {
        opts.budget = v
            .trim()
            .parse()
            .with_context(|| format!("ESSENTIAL_BUDGET is not a number: `{v}`"))?;
    }
    if let Some(b) = args.budget {
        opts.budget = b;
    }
    Ok(opts)
}

fn word_or_default(rs: &RootSystem, word: &Option<String>) -> Result<WeylWord, Failure> {
    match word {
        Some(w) => parse_word(w),
        None => Ok(rs.longest_word()),
    }
}

fn with_order(mut preset: Preset, order: &Option<String>) -> Result<Preset, Failure> {
    if let Some(o) = order {
        preset.order = parse_order(o)?;
    }
    Ok(preset)
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).context("serializing output")?;
    s.push('\n');
    Ok(s)
}

fn format_generators(es: &EssentialSet) -> String {
    if es.generators.is_empty() {
        return "none".to_string();
    }
    es.generators
        .iter()
        .map(|g| format!("{}x{}", g.weight, g.multiplicity))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn exponent(k: &[u32]) -> String {
    let parts: Vec<String> = k.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn basis_text(es: &EssentialSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type: {}{}", es.family, es.rank);
    let _ = writeln!(out, "weight: {}", es.lambda);
    let _ = writeln!(out, "sequence: {:?}", es.sequence.indices());
    let _ = writeln!(out, "order: {}", es.order);
    let _ = writeln!(out, "dimension: {}", es.dimension());
    let mut by_degree: BTreeMap<u32, Vec<&Vec<u32>>> = BTreeMap::new();
    for k in &es.exponents {
        by_degree.entry(k.iter().sum()).or_default().push(k);
    }
    for (d, ks) in by_degree {
        let items: Vec<String> = ks.iter().map(|k| exponent(k)).collect();
        let _ = writeln!(out, "degree {d}: {}", items.join(" "));
    }
    let _ = writeln!(out, "generators: {}", format_generators(es));
    out
}

fn kodaira_text(r: &KodairaResult) -> String {
    let mut out = String::new();
    let counts: Vec<String> = r.counts.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "counts: {}", counts.join(" "));
    for d in &r.degrees {
        let items: Vec<String> = d.new.iter().map(|k| exponent(k)).collect();
        let _ = writeln!(
            out,
            "degree {} (dimension {}, {} new): {}",
            d.k,
            d.dimension,
            d.new.len(),
            items.join(" ")
        );
    }
    if let Some(reason) = &r.truncated {
        let _ = writeln!(out, "truncated: {reason}");
    }
    out
}

fn census_text(r: &CensusResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "weight: {}", r.weight);
    let _ = writeln!(out, "classes: {}", r.classes);
    for row in &r.table {
        let _ = writeln!(out, "{:>6}  {}", row.frequency, row.generators.join(", "));
    }
    let _ = writeln!(out, "max generator level: {}", r.max_generator_level);
    for w in &r.words {
        let gens: Vec<String> = w.monoid_generators.iter().map(Weight::to_string).collect();
        let _ = writeln!(out, "word {}: {}", w.word, gens.join(" "));
    }
    out
}

fn run_basis(
    format: Format,
    cb: Arc<ChevalleyBasis>,
    preset: Preset,
    weight: &Weight,
    args: &EngineArgs,
) -> Result<String, Failure> {
    let mut engine = Engine::new(cb, preset.sequence, preset.order, engine_options(args)?)?;
    let es = engine.compute(weight)?;
    match format {
        Format::Json => to_json(&es.report()),
        Format::Text => Ok(basis_text(&es)),
    }
}

fn run_word_preset(
    format: Format,
    ty: &TypeArgs,
    weight: &WeightArg,
    word: &Option<String>,
    order: &Option<String>,
    engine: &EngineArgs,
    build: fn(&RootSystem, &WeylWord) -> monobasis::Result<Preset>,
) -> Result<String, Failure> {
    let rs = root_system(ty)?;
    let w = parse_weight(&rs, &weight.weight)?;
    let word = word_or_default(&rs, word)?;
    let preset = with_order(build(&rs, &word)?, order)?;
    run_basis(
        format,
        Arc::new(ChevalleyBasis::new(rs)?),
        preset,
        &w,
        engine,
    )
}

fn run(cli: Cli) -> Result<String, Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let format = cli.format;
    match cli.command {
        Command::Operators { ty } => {
            let rs = root_system(&ty)?;
            let listing = operators_listing(&rs);
            match format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = listing
                        .iter()
                        .zip(rs.positive_roots())
                        .map(|((i, name), c)| {
                            serde_json::json!({ "index": i, "root": name, "coefficients": c })
                        })
                        .collect();
                    to_json(&items)
                }
                Format::Text => Ok(listing
                    .into_iter()
                    .map(|(i, name)| format!("{i}: {name}\n"))
                    .collect()),
            }
        }
        Command::Basis {
            ty,
            weight,
            sequence,
            order,
            engine,
        } => {
            let rs = root_system(&ty)?;
            let w = parse_weight(&rs, &weight.weight)?;
            let preset = Preset {
                sequence: parse_sequence(&rs, &sequence)?,
                order: parse_order(&order)?,
            };
            run_basis(
                format,
                Arc::new(ChevalleyBasis::new(rs)?),
                preset,
                &w,
                &engine,
            )
        }
        Command::BasisFflv {
            ty,
            weight,
            order,
            engine,
        } => {
            let rs = root_system(&ty)?;
            let w = parse_weight(&rs, &weight.weight)?;
            let preset = with_order(seq_fflv(&rs), &order)?;
            run_basis(
                format,
                Arc::new(ChevalleyBasis::new(rs)?),
                preset,
                &w,
                &engine,
            )
        }
        Command::BasisString {
            ty,
            weight,
            word,
            order,
            engine,
        } => run_word_preset(format, &ty, &weight, &word, &order, &engine, seq_string),
        Command::BasisNz {
            ty,
            weight,
            word,
            order,
            engine,
        } => run_word_preset(format, &ty, &weight, &word, &order, &engine, seq_nz),
        Command::BasisLusztig {
            ty,
            weight,
            word,
            order,
            engine,
        } => run_word_preset(format, &ty, &weight, &word, &order, &engine, seq_lusztig),
        Command::Kodaira {
            ty,
            weight,
            degree,
            sequence,
            order,
            engine,
        } => {
            let rs = root_system(&ty)?;
            let w = parse_weight(&rs, &weight.weight)?;
            if degree == 0 {
                return Err(anyhow!("--degree must be at least 1").into());
            }
            let preset = match sequence {
                Some(s) => Preset {
                    sequence: parse_sequence(&rs, &s)?,
                    order: MonomialOrder::default(),
                },
                None => seq_fflv(&rs),
            };
            let preset = with_order(preset, &order)?;
            let cb = Arc::new(ChevalleyBasis::new(rs)?);
            let mut eng = Engine::new(cb, preset.sequence, preset.order, engine_options(&engine)?)?;
            let r = kodaira(&mut eng, &w, degree)?;
            match format {
                Format::Json => to_json(&r),
                Format::Text => Ok(kodaira_text(&r)),
            }
        }
        Command::Census {
            ty,
            weight,
            long_run,
            engine,
        } => {
            let rs = root_system(&ty)?;
            let w = parse_weight(&rs, &weight.weight)?;
            let opts = CensusOptions {
                long_run,
                ..CensusOptions::default()
            };
            let cb = Arc::new(ChevalleyBasis::new(rs)?);
            let r = generator_census(cb, &w, &opts, &engine_options(&engine)?)?;
            match format {
                Format::Json => to_json(&r),
                Format::Text => Ok(census_text(&r)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
