use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use garside::disks::{self, Strategy};
use garside::reversing::{self, SearchOptions};
use garside::valuation::{self, OrderType};
use garside::{ContextSpec, GarsideContext, GarsideError, Syntax, Word};
use serde_json::json;

mod render;

#[derive(Parser)]
#[command(name = "garside", version, about = "Garside normal forms, valuations and removable pairs in braid words")]
struct Cli {
    /// braid:N, dihedral:M or table:FILE (table:exotic-aba-bb for the built-in table)
    #[arg(long, global = true)]
    group: Option<String>,
    /// Read and write words as space-separated signed integers
    #[arg(long, global = true)]
    numeric: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word
    Nf { #[arg(allow_hyphen_values = true)] word: String },
    /// Whether two words represent the same element (exit 1 if not)
    Equiv {
        #[arg(allow_hyphen_values = true)] first: String,
        #[arg(allow_hyphen_values = true)] second: String,
    },
    /// Valuation sequence and order type
    Val { #[arg(allow_hyphen_values = true)] word: String },
    /// All removable pairs of a word, as one JSON array
    Pairs { #[arg(allow_hyphen_values = true)] word: String },
    /// Delete removable pairs until none is left (exit 1 if stuck)
    Unbraid {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value = "leftmost")]
        strategy: String,
    },
    /// Constructive pair of a trivial word in a dihedral context
    DihedralPair { #[arg(allow_hyphen_values = true)] word: String },
    /// Pair of the trivial word u⁻¹v for simples u, v
    SimplePair { u: String, v: String },
    /// Reverse u⁻¹v into v'u'⁻¹
    Reverse { u: String, v: String },
    /// Trivial word v'⁻¹u⁻¹vu' built from a seed
    SeedWord { u: String, v: String },
    /// Seeds whose trivial word has no removable pair
    Search {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        length: usize,
        /// Worker threads, 0 for one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// One seed per flip orbit
        #[arg(long)]
        dedupe: bool,
        /// Lift the size guard
        #[arg(long)]
        override_guard: bool,
        /// One JSON line per seed
        #[arg(long)]
        verbose: bool,
    },
    /// Order types of n-tuples, or the neighbour graph in DOT
    Types {
        n: usize,
        #[arg(long)]
        graph: bool,
    },
    /// Ordered Bell number
    Bell { n: usize },
    /// Seeded random trivial word
    RandomTrivial {
        #[arg(long)]
        ops: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Braid diagram of a word
    Render {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Highlighted pair as I,J
        #[arg(long)]
        highlight: Option<String>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    False,
}

struct Env {
    group: Option<String>,
    syntax: Syntax,
}

impl Env {
    fn ctx(&self) -> garside::Result<GarsideContext> {
        let spec = self
            .group
            .as_deref()
            .ok_or_else(|| GarsideError::Precondition("this command needs --group".into()))?;
        spec.parse::<ContextSpec>()?.build()
    }

    fn word(&self, ctx: &GarsideContext, text: &str) -> garside::Result<Word> {
        let w = Word::parse(text, self.syntax)?;
        w.check_atoms(ctx.atom_count())?;
        Ok(w)
    }

    fn show(&self, w: &Word) -> String {
        w.format(self.syntax)
    }
}

fn parse_highlight(s: &str) -> garside::Result<(usize, usize)> {
    let bad = || GarsideError::Precondition(format!("highlight {s:?} is not I,J"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

fn run(cli: Cli) -> garside::Result<Outcome> {
    let env = Env { group: cli.group, syntax: if cli.numeric { Syntax::Numeric } else { Syntax::Compact } };
    match cli.command {
        Command::Nf { word } => {
            let ctx = env.ctx()?;
            let w = env.word(&ctx, &word)?;
            if w.is_positive() {
                println!("{}", ctx.format_positive(&ctx.normalize(&w)?));
            } else {
                println!("{}", ctx.format_group(&ctx.group_element(&w)?));
            }
        }
        Command::Equiv { first, second } => {
            let ctx = env.ctx()?;
            let same = ctx.equivalent(&env.word(&ctx, &first)?, &env.word(&ctx, &second)?)?;
            println!("{same}");
            if !same {
                return Ok(Outcome::False);
            }
        }
        Command::Val { word } => {
            let ctx = env.ctx()?;
            let x = ctx.group_element(&env.word(&ctx, &word)?)?;
            let seq = ctx.valuation_sequence(&x)?;
            let values: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
            println!("({}) {}", values.join(", "), OrderType::of(&seq));
        }
        Command::Pairs { word } => {
            let ctx = env.ctx()?;
            let pairs = disks::find_removable_pairs(&ctx, &env.word(&ctx, &word)?)?;
            println!("{}", serde_json::to_string(&pairs).expect("pairs serialize"));
        }
        Command::Unbraid { word, strategy } => {
            let ctx = env.ctx()?;
            let strategy: Strategy = strategy.parse()?;
            let outcome = disks::unbraid(&ctx, &env.word(&ctx, &word)?, strategy)?;
            for p in &outcome.trace {
                println!("{}", p.to_json());
            }
            println!(
                "{}",
                json!({"success": outcome.success(), "steps": outcome.steps(), "residual": env.show(&outcome.residual)})
            );
            if !outcome.success() {
                return Ok(Outcome::False);
            }
        }
        Command::DihedralPair { word } => {
            let ctx = env.ctx()?;
            println!("{}", disks::find_pair_dihedral(&ctx, &env.word(&ctx, &word)?)?.to_json());
        }
        Command::SimplePair { u, v } => {
            let ctx = env.ctx()?;
            let pair = disks::find_pair_simple_fraction(&ctx, &env.word(&ctx, &u)?, &env.word(&ctx, &v)?)?;
            println!("{}", pair.to_json());
        }
        Command::Reverse { u, v } => {
            let ctx = env.ctx()?;
            let r = reversing::reverse(&ctx, &env.word(&ctx, &u)?, &env.word(&ctx, &v)?)?;
            println!(
                "{}",
                json!({
                    "u_prime": env.show(&r.u_prime),
                    "v_prime": env.show(&r.v_prime),
                    "lcm": ctx.format_positive(&r.lcm),
                })
            );
        }
        Command::SeedWord { u, v } => {
            let ctx = env.ctx()?;
            println!("{}", env.show(&reversing::seed_word(&ctx, &env.word(&ctx, &u)?, &env.word(&ctx, &v)?)?));
        }
        Command::Search { strands, length, jobs, dedupe, override_guard, verbose } => {
            let options = SearchOptions { jobs, dedupe_symmetry: dedupe, override_guard, record_all: verbose };
            let report = reversing::search_counterexamples(strands, length, &options)?;
            print!("{}", report.to_json_lines());
            eprintln!("elapsed {:.3} s", report.elapsed.as_secs_f64());
        }
        Command::Types { n, graph } => {
            if graph {
                print!("{}", valuation::neighbour_graph(n)?.to_dot());
            } else {
                for t in valuation::enumerate_order_types(n)? {
                    println!("{t}");
                }
            }
        }
        Command::Bell { n } => println!("{}", valuation::ordered_bell(n)?),
        Command::RandomTrivial { ops, seed, max_len } => {
            let ctx = env.ctx()?;
            let w = match max_len {
                Some(cap) => reversing::random_trivial_word_capped(&ctx, ops, seed, cap),
                None => reversing::random_trivial_word(&ctx, ops, seed),
            };
            println!("{}", env.show(&w));
        }
        Command::Render { word, format, highlight } => {
            let ctx = env.ctx()?;
            let strands = match ctx.kind() {
                garside::ContextKind::Braid(n) => *n,
                other => return Err(GarsideError::WrongContext(format!("a braid context, got {other}"))),
            };
            let w = env.word(&ctx, &word)?;
            let highlight = highlight.as_deref().map(parse_highlight).transpose()?;
            let text = match format {
                Format::Ascii => render::ascii(&w, strands, highlight)?,
                Format::Svg => render::svg(&w, strands, highlight)?,
            };
            print!("{text}");
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::False) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
