//! `mvk`: command-line front end. The first line of standard output is
//! always the verdict; witnesses follow in the library's text formats.
//! Exit status 0 is affirmative, 1 is negative with a witness, 2 is an
//! input or usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use mvk::decision::DEFAULT_CEILING;
use mvk::duality::uniqueness_scan;
use mvk::filtration::{filter_model, verify_filtration};
use mvk::formula::subformula_closure;
use mvk::intuitionistic::translate_sequent;
use mvk::parser::{
    parse_formula, parse_formula_list, parse_model, parse_proof, parse_sequent, parse_sequents, parse_signature,
    render_model, render_sequents, ParseError,
};
use mvk::semantics::{eval, frame_violation, satisfies_sequent};
use mvk::{check_derivation, decide, DecisionOutcome, Exec, FrameClass, KripkeModel, LogicId, SearchConfig, Sequent, Signature, TruthDomain};

const CEILING_VAR: &str = "MVK_ENUM_CEILING";

#[derive(Parser)]
#[command(name = "mvk", version, about = "Many-valued modal logic toolkit")]
struct Cli {
    /// Run searches on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the value of a formula at a world.
    Eval {
        #[command(flatten)]
        input: SigModel,
        #[arg(long, default_value_t = 0)]
        world: usize,
        formula: String,
    },
    /// Check sequents against every world of a model, or one world.
    Sat {
        #[command(flatten)]
        input: SigModel,
        #[arg(long)]
        world: Option<usize>,
        /// File of sequents, one per line.
        #[arg(long, conflicts_with = "sequent")]
        sequents: Option<PathBuf>,
        #[arg(allow_hyphen_values = true)]
        sequent: Option<String>,
    },
    /// Search for a countermodel with at most `bound` worlds.
    Decide {
        #[arg(long)]
        sig: PathBuf,
        /// Hypotheses, one sequent per line.
        #[arg(long)]
        sigma: Option<PathBuf>,
        #[arg(long, default_value = "mv-K")]
        logic: String,
        #[arg(long)]
        bound: usize,
        #[arg(allow_hyphen_values = true)]
        goal: String,
    },
    /// Check a proof script.
    CheckProof {
        #[arg(long)]
        sig: PathBuf,
        /// Extra hypotheses, numbered after the script's own.
        #[arg(long)]
        sigma: Option<PathBuf>,
        /// Overrides the script's `logic` line.
        #[arg(long)]
        logic: Option<String>,
        proof: PathBuf,
    },
    /// Filter a model through the subformula closure of the given formulas.
    Filter {
        #[command(flatten)]
        input: SigModel,
        /// Comma-separated formulas.
        #[arg(long)]
        phi: String,
        #[arg(long, default_value = "mv-K")]
        logic: String,
    },
    /// Unary tables making box and diamond De Morgan duals.
    NegScan {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        bound: usize,
    },
    /// Goedel translation of a file of modal-free sequents.
    Translate {
        #[arg(long)]
        sig: PathBuf,
        /// Skip the outer box on monotone connectives.
        #[arg(long)]
        optimized: bool,
        file: PathBuf,
    },
    /// Check a model's relation against a frame class or a logic.
    FrameCheck {
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        class: String,
    },
}

#[derive(Args)]
struct SigModel {
    #[arg(long)]
    sig: PathBuf,
    #[arg(long)]
    model: PathBuf,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{origin}:{source}")]
    Parse { origin: String, source: ParseError },
    #[error(transparent)]
    Library(#[from] mvk::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

/// Text on stdout plus the exit status.
struct Verdict {
    code: u8,
    text: String,
}

impl Verdict {
    fn new(code: u8, first: impl Into<String>) -> Self {
        let mut text = first.into();
        text.push('\n');
        Self { code, text }
    }

    fn line(mut self, line: impl AsRef<str>) -> Self {
        self.text.push_str(line.as_ref());
        if !self.text.ends_with('\n') {
            self.text.push('\n');
        }
        self
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses the file at `path`, attributing errors to it.
fn parse_file<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, ParseError>) -> CliResult<T> {
    parse(&read(path)?).map_err(|source| CliError::Parse {
        origin: path.display().to_string(),
        source,
    })
}

/// Parses a command-line argument, attributing errors to `name`.
fn parse_arg<T>(name: &str, text: &str, parse: impl FnOnce(&str) -> Result<T, ParseError>) -> CliResult<T> {
    parse(text).map_err(|source| CliError::Parse {
        origin: format!("<{name}>"),
        source,
    })
}

fn load_sig(path: &Path) -> CliResult<Signature> {
    parse_file(path, parse_signature)
}

fn load_model(path: &Path, domain: TruthDomain) -> CliResult<KripkeModel> {
    parse_file(path, |t| parse_model(t, domain))
}

fn load_sequents(path: Option<&PathBuf>, sig: &Signature) -> CliResult<Vec<Sequent>> {
    path.map_or(Ok(Vec::new()), |p| parse_file(p, |t| parse_sequents(t, sig)))
}

fn logic(name: &str) -> CliResult<LogicId> {
    LogicId::from_name(name).ok_or_else(|| CliError::Usage(format!("unknown logic `{name}`")))
}

fn search_config(sequential: bool) -> CliResult<SearchConfig> {
    let ceiling = match std::env::var(CEILING_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CEILING_VAR} must be a non-negative integer, got `{v}`")))?,
        Err(_) => DEFAULT_CEILING,
    };
    let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
    Ok(SearchConfig { ceiling, exec })
}

fn run(cli: Cli) -> CliResult<Verdict> {
    let config = search_config(cli.sequential)?;
    match cli.command {
        Command::Eval { input, world, formula } => {
            let sig = load_sig(&input.sig)?;
            let m = load_model(&input.model, sig.domain())?;
            let f = parse_arg("formula", &formula, |t| parse_formula(t, &sig))?;
            Ok(Verdict::new(0, eval(&sig, &m, world, &f)?.to_string()))
        }
        Command::Sat {
            input,
            world,
            sequents,
            sequent,
        } => {
            let sig = load_sig(&input.sig)?;
            let m = load_model(&input.model, sig.domain())?;
            let goals = match (&sequents, sequent) {
                (Some(path), _) => parse_file(path, |t| parse_sequents(t, &sig))?,
                (None, Some(text)) => vec![parse_arg("sequent", &text, |t| parse_sequent(t, &sig))?],
                (None, None) => return Err(CliError::Usage("give a sequent or --sequents".into())),
            };
            let worlds: Vec<usize> = match world {
                Some(u) => {
                    m.successors(u)?;
                    vec![u]
                }
                None => m.worlds().collect(),
            };
            for s in &goals {
                for &u in &worlds {
                    if !satisfies_sequent(&sig, &m, u, s)? {
                        return Ok(Verdict::new(1, "refuted").line(format!("world {u}: {s}")));
                    }
                }
            }
            Ok(Verdict::new(0, "satisfied"))
        }
        Command::Decide {
            sig,
            sigma,
            logic: name,
            bound,
            goal,
        } => {
            let logic = logic(&name)?;
            let sig = load_sig(&sig)?;
            let sigma = load_sequents(sigma.as_ref(), &sig)?;
            let goal = parse_arg("goal", &goal, |t| parse_sequent(t, &sig))?;
            Ok(match decide(&sig, &sigma, &goal, logic, bound, config)? {
                DecisionOutcome::Countermodel { model, world } => Verdict::new(1, "countermodel")
                    .line(format!("# refuted at world {world}"))
                    .line(render_model(&model)),
                DecisionOutcome::ValidUpTo(b) => Verdict::new(0, format!("valid-up-to {b}")),
                DecisionOutcome::ProvedValid { bound } => {
                    Verdict::new(0, "valid").line(format!("# bound {bound} reaches the filtration bound"))
                }
                DecisionOutcome::Aborted { searched_up_to, ceiling } => Verdict::new(
                    2,
                    format!("aborted: ceiling {ceiling} reached; sizes up to {searched_up_to} exhausted"),
                ),
            })
        }
        Command::CheckProof {
            sig,
            sigma,
            logic: name,
            proof,
        } => {
            let sig = load_sig(&sig)?;
            let extra = load_sequents(sigma.as_ref(), &sig)?;
            let mut d = parse_file(&proof, |t| parse_proof(t, &sig))?;
            if let Some(name) = name {
                d.logic = logic(&name)?;
            }
            d.hypotheses.extend(extra);
            Ok(match check_derivation(&d, &sig) {
                Ok(()) => {
                    let goal = d.conclusion().map(ToString::to_string).unwrap_or_default();
                    Verdict::new(0, "accepted").line(format!("# {} ⊢ {goal}", d.logic.name()))
                }
                Err(v) => Verdict::new(1, v.to_string()),
            })
        }
        Command::Filter { input, phi, logic: name } => {
            let logic = logic(&name)?;
            let sig = load_sig(&input.sig)?;
            let m = load_model(&input.model, sig.domain())?;
            let formulas = parse_arg("phi", &phi, |t| parse_formula_list(t, &sig))?;
            let phi = subformula_closure(&formulas);
            let filtered = filter_model(&sig, &m, &phi, logic)?;
            let report = verify_filtration(&sig, &m, &phi, logic)?;
            if !report.passed() {
                return Ok(Verdict::new(1, format!("not-preserved: {report}")));
            }
            let mut classes = String::new();
            for (c, members) in filtered.partition.classes.iter().enumerate() {
                let list: Vec<String> = members.iter().map(ToString::to_string).collect();
                writeln!(classes, "# class {c}: {}", list.join(" ")).unwrap();
            }
            Ok(Verdict::new(0, "filtered")
                .line(format!("# {} classes, phi has {} formulas", filtered.class_count(), filtered.phi.len()))
                .line(render_model(&filtered.model))
                .line(classes))
        }
        Command::NegScan { n, bound } => {
            let survivors = uniqueness_scan(n, bound, config)?;
            let mut v = Verdict::new(0, format!("survivors {}", survivors.len()));
            for t in survivors {
                v = v.line(t.to_string());
            }
            Ok(v)
        }
        Command::Translate { sig, optimized, file } => {
            let sig = load_sig(&sig)?;
            let sequents = parse_file(&file, |t| parse_sequents(t, &sig))?;
            let translated = sequents
                .iter()
                .map(|s| translate_sequent(s, optimized.then_some(&sig)))
                .collect::<mvk::Result<Vec<_>>>()?;
            Ok(Verdict::new(0, "translated").line(render_sequents(&translated)))
        }
        Command::FrameCheck { sig, model, class } => {
            let class = FrameClass::from_name(&class)
                .or_else(|| LogicId::from_name(&class).map(LogicId::frame_class))
                .ok_or_else(|| CliError::Usage(format!("unknown frame class `{class}`")))?;
            let domain = match sig {
                Some(path) => load_sig(&path)?.domain(),
                None => TruthDomain::new(mvk::domain::MAX_DOMAIN)?,
            };
            let m = load_model(&model, domain)?;
            Ok(match frame_violation(&m, class) {
                None => Verdict::new(0, "holds"),
                Some(v) => Verdict::new(1, format!("fails: {v}")),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => {
            print!("{}", v.text);
            ExitCode::from(v.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
