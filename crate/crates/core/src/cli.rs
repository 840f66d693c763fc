//! Command-line front end.
//!
//! Settings resolve as flag, then `WOLOF_SPELL_*` environment variable,
//! then the TOML config file, then the built-in default. Without a lexicon
//! setting the bundled sample lexicon is used.
//!
//! Exit status: 0 on success, 1 on I/O or configuration errors, 2 when a
//! data file (lexicon, corpus, cost or rule table) is malformed.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::alphabet::{segment, GraphemeClass};
use crate::distance::{Cost, CostModel};
use crate::error::{read_file, Error, Result};
use crate::eval::{evaluate, load_corpus};
use crate::lexicon::TrieDict;
use crate::pipeline::{SpellChecker, Status};
use crate::preprocess::ExclusionList;
use crate::suggest::DEFAULT_K;
use crate::translit::RuleSet;

pub const ENV_PREFIX: &str = "WOLOF_SPELL_";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "wolof-spell", version, about = "Wolof spell checker")]
pub struct Cli {
    /// TOML config file
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Lexicon file, one word per line
    #[arg(long, global = true)]
    pub lexicon: Option<PathBuf>,
    /// Substitution cost table (TSV)
    #[arg(long, global = true)]
    pub costs: Option<PathBuf>,
    /// Transliteration rule table (TSV)
    #[arg(long, global = true)]
    pub translit: Option<PathBuf>,
    /// Words to drop before checking
    #[arg(long, global = true)]
    pub exclude: Option<PathBuf>,
    /// Number of suggestions
    #[arg(short = 'k', global = true)]
    pub k: Option<usize>,
    /// Largest edit cost a suggestion may have
    #[arg(long, global = true)]
    pub max_cost: Option<Cost>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Correct text from a file or stdin and print it
    Check { input: Option<PathBuf> },
    /// Print ranked suggestions for one word
    Suggest { word: String },
    /// Score the checker on a labeled corpus
    Eval { corpus: PathBuf },
    /// Print lexicon statistics
    LexiconStats,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    lexicon: Option<PathBuf>,
    costs: Option<PathBuf>,
    translit: Option<PathBuf>,
    exclude: Option<PathBuf>,
    k: Option<usize>,
    max_cost: Option<Cost>,
    format: Option<OutputFormat>,
}

/// Fully resolved settings.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub lexicon_path: Option<PathBuf>,
    pub cost_overrides_path: Option<PathBuf>,
    pub translit_rules_path: Option<PathBuf>,
    pub exclusion_list_path: Option<PathBuf>,
    pub k: usize,
    pub max_cost: Option<Cost>,
    pub output_format: OutputFormat,
}

impl Config {
    pub fn resolve(cli: &Cli, env: &dyn Fn(&str) -> Option<String>) -> Result<Self> {
        let var = |name: &str| env(&format!("{ENV_PREFIX}{name}")).filter(|v| !v.is_empty());
        let config_path = cli.config.clone().or_else(|| var("CONFIG").map(PathBuf::from));
        let file = match &config_path {
            Some(path) => {
                let text = read_file(path)?;
                let mut file: FileConfig = toml::from_str(&text)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                let base = path.parent().unwrap_or(Path::new(""));
                for p in [&mut file.lexicon, &mut file.costs, &mut file.translit, &mut file.exclude]
                    .into_iter()
                    .flatten()
                {
                    if p.is_relative() {
                        *p = base.join(&*p);
                    }
                }
                file
            }
            None => FileConfig::default(),
        };
        let path = |flag: &Option<PathBuf>, name: &str, from_file: &Option<PathBuf>| {
            flag.clone()
                .or_else(|| var(name).map(PathBuf::from))
                .or_else(|| from_file.clone())
        };
        let parsed = |name: &str| -> Result<Option<u64>> {
            var(name)
                .map(|v| {
                    v.parse::<u64>()
                        .map_err(|_| Error::Config(format!("{ENV_PREFIX}{name}={v:?} is not a number")))
                })
                .transpose()
        };
        let k = match cli.k {
            Some(k) => k,
            None => match parsed("K")? {
                Some(k) => k as usize,
                None => file.k.unwrap_or(DEFAULT_K),
            },
        };
        if k == 0 {
            return Err(Error::Config("k must be at least 1".into()));
        }
        let max_cost = match cli.max_cost {
            Some(c) => Some(c),
            None => match parsed("MAX_COST")? {
                Some(c) => Some(
                    Cost::try_from(c).map_err(|_| Error::Config(format!("max cost {c} too large")))?,
                ),
                None => file.max_cost,
            },
        };
        let output_format = match cli.format {
            Some(f) => f,
            None => match var("FORMAT") {
                Some(v) => OutputFormat::from_str(&v, true)
                    .map_err(|_| Error::Config(format!("unknown format {v:?}")))?,
                None => file.format.unwrap_or(OutputFormat::Text),
            },
        };
        Ok(Config {
            lexicon_path: path(&cli.lexicon, "LEXICON", &file.lexicon),
            cost_overrides_path: path(&cli.costs, "COSTS", &file.costs),
            translit_rules_path: path(&cli.translit, "TRANSLIT", &file.translit),
            exclusion_list_path: path(&cli.exclude, "EXCLUDE", &file.exclude),
            k,
            max_cost,
            output_format,
        })
    }

    pub fn load_lexicon(&self) -> Result<TrieDict> {
        match &self.lexicon_path {
            Some(p) => TrieDict::load(p),
            None => Ok(TrieDict::sample()),
        }
    }

    /// Loads every configured file and assembles the checker.
    pub fn build_checker(&self) -> Result<SpellChecker> {
        let mut checker = SpellChecker::new(self.load_lexicon()?)
            .with_k(self.k)
            .with_max_cost(self.max_cost);
        if let Some(p) = &self.cost_overrides_path {
            checker = checker.with_costs(CostModel::load(p)?);
        }
        if let Some(p) = &self.translit_rules_path {
            checker = checker.with_translit(RuleSet::load(p)?);
        }
        if let Some(p) = &self.exclusion_list_path {
            checker = checker.with_exclusions(ExclusionList::load(p)?);
        }
        Ok(checker)
    }
}

/// Parses `args` and runs the command. Returns the process exit status.
pub fn run<I, T>(
    args: I,
    env: &dyn Fn(&str) -> Option<String>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if informational {
                let _ = write!(stdout, "{rendered}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{rendered}");
            return EXIT_FAILURE;
        }
    };
    let outcome = Config::resolve(&cli, env).and_then(|config| match &cli.command {
        Command::Check { input } => cmd_check(input.as_deref(), &config, stdin, stdout, stderr),
        Command::Suggest { word } => cmd_suggest(word, &config, stdout),
        Command::Eval { corpus } => cmd_eval(corpus, &config, stdout),
        Command::LexiconStats => cmd_lexicon_stats(&config, stdout),
    });
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "wolof-spell: {e}");
            if e.is_malformed_data() {
                EXIT_MALFORMED
            } else {
                EXIT_FAILURE
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::io("<stdio>", e)
}

pub fn cmd_check(
    input: Option<&Path>,
    config: &Config,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    let checker = config.build_checker()?;
    let text = match input {
        Some(p) => read_file(p)?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(io_err)?;
            s
        }
    };
    let report = checker.check_text(&text)?;
    match config.output_format {
        OutputFormat::Text => {
            if !text.is_empty() {
                writeln!(stdout, "{}", report.corrected_text).map_err(io_err)?;
            }
            for r in report.results.iter().filter(|r| r.status != Status::Correct) {
                let detail = match (r.status, &r.corrected) {
                    (Status::Corrected, Some(c)) => format!("-> {c}"),
                    (Status::Dropped, _) => "dropped".to_string(),
                    _ => "no suggestion".to_string(),
                };
                let by = r.flagged_by.map(|f| format!(" [{}]", f.as_str())).unwrap_or_default();
                writeln!(stderr, "{}: {detail}{by}", r.original).map_err(io_err)?;
            }
        }
        OutputFormat::Structured => {
            for r in &report.results {
                let position = r.position.map(|p| p.to_string()).unwrap_or_default();
                let suggestions = r
                    .suggestions
                    .as_ref()
                    .map(|l| {
                        l.items
                            .iter()
                            .map(|s| format!("{}:{}", s.word, s.cost))
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .unwrap_or_default();
                writeln!(
                    stdout,
                    "{position}\t{}\t{}\t{}\t{}\t{suggestions}",
                    r.original,
                    r.status.as_str(),
                    r.corrected.as_deref().unwrap_or(""),
                    r.flagged_by.map(|f| f.as_str()).unwrap_or(""),
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(())
}

pub fn cmd_suggest(word: &str, config: &Config, stdout: &mut dyn Write) -> Result<()> {
    let checker = config.build_checker()?;
    let list = checker.suggestions_for(word)?;
    for s in &list.items {
        writeln!(stdout, "{}\t{}", s.word, s.cost).map_err(io_err)?;
    }
    Ok(())
}

pub fn cmd_eval(corpus: &Path, config: &Config, stdout: &mut dyn Write) -> Result<()> {
    let entries = load_corpus(corpus)?;
    let checker = config.build_checker()?;
    let report = evaluate(&entries, &checker)?;
    let out = match config.output_format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Structured => report.to_structured(),
    };
    stdout.write_all(out.as_bytes()).map_err(io_err)
}

pub fn cmd_lexicon_stats(config: &Config, stdout: &mut dyn Write) -> Result<()> {
    let dict = config.load_lexicon()?;
    let mut class_counts = [0usize; 5];
    let mut unsegmentable = 0;
    for word in dict.iter() {
        match segment(&word) {
            Ok(graphemes) => {
                for g in graphemes {
                    let i = GraphemeClass::ALL.iter().position(|c| *c == g.class).unwrap_or(0);
                    class_counts[i] += 1;
                }
            }
            Err(_) => unsegmentable += 1,
        }
    }
    let mut rows: Vec<(String, usize)> = vec![
        ("words".into(), dict.word_count()),
        ("nodes".into(), dict.node_count()),
        ("unsegmentable".into(), unsegmentable),
    ];
    for (class, n) in GraphemeClass::ALL.iter().zip(class_counts) {
        rows.push((class.name().to_string(), n));
    }
    let sep = match config.output_format {
        OutputFormat::Text => "\t",
        OutputFormat::Structured => "=",
    };
    for (k, v) in rows {
        writeln!(stdout, "{k}{sep}{v}").map_err(io_err)?;
    }
    Ok(())
}
