use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use bn_lemma::evaluation::score_sentences;
use bn_lemma::pipeline::{lemmatize_batch, tokenize};
use bn_lemma::resources::ValidationIssue;
use bn_lemma::text::{nfc, strip_invisibles};
use bn_lemma::{
    lemmatize_tagged_file, lemmatize_token, read_tagged, render_report, write_tagged, ErrorMode,
    LemmaDictionary, LookupTagger, MarkerSet, PosProjection, ReadOptions, ReportFormat,
    ResourceBundle, TaggerSource, VerbResources,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Part-of-speech aware Bangla lemmatizer.
#[derive(Debug, Parser)]
#[command(name = "bn-lemma", version)]
struct Cli {
    #[command(flatten)]
    config: SharedArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SharedArgs {
    /// Dictionary JSON. Defaults to the bundled sample dictionary.
    #[arg(long, global = true, env = "BANLEMMA_DICT")]
    dict: Option<PathBuf>,

    /// Marker inventory JSON. Defaults to the bundled markers.
    #[arg(long, global = true, env = "BANLEMMA_MARKERS")]
    markers: Option<PathBuf>,

    /// Verb suffix and root map JSON. Defaults to the bundled table.
    #[arg(long, global = true, env = "BANLEMMA_VERBS")]
    verbs: Option<PathBuf>,

    /// Narrow-to-basic PoS projection JSON.
    #[arg(long, global = true)]
    projection: Option<PathBuf>,

    /// Fail on malformed lines and unknown tags instead of warning.
    #[arg(long, global = true)]
    strict: bool,

    /// Remove ZWJ/ZWNJ from input tokens.
    #[arg(long, global = true)]
    strip_invisibles: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Input file; stdin when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lemmatize raw sentences (one per line) or a tagged TSV file.
    Lemmatize {
        /// Input is annotated TSV rather than raw text.
        #[arg(long)]
        tagged: bool,
    },
    /// Lemmatize a gold TSV with its own tags and score against its lemmas.
    Eval {
        /// Skip bad lines with a warning instead of failing.
        #[arg(long, conflicts_with = "strict")]
        lenient: bool,
    },
    /// Lemmatize one word and show the stripping trace.
    Strip {
        word: String,
        /// Basic class name (noun, verb, ...) or narrow tag (NC, VM, ...).
        pos: String,
    },
}

fn load_resources(cfg: &SharedArgs) -> Result<ResourceBundle> {
    let read = |p: &PathBuf| -> Result<String> {
        std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
    };
    let label = |p: &PathBuf| p.display().to_string();
    let dictionary = match &cfg.dict {
        Some(p) => LemmaDictionary::from_json_str(&read(p)?, &label(p))?,
        None => LemmaDictionary::sample(),
    };
    let markers = match &cfg.markers {
        Some(p) => MarkerSet::from_json_str(&read(p)?, &label(p))?,
        None => MarkerSet::sample(),
    };
    let verbs = match &cfg.verbs {
        Some(p) => VerbResources::from_json_str(&read(p)?, &label(p))?,
        None => VerbResources::sample(),
    };
    let projection = match &cfg.projection {
        Some(p) => PosProjection::from_json_str(&read(p)?, &label(p))?,
        None => PosProjection::default(),
    };
    let bundle = ResourceBundle {
        markers,
        dictionary,
        verbs,
        projection,
    };
    for issue in bundle.validate() {
        warn_issue(&issue);
    }
    Ok(bundle)
}

fn warn_issue(issue: &ValidationIssue) {
    eprintln!("warning: {issue}");
}

fn open_input(cfg: &SharedArgs) -> Result<Box<dyn BufRead>> {
    Ok(match &cfg.input {
        Some(p) => Box::new(BufReader::new(
            File::open(p).with_context(|| format!("cannot open {}", p.display()))?,
        )),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

fn open_output(cfg: &SharedArgs) -> Result<Box<dyn Write>> {
    Ok(match &cfg.output {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn cmd_lemmatize(cfg: &SharedArgs, tagged: bool, resources: &ResourceBundle) -> Result<()> {
    let input = open_input(cfg)?;
    let mut out = open_output(cfg)?;
    if tagged {
        let options = ReadOptions {
            mode: if cfg.strict {
                ErrorMode::Strict
            } else {
                ErrorMode::Lenient
            },
            strip_invisibles: cfg.strip_invisibles,
            require_gold: false,
        };
        let doc = read_tagged(input, resources, &options)?;
        for w in &doc.warnings {
            eprintln!("warning: {w}");
        }
        let lemmatized = lemmatize_tagged_file(&doc, resources);
        write_tagged(&mut out, &doc, &lemmatized)?;
    } else {
        let mut text = String::new();
        let mut input = input;
        input.read_to_string(&mut text)?;
        let tagger = LookupTagger::new(&resources.dictionary);
        let sentences: Vec<_> = text
            .lines()
            .map(|line| {
                let line = if cfg.strip_invisibles {
                    strip_invisibles(line)
                } else {
                    line.to_string()
                };
                tagger.tag_tokens(&tokenize(&line))
            })
            .collect();
        for s in lemmatize_batch(&sentences, resources) {
            writeln!(out, "{}", s.rendered)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_eval(cfg: &SharedArgs, lenient: bool, resources: &ResourceBundle) -> Result<()> {
    let options = ReadOptions {
        mode: if lenient {
            ErrorMode::Lenient
        } else {
            ErrorMode::Strict
        },
        strip_invisibles: cfg.strip_invisibles,
        require_gold: true,
    };
    let doc = read_tagged(open_input(cfg)?, resources, &options)?;
    for w in &doc.warnings {
        eprintln!("warning: {w}");
    }
    let lemmatized = lemmatize_tagged_file(&doc, resources);
    let report = score_sentences(&doc.sentences, &lemmatized)?;
    let format = match cfg.format {
        Format::Table => ReportFormat::Table,
        Format::Json => ReportFormat::Json,
    };
    let mut out = open_output(cfg)?;
    out.write_all(render_report(&report, format).as_bytes())?;
    out.flush()?;
    Ok(())
}

fn cmd_strip(cfg: &SharedArgs, word: &str, tag: &str, resources: &ResourceBundle) -> Result<()> {
    let Some(pos) = resources.projection.lookup(tag) else {
        bail!("unknown PoS {tag:?}");
    };
    let mut word = nfc(word.trim());
    if cfg.strip_invisibles {
        word = strip_invisibles(&word);
    }
    if word.is_empty() {
        bail!("empty word");
    }
    let result = lemmatize_token(&word, pos, resources);
    let steps: Vec<String> = result.trace.iter().map(ToString::to_string).collect();
    let mut out = open_output(cfg)?;
    match cfg.format {
        Format::Table => {
            writeln!(out, "word:   {word}")?;
            writeln!(out, "pos:    {pos}")?;
            writeln!(out, "lemma:  {}", result.lemma)?;
            writeln!(out, "source: {}", result.source)?;
            if steps.is_empty() {
                writeln!(out, "trace:  (none)")?;
            } else {
                writeln!(out, "trace:  {}", steps.join(" "))?;
            }
        }
        Format::Json => {
            let value = serde_json::json!({
                "word": word,
                "pos": pos.name(),
                "lemma": result.lemma,
                "source": result.source.name(),
                "trace": steps,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let resources = load_resources(&cli.config)?;
    match &cli.command {
        Command::Lemmatize { tagged } => cmd_lemmatize(&cli.config, *tagged, &resources),
        Command::Eval { lenient } => cmd_eval(&cli.config, *lenient, &resources),
        Command::Strip { word, pos } => cmd_strip(&cli.config, word, pos, &resources),
    }
}
