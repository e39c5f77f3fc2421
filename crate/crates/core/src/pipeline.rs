//! Sentence-level lemmatization: PoS dispatch, tagged-TSV reading and
//! writing, a whitespace tokenizer, and a dictionary-lookup tagger for
//! untagged text.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::lemmatizers::{
    adjective_lemma, adverb_lemma, noun_lemma, postposition_lemma, pronoun_lemma, verb_lemma,
    LemmaResult,
};
use crate::parallel;
use crate::resources::{LemmaDictionary, PosClass, ResourceBundle};
use crate::text::{nfc, strip_invisibles};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedToken {
    pub surface: String,
    pub pos: PosClass,
    /// The tag as it appeared before projection, if any.
    pub narrow_tag: Option<String>,
}

impl TaggedToken {
    pub fn new(surface: impl Into<String>, pos: PosClass) -> Self {
        TaggedToken {
            surface: surface.into(),
            pos,
            narrow_tag: None,
        }
    }
}

/// Anything that assigns basic PoS classes to tokens.
pub trait TaggerSource {
    /// Tags pre-tokenized input. Must return one token per input token.
    fn tag_tokens(&self, tokens: &[String]) -> Vec<TaggedToken>;

    fn tag_text(&self, text: &str) -> Vec<TaggedToken> {
        self.tag_tokens(&tokenize(text))
    }
}

/// Tags each token with the first dictionary cluster that contains it,
/// searching Noun, Verb, Pronoun, Adjective, Adverb, Postposition.
#[derive(Debug, Clone, Copy)]
pub struct LookupTagger<'a> {
    dictionary: &'a LemmaDictionary,
}

const LOOKUP_ORDER: [PosClass; 6] = [
    PosClass::Noun,
    PosClass::Verb,
    PosClass::Pronoun,
    PosClass::Adjective,
    PosClass::Adverb,
    PosClass::Postposition,
];

impl<'a> LookupTagger<'a> {
    pub fn new(dictionary: &'a LemmaDictionary) -> Self {
        LookupTagger { dictionary }
    }
}

impl TaggerSource for LookupTagger<'_> {
    fn tag_tokens(&self, tokens: &[String]) -> Vec<TaggedToken> {
        tokens
            .iter()
            .map(|t| {
                let pos = LOOKUP_ORDER
                    .into_iter()
                    .find(|&p| self.dictionary.cluster(p).contains(t))
                    .unwrap_or(PosClass::Other);
                TaggedToken::new(t.clone(), pos)
            })
            .collect()
    }
}

/// Whitespace-tokenizes `sentence` and tags it with [`LookupTagger`].
pub fn builtin_lookup_tagger(sentence: &str, resources: &ResourceBundle) -> Vec<TaggedToken> {
    LookupTagger::new(&resources.dictionary).tag_text(sentence)
}

fn is_edge_punctuation(c: char) -> bool {
    matches!(
        c,
        '।' | '॥'
            | '?'
            | '!'
            | ','
            | '.'
            | ';'
            | ':'
            | '"'
            | '\''
            | '“'
            | '”'
            | '‘'
            | '’'
            | '('
            | ')'
            | '['
            | ']'
            | '-'
            | '—'
            | '–'
    )
}

/// Splits on Unicode whitespace and detaches leading and trailing
/// punctuation as separate tokens. Output is NFC.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        let chunk = nfc(chunk);
        let core_start = chunk
            .char_indices()
            .find(|&(_, c)| !is_edge_punctuation(c))
            .map(|(i, _)| i);
        let Some(start) = core_start else {
            out.extend(chunk.chars().map(String::from));
            continue;
        };
        let end = chunk
            .char_indices()
            .rev()
            .find(|&(_, c)| !is_edge_punctuation(c))
            .map(|(i, c)| i + c.len_utf8())
            .unwrap();
        out.extend(chunk[..start].chars().map(String::from));
        out.push(chunk[start..end].to_string());
        out.extend(chunk[end..].chars().map(String::from));
    }
    out
}

/// Lemmatizes one token according to its PoS class.
pub fn lemmatize_token(surface: &str, pos: PosClass, resources: &ResourceBundle) -> LemmaResult {
    let m = &resources.markers;
    let d = &resources.dictionary;
    match pos {
        PosClass::Noun => noun_lemma(surface, m, d),
        PosClass::Pronoun => pronoun_lemma(surface, m, d),
        PosClass::Verb => verb_lemma(surface, &resources.verbs, d),
        PosClass::Adverb => adverb_lemma(surface, m, d),
        PosClass::Adjective => adjective_lemma(surface, m, d),
        PosClass::Postposition => postposition_lemma(surface, m, d),
        PosClass::Conjunction | PosClass::Interjection | PosClass::Other => {
            LemmaResult::identity(surface)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmatizedSentence {
    pub tokens: Vec<(TaggedToken, LemmaResult)>,
    /// Lemmas joined by single spaces.
    pub rendered: String,
}

impl LemmatizedSentence {
    pub fn lemmas(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|(_, r)| r.lemma.as_str())
    }
}

pub fn lemmatize_sentence(
    sentence: &[TaggedToken],
    resources: &ResourceBundle,
) -> LemmatizedSentence {
    let tokens: Vec<(TaggedToken, LemmaResult)> = sentence
        .iter()
        .map(|t| (t.clone(), lemmatize_token(&t.surface, t.pos, resources)))
        .collect();
    let rendered = tokens
        .iter()
        .map(|(_, r)| r.lemma.as_str())
        .collect::<Vec<_>>()
        .join(" ");
    LemmatizedSentence { tokens, rendered }
}

/// Lemmatizes many sentences, in parallel when the `parallel` feature is
/// on. Output order always matches input order.
pub fn lemmatize_batch(
    sentences: &[Vec<TaggedToken>],
    resources: &ResourceBundle,
) -> Vec<LemmatizedSentence> {
    parallel::map(sentences, |s| lemmatize_sentence(s, resources))
}

pub fn lemmatize_batch_sequential(
    sentences: &[Vec<TaggedToken>],
    resources: &ResourceBundle,
) -> Vec<LemmatizedSentence> {
    sentences
        .iter()
        .map(|s| lemmatize_sentence(s, resources))
        .collect()
}

/// How the TSV reader treats bad input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorMode {
    /// Skip malformed lines and project unknown tags to the default class,
    /// recording a warning for each.
    Lenient,
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadOptions {
    pub mode: ErrorMode,
    pub strip_invisibles: bool,
    pub require_gold: bool,
}

impl Default for ReadOptions {
    fn default() -> Self {
        ReadOptions {
            mode: ErrorMode::Lenient,
            strip_invisibles: false,
            require_gold: false,
        }
    }
}

/// One token line of an annotated TSV file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsvToken {
    pub line: usize,
    pub token: TaggedToken,
    pub gold_lemma: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TsvSentence {
    /// Comment lines (including the leading `#`) seen before this sentence.
    pub comments: Vec<String>,
    pub tokens: Vec<TsvToken>,
}

impl TsvSentence {
    pub fn tagged(&self) -> Vec<TaggedToken> {
        self.tokens.iter().map(|t| t.token.clone()).collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TsvDocument {
    pub sentences: Vec<TsvSentence>,
    /// Comments after the last sentence.
    pub trailing_comments: Vec<String>,
    /// Recoverable problems, already formatted with line numbers.
    pub warnings: Vec<String>,
}

/// Reads the annotated TSV format: `surface<TAB>pos_tag[<TAB>gold_lemma]`,
/// one token per line, blank lines between sentences, `#` comments.
pub fn read_tagged<R: BufRead>(
    reader: R,
    resources: &ResourceBundle,
    options: &ReadOptions,
) -> Result<TsvDocument> {
    let mut doc = TsvDocument::default();
    let mut current = TsvSentence::default();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::io(format!("<input line {line_no}>"), e))?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() {
            if !current.tokens.is_empty() {
                doc.sentences.push(std::mem::take(&mut current));
            }
            continue;
        }
        if line.starts_with('#') {
            current.comments.push(line.to_string());
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(2..=3).contains(&fields.len()) || fields[0].trim().is_empty() {
            let err = Error::MalformedLine {
                line: line_no,
                found: fields.len(),
            };
            match options.mode {
                ErrorMode::Strict => return Err(err),
                ErrorMode::Lenient => {
                    doc.warnings.push(err.to_string());
                    continue;
                }
            }
        }
        let mut surface = nfc(fields[0].trim());
        if options.strip_invisibles {
            surface = strip_invisibles(&surface);
        }
        let tag = fields[1].trim();
        let pos = match resources.projection.lookup(tag) {
            Some(p) => p,
            None => {
                let err = Error::UnknownPosTag {
                    line: line_no,
                    tag: tag.to_string(),
                };
                match options.mode {
                    ErrorMode::Strict => return Err(err),
                    ErrorMode::Lenient => {
                        doc.warnings.push(format!(
                            "{err}; using {}",
                            resources.projection.default_class()
                        ));
                        resources.projection.default_class()
                    }
                }
            }
        };
        let mut gold_lemma = fields.get(2).map(|g| nfc(g.trim()));
        if options.strip_invisibles {
            gold_lemma = gold_lemma.map(|g| strip_invisibles(&g));
        }
        if options.require_gold && gold_lemma.as_deref().is_none_or(str::is_empty) {
            let err = Error::MissingGoldLemma { line: line_no };
            match options.mode {
                ErrorMode::Strict => return Err(err),
                ErrorMode::Lenient => {
                    doc.warnings.push(err.to_string());
                    continue;
                }
            }
        }
        current.tokens.push(TsvToken {
            line: line_no,
            token: TaggedToken {
                surface,
                pos,
                narrow_tag: Some(tag.to_string()),
            },
            gold_lemma,
        });
    }
    if !current.tokens.is_empty() {
        doc.sentences.push(current);
    } else {
        doc.trailing_comments = current.comments;
    }
    Ok(doc)
}

/// Lemmatizes every sentence of a parsed TSV document, in input order.
pub fn lemmatize_tagged_file(
    doc: &TsvDocument,
    resources: &ResourceBundle,
) -> Vec<LemmatizedSentence> {
    let tagged: Vec<Vec<TaggedToken>> = doc.sentences.iter().map(TsvSentence::tagged).collect();
    lemmatize_batch(&tagged, resources)
}

/// Writes the input rows back out with a `predicted_lemma` column appended.
pub fn write_tagged<W: Write>(
    mut out: W,
    doc: &TsvDocument,
    lemmatized: &[LemmatizedSentence],
) -> std::io::Result<()> {
    for (i, (sentence, result)) in doc.sentences.iter().zip(lemmatized).enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        for c in &sentence.comments {
            writeln!(out, "{c}")?;
        }
        for (tok, (_, lemma)) in sentence.tokens.iter().zip(&result.tokens) {
            let tag = tok
                .token
                .narrow_tag
                .as_deref()
                .unwrap_or(tok.token.pos.name());
            match &tok.gold_lemma {
                Some(g) => writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    tok.token.surface, tag, g, lemma.lemma
                )?,
                None => writeln!(out, "{}\t{}\t{}", tok.token.surface, tag, lemma.lemma)?,
            }
        }
    }
    if !doc.trailing_comments.is_empty() && !doc.sentences.is_empty() {
        writeln!(out)?;
    }
    for c in &doc.trailing_comments {
        writeln!(out, "{c}")?;
    }
    Ok(())
}
