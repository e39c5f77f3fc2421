//! Scoring predicted lemmas against gold annotations.
//!
//! A token is correct iff the predicted lemma equals the gold lemma after
//! NFC. Besides overall and per-PoS accuracy, tokens are split into
//! inflected (gold lemma differs from the surface) and non-inflected ones.
//! For the inflected split a system positive is a prediction that changed
//! the surface; precision is the share of those that are correct, recall
//! the share of gold-inflected tokens predicted correctly. The
//! non-inflected split is symmetric with "left unchanged" as positive.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use unicode_normalization::{is_nfc, UnicodeNormalization};

use crate::error::{Error, Result};
use crate::parallel;
use crate::pipeline::{LemmatizedSentence, TsvSentence};
use crate::resources::PosClass;

/// A gold-annotated token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldToken {
    pub surface: String,
    pub pos: PosClass,
    pub lemma: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    NonInflected,
    Inflected,
}

impl Split {
    pub fn label(self) -> &'static str {
        match self {
            Split::NonInflected => "Non-inflected",
            Split::Inflected => "Inflected",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PosBucket {
    pub total: usize,
    pub correct: usize,
    pub accuracy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// Gold tokens in this split.
    pub support: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub total: usize,
    pub correct: usize,
    /// Absent when there are no tokens.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accuracy: Option<f64>,
    /// Only classes with at least one gold token appear.
    pub per_pos: BTreeMap<PosClass, PosBucket>,
    pub split_metrics: BTreeMap<Split, SplitMetrics>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct SplitCounts {
    system_positive: usize,
    system_positive_correct: usize,
    gold_positive: usize,
    gold_positive_correct: usize,
}

impl SplitCounts {
    fn merge(self, o: SplitCounts) -> SplitCounts {
        SplitCounts {
            system_positive: self.system_positive + o.system_positive,
            system_positive_correct: self.system_positive_correct + o.system_positive_correct,
            gold_positive: self.gold_positive + o.gold_positive,
            gold_positive_correct: self.gold_positive_correct + o.gold_positive_correct,
        }
    }

    fn metrics(self) -> SplitMetrics {
        let precision = ratio(self.system_positive_correct, self.system_positive);
        let recall = ratio(self.gold_positive_correct, self.gold_positive);
        SplitMetrics {
            precision,
            recall,
            f1: harmonic_mean(precision, recall),
            support: self.gold_positive,
        }
    }
}

/// Mergeable tallies; the report is a pure function of these.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counts {
    per_pos: BTreeMap<PosClass, (usize, usize)>,
    inflected: SplitCounts,
    non_inflected: SplitCounts,
}

impl Counts {
    pub fn add(&mut self, surface: &str, pos: PosClass, gold: &str, predicted: &str) {
        let (surface, gold, predicted) = (nfc(surface), nfc(gold), nfc(predicted));
        let correct = gold == predicted;
        let bucket = self.per_pos.entry(pos).or_default();
        bucket.0 += 1;
        bucket.1 += usize::from(correct);

        let by_gold = self.split_mut(gold != surface);
        by_gold.gold_positive += 1;
        by_gold.gold_positive_correct += usize::from(correct);
        let by_system = self.split_mut(predicted != surface);
        by_system.system_positive += 1;
        by_system.system_positive_correct += usize::from(correct);
    }

    fn split_mut(&mut self, inflected: bool) -> &mut SplitCounts {
        if inflected {
            &mut self.inflected
        } else {
            &mut self.non_inflected
        }
    }

    pub fn merge(mut self, other: Counts) -> Counts {
        for (pos, (t, c)) in other.per_pos {
            let b = self.per_pos.entry(pos).or_default();
            b.0 += t;
            b.1 += c;
        }
        self.inflected = self.inflected.merge(other.inflected);
        self.non_inflected = self.non_inflected.merge(other.non_inflected);
        self
    }

    pub fn report(&self) -> EvalReport {
        let total = self.per_pos.values().map(|b| b.0).sum();
        let correct = self.per_pos.values().map(|b| b.1).sum();
        let per_pos = self
            .per_pos
            .iter()
            .filter(|(_, b)| b.0 > 0)
            .map(|(&pos, &(t, c))| {
                (
                    pos,
                    PosBucket {
                        total: t,
                        correct: c,
                        accuracy: ratio(c, t),
                    },
                )
            })
            .collect();
        let split_metrics = [
            (Split::NonInflected, self.non_inflected.metrics()),
            (Split::Inflected, self.inflected.metrics()),
        ]
        .into_iter()
        .collect();
        EvalReport {
            total,
            correct,
            accuracy: (total > 0).then(|| ratio(correct, total)),
            per_pos,
            split_metrics,
        }
    }
}

fn nfc(s: &str) -> Cow<'_, str> {
    if is_nfc(s) {
        Cow::Borrowed(s)
    } else {
        Cow::Owned(s.nfc().collect())
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn harmonic_mean(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

/// Scores aligned gold tokens and predicted lemmas.
pub fn score<S: AsRef<str>>(gold: &[GoldToken], predictions: &[S]) -> Result<EvalReport> {
    if gold.len() != predictions.len() {
        return Err(Error::Alignment {
            gold: gold.len(),
            predicted: predictions.len(),
        });
    }
    let mut counts = Counts::default();
    for (g, p) in gold.iter().zip(predictions) {
        counts.add(&g.surface, g.pos, &g.lemma, p.as_ref());
    }
    Ok(counts.report())
}

/// Scores lemmatized TSV sentences against their gold column, folding
/// per-sentence tallies in parallel when enabled.
pub fn score_sentences(
    gold: &[TsvSentence],
    predicted: &[LemmatizedSentence],
) -> Result<EvalReport> {
    let gold_tokens: usize = gold.iter().map(|s| s.tokens.len()).sum();
    let predicted_tokens: usize = predicted.iter().map(|s| s.tokens.len()).sum();
    if gold.len() != predicted.len()
        || gold_tokens != predicted_tokens
        || gold
            .iter()
            .zip(predicted)
            .any(|(g, p)| g.tokens.len() != p.tokens.len())
    {
        return Err(Error::Alignment {
            gold: gold_tokens,
            predicted: predicted_tokens,
        });
    }
    let pairs: Vec<(&TsvSentence, &LemmatizedSentence)> = gold.iter().zip(predicted).collect();
    for (g, _) in &pairs {
        if let Some(t) = g.tokens.iter().find(|t| t.gold_lemma.is_none()) {
            return Err(Error::MissingGoldLemma { line: t.line });
        }
    }
    let counts = parallel::map_reduce(
        &pairs,
        |(g, p)| {
            let mut c = Counts::default();
            for (tok, (_, result)) in g.tokens.iter().zip(&p.tokens) {
                let gold_lemma = tok.gold_lemma.as_deref().unwrap_or_default();
                c.add(&tok.token.surface, tok.token.pos, gold_lemma, &result.lemma);
            }
            c
        },
        Counts::default,
        Counts::merge,
    );
    Ok(counts.report())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Json,
}

/// Row order of the accuracy table.
const ROW_ORDER: [PosClass; 9] = [
    PosClass::Noun,
    PosClass::Pronoun,
    PosClass::Verb,
    PosClass::Adverb,
    PosClass::Adjective,
    PosClass::Postposition,
    PosClass::Conjunction,
    PosClass::Interjection,
    PosClass::Other,
];

pub fn percent(fraction: f64) -> String {
    format!("{:.2}", fraction * 100.0)
}

pub fn render_report(report: &EvalReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Table => render_table(report),
    }
}

fn render_table(report: &EvalReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<14} {:>7} {:>7} {:>12}",
        "PoS", "Total", "Correct", "Accuracy (%)"
    )
    .unwrap();
    for pos in ROW_ORDER {
        if let Some(b) = report.per_pos.get(&pos) {
            writeln!(
                out,
                "{:<14} {:>7} {:>7} {:>12}",
                pos.name(),
                b.total,
                b.correct,
                percent(b.accuracy)
            )
            .unwrap();
        }
    }
    let overall = report
        .accuracy
        .map(percent)
        .unwrap_or_else(|| "-".to_string());
    writeln!(
        out,
        "{:<14} {:>7} {:>7} {:>12}",
        "Overall", report.total, report.correct, overall
    )
    .unwrap();
    out.push('\n');
    writeln!(
        out,
        "{:<14} {:>9} {:>9} {:>9} {:>7}",
        "Split", "Precision", "Recall", "F1", "Support"
    )
    .unwrap();
    for (split, m) in &report.split_metrics {
        writeln!(
            out,
            "{:<14} {:>9.4} {:>9.4} {:>9.4} {:>7}",
            split.label(),
            m.precision,
            m.recall,
            m.f1,
            m.support
        )
        .unwrap();
    }
    out
}
