//! Per-PoS lemmatization procedures.
//!
//! Nouns, pronouns, adjectives, adverbs and postpositions strip marker
//! categories in a fixed order against their own dictionary cluster. Verbs
//! use a two-pass procedure: strip the longest inflectional suffix to get a
//! root, then map the root to its dictionary-form lemma.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::resources::{LemmaDictionary, MarkerCategory, MarkerSet, PosClass, VerbResources};
use crate::stripper::strip_sequence;

use MarkerCategory::{Case, Degree, Determiner, Emphasis, Plural};

/// Where a lemma came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaSource {
    DictionaryHit,
    RuleStripped,
    RootMapped,
    Identity,
}

impl LemmaSource {
    pub fn name(self) -> &'static str {
        match self {
            LemmaSource::DictionaryHit => "dictionary-hit",
            LemmaSource::RuleStripped => "rule-stripped",
            LemmaSource::RootMapped => "root-mapped",
            LemmaSource::Identity => "identity",
        }
    }
}

impl fmt::Display for LemmaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a trace step removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    Marker(MarkerCategory),
    VerbSuffix,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Marker(c) => f.write_str(c.abbreviation()),
            StepKind::VerbSuffix => f.write_str("verb-suffix"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub stripped: String,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.stripped)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaResult {
    pub lemma: String,
    pub source: LemmaSource,
    pub trace: Vec<TraceStep>,
}

impl LemmaResult {
    pub fn identity(word: &str) -> Self {
        LemmaResult {
            lemma: word.to_string(),
            source: LemmaSource::Identity,
            trace: Vec::new(),
        }
    }

    fn dictionary(lemma: &str) -> Self {
        LemmaResult {
            lemma: lemma.to_string(),
            source: LemmaSource::DictionaryHit,
            trace: Vec::new(),
        }
    }
}

/// Accumulates marker steps across one or more sequences.
struct Run {
    word: String,
    trace: Vec<TraceStep>,
}

impl Run {
    fn new(word: &str) -> Self {
        Run {
            word: word.to_string(),
            trace: Vec::new(),
        }
    }

    /// Applies one sequence; returns the finished result on a dictionary hit.
    fn apply(
        &mut self,
        sequence: &[MarkerCategory],
        markers: &MarkerSet,
        dictionary: &LemmaDictionary,
        pos: PosClass,
    ) -> Option<LemmaResult> {
        let out = strip_sequence(&self.word, sequence, markers, dictionary.cluster(pos));
        self.trace
            .extend(out.stripped.into_iter().map(|(c, s)| TraceStep {
                kind: StepKind::Marker(c),
                stripped: s,
            }));
        if out.resolved {
            return Some(LemmaResult {
                lemma: out.result,
                source: LemmaSource::DictionaryHit,
                trace: std::mem::take(&mut self.trace),
            });
        }
        self.word = out.result;
        None
    }

    fn finish(self, original: &str) -> LemmaResult {
        if self.trace.is_empty() {
            debug_assert_eq!(self.word, original);
            LemmaResult::identity(original)
        } else {
            LemmaResult {
                lemma: self.word,
                source: LemmaSource::RuleStripped,
                trace: self.trace,
            }
        }
    }
}

fn by_sequence(
    word: &str,
    pos: PosClass,
    sequence: &[MarkerCategory],
    markers: &MarkerSet,
    dictionary: &LemmaDictionary,
) -> LemmaResult {
    if let Some(lemma) = dictionary.cluster(pos).get(word) {
        return LemmaResult::dictionary(lemma);
    }
    let mut run = Run::new(word);
    if let Some(done) = run.apply(sequence, markers, dictionary, pos) {
        return done;
    }
    run.finish(word)
}

/// Nouns: emphasis, case and determiner first; then plural and case in
/// whichever order the remaining ending calls for.
pub fn noun_lemma(word: &str, markers: &MarkerSet, dictionary: &LemmaDictionary) -> LemmaResult {
    if let Some(lemma) = dictionary.cluster(PosClass::Noun).get(word) {
        return LemmaResult::dictionary(lemma);
    }
    let mut run = Run::new(word);
    if let Some(done) = run.apply(
        &[Emphasis, Case, Determiner],
        markers,
        dictionary,
        PosClass::Noun,
    ) {
        return done;
    }
    if let Some(done) = run.apply(
        second_noun_sequence(&run.word, markers),
        markers,
        dictionary,
        PosClass::Noun,
    ) {
        return done;
    }
    run.finish(word)
}

/// `[PM, CM]` when `word` ends with a plural marker, else `[CM, PM]`.
pub fn second_noun_sequence(word: &str, markers: &MarkerSet) -> &'static [MarkerCategory] {
    if markers
        .get(Plural)
        .iter()
        .any(|m| word.ends_with(m.as_str()))
    {
        &[Plural, Case]
    } else {
        &[Case, Plural]
    }
}

/// Pronouns: emphasis, case, determiner, plural. Inherently suffixed forms
/// survive only when the pronoun cluster lists them.
pub fn pronoun_lemma(word: &str, markers: &MarkerSet, dictionary: &LemmaDictionary) -> LemmaResult {
    by_sequence(
        word,
        PosClass::Pronoun,
        &[Emphasis, Case, Determiner, Plural],
        markers,
        dictionary,
    )
}

/// Adjectives: emphasis then degree. Nominal suffixes are never touched.
pub fn adjective_lemma(
    word: &str,
    markers: &MarkerSet,
    dictionary: &LemmaDictionary,
) -> LemmaResult {
    by_sequence(
        word,
        PosClass::Adjective,
        &[Emphasis, Degree],
        markers,
        dictionary,
    )
}

pub fn adverb_lemma(word: &str, markers: &MarkerSet, dictionary: &LemmaDictionary) -> LemmaResult {
    by_sequence(word, PosClass::Adverb, &[Emphasis], markers, dictionary)
}

pub fn postposition_lemma(
    word: &str,
    markers: &MarkerSet,
    dictionary: &LemmaDictionary,
) -> LemmaResult {
    by_sequence(
        word,
        PosClass::Postposition,
        &[Emphasis],
        markers,
        dictionary,
    )
}

/// Verbs: dictionary, then longest proper suffix to a root, then the root
/// map (falling back to the verb cluster). Anything unresolved comes back
/// unchanged, since a bare root is not a word.
pub fn verb_lemma(word: &str, verbs: &VerbResources, dictionary: &LemmaDictionary) -> LemmaResult {
    let cluster = dictionary.cluster(PosClass::Verb);
    if let Some(lemma) = cluster.get(word) {
        return LemmaResult::dictionary(lemma);
    }
    let Some(suffix) = verbs
        .suffixes()
        .iter()
        .find(|s| s.len() < word.len() && word.ends_with(s.as_str()))
    else {
        return LemmaResult::identity(word);
    };
    let root = &word[..word.len() - suffix.len()];
    let trace = vec![TraceStep {
        kind: StepKind::VerbSuffix,
        stripped: suffix.clone(),
    }];
    if let Some(lemma) = verbs.root_lemma().get(root) {
        return LemmaResult {
            lemma: lemma.to_string(),
            source: LemmaSource::RootMapped,
            trace,
        };
    }
    if let Some(lemma) = cluster.get(root) {
        return LemmaResult {
            lemma: lemma.to_string(),
            source: LemmaSource::DictionaryHit,
            trace,
        };
    }
    LemmaResult::identity(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resources::{Cluster, ResourceBundle};
    use crate::text::nfc;

    fn sample() -> ResourceBundle {
        ResourceBundle::sample()
    }

    fn steps(r: &LemmaResult) -> Vec<String> {
        r.trace.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn noun_full_sequence() {
        let b = sample();
        let r = noun_lemma("মানুষগুলোকেও", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "মানুষ");
        assert_eq!(r.source, LemmaSource::DictionaryHit);
        assert_eq!(steps(&r), ["EM:ও", "CM:কে", "PM:গুলো"]);

        let r = noun_lemma("বইগুলিতেই", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "বই");
        assert_eq!(steps(&r), ["EM:ই", "CM:তে", "PM:গুলি"]);
    }

    #[test]
    fn noun_dictionary_hit_on_base_word() {
        let b = sample();
        let r = noun_lemma("কেতন", &b.markers, &b.dictionary);
        assert_eq!(r, LemmaResult::dictionary("কেতন"));
    }

    #[test]
    fn noun_rule_stripping_without_dictionary() {
        let b = sample();
        let empty = LemmaDictionary::default();
        let r = noun_lemma("গাছটাতেও", &b.markers, &empty);
        assert_eq!(r.lemma, "গাছ");
        assert_eq!(r.source, LemmaSource::RuleStripped);
        let r = noun_lemma("মানুষ", &b.markers, &empty);
        assert_eq!(r, LemmaResult::identity("মানুষ"));
    }

    #[test]
    fn second_sequence_branches() {
        let m = MarkerSet::sample();
        assert_eq!(second_noun_sequence("বালকগুলো", &m), [Plural, Case]);
        assert_eq!(second_noun_sequence("বালক", &m), [Case, Plural]);
    }

    #[test]
    fn pronoun_inherent_suffix_kept_by_dictionary() {
        let b = sample();
        let r = pronoun_lemma("তোমাদেরকেই", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "তোমাদের");
        assert_eq!(steps(&r), ["EM:ই", "CM:কে"]);
        let r = pronoun_lemma("আমি", &b.markers, &b.dictionary);
        assert_eq!(r.source, LemmaSource::DictionaryHit);
        assert_eq!(r.lemma, "আমি");
    }

    #[test]
    fn pronoun_without_dictionary_loses_inherent_suffix() {
        let b = sample();
        let r = pronoun_lemma("তারা", &b.markers, &LemmaDictionary::default());
        assert_eq!(r.lemma, "তা");
        assert_eq!(r.source, LemmaSource::RuleStripped);
        assert_eq!(steps(&r), ["PM:রা"]);
    }

    #[test]
    fn verb_two_pass() {
        let b = sample();
        for (word, suffix) in [("যাচ্ছি", "চ্ছি"), ("যাবো", "বো"), ("গিয়েছিলাম", "য়েছিলাম")]
        {
            let r = verb_lemma(&nfc(word), &b.verbs, &b.dictionary);
            assert_eq!(r.lemma, nfc("যাওয়া"), "{word}");
            assert_eq!(r.source, LemmaSource::RootMapped);
            assert_eq!(r.trace[0].stripped, nfc(suffix));
        }
        let r = verb_lemma("খেলছিলাম", &b.verbs, &b.dictionary);
        assert_eq!(r.lemma, "খেলা");
    }

    #[test]
    fn verb_dictionary_and_fallbacks() {
        let b = sample();
        let r = verb_lemma("করা", &b.verbs, &b.dictionary);
        assert_eq!(r, LemmaResult::dictionary("করা"));
        // Known suffix, unknown root: surface form, not the bare root.
        let r = verb_lemma("ফেলছি", &b.verbs, &b.dictionary);
        assert_eq!(r, LemmaResult::identity("ফেলছি"));
        // Suffix equal to the whole word is not a proper suffix.
        let r = verb_lemma("ছি", &b.verbs, &b.dictionary);
        assert_eq!(r.source, LemmaSource::Identity);
    }

    #[test]
    fn verb_root_found_in_verb_cluster() {
        let verbs = VerbResources::new(&["ছি"], Vec::<(String, String)>::new()).unwrap();
        let dict = LemmaDictionary::default()
            .with_cluster(PosClass::Verb, Cluster::from_pairs([("বল", "বলা")]));
        let r = verb_lemma("বলছি", &verbs, &dict);
        assert_eq!(r.lemma, "বলা");
        assert_eq!(r.source, LemmaSource::DictionaryHit);
    }

    #[test]
    fn adjective_degree_and_protection() {
        let b = sample();
        let r = adjective_lemma("ক্ষুদ্রতম", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "ক্ষুদ্র");
        assert_eq!(steps(&r), ["DgM:তম"]);
        let r = adjective_lemma("বৃহত্তর", &b.markers, &b.dictionary);
        assert_eq!(r, LemmaResult::dictionary("বৃহৎ"));
        let r = adjective_lemma("একটি", &b.markers, &b.dictionary);
        assert_eq!(r, LemmaResult::identity("একটি"));
        let r = adjective_lemma("নূন্যতম", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "নূন্য");
    }

    #[test]
    fn adverb_and_postposition() {
        let b = sample();
        let r = adverb_lemma("এখনও", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "এখন");
        assert_eq!(r.source, LemmaSource::DictionaryHit);
        let r = adverb_lemma("ধীরে", &b.markers, &b.dictionary);
        assert_eq!(r, LemmaResult::identity("ধীরে"));
        let r = adverb_lemma("হঠাৎই", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "হঠাৎ");
        assert_eq!(r.source, LemmaSource::RuleStripped);

        let r = postposition_lemma("জন্য", &b.markers, &b.dictionary);
        assert_eq!(r, LemmaResult::dictionary("জন্য"));
        let r = postposition_lemma("থেকেও", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "থেকে");
        let r = postposition_lemma("বিনাই", &b.markers, &b.dictionary);
        assert_eq!(r.lemma, "বিনা");
        assert_eq!(r.source, LemmaSource::RuleStripped);
    }
}
