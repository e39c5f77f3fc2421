//! Part-of-speech aware lemmatizer for Bangla.
//!
//! Inflected words are reduced to their lemma by stripping ordered
//! sequences of suffix markers (plural, case, determiner, emphasis, degree)
//! chosen by the word's PoS class, with a PoS-clustered dictionary able to
//! stop stripping at any step. Verbs go through suffix removal and a
//! root-to-lemma map instead.
//!
//! ```
//! use bn_lemma::{lemmatize_token, PosClass, ResourceBundle};
//!
//! let resources = ResourceBundle::sample();
//! let r = lemmatize_token("মানুষগুলোকেও", PosClass::Noun, &resources);
//! assert_eq!(r.lemma, "মানুষ");
//! ```

pub mod error;
pub mod evaluation;
pub mod lemmatizers;
pub mod parallel;
pub mod pipeline;
pub mod resources;
pub mod stripper;
pub mod text;

pub use error::{Error, Result};
pub use evaluation::{render_report, score, score_sentences, EvalReport, GoldToken, ReportFormat};
pub use lemmatizers::{LemmaResult, LemmaSource, StepKind, TraceStep};
pub use pipeline::{
    builtin_lookup_tagger, lemmatize_batch, lemmatize_sentence, lemmatize_tagged_file,
    lemmatize_token, read_tagged, write_tagged, ErrorMode, LemmatizedSentence, LookupTagger,
    ReadOptions, TaggedToken, TaggerSource,
};
pub use resources::{
    Cluster, LemmaDictionary, MarkerCategory, MarkerSet, PosClass, PosProjection, ResourceBundle,
    VerbResources,
};
pub use stripper::{strip_marker, strip_sequence, StripOutcome};
