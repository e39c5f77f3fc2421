//! Immutable linguistic resources: the PoS-clustered lemma dictionary, noun
//! and adjective marker inventories, the verb suffix table with its
//! root-to-lemma map, and the narrow-to-basic PoS projection.
//!
//! Every string is NFC-normalized on the way in, and every marker or suffix
//! list is re-sorted longest first, so downstream code can rely on exact
//! codepoint comparison and first-match-is-longest iteration.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::marker::PhantomData;
use std::path::Path;
use std::str::FromStr;

use serde::de::{Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{nfc, sort_length_desc};

const SAMPLE_DICTIONARY: &str = include_str!("../data/dictionary.json");
const SAMPLE_MARKERS: &str = include_str!("../data/markers.json");
const SAMPLE_VERBS: &str = include_str!("../data/verbs.json");
const SAMPLE_PROJECTION: &str = include_str!("../data/projection.json");

/// Basic part-of-speech classes used for dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PosClass {
    Noun,
    Pronoun,
    Verb,
    Adjective,
    Adverb,
    Postposition,
    Conjunction,
    Interjection,
    /// Punctuation, symbols, and anything that does not project elsewhere.
    Other,
}

impl PosClass {
    pub const ALL: [PosClass; 9] = [
        PosClass::Noun,
        PosClass::Pronoun,
        PosClass::Verb,
        PosClass::Adjective,
        PosClass::Adverb,
        PosClass::Postposition,
        PosClass::Conjunction,
        PosClass::Interjection,
        PosClass::Other,
    ];

    /// Classes that own a dictionary cluster, in file order.
    pub const CLUSTERED: [PosClass; 6] = [
        PosClass::Noun,
        PosClass::Pronoun,
        PosClass::Verb,
        PosClass::Adverb,
        PosClass::Adjective,
        PosClass::Postposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PosClass::Noun => "Noun",
            PosClass::Pronoun => "Pronoun",
            PosClass::Verb => "Verb",
            PosClass::Adjective => "Adjective",
            PosClass::Adverb => "Adverb",
            PosClass::Postposition => "Postposition",
            PosClass::Conjunction => "Conjunction",
            PosClass::Interjection => "Interjection",
            PosClass::Other => "Other",
        }
    }

    /// Key of this class's cluster in the dictionary file.
    pub fn cluster_key(self) -> Option<&'static str> {
        match self {
            PosClass::Noun => Some("nouns"),
            PosClass::Pronoun => Some("pronouns"),
            PosClass::Verb => Some("verbs"),
            PosClass::Adjective => Some("adjectives"),
            PosClass::Adverb => Some("adverbs"),
            PosClass::Postposition => Some("postpositions"),
            _ => None,
        }
    }

    /// Parses a basic class name, case-insensitively. Accepts the singular
    /// class name and its dictionary cluster key.
    pub fn from_name(s: &str) -> Option<PosClass> {
        let lower = s.trim().to_ascii_lowercase();
        PosClass::ALL.into_iter().find(|p| {
            p.name().eq_ignore_ascii_case(&lower) || p.cluster_key() == Some(lower.as_str())
        })
    }
}

impl fmt::Display for PosClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PosClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        PosClass::from_name(s).ok_or_else(|| format!("unknown PoS class {s:?}"))
    }
}

/// Suffix marker categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MarkerCategory {
    Plural,
    Case,
    Determiner,
    Emphasis,
    Degree,
}

impl MarkerCategory {
    pub const ALL: [MarkerCategory; 5] = [
        MarkerCategory::Plural,
        MarkerCategory::Case,
        MarkerCategory::Determiner,
        MarkerCategory::Emphasis,
        MarkerCategory::Degree,
    ];

    pub fn abbreviation(self) -> &'static str {
        match self {
            MarkerCategory::Plural => "PM",
            MarkerCategory::Case => "CM",
            MarkerCategory::Determiner => "DM",
            MarkerCategory::Emphasis => "EM",
            MarkerCategory::Degree => "DgM",
        }
    }

    pub fn file_key(self) -> &'static str {
        match self {
            MarkerCategory::Plural => "plural",
            MarkerCategory::Case => "case",
            MarkerCategory::Determiner => "determiner",
            MarkerCategory::Emphasis => "emphasis",
            MarkerCategory::Degree => "degree",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for MarkerCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

/// Marker inventories, one length-descending list per category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerSet {
    lists: [Vec<String>; 5],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MarkersFile {
    plural: Vec<String>,
    case: Vec<String>,
    determiner: Vec<String>,
    emphasis: Vec<String>,
    degree: Vec<String>,
}

impl MarkerSet {
    /// Builds a marker set from per-category lists. Lists are normalized,
    /// deduplicated and sorted; a category left out, or given no markers, is
    /// rejected.
    pub fn new<I, S>(lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MarkerCategory, Vec<S>)>,
        S: AsRef<str>,
    {
        Self::build(lists, "<memory>")
    }

    fn build<I, S>(lists: I, file: &str) -> Result<Self>
    where
        I: IntoIterator<Item = (MarkerCategory, Vec<S>)>,
        S: AsRef<str>,
    {
        let mut out: [Option<Vec<String>>; 5] = Default::default();
        for (category, markers) in lists {
            let normalized = normalize_list(&markers, file, category.file_key())?;
            out[category.index()] = Some(normalized);
        }
        let mut lists: [Vec<String>; 5] = Default::default();
        for category in MarkerCategory::ALL {
            match out[category.index()].take() {
                Some(list) if !list.is_empty() => lists[category.index()] = list,
                _ => {
                    return Err(Error::MalformedResource {
                        file: file.to_string(),
                        location: format!("key {:?}", category.file_key()),
                        message: "marker category has no markers".to_string(),
                    })
                }
            }
        }
        Ok(MarkerSet { lists })
    }

    pub fn get(&self, category: MarkerCategory) -> &[String] {
        &self.lists[category.index()]
    }

    pub fn from_json_str(json: &str, file: &str) -> Result<Self> {
        let raw: MarkersFile = serde_json::from_str(json).map_err(|e| malformed(file, &e))?;
        Self::build(
            [
                (MarkerCategory::Plural, raw.plural),
                (MarkerCategory::Case, raw.case),
                (MarkerCategory::Determiner, raw.determiner),
                (MarkerCategory::Emphasis, raw.emphasis),
                (MarkerCategory::Degree, raw.degree),
            ],
            file,
        )
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<&str, &[String]> = MarkerCategory::ALL
            .iter()
            .map(|&c| (c.file_key(), self.get(c)))
            .collect();
        to_pretty(&map)
    }

    /// The bundled noun/adjective marker inventory.
    pub fn sample() -> Self {
        Self::from_json_str(SAMPLE_MARKERS, "markers.json").expect("bundled markers are valid")
    }
}

/// A word-to-lemma map for one PoS class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Cluster {
    entries: HashMap<String, String>,
}

impl Cluster {
    /// Builds a cluster from already-normalized pairs. Later pairs win.
    pub fn from_pairs<I, K, V>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: Into<String>,
    {
        Cluster {
            entries: pairs
                .into_iter()
                .map(|(k, v)| (k.into(), v.into()))
                .collect(),
        }
    }

    pub fn get(&self, word: &str) -> Option<&str> {
        self.entries.get(word).map(String::as_str)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    fn sorted(&self) -> BTreeMap<&str, &str> {
        self.iter().collect()
    }
}

/// PoS-clustered word-to-lemma dictionary.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaDictionary {
    clusters: BTreeMap<PosClass, Cluster>,
}

static EMPTY_CLUSTER: std::sync::LazyLock<Cluster> = std::sync::LazyLock::new(Cluster::default);

impl LemmaDictionary {
    /// The cluster for `pos`. Classes without a cluster get an empty one.
    pub fn cluster(&self, pos: PosClass) -> &Cluster {
        self.clusters.get(&pos).unwrap_or(&EMPTY_CLUSTER)
    }

    pub fn with_cluster(mut self, pos: PosClass, cluster: Cluster) -> Self {
        self.clusters.insert(pos, cluster);
        self
    }

    pub fn len(&self) -> usize {
        self.clusters.values().map(Cluster::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn from_json_str(json: &str, file: &str) -> Result<Self> {
        let raw: Entries<Entries<String>> =
            serde_json::from_str(json).map_err(|e| malformed(file, &e))?;
        let mut clusters = BTreeMap::new();
        for (key, pairs) in raw.0 {
            let pos = PosClass::CLUSTERED
                .into_iter()
                .find(|p| p.cluster_key() == Some(key.as_str()))
                .ok_or_else(|| Error::MalformedResource {
                    file: file.to_string(),
                    location: format!("key {key:?}"),
                    message: "not a dictionary cluster name".to_string(),
                })?;
            if clusters.contains_key(&pos) {
                return Err(Error::MalformedResource {
                    file: file.to_string(),
                    location: format!("key {key:?}"),
                    message: "cluster appears twice".to_string(),
                });
            }
            clusters.insert(pos, build_map(pairs.0, file, &key)?);
        }
        for pos in PosClass::CLUSTERED {
            if !clusters.contains_key(&pos) {
                return Err(Error::MalformedResource {
                    file: file.to_string(),
                    location: "top level".to_string(),
                    message: format!("missing cluster {:?}", pos.cluster_key().unwrap()),
                });
            }
        }
        Ok(LemmaDictionary { clusters })
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<&str, BTreeMap<&str, &str>> = PosClass::CLUSTERED
            .iter()
            .map(|&p| (p.cluster_key().unwrap(), self.cluster(p).sorted()))
            .collect();
        to_pretty(&map)
    }

    /// Lemma values that are not themselves entries mapping to themselves.
    /// Re-lemmatizing such a lemma is not guaranteed to be a fixed point.
    pub fn unanchored_lemmas(&self) -> Vec<(PosClass, String)> {
        let mut out = Vec::new();
        for (&pos, cluster) in &self.clusters {
            let mut missing: Vec<&str> = cluster
                .iter()
                .map(|(_, lemma)| lemma)
                .filter(|lemma| cluster.get(lemma) != Some(*lemma))
                .collect();
            missing.sort_unstable();
            missing.dedup();
            out.extend(missing.into_iter().map(|l| (pos, l.to_string())));
        }
        out
    }

    pub fn sample() -> Self {
        Self::from_json_str(SAMPLE_DICTIONARY, "dictionary.json")
            .expect("bundled dictionary is valid")
    }
}

/// Verb suffix inventory and root-to-lemma map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbResources {
    suffixes: Vec<String>,
    root_lemma: Cluster,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerbFile {
    suffixes: Vec<String>,
    root_lemma: Entries<String>,
}

impl VerbResources {
    pub fn new<S, R, K, V>(suffixes: &[S], root_lemma: R) -> Result<Self>
    where
        S: AsRef<str>,
        R: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: Into<String>,
    {
        let pairs = root_lemma
            .into_iter()
            .map(|(k, v)| (k.into(), v.into()))
            .collect();
        Self::build(suffixes, pairs, "<memory>")
    }

    fn build<S: AsRef<str>>(
        suffixes: &[S],
        root_lemma: Vec<(String, String)>,
        file: &str,
    ) -> Result<Self> {
        Ok(VerbResources {
            suffixes: normalize_list(suffixes, file, "suffixes")?,
            root_lemma: build_map(root_lemma, file, "root_lemma")?,
        })
    }

    pub fn suffixes(&self) -> &[String] {
        &self.suffixes
    }

    pub fn root_lemma(&self) -> &Cluster {
        &self.root_lemma
    }

    pub fn from_json_str(json: &str, file: &str) -> Result<Self> {
        let raw: VerbFile = serde_json::from_str(json).map_err(|e| malformed(file, &e))?;
        Self::build(&raw.suffixes, raw.root_lemma.0, file)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            suffixes: &'a [String],
            root_lemma: BTreeMap<&'a str, &'a str>,
        }
        to_pretty(&Out {
            suffixes: &self.suffixes,
            root_lemma: self.root_lemma.sorted(),
        })
    }

    pub fn sample() -> Self {
        Self::from_json_str(SAMPLE_VERBS, "verbs.json").expect("bundled verb resources are valid")
    }
}

/// Projection from a narrow tagset onto [`PosClass`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosProjection {
    narrow_to_basic: BTreeMap<String, PosClass>,
    default_class: PosClass,
}

impl PosProjection {
    pub fn new(narrow_to_basic: BTreeMap<String, PosClass>) -> Self {
        PosProjection {
            narrow_to_basic,
            default_class: PosClass::Other,
        }
    }

    /// Resolves a tag through the table, then as a basic class name.
    /// `None` means the tag is unknown.
    pub fn lookup(&self, tag: &str) -> Option<PosClass> {
        let tag = tag.trim();
        self.narrow_to_basic
            .get(tag)
            .or_else(|| self.narrow_to_basic.get(&tag.to_ascii_uppercase()))
            .copied()
            .or_else(|| PosClass::from_name(tag))
    }

    /// Total projection: unknown tags fall back to the default class.
    pub fn project(&self, tag: &str) -> PosClass {
        self.lookup(tag).unwrap_or(self.default_class)
    }

    pub fn default_class(&self) -> PosClass {
        self.default_class
    }

    pub fn len(&self) -> usize {
        self.narrow_to_basic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.narrow_to_basic.is_empty()
    }

    pub fn from_json_str(json: &str, file: &str) -> Result<Self> {
        let raw: Entries<String> = serde_json::from_str(json).map_err(|e| malformed(file, &e))?;
        let mut table = BTreeMap::new();
        for (tag, class) in raw.0 {
            let pos = PosClass::from_name(&class).ok_or_else(|| Error::MalformedResource {
                file: file.to_string(),
                location: format!("key {tag:?}"),
                message: format!("{class:?} is not a PoS class"),
            })?;
            table.insert(tag.trim().to_string(), pos);
        }
        Ok(PosProjection::new(table))
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<&str, &str> = self
            .narrow_to_basic
            .iter()
            .map(|(k, v)| (k.as_str(), v.name()))
            .collect();
        to_pretty(&map)
    }
}

impl Default for PosProjection {
    /// The bundled projection for the 30-tag Bengali LDC tagset.
    fn default() -> Self {
        Self::from_json_str(SAMPLE_PROJECTION, "projection.json")
            .expect("bundled projection is valid")
    }
}

/// Everything the lemmatizer reads. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceBundle {
    pub markers: MarkerSet,
    pub dictionary: LemmaDictionary,
    pub verbs: VerbResources,
    pub projection: PosProjection,
}

/// A non-fatal resource problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    /// A dictionary lemma that does not map to itself in its cluster.
    UnanchoredLemma { pos: PosClass, lemma: String },
    /// A root-to-lemma target missing from the verb cluster.
    UnanchoredVerbLemma { root: String, lemma: String },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::UnanchoredLemma { pos, lemma } => {
                write!(f, "{pos} lemma {lemma:?} is not a self-mapped entry")
            }
            ValidationIssue::UnanchoredVerbLemma { root, lemma } => write!(
                f,
                "root {root:?} maps to {lemma:?}, which is not a self-mapped verb entry"
            ),
        }
    }
}

impl ResourceBundle {
    pub fn load(
        dictionary_path: &Path,
        markers_path: &Path,
        verb_path: &Path,
        projection_path: Option<&Path>,
    ) -> Result<Self> {
        let dictionary = LemmaDictionary::from_json_str(
            &read(dictionary_path)?,
            &dictionary_path.display().to_string(),
        )?;
        let markers =
            MarkerSet::from_json_str(&read(markers_path)?, &markers_path.display().to_string())?;
        let verbs =
            VerbResources::from_json_str(&read(verb_path)?, &verb_path.display().to_string())?;
        let projection = match projection_path {
            Some(p) => PosProjection::from_json_str(&read(p)?, &p.display().to_string())?,
            None => PosProjection::default(),
        };
        Ok(ResourceBundle {
            markers,
            dictionary,
            verbs,
            projection,
        })
    }

    /// The resources bundled with this crate.
    pub fn sample() -> Self {
        ResourceBundle {
            markers: MarkerSet::sample(),
            dictionary: LemmaDictionary::sample(),
            verbs: VerbResources::sample(),
            projection: PosProjection::default(),
        }
    }

    pub fn validate(&self) -> Vec<ValidationIssue> {
        let mut issues: Vec<ValidationIssue> = self
            .dictionary
            .unanchored_lemmas()
            .into_iter()
            .map(|(pos, lemma)| ValidationIssue::UnanchoredLemma { pos, lemma })
            .collect();
        let verbs = self.dictionary.cluster(PosClass::Verb);
        let mut roots: Vec<(&str, &str)> = self.verbs.root_lemma.iter().collect();
        roots.sort_unstable();
        for (root, lemma) in roots {
            if verbs.get(lemma) != Some(lemma) {
                issues.push(ValidationIssue::UnanchoredVerbLemma {
                    root: root.to_string(),
                    lemma: lemma.to_string(),
                });
            }
        }
        issues
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn malformed(file: &str, err: &serde_json::Error) -> Error {
    Error::MalformedResource {
        file: file.to_string(),
        location: format!("line {} column {}", err.line(), err.column()),
        message: err.to_string(),
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("resource maps serialize");
    s.push('\n');
    s
}

fn normalize_list<S: AsRef<str>>(items: &[S], file: &str, list: &str) -> Result<Vec<String>> {
    let mut out = Vec::with_capacity(items.len());
    for item in items {
        let s = nfc(item.as_ref());
        if s.is_empty() {
            return Err(Error::EmptyMarker {
                file: file.to_string(),
                list: list.to_string(),
            });
        }
        out.push(s);
    }
    sort_length_desc(&mut out);
    Ok(out)
}

fn build_map(pairs: Vec<(String, String)>, file: &str, cluster: &str) -> Result<Cluster> {
    let mut entries: HashMap<String, String> = HashMap::with_capacity(pairs.len());
    for (word, lemma) in pairs {
        let (word, lemma) = (nfc(&word), nfc(&lemma));
        if word.is_empty() || lemma.is_empty() {
            return Err(Error::MalformedResource {
                file: file.to_string(),
                location: format!("{cluster}/{word:?}"),
                message: "empty word or lemma".to_string(),
            });
        }
        match entries.get(&word) {
            Some(existing) if *existing != lemma => {
                return Err(Error::ConflictingEntry {
                    file: file.to_string(),
                    cluster: cluster.to_string(),
                    word,
                    first: existing.clone(),
                    second: lemma,
                })
            }
            Some(_) => {}
            None => {
                entries.insert(word, lemma);
            }
        }
    }
    Ok(Cluster { entries })
}

/// A JSON object read as an ordered list of entries, so repeated keys
/// survive parsing and can be checked.
struct Entries<V>(Vec<(String, V)>);

impl<'de, V: Deserialize<'de>> Deserialize<'de> for Entries<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for EntriesVisitor<V> {
            type Value = Entries<V>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a JSON object")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut out = Vec::with_capacity(map.size_hint().unwrap_or(0));
                while let Some((k, v)) = map.next_entry::<String, V>()? {
                    out.push((k, v));
                }
                Ok(Entries(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor(PhantomData))
    }
}
