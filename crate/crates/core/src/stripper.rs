//! Marker stripping: the single-category primitive and the sequence
//! executor that threads a word through several categories, stopping as
//! soon as the dictionary resolves it.

use crate::resources::{Cluster, MarkerCategory, MarkerSet};

/// Result of stripping one marker category from a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripOutcome {
    pub result: String,
    /// `true` iff `result` came out of the dictionary and is a final lemma.
    pub resolved: bool,
    pub stripped_marker: Option<String>,
}

impl StripOutcome {
    fn unchanged(word: &str) -> Self {
        StripOutcome {
            result: word.to_string(),
            resolved: false,
            stripped_marker: None,
        }
    }
}

/// Strips at most one marker from the end of `word`.
///
/// `markers` must be sorted longest first. The first marker whose removal
/// leaves a dictionary key wins and returns that key's lemma. Failing that,
/// the longest matching marker is removed. A marker that would consume the
/// whole word is not a candidate.
pub fn strip_marker(word: &str, markers: &[String], cluster: &Cluster) -> StripOutcome {
    let mut longest: Option<&str> = None;
    for marker in markers {
        if marker.len() >= word.len() || !word.ends_with(marker.as_str()) {
            continue;
        }
        let stem = &word[..word.len() - marker.len()];
        if let Some(lemma) = cluster.get(stem) {
            return StripOutcome {
                result: lemma.to_string(),
                resolved: true,
                stripped_marker: Some(marker.clone()),
            };
        }
        if longest.is_none() {
            longest = Some(marker);
        }
    }
    match longest {
        Some(marker) => StripOutcome {
            result: word[..word.len() - marker.len()].to_string(),
            resolved: false,
            stripped_marker: Some(marker.to_string()),
        },
        None => StripOutcome::unchanged(word),
    }
}

/// Outcome of a multi-category strip, with the markers removed on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceOutcome {
    pub result: String,
    pub resolved: bool,
    pub stripped: Vec<(MarkerCategory, String)>,
}

/// Applies [`strip_marker`] once per category in `sequence`, in order.
///
/// After each step the running word is looked up in `cluster`; a hit ends
/// the sequence with the mapped lemma.
pub fn strip_sequence(
    word: &str,
    sequence: &[MarkerCategory],
    marker_set: &MarkerSet,
    cluster: &Cluster,
) -> SequenceOutcome {
    let mut current = word.to_string();
    let mut stripped = Vec::new();
    for &category in sequence {
        let step = strip_marker(&current, marker_set.get(category), cluster);
        if let Some(marker) = step.stripped_marker {
            stripped.push((category, marker));
        }
        if step.resolved {
            return SequenceOutcome {
                result: step.result,
                resolved: true,
                stripped,
            };
        }
        current = step.result;
        if let Some(lemma) = cluster.get(&current) {
            return SequenceOutcome {
                result: lemma.to_string(),
                resolved: true,
                stripped,
            };
        }
    }
    SequenceOutcome {
        result: current,
        resolved: false,
        stripped,
    }
}
