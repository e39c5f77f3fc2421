//! Text normalization helpers shared by resource loading and input handling.

use unicode_normalization::UnicodeNormalization;

const ZWNJ: char = '\u{200C}';
const ZWJ: char = '\u{200D}';

/// NFC-normalizes `s`.
pub fn nfc(s: &str) -> String {
    s.nfc().collect()
}

/// Length in Unicode scalar values, the unit every marker comparison uses.
pub fn char_len(s: &str) -> usize {
    s.chars().count()
}

/// Removes zero-width joiner and non-joiner characters.
pub fn strip_invisibles(s: &str) -> String {
    s.chars().filter(|&c| c != ZWJ && c != ZWNJ).collect()
}

/// Sorts by codepoint length descending, ties lexicographic, and drops
/// duplicates.
pub(crate) fn sort_length_desc(items: &mut Vec<String>) {
    items.sort_by(|a, b| char_len(b).cmp(&char_len(a)).then_with(|| a.cmp(b)));
    items.dedup();
}
