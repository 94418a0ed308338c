//! Stemmer configuration: linguistic data files with bundled defaults.

use std::path::Path;

use crate::error::Result;

/// Raw text of the three stemmer data files. Defaults to the bundled
/// inventory; `from_dir` reads `patterns.tsv`, `affixes.tsv` and
/// `normalize.tsv` from a directory instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemmerConfig {
    pub pattern_text: String,
    pub affix_text: String,
    pub normalize_text: String,
}

pub const BUNDLED_PATTERNS: &str = include_str!("../../data/patterns.tsv");
pub const BUNDLED_AFFIXES: &str = include_str!("../../data/affixes.tsv");
pub const BUNDLED_NORMALIZE: &str = include_str!("../../data/normalize.tsv");
pub const BUNDLED_STOPWORDS: &str = include_str!("../../data/stopwords.txt");
pub const BUNDLED_ROOTS: &str = include_str!("../../data/roots.txt");

impl StemmerConfig {
    pub fn bundled() -> Self {
        StemmerConfig {
            pattern_text: BUNDLED_PATTERNS.to_string(),
            affix_text: BUNDLED_AFFIXES.to_string(),
            normalize_text: BUNDLED_NORMALIZE.to_string(),
        }
    }

    pub fn from_dir(dir: &Path) -> Result<Self> {
        Ok(StemmerConfig {
            pattern_text: std::fs::read_to_string(dir.join("patterns.tsv"))?,
            affix_text: std::fs::read_to_string(dir.join("affixes.tsv"))?,
            normalize_text: std::fs::read_to_string(dir.join("normalize.tsv"))?,
        })
    }
}

/// One word per line, `#` comments and blanks ignored.
pub fn parse_word_list(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}
