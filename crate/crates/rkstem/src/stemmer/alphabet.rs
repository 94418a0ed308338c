//! The canonical Arabic letter alphabet and surface-form normalization.
//!
//! Root extraction works over the 28 base letters, assigned ids 1–28 in
//! codepoint order (so lexicographic order over label sequences equals
//! lexicographic order over the letter strings). Id 29 is reserved for the
//! word-boundary marker used in document machines, and ta-marbuta — a
//! surface letter that occurs in suffixes and fixed pattern positions but
//! never inside a root — gets id 30.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fst::text::SymbolTable;
use crate::fst::Label;

/// The 28 base letters, in Unicode codepoint order.
pub const CANONICAL: [char; 28] = [
    'ا', 'ب', 'ت', 'ث', 'ج', 'ح', 'خ', 'د', 'ذ', 'ر', 'ز', 'س', 'ش', 'ص', 'ض', 'ط', 'ظ', 'ع',
    'غ', 'ف', 'ق', 'ك', 'ل', 'م', 'ن', 'ه', 'و', 'ي',
];

/// Word separator in document machines; not a letter.
pub const BOUNDARY: Label = 29;
pub const BOUNDARY_SYMBOL: &str = "<b>";

/// Ta-marbuta: kept in surface forms (it is a suffix letter), but not a
/// root letter.
pub const TA_MARBUTA: char = 'ة';
pub const TA_MARBUTA_LABEL: Label = 30;

/// Index of a canonical letter in [`CANONICAL`] (0-based), if it is one.
pub fn letter_index(c: char) -> Option<usize> {
    CANONICAL.iter().position(|&l| l == c)
}

/// Label (1–28) of a canonical letter.
pub fn canonical_label(c: char) -> Option<Label> {
    letter_index(c).map(|i| i as Label + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Fold {
    MapTo(char),
    Delete,
}

/// What normalization does with a single codepoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disposition {
    /// A canonical letter or ta-marbuta (possibly after folding).
    Keep(char),
    /// Dropped silently (diacritics, tatweel).
    Delete,
    /// Not Arabic letter material; acts as a token separator.
    Foreign,
}

/// Canonical letter set plus a fold map for variant codepoints.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Alphabet {
    folds: BTreeMap<char, Fold>,
}

impl Alphabet {
    /// Parse a normalization map: one `from<TAB>to` or `from<TAB>DELETE`
    /// per line, `#` comments and blank lines ignored. Fold targets must
    /// be keepable letters so normalization is idempotent by construction.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut folds = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let context = format!("normalization map line {}", lineno + 1);
            let mut fields = line.split('\t');
            let (Some(from), Some(to), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::parse(context, "expected from<TAB>to-or-DELETE"));
            };
            let mut from_chars = from.chars();
            let (Some(from), None) = (from_chars.next(), from_chars.next()) else {
                return Err(Error::parse(context, "source must be a single codepoint"));
            };
            if Self::is_keepable(from) {
                return Err(Error::parse(
                    context,
                    format!("{from:?} is canonical and cannot be refolded"),
                ));
            }
            let fold = if to == "DELETE" {
                Fold::Delete
            } else {
                let mut to_chars = to.chars();
                let (Some(to), None) = (to_chars.next(), to_chars.next()) else {
                    return Err(Error::parse(context, "target must be a single codepoint"));
                };
                if !Self::is_keepable(to) {
                    return Err(Error::parse(
                        context,
                        format!("fold target {to:?} is not a canonical letter"),
                    ));
                }
                Fold::MapTo(to)
            };
            folds.insert(from, fold);
        }
        Ok(Alphabet { folds })
    }

    fn is_keepable(c: char) -> bool {
        c == TA_MARBUTA || letter_index(c).is_some()
    }

    pub fn dispose(&self, c: char) -> Disposition {
        if Self::is_keepable(c) {
            return Disposition::Keep(c);
        }
        match self.folds.get(&c) {
            Some(Fold::MapTo(t)) => Disposition::Keep(*t),
            Some(Fold::Delete) => Disposition::Delete,
            None => Disposition::Foreign,
        }
    }

    /// Fold a single word into canonical letters, dropping deletable and
    /// foreign codepoints.
    pub fn normalize_word(&self, word: &str) -> String {
        word.chars()
            .filter_map(|c| match self.dispose(c) {
                Disposition::Keep(k) => Some(k),
                _ => None,
            })
            .collect()
    }

    /// Label of a normalized letter (1–28 canonical, 30 ta-marbuta).
    pub fn label_of(&self, c: char) -> Option<Label> {
        if c == TA_MARBUTA {
            Some(TA_MARBUTA_LABEL)
        } else {
            canonical_label(c)
        }
    }

    pub fn char_of(&self, label: Label) -> Option<char> {
        match label {
            1..=28 => Some(CANONICAL[label as usize - 1]),
            TA_MARBUTA_LABEL => Some(TA_MARBUTA),
            _ => None,
        }
    }

    /// Labels of a normalized word; errors on a letter outside the
    /// alphabet (i.e., the word was not normalized).
    pub fn labels_of(&self, word: &str) -> Result<Vec<Label>> {
        word.chars()
            .map(|c| {
                self.label_of(c).ok_or_else(|| Error::UnknownSymbol {
                    symbol: c.to_string(),
                    context: format!("word {word:?}"),
                })
            })
            .collect()
    }

    pub fn string_of(&self, labels: &[Label]) -> Result<String> {
        labels
            .iter()
            .map(|&l| {
                self.char_of(l).ok_or_else(|| Error::UnknownSymbol {
                    symbol: l.to_string(),
                    context: "label sequence".to_string(),
                })
            })
            .collect()
    }

    /// Symbol table covering letters 1–28, the boundary at 29, and
    /// ta-marbuta at 30.
    pub fn symbol_table(&self) -> SymbolTable {
        let mut syms = SymbolTable::new();
        for (i, &c) in CANONICAL.iter().enumerate() {
            syms.insert(&c.to_string(), i as Label + 1).expect("fresh ids");
        }
        syms.insert(BOUNDARY_SYMBOL, BOUNDARY).expect("fresh id");
        syms.insert(&TA_MARBUTA.to_string(), TA_MARBUTA_LABEL).expect("fresh id");
        syms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stemmer::config::StemmerConfig;

    fn bundled() -> Alphabet {
        Alphabet::from_text(&StemmerConfig::bundled().normalize_text).unwrap()
    }

    #[test]
    fn canonical_ids_follow_codepoint_order() {
        for w in CANONICAL.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(canonical_label('ا'), Some(1));
        assert_eq!(canonical_label('ي'), Some(28));
        assert_eq!(canonical_label(TA_MARBUTA), None);
    }

    #[test]
    fn variants_fold_and_diacritics_vanish() {
        let a = bundled();
        assert_eq!(a.normalize_word("أَكْتُبُ"), "اكتب");
        assert_eq!(a.normalize_word("إلى"), "الي");
        assert_eq!(a.normalize_word("مدرسة"), "مدرسة"); // ta-marbuta kept
        assert_eq!(a.normalize_word("قُرْآن"), "قران");
        assert_eq!(a.normalize_word("شيء"), "شيا");
        assert_eq!(a.normalize_word("مـــدرسة"), "مدرسة"); // tatweel deleted
        assert_eq!(a.normalize_word("abc123"), ""); // foreign only
    }

    #[test]
    fn normalization_is_idempotent() {
        let a = bundled();
        for word in ["أَكْتُبُ", "إلى", "مدرسة", "قُرْآن", "مُؤْمِن", "رئيس", "مصطفىٰ"] {
            let once = a.normalize_word(word);
            assert_eq!(a.normalize_word(&once), once, "word {word:?}");
            assert!(once.chars().all(|c| Alphabet::is_keepable(c)));
        }
    }

    #[test]
    fn labels_round_trip() {
        let a = bundled();
        let labels = a.labels_of("درسة").unwrap();
        assert_eq!(labels, vec![8, 10, 12, TA_MARBUTA_LABEL]);
        assert_eq!(a.string_of(&labels).unwrap(), "درسة");
        assert!(a.labels_of("dx").is_err());
        assert_eq!(a.char_of(BOUNDARY), None);
    }

    #[test]
    fn symbol_table_layout() {
        let syms = bundled().symbol_table();
        assert_eq!(syms.len(), 31);
        assert_eq!(syms.symbol_of(0), Some("<eps>"));
        assert_eq!(syms.symbol_of(1), Some("ا"));
        assert_eq!(syms.symbol_of(28), Some("ي"));
        assert_eq!(syms.symbol_of(BOUNDARY), Some(BOUNDARY_SYMBOL));
        assert_eq!(syms.symbol_of(TA_MARBUTA_LABEL), Some("ة"));
    }

    #[test]
    fn refolding_canonical_letters_is_rejected() {
        assert!(Alphabet::from_text("ا\tي\n").is_err());
        assert!(Alphabet::from_text("ة\tDELETE\n").is_err());
        // fold target must itself be canonical
        assert!(Alphabet::from_text("ؤ\tء\n").is_err());
    }
}
