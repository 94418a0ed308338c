//! Prefix and suffix inventories and their transducers.

use crate::error::{Error, Result};
use crate::fst::ops::union_all;
use crate::fst::Wfst;
use crate::semiring::Semiring;
use crate::stemmer::alphabet::Alphabet;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AffixInventory {
    pub verb_prefixes: Vec<String>,
    pub noun_prefixes: Vec<String>,
    pub suffixes: Vec<String>,
}

impl AffixInventory {
    /// Parse an affix file: `kind<TAB>letters` per line with kind one of
    /// `verb_prefix`, `noun_prefix`, `suffix`; `#` comments and blank
    /// lines ignored. Entries must be nonempty and already normalized.
    pub fn from_text(text: &str, a: &Alphabet) -> Result<Self> {
        let mut inv = AffixInventory::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let context = format!("affix file line {}", lineno + 1);
            let mut fields = line.split('\t');
            let (Some(kind), Some(letters), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::parse(context, "expected kind<TAB>letters"));
            };
            if letters.is_empty() {
                return Err(Error::parse(context, "empty affix (ε is implicit)"));
            }
            if a.normalize_word(letters) != letters {
                return Err(Error::parse(
                    context,
                    format!("affix {letters:?} is not in normalized form"),
                ));
            }
            a.labels_of(letters)?; // every letter must be in the alphabet
            let bucket = match kind {
                "verb_prefix" => &mut inv.verb_prefixes,
                "noun_prefix" => &mut inv.noun_prefixes,
                "suffix" => &mut inv.suffixes,
                other => {
                    return Err(Error::parse(
                        context,
                        format!("unknown affix kind {other:?}"),
                    ))
                }
            };
            bucket.push(letters.to_string());
        }
        Ok(inv)
    }
}

/// Union of machines mapping each affix to ε, plus the empty affix: one
/// ε-accepting branch and one (letter:ε)-chain branch per entry.
pub fn compile_affixes<W: Semiring>(entries: &[String], a: &Alphabet) -> Result<Wfst<W>> {
    let mut empty: Wfst<W> = Wfst::new();
    let s = empty.add_state();
    empty.set_initial(s, W::one());
    empty.set_final(s, W::one());
    let mut branches = vec![empty];
    for affix in entries {
        let labels = a.labels_of(affix)?;
        let pairs: Vec<(u32, u32)> = labels.iter().map(|&l| (l, crate::fst::EPSILON)).collect();
        branches.push(Wfst::linear(&pairs));
    }
    let refs: Vec<&Wfst<W>> = branches.iter().collect();
    Ok(union_all(&refs))
}
