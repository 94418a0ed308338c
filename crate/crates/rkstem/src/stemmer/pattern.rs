//! Root-extraction templates ("measures" minus their affixes).
//!
//! A template is a sequence of root slots (digits 1–4) and fixed surface
//! letters, e.g. `م123ة` for words like مدرسة. Compiled to a transducer,
//! each slot becomes a bundle of identity arcs over the 28 root letters
//! and each fixed letter is consumed to ε, so composing a word with the
//! template and projecting the output yields the root.

use crate::error::{Error, Result};
use crate::fst::{Arc, Wfst, EPSILON};
use crate::semiring::Semiring;
use crate::stemmer::alphabet::{canonical_label, Alphabet, CANONICAL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Category {
    Noun,
    Verb,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::Noun => "noun",
            Category::Verb => "verb",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    /// 1-based root-letter position.
    Slot(u8),
    Fixed(char),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub category: Category,
    pub pieces: Vec<Piece>,
    /// Number of root slots: 3 or 4.
    pub arity: u8,
    /// The template as written, for error messages and display.
    pub template: String,
}

impl Pattern {
    /// Parse a template string: digits 1–4 are root slots, anything else
    /// is a fixed letter. Slots must appear in order, once each, with
    /// arity 3 or 4.
    pub fn parse(category: Category, template: &str) -> Result<Pattern> {
        let context = format!("pattern {template:?}");
        let mut pieces = Vec::new();
        let mut next_slot = 1u8;
        for c in template.chars() {
            match c {
                '1'..='4' => {
                    let slot = c as u8 - b'0';
                    if slot != next_slot {
                        return Err(Error::parse(
                            &context,
                            format!("root slot {slot} out of order (expected {next_slot})"),
                        ));
                    }
                    next_slot += 1;
                    pieces.push(Piece::Slot(slot));
                }
                _ => pieces.push(Piece::Fixed(c)),
            }
        }
        let arity = next_slot - 1;
        if !(3..=4).contains(&arity) {
            return Err(Error::parse(
                &context,
                format!("{arity} root slots (need 3 or 4)"),
            ));
        }
        Ok(Pattern {
            category,
            pieces,
            arity,
            template: template.to_string(),
        })
    }

    /// Surface word produced by filling the slots with `root`'s letters.
    pub fn instantiate(&self, root: &str) -> Result<String> {
        let letters: Vec<char> = root.chars().collect();
        if letters.len() != self.arity as usize {
            return Err(Error::Config(format!(
                "root {root:?} has {} letters, pattern {:?} needs {}",
                letters.len(),
                self.template,
                self.arity
            )));
        }
        for &c in &letters {
            if canonical_label(c).is_none() {
                return Err(Error::UnknownSymbol {
                    symbol: c.to_string(),
                    context: format!("root {root:?}"),
                });
            }
        }
        Ok(self
            .pieces
            .iter()
            .map(|p| match p {
                Piece::Slot(i) => letters[*i as usize - 1],
                Piece::Fixed(c) => *c,
            })
            .collect())
    }

    /// Root extracted by direct template matching, if `word` fits. Slots
    /// only accept root letters; fixed letters must match exactly. This is
    /// plain string matching, independent of the transducer route.
    pub fn matches(&self, word: &str) -> Option<String> {
        let letters: Vec<char> = word.chars().collect();
        if letters.len() != self.pieces.len() {
            return None;
        }
        let mut root = String::new();
        for (piece, &c) in self.pieces.iter().zip(&letters) {
            match piece {
                Piece::Slot(_) => {
                    canonical_label(c)?;
                    root.push(c);
                }
                Piece::Fixed(f) if *f == c => {}
                Piece::Fixed(_) => return None,
            }
        }
        Some(root)
    }
}

/// Parse a pattern file: `category<TAB>template` per line, `#` comments
/// and blank lines ignored.
pub fn parse_patterns(text: &str) -> Result<Vec<Pattern>> {
    let mut patterns = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let context = format!("pattern file line {}", lineno + 1);
        let mut fields = line.split('\t');
        let (Some(category), Some(template), None) = (fields.next(), fields.next(), fields.next())
        else {
            return Err(Error::parse(context, "expected category<TAB>template"));
        };
        let category = match category {
            "noun" => Category::Noun,
            "verb" => Category::Verb,
            other => {
                return Err(Error::parse(
                    context,
                    format!("unknown category {other:?} (noun or verb)"),
                ))
            }
        };
        patterns.push(Pattern::parse(category, template)?);
    }
    Ok(patterns)
}

/// Compile a template into a linear-shaped transducer: each slot is a
/// bundle of identity arcs over the 28 root letters, each fixed letter a
/// (letter:ε) arc.
pub fn compile_pattern<W: Semiring>(p: &Pattern, a: &Alphabet) -> Result<Wfst<W>> {
    let mut t = Wfst::new();
    let mut prev = t.add_state();
    t.set_initial(prev, W::one());
    for piece in &p.pieces {
        let next = t.add_state();
        match piece {
            Piece::Slot(_) => {
                for i in 1..=CANONICAL.len() as u32 {
                    t.add_arc(prev, Arc::new(i, i, W::one(), next)).expect("chain");
                }
            }
            Piece::Fixed(c) => {
                let label = a.label_of(*c).ok_or_else(|| Error::UnknownSymbol {
                    symbol: c.to_string(),
                    context: format!("pattern {:?}", p.template),
                })?;
                t.add_arc(prev, Arc::new(label, EPSILON, W::one(), next)).expect("chain");
            }
        }
        prev = next;
    }
    t.set_final(prev, W::one());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::ops::{compose, project, ProjectSide};
    use crate::semiring::RealWeight;
    use crate::stemmer::config::StemmerConfig;

    fn alphabet() -> Alphabet {
        Alphabet::from_text(&StemmerConfig::bundled().normalize_text).unwrap()
    }

    fn outputs(word: &str, p: &Pattern, a: &Alphabet) -> Vec<String> {
        let word_m: Wfst<RealWeight> = Wfst::acceptor(&a.labels_of(word).unwrap());
        let m = compile_pattern::<RealWeight>(p, a).unwrap();
        let composed = compose(&word_m, &m);
        let projected = project(&composed, ProjectSide::Output);
        let budget = projected.num_states();
        let mut outs: Vec<String> = projected
            .enumerate_paths(budget)
            .iter()
            .map(|path| a.string_of(&path.output).unwrap())
            .collect();
        outs.sort();
        outs.dedup();
        outs
    }

    #[test]
    fn slot_validation() {
        assert!(Pattern::parse(Category::Noun, "123").is_ok());
        assert!(Pattern::parse(Category::Noun, "م1ا234ة").is_ok());
        // too few slots, duplicate slot, out-of-order slot
        assert!(Pattern::parse(Category::Noun, "12").is_err());
        assert!(Pattern::parse(Category::Noun, "1123").is_err());
        assert!(Pattern::parse(Category::Noun, "132").is_err());
        assert!(Pattern::parse(Category::Noun, "234").is_err());
    }

    #[test]
    fn compile_rejects_bad_fixed_letters() {
        let a = alphabet();
        let p = Pattern::parse(Category::Noun, "1x23").unwrap();
        assert!(matches!(
            compile_pattern::<RealWeight>(&p, &a),
            Err(Error::UnknownSymbol { symbol, .. }) if symbol == "x"
        ));
    }

    #[test]
    fn active_participle_template_extracts_the_root() {
        // دارس against 1ا23 → درس
        let a = alphabet();
        let p = Pattern::parse(Category::Noun, "1ا23").unwrap();
        assert_eq!(outputs("دارس", &p, &a), vec!["درس".to_string()]);
        assert_eq!(outputs("عالم", &p, &a), vec!["علم".to_string()]);
        // non-matching words → nothing
        assert!(outputs("كتاب", &p, &a).is_empty());
        assert!(outputs("درس", &p, &a).is_empty());
    }

    #[test]
    fn bare_template_is_identity_on_three_letter_words() {
        let a = alphabet();
        let p = Pattern::parse(Category::Verb, "123").unwrap();
        for word in ["درس", "كتب", "نصر"] {
            assert_eq!(outputs(word, &p, &a), vec![word.to_string()]);
        }
    }

    #[test]
    fn instantiate_inverts_matches() {
        let a = alphabet();
        let patterns = parse_patterns(&StemmerConfig::bundled().pattern_text).unwrap();
        assert!(!patterns.is_empty());
        for p in &patterns {
            let root = if p.arity == 3 { "درس" } else { "دحرج" };
            let word = p.instantiate(root).unwrap();
            assert_eq!(p.matches(&word), Some(root.to_string()), "pattern {:?}", p.template);
            // and the transducer route agrees
            assert!(outputs(&word, p, &a).contains(&root.to_string()));
        }
    }

    #[test]
    fn matches_rejects_non_root_letters_in_slots() {
        let p = Pattern::parse(Category::Noun, "123ة").unwrap();
        assert_eq!(p.matches("درسة"), Some("درس".to_string()));
        assert_eq!(p.matches("درةة"), None); // ة cannot fill a slot
        assert_eq!(p.matches("درس"), None); // missing fixed letter
    }
}
