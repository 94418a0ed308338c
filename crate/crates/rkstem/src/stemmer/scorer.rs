//! Bigram root scoring: pick the most root-like candidate.
//!
//! Trained on a corpus of triliteral roots. P1(c1,c2) is the conditional
//! probability that a root starting with c1 has c2 second; P2(c2,c3) the
//! probability that a root with c2 second has c3 third. A stem scores the
//! product of its successive bigram factors: P1(c1,c2)·P2(c2,c3) for three
//! letters, with further P2 factors for longer stems.

use crate::error::{Error, Result};
use crate::stemmer::alphabet::{letter_index, CANONICAL};

const N: usize = CANONICAL.len();

#[derive(Clone, Debug)]
pub struct RootScorer {
    p1: Vec<[f64; N]>,
    p2: Vec<[f64; N]>,
    root_count: usize,
    smoothed: bool,
}

/// Estimate the bigram tables from a list of 3-letter roots. With
/// smoothing, add-one over the 28-letter alphabet; without, unobserved
/// conditioning letters give all-zero rows.
pub fn train_scorer(roots: &[String], smoothing: bool) -> Result<RootScorer> {
    if roots.is_empty() {
        return Err(Error::Config("empty root list".to_string()));
    }
    let mut first = [0u64; N];
    let mut second = [0u64; N];
    let mut pair12 = vec![[0u64; N]; N];
    let mut pair23 = vec![[0u64; N]; N];
    for root in roots {
        let idx: Vec<usize> = root.chars().filter_map(letter_index).collect();
        if idx.len() != 3 || root.chars().count() != 3 {
            return Err(Error::Config(format!(
                "root {root:?} must be exactly 3 canonical letters"
            )));
        }
        first[idx[0]] += 1;
        second[idx[1]] += 1;
        pair12[idx[0]][idx[1]] += 1;
        pair23[idx[1]][idx[2]] += 1;
    }
    let estimate = |counts: &[[u64; N]], totals: &[u64; N]| -> Vec<[f64; N]> {
        let mut table = vec![[0.0; N]; N];
        for c in 0..N {
            for d in 0..N {
                table[c][d] = if smoothing {
                    (counts[c][d] as f64 + 1.0) / (totals[c] as f64 + N as f64)
                } else if totals[c] > 0 {
                    counts[c][d] as f64 / totals[c] as f64
                } else {
                    0.0
                };
            }
        }
        table
    };
    Ok(RootScorer {
        p1: estimate(&pair12, &first),
        p2: estimate(&pair23, &second),
        root_count: roots.len(),
        smoothed: smoothing,
    })
}

impl RootScorer {
    pub fn root_count(&self) -> usize {
        self.root_count
    }

    pub fn smoothed(&self) -> bool {
        self.smoothed
    }

    /// P(second = c2 | first = c1). Zero for non-canonical letters.
    pub fn p1(&self, c1: char, c2: char) -> f64 {
        match (letter_index(c1), letter_index(c2)) {
            (Some(i), Some(j)) => self.p1[i][j],
            _ => 0.0,
        }
    }

    /// P(third = c3 | second = c2). Zero for non-canonical letters.
    pub fn p2(&self, c2: char, c3: char) -> f64 {
        match (letter_index(c2), letter_index(c3)) {
            (Some(i), Some(j)) => self.p2[i][j],
            _ => 0.0,
        }
    }

    /// Product of successive bigram factors. Errors below 3 letters;
    /// letters outside the root alphabet contribute factor 0.
    pub fn score(&self, stem: &str) -> Result<f64> {
        let letters: Vec<char> = stem.chars().collect();
        if letters.len() < 3 {
            return Err(Error::Config(format!(
                "stem {stem:?} is shorter than 3 letters"
            )));
        }
        let mut score = self.p1(letters[0], letters[1]);
        for w in letters[1..].windows(2) {
            score *= self.p2(w[0], w[1]);
        }
        Ok(score)
    }
}
