//! Path enumeration and path-sum evaluation.
//!
//! `enumerate_paths` is the reference semantics: every other algorithm in
//! the crate (pair weights, distances, composition) is tested against sums
//! over explicitly enumerated paths.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fst::{Arc, Label, StateId, Wfst, EPSILON};
use crate::semiring::{Semiring, TropicalWeight};

/// An accepting path: a chained arc sequence from an initial state to a
/// final state. `weight` is the ⊗-product over arcs only; combine it with
/// λ(origin) and ρ(dest) via [`Path::full_weight`].
#[derive(Clone, Debug, PartialEq)]
pub struct Path<W> {
    /// Visited states; `arcs.len() + 1` entries.
    pub states: Vec<StateId>,
    pub arcs: Vec<Arc<W>>,
    /// ⊗ over arc weights (1̄ for the empty path).
    pub weight: W,
    /// ε-free input label sequence.
    pub input: Vec<Label>,
    /// ε-free output label sequence.
    pub output: Vec<Label>,
}

impl<W: Semiring> Path<W> {
    pub fn origin(&self) -> StateId {
        self.states[0]
    }

    pub fn dest(&self) -> StateId {
        *self.states.last().unwrap()
    }

    /// λ(origin) ⊗ w[π] ⊗ ρ(dest).
    pub fn full_weight(&self, t: &Wfst<W>) -> W {
        let lambda = t.initial_weight(self.origin()).unwrap_or_else(W::zero);
        let rho = t.final_weight(self.dest()).unwrap_or_else(W::zero);
        lambda.times(&self.weight).times(&rho)
    }
}

fn labels_display(labels: &[Label]) -> String {
    let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

impl<W: Semiring> Wfst<W> {
    /// Every accepting path with at most `max_len` arcs, each exactly once.
    ///
    /// Terminates on cyclic machines because the arc budget is finite.
    /// Deterministic order: initial states ascending, then arc order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path<W>> {
        let mut out = Vec::new();
        for (start, _) in self.initials() {
            let mut states = vec![start];
            let mut arcs: Vec<Arc<W>> = Vec::new();
            self.enumerate_from(start, max_len, &mut states, &mut arcs, &mut out);
        }
        out
    }

    fn enumerate_from(
        &self,
        state: StateId,
        budget: usize,
        states: &mut Vec<StateId>,
        arcs: &mut Vec<Arc<W>>,
        out: &mut Vec<Path<W>>,
    ) {
        if self.is_final(state) {
            let weight = arcs.iter().fold(W::one(), |acc, a| acc.times(&a.weight));
            out.push(Path {
                states: states.clone(),
                arcs: arcs.clone(),
                weight,
                input: arcs.iter().map(|a| a.ilabel).filter(|&l| l != EPSILON).collect(),
                output: arcs.iter().map(|a| a.olabel).filter(|&l| l != EPSILON).collect(),
            });
        }
        if budget == 0 {
            return;
        }
        for arc in self.arcs(state) {
            states.push(arc.nextstate);
            arcs.push(*arc);
            self.enumerate_from(arc.nextstate, budget - 1, states, arcs, out);
            states.pop();
            arcs.pop();
        }
    }

    /// Map from (input, output) string pair to the ⊕-sum of full path
    /// weights over paths with ≤ `max_len` arcs. The reference for
    /// [`Wfst::weight_of_pair`] and for the rational-operation laws.
    pub fn pair_weights(
        &self,
        max_len: usize,
    ) -> std::collections::BTreeMap<(Vec<Label>, Vec<Label>), W> {
        let mut map = std::collections::BTreeMap::new();
        for path in self.enumerate_paths(max_len) {
            let w = path.full_weight(self);
            let key = (path.input, path.output);
            let entry = map.entry(key).or_insert_with(W::zero);
            *entry = entry.plus(&w);
        }
        map.retain(|_, w: &mut W| !w.is_zero());
        map
    }

    /// ⊕ over all accepting paths labeled (x, y) of λ ⊗ w[π] ⊗ ρ.
    /// Semiring zero when no such path exists.
    ///
    /// Requires an acyclic machine; for cyclic machines use
    /// [`Wfst::weight_of_pair_bounded`].
    pub fn weight_of_pair(&self, input: &[Label], output: &[Label]) -> Result<W> {
        if !self.is_acyclic() {
            return Err(Error::NotRegulated {
                input: labels_display(input),
                output: labels_display(output),
            });
        }
        let mut memo: HashMap<(StateId, usize, usize), W> = HashMap::new();
        let mut total = W::zero();
        for (q, lambda) in self.initials() {
            let w = self.pair_sum(q, 0, 0, input, output, &mut memo);
            total = total.plus(&lambda.times(&w));
        }
        Ok(total)
    }

    fn pair_sum(
        &self,
        state: StateId,
        i: usize,
        j: usize,
        input: &[Label],
        output: &[Label],
        memo: &mut HashMap<(StateId, usize, usize), W>,
    ) -> W {
        if let Some(w) = memo.get(&(state, i, j)) {
            return *w;
        }
        let mut sum = if i == input.len() && j == output.len() {
            self.final_weight(state).unwrap_or_else(W::zero)
        } else {
            W::zero()
        };
        for arc in self.arcs(state) {
            let ni = match arc.ilabel {
                EPSILON => i,
                l if i < input.len() && input[i] == l => i + 1,
                _ => continue,
            };
            let nj = match arc.olabel {
                EPSILON => j,
                l if j < output.len() && output[j] == l => j + 1,
                _ => continue,
            };
            let tail = self.pair_sum(arc.nextstate, ni, nj, input, output, memo);
            sum = sum.plus(&arc.weight.times(&tail));
        }
        memo.insert((state, i, j), sum);
        sum
    }

    /// Like [`Wfst::weight_of_pair`] but sums only paths with at most
    /// `max_arcs` arcs, which is well-defined on cyclic machines.
    pub fn weight_of_pair_bounded(&self, input: &[Label], output: &[Label], max_arcs: usize) -> W {
        let mut memo: HashMap<(StateId, usize, usize, usize), W> = HashMap::new();
        let mut total = W::zero();
        for (q, lambda) in self.initials() {
            let w = self.bounded_pair_sum(q, 0, 0, max_arcs, input, output, &mut memo);
            total = total.plus(&lambda.times(&w));
        }
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn bounded_pair_sum(
        &self,
        state: StateId,
        i: usize,
        j: usize,
        budget: usize,
        input: &[Label],
        output: &[Label],
        memo: &mut HashMap<(StateId, usize, usize, usize), W>,
    ) -> W {
        if let Some(w) = memo.get(&(state, i, j, budget)) {
            return *w;
        }
        let mut sum = if i == input.len() && j == output.len() {
            self.final_weight(state).unwrap_or_else(W::zero)
        } else {
            W::zero()
        };
        if budget > 0 {
            for arc in self.arcs(state) {
                let ni = match arc.ilabel {
                    EPSILON => i,
                    l if i < input.len() && input[i] == l => i + 1,
                    _ => continue,
                };
                let nj = match arc.olabel {
                    EPSILON => j,
                    l if j < output.len() && output[j] == l => j + 1,
                    _ => continue,
                };
                let tail =
                    self.bounded_pair_sum(arc.nextstate, ni, nj, budget - 1, input, output, memo);
                sum = sum.plus(&arc.weight.times(&tail));
            }
        }
        memo.insert((state, i, j, budget), sum);
        sum
    }

    /// Forward distances: α[q] = ⊕ over paths from I to q of λ ⊗ w[π].
    /// States unreachable from I get 0̄. Requires an acyclic machine.
    pub fn forward_distances(&self) -> Result<Vec<W>> {
        let order = self.topo_order().ok_or(Error::Cyclic)?;
        let mut alpha = vec![W::zero(); self.num_states()];
        for (q, lambda) in self.initials() {
            alpha[q] = alpha[q].plus(&lambda);
        }
        for &s in &order {
            if alpha[s].is_zero() {
                continue;
            }
            let from = alpha[s];
            for arc in self.arcs(s) {
                alpha[arc.nextstate] = alpha[arc.nextstate].plus(&from.times(&arc.weight));
            }
        }
        Ok(alpha)
    }

    /// Backward distances: β[q] = ⊕ over paths from q to F of w[π] ⊗ ρ.
    /// Computed over the part reachable from I; requires acyclic.
    pub fn backward_distances(&self) -> Result<Vec<W>> {
        let order = self.topo_order().ok_or(Error::Cyclic)?;
        let mut beta = vec![W::zero(); self.num_states()];
        for &s in order.iter().rev() {
            let mut b = self.final_weight(s).unwrap_or_else(W::zero);
            for arc in self.arcs(s) {
                b = b.plus(&arc.weight.times(&beta[arc.nextstate]));
            }
            beta[s] = b;
        }
        Ok(beta)
    }

    /// ⊕ over all accepting paths of λ ⊗ w[π] ⊗ ρ. Requires acyclic.
    pub fn shortest_distance(&self) -> Result<W> {
        let alpha = self.forward_distances()?;
        let mut total = W::zero();
        for (q, rho) in self.finals() {
            total = total.plus(&alpha[q].times(&rho));
        }
        Ok(total)
    }
}

/// Suffix record for the best-path sweep: total remaining cost including ρ,
/// plus the material needed for deterministic tie-breaking.
#[derive(Clone)]
struct Suffix {
    cost: f64,
    output: Vec<Label>,
    states: Vec<StateId>,
    arcs: Vec<Arc<TropicalWeight>>,
}

impl Suffix {
    fn better_than(&self, other: &Suffix) -> bool {
        self.cost
            .total_cmp(&other.cost)
            .then_with(|| self.output.cmp(&other.output))
            .then_with(|| self.states.cmp(&other.states))
            == std::cmp::Ordering::Less
    }
}

impl Wfst<TropicalWeight> {
    /// A minimum-weight accepting path, or `None` when the machine accepts
    /// nothing. Ties break on the lexicographically smallest output
    /// string, then the smallest state-id sequence. Requires acyclic.
    pub fn best_path(&self) -> Result<Option<Path<TropicalWeight>>> {
        let order = self.topo_order().ok_or(Error::Cyclic)?;
        let mut best: Vec<Option<Suffix>> = vec![None; self.num_states()];
        for &s in order.iter().rev() {
            let mut cand: Option<Suffix> = self.final_weight(s).map(|rho| Suffix {
                cost: rho.0,
                output: Vec::new(),
                states: vec![s],
                arcs: Vec::new(),
            });
            for arc in self.arcs(s) {
                let Some(suffix) = best[arc.nextstate].as_ref() else {
                    continue;
                };
                let mut output = Vec::with_capacity(suffix.output.len() + 1);
                if arc.olabel != EPSILON {
                    output.push(arc.olabel);
                }
                output.extend_from_slice(&suffix.output);
                let mut states = Vec::with_capacity(suffix.states.len() + 1);
                states.push(s);
                states.extend_from_slice(&suffix.states);
                let mut arcs = Vec::with_capacity(suffix.arcs.len() + 1);
                arcs.push(*arc);
                arcs.extend_from_slice(&suffix.arcs);
                let next = Suffix {
                    cost: arc.weight.0 + suffix.cost,
                    output,
                    states,
                    arcs,
                };
                if cand.as_ref().is_none_or(|c| next.better_than(c)) {
                    cand = Some(next);
                }
            }
            best[s] = cand;
        }
        let mut overall: Option<Suffix> = None;
        for (q, lambda) in self.initials() {
            let Some(suffix) = best[q].as_ref() else {
                continue;
            };
            let cand = Suffix {
                cost: lambda.0 + suffix.cost,
                ..suffix.clone()
            };
            if overall.as_ref().is_none_or(|c| cand.better_than(c)) {
                overall = Some(cand);
            }
        }
        Ok(overall.map(|suffix| {
            let weight = suffix
                .arcs
                .iter()
                .fold(TropicalWeight::one(), |acc, a| acc.times(&a.weight));
            let input = suffix
                .arcs
                .iter()
                .map(|a| a.ilabel)
                .filter(|&l| l != EPSILON)
                .collect();
            Path {
                states: suffix.states,
                arcs: suffix.arcs,
                weight,
                input,
                output: suffix.output,
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::RealWeight;

    /// Two parallel (a:b) arcs, weights 0.5 and 0.25.
    fn parallel() -> Wfst<RealWeight> {
        let mut t = Wfst::new();
        let s = t.add_state();
        let f = t.add_state();
        t.set_initial(s, RealWeight(1.0));
        t.set_final(f, RealWeight(1.0));
        t.add_arc(s, Arc::new(1, 2, RealWeight(0.5), f)).unwrap();
        t.add_arc(s, Arc::new(1, 2, RealWeight(0.25), f)).unwrap();
        t
    }

    #[test]
    fn parallel_paths_sum() {
        let t = parallel();
        assert_eq!(t.weight_of_pair(&[1], &[2]).unwrap(), RealWeight(0.75));
        // rejected pair → zero
        assert_eq!(t.weight_of_pair(&[1], &[1]).unwrap(), RealWeight(0.0));
        assert_eq!(t.weight_of_pair(&[], &[]).unwrap(), RealWeight(0.0));
    }

    #[test]
    fn enumerate_counts_each_path_once() {
        let t = parallel();
        let paths = t.enumerate_paths(8);
        assert_eq!(paths.len(), 2);
        let total: f64 = paths.iter().map(|p| p.full_weight(&t).0).sum();
        assert_eq!(total, 0.75);
        let map = t.pair_weights(8);
        assert_eq!(map.len(), 1);
        assert_eq!(map[&(vec![1], vec![2])], RealWeight(0.75));
    }

    #[test]
    fn empty_machine_has_no_paths() {
        let t: Wfst<RealWeight> = Wfst::new();
        assert!(t.enumerate_paths(10).is_empty());
        assert_eq!(t.shortest_distance().unwrap(), RealWeight(0.0));
    }

    #[test]
    fn empty_path_counts_when_initial_is_final() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let s = t.add_state();
        t.set_initial(s, RealWeight(0.5));
        t.set_final(s, RealWeight(0.5));
        let paths = t.enumerate_paths(4);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].arcs.len(), 0);
        assert_eq!(paths[0].full_weight(&t), RealWeight(0.25));
        assert_eq!(t.weight_of_pair(&[], &[]).unwrap(), RealWeight(0.25));
    }

    #[test]
    fn cyclic_pair_weight_is_rejected_unless_bounded() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let s = t.add_state();
        t.set_initial(s, RealWeight(1.0));
        t.set_final(s, RealWeight(1.0));
        t.add_arc(s, Arc::new(1, 1, RealWeight(0.5), s)).unwrap();
        let err = t.weight_of_pair(&[1], &[1]).unwrap_err();
        assert!(matches!(err, Error::NotRegulated { .. }));
        assert_eq!(t.weight_of_pair_bounded(&[], &[], 3), RealWeight(1.0));
        assert_eq!(t.weight_of_pair_bounded(&[1], &[1], 3), RealWeight(0.5));
        assert_eq!(
            t.weight_of_pair_bounded(&[1, 1], &[1, 1], 3),
            RealWeight(0.25)
        );
        // budget too small → zero
        assert_eq!(t.weight_of_pair_bounded(&[1, 1], &[1, 1], 1), RealWeight(0.0));
    }

    #[test]
    fn epsilon_arcs_advance_nothing() {
        // a:ε then ε:b — accepts (a, b).
        let t: Wfst<RealWeight> = Wfst::linear(&[(1, EPSILON), (EPSILON, 2)]);
        assert_eq!(t.weight_of_pair(&[1], &[2]).unwrap(), RealWeight(1.0));
        assert_eq!(t.weight_of_pair(&[1], &[]).unwrap(), RealWeight(0.0));
        let paths = t.enumerate_paths(4);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].input, vec![1]);
        assert_eq!(paths[0].output, vec![2]);
    }

    #[test]
    fn shortest_distance_matches_enumeration_real() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let a = t.add_state();
        let b = t.add_state();
        let c = t.add_state();
        t.set_initial(a, RealWeight(0.5));
        t.set_final(c, RealWeight(2.0));
        t.set_final(b, RealWeight(1.0));
        t.add_arc(a, Arc::new(1, 1, RealWeight(0.25), b)).unwrap();
        t.add_arc(a, Arc::new(2, 2, RealWeight(0.5), c)).unwrap();
        t.add_arc(b, Arc::new(1, 2, RealWeight(4.0), c)).unwrap();
        let by_enum: f64 = t
            .enumerate_paths(10)
            .iter()
            .map(|p| p.full_weight(&t).0)
            .sum();
        assert!((t.shortest_distance().unwrap().0 - by_enum).abs() < 1e-12);
        // α/β give the same total from either end.
        let alpha = t.forward_distances().unwrap();
        let beta = t.backward_distances().unwrap();
        let from_beta: f64 = t.initials().map(|(q, l)| l.0 * beta[q].0).sum();
        let from_alpha: f64 = t.finals().map(|(q, r)| alpha[q].0 * r.0).sum();
        assert!((from_alpha - from_beta).abs() < 1e-12);
    }

    #[test]
    fn best_path_picks_minimum() {
        let mut t: Wfst<TropicalWeight> = Wfst::new();
        let s = t.add_state();
        let f = t.add_state();
        t.set_initial(s, TropicalWeight(0.0));
        t.set_final(f, TropicalWeight(0.0));
        t.add_arc(s, Arc::new(1, 1, TropicalWeight(3.0), f)).unwrap();
        t.add_arc(s, Arc::new(1, 2, TropicalWeight(1.0), f)).unwrap();
        assert_eq!(t.shortest_distance().unwrap(), TropicalWeight(1.0));
        let best = t.best_path().unwrap().unwrap();
        assert_eq!(best.weight, TropicalWeight(1.0));
        assert_eq!(best.output, vec![2]);
    }

    #[test]
    fn best_path_tie_breaks_on_output_then_states() {
        let mut t: Wfst<TropicalWeight> = Wfst::new();
        let s = t.add_state();
        let f = t.add_state();
        t.set_initial(s, TropicalWeight(0.0));
        t.set_final(f, TropicalWeight(0.0));
        t.add_arc(s, Arc::new(1, 2, TropicalWeight(1.0), f)).unwrap();
        t.add_arc(s, Arc::new(1, 1, TropicalWeight(1.0), f)).unwrap();
        let best = t.best_path().unwrap().unwrap();
        assert_eq!(best.output, vec![1]);

        // Same weight and output via different states → smaller state ids.
        let mut u: Wfst<TropicalWeight> = Wfst::new();
        let s0 = u.add_state();
        let m1 = u.add_state();
        let m2 = u.add_state();
        let f0 = u.add_state();
        u.set_initial(s0, TropicalWeight(0.0));
        u.set_final(f0, TropicalWeight(0.0));
        u.add_arc(s0, Arc::new(1, 1, TropicalWeight(1.0), m2)).unwrap();
        u.add_arc(s0, Arc::new(1, 1, TropicalWeight(1.0), m1)).unwrap();
        u.add_arc(m1, Arc::new(2, 2, TropicalWeight(1.0), f0)).unwrap();
        u.add_arc(m2, Arc::new(2, 2, TropicalWeight(1.0), f0)).unwrap();
        let best = u.best_path().unwrap().unwrap();
        assert_eq!(best.states, vec![s0, m1, f0]);
    }

    #[test]
    fn best_path_none_when_nothing_accepted() {
        let mut t: Wfst<TropicalWeight> = Wfst::new();
        let s = t.add_state();
        t.set_initial(s, TropicalWeight(0.0));
        assert!(t.best_path().unwrap().is_none());
    }

    #[test]
    fn cyclic_distance_errors() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let s = t.add_state();
        t.set_initial(s, RealWeight(1.0));
        t.set_final(s, RealWeight(1.0));
        t.add_arc(s, Arc::new(1, 1, RealWeight(0.5), s)).unwrap();
        assert!(matches!(t.shortest_distance(), Err(Error::Cyclic)));
    }
}
