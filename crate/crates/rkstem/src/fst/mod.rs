//! Weighted finite-state transducers.
//!
//! A transducer is an 8-tuple `(Σ, Δ, Q, I, F, E, λ, ρ)`: input and output
//! alphabets, states, weighted initial and final state sets, and arcs
//! labeled with an input symbol, an output symbol and a weight. Label `0`
//! is reserved for ε (the empty symbol) on either side of an arc and never
//! belongs to an alphabet.

pub mod ops;
pub mod paths;
pub mod text;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// Arc label. `0` is ε; alphabet symbols are `1..`.
pub type Label = u32;

/// The empty symbol.
pub const EPSILON: Label = 0;

/// State identifier, dense from `0`.
pub type StateId = usize;

/// A transition: consume `ilabel`, emit `olabel`, accrue `weight`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc<W> {
    pub ilabel: Label,
    pub olabel: Label,
    pub weight: W,
    pub nextstate: StateId,
}

impl<W> Arc<W> {
    pub fn new(ilabel: Label, olabel: Label, weight: W, nextstate: StateId) -> Self {
        Arc {
            ilabel,
            olabel,
            weight,
            nextstate,
        }
    }
}

/// A weighted transducer over the semiring `W`.
///
/// Multiple initial states are allowed, each carrying an initial weight λ;
/// final states carry final weights ρ. A state with semiring-zero initial
/// or final weight is simply not in the corresponding set.
#[derive(Clone, Debug, PartialEq)]
pub struct Wfst<W: Semiring> {
    arcs: Vec<Vec<Arc<W>>>,
    initials: BTreeMap<StateId, W>,
    finals: BTreeMap<StateId, W>,
    input_alphabet: BTreeSet<Label>,
    output_alphabet: BTreeSet<Label>,
}

impl<W: Semiring> Default for Wfst<W> {
    fn default() -> Self {
        Self::new()
    }
}

impl<W: Semiring> Wfst<W> {
    pub fn new() -> Self {
        Wfst {
            arcs: Vec::new(),
            initials: BTreeMap::new(),
            finals: BTreeMap::new(),
            input_alphabet: BTreeSet::new(),
            output_alphabet: BTreeSet::new(),
        }
    }

    /// A linear transducer accepting exactly the given label pairs in
    /// order, with weight 1̄. ε labels are allowed on either side.
    pub fn linear(pairs: &[(Label, Label)]) -> Self {
        let mut t = Wfst::new();
        let mut prev = t.add_state();
        t.set_initial(prev, W::one());
        for &(i, o) in pairs {
            let next = t.add_state();
            t.add_arc(prev, Arc::new(i, o, W::one(), next))
                .expect("states were just added");
            prev = next;
        }
        t.set_final(prev, W::one());
        t
    }

    /// A linear acceptor: identity transduction of `labels`.
    pub fn acceptor(labels: &[Label]) -> Self {
        let pairs: Vec<(Label, Label)> = labels.iter().map(|&l| (l, l)).collect();
        Self::linear(&pairs)
    }

    pub fn add_state(&mut self) -> StateId {
        self.arcs.push(Vec::new());
        self.arcs.len() - 1
    }

    pub fn num_states(&self) -> usize {
        self.arcs.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.iter().map(Vec::len).sum()
    }

    pub fn add_arc(&mut self, state: StateId, arc: Arc<W>) -> Result<()> {
        if state >= self.arcs.len() {
            return Err(Error::InvalidState(state));
        }
        if arc.nextstate >= self.arcs.len() {
            return Err(Error::InvalidState(arc.nextstate));
        }
        if arc.ilabel != EPSILON {
            self.input_alphabet.insert(arc.ilabel);
        }
        if arc.olabel != EPSILON {
            self.output_alphabet.insert(arc.olabel);
        }
        self.arcs[state].push(arc);
        Ok(())
    }

    /// Set λ(state). A semiring-zero weight removes the state from I.
    pub fn set_initial(&mut self, state: StateId, weight: W) {
        assert!(state < self.arcs.len(), "invalid state {state}");
        if weight.is_zero() {
            self.initials.remove(&state);
        } else {
            self.initials.insert(state, weight);
        }
    }

    /// Set ρ(state). A semiring-zero weight removes the state from F.
    pub fn set_final(&mut self, state: StateId, weight: W) {
        assert!(state < self.arcs.len(), "invalid state {state}");
        if weight.is_zero() {
            self.finals.remove(&state);
        } else {
            self.finals.insert(state, weight);
        }
    }

    pub fn initial_weight(&self, state: StateId) -> Option<W> {
        self.initials.get(&state).copied()
    }

    pub fn final_weight(&self, state: StateId) -> Option<W> {
        self.finals.get(&state).copied()
    }

    pub fn is_initial(&self, state: StateId) -> bool {
        self.initials.contains_key(&state)
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals.contains_key(&state)
    }

    /// Initial states with their λ weights, in state order.
    pub fn initials(&self) -> impl Iterator<Item = (StateId, W)> + '_ {
        self.initials.iter().map(|(&s, &w)| (s, w))
    }

    /// Final states with their ρ weights, in state order.
    pub fn finals(&self) -> impl Iterator<Item = (StateId, W)> + '_ {
        self.finals.iter().map(|(&s, &w)| (s, w))
    }

    pub fn arcs(&self, state: StateId) -> &[Arc<W>] {
        &self.arcs[state]
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        0..self.arcs.len()
    }

    pub fn input_alphabet(&self) -> &BTreeSet<Label> {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &BTreeSet<Label> {
        &self.output_alphabet
    }

    /// Force a symbol into the input alphabet without adding an arc.
    pub fn declare_input_symbol(&mut self, label: Label) {
        if label != EPSILON {
            self.input_alphabet.insert(label);
        }
    }

    /// Force a symbol into the output alphabet without adding an arc.
    pub fn declare_output_symbol(&mut self, label: Label) {
        if label != EPSILON {
            self.output_alphabet.insert(label);
        }
    }

    /// Sort each state's arcs by (ilabel, olabel, nextstate, weight value)
    /// so iteration order is canonical.
    pub fn sort_arcs(&mut self) {
        for arcs in &mut self.arcs {
            arcs.sort_by(|a, b| {
                (a.ilabel, a.olabel, a.nextstate)
                    .cmp(&(b.ilabel, b.olabel, b.nextstate))
                    .then(a.weight.value().total_cmp(&b.weight.value()))
            });
        }
    }

    /// Topological order over states reachable from I, or `None` if a
    /// cycle is reachable.
    pub fn topo_order(&self) -> Option<Vec<StateId>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            White,
            Gray,
            Black,
        }
        let mut mark = vec![Mark::White; self.arcs.len()];
        let mut order = Vec::new();
        // Iterative DFS; (state, next arc index) frames.
        let mut stack: Vec<(StateId, usize)> = Vec::new();
        for (&root, _) in self.initials.iter() {
            if mark[root] != Mark::White {
                continue;
            }
            mark[root] = Mark::Gray;
            stack.push((root, 0));
            while let Some(&mut (s, ref mut idx)) = stack.last_mut() {
                if *idx < self.arcs[s].len() {
                    let next = self.arcs[s][*idx].nextstate;
                    *idx += 1;
                    match mark[next] {
                        Mark::White => {
                            mark[next] = Mark::Gray;
                            stack.push((next, 0));
                        }
                        Mark::Gray => return None, // back edge: cycle
                        Mark::Black => {}
                    }
                } else {
                    mark[s] = Mark::Black;
                    order.push(s);
                    stack.pop();
                }
            }
        }
        order.reverse();
        Some(order)
    }

    /// True when no cycle is reachable from an initial state.
    pub fn is_acyclic(&self) -> bool {
        self.topo_order().is_some()
    }

    /// States reachable from I following arcs forward.
    pub fn accessible(&self) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        let mut queue: Vec<StateId> = self.initials.keys().copied().collect();
        for &s in &queue {
            seen[s] = true;
        }
        while let Some(s) = queue.pop() {
            for arc in &self.arcs[s] {
                if !seen[arc.nextstate] {
                    seen[arc.nextstate] = true;
                    queue.push(arc.nextstate);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coaccessible(&self) -> Vec<bool> {
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); self.arcs.len()];
        for s in 0..self.arcs.len() {
            for arc in &self.arcs[s] {
                rev[arc.nextstate].push(s);
            }
        }
        let mut seen = vec![false; self.arcs.len()];
        let mut queue: Vec<StateId> = self.finals.keys().copied().collect();
        for &s in &queue {
            seen[s] = true;
        }
        while let Some(s) = queue.pop() {
            for &p in &rev[s] {
                if !seen[p] {
                    seen[p] = true;
                    queue.push(p);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::RealWeight;

    #[test]
    fn linear_shape() {
        let t: Wfst<RealWeight> = Wfst::linear(&[(1, 2), (3, EPSILON)]);
        assert_eq!(t.num_states(), 3);
        assert_eq!(t.num_arcs(), 2);
        assert_eq!(t.initial_weight(0), Some(RealWeight(1.0)));
        assert_eq!(t.final_weight(2), Some(RealWeight(1.0)));
        assert_eq!(t.input_alphabet().iter().copied().collect::<Vec<_>>(), [1, 3]);
        assert_eq!(t.output_alphabet().iter().copied().collect::<Vec<_>>(), [2]);
    }

    #[test]
    fn zero_weight_clears_initial_and_final() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let s = t.add_state();
        t.set_initial(s, RealWeight(0.5));
        t.set_final(s, RealWeight(0.5));
        assert!(t.is_initial(s) && t.is_final(s));
        t.set_initial(s, RealWeight(0.0));
        t.set_final(s, RealWeight(0.0));
        assert!(!t.is_initial(s) && !t.is_final(s));
    }

    #[test]
    fn add_arc_rejects_unknown_states() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let s = t.add_state();
        let err = t.add_arc(s, Arc::new(1, 1, RealWeight(1.0), 7)).unwrap_err();
        assert!(matches!(err, Error::InvalidState(7)));
    }

    #[test]
    fn topo_order_detects_cycles() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let a = t.add_state();
        let b = t.add_state();
        t.set_initial(a, RealWeight(1.0));
        t.add_arc(a, Arc::new(1, 1, RealWeight(1.0), b)).unwrap();
        assert!(t.is_acyclic());
        let order = t.topo_order().unwrap();
        assert_eq!(order, vec![a, b]);
        t.add_arc(b, Arc::new(1, 1, RealWeight(1.0), a)).unwrap();
        assert!(!t.is_acyclic());
    }

    #[test]
    fn cycle_unreachable_from_initial_is_ignored() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let a = t.add_state();
        let b = t.add_state();
        let c = t.add_state();
        t.set_initial(a, RealWeight(1.0));
        t.set_final(a, RealWeight(1.0));
        // b <-> c cycle is disconnected from a.
        t.add_arc(b, Arc::new(1, 1, RealWeight(1.0), c)).unwrap();
        t.add_arc(c, Arc::new(1, 1, RealWeight(1.0), b)).unwrap();
        assert!(t.is_acyclic());
    }

    #[test]
    fn accessibility() {
        let mut t: Wfst<RealWeight> = Wfst::new();
        let a = t.add_state();
        let b = t.add_state();
        let dead = t.add_state(); // reachable, but no path to final
        let orphan = t.add_state(); // unreachable
        t.set_initial(a, RealWeight(1.0));
        t.set_final(b, RealWeight(1.0));
        t.add_arc(a, Arc::new(1, 1, RealWeight(1.0), b)).unwrap();
        t.add_arc(a, Arc::new(2, 2, RealWeight(1.0), dead)).unwrap();
        t.add_arc(orphan, Arc::new(1, 1, RealWeight(1.0), b)).unwrap();
        assert_eq!(t.accessible(), vec![true, true, true, false]);
        assert_eq!(t.coaccessible(), vec![true, true, false, true]);
    }
}
