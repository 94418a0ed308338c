//! Rational operations: union, concatenation, composition, projection,
//! inversion, trimming.
//!
//! Every operation builds a fresh machine; inputs are never mutated. All
//! constructions are deterministic: state numbering follows fixed
//! discovery orders so repeated runs produce identical machines.

use std::collections::{HashMap, VecDeque};

use crate::fst::{Arc, StateId, Wfst, EPSILON};
use crate::semiring::Semiring;

/// Sum of two machines: pair weights add (⊕).
///
/// A fresh super-initial state (id 0) carries initial weight 1̄ and has an
/// ε:ε arc of weight λ(q) to every old initial state q; t1's states follow
/// at offset 1, t2's at offset 1 + |Q1|.
pub fn union<W: Semiring>(t1: &Wfst<W>, t2: &Wfst<W>) -> Wfst<W> {
    union_all(&[t1, t2])
}

/// n-ary union with a single shared super-initial state.
pub fn union_all<W: Semiring>(machines: &[&Wfst<W>]) -> Wfst<W> {
    let mut result = Wfst::new();
    let super_initial = result.add_state();
    result.set_initial(super_initial, W::one());
    let mut offset = 1;
    for t in machines {
        for _ in 0..t.num_states() {
            result.add_state();
        }
        for s in t.states() {
            for arc in t.arcs(s) {
                result
                    .add_arc(
                        s + offset,
                        Arc::new(arc.ilabel, arc.olabel, arc.weight, arc.nextstate + offset),
                    )
                    .expect("offset states exist");
            }
        }
        for (q, lambda) in t.initials() {
            result
                .add_arc(super_initial, Arc::new(EPSILON, EPSILON, lambda, q + offset))
                .expect("offset states exist");
        }
        for (q, rho) in t.finals() {
            result.set_final(q + offset, rho);
        }
        offset += t.num_states();
    }
    result
}

/// Product of two machines: pair weight sums [[t1]](x1,y1) ⊗ [[t2]](x2,y2)
/// over every split x = x1x2, y = y1y2.
///
/// t1's states keep their ids; t2's states follow at offset |Q1|. Each
/// final f of t1 gets an ε:ε arc weighted ρ1(f) ⊗ λ2(i) to each initial i
/// of t2.
pub fn concat<W: Semiring>(t1: &Wfst<W>, t2: &Wfst<W>) -> Wfst<W> {
    let mut result = Wfst::new();
    for _ in 0..t1.num_states() + t2.num_states() {
        result.add_state();
    }
    let offset = t1.num_states();
    for s in t1.states() {
        for arc in t1.arcs(s) {
            result
                .add_arc(s, Arc::new(arc.ilabel, arc.olabel, arc.weight, arc.nextstate))
                .expect("states exist");
        }
    }
    for s in t2.states() {
        for arc in t2.arcs(s) {
            result
                .add_arc(
                    s + offset,
                    Arc::new(arc.ilabel, arc.olabel, arc.weight, arc.nextstate + offset),
                )
                .expect("states exist");
        }
    }
    for (q, lambda) in t1.initials() {
        result.set_initial(q, lambda);
    }
    for (f, rho) in t1.finals() {
        for (i, lambda) in t2.initials() {
            result
                .add_arc(f, Arc::new(EPSILON, EPSILON, rho.times(&lambda), i + offset))
                .expect("states exist");
        }
    }
    for (q, rho) in t2.finals() {
        result.set_final(q + offset, rho);
    }
    result
}

/// ε-move kinds tracked by the composition filter. The filter admits
/// exactly one interleaving of t1's output-ε moves with t2's input-ε moves
/// between any two matched symbols, so Eq-style path sums are not
/// double-counted.
const FILTER_NONE: u8 = 0; // last move matched a symbol (or start)
const FILTER_EPS1: u8 = 1; // t1 advancing alone on output-ε
const FILTER_EPS2: u8 = 2; // t2 advancing alone on input-ε

/// Composition: pair weight is ⊕ over middle strings z of
/// [[t1]](x,z) ⊗ [[t2]](z,y).
///
/// Symbols emitted by t1 but absent from t2's arcs simply yield no matched
/// path (a zero contribution), never an error. States are discovered by
/// breadth-first search from the initial pairs and numbered in discovery
/// order.
pub fn compose<W: Semiring>(t1: &Wfst<W>, t2: &Wfst<W>) -> Wfst<W> {
    let mut result = Wfst::new();
    let mut ids: HashMap<(StateId, StateId, u8), StateId> = HashMap::new();
    let mut queue: VecDeque<(StateId, StateId, u8)> = VecDeque::new();

    let mut intern = |key: (StateId, StateId, u8),
                      result: &mut Wfst<W>,
                      queue: &mut VecDeque<(StateId, StateId, u8)>| {
        *ids.entry(key).or_insert_with(|| {
            let id = result.add_state();
            queue.push_back(key);
            id
        })
    };

    for (i1, l1) in t1.initials() {
        for (i2, l2) in t2.initials() {
            let id = intern((i1, i2, FILTER_NONE), &mut result, &mut queue);
            result.set_initial(id, l1.times(&l2));
        }
    }

    while let Some(key @ (q1, q2, filter)) = queue.pop_front() {
        let id = intern(key, &mut result, &mut queue);
        if let (Some(r1), Some(r2)) = (t1.final_weight(q1), t2.final_weight(q2)) {
            result.set_final(id, r1.times(&r2));
        }
        // Matched symbol: allowed from every filter state, resets it.
        for a1 in t1.arcs(q1) {
            if a1.olabel == EPSILON {
                continue;
            }
            for a2 in t2.arcs(q2) {
                if a2.ilabel != a1.olabel {
                    continue;
                }
                let dest = intern((a1.nextstate, a2.nextstate, FILTER_NONE), &mut result, &mut queue);
                result
                    .add_arc(id, Arc::new(a1.ilabel, a2.olabel, a1.weight.times(&a2.weight), dest))
                    .expect("interned");
            }
        }
        // Paired ε-move: both sides step at once; only from FILTER_NONE.
        if filter == FILTER_NONE {
            for a1 in t1.arcs(q1) {
                if a1.olabel != EPSILON {
                    continue;
                }
                for a2 in t2.arcs(q2) {
                    if a2.ilabel != EPSILON {
                        continue;
                    }
                    let dest =
                        intern((a1.nextstate, a2.nextstate, FILTER_NONE), &mut result, &mut queue);
                    result
                        .add_arc(
                            id,
                            Arc::new(a1.ilabel, a2.olabel, a1.weight.times(&a2.weight), dest),
                        )
                        .expect("interned");
                }
            }
        }
        // t1 alone on output-ε; forbidden after a t2-alone move.
        if filter != FILTER_EPS2 {
            for a1 in t1.arcs(q1) {
                if a1.olabel != EPSILON {
                    continue;
                }
                let dest = intern((a1.nextstate, q2, FILTER_EPS1), &mut result, &mut queue);
                result
                    .add_arc(id, Arc::new(a1.ilabel, EPSILON, a1.weight, dest))
                    .expect("interned");
            }
        }
        // t2 alone on input-ε; forbidden after a t1-alone move.
        if filter != FILTER_EPS1 {
            for a2 in t2.arcs(q2) {
                if a2.ilabel != EPSILON {
                    continue;
                }
                let dest = intern((q1, a2.nextstate, FILTER_EPS2), &mut result, &mut queue);
                result
                    .add_arc(id, Arc::new(EPSILON, a2.olabel, a2.weight, dest))
                    .expect("interned");
            }
        }
    }
    result
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectSide {
    Input,
    Output,
}

/// Acceptor carrying the chosen side's labels on both tapes; weights,
/// states and structure are untouched.
pub fn project<W: Semiring>(t: &Wfst<W>, side: ProjectSide) -> Wfst<W> {
    let mut result = Wfst::new();
    for _ in 0..t.num_states() {
        result.add_state();
    }
    for s in t.states() {
        for arc in t.arcs(s) {
            let label = match side {
                ProjectSide::Input => arc.ilabel,
                ProjectSide::Output => arc.olabel,
            };
            result
                .add_arc(s, Arc::new(label, label, arc.weight, arc.nextstate))
                .expect("states exist");
        }
    }
    for (q, l) in t.initials() {
        result.set_initial(q, l);
    }
    for (q, r) in t.finals() {
        result.set_final(q, r);
    }
    result
}

/// Swap input and output labels on every arc: [[invert(t)]](y,x) = [[t]](x,y).
pub fn invert<W: Semiring>(t: &Wfst<W>) -> Wfst<W> {
    let mut result = Wfst::new();
    for _ in 0..t.num_states() {
        result.add_state();
    }
    for s in t.states() {
        for arc in t.arcs(s) {
            result
                .add_arc(s, Arc::new(arc.olabel, arc.ilabel, arc.weight, arc.nextstate))
                .expect("states exist");
        }
    }
    for (q, l) in t.initials() {
        result.set_initial(q, l);
    }
    for (q, r) in t.finals() {
        result.set_final(q, r);
    }
    result
}

/// Drop states that lie on no initial-to-final path; survivors are
/// renumbered densely in their original order, so an already-trim machine
/// comes back identical.
pub fn trim<W: Semiring>(t: &Wfst<W>) -> Wfst<W> {
    let accessible = t.accessible();
    let coaccessible = t.coaccessible();
    let mut remap: Vec<Option<StateId>> = vec![None; t.num_states()];
    let mut result = Wfst::new();
    for s in t.states() {
        if accessible[s] && coaccessible[s] {
            remap[s] = Some(result.add_state());
        }
    }
    for s in t.states() {
        let Some(new_s) = remap[s] else { continue };
        for arc in t.arcs(s) {
            if let Some(new_dest) = remap[arc.nextstate] {
                result
                    .add_arc(new_s, Arc::new(arc.ilabel, arc.olabel, arc.weight, new_dest))
                    .expect("states exist");
            }
        }
    }
    for (q, l) in t.initials() {
        if let Some(new_q) = remap[q] {
            result.set_initial(new_q, l);
        }
    }
    for (q, r) in t.finals() {
        if let Some(new_q) = remap[q] {
            result.set_final(new_q, r);
        }
    }
    result
}
