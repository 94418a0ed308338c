//! Text serialization: AT&T-style machine descriptions and symbol tables.
//!
//! Arc lines are `src<TAB>dst<TAB>ilabel<TAB>olabel<TAB>weight` (weight may
//! be omitted on input and defaults to 1̄). Final states are
//! `state<TAB>weight` (weight may be omitted). Initial states are either
//! explicit `init<TAB>state<TAB>weight` lines or, absent those, the source
//! of the first arc line with weight 1̄. The writer is canonical: reading
//! written text and writing it again reproduces the bytes exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fst::{Arc, Label, Wfst, EPSILON};
use crate::semiring::Semiring;

/// Bidirectional symbol ↔ integer-id map. Id 0 is reserved for ε.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SymbolTable {
    by_symbol: BTreeMap<String, Label>,
    by_id: BTreeMap<Label, String>,
}

pub const EPSILON_SYMBOL: &str = "<eps>";

impl SymbolTable {
    /// Table containing only the ε symbol at id 0.
    pub fn new() -> Self {
        let mut t = SymbolTable::default();
        t.by_symbol.insert(EPSILON_SYMBOL.to_string(), EPSILON);
        t.by_id.insert(EPSILON, EPSILON_SYMBOL.to_string());
        t
    }

    /// Bind `symbol` to `id`; rebinding either side to something new is an
    /// error.
    pub fn insert(&mut self, symbol: &str, id: Label) -> Result<()> {
        match (self.by_symbol.get(symbol), self.by_id.get(&id)) {
            (Some(&old_id), _) if old_id != id => Err(Error::parse(
                "symbol table",
                format!("symbol {symbol:?} already bound to id {old_id}"),
            )),
            (_, Some(old_sym)) if old_sym != symbol => Err(Error::parse(
                "symbol table",
                format!("id {id} already bound to symbol {old_sym:?}"),
            )),
            _ => {
                self.by_symbol.insert(symbol.to_string(), id);
                self.by_id.insert(id, symbol.to_string());
                Ok(())
            }
        }
    }

    /// Bind `symbol` to the next free id (or return its existing id).
    pub fn add(&mut self, symbol: &str) -> Label {
        if let Some(&id) = self.by_symbol.get(symbol) {
            return id;
        }
        let id = self.by_id.keys().next_back().map_or(1, |&max| max + 1);
        self.insert(symbol, id).expect("fresh id");
        id
    }

    pub fn id_of(&self, symbol: &str) -> Option<Label> {
        self.by_symbol.get(symbol).copied()
    }

    pub fn symbol_of(&self, id: Label) -> Option<&str> {
        self.by_id.get(&id).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.by_id.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_id.is_empty()
    }

    /// (id, symbol) pairs in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = (Label, &str)> {
        self.by_id.iter().map(|(&id, s)| (id, s.as_str()))
    }

    /// `symbol<TAB>id` lines in ascending id order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (id, sym) in self.iter() {
            writeln!(out, "{sym}\t{id}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut table = SymbolTable::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let context = format!("symbol table line {}", lineno + 1);
            let mut fields = line.split('\t');
            let (Some(sym), Some(id), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(Error::parse(context, "expected symbol<TAB>id"));
            };
            let id: Label = id
                .parse()
                .map_err(|e| Error::parse(&context, format!("bad id {id:?}: {e}")))?;
            table.insert(sym, id)?;
        }
        if table.by_id.get(&EPSILON).is_none() {
            return Err(Error::parse("symbol table", "id 0 (ε) is missing"));
        }
        Ok(table)
    }
}

fn fmt_weight(w: f64) -> String {
    format!("{w}")
}

/// Canonical text form of a machine.
///
/// Arcs come first, grouped by source state in ascending order; explicit
/// `init` lines are emitted only when the implicit convention (first arc
/// line's source, weight 1̄) would not reconstruct the initial map; final
/// lines come last, in state order, always with a weight.
pub fn write_text<W: Semiring>(t: &Wfst<W>) -> String {
    let first_arc_source = t.states().find(|&s| !t.arcs(s).is_empty());
    let initials: Vec<_> = t.initials().collect();
    let implicit = match (first_arc_source, initials.as_slice()) {
        (Some(src), [(q, w)]) => *q == src && w.is_one(),
        _ => false,
    };
    let mut out = String::new();
    if !implicit {
        for (q, w) in &initials {
            writeln!(out, "init\t{q}\t{}", fmt_weight(w.value())).unwrap();
        }
    }
    for s in t.states() {
        for arc in t.arcs(s) {
            writeln!(
                out,
                "{s}\t{}\t{}\t{}\t{}",
                arc.nextstate,
                arc.ilabel,
                arc.olabel,
                fmt_weight(arc.weight.value())
            )
            .unwrap();
        }
    }
    for (q, w) in t.finals() {
        writeln!(out, "{q}\t{}", fmt_weight(w.value())).unwrap();
    }
    out
}

/// Parse the text form. States are materialized densely up to the largest
/// id mentioned.
pub fn read_text<W: Semiring>(text: &str) -> Result<Wfst<W>> {
    enum Line<W> {
        Init(usize, W),
        Arc(usize, Arc<W>),
        Final(usize, W),
    }
    let mut lines: Vec<Line<W>> = Vec::new();
    let mut max_state = None::<usize>;
    for (lineno, raw) in text.lines().enumerate() {
        let raw = raw.trim_end();
        if raw.is_empty() {
            continue;
        }
        let context = format!("fst text line {}", lineno + 1);
        let fields: Vec<&str> = raw.split('\t').collect();
        let parse_state = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|e| Error::parse(&context, format!("bad state id {s:?}: {e}")))
        };
        let parse_label = |s: &str| -> Result<Label> {
            s.parse()
                .map_err(|e| Error::parse(&context, format!("bad label {s:?}: {e}")))
        };
        let parse_weight = |s: &str| -> Result<W> {
            let v: f64 = s
                .parse()
                .map_err(|e| Error::parse(&context, format!("bad weight {s:?}: {e}")))?;
            Ok(W::from_value(v))
        };
        let line = match fields.as_slice() {
            ["init", state, weight] => Line::Init(parse_state(state)?, parse_weight(weight)?),
            ["init", state] => Line::Init(parse_state(state)?, W::one()),
            [state] => Line::Final(parse_state(state)?, W::one()),
            [state, weight] => Line::Final(parse_state(state)?, parse_weight(weight)?),
            [src, dst, ilabel, olabel] => Line::Arc(
                parse_state(src)?,
                Arc::new(parse_label(ilabel)?, parse_label(olabel)?, W::one(), parse_state(dst)?),
            ),
            [src, dst, ilabel, olabel, weight] => Line::Arc(
                parse_state(src)?,
                Arc::new(
                    parse_label(ilabel)?,
                    parse_label(olabel)?,
                    parse_weight(weight)?,
                    parse_state(dst)?,
                ),
            ),
            _ => return Err(Error::parse(context, format!("unrecognized line {raw:?}"))),
        };
        let seen = match &line {
            Line::Init(s, _) | Line::Final(s, _) => *s,
            Line::Arc(s, arc) => (*s).max(arc.nextstate),
        };
        max_state = Some(max_state.map_or(seen, |m: usize| m.max(seen)));
        lines.push(line);
    }
    let mut t = Wfst::new();
    if let Some(max) = max_state {
        for _ in 0..=max {
            t.add_state();
        }
    }
    let mut saw_init = false;
    let mut first_arc_source = None;
    for line in &lines {
        match line {
            Line::Init(q, w) => {
                saw_init = true;
                t.set_initial(*q, *w);
            }
            Line::Arc(src, arc) => {
                first_arc_source.get_or_insert(*src);
                t.add_arc(*src, *arc)?;
            }
            Line::Final(q, w) => t.set_final(*q, *w),
        }
    }
    if !saw_init {
        if let Some(src) = first_arc_source {
            t.set_initial(src, W::one());
        } else if t.num_states() > 0 {
            return Err(Error::parse(
                "fst text",
                "no arcs and no explicit init line: initial state is undetermined",
            ));
        }
    }
    Ok(t)
}

/// Identity chain over the characters of `word`, each looked up in the
/// symbol table; weight 1̄ on every arc. The empty word gives a single
/// state that is both initial and final.
pub fn linear_from_string<W: Semiring>(word: &str, symbols: &SymbolTable) -> Result<Wfst<W>> {
    let mut labels = Vec::new();
    for ch in word.chars() {
        let sym = ch.to_string();
        let id = symbols.id_of(&sym).ok_or_else(|| Error::UnknownSymbol {
            symbol: sym,
            context: format!("word {word:?}"),
        })?;
        labels.push(id);
    }
    Ok(Wfst::acceptor(&labels))
}
