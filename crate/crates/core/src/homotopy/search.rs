//! Bounded bidirectional breadth-first search for homotopies.

use std::collections::HashMap;

use serde::Serialize;

use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};
use crate::word::{CanonicalNanoword, Nanoword};

use super::derived::{invert_steps, sites, DerivedMove, Site, Step};
use super::moves::{enumerate, MoveInstance, MoveKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// No state longer than this is ever visited.
    pub max_len: usize,
    /// Cap on visited states, both sides together.
    pub max_states: usize,
    pub shift: bool,
    /// Also follow derived moves.
    pub derived: bool,
}

impl SearchConfig {
    pub const DEFAULT_MAX_STATES: usize = 200_000;

    /// Defaults for a pair of inputs: longest input plus four letters.
    pub fn for_lengths(a: usize, b: usize) -> Self {
        Self { max_len: a.max(b) + 4, max_states: Self::DEFAULT_MAX_STATES, shift: false, derived: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Equivalent,
    Unknown,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub states: usize,
    pub frontier_peak: usize,
    pub max_len: usize,
    pub max_states: usize,
    /// The state cap was hit before the graphs were exhausted.
    pub exhausted: bool,
}

/// A sequence of steps taking one nanoword to an isomorph of another.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub steps: Vec<Step>,
}

impl Witness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn base_len(&self) -> usize {
        self.steps.iter().map(Step::base_len).sum()
    }

    /// Applies every base move in turn, checking each intermediate word.
    /// Returns the final word and the longest intermediate length.
    pub fn replay(&self, source: &Nanoword, spec: &AlphabetSpec) -> Result<(Nanoword, usize)> {
        let mut w = source.clone();
        let mut peak = w.len();
        for m in self.steps.iter().flat_map(Step::base_moves) {
            w = m.apply(&w, spec)?;
            w = Nanoword::try_from(w.as_etale().clone())?;
            peak = peak.max(w.len());
        }
        Ok((w, peak))
    }

    /// Whether the witness takes `source` to an isomorph of `target`.
    pub fn verify(&self, source: &Nanoword, target: &Nanoword, spec: &AlphabetSpec) -> bool {
        matches!(self.replay(source, spec), Ok((w, _)) if w.is_isomorphic(target))
    }

    /// One move per line; derived moves are followed by their expansion, indented.
    pub fn render(&self, spec: &AlphabetSpec) -> String {
        let mut lines = Vec::new();
        for s in &self.steps {
            s.render_lines(spec, 0, &mut lines);
        }
        lines.join("\n")
    }

    /// The flat base-move trace.
    pub fn render_base(&self, spec: &AlphabetSpec) -> Vec<String> {
        self.steps.iter().flat_map(Step::base_moves).map(|m| m.render(spec)).collect()
    }

    /// Reads a trace of base moves, one per line. Derived-move headers are
    /// skipped and their indented expansions read as base moves, so a
    /// rendered witness reads back as its flat expansion.
    pub fn parse_base(text: &str, spec: &AlphabetSpec) -> Result<Self> {
        let mut steps = Vec::new();
        for line in text.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let head = t.split_whitespace().next().unwrap_or("");
            if MoveKind::ALL.iter().any(|k| k.name() == head) {
                steps.push(Step::Base(MoveInstance::parse(t, spec)?));
            } else if !["B1", "B2", "B3", "CANCEL", "B1inv", "B2inv", "B3inv", "CANCELinv"].contains(&head) {
                return Err(Error::Precondition(format!("unknown step `{t}`")));
            }
        }
        Ok(Self { steps })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub stats: SearchStats,
}

#[derive(Clone, Debug)]
enum Edge {
    Base(MoveInstance),
    Site(Site),
}

impl Edge {
    fn expand(&self, from: &CanonicalNanoword, spec: &AlphabetSpec) -> Vec<Step> {
        match self {
            Edge::Base(m) => vec![Step::Base(m.clone())],
            Edge::Site(s @ Site::Braid { .. }) => vec![Step::Derived(s.expand(from, spec))],
            // cancellation is spelled out as its four steps
            Edge::Site(s @ Site::Cancel { .. }) => {
                let DerivedMove { expansion, .. } = s.expand(from, spec);
                expansion
            }
        }
    }
}

fn neighbours(c: &CanonicalNanoword, spec: &AlphabetSpec, cfg: &SearchConfig) -> Vec<(Edge, CanonicalNanoword)> {
    let word: Vec<usize> = c.word.iter().map(|&x| x as usize).collect();
    let proj: Vec<usize> = c.proj.iter().map(|&x| x as usize).collect();
    let mut out = Vec::new();
    for m in enumerate(&word, &proj, spec, cfg.max_len, cfg.shift) {
        let r = m.apply_canonical(c, spec).expect("enumerated moves apply");
        out.push((Edge::Base(m), r));
    }
    if cfg.derived && c.len() <= cfg.max_len {
        for s in sites(c, spec) {
            out.push((Edge::Site(s), s.result(c)));
        }
    }
    out
}

struct Side {
    states: Vec<(CanonicalNanoword, Option<(usize, Edge)>)>,
    index: HashMap<CanonicalNanoword, usize>,
    frontier: Vec<usize>,
}

impl Side {
    fn new(root: CanonicalNanoword) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Self { states: vec![(root, None)], index, frontier: vec![0] }
    }

    /// Steps from the root to state `i`.
    fn path(&self, mut i: usize, spec: &AlphabetSpec) -> Vec<Step> {
        let mut edges = Vec::new();
        while let Some((p, e)) = &self.states[i].1 {
            edges.push((*p, e));
            i = *p;
        }
        edges.reverse();
        edges.into_iter().flat_map(|(p, e)| e.expand(&self.states[p].0, spec)).collect()
    }
}

/// Bounded search for a homotopy from `a` to `b`. Returns EQUIVALENT with a
/// replayable witness, or UNKNOWN when the bounds run out.
pub fn search(a: &Nanoword, b: &Nanoword, spec: &AlphabetSpec, cfg: &SearchConfig) -> SearchOutcome {
    let mut stats = SearchStats { max_len: cfg.max_len, max_states: cfg.max_states, ..Default::default() };
    let (ca, cb) = (a.canonical_form(), b.canonical_form());
    if ca == cb {
        stats.states = 1;
        stats.frontier_peak = 1;
        return SearchOutcome { verdict: Verdict::Equivalent, witness: Some(Witness::default()), stats };
    }
    if ca.len() > cfg.max_len || cb.len() > cfg.max_len || ca.len() % 2 != cb.len() % 2 {
        stats.states = 2;
        return SearchOutcome { verdict: Verdict::Unknown, witness: None, stats };
    }
    let mut sides = [Side::new(ca.clone()), Side::new(cb)];
    loop {
        stats.states = sides[0].states.len() + sides[1].states.len();
        stats.frontier_peak = stats.frontier_peak.max(sides[0].frontier.len() + sides[1].frontier.len());
        if sides[0].frontier.is_empty() || sides[1].frontier.is_empty() {
            return SearchOutcome { verdict: Verdict::Unknown, witness: None, stats };
        }
        let x = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        let frontier = std::mem::take(&mut sides[x].frontier);
        let mut next = Vec::new();
        for u in frontier {
            let cu = sides[x].states[u].0.clone();
            for (e, v) in neighbours(&cu, spec, cfg) {
                if sides[x].index.contains_key(&v) {
                    continue;
                }
                let id = sides[x].states.len();
                sides[x].index.insert(v.clone(), id);
                sides[x].states.push((v.clone(), Some((u, e))));
                if let Some(&other) = sides[1 - x].index.get(&v) {
                    let (si, ti) = if x == 0 { (id, other) } else { (other, id) };
                    let mut steps = sides[0].path(si, spec);
                    let back = sides[1].path(ti, spec);
                    steps.extend(invert_steps(&sides[1].states[0].0, &back, spec));
                    stats.states = sides[0].states.len() + sides[1].states.len();
                    let w = Witness { steps };
                    debug_assert!(w.steps.iter().try_fold(ca.clone(), |c, s| s.apply_canonical(&c, spec)).is_some());
                    return SearchOutcome { verdict: Verdict::Equivalent, witness: Some(w), stats };
                }
                next.push(id);
                if sides[0].states.len() + sides[1].states.len() >= cfg.max_states {
                    stats.states = cfg.max_states;
                    stats.exhausted = true;
                    return SearchOutcome { verdict: Verdict::Unknown, witness: None, stats };
                }
            }
        }
        sides[x].frontier = next;
    }
}

/// [`search`] with `max_len` and `max_states`, derived moves on, no SHIFT.
pub fn equivalent_bounded(a: &Nanoword, b: &Nanoword, spec: &AlphabetSpec, max_len: usize, max_states: usize) -> SearchOutcome {
    let cfg = SearchConfig { max_len, max_states, shift: false, derived: true };
    search(a, b, spec, &cfg)
}

pub fn is_contractible_bounded(n: &Nanoword, spec: &AlphabetSpec, max_len: usize, max_states: usize) -> SearchOutcome {
    equivalent_bounded(n, &Nanoword::empty(), spec, max_len, max_states)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free() -> AlphabetSpec {
        AlphabetSpec::new(&["a", "b"], &[("a", "b")], &[], None).unwrap()
    }

    #[test]
    fn abab_contracts() {
        let s = free();
        let n = Nanoword::from_pattern("ABAB", &[('A', 0), ('B', 1)]).unwrap();
        let out = is_contractible_bounded(&n, &s, 8, 200_000);
        assert_eq!(out.verdict, Verdict::Equivalent);
        let w = out.witness.unwrap();
        assert!(w.len() <= 6, "{}", w.render(&s));
        assert!(w.verify(&n, &Nanoword::empty(), &s));
        let back = Witness::parse_base(&w.render(&s), &s).unwrap();
        assert!(back.verify(&n, &Nanoword::empty(), &s));
    }

    #[test]
    fn abab_same_letter_does_not() {
        let s = free();
        let n = Nanoword::from_pattern("ABAB", &[('A', 0), ('B', 0)]).unwrap();
        let out = is_contractible_bounded(&n, &s, 8, 20_000);
        assert_eq!(out.verdict, Verdict::Unknown);
    }

    #[test]
    fn trivial_cases() {
        let s = free();
        let e = Nanoword::empty();
        let out = is_contractible_bounded(&e, &s, 0, 10);
        assert_eq!(out.verdict, Verdict::Equivalent);
        assert!(out.witness.unwrap().is_empty());
        let n = Nanoword::from_pattern("AABB", &[('A', 0), ('B', 0)]).unwrap();
        let out = is_contractible_bounded(&n, &s, 4, 1000);
        let w = out.witness.unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.verify(&n, &e, &s));
    }

    #[test]
    fn search_without_derived_moves() {
        let s = free();
        let n = Nanoword::from_pattern("ABAB", &[('A', 0), ('B', 1)]).unwrap();
        let cfg = SearchConfig { max_len: 12, max_states: 1_000_000, shift: false, derived: false };
        let out = search(&n, &Nanoword::empty(), &s, &cfg);
        assert_eq!(out.verdict, Verdict::Equivalent);
        assert!(out.witness.unwrap().verify(&n, &Nanoword::empty(), &s));
    }
}
