//! Derived moves: three braid-like rearrangements and the cancellation of
//! `AB…AB`, each expanded into base moves.

use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};
use crate::word::{CanonicalNanoword, Nanoword};

use super::moves::{apply_edit_canonical, find_form, match_form, occurrences, Edit, Form, MoveInstance, MoveKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerivedKind {
    /// `xAByCAzBCt → xBAyACzCBt` when `(|A|, τ|B|, |C|) ∈ S`.
    B1,
    /// `xAByCAzCBt → xBAyACzBCt` when `(τ|A|, τ|B|, |C|) ∈ S`.
    B2,
    /// `xAByACzCBt → xBAyCAzBCt` when `(|A|, τ|B|, τ|C|) ∈ S`.
    B3,
    /// `xAByABz → xyz` when `|A| = τ|B|` and some `(e, |B|, |B|) ∈ S`.
    Cancel,
}

impl DerivedKind {
    pub fn name(self) -> &'static str {
        match self {
            DerivedKind::B1 => "B1",
            DerivedKind::B2 => "B2",
            DerivedKind::B3 => "B3",
            DerivedKind::Cancel => "CANCEL",
        }
    }

    fn form(self, inverse: bool) -> Form {
        let (fwd, bwd, cond) = match self {
            DerivedKind::B1 => ([[0, 1], [2, 0], [1, 2]], [[1, 0], [0, 2], [2, 1]], [(0, false), (1, true), (2, false)]),
            DerivedKind::B2 => ([[0, 1], [2, 0], [2, 1]], [[1, 0], [0, 2], [1, 2]], [(0, true), (1, true), (2, false)]),
            DerivedKind::B3 => ([[0, 1], [0, 2], [2, 1]], [[1, 0], [2, 0], [1, 2]], [(0, false), (1, true), (2, true)]),
            DerivedKind::Cancel => unreachable!("cancellation is not a three-pair form"),
        };
        Form { pairs: if inverse { bwd } else { fwd }, cond }
    }
}

/// One step of a witness: a base move or a derived move with its expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Base(MoveInstance),
    Derived(DerivedMove),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedMove {
    pub kind: DerivedKind,
    pub inverse: bool,
    /// Positions of the pairs it touches, like a base move.
    pub positions: Vec<usize>,
    pub expansion: Vec<Step>,
}

impl DerivedMove {
    pub fn name(&self) -> String {
        format!("{}{}", self.kind.name(), if self.inverse { "inv" } else { "" })
    }

    /// Total number of base moves once fully expanded.
    pub fn base_len(&self) -> usize {
        self.expansion.iter().map(Step::base_len).sum()
    }
}

impl Step {
    pub fn base_len(&self) -> usize {
        match self {
            Step::Base(_) => 1,
            Step::Derived(d) => d.base_len(),
        }
    }

    /// The base moves, in order.
    pub fn base_moves(&self) -> Vec<&MoveInstance> {
        match self {
            Step::Base(m) => vec![m],
            Step::Derived(d) => d.expansion.iter().flat_map(Step::base_moves).collect(),
        }
    }

    pub fn apply(&self, n: &Nanoword, spec: &AlphabetSpec) -> Result<Nanoword> {
        match self {
            Step::Base(m) => m.apply(n, spec),
            Step::Derived(d) => d.expansion.iter().try_fold(n.clone(), |w, s| s.apply(&w, spec)),
        }
    }

    pub(crate) fn apply_canonical(&self, c: &CanonicalNanoword, spec: &AlphabetSpec) -> Option<CanonicalNanoword> {
        match self {
            Step::Base(m) => m.apply_canonical(c, spec),
            Step::Derived(d) => d.expansion.iter().try_fold(c.clone(), |w, s| s.apply_canonical(&w, spec)),
        }
    }

    /// Lines of a trace; derived moves list their expansion indented below.
    pub fn render_lines(&self, spec: &AlphabetSpec, indent: usize, out: &mut Vec<String>) {
        let pad = " ".repeat(indent);
        match self {
            Step::Base(m) => out.push(format!("{pad}{}", m.render(spec))),
            Step::Derived(d) => {
                let p: Vec<String> = d.positions.iter().map(|x| x.to_string()).collect();
                out.push(format!("{pad}{} @ ({})", d.name(), p.join(",")));
                for s in &d.expansion {
                    s.render_lines(spec, indent + 4, out);
                }
            }
        }
    }
}

/// Replays `steps` from `start` and returns the steps undoing them, in order.
pub(crate) fn invert_steps(start: &CanonicalNanoword, steps: &[Step], spec: &AlphabetSpec) -> Vec<Step> {
    let mut states = vec![start.clone()];
    for s in steps {
        let next = s.apply_canonical(states.last().unwrap(), spec).expect("steps replay");
        states.push(next);
    }
    steps.iter().zip(&states).rev().map(|(s, before)| invert_step(before, s, spec)).collect()
}

fn invert_step(before: &CanonicalNanoword, s: &Step, spec: &AlphabetSpec) -> Step {
    match s {
        Step::Base(m) => {
            let word: Vec<usize> = before.word.iter().map(|&x| x as usize).collect();
            let proj: Vec<usize> = before.proj.iter().map(|&x| x as usize).collect();
            Step::Base(m.inverse_on(&word, &proj))
        }
        Step::Derived(d) => Step::Derived(DerivedMove {
            kind: d.kind,
            inverse: !d.inverse,
            positions: d.positions.clone(),
            expansion: invert_steps(before, &d.expansion, spec),
        }),
    }
}

/// Schematic template steps over a token list `x P1 y P2 z P3 t`.
enum T {
    /// `M2inv` at schematic result positions with the projection of a symbol.
    Ins(usize, usize, (u8, bool)),
    Del(usize, usize),
    Sw(MoveKind, [usize; 3]),
}

const B1_T: &[T] = &[T::Ins(1, 11, (1, false)), T::Sw(MoveKind::M3inv, [2, 6, 10]), T::Del(3, 9)];
const B2_T: &[T] = &[
    T::Ins(3, 6, (0, true)),
    T::Ins(4, 13, (1, true)),
    T::Sw(MoveKind::M3, [3, 9, 14]),
    T::Del(2, 15),
    T::Del(1, 8),
];
const B3_T: &[T] = &[
    T::Ins(4, 11, (2, false)),
    T::Ins(1, 14, (1, false)),
    T::Sw(MoveKind::M3inv, [2, 7, 13]),
    T::Del(3, 12),
    T::Del(6, 9),
];

/// Base moves realising a forward braid move at pair starts `ijk` of a word
/// of length `n` whose A, B, C letters project to `abc`.
fn forward_expansion(kind: DerivedKind, n: usize, ijk: [usize; 3], abc: [usize; 3], spec: &AlphabetSpec) -> Vec<MoveInstance> {
    let [i, j, k] = ijk;
    // token lengths: segments carry their length, letters have length 1
    let mut toks: Vec<usize> = vec![i, 1, 1, j - i - 2, 1, 1, k - j - 2, 1, 1, n - k - 2];
    let at = |toks: &[usize], p: usize| toks[..p].iter().sum::<usize>();
    let template = match kind {
        DerivedKind::B1 => B1_T,
        DerivedKind::B2 => B2_T,
        DerivedKind::B3 => B3_T,
        DerivedKind::Cancel => unreachable!(),
    };
    let mut out = Vec::new();
    for t in template {
        match *t {
            T::Ins(p, q, (sym, tau)) => {
                for x in [p, p + 1, q, q + 1] {
                    toks.insert(x, 1);
                }
                let (cp, cq) = (at(&toks, p), at(&toks, q));
                let a = if tau { spec.tau(abc[sym as usize]) } else { abc[sym as usize] };
                out.push(MoveInstance::new(MoveKind::M2inv, vec![cp, cp + 1, cq, cq + 1], vec![a]));
            }
            T::Del(p, q) => {
                let (cp, cq) = (at(&toks, p), at(&toks, q));
                out.push(MoveInstance::new(MoveKind::M2, vec![cp, cp + 1, cq, cq + 1], vec![]));
                for x in [q + 1, q, p + 1, p] {
                    toks.remove(x);
                }
            }
            T::Sw(kind, ps) => {
                let c: Vec<usize> = ps.iter().flat_map(|&p| {
                    let c = at(&toks, p);
                    [c, c + 1]
                })
                .collect();
                out.push(MoveInstance::new(kind, c, vec![]));
            }
        }
    }
    out
}

fn dense(c: &CanonicalNanoword) -> (Vec<usize>, Vec<usize>) {
    (c.word.iter().map(|&x| x as usize).collect(), c.proj.iter().map(|&x| x as usize).collect())
}

fn pair_positions(starts: &[usize]) -> Vec<usize> {
    starts.iter().flat_map(|&s| [s, s + 1]).collect()
}

/// A braid move at pair starts `ijk`, or `None` if it does not apply.
pub(crate) fn braid(
    kind: DerivedKind,
    inverse: bool,
    ijk: [usize; 3],
    c: &CanonicalNanoword,
    spec: &AlphabetSpec,
) -> Option<DerivedMove> {
    let (word, proj) = dense(c);
    let sym = match_form(&word, &proj, spec, &kind.form(inverse), ijk)?;
    let abc = sym.map(|l| proj[l]);
    let base = |v: Vec<MoveInstance>| v.into_iter().map(Step::Base).collect::<Vec<_>>();
    let expansion = if !inverse {
        base(forward_expansion(kind, c.len(), ijk, abc, spec))
    } else {
        // run the forward move from the other side and walk it back
        let source = apply_edit_canonical(c, &Edit::Swap(ijk.to_vec()));
        let fwd = base(forward_expansion(kind, c.len(), ijk, abc, spec));
        invert_steps(&source, &fwd, spec)
    };
    Some(DerivedMove { kind, inverse, positions: pair_positions(&ijk), expansion })
}

/// The smallest `e` with `(e, b, b) ∈ S`.
fn cancel_witness(b: usize, spec: &AlphabetSpec) -> Option<usize> {
    (0..spec.len()).find(|&e| spec.contains_triple(e, b, b))
}

/// Cancellation of `A B` at `i` against `A B` at `j`.
pub(crate) fn cancel(ij: [usize; 2], c: &CanonicalNanoword, spec: &AlphabetSpec) -> Option<DerivedMove> {
    let (word, proj) = dense(c);
    let [i, j] = ij;
    if !(j >= i + 2 && j + 1 < word.len()) {
        return None;
    }
    let (a, b) = (word[i], word[i + 1]);
    if a == b || word[j] != a || word[j + 1] != b || proj[a] != spec.tau(proj[b]) {
        return None;
    }
    let e = cancel_witness(proj[b], spec)?;
    // x A E E B y A B z
    let ins = MoveInstance::new(MoveKind::M1inv, vec![i + 1, i + 2], vec![spec.tau(e)]);
    let w1 = ins.apply_canonical(c, spec)?;
    // -> x E A B E y B A z
    let mid = braid(DerivedKind::B2, true, [i, i + 2, j + 2], &w1, spec)?;
    let expansion = vec![
        Step::Base(ins),
        Step::Derived(mid),
        Step::Base(MoveInstance::new(MoveKind::M2, vec![i + 1, i + 2, j + 2, j + 3], vec![])),
        Step::Base(MoveInstance::new(MoveKind::M1, vec![i, i + 1], vec![])),
    ];
    Some(DerivedMove { kind: DerivedKind::Cancel, inverse: false, positions: pair_positions(&ij), expansion })
}

/// A derived-move site found on a word; cheap to find, expanded on demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Site {
    Braid { kind: DerivedKind, inverse: bool, ijk: [usize; 3] },
    Cancel { ij: [usize; 2] },
}

impl Site {
    pub(crate) fn result(&self, c: &CanonicalNanoword) -> CanonicalNanoword {
        match *self {
            Site::Braid { ijk, .. } => apply_edit_canonical(c, &Edit::Swap(ijk.to_vec())),
            Site::Cancel { ij: [i, j] } => apply_edit_canonical(c, &Edit::Remove(vec![i, i + 1, j, j + 1])),
        }
    }

    pub(crate) fn expand(&self, c: &CanonicalNanoword, spec: &AlphabetSpec) -> DerivedMove {
        match *self {
            Site::Braid { kind, inverse, ijk } => braid(kind, inverse, ijk, c, spec),
            Site::Cancel { ij } => cancel(ij, c, spec),
        }
        .expect("site was found on this word")
    }
}

pub(crate) fn sites(c: &CanonicalNanoword, spec: &AlphabetSpec) -> Vec<Site> {
    let (word, proj) = dense(c);
    let mut out = Vec::new();
    for kind in [DerivedKind::B1, DerivedKind::B2, DerivedKind::B3] {
        for inverse in [false, true] {
            for (ijk, _) in find_form(&word, &proj, spec, &kind.form(inverse)) {
                out.push(Site::Braid { kind, inverse, ijk });
            }
        }
    }
    let occ = occurrences(&word, proj.len());
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a == b || occ[a].0 != i || proj[a] != spec.tau(proj[b]) {
            continue;
        }
        let j = occ[a].1;
        if j >= i + 2 && j + 1 < word.len() && word[j + 1] == b && cancel_witness(proj[b], spec).is_some() {
            out.push(Site::Cancel { ij: [i, j] });
        }
    }
    out
}

/// Every derived move that applies to `n`, each with its base-move expansion.
pub fn derived_move_check(n: &Nanoword, spec: &AlphabetSpec) -> Vec<DerivedMove> {
    let c = n.canonical_form();
    sites(&c, spec).into_iter().map(|s| s.expand(&c, spec)).collect()
}

/// Result of a derived move, checked by replaying its expansion.
pub fn apply_derived(d: &DerivedMove, n: &Nanoword, spec: &AlphabetSpec) -> Result<Nanoword> {
    Step::Derived(d.clone()).apply(n, spec).map_err(|_| Error::MoveMismatch(d.name()))
}
