//! Classification of all words of a given length up to homotopy.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homotopy::{search, SearchConfig, SearchStats, Verdict};
use crate::linear::BetaSet;
use crate::report::Invariants;
use crate::setting::Setting;
use crate::word::{EtaleWord, Nanoword};

/// Largest word length `classify` accepts by default.
pub const DEFAULT_LENGTH_CAP: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct Equivalence {
    pub from: String,
    pub to: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub representative: String,
    pub members: Vec<String>,
    pub contractible: bool,
    /// Oracle-proven equivalences joining the members.
    pub equivalences: Vec<Equivalence>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Separation {
    pub a: String,
    pub b: String,
    pub invariant: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Unresolved {
    pub a: String,
    pub b: String,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub length: usize,
    pub classes: Vec<ClassEntry>,
    /// One named invariant per pair of classes it tells apart.
    pub separations: Vec<Separation>,
    /// Pairs of classes neither separated nor joined within the bounds.
    pub unknown: Vec<Unresolved>,
}

impl Classification {
    pub fn class_of(&self, word: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.members.iter().any(|m| m == word))
    }

    pub fn same_class(&self, a: &str, b: &str) -> bool {
        matches!((self.class_of(a), self.class_of(b)), (Some(x), Some(y)) if x == y)
    }

    pub fn is_contractible(&self, word: &str) -> bool {
        self.class_of(word).is_some_and(|c| self.classes[c].contractible)
    }

    /// The invariant separating the classes of `a` and `b`, if recorded.
    pub fn separation(&self, a: &str, b: &str) -> Option<&str> {
        let (x, y) = (self.class_of(a)?, self.class_of(b)?);
        let (rx, ry) = (&self.classes[x].representative, &self.classes[y].representative);
        self.separations
            .iter()
            .find(|s| (&s.a == rx && &s.b == ry) || (&s.a == ry && &s.b == rx))
            .map(|s| s.invariant.as_str())
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("length {}: {} classes\n", self.length, self.classes.len());
        for (i, c) in self.classes.iter().enumerate() {
            let tag = if c.contractible { "  contractible" } else { "" };
            out.push_str(&format!("class {i}: {}{tag}\n", c.members.join(" ")));
            for e in &c.equivalences {
                out.push_str(&format!("  {} ~ {} ({} moves)\n", e.from, e.to, e.witness.len()));
            }
        }
        for s in &self.separations {
            out.push_str(&format!("separated {} | {} by {}\n", s.a, s.b, s.invariant));
        }
        for u in &self.unknown {
            out.push_str(&format!(
                "UNKNOWN {} | {} (max_len {}, {} states)\n",
                u.a, u.b, u.stats.max_len, u.stats.states
            ));
        }
        out
    }
}

/// Every word of length `len` over α, in lexicographic order of letter indices.
pub fn all_words(s: &Setting, len: usize) -> Vec<String> {
    let k = s.spec.len();
    let total = k.checked_pow(len as u32).unwrap_or(usize::MAX);
    (0..total)
        .map(|mut x| {
            let mut idx = vec![0; len];
            for slot in idx.iter_mut().rev() {
                *slot = x % k;
                x /= k;
            }
            idx.iter().map(|&i| s.spec.name(i)).collect::<String>()
        })
        .collect()
}

struct Node {
    name: String,
    word: Nanoword,
    inv: Invariants,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub cap: usize,
    /// Search bound: this many letters above the longer word of a pair.
    pub extra: usize,
    pub max_states: usize,
    /// Keep only rearrangements of this word.
    pub content: Option<String>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_LENGTH_CAP, extra: 4, max_states: SearchConfig::DEFAULT_MAX_STATES, content: None }
    }
}

fn letter_counts(s: &Setting, w: &str) -> Result<Vec<usize>> {
    let e = EtaleWord::plain(w, &s.spec)?;
    let mut c = vec![0; s.spec.len()];
    for &l in e.word() {
        c[e.letters()[l].proj] += 1;
    }
    Ok(c)
}

/// Groups all words of length `len` (plus the empty word) by invariants and
/// by equivalences the bounded search proves.
pub fn classify(s: &Setting, len: usize, opts: &ClassifyOptions) -> Result<Classification> {
    if len > opts.cap {
        return Err(Error::Precondition(format!("length {len} exceeds the cap {}", opts.cap)));
    }
    let (extra, max_states) = (opts.extra, opts.max_states);
    let betas = BetaSet::enumerate(&s.spec);
    let mut names = vec![String::new()];
    match &opts.content {
        Some(c) => {
            let want = letter_counts(s, c)?;
            if want.iter().sum::<usize>() != len {
                return Err(Error::Precondition(format!("`{c}` does not have length {len}")));
            }
            for w in all_words(s, len) {
                if letter_counts(s, &w)? == want {
                    names.push(w);
                }
            }
        }
        None => names.extend(all_words(s, len)),
    }
    let mut nodes: Vec<Node> = names
        .into_par_iter()
        .map(|name| {
            let word = EtaleWord::plain(&name, &s.spec).expect("alphabet word").desingularize();
            let inv = Invariants::compute(s, &word, &betas);
            Node { name, word, inv }
        })
        .collect();
    // words with isomorphic nanowords are trivially equivalent; keep order stable
    nodes.sort_by(|a, b| (a.name.len(), &a.name).cmp(&(b.name.len(), &b.name)));

    // partition by invariant agreement
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..nodes.len() {
        match groups.iter_mut().find(|g| nodes[g[0]].inv.separating(&nodes[i].inv).is_none()) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }

    let label = |n: &Node| if n.name.is_empty() { "(empty)".to_string() } else { n.name.clone() };
    // inside each group, join members by search
    type GroupResult = (Vec<Vec<usize>>, Vec<Equivalence>, Vec<(usize, usize, SearchStats)>);
    let results: Vec<GroupResult> = groups
        .par_iter()
        .map(|g| {
            let mut comps: Vec<Vec<usize>> = Vec::new();
            let mut eqs = Vec::new();
            let mut fails: Vec<(usize, usize, SearchStats)> = Vec::new();
            for &m in g {
                let mut joined: Vec<usize> = Vec::new();
                for (ci, comp) in comps.iter().enumerate() {
                    for &o in comp {
                        if nodes[m].word.is_isomorphic(&nodes[o].word) {
                            joined.push(ci);
                            eqs.push(Equivalence { from: label(&nodes[m]), to: label(&nodes[o]), witness: vec![] });
                            break;
                        }
                        let (a, b) = (&nodes[m].word, &nodes[o].word);
                        let cfg = SearchConfig {
                            max_len: a.len().max(b.len()) + extra,
                            max_states,
                            shift: false,
                            derived: true,
                        };
                        let out = search(a, b, &s.spec, &cfg);
                        if out.verdict == Verdict::Equivalent {
                            let w = out.witness.expect("witness");
                            eqs.push(Equivalence {
                                from: label(&nodes[m]),
                                to: label(&nodes[o]),
                                witness: w.render_base(&s.spec),
                            });
                            joined.push(ci);
                            break;
                        }
                        fails.push((m, o, out.stats));
                    }
                }
                if joined.is_empty() {
                    comps.push(vec![m]);
                } else {
                    let mut merged = vec![m];
                    for &ci in joined.iter().rev() {
                        merged.extend(comps.remove(ci));
                    }
                    merged.sort();
                    comps.insert(joined[0], merged);
                }
            }
            let mut unknown = Vec::new();
            for x in 0..comps.len() {
                for y in x + 1..comps.len() {
                    let stats = fails
                        .iter()
                        .find(|(m, o, _)| {
                            (comps[x].contains(m) && comps[y].contains(o)) || (comps[y].contains(m) && comps[x].contains(o))
                        })
                        .map(|f| f.2)
                        .unwrap_or_default();
                    unknown.push((comps[x][0], comps[y][0], stats));
                }
            }
            (comps, eqs, unknown)
        })
        .collect();

    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    let mut all_eqs = Vec::new();
    let mut unresolved = Vec::new();
    for (comps, eqs, unknown) in results {
        for c in comps {
            for &m in &c[1..] {
                let (r1, r2) = (find(&mut parent, c[0]), find(&mut parent, m));
                parent[r2] = r1;
            }
        }
        all_eqs.extend(eqs);
        unresolved.extend(unknown);
    }
    let mut class_index: Vec<Option<usize>> = vec![None; nodes.len()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..nodes.len() {
        let r = find(&mut parent, i);
        let c = *class_index[r].get_or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[c].push(i);
    }
    let classes: Vec<ClassEntry> = members
        .iter()
        .map(|ms| {
            let names: Vec<String> = ms.iter().filter(|&&i| !nodes[i].name.is_empty()).map(|&i| nodes[i].name.clone()).collect();
            let label_set: Vec<String> = ms.iter().map(|&i| label(&nodes[i])).collect();
            ClassEntry {
                representative: label(&nodes[ms[0]]),
                members: names,
                contractible: ms.contains(&0),
                equivalences: all_eqs
                    .iter()
                    .filter(|e| label_set.contains(&e.from))
                    .cloned()
                    .collect(),
            }
        })
        .collect();
    let mut separations = Vec::new();
    for x in 0..members.len() {
        for y in x + 1..members.len() {
            let (a, b) = (&nodes[members[x][0]], &nodes[members[y][0]]);
            if let Some(name) = a.inv.separating(&b.inv) {
                separations.push(Separation { a: label(a), b: label(b), invariant: name.into() });
            }
        }
    }
    let unknown = unresolved
        .into_iter()
        .map(|(a, b, stats)| Unresolved { a: label(&nodes[a]), b: label(&nodes[b]), stats })
        .collect();
    Ok(Classification { length: len, classes, separations, unknown })
}
