//! The invariant battery for one nanoword, and comparison of two batteries.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{Group, PiElement};
use crate::homotopy::{search, SearchConfig, SearchStats, Verdict};
use crate::invariants::{gamma, self_linking};
use crate::kei::{characteristic_sequence, CharacteristicSequence};
use crate::linear::{lambda, lambda_grade, tricolor_census, BetaSet, TricoloringCensus};
use crate::pairing::{build_pairing, pairing_isomorphic, reduce_primitive, AlphaPairing};
use crate::setting::Setting;
use crate::word::Nanoword;
use crate::{Lambda, ZPi, ZPiMod2};

/// Names of the invariants, in the order they are compared.
pub const INVARIANTS: [&str; 6] =
    ["gamma", "self-linking", "primitive pairing", "tricolorings", "lambda", "characteristic sequence"];

/// The raw invariant values, kept for exact comparison.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub gamma: Option<PiElement>,
    pub self_linking: Option<(Vec<ZPi>, Vec<ZPiMod2>)>,
    pub pairing: Option<AlphaPairing>,
    pub tricolorings: Vec<TricoloringCensus>,
    pub lambda: Option<Lambda>,
    pub sequence: Option<CharacteristicSequence>,
}

impl Invariants {
    /// Everything that is defined for this alphabet; `betas` picks the
    /// tricoloring censuses.
    pub fn compute(s: &Setting, n: &Nanoword, betas: &[BetaSet]) -> Self {
        let sl = self_linking(s, n).ok().map(|x| {
            let (f, m) = x.protected();
            (f.into_iter().cloned().collect(), m.into_iter().cloned().collect())
        });
        Self {
            gamma: gamma(s, n).ok(),
            self_linking: sl,
            pairing: build_pairing(s, n).ok().map(|p| reduce_primitive(&p, &s.spec).0),
            tricolorings: betas.iter().map(|b| tricolor_census(n, b)).collect(),
            lambda: lambda(s, n).ok(),
            sequence: characteristic_sequence(s, n).ok(),
        }
    }

    /// The first invariant on which the two differ. A difference proves the
    /// words are not homotopic.
    pub fn separating(&self, other: &Self) -> Option<&'static str> {
        self.differing(other).first().copied()
    }

    /// Every invariant on which the two differ.
    pub fn differing(&self, other: &Self) -> Vec<&'static str> {
        let pairing_differs = match (&self.pairing, &other.pairing) {
            (Some(p), Some(q)) => !pairing_isomorphic(p, q),
            _ => false,
        };
        let differs = [
            self.gamma != other.gamma,
            self.self_linking != other.self_linking,
            pairing_differs,
            self.tricolorings != other.tricolorings,
            self.lambda != other.lambda,
            self.sequence != other.sequence,
        ];
        differs.iter().zip(INVARIANTS).filter(|(d, _)| **d).map(|(_, n)| n).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Contractibility {
    Contractible { witness: Vec<String>, base_moves: usize },
    NonContractible { certificate: String },
    Unknown { stats: SearchStats },
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfLinkingReport {
    /// `[a]_w` per letter of α.
    pub per_letter: Vec<(String, String)>,
    /// `[a]_w - [τa]_w` per free orbit.
    pub free: Vec<(String, String)>,
    /// `[a]_w` mod 2 per fixed letter.
    pub fixed: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TricolorReport {
    pub beta: String,
    pub census: TricoloringCensus,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub canonical: String,
    pub length: usize,
    /// One letter per τ-orbit; the kei sequence depends on this choice.
    pub alpha_plus: Vec<String>,
    pub gamma: Option<String>,
    pub self_linking: Option<SelfLinkingReport>,
    pub primitive_pairing: Option<String>,
    pub pairing_size: Option<usize>,
    pub norm_bound: Option<usize>,
    pub tricolorings: Vec<TricolorReport>,
    pub lambda: Option<String>,
    /// `[λ00, λ01, λ10, λ11]`.
    pub lambda_graded: Option<[String; 4]>,
    pub characteristic_sequence: Option<String>,
    /// Invariants not defined for this alphabet, with the reason.
    pub skipped: Vec<(String, String)>,
    pub contractibility: Contractibility,
}

pub fn render_nanoword(s: &Setting, n: &Nanoword) -> String {
    if n.is_empty() {
        "(empty)".into()
    } else {
        n.display(&s.spec).to_string()
    }
}

/// Runs every invariant on `n` and settles contractibility: a nonvanishing
/// invariant certifies NON-CONTRACTIBLE, otherwise the bounded search runs.
pub fn report(s: &Setting, n: &Nanoword, betas: &[BetaSet], cfg: &SearchConfig) -> (InvariantReport, Invariants) {
    let inv = Invariants::compute(s, n, betas);
    let empty = Invariants::compute(s, &Nanoword::empty(), betas);
    let contractibility = match inv.separating(&empty) {
        Some(name) => Contractibility::NonContractible { certificate: name.into() },
        None => {
            let out = search(n, &Nanoword::empty(), &s.spec, cfg);
            match out.verdict {
                Verdict::Equivalent => {
                    let w = out.witness.expect("witness");
                    Contractibility::Contractible { base_moves: w.base_len(), witness: w.render_base(&s.spec) }
                }
                Verdict::Unknown => Contractibility::Unknown { stats: out.stats },
            }
        }
    };
    let mut skipped = Vec::new();
    let note = |r: crate::Result<()>, what: &str, skipped: &mut Vec<(String, String)>| {
        if let Err(e) = r {
            skipped.push((what.to_string(), e.to_string()));
        }
    };
    note(gamma(s, n).map(|_| ()), "gamma", &mut skipped);
    note(build_pairing(s, n).map(|_| ()), "pairing", &mut skipped);
    note(characteristic_sequence(s, n).map(|_| ()), "characteristic sequence", &mut skipped);

    let self_linking = self_linking(s, n).ok().map(|x| SelfLinkingReport {
        per_letter: x.per_letter.iter().enumerate().map(|(a, v)| (s.spec.name(a).into(), v.render(&s.ab))).collect(),
        free: x.free_diff.iter().map(|(o, v)| (s.table.orbit_name(*o).into(), v.render(&s.ab))).collect(),
        fixed: x.fixed_mod2.iter().map(|(a, v)| (s.spec.name(*a).into(), v.render(&s.ab))).collect(),
    });
    let report = InvariantReport {
        canonical: render_nanoword(s, &n.canonical_form().to_nanoword()),
        length: n.len(),
        alpha_plus: s.table.alpha_plus().into_iter().map(|a| s.spec.name(a).to_string()).collect(),
        gamma: inv.gamma.as_ref().map(|g| s.pi.render(g)),
        self_linking,
        primitive_pairing: inv.pairing.as_ref().map(|p| p.display(s).to_string()),
        pairing_size: inv.pairing.as_ref().map(|p| p.card()),
        norm_bound: inv.pairing.as_ref().map(|p| p.card() - 1),
        tricolorings: betas
            .iter()
            .zip(&inv.tricolorings)
            .map(|(b, c)| TricolorReport { beta: b.render(&s.spec), census: *c })
            .collect(),
        lambda: inv.lambda.as_ref().map(|l| l.render(&s.psi)),
        lambda_graded: inv.lambda.as_ref().map(|l| lambda_grade(l).map(|x| x.render(&s.psi))),
        characteristic_sequence: inv.sequence.as_ref().map(|q| q.render(s)),
        skipped,
        contractibility,
    };
    (report, inv)
}

impl InvariantReport {
    /// Aligned `field  value` lines.
    pub fn render_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("canonical".into(), self.canonical.clone())];
        rows.push(("length".into(), self.length.to_string()));
        rows.push(("alpha+".into(), self.alpha_plus.join(" ")));
        if let Some(g) = &self.gamma {
            rows.push(("gamma".into(), g.clone()));
        }
        if let Some(sl) = &self.self_linking {
            for (a, v) in &sl.per_letter {
                rows.push((format!("[{a}]_w"), v.clone()));
            }
            for (a, v) in &sl.free {
                rows.push((format!("[{a}]_w - [τ{a}]_w"), v.clone()));
            }
            for (a, v) in &sl.fixed {
                rows.push((format!("[{a}]_w mod 2"), v.clone()));
            }
        }
        if let Some(n) = self.pairing_size {
            rows.push(("pairing size".into(), n.to_string()));
        }
        if let Some(b) = self.norm_bound {
            rows.push(("norm bound".into(), b.to_string()));
        }
        for t in &self.tricolorings {
            let c: Vec<String> = t.census.iter().map(|r| format!("{} {} {}", r[0], r[1], r[2])).collect();
            rows.push((format!("tricolorings β={}", t.beta), c.join(" | ")));
        }
        if let Some(l) = &self.lambda {
            rows.push(("lambda".into(), l.clone()));
        }
        if let Some(g) = &self.lambda_graded {
            for (k, name) in ["lambda00", "lambda01", "lambda10", "lambda11"].iter().enumerate() {
                rows.push((name.to_string(), g[k].clone()));
            }
        }
        if let Some(q) = &self.characteristic_sequence {
            rows.push(("characteristic sequence".into(), q.clone()));
        }
        for (what, why) in &self.skipped {
            rows.push((format!("{what} skipped"), why.clone()));
        }
        let verdict = match &self.contractibility {
            Contractibility::Contractible { base_moves, .. } => format!("CONTRACTIBLE ({base_moves} base moves)"),
            Contractibility::NonContractible { certificate } => format!("NON-CONTRACTIBLE (certificate: {certificate})"),
            Contractibility::Unknown { stats } => {
                format!("UNKNOWN (max_len {}, {} states)", stats.max_len, stats.states)
            }
        };
        rows.push(("verdict".into(), verdict));
        let width = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let pad = width - k.chars().count();
            let mut lines = v.lines();
            let _ = writeln!(out, "{k}{}  {}", " ".repeat(pad), lines.next().unwrap_or(""));
            for l in lines {
                let _ = writeln!(out, "{}  {l}", " ".repeat(width));
            }
        }
        if let Some(p) = &self.primitive_pairing {
            let _ = writeln!(out, "primitive pairing:\n{p}");
        }
        if let Contractibility::Contractible { witness, .. } = &self.contractibility {
            if !witness.is_empty() {
                let _ = writeln!(out, "witness:");
                for m in witness {
                    let _ = writeln!(out, "  {m}");
                }
            }
        }
        out
    }
}
