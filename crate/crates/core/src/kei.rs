//! α-keis: the axioms, abelian keis over Λ, the free kei on Ψ, kei outputs of
//! nanowords and their characteristic sequences.

use std::fmt;

use crate::algebra::{Group, PsiElement};
use crate::error::{Error, Result};
use crate::linear::BetaSet;
use crate::setting::Setting;
use crate::word::Nanoword;
use crate::Lambda;

/// Unary actions `x ↦ a x` and binary operations `*_a`, one per letter of α.
pub trait Kei {
    type E: Clone + PartialEq + fmt::Debug;
    fn tau(&self, a: usize) -> usize;
    fn act(&self, a: usize, x: &Self::E) -> Self::E;
    fn star(&self, a: usize, x: &Self::E, y: &Self::E) -> Self::E;
}

/// First failing axiom and the sample that breaks it.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomViolation<E> {
    pub axiom: u8,
    pub letter: usize,
    pub witness: Vec<E>,
}

/// Check the five axioms on all letters `letters` and all triples drawn from `samples`.
pub fn check_kei_axioms<K: Kei>(k: &K, letters: usize, samples: &[K::E]) -> std::result::Result<(), AxiomViolation<K::E>> {
    let fail = |axiom, letter, w: &[&K::E]| AxiomViolation { axiom, letter, witness: w.iter().map(|x| (*x).clone()).collect() };
    for a in 0..letters {
        let t = k.tau(a);
        for x in samples {
            if k.star(a, &k.act(a, x), x) != *x {
                return Err(fail(1, a, &[x]));
            }
            if k.act(a, &k.act(t, x)) != *x {
                return Err(fail(4, a, &[x]));
            }
            for y in samples {
                if k.act(a, &k.star(a, x, y)) != k.star(a, &k.act(a, x), &k.act(a, y)) {
                    return Err(fail(2, a, &[x, y]));
                }
                if k.star(t, &k.star(a, x, y), &k.act(a, y)) != *x {
                    return Err(fail(5, a, &[x, y]));
                }
                for z in samples {
                    let lhs = k.star(a, &k.star(a, x, y), z);
                    let rhs = k.star(a, &k.star(a, x, &k.act(a, z)), &k.star(a, y, z));
                    if lhs != rhs {
                        return Err(fail(3, a, &[x, y, z]));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The kei on `Λ^r` with `a x` the left product and `x *_a y = a. x + (1 - a. a) y`.
pub struct AbelianKei<'s> {
    pub setting: &'s Setting,
}

impl AbelianKei<'_> {
    fn scal(&self, c: &Lambda, x: &[Lambda]) -> Vec<Lambda> {
        x.iter().map(|v| c.mul(v, &self.setting.psi)).collect()
    }
}

impl Kei for AbelianKei<'_> {
    type E = Vec<Lambda>;

    fn tau(&self, a: usize) -> usize {
        self.setting.spec.tau(a)
    }

    fn act(&self, a: usize, x: &Vec<Lambda>) -> Vec<Lambda> {
        self.scal(&Lambda::embed(self.setting.psi.plain(a)), x)
    }

    fn star(&self, a: usize, x: &Vec<Lambda>, y: &Vec<Lambda>) -> Vec<Lambda> {
        let psi = &self.setting.psi;
        let ad = Lambda::embed(psi.bullet(a));
        let arc = Lambda::embed(psi.identity()) - Lambda::embed(psi.mul(&psi.bullet(a), &psi.plain(a)));
        self.scal(&ad, x).into_iter().zip(self.scal(&arc, y)).map(|(u, v)| u + v).collect()
    }
}

/// Reduced word in the free group on the set Ψ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeKeiElement(Vec<(PsiElement, i8)>);

impl FreeKeiElement {
    /// Freely reduce an arbitrary signed word.
    pub fn reduce(word: Vec<(PsiElement, i8)>) -> Self {
        let mut out: Vec<(PsiElement, i8)> = Vec::with_capacity(word.len());
        for (g, e) in word {
            match out.last() {
                Some((h, f)) if *h == g && *f == -e => {
                    out.pop();
                }
                _ => out.push((g, e)),
            }
        }
        FreeKeiElement(out)
    }

    /// The generator indexed by `g`.
    pub fn underline(g: PsiElement) -> Self {
        FreeKeiElement(vec![(g, 1)])
    }

    pub fn letters(&self) -> &[(PsiElement, i8)] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        FreeKeiElement(self.0.iter().rev().map(|(g, e)| (g.clone(), -e)).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.0.clone();
        w.extend(other.0.iter().cloned());
        Self::reduce(w)
    }
}

/// The free kei F on Ψ for a fixed-point-free involution and a choice of α₊
/// (taken from the setting's orbit table).
pub struct FreeKei<'s> {
    setting: &'s Setting,
}

impl<'s> FreeKei<'s> {
    pub fn new(setting: &'s Setting) -> Result<Self> {
        setting.require_fixed_point_free("the free kei")?;
        Ok(Self { setting })
    }

    /// Relabel every generator `ψ` as `g ψ`.
    pub fn left(&self, g: &PsiElement, x: &FreeKeiElement) -> FreeKeiElement {
        FreeKeiElement::reduce(x.0.iter().map(|(h, e)| (self.setting.psi.mul(g, h), *e)).collect())
    }
}

impl Kei for FreeKei<'_> {
    type E = FreeKeiElement;

    fn tau(&self, a: usize) -> usize {
        self.setting.spec.tau(a)
    }

    fn act(&self, a: usize, x: &FreeKeiElement) -> FreeKeiElement {
        self.left(&self.setting.psi.plain(a), x)
    }

    fn star(&self, a: usize, x: &FreeKeiElement, y: &FreeKeiElement) -> FreeKeiElement {
        let psi = &self.setting.psi;
        let ad = psi.bullet(a);
        if self.setting.table.in_alpha_plus(a) {
            // y (a. x) (a. a y)^-1
            let ada = psi.mul(&ad, &psi.plain(a));
            y.concat(&self.left(&ad, x)).concat(&self.left(&ada, y).inverse())
        } else {
            // (τa.^-1 τa^-1 y)^-1 (a. x) y, the operation undoing *_τa as axiom (5) demands
            let t = self.tau(a);
            let g = psi.mul(&psi.inv(&psi.bullet(t)), &psi.inv(&psi.plain(t)));
            self.left(&g, y).inverse().concat(&self.left(&ad, x)).concat(y)
        }
    }
}

/// `X_0 = 1`, `X_i = a X_{i-1}` at first occurrences and
/// `X_j = X_{j-1} *_a X_{i-1}` at second ones; returns `X_n`.
pub fn kei_output(s: &Setting, n: &Nanoword) -> Result<FreeKeiElement> {
    s.require_diagonal("the kei output")?;
    let k = FreeKei::new(s)?;
    let occ = n.occurrences();
    let mut xs = vec![FreeKeiElement::underline(s.psi.identity())];
    for (p, &l) in n.word().iter().enumerate() {
        let a = n.letters()[l].proj;
        let next = if occ[l].0 == p { k.act(a, &xs[p]) } else { k.star(a, &xs[p], &xs[occ[l].0]) };
        xs.push(next);
    }
    Ok(xs.pop().unwrap())
}

/// Signed Ψ-elements with no adjacent cancelling pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacteristicSequence(pub Vec<(i8, PsiElement)>);

impl CharacteristicSequence {
    /// `Σ ε_i ψ_i` in Λ; this is `ι(λ(w))`.
    pub fn sum(&self) -> Lambda {
        let mut out = Lambda::zero();
        for (e, g) in &self.0 {
            out.add_term(g.clone(), *e as i64);
        }
        out
    }

    pub fn render(&self, s: &Setting) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(e, g)| format!("{}{}", if *e < 0 { "-" } else { "" }, s.psi.render(g)))
            .collect();
        format!("({})", parts.join(", "))
    }

    pub fn is_unit(&self) -> bool {
        self.0.len() == 1 && self.0[0].0 == 1 && self.0[0].1.syllables().is_empty()
    }
}

pub fn characteristic_sequence(s: &Setting, n: &Nanoword) -> Result<CharacteristicSequence> {
    let x = kei_output(s, n)?;
    Ok(CharacteristicSequence(x.0.into_iter().map(|(g, e)| (e, g)).collect()))
}

/// Generators `X0..Xn` and the relations of `K_β(w)` as text.
pub fn emit_kei_presentation(s: &Setting, n: &Nanoword, beta: &BetaSet) -> String {
    let occ = n.occurrences();
    let gens: Vec<String> = (0..=n.len()).map(|i| format!("X{i}")).collect();
    let mut out = format!("generators: {}\n", gens.join(" "));
    for l in n.first_occurrence_order() {
        let a = n.letters()[l].proj;
        let name = s.spec.name(a);
        let (i, j) = (occ[l].0 + 1, occ[l].1 + 1);
        if beta.contains(a) {
            out.push_str(&format!("X{i} = {name} X{}\n", i - 1));
            out.push_str(&format!("X{j} = X{} *{name} X{}\n", j - 1, i - 1));
        } else {
            out.push_str(&format!("X{i} = X{} *{name} X{}\n", i - 1, j - 1));
            out.push_str(&format!("X{j} = {name} X{}\n", j - 1));
        }
    }
    out
}

/// Parses a printed sequence such as `(a, b., -b. a. a)`.
pub fn parse_sequence(s: &Setting, text: &str) -> Result<CharacteristicSequence> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse { line: 1, col: 1, msg: "expected `( … )`".into() })?;
    let mut out = Vec::new();
    for part in inner.split(',') {
        let p = part.trim();
        let (e, body) = match p.strip_prefix('-').or_else(|| p.strip_prefix('−')) {
            Some(b) => (-1, b),
            None => (1, p.strip_prefix('+').unwrap_or(p)),
        };
        out.push((e, crate::algebra::parse_element(&s.psi, body)?));
    }
    Ok(CharacteristicSequence(out))
}
