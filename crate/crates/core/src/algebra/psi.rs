use std::sync::Arc;

use super::pi::power;
use super::{Group, OrbitTable};
use crate::error::{Error, Result};

/// Element of Ψ: syllables `(orbit, p, q)` standing for `a^p a.^q` with `a`
/// the orbit's α₊ letter. Adjacent orbits differ and `(p, q) ≠ (0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PsiElement(Vec<(usize, i64, i64)>);

impl PsiElement {
    pub fn syllables(&self) -> &[(usize, i64, i64)] {
        &self.0
    }

    /// The same syllables in reverse order (the image under ι).
    pub fn reversed(&self) -> Self {
        PsiElement(self.0.iter().rev().copied().collect())
    }

    /// Parities of the total plain and bullet exponents.
    pub fn grade(&self) -> (u8, u8) {
        let p: i64 = self.0.iter().map(|s| s.1).sum();
        let q: i64 = self.0.iter().map(|s| s.2).sum();
        (p.rem_euclid(2) as u8, q.rem_euclid(2) as u8)
    }
}

/// Ψ: free product over orbits of ⟨a, a.⟩ ≅ ℤ² (free) or (ℤ/2)² (fixed).
#[derive(Clone, Debug)]
pub struct PsiGroup {
    table: Arc<OrbitTable>,
}

impl PsiGroup {
    pub fn new(table: Arc<OrbitTable>) -> Self {
        Self { table }
    }

    fn push(&self, out: &mut Vec<(usize, i64, i64)>, (o, p, q): (usize, i64, i64)) {
        let t = &self.table;
        match out.last_mut() {
            Some(last) if last.0 == o => {
                let (np, nq) = (t.reduce(o, last.1 + p), t.reduce(o, last.2 + q));
                if np == 0 && nq == 0 {
                    out.pop();
                } else {
                    last.1 = np;
                    last.2 = nq;
                }
            }
            _ => {
                let (p, q) = (t.reduce(o, p), t.reduce(o, q));
                if p != 0 || q != 0 {
                    out.push((o, p, q));
                }
            }
        }
    }

    /// `a` and `a.` for the letter `a`.
    pub fn plain(&self, letter: usize) -> PsiElement {
        self.generator(letter, false).expect("plain generator")
    }

    pub fn bullet(&self, letter: usize) -> PsiElement {
        self.generator(letter, true).expect("bullet generator")
    }

    /// Build from raw syllables, normalizing.
    pub fn from_syllables(&self, s: &[(usize, i64, i64)]) -> PsiElement {
        let mut out = Vec::new();
        for &x in s {
            self.push(&mut out, x);
        }
        PsiElement(out)
    }
}

impl Group for PsiGroup {
    type Elem = PsiElement;

    fn table(&self) -> &Arc<OrbitTable> {
        &self.table
    }

    fn identity(&self) -> PsiElement {
        PsiElement::default()
    }

    fn mul(&self, x: &PsiElement, y: &PsiElement) -> PsiElement {
        let mut out = x.0.clone();
        for &s in &y.0 {
            self.push(&mut out, s);
        }
        PsiElement(out)
    }

    fn inv(&self, x: &PsiElement) -> PsiElement {
        let t = &self.table;
        PsiElement(x.0.iter().rev().map(|&(o, p, q)| (o, t.reduce(o, -p), t.reduce(o, -q))).collect())
    }

    fn generator(&self, letter: usize, bullet: bool) -> Option<PsiElement> {
        let (o, s) = self.table.of_letter(letter);
        let s = self.table.reduce(o, s);
        Some(PsiElement(if bullet { vec![(o, 0, s)] } else { vec![(o, s, 0)] }))
    }

    fn render(&self, x: &PsiElement) -> String {
        if x.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for &(o, p, q) in &x.0 {
            let n = self.table.orbit_name(o);
            if p != 0 {
                parts.push(power(n, p));
            }
            if q != 0 {
                parts.push(power(&format!("{n}."), q));
            }
        }
        parts.join(" ")
    }

    fn check(&self, x: &PsiElement) -> Result<()> {
        let t = &self.table;
        let ok = x.0.iter().all(|&(o, p, q)| {
            o < t.orbit_count() && (p, q) != (0, 0) && t.reduce(o, p) == p && t.reduce(o, q) == q
        }) && x.0.windows(2).all(|w| w[0].0 != w[1].0);
        if ok {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::AlphabetSpec;

    #[test]
    fn bullet_commutes_within_orbit() {
        let spec = AlphabetSpec::new(&["a", "b"], &[("a", "b")], &[], None).unwrap();
        let g = PsiGroup::new(OrbitTable::new(&spec));
        let (a, ad, b) = (g.plain(0), g.bullet(0), g.plain(1));
        assert_eq!(g.mul(&a, &ad), g.mul(&ad, &a));
        assert_eq!(g.mul(&a, &ad).syllables(), &[(0, 1, 1)]);
        assert!(g.is_identity(&g.mul(&a, &b)));
        assert!(g.is_identity(&g.mul(&g.bullet(1), &ad)));
        assert_eq!(g.render(&g.mul(&ad, &a)), "a a.");
    }

    #[test]
    fn fixed_orbits_are_two_torsion() {
        let spec = AlphabetSpec::new(&["a", "b"], &[], &["a", "b"], None).unwrap();
        let g = PsiGroup::new(OrbitTable::new(&spec));
        let (a, ad, b) = (g.plain(0), g.bullet(0), g.plain(1));
        assert!(g.is_identity(&g.mul(&a, &a)));
        assert!(g.is_identity(&g.mul(&ad, &ad)));
        assert_eq!(g.render(&g.product([&b, &a, &ad, &b])), "b a a. b");
        assert_eq!(g.inv(&a), a);
    }
}
