use std::sync::Arc;

use super::{Group, OrbitTable};
use crate::error::{Error, Result};

/// Element of Π in syllable normal form: `(orbit, exponent)` pairs, adjacent
/// orbits distinct, exponents nonzero, exponent 1 on fixed orbits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PiElement(Vec<(usize, i64)>);

impl PiElement {
    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.0
    }
}

/// Π: free product of ℤ per free orbit and ℤ/2 per fixed orbit.
#[derive(Clone, Debug)]
pub struct PiGroup {
    table: Arc<OrbitTable>,
}

impl PiGroup {
    pub fn new(table: Arc<OrbitTable>) -> Self {
        Self { table }
    }

    fn push(&self, out: &mut Vec<(usize, i64)>, (o, e): (usize, i64)) {
        match out.last_mut() {
            Some(last) if last.0 == o => {
                let s = self.table.reduce(o, last.1 + e);
                if s == 0 {
                    out.pop();
                } else {
                    last.1 = s;
                }
            }
            _ => {
                let e = self.table.reduce(o, e);
                if e != 0 {
                    out.push((o, e));
                }
            }
        }
    }

    /// Exponent sum per orbit (mod 2 on fixed orbits) vanishes.
    pub fn is_in_commutator(&self, g: &PiElement) -> bool {
        let mut sums = vec![0i64; self.table.orbit_count()];
        for &(o, e) in &g.0 {
            sums[o] += e;
        }
        sums.iter().enumerate().all(|(o, &s)| self.table.reduce(o, s) == 0)
    }
}

impl Group for PiGroup {
    type Elem = PiElement;

    fn table(&self) -> &Arc<OrbitTable> {
        &self.table
    }

    fn identity(&self) -> PiElement {
        PiElement::default()
    }

    fn mul(&self, x: &PiElement, y: &PiElement) -> PiElement {
        let mut out = x.0.clone();
        for &s in &y.0 {
            self.push(&mut out, s);
        }
        PiElement(out)
    }

    fn inv(&self, x: &PiElement) -> PiElement {
        PiElement(x.0.iter().rev().map(|&(o, e)| (o, self.table.reduce(o, -e))).collect())
    }

    fn generator(&self, letter: usize, bullet: bool) -> Option<PiElement> {
        if bullet {
            return None;
        }
        let (o, s) = self.table.of_letter(letter);
        Some(PiElement(vec![(o, self.table.reduce(o, s))]))
    }

    fn render(&self, x: &PiElement) -> String {
        if x.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = x.0.iter().map(|&(o, e)| power(self.table.orbit_name(o), e)).collect();
        parts.join(" ")
    }

    fn check(&self, x: &PiElement) -> Result<()> {
        let ok = x.0.iter().all(|&(o, e)| o < self.table.orbit_count() && e != 0 && self.table.reduce(o, e) == e)
            && x.0.windows(2).all(|w| w[0].0 != w[1].0);
        if ok {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }
}

pub(crate) fn power(name: &str, e: i64) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}
