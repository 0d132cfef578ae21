use std::cmp::Ordering;
use std::sync::Arc;

use super::pi::power;
use super::{Group, OrbitTable};
use crate::error::{Error, Result};

/// Element of π as an exponent vector over orbits (ℤ on free orbits, ℤ/2 on
/// fixed ones). An empty vector is the identity of any table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianPi(Vec<i64>);

impl AbelianPi {
    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn exponent(&self, orbit: usize) -> i64 {
        self.0.get(orbit).copied().unwrap_or(0)
    }

    fn key(e: i64) -> (bool, u64, bool) {
        (e == 0, e.unsigned_abs(), e < 0)
    }
}

// Lower total degree first; then orbit by orbit, with used orbits before
// unused ones and positive powers before negative ones.
impl Ord for AbelianPi {
    fn cmp(&self, other: &Self) -> Ordering {
        let deg = |x: &Self| x.0.iter().map(|e| e.unsigned_abs()).sum::<u64>();
        deg(self).cmp(&deg(other)).then_with(|| {
            let n = self.0.len().max(other.0.len());
            (0..n)
                .map(|o| Self::key(self.exponent(o)).cmp(&Self::key(other.exponent(o))))
                .find(|c| c.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for AbelianPi {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// π, the abelianization of Π.
#[derive(Clone, Debug)]
pub struct PiAb {
    table: Arc<OrbitTable>,
}

impl PiAb {
    pub fn new(table: Arc<OrbitTable>) -> Self {
        Self { table }
    }

    fn norm(&self, mut v: Vec<i64>) -> AbelianPi {
        for (o, e) in v.iter_mut().enumerate() {
            *e = self.table.reduce(o, *e);
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        AbelianPi(v)
    }

    pub fn from_exponents(&self, v: Vec<i64>) -> AbelianPi {
        self.norm(v)
    }
}

impl Group for PiAb {
    type Elem = AbelianPi;

    fn table(&self) -> &Arc<OrbitTable> {
        &self.table
    }

    fn identity(&self) -> AbelianPi {
        AbelianPi::default()
    }

    fn mul(&self, x: &AbelianPi, y: &AbelianPi) -> AbelianPi {
        let n = x.0.len().max(y.0.len());
        self.norm((0..n).map(|o| x.exponent(o) + y.exponent(o)).collect())
    }

    fn inv(&self, x: &AbelianPi) -> AbelianPi {
        self.norm(x.0.iter().map(|e| -e).collect())
    }

    fn generator(&self, letter: usize, bullet: bool) -> Option<AbelianPi> {
        if bullet {
            return None;
        }
        let (o, s) = self.table.of_letter(letter);
        let mut v = vec![0; o + 1];
        v[o] = s;
        Some(self.norm(v))
    }

    fn render(&self, x: &AbelianPi) -> String {
        let parts: Vec<String> = x
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(o, &e)| power(self.table.orbit_name(o), e))
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    fn check(&self, x: &AbelianPi) -> Result<()> {
        if x.0.len() <= self.table.orbit_count() && self.norm(x.0.clone()) == *x {
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
    fn laws_and_torsion() {
        let spec = AlphabetSpec::new(&["a", "b", "c"], &[("a", "b")], &["c"], None).unwrap();
        let g = PiAb::new(OrbitTable::new(&spec));
        let a = g.generator(0, false).unwrap();
        let b = g.generator(1, false).unwrap();
        let c = g.generator(2, false).unwrap();
        assert!(g.is_identity(&g.mul(&a, &b)));
        assert!(g.is_identity(&g.mul(&c, &c)));
        assert_eq!(g.mul(&a, &c), g.mul(&c, &a));
        assert_eq!(g.render(&g.product([&b, &b, &c])), "a^-2 c");
        assert!(g.check(&g.pow(&a, 3)).is_ok());
        assert!(g.check(&AbelianPi(vec![0, 2])).is_err());
    }

    #[test]
    fn order_puts_positive_first() {
        let spec = AlphabetSpec::new(&["a", "b"], &[("a", "b")], &[], None).unwrap();
        let g = PiAb::new(OrbitTable::new(&spec));
        let a = g.generator(0, false).unwrap();
        assert!(g.identity() < a);
        assert!(a < g.inv(&a));
    }
}
