use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Group;

/// Coefficients of a group ring.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self> {
    fn is_negative(&self) -> bool;
    fn from_i64(n: i64) -> Self;
}

impl Coeff for i64 {
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn from_i64(n: i64) -> Self {
        n
    }
}

impl Coeff for i128 {
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn from_i64(n: i64) -> Self {
        n as i128
    }
}

impl Coeff for BigInt {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

/// The field with two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mod2(pub bool);

impl Add for Mod2 {
    type Output = Mod2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, o: Mod2) -> Mod2 {
        Mod2(self.0 ^ o.0)
    }
}

impl Sub for Mod2 {
    type Output = Mod2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, o: Mod2) -> Mod2 {
        Mod2(self.0 ^ o.0)
    }
}

impl Mul for Mod2 {
    type Output = Mod2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: Mod2) -> Mod2 {
        Mod2(self.0 & o.0)
    }
}

impl Neg for Mod2 {
    type Output = Mod2;
    fn neg(self) -> Mod2 {
        self
    }
}

impl Zero for Mod2 {
    fn zero() -> Self {
        Mod2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Mod2 {
    fn one() -> Self {
        Mod2(true)
    }
}

impl fmt::Display for Mod2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

impl Coeff for Mod2 {
    fn is_negative(&self) -> bool {
        false
    }
    fn from_i64(n: i64) -> Self {
        Mod2(n.rem_euclid(2) == 1)
    }
}

/// Finite formal sums `Σ c_g g` with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRing<G: Ord, C> {
    terms: BTreeMap<G, C>,
}

impl<G: Ord + Clone, C: Coeff> Default for GroupRing<G, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<G: Ord + Clone, C: Coeff> GroupRing<G, C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn monomial(g: G, c: C) -> Self {
        let mut r = Self::zero();
        r.add_term(g, c);
        r
    }

    /// The embedding `g ↦ 1·g`.
    pub fn embed(g: G) -> Self {
        Self::monomial(g, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> C {
        self.terms.get(g).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, g: G, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(x) => {
                let s = x.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&g);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (g, x) in &self.terms {
            out.add_term(g.clone(), x.clone() * c.clone());
        }
        out
    }

    /// Product in the group ring of `grp`.
    pub fn mul<Gr: Group<Elem = G>>(&self, other: &Self, grp: &Gr) -> Self {
        let mut out = Self::zero();
        for (g, x) in &self.terms {
            for (h, y) in &other.terms {
                out.add_term(grp.mul(g, h), x.clone() * y.clone());
            }
        }
        out
    }

    /// Apply `f` to every group element (summing collisions).
    pub fn map_elems(&self, mut f: impl FnMut(&G) -> G) -> Self {
        let mut out = Self::zero();
        for (g, x) in &self.terms {
            out.add_term(f(g), x.clone());
        }
        out
    }

    /// Change coefficients, e.g. reduce integers mod 2.
    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> GroupRing<G, D> {
        let mut out = GroupRing::zero();
        for (g, x) in &self.terms {
            out.add_term(g.clone(), f(x));
        }
        out
    }

    /// Keep only the terms whose element satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&G) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(g, _)| keep(g)).map(|(g, c)| (g.clone(), c.clone())).collect() }
    }

    pub fn render<Gr: Group<Elem = G>>(&self, grp: &Gr) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let id = grp.identity();
        let mut s = String::new();
        for (k, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if *g == id {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&grp.render(g));
            } else {
                s.push_str(&format!("{mag} {}", grp.render(g)));
            }
        }
        s
    }
}

impl<G: Ord + Clone, C: Coeff> Add for GroupRing<G, C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (g, c) in o.terms {
            self.add_term(g, c);
        }
        self
    }
}

impl<G: Ord + Clone, C: Coeff> Add for &GroupRing<G, C> {
    type Output = GroupRing<G, C>;
    fn add(self, o: Self) -> GroupRing<G, C> {
        self.clone() + o.clone()
    }
}

impl<G: Ord + Clone, C: Coeff> Neg for GroupRing<G, C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(g, c)| (g, -c)).collect() }
    }
}

impl<G: Ord + Clone, C: Coeff> Sub for GroupRing<G, C> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<G: Ord + Clone, C: Coeff> Sub for &GroupRing<G, C> {
    type Output = GroupRing<G, C>;
    fn sub(self, o: Self) -> GroupRing<G, C> {
        self.clone() - o.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrbitTable, PiAb, PsiGroup};
    use crate::alphabet::AlphabetSpec;

    #[test]
    fn zpi_sums() {
        let spec = AlphabetSpec::new(&["a", "b", "c"], &[("a", "b")], &["c"], None).unwrap();
        let g = PiAb::new(OrbitTable::new(&spec));
        let a = g.generator(0, false).unwrap();
        let s: GroupRing<_, i64> = GroupRing::embed(a.clone()) + GroupRing::embed(g.inv(&a));
        assert_eq!(s.len(), 2);
        assert_eq!(s.render(&g), "a + a^-1");
        let z = GroupRing::<_, i64>::embed(a.clone()) - GroupRing::embed(a.clone());
        assert!(z.is_zero());
        let c = g.generator(2, false).unwrap();
        let two = GroupRing::<_, i64>::embed(c.clone()) + GroupRing::embed(c.clone());
        assert_eq!(two.coeff(&c), 2);
        assert!(two.map_coeffs(|&x| Mod2::from_i64(x)).is_zero());
    }

    #[test]
    fn lambda_distributes() {
        let spec = AlphabetSpec::new(&["a", "A", "b", "B"], &[("a", "A"), ("b", "B")], &[], None).unwrap();
        let g = PsiGroup::new(OrbitTable::new(&spec));
        let one = GroupRing::<_, i64>::embed(g.identity());
        let aad = GroupRing::embed(g.mul(&g.plain(0), &g.bullet(0)));
        let b = GroupRing::embed(g.plain(2));
        let x = (one - aad).mul(&b, &g);
        assert_eq!(x.render(&g), "-a a. b + b");
    }
}
