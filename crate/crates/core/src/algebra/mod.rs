//! The groups Π, π, Ψ and their integral group rings.

mod abelian;
mod orbits;
mod parse;
mod pi;
mod psi;
mod ring;

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

pub use abelian::{AbelianPi, PiAb};
pub use orbits::{Orbit, OrbitKind, OrbitTable};
pub use parse::{parse_element, parse_ring};
pub use pi::{PiElement, PiGroup};
pub use psi::{PsiElement, PsiGroup};
pub use ring::{Coeff, GroupRing, Mod2};

use crate::error::Result;

/// A group presented over the orbit table of an alphabet. Elements are plain
/// normal-form values; the group object does the arithmetic.
pub trait Group {
    type Elem: Clone + Ord + Hash + Debug;

    fn table(&self) -> &Arc<OrbitTable>;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    /// Generator attached to an alphabet letter; `bullet` selects the
    /// bulleted twin where the group has one.
    fn generator(&self, letter: usize, bullet: bool) -> Option<Self::Elem>;
    fn render(&self, x: &Self::Elem) -> String;
    /// Whether `x` is a normal form over this table.
    fn check(&self, x: &Self::Elem) -> Result<()>;

    fn is_identity(&self, x: &Self::Elem) -> bool {
        *x == self.identity()
    }

    fn pow(&self, x: &Self::Elem, n: i64) -> Self::Elem {
        let base = if n < 0 { self.inv(x) } else { x.clone() };
        let mut out = self.identity();
        for _ in 0..n.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }

    fn product<'a, I: IntoIterator<Item = &'a Self::Elem>>(&self, xs: I) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        xs.into_iter().fold(self.identity(), |acc, x| self.mul(&acc, x))
    }
}
