//! γ, interlacement, letter classes and self-linking.

use crate::algebra::{AbelianPi, Group, Mod2, PiElement};
use crate::error::{Error, Result};
use crate::setting::Setting;
use crate::word::{EtaleWord, Letter, Nanoword};
use crate::{ZPi, ZPiMod2};

/// γ(w): `z_|A|` at each first occurrence, its inverse at each second one.
pub fn gamma(s: &Setting, n: &Nanoword) -> Result<PiElement> {
    s.require_diagonal("gamma")?;
    let mut seen = vec![false; n.rank()];
    let mut g = s.pi.identity();
    for &l in n.word() {
        let z = s.pi.generator(n.letters()[l].proj, false).expect("generator");
        let z = if seen[l] { s.pi.inv(&z) } else { z };
        seen[l] = true;
        g = s.pi.mul(&g, &z);
    }
    Ok(g)
}

/// `n(A,B) = 1` for `…A…B…A…B…`, `-1` for `…B…A…B…A…`, else 0.
pub fn interlacement(n: &Nanoword) -> Vec<Vec<i8>> {
    let occ = n.occurrences();
    let r = n.rank();
    let mut m = vec![vec![0i8; r]; r];
    for a in 0..r {
        for b in 0..r {
            let ((ia, ja), (ib, jb)) = (occ[a], occ[b]);
            if ia < ib && ib < ja && ja < jb {
                m[a][b] = 1;
            } else if ib < ia && ia < jb && jb < ja {
                m[a][b] = -1;
            }
        }
    }
    m
}

fn classes_from(s: &Setting, n: &Nanoword, nw: &[Vec<i8>]) -> Vec<AbelianPi> {
    let gens: Vec<AbelianPi> =
        n.letters().iter().map(|l| s.ab.generator(l.proj, false).expect("generator")).collect();
    nw.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(s.ab.identity(), |acc, (b, &e)| s.ab.mul(&acc, &s.ab.pow(&gens[b], e as i64)))
        })
        .collect()
}

/// `[A]_w = Π_B |B|^{n(A,B)}`.
pub fn letter_class(s: &Setting, n: &Nanoword, letter: usize) -> Result<AbelianPi> {
    if letter >= n.rank() {
        return Err(Error::UndeclaredLetter(format!("#{letter}")));
    }
    Ok(classes_from(s, n, &interlacement(n)).swap_remove(letter))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfLinking {
    /// `[A]_w` per letter of the nanoword.
    pub classes: Vec<AbelianPi>,
    /// `[a]_w` per letter of α.
    pub per_letter: Vec<ZPi>,
    /// `(orbit, [a]_w - [τa]_w)` for each free orbit, `a` its α₊ letter.
    pub free_diff: Vec<(usize, ZPi)>,
    /// `(letter, [a]_w mod 2)` for each fixed letter.
    pub fixed_mod2: Vec<(usize, ZPiMod2)>,
}

impl SelfLinking {
    /// The homotopy-invariant part.
    pub fn protected(&self) -> (Vec<&ZPi>, Vec<&ZPiMod2>) {
        (self.free_diff.iter().map(|x| &x.1).collect(), self.fixed_mod2.iter().map(|x| &x.1).collect())
    }

    pub fn protected_vanishes(&self) -> bool {
        self.free_diff.iter().all(|x| x.1.is_zero()) && self.fixed_mod2.iter().all(|x| x.1.is_zero())
    }
}

pub fn self_linking(s: &Setting, n: &Nanoword) -> Result<SelfLinking> {
    s.require_diagonal("self-linking")?;
    let classes = classes_from(s, n, &interlacement(n));
    let mut per_letter = vec![ZPi::zero(); s.spec.len()];
    for (l, c) in n.letters().iter().zip(&classes) {
        if !s.ab.is_identity(c) {
            per_letter[l.proj].add_term(c.clone(), 1);
        }
    }
    let mut free_diff = Vec::new();
    let mut fixed_mod2 = Vec::new();
    for (o, orb) in s.table.orbits().iter().enumerate() {
        if s.table.is_fixed(o) {
            fixed_mod2.push((orb.rep, per_letter[orb.rep].map_coeffs(|&c| Mod2(c.rem_euclid(2) == 1))));
        } else {
            free_diff.push((o, &per_letter[orb.rep] - &per_letter[orb.partner]));
        }
    }
    Ok(SelfLinking { classes, per_letter, free_diff, fixed_mod2 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoliteralVerdict {
    NotHomotopic,
    Inconclusive,
}

/// The nanoword obtained by desingularizing `a^m`.
pub fn monoliteral(a: usize, m: usize) -> Nanoword {
    let w = EtaleWord::new(vec![Letter { name: "A".into(), proj: a }], vec![0; m]).expect("one letter");
    w.desingularize()
}

/// Compares the self-linking of `a^m` and `b^n`. Never claims homotopy.
pub fn monoliteral_distinguish(s: &Setting, a: usize, m: usize, b: usize, n: usize) -> Result<MonoliteralVerdict> {
    if s.spec.is_fixed(a) || s.spec.is_fixed(b) {
        return Err(Error::Precondition("monoliteral words need letters moved by the involution".into()));
    }
    if m < 3 || n < 3 {
        return Err(Error::Precondition("monoliteral words need at least three repetitions".into()));
    }
    let x = self_linking(s, &monoliteral(a, m))?;
    let y = self_linking(s, &monoliteral(b, n))?;
    Ok(if x.protected() != y.protected() { MonoliteralVerdict::NotHomotopic } else { MonoliteralVerdict::Inconclusive })
}
