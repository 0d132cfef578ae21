//! α-pairings of nanowords, their reduction to primitive form, and the norm
//! and genus bounds they give.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{AbelianPi, Group, PiAb};
use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};
use crate::invariants::{interlacement, letter_class};
use crate::rank::integer_rank;
use crate::setting::Setting;
use crate::word::Nanoword;

/// A based set `S = {s} ∪ S₋` with projections `S₋ → α` and a skew pairing
/// into π. Index 0 is the basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaPairing {
    names: Vec<String>,
    proj: Vec<usize>,
    b: Vec<Vec<AbelianPi>>,
}

impl AlphaPairing {
    /// `names`/`proj` list the non-basepoint elements; `b` is indexed with
    /// the basepoint first.
    pub fn new(names: Vec<String>, proj: Vec<usize>, b: Vec<Vec<AbelianPi>>) -> Result<Self> {
        let n = names.len() + 1;
        if proj.len() + 1 != n || b.len() != n || b.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("pairing matrix has the wrong shape".into()));
        }
        let mut all = vec!["s".to_string()];
        all.extend(names);
        let mut p = vec![usize::MAX];
        p.extend(proj);
        Ok(Self { names: all, proj: p, b })
    }

    pub fn trivial() -> Self {
        Self { names: vec!["s".into()], proj: vec![usize::MAX], b: vec![vec![AbelianPi::default()]] }
    }

    /// Number of elements including the basepoint.
    pub fn card(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn proj(&self, i: usize) -> usize {
        self.proj[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &AbelianPi {
        &self.b[i][j]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `b(X,Y) = b(Y,X)^{-1}` and `b(X,X) = 1`.
    pub fn is_skew(&self, ab: &PiAb) -> bool {
        (0..self.card()).all(|i| {
            ab.is_identity(&self.b[i][i]) && (0..self.card()).all(|j| self.b[i][j] == ab.inv(&self.b[j][i]))
        })
    }

    pub fn without(&self, drop: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.card()).filter(|i| !drop.contains(i)).collect();
        Self {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            proj: keep.iter().map(|&i| self.proj[i]).collect(),
            b: keep.iter().map(|&i| keep.iter().map(|&j| self.b[i][j].clone()).collect()).collect(),
        }
    }

    /// Reorder the non-basepoint elements by `perm` (a permutation of `1..card`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut order = vec![0];
        order.extend_from_slice(perm);
        Self {
            names: order.iter().map(|&i| self.names[i].clone()).collect(),
            proj: order.iter().map(|&i| self.proj[i]).collect(),
            b: order.iter().map(|&i| order.iter().map(|&j| self.b[i][j].clone()).collect()).collect(),
        }
    }

    pub fn display<'a>(&'a self, s: &'a Setting) -> PairingDisplay<'a> {
        PairingDisplay { p: self, s }
    }
}

pub struct PairingDisplay<'a> {
    p: &'a AlphaPairing,
    s: &'a Setting,
}

impl fmt::Display for PairingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "S: {}", self.p.names.join(" "))?;
        for i in 1..self.p.card() {
            writeln!(f, "|{}| = {}", self.p.names[i], self.s.spec.name(self.p.proj[i]))?;
        }
        let cells: Vec<Vec<String>> =
            self.p.b.iter().map(|r| r.iter().map(|x| self.s.ab.render(x)).collect()).collect();
        let w = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:<w$}")).collect();
            writeln!(f, "{}", padded.join("  ").trim_end())?;
        }
        Ok(())
    }
}

/// `D∘E = Π |F|` over letters `F` with `i_D < i_F < j_D` and `i_E < j_F < j_E`.
pub fn circ(s: &Setting, n: &Nanoword, d: usize, e: usize) -> Result<AbelianPi> {
    if d >= n.rank() || e >= n.rank() {
        return Err(Error::UndeclaredLetter(format!("#{}", d.max(e))));
    }
    let occ = n.occurrences();
    let (id, jd) = occ[d];
    let (ie, je) = occ[e];
    let mut g = s.ab.identity();
    for (f, &(i_f, j_f)) in occ.iter().enumerate() {
        if id < i_f && i_f < jd && ie < j_f && j_f < je {
            g = s.ab.mul(&g, &s.ab.generator(n.letters()[f].proj, false).expect("generator"));
        }
    }
    Ok(g)
}

/// `lk(D,E) = (D∘E)(E∘D)^{-1}`.
pub fn linking(s: &Setting, n: &Nanoword, d: usize, e: usize) -> Result<AbelianPi> {
    Ok(s.ab.mul(&circ(s, n, d, e)?, &s.ab.inv(&circ(s, n, e, d)?)))
}

/// The α-pairing `b_w`, rows in letter-declaration order after `s`.
pub fn build_pairing(s: &Setting, n: &Nanoword) -> Result<AlphaPairing> {
    s.require_diagonal("the α-pairing")?;
    let r = n.rank();
    let nw = interlacement(n);
    let ab = &s.ab;
    let gen = |l: usize| ab.generator(n.letters()[l].proj, false).expect("generator");
    let mut b = vec![vec![ab.identity(); r + 1]; r + 1];
    for a in 0..r {
        let cls = letter_class(s, n, a)?;
        b[0][a + 1] = ab.inv(&cls);
        b[a + 1][0] = cls;
        for c in 0..r {
            if a == c {
                continue;
            }
            let lk = linking(s, n, a, c)?;
            let e = nw[a][c] as i64;
            b[a + 1][c + 1] = ab.product([&ab.pow(&lk, 2), &ab.pow(&gen(a), e), &ab.pow(&gen(c), e)]);
        }
    }
    AlphaPairing::new(
        n.letters().iter().map(|l| l.name.clone()).collect(),
        n.letters().iter().map(|l| l.proj).collect(),
        b,
    )
}

/// Non-basepoint elements whose row is identically 1.
pub fn find_annihilating(p: &AlphaPairing) -> Vec<usize> {
    (1..p.card()).filter(|&i| p.b[i].iter().all(|x| x.exponents().is_empty())).collect()
}

/// Pairs with equal rows and projections swapped by τ.
pub fn find_twins(p: &AlphaPairing, spec: &AlphabetSpec) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..p.card() {
        for j in i + 1..p.card() {
            if p.proj[i] == spec.tau(p.proj[j]) && p.b[i] == p.b[j] {
                out.push((i, j));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Deletion {
    Annihilating(usize),
    Twins(usize, usize),
}

/// One reduction step, recorded by element names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    Annihilating(String),
    Twins(String, String),
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::Annihilating(a) => write!(f, "delete annihilating {a}"),
            ReductionStep::Twins(a, b) => write!(f, "delete twins {a}, {b}"),
        }
    }
}

/// All deletions available in `p`: annihilating elements first, then twins.
pub fn available_deletions(p: &AlphaPairing, spec: &AlphabetSpec) -> Vec<Deletion> {
    let mut d: Vec<Deletion> = find_annihilating(p).into_iter().map(Deletion::Annihilating).collect();
    d.extend(find_twins(p, spec).into_iter().map(|(a, b)| Deletion::Twins(a, b)));
    d
}

/// Delete until nothing applies; `choose` picks among the available deletions.
pub fn reduce_with(
    p: &AlphaPairing,
    spec: &AlphabetSpec,
    mut choose: impl FnMut(&[Deletion]) -> usize,
) -> (AlphaPairing, Vec<ReductionStep>) {
    let mut cur = p.clone();
    let mut steps = Vec::new();
    loop {
        let avail = available_deletions(&cur, spec);
        if avail.is_empty() {
            return (cur, steps);
        }
        match &avail[choose(&avail).min(avail.len() - 1)] {
            Deletion::Annihilating(a) => {
                steps.push(ReductionStep::Annihilating(cur.names[*a].clone()));
                cur = cur.without(&[*a]);
            }
            Deletion::Twins(a, b) => {
                steps.push(ReductionStep::Twins(cur.names[*a].clone(), cur.names[*b].clone()));
                cur = cur.without(&[*a, *b]);
            }
        }
    }
}

/// Leftmost annihilating element first, then leftmost twins.
pub fn reduce_primitive(p: &AlphaPairing, spec: &AlphabetSpec) -> (AlphaPairing, Vec<ReductionStep>) {
    reduce_with(p, spec, |_| 0)
}

pub fn is_primitive(p: &AlphaPairing, spec: &AlphabetSpec) -> bool {
    available_deletions(p, spec).is_empty()
}

fn signature(p: &AlphaPairing, i: usize) -> (usize, AbelianPi, Vec<AbelianPi>) {
    let mut row = p.b[i].clone();
    row.sort();
    (p.proj[i], p.b[i][0].clone(), row)
}

/// Whether a bijection fixing `s` preserves projections and the pairing.
pub fn pairing_isomorphic(p: &AlphaPairing, q: &AlphaPairing) -> bool {
    if p.card() != q.card() || p.b[0][0] != q.b[0][0] {
        return false;
    }
    let sp: Vec<_> = (0..p.card()).map(|i| signature(p, i)).collect();
    let sq: Vec<_> = (0..q.card()).map(|i| signature(q, i)).collect();
    let mut ms: BTreeMap<_, i64> = BTreeMap::new();
    for x in &sp[1..] {
        *ms.entry(x).or_default() += 1;
    }
    for x in &sq[1..] {
        *ms.entry(x).or_default() -= 1;
    }
    if ms.values().any(|&c| c != 0) {
        return false;
    }
    let mut map = vec![0usize; p.card()];
    let mut used = vec![false; q.card()];
    used[0] = true;
    fn go(
        k: usize,
        p: &AlphaPairing,
        q: &AlphaPairing,
        sp: &[(usize, AbelianPi, Vec<AbelianPi>)],
        sq: &[(usize, AbelianPi, Vec<AbelianPi>)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == p.card() {
            return true;
        }
        for j in 1..q.card() {
            if used[j] || sp[k] != sq[j] {
                continue;
            }
            let ok = (0..k).all(|i| p.b[k][i] == q.b[j][map[i]] && p.b[i][k] == q.b[map[i]][j]);
            if ok {
                map[k] = j;
                used[j] = true;
                if go(k + 1, p, q, sp, sq, map, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(1, p, q, &sp, &sq, &mut map, &mut used)
}

/// `‖w‖ ≥ card(S₊) - 1` with `S₊` the primitive form of `b_w`.
pub fn norm_lower_bound(s: &Setting, n: &Nanoword) -> Result<usize> {
    let p = build_pairing(s, n)?;
    Ok(reduce_primitive(&p, &s.spec).0.card() - 1)
}

/// Genus bound `rank(M)/2` for an equivariant `f: α → α₀`; `f[x]` is 0 for
/// `a` and 1 for `b`, and `M` is `b_w` pushed to ℤ by `x ↦ ±1`.
pub fn genus_lower_bound(s: &Setting, n: &Nanoword, f: &[usize]) -> Result<usize> {
    check_equivariant(&s.spec, f)?;
    let p = build_pairing(s, n)?;
    let weight: Vec<i64> =
        s.table.orbits().iter().map(|o| if f[o.rep] == 0 { 1 } else { -1 }).collect();
    let h = |x: &AbelianPi| -> BigInt {
        BigInt::from(x.exponents().iter().zip(&weight).map(|(e, w)| e * w).sum::<i64>())
    };
    let m: Vec<Vec<BigInt>> = p.b.iter().map(|r| r.iter().map(h).collect()).collect();
    Ok(integer_rank(&m) / 2)
}

pub fn check_equivariant(spec: &AlphabetSpec, f: &[usize]) -> Result<()> {
    if f.len() != spec.len() {
        return Err(Error::Precondition("map must be defined on every letter".into()));
    }
    for x in 0..spec.len() {
        if f[x] > 1 || f[spec.tau(x)] != 1 - f[x] {
            return Err(Error::NotEquivariant(spec.name(x).into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use crate::word::EtaleWord;

    fn primed() -> Setting {
        Setting::new(AlphabetSpec::new(&["a", "a'", "b", "b'"], &[("a", "a'"), ("b", "b'")], &[], None).unwrap())
    }

    fn matrix(s: &Setting, rows: &[&[&str]]) -> Vec<Vec<AbelianPi>> {
        rows.iter().map(|r| r.iter().map(|x| parse_element(&s.ab, x).unwrap()).collect()).collect()
    }

    #[test]
    fn abaab_linking_matrix() {
        let s = primed();
        let n = Nanoword::parse("A1:a A2:a A3:a B:b :: A3 A2 B A3 A1 A2 A1 B", &s.spec).unwrap();
        let lk: Vec<Vec<AbelianPi>> =
            (0..4).map(|i| (0..4).map(|j| linking(&s, &n, i, j).unwrap()).collect()).collect();
        let expect = matrix(
            &s,
            &[&["1", "1", "a^-1", "1"], &["1", "1", "1", "a"], &["a", "1", "1", "a"], &["1", "a^-1", "a^-1", "1"]],
        );
        assert_eq!(lk, expect);
    }

    #[test]
    fn empty_pairing_is_trivial() {
        let s = primed();
        let p = build_pairing(&s, &Nanoword::empty()).unwrap();
        assert_eq!(p, AlphaPairing::trivial());
        assert!(find_annihilating(&p).is_empty());
        assert_eq!(norm_lower_bound(&s, &Nanoword::empty()).unwrap(), 0);
    }

    #[test]
    fn isomorphism_respects_relabeling() {
        let s = primed();
        let n = EtaleWord::plain("abaab", &s.spec).unwrap().desingularize();
        let p = build_pairing(&s, &n).unwrap();
        assert!(p.is_skew(&s.ab));
        assert!(pairing_isomorphic(&p, &p));
        assert!(pairing_isomorphic(&p, &p.permuted(&[3, 1, 4, 2])));
        assert!(!pairing_isomorphic(&p, &AlphaPairing::trivial()));
    }

    #[test]
    fn genus_of_abab_over_curves() {
        let s = Setting::new(AlphabetSpec::curves());
        let n = Nanoword::from_pattern("ABAB", &[('A', 0), ('B', 1)]).unwrap();
        assert_eq!(genus_lower_bound(&s, &n, &[0, 1]).unwrap(), 1);
        assert_eq!(genus_lower_bound(&s, &Nanoword::empty(), &[0, 1]).unwrap(), 0);
        assert!(matches!(genus_lower_bound(&s, &n, &[0, 0]), Err(Error::NotEquivariant(_))));
    }
}
