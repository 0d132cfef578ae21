//! Tricolorings, the Λ-presentation of `K_β(w)`, and the λ invariant.

use std::fmt;

use crate::algebra::{Group, PsiElement};
use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};
use crate::setting::Setting;
use crate::word::Nanoword;
use crate::Lambda;

/// A τ-stable subset of α.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaSet(Vec<bool>);

impl BetaSet {
    pub fn new(spec: &AlphabetSpec, members: &[usize]) -> Result<Self> {
        let mut v = vec![false; spec.len()];
        for &m in members {
            v[m] = true;
        }
        if !spec.is_tau_stable(&v) {
            let bad = (0..spec.len()).find(|&a| v[a] != v[spec.tau(a)]).unwrap();
            return Err(Error::BadBeta(spec.name(bad).into()));
        }
        Ok(Self(v))
    }

    pub fn all(spec: &AlphabetSpec) -> Self {
        Self(vec![true; spec.len()])
    }

    /// Letters named in `text`, separated by commas or spaces; single-character
    /// names may also be run together.
    pub fn parse(spec: &AlphabetSpec, text: &str) -> Result<Self> {
        let mut members = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            match spec.index(tok) {
                Some(a) => members.push(a),
                None => {
                    for ch in tok.chars() {
                        let a = spec.index(&ch.to_string()).ok_or_else(|| Error::UndeclaredLetter(tok.into()))?;
                        members.push(a);
                    }
                }
            }
        }
        Self::new(spec, &members)
    }

    /// Every τ-stable subset, smallest first.
    pub fn enumerate(spec: &AlphabetSpec) -> Vec<Self> {
        let orbits = spec.orbits();
        let mut out = Vec::new();
        for mask in 0..1usize << orbits.len() {
            let mut v = vec![false; spec.len()];
            for (k, &(a, t)) in orbits.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    v[a] = true;
                    v[t] = true;
                }
            }
            out.push(Self(v));
        }
        out.sort_by_key(|b| b.0.iter().filter(|&&x| x).count());
        out
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0[a]
    }

    pub fn render(&self, spec: &AlphabetSpec) -> String {
        let names: Vec<&str> = (0..spec.len()).filter(|&a| self.0[a]).map(|a| spec.name(a)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// `census[k][l]` = number of tricolorings with input `k` and output `l`.
pub type TricoloringCensus = [[u64; 3]; 3];

/// Second-occurrence partner of every position, and whether it is a first occurrence.
fn layout(n: &Nanoword) -> Vec<(bool, usize)> {
    let occ = n.occurrences();
    n.word()
        .iter()
        .enumerate()
        .map(|(p, &l)| if occ[l].0 == p { (true, occ[l].1) } else { (false, occ[l].0) })
        .collect()
}

/// Count colorings of the dashes `0..=n` by ℤ/3 subject to the per-letter rules.
pub fn tricolor_census(n: &Nanoword, beta: &BetaSet) -> TricoloringCensus {
    let lay = layout(n);
    let len = n.len();
    let mut census = [[0u64; 3]; 3];
    let mut f = vec![0u8; len + 1];
    fn go(t: usize, n: &Nanoword, beta: &BetaSet, lay: &[(bool, usize)], f: &mut Vec<u8>, census: &mut TricoloringCensus) {
        let len = lay.len();
        if t > len {
            census[f[0] as usize][f[len] as usize] += 1;
            return;
        }
        // position t-1 (0-based) is letter number t
        let (first, other) = lay[t - 1];
        let in_beta = beta.contains(n.proj_at(t - 1));
        let prev = f[t - 1];
        match (in_beta, first) {
            (true, true) => {
                f[t] = prev;
                go(t + 1, n, beta, lay, f, census);
            }
            (true, false) => {
                // f(j-1) + f(j) + f(i) = 0, i = other + 1 (1-based)
                f[t] = (6 - prev - f[other + 1]) % 3;
                go(t + 1, n, beta, lay, f, census);
            }
            (false, true) => {
                for c in 0..3 {
                    f[t] = c;
                    go(t + 1, n, beta, lay, f, census);
                }
            }
            (false, false) => {
                // f(j) = f(j-1) and f(i-1) + f(i) + f(j) = 0
                let i = other + 1;
                f[t] = prev;
                if (f[i - 1] + f[i] + f[t]).is_multiple_of(3) {
                    go(t + 1, n, beta, lay, f, census);
                }
            }
        }
    }
    for k in 0..3 {
        f[0] = k;
        go(1, n, beta, &lay, &mut f, &mut census);
    }
    census
}

/// Whether `f` (dashes `0..=n`) is a tricoloring.
pub fn is_tricoloring(n: &Nanoword, beta: &BetaSet, f: &[u8]) -> bool {
    if f.len() != n.len() + 1 {
        return false;
    }
    let occ = n.occurrences();
    occ.iter().enumerate().all(|(l, &(i0, j0))| {
        let (i, j) = (i0 + 1, j0 + 1);
        let ok = |x: u8, y: u8, z: u8| (x as u32 + y as u32 + z as u32).is_multiple_of(3);
        if beta.contains(n.letters()[l].proj) {
            f[i] == f[i - 1] && ok(f[j - 1], f[j], f[i])
        } else {
            f[j] == f[j - 1] && ok(f[i - 1], f[i], f[j])
        }
    })
}

pub fn census_is_trivial(c: &TricoloringCensus) -> bool {
    (0..3).all(|k| (0..3).all(|l| c[k][l] == u64::from(k == l)))
}

/// `n` relations (rows) over the `n+1` dash generators (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub rows: Vec<Vec<Lambda>>,
    pub cols: usize,
}

impl PresentationMatrix {
    pub fn render(&self, s: &Setting) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|x| x.render(&s.psi)).collect();
            out.push_str(&format!("[{}]\n", cells.join(", ")));
        }
        out
    }
}

impl fmt::Display for PresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} presentation matrix", self.rows.len(), self.cols)
    }
}

fn gens(s: &Setting, a: usize) -> (Lambda, Lambda, Lambda) {
    let g = s.psi.plain(a);
    let gd = s.psi.bullet(a);
    let one = Lambda::embed(s.psi.identity());
    let arc = one - Lambda::embed(s.psi.mul(&g, &gd));
    (Lambda::embed(g), Lambda::embed(gd), arc)
}

/// Two rows per letter, letters taken in order of first occurrence.
pub fn presentation_matrix(s: &Setting, n: &Nanoword, beta: &BetaSet) -> PresentationMatrix {
    let len = n.len();
    let occ = n.occurrences();
    let minus = -Lambda::embed(s.psi.identity());
    let mut rows = Vec::new();
    for l in n.first_occurrence_order() {
        let a = n.letters()[l].proj;
        let (i, j) = (occ[l].0 + 1, occ[l].1 + 1);
        let (g, gd, arc) = gens(s, a);
        let mut r1 = vec![Lambda::zero(); len + 1];
        let mut r2 = vec![Lambda::zero(); len + 1];
        let put = |r: &mut Vec<Lambda>, c: usize, x: &Lambda| r[c] = &r[c] + x;
        if beta.contains(a) {
            put(&mut r1, i - 1, &g);
            put(&mut r1, i, &minus);
            put(&mut r2, i - 1, &arc);
            put(&mut r2, j - 1, &gd);
            put(&mut r2, j, &minus);
        } else {
            put(&mut r1, j - 1, &g);
            put(&mut r1, j, &minus);
            put(&mut r2, i - 1, &gd);
            put(&mut r2, i, &minus);
            put(&mut r2, j - 1, &arc);
        }
        rows.push(r1);
        rows.push(r2);
    }
    PresentationMatrix { rows, cols: len + 1 }
}

fn iota(x: &Lambda) -> Lambda {
    x.map_elems(PsiElement::reversed)
}

/// The anti-automorphism ι of Λ: reverse each monomial.
pub fn lambda_iota(x: &Lambda) -> Lambda {
    iota(x)
}

/// Solve `x_i = a x_{i-1}`, `x_j = a. x_{j-1} + (1 - a a.) x_{i-1}` for
/// `x_n = λ' x_0` and return `ι(λ')`.
pub fn lambda_by_elimination(s: &Setting, n: &Nanoword) -> Lambda {
    let lay = layout(n);
    let mut c = vec![Lambda::embed(s.psi.identity())];
    for (p, &(first, other)) in lay.iter().enumerate() {
        let (g, gd, arc) = gens(s, n.proj_at(p));
        let next = if first {
            g.mul(&c[p], &s.psi)
        } else {
            gd.mul(&c[p], &s.psi) + arc.mul(&c[other], &s.psi)
        };
        c.push(next);
    }
    iota(&c[n.len()])
}

/// Sum over monotone paths from vertex 0 to vertex n of the left-to-right
/// product of labels: chain edges carry `a` (first occurrence) or `a.`
/// (second), and each letter adds an arc `i-1 → j` labelled `1 - a a.`.
pub fn lambda_by_paths(s: &Setting, n: &Nanoword) -> Lambda {
    let lay = layout(n);
    let len = n.len();
    // out[v] = list of (target, label)
    let mut out: Vec<Vec<(usize, Lambda)>> = vec![Vec::new(); len + 1];
    for (p, &(first, other)) in lay.iter().enumerate() {
        let (g, gd, arc) = gens(s, n.proj_at(p));
        out[p].push((p + 1, if first { g } else { gd }));
        if !first {
            out[other].push((p + 1, arc));
        }
    }
    let mut total = Lambda::zero();
    let mut stack = vec![(0usize, Lambda::embed(s.psi.identity()))];
    while let Some((v, acc)) = stack.pop() {
        if v == len {
            total = total + acc;
            continue;
        }
        for (t, lab) in out[v].iter().rev() {
            stack.push((*t, acc.mul(lab, &s.psi)));
        }
    }
    total
}

/// λ(w); needs diagonal homotopy data.
pub fn lambda(s: &Setting, n: &Nanoword) -> Result<Lambda> {
    s.require_diagonal("lambda")?;
    Ok(lambda_by_elimination(s, n))
}

/// Split by parities of plain and bullet exponents: `[λ00, λ01, λ10, λ11]`.
pub fn lambda_grade(x: &Lambda) -> [Lambda; 4] {
    let part = |g: (u8, u8)| x.filter(|m| m.grade() == g);
    [part((0, 0)), part((0, 1)), part((1, 0)), part((1, 1))]
}

pub fn lambda_graded(s: &Setting, n: &Nanoword) -> Result<[Lambda; 4]> {
    Ok(lambda_grade(&lambda(s, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ring;

    fn two_free() -> Setting {
        Setting::new(AlphabetSpec::new(&["a", "A", "b", "B"], &[("a", "A"), ("b", "B")], &[], None).unwrap())
    }

    #[test]
    fn abab_lambda() {
        let s = two_free();
        let n = Nanoword::from_pattern("ABAB", &[('A', 0), ('B', 2)]).unwrap();
        let want: Lambda = parse_ring(&s.psi, "a b a. b. + a - a b b. + b. - a a. b.").unwrap();
        assert_eq!(lambda_by_elimination(&s, &n), want);
        assert_eq!(lambda_by_paths(&s, &n), want);
    }

    #[test]
    fn contractible_small_cases() {
        let s = two_free();
        let one = Lambda::embed(s.psi.identity());
        assert_eq!(lambda(&s, &Nanoword::empty()).unwrap(), one);
        let aa = Nanoword::from_pattern("AA", &[('A', 0)]).unwrap();
        assert_eq!(lambda_by_elimination(&s, &aa), one);
        assert_eq!(lambda_by_paths(&s, &aa), one);
        let m = presentation_matrix(&s, &aa, &BetaSet::all(&s.spec));
        let r = m.render(&s);
        assert_eq!(r, "[a, -1, 0]\n[1 - a a., a., -1]\n");
        assert_eq!(presentation_matrix(&s, &Nanoword::empty(), &BetaSet::all(&s.spec)).rows.len(), 0);
    }

    #[test]
    fn empty_census_is_identity() {
        let s = two_free();
        let c = tricolor_census(&Nanoword::empty(), &BetaSet::all(&s.spec));
        assert!(census_is_trivial(&c));
    }

    #[test]
    fn beta_must_be_stable() {
        let s = two_free();
        assert!(BetaSet::new(&s.spec, &[0]).is_err());
        assert!(BetaSet::parse(&s.spec, "a,A").is_ok());
        assert_eq!(BetaSet::enumerate(&s.spec).len(), 4);
    }
}
