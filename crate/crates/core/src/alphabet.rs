//! Alphabets with an involution and homotopy data.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// The homotopy data `S`, either kept symbolic or as an explicit triple set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Triples {
    Diagonal,
    Set(BTreeSet<[usize; 3]>),
}

/// A finite alphabet, an involution on it, and the triple set gating the third move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetSpec {
    letters: Vec<String>,
    tau: Vec<usize>,
    triples: Triples,
    index: HashMap<String, usize>,
}

impl AlphabetSpec {
    /// Build and validate an alphabet. `pairs` and `fixed` must partition
    /// `letters`; `triples = None` means the diagonal.
    pub fn new(
        letters: &[&str],
        pairs: &[(&str, &str)],
        fixed: &[&str],
        triples: Option<&[[&str; 3]]>,
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, l) in letters.iter().enumerate() {
            if index.insert(l.to_string(), i).is_some() {
                return Err(Error::DuplicateLetter(l.to_string()));
            }
        }
        let look = |l: &str| index.get(l).copied().ok_or_else(|| Error::UndeclaredLetter(l.into()));
        let mut tau = vec![usize::MAX; letters.len()];
        let mut assign = |i: usize, t: usize, name: &str| {
            if tau[i] != usize::MAX {
                return Err(Error::LetterInTwoOrbits(name.into()));
            }
            tau[i] = t;
            Ok(())
        };
        for &(a, b) in pairs {
            let (i, j) = (look(a)?, look(b)?);
            if i == j {
                return Err(Error::LetterInTwoOrbits(a.into()));
            }
            assign(i, j, a)?;
            assign(j, i, b)?;
        }
        for &f in fixed {
            let i = look(f)?;
            assign(i, i, f)?;
        }
        if let Some(i) = tau.iter().position(|&t| t == usize::MAX) {
            return Err(Error::LetterWithoutOrbit(letters[i].into()));
        }
        let triples = match triples {
            None => Triples::Diagonal,
            Some(ts) => {
                let mut set = BTreeSet::new();
                for t in ts {
                    set.insert([look(t[0])?, look(t[1])?, look(t[2])?]);
                }
                Triples::Set(set)
            }
        };
        Ok(Self { letters: letters.iter().map(|s| s.to_string()).collect(), tau, triples, index })
    }

    /// The curves alphabet: `{a, b}`, `τ(a) = b`, `S = {(a,a,a), (b,b,b)}`.
    pub fn curves() -> Self {
        Self::new(&["a", "b"], &[("a", "b")], &[], Some(&[["a", "a", "a"], ["b", "b", "b"]]))
            .expect("preset")
    }

    /// The knots alphabet `a+, a-, b+, b-` with `τ(a±) = b∓` and its twelve triples.
    pub fn knots() -> Self {
        let mut ts = Vec::new();
        for x in ["a", "b"] {
            for (s, t) in [("+", "-"), ("-", "+")] {
                let p = format!("{x}{s}");
                let m = format!("{x}{t}");
                ts.push([p.clone(), p.clone(), p.clone()]);
                ts.push([p.clone(), p.clone(), m.clone()]);
                ts.push([m, p.clone(), p]);
            }
        }
        let ts: Vec<[&str; 3]> = ts.iter().map(|t| [t[0].as_str(), t[1].as_str(), t[2].as_str()]).collect();
        Self::new(&["a+", "a-", "b+", "b-"], &[("a+", "b-"), ("a-", "b+")], &[], Some(&ts)).expect("preset")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.letters[a]
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn tau(&self, a: usize) -> usize {
        self.tau[a]
    }

    pub fn is_fixed(&self, a: usize) -> bool {
        self.tau[a] == a
    }

    pub fn fixed_point_free(&self) -> bool {
        (0..self.len()).all(|a| !self.is_fixed(a))
    }

    pub fn triples(&self) -> &Triples {
        &self.triples
    }

    pub fn contains_triple(&self, a: usize, b: usize, c: usize) -> bool {
        match &self.triples {
            Triples::Diagonal => a == b && b == c,
            Triples::Set(s) => s.contains(&[a, b, c]),
        }
    }

    /// True when `S` is the diagonal, whether written symbolically or spelled out.
    pub fn is_diagonal(&self) -> bool {
        match &self.triples {
            Triples::Diagonal => true,
            Triples::Set(s) => s.len() == self.len() && s.iter().all(|t| t[0] == t[1] && t[1] == t[2]),
        }
    }

    /// All triples of `S` as explicit index triples.
    pub fn triple_list(&self) -> Vec<[usize; 3]> {
        match &self.triples {
            Triples::Diagonal => (0..self.len()).map(|a| [a, a, a]).collect(),
            Triples::Set(s) => s.iter().copied().collect(),
        }
    }

    /// Orbits of τ in letter order, each listed by its smallest index.
    pub fn orbits(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter(|&a| a <= self.tau[a]).map(|a| (a, self.tau[a])).collect()
    }

    /// Whether `beta` (a letter set) is closed under τ.
    pub fn is_tau_stable(&self, beta: &[bool]) -> bool {
        (0..self.len()).all(|a| beta[a] == beta[self.tau[a]])
    }
}

impl fmt::Display for AlphabetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            writeln!(f, "letter {l}")?;
        }
        for (a, t) in self.orbits() {
            if a == t {
                writeln!(f, "fixed {}", self.letters[a])?;
            } else {
                writeln!(f, "tau {} {}", self.letters[a], self.letters[t])?;
            }
        }
        match &self.triples {
            Triples::Diagonal => writeln!(f, "S diagonal"),
            Triples::Set(s) => {
                for t in s {
                    writeln!(f, "triple {} {} {}", self.letters[t[0]], self.letters[t[1]], self.letters[t[2]])?;
                }
                Ok(())
            }
        }
    }
}

/// Parses the line format: `letter x`, `tau x y`, `fixed x`, `triple x y z`,
/// `S diagonal`; `#` starts a comment. Without any `triple` or `S` line the
/// data defaults to the diagonal.
impl FromStr for AlphabetSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pairs = Vec::new();
        let mut fixed = Vec::new();
        let mut triples: Option<Vec<[String; 3]>> = None;
        let mut diagonal = false;
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let col = raw.find(toks[0]).unwrap_or(0) + 1;
            let want = |n: usize| {
                if toks.len() == n + 1 {
                    Ok(())
                } else {
                    Err(parse_err(ln + 1, col, format!("`{}` takes {n} argument(s)", toks[0])))
                }
            };
            match toks[0] {
                "letter" => {
                    want(1)?;
                    letters.push(toks[1].to_string());
                }
                "tau" => {
                    want(2)?;
                    pairs.push((toks[1].to_string(), toks[2].to_string()));
                }
                "fixed" => {
                    want(1)?;
                    fixed.push(toks[1].to_string());
                }
                "triple" => {
                    want(3)?;
                    triples.get_or_insert_with(Vec::new).push([
                        toks[1].to_string(),
                        toks[2].to_string(),
                        toks[3].to_string(),
                    ]);
                }
                "S" => {
                    if toks.len() != 2 || toks[1] != "diagonal" {
                        return Err(parse_err(ln + 1, col, "expected `S diagonal`"));
                    }
                    diagonal = true;
                }
                other => return Err(parse_err(ln + 1, col, format!("unknown directive `{other}`"))),
            }
        }
        if diagonal && triples.is_some() {
            return Err(parse_err(1, 1, "both `S diagonal` and explicit triples given"));
        }
        let l: Vec<&str> = letters.iter().map(String::as_str).collect();
        let p: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let f: Vec<&str> = fixed.iter().map(String::as_str).collect();
        let t: Option<Vec<[&str; 3]>> =
            triples.as_ref().map(|ts| ts.iter().map(|t| [t[0].as_str(), t[1].as_str(), t[2].as_str()]).collect());
        Self::new(&l, &p, &f, t.as_deref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curves_preset_is_diagonal() {
        let s = AlphabetSpec::curves();
        assert!(s.is_diagonal());
        assert_eq!(s.tau(0), 1);
        assert!(s.contains_triple(1, 1, 1));
        assert!(!s.contains_triple(0, 1, 1));
    }

    #[test]
    fn knots_preset() {
        let s = AlphabetSpec::knots();
        assert_eq!(s.triple_list().len(), 12);
        assert!(!s.is_diagonal());
        let ap = s.index("a+").unwrap();
        let am = s.index("a-").unwrap();
        assert_eq!(s.name(s.tau(ap)), "b-");
        assert!(s.contains_triple(am, ap, ap));
        assert!(s.fixed_point_free());
    }

    #[test]
    fn one_fixed_letter() {
        let s = AlphabetSpec::new(&["a"], &[], &["a"], None).unwrap();
        assert!(s.is_fixed(0));
        assert_eq!(s.triple_list(), vec![[0, 0, 0]]);
    }

    #[test]
    fn partition_violations() {
        assert_eq!(
            AlphabetSpec::new(&["a", "b"], &[("a", "b")], &["a"], None),
            Err(Error::LetterInTwoOrbits("a".into()))
        );
        assert_eq!(AlphabetSpec::new(&["a", "a"], &[], &["a"], None), Err(Error::DuplicateLetter("a".into())));
        assert_eq!(
            AlphabetSpec::new(&["a"], &[], &["a"], Some(&[["a", "a", "c"]])),
            Err(Error::UndeclaredLetter("c".into()))
        );
        assert_eq!(AlphabetSpec::new(&["a", "b"], &[], &["a"], None), Err(Error::LetterWithoutOrbit("b".into())));
    }

    #[test]
    fn text_round_trip() {
        for s in [AlphabetSpec::curves(), AlphabetSpec::knots()] {
            let back: AlphabetSpec = s.to_string().parse().unwrap();
            assert_eq!(back, s);
        }
        let s: AlphabetSpec = "letter a\nletter b # two letters\nfixed a\nfixed b\n".parse().unwrap();
        assert!(s.is_diagonal());
        let e = "letter a\nbogus a\n".parse::<AlphabetSpec>().unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, col: 1, msg: "unknown directive `bogus`".into() });
    }
}
