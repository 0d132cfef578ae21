//! Étale words, nanowords, and canonical forms.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Deref;

use crate::alphabet::AlphabetSpec;
use crate::error::{parse_err, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub name: String,
    /// Index into the alphabet.
    pub proj: usize,
}

/// A word over an α-alphabet. Letters may repeat any number of times
/// (including zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EtaleWord {
    letters: Vec<Letter>,
    word: Vec<usize>,
}

impl EtaleWord {
    pub fn new(letters: Vec<Letter>, word: Vec<usize>) -> Result<Self> {
        let mut seen = HashSet::new();
        for l in &letters {
            if !seen.insert(l.name.as_str()) {
                return Err(Error::DuplicateLetter(l.name.clone()));
            }
        }
        if let Some(&bad) = word.iter().find(|&&i| i >= letters.len()) {
            return Err(Error::UndeclaredLetter(format!("#{bad}")));
        }
        Ok(Self { letters, word })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// A word on α itself: one letter per α-letter, named and projecting
    /// like it.
    pub fn plain(text: &str, spec: &AlphabetSpec) -> Result<Self> {
        let letters = spec
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| Letter { name: n.clone(), proj: i })
            .collect();
        let mut word = Vec::new();
        let mut rest = text.trim();
        let mut col = 1;
        while !rest.is_empty() {
            // longest alphabet name that prefixes the rest
            let hit = (0..spec.len())
                .filter(|&i| rest.starts_with(spec.name(i)))
                .max_by_key(|&i| spec.name(i).len());
            match hit {
                Some(i) => {
                    word.push(i);
                    rest = rest[spec.name(i).len()..].trim_start();
                    col += spec.name(i).len();
                }
                None => return Err(parse_err(1, col, format!("no alphabet letter at `{rest}`"))),
            }
        }
        Self::new(letters, word)
    }

    /// Parses `Name:proj ... :: Name Name ...`.
    pub fn parse(text: &str, spec: &AlphabetSpec) -> Result<Self> {
        let (decls, body) = text
            .split_once("::")
            .ok_or_else(|| parse_err(1, 1, "expected `<declarations> :: <word>`"))?;
        let mut letters = Vec::new();
        let mut by_name = HashMap::new();
        for tok in decls.split_whitespace() {
            let col = decls.find(tok).unwrap_or(0) + 1;
            let (name, proj) =
                tok.split_once(':').ok_or_else(|| parse_err(1, col, format!("expected `Name:proj`, got `{tok}`")))?;
            let p = spec.index(proj).ok_or_else(|| parse_err(1, col, format!("`{proj}` is not in the alphabet")))?;
            if by_name.insert(name.to_string(), letters.len()).is_some() {
                return Err(Error::DuplicateLetter(name.into()));
            }
            letters.push(Letter { name: name.into(), proj: p });
        }
        let off = decls.len() + 2;
        let mut word = Vec::new();
        for tok in body.split_whitespace() {
            let col = off + body.find(tok).unwrap_or(0) + 1;
            word.push(*by_name.get(tok).ok_or_else(|| parse_err(1, col, format!("undeclared letter `{tok}`")))?);
        }
        Self::new(letters, word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn proj_at(&self, pos: usize) -> usize {
        self.letters[self.word[pos]].proj
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|l| l.name == name)
    }

    pub fn multiplicity(&self, letter: usize) -> usize {
        self.word.iter().filter(|&&x| x == letter).count()
    }

    /// The word read backwards.
    pub fn opposite(&self) -> Self {
        Self { letters: self.letters.clone(), word: self.word.iter().rev().copied().collect() }
    }

    /// Concatenation. Names of `other` clashing with ours get the smallest
    /// numeric suffix that makes them unique.
    pub fn product(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        let mut used: HashSet<String> = letters.iter().map(|l| l.name.clone()).collect();
        used.extend(other.letters.iter().map(|l| l.name.clone()));
        let mine: HashSet<&str> = self.letters.iter().map(|l| l.name.as_str()).collect();
        let off = letters.len();
        for l in &other.letters {
            let mut name = l.name.clone();
            if mine.contains(name.as_str()) {
                let mut k = 1;
                while used.contains(&format!("{}{k}", l.name)) {
                    k += 1;
                }
                name = format!("{}{k}", l.name);
                used.insert(name.clone());
            }
            letters.push(Letter { name, proj: l.proj });
        }
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&i| i + off));
        Self { letters, word }
    }

    /// Turns the word into a nanoword: a letter of multiplicity `m ≥ 2`
    /// becomes `m(m-1)/2` letters `<name>_<i>_<j>`; letters of multiplicity
    /// one disappear.
    pub fn desingularize(&self) -> Nanoword {
        let mut letters = Vec::new();
        // (letter, i, j) -> new index, 1-based i < j
        let mut id: HashMap<(usize, usize, usize), usize> = HashMap::new();
        let mult: Vec<usize> = (0..self.letters.len()).map(|l| self.multiplicity(l)).collect();
        for (l, &m) in mult.iter().enumerate() {
            for i in 1..=m {
                for j in i + 1..=m {
                    id.insert((l, i, j), letters.len());
                    letters.push(Letter {
                        name: format!("{}_{i}_{j}", self.letters[l].name),
                        proj: self.letters[l].proj,
                    });
                }
            }
        }
        let mut seen = vec![0usize; self.letters.len()];
        let mut word = Vec::new();
        for &l in &self.word {
            seen[l] += 1;
            let (i, m) = (seen[l], mult[l]);
            for k in 1..i {
                word.push(id[&(l, k, i)]);
            }
            for k in i + 1..=m {
                word.push(id[&(l, i, k)]);
            }
        }
        Nanoword(Self { letters, word })
    }

    /// Relabel projections through `f` (a map on alphabet indices).
    pub fn map_projections(&self, f: &[usize]) -> Self {
        let letters = self.letters.iter().map(|l| Letter { name: l.name.clone(), proj: f[l.proj] }).collect();
        Self { letters, word: self.word.clone() }
    }

    pub fn display<'a>(&'a self, spec: &'a AlphabetSpec) -> WordDisplay<'a> {
        WordDisplay { w: self, spec }
    }
}

/// Literal form `Name:proj ... :: Name ...`.
pub struct WordDisplay<'a> {
    w: &'a EtaleWord,
    spec: &'a AlphabetSpec,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decl: Vec<String> =
            self.w.letters.iter().map(|l| format!("{}:{}", l.name, self.spec.name(l.proj))).collect();
        let body: Vec<&str> = self.w.word.iter().map(|&i| self.w.letters[i].name.as_str()).collect();
        write!(f, "{} :: {}", decl.join(" "), body.join(" "))
    }
}

/// An étale word in which every declared letter occurs exactly twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Nanoword(EtaleWord);

impl Deref for Nanoword {
    type Target = EtaleWord;
    fn deref(&self) -> &EtaleWord {
        &self.0
    }
}

impl TryFrom<EtaleWord> for Nanoword {
    type Error = Error;
    fn try_from(w: EtaleWord) -> Result<Self> {
        for (i, l) in w.letters.iter().enumerate() {
            let m = w.multiplicity(i);
            if m != 2 {
                return Err(Error::NotGauss(format!("`{}` occurs {m} time(s)", l.name)));
            }
        }
        Ok(Nanoword(w))
    }
}

impl Nanoword {
    pub fn new(letters: Vec<Letter>, word: Vec<usize>) -> Result<Self> {
        EtaleWord::new(letters, word)?.try_into()
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str, spec: &AlphabetSpec) -> Result<Self> {
        EtaleWord::parse(text, spec)?.try_into()
    }

    /// Builds a nanoword from a sequence of letter names and a projection
    /// per name; handy in tests: `from_pattern("ABAB", &[('A', 0), ('B', 1)])`.
    pub fn from_pattern(pattern: &str, proj: &[(char, usize)]) -> Result<Self> {
        let letters: Vec<Letter> = proj.iter().map(|&(c, p)| Letter { name: c.to_string(), proj: p }).collect();
        let mut word = Vec::new();
        for c in pattern.chars() {
            let i = proj.iter().position(|&(d, _)| d == c).ok_or_else(|| Error::UndeclaredLetter(c.to_string()))?;
            word.push(i);
        }
        Self::new(letters, word)
    }

    pub fn as_etale(&self) -> &EtaleWord {
        &self.0
    }

    /// Number of letters (half the length).
    pub fn rank(&self) -> usize {
        self.0.letters.len()
    }

    /// `(first, second)` positions of each letter, 0-based.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(usize::MAX, usize::MAX); self.rank()];
        for (p, &l) in self.word.iter().enumerate() {
            if occ[l].0 == usize::MAX {
                occ[l].0 = p;
            } else {
                occ[l].1 = p;
            }
        }
        occ
    }

    /// Letter indices ordered by first occurrence.
    pub fn first_occurrence_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.rank()];
        let mut out = Vec::new();
        for &l in self.word() {
            if !seen[l] {
                seen[l] = true;
                out.push(l);
            }
        }
        out
    }

    pub fn opposite(&self) -> Self {
        Nanoword(self.0.opposite())
    }

    pub fn product(&self, other: &Self) -> Self {
        Nanoword(self.0.product(&other.0))
    }

    pub fn canonical_form(&self) -> CanonicalNanoword {
        let proj: Vec<u16> = self.letters().iter().map(|l| l.proj as u16).collect();
        let word: Vec<u16> = self.word().iter().map(|&i| i as u16).collect();
        CanonicalNanoword::from_raw(&word, &proj)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    pub fn map_projections(&self, f: &[usize]) -> Self {
        Nanoword(self.0.map_projections(f))
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<Letter>, word: Vec<usize>) -> Self {
        Nanoword(EtaleWord { letters, word })
    }
}

/// Letters renamed `0, 1, 2, …` by first occurrence. Equal keys mean
/// isomorphic nanowords.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CanonicalNanoword {
    /// Projection of rank `r`.
    pub proj: Vec<u16>,
    pub word: Vec<u16>,
}

impl CanonicalNanoword {
    /// Canonicalize a word over arbitrary letter ids; `proj[id]` is the projection of `id`.
    pub fn from_raw(word: &[u16], proj: &[u16]) -> Self {
        let mut rank: HashMap<u16, u16> = HashMap::with_capacity(word.len() / 2);
        let mut out = Vec::with_capacity(word.len());
        let mut p = Vec::with_capacity(word.len() / 2);
        for &l in word {
            let next = rank.len() as u16;
            let r = *rank.entry(l).or_insert_with(|| {
                p.push(proj[l as usize]);
                next
            });
            out.push(r);
        }
        Self { proj: p, word: out }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// A nanoword with letters named `1, 2, …`.
    pub fn to_nanoword(&self) -> Nanoword {
        let letters = self.proj.iter().enumerate().map(|(i, &p)| Letter { name: (i + 1).to_string(), proj: p as usize }).collect();
        Nanoword::from_parts_unchecked(letters, self.word.iter().map(|&r| r as usize).collect())
    }
}
