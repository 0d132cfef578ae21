use std::sync::Arc;

use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitKind {
    /// `{a, τ(a)}` with `a ≠ τ(a)`.
    Free,
    /// `τ(a) = a`.
    Fixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub kind: OrbitKind,
    /// The letter of α₊ in this orbit; its generators get positive exponents.
    pub rep: usize,
    pub partner: usize,
}

/// τ-orbits of an alphabet together with a choice of α₊.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTable {
    names: Vec<String>,
    orbits: Vec<Orbit>,
    /// letter -> (orbit, +1 for the representative, -1 for its partner)
    of_letter: Vec<(usize, i64)>,
}

impl OrbitTable {
    /// α₊ defaults to the first-declared letter of each orbit.
    pub fn new(spec: &AlphabetSpec) -> Arc<Self> {
        let reps: Vec<usize> = spec.orbits().into_iter().map(|(a, _)| a).collect();
        Self::with_alpha_plus(spec, &reps).expect("default α₊")
    }

    /// `alpha_plus` must meet every orbit exactly once.
    pub fn with_alpha_plus(spec: &AlphabetSpec, alpha_plus: &[usize]) -> Result<Arc<Self>> {
        let mut of_letter = vec![(usize::MAX, 0i64); spec.len()];
        let mut orbits = Vec::new();
        for &r in alpha_plus {
            let t = spec.tau(r);
            if of_letter[r].0 != usize::MAX {
                return Err(Error::Precondition(format!("α₊ meets the orbit of `{}` twice", spec.name(r))));
            }
            let o = orbits.len();
            let kind = if t == r { OrbitKind::Fixed } else { OrbitKind::Free };
            of_letter[r] = (o, 1);
            if t != r {
                of_letter[t] = (o, -1);
            }
            orbits.push(Orbit { kind, rep: r, partner: t });
        }
        if let Some(a) = of_letter.iter().position(|x| x.0 == usize::MAX) {
            return Err(Error::Precondition(format!("α₊ misses the orbit of `{}`", spec.name(a))));
        }
        Ok(Arc::new(Self { names: spec.names().to_vec(), orbits, of_letter }))
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn kind(&self, orbit: usize) -> OrbitKind {
        self.orbits[orbit].kind
    }

    pub fn is_fixed(&self, orbit: usize) -> bool {
        self.orbits[orbit].kind == OrbitKind::Fixed
    }

    /// `(orbit, sign)` of an alphabet letter.
    pub fn of_letter(&self, a: usize) -> (usize, i64) {
        self.of_letter[a]
    }

    pub fn letter_count(&self) -> usize {
        self.of_letter.len()
    }

    pub fn letter_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// Name used when printing generators of an orbit.
    pub fn orbit_name(&self, orbit: usize) -> &str {
        &self.names[self.orbits[orbit].rep]
    }

    pub fn letter_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn alpha_plus(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.rep).collect()
    }

    pub fn in_alpha_plus(&self, a: usize) -> bool {
        self.of_letter[a].1 == 1
    }

    /// Reduce an exponent according to the orbit kind.
    pub fn reduce(&self, orbit: usize, e: i64) -> i64 {
        match self.orbits[orbit].kind {
            OrbitKind::Free => e,
            OrbitKind::Fixed => e.rem_euclid(2),
        }
    }
}
