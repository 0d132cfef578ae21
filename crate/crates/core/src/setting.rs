use std::sync::Arc;

use crate::algebra::{OrbitTable, PiAb, PiGroup, PsiGroup};
use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};

/// An alphabet together with its orbit table (fixing α₊) and the three
/// groups built on it. Invariants are computed relative to a setting.
#[derive(Clone, Debug)]
pub struct Setting {
    pub spec: AlphabetSpec,
    pub table: Arc<OrbitTable>,
    pub pi: PiGroup,
    pub ab: PiAb,
    pub psi: PsiGroup,
}

impl Setting {
    pub fn new(spec: AlphabetSpec) -> Self {
        let table = OrbitTable::new(&spec);
        Self::build(spec, table)
    }

    /// α₊ given by letter names.
    pub fn with_alpha_plus(spec: AlphabetSpec, alpha_plus: &[&str]) -> Result<Self> {
        let idx = alpha_plus
            .iter()
            .map(|n| spec.index(n).ok_or_else(|| Error::UndeclaredLetter(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let table = OrbitTable::with_alpha_plus(&spec, &idx)?;
        Ok(Self::build(spec, table))
    }

    fn build(spec: AlphabetSpec, table: Arc<OrbitTable>) -> Self {
        Self {
            pi: PiGroup::new(table.clone()),
            ab: PiAb::new(table.clone()),
            psi: PsiGroup::new(table.clone()),
            spec,
            table,
        }
    }

    pub(crate) fn require_diagonal(&self, what: &'static str) -> Result<()> {
        if self.spec.is_diagonal() {
            Ok(())
        } else {
            Err(Error::NotDiagonal(what))
        }
    }

    pub(crate) fn require_fixed_point_free(&self, what: &'static str) -> Result<()> {
        if self.spec.fixed_point_free() {
            Ok(())
        } else {
            Err(Error::FixedPoint(what))
        }
    }
}
