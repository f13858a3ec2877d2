//! Set families, coverings, and the covering approximation operators.
//!
//! For a covering `C` of `U` and `X ⊆ U`:
//!
//! * `upper(X)` is the union of every block that meets `X`;
//! * `lower(X)` is `U − upper(U − X)`.
//!
//! A set with `upper(X) = X` is *outer definable*. Outer definable sets are
//! exactly the fixpoints reached by [`Covering::closure_upper`].

use std::collections::HashSet;

use crate::error::Error;
use crate::set::{Subset, Universe};

/// A family of subsets of a universe. Duplicate blocks are collapsed; the
/// first occurrence keeps its position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl SetFamily {
    pub fn new(universe: Universe, blocks: impl IntoIterator<Item = Subset>) -> Result<Self, Error> {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for block in blocks {
            universe.check(&block)?;
            if seen.insert(block.clone()) {
                kept.push(block);
            }
        }
        Ok(Self {
            universe,
            blocks: kept,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn union(&self) -> Subset {
        let mut all = self.universe.empty_set();
        for block in &self.blocks {
            all.union_with(block);
        }
        all
    }
}

/// Why a family failed to be a covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoveringViolation {
    EmptyUniverse,
    /// Position of an empty block in the family.
    EmptyBlock(usize),
    /// Universe index that no block contains.
    Uncovered(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoveringValidation {
    Ok(Covering),
    Violations(Vec<CoveringViolation>),
}

impl CoveringValidation {
    pub fn is_ok(&self) -> bool {
        matches!(self, CoveringValidation::Ok(_))
    }

    pub fn covering(self) -> Option<Covering> {
        match self {
            CoveringValidation::Ok(c) => Some(c),
            CoveringValidation::Violations(_) => None,
        }
    }

    pub fn violations(&self) -> &[CoveringViolation] {
        match self {
            CoveringValidation::Ok(_) => &[],
            CoveringValidation::Violations(v) => v,
        }
    }
}

/// Accepts `f` as a covering when it has no empty block and its blocks union
/// to a nonempty universe. Every violation is reported, not just the first.
pub fn validate_covering(f: SetFamily) -> CoveringValidation {
    let mut violations = Vec::new();
    if f.universe.is_empty() {
        violations.push(CoveringViolation::EmptyUniverse);
    }
    violations.extend(
        f.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_empty())
            .map(|(i, _)| CoveringViolation::EmptyBlock(i)),
    );
    violations.extend(f.union().complement().iter().map(CoveringViolation::Uncovered));
    if violations.is_empty() {
        CoveringValidation::Ok(Covering {
            universe: f.universe,
            blocks: f.blocks,
        })
    } else {
        CoveringValidation::Violations(violations)
    }
}

/// A family of nonempty blocks whose union is the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl Covering {
    /// Shorthand for building a family and validating it.
    pub fn new(universe: Universe, blocks: impl IntoIterator<Item = Subset>) -> Result<Self, Error> {
        let family = SetFamily::new(universe, blocks)?;
        let validation = validate_covering(family.clone());
        match validation {
            CoveringValidation::Ok(c) => Ok(c),
            CoveringValidation::Violations(v) => Err(Error::NotACovering(describe_violations(
                family.universe(),
                &v,
            ))),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn upper(&self, x: &Subset) -> Result<Subset, Error> {
        self.universe.check(x)?;
        Ok(self.upper_unchecked(x))
    }

    pub fn lower(&self, x: &Subset) -> Result<Subset, Error> {
        self.universe.check(x)?;
        Ok(self.upper_unchecked(&x.complement()).complement())
    }

    /// Least `Y ⊇ x` with `upper(Y) = Y`, reached by applying `upper` until
    /// nothing changes. Each round strictly grows the set, so at most `n`
    /// rounds run.
    pub fn closure_upper(&self, x: &Subset) -> Result<Subset, Error> {
        self.universe.check(x)?;
        let mut current = x.clone();
        loop {
            let next = self.upper_unchecked(&current);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Greatest `Y ⊆ x` with `lower(Y) = Y`. Dual of [`Self::closure_upper`]:
    /// `lower` is contractive, so iterating it from `x` descends to the
    /// largest fixpoint below `x`.
    pub fn interior_lower(&self, x: &Subset) -> Result<Subset, Error> {
        self.universe.check(x)?;
        let mut current = x.clone();
        loop {
            let next = self.upper_unchecked(&current.complement()).complement();
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_outer_definable(&self, x: &Subset) -> Result<bool, Error> {
        Ok(&self.upper(x)? == x)
    }

    pub(crate) fn upper_unchecked(&self, x: &Subset) -> Subset {
        let mut out = self.universe.empty_set();
        for block in self.blocks.iter().filter(|b| b.intersects(x)) {
            out.union_with(block);
        }
        out
    }
}

/// One line per violation, using labels.
pub fn describe_violations(universe: &Universe, violations: &[CoveringViolation]) -> String {
    violations
        .iter()
        .map(|v| match v {
            CoveringViolation::EmptyUniverse => "universe is empty".to_string(),
            CoveringViolation::EmptyBlock(i) => format!("block {} is empty", i + 1),
            CoveringViolation::Uncovered(e) => format!("{} uncovered", universe.label(*e)),
        })
        .collect::<Vec<_>>()
        .join("; ")
}
