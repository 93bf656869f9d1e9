//! Three-valued verdicts and the enumeration caps that produce the third value.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Which enumeration budget a computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    Elements,
    Submodules,
    Homs,
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::Elements => "element",
            Limit::Submodules => "submodule",
            Limit::Homs => "hom",
        })
    }
}

/// An enumeration that would have needed `size` items against a cap of `cap`.
///
/// `size` saturates at `u128::MAX`; for submodule enumeration it is a lower
/// bound (the search stops as soon as the cap is crossed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Exceeded {
    pub limit: Limit,
    pub size: u128,
    pub cap: u64,
}

impl fmt::Display for Exceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cap {} exceeded (needed {})", self.limit, self.cap, self.size)
    }
}

impl std::error::Error for Exceeded {}

/// Enumeration budgets. Defaults: 4096 elements, 512 submodules, 4096 homs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    pub elements: u64,
    pub submodules: u64,
    pub homs: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { elements: 4096, submodules: 512, homs: 4096 }
    }
}

impl Caps {
    pub fn check(&self, limit: Limit, size: u128) -> Result<(), Exceeded> {
        let cap = match limit {
            Limit::Elements => self.elements,
            Limit::Submodules => self.submodules,
            Limit::Homs => self.homs,
        };
        if size > cap as u128 {
            Err(Exceeded { limit, size, cap })
        } else {
            Ok(())
        }
    }
}

/// Evidence attached to a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Witness {
    /// A ring or module element, in coordinates.
    Element(Vec<i64>),
    /// Two ring elements (e.g. a non-commuting idempotent and a unit).
    ElementPair(Vec<i64>, Vec<i64>),
    /// A homomorphism matrix in the row-vector convention.
    Hom(Vec<Vec<i64>>),
    /// Canonical generators of a submodule.
    Submodule(Vec<Vec<i64>>),
    /// Two submodules (e.g. a non-distributive pair, or a prime-test pair).
    SubmodulePair(Vec<Vec<i64>>, Vec<Vec<i64>>),
    /// Three submodules violating a lattice law.
    SubmoduleTriple(Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>),
    Note(String),
}

/// Result of a decision procedure: holds, fails with a witness, or could not
/// be decided within the caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    True,
    False(Witness),
    Undecided(Exceeded),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::True)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::False(_))
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Verdict::Undecided(_))
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False(_) => Some(false),
            Verdict::Undecided(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::False(w) => Some(w),
            _ => None,
        }
    }

    /// Short label used in tables: `true`, `false` or `undecided`.
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False(_) => "false",
            Verdict::Undecided(_) => "undecided",
        }
    }
}

impl From<Exceeded> for Verdict {
    fn from(e: Exceeded) -> Self {
        Verdict::Undecided(e)
    }
}

impl From<Result<Verdict, Exceeded>> for Verdict {
    fn from(r: Result<Verdict, Exceeded>) -> Self {
        r.unwrap_or_else(Verdict::Undecided)
    }
}
