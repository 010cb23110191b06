//! Atomic elements: named literals, their complements, and the two constants.

use std::fmt;

/// An atomic element: a named literal such as `a`, its complement `a'`, or
/// one of the constants `top` / `bot`.
///
/// A literal and its complement form a *pair*; valuations assign one bit per
/// pair, and the complemented form always denotes the opposite bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SElem {
    /// A named literal; `complemented` selects the primed form `name'`.
    Lit {
        /// The pair name shared by the literal and its complement.
        name: String,
        /// Whether this is the complemented member of the pair.
        complemented: bool,
    },
    /// The always-true constant.
    Top,
    /// The always-false constant.
    Bot,
}

impl SElem {
    /// The plain literal `name`.
    pub fn lit(name: &str) -> Self {
        SElem::Lit {
            name: name.to_string(),
            complemented: false,
        }
    }

    /// The complemented literal `name'`.
    pub fn comp(name: &str) -> Self {
        SElem::Lit {
            name: name.to_string(),
            complemented: true,
        }
    }

    /// Swap a literal with its primed form and `top` with `bot`.
    ///
    /// Involutive: `s.complement().complement() == s`.
    pub fn complement(&self) -> Self {
        match self {
            SElem::Lit { name, complemented } => SElem::Lit {
                name: name.clone(),
                complemented: !complemented,
            },
            SElem::Top => SElem::Bot,
            SElem::Bot => SElem::Top,
        }
    }

    /// True for named literals (either polarity), false for the constants.
    pub fn is_literal(&self) -> bool {
        matches!(self, SElem::Lit { .. })
    }

    /// The pair name for literals, `None` for the constants.
    pub fn pair_name(&self) -> Option<&str> {
        match self {
            SElem::Lit { name, .. } => Some(name),
            _ => None,
        }
    }
}

impl fmt::Display for SElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SElem::Lit { name, complemented } => {
                if *complemented {
                    write!(f, "{name}'")
                } else {
                    write!(f, "{name}")
                }
            }
            SElem::Top => write!(f, "top"),
            SElem::Bot => write!(f, "bot"),
        }
    }
}
