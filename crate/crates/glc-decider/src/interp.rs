use std::collections::{BTreeMap, BTreeSet};

use glc_formula_core::SElem;

/// One truth assignment for the literal pairs visible at a single object
/// level. As in a frame level, one bit per pair covers both members:
/// the plain literal takes the bit, its complement the opposite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelInterp {
    pub level: u64,
    pub bits: BTreeMap<String, bool>,
}

impl LevelInterp {
    pub fn new(level: u64, bits: BTreeMap<String, bool>) -> Self {
        LevelInterp { level, bits }
    }

    /// The bit a single element takes under this assignment; total, with
    /// the same defaults as a frame level.
    pub fn value_of(&self, s: &SElem) -> u8 {
        match s {
            SElem::Top => 1,
            SElem::Bot => 0,
            SElem::Lit { name, complemented } => {
                let plain = self.bits.get(name).copied().unwrap_or(false);
                u8::from(if *complemented { !plain } else { plain })
            }
        }
    }
}

/// All 2^n assignments over the given pairs at one level, in counting
/// order with the alphabetically first pair as the most significant bit
/// (the all-zeros assignment first).
pub fn level_interps(level: u64, pairs: &BTreeSet<String>) -> impl Iterator<Item = LevelInterp> {
    let names: Vec<String> = pairs.iter().cloned().collect();
    let total: u64 = 1u64
        .checked_shl(names.len() as u32)
        .expect("level vocabularies stay far below 64 pairs");
    (0..total).map(move |n| {
        let bits = names
            .iter()
            .enumerate()
            .map(|(j, name)| {
                let bit = (n >> (names.len() - 1 - j)) & 1 == 1;
                (name.clone(), bit)
            })
            .collect();
        LevelInterp::new(level, bits)
    })
}
