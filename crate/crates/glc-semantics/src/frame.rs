use std::collections::{BTreeMap, BTreeSet};

use glc_formula_core::SElem;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error("formula is not in unit chain expansion")]
    NotUnitChainExpansion,
    #[error("chain of length {chain_len} exceeds frame depth {depth}")]
    DepthExceeded { chain_len: usize, depth: usize },
    #[error("frame space needs {bits_needed} bits but the budget is {budget_bits}")]
    BudgetExceeded { bits_needed: u64, budget_bits: u32 },
}

/// A stack of per-level truth assignments.
///
/// Level `k` stores one bit per literal pair, keyed by the pair's plain
/// name; the plain literal takes that bit and its complement takes the
/// opposite one, so the two can never agree. Pairs a level does not
/// mention default to 0 for the plain literal (1 for the complement),
/// which keeps every lookup total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    levels: Vec<BTreeMap<String, bool>>,
}

impl Frame {
    /// Builds a frame from per-level plain-literal bits. A frame covers at
    /// least one level, so an empty stack is promoted to one empty level.
    pub fn new(levels: Vec<BTreeMap<String, bool>>) -> Self {
        if levels.is_empty() {
            Frame {
                levels: vec![BTreeMap::new()],
            }
        } else {
            Frame { levels }
        }
    }

    /// Number of levels the frame covers (always ≥ 1).
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[BTreeMap<String, bool>] {
        &self.levels
    }

    /// The bit a single element takes at the given level. Total: the
    /// constants are fixed at every level, and uncovered pairs (or levels
    /// beyond the stack) use the 0-for-plain default.
    pub fn local_i(&self, level: usize, s: &SElem) -> u8 {
        match s {
            SElem::Top => 1,
            SElem::Bot => 0,
            SElem::Lit { name, complemented } => {
                let plain = self
                    .levels
                    .get(level)
                    .and_then(|m| m.get(name))
                    .copied()
                    .unwrap_or(false);
                u8::from(if *complemented { !plain } else { plain })
            }
        }
    }

    /// Conjoins the levelwise bits along a chain: 1 iff element `k` holds
    /// at level `k` for every index. Chains longer than the frame are
    /// rejected.
    pub fn global_j(&self, elems: &[SElem]) -> Result<u8, SemanticsError> {
        if elems.len() > self.depth() {
            return Err(SemanticsError::DepthExceeded {
                chain_len: elems.len(),
                depth: self.depth(),
            });
        }
        Ok(u8::from(
            elems
                .iter()
                .enumerate()
                .all(|(k, s)| self.local_i(k, s) == 1),
        ))
    }

    /// Renders the frame as one JSON object of the shape
    /// `{"level_0": {"a": 1, "b": 0}, "level_1": …}`.
    pub fn to_json(&self) -> String {
        let mut root = serde_json::Map::new();
        for (k, m) in self.levels.iter().enumerate() {
            let mut level = serde_json::Map::new();
            for (name, bit) in m {
                level.insert(name.clone(), serde_json::json!(u8::from(*bit)));
            }
            root.insert(format!("level_{k}"), serde_json::Value::Object(level));
        }
        serde_json::Value::Object(root).to_string()
    }
}

/// Lazily enumerates every frame over a fixed pair set and depth.
///
/// Enumeration counts through the bit patterns with level-major,
/// alphabetical-within-level significance: the all-zeros frame comes
/// first, and flipping a bit at a shallower level (or an alphabetically
/// earlier pair) moves the frame further in the order than flipping any
/// later bit.
#[derive(Debug, Clone)]
pub struct FrameSpace {
    pairs: Vec<String>,
    depth: usize,
    next: u128,
    total: u128,
}

impl FrameSpace {
    pub fn over(pairs: &BTreeSet<String>, depth: usize) -> Self {
        let depth = depth.max(1);
        let bits = (pairs.len() * depth) as u32;
        let total = 1u128.checked_shl(bits).unwrap_or(u128::MAX);
        FrameSpace {
            pairs: pairs.iter().cloned().collect(),
            depth,
            next: 0,
            total,
        }
    }

    /// Number of independent bits a frame in this space carries.
    pub fn bits(&self) -> u64 {
        (self.pairs.len() * self.depth) as u64
    }

    /// Number of frames the space contains (2^bits).
    pub fn frame_count(&self) -> u128 {
        self.total
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn pairs(&self) -> &[String] {
        &self.pairs
    }
}

impl Iterator for FrameSpace {
    type Item = Frame;

    fn next(&mut self) -> Option<Frame> {
        if self.next >= self.total {
            return None;
        }
        let n = self.next;
        self.next += 1;
        let nbits = self.pairs.len() * self.depth;
        let mut levels = Vec::with_capacity(self.depth);
        for k in 0..self.depth {
            let mut m = BTreeMap::new();
            for (j, name) in self.pairs.iter().enumerate() {
                let pos = k * self.pairs.len() + j;
                let bit = (n >> (nbits - 1 - pos)) & 1 == 1;
                m.insert(name.clone(), bit);
            }
            levels.push(m);
        }
        Some(Frame::new(levels))
    }
}
