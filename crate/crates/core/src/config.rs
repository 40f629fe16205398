//! Size limits shared by the enumerators.

use serde::{Deserialize, Serialize};

use crate::group::DEFAULT_ORDER_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group accepted from constructors and files.
    pub order: usize,
    /// Largest group whose automorphisms are enumerated.
    pub group_enum: usize,
    /// Largest quandle whose (anti)automorphisms are enumerated by backtracking.
    pub quandle_enum: usize,
    /// Largest carrier scanned by the all-bijections oracle.
    pub oracle: usize,
    /// Largest permutation group built by closure.
    pub closure: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { order: DEFAULT_ORDER_CAP, group_enum: 64, quandle_enum: 12, oracle: 7, closure: 1_000_000 }
    }
}
