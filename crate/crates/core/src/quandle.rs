//! Finite quandles as validated operation tables.
//!
//! Tables are indexed by the left operand: `op(x, y) = x ∗ y`. The dual
//! operation `∗⁻¹` is stored alongside, defined by `(x ∗ y) ∗⁻¹ y = x`.

use std::fmt;

use thiserror::Error;

use crate::maps::{closure_of, MapError, PointMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("row {row} has {len} entries, expected {expected}")]
    BadShape { row: usize, len: usize, expected: usize },
    #[error("a quandle needs at least one element")]
    Empty,
    #[error("entry {x} * {y} = {value} is out of range")]
    OutOfRange { x: usize, y: usize, value: usize },
    #[error("idempotency fails: {x} * {x} != {x}")]
    Q1Fail { x: usize },
    #[error("right translation by {y} is not a bijection")]
    Q2Fail { y: usize },
    #[error("right self-distributivity fails at x={x}, y={y}, z={z}")]
    Q3Fail { x: usize, y: usize, z: usize },
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Quandle {
    order: usize,
    op: Vec<usize>,
    dual: Vec<usize>,
    name: Option<String>,
}

impl fmt::Debug for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quandle({}, order {})", self.label(), self.order)
    }
}

impl Quandle {
    pub fn from_table(table: Vec<Vec<usize>>, name: Option<String>) -> Result<Self, QuandleError> {
        let n = table.len();
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(QuandleError::BadShape { row, len: r.len(), expected: n });
            }
        }
        Self::from_flat(n, table.into_iter().flatten().collect(), name)
    }

    /// Validates Q1, Q2 and Q3 in that order, reporting the first witness.
    pub(crate) fn from_flat(n: usize, op: Vec<usize>, name: Option<String>) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        debug_assert_eq!(op.len(), n * n);
        for x in 0..n {
            for y in 0..n {
                let value = op[x * n + y];
                if value >= n {
                    return Err(QuandleError::OutOfRange { x, y, value });
                }
            }
        }
        for x in 0..n {
            if op[x * n + x] != x {
                return Err(QuandleError::Q1Fail { x });
            }
        }
        let mut dual = vec![usize::MAX; n * n];
        for y in 0..n {
            for x in 0..n {
                let slot = &mut dual[op[x * n + y] * n + y];
                if *slot != usize::MAX {
                    return Err(QuandleError::Q2Fail { y });
                }
                *slot = x;
            }
        }
        let at = |a: usize, b: usize| op[a * n + b];
        for x in 0..n {
            for y in 0..n {
                let xy = at(x, y);
                for z in 0..n {
                    if at(xy, z) != at(at(x, z), at(y, z)) {
                        return Err(QuandleError::Q3Fail { x, y, z });
                    }
                }
            }
        }
        Ok(Self { order: n, op, dual, name })
    }

    /// `Tₙ`: `x ∗ y = x`.
    pub fn trivial(n: usize) -> Result<Self, QuandleError> {
        let op = (0..n).flat_map(|x| std::iter::repeat_n(x, n)).collect();
        Self::from_flat(n, op, Some(format!("T{n}")))
    }

    /// The same carrier with `∗⁻¹` as its operation.
    pub fn dual(&self) -> Quandle {
        Quandle {
            order: self.order,
            op: self.dual.clone(),
            dual: self.op.clone(),
            name: Some(format!("{}^-1", self.label())),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("quandle{}", self.order))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y]
    }

    #[inline]
    pub fn dual_op(&self, x: usize, y: usize) -> usize {
        self.dual[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn dual_rows(&self) -> Vec<Vec<usize>> {
        self.dual.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.elements().flat_map(move |x| self.elements().map(move |y| (x, y)))
    }

    pub fn is_commutative(&self) -> bool {
        self.pairs().all(|(x, y)| self.op(x, y) == self.op(y, x))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.pairs().all(|(x, y)| self.dual_op(x, y) == self.dual_op(y, x))
    }

    /// `∗ = ∗⁻¹`.
    pub fn is_involutory(&self) -> bool {
        self.op == self.dual
    }

    pub fn is_trivial(&self) -> bool {
        self.pairs().all(|(x, y)| self.op(x, y) == x)
    }

    /// `x ↦ x ∗ y`.
    pub fn right_translation(&self, y: usize) -> PointMap {
        PointMap::from_trusted(self.elements().map(|x| self.op(x, y)).collect())
    }

    /// The group generated by all right translations, sorted.
    pub fn inn_group(&self, cap: usize) -> Result<Vec<PointMap>, QuandleError> {
        let gens: Vec<PointMap> = self.elements().map(|y| self.right_translation(y)).collect();
        Ok(closure_of(&gens, self.order, cap)?)
    }

    /// Counts used to prune isomorphism searches:
    /// `(|{z : z∗x = z}|, |{z : x∗z = x}|, |{z : x∗z = z}|, |{w : w∗x = x}|)`.
    pub fn profile(&self, x: usize) -> [usize; 4] {
        let mut p = [0; 4];
        for z in self.elements() {
            p[0] += usize::from(self.op(z, x) == z);
            p[1] += usize::from(self.op(x, z) == x);
            p[2] += usize::from(self.op(x, z) == z);
            p[3] += usize::from(self.op(z, x) == x);
        }
        p
    }
}
