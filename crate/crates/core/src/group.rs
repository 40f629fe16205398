//! Finite groups stored as validated multiplication tables.
//!
//! Elements are the indices `0..n`. Every constructor in this module places
//! the identity at index 0; tables loaded from elsewhere may put it anywhere
//! and it is located by scan.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group order accepted unless a caller overrides it.
pub const DEFAULT_ORDER_CAP: usize = 5040;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not square (row {row} has {len} entries, expected {expected})")]
    BadShape { row: usize, len: usize, expected: usize },
    #[error("table is empty")]
    Empty,
    #[error("product {a}*{b} = {value} is outside 0..{order}")]
    NotClosed { a: usize, b: usize, value: usize, order: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("group order {order} exceeds the configured cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element {element} is outside 0..{order}")]
    BadElement { element: usize, order: usize },
    #[error("subset is not a subgroup ({a}*{b} = {product} escapes it)")]
    NotSubgroup { a: usize, b: usize, product: usize },
    #[error("subgroup is not normal: {g}*{n}*{g}^-1 leaves it")]
    NotNormal { g: usize, n: usize },
}

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: Option<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish()
    }
}

/// A sorted set of elements of some group of order `parent_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subset {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subset {
    /// Builds a subset, sorting and deduplicating `members`.
    pub fn new(parent_order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&m| m >= parent_order) {
            return Err(GroupError::BadElement { element: bad, order: parent_order });
        }
        Ok(Self { parent_order, members: set.into_iter().collect() })
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }
}

impl FiniteGroup {
    /// Validates a row-major table (`table[a][b] = a*b`) under the default order cap.
    pub fn from_table(table: Vec<Vec<usize>>, name: Option<String>) -> Result<Self, GroupError> {
        Self::from_table_capped(table, name, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_capped(
        table: Vec<Vec<usize>>,
        name: Option<String>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > cap {
            return Err(GroupError::TooLarge { order: n, cap });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::BadShape { row, len: r.len(), expected: n });
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Self::from_flat(n, flat, name)
    }

    /// Validates a flat row-major table of side `n`.
    pub(crate) fn from_flat(n: usize, table: Vec<usize>, name: Option<String>) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != n * n {
            return Err(GroupError::BadShape { row: 0, len: table.len(), expected: n * n });
        }
        for a in 0..n {
            for b in 0..n {
                let v = table[a * n + b];
                if v >= n {
                    return Err(GroupError::NotClosed { a, b, value: v, order: n });
                }
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverse.push(inv);
        }
        Ok(Self { order: n, table, identity, inverse, name })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name for reports; falls back to the order.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("G{}", self.order))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Left-to-right product of a sequence of elements.
    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The table as nested rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn check_element(&self, a: usize) -> Result<(), GroupError> {
        if a < self.order {
            Ok(())
        } else {
            Err(GroupError::BadElement { element: a, order: self.order })
        }
    }

    /// `a^k`, with negative `k` taken through the inverse.
    pub fn power(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|a| self.element_order(a) == self.order)
    }

    pub fn has_2_torsion(&self) -> bool {
        self.elements().any(|a| a != self.identity && self.mul(a, a) == self.identity)
    }

    pub fn is_central(&self, z: usize) -> bool {
        self.elements().all(|g| self.mul(z, g) == self.mul(g, z))
    }

    pub fn center(&self) -> Subset {
        let members = self.elements().filter(|&z| self.is_central(z));
        Subset::new(self.order, members).expect("center members are in range")
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.product(&[self.inv(a), self.inv(b), a, b])
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Subset {
        let mut members = vec![false; self.order];
        members[self.identity] = true;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    queue.push(y);
                }
            }
        }
        Subset::new(self.order, (0..self.order).filter(|&i| members[i])).expect("in range")
    }

    /// Subgroup generated by all commutators.
    pub fn commutator_subgroup(&self) -> Subset {
        let gens: BTreeSet<usize> = self
            .elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.generated_subgroup(&gens.into_iter().collect::<Vec<_>>())
    }

    /// The same set with `a∘b = b·a`: the transposed table.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        FiniteGroup {
            order: n,
            table,
            identity: self.identity,
            inverse: self.inverse.clone(),
            name: self.name.as_ref().map(|s| format!("{s}^op")),
        }
    }

    pub fn is_subgroup(&self, s: &Subset) -> Result<(), GroupError> {
        if s.parent_order() != self.order {
            return Err(GroupError::InvalidParameter(format!(
                "subset of a group of order {} used with a group of order {}",
                s.parent_order(),
                self.order
            )));
        }
        if !s.contains(self.identity) {
            return Err(GroupError::NotSubgroup { a: self.identity, b: self.identity, product: self.identity });
        }
        for &a in s.members() {
            for &b in s.members() {
                let p = self.mul(a, b);
                if !s.contains(p) {
                    return Err(GroupError::NotSubgroup { a, b, product: p });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self, s: &Subset) -> Result<(), GroupError> {
        self.is_subgroup(s)?;
        for g in self.elements() {
            for &x in s.members() {
                if !s.contains(self.product(&[g, x, self.inv(g)])) {
                    return Err(GroupError::NotNormal { g, n: x });
                }
            }
        }
        Ok(())
    }

    /// Quotient by a normal subgroup. Cosets are numbered in increasing
    /// order of their least member; the second value maps each element to
    /// its coset.
    pub fn quotient_by_normal(&self, normal: &Subset) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        self.is_normal(normal)?;
        let n = self.order;
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if projection[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &h in normal.members() {
                projection[self.mul(g, h)] = idx;
            }
        }
        let k = reps.len();
        let mut table = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = projection[self.mul(reps[i], reps[j])];
            }
        }
        // a quotient of a group is a group, so the table is not revalidated
        let inverse = reps.iter().map(|&r| projection[self.inv(r)]).collect();
        let quotient = FiniteGroup {
            order: k,
            table,
            identity: projection[self.identity],
            inverse,
            name: self.name.as_ref().map(|s| format!("{s}/N")),
        };
        Ok((quotient, projection))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Standard small groups with fixed element numbering.
pub mod constructors {
    use itertools::Itertools;

    use super::{FiniteGroup, GroupError, DEFAULT_ORDER_CAP};

    fn check_cap(order: usize) -> Result<(), GroupError> {
        if order > DEFAULT_ORDER_CAP {
            Err(GroupError::TooLarge { order, cap: DEFAULT_ORDER_CAP })
        } else {
            Ok(())
        }
    }

    fn build(n: usize, name: String, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup, GroupError> {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(mul(a, b));
            }
        }
        FiniteGroup::from_flat(n, table, Some(name))
    }

    /// `Z_n`; element `k` is the residue `k`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("cyclic group needs n >= 1".into()));
        }
        check_cap(n)?;
        build(n, format!("Z{n}"), |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`; `r^i s^j` has index `i + n*j`, so the
    /// rotation `r` is index 1 and the reflection `s` is index `n`.
    pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("dihedral group needs n >= 1".into()));
        }
        check_cap(2 * n)?;
        build(2 * n, format!("D{n}"), |a, b| {
            let (i1, j1) = (a % n, a / n);
            let (i2, j2) = (b % n, b / n);
            let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
            i + n * ((j1 + j2) % 2)
        })
    }

    /// Permutations of `0..n` in lexicographic order of their image arrays,
    /// with `(a*b)(x) = a(b(x))`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("symmetric group needs n >= 1".into()));
        }
        if n > 6 {
            return Err(GroupError::TooLarge { order: (1..=n).product(), cap: 720 });
        }
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed");
        let order = perms.len();
        build(order, format!("S{n}"), |a, b| {
            let prod: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
            index(&prod)
        })
    }

    /// Quaternion group numbered `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion8() -> Result<FiniteGroup, GroupError> {
        // unit index: 0 = 1, 1 = i, 2 = j, 3 = k; element = 2*unit + (sign bit)
        fn unit_mul(u: usize, v: usize) -> (bool, usize) {
            match (u, v) {
                (0, v) => (false, v),
                (u, 0) => (false, u),
                (u, v) if u == v => (true, 0),
                (1, 2) => (false, 3),
                (2, 1) => (true, 3),
                (2, 3) => (false, 1),
                (3, 2) => (true, 1),
                (3, 1) => (false, 2),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        }
        build(8, "Q8".into(), |a, b| {
            let (neg, u) = unit_mul(a / 2, b / 2);
            let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
            2 * u + sign
        })
    }

    /// Upper unitriangular 3x3 matrices over `Z_p`; the matrix with entries
    /// `(a, b, c)` above the diagonal (`a` at (1,2), `b` at (2,3), `c` at
    /// (1,3)) has index `a*p^2 + b*p + c`.
    pub fn heisenberg(p: usize) -> Result<FiniteGroup, GroupError> {
        if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
            return Err(GroupError::InvalidParameter(format!("heisenberg group needs a prime, got {p}")));
        }
        check_cap(p * p * p)?;
        let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
        build(p * p * p, format!("heisenberg{p}"), |x, y| {
            let (a1, b1, c1) = split(x);
            let (a2, b2, c2) = split(y);
            let a = (a1 + a2) % p;
            let b = (b1 + b2) % p;
            let c = (c1 + c2 + a1 * b2) % p;
            a * p * p + b * p + c
        })
    }

    /// `G x H` with `(g, h)` at index `g*|H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
        let m = h.order();
        let n = g.order() * m;
        check_cap(n)?;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(g.mul(a / m, b / m) * m + h.mul(a % m, b % m));
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity: g.identity() * m + h.identity(),
            inverse: (0..n).map(|a| g.inv(a / m) * m + h.inv(a % m)).collect(),
            name: Some(format!("{}x{}", g.label(), h.label())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::constructors::*;
    use super::*;

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_table(vec![vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn z3_table_and_swapped_entry() {
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let g = FiniteGroup::from_table(t.clone(), Some("Z3".into())).unwrap();
        assert_eq!(g.exponent(), 3);

        let mut bad = t;
        bad[1][1] = 0;
        bad[1][2] = 2;
        match FiniteGroup::from_table(bad.clone(), None) {
            Err(GroupError::NotAssociative { a, b, c }) => {
                let at = |x: usize, y: usize| bad[x][y];
                assert_ne!(at(at(a, b), c), at(a, at(b, c)));
            }
            other => panic!("expected associativity witness, got {other:?}"),
        }
    }

    #[test]
    fn shape_and_closure_errors() {
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1]], None),
            Err(GroupError::BadShape { row: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]], None),
            Err(GroupError::NotClosed { a: 1, b: 1, .. })
        ));
        // constant table: associative, no identity
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 0], vec![0, 0]], None),
            Err(GroupError::NoIdentity)
        ));
        // identity 0 but 1*1 = 1, so 1 has no inverse
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None),
            Err(GroupError::NoInverse(1))
        ));
    }

    #[test]
    fn identity_found_away_from_zero() {
        // Z2 with the identity stored at index 1
        let g = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]], None).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.inverses(), &[0, 1]);
    }

    #[test]
    fn constructor_orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(quaternion8().unwrap().order(), 8);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert!(symmetric(7).is_err());
        assert!(heisenberg(4).is_err());
        assert!(matches!(cyclic(6000), Err(GroupError::TooLarge { .. })));
    }

    #[test]
    fn heisenberg3_exponent_and_commutativity() {
        let h = heisenberg(3).unwrap();
        assert_eq!(h.order(), 27);
        // brute force: every cube is the identity, some pair fails to commute
        assert!(h.elements().all(|a| h.product(&[a, a, a]) == h.identity()));
        assert!(h.elements().any(|a| h.elements().any(|b| h.mul(a, b) != h.mul(b, a))));
        assert_eq!(h.exponent(), 3);
        assert!(!h.is_abelian());
    }

    #[test]
    fn opposite_examples() {
        let z5 = cyclic(5).unwrap();
        assert_eq!(z5.opposite().rows(), z5.rows());
        let s3 = symmetric(3).unwrap();
        let op = s3.opposite();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(op.mul(a, b), s3.mul(b, a));
            }
        }
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.opposite().opposite().rows(), d4.rows());
    }

    #[test]
    fn centers() {
        assert_eq!(symmetric(3).unwrap().center().members(), &[0]);
        assert_eq!(cyclic(7).unwrap().center().len(), 7);
        // r^2 is index 2 in D4
        assert_eq!(dihedral(4).unwrap().center().members(), &[0, 2]);
    }

    #[test]
    fn commutators_in_s3() {
        let s3 = symmetric(3).unwrap();
        // numbering: 0 e, 1 (23), 2 (12), 3 (123), 4 (132), 5 (13) in 1-based cycles
        for a in s3.elements() {
            assert_eq!(s3.commutator(a, a), 0);
            assert_eq!(s3.commutator(a, 0), 0);
        }
        // [(12),(13)] = (12)(13)(12)(13) = (123) by hand; here (12)=2, (13)=5
        assert_eq!(s3.commutator(2, 5), 3);
        assert_eq!(s3.commutator_subgroup().members(), &[0, 3, 4]);
    }

    #[test]
    fn commutator_subgroups() {
        assert_eq!(cyclic(6).unwrap().commutator_subgroup().members(), &[0]);
        let h = heisenberg(3).unwrap();
        let gg = h.commutator_subgroup();
        assert_eq!(gg.len(), 3);
        assert!(gg.is_subset_of(&h.center()));
    }

    #[test]
    fn exponents_and_torsion() {
        assert_eq!(cyclic(3).unwrap().exponent(), 3);
        assert_eq!(symmetric(3).unwrap().exponent(), 6);
        assert!(!cyclic(9).unwrap().has_2_torsion());
        assert!(dihedral(3).unwrap().has_2_torsion());
        assert!(cyclic(9).unwrap().is_cyclic());
        assert!(!direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap().is_cyclic());
    }

    #[test]
    fn power_negative() {
        let z7 = cyclic(7).unwrap();
        assert_eq!(z7.power(3, -1), 4);
        assert_eq!(z7.power(3, 0), 0);
        assert_eq!(z7.power(3, 5), 1);
    }

    #[test]
    fn quotients() {
        let s3 = symmetric(3).unwrap();
        let triv = Subset::new(6, [0]).unwrap();
        let (q, proj) = s3.quotient_by_normal(&triv).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(proj, (0..6).collect::<Vec<_>>());

        let z6 = cyclic(6).unwrap();
        let two = Subset::new(6, [0, 3]).unwrap();
        let (q, proj) = z6.quotient_by_normal(&two).unwrap();
        assert_eq!(q.order(), 3);
        assert!(q.is_cyclic());
        assert_eq!(proj, vec![0, 1, 2, 0, 1, 2]);

        let (q, _) = s3.quotient_by_normal(&s3.commutator_subgroup()).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn quotient_errors() {
        let s3 = symmetric(3).unwrap();
        let not_sub = Subset::new(6, [0, 2, 5]).unwrap();
        assert!(matches!(s3.quotient_by_normal(&not_sub), Err(GroupError::NotSubgroup { .. })));
        let not_normal = Subset::new(6, [0, 2]).unwrap();
        match s3.quotient_by_normal(&not_normal) {
            Err(GroupError::NotNormal { g, n }) => {
                assert!(!not_normal.contains(s3.product(&[g, n, s3.inv(g)])));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn products_and_quotients_survive_full_validation() {
        let pairs = [(cyclic(2).unwrap(), symmetric(3).unwrap()), (quaternion8().unwrap(), cyclic(3).unwrap())];
        for (g, h) in pairs {
            let p = direct_product(&g, &h).unwrap();
            let checked = FiniteGroup::from_table(p.rows(), p.name().map(String::from)).unwrap();
            assert_eq!(checked, p);
            let z = p.center();
            let (q, _) = p.quotient_by_normal(&z).unwrap();
            assert_eq!(FiniteGroup::from_table(q.rows(), q.name().map(String::from)).unwrap(), q);
        }
    }
}
