//! Quandle automorphisms and antiautomorphisms: membership tests, complete
//! enumeration, and the group structure of sets of such maps.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::Caps;
use crate::group::{FiniteGroup, GroupError};
use crate::maps::{closure_of, MapError, PointMap};
use crate::quandle::{Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map acts on {got} points but the quandle has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("group of order {group} does not share a carrier with a quandle of order {quandle}")]
    CarrierMismatch { group: usize, quandle: usize },
    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

/// Which law a quandle map must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// `f(x∗y) = f(x)∗f(y)`.
    Auto,
    /// `f(x∗y) = f(y)∗f(x)`.
    Anti,
}

/// A bijection of a quandle's carrier tagged with the law it satisfies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuandleMap {
    pub kind: Target,
    #[serde(rename = "images")]
    pub map: PointMap,
}

fn check_size(q: &Quandle, map: &PointMap) -> Result<(), MorphismError> {
    if map.len() == q.order() {
        Ok(())
    } else {
        Err(MorphismError::SizeMismatch { expected: q.order(), got: map.len() })
    }
}

fn law_holds(q: &Quandle, f: &PointMap, target: Target) -> bool {
    q.elements().all(|x| {
        q.elements().all(|y| {
            let lhs = f.apply(q.op(x, y));
            match target {
                Target::Auto => lhs == q.op(f.apply(x), f.apply(y)),
                Target::Anti => lhs == q.op(f.apply(y), f.apply(x)),
            }
        })
    })
}

pub fn is_quandle_auto(q: &Quandle, map: &PointMap) -> Result<bool, MorphismError> {
    check_size(q, map)?;
    Ok(law_holds(q, map, Target::Auto))
}

pub fn is_quandle_anti(q: &Quandle, map: &PointMap) -> Result<bool, MorphismError> {
    check_size(q, map)?;
    Ok(law_holds(q, map, Target::Anti))
}

pub fn satisfies(q: &Quandle, map: &PointMap, target: Target) -> Result<bool, MorphismError> {
    check_size(q, map)?;
    Ok(law_holds(q, map, target))
}

/// Whether a map of `g` is an automorphism or antiautomorphism of `q`,
/// which must be built on the carrier of `g`.
pub fn induced(q: &Quandle, g: &FiniteGroup, gmap: &PointMap, target: Target) -> Result<bool, MorphismError> {
    if g.order() != q.order() {
        return Err(MorphismError::CarrierMismatch { group: g.order(), quandle: q.order() });
    }
    satisfies(q, gmap, target)
}

const UNSET: usize = usize::MAX;

/// Backtracking search for bijections `f: src -> dst` with
/// `f(x ∗ y) = f(x) ∗ f(y)` (or `f(y) ∗ f(x)` when `anti`).
///
/// Whenever the images of two points are known the image of their product
/// is forced; for homomorphisms the dual operation forces images too.
/// Candidates are filtered by the element profile, which such a map
/// preserves up to a fixed permutation of its entries.
struct Search<'a> {
    n: usize,
    src: &'a Quandle,
    dst: &'a Quandle,
    anti: bool,
    allowed: Vec<bool>,
    lex: bool,
    first_only: bool,
    f: Vec<usize>,
    finv: Vec<usize>,
    trail: Vec<usize>,
    found: Vec<PointMap>,
}

impl<'a> Search<'a> {
    fn new(src: &'a Quandle, dst: &'a Quandle, anti: bool, lex: bool, first_only: bool) -> Self {
        let n = src.order();
        let sp: Vec<[usize; 4]> = src.elements().map(|x| src.profile(x)).collect();
        let dp: Vec<[usize; 4]> = dst.elements().map(|x| dst.profile(x)).collect();
        let mut allowed = vec![false; n * n];
        for x in 0..n {
            let [a, b, c, d] = sp[x];
            let want = if anti { [c, d, a, b] } else { [a, b, c, d] };
            for t in 0..n {
                allowed[x * n + t] = dp[t] == want;
            }
        }
        Self {
            n,
            src,
            dst,
            anti,
            allowed,
            lex,
            first_only,
            f: vec![UNSET; n],
            finv: vec![UNSET; n],
            trail: Vec::with_capacity(n),
            found: Vec::new(),
        }
    }

    fn image_of_product(&self, a: usize, b: usize) -> usize {
        let (fa, fb) = (self.f[a], self.f[b]);
        if self.anti {
            self.dst.op(fb, fa)
        } else {
            self.dst.op(fa, fb)
        }
    }

    fn set(&mut self, x: usize, t: usize, work: &mut Vec<usize>) -> bool {
        if self.f[x] != UNSET {
            return self.f[x] == t;
        }
        if self.finv[t] != UNSET || !self.allowed[x * self.n + t] {
            return false;
        }
        self.f[x] = t;
        self.finv[t] = x;
        self.trail.push(x);
        work.push(x);
        true
    }

    /// Assigns `f(x) = t` and everything it forces.
    fn assign(&mut self, x: usize, t: usize) -> bool {
        let mut work = Vec::new();
        if !self.set(x, t, &mut work) {
            return false;
        }
        while let Some(x) = work.pop() {
            let mut i = 0;
            while i < self.trail.len() {
                let y = self.trail[i];
                i += 1;
                for (a, b) in [(x, y), (y, x)] {
                    let c = self.src.op(a, b);
                    let img = self.image_of_product(a, b);
                    if !self.set(c, img, &mut work) {
                        return false;
                    }
                    if !self.anti {
                        let c = self.src.dual_op(a, b);
                        let img = self.dst.dual_op(self.f[a], self.f[b]);
                        if !self.set(c, img, &mut work) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("non-empty trail");
            self.finv[self.f[x]] = UNSET;
            self.f[x] = UNSET;
        }
    }

    fn candidates(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&t| self.finv[t] == UNSET && self.allowed[x * self.n + t])
    }

    fn next_point(&self) -> usize {
        let mut unassigned = (0..self.n).filter(|&x| self.f[x] == UNSET);
        if self.lex {
            return unassigned.next().expect("search not complete");
        }
        unassigned.min_by_key(|&x| self.candidates(x).count()).expect("search not complete")
    }

    fn run(&mut self) {
        if self.trail.len() == self.n {
            self.found.push(PointMap::from_trusted(self.f.clone()));
            return;
        }
        let x = self.next_point();
        let options: Vec<usize> = self.candidates(x).collect();
        for t in options {
            let mark = self.trail.len();
            if self.assign(x, t) {
                self.run();
            }
            self.undo_to(mark);
            if self.first_only && !self.found.is_empty() {
                return;
            }
        }
    }
}

fn factorial_exceeds(n: usize, bound: usize) -> bool {
    let mut acc: usize = 1;
    for k in 2..=n {
        acc = match acc.checked_mul(k) {
            Some(v) if v <= bound => v,
            _ => return true,
        };
    }
    false
}

fn enumerate(q: &Quandle, target: Target, caps: &Caps) -> Result<Vec<PointMap>, MorphismError> {
    let n = q.order();
    if n > caps.quandle_enum {
        return Err(MorphismError::CapExceeded { what: "quandle", size: n, cap: caps.quandle_enum });
    }
    if target == Target::Auto && q.is_trivial() && factorial_exceeds(n, caps.closure) {
        return Err(MorphismError::CapExceeded { what: "automorphisms of a trivial quandle", size: n, cap: caps.closure });
    }
    let mut search = Search::new(q, q, target == Target::Anti, false, false);
    search.run();
    let mut found = search.found;
    found.sort();
    debug_assert!(found.iter().all(|f| law_holds(q, f, target)));
    Ok(found)
}

/// All automorphisms of `q`, sorted.
pub fn enumerate_quandle_auts(q: &Quandle, caps: &Caps) -> Result<Vec<PointMap>, MorphismError> {
    enumerate(q, Target::Auto, caps)
}

/// All antiautomorphisms of `q`, sorted.
pub fn enumerate_quandle_antis(q: &Quandle, caps: &Caps) -> Result<Vec<PointMap>, MorphismError> {
    enumerate(q, Target::Anti, caps)
}

fn oracle(q: &Quandle, target: Target, caps: &Caps) -> Result<Vec<PointMap>, MorphismError> {
    let n = q.order();
    if n > caps.oracle {
        return Err(MorphismError::CapExceeded { what: "oracle carrier", size: n, cap: caps.oracle });
    }
    Ok((0..n).permutations(n).map(PointMap::from_trusted).filter(|f| law_holds(q, f, target)).collect())
}

/// Automorphisms by scanning all `n!` bijections.
pub fn enumerate_quandle_auts_oracle(q: &Quandle, caps: &Caps) -> Result<Vec<PointMap>, MorphismError> {
    oracle(q, Target::Auto, caps)
}

/// Antiautomorphisms by scanning all `n!` bijections.
pub fn enumerate_quandle_antis_oracle(q: &Quandle, caps: &Caps) -> Result<Vec<PointMap>, MorphismError> {
    oracle(q, Target::Anti, caps)
}

/// The lexicographically least isomorphism `a -> b`, if any.
pub fn are_isomorphic(a: &Quandle, b: &Quandle) -> Option<PointMap> {
    if a.order() != b.order() {
        return None;
    }
    let mut search = Search::new(a, b, false, true, true);
    search.run();
    search.found.into_iter().next()
}

/// Closure of `maps` under composition, with its multiplication table.
/// Members are sorted, so the identity is element 0.
pub fn closure_group(maps: &[PointMap], n: usize, caps: &Caps) -> Result<(Vec<PointMap>, FiniteGroup), MorphismError> {
    let members = closure_of(maps, n, caps.closure)?;
    let index: HashMap<&PointMap, usize> = members.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let k = members.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &members {
        for b in &members {
            table.push(index[&a.compose(b)]);
        }
    }
    let group = FiniteGroup::from_flat(k, table, Some(format!("closure{k}")))?;
    Ok((members, group))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectReport {
    pub normal_part_size: usize,
    pub complement_size: usize,
    pub all_automorphisms: bool,
    pub normalized: bool,
    pub intersection_trivial: bool,
    pub closure_size: usize,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_clause: Option<String>,
}

/// Checks that the closure of `normal ∪ complement` inside `Aut(q)` is the
/// internal semidirect product of the two given sets: both consist of
/// automorphisms, `complement` conjugates `normal` into itself, they meet
/// only in the identity, and the closure has `|normal|·|complement|`
/// elements. The inputs are deduplicated first.
pub fn semidirect_verify(normal: &[PointMap], complement: &[PointMap], q: &Quandle, caps: &Caps) -> SemidirectReport {
    let n_set: HashSet<&PointMap> = normal.iter().collect();
    let k_set: HashSet<&PointMap> = complement.iter().collect();
    let mut report = SemidirectReport {
        normal_part_size: n_set.len(),
        complement_size: k_set.len(),
        all_automorphisms: true,
        normalized: true,
        intersection_trivial: true,
        closure_size: 0,
        verdict: false,
        failing_clause: None,
    };
    if let Some(bad) = n_set.iter().chain(k_set.iter()).find(|m| m.len() != q.order() || !law_holds(q, m, Target::Auto)) {
        report.all_automorphisms = false;
        report.failing_clause = Some(format!("{bad:?} is not an automorphism of {}", q.label()));
        return report;
    }
    'outer: for k in &k_set {
        let k_inv = k.inverse();
        for m in &n_set {
            let conj = k.compose(m).compose(&k_inv);
            if !n_set.contains(&conj) {
                report.normalized = false;
                report.failing_clause = Some(format!("{k:?} conjugates {m:?} outside the normal part"));
                break 'outer;
            }
        }
    }
    if let Some(common) = n_set.intersection(&k_set).find(|m| !m.is_identity()) {
        report.intersection_trivial = false;
        report.failing_clause.get_or_insert(format!("{common:?} lies in both parts"));
    }
    let gens: Vec<PointMap> = n_set.iter().chain(k_set.iter()).map(|m| (*m).clone()).collect();
    match closure_of(&gens, q.order(), caps.closure) {
        Ok(c) => report.closure_size = c.len(),
        Err(e) => {
            report.failing_clause.get_or_insert(e.to_string());
            return report;
        }
    }
    let expected = report.normal_part_size * report.complement_size;
    if report.closure_size != expected {
        report.failing_clause.get_or_insert(format!("closure has {} elements, expected {expected}", report.closure_size));
    }
    report.verdict = report.failing_clause.is_none();
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnOutReport {
    pub inn_size: usize,
    pub aut_size: u128,
    pub out_index: u128,
    pub inn_normal: bool,
}

/// `|Inn(q)|`, `|Aut(q)|` and their quotient. For a trivial quandle the
/// automorphism group is the full symmetric group and is not enumerated.
pub fn inn_out_report(q: &Quandle, caps: &Caps) -> Result<InnOutReport, MorphismError> {
    if q.is_trivial() {
        let aut_size = (1..=q.order() as u128).product::<u128>();
        return Ok(InnOutReport { inn_size: 1, aut_size, out_index: aut_size, inn_normal: true });
    }
    let inn = q.inn_group(caps.closure)?;
    let auts = enumerate_quandle_auts(q, caps)?;
    let inn_set: HashSet<&PointMap> = inn.iter().collect();
    let inn_normal = inn.iter().all(|m| auts.binary_search(m).is_ok())
        && auts.iter().all(|a| {
            let a_inv = a.inverse();
            inn.iter().all(|m| inn_set.contains(&a.compose(m).compose(&a_inv)))
        });
    let (inn_size, aut_size) = (inn.len(), auts.len());
    if aut_size % inn_size != 0 {
        return Ok(InnOutReport { inn_size, aut_size: aut_size as u128, out_index: 0, inn_normal: false });
    }
    Ok(InnOutReport { inn_size, aut_size: aut_size as u128, out_index: (aut_size / inn_size) as u128, inn_normal })
}
