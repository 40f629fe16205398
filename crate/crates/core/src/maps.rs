//! Bijections of a group's carrier: automorphisms, antiautomorphisms and the
//! two-sided multiplication maps `f_{a,b}(x) = a x b`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::Caps;
use crate::group::constructors::direct_product;
use crate::group::{FiniteGroup, GroupError, Subset};
use crate::verdict::{Evidence, Relationship, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("images do not form a permutation of 0..{0}")]
    NotBijective(usize),
    #[error("map acts on {got} points, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("map is not an automorphism of the group")]
    NotAutomorphism,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A permutation of `0..n`, composed right to left: `(f∘g)(x) = f(g(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PointMap {
    images: Vec<usize>,
}

impl fmt::Debug for PointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl TryFrom<Vec<usize>> for PointMap {
    type Error = MapError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(images)
    }
}

impl From<PointMap> for Vec<usize> {
    fn from(m: PointMap) -> Self {
        m.images
    }
}

impl PointMap {
    pub fn new(images: Vec<usize>) -> Result<Self, MapError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(MapError::NotBijective(n));
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_trusted(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PointMap) -> PointMap {
        assert_eq!(self.len(), other.len(), "composing maps on different carriers");
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> PointMap {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Self { images: inv }
    }

    /// `by ∘ self ∘ by⁻¹`.
    pub fn conjugate_by(&self, by: &PointMap) -> PointMap {
        by.compose(self).compose(&by.inverse())
    }

    pub fn commutes_with(&self, other: &PointMap) -> bool {
        self.len() == other.len() && (0..self.len()).all(|x| self.images[other.images[x]] == other.images[self.images[x]])
    }

    fn check_len(&self, n: usize) -> Result<(), MapError> {
        if self.len() == n {
            Ok(())
        } else {
            Err(MapError::SizeMismatch { expected: n, got: self.len() })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    Automorphism,
    Antiautomorphism,
    PlainBijection,
}

/// A bijection of a group's carrier together with its classification.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassifiedMap {
    pub kind: MapKind,
    #[serde(rename = "images")]
    pub map: PointMap,
}

impl ClassifiedMap {
    pub fn images(&self) -> &[usize] {
        self.map.images()
    }
}

/// `f(ab) = f(a) f(b)` for all `a, b`.
pub fn satisfies_hom_law(g: &FiniteGroup, f: &PointMap) -> bool {
    f.len() == g.order()
        && g.elements().all(|a| g.elements().all(|b| f.apply(g.mul(a, b)) == g.mul(f.apply(a), f.apply(b))))
}

/// `f(ab) = f(b) f(a)` for all `a, b`.
pub fn satisfies_anti_law(g: &FiniteGroup, f: &PointMap) -> bool {
    f.len() == g.order()
        && g.elements().all(|a| g.elements().all(|b| f.apply(g.mul(a, b)) == g.mul(f.apply(b), f.apply(a))))
}

/// Classifies by a full scan. A map obeying both laws (only possible when
/// the group is abelian) is reported as an automorphism.
pub fn classify(g: &FiniteGroup, map: PointMap) -> Result<ClassifiedMap, MapError> {
    map.check_len(g.order())?;
    let kind = if satisfies_hom_law(g, &map) {
        MapKind::Automorphism
    } else if satisfies_anti_law(g, &map) {
        MapKind::Antiautomorphism
    } else {
        MapKind::PlainBijection
    };
    Ok(ClassifiedMap { kind, map })
}

/// `g ↦ g⁻¹`.
pub fn inversion_map(g: &FiniteGroup) -> ClassifiedMap {
    let map = PointMap::from_trusted(g.inverses().to_vec());
    let kind = if g.is_abelian() { MapKind::Automorphism } else { MapKind::Antiautomorphism };
    ClassifiedMap { kind, map }
}

/// Greedy generating set: repeatedly add the least element not yet generated.
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut sub = g.generated_subgroup(&gens);
    while sub.len() < g.order() {
        let next = g.elements().find(|&x| !sub.contains(x)).expect("proper subgroup");
        gens.push(next);
        sub = g.generated_subgroup(&gens);
    }
    gens
}

const UNSET: usize = usize::MAX;

/// Extends generator images to a homomorphism on the subgroup they
/// generate by walking its Cayley graph. Every edge `x -> x*gen` is
/// checked, which forces the homomorphism law on the subgroup. Returns
/// `None` on an inconsistency or a collision of images.
fn extend_on_generators(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![UNSET; n];
    let mut used = vec![false; n];
    let e = g.identity();
    map[e] = e;
    used[e] = true;
    let mut queue = vec![e];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = g.mul(map[x], t);
            if map[y] == UNSET {
                if used[img] {
                    return None;
                }
                map[y] = img;
                used[img] = true;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}

fn aut_search(g: &FiniteGroup, gens: &[usize], orders: &[usize], images: &mut Vec<usize>, out: &mut Vec<PointMap>) {
    let k = images.len();
    if k == gens.len() {
        if let Some(map) = extend_on_generators(g, gens, images) {
            out.push(PointMap::from_trusted(map));
        }
        return;
    }
    let taken = extend_on_generators(g, &gens[..k], images).expect("prefix was consistent");
    let mut in_image = vec![false; g.order()];
    for &v in taken.iter().filter(|&&v| v != UNSET) {
        in_image[v] = true;
    }
    for cand in g.elements() {
        if in_image[cand] || g.element_order(cand) != orders[k] {
            continue;
        }
        images.push(cand);
        if extend_on_generators(g, &gens[..=k], images).is_some() {
            aut_search(g, gens, orders, images, out);
        }
        images.pop();
    }
}

/// All automorphisms, sorted by image array. Backtracks over the images of
/// a greedy generating set.
pub fn enumerate_aut(g: &FiniteGroup, caps: &Caps) -> Result<Vec<ClassifiedMap>, MapError> {
    if g.order() > caps.group_enum {
        return Err(MapError::CapExceeded { what: "group", size: g.order(), cap: caps.group_enum });
    }
    let gens = greedy_generators(g);
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let mut out = Vec::new();
    aut_search(g, &gens, &orders, &mut Vec::with_capacity(gens.len()), &mut out);
    out.sort();
    debug_assert!(out.iter().all(|m| satisfies_hom_law(g, m)));
    Ok(out.into_iter().map(|map| ClassifiedMap { kind: MapKind::Automorphism, map }).collect())
}

/// Automorphisms by scanning every bijection. Independent of [`enumerate_aut`].
pub fn enumerate_aut_oracle(g: &FiniteGroup, caps: &Caps) -> Result<Vec<ClassifiedMap>, MapError> {
    let n = g.order();
    if n > caps.oracle {
        return Err(MapError::CapExceeded { what: "oracle carrier", size: n, cap: caps.oracle });
    }
    Ok((0..n)
        .permutations(n)
        .map(PointMap::from_trusted)
        .filter(|m| satisfies_hom_law(g, m))
        .map(|map| ClassifiedMap { kind: MapKind::Automorphism, map })
        .collect())
}

/// `{φ∘ε | φ ∈ Aut(G)}`, sorted, each confirmed by an anti-law scan.
pub fn enumerate_aaut(g: &FiniteGroup, caps: &Caps) -> Result<Vec<ClassifiedMap>, MapError> {
    let auts = enumerate_aut(g, caps)?;
    Ok(aaut_from_aut(g, &auts))
}

/// Builds the antiautomorphisms from an already enumerated `Aut(G)`.
pub fn aaut_from_aut(g: &FiniteGroup, auts: &[ClassifiedMap]) -> Vec<ClassifiedMap> {
    let eps = inversion_map(g).map;
    let abelian = g.is_abelian();
    let mut out: Vec<ClassifiedMap> = auts
        .iter()
        .map(|phi| {
            let map = phi.map.compose(&eps);
            assert!(satisfies_anti_law(g, &map), "φ∘ε failed the antiautomorphism law");
            let kind = if abelian { MapKind::Automorphism } else { MapKind::Antiautomorphism };
            ClassifiedMap { kind, map }
        })
        .collect();
    out.sort_by(|a, b| a.map.cmp(&b.map));
    out
}

/// `x ↦ a x a⁻¹`.
pub fn inner_automorphism(g: &FiniteGroup, a: usize) -> PointMap {
    let a_inv = g.inv(a);
    PointMap::from_trusted(g.elements().map(|x| g.product(&[a, x, a_inv])).collect())
}

/// Distinct inner automorphisms, sorted.
pub fn inner_auts(g: &FiniteGroup) -> Vec<PointMap> {
    let set: HashSet<PointMap> = g.elements().map(|a| inner_automorphism(g, a)).collect();
    let mut v: Vec<PointMap> = set.into_iter().collect();
    v.sort();
    v
}

/// The least member of each coset of `Inn(G)` in `Aut(G)`, sorted.
pub fn out_coset_reps(g: &FiniteGroup, caps: &Caps) -> Result<Vec<ClassifiedMap>, MapError> {
    let auts = enumerate_aut(g, caps)?;
    let maps: Vec<PointMap> = auts.iter().map(|m| m.map.clone()).collect();
    let reps = out_reps_from(&maps, &inner_auts(g));
    Ok(auts.into_iter().filter(|m| reps.binary_search(&m.map).is_ok()).collect())
}

/// The least member of each coset `φ·Inn` for `φ` in the sorted list `auts`.
pub fn out_reps_from(auts: &[PointMap], inn: &[PointMap]) -> Vec<PointMap> {
    let mut covered: HashSet<PointMap> = HashSet::new();
    let mut reps = Vec::new();
    for phi in auts {
        if covered.contains(phi) {
            continue;
        }
        reps.push(phi.clone());
        for i in inn {
            covered.insert(phi.compose(i));
        }
    }
    reps
}

pub fn centralizer_in(maps: &[ClassifiedMap], phi: &PointMap) -> Vec<ClassifiedMap> {
    maps.iter().filter(|m| m.map.commutes_with(phi)).cloned().collect()
}

/// Members of `Aut(G)` commuting with `phi`.
pub fn centralizer_in_aut(g: &FiniteGroup, phi: &PointMap, caps: &Caps) -> Result<Vec<ClassifiedMap>, MapError> {
    phi.check_len(g.order())?;
    Ok(centralizer_in(&enumerate_aut(g, caps)?, phi))
}

/// Members of `AAut(G)` commuting with `phi`.
pub fn centralizer_in_aaut(g: &FiniteGroup, phi: &PointMap, caps: &Caps) -> Result<Vec<ClassifiedMap>, MapError> {
    phi.check_len(g.order())?;
    Ok(centralizer_in(&enumerate_aaut(g, caps)?, phi))
}

/// `x⁻¹ θ(x) ∈ Z(G)` for every `x`, for an arbitrary map `θ`.
pub fn is_central_map(g: &FiniteGroup, theta: &PointMap) -> bool {
    let z = g.center();
    g.elements().all(|x| z.contains(g.mul(g.inv(x), theta.apply(x))))
}

/// Whether the automorphism `theta` is central.
pub fn is_central_automorphism(g: &FiniteGroup, theta: &PointMap) -> Result<bool, MapError> {
    theta.check_len(g.order())?;
    if !satisfies_hom_law(g, theta) {
        return Err(MapError::NotAutomorphism);
    }
    Ok(is_central_map(g, theta))
}

/// Points fixed by `map`.
pub fn fix_set(g: &FiniteGroup, map: &PointMap) -> Subset {
    Subset::new(g.order(), g.elements().filter(|&x| map.apply(x) == x)).expect("in range")
}

/// `x ↦ a x b`.
pub fn f_ab(g: &FiniteGroup, a: usize, b: usize) -> PointMap {
    PointMap::from_trusted(g.elements().map(|x| g.product(&[a, x, b])).collect())
}

fn dedup_sorted(maps: impl IntoIterator<Item = PointMap>) -> Vec<PointMap> {
    let set: HashSet<PointMap> = maps.into_iter().collect();
    let mut v: Vec<PointMap> = set.into_iter().collect();
    v.sort();
    v
}

/// Left multiplications by central elements.
pub fn build_h(g: &FiniteGroup) -> Vec<PointMap> {
    let e = g.identity();
    dedup_sorted(g.center().members().iter().map(|&a| f_ab(g, a, e)))
}

/// All distinct `f_{a,b}`.
pub fn build_f(g: &FiniteGroup) -> Vec<PointMap> {
    dedup_sorted(g.elements().flat_map(|a| g.elements().map(move |b| f_ab(g, a, b))))
}

/// Closure of `{f_{a,b} | a ∈ Fix(φ), b ∈ G}` under composition.
pub fn build_f_prime(g: &FiniteGroup, phi: &PointMap, caps: &Caps) -> Result<Vec<PointMap>, MapError> {
    phi.check_len(g.order())?;
    let fix = fix_set(g, phi);
    let gens: Vec<PointMap> =
        dedup_sorted(fix.members().iter().flat_map(|&a| g.elements().map(move |b| f_ab(g, a, b))));
    closure_of(&gens, g.order(), caps.closure)
}

/// Closure of `gens` under composition (a group, since the carrier is
/// finite), sorted. The identity is always included.
///
/// Generators are added one at a time and skipped when already generated.
/// Old members only need multiplying by the new generator, so the cost is
/// roughly the group size times the number of accepted generators.
pub fn closure_of(gens: &[PointMap], n: usize, cap: usize) -> Result<Vec<PointMap>, MapError> {
    for m in gens {
        m.check_len(n)?;
    }
    let id = PointMap::identity(n);
    let mut seen: HashSet<PointMap> = HashSet::from([id.clone()]);
    let mut members = vec![id];
    let mut accepted: Vec<&PointMap> = Vec::new();
    let add = |y: PointMap, seen: &mut HashSet<PointMap>, members: &mut Vec<PointMap>| -> Result<(), MapError> {
        if !seen.contains(&y) {
            if seen.len() >= cap {
                return Err(MapError::CapExceeded { what: "closure", size: seen.len() + 1, cap });
            }
            seen.insert(y.clone());
            members.push(y);
        }
        Ok(())
    };
    for g in gens {
        if seen.contains(g) {
            continue;
        }
        accepted.push(g);
        let old = members.len();
        for i in 0..old {
            let y = members[i].compose(g);
            add(y, &mut seen, &mut members)?;
        }
        let mut head = old;
        while head < members.len() {
            for s in &accepted {
                let y = members[head].compose(s);
                add(y, &mut seen, &mut members)?;
            }
            head += 1;
        }
    }
    members.sort();
    Ok(members)
}

/// Checks `F ≅ (G × G^op)/N` with `N = {(a, a⁻¹) | a ∈ Z(G)}` through
/// `f_{a,b} ↦ [(a, b)]`: well defined, injective, onto and multiplicative.
pub fn verify_f_iso(g: &FiniteGroup) -> Result<Verdict, MapError> {
    let label = g.label();
    let n = g.order();
    let product = direct_product(g, &g.opposite())?;
    let z = g.center();
    let pair = |a: usize, b: usize| a * n + b;
    let normal = Subset::new(product.order(), z.members().iter().map(|&a| pair(a, g.inv(a))))?;
    let (quotient, projection) = product.quotient_by_normal(&normal)?;

    let f = build_f(g);
    let index: HashMap<&PointMap, usize> = f.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // Φ as a table from F-index to quotient index, filled from every pair (a, b)
    let mut phi = vec![UNSET; f.len()];
    let mut failure: Option<Evidence> = None;
    'pairs: for a in g.elements() {
        for b in g.elements() {
            let fi = index[&f_ab(g, a, b)];
            let class = projection[pair(a, b)];
            if phi[fi] == UNSET {
                phi[fi] = class;
            } else if phi[fi] != class {
                failure = Some(Evidence::new(&label, "Φ not well defined").with_elements([a, b]));
                break 'pairs;
            }
        }
    }
    if failure.is_none() {
        let mut hit = vec![false; quotient.order()];
        for &c in &phi {
            if std::mem::replace(&mut hit[c], true) {
                failure = Some(Evidence::new(&label, "Φ not injective").with_elements([c]));
                break;
            }
        }
        if failure.is_none() && hit.iter().any(|h| !h) {
            failure = Some(Evidence::new(&label, "Φ not onto"));
        }
    }
    if failure.is_none() {
        'hom: for (i, fi) in f.iter().enumerate() {
            for (j, fj) in f.iter().enumerate() {
                let k = index[&fi.compose(fj)];
                if phi[k] != quotient.mul(phi[i], phi[j]) {
                    failure = Some(Evidence::new(&label, "Φ not multiplicative").with_elements([i, j]));
                    break 'hom;
                }
            }
        }
    }
    let holds = failure.is_none();
    let evidence = failure.unwrap_or_else(|| {
        Evidence::new(&label, format!("|F| = {} = |(G x G^op)/N| = {}", f.len(), quotient.order()))
    });
    Ok(Verdict::single("f-quotient-iso", format!("G={label}"), Relationship::Isomorphism, holds, true, evidence))
}
