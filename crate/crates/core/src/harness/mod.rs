//! One executable check per claim relating group maps to quandle maps.
//!
//! Each check evaluates the group-theoretic predicate and the quandle-side
//! scan independently and records both in a [`Verdict`]. Claims that hold
//! only in one direction are reported as failures of the two-sided check,
//! next to a `-forward` part for the implication that does hold.

mod alex;
mod census;
mod conj;
mod core_checks;
mod verbal;

use thiserror::Error;

use crate::config::Caps;
use crate::construct::ConstructionError;
use crate::group::{FiniteGroup, GroupError, Subset};
use crate::maps::{aaut_from_aut, enumerate_aut, MapError, PointMap};
use crate::morphisms::{satisfies, MorphismError, Target};
use crate::quandle::{Quandle, QuandleError};
use crate::verdict::{Evidence, Relationship, Tally, Verdict};

pub use alex::{check_alex, check_alex_semidirect, check_f_props};
pub use census::{oracle_agreement, quandles_from, render_verdict, run_census, run_census_with, Catalog, CensusConfig, Job, Report, Summary, REPORT_VERSION};
pub use conj::{check_conj_aaut_intersection, check_conj_no_anti, check_conj_out, check_conj_semidirect};
pub use core_checks::{check_core, check_core_abelian_full, check_core_corollaries, check_core_semidirect, check_dihedral_no_anti};
pub use verbal::{check_pi_anti, check_pi_aut, check_qi, commutator_central_exponent_3};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    InvalidInput(String),
}

/// A group together with the data every check needs: its automorphisms and
/// antiautomorphisms (both sorted) and its center.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub group: FiniteGroup,
    pub auts: Vec<PointMap>,
    pub aauts: Vec<PointMap>,
    pub center: Subset,
    pub label: String,
}

impl GroupData {
    pub fn new(group: FiniteGroup, caps: &Caps) -> Result<Self, HarnessError> {
        let classified = enumerate_aut(&group, caps)?;
        let aauts = aaut_from_aut(&group, &classified).into_iter().map(|m| m.map).collect();
        let auts = classified.into_iter().map(|m| m.map).collect();
        let center = group.center();
        let label = group.label();
        Ok(Self { group, auts, aauts, center, label })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Members of `Aut(G)` commuting with `phi`.
    pub fn centralizer_aut(&self, phi: &PointMap) -> Vec<&PointMap> {
        self.auts.iter().filter(|m| m.commutes_with(phi)).collect()
    }

    /// Members of `AAut(G)` commuting with `phi`.
    pub fn centralizer_aaut(&self, phi: &PointMap) -> Vec<&PointMap> {
        self.aauts.iter().filter(|m| m.commutes_with(phi)).collect()
    }

    /// `autK` or `aautK` when `map` is the K-th member of the sorted lists,
    /// so the label can be fed back to the quandle spec parser.
    pub fn describe(&self, map: &PointMap) -> String {
        if let Ok(i) = self.auts.binary_search(map) {
            format!("aut{i}")
        } else if let Ok(i) = self.aauts.binary_search(map) {
            format!("aaut{i}")
        } else {
            format!("{map:?}")
        }
    }

    pub fn evidence(&self, detail: impl Into<String>) -> Evidence {
        Evidence::new(&self.label, detail)
    }

    pub fn map_evidence(&self, map: &PointMap, detail: impl Into<String>) -> Evidence {
        Evidence::new(&self.label, format!("{}: {}", self.describe(map), detail.into())).with_map(map.images())
    }

    pub fn inputs(&self) -> String {
        format!("G={}", self.label)
    }
}

fn law_name(target: Target) -> &'static str {
    match target {
        Target::Auto => "automorphism",
        Target::Anti => "antiautomorphism",
    }
}

/// Tallies, over `maps`, whether each map satisfies `target` on `q`
/// against a fixed claimed truth value `rhs`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn tally_maps<'a>(
    id: &str,
    inputs: &str,
    relationship: Relationship,
    data: &GroupData,
    q: &Quandle,
    maps: impl IntoIterator<Item = &'a PointMap>,
    target: Target,
    rhs: bool,
) -> Verdict {
    tally_pred(id, inputs, relationship, data, q, maps, target, |_| rhs)
}

/// Like [`tally_maps`] with a per-map claimed side.
#[allow(clippy::too_many_arguments)]
pub(crate) fn tally_pred<'a>(
    id: &str,
    inputs: &str,
    relationship: Relationship,
    data: &GroupData,
    q: &Quandle,
    maps: impl IntoIterator<Item = &'a PointMap>,
    target: Target,
    rhs: impl Fn(&PointMap) -> bool,
) -> Verdict {
    let mut t = Tally::new(id, inputs, relationship);
    for f in maps {
        let lhs = satisfies(q, f, target).expect("maps share the carrier");
        let r = rhs(f);
        t.record(lhs, r, || {
            data.map_evidence(f, format!("is {}{} of {}; predicate {r}", if lhs { "" } else { "not " }, law_name(target), q.label()))
        });
    }
    t.finish()
}

/// A single structural sub-check: `lhs` is what was computed and the claim
/// is that it is true.
pub(crate) fn structural(id: &str, inputs: &str, relationship: Relationship, ok: bool, evidence: Evidence) -> Verdict {
    Verdict::single(id, inputs, relationship, ok, true, evidence)
}

/// Parameters for [`run_check`]. A missing parameter that the check
/// quantifies over is iterated over all values.
#[derive(Debug, Clone, Default)]
pub struct CheckParams {
    pub m: Option<i64>,
    /// Index of the base map in the sorted automorphism (or, for `qi`
    /// with `i > 1`, antiautomorphism) list.
    pub map: Option<usize>,
    pub i: Option<usize>,
    pub c: Option<usize>,
    pub n: Option<usize>,
}

/// Identifiers accepted by [`run_check`].
pub const CHECK_IDS: [&str; 16] = [
    "conj-semidirect",
    "conj-out",
    "conj-aaut-intersection",
    "conj-no-anti",
    "alex",
    "alex-semidirect",
    "f-props",
    "core",
    "core-corollaries",
    "dihedral-no-anti",
    "core-semidirect",
    "core-abelian-full",
    "qi",
    "pi-aut",
    "pi-anti",
    "oracle-agreement",
];

pub const DEFAULT_M_RANGE: [i64; 6] = [-2, -1, 0, 1, 2, 3];

fn all_or<T: Clone>(given: Option<T>, all: impl IntoIterator<Item = T>) -> Vec<T> {
    match given {
        Some(v) => vec![v],
        None => all.into_iter().collect(),
    }
}

fn pick<T>(list: &[T], index: usize, what: &str) -> Result<(), HarnessError> {
    if index < list.len() {
        Ok(())
    } else {
        Err(HarnessError::InvalidInput(format!("{what} index {index} out of range ({} available)", list.len())))
    }
}

fn combine(id: &str, inputs: String, relationship: Relationship, mut verdicts: Vec<Verdict>) -> Verdict {
    if verdicts.len() == 1 {
        verdicts.pop().expect("one verdict")
    } else {
        Verdict::composite(id, inputs, relationship, verdicts)
    }
}

/// Runs the check `id`. `data` is required for every check except
/// `dihedral-no-anti`, which takes `params.n`.
pub fn run_check(id: &str, data: Option<&GroupData>, params: &CheckParams, caps: &Caps) -> Result<Verdict, HarnessError> {
    if id == "dihedral-no-anti" {
        let n = params.n.ok_or_else(|| HarnessError::InvalidInput("dihedral-no-anti needs n".into()))?;
        return check_dihedral_no_anti(n, caps);
    }
    if !CHECK_IDS.contains(&id) {
        return Err(HarnessError::UnknownCheck(id.to_string()));
    }
    let d = data.ok_or_else(|| HarnessError::InvalidInput(format!("{id} needs a group")))?;
    let ms = all_or(params.m, DEFAULT_M_RANGE);
    let phis = all_or(params.map, 0..d.auts.len());
    let cs = all_or(params.c, d.group.elements());
    if let Some(c) = params.c {
        d.group.check_element(c)?;
    }
    if let Some(k) = params.map {
        pick(&d.auts, k, "map")?;
    }
    let rel = Relationship::Iff;
    let results: Vec<Verdict> = match id {
        "conj-semidirect" => ms.iter().map(|&m| check_conj_semidirect(d, m, caps)).collect::<Result<_, _>>()?,
        "conj-out" => vec![check_conj_out(d, caps)?],
        "conj-aaut-intersection" => ms.iter().map(|&m| check_conj_aaut_intersection(d, m)).collect::<Result<_, _>>()?,
        "conj-no-anti" => ms.iter().map(|&m| check_conj_no_anti(d, m, caps)).collect::<Result<_, _>>()?,
        "alex" => phis.iter().map(|&k| check_alex(d, &d.auts[k])).collect::<Result<_, _>>()?,
        "alex-semidirect" => phis.iter().map(|&k| check_alex_semidirect(d, &d.auts[k], caps)).collect::<Result<_, _>>()?,
        "f-props" => phis.iter().map(|&k| check_f_props(d, &d.auts[k], caps)).collect::<Result<_, _>>()?,
        "core" => vec![check_core(d)?],
        "core-corollaries" => vec![check_core_corollaries(d)?],
        "core-semidirect" => vec![check_core_semidirect(d, caps)?],
        "core-abelian-full" => vec![check_core_abelian_full(d, caps)?],
        "qi" => {
            let is = all_or(params.i, 1..=4);
            let mut out = Vec::new();
            for i in is {
                let bases = if i == 1 { &d.auts } else { &d.aauts };
                let ks = all_or(params.map, 0..bases.len());
                for k in ks {
                    pick(bases, k, "map")?;
                    out.push(check_qi(d, i, &bases[k])?);
                }
            }
            out
        }
        "pi-aut" => cs.iter().map(|&c| check_pi_aut(d, c)).collect::<Result<_, _>>()?,
        "pi-anti" => cs.iter().map(|&c| check_pi_anti(d, c)).collect::<Result<_, _>>()?,
        "oracle-agreement" => vec![oracle_agreement(id, &d.inputs(), &quandles_from(d, &ms), caps)?],
        _ => unreachable!("id validated above"),
    };
    Ok(combine(id, d.inputs(), rel, results))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::*;

    fn data(g: FiniteGroup) -> GroupData {
        GroupData::new(g, &Caps::default()).unwrap()
    }

    #[test]
    fn group_data_lists_are_sorted_and_sized() {
        let d = data(symmetric(3).unwrap());
        assert_eq!(d.auts.len(), 6);
        assert_eq!(d.aauts.len(), 6);
        assert!(d.auts.windows(2).all(|w| w[0] < w[1]));
        assert!(d.aauts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(d.describe(&PointMap::identity(6)), "aut0");
    }

    #[test]
    fn run_check_dispatch() {
        let caps = Caps::default();
        let d = data(symmetric(3).unwrap());
        let v = run_check("core", Some(&d), &CheckParams::default(), &caps).unwrap();
        assert!(v.holds, "{v:?}");
        assert!(matches!(run_check("nope", Some(&d), &CheckParams::default(), &caps), Err(HarnessError::UnknownCheck(_))));
        assert!(run_check("core", None, &CheckParams::default(), &caps).is_err());
        let v = run_check("dihedral-no-anti", None, &CheckParams { n: Some(6), ..Default::default() }, &caps).unwrap();
        assert!(v.holds);
        let bad = CheckParams { map: Some(99), ..Default::default() };
        assert!(run_check("alex", Some(&d), &bad, &caps).is_err());
    }
}
