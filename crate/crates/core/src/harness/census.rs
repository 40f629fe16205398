//! Runs every check over a catalog of groups and collects the verdicts.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::construct::{alex, conj_m, core, dihedral_quandle, q_quandle, verbal_quandle};
use crate::group::{constructors, FiniteGroup, GroupError};
use crate::morphisms::{
    enumerate_quandle_antis, enumerate_quandle_antis_oracle, enumerate_quandle_auts, enumerate_quandle_auts_oracle,
};
use crate::quandle::Quandle;
use crate::verdict::{Evidence, Relationship, Tally, Verdict};

use super::{
    check_alex, check_alex_semidirect, check_conj_aaut_intersection, check_conj_no_anti, check_conj_out,
    check_conj_semidirect, check_core, check_core_abelian_full, check_core_corollaries, check_core_semidirect,
    check_dihedral_no_anti, check_f_props, check_pi_anti, check_pi_aut, check_qi, GroupData, HarnessError,
    DEFAULT_M_RANGE,
};

pub const REPORT_VERSION: u32 = 1;

/// Groups to check, plus the orders of the dihedral quandles `Rₙ` checked
/// on their own.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub groups: Vec<FiniteGroup>,
    pub dihedral_quandles: Vec<usize>,
}

impl Catalog {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `Z2..Z12`, `Z2xZ2`, `Z3xZ3`, `D3..D6`, `S3`, `S4` (when its order fits
    /// the automorphism cap), `Q8`, `heisenberg3`, and `R3..R10`.
    pub fn standard(caps: &Caps) -> Result<Self, GroupError> {
        use constructors::*;
        let mut groups = Vec::new();
        for n in 2..=12 {
            groups.push(cyclic(n)?);
        }
        groups.push(direct_product(&cyclic(2)?, &cyclic(2)?)?);
        groups.push(direct_product(&cyclic(3)?, &cyclic(3)?)?);
        for n in 3..=6 {
            groups.push(dihedral(n)?);
        }
        groups.push(symmetric(3)?);
        if 24 <= caps.group_enum {
            groups.push(symmetric(4)?);
        }
        groups.push(quaternion8()?);
        groups.push(heisenberg(3)?);
        Ok(Self { groups, dihedral_quandles: (3..=10).collect() })
    }

    pub fn names(&self) -> Vec<String> {
        self.groups
            .iter()
            .map(FiniteGroup::label)
            .chain(self.dihedral_quandles.iter().map(|n| format!("R{n}")))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub caps: Caps,
    pub m_range: Vec<i64>,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self { caps: Caps::default(), m_range: DEFAULT_M_RANGE.to_vec() }
    }
}

/// Extra work run alongside the catalog checks.
pub type Job = Box<dyn Fn(&Caps) -> Vec<Verdict> + Send + Sync>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub failed: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

impl Summary {
    fn of(checks: &[Verdict]) -> Self {
        let mut s = Summary { total: checks.len(), ..Self::default() };
        for v in checks {
            if v.is_skipped() {
                s.skipped += 1;
            } else if v.holds {
                s.holds += 1;
                s.vacuous += usize::from(v.vacuous);
            } else {
                s.failed += 1;
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub catalog: Vec<String>,
    pub checks: Vec<Verdict>,
    pub summary: Summary,
}

impl Report {
    pub fn all_hold(&self) -> bool {
        self.summary.failed == 0
    }

    /// One line per verdict, failing parts indented below their parent,
    /// then the summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for v in &self.checks {
            render_verdict(&mut out, v, 0);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total {} holds {} failed {} vacuous {} skipped {}",
            s.total, s.holds, s.failed, s.vacuous, s.skipped
        );
        out
    }
}

fn status(v: &Verdict) -> &'static str {
    if v.is_skipped() {
        "SKIP"
    } else if v.holds {
        "HOLDS"
    } else {
        "FAILS"
    }
}

/// Appends a text rendering of `v` at the given depth.
pub fn render_verdict(out: &mut String, v: &Verdict, depth: usize) {
    let indent = "  ".repeat(depth);
    let mut flags = String::new();
    if v.vacuous {
        flags.push_str(" [vacuous]");
    }
    if v.restricted {
        flags.push_str(" [restricted]");
    }
    let _ = write!(out, "{indent}{:5} {} ({}){flags}", status(v), v.theorem_id, v.inputs);
    if let Some(reason) = &v.skipped {
        let _ = write!(out, ": {reason}");
    }
    out.push('\n');
    if let Some(c) = &v.counterexample {
        if v.parts.is_empty() {
            let _ = writeln!(out, "{indent}      counterexample on {}: {}", c.group, c.detail);
        }
    }
    for p in v.parts.iter().filter(|p| p.failed()) {
        render_verdict(out, p, depth + 1);
    }
}

/// Backtracking and all-bijections enumeration agree, for automorphisms and
/// antiautomorphisms, on every quandle in `quandles` small enough for the
/// oracle.
pub fn oracle_agreement(id: &str, inputs: &str, quandles: &[Quandle], caps: &Caps) -> Result<Verdict, HarnessError> {
    let mut t = Tally::new(id, inputs, Relationship::Isomorphism);
    for q in quandles.iter().filter(|q| q.order() <= caps.oracle) {
        let auts = enumerate_quandle_auts(q, caps)? == enumerate_quandle_auts_oracle(q, caps)?;
        let antis = enumerate_quandle_antis(q, caps)? == enumerate_quandle_antis_oracle(q, caps)?;
        t.record(auts && antis, true, || {
            Evidence::new(q.label(), format!("automorphisms agree: {auts}, antiautomorphisms agree: {antis}"))
        });
    }
    Ok(t.finish())
}

/// Every distinct quandle the constructions produce from `G`.
pub fn quandles_from(d: &GroupData, m_range: &[i64]) -> Vec<Quandle> {
    let g = &d.group;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |q: Quandle| {
        if seen.insert(q.rows()) {
            out.push(q);
        }
    };
    for &m in m_range {
        push(conj_m(g, m).expect("conjugation quandles always exist"));
    }
    push(core(g).expect("core quandle always exists"));
    for phi in &d.auts {
        push(alex(g, phi).expect("automorphism given"));
        if let Ok(q) = q_quandle(g, 1, phi) {
            push(q);
        }
    }
    for psi in &d.aauts {
        for i in 2..=4 {
            if let Ok(q) = q_quandle(g, i, psi) {
                push(q);
            }
        }
    }
    for c in g.elements() {
        for i in 1..=4 {
            push(verbal_quandle(g, i, c).expect("element checked"));
        }
    }
    out
}

type Unit = Box<dyn Fn() -> Result<Verdict, HarnessError> + Send + Sync>;

fn group_units(d: &Arc<GroupData>, config: &CensusConfig) -> Vec<(String, String, Unit)> {
    let caps = config.caps;
    let mut units = Vec::new();
    let mut add = |id: &str, inputs: String, f: Unit| {
        units.push((id.to_string(), inputs, f));
    };
    for &m in &config.m_range {
        let inputs = format!("G={}, m={m}", d.label);
        let dd = Arc::clone(d);
        add("conj-semidirect", inputs.clone(), Box::new(move || check_conj_semidirect(&dd, m, &caps)));
        let dd = Arc::clone(d);
        add("conj-aaut-intersection", inputs.clone(), Box::new(move || check_conj_aaut_intersection(&dd, m)));
        let dd = Arc::clone(d);
        add("conj-no-anti", inputs, Box::new(move || check_conj_no_anti(&dd, m, &caps)));
    }
    let inputs = d.inputs();
    let dd = Arc::clone(d);
    add("conj-out", inputs.clone(), Box::new(move || check_conj_out(&dd, &caps)));
    let dd = Arc::clone(d);
    add("core", inputs.clone(), Box::new(move || check_core(&dd)));
    let dd = Arc::clone(d);
    add("core-corollaries", inputs.clone(), Box::new(move || check_core_corollaries(&dd)));
    let dd = Arc::clone(d);
    add("core-semidirect", inputs.clone(), Box::new(move || check_core_semidirect(&dd, &caps)));
    let dd = Arc::clone(d);
    add("core-abelian-full", inputs.clone(), Box::new(move || check_core_abelian_full(&dd, &caps)));
    let dd = Arc::clone(d);
    let m_range = config.m_range.clone();
    add(
        "oracle-agreement",
        inputs,
        Box::new(move || oracle_agreement("oracle-agreement", &dd.inputs(), &quandles_from(&dd, &m_range), &caps)),
    );
    for k in 0..d.auts.len() {
        let inputs = format!("G={}, phi=aut{k}", d.label);
        let dd = Arc::clone(d);
        add("alex", inputs.clone(), Box::new(move || check_alex(&dd, &dd.auts[k])));
        let dd = Arc::clone(d);
        add("alex-semidirect", inputs.clone(), Box::new(move || check_alex_semidirect(&dd, &dd.auts[k], &caps)));
        let dd = Arc::clone(d);
        add("f-props", inputs, Box::new(move || check_f_props(&dd, &dd.auts[k], &caps)));
        let dd = Arc::clone(d);
        add("q1", format!("G={}, i=1, map=aut{k}", d.label), Box::new(move || check_qi(&dd, 1, &dd.auts[k])));
    }
    for k in 0..d.aauts.len() {
        for i in 2..=4 {
            let dd = Arc::clone(d);
            add(&format!("q{i}"), format!("G={}, i={i}, map=aaut{k}", d.label), Box::new(move || check_qi(&dd, i, &dd.aauts[k])));
        }
    }
    for c in d.group.elements() {
        let inputs = format!("G={}, c={c}", d.label);
        let dd = Arc::clone(d);
        add("pi-aut", inputs.clone(), Box::new(move || check_pi_aut(&dd, c)));
        let dd = Arc::clone(d);
        add("pi-anti", inputs, Box::new(move || check_pi_anti(&dd, c)));
    }
    units
}

pub fn run_census(catalog: &Catalog, config: &CensusConfig) -> Report {
    run_census_with(catalog, config, Vec::new())
}

/// Runs the catalog checks and `extra` in parallel. Errors become skipped
/// verdicts; checks are sorted by id and inputs.
pub fn run_census_with(catalog: &Catalog, config: &CensusConfig, extra: Vec<Job>) -> Report {
    let caps = config.caps;
    let data: Vec<Result<Arc<GroupData>, (String, HarnessError)>> = catalog
        .groups
        .par_iter()
        .map(|g| GroupData::new(g.clone(), &caps).map(Arc::new).map_err(|e| (g.label(), e)))
        .collect();

    let mut checks = Vec::new();
    let mut units: Vec<(String, String, Unit)> = Vec::new();
    for d in data {
        match d {
            Ok(d) => units.extend(group_units(&d, config)),
            Err((label, e)) => checks.push(Verdict::skipped("group-data", format!("G={label}"), e.to_string())),
        }
    }
    for &n in &catalog.dihedral_quandles {
        let inputs = format!("n={n}");
        units.push(("dihedral-no-anti".into(), inputs, Box::new(move || check_dihedral_no_anti(n, &caps)) as Unit));
        units.push((
            "oracle-agreement".into(),
            format!("R{n}"),
            Box::new(move || {
                let q = dihedral_quandle(n)?;
                oracle_agreement("oracle-agreement", &format!("R{n}"), &[q], &caps)
            }) as Unit,
        ));
    }

    checks.par_extend(units.par_iter().map(|(id, inputs, f)| match f() {
        Ok(v) => v,
        Err(e) => Verdict::skipped(id.clone(), inputs.clone(), e.to_string()),
    }));
    checks.par_extend(extra.par_iter().flat_map_iter(|job| job(&caps)));
    checks.sort_by(|a, b| (&a.theorem_id, &a.inputs).cmp(&(&b.theorem_id, &b.inputs)));

    let summary = Summary::of(&checks);
    Report { version: REPORT_VERSION, catalog: catalog.names(), checks, summary }
}
