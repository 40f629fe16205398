//! Checks on the `m`-conjugation quandle.

use std::collections::HashSet;

use crate::config::Caps;
use crate::construct::conj_m;
use crate::maps::{build_h, f_ab, inner_auts, out_reps_from, PointMap};
use crate::morphisms::{
    enumerate_quandle_antis, enumerate_quandle_antis_oracle, inn_out_report, satisfies, semidirect_verify, MorphismError,
    Target,
};
use crate::verdict::{Relationship, Tally, Verdict};

use super::{structural, GroupData, HarnessError};

/// Multiplications by central elements together with `Aut(G)` form a
/// semidirect product inside `Aut(Conj_m(G))`.
pub fn check_conj_semidirect(d: &GroupData, m: i64, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "conj-semidirect";
    let inputs = format!("G={}, m={m}", d.label);
    let g = &d.group;
    let q = conj_m(g, m)?;
    let h = build_h(g);
    let report = semidirect_verify(&h, &d.auts, &q, caps);
    let detail = match &report.failing_clause {
        Some(c) => c.clone(),
        None => format!("|H|={} |Aut(G)|={} closure {}", report.normal_part_size, report.complement_size, report.closure_size),
    };
    let embedding = structural(&format!("{id}/embedding"), &inputs, Relationship::SubgroupEmbedding, report.verdict, d.evidence(detail))
        .with_note(serde_json::to_string(&report).expect("report serializes"));

    // φ f_a φ⁻¹ = f_{φ(a)}
    let mut t = Tally::new(format!("{id}/conjugation"), inputs.clone(), Relationship::SubgroupEmbedding);
    let e = g.identity();
    for phi in &d.auts {
        let phi_inv = phi.inverse();
        for &a in d.center.members() {
            let lhs = phi.compose(&f_ab(g, a, e)).compose(&phi_inv) == f_ab(g, phi.apply(a), e);
            t.record(lhs, true, || d.map_evidence(phi, format!("conjugating f_{a}")).with_elements([a]));
        }
    }
    Ok(Verdict::composite(id, inputs, Relationship::SubgroupEmbedding, vec![embedding, t.finish()]))
}

/// Central multiplications times outer automorphism representatives embed
/// in `Aut(Conj(G))/Inn(Conj(G))`.
pub fn check_conj_out(d: &GroupData, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "conj-out";
    let inputs = d.inputs();
    let g = &d.group;
    let q = conj_m(g, 1)?;
    let h = build_h(g);
    let reps = out_reps_from(&d.auts, &inner_auts(g));
    let inn = q.inn_group(caps.closure)?;

    let products: Vec<(usize, usize, PointMap)> = h
        .iter()
        .enumerate()
        .flat_map(|(i, f)| reps.iter().enumerate().map(move |(j, r)| (i, j, f.compose(r))))
        .collect();

    let mut autos = Tally::new(format!("{id}/automorphisms"), inputs.clone(), Relationship::SubgroupEmbedding);
    for (_, _, p) in &products {
        autos.record(satisfies(&q, p, Target::Auto)?, true, || d.map_evidence(p, "product is not an automorphism"));
    }

    // distinct pairs must land in distinct cosets of Inn(Conj(G))
    let coset_key = |p: &PointMap| inn.iter().map(|i| p.compose(i)).min().expect("Inn contains the identity");
    let mut keys = HashSet::new();
    let mut clash = None;
    for (i, j, p) in &products {
        if !keys.insert(coset_key(p)) && clash.is_none() {
            clash = Some((*i, *j));
        }
    }
    let injective = structural(
        &format!("{id}/coset-injective"),
        &inputs,
        Relationship::SubgroupEmbedding,
        clash.is_none(),
        match clash {
            Some((i, j)) => d.evidence(format!("pair (H[{i}], rep {j}) repeats a coset")),
            None => d.evidence(format!("{} pairs in distinct cosets of Inn of order {}", products.len(), inn.len())),
        },
    );

    let sizes = match inn_out_report(&q, caps) {
        Ok(r) => {
            let expected = (h.len() * reps.len()) as u128;
            let ok = r.inn_normal && r.out_index != 0 && r.out_index % expected == 0;
            structural(
                &format!("{id}/divides"),
                &inputs,
                Relationship::SubgroupEmbedding,
                ok,
                d.evidence(format!("|H||Out(G)| = {expected}, |Aut(Q)|/|Inn(Q)| = {}/{} = {}", r.aut_size, r.inn_size, r.out_index)),
            )
        }
        Err(MorphismError::CapExceeded { what, size, cap }) => {
            Verdict::skipped(format!("{id}/divides"), inputs.clone(), format!("{what} of size {size} exceeds cap {cap}"))
        }
        Err(e) => return Err(e.into()),
    };
    let restricted = sizes.is_skipped();
    let v = Verdict::composite(id, inputs, Relationship::SubgroupEmbedding, vec![autos.finish(), injective, sizes]);
    Ok(if restricted { v.restricted() } else { v })
}

/// Some antiautomorphism of `G` is an automorphism of `Conj_m(G)` exactly
/// when `y^{2m}` is central for every `y`.
pub fn check_conj_aaut_intersection(d: &GroupData, m: i64) -> Result<Verdict, HarnessError> {
    let id = "conj-aaut-intersection";
    let inputs = format!("G={}, m={m}", d.label);
    let g = &d.group;
    let q = conj_m(g, m)?;
    let found = d.aauts.iter().find(|psi| satisfies(&q, psi, Target::Auto).expect("same carrier"));
    let bad_y = g.elements().find(|&y| !d.center.contains(g.power(y, 2 * m)));
    let lhs = found.is_some();
    let rhs = bad_y.is_none();
    let evidence = match (found, bad_y) {
        (Some(psi), _) => d.map_evidence(psi, format!("induces an automorphism of {}", q.label())),
        (None, Some(y)) => d.evidence(format!("no antiautomorphism induces; y^(2m) not central at y={y}")).with_elements([y]),
        (None, None) => d.evidence("no antiautomorphism induces, yet every y^(2m) is central"),
    };
    Ok(Verdict::single(id, inputs, Relationship::Iff, lhs, rhs, evidence))
}

/// `Conj_m(G)` has no antiautomorphisms when `G` is non-trivial.
pub fn check_conj_no_anti(d: &GroupData, m: i64, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "conj-no-anti";
    let inputs = format!("G={}, m={m}", d.label);
    let n = d.order();
    if n < 2 {
        return Ok(Verdict::skipped(id, inputs, "requires a non-trivial group"));
    }
    let q = conj_m(&d.group, m)?;
    let (antis, mode, restricted) = if n <= caps.oracle {
        (enumerate_quandle_antis_oracle(&q, caps)?, "all bijections", false)
    } else if n <= caps.quandle_enum {
        (enumerate_quandle_antis(&q, caps)?, "backtracking", false)
    } else {
        let found: Vec<PointMap> = d
            .auts
            .iter()
            .chain(&d.aauts)
            .filter(|f| satisfies(&q, f, Target::Anti).expect("same carrier"))
            .cloned()
            .collect();
        (found, "maps induced by Aut(G) and AAut(G) only", true)
    };
    let evidence = match antis.first() {
        Some(f) => d.map_evidence(f, format!("antiautomorphism of {} ({mode})", q.label())),
        None => d.evidence(format!("no antiautomorphism of {} ({mode})", q.label())),
    };
    let v = Verdict::single(id, inputs, Relationship::Emptiness, antis.is_empty(), true, evidence);
    Ok(if restricted { v.restricted().with_note("restricted scan: quandle exceeds the enumeration cap") } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::*;
    use crate::group::FiniteGroup;

    fn data(g: FiniteGroup) -> GroupData {
        GroupData::new(g, &Caps::default()).unwrap()
    }

    #[test]
    fn semidirect_examples() {
        let caps = Caps::default();
        let v = check_conj_semidirect(&data(symmetric(3).unwrap()), 1, &caps).unwrap();
        assert!(v.holds, "{v:?}");
        let v = check_conj_semidirect(&data(dihedral(4).unwrap()), 1, &caps).unwrap();
        assert!(v.holds);
        assert!(v.parts[0].notes[0].contains("\"closure_size\":16"));
        assert!(check_conj_semidirect(&data(cyclic(4).unwrap()), 2, &caps).unwrap().holds);
    }

    #[test]
    fn out_examples() {
        let caps = Caps::default();
        for g in [symmetric(3).unwrap(), cyclic(4).unwrap(), cyclic(1).unwrap(), quaternion8().unwrap()] {
            let v = check_conj_out(&data(g), &caps).unwrap();
            assert!(v.holds && !v.restricted, "{v:?}");
        }
        let v = check_conj_out(&data(symmetric(4).unwrap()), &caps).unwrap();
        assert!(v.holds && v.restricted);
    }

    #[test]
    fn intersection_examples() {
        let v = check_conj_aaut_intersection(&data(symmetric(3).unwrap()), 1).unwrap();
        assert!(v.holds && !v.lhs && !v.rhs);
        let v = check_conj_aaut_intersection(&data(cyclic(6).unwrap()), 2).unwrap();
        assert!(v.holds && v.lhs && v.rhs);
        let v = check_conj_aaut_intersection(&data(dihedral(4).unwrap()), 2).unwrap();
        assert!(v.holds && v.lhs && v.rhs);
    }

    #[test]
    fn no_anti_examples() {
        let caps = Caps::default();
        assert!(check_conj_no_anti(&data(cyclic(2).unwrap()), 1, &caps).unwrap().holds);
        assert!(check_conj_no_anti(&data(symmetric(3).unwrap()), 1, &caps).unwrap().holds);
        assert!(check_conj_no_anti(&data(cyclic(1).unwrap()), 1, &caps).unwrap().is_skipped());
        let v = check_conj_no_anti(&data(symmetric(4).unwrap()), 1, &caps).unwrap();
        assert!(v.holds && v.restricted);
    }
}
