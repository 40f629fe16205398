//! Checks on the core quandle and the dihedral quandles.

use crate::config::Caps;
use crate::construct::{core, dihedral_quandle};
use crate::maps::{build_f, f_ab, inner_auts, out_reps_from, verify_f_iso, PointMap};
use crate::morphisms::{enumerate_quandle_antis, enumerate_quandle_auts, satisfies, semidirect_verify, Target};
use crate::verdict::{Evidence, Relationship, Tally, Verdict};

use super::{structural, tally_maps, GroupData, HarnessError};

/// Every antiautomorphism of `G` is an automorphism of `Core(G)`; a group
/// automorphism or antiautomorphism is an antiautomorphism of `Core(G)`
/// iff `G` has exponent 3, in which case the two notions coincide.
pub fn check_core(d: &GroupData) -> Result<Verdict, HarnessError> {
    let id = "core";
    let inputs = d.inputs();
    let q = core(&d.group)?;
    let exp3 = d.group.exponent() == 3;
    let part = |name: &str| format!("{id}/{name}");
    let mut parts = vec![
        tally_maps(&part("anti-induces-auto"), &inputs, Relationship::SubgroupEmbedding, d, &q, &d.aauts, Target::Auto, true),
        tally_maps(&part("anti-induces-anti"), &inputs, Relationship::Iff, d, &q, &d.aauts, Target::Anti, exp3),
        tally_maps(&part("auto-induces-anti"), &inputs, Relationship::Iff, d, &q, &d.auts, Target::Anti, exp3),
    ];
    if exp3 {
        let mut t = Tally::new(part("anti-equals-auto"), inputs.clone(), Relationship::Iff);
        for f in d.auts.iter().chain(&d.aauts) {
            let anti = satisfies(&q, f, Target::Anti)?;
            let auto = satisfies(&q, f, Target::Auto)?;
            t.record(anti, auto, || d.map_evidence(f, format!("antiautomorphism {anti}, automorphism {auto}")));
        }
        parts.push(t.finish());
    }
    Ok(Verdict::composite(id, inputs, Relationship::Iff, parts))
}

/// For cyclic `G` of order `n`: some automorphism or antiautomorphism of
/// `G` is an antiautomorphism of `Core(G)` iff `n = 3`. For centerless `G`
/// none is.
pub fn check_core_corollaries(d: &GroupData) -> Result<Verdict, HarnessError> {
    let id = "core-corollaries";
    let inputs = d.inputs();
    let g = &d.group;
    let q = core(g)?;
    let mut induced_anti = d.auts.iter().chain(&d.aauts).filter(|f| satisfies(&q, f, Target::Anti).expect("same carrier"));
    let first = induced_anti.next();
    let evidence = |what: &str| match first {
        Some(f) => d.map_evidence(f, format!("{what}: induces an antiautomorphism of {}", q.label())),
        None => d.evidence(format!("{what}: no group map induces an antiautomorphism of {}", q.label())),
    };
    let mut parts = Vec::new();
    if g.is_cyclic() {
        parts.push(
            Verdict::single(format!("{id}/cyclic"), inputs.clone(), Relationship::Iff, first.is_some(), g.order() == 3, evidence("cyclic"))
                .with_note("checked for antiautomorphisms of the core quandle, which is what the argument establishes"),
        );
    }
    if d.center.len() == 1 && g.order() > 1 {
        parts.push(Verdict::single(
            format!("{id}/centerless"),
            inputs.clone(),
            Relationship::Emptiness,
            first.is_none(),
            true,
            evidence("centerless"),
        ));
    }
    if parts.is_empty() {
        return Ok(Verdict::skipped(id, inputs, "group is neither cyclic nor centerless"));
    }
    Ok(Verdict::composite(id, inputs, Relationship::Iff, parts))
}

/// `Rₙ` has no antiautomorphisms for `n ≠ 3`; for `n = 3` its
/// antiautomorphisms are exactly its six automorphisms.
pub fn check_dihedral_no_anti(n: usize, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "dihedral-no-anti";
    let inputs = format!("n={n}");
    let q = dihedral_quandle(n)?;
    let label = q.label();
    let (antis, restricted) = if n <= caps.quandle_enum {
        (enumerate_quandle_antis(&q, caps)?, false)
    } else {
        // affine maps x -> u x + a, the known automorphisms
        let affine = (1..n)
            .flat_map(|u| (0..n).map(move |a| (u, a)))
            .filter_map(|(u, a)| PointMap::new((0..n).map(|x| (u * x + a) % n).collect()).ok());
        let found: Vec<PointMap> = affine.filter(|f| satisfies(&q, f, Target::Anti).expect("same carrier")).collect();
        (found, true)
    };
    let v = if n == 3 {
        let auts = enumerate_quandle_auts(&q, caps)?;
        let ok = antis == auts && antis.len() == 6;
        Verdict::single(
            id,
            inputs,
            Relationship::Isomorphism,
            ok,
            true,
            Evidence::new(&label, format!("{} antiautomorphisms, {} automorphisms", antis.len(), auts.len())),
        )
    } else {
        let evidence = match antis.first() {
            Some(f) => Evidence::new(&label, "antiautomorphism found").with_map(f.images()),
            None => Evidence::new(&label, "no antiautomorphism"),
        };
        Verdict::single(id, inputs, Relationship::Emptiness, antis.is_empty(), true, evidence)
    };
    Ok(if restricted { v.restricted().with_note("restricted scan over affine maps") } else { v })
}

/// `F ⋊ Out(G) ≤ Aut(Core(G))` with `F ≅ (G × G^op)/N`, plus the identity
/// `φ⁻¹ f_{a,b} φ = f_{φ⁻¹(a), φ⁻¹(b)}`.
pub fn check_core_semidirect(d: &GroupData, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "core-semidirect";
    let inputs = d.inputs();
    let g = &d.group;
    let q = core(g)?;
    let f = build_f(g);
    let reps = out_reps_from(&d.auts, &inner_auts(g));
    let report = semidirect_verify(&f, &reps, &q, caps);
    let detail = match &report.failing_clause {
        Some(c) => c.clone(),
        None => format!("|F|={} |Out(G)|={} closure {}", report.normal_part_size, report.complement_size, report.closure_size),
    };
    let embedding = structural(&format!("{id}/embedding"), &inputs, Relationship::SubgroupEmbedding, report.verdict, d.evidence(detail))
        .with_note(serde_json::to_string(&report).expect("report serializes"));

    let mut t = Tally::new(format!("{id}/conjugation"), inputs.clone(), Relationship::SubgroupEmbedding);
    for phi in &d.auts {
        let phi_inv = phi.inverse();
        for a in g.elements() {
            for b in g.elements() {
                let lhs = phi_inv.compose(&f_ab(g, a, b)).compose(phi) == f_ab(g, phi_inv.apply(a), phi_inv.apply(b));
                t.record(lhs, true, || d.map_evidence(phi, "conjugation identity fails").with_elements([a, b]));
            }
        }
    }
    let mut iso = verify_f_iso(g)?;
    iso.theorem_id = format!("{id}/f-iso");
    iso.inputs = inputs.clone();
    Ok(Verdict::composite(id, inputs, Relationship::SubgroupEmbedding, vec![embedding, t.finish(), iso]))
}

/// For abelian `G` without 2-torsion, `Aut(Core(G)) = {t_a ∘ h}` with
/// `t_a(x) = x a` and `h ∈ Aut(G)`, each factorization unique.
pub fn check_core_abelian_full(d: &GroupData, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "core-abelian-full";
    let inputs = d.inputs();
    let g = &d.group;
    if !g.is_abelian() || g.has_2_torsion() {
        return Ok(Verdict::skipped(id, inputs, "requires an abelian group without 2-torsion"));
    }
    if g.order() > caps.quandle_enum {
        return Ok(Verdict::skipped(id, inputs, format!("order {} exceeds the quandle enumeration cap", g.order())));
    }
    let q = core(g)?;
    let auts_core = enumerate_quandle_auts(&q, caps)?;
    let expected = g.order() * d.auts.len();
    let part = |name: &str| format!("{id}/{name}");
    let count = structural(
        &part("count"),
        &inputs,
        Relationship::Isomorphism,
        auts_core.len() == expected,
        d.evidence(format!("|Aut(Core(G))| = {}, |G||Aut(G)| = {expected}", auts_core.len())),
    );

    let mut factor = Tally::new(part("factorization"), inputs.clone(), Relationship::Isomorphism);
    for f in &auts_core {
        let a = f.apply(g.identity());
        let a_inv = g.inv(a);
        let h = PointMap::new(g.elements().map(|x| g.mul(f.apply(x), a_inv)).collect())?;
        let ok = d.auts.binary_search(&h).is_ok();
        factor.record(ok, true, || {
            Evidence::new(&d.label, format!("f(e) = {a} but f t_a^-1 is not an automorphism")).with_map(f.images())
        });
    }

    let mut image = Tally::new(part("image"), inputs.clone(), Relationship::SubgroupEmbedding);
    for a in g.elements() {
        for h in &d.auts {
            let f = PointMap::new(g.elements().map(|x| g.mul(h.apply(x), a)).collect())?;
            image.record(auts_core.binary_search(&f).is_ok(), true, || d.map_evidence(h, format!("t_{a} h is not an automorphism of the core")));
        }
    }
    Ok(Verdict::composite(id, inputs, Relationship::Isomorphism, vec![count, factor.finish(), image.finish()]))
}
