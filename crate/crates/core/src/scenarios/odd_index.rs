//! Scenarios built on the odd-index overgroup search.

use super::context::{Ctx, Outcome, Stop};
use crate::constructors::{
    alternating, cyclic, dihedral, direct_product, psl2, special_linear, symmetric, wreath_product, MatrixAction,
};
use crate::perm::{core_2, coset_action, normalizer, sylow_2, PermGroup, SubgroupHandle, SubgroupSet};
use crate::pronormal::{
    find_nonpronormal_odd_index, is_pronormal, is_pronormal_sylow_with, odd_index_overgroups,
    sylow_normalizer_structure,
};

/// The odd-index subgroups of `g` (overgroups of one Sylow 2-subgroup)
/// with their pronormality verdicts. With `definition` set, the Sylow
/// reduction is cross-checked against the definition on every subgroup.
fn odd_index_verdicts(
    ctx: &mut Ctx,
    prefix: &str,
    g: &PermGroup,
    definition: bool,
) -> Result<Vec<(SubgroupHandle, bool)>, Stop> {
    ctx.admit(g)?;
    let cap = ctx.cap();
    let s = sylow_2(g, cap)?;
    let ns = normalizer(g, &s, cap)?;
    let scan = odd_index_overgroups(g, &s, cap, ctx.max_subgroups())?;
    if !scan.complete {
        ctx.truncate(format!("{prefix}overgroup scan stopped after {} subgroups", scan.subgroups.len()));
    }
    ctx.measure(&format!("{prefix}sylow_normalizer_order"), ns.order());
    ctx.measure(&format!("{prefix}odd_index_subgroups"), scan.subgroups.len());
    ctx.measure(&format!("{prefix}odd_index_orders"), scan.subgroups.iter().map(|h| h.order()).collect::<Vec<_>>());
    let mut out = Vec::new();
    let mut disagreements = 0;
    for (i, h) in scan.subgroups.into_iter().enumerate() {
        let reduced = is_pronormal_sylow_with(h.group(), &ns, cap)?;
        if let Some(f) = &reduced.failure {
            ctx.witness(&format!("{prefix}subgroup-{i}.nonconjugating_g"), &f.g);
        }
        if definition {
            let full = is_pronormal(h.group(), g, cap)?;
            if full.pronormal != reduced.pronormal {
                disagreements += 1;
                ctx.generators(&format!("{prefix}disagreement-{i}"), h.group());
            }
        }
        out.push((h, reduced.pronormal));
    }
    if definition {
        ctx.expect(&format!("{prefix}sylow_vs_definition_disagreements"), disagreements, 0);
    }
    Ok(out)
}

fn expect_all_pronormal(ctx: &mut Ctx, prefix: &str, g: &PermGroup, definition: bool) -> Outcome {
    let verdicts = odd_index_verdicts(ctx, prefix, g, definition)?;
    let bad = verdicts.iter().filter(|(_, ok)| !ok).count();
    ctx.expect(&format!("{prefix}nonpronormal_count"), bad, 0);
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Inner {
    C3,
    D3,
    A4,
    A5,
    Psl2of5,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct WreathCase {
    pub label: &'static str,
    inner: Inner,
    n: usize,
}

pub(crate) const WREATH_BATTERY: [WreathCase; 6] = [
    WreathCase { label: "c3-wr-s2", inner: Inner::C3, n: 2 },
    WreathCase { label: "c3-wr-s4", inner: Inner::C3, n: 4 },
    WreathCase { label: "a4-wr-s2", inner: Inner::A4, n: 2 },
    WreathCase { label: "a5-wr-s2", inner: Inner::A5, n: 2 },
    WreathCase { label: "psl2-5-wr-s2", inner: Inner::Psl2of5, n: 2 },
    WreathCase { label: "d3-wr-s2", inner: Inner::D3, n: 2 },
];

fn inner_group(inner: Inner) -> Result<PermGroup, Stop> {
    Ok(match inner {
        Inner::C3 => cyclic(3),
        Inner::D3 => dihedral(3)?,
        Inner::A4 => alternating(4),
        Inner::A5 => alternating(5),
        Inner::Psl2of5 => psl2(5)?.into_group(),
    })
}

pub(crate) fn wreath_pronormal(ctx: &mut Ctx, case: WreathCase) -> Outcome {
    let a = inner_group(case.inner)?;
    let w = wreath_product(&a, &symmetric(case.n))?;
    let factorial: u64 = (1..=case.n as u64).product();
    ctx.expect("group_order", w.group().order(), a.order().pow(case.n as u32) * factorial);
    expect_all_pronormal(ctx, "", w.group(), true)
}

pub(crate) fn theorem2_psp4_3(ctx: &mut Ctx) -> Outcome {
    let g = crate::constructors::psp_group(2, 3, ctx.cap())?.into_group();
    ctx.expect("group_order", g.order(), 25920);
    expect_all_pronormal(ctx, "", &g, true)
}

pub(crate) fn search_s4(ctx: &mut Ctx) -> Outcome {
    let g = symmetric(4);
    let search = find_nonpronormal_odd_index(&g, ctx.cap(), ctx.max_subgroups())?;
    ctx.expect("complete", search.complete, true);
    ctx.expect("odd_index_subgroups", search.checked, 2);
    ctx.expect("nonpronormal_found", search.found.is_some(), false);
    Ok(())
}

pub(crate) fn search_c3_wr_s3(ctx: &mut Ctx) -> Outcome {
    let w = wreath_product(&cyclic(3), &symmetric(3))?;
    ctx.admit(w.group())?;
    ctx.measure("group_order", w.group().order());
    let search = find_nonpronormal_odd_index(w.group(), ctx.cap(), ctx.max_subgroups())?;
    if !search.complete {
        ctx.truncate("overgroup scan incomplete");
    }
    ctx.measure("odd_index_subgroups_checked", search.checked);
    ctx.measure("nonpronormal_found", search.found.is_some());
    if let Some((h, verdict)) = &search.found {
        ctx.measure("nonpronormal_order", h.order());
        ctx.generators("nonpronormal_subgroup", h.group());
        if let Some(f) = &verdict.failure {
            ctx.witness("nonconjugating_g", &f.g);
        }
    }
    Ok(())
}

pub(crate) fn a5_x_a5(ctx: &mut Ctx) -> Outcome {
    let a5 = alternating(5);
    let dp = direct_product(&a5, &a5);
    let g = dp.group().clone();
    ctx.expect("group_order", g.order(), 3600);
    let verdicts = odd_index_verdicts(ctx, "", &g, false)?;
    let (mut full_projection, mut violations) = (0, 0);
    for (h, _) in &verdicts {
        for i in 0..2 {
            if dp.project_group(i, h.group())?.order() == a5.order() {
                full_projection += 1;
                if !dp.embedded_factor(i).is_subgroup_of(h.group()) {
                    violations += 1;
                    ctx.generators(&format!("violation-factor-{i}"), h.group());
                }
            }
        }
    }
    ctx.measure("full_projection_cases", full_projection);
    ctx.expect("factor_containment_violations", violations, 0);
    let bad = verdicts.iter().filter(|(_, ok)| !ok).count();
    ctx.expect("nonpronormal_count", bad, 0);
    Ok(())
}

pub(crate) fn closure_battery(ctx: &mut Ctx) -> Outcome {
    let cap = ctx.cap();
    // self-normalizing Sylow 2-subgroup ⇒ all odd-index subgroups pronormal
    let groups: Vec<(&str, PermGroup)> = vec![
        ("S4", symmetric(4)),
        ("S5", symmetric(5)),
        ("S6", symmetric(6)),
        ("dihedral-4", dihedral(4)?),
        ("dihedral-6", dihedral(6)?),
        ("dihedral-9", dihedral(9)?),
        ("D3-wr-S2", wreath_product(&dihedral(3)?, &symmetric(2))?.group().clone()),
        ("PSL3(3)", special_linear(3, 3, MatrixAction::Projective, cap)?.into_group()),
    ];
    for (name, g) in &groups {
        ctx.admit(g)?;
        let st = sylow_normalizer_structure(g, cap)?;
        ctx.expect(&format!("{name}.index_over_s"), st.index_over_s, 1);
        expect_all_pronormal(ctx, &format!("{name}."), g, false)?;
    }
    // X ⊴ Y, with X and Y/X self-normalizing ⇒ Y self-normalizing
    let d3w = wreath_product(&dihedral(3)?, &symmetric(2))?;
    let v4 = PermGroup::new(
        4,
        vec![
            crate::perm::Perm::parse_cycles(4, "(0 1)(2 3)").unwrap(),
            crate::perm::Perm::parse_cycles(4, "(0 2)(1 3)").unwrap(),
        ],
    )?;
    let d16 = dihedral(8)?;
    let c8 = PermGroup::new(8, vec![d16.gens()[0].clone()])?;
    let extensions: Vec<(&str, PermGroup, PermGroup)> = vec![
        ("S4/V4", symmetric(4), v4),
        ("S6/A6", symmetric(6), alternating(6)),
        ("D3-wr-S2/base", d3w.group().clone(), d3w.base().clone()),
        ("dihedral-8/C8", d16, c8),
    ];
    for (name, y, x) in &extensions {
        ctx.admit(y)?;
        let quotient = coset_action(y, x, cap)?;
        let sub = sylow_normalizer_structure(x, cap)?.index_over_s;
        let top = sylow_normalizer_structure(quotient.group(), cap)?.index_over_s;
        ctx.expect(&format!("{name}.premises_hold"), (x.is_normal_in(y), sub, top), (true, 1, 1));
        ctx.expect(&format!("{name}.extension_index_over_s"), sylow_normalizer_structure(y, cap)?.index_over_s, 1);
    }
    Ok(())
}

pub(crate) fn quotient_transfer(ctx: &mut Ctx) -> Outcome {
    let cap = ctx.cap();
    let w = wreath_product(&alternating(4), &symmetric(2))?;
    let g = w.group();
    ctx.admit(g)?;
    let o2 = core_2(g, cap)?;
    ctx.expect("core_2_order", o2.order(), 16);
    let quotient = coset_action(g, &o2, cap)?;
    ctx.expect("quotient_order", quotient.group().order(), 18);
    // every subgroup containing O2 is O2·⟨x⟩ for cyclic images, plus the odd-index ones
    let mut candidates = SubgroupSet::new();
    for x in g.iter() {
        candidates.insert(o2.with_generator(&x)?);
    }
    let s = sylow_2(g, cap)?;
    for h in odd_index_overgroups(g, &s, cap, ctx.max_subgroups())?.subgroups {
        candidates.insert(h.group().clone());
    }
    let (mut agree, mut disagree, mut pronormal) = (0, 0, 0);
    for (i, h) in candidates.iter().enumerate() {
        let upstairs = is_pronormal(h, g, cap)?.pronormal;
        let downstairs = is_pronormal(&quotient.project_group(h), quotient.group(), cap)?.pronormal;
        if upstairs == downstairs {
            agree += 1;
        } else {
            disagree += 1;
            ctx.generators(&format!("disagreement-{i}"), h);
        }
        pronormal += upstairs as usize;
    }
    ctx.measure("subgroups_containing_core", candidates.len());
    ctx.measure("pronormal_subgroups", pronormal);
    ctx.measure("agreements", agree);
    ctx.expect("disagreements", disagree, 0);
    // odd-index subgroups are pronormal on both sides
    let bad = odd_index_verdicts(ctx, "odd_index.", g, false)?.iter().filter(|(_, ok)| !ok).count();
    ctx.expect("odd_index.nonpronormal_count", bad, 0);
    Ok(())
}

pub(crate) fn overgroup_transfer(ctx: &mut Ctx) -> Outcome {
    let cap = ctx.cap();
    let groups: Vec<(&str, PermGroup)> = vec![
        ("S4", symmetric(4)),
        ("S5", symmetric(5)),
        ("C3-wr-S2", wreath_product(&cyclic(3), &symmetric(2))?.group().clone()),
        ("A4-wr-S2", wreath_product(&alternating(4), &symmetric(2))?.group().clone()),
    ];
    let (mut triples, mut violations) = (0, 0);
    for (name, g) in &groups {
        ctx.admit(g)?;
        let s = sylow_2(g, cap)?;
        let overgroups: Vec<PermGroup> = odd_index_overgroups(g, &s, cap, ctx.max_subgroups())?
            .subgroups
            .into_iter()
            .map(|h| h.group().clone())
            .collect();
        let mut candidates = SubgroupSet::new();
        for x in g.iter() {
            candidates.insert(PermGroup::new(g.degree(), vec![x])?);
        }
        for h in &overgroups {
            candidates.insert(h.clone());
        }
        for h in candidates.iter() {
            if !is_pronormal(h, g, cap)?.pronormal {
                continue;
            }
            for m in overgroups.iter().filter(|m| h.is_subgroup_of(m)) {
                triples += 1;
                if !is_pronormal(h, m, cap)?.pronormal {
                    violations += 1;
                    ctx.generators(&format!("{name}.violation.h"), h);
                    ctx.generators(&format!("{name}.violation.m"), m);
                }
            }
        }
    }
    ctx.measure("triples_checked", triples);
    ctx.expect("violations", violations, 0);
    Ok(())
}
