//! Scenarios for the abelian-complement criterion and wreath bases.

use super::context::{Ctx, Outcome, Stop};
use crate::constructors::{alternating, cyclic, dihedral, symmetric, wreath_product, WreathProduct};
use crate::perm::{centralizer, Perm, PermGroup};
use crate::pronormal::{coprime_factorization_check, criterion_abelian_complement, is_pronormal, PronormError};

fn perm(d: usize, cycles: &str) -> Perm {
    Perm::parse_cycles(d, cycles).expect("literal permutation")
}

fn group(d: usize, gens: &[&str]) -> Result<PermGroup, Stop> {
    Ok(PermGroup::new(d, gens.iter().map(|c| perm(d, c)).collect())?)
}

/// The top copy of the subgroup of `S_n` generated by `gens`.
fn top(w: &WreathProduct, gens: &[&str]) -> Result<PermGroup, Stop> {
    let n = w.block_count();
    Ok(PermGroup::new(w.group().degree(), gens.iter().map(|c| w.embed_top(&perm(n, c))).collect())?)
}

/// `x ↦ x + 1` and `x ↦ a·x` on GF(p).
fn affine(p: usize, a: usize) -> Result<(PermGroup, PermGroup), Stop> {
    let shift = Perm::from_images((0..p).map(|x| (x + 1) % p).collect())?;
    let scale = Perm::from_images((0..p).map(|x| (x * a) % p).collect())?;
    Ok((PermGroup::new(p, vec![shift])?, PermGroup::new(p, vec![scale])?))
}

struct Instance {
    name: &'static str,
    h: PermGroup,
    v: PermGroup,
    /// Known answer, where one is independently obvious.
    expected: Option<bool>,
}

fn battery() -> Result<Vec<Instance>, Stop> {
    let mut out = Vec::new();
    let mut add = |name, h, v, expected| out.push(Instance { name, h, v, expected });

    add("S3/A3/transposition", group(3, &["(0 1)"])?, group(3, &["(0 1 2)"])?, Some(true));
    add("S3/trivial/S3", PermGroup::new(3, symmetric(3).gens().to_vec())?, PermGroup::trivial(3), Some(true));

    let w2 = wreath_product(&cyclic(3), &symmetric(2))?;
    add("C3-wr-S2/base/top", w2.top().clone(), w2.base().clone(), None);
    add("C3-wr-S2/base/top-x-diagonal", w2.top().join(&w2.diagonal())?, w2.base().clone(), None);
    add("C3-wr-S2/base/first-factor", w2.factor(0), w2.base().clone(), None);

    let w4 = wreath_product(&cyclic(3), &symmetric(4))?;
    add("C3-wr-S4/base/top-S4", w4.top().clone(), w4.base().clone(), None);
    add("C3-wr-S4/base/top-D8", top(&w4, &["(0 1 2 3)", "(0 2)"])?, w4.base().clone(), None);
    add("C3-wr-S4/base/top-C4", top(&w4, &["(0 1 2 3)"])?, w4.base().clone(), None);
    add("C3-wr-S4/base/top-V4", top(&w4, &["(0 1)(2 3)", "(0 2)(1 3)"])?, w4.base().clone(), None);
    add("C3-wr-S4/base/top-C2", top(&w4, &["(0 1)"])?, w4.base().clone(), None);

    let v4 = group(4, &["(0 1)(2 3)", "(0 2)(1 3)"])?;
    add("S4/V4/S3", group(4, &["(0 1 2)", "(0 1)"])?, v4.clone(), Some(true));
    add("D8/V4/transposition", group(4, &["(0 1)"])?, v4.clone(), Some(false));
    add("A4/V4/C3", group(4, &["(0 1 2)"])?, v4, Some(true));

    let d8 = dihedral(4)?;
    add("D8/C4/reflection", PermGroup::new(4, vec![d8.gens()[1].clone()])?, group(4, &["(0 1 2 3)"])?, Some(false));
    let d16 = dihedral(8)?;
    add(
        "D16/C8/reflection",
        PermGroup::new(8, vec![d16.gens()[1].clone()])?,
        PermGroup::new(8, vec![d16.gens()[0].clone()])?,
        Some(false),
    );
    let c2w = wreath_product(&cyclic(2), &symmetric(2))?;
    add("C2-wr-C2/base/top", c2w.top().clone(), c2w.base().clone(), Some(false));

    let (f7, c3) = affine(7, 2)?;
    add("F7:C3/F7/C3", c3, f7, Some(true));
    let (f5, c4) = affine(5, 2)?;
    add("F5:C4/F5/C4", c4, f5, Some(true));
    Ok(out)
}

pub(crate) fn equivalence_battery(ctx: &mut Ctx) -> Outcome {
    let cap = ctx.cap();
    let instances = battery()?;
    let mut disagreements = 0;
    for inst in &instances {
        let g = inst.h.join(&inst.v)?;
        ctx.admit(&g)?;
        let criterion = criterion_abelian_complement(&inst.h, &inst.v, &g, cap)?;
        let definition = is_pronormal(&inst.h, &g, cap)?;
        let key = |field: &str| format!("{}.{field}", inst.name);
        ctx.measure(&key("criterion"), criterion.holds);
        ctx.measure(&key("invariant_subgroups_checked"), criterion.checked_subgroup_count);
        match inst.expected {
            Some(e) => ctx.expect(&key("pronormal"), definition.pronormal, e),
            None => ctx.measure(&key("pronormal"), definition.pronormal),
        }
        if let Some(f) = &criterion.failing {
            ctx.measure(
                &key("failing_u"),
                [f.subgroup.order(), f.complement_order, f.commutator_order, f.product_order],
            );
        }
        if let Some(f) = &definition.failure {
            ctx.witness(&key("nonconjugating_g"), &f.g);
        }
        if criterion.holds != definition.pronormal {
            disagreements += 1;
        }
    }
    ctx.measure("instances", instances.len());
    ctx.expect("disagreements", disagreements, 0);
    Ok(())
}

pub(crate) fn coprime_battery(ctx: &mut Ctx) -> Outcome {
    let cap = ctx.cap();
    let w2 = wreath_product(&cyclic(3), &symmetric(2))?;
    let w4 = wreath_product(&cyclic(3), &symmetric(4))?;
    let c5w2 = wreath_product(&cyclic(5), &symmetric(2))?;
    let c2w3 = wreath_product(&cyclic(2), &symmetric(3))?;
    let d8 = ["(0 1 2 3)", "(0 2)"];
    let c4 = ["(0 1 2 3)"];
    let v4 = ["(0 1)(2 3)", "(0 2)(1 3)"];
    let cases: Vec<(&str, &WreathProduct, PermGroup, PermGroup)> = vec![
        ("C3-wr-S2/S2/S2", &w2, w2.top().clone(), w2.top().clone()),
        ("C3-wr-S4/S4/D8", &w4, w4.top().clone(), top(&w4, &d8)?),
        ("C3-wr-S4/S4/C4", &w4, w4.top().clone(), top(&w4, &c4)?),
        ("C3-wr-S4/D8/C4", &w4, top(&w4, &d8)?, top(&w4, &c4)?),
        ("C3-wr-S4/C4/C4", &w4, top(&w4, &c4)?, top(&w4, &c4)?),
        ("C3-wr-S4/V4/V4", &w4, top(&w4, &v4)?, top(&w4, &v4)?),
        ("C5-wr-S2/S2/S2", &c5w2, c5w2.top().clone(), c5w2.top().clone()),
        ("C2-wr-S3/S3/C3", &c2w3, c2w3.top().clone(), top(&c2w3, &["(0 1 2)"])?),
    ];
    let mut failures = 0;
    for (name, w, h, k) in &cases {
        ctx.admit(w.group())?;
        let verdict = coprime_factorization_check(w, h, k, cap)?;
        ctx.measure(&format!("{name}.invariant_subgroups"), verdict.checked_subgroup_count);
        if !verdict.all_hold {
            failures += 1;
            if let Some(f) = &verdict.failing {
                ctx.generators(&format!("{name}.failing_u"), &f.subgroup);
            }
        }
        // the centralizer factorization implies the criterion, hence pronormality of H in HV
        let g = h.join(w.base())?;
        let criterion = criterion_abelian_complement(h, w.base(), &g, cap)?;
        ctx.expect(&format!("{name}.criterion_holds"), criterion.holds, true);
    }
    ctx.measure("instances", cases.len());
    ctx.expect("factorization_failures", failures, 0);
    // coprimality is a checked precondition
    let c2w2 = wreath_product(&cyclic(2), &symmetric(2))?;
    let rejected = matches!(
        coprime_factorization_check(&c2w2, c2w2.top(), c2w2.top(), cap),
        Err(PronormError::PreconditionViolated(_))
    );
    ctx.expect("C2-wr-S2.precondition_rejected", rejected, true);
    Ok(())
}

pub(crate) fn diagonal_centralizer(ctx: &mut Ctx) -> Outcome {
    let cap = ctx.cap();
    let c3 = cyclic(3);
    // `None` stands for the full top group
    let cases: Vec<(&str, WreathProduct, Option<&[&str]>)> = vec![
        ("C3-wr-S2/S2", wreath_product(&c3, &symmetric(2))?, None),
        ("C3-wr-S4/S4", wreath_product(&c3, &symmetric(4))?, None),
        ("C3-wr-S4/C4", wreath_product(&c3, &symmetric(4))?, Some(&["(0 1 2 3)"])),
        ("C3-wr-S4/V4", wreath_product(&c3, &symmetric(4))?, Some(&["(0 1)(2 3)", "(0 2)(1 3)"])),
        ("A4-wr-S2/S2", wreath_product(&alternating(4), &symmetric(2))?, None),
        ("A5-wr-S2/S2", wreath_product(&alternating(5), &symmetric(2))?, None),
        ("D3-wr-S3/C3", wreath_product(&dihedral(3)?, &symmetric(3))?, Some(&["(0 1 2)"])),
    ];
    for (name, w, gens) in cases {
        ctx.admit(w.group())?;
        let h = match gens {
            Some(gens) => top(&w, gens)?,
            None => w.top().clone(),
        };
        let c = centralizer(w.base(), &h, cap)?;
        ctx.expect(&format!("{name}.centralizer_is_diagonal"), c.same_group(&w.diagonal()), true);
        ctx.expect(&format!("{name}.centralizer_order"), c.order(), w.inner().order());
    }
    Ok(())
}
