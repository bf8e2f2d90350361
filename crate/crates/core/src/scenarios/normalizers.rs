//! Structure of Sylow 2-normalizers.

use super::context::{Ctx, Outcome};
use crate::algebra::{binary_weight, two_part};
use crate::constructors::{
    dihedral, psl2, psp_group, sp_order, special_linear, symmetric, wreath_product, MatrixAction,
};
use crate::perm::{core_2, PermGroup};
use crate::pronormal::sylow_normalizer_structure;

/// Records `|S|`, `|N(S)|` and `|N(S):S|` under `prefix`, expecting a
/// self-normalizing Sylow subgroup.
fn self_normalizing(ctx: &mut Ctx, prefix: &str, g: &PermGroup) -> Outcome {
    ctx.admit(g)?;
    let st = sylow_normalizer_structure(g, ctx.cap())?;
    ctx.expect(&format!("{prefix}sylow_order"), st.sylow_order, two_part(g.order()));
    ctx.measure(&format!("{prefix}ns_order"), st.ns_order);
    ctx.expect(&format!("{prefix}index_over_s"), st.index_over_s, 1);
    Ok(())
}

pub(crate) fn psl2_q(ctx: &mut Ctx, q: u32) -> Outcome {
    let g = psl2(q)?.into_group();
    ctx.admit(&g)?;
    let q64 = q as u64;
    ctx.expect("group_order", g.order(), q64 * (q64 * q64 - 1) / 2);
    ctx.expect("q_mod_8_is_3_or_5", matches!(q % 8, 3 | 5), true);
    let st = sylow_normalizer_structure(&g, ctx.cap())?;
    ctx.expect("sylow_order", st.sylow_order, 4);
    ctx.expect("sylow_is_klein_four", st.sylow.is_abelian() && st.sylow.exponent(ctx.cap())? == 2, true);
    ctx.expect("ns_order", st.ns_order, 12);
    ctx.expect("ns_abelian", st.normalizer.is_abelian(), false);
    // A4: the Klein four-group is the 2-core, with a quotient of order 3
    ctx.expect("ns_core_2_order", core_2(&st.normalizer, ctx.cap())?.order(), 4);
    ctx.expect("index_over_s", st.index_over_s, 3);
    ctx.expect("quotient_exponent", st.quotient_exponent, 3);
    ctx.generators("sylow_normalizer", &st.normalizer);
    Ok(())
}

pub(crate) fn psp4_3(ctx: &mut Ctx) -> Outcome {
    let g = psp_group(2, 3, ctx.cap())?.into_group();
    ctx.admit(&g)?;
    ctx.expect("group_order", g.order(), sp_order(2, 3) / 2);
    let st = sylow_normalizer_structure(&g, ctx.cap())?;
    let t = binary_weight(2);
    ctx.expect("sylow_order", st.sylow_order, 64);
    ctx.expect("ns_order", st.ns_order, 192);
    ctx.expect("index_over_s", st.index_over_s, 3u64.pow(t));
    ctx.expect("quotient_order", st.quotient.order(), 3u64.pow(t));
    ctx.expect("quotient_abelian", st.quotient_abelian, true);
    ctx.expect("quotient_exponent", st.quotient_exponent, 3);
    ctx.measure("t", t);
    ctx.generators("sylow_normalizer", &st.normalizer);
    Ok(())
}

pub(crate) fn l3_3(ctx: &mut Ctx) -> Outcome {
    let g = special_linear(3, 3, MatrixAction::Projective, ctx.cap())?.into_group();
    ctx.expect("group_order", g.order(), 5616);
    self_normalizing(ctx, "", &g)
}

pub(crate) fn symmetric_n(ctx: &mut Ctx, n: usize) -> Outcome {
    let g = symmetric(n);
    ctx.expect("group_order", g.order(), (1..=n as u64).product());
    self_normalizing(ctx, "", &g)
}

pub(crate) fn dihedral_battery(ctx: &mut Ctx) -> Outcome {
    for m in 3..=12 {
        let g = dihedral(m)?;
        self_normalizing(ctx, &format!("dihedral-{m}."), &g)?;
    }
    Ok(())
}

pub(crate) fn d3_wr_s2(ctx: &mut Ctx) -> Outcome {
    let w = wreath_product(&dihedral(3)?, &symmetric(2))?;
    ctx.expect("group_order", w.group().order(), 72);
    self_normalizing(ctx, "", w.group())
}
