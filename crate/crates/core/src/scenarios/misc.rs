//! Order certificates, odd-order subgroups of PSL2/PGL2, Frobenius groups
//! and the out-of-reach PSp6(3) instance.

use super::context::{Ctx, Outcome};
use crate::algebra::{gcd, Poly};
use crate::constructors::{
    cyclic, frobenius_fc, matrix_group, pgl2, psl2, psp_group, sp_order, symmetric, wreath_product, FrobeniusEmbedding,
    MatrixAction,
};
use crate::perm::{normalizer, PermGroup};
use crate::pronormal::odd_order_subgroups;

pub(crate) fn order_certification(ctx: &mut Ctx) -> Outcome {
    let psp = psp_group(2, 3, ctx.cap())?;
    ctx.expect("PSp4(3).degree", psp.group().degree(), 40);
    ctx.expect("PSp4(3).order", psp.group().order(), sp_order(2, 3) / 2);
    for q in [5u64, 11, 13] {
        let g = psl2(q as u32)?;
        ctx.expect(&format!("PSL2({q}).order"), g.group().order(), q * (q * q - 1) / 2);
        let g = pgl2(q as u32)?;
        ctx.expect(&format!("PGL2({q}).order"), g.group().order(), q * (q * q - 1));
    }
    let w = wreath_product(&cyclic(3), &symmetric(4))?;
    ctx.expect("C3-wr-S4.order", w.group().order(), 3u64.pow(4) * 24);
    Ok(())
}

pub(crate) fn psp6_3(ctx: &mut Ctx) -> Outcome {
    let order = sp_order(3, 3) / 2;
    ctx.measure("group_order", order);
    ctx.measure("points", (3u64.pow(6) - 1) / 2);
    ctx.mark_unreachable(format!(
        "an exhaustive odd-index search in a group of order {order} is beyond element enumeration at desk scale"
    ));
    Ok(())
}

/// Odd-order subgroups coprime to `q` are abelian, and odd-order elements
/// of their normalizers centralize them.
pub(crate) fn odd_order(ctx: &mut Ctx, q: u32) -> Outcome {
    let cap = ctx.cap();
    let groups: Vec<(&str, PermGroup)> = vec![("PSL2", psl2(q)?.into_group()), ("PGL2", pgl2(q)?.into_group())];
    for (name, g) in &groups {
        ctx.admit(g)?;
        let scan = odd_order_subgroups(g, q as u64, cap, ctx.max_subgroups())?;
        if !scan.complete {
            ctx.truncate(format!("{name}: odd-order scan stopped at {} subgroups", scan.subgroups.len()));
        }
        let (mut nonabelian, mut not_centralizing) = (0, 0);
        for x in &scan.subgroups {
            if !x.is_abelian() {
                nonabelian += 1;
                ctx.generators(&format!("{name}.nonabelian"), x);
            }
            let n = normalizer(g, x, cap)?;
            let bad = n.iter().find(|y| y.order() % 2 == 1 && x.gens().iter().any(|s| s.mul(y) != y.mul(s)));
            if let Some(y) = bad {
                not_centralizing += 1;
                ctx.witness(&format!("{name}.noncentralizing"), &y);
            }
        }
        let mut orders: Vec<u64> = scan.subgroups.iter().map(|x| x.order()).collect();
        orders.sort_unstable();
        orders.dedup();
        ctx.measure(&format!("{name}.odd_order_subgroups"), scan.subgroups.len());
        ctx.measure(&format!("{name}.distinct_orders"), orders);
        ctx.expect(&format!("{name}.nonabelian"), nonabelian, 0);
        ctx.expect(&format!("{name}.normalizer_not_centralizing"), not_centralizing, 0);
    }
    Ok(())
}

pub(crate) fn frobenius(ctx: &mut Ctx, p: u64, n: u64) -> Outcome {
    let fc = frobenius_fc(p, n)?;
    ctx.expect("group_order", fc.group.order(), p * n);
    // no nontrivial complement element fixes a nontrivial kernel element
    let fixed = (1..n as i64)
        .flat_map(|i| (1..p as i64).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let k = fc.kernel_gen.pow(j);
            k.conj(&fc.complement_gen.pow(i)) == k
        })
        .count();
    ctx.expect("complement_fixed_kernel_pairs", fixed, 0);

    let r = fc.matrix_field.modulus() as u64;
    ctx.expect("embedding", fc.embedding, FrobeniusEmbedding::Singer);
    ctx.measure("field", r);
    ctx.expect("characteristic_coprime_to_kernel", gcd(r, p) == 1, true);
    let mg = matrix_group(&[fc.kernel_matrix.clone(), fc.complement_matrix.clone()], MatrixAction::Vectors, ctx.cap())?;
    ctx.expect("matrix_group_order", mg.group().order(), p * n);
    let target = Poly::x_pow_minus_one(fc.matrix_field, n as usize).to_string();
    ctx.expect("min_poly", fc.complement_matrix.min_poly().to_string(), target.clone());

    let (km, cm) = fc.permutation_module(r as u32)?;
    let module = matrix_group(&[km, cm.clone()], MatrixAction::Vectors, ctx.cap())?;
    ctx.expect("permutation_module.group_order", module.group().order(), p * n);
    ctx.expect("permutation_module.min_poly", cm.min_poly().to_string(), target);
    ctx.witness("kernel_generator", &fc.kernel_gen);
    ctx.witness("complement_generator", &fc.complement_gen);
    Ok(())
}
