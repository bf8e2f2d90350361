use std::sync::OnceLock;

use super::context::{Ctx, Outcome};
use super::{criteria, misc, normalizers, odd_index};

pub(crate) struct ScenarioDef {
    pub id: String,
    pub claim: &'static str,
    pub exploratory: bool,
    pub run: Box<dyn Fn(&mut Ctx) -> Outcome + Send + Sync>,
}

fn def(
    id: impl Into<String>,
    claim: &'static str,
    run: impl Fn(&mut Ctx) -> Outcome + Send + Sync + 'static,
) -> ScenarioDef {
    ScenarioDef { id: id.into(), claim, exploratory: false, run: Box::new(run) }
}

fn build() -> Vec<ScenarioDef> {
    let mut defs = vec![
        def(
            "order-certification",
            "constructed groups have the classical orders: |PSp4(3)| = 25920, |PSL2(q)| = q(q²−1)/2, |C3 wr S4| = 3⁴·24",
            misc::order_certification,
        ),
        def(
            "norm-syl-psp4-3",
            "in PSp4(3) the Sylow 2-normalizer has index 3 over S, and N(S)/S is elementary abelian of order 3^t with t the binary weight of 2",
            normalizers::psp4_3,
        ),
        def(
            "norm-syl-l3-3",
            "in PSL3(3) a Sylow 2-subgroup is self-normalizing, since the odd part of q−1 is trivial",
            normalizers::l3_3,
        ),
        def(
            "norm-syl-dihedral-battery",
            "Sylow 2-subgroups of dihedral groups of order 2m, m = 3..12, are self-normalizing",
            normalizers::dihedral_battery,
        ),
        def(
            "norm-syl-d3-wr-s2",
            "a Sylow 2-subgroup of D6 wr S2 is self-normalizing",
            normalizers::d3_wr_s2,
        ),
        def(
            "zavarn-product-a5xa5",
            "an odd-index subgroup of A5 × A5 projecting onto a simple factor contains that factor",
            odd_index::a5_x_a5,
        ),
        def(
            "criterion-equivalence-battery",
            "for V abelian normal and G = HV: H is pronormal iff U = N_U(H)[H,U] for all H-invariant U ≤ V",
            criteria::equivalence_battery,
        ),
        def(
            "lemma11-coprime-battery",
            "in A wr P with H ≥ K, K transitive on coordinates and (|A|,|K|) = 1: U = C_U(H)[H,U] for every H-invariant U of the base",
            criteria::coprime_battery,
        ),
        def(
            "lemma8-diagonal-centralizer",
            "a block-transitive group of coordinate permutations centralizes exactly the diagonal of the base",
            criteria::diagonal_centralizer,
        ),
        def(
            "lemma2-closure-battery",
            "self-normalizing Sylow 2-subgroups pass to extensions, and make every odd-index subgroup pronormal",
            odd_index::closure_battery,
        ),
        def(
            "lemma6-quotient-transfer",
            "for N ⊴ G inside H: H is pronormal in G iff H/N is pronormal in G/N (A4 wr S2 modulo its 2-core)",
            odd_index::quotient_transfer,
        ),
        def(
            "lemma7-overgroup-transfer",
            "a subgroup pronormal in G stays pronormal in every intermediate subgroup",
            odd_index::overgroup_transfer,
        ),
        def(
            "theorem2-psp4-3",
            "every odd-index subgroup of PSp4(3) is pronormal",
            odd_index::theorem2_psp4_3,
        ),
        def(
            "search-nonpronormal-s4",
            "S4 has no nonpronormal subgroup of odd index",
            odd_index::search_s4,
        ),
        ScenarioDef {
            exploratory: true,
            ..def(
                "search-nonpronormal-c3-wr-s3",
                "does C3 wr S3 (three coordinates, not a power of 2) contain a nonpronormal odd-index subgroup?",
                odd_index::search_c3_wr_s3,
            )
        },
        def(
            "nonpronormal-psp6-3",
            "PSp6(3) contains a nonpronormal subgroup of odd index (beyond desk scale)",
            misc::psp6_3,
        ),
    ];
    for q in [5u32, 11, 13] {
        defs.push(def(
            format!("norm-syl-psl2-{q}"),
            "for q ≡ ±3 (mod 8) the Sylow 2-normalizer in PSL2(q) is A4",
            move |ctx| normalizers::psl2_q(ctx, q),
        ));
        defs.push(def(
            format!("lemma5-oddorder-psl2-{q}"),
            "odd-order subgroups of PSL2(q) and PGL2(q) coprime to q are abelian and centralized by the odd-order elements of their normalizers",
            move |ctx| misc::odd_order(ctx, q),
        ));
    }
    for n in 4..=8 {
        defs.push(def(
            format!("norm-syl-symmetric-{n}"),
            "Sylow 2-subgroups of symmetric groups are self-normalizing",
            move |ctx| normalizers::symmetric_n(ctx, n),
        ));
    }
    for w in odd_index::WREATH_BATTERY {
        defs.push(def(
            format!("wreath-pronormal-{}", w.label),
            "odd-index subgroups of A wr S_n, n a power of 2, are pronormal",
            move |ctx| odd_index::wreath_pronormal(ctx, w),
        ));
    }
    for (p, n) in [(7u64, 3u64), (5, 4)] {
        defs.push(def(
            format!("maz-frobenius-{p}-{n}"),
            "in a faithful representation of a Frobenius group with cyclic complement of order n, in characteristic coprime to the kernel, the complement generator has minimal polynomial λ^n − 1",
            move |ctx| misc::frobenius(ctx, p, n),
        ));
    }
    defs.sort_by(|a, b| a.id.cmp(&b.id));
    defs
}

pub(crate) fn registry() -> &'static [ScenarioDef] {
    static REGISTRY: OnceLock<Vec<ScenarioDef>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub(crate) fn find(id: &str) -> Option<&'static ScenarioDef> {
    registry().iter().find(|s| s.id == id)
}

/// Registered ids in sorted order.
pub fn scenario_ids() -> Vec<String> {
    registry().iter().map(|s| s.id.clone()).collect()
}
