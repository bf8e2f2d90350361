//! Acceptance gate: one line per criterion, each with its time limit.
//! Values are checked against oracles computed here (closed-form orders,
//! brute-force normalizers, explicit product sets) rather than against the
//! library's own bookkeeping.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use pronorm::algebra::{binary_weight, Matrix, Poly};
use pronorm::constructors::{
    alternating, cyclic, dihedral, frobenius_fc, pgl2, psl2, psp_group, symmetric, wreath_product, WreathProduct,
};
use pronorm::perm::{commutator_subgroup, core_2, coset_action, normalizer, sylow_2, Perm, PermGroup};
use pronorm::pronormal::{
    are_conjugate_in, coprime_factorization_check, criterion_abelian_complement, h_invariant_subgroups, is_pronormal,
    is_pronormal_sylow, is_pronormal_sylow_with, odd_index_overgroups, odd_order_subgroups, sylow_normalizer_structure,
};
use pronorm::scenarios::{run_all, Caps, Status};

const CAP: u64 = 5_000_000;

type Outcome = Result<String, String>;
type OrderCase = (&'static str, Box<dyn Fn() -> PermGroup>, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn secs(d: Duration) -> String {
    format!("{:.2} s", d.as_secs_f64())
}

/// Runs `f` and fails if it takes longer than `limit`.
fn timed<T>(label: &str, limit: Duration, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    ensure!(took <= limit, "{label} took {} (limit {})", secs(took), secs(limit));
    Ok(out)
}

/// Order by naive breadth-first closure under the generators.
fn closure_order(g: &PermGroup) -> u64 {
    let id = Perm::identity(g.degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in g.gens() {
            let y = x.mul(s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u64
}

/// `|N_G(S)|` by testing `S^x = S` as element sets for every `x ∈ G`.
fn brute_force_normalizer_order(g: &PermGroup, s: &PermGroup) -> u64 {
    let elems: HashSet<Perm> = s.iter().collect();
    g.iter().filter(|x| elems.iter().all(|e| elems.contains(&e.conj(x)))).count() as u64
}

fn perm(d: usize, cycles: &str) -> Perm {
    Perm::parse_cycles(d, cycles).unwrap()
}

fn group(d: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(d, gens.iter().map(|c| perm(d, c)).collect()).unwrap()
}

fn top(w: &WreathProduct, gens: &[&str]) -> PermGroup {
    let n = w.block_count();
    PermGroup::new(w.group().degree(), gens.iter().map(|c| w.embed_top(&perm(n, c))).collect()).unwrap()
}

fn order_certifications() -> Outcome {
    let limit = Duration::from_secs(5);
    // |PSp_{2n}(q)| = q^{n²}·∏(q^{2i} − 1) / gcd(2, q − 1)
    let psp4_3: u64 = 3u64.pow(4) * (3u64.pow(2) - 1) * (3u64.pow(4) - 1) / 2;
    let mut cases: Vec<OrderCase> = vec![("PSp4(3)", Box::new(|| psp_group(2, 3, CAP).unwrap().into_group()), psp4_3)];
    for q in [5u64, 11, 13] {
        cases.push(("PSL2(q)", Box::new(move || psl2(q as u32).unwrap().into_group()), q * (q * q - 1) / 2));
    }
    cases.push((
        "C3 wr S4",
        Box::new(|| wreath_product(&cyclic(3), &symmetric(4)).unwrap().group().clone()),
        3u64.pow(4) * 24,
    ));
    let mut found = Vec::new();
    for (name, build, expected) in cases {
        let order = timed(name, limit, || {
            let g = build();
            let (chain, naive) = (g.order(), closure_order(&g));
            ensure!(
                chain == expected && naive == expected,
                "{name}: chain {chain}, closure {naive}, formula {expected}"
            );
            Ok(chain)
        })?;
        found.push(order.to_string());
    }
    Ok(found.join(", "))
}

fn psl2_sylow_normalizers() -> Outcome {
    timed("all q", Duration::from_secs(30), || {
        for q in [5u32, 11, 13] {
            let g = psl2(q).unwrap().into_group();
            let s = sylow_2(&g, CAP).map_err(|e| e.to_string())?;
            let n = normalizer(&g, &s, CAP).map_err(|e| e.to_string())?;
            let oracle = brute_force_normalizer_order(&g, &s);
            ensure!(n.order() == 12 && oracle == 12, "q={q}: |N(S)| = {} (brute force {oracle})", n.order());
            ensure!(!n.is_abelian(), "q={q}: N(S) abelian");
            let klein = core_2(&n, CAP).unwrap();
            ensure!(
                klein.order() == 4 && klein.iter().all(|x| x.pow(2).is_identity()),
                "q={q}: 2-core of N(S) is not a Klein four-group"
            );
            let quotient = coset_action(&n, &klein, CAP).unwrap();
            ensure!(quotient.group().order() == 3, "q={q}: |N(S)/O2| = {}", quotient.group().order());
        }
        Ok("|N(S)| = 12 ≅ A4 for q = 5, 11, 13".to_string())
    })
}

fn psp4_3_sylow_normalizer() -> Outcome {
    timed("PSp4(3)", Duration::from_secs(60), || {
        let g = psp_group(2, 3, CAP).unwrap().into_group();
        let st = sylow_normalizer_structure(&g, CAP).map_err(|e| e.to_string())?;
        let oracle = brute_force_normalizer_order(&g, &st.sylow);
        let t = binary_weight(2);
        ensure!(st.ns_order == oracle, "|N(S)| = {} but brute force gives {oracle}", st.ns_order);
        ensure!(st.index_over_s == 3u64.pow(t), "|N(S):S| = {}", st.index_over_s);
        ensure!(st.quotient.order() == 3u64.pow(t), "|N(S)/S| = {}", st.quotient.order());
        ensure!(st.quotient_abelian && st.quotient_exponent == 3, "N(S)/S not elementary abelian of exponent 3");
        Ok(format!("|N(S):S| = 3 = 3^t, t = {t}, quotient elementary abelian"))
    })
}

fn self_normalizing_sylows() -> Outcome {
    timed("battery", Duration::from_secs(60), || {
        let mut groups: Vec<(String, PermGroup)> = (4..=8).map(|n| (format!("S{n}"), symmetric(n))).collect();
        groups.extend((3..=12).map(|m| (format!("dihedral({m})"), dihedral(m).unwrap())));
        groups.push(("D3 wr S2".into(), wreath_product(&dihedral(3).unwrap(), &symmetric(2)).unwrap().group().clone()));
        for (name, g) in &groups {
            let s = sylow_2(g, CAP).unwrap();
            let n = normalizer(g, &s, CAP).unwrap();
            ensure!(n.same_group(&s), "{name}: N(S) ≠ S");
            ensure!(brute_force_normalizer_order(g, &s) == s.order(), "{name}: brute-force normalizer larger than S");
        }
        Ok(format!("N(S) = S in {} groups", groups.len()))
    })
}

fn theorem2_psp4_3() -> Outcome {
    timed("PSp4(3)", Duration::from_secs(300), || {
        let g = psp_group(2, 3, CAP).unwrap().into_group();
        let s = sylow_2(&g, CAP).unwrap();
        let scan = odd_index_overgroups(&g, &s, CAP, 100_000).map_err(|e| e.to_string())?;
        ensure!(scan.complete, "overgroup scan incomplete");
        for h in &scan.subgroups {
            ensure!(
                s.is_subgroup_of(h.group()) && (g.order() / h.order()) % 2 == 1,
                "|H| = {} not odd index",
                h.order()
            );
            let reduced = is_pronormal_sylow(h.group(), &g, &s, CAP).map_err(|e| e.to_string())?;
            let full = is_pronormal(h.group(), &g, CAP).map_err(|e| e.to_string())?;
            ensure!(reduced.pronormal, "|H| = {} is not pronormal", h.order());
            ensure!(reduced.pronormal == full.pronormal, "|H| = {}: reduction and definition disagree", h.order());
            ensure!(full.witnesses_valid(h.group()), "|H| = {}: invalid conjugacy witness", h.order());
        }
        let orders: Vec<String> = scan.subgroups.iter().map(|h| h.order().to_string()).collect();
        Ok(format!("{} odd-index subgroups [{}], all pronormal by both routes", orders.len(), orders.join(", ")))
    })
}

fn criterion_equivalence() -> Outcome {
    timed("battery", Duration::from_secs(60), || {
        let w2 = wreath_product(&cyclic(3), &symmetric(2)).unwrap();
        let w4 = wreath_product(&cyclic(3), &symmetric(4)).unwrap();
        let affine = |p: usize, a: usize| {
            let shift = Perm::from_images((0..p).map(|x| (x + 1) % p).collect()).unwrap();
            let scale = Perm::from_images((0..p).map(|x| x * a % p).collect()).unwrap();
            (PermGroup::new(p, vec![scale]).unwrap(), PermGroup::new(p, vec![shift]).unwrap())
        };
        let v4 = group(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        // (name, H, V, known answer)
        let cases: Vec<(&str, PermGroup, PermGroup, Option<bool>)> = vec![
            ("S3", group(3, &["(0 1)"]), group(3, &["(0 1 2)"]), Some(true)),
            ("S3, V = 1", symmetric(3), PermGroup::trivial(3), Some(true)),
            ("C3 wr S2", w2.top().clone(), w2.base().clone(), None),
            ("C3 wr S4", w4.top().clone(), w4.base().clone(), None),
            ("C3^4 : D8", top(&w4, &["(0 1 2 3)", "(0 2)"]), w4.base().clone(), None),
            ("C3^4 : C2", top(&w4, &["(0 1)"]), w4.base().clone(), None),
            ("S4 over V4", group(4, &["(0 1 2)", "(0 1)"]), v4.clone(), Some(true)),
            ("A4 over V4", group(4, &["(0 1 2)"]), v4.clone(), Some(true)),
            ("D8 over V4", group(4, &["(0 1)"]), v4, Some(false)),
            ("D8 over C4", group(4, &["(1 3)"]), group(4, &["(0 1 2 3)"]), Some(false)),
            ("F7:C3", affine(7, 2).0, affine(7, 2).1, Some(true)),
            ("F5:C4", affine(5, 2).0, affine(5, 2).1, Some(true)),
        ];
        for (name, h, v, known) in &cases {
            let g = h.join(v).unwrap();
            let crit = criterion_abelian_complement(h, v, &g, CAP).map_err(|e| format!("{name}: {e}"))?;
            let def = is_pronormal(h, &g, CAP).map_err(|e| format!("{name}: {e}"))?;
            ensure!(crit.holds == def.pronormal, "{name}: criterion {} vs definition {}", crit.holds, def.pronormal);
            if let Some(k) = known {
                ensure!(def.pronormal == *k, "{name}: expected pronormal = {k}");
            }
            if let Some(f) = &crit.failing {
                ensure!(f.product_order < f.subgroup.order(), "{name}: failing U does not fail");
            }
        }
        Ok(format!("{} instances agree", cases.len()))
    })
}

/// Checks `C_U(H)·[H,U] = U` by forming the product set explicitly.
fn centralizer_factorization(w: &WreathProduct, h: &PermGroup) -> Result<usize, String> {
    let subs = h_invariant_subgroups(h, w.base(), CAP).map_err(|e| e.to_string())?;
    for u in &subs {
        let cent: Vec<Perm> = u.iter().filter(|x| h.gens().iter().all(|y| x.mul(y) == y.mul(x))).collect();
        let comm: Vec<Perm> = commutator_subgroup(h, u, CAP).unwrap().iter().collect();
        let product: HashSet<Perm> = cent.iter().flat_map(|c| comm.iter().map(move |k| c.mul(k))).collect();
        ensure!(product.len() as u64 == u.order(), "|C_U(H)[H,U]| = {} < |U| = {}", product.len(), u.order());
    }
    Ok(subs.len())
}

fn coprime_factorization() -> Outcome {
    timed("n = 2, 4", Duration::from_secs(30), || {
        let mut notes = Vec::new();
        for (n, k) in [(2usize, vec!["(0 1)"]), (4, vec!["(0 1 2 3)", "(0 2)"])] {
            let w = wreath_product(&cyclic(3), &symmetric(n)).unwrap();
            let k = top(&w, &k);
            let verdict = coprime_factorization_check(&w, w.top(), &k, CAP).map_err(|e| e.to_string())?;
            ensure!(verdict.all_hold, "n = {n}: factorization fails");
            let checked = centralizer_factorization(&w, w.top())?;
            ensure!(checked == verdict.checked_subgroup_count, "n = {n}: subgroup counts differ");
            notes.push(format!("n = {n}: {checked} invariant subgroups"));
        }
        Ok(notes.join("; "))
    })
}

/// Rank over GF(p) by elimination.
fn rank_mod(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = (1..p).find(|&x| x * rows[r][c] % p == 1).unwrap();
        let pivot: Vec<u32> = rows[r].iter().map(|&x| x * inv % p).collect();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[c];
            for k in 0..cols {
                row[k] = (row[k] + p * p - f * pivot[k] % p) % p;
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

fn frobenius_min_poly() -> Outcome {
    timed("both", Duration::from_secs(5), || {
        let mut notes = Vec::new();
        for (p, n) in [(7u64, 3u64), (5, 4)] {
            let fc = frobenius_fc(p, n).map_err(|e| e.to_string())?;
            let (field, m, a) = (fc.matrix_field, &fc.complement_matrix, &fc.kernel_matrix);
            let r = field.modulus() as u64;
            ensure!(p % r != 0, "characteristic {r} divides |F| = {p}");
            // faithful: the matrices generate a group of order p·n
            let mut seen: HashSet<Vec<u32>> = HashSet::new();
            let id = Matrix::identity(field, m.dim());
            let key = |x: &Matrix| (0..x.dim()).flat_map(|i| x.row(i).to_vec()).collect::<Vec<u32>>();
            seen.insert(key(&id));
            let mut frontier = vec![id];
            while let Some(x) = frontier.pop() {
                for s in [a, m] {
                    let y = x.mul(s).unwrap();
                    if seen.insert(key(&y)) {
                        frontier.push(y);
                    }
                }
            }
            ensure!(seen.len() as u64 == p * n, "({p},{n}): matrix group of order {}", seen.len());
            // min poly λ^n − 1 ⇔ M^n = I and I, M, …, M^{n−1} independent
            ensure!(m.pow(n).is_identity(), "({p},{n}): M^n ≠ I");
            let powers: Vec<Vec<u32>> = (0..n).map(|e| key(&m.pow(e))).collect();
            ensure!(rank_mod(powers, r as u32) == n as usize, "({p},{n}): powers of M dependent");
            let min = m.min_poly();
            ensure!(min == Poly::x_pow_minus_one(field, n as usize), "({p},{n}): min poly {min}");
            notes.push(format!("({p},{n}) over GF({r}): {min}"));
        }
        Ok(notes.join("; "))
    })
}

fn odd_order_abelian() -> Outcome {
    timed("q = 5, 11, 13", Duration::from_secs(60), || {
        let mut notes = Vec::new();
        for q in [5u64, 11, 13] {
            let g = psl2(q as u32).unwrap().into_group();
            let admissible = |k: u64| k % 2 == 1 && !k.is_multiple_of(q);
            let scan = odd_order_subgroups(&g, q, CAP, 100_000).map_err(|e| e.to_string())?;
            ensure!(scan.complete, "q={q}: scan incomplete");
            // coverage: every admissible element lies in some found subgroup
            let covered: HashSet<Perm> = scan.subgroups.iter().flat_map(|x| x.iter()).collect();
            let elements = g.iter().filter(|x| !x.is_identity() && admissible(x.order())).count();
            ensure!(covered.len() - 1 == elements, "q={q}: scan misses admissible elements");
            for x in &scan.subgroups {
                ensure!(admissible(x.order()), "q={q}: |X| = {} not admissible", x.order());
                ensure!(x.is_abelian(), "q={q}: nonabelian subgroup of order {}", x.order());
                let n = normalizer(&g, x, CAP).unwrap();
                let bad = n.iter().any(|y| y.order() % 2 == 1 && x.gens().iter().any(|s| s.mul(&y) != y.mul(s)));
                ensure!(!bad, "q={q}: odd element of N(X) fails to centralize X");
            }
            notes.push(format!("q={q}: {} subgroups", scan.subgroups.len()));
        }
        Ok(notes.join("; "))
    })
}

fn wreath_battery() -> Outcome {
    timed("battery", Duration::from_secs(300), || {
        let cases: Vec<(&str, PermGroup, usize)> = vec![
            ("C3 wr S2", cyclic(3), 2),
            ("C3 wr S4", cyclic(3), 4),
            ("A4 wr S2", alternating(4), 2),
            ("A5 wr S2", alternating(5), 2),
        ];
        let mut notes = Vec::new();
        for (name, a, n) in cases {
            let w = wreath_product(&a, &symmetric(n)).unwrap();
            let g = w.group();
            let s = sylow_2(g, CAP).unwrap();
            let ns = normalizer(g, &s, CAP).unwrap();
            let scan = odd_index_overgroups(g, &s, CAP, 100_000).map_err(|e| e.to_string())?;
            ensure!(scan.complete, "{name}: scan incomplete");
            for h in &scan.subgroups {
                let v = is_pronormal_sylow_with(h.group(), &ns, CAP).map_err(|e| e.to_string())?;
                ensure!(v.pronormal, "{name}: subgroup of order {} is not pronormal", h.order());
            }
            notes.push(format!("{name}: {}", scan.subgroups.len()));
        }
        Ok(notes.join(", ") + " odd-index subgroups, all pronormal")
    })
}

fn property_suites() -> Outcome {
    // Sylow reduction vs definition, and Lagrange/Sylow invariants
    let mut groups: Vec<(String, PermGroup)> = vec![
        ("S3".into(), symmetric(3)),
        ("S4".into(), symmetric(4)),
        ("S5".into(), symmetric(5)),
        ("S6".into(), symmetric(6)),
        ("A4".into(), alternating(4)),
        ("A5".into(), alternating(5)),
    ];
    groups.extend((3..=12).map(|m| (format!("dihedral({m})"), dihedral(m).unwrap())));
    for (name, a, n) in [
        ("C3 wr S2", cyclic(3), 2),
        ("C3 wr S3", cyclic(3), 3),
        ("C3 wr S4", cyclic(3), 4),
        ("A4 wr S2", alternating(4), 2),
        ("D3 wr S2", dihedral(3).unwrap(), 2),
    ] {
        groups.push((name.into(), wreath_product(&a, &symmetric(n)).unwrap().group().clone()));
    }
    for q in [5u32, 11, 13] {
        groups.push((format!("PSL2({q})"), psl2(q).unwrap().into_group()));
        groups.push((format!("PGL2({q})"), pgl2(q).unwrap().into_group()));
    }
    groups.retain(|(_, g)| g.order() <= 2000);
    let (mut subgroups, mut nonpronormal) = (0, 0);
    for (name, g) in &groups {
        let s = sylow_2(g, CAP).unwrap();
        ensure!(s.order() == g.order() & g.order().wrapping_neg(), "{name}: |S| is not the 2-part");
        let ns = normalizer(g, &s, CAP).unwrap();
        ensure!((g.order() / ns.order()) % 2 == 1, "{name}: even number of Sylow subgroups");
        for x in g.iter().step_by((g.order() as usize / 5).max(1)) {
            let t = s.conjugate(&x).unwrap();
            ensure!(are_conjugate_in(&s, &t, g, CAP).unwrap().is_some(), "{name}: Sylow subgroups not conjugate");
        }
        let scan = odd_index_overgroups(g, &s, CAP, 100_000).map_err(|e| e.to_string())?;
        ensure!(scan.complete, "{name}: scan incomplete");
        for h in &scan.subgroups {
            ensure!(g.order() % h.order() == 0, "{name}: Lagrange fails");
            let reduced = is_pronormal_sylow_with(h.group(), &ns, CAP).unwrap();
            let full = is_pronormal(h.group(), g, CAP).unwrap();
            ensure!(reduced.pronormal == full.pronormal, "{name}: |H| = {}: routes disagree", h.order());
            subgroups += 1;
            nonpronormal += !full.pronormal as usize;
        }
    }
    // determinism of the full scenario suite, serial vs parallel
    let serial = run_all(None, 1, |_| Caps::default()).map_err(|e| e.to_string())?;
    let parallel = run_all(None, 4, |_| Caps::default()).map_err(|e| e.to_string())?;
    let strip = |s: &pronorm::scenarios::Summary| -> Vec<String> {
        s.reports.iter().map(|r| r.without_timing().to_json()).collect()
    };
    ensure!(strip(&serial) == strip(&parallel), "serial and parallel reports differ");
    ensure!(
        serial.failed == 0 && serial.truncated == 0,
        "suite: {} failed, {} truncated",
        serial.failed,
        serial.truncated
    );
    let psp6 = serial.reports.iter().find(|r| r.id == "nonpronormal-psp6-3").ok_or("PSp6(3) scenario missing")?;
    ensure!(psp6.status == Status::Unreachable, "PSp6(3) scenario not flagged unreachable");
    Ok(format!(
        "{} groups, {subgroups} odd-index subgroups ({nonpronormal} nonpronormal) agree; {} scenarios deterministic; PSp6(3) flagged unreachable",
        groups.len(),
        serial.reports.len()
    ))
}

fn main() {
    #[allow(clippy::type_complexity)]
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("order certifications", order_certifications),
        ("Sylow normalizer in PSL2(q) is A4", psl2_sylow_normalizers),
        ("Sylow normalizer quotient in PSp4(3)", psp4_3_sylow_normalizer),
        ("self-normalizing Sylow 2-subgroups", self_normalizing_sylows),
        ("odd-index subgroups of PSp4(3) are pronormal", theorem2_psp4_3),
        ("abelian-complement criterion equals definition", criterion_equivalence),
        ("coprime centralizer factorization", coprime_factorization),
        ("Frobenius complement minimal polynomial", frobenius_min_poly),
        ("odd-order subgroups of PSL2(q) are abelian", odd_order_abelian),
        ("wreath battery pronormality", wreath_battery),
        ("property suites and determinism", property_suites),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let took = secs(start.elapsed());
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {title} [{took}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {title} [{took}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
