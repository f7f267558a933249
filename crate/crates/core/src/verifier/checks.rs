//! The checks. Each is a pure predicate over one group and parameter.
//! Fractional inequalities are compared by integer cross-multiplication.

use serde_json::{json, Value};

use super::{CheckId, CheckResult, GroupContext, Status};
use crate::arith::{divisors, is_prime, split_prime_power};
use crate::bitset::BitSet;
use crate::error::Error;
use crate::power::{analyze_powers_in_subgroup, generator_partition, p_singular_data, reduce_k_to_prime};
use crate::structure::{
    central_involution_quotient_check, classify_with, exception_with, p_residual, sylow_subgroup,
};

fn result(ctx: &GroupContext, id: CheckId, param: Option<u64>, status: Status, witness: Value) -> CheckResult {
    CheckResult { check_id: id.name().to_string(), group_label: ctx.group.label().to_string(), param, status, witness }
}

fn pass_or_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn skipped(ctx: &GroupContext, id: CheckId, param: Option<u64>, err: &Error) -> CheckResult {
    result(ctx, id, param, Status::Skipped, json!({ "reason": err.to_string() }))
}

/// Runs `id` with parameter `param` (ignored by unparameterised checks).
pub fn run_check(ctx: &GroupContext, id: CheckId, param: u64) -> CheckResult {
    match id {
        CheckId::Divisible => check_divisible(ctx, param),
        CheckId::SubgroupMonotonicity => check_subgroup_monotonicity(ctx, param),
        CheckId::SylowRestricts => check_sylow_restricts(ctx, param),
        CheckId::CenterBound => check_center_bound(ctx, param),
        CheckId::QuotientRatio => check_quotient_ratio(ctx, param),
        CheckId::PgroupBound => check_pgroup_bound(ctx, param),
        CheckId::Propagation => check_propagation(ctx, param),
        CheckId::TheoremB => check_theorem_b(ctx, param),
        CheckId::KToPrime => check_k_to_prime(ctx, param),
        CheckId::Newbound => check_newbound(ctx),
        CheckId::LengthBounds => check_length_bounds(ctx, param),
        CheckId::ExponentBound => check_exponent_bound(ctx, param),
        CheckId::OddType1 => check_odd_type1(ctx, param),
        CheckId::OddType2 => check_odd_type2(ctx, param),
        CheckId::NewJumps => check_new_jumps(ctx, param),
        CheckId::FrobeniusSolution => check_frobenius_solution(ctx),
        CheckId::ThetaSum => check_theta_sum(ctx, param),
    }
}

/// `(p − 1) | n_p(G)`, and each generator-equivalence block of `N_p(G)` has
/// size divisible by `p − 1`.
pub fn check_divisible(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::Divisible;
    let a = ctx.powers(p);
    let n = a.n() as u64;
    let blocks = generator_partition(ctx.group, &a.non_powers);
    let blocks_ok = blocks.iter().all(|b| b.len() as u64 % (p - 1) == 0);
    let ok = n % (p - 1) == 0 && blocks_ok;
    result(ctx, id, Some(p), pass_or_fail(ok), json!({ "n": n, "p_minus_1": p - 1, "blocks": blocks.len(), "blocks_divisible": blocks_ok }))
}

/// For all `H ≤ G`: `n_p(H) ≤ n_p(G)`, with equality iff `N_p(H) = N_p(G)`.
pub fn check_subgroup_monotonicity(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::SubgroupMonotonicity;
    let lattice = match ctx.lattice() {
        Ok(l) => l,
        Err(e) => return skipped(ctx, id, Some(p), &e),
    };
    let whole = ctx.powers(p);
    let mut equality = 0;
    for h in lattice {
        let sub = analyze_powers_in_subgroup(ctx.group, h, p).expect("p >= 1");
        let same_count = sub.n() == whole.n();
        let same_set = sub.non_powers == whole.non_powers;
        if sub.n() > whole.n() || same_count != same_set {
            return result(ctx, id, Some(p), Status::Fail, json!({
                "subgroup": h.members(), "n_p_H": sub.n(), "n_p_G": whole.n(),
                "N_p_H": sub.non_powers, "N_p_G": whole.non_powers,
            }));
        }
        equality += usize::from(same_count);
    }
    result(ctx, id, Some(p), Status::Pass, json!({ "subgroups": lattice.len(), "equality_subgroups": equality, "n_p": whole.n() }))
}

/// Every proper `H` with `n_p(H) = n_p(G) > 0` contains `O^{p'}(G)` and a Sylow p-subgroup.
pub fn check_sylow_restricts(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::SylowRestricts;
    let lattice = match ctx.lattice() {
        Ok(l) => l,
        Err(e) => return skipped(ctx, id, Some(p), &e),
    };
    let n = ctx.n(p);
    if n == 0 {
        return result(ctx, id, Some(p), Status::Pass, json!({ "n_p": 0, "equal_proper_subgroups": 0 }));
    }
    let residual = p_residual(ctx.group, p).expect("p prime");
    let sylow = sylow_subgroup(ctx.group, p).expect("p prime");
    let mut count = 0;
    for h in lattice.iter().filter(|h| h.order() < ctx.group.order()) {
        if analyze_powers_in_subgroup(ctx.group, h, p).expect("p >= 1").n() != n {
            continue;
        }
        count += 1;
        if !residual.is_subset_of(h) || !sylow.is_subset_of(h) {
            return result(ctx, id, Some(p), Status::Fail, json!({
                "subgroup": h.members(), "residual": residual.members(), "sylow": sylow.members(),
            }));
        }
    }
    result(ctx, id, Some(p), Status::Pass, json!({ "n_p": n, "equal_proper_subgroups": count, "residual_order": residual.order() }))
}

/// If `p | |Z(G)|`: `|G| ≤ p·n_p/(p−1)`, and equality forces a normal cyclic Sylow p-subgroup.
pub fn check_center_bound(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::CenterBound;
    let g = ctx.group;
    let z = g.center().order() as u64;
    if z % p != 0 {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "center_order": z }));
    }
    let order = g.order() as u64;
    let n = ctx.n(p) as u64;
    let (lhs, rhs) = (order * (p - 1), p * n);
    let mut ok = lhs <= rhs;
    let mut witness = json!({ "order": order, "n": n, "lhs": lhs, "rhs": rhs, "equality": lhs == rhs });
    if ok && lhs == rhs {
        let sylow = sylow_subgroup(g, p).expect("p prime");
        let normal = g.is_normal(&sylow);
        let cyclic = sylow.members().iter().any(|&x| g.element_order(x) == sylow.order());
        ok = normal && cyclic;
        witness["sylow_order"] = json!(sylow.order());
        witness["sylow_normal"] = json!(normal);
        witness["sylow_cyclic"] = json!(cyclic);
    }
    result(ctx, id, Some(p), pass_or_fail(ok), witness)
}

/// For all normal `N`: `n_k(G/N)/|G/N| ≤ n_k(G)/|G|`, with equality iff
/// every element of each coset `x^k N` is a k-th power.
pub fn check_quotient_ratio(ctx: &GroupContext, k: u64) -> CheckResult {
    let id = CheckId::QuotientRatio;
    let quotients = match ctx.quotients() {
        Ok(q) => q,
        Err(e) => return skipped(ctx, id, Some(k), &e),
    };
    let g = ctx.group;
    let whole = ctx.powers(k);
    let mut equalities = 0;
    for q in quotients {
        let qa = crate::power::analyze_powers(&q.group, k).expect("k >= 1");
        let lhs = qa.n() * g.order();
        let rhs = whole.n() * q.group.order();
        let image = BitSet::from_indices(q.group.order(), qa.power_image.iter().copied());
        let condition = g.elements().all(|y| !image.contains(q.projection[y]) || !whole.is_non_power(y));
        let equal = lhs == rhs;
        if lhs > rhs || equal != condition {
            return result(ctx, id, Some(k), Status::Fail, json!({
                "normal": q.normal.members(), "n_k_quotient": qa.n(), "quotient_order": q.group.order(),
                "n_k": whole.n(), "order": g.order(), "condition": condition,
            }));
        }
        equalities += usize::from(equal);
    }
    result(ctx, id, Some(k), Status::Pass, json!({ "normal_subgroups": quotients.len(), "equalities": equalities }))
}

/// For a p-group of order `p^m`: cyclic gives `n = p^m − p^{m−1}`, otherwise `n ≥ p^m − p^{m−2}`.
pub fn check_pgroup_bound(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::PgroupBound;
    let order = ctx.group.order() as u64;
    let (m, rest) = split_prime_power(order, p);
    if rest != 1 || m == 0 {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "order": order }));
    }
    let n = ctx.n(p) as u64;
    let cyclic = ctx.group.is_cyclic();
    let (ok, bound) = if cyclic {
        let b = order - order / p;
        (n == b, b)
    } else {
        let b = order - order / (p * p);
        (n >= b, b)
    };
    result(ctx, id, Some(p), pass_or_fail(ok), json!({ "order": order, "m": m, "n": n, "cyclic": cyclic, "bound": bound }))
}

/// `|X| ≤ m`, where `X` is the set of p'-parts of p-singular element orders
/// and `m` the length of `N_p(G)`. With `n_p = 0` there must be no p-singular elements.
pub fn check_propagation(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::Propagation;
    let data = p_singular_data(ctx.group, p).expect("p prime");
    let profile = ctx.profile(p);
    let m = profile.length();
    let n = ctx.n(p);
    let ok = if n > 0 { data.x.len() <= m } else { data.y.is_empty() };
    result(ctx, id, Some(p), pass_or_fail(ok), json!({ "Y": data.y, "X": data.x, "m": m, "n": n }))
}

/// With `n = n_k(G) > 0`: `|G| ≤ n(n+1)`, and `|G| ≤ n²` unless `G` is the
/// Frobenius exception with `N_k(G)` the non-identity kernel.
pub fn check_theorem_b(ctx: &GroupContext, k: u64) -> CheckResult {
    let id = CheckId::TheoremB;
    let a = ctx.powers(k);
    let n = a.n();
    let order = ctx.group.order();
    if n == 0 {
        return result(ctx, id, Some(k), Status::NotApplicable, json!({ "n": 0 }));
    }
    let within = order <= n * (n + 1);
    let mut witness = json!({ "order": order, "n": n, "n_squared": n * n, "n_n_plus_1": n * (n + 1) });
    if !within {
        return result(ctx, id, Some(k), Status::Fail, witness);
    }
    if order <= n * n {
        return result(ctx, id, Some(k), Status::Pass, witness);
    }
    let frob = || ctx.frobenius().map(|f| f.cloned());
    match exception_with(ctx.group, &a, frob) {
        Ok(exception) => {
            witness["exception"] = json!(exception);
            if exception {
                witness["kernel_order"] = json!(n + 1);
            }
            result(ctx, id, Some(k), pass_or_fail(exception), witness)
        }
        Err(e) => skipped(ctx, id, Some(k), &e),
    }
}

/// With `n_k(G) > 0`, some prime `p | k` has `0 < n_p(G) ≤ n_k(G)`.
pub fn check_k_to_prime(ctx: &GroupContext, k: u64) -> CheckResult {
    let id = CheckId::KToPrime;
    let nk = ctx.n(k);
    if nk == 0 {
        return result(ctx, id, Some(k), Status::NotApplicable, json!({ "n_k": 0 }));
    }
    match reduce_k_to_prime(ctx.group, k) {
        Ok(p) => result(ctx, id, Some(k), Status::Pass, json!({ "n_k": nk, "p": p, "n_p": ctx.n(p) })),
        Err(e) => result(ctx, id, Some(k), Status::Fail, json!({ "n_k": nk, "error": e.to_string() })),
    }
}

/// `|G| = n_k(G)²` for some `k` only when `G ≅ C4` and `k ≡ 2 (mod 4)`.
/// `k` ranges over `1..=exponent(G)`, which covers every residue.
pub fn check_newbound(ctx: &GroupContext) -> CheckResult {
    let id = CheckId::Newbound;
    let order = ctx.group.order();
    let attaining: Vec<u64> = (1..=ctx.group.exponent())
        .filter(|&k| {
            let n = ctx.n(k);
            n > 0 && n * n == order
        })
        .collect();
    let ok = attaining.is_empty()
        || (ctx.group.is_cyclic_of_order_4() && attaining.iter().all(|k| k % 4 == 2));
    result(ctx, id, None, pass_or_fail(ok), json!({ "order": order, "attaining_k": attaining }))
}

/// Constraints on the length `m` and type of `N_p(G)`:
/// `|G| = n²` forces `m = 1` or `(p, m) = (2, 2)`; `m = 1` forbids `|G| = n²`;
/// `|G| > n²/2` forces `m ≤ 2` or `(p, m) = (2, 3)`, and for odd `p | |G|` the
/// type `(p)`, `(p, p)` or `(p, qp)` with `q` prime.
pub fn check_length_bounds(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::LengthBounds;
    let n = ctx.n(p);
    if n == 0 {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "n": 0 }));
    }
    let order = ctx.group.order();
    let profile = ctx.profile(p);
    let m = profile.length();
    let ty = profile.type_tuple();
    let mut violations: Vec<&str> = Vec::new();
    if order == n * n && !(m == 1 || (p == 2 && m == 2)) {
        violations.push("square_order_length");
    }
    if m == 1 && order == n * n {
        violations.push("single_class_square_order");
    }
    let large = 2 * order > n * n;
    if large && !(m <= 2 || (p == 2 && m == 3)) {
        violations.push("large_order_length");
    }
    if large && p != 2 && order as u64 % p == 0 {
        let pu = p as usize;
        let shape_ok = match ty.as_slice() {
            [a] => *a == pu,
            [a, b] if *a == pu => *b == pu || (*b % pu == 0 && is_prime((*b / pu) as u64)),
            _ => false,
        };
        if !shape_ok {
            violations.push("odd_type_shape");
        }
    }
    let witness = json!({ "order": order, "n": n, "m": m, "type": ty, "violations": violations });
    result(ctx, id, Some(p), pass_or_fail(violations.is_empty()), witness)
}

/// With an element of order `p^k`, `k > 1` maximal: `|G|·p^{k−2}(p−1) ≤ n_p²`.
pub fn check_exponent_bound(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::ExponentBound;
    let g = ctx.group;
    let k = g.element_orders().iter().map(|&o| split_prime_power(o as u64, p).0).max().unwrap_or(0);
    if k <= 1 {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "max_p_exponent": k }));
    }
    let n = ctx.n(p) as u64;
    let lhs = g.order() as u64 * p.pow(k - 2) * (p - 1);
    let rhs = n * n;
    result(ctx, id, Some(p), pass_or_fail(lhs <= rhs), json!({ "max_p_exponent": k, "n": n, "lhs": lhs, "rhs": rhs }))
}

fn odd_divisor(ctx: &GroupContext, p: u64) -> bool {
    p != 2 && ctx.group.order() as u64 % p == 0
}

/// Odd `p | |G|`, type `(p)`: `|G| = n(n+1)` or `3|G| ≤ n(n+1)`.
pub fn check_odd_type1(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::OddType1;
    if !odd_divisor(ctx, p) {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "reason": "p not an odd divisor of |G|" }));
    }
    let ty = ctx.profile(p).type_tuple();
    if ty != [p as usize] {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "type": ty }));
    }
    let n = ctx.n(p);
    let order = ctx.group.order();
    let exact = order == n * (n + 1);
    let ok = exact || 3 * order <= n * (n + 1);
    result(ctx, id, Some(p), pass_or_fail(ok), json!({ "order": order, "n": n, "exact_branch": exact }))
}

/// Odd `p | |G|`, length 2, `|G| > n²/2`: type `(p, p)` with `|G| = (n/2)(n+1)`
/// and `G` Frobenius, or type `(p, 2p)` with `|G| = (n/2)(n+2)` and a central
/// involution whose quotient is Frobenius of order `(n/2)(n/2+1)`.
pub fn check_odd_type2(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::OddType2;
    if !odd_divisor(ctx, p) {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "reason": "p not an odd divisor of |G|" }));
    }
    let n = ctx.n(p);
    let order = ctx.group.order();
    let profile = ctx.profile(p);
    let ty = profile.type_tuple();
    if profile.length() != 2 || 2 * order <= n * n {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "type": ty, "order": order, "n": n }));
    }
    let pu = p as usize;
    let mut witness = json!({ "type": ty, "order": order, "n": n });
    let ok = if ty == [pu, pu] && 2 * order == n * (n + 1) {
        let a = ctx.powers(p);
        match exception_with(ctx.group, &a, || ctx.frobenius().map(|f| f.cloned())) {
            Ok(kernel_is_non_powers) => {
                witness["frobenius_kernel_order"] = json!(kernel_is_non_powers.then_some(n + 1));
                kernel_is_non_powers
            }
            Err(e) => return skipped(ctx, id, Some(p), &e),
        }
    } else if ty == [pu, 2 * pu] && 2 * order == n * (n + 2) {
        match central_involution_quotient_check(ctx.group, p, ctx.limits.lattice_cap) {
            Ok(w) => {
                witness["central_involution"] = json!(w);
                w.is_some()
            }
            Err(e) => return skipped(ctx, id, Some(p), &e),
        }
    } else {
        false
    };
    result(ctx, id, Some(p), pass_or_fail(ok), witness)
}

/// One of the four alternatives holds, with its structure verified.
pub fn check_new_jumps(ctx: &GroupContext, p: u64) -> CheckResult {
    let id = CheckId::NewJumps;
    if !odd_divisor(ctx, p) {
        return result(ctx, id, Some(p), Status::NotApplicable, json!({ "reason": "p not an odd divisor of |G|" }));
    }
    let a = ctx.powers(p);
    let mut frob = || ctx.frobenius().map(|f| f.cloned());
    match classify_with(ctx.group, &a, ctx.limits.lattice_cap, &mut frob) {
        Ok(outcome) => {
            let status = pass_or_fail(outcome.case.is_some());
            let mut witness = json!(outcome);
            witness["case_tag"] = json!(outcome.case.map(|c| c.tag()));
            result(ctx, id, Some(p), status, witness)
        }
        Err(e) => skipped(ctx, id, Some(p), &e),
    }
}

/// For every divisor `m` of `|G|`, `m` divides `#{x : x^m = 1}`.
pub fn check_frobenius_solution(ctx: &GroupContext) -> CheckResult {
    let id = CheckId::FrobeniusSolution;
    let g = ctx.group;
    let mut counts = serde_json::Map::new();
    let mut ok = true;
    for m in divisors(g.order() as u64) {
        let count = g.elements().filter(|&x| m % g.element_order(x) as u64 == 0).count() as u64;
        ok &= count % m == 0;
        counts.insert(m.to_string(), json!(count));
    }
    result(ctx, id, None, pass_or_fail(ok), json!({ "solution_counts": counts }))
}

/// `n_k = Σ_{x ∈ G^k} (θ(x) − 1)`, `Σ θ(x) = |G|`, and `n_k` agrees with a
/// direct count of elements missed by the unreduced power map.
pub fn check_theta_sum(ctx: &GroupContext, k: u64) -> CheckResult {
    let id = CheckId::ThetaSum;
    let g = ctx.group;
    let a = ctx.powers(k);
    let mut hit = BitSet::new(g.order());
    for x in g.elements() {
        hit.insert(g.power(x, k));
    }
    let direct = g.order() - hit.count();
    let total: usize = a.theta.values().sum();
    let ok = a.theta_excess() == a.n() && total == g.order() && direct == a.n();
    result(ctx, id, Some(k), pass_or_fail(ok), json!({ "n_k": a.n(), "theta_excess": a.theta_excess(), "direct_count": direct }))
}
