//! One check function per registry entry. Each returns the number of
//! quantifier instances it examined, or the first failing instance.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::{Ctx, IdempotentReading, Outcome, ProductReading, Reading, Standing, SubsetFamily};
use crate::analysis::RingAnalysis;
use crate::classify::{self, RegularNotion};
use crate::construct::{
    classical_n_ideal, enumerate_good_homomorphisms, enumerate_subhyperrings, fundamental_ring,
    matrix_hyperring, quotient, subhyperring_restrict,
};
use crate::ideal;
use crate::ring::{HyperRing, Provenance};
use crate::subset::ElementSubset;

fn cx(v: Value) -> Outcome {
    Outcome::Counterexample(v)
}

fn regular(ctx: &Ctx, rd: &Reading) -> ElementSubset {
    match rd.regular {
        RegularNotion::Nzd => ctx.a.nzd,
        RegularNotion::Vnr => ctx.a.vnr,
    }
}

fn prod(ctx: &Ctx, rd: &Reading, i: &ElementSubset, j: &ElementSubset) -> ElementSubset {
    match rd.product {
        ProductReading::Raw => ideal::raw_product(ctx.ring(), i, j),
        ProductReading::Closed => ideal::ideal_product(ctx.ring(), i, j).members,
    }
}

fn rad0(ctx: &Ctx, rd: &Reading) -> ElementSubset {
    ctx.a.mode(rd.prime).rad0
}

fn is_n(ctx: &Ctx, rd: &Reading, i: &ElementSubset) -> bool {
    ctx.a.is_n(i, rd.prime)
}

/// Hyperideal satisfying the r-law.
fn r_ideals(a: &RingAnalysis) -> Vec<ElementSubset> {
    a.ideals
        .iter()
        .zip(&a.r_flags)
        .filter(|(_, &f)| f)
        .map(|(i, _)| *i)
        .collect()
}

fn ann_of_set(ring: &HyperRing, s: &ElementSubset) -> ElementSubset {
    s.iter().fold(ring.full(), |acc, x| acc.intersection(&ring.ann(x)))
}

fn is_ideal_r(a: &RingAnalysis, s: &ElementSubset) -> bool {
    a.is_ideal(s) && a.is_r(s)
}

/// `k`-element subsets of `pool`, in order.
fn combos(pool: &[ElementSubset], k: usize) -> Vec<Vec<ElementSubset>> {
    fn go(pool: &[ElementSubset], k: usize, start: usize, cur: &mut Vec<ElementSubset>, out: &mut Vec<Vec<ElementSubset>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

fn union_all(sets: &[ElementSubset]) -> ElementSubset {
    sets.iter().fold(ElementSubset::EMPTY, |acc, s| acc.union(s))
}

pub fn t01(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let reg = regular(ctx, rd);
    let mut n = 0;
    for i in &a.ideals {
        let lhs = a.is_r(i);
        let mut breaking = None;
        'outer: for i1 in &a.ideals {
            if !i1.intersects(&reg) {
                continue;
            }
            for i2 in &a.ideals {
                if prod(ctx, rd, i1, i2).is_subset(i) && !i2.is_subset(i) {
                    breaking = Some((*i1, *i2));
                    break 'outer;
                }
            }
        }
        n += 1;
        if lhs != breaking.is_none() {
            return cx(json!({"part": 1, "ideal": i, "r_ideal": lhs, "breaking_pair": breaking}));
        }
    }
    let rs = r_ideals(a);
    for i in a.ideals.iter().filter(|i| i.intersects(&reg)) {
        for (k, i1) in rs.iter().enumerate() {
            for i2 in &rs[k + 1..] {
                n += 1;
                let same_product = prod(ctx, rd, i, i1) == prod(ctx, rd, i, i2);
                let same_meet = i.intersection(i1) == i.intersection(i2);
                if same_product || same_meet {
                    return cx(json!({"part": 2, "ideal": i, "r_ideals": [i1, i2],
                        "same_product": same_product, "same_intersection": same_meet}));
                }
            }
        }
    }
    for i in &a.ideals {
        for j in a.ideals.iter().filter(|j| j.intersects(&reg)) {
            let p = prod(ctx, rd, i, j);
            if !is_ideal_r(a, &p) {
                continue;
            }
            n += 1;
            if p != *i || !a.is_r(i) {
                return cx(json!({"part": 3, "ideal": i, "multiplier": j, "product": p}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t02(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let ring = ctx.ring();
    let reg = regular(ctx, rd);
    let principal: Vec<ElementSubset> = (0..ring.size())
        .map(|x| ideal::generated_ideal(ring, &ElementSubset::singleton(x)))
        .collect();
    let mut n = 0;
    for i in &a.ideals {
        n += 1;
        let s1 = a.is_r(i);
        let s2_fail = reg.iter().find(|&x| {
            let single = ElementSubset::singleton(x);
            principal[x].intersection(i) != prod(ctx, rd, &single, i)
        });
        let s3_fail = reg
            .difference(i)
            .iter()
            .find(|&x| ideal::colon(ring, i, &ElementSubset::singleton(x)) != *i);
        let s2 = s2_fail.is_none();
        let s3 = s3_fail.is_none();
        if s1 != s2 || s2 != s3 {
            return cx(json!({"ideal": i, "r_ideal": s1, "principal_meet": s2, "colon": s3,
                "principal_meet_fails_at": s2_fail, "colon_fails_at": s3_fail}));
        }
    }
    Outcome::Holds(n)
}

pub fn t03(ctx: &Ctx, _rd: &Reading) -> Outcome {
    let rs = r_ideals(ctx.a);
    let mut n = 0;
    for (k, i) in rs.iter().enumerate() {
        for j in &rs[k..] {
            n += 1;
            let m = i.intersection(j);
            if !is_ideal_r(ctx.a, &m) {
                return cx(json!({"r_ideals": [i, j], "intersection": m}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t04(ctx: &Ctx, _rd: &Reading) -> Outcome {
    let a = ctx.a;
    let mut n = 0;
    for i in a.proper_r_ideals() {
        n += 1;
        if !i.is_subset(&a.zero_divisors) {
            return cx(json!({"ideal": i, "outside_zero_divisors": i.difference(&a.zero_divisors)}));
        }
    }
    Outcome::Holds(n)
}

pub fn t05(ctx: &Ctx, _rd: &Reading) -> Outcome {
    let ring = ctx.ring();
    let mut n = 0;
    for x in 1..ring.size() {
        n += 1;
        let ann = ring.ann(x);
        if !is_ideal_r(ctx.a, &ann) {
            return cx(json!({"x": x, "ann": ann, "is_hyperideal": ctx.a.is_ideal(&ann)}));
        }
    }
    Outcome::Holds(n)
}

pub fn t06(ctx: &Ctx, _rd: &Reading) -> Outcome {
    let a = ctx.a;
    let ring = ctx.ring();
    let s1 = a.flags.integral_hyperdomain;
    let s2 = a.proper_r_ideals() == vec![a.zero()];
    let mut s3_fail = None;
    'outer: for x in 0..ring.size() {
        for y in 0..ring.size() {
            let lhs = ann_of_set(ring, &ring.mul(x, y));
            if lhs != ring.ann(x).union(&ring.ann(y)) {
                s3_fail = Some((x, y));
                break 'outer;
            }
        }
    }
    let s3 = s3_fail.is_none();
    if s1 != s2 || s2 != s3 {
        return cx(json!({"integral_hyperdomain": s1, "zero_only_r_ideal": s2, "ann_union": s3,
            "ann_union_fails_at": s3_fail, "proper_r_ideals": a.proper_r_ideals()}));
    }
    Outcome::Holds(1)
}

pub fn t07(ctx: &Ctx, _rd: &Reading) -> Outcome {
    let ring = ctx.ring();
    let mut n = 0;
    for e in ring.identities() {
        for x in 0..ring.size() {
            n += 1;
            let y = ring.sub(e, x);
            let k = ring.set_sum(&ring.ann(x), &ring.ann(y));
            if !is_ideal_r(ctx.a, &k) {
                return cx(json!({"identity": e, "x": x, "y": y, "sum": k}));
            }
        }
    }
    Outcome::Holds(n)
}

fn idempotents(ring: &HyperRing, rd: &Reading) -> Vec<usize> {
    (0..ring.size())
        .filter(|&s| match rd.idempotent {
            IdempotentReading::Weak => ring.is_idempotent(s),
            IdempotentReading::Strict => ring.is_idempotent_strict(s),
        })
        .collect()
}

fn plus_ann_check(ctx: &Ctx, rd: &Reading, candidates: &[ElementSubset]) -> Outcome {
    let ring = ctx.ring();
    if !ring.is_reduced() {
        return Outcome::Holds(0);
    }
    let mut n = 0;
    for p in candidates {
        for s in idempotents(ring, rd) {
            n += 1;
            let k = ring.set_sum(p, &ring.ann(s));
            if !is_ideal_r(ctx.a, &k) {
                return cx(json!({"p": p, "idempotent": s, "sum": k}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t08a(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let minimal: Vec<ElementSubset> = a
        .ideals
        .iter()
        .filter(|i| classify::is_minimal_nonzero(a.ring, i, &a.ideals))
        .copied()
        .collect();
    plus_ann_check(ctx, rd, &minimal)
}

pub fn t08b(ctx: &Ctx, rd: &Reading) -> Outcome {
    let minimal = ctx.a.mode(rd.prime).minimal_primes.clone();
    plus_ann_check(ctx, rd, &minimal)
}

fn maximal_proper_r(a: &RingAnalysis) -> Vec<ElementSubset> {
    let rs = a.proper_r_ideals();
    rs.iter().filter(|i| classify::is_maximal_in(i, &rs)).copied().collect()
}

pub fn t09(ctx: &Ctx, rd: &Reading) -> Outcome {
    let mut n = 0;
    for m in maximal_proper_r(ctx.a) {
        n += 1;
        if !ctx.a.is_prime(&m, rd.prime) {
            return cx(json!({"maximal_r_ideal": m, "prime_witness": classify::prime_witness(ctx.ring(), &m, rd.prime)}));
        }
    }
    Outcome::Holds(n)
}

pub fn t10(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let mut n = 0;
    for p in &a.mode(rd.prime).primes {
        n += 1;
        let lhs = a.is_r(p);
        let rhs = p.is_subset(&a.zero_divisors);
        if lhs != rhs {
            return cx(json!({"prime": p, "r_ideal": lhs, "inside_zero_divisors": rhs}));
        }
    }
    Outcome::Holds(n)
}

pub fn t11(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let primes = &a.mode(rd.prime).primes;
    let mut n = 0;
    for k in 1..=ctx.caps.cover.max(1) {
        for family in combos(primes, k) {
            let incomparable = family
                .iter()
                .all(|p| family.iter().all(|q| p == q || !p.is_subset(q)));
            if !incomparable {
                continue;
            }
            let meet = family.iter().fold(a.full(), |acc, p| acc.intersection(p));
            if !a.is_r(&meet) {
                continue;
            }
            n += 1;
            if let Some(bad) = family.iter().find(|p| !a.is_r(p)) {
                return cx(json!({"primes": family, "intersection": meet, "not_r": bad}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t12(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    if !a.flags.reduced {
        return Outcome::Holds(0);
    }
    let max_r = maximal_proper_r(a);
    let minimal = &a.mode(rd.prime).minimal_primes;
    let mut n = 0;
    for i in r_ideals(a) {
        if classify::is_essential(a.ring, &i, &a.ideals) {
            continue;
        }
        n += 1;
        let found = minimal.iter().any(|p| i.is_subset(p) && max_r.contains(p));
        if !found {
            return cx(json!({"ideal": i, "minimal_primes": minimal, "maximal_r_ideals": max_r}));
        }
    }
    Outcome::Holds(n)
}

/// Covers `I ⊆ D ∪ O_1 ∪ … ∪ O_m` with a distinguished member `D`.
/// `irredundant` demands that no member can be dropped; otherwise only `D`
/// must be needed. The conclusion is `I ⊆ D`.
fn cover_check(ctx: &Ctx, distinguished: &[ElementSubset], others: &[ElementSubset], irredundant: bool) -> Outcome {
    let a = ctx.a;
    let mut n = 0;
    for d in distinguished {
        let pool: Vec<ElementSubset> = others.iter().filter(|o| *o != d).copied().collect();
        for k in 0..ctx.caps.cover.max(1) {
            for rest in combos(&pool, k) {
                let mut members = vec![*d];
                members.extend(&rest);
                let union = union_all(&members);
                for i in &a.ideals {
                    if !i.is_subset(&union) {
                        continue;
                    }
                    let needed = |m: usize| {
                        let without: Vec<ElementSubset> = members
                            .iter()
                            .enumerate()
                            .filter(|(j, _)| *j != m)
                            .map(|(_, s)| *s)
                            .collect();
                        !i.is_subset(&union_all(&without))
                    };
                    let premise = if irredundant {
                        (0..members.len()).all(needed)
                    } else {
                        needed(0)
                    };
                    if !premise {
                        continue;
                    }
                    n += 1;
                    if !i.is_subset(d) {
                        return cx(json!({"ideal": i, "distinguished": d, "others": rest}));
                    }
                }
            }
        }
    }
    Outcome::Holds(n)
}

fn with_regular(ctx: &Ctx, rd: &Reading) -> Vec<ElementSubset> {
    let reg = regular(ctx, rd).difference(&ctx.a.zero());
    ctx.a.ideals.iter().filter(|i| i.intersects(&reg)).copied().collect()
}

pub fn t13(ctx: &Ctx, rd: &Reading) -> Outcome {
    cover_check(ctx, &r_ideals(ctx.a), &with_regular(ctx, rd), true)
}

pub fn t14(ctx: &Ctx, rd: &Reading) -> Outcome {
    let minimal = ctx.a.mode(rd.prime).minimal_primes.clone();
    cover_check(ctx, &minimal, &with_regular(ctx, rd), true)
}

fn identity(ctx: &Ctx) -> usize {
    ctx.ring().identity().expect("entries using 1 declare it")
}

fn mult_closure(ring: &HyperRing, gens: &ElementSubset) -> ElementSubset {
    let mut cur = *gens;
    loop {
        let next = cur.union(&ring.hprod(&cur, &cur));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Multiplicative closures of `{1}` with at most two invertible generators.
fn unit_generated(ctx: &Ctx) -> Vec<ElementSubset> {
    let ring = ctx.ring();
    let one = identity(ctx);
    let units: Vec<usize> = (0..ring.size())
        .filter(|&x| ring.is_invertible(x).unwrap_or(false))
        .collect();
    let mut out = vec![mult_closure(ring, &ElementSubset::singleton(one))];
    for (k, &u) in units.iter().enumerate() {
        out.push(mult_closure(ring, &[one, u].into_iter().collect()));
        for &v in &units[k + 1..] {
            out.push(mult_closure(ring, &[one, u, v].into_iter().collect()));
        }
    }
    sorted_unique(out)
}

fn sorted_unique(mut v: Vec<ElementSubset>) -> Vec<ElementSubset> {
    v.sort_by(|a, b| a.canonical_cmp(b));
    v.dedup();
    v
}

/// Subsets containing 1 and not 0; `None` when the carrier is too large.
fn all_unital_subsets(ctx: &Ctx) -> Option<Vec<ElementSubset>> {
    let n = ctx.ring().size();
    if n > ctx.caps.exhaustive_subsets {
        return None;
    }
    let one = identity(ctx);
    Some(
        (0u64..1 << n)
            .map(ElementSubset::from_mask)
            .filter(|s| s.contains(one) && !s.contains(0))
            .collect(),
    )
}

fn subset_cap(ctx: &Ctx) -> Outcome {
    Outcome::NotApplicable(format!(
        "exhaustive subset cap ({} > {})",
        ctx.ring().size(),
        ctx.caps.exhaustive_subsets
    ))
}

/// Candidate r-multiplicatively closed sets.
fn r_closed_family(ctx: &Ctx, rd: &Reading) -> Option<Vec<ElementSubset>> {
    let ring = ctx.ring();
    let candidates = match rd.subsets {
        SubsetFamily::Structured => {
            let mut c: Vec<ElementSubset> = ctx
                .a
                .proper_ideals()
                .map(|i| i.complement(ring.size()))
                .collect();
            c.extend(unit_generated(ctx));
            sorted_unique(c)
        }
        SubsetFamily::Exhaustive => all_unital_subsets(ctx)?,
    };
    let reg = regular(ctx, rd);
    Some(
        candidates
            .into_iter()
            .filter(|s| classify::is_r_mult_closed_with(ring, s, &reg).unwrap_or(false))
            .collect(),
    )
}

fn is_mult_closed(ring: &HyperRing, t: &ElementSubset, one: usize) -> bool {
    t.contains(one) && !t.contains(0) && ring.hprod(t, t).is_subset(t)
}

pub fn t15(ctx: &Ctx, rd: &Reading) -> Outcome {
    let ring = ctx.ring();
    let one = identity(ctx);
    let Some(s_family) = r_closed_family(ctx, rd) else {
        return subset_cap(ctx);
    };
    let t_candidates = match rd.subsets {
        SubsetFamily::Structured => unit_generated(ctx),
        SubsetFamily::Exhaustive => all_unital_subsets(ctx).expect("checked above"),
    };
    let reg = regular(ctx, rd);
    let t_family: Vec<ElementSubset> = t_candidates
        .into_iter()
        .filter(|t| is_mult_closed(ring, t, one) && t.intersects(&reg))
        .collect();
    let mut n = 0;
    for s in &s_family {
        for t in &t_family {
            n += 1;
            let d = s.union(t).union(&ring.hprod(s, t));
            if !classify::is_r_mult_closed_with(ring, &d, &reg).unwrap_or(false) {
                return cx(json!({"s": s, "t": t, "d": d}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t16(ctx: &Ctx, rd: &Reading) -> Outcome {
    let ring = ctx.ring();
    let reg = regular(ctx, rd);
    let mut n = 0;
    for i in ctx.a.proper_ideals() {
        n += 1;
        let lhs = ctx.a.is_r(i);
        let complement = i.complement(ring.size());
        let rhs = classify::is_r_mult_closed_with(ring, &complement, &reg).unwrap_or(false);
        if lhs != rhs {
            return cx(json!({"ideal": i, "r_ideal": lhs, "complement": complement,
                "complement_r_closed": rhs, "regular_in_complement": complement.intersection(&reg)}));
        }
    }
    Outcome::Holds(n)
}

fn maximal_disjoint_check(
    ctx: &Ctx,
    family: &[ElementSubset],
    conclusion: impl Fn(&ElementSubset) -> bool,
) -> Outcome {
    let a = ctx.a;
    let mut n = 0;
    for s in family {
        for k in a.ideals.iter().filter(|k| !k.intersects(s)) {
            for i in classify::all_maximal_disjoint(&a.ideals, s, k) {
                n += 1;
                if !conclusion(&i) {
                    return cx(json!({"s": s, "k": k, "maximal": i}));
                }
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t17(ctx: &Ctx, rd: &Reading) -> Outcome {
    let Some(family) = r_closed_family(ctx, rd) else {
        return subset_cap(ctx);
    };
    maximal_disjoint_check(ctx, &family, |i| ctx.a.is_r(i))
}

pub fn t18(ctx: &Ctx, rd: &Reading) -> Outcome {
    let mut n = 0;
    for i in ctx.a.n_ideals(rd.prime) {
        n += 1;
        if !ctx.a.is_r(&i) {
            return cx(json!({"ideal": i, "r_witness": classify::r_witness(ctx.ring(), &i)}));
        }
    }
    Outcome::Holds(n)
}

pub fn t19(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let zero = a.zero();
    if !a.is_ideal(&zero) {
        return Outcome::Holds(0);
    }
    let rad = a.radical(&zero, rd.prime);
    if classify::primary_witness(a.ring, &zero, &rad, rd.prime).is_some() {
        return Outcome::Holds(0);
    }
    let mut n = 0;
    for i in a.proper_ideals() {
        n += 1;
        if is_n(ctx, rd, i) != a.is_r(i) {
            return cx(json!({"ideal": i, "n_ideal": is_n(ctx, rd, i), "r_ideal": a.is_r(i)}));
        }
    }
    Outcome::Holds(n)
}

pub fn t20(ctx: &Ctx, rd: &Reading) -> Outcome {
    let r0 = rad0(ctx, rd);
    let mut n = 0;
    for i in ctx.a.n_ideals(rd.prime) {
        n += 1;
        if !i.is_subset(&r0) {
            return cx(json!({"ideal": i, "rad0": r0}));
        }
    }
    Outcome::Holds(n)
}

pub fn t21(ctx: &Ctx, rd: &Reading) -> Outcome {
    let ns = ctx.a.n_ideals(rd.prime);
    let mut n = 0;
    for (k, i) in ns.iter().enumerate() {
        for j in &ns[k..] {
            n += 1;
            let m = i.intersection(j);
            if !is_n(ctx, rd, &m) {
                return cx(json!({"n_ideals": [i, j], "intersection": m}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t22(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let ring = ctx.ring();
    let r0 = rad0(ctx, rd);
    let outside = r0.complement(ring.size());
    let mut n = 0;
    for i in a.proper_ideals() {
        n += 1;
        let s1 = is_n(ctx, rd, i);
        let s2_fail = outside
            .iter()
            .find(|&x| ideal::colon(ring, i, &ElementSubset::singleton(x)) != *i);
        let mut s3_fail = None;
        'outer: for i1 in a.ideals.iter().filter(|i1| i1.intersects(&outside)) {
            for i2 in &a.ideals {
                if prod(ctx, rd, i1, i2).is_subset(i) && !i2.is_subset(i) {
                    s3_fail = Some((*i1, *i2));
                    break 'outer;
                }
            }
        }
        let (s2, s3) = (s2_fail.is_none(), s3_fail.is_none());
        if s1 != s2 || s2 != s3 {
            return cx(json!({"ideal": i, "n_ideal": s1, "colon": s2, "products": s3,
                "colon_fails_at": s2_fail, "breaking_pair": s3_fail}));
        }
    }
    Outcome::Holds(n)
}

pub fn t23(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let r0 = rad0(ctx, rd);
    let ns = a.n_ideals(rd.prime);
    let mut n = 0;
    for l in a.ideals.iter().filter(|l| !l.is_subset(&r0)) {
        for (k, i) in ns.iter().enumerate() {
            for j in &ns[k + 1..] {
                n += 1;
                if prod(ctx, rd, i, l) == prod(ctx, rd, j, l) {
                    return cx(json!({"l": l, "n_ideals": [i, j], "product": prod(ctx, rd, i, l)}));
                }
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t24(ctx: &Ctx, rd: &Reading) -> Outcome {
    let r0 = rad0(ctx, rd);
    let mut n = 0;
    for p in &ctx.a.mode(rd.prime).primes {
        n += 1;
        if is_n(ctx, rd, p) != (*p == r0) {
            return cx(json!({"prime": p, "n_ideal": is_n(ctx, rd, p), "rad0": r0}));
        }
    }
    Outcome::Holds(n)
}

pub fn t25(ctx: &Ctx, rd: &Reading) -> Outcome {
    let r0 = rad0(ctx, rd);
    let prime = ctx.a.is_prime(&r0, rd.prime);
    let n_ideal = is_n(ctx, rd, &r0);
    if prime != n_ideal {
        return cx(json!({"rad0": r0, "prime": prime, "n_ideal": n_ideal}));
    }
    Outcome::Holds(1)
}

pub fn t26(ctx: &Ctx, rd: &Reading) -> Outcome {
    let ring = ctx.ring();
    let size = ring.size();
    if size > 20 {
        return subset_cap(ctx);
    }
    let mut n = 0;
    for i in ctx.a.n_ideals(rd.prime) {
        let single: Vec<ElementSubset> = (0..size)
            .map(|t| ideal::colon(ring, &i, &ElementSubset::singleton(t)))
            .collect();
        let mut colon = vec![ring.full(); 1 << size];
        let mut verdicts: HashMap<ElementSubset, bool> = HashMap::new();
        let outside_i = i.complement(size).low_mask();
        for mask in 1u64..1 << size {
            let low = mask.trailing_zeros() as usize;
            let k = colon[(mask & (mask - 1)) as usize].intersection(&single[low]);
            colon[mask as usize] = k;
            if mask & outside_i == 0 {
                continue;
            }
            n += 1;
            let ok = *verdicts.entry(k).or_insert_with(|| is_n(ctx, rd, &k));
            if !ok {
                return cx(json!({"ideal": i, "t": ElementSubset::from_mask(mask), "colon": k,
                    "is_hyperideal": ctx.a.is_ideal(&k)}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t27(ctx: &Ctx, rd: &Reading) -> Outcome {
    let r0 = rad0(ctx, rd);
    let ns = ctx.a.n_ideals(rd.prime);
    let mut n = 0;
    for i in ns.iter().filter(|i| classify::is_maximal_in(i, &ns)) {
        n += 1;
        if *i != r0 {
            return cx(json!({"maximal_n_ideal": i, "rad0": r0}));
        }
    }
    Outcome::Holds(n)
}

pub fn t28(ctx: &Ctx, rd: &Reading) -> Outcome {
    let r0 = rad0(ctx, rd);
    let prime = ctx.a.is_prime(&r0, rd.prime);
    let exists = !ctx.a.n_ideals(rd.prime).is_empty();
    if prime != exists {
        return cx(json!({"rad0": r0, "prime": prime, "n_ideal_exists": exists}));
    }
    Outcome::Holds(1)
}

pub fn t29(ctx: &Ctx, rd: &Reading) -> Outcome {
    let ring = ctx.ring();
    let r0 = rad0(ctx, rd);
    let mut n = 0;
    for i in &ctx.a.ideals {
        n += 1;
        let complement = i.complement(ring.size());
        let lhs = is_n(ctx, rd, i);
        let rhs = classify::is_n_mult_closed(ring, &complement, &r0);
        if lhs != rhs {
            return cx(json!({"ideal": i, "n_ideal": lhs, "complement_n_closed": rhs}));
        }
    }
    Outcome::Holds(n)
}

pub fn t30(ctx: &Ctx, rd: &Reading) -> Outcome {
    let ring = ctx.ring();
    let size = ring.size();
    let r0 = rad0(ctx, rd);
    let outside = r0.complement(size);
    let candidates = match rd.subsets {
        SubsetFamily::Structured => {
            let mut c: Vec<ElementSubset> = ctx.a.ideals.iter().map(|i| i.complement(size)).collect();
            c.push(outside);
            sorted_unique(c)
        }
        SubsetFamily::Exhaustive => {
            let inside = r0.to_vec();
            if inside.len() > 16 {
                return subset_cap(ctx);
            }
            (0u64..1 << inside.len())
                .map(|m| {
                    let mut s = outside;
                    for (b, &x) in inside.iter().enumerate() {
                        if m >> b & 1 == 1 {
                            s.insert(x);
                        }
                    }
                    s
                })
                .collect()
        }
    };
    let family: Vec<ElementSubset> = candidates
        .into_iter()
        .filter(|s| classify::is_n_mult_closed(ring, s, &r0))
        .collect();
    maximal_disjoint_check(ctx, &family, |i| is_n(ctx, rd, i))
}

pub fn t31(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let nil = a.nilpotents.difference(&a.zero());
    let clean: Vec<ElementSubset> = a.ideals.iter().filter(|i| !i.intersects(&nil)).copied().collect();
    cover_check(ctx, &a.n_ideals(rd.prime), &clean, false)
}

pub fn t32(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    if !a.flags.reduced {
        return Outcome::Holds(0);
    }
    let domain = a.flags.integral_hyperdomain;
    let ns = a.n_ideals(rd.prime);
    if !domain && !ns.is_empty() {
        return cx(json!({"part": 1, "n_ideals": ns}));
    }
    let zero_n = is_n(ctx, rd, &a.zero());
    if zero_n != domain {
        return cx(json!({"part": 2, "zero_n_ideal": zero_n, "integral_hyperdomain": domain}));
    }
    Outcome::Holds(2)
}

pub fn t33(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let ns = a.n_ideals(rd.prime);
    let only_zero = ns == vec![a.zero()];
    if only_zero != a.flags.integral_hyperdomain {
        return cx(json!({"n_ideals": ns, "integral_hyperdomain": a.flags.integral_hyperdomain}));
    }
    Outcome::Holds(1)
}

pub fn t34(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let lhs = a.flags.invertible_ring;
    let zero_n = is_n(ctx, rd, &a.zero());
    if lhs != (a.flags.regular_ring && zero_n) {
        return cx(json!({"invertible": lhs, "regular_ring": a.flags.regular_ring, "zero_n_ideal": zero_n}));
    }
    Outcome::Holds(1)
}

fn admissible_target(b: &RingAnalysis, rd: &Reading) -> bool {
    b.ring.is_commutative()
        && (rd.standing == Standing::Ignored || (b.ring.identity().is_some() && b.all_c()))
}

pub fn t35(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let mut n = 0;
    for b in ctx.corpus {
        if a.size() * b.size() > ctx.caps.homomorphism || !admissible_target(b, rd) {
            continue;
        }
        for phi in enumerate_good_homomorphisms(a.ring, b.ring) {
            if phi.is_injective() {
                for i2 in b.n_ideals(rd.prime) {
                    n += 1;
                    let pre = phi.preimage_ideal(&i2);
                    if !is_n(ctx, rd, &pre) {
                        return cx(json!({"part": 1, "target": b.ring.name(), "map": phi.map(),
                            "n_ideal": i2, "preimage": pre}));
                    }
                }
            }
            if phi.is_surjective() {
                let ker = phi.kernel();
                for i1 in a.n_ideals(rd.prime).iter().filter(|i| ker.is_subset(i)) {
                    n += 1;
                    let image = phi.image_ideal(i1);
                    if !b.is_n(&image, rd.prime) {
                        return cx(json!({"part": 2, "target": b.ring.name(), "map": phi.map(),
                            "n_ideal": i1, "image": image}));
                    }
                }
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t36(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let r0 = rad0(ctx, rd);
    let proper: Vec<ElementSubset> = a.proper_ideals().copied().collect();
    let mut n = 0;
    for j in &proper {
        let Ok(q) = quotient(a.ring, j) else {
            continue;
        };
        let Ok(qa) = RingAnalysis::new(&q.ring, ctx.caps.enumeration.max(q.ring.size())) else {
            continue;
        };
        for i in proper.iter().filter(|i| j.is_subset(i)) {
            n += 1;
            let image = q.image(i);
            let i_n = is_n(ctx, rd, i);
            let image_n = qa.is_n(&image, rd.prime);
            let part = if i_n && !image_n {
                Some(1)
            } else if image_n && j.is_subset(&r0) && !i_n {
                Some(2)
            } else if is_n(ctx, rd, j) && image_n && !i_n {
                Some(3)
            } else {
                None
            };
            if let Some(part) = part {
                return cx(json!({"part": part, "j": j, "i": i, "image": image,
                    "i_n_ideal": i_n, "image_n_ideal": image_n}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t37(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    if !a.ring.has_scalar_identity() {
        return Outcome::NotApplicable("no scalar identity".into());
    }
    let mut n = 0;
    for dim in 1..=2usize {
        let Ok(m) = matrix_hyperring(a.ring, dim, ctx.caps.matrix) else {
            continue;
        };
        let Ok(ma) = RingAnalysis::new(&m.ring, m.ring.size()) else {
            continue;
        };
        for i in &a.ideals {
            n += 1;
            let mi = m.matrices_over(i);
            if ma.is_n(&mi, rd.prime) && !is_n(ctx, rd, i) {
                return cx(json!({"dim": dim, "ideal": i, "matrix_ideal": mi}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t38(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    let ns = a.n_ideals(rd.prime);
    let mut n = 0;
    for t in enumerate_subhyperrings(a.ring) {
        let Ok(sub) = subhyperring_restrict(a.ring, &t) else {
            continue;
        };
        let Ok(ta) = RingAnalysis::new(&sub.ring, sub.ring.size()) else {
            continue;
        };
        for i in ns.iter().filter(|i| !t.is_subset(i)) {
            n += 1;
            let k = sub.restrict(i);
            if !ta.is_n(&k, rd.prime) {
                return cx(json!({"subring": t, "n_ideal": i, "meet": i.intersection(&t)}));
            }
        }
    }
    Outcome::Holds(n)
}

pub fn t39(ctx: &Ctx, rd: &Reading) -> Outcome {
    let Provenance::Product { right_size, .. } = *ctx.ring().provenance() else {
        return Outcome::NotApplicable("not a direct product".into());
    };
    let mut n = 0;
    for i in ctx.a.n_ideals(rd.prime) {
        n += 1;
        let left: ElementSubset = i.iter().map(|x| x / right_size).collect();
        let right: ElementSubset = i.iter().map(|x| x % right_size).collect();
        let rebuilt: ElementSubset = left
            .iter()
            .flat_map(|p| right.iter().map(move |q| p * right_size + q))
            .collect();
        if rebuilt == i {
            return cx(json!({"n_ideal": i, "left": left, "right": right}));
        }
    }
    Outcome::Holds(n)
}

pub fn t40(ctx: &Ctx, rd: &Reading) -> Outcome {
    let a = ctx.a;
    if !a.ring.has_scalar_identity() {
        return Outcome::NotApplicable("no scalar identity".into());
    }
    if a.size() > ctx.caps.gamma {
        return Outcome::NotApplicable(format!("gamma cap ({} > {})", a.size(), ctx.caps.gamma));
    }
    let f = match fundamental_ring(a.ring, ctx.caps.gamma, rd.gamma) {
        Ok(f) => f,
        Err(e) => return cx(json!({"fundamental_ring": e.to_string()})),
    };
    let mut n = 0;
    for i in &a.ideals {
        n += 1;
        let image = f.image(i);
        let lhs = is_n(ctx, rd, i);
        let rhs = classical_n_ideal(&f.ring, &image);
        if lhs != rhs {
            return cx(json!({"ideal": i, "n_ideal": lhs, "image": image, "image_n_ideal": rhs,
                "classes": f.classes}));
        }
    }
    Outcome::Holds(n)
}
