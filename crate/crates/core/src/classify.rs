//! Hyperideal classes (prime, primary, r-, n-, maximal, minimal, essential) and
//! the r-/n-multiplicatively closed subsets.
//!
//! Every failing predicate reports the lexicographically least witness, so
//! counterexample reports are stable across runs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal;
use crate::ring::HyperRing;
use crate::subset::ElementSubset;

/// Which hyperideals may be prime (and primary).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeMode {
    /// Any proper hyperideal, `{0}` included.
    #[default]
    Relaxed,
    /// Only nonzero proper hyperideals.
    Strict,
}

/// The two notions of "regular element".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum RegularNotion {
    /// Non-zero-divisor: `ann(x) = {0}`.
    #[default]
    Nzd,
    /// Von Neumann: `x ∈ x² o y` for some `y`.
    Vnr,
}

impl RegularNotion {
    pub fn set(self, ring: &HyperRing) -> ElementSubset {
        match self {
            RegularNotion::Nzd => ring.nzd_set(),
            RegularNotion::Vnr => ring.vnr_set(),
        }
    }
}

/// Why a primality-style test failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    /// The hyperideal is the whole ring.
    Improper,
    /// `{0}` under [`PrimeMode::Strict`].
    Zero,
    /// The least pair `(x, y)` breaking the defining implication.
    Pair { x: usize, y: usize },
}

fn least_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Witness> {
    for x in 0..n {
        for y in 0..n {
            if bad(x, y) {
                return Some(Witness::Pair { x, y });
            }
        }
    }
    None
}

fn mode_guard(ring: &HyperRing, i: &ElementSubset, mode: PrimeMode) -> Option<Witness> {
    if *i == ring.full() {
        Some(Witness::Improper)
    } else if mode == PrimeMode::Strict && *i == ring.zero_set() {
        Some(Witness::Zero)
    } else {
        None
    }
}

/// `None` when `P` is prime; otherwise the reason it is not.
/// `P` is assumed to be a hyperideal.
pub fn prime_witness(ring: &HyperRing, p: &ElementSubset, mode: PrimeMode) -> Option<Witness> {
    mode_guard(ring, p, mode).or_else(|| {
        least_pair(ring.size(), |x, y| {
            !p.contains(x) && !p.contains(y) && ring.mul(x, y).is_subset(p)
        })
    })
}

pub fn is_prime(ring: &HyperRing, p: &ElementSubset, mode: PrimeMode) -> bool {
    prime_witness(ring, p, mode).is_none()
}

/// Primary test against a precomputed radical `r(Q)`.
pub fn primary_witness(
    ring: &HyperRing,
    q: &ElementSubset,
    radical_q: &ElementSubset,
    mode: PrimeMode,
) -> Option<Witness> {
    mode_guard(ring, q, mode).or_else(|| {
        least_pair(ring.size(), |x, y| {
            !q.contains(x) && !radical_q.contains(y) && ring.mul(x, y).is_subset(q)
        })
    })
}

pub fn is_primary(ring: &HyperRing, q: &ElementSubset, mode: PrimeMode, cap: usize) -> Result<bool> {
    let rad = ideal::radical(ring, q, mode, cap)?;
    Ok(primary_witness(ring, q, &rad, mode).is_none())
}

/// r-hyperideal closure law: `x o y ⊆ I` with `ann(x) = {0}` forces `y ∈ I`.
///
/// The law is checked as defined, without requiring `I` to be proper; the
/// whole ring satisfies it vacuously.
pub fn r_witness(ring: &HyperRing, i: &ElementSubset) -> Option<Witness> {
    r_witness_with(ring, i, &ring.nzd_set())
}

/// The r-law with a caller-supplied set of "regular" elements.
pub fn r_witness_with(ring: &HyperRing, i: &ElementSubset, regular: &ElementSubset) -> Option<Witness> {
    least_pair(ring.size(), |x, y| {
        regular.contains(x) && !i.contains(y) && ring.mul(x, y).is_subset(i)
    })
}

pub fn is_r_hyperideal(ring: &HyperRing, i: &ElementSubset) -> bool {
    r_witness(ring, i).is_none()
}

/// n-hyperideal test against a precomputed `r(0)`: `I` proper, and
/// `x o y ⊆ I` with `x ∉ r(0)` forces `y ∈ I`.
pub fn n_witness(ring: &HyperRing, i: &ElementSubset, rad0: &ElementSubset) -> Option<Witness> {
    if *i == ring.full() {
        return Some(Witness::Improper);
    }
    least_pair(ring.size(), |x, y| {
        !rad0.contains(x) && !i.contains(y) && ring.mul(x, y).is_subset(i)
    })
}

pub fn is_n_hyperideal(ring: &HyperRing, i: &ElementSubset, mode: PrimeMode, cap: usize) -> Result<bool> {
    let rad0 = ideal::radical(ring, &ring.zero_set(), mode, cap)?;
    Ok(n_witness(ring, i, &rad0).is_none())
}

/// `I` is not strictly contained in any member of `class`.
pub fn is_maximal_in(i: &ElementSubset, class: &[ElementSubset]) -> bool {
    !class.iter().any(|j| i.is_proper_subset(j))
}

/// `I ≠ {0}` and no nonzero hyperideal lies strictly inside `I`.
pub fn is_minimal_nonzero(ring: &HyperRing, i: &ElementSubset, ideals: &[ElementSubset]) -> bool {
    let zero = ring.zero_set();
    *i != zero && !ideals.iter().any(|j| *j != zero && j.is_proper_subset(i))
}

/// `I ≠ {0}` and `I ∩ J ≠ {0}` for every nonzero hyperideal `J`.
pub fn is_essential(ring: &HyperRing, i: &ElementSubset, ideals: &[ElementSubset]) -> bool {
    let zero = ring.zero_set();
    *i != zero
        && ideals
            .iter()
            .filter(|j| **j != zero)
            .all(|j| i.intersection(j) != zero)
}

/// r-multiplicatively closed with respect to the least identity `1`:
/// `1 ∈ S`, `0 ∉ S`, some regular `u ≠ 1` lies in `S`, and `r o a ⊆ S` for
/// regular `r ∈ S` and any `a ∈ S`.
pub fn is_r_mult_closed(ring: &HyperRing, s: &ElementSubset) -> Result<bool> {
    is_r_mult_closed_with(ring, s, &ring.nzd_set())
}

pub fn is_r_mult_closed_with(ring: &HyperRing, s: &ElementSubset, regular: &ElementSubset) -> Result<bool> {
    let one = ring.identity().ok_or(Error::NoIdentity)?;
    if s.is_empty() || !s.contains(one) || s.contains(0) {
        return Ok(false);
    }
    let regular_in_s = s.intersection(regular);
    if !regular_in_s.iter().any(|u| u != one) {
        return Ok(false);
    }
    Ok(regular_in_s
        .iter()
        .all(|r| s.iter().all(|a| ring.mul(r, a).is_subset(s))))
}

/// n-multiplicatively closed: `S` nonempty, `R − r(0) ⊆ S`, and `a o b ⊆ S`
/// for every `a ∉ r(0)` and `b ∈ S`.
pub fn is_n_mult_closed(ring: &HyperRing, s: &ElementSubset, rad0: &ElementSubset) -> bool {
    let outside = rad0.complement(ring.size());
    !s.is_empty()
        && outside.is_subset(s)
        && outside
            .iter()
            .all(|a| s.iter().all(|b| ring.mul(a, b).is_subset(s)))
}

/// A hyperideal containing `K`, disjoint from `S`, and maximal under
/// inclusion among such; ties are broken by taking the first maximal one in
/// canonical order.
pub fn maximal_disjoint_ideal(
    ideals: &[ElementSubset],
    s: &ElementSubset,
    k: &ElementSubset,
) -> Result<ElementSubset> {
    if k.intersects(s) {
        return Err(Error::NotDisjoint);
    }
    let candidates: Vec<ElementSubset> = ideals
        .iter()
        .filter(|i| k.is_subset(i) && !i.intersects(s))
        .copied()
        .collect();
    candidates
        .iter()
        .find(|i| is_maximal_in(i, &candidates))
        .copied()
        .ok_or_else(|| Error::NotHyperideal(format!("{k}")))
}

/// Every disjoint maximal hyperideal, in canonical order.
pub fn all_maximal_disjoint(ideals: &[ElementSubset], s: &ElementSubset, k: &ElementSubset) -> Vec<ElementSubset> {
    let candidates: Vec<ElementSubset> = ideals
        .iter()
        .filter(|i| k.is_subset(i) && !i.intersects(s))
        .copied()
        .collect();
    candidates
        .iter()
        .filter(|i| is_maximal_in(i, &candidates))
        .copied()
        .collect()
}

/// Class flags of one hyperideal, with witnesses for failed primality-style
/// tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub prime: bool,
    pub primary: bool,
    pub maximal: bool,
    pub minimal_nonzero: bool,
    pub essential: bool,
    pub r_ideal: bool,
    pub n_ideal: bool,
    pub c_ideal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primary_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_witness: Option<Witness>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_hyperideal_sets;
    use crate::ring::{ordinary_zn, zn_with_a, RawTables};

    fn ring(raw: RawTables) -> HyperRing {
        HyperRing::validate(&raw).unwrap()
    }

    fn set(xs: &[usize]) -> ElementSubset {
        xs.iter().copied().collect()
    }

    /// Brute-force classical n-ideals of `Z_n`, written independently of the
    /// hyperring code path: plain modular arithmetic.
    fn classical_n_ideals(n: usize) -> Vec<Vec<usize>> {
        let nilpotent = |x: usize| {
            let mut p = x % n;
            for _ in 0..n {
                if p == 0 {
                    return true;
                }
                p = p * x % n;
            }
            p == 0
        };
        let mut out = Vec::new();
        for d in (1..=n).filter(|d| n % d == 0) {
            let ideal: Vec<usize> = (0..n).filter(|x| x % d == 0).collect();
            if ideal.len() == n {
                continue;
            }
            let ok = (0..n).all(|x| {
                (0..n).all(|y| !(ideal.contains(&(x * y % n)) && !nilpotent(x)) || ideal.contains(&y))
            });
            if ok {
                out.push(ideal);
            }
        }
        out.sort_by_key(|v| v.len());
        out
    }

    #[test]
    fn primes_of_z6_and_z4() {
        let z6 = ring(ordinary_zn(6));
        assert!(is_prime(&z6, &set(&[0, 3]), PrimeMode::Relaxed));
        assert!(is_prime(&z6, &set(&[0, 2, 4]), PrimeMode::Relaxed));
        assert_eq!(prime_witness(&z6, &z6.full(), PrimeMode::Relaxed), Some(Witness::Improper));
        let z4 = ring(ordinary_zn(4));
        assert_eq!(
            prime_witness(&z4, &set(&[0]), PrimeMode::Relaxed),
            Some(Witness::Pair { x: 2, y: 2 })
        );
        let z5 = ring(ordinary_zn(5));
        assert!(is_prime(&z5, &set(&[0]), PrimeMode::Relaxed));
        assert_eq!(prime_witness(&z5, &set(&[0]), PrimeMode::Strict), Some(Witness::Zero));
    }

    #[test]
    fn primary_examples() {
        let z4 = ring(ordinary_zn(4));
        assert!(is_primary(&z4, &set(&[0]), PrimeMode::Relaxed, 16).unwrap());
        let z6 = ring(ordinary_zn(6));
        assert!(!is_primary(&z6, &set(&[0]), PrimeMode::Relaxed, 16).unwrap());
        for p in enumerate_hyperideal_sets(&z6, 16).unwrap() {
            if is_prime(&z6, &p, PrimeMode::Relaxed) {
                assert!(is_primary(&z6, &p, PrimeMode::Relaxed, 16).unwrap());
            }
        }
    }

    #[test]
    fn r_hyperideal_examples() {
        let z13 = ring(zn_with_a(13, &[5, 7]));
        let proper_r: Vec<_> = enumerate_hyperideal_sets(&z13, 16)
            .unwrap()
            .into_iter()
            .filter(|i| *i != z13.full() && is_r_hyperideal(&z13, i))
            .collect();
        assert_eq!(proper_r, vec![set(&[0])]);
        let z6 = ring(ordinary_zn(6));
        assert!(is_r_hyperideal(&z6, &set(&[0, 3])));
        assert!(is_r_hyperideal(&z6, &z6.full()));
    }

    #[test]
    fn n_hyperideal_examples() {
        let n_of = |r: &HyperRing| -> Vec<ElementSubset> {
            enumerate_hyperideal_sets(r, 16)
                .unwrap()
                .into_iter()
                .filter(|i| is_n_hyperideal(r, i, PrimeMode::Relaxed, 16).unwrap())
                .collect()
        };
        assert_eq!(n_of(&ring(ordinary_zn(4))), vec![set(&[0]), set(&[0, 2])]);
        assert_eq!(n_of(&ring(zn_with_a(13, &[5, 7]))), vec![set(&[0])]);
        assert!(n_of(&ring(ordinary_zn(6))).is_empty());
    }

    #[test]
    fn n_hyperideals_match_classical_oracle_on_small_zn() {
        for n in 2..=16 {
            let r = ring(ordinary_zn(n));
            let ours: Vec<Vec<usize>> = enumerate_hyperideal_sets(&r, 16)
                .unwrap()
                .into_iter()
                .filter(|i| is_n_hyperideal(&r, i, PrimeMode::Relaxed, 16).unwrap())
                .map(|s| s.to_vec())
                .collect();
            assert_eq!(ours, classical_n_ideals(n), "Z{n}");
        }
    }

    #[test]
    fn maximal_minimal_essential() {
        let z6 = ring(ordinary_zn(6));
        let ideals = enumerate_hyperideal_sets(&z6, 16).unwrap();
        assert!(is_essential(&z6, &z6.full(), &ideals));
        assert!(!is_essential(&z6, &set(&[0, 2, 4]), &ideals));
        assert!(is_minimal_nonzero(&z6, &set(&[0, 3]), &ideals));
        let proper: Vec<_> = ideals.iter().copied().filter(|i| *i != z6.full()).collect();
        assert!(is_maximal_in(&set(&[0, 3]), &proper));
        let z4 = ring(ordinary_zn(4));
        let ideals4 = enumerate_hyperideal_sets(&z4, 16).unwrap();
        assert!(is_essential(&z4, &set(&[0, 2]), &ideals4));
    }

    #[test]
    fn multiplicatively_closed_subsets() {
        let z6 = ring(ordinary_zn(6));
        assert!(is_r_mult_closed(&z6, &set(&[1, 5])).unwrap());
        assert!(!is_r_mult_closed(&z6, &z6.full()).unwrap());
        let z4 = ring(ordinary_zn(4));
        let rad0 = set(&[0, 2]);
        assert!(is_n_mult_closed(&z4, &set(&[1, 3]), &rad0));
        assert!(is_n_mult_closed(&z4, &z4.full(), &rad0));
        let noid = ring(zn_with_a(6, &[2, 3]));
        assert!(matches!(is_r_mult_closed(&noid, &set(&[1])), Err(Error::NoIdentity)));
    }

    #[test]
    fn maximal_disjoint() {
        let z4 = ring(ordinary_zn(4));
        let ideals = enumerate_hyperideal_sets(&z4, 16).unwrap();
        assert_eq!(maximal_disjoint_ideal(&ideals, &set(&[1]), &set(&[0])).unwrap(), set(&[0, 2]));
        assert_eq!(
            maximal_disjoint_ideal(&ideals, &set(&[1, 3]), &set(&[0, 2])).unwrap(),
            set(&[0, 2])
        );
        let rad0 = set(&[0, 2]);
        let s = rad0.complement(4);
        let i = maximal_disjoint_ideal(&ideals, &s, &set(&[0])).unwrap();
        assert!(i.is_subset(&rad0));
        assert!(matches!(
            maximal_disjoint_ideal(&ideals, &set(&[0, 1]), &set(&[0])),
            Err(Error::NotDisjoint)
        ));
    }
}
