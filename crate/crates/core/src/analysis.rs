//! Per-ring cache of everything the classifiers and the theorem harness need
//! repeatedly: the hyperideal lattice, the C-class, element sets and the
//! prime data for both prime modes.

use serde::Serialize;

use crate::classify::{self, ClassificationFlags, PrimeMode};
use crate::error::Result;
use crate::ideal::{self, ProductClassC};
use crate::ring::{HyperRing, RingFlags};
use crate::subset::ElementSubset;

/// Prime data for one [`PrimeMode`].
#[derive(Debug, Clone)]
pub struct PrimeData {
    pub primes: Vec<ElementSubset>,
    /// `r(0)`.
    pub rad0: ElementSubset,
    /// `r(I)` for each hyperideal, aligned with [`RingAnalysis::ideals`].
    pub radicals: Vec<ElementSubset>,
    /// n-hyperideal flag for each hyperideal.
    pub n_flags: Vec<bool>,
    /// Primes that are minimal among primes.
    pub minimal_primes: Vec<ElementSubset>,
}

#[derive(Debug, Clone)]
pub struct RingAnalysis<'a> {
    pub ring: &'a HyperRing,
    /// All hyperideals in canonical order.
    pub ideals: Vec<ElementSubset>,
    pub c_class: ProductClassC,
    pub c_flags: Vec<bool>,
    /// r-law flag (closure law only) for each hyperideal.
    pub r_flags: Vec<bool>,
    pub nzd: ElementSubset,
    pub vnr: ElementSubset,
    pub zero_divisors: ElementSubset,
    pub nilpotents: ElementSubset,
    pub flags: RingFlags,
    relaxed: PrimeData,
    strict: PrimeData,
}

impl<'a> RingAnalysis<'a> {
    pub fn new(ring: &'a HyperRing, cap: usize) -> Result<Self> {
        let ideals = ideal::enumerate_hyperideal_sets(ring, cap)?;
        let c_class = ProductClassC::compute(ring);
        let c_flags = ideals.iter().map(|i| c_class.is_c_closed(i)).collect();
        let nzd = ring.nzd_set();
        let r_flags = ideals
            .iter()
            .map(|i| classify::r_witness_with(ring, i, &nzd).is_none())
            .collect();
        let relaxed = prime_data(ring, &ideals, PrimeMode::Relaxed);
        let strict = prime_data(ring, &ideals, PrimeMode::Strict);
        Ok(RingAnalysis {
            ring,
            c_class,
            c_flags,
            r_flags,
            nzd,
            vnr: ring.vnr_set(),
            zero_divisors: ring.zero_divisors(),
            nilpotents: ring.nilpotents(),
            flags: ring.classify(),
            ideals,
            relaxed,
            strict,
        })
    }

    pub fn mode(&self, mode: PrimeMode) -> &PrimeData {
        match mode {
            PrimeMode::Relaxed => &self.relaxed,
            PrimeMode::Strict => &self.strict,
        }
    }

    pub fn size(&self) -> usize {
        self.ring.size()
    }

    pub fn full(&self) -> ElementSubset {
        self.ring.full()
    }

    pub fn zero(&self) -> ElementSubset {
        self.ring.zero_set()
    }

    pub fn index_of(&self, i: &ElementSubset) -> Option<usize> {
        self.ideals.iter().position(|j| j == i)
    }

    pub fn is_ideal(&self, i: &ElementSubset) -> bool {
        self.index_of(i).is_some()
    }

    /// Whether `{0}` is a hyperideal.
    pub fn zero_is_ideal(&self) -> bool {
        self.is_ideal(&self.zero())
    }

    pub fn proper_ideals(&self) -> impl Iterator<Item = &ElementSubset> {
        let full = self.full();
        self.ideals.iter().filter(move |i| **i != full)
    }

    /// Every hyperideal is a C-hyperideal.
    pub fn all_c(&self) -> bool {
        self.c_flags.iter().all(|&c| c)
    }

    pub fn is_r(&self, i: &ElementSubset) -> bool {
        match self.index_of(i) {
            Some(k) => self.r_flags[k],
            None => classify::r_witness_with(self.ring, i, &self.nzd).is_none(),
        }
    }

    pub fn is_n(&self, i: &ElementSubset, mode: PrimeMode) -> bool {
        match self.index_of(i) {
            Some(k) => self.mode(mode).n_flags[k],
            None => false,
        }
    }

    pub fn is_prime(&self, i: &ElementSubset, mode: PrimeMode) -> bool {
        self.mode(mode).primes.contains(i)
    }

    pub fn radical(&self, i: &ElementSubset, mode: PrimeMode) -> ElementSubset {
        match self.index_of(i) {
            Some(k) => self.mode(mode).radicals[k],
            None => radical_over(self.ring, &self.mode(mode).primes, i),
        }
    }

    pub fn n_ideals(&self, mode: PrimeMode) -> Vec<ElementSubset> {
        let data = self.mode(mode);
        self.ideals
            .iter()
            .zip(&data.n_flags)
            .filter(|(_, &f)| f)
            .map(|(i, _)| *i)
            .collect()
    }

    /// Proper hyperideals satisfying the r-law.
    pub fn proper_r_ideals(&self) -> Vec<ElementSubset> {
        let full = self.full();
        self.ideals
            .iter()
            .zip(&self.r_flags)
            .filter(|(i, &f)| f && **i != full)
            .map(|(i, _)| *i)
            .collect()
    }

    /// Class flags of one hyperideal.
    pub fn classify(&self, i: &ElementSubset, mode: PrimeMode) -> ClassificationFlags {
        let ring = self.ring;
        let data = self.mode(mode);
        let rad = self.radical(i, mode);
        let prime_witness = classify::prime_witness(ring, i, mode);
        let primary_witness = classify::primary_witness(ring, i, &rad, mode);
        let r_witness = classify::r_witness_with(ring, i, &self.nzd);
        let n_witness = classify::n_witness(ring, i, &data.rad0);
        let proper: Vec<ElementSubset> = self.proper_ideals().copied().collect();
        ClassificationFlags {
            prime: prime_witness.is_none(),
            primary: primary_witness.is_none(),
            maximal: *i != self.full() && classify::is_maximal_in(i, &proper),
            minimal_nonzero: classify::is_minimal_nonzero(ring, i, &self.ideals),
            essential: classify::is_essential(ring, i, &self.ideals),
            r_ideal: r_witness.is_none(),
            n_ideal: n_witness.is_none(),
            c_ideal: self.c_class.is_c_closed(i),
            prime_witness,
            primary_witness,
            r_witness,
            n_witness,
        }
    }

    pub fn report(&self, mode: PrimeMode) -> ClassificationReport {
        ClassificationReport {
            ring: self.ring.name().to_string(),
            size: self.size(),
            identity: self.ring.identity(),
            scalar_identity: self.ring.has_scalar_identity(),
            prime_mode: mode,
            ring_flags: self.flags,
            rad0: self.mode(mode).rad0,
            zero_divisors: self.zero_divisors,
            nzd: self.nzd,
            vnr: self.vnr,
            nilpotents: self.nilpotents,
            ideals: self
                .ideals
                .iter()
                .map(|i| IdealEntry {
                    members: *i,
                    radical: self.radical(i, mode),
                    flags: self.classify(i, mode),
                })
                .collect(),
        }
    }
}

fn radical_over(ring: &HyperRing, primes: &[ElementSubset], i: &ElementSubset) -> ElementSubset {
    primes
        .iter()
        .filter(|p| i.is_subset(p))
        .fold(ring.full(), |acc, p| acc.intersection(p))
}

fn prime_data(ring: &HyperRing, ideals: &[ElementSubset], mode: PrimeMode) -> PrimeData {
    let primes: Vec<ElementSubset> = ideals
        .iter()
        .filter(|p| classify::is_prime(ring, p, mode))
        .copied()
        .collect();
    let rad0 = radical_over(ring, &primes, &ring.zero_set());
    let radicals = ideals.iter().map(|i| radical_over(ring, &primes, i)).collect();
    let n_flags = ideals
        .iter()
        .map(|i| classify::n_witness(ring, i, &rad0).is_none())
        .collect();
    let minimal_primes = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q.is_proper_subset(p)))
        .copied()
        .collect();
    PrimeData {
        primes,
        rad0,
        radicals,
        n_flags,
        minimal_primes,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealEntry {
    pub members: ElementSubset,
    pub radical: ElementSubset,
    #[serde(flatten)]
    pub flags: ClassificationFlags,
}

/// Classification report of every hyperideal of one ring.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub size: usize,
    pub identity: Option<usize>,
    pub scalar_identity: bool,
    pub prime_mode: PrimeMode,
    pub ring_flags: RingFlags,
    pub rad0: ElementSubset,
    pub zero_divisors: ElementSubset,
    pub nzd: ElementSubset,
    pub vnr: ElementSubset,
    pub nilpotents: ElementSubset,
    pub ideals: Vec<IdealEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ordinary_zn, zn_with_a};

    #[test]
    fn z4_report() {
        let r = HyperRing::validate(&ordinary_zn(4)).unwrap();
        let a = RingAnalysis::new(&r, 16).unwrap();
        let rep = a.report(PrimeMode::Relaxed);
        let n: Vec<Vec<usize>> = rep
            .ideals
            .iter()
            .filter(|e| e.flags.n_ideal)
            .map(|e| e.members.to_vec())
            .collect();
        assert_eq!(n, vec![vec![0], vec![0, 2]]);
        assert_eq!(rep.rad0.to_vec(), vec![0, 2]);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["ideals"][0]["members"], serde_json::json!([0]));
        assert_eq!(json["ideals"][0]["n_ideal"], serde_json::json!(true));
    }

    #[test]
    fn strict_mode_changes_the_radical_of_a_field() {
        let r = HyperRing::validate(&ordinary_zn(5)).unwrap();
        let a = RingAnalysis::new(&r, 16).unwrap();
        assert_eq!(a.mode(PrimeMode::Relaxed).rad0, r.zero_set());
        assert_eq!(a.mode(PrimeMode::Strict).rad0, r.full());
    }

    #[test]
    fn integral_hyperdomain_z13() {
        let r = HyperRing::validate(&zn_with_a(13, &[5, 7])).unwrap();
        let a = RingAnalysis::new(&r, 16).unwrap();
        assert!(a.all_c());
        assert_eq!(a.n_ideals(PrimeMode::Relaxed), vec![r.zero_set()]);
    }
}
