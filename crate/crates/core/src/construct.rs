//! Derived hyperrings: quotients, direct products, hypermatrices,
//! subhyperrings, good homomorphisms and the fundamental ring `R/γ*`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{self, ProductClassC};
use crate::ring::{HyperRing, Provenance, RawTables, ValidateOptions};
use crate::subset::ElementSubset;

/// Default carrier bound for the `R/γ*` fixpoint.
pub const DEFAULT_GAMMA_CAP: usize = 10;

/// A validated good homomorphism `φ: R1 → R2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodHomomorphism {
    map: Vec<usize>,
    kernel: ElementSubset,
    target_size: usize,
}

impl GoodHomomorphism {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kernel(&self) -> ElementSubset {
        self.kernel
    }

    pub fn is_injective(&self) -> bool {
        let image: HashSet<usize> = self.map.iter().copied().collect();
        image.len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        let image: ElementSubset = self.map.iter().copied().collect();
        image.len() == self.target_size
    }

    pub fn image_set(&self, s: &ElementSubset) -> ElementSubset {
        s.iter().map(|x| self.map[x]).collect()
    }

    /// `φ(I)`.
    pub fn image_ideal(&self, i: &ElementSubset) -> ElementSubset {
        self.image_set(i)
    }

    /// `φ⁻¹(I)`.
    pub fn preimage_ideal(&self, i: &ElementSubset) -> ElementSubset {
        (0..self.map.len()).filter(|&x| i.contains(self.map[x])).collect()
    }
}

/// Checks `φ(x + y) = φ(x) + φ(y)` and `φ(x o y) = φ(x) o φ(y)` for all pairs.
pub fn check_good_homomorphism(map: &[usize], r1: &HyperRing, r2: &HyperRing) -> Result<GoodHomomorphism> {
    if map.len() != r1.size() {
        return Err(Error::DimensionMismatch(format!(
            "map has {} entries, source has {} elements",
            map.len(),
            r1.size()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&y| y >= r2.size()) {
        return Err(Error::IndexOutOfRange {
            field: "map".into(),
            index: bad,
            size: r2.size(),
        });
    }
    let n = r1.size();
    for x in 0..n {
        for y in 0..n {
            if map[r1.add(x, y)] != r2.add(map[x], map[y]) {
                return Err(Error::NotAdditive(x, y));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs: ElementSubset = r1.mul(x, y).iter().map(|z| map[z]).collect();
            if lhs != r2.mul(map[x], map[y]) {
                return Err(Error::NotMultiplicative(x, y));
            }
        }
    }
    Ok(GoodHomomorphism {
        map: map.to_vec(),
        kernel: (0..n).filter(|&x| map[x] == 0).collect(),
        target_size: r2.size(),
    })
}

/// Every good homomorphism `R1 → R2`, in lexicographic order of the maps.
///
/// Backtracks over element images, pruning as soon as additivity fails on the
/// assigned part; multiplicativity is checked on complete maps.
pub fn enumerate_good_homomorphisms(r1: &HyperRing, r2: &HyperRing) -> Vec<GoodHomomorphism> {
    let n = r1.size();
    let mut out = Vec::new();
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[0] = Some(0);

    fn consistent(r1: &HyperRing, r2: &HyperRing, map: &[Option<usize>], x: usize) -> bool {
        let fx = map[x].expect("assigned");
        for y in 0..map.len() {
            let Some(fy) = map[y] else { continue };
            if let Some(fs) = map[r1.add(x, y)] {
                if fs != r2.add(fx, fy) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        r1: &HyperRing,
        r2: &HyperRing,
        map: &mut Vec<Option<usize>>,
        x: usize,
        out: &mut Vec<GoodHomomorphism>,
    ) {
        let n = r1.size();
        if x == n {
            let full: Vec<usize> = map.iter().map(|v| v.expect("complete")).collect();
            if let Ok(h) = check_good_homomorphism(&full, r1, r2) {
                out.push(h);
            }
            return;
        }
        if map[x].is_some() {
            go(r1, r2, map, x + 1, out);
            return;
        }
        for v in 0..r2.size() {
            map[x] = Some(v);
            if consistent(r1, r2, map, x) {
                go(r1, r2, map, x + 1, out);
            }
        }
        map[x] = None;
    }

    go(r1, r2, &mut map, 1, &mut out);
    out
}

/// `R/J` with the projection `x ↦ x + J`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: HyperRing,
    /// Coset index of each element of the source.
    pub projection: Vec<usize>,
    /// Cosets in index order; coset 0 is `J` itself.
    pub cosets: Vec<ElementSubset>,
}

impl Quotient {
    /// `I/J`: the cosets meeting `I`.
    pub fn image(&self, i: &ElementSubset) -> ElementSubset {
        i.iter().map(|x| self.projection[x]).collect()
    }
}

fn cosets_of(ring: &HyperRing, j: &ElementSubset) -> (Vec<ElementSubset>, Vec<usize>) {
    let n = ring.size();
    let mut cosets: Vec<ElementSubset> = Vec::new();
    let mut projection = vec![usize::MAX; n];
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let coset: ElementSubset = j.iter().map(|t| ring.add(x, t)).collect();
        for y in &coset {
            projection[y] = cosets.len();
        }
        cosets.push(coset);
    }
    (cosets, projection)
}

/// The quotient hyperring `R/J`, with `(x+J) o (y+J) = {z + J : z ∈ x o y}`.
///
/// Fails with [`Error::IllFormedQuotient`] when the lifted hyperproduct depends
/// on the choice of representatives.
pub fn quotient(ring: &HyperRing, j: &ElementSubset) -> Result<Quotient> {
    if !ideal::is_hyperideal(ring, j)? {
        return Err(Error::NotHyperideal(j.to_string()));
    }
    let (cosets, projection) = cosets_of(ring, j);
    let m = cosets.len();
    let reps: Vec<usize> = cosets.iter().map(|c| c.first().expect("nonempty coset")).collect();
    let lift = |z: &ElementSubset| -> ElementSubset { z.iter().map(|x| projection[x]).collect() };
    let mut hmul = vec![vec![Vec::new(); m]; m];
    for a in 0..m {
        for b in 0..m {
            let expected = lift(&ring.mul(reps[a], reps[b]));
            for x in &cosets[a] {
                for y in &cosets[b] {
                    if lift(&ring.mul(x, y)) != expected {
                        return Err(Error::IllFormedQuotient(format!(
                            "representatives ({}, {}) and ({x}, {y}) give different products",
                            reps[a], reps[b]
                        )));
                    }
                }
            }
            hmul[a][b] = expected.to_vec();
        }
    }
    let add = (0..m)
        .map(|a| (0..m).map(|b| projection[ring.add(reps[a], reps[b])]).collect())
        .collect();
    let raw = RawTables {
        name: format!("{}/{}", ring.name(), j),
        add,
        hmul,
    };
    let q = HyperRing::validate_with(
        &raw,
        ValidateOptions {
            require_commutative: ring.is_commutative(),
        },
    )?
    .with_provenance(Provenance::Quotient {
        source: ring.name().to_string(),
        ideal: *j,
    });
    Ok(Quotient {
        ring: q,
        projection,
        cosets,
    })
}

/// `R1 × R2` with componentwise operations; `(a, b)` is encoded as
/// `a * |R2| + b`.
pub fn direct_product(r1: &HyperRing, r2: &HyperRing) -> Result<HyperRing> {
    let (n1, n2) = (r1.size(), r2.size());
    let n = n1 * n2;
    let enc = |a: usize, b: usize| a * n2 + b;
    let add = (0..n)
        .map(|x| (0..n).map(|y| enc(r1.add(x / n2, y / n2), r2.add(x % n2, y % n2))).collect())
        .collect();
    let hmul = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let left = r1.mul(x / n2, y / n2);
                    let right = r2.mul(x % n2, y % n2);
                    let mut cell: Vec<usize> =
                        left.iter().flat_map(|a| right.iter().map(move |b| enc(a, b))).collect();
                    cell.sort_unstable();
                    cell
                })
                .collect()
        })
        .collect();
    let name = format!("{}x{}", r1.name(), r2.name());
    let raw = RawTables {
        name: name.clone(),
        add,
        hmul,
    };
    Ok(HyperRing::validate_with(
        &raw,
        ValidateOptions {
            require_commutative: r1.is_commutative() && r2.is_commutative(),
        },
    )?
    .with_provenance(Provenance::Product {
        source: name,
        left: r1.name().to_string(),
        right: r2.name().to_string(),
        left_size: n1,
        right_size: n2,
    }))
}

/// Splits a product element into its components.
pub fn product_components(index: usize, right_size: usize) -> (usize, usize) {
    (index / right_size, index % right_size)
}

/// Hypermatrices `M_d(R)`.
#[derive(Debug, Clone)]
pub struct MatrixRing {
    pub ring: HyperRing,
    pub dim: usize,
    base: usize,
}

impl MatrixRing {
    /// Index of the matrix with the given row-major entries.
    pub fn encode(&self, entries: &[usize]) -> usize {
        entries.iter().rev().fold(0, |acc, &e| acc * self.base + e)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim * self.dim);
        for _ in 0..self.dim * self.dim {
            out.push(index % self.base);
            index /= self.base;
        }
        out
    }

    /// `M_d(I)`: matrices with every entry in `I`.
    pub fn matrices_over(&self, i: &ElementSubset) -> ElementSubset {
        (0..self.ring.size())
            .filter(|&m| self.decode(m).iter().all(|&e| i.contains(e)))
            .collect()
    }

    /// The matrix with `x` in the top-left slot and zeros elsewhere.
    pub fn corner(&self, x: usize) -> usize {
        let mut entries = vec![0; self.dim * self.dim];
        entries[0] = x;
        self.encode(&entries)
    }
}

/// `M_d(R)`; entry `(i, k)` of a product ranges over the set-sum
/// `Σ_j a_ij o b_jk`, and the product is every matrix assembled from one
/// choice per entry.
pub fn matrix_hyperring(ring: &HyperRing, dim: usize, cap: usize) -> Result<MatrixRing> {
    if !ring.has_scalar_identity() {
        return Err(Error::NoIdentity);
    }
    let base = ring.size();
    let cells = dim * dim;
    let size = (0..cells).try_fold(1usize, |acc, _| acc.checked_mul(base));
    let size = match size {
        Some(s) if s <= cap && s <= crate::subset::MAX_CARRIER => s,
        _ => {
            return Err(Error::CapExceeded {
                cap,
                size: size.unwrap_or(usize::MAX),
            })
        }
    };
    let decode = |mut index: usize| -> Vec<usize> {
        let mut out = Vec::with_capacity(cells);
        for _ in 0..cells {
            out.push(index % base);
            index /= base;
        }
        out
    };
    let encode = |entries: &[usize]| -> usize { entries.iter().rev().fold(0, |acc, &e| acc * base + e) };
    let mats: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let add = (0..size)
        .map(|x| {
            (0..size)
                .map(|y| {
                    let e: Vec<usize> = (0..cells).map(|c| ring.add(mats[x][c], mats[y][c])).collect();
                    encode(&e)
                })
                .collect()
        })
        .collect();
    let mut hmul = vec![vec![Vec::new(); size]; size];
    for x in 0..size {
        for y in 0..size {
            let (a, b) = (&mats[x], &mats[y]);
            let entry_sets: Vec<ElementSubset> = (0..cells)
                .map(|c| {
                    let (i, k) = (c / dim, c % dim);
                    (0..dim).fold(ElementSubset::singleton(0), |acc, j| {
                        ring.set_sum(&acc, &ring.mul(a[i * dim + j], b[j * dim + k]))
                    })
                })
                .collect();
            let mut products = vec![Vec::new()];
            for set in &entry_sets {
                products = products
                    .into_iter()
                    .flat_map(|prefix: Vec<usize>| {
                        set.iter().map(move |e| {
                            let mut p = prefix.clone();
                            p.push(e);
                            p
                        })
                    })
                    .collect();
            }
            let mut cell: Vec<usize> = products.iter().map(|p| encode(p)).collect();
            cell.sort_unstable();
            cell.dedup();
            hmul[x][y] = cell;
        }
    }
    let raw = RawTables {
        name: format!("M{dim}({})", ring.name()),
        add,
        hmul,
    };
    let m = HyperRing::validate_with(
        &raw,
        ValidateOptions {
            require_commutative: false,
        },
    )?
    .with_provenance(Provenance::Matrix {
        source: ring.name().to_string(),
        dim,
    });
    Ok(MatrixRing { ring: m, dim, base })
}

/// A subhyperring with its inclusion map.
#[derive(Debug, Clone)]
pub struct Subring {
    pub ring: HyperRing,
    /// `embedding[t]` is the element of the ambient ring labelled `t`.
    pub embedding: Vec<usize>,
}

impl Subring {
    /// Restricts an ambient subset to the subring's labels.
    pub fn restrict(&self, s: &ElementSubset) -> ElementSubset {
        self.embedding
            .iter()
            .enumerate()
            .filter(|(_, &x)| s.contains(x))
            .map(|(t, _)| t)
            .collect()
    }
}

/// Whether `T` is closed under `+`, `−` and `o`; `Err` carries a witness.
pub fn check_subring_closure(ring: &HyperRing, t: &ElementSubset) -> Result<()> {
    if t.is_empty() {
        return Err(Error::EmptySet);
    }
    for a in t {
        for b in t {
            if !t.contains(ring.sub(a, b)) {
                return Err(Error::NotClosed(format!("{a} - {b} leaves the subset")));
            }
            if !ring.mul(a, b).is_subset(t) {
                return Err(Error::NotClosed(format!("{a} o {b} leaves the subset")));
            }
        }
    }
    Ok(())
}

pub fn subhyperring_restrict(ring: &HyperRing, t: &ElementSubset) -> Result<Subring> {
    check_subring_closure(ring, t)?;
    let embedding = t.to_vec();
    let mut index = vec![usize::MAX; ring.size()];
    for (i, &x) in embedding.iter().enumerate() {
        index[x] = i;
    }
    let m = embedding.len();
    let raw = RawTables {
        name: format!("{}|{}", ring.name(), t),
        add: (0..m)
            .map(|a| (0..m).map(|b| index[ring.add(embedding[a], embedding[b])]).collect())
            .collect(),
        hmul: (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| ring.mul(embedding[a], embedding[b]).iter().map(|x| index[x]).collect())
                    .collect()
            })
            .collect(),
    };
    let sub = HyperRing::validate_with(
        &raw,
        ValidateOptions {
            require_commutative: ring.is_commutative(),
        },
    )?
    .with_provenance(Provenance::Subring {
        source: ring.name().to_string(),
        subset: *t,
    });
    Ok(Subring { ring: sub, embedding })
}

fn generated_subgroup(ring: &HyperRing, gens: &ElementSubset) -> ElementSubset {
    let mut cur = gens.union(&ring.zero_set());
    loop {
        let next = cur.union(&ring.set_sum(&cur, &cur)).union(&ring.set_neg(&cur));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// All subsets closed under `+`, `−` and `o`, in canonical order.
pub fn enumerate_subhyperrings(ring: &HyperRing) -> Vec<ElementSubset> {
    let n = ring.size();
    let cyclic: Vec<ElementSubset> = (0..n)
        .map(|x| generated_subgroup(ring, &ElementSubset::singleton(x)))
        .collect();
    let mut all: HashSet<ElementSubset> = cyclic.iter().copied().collect();
    let mut frontier: Vec<ElementSubset> = all.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for c in &cyclic {
                if c.is_subset(g) {
                    continue;
                }
                let j = generated_subgroup(ring, &g.union(c));
                if all.insert(j) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<ElementSubset> = all
        .into_iter()
        .filter(|t| t.iter().all(|a| t.iter().all(|b| ring.mul(a, b).is_subset(t))))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// How the family `𝔘` of finite sums of finite products is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum GammaReading {
    /// Factors of a product may repeat (`z_i` need not be distinct).
    #[default]
    Repetition,
    /// Each product multiplies pairwise distinct elements.
    DistinctFactors,
}

/// `R/γ*` as an ordinary ring, with the projection.
#[derive(Debug, Clone)]
pub struct FundamentalRingImage {
    pub classes: Vec<ElementSubset>,
    pub projection: Vec<usize>,
    pub ring: HyperRing,
}

impl FundamentalRingImage {
    /// Classes meeting `I`.
    pub fn image(&self, i: &ElementSubset) -> ElementSubset {
        i.iter().map(|x| self.projection[x]).collect()
    }
}

/// The family `𝔘`: seeds are the finite hyperproducts (singletons included),
/// closed under elementwise subset-sum.
pub fn sums_of_products(ring: &HyperRing, reading: GammaReading) -> Vec<ElementSubset> {
    let n = ring.size();
    let mut seeds: HashSet<ElementSubset> = HashSet::new();
    match reading {
        GammaReading::Repetition => {
            for x in 0..n {
                seeds.insert(ElementSubset::singleton(x));
            }
            seeds.extend(ProductClassC::compute(ring).members().iter().copied());
        }
        GammaReading::DistinctFactors => {
            // Products over every nonempty set of distinct elements, in
            // increasing element order.
            let mut layer: Vec<(usize, ElementSubset)> =
                (0..n).map(|x| (x, ElementSubset::singleton(x))).collect();
            while !layer.is_empty() {
                let mut next = Vec::new();
                for (last, p) in layer {
                    seeds.insert(p);
                    for z in last + 1..n {
                        next.push((z, ring.hprod(&p, &ElementSubset::singleton(z))));
                    }
                }
                // Different element sets frequently give the same product;
                // keep one representative per (last element, product).
                next.sort_by(|a: &(usize, ElementSubset), b| a.0.cmp(&b.0).then(a.1.canonical_cmp(&b.1)));
                next.dedup();
                layer = next;
            }
        }
    }
    let mut family: HashSet<ElementSubset> = seeds.clone();
    let seed_list: Vec<ElementSubset> = seeds.into_iter().collect();
    let mut frontier: Vec<ElementSubset> = family.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for s in &seed_list {
                let v = ring.set_sum(u, s);
                if family.insert(v) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<ElementSubset> = family.into_iter().collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Computes `R/γ*` and verifies that `⊕` and `⊙` do not depend on
/// representatives.
pub fn fundamental_ring(ring: &HyperRing, cap: usize, reading: GammaReading) -> Result<FundamentalRingImage> {
    if ring.size() > cap {
        return Err(Error::CapExceeded {
            cap,
            size: ring.size(),
        });
    }
    let n = ring.size();
    let mut uf = UnionFind::new(n);
    for u in sums_of_products(ring, reading) {
        if let Some(first) = u.first() {
            for x in &u {
                uf.union(first, x);
            }
        }
    }
    let mut by_root: BTreeMap<usize, ElementSubset> = BTreeMap::new();
    for x in 0..n {
        by_root.entry(uf.find(x)).or_default().insert(x);
    }
    // Roots are class minima, so class 0 contains the zero element.
    let classes: Vec<ElementSubset> = by_root.into_values().collect();
    let mut projection = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for x in class {
            projection[x] = c;
        }
    }
    let m = classes.len();
    let single_class = |s: &ElementSubset, what: &str, a: usize, b: usize| -> Result<usize> {
        let image: ElementSubset = s.iter().map(|x| projection[x]).collect();
        if image.len() == 1 {
            Ok(image.first().expect("one class"))
        } else {
            Err(Error::IllDefinedQuotient(format!(
                "{what} of classes {a} and {b} meets classes {image}"
            )))
        }
    };
    let mut add = vec![vec![0; m]; m];
    let mut hmul = vec![vec![Vec::new(); m]; m];
    for a in 0..m {
        for b in 0..m {
            add[a][b] = single_class(&ring.set_sum(&classes[a], &classes[b]), "sum", a, b)?;
            hmul[a][b] = vec![single_class(&ring.hprod(&classes[a], &classes[b]), "product", a, b)?];
        }
    }
    let raw = RawTables {
        name: format!("{}/gamma*", ring.name()),
        add,
        hmul,
    };
    let image = HyperRing::validate_with(
        &raw,
        ValidateOptions {
            require_commutative: ring.is_commutative(),
        },
    )?
    .with_provenance(Provenance::GammaStar {
        source: ring.name().to_string(),
    });
    Ok(FundamentalRingImage {
        classes,
        projection,
        ring: image,
    })
}

/// Classical n-ideal test in an ordinary ring: `I` proper, and `xy ∈ I` with
/// `x` not nilpotent forces `y ∈ I`.
pub fn classical_n_ideal(ring: &HyperRing, i: &ElementSubset) -> bool {
    if *i == ring.full() {
        return false;
    }
    let n = ring.size();
    let nil: Vec<bool> = (0..n).map(|x| ring.is_nilpotent(x)).collect();
    (0..n).all(|x| {
        nil[x]
            || (0..n).all(|y| {
                let xy = ring.mul(x, y);
                !xy.is_subset(i) || i.contains(y)
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_hyperideal_sets;
    use crate::ring::{ordinary_zn, zn_with_a};

    fn ring(raw: RawTables) -> HyperRing {
        HyperRing::validate(&raw).unwrap()
    }

    fn set(xs: &[usize]) -> ElementSubset {
        xs.iter().copied().collect()
    }

    #[test]
    fn quotients() {
        let z4 = ring(ordinary_zn(4));
        let q = quotient(&z4, &set(&[0, 2])).unwrap();
        assert!(q.ring.same_tables(&ring(ordinary_zn(2))));
        assert_eq!(q.image(&set(&[0, 2])), set(&[0]));
        let same = quotient(&z4, &set(&[0])).unwrap();
        assert!(same.ring.same_tables(&z4));
        let zero = quotient(&z4, &z4.full()).unwrap();
        assert_eq!(zero.ring.size(), 1);
    }

    #[test]
    fn products() {
        let z2 = ring(ordinary_zn(2));
        let p = direct_product(&z2, &z2).unwrap();
        assert_eq!(p.size(), 4);
        // (1,0) o (0,1) = {(0,0)}
        assert!(p.mul(2, 1).contains(0));
        assert_eq!(enumerate_hyperideal_sets(&p, 16).unwrap().len(), 4);
        let trivial = quotient(&z2, &z2.full()).unwrap().ring;
        let q = direct_product(&ring(ordinary_zn(3)), &trivial).unwrap();
        assert!(q.same_tables(&ring(ordinary_zn(3))));
    }

    #[test]
    fn matrices() {
        let z2 = ring(ordinary_zn(2));
        let m1 = matrix_hyperring(&z2, 1, 16).unwrap();
        assert!(m1.ring.same_tables(&z2));
        let m2 = matrix_hyperring(&z2, 2, 16).unwrap();
        assert_eq!(m2.ring.size(), 16);
        assert!(!m2.ring.is_commutative());
        // classical 2x2 product [[1,1],[0,1]]·[[1,0],[1,1]] = [[0,1],[1,1]] over Z2
        let a = m2.encode(&[1, 1, 0, 1]);
        let b = m2.encode(&[1, 0, 1, 1]);
        assert_eq!(m2.ring.mul(a, b), ElementSubset::singleton(m2.encode(&[0, 1, 1, 1])));
        assert_eq!(m2.ring.mul(m2.corner(1), m2.corner(1)), ElementSubset::singleton(m2.corner(1)));
        assert!(matches!(matrix_hyperring(&ring(ordinary_zn(3)), 2, 16), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn corner_matrices_realize_hyperproducts() {
        // Z2 with A = {1}: the only hyperring of order two with scalar identity here,
        // so use a dimension-1 hyperring with genuine hyperproducts instead.
        let r = ring(zn_with_a(3, &[1, 2]));
        assert!(!r.has_scalar_identity());
        assert!(matches!(matrix_hyperring(&r, 1, 16), Err(Error::NoIdentity)));
        let z3 = ring(ordinary_zn(3));
        let m = matrix_hyperring(&z3, 2, 81).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let expect: ElementSubset = z3.mul(x, y).iter().map(|z| m.corner(z)).collect();
                assert_eq!(m.ring.mul(m.corner(x), m.corner(y)), expect);
            }
        }
    }

    #[test]
    fn homomorphisms() {
        let z4 = ring(ordinary_zn(4));
        let z2 = ring(ordinary_zn(2));
        let id = check_good_homomorphism(&[0, 1, 2, 3], &z4, &z4).unwrap();
        assert_eq!(id.kernel(), set(&[0]));
        let red = check_good_homomorphism(&[0, 1, 0, 1], &z4, &z2).unwrap();
        assert_eq!(red.kernel(), set(&[0, 2]));
        assert_eq!(red.image_ideal(&set(&[0, 2])), set(&[0]));
        assert_eq!(red.preimage_ideal(&set(&[0])), red.kernel());
        assert_eq!(red.preimage_ideal(&z2.full()), z4.full());
        // The zero map is a good homomorphism of ordinary rings.
        assert!(check_good_homomorphism(&[0, 0, 0, 0], &z4, &z2).is_ok());
        assert!(matches!(
            check_good_homomorphism(&[0, 1, 1, 1], &z4, &z2),
            Err(Error::NotAdditive(..))
        ));
        let all = enumerate_good_homomorphisms(&z4, &z2);
        assert_eq!(all.iter().map(|h| h.map().to_vec()).collect::<Vec<_>>(), vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1]]);
    }

    #[test]
    fn subrings() {
        let z6 = ring(ordinary_zn(6));
        let t = subhyperring_restrict(&z6, &set(&[0, 2, 4])).unwrap();
        assert_eq!(t.ring.size(), 3);
        assert_eq!(t.ring.identity(), Some(2)); // label 2 is the element 4
        assert_eq!(t.embedding, vec![0, 2, 4]);
        assert!(subhyperring_restrict(&z6, &z6.full()).unwrap().ring.same_tables(&z6));
        assert_eq!(subhyperring_restrict(&z6, &set(&[0])).unwrap().ring.size(), 1);
        assert!(matches!(subhyperring_restrict(&z6, &set(&[0, 1])), Err(Error::NotClosed(_))));
        assert_eq!(enumerate_subhyperrings(&z6).len(), 4);
    }

    #[test]
    fn gamma_star_of_ordinary_rings_is_the_identity_partition() {
        for n in 2..=8 {
            let r = ring(ordinary_zn(n));
            let f = fundamental_ring(&r, 10, GammaReading::Repetition).unwrap();
            assert_eq!(f.classes.len(), n);
            assert!(f.ring.same_tables(&r));
        }
    }

    #[test]
    fn gamma_star_collapses_hyperproducts() {
        let r = ring(zn_with_a(7, &[1, 6]));
        let f = fundamental_ring(&r, 10, GammaReading::Repetition).unwrap();
        // 1 o 1 = {1, 6} puts 1 and -1 together; the quotient is a ring.
        assert_eq!(f.projection[1], f.projection[6]);
        for x in 0..f.ring.size() {
            for y in 0..f.ring.size() {
                assert_eq!(f.ring.mul(x, y).len(), 1);
            }
        }
        let trivial = quotient(&r, &r.full()).unwrap().ring;
        assert_eq!(fundamental_ring(&trivial, 10, GammaReading::Repetition).unwrap().classes.len(), 1);
    }

    #[test]
    fn classical_n_ideal_examples() {
        let z4 = ring(ordinary_zn(4));
        assert!(classical_n_ideal(&z4, &set(&[0, 2])));
        assert!(!classical_n_ideal(&z4, &z4.full()));
        let z5 = ring(ordinary_zn(5));
        assert!(classical_n_ideal(&z5, &set(&[0])));
    }
}
