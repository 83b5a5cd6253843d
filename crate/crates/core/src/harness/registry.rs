use serde::Serialize;

use super::checks::*;
use super::{Ctx, Flag, Outcome, Reading};

pub type CheckFn = fn(&Ctx, &Reading) -> Outcome;

/// One registered proposition.
#[derive(Clone, Serialize)]
pub struct TheoremEntry {
    pub id: &'static str,
    pub name: &'static str,
    /// The checked statement, in the notation of this crate.
    pub statement: &'static str,
    pub flags: &'static [Flag],
    /// The statement mentions the identity `1`.
    pub needs_identity: bool,
    #[serde(skip)]
    pub check: CheckFn,
}

use Flag::{Gamma, Idempotent, Prime, Product, Regular, Standing, Subsets};

const fn entry(
    id: &'static str,
    name: &'static str,
    statement: &'static str,
    flags: &'static [Flag],
    check: CheckFn,
) -> TheoremEntry {
    TheoremEntry {
        id,
        name,
        statement,
        flags,
        needs_identity: false,
        check,
    }
}

const fn unital(mut e: TheoremEntry) -> TheoremEntry {
    e.needs_identity = true;
    e
}

static REGISTRY: [TheoremEntry; 41] = [
    entry(
        "T01",
        "r-law via hyperideal products",
        "(1) I is r iff [I1 o I2 ⊆ I, I1 ∩ V ≠ ∅ ⇒ I2 ⊆ I]; (2) I ∩ V ≠ ∅, I1 ≠ I2 r ⇒ I o I1 ≠ I o I2 and I ∩ I1 ≠ I ∩ I2; (3) J ∩ V ≠ ∅, I o J r ⇒ I = I o J",
        &[Standing, Regular, Product],
        t01,
    ),
    entry(
        "T02",
        "r-law via principal meets and colons",
        "I is r ⇔ ∀a ∈ V: <a> ∩ I = a o I ⇔ ∀a ∈ V∖I: (I : a) = I",
        &[Standing, Regular, Product],
        t02,
    ),
    entry(
        "T03",
        "intersections of r-hyperideals",
        "I, J r ⇒ I ∩ J r",
        &[Standing],
        t03,
    ),
    entry(
        "T04",
        "proper r-hyperideals lie in Z(R)",
        "I proper r ⇒ I ⊆ Z(R)",
        &[Standing],
        t04,
    ),
    entry(
        "T05",
        "annihilators are r-hyperideals",
        "x ≠ 0 ⇒ ann(x) is an r-hyperideal",
        &[Standing],
        t05,
    ),
    entry(
        "T06",
        "integral hyperdomains via r-hyperideals",
        "R integral ⇔ {0} is the only proper r-hyperideal ⇔ ∀x,y: ann(x o y) = ann(x) ∪ ann(y)",
        &[Standing],
        t06,
    ),
    unital(entry(
        "T07",
        "annihilators of a splitting of 1",
        "x + y = 1 ⇒ ann(x) + ann(y) is an r-hyperideal",
        &[Standing],
        t07,
    )),
    entry(
        "T08a",
        "minimal nonzero hyperideal plus an annihilator",
        "R reduced, P minimal nonzero, s idempotent ⇒ P + ann(s) is an r-hyperideal",
        &[Standing, Idempotent],
        t08a,
    ),
    entry(
        "T08b",
        "minimal prime plus an annihilator",
        "R reduced, P minimal prime, s idempotent ⇒ P + ann(s) is an r-hyperideal",
        &[Standing, Idempotent, Prime],
        t08b,
    ),
    entry(
        "T09",
        "maximal r-hyperideals are prime",
        "I maximal among proper r-hyperideals ⇒ I prime",
        &[Standing, Prime],
        t09,
    ),
    entry(
        "T10",
        "prime r-hyperideals are zero-divisor ideals",
        "P prime: P is r ⇔ P ⊆ Z(R)",
        &[Standing, Prime],
        t10,
    ),
    entry(
        "T11",
        "incomparable primes with an r-intersection",
        "P1..Pk pairwise incomparable primes, ∩Pi r ⇒ each Pi r",
        &[Standing, Prime],
        t11,
    ),
    entry(
        "T12",
        "non-essential r-hyperideals sit in a minimal prime",
        "R reduced, I r and not essential ⇒ ∃ minimal prime P ⊇ I that is a maximal proper r-hyperideal",
        &[Standing, Prime],
        t12,
    ),
    entry(
        "T13",
        "avoidance with an r-hyperideal",
        "I ⊆ I1 ∪ … ∪ Ik irredundant, I1 r, others meet V∖{0} ⇒ I ⊆ I1",
        &[Standing, Regular],
        t13,
    ),
    entry(
        "T14",
        "avoidance with a minimal prime",
        "I ⊆ P1 ∪ … ∪ Pk irredundant, P1 minimal prime, others meet V∖{0} ⇒ I ⊆ P1",
        &[Standing, Regular, Prime],
        t14,
    ),
    unital(entry(
        "T15",
        "joining r-closed and multiplicatively closed sets",
        "S r-closed, T multiplicatively closed with T ∩ V ≠ ∅ ⇒ S ∪ T ∪ S o T r-closed",
        &[Standing, Regular, Subsets],
        t15,
    )),
    unital(entry(
        "T16",
        "r-hyperideals via complements",
        "I proper: I r ⇔ R − I r-closed",
        &[Standing, Regular],
        t16,
    )),
    unital(entry(
        "T17",
        "maximal ideals avoiding an r-closed set",
        "S r-closed, K ∩ S = ∅, I maximal among hyperideals ⊇ K avoiding S ⇒ I r",
        &[Standing, Regular, Subsets],
        t17,
    )),
    entry(
        "T18",
        "n-hyperideals are r-hyperideals",
        "I n ⇒ I r",
        &[Standing, Prime],
        t18,
    ),
    entry(
        "T19",
        "n and r agree when {0} is primary",
        "{0} primary ⇒ (I proper: I n ⇔ I r)",
        &[Standing, Prime],
        t19,
    ),
    entry(
        "T20",
        "n-hyperideals lie in r(0)",
        "I n ⇒ I ⊆ r(0)",
        &[Standing, Prime],
        t20,
    ),
    entry(
        "T21",
        "intersections of n-hyperideals",
        "I, J n ⇒ I ∩ J n",
        &[Standing, Prime],
        t21,
    ),
    entry(
        "T22",
        "n-law via colons and products",
        "I proper: I n ⇔ ∀a ∉ r(0): (I : a) = I ⇔ [I1 o I2 ⊆ I, I1 ⊄ r(0) ⇒ I2 ⊆ I]",
        &[Standing, Prime, Product],
        t22,
    ),
    entry(
        "T23",
        "cancellation of n-hyperideals",
        "L ⊄ r(0), I, J n, I o L = J o L ⇒ I = J",
        &[Standing, Prime, Product],
        t23,
    ),
    entry(
        "T24",
        "prime n-hyperideals",
        "P prime: P n ⇔ P = r(0)",
        &[Standing, Prime],
        t24,
    ),
    entry(
        "T25",
        "r(0) prime iff n",
        "r(0) prime ⇔ r(0) n",
        &[Standing, Prime],
        t25,
    ),
    entry(
        "T26",
        "colons of n-hyperideals",
        "I n, T ⊄ I nonempty ⇒ (I : T) n",
        &[Standing, Prime],
        t26,
    ),
    entry(
        "T27",
        "maximal n-hyperideals",
        "I maximal among n-hyperideals ⇒ I = r(0)",
        &[Standing, Prime],
        t27,
    ),
    entry(
        "T28",
        "existence of n-hyperideals",
        "r(0) prime ⇔ some n-hyperideal exists",
        &[Standing, Prime],
        t28,
    ),
    entry(
        "T29",
        "n-hyperideals via complements",
        "I n ⇔ R − I n-closed",
        &[Standing, Prime],
        t29,
    ),
    entry(
        "T30",
        "maximal ideals avoiding an n-closed set",
        "S n-closed, K ∩ S = ∅, I maximal among hyperideals ⊇ K avoiding S ⇒ I n",
        &[Standing, Prime, Subsets],
        t30,
    ),
    entry(
        "T31",
        "covers with an n-hyperideal",
        "I ⊆ I1 ∪ … ∪ Ik, It n, others without nonzero nilpotents, I ⊄ ∪_{i≠t} Ii ⇒ I ⊆ It",
        &[Standing, Prime],
        t31,
    ),
    entry(
        "T32",
        "reduced hyperrings",
        "R reduced: (not integral ⇒ no n-hyperideal) and ({0} n ⇔ integral)",
        &[Standing, Prime],
        t32,
    ),
    entry(
        "T33",
        "integral hyperdomains via n-hyperideals",
        "{0} is the only n-hyperideal ⇔ R integral",
        &[Standing, Prime],
        t33,
    ),
    unital(entry(
        "T34",
        "invertible hyperrings",
        "R invertible ⇔ R regular and {0} n",
        &[Standing, Prime],
        t34,
    )),
    entry(
        "T35",
        "good homomorphisms",
        "φ injective, I2 n ⇒ φ⁻¹(I2) n; φ surjective, I1 n ⊇ ker φ ⇒ φ(I1) n",
        &[Standing, Prime],
        t35,
    ),
    entry(
        "T36",
        "quotients",
        "J ⊆ I proper: I n ⇒ I/J n; I/J n, J ⊆ r(0) ⇒ I n; J n, I/J n ⇒ I n",
        &[Standing, Prime],
        t36,
    ),
    entry(
        "T37",
        "hypermatrices",
        "M_d(I) n in M_d(R) ⇒ I n",
        &[Standing, Prime],
        t37,
    ),
    entry(
        "T38",
        "subhyperrings",
        "T subhyperring, I n, T ⊄ I ⇒ I ∩ T n in T",
        &[Standing, Prime],
        t38,
    ),
    entry(
        "T39",
        "direct products",
        "I = I1 × I2 n in R1 × R2 ⇒ I = R (so no product-form n-hyperideal exists)",
        &[Standing, Prime],
        t39,
    ),
    entry(
        "T40",
        "fundamental ring",
        "scalar identity: I n ⇔ I/γ* is an n-ideal of R/γ*",
        &[Standing, Prime, Gamma],
        t40,
    ),
];

/// Every registered proposition, in id order.
pub fn registry() -> &'static [TheoremEntry] {
    &REGISTRY
}
