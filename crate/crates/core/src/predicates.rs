//! Prime, weakly prime, almost prime, idempotent and minimal ideals.
//!
//! All three primeness notions share one shape: a pair `(A, B)` from the
//! quantifier universe violates the property when `AB ⊆ P`, `A ⊄ P`,
//! `B ⊄ P`, and a flavour-specific side condition holds (none for prime,
//! `AB ≠ 0` for weakly prime, `AB ⊄ P²` for almost prime). The universe always
//! includes the whole ring as a factor.

use std::sync::Arc;

use thiserror::Error;

use crate::bits::BitSet;
use crate::ideal::{arb_bits, enumerate_ideals, product_bits, ElementSubset, IdealHandle, IdealKind};
use crate::ring::{FiniteRing, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("the whole ring is not a proper ideal")]
    ImproperIdeal,
    #[error("the zero ideal has no minimality")]
    ZeroIdeal,
    #[error("ring has no identity")]
    NoIdentity,
    #[error("ideal must be two-sided")]
    NotTwoSided,
    #[error("ideal and universe belong to different rings")]
    RingMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Prime,
    WeaklyPrime,
    AlmostPrime,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Prime => "prime",
            Flavor::WeaklyPrime => "weakly prime",
            Flavor::AlmostPrime => "almost prime",
        }
    }
}

/// All ideals of one kind in a ring, with every pairwise product cached.
pub struct Universe {
    ring: Ring,
    kind: IdealKind,
    ideals: Vec<IdealHandle>,
    products: Vec<BitSet>,
}

impl Universe {
    pub fn new(ring: &Ring, kind: IdealKind) -> Self {
        Self::from_ideals(ring, kind, enumerate_ideals(ring, kind))
    }

    pub fn from_ideals(ring: &Ring, kind: IdealKind, ideals: Vec<IdealHandle>) -> Self {
        let products = ideals
            .iter()
            .flat_map(|a| ideals.iter().map(move |b| product_bits(ring, a.bits(), b.bits())))
            .collect();
        Universe {
            ring: Arc::clone(ring),
            kind,
            ideals,
            products,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn ideals(&self) -> &[IdealHandle] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &BitSet {
        &self.products[i * self.ideals.len() + j]
    }

    pub fn index_of(&self, bits: &BitSet) -> Option<usize> {
        self.ideals.iter().position(|x| x.bits() == bits)
    }

    pub fn proper(&self) -> impl Iterator<Item = (usize, &IdealHandle)> {
        self.ideals.iter().enumerate().filter(|(_, p)| p.is_proper())
    }

    /// `P²` for a member of the universe, from the cache.
    pub fn square_of(&self, i: usize) -> &BitSet {
        self.product(i, i)
    }
}

/// Side condition of `flavor` on a product landing inside `P`.
#[inline]
fn side_condition(ring: &FiniteRing, flavor: Flavor, product: &BitSet, p_square: &BitSet) -> bool {
    match flavor {
        Flavor::Prime => true,
        Flavor::WeaklyPrime => product.iter().any(|x| x != ring.zero()),
        Flavor::AlmostPrime => !product.is_subset(p_square),
    }
}

/// First pair `(i, j)` of universe indices violating `flavor` for the set
/// `p`, in enumeration order.
pub fn violating_pair(universe: &Universe, p: &BitSet, flavor: Flavor) -> Option<(usize, usize)> {
    let ring = &universe.ring;
    let p_square = match flavor {
        Flavor::AlmostPrime => product_bits(ring, p, p),
        _ => BitSet::empty(ring.order()),
    };
    let outside: Vec<bool> = universe.ideals.iter().map(|a| !a.bits().is_subset(p)).collect();
    let k = universe.ideals.len();
    for i in (0..k).filter(|&i| outside[i]) {
        for j in (0..k).filter(|&j| outside[j]) {
            let ab = universe.product(i, j);
            if ab.is_subset(p) && side_condition(ring, flavor, ab, &p_square) {
                return Some((i, j));
            }
        }
    }
    None
}

/// A pair of ideals demonstrating that a primeness property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub a: IdealHandle,
    pub b: IdealHandle,
    pub product: ElementSubset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<PairWitness>,
}

fn check_member(p: &IdealHandle, universe: &Universe) -> Result<(), PredicateError> {
    if !Arc::ptr_eq(p.ring(), universe.ring()) {
        return Err(PredicateError::RingMismatch);
    }
    if !p.is_proper() {
        return Err(PredicateError::ImproperIdeal);
    }
    Ok(())
}

pub fn decide(p: &IdealHandle, universe: &Universe, flavor: Flavor) -> Result<Verdict, PredicateError> {
    check_member(p, universe)?;
    Ok(match violating_pair(universe, p.bits(), flavor) {
        None => Verdict {
            holds: true,
            witness: None,
        },
        Some((i, j)) => Verdict {
            holds: false,
            witness: Some(PairWitness {
                a: universe.ideals[i].clone(),
                b: universe.ideals[j].clone(),
                product: ElementSubset::new(universe.ring(), universe.product(i, j).clone()),
            }),
        },
    })
}

pub fn is_prime(p: &IdealHandle, universe: &Universe) -> Result<Verdict, PredicateError> {
    decide(p, universe, Flavor::Prime)
}

pub fn is_weakly_prime(p: &IdealHandle, universe: &Universe) -> Result<Verdict, PredicateError> {
    decide(p, universe, Flavor::WeaklyPrime)
}

pub fn is_almost_prime(p: &IdealHandle, universe: &Universe) -> Result<Verdict, PredicateError> {
    decide(p, universe, Flavor::AlmostPrime)
}

pub fn square_bits(ring: &FiniteRing, p: &BitSet) -> BitSet {
    product_bits(ring, p, p)
}

pub fn is_idempotent(p: &IdealHandle) -> bool {
    &square_bits(p.ring(), p.bits()) == p.bits()
}

/// First universe member strictly between zero and `p`, if any.
pub fn ideal_between_zero(universe: &Universe, p: &BitSet) -> Option<usize> {
    let zero = universe.ring.zero();
    universe.ideals.iter().position(|i| {
        let b = i.bits();
        b.is_subset(p) && b != p && b.iter().any(|x| x != zero)
    })
}

pub fn is_minimal(p: &IdealHandle, universe: &Universe) -> Result<bool, PredicateError> {
    check_member(p, universe)?;
    if p.is_zero() {
        return Err(PredicateError::ZeroIdeal);
    }
    Ok(ideal_between_zero(universe, p.bits()).is_none())
}

/// Elementwise criteria for a two-sided ideal in a ring with identity, each
/// with its first violating element pair `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementCriteria {
    pub prime: Option<(usize, usize)>,
    pub weakly_prime: Option<(usize, usize)>,
    pub almost_prime: Option<(usize, usize)>,
}

impl ElementCriteria {
    pub fn prime_holds(&self) -> bool {
        self.prime.is_none()
    }

    pub fn weakly_prime_holds(&self) -> bool {
        self.weakly_prime.is_none()
    }

    pub fn almost_prime_holds(&self) -> bool {
        self.almost_prime.is_none()
    }
}

/// Evaluates the `aRb` criteria over all pairs without gating on the
/// hypotheses; see [`element_criteria`] for the checked entry point.
pub fn element_criteria_bits(ring: &FiniteRing, p: &BitSet) -> ElementCriteria {
    let p_square = square_bits(ring, p);
    let mut out = ElementCriteria {
        prime: None,
        weakly_prime: None,
        almost_prime: None,
    };
    for a in ring.elements().filter(|&a| !p.contains(a)) {
        for b in ring.elements().filter(|&b| !p.contains(b)) {
            let arb = arb_bits(ring, a, b);
            if !arb.is_subset(p) {
                continue;
            }
            out.prime.get_or_insert((a, b));
            if arb.iter().any(|x| x != ring.zero()) {
                out.weakly_prime.get_or_insert((a, b));
            }
            if !arb.is_subset(&p_square) {
                out.almost_prime.get_or_insert((a, b));
            }
        }
    }
    out
}

pub fn element_criteria(ring: &Ring, p: &IdealHandle) -> Result<ElementCriteria, PredicateError> {
    if ring.identity().is_none() {
        return Err(PredicateError::NoIdentity);
    }
    if !Arc::ptr_eq(ring, p.ring()) {
        return Err(PredicateError::RingMismatch);
    }
    if !p.is_proper() {
        return Err(PredicateError::ImproperIdeal);
    }
    if crate::ideal::is_ideal(p.subset(), IdealKind::TwoSided).is_err() {
        return Err(PredicateError::NotTwoSided);
    }
    Ok(element_criteria_bits(ring, p.bits()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullyVerdict {
    pub holds: bool,
    pub first_failure: Option<IdealHandle>,
}

pub fn is_fully_almost_prime_in(universe: &Universe) -> FullyVerdict {
    let first_failure = universe
        .proper()
        .find(|(_, p)| violating_pair(universe, p.bits(), Flavor::AlmostPrime).is_some())
        .map(|(_, p)| p.clone());
    FullyVerdict {
        holds: first_failure.is_none(),
        first_failure,
    }
}

/// Every proper right ideal is almost prime.
pub fn is_fully_almost_prime(ring: &Ring) -> FullyVerdict {
    is_fully_almost_prime_in(&Universe::new(ring, IdealKind::Right))
}

/// Why a classification flag is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// `(A, B)` with `AB ⊆ P` and neither factor inside `P`.
    Pair(PairWitness),
    /// `P² ≠ P`; carries `P²`.
    Square(ElementSubset),
    /// A nonzero ideal strictly inside `P`.
    Between(IdealHandle),
    /// Minimality is not defined for the zero ideal.
    ZeroIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub ideal: IdealHandle,
    pub two_sided: bool,
    pub is_idempotent: bool,
    pub is_prime: bool,
    pub is_weakly_prime: bool,
    pub is_almost_prime: bool,
    pub is_minimal: bool,
    pub square: ElementSubset,
    pub idempotent_failure: Option<Failure>,
    pub prime_failure: Option<Failure>,
    pub weakly_prime_failure: Option<Failure>,
    pub almost_prime_failure: Option<Failure>,
    pub minimal_failure: Option<Failure>,
}

/// Classifies one proper member of `universe`.
pub fn classify_ideal(p: &IdealHandle, universe: &Universe) -> Result<ClassificationRecord, PredicateError> {
    let ring = universe.ring();
    let prime = is_prime(p, universe)?;
    let weakly = is_weakly_prime(p, universe)?;
    let almost = is_almost_prime(p, universe)?;
    let square = ElementSubset::new(ring, square_bits(ring, p.bits()));
    let is_idempotent = square == *p.subset();
    let (is_minimal, minimal_failure) = if p.is_zero() {
        (false, Some(Failure::ZeroIdeal))
    } else {
        match ideal_between_zero(universe, p.bits()) {
            None => (true, None),
            Some(i) => (false, Some(Failure::Between(universe.ideals[i].clone()))),
        }
    };
    Ok(ClassificationRecord {
        ideal: p.clone(),
        two_sided: crate::ideal::is_ideal(p.subset(), IdealKind::TwoSided).is_ok(),
        is_idempotent,
        is_prime: prime.holds,
        is_weakly_prime: weakly.holds,
        is_almost_prime: almost.holds,
        is_minimal,
        idempotent_failure: (!is_idempotent).then(|| Failure::Square(square.clone())),
        square,
        prime_failure: prime.witness.map(Failure::Pair),
        weakly_prime_failure: weakly.witness.map(Failure::Pair),
        almost_prime_failure: almost.witness.map(Failure::Pair),
        minimal_failure,
    })
}

/// One record per proper right ideal, in enumeration order.
pub fn classify_ring(ring: &Ring) -> Vec<ClassificationRecord> {
    let universe = Universe::new(ring, IdealKind::Right);
    universe
        .proper()
        .map(|(_, p)| classify_ideal(p, &universe).expect("proper member of its own universe"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_example, matrix_ring, tri2_e12, tri2_e22, zmod, PaperExample};
    use crate::ideal::{principal, ElementSubset};
    use crate::ring::DEFAULT_MAX_ORDER;

    const A: usize = 1;
    const B: usize = 2;
    const C: usize = 3;

    fn right(r: &Ring, idx: &[usize]) -> IdealHandle {
        IdealHandle::new(
            ElementSubset::from_indices(r, idx.iter().copied()).unwrap(),
            IdealKind::Right,
        )
        .unwrap()
    }

    /// Definition-level oracle: quantify over every pair of right ideals found
    /// by the exhaustive subset scan, with products formed from scratch.
    fn brute(r: &Ring, p: &[usize], flavor: Flavor) -> bool {
        let ideals = crate::ideal::enumerate_ideals_oracle(r, IdealKind::Right).unwrap();
        let p: Vec<usize> = p.to_vec();
        let inside = |s: &[usize]| s.iter().all(|x| p.contains(x));
        let mul_sums = |x: &[usize], y: &[usize]| -> Vec<usize> {
            let mut acc = vec![r.zero()];
            loop {
                let mut grew = false;
                let prods: Vec<usize> = x
                    .iter()
                    .flat_map(|&a| y.iter().map(move |&b| (a, b)))
                    .map(|(a, b)| r.mul(a, b))
                    .collect();
                for s in acc.clone() {
                    for &q in &prods {
                        let t = r.add(s, q);
                        if !acc.contains(&t) {
                            acc.push(t);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    return acc;
                }
            }
        };
        let p2 = mul_sums(&p, &p);
        for a in &ideals {
            for b in &ideals {
                let (ae, be) = (a.subset().elements(), b.subset().elements());
                let ab = mul_sums(&ae, &be);
                if !inside(&ab) || inside(&ae) || inside(&be) {
                    continue;
                }
                let bad = match flavor {
                    Flavor::Prime => true,
                    Flavor::WeaklyPrime => ab.iter().any(|&x| x != r.zero()),
                    Flavor::AlmostPrime => !ab.iter().all(|x| p2.contains(x)),
                };
                if bad {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn paper_ring_predicates() {
        let r = builtin_example(PaperExample::TwoOneII).unwrap();
        let u = Universe::new(&r, IdealKind::Right);
        let p = right(&r, &[0, A]);
        let j = right(&r, &[0, C]);

        assert!(is_idempotent(&p));
        assert!(!is_idempotent(&j));

        let pr = is_prime(&p, &u).unwrap();
        assert!(!pr.holds);
        let w = pr.witness.unwrap();
        assert_eq!(w.a.subset().elements(), vec![0, B]);
        assert_eq!(w.b.subset().elements(), vec![0, C]);
        assert!(w.product.is_zero());

        assert!(is_weakly_prime(&p, &u).unwrap().holds);
        assert!(is_almost_prime(&p, &u).unwrap().holds);
        assert!(is_weakly_prime(&j, &u).unwrap().holds);
        assert!(is_minimal(&j, &u).unwrap());

        for (set, flavor) in [
            (&[0, A][..], Flavor::WeaklyPrime),
            (&[0, A][..], Flavor::Prime),
            (&[0, C][..], Flavor::WeaklyPrime),
        ] {
            let got = decide(&right(&r, set), &u, flavor).unwrap().holds;
            assert_eq!(got, brute(&r, set, flavor), "{set:?} {flavor:?}");
        }
    }

    #[test]
    fn zmod_predicates_match_brute_force() {
        let z4 = zmod(4);
        let u = Universe::new(&z4, IdealKind::Right);
        assert!(is_prime(&right(&z4, &[0, 2]), &u).unwrap().holds);
        assert!(brute(&z4, &[0, 2], Flavor::Prime));
        let zero = IdealHandle::zero(&z4, IdealKind::Right);
        assert!(is_idempotent(&zero));
        assert!(is_weakly_prime(&zero, &u).unwrap().holds);

        let z12 = zmod(12);
        let u12 = Universe::new(&z12, IdealKind::Right);
        let four = right(&z12, &[0, 4, 8]);
        assert!(is_almost_prime(&four, &u12).unwrap().holds);
        assert!(brute(&z12, &[0, 4, 8], Flavor::AlmostPrime));
        for (_, p) in u12.proper() {
            for flavor in [Flavor::Prime, Flavor::WeaklyPrime, Flavor::AlmostPrime] {
                assert_eq!(
                    decide(p, &u12, flavor).unwrap().holds,
                    brute(&z12, &p.subset().elements(), flavor)
                );
            }
        }
    }

    #[test]
    fn zero_ideal_of_simple_ring_is_prime() {
        let m = matrix_ring(2, 2, DEFAULT_MAX_ORDER).unwrap();
        let u = Universe::new(&m, IdealKind::Right);
        assert!(is_prime(&IdealHandle::zero(&m, IdealKind::Right), &u).unwrap().holds);
        assert!(brute(&m, &[m.zero()], Flavor::Prime));
    }

    #[test]
    fn zero_ideal_is_always_almost_prime() {
        for r in [
            zmod(8),
            matrix_ring(2, 2, 64).unwrap(),
            builtin_example(PaperExample::TwoOneII).unwrap(),
        ] {
            let u = Universe::new(&r, IdealKind::Right);
            let zero = IdealHandle::zero(&r, IdealKind::Right);
            assert!(is_almost_prime(&zero, &u).unwrap().holds);
            assert!(is_weakly_prime(&zero, &u).unwrap().holds);
        }
    }

    #[test]
    fn minimality_in_z8() {
        let z8 = zmod(8);
        let u = Universe::new(&z8, IdealKind::Right);
        assert!(!is_minimal(&right(&z8, &[0, 2, 4, 6]), &u).unwrap());
        assert!(is_minimal(&right(&z8, &[0, 4]), &u).unwrap());
        assert_eq!(
            is_minimal(&IdealHandle::zero(&z8, IdealKind::Right), &u),
            Err(PredicateError::ZeroIdeal)
        );
        assert_eq!(
            is_prime(&IdealHandle::whole(&z8, IdealKind::Right), &u),
            Err(PredicateError::ImproperIdeal)
        );
    }

    #[test]
    fn element_criteria_examples() {
        let z4 = zmod(4);
        let two = principal(&z4, 2, IdealKind::TwoSided).unwrap();
        let c = element_criteria(&z4, &two).unwrap();
        assert!(c.prime_holds() && c.weakly_prime_holds() && c.almost_prime_holds());

        let r = builtin_example(PaperExample::TwoOneII).unwrap();
        let j = IdealHandle::new(ElementSubset::from_indices(&r, [0, C]).unwrap(), IdealKind::TwoSided).unwrap();
        assert_eq!(element_criteria(&r, &j), Err(PredicateError::NoIdentity));
        assert_eq!(
            element_criteria(&z4, &IdealHandle::whole(&z4, IdealKind::TwoSided)),
            Err(PredicateError::ImproperIdeal)
        );
    }

    #[test]
    fn triangular_p_fails_prime_criterion_via_e12() {
        let p = 3;
        let t = builtin_example(PaperExample::TwoOneIV { p }).unwrap();
        let set = BitSet::from_indices(t.order(), (0..p).map(|c| tri2_e22(p, c)));
        let crit = element_criteria_bits(&t, &set);
        let (a, b) = crit.prime.expect("prime criterion fails");
        assert!(arb_bits(&t, a, b).is_subset(&set));
        // e12 R e12 = 0 is one such pair.
        let e12 = tri2_e12(p, 1);
        assert!(arb_bits(&t, e12, e12).iter().all(|x| x == t.zero()));
    }

    #[test]
    fn fully_almost_prime_examples() {
        assert!(is_fully_almost_prime(&builtin_example(PaperExample::TwoOneII).unwrap()).holds);
        assert!(is_fully_almost_prime(&builtin_example(PaperExample::TwoOneIII).unwrap()).holds);
        // Z_12: (6) has square 0 while (2)(3) = (6), so it is the first failure.
        let z12 = is_fully_almost_prime(&zmod(12));
        assert!(!z12.holds);
        assert_eq!(z12.first_failure.unwrap().subset().elements(), vec![0, 6]);
    }

    #[test]
    fn classification_records() {
        let r = builtin_example(PaperExample::TwoOneII).unwrap();
        let recs = classify_ring(&r);
        assert_eq!(recs.len(), 4);
        let by = |e: usize| recs.iter().find(|x| x.ideal.subset().elements() == vec![0, e]).unwrap();
        for e in [A, B] {
            let x = by(e);
            assert!(x.is_idempotent && x.is_almost_prime && !x.is_prime);
        }
        let j = by(C);
        assert!(j.is_weakly_prime && j.is_minimal && !j.is_idempotent);

        let z4 = classify_ring(&zmod(4));
        assert_eq!(z4.len(), 2);
        assert!(classify_ring(&zmod(1)).is_empty());
    }

    #[test]
    fn implication_chain_on_small_rings() {
        for r in [
            zmod(8),
            zmod(12),
            matrix_ring(2, 2, 64).unwrap(),
            builtin_example(PaperExample::TwoOneIV { p: 3 }).unwrap(),
        ] {
            for rec in classify_ring(&r) {
                assert!(!rec.is_prime || rec.is_weakly_prime);
                assert!(!rec.is_weakly_prime || rec.is_almost_prime);
                assert!(!rec.is_idempotent || rec.is_almost_prime);
            }
        }
    }
}
