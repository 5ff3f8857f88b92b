//! Element subsets, ideal generation and ideal arithmetic.
//!
//! The `*_bits` functions work directly on [`BitSet`]s for a given ring and are
//! what the predicate and theorem layers use in their inner loops. The typed
//! wrappers ([`ElementSubset`], [`IdealHandle`]) carry the owning ring and
//! reject mixing sets from different rings.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitSet;
use crate::ring::{FiniteRing, Ring};

/// Largest order the exhaustive subset oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Right,
    Left,
    TwoSided,
}

impl IdealKind {
    pub fn absorbs_right(self) -> bool {
        matches!(self, IdealKind::Right | IdealKind::TwoSided)
    }

    pub fn absorbs_left(self) -> bool {
        matches!(self, IdealKind::Left | IdealKind::TwoSided)
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::Right => "right",
            IdealKind::Left => "left",
            IdealKind::TwoSided => "two-sided",
        })
    }
}

impl std::str::FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "right" => Ok(IdealKind::Right),
            "left" => Ok(IdealKind::Left),
            "two-sided" | "two" | "both" => Ok(IdealKind::TwoSided),
            other => Err(format!("unknown ideal kind `{other}`")),
        }
    }
}

/// Which side the colon quotient multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColonSide {
    /// `I:J = {x : Jx ⊆ I}`
    Right,
    /// `(I:J)* = {x : xJ ⊆ I}`
    Star,
}

/// First law a candidate ideal breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealViolation {
    #[error("zero is missing")]
    MissingZero,
    #[error("{a} + {b} = {sum} is not in the set")]
    NotClosedUnderAddition { a: usize, b: usize, sum: usize },
    #[error("-{a} = {neg} is not in the set")]
    NotClosedUnderNegation { a: usize, neg: usize },
    #[error("{a} * {r} = {product} is not in the set")]
    NotRightAbsorbing { a: usize, r: usize, product: usize },
    #[error("{r} * {a} = {product} is not in the set")]
    NotLeftAbsorbing { r: usize, a: usize, product: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("ideal kinds differ: {0} vs {1}")]
    KindMismatch(IdealKind, IdealKind),
    #[error("order {order} is too large for exhaustive subset search (max {max})")]
    OrderTooLarge { order: usize, max: usize },
    #[error("not a {kind} ideal: {violation}")]
    NotAnIdeal { kind: IdealKind, violation: IdealViolation },
    #[error("element index {0} out of range")]
    BadElement(usize),
}

// ---------------------------------------------------------------------------
// Bit-level primitives

/// Smallest additive subgroup containing `base` (assumed already a subgroup)
/// and every element of `gens`.
pub fn extend_subgroup_bits(ring: &FiniteRing, base: BitSet, gens: impl IntoIterator<Item = usize>) -> BitSet {
    let mut set = base;
    let mut members: Vec<usize> = set.to_vec();
    for g in gens {
        if set.contains(g) {
            continue;
        }
        // H + <g> is the union of the cosets H + k*g; the first k with k*g in
        // the set closes the cycle.
        let old = members.clone();
        let mut shift = g;
        while !set.contains(shift) {
            for &h in &old {
                let x = ring.add(h, shift);
                if set.insert(x) {
                    members.push(x);
                }
            }
            shift = ring.add(shift, g);
        }
    }
    set
}

/// Additive subgroup generated by `bits`.
pub fn closure_bits(ring: &FiniteRing, bits: &BitSet) -> BitSet {
    let zero = BitSet::from_indices(ring.order(), [ring.zero()]);
    extend_subgroup_bits(ring, zero, bits.iter())
}

/// The set of finite sums of products `ab`, `a ∈ a_set`, `b ∈ b_set`.
pub fn product_bits(ring: &FiniteRing, a_set: &BitSet, b_set: &BitSet) -> BitSet {
    let zero = ring.zero();
    let mut raw = BitSet::empty(ring.order());
    for a in a_set.iter().filter(|&a| a != zero) {
        for b in b_set.iter().filter(|&b| b != zero) {
            raw.insert(ring.mul(a, b));
        }
    }
    closure_bits(ring, &raw)
}

pub fn colon_bits(ring: &FiniteRing, target: &BitSet, by: &BitSet, side: ColonSide) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for x in ring.elements() {
        let ok = by.iter().all(|j| {
            let p = match side {
                ColonSide::Right => ring.mul(j, x),
                ColonSide::Star => ring.mul(x, j),
            };
            target.contains(p)
        });
        if ok {
            out.insert(x);
        }
    }
    out
}

/// Generators of the principal ideal of `a`: `{a} ∪ aR`, `{a} ∪ Ra` or
/// `{a} ∪ aR ∪ Ra ∪ RaR`.
pub fn principal_bits(ring: &FiniteRing, a: usize, kind: IdealKind) -> BitSet {
    let mut gens = BitSet::from_indices(ring.order(), [a]);
    for r in ring.elements() {
        if kind.absorbs_right() {
            gens.insert(ring.mul(a, r));
        }
        if kind.absorbs_left() {
            gens.insert(ring.mul(r, a));
        }
        if kind == IdealKind::TwoSided {
            let ra = ring.mul(r, a);
            for s in ring.elements() {
                gens.insert(ring.mul(ra, s));
            }
        }
    }
    closure_bits(ring, &gens)
}

/// `{ a r b : r ∈ R }`, without additive closure.
pub fn arb_bits(ring: &FiniteRing, a: usize, b: usize) -> BitSet {
    BitSet::from_indices(ring.order(), ring.elements().map(|r| ring.mul(ring.mul(a, r), b)))
}

pub fn check_ideal_bits(ring: &FiniteRing, bits: &BitSet, kind: IdealKind) -> Result<(), IdealViolation> {
    if !bits.contains(ring.zero()) {
        return Err(IdealViolation::MissingZero);
    }
    for a in bits.iter() {
        let neg = ring.neg(a);
        if !bits.contains(neg) {
            return Err(IdealViolation::NotClosedUnderNegation { a, neg });
        }
        for b in bits.iter() {
            let sum = ring.add(a, b);
            if !bits.contains(sum) {
                return Err(IdealViolation::NotClosedUnderAddition { a, b, sum });
            }
        }
    }
    for a in bits.iter() {
        for r in ring.elements() {
            if kind.absorbs_right() {
                let product = ring.mul(a, r);
                if !bits.contains(product) {
                    return Err(IdealViolation::NotRightAbsorbing { a, r, product });
                }
            }
            if kind.absorbs_left() {
                let product = ring.mul(r, a);
                if !bits.contains(product) {
                    return Err(IdealViolation::NotLeftAbsorbing { r, a, product });
                }
            }
        }
    }
    Ok(())
}

/// All ideals of `kind` as bit sets, in canonical order. Seeds with zero and
/// every principal ideal, then closes under pairwise sums.
pub fn enumerate_bits(ring: &FiniteRing, kind: IdealKind) -> Vec<BitSet> {
    let n = ring.order();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut list: Vec<BitSet> = Vec::new();
    let zero = BitSet::from_indices(n, [ring.zero()]);
    for cand in std::iter::once(zero).chain(ring.elements().map(|a| principal_bits(ring, a, kind))) {
        if seen.insert(cand.clone()) {
            list.push(cand);
        }
    }
    let mut next = 0;
    while next < list.len() {
        let x = list[next].clone();
        for j in 0..next {
            let y = &list[j];
            if x.is_subset(y) || y.is_subset(&x) {
                continue;
            }
            let sum = extend_subgroup_bits(ring, x.clone(), y.iter());
            if seen.insert(sum.clone()) {
                list.push(sum);
            }
        }
        next += 1;
    }
    list.sort_by(|a, b| a.canonical_cmp(b));
    list
}

// ---------------------------------------------------------------------------
// Typed wrappers

/// A set of elements of one specific ring.
#[derive(Clone)]
pub struct ElementSubset {
    ring: Ring,
    bits: BitSet,
}

impl ElementSubset {
    pub fn new(ring: &Ring, bits: BitSet) -> Self {
        assert_eq!(bits.len(), ring.order(), "bit set length must equal ring order");
        ElementSubset {
            ring: Arc::clone(ring),
            bits,
        }
    }

    pub fn from_indices(ring: &Ring, indices: impl IntoIterator<Item = usize>) -> Result<Self, IdealError> {
        let mut bits = BitSet::empty(ring.order());
        for i in indices {
            if i >= ring.order() {
                return Err(IdealError::BadElement(i));
            }
            bits.insert(i);
        }
        Ok(Self::new(ring, bits))
    }

    pub fn empty(ring: &Ring) -> Self {
        Self::new(ring, BitSet::empty(ring.order()))
    }

    pub fn whole(ring: &Ring) -> Self {
        Self::new(ring, BitSet::full(ring.order()))
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, BitSet::from_indices(ring.order(), [ring.zero()]))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn into_bits(self) -> BitSet {
        self.bits
    }

    pub fn contains(&self, a: usize) -> bool {
        self.bits.contains(a)
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1 && self.contains(self.ring.zero())
    }

    pub fn is_whole(&self) -> bool {
        self.bits.is_full()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    pub fn labels(&self) -> Vec<String> {
        self.bits.iter().map(|i| self.ring.label(i).to_string()).collect()
    }

    pub fn same_ring(&self, other: &ElementSubset) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring)
    }

    fn check_same(&self, other: &ElementSubset) -> Result<(), IdealError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(IdealError::RingMismatch)
        }
    }

    pub fn union(&self, other: &ElementSubset) -> Result<ElementSubset, IdealError> {
        self.check_same(other)?;
        Ok(Self::new(&self.ring, self.bits.union(&other.bits)))
    }

    pub fn intersection(&self, other: &ElementSubset) -> Result<ElementSubset, IdealError> {
        self.check_same(other)?;
        Ok(Self::new(&self.ring, self.bits.intersection(&other.bits)))
    }
}

impl PartialEq for ElementSubset {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.bits == other.bits
    }
}

impl Eq for ElementSubset {}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

/// A subset known to be an ideal of the given kind.
#[derive(Clone, PartialEq, Eq)]
pub struct IdealHandle {
    subset: ElementSubset,
    kind: IdealKind,
}

impl IdealHandle {
    /// Checks the ideal laws for `kind`.
    pub fn new(subset: ElementSubset, kind: IdealKind) -> Result<Self, IdealError> {
        check_ideal_bits(&subset.ring, &subset.bits, kind)
            .map_err(|violation| IdealError::NotAnIdeal { kind, violation })?;
        Ok(IdealHandle { subset, kind })
    }

    pub(crate) fn from_bits_unchecked(ring: &Ring, bits: BitSet, kind: IdealKind) -> Self {
        debug_assert!(check_ideal_bits(ring, &bits, kind).is_ok());
        IdealHandle {
            subset: ElementSubset::new(ring, bits),
            kind,
        }
    }

    pub fn zero(ring: &Ring, kind: IdealKind) -> Self {
        Self::from_bits_unchecked(ring, BitSet::from_indices(ring.order(), [ring.zero()]), kind)
    }

    pub fn whole(ring: &Ring, kind: IdealKind) -> Self {
        Self::from_bits_unchecked(ring, BitSet::full(ring.order()), kind)
    }

    pub fn subset(&self) -> &ElementSubset {
        &self.subset
    }

    pub fn bits(&self) -> &BitSet {
        &self.subset.bits
    }

    pub fn ring(&self) -> &Ring {
        &self.subset.ring
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    /// False for the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.subset.is_whole()
    }

    pub fn is_zero(&self) -> bool {
        self.subset.is_zero()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.subset.contains(a)
    }

    pub fn len(&self) -> usize {
        self.subset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> Vec<String> {
        self.subset.labels()
    }

    /// The same set viewed as an ideal of a weaker kind (a two-sided ideal is
    /// also a right ideal). Fails if the set does not satisfy `kind`.
    pub fn with_kind(&self, kind: IdealKind) -> Result<Self, IdealError> {
        Self::new(self.subset.clone(), kind)
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{} ideal {}",
            if self.is_proper() { "" } else { "improper " },
            self.kind,
            self.subset
        )
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.subset, f)
    }
}

pub fn additive_closure(s: &ElementSubset) -> ElementSubset {
    ElementSubset::new(&s.ring, closure_bits(&s.ring, &s.bits))
}

pub fn principal(ring: &Ring, a: usize, kind: IdealKind) -> Result<IdealHandle, IdealError> {
    if a >= ring.order() {
        return Err(IdealError::BadElement(a));
    }
    Ok(IdealHandle::from_bits_unchecked(
        ring,
        principal_bits(ring, a, kind),
        kind,
    ))
}

pub fn is_ideal(s: &ElementSubset, kind: IdealKind) -> Result<(), IdealViolation> {
    check_ideal_bits(&s.ring, &s.bits, kind)
}

/// Every ideal of `kind`, including `{0}` and the whole ring, in canonical
/// order (size, then bit pattern).
pub fn enumerate_ideals(ring: &Ring, kind: IdealKind) -> Vec<IdealHandle> {
    enumerate_bits(ring, kind)
        .into_iter()
        .map(|b| IdealHandle::from_bits_unchecked(ring, b, kind))
        .collect()
}

/// Exhaustive scan over all `2^n` subsets. Independent of
/// [`enumerate_ideals`]; used to certify it.
pub fn enumerate_ideals_oracle(ring: &Ring, kind: IdealKind) -> Result<Vec<IdealHandle>, IdealError> {
    let n = ring.order();
    if n > ORACLE_MAX_ORDER {
        return Err(IdealError::OrderTooLarge {
            order: n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let mut out: Vec<BitSet> = (0u64..1 << n)
        .map(|mask| BitSet::from_mask(n, mask))
        .filter(|bits| check_ideal_bits(ring, bits, kind).is_ok())
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out
        .into_iter()
        .map(|b| IdealHandle::from_bits_unchecked(ring, b, kind))
        .collect())
}

/// Additive closure of all pairwise products. Operands need not be ideals.
pub fn ideal_product(a: &ElementSubset, b: &ElementSubset) -> Result<ElementSubset, IdealError> {
    a.check_same(b)?;
    Ok(ElementSubset::new(&a.ring, product_bits(&a.ring, &a.bits, &b.bits)))
}

pub fn ideal_sum(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle, IdealError> {
    a.subset.check_same(&b.subset)?;
    if a.kind != b.kind {
        return Err(IdealError::KindMismatch(a.kind, b.kind));
    }
    let bits = extend_subgroup_bits(a.ring(), a.bits().clone(), b.bits().iter());
    Ok(IdealHandle::from_bits_unchecked(a.ring(), bits, a.kind))
}

pub fn ideal_intersection(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle, IdealError> {
    a.subset.check_same(&b.subset)?;
    if a.kind != b.kind {
        return Err(IdealError::KindMismatch(a.kind, b.kind));
    }
    Ok(IdealHandle::from_bits_unchecked(
        a.ring(),
        a.bits().intersection(b.bits()),
        a.kind,
    ))
}

pub fn colon(i: &ElementSubset, j: &ElementSubset, side: ColonSide) -> Result<ElementSubset, IdealError> {
    i.check_same(j)?;
    Ok(ElementSubset::new(&i.ring, colon_bits(&i.ring, &i.bits, &j.bits, side)))
}

pub fn arb_set(ring: &Ring, a: usize, b: usize) -> ElementSubset {
    ElementSubset::new(ring, arb_bits(ring, a, b))
}
