//! Ring homomorphisms between finite rings.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bits::BitSet;
use crate::constructions::QuotientDescriptor;
use crate::ideal::{extend_subgroup_bits, ElementSubset, IdealHandle, IdealKind};
use crate::ring::{FiniteRing, Ring};

/// Largest domain order for [`enumerate_epimorphisms`].
pub const EPI_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has {got} entries, domain has order {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("map sends {a} to {image}, outside the codomain")]
    OutOfRange { a: usize, image: usize },
    #[error("not additive: f({a} + {b}) != f({a}) + f({b})")]
    NotAdditive { a: usize, b: usize },
    #[error("not multiplicative: f({a} * {b}) != f({a}) * f({b})")]
    NotMultiplicative { a: usize, b: usize },
    #[error("map is not surjective")]
    NotSurjective,
    #[error("operand belongs to a different ring")]
    RingMismatch,
    #[error("epimorphism enumeration is limited to domain order {max}, got {order}")]
    OrderTooLarge { order: usize, max: usize },
}

/// A map `domain → codomain` preserving both operations.
#[derive(Clone)]
pub struct RingHom {
    domain: Ring,
    codomain: Ring,
    map: Vec<usize>,
    surjective: bool,
}

impl RingHom {
    pub(crate) fn from_parts_unchecked(domain: &Ring, codomain: &Ring, map: Vec<usize>) -> Self {
        let surjective = image_is_full(codomain, &map);
        let hom = RingHom {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            map,
            surjective,
        };
        debug_assert!(hom.check_laws().is_ok());
        hom
    }

    fn check_laws(&self) -> Result<(), HomError> {
        let (d, c, f) = (&self.domain, &self.codomain, &self.map);
        for a in d.elements() {
            for b in d.elements() {
                if f[d.add(a, b)] != c.add(f[a], f[b]) {
                    return Err(HomError::NotAdditive { a, b });
                }
            }
        }
        for a in d.elements() {
            for b in d.elements() {
                if f[d.mul(a, b)] != c.mul(f[a], f[b]) {
                    return Err(HomError::NotMultiplicative { a, b });
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Ring {
        &self.domain
    }

    pub fn codomain(&self) -> &Ring {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn kernel_bits(&self) -> BitSet {
        let z = self.codomain.zero();
        BitSet::from_indices(
            self.domain.order(),
            self.domain.elements().filter(|&a| self.map[a] == z),
        )
    }

    pub fn kernel(&self) -> IdealHandle {
        IdealHandle::from_bits_unchecked(&self.domain, self.kernel_bits(), IdealKind::TwoSided)
    }

    pub fn image_bits(&self, bits: &BitSet) -> BitSet {
        BitSet::from_indices(self.codomain.order(), bits.iter().map(|a| self.map[a]))
    }

    pub fn preimage_bits(&self, bits: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.domain.order(),
            self.domain.elements().filter(|&a| bits.contains(self.map[a])),
        )
    }

    pub fn image(&self) -> ElementSubset {
        ElementSubset::new(&self.codomain, self.image_bits(&BitSet::full(self.domain.order())))
    }

    /// `f(P)`; an ideal of the same kind because `f` is onto.
    pub fn image_of_ideal(&self, p: &IdealHandle) -> Result<IdealHandle, HomError> {
        if !Arc::ptr_eq(p.ring(), &self.domain) {
            return Err(HomError::RingMismatch);
        }
        if !self.surjective {
            return Err(HomError::NotSurjective);
        }
        Ok(IdealHandle::from_bits_unchecked(
            &self.codomain,
            self.image_bits(p.bits()),
            p.kind(),
        ))
    }

    /// `f⁻¹(Q)`, an ideal of the same kind containing the kernel.
    pub fn preimage_of_ideal(&self, q: &IdealHandle) -> Result<IdealHandle, HomError> {
        if !Arc::ptr_eq(q.ring(), &self.codomain) {
            return Err(HomError::RingMismatch);
        }
        Ok(IdealHandle::from_bits_unchecked(
            &self.domain,
            self.preimage_bits(q.bits()),
            q.kind(),
        ))
    }
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {:?}", self.domain.name(), self.codomain.name(), self.map)
    }
}

fn image_is_full(codomain: &FiniteRing, map: &[usize]) -> bool {
    let mut hit = BitSet::empty(codomain.order());
    for &x in map {
        hit.insert(x);
    }
    hit.is_full()
}

/// Checks totality, range and both preservation laws exhaustively.
pub fn validate_hom(map: Vec<usize>, domain: &Ring, codomain: &Ring) -> Result<RingHom, HomError> {
    if map.len() != domain.order() {
        return Err(HomError::BadLength {
            got: map.len(),
            expected: domain.order(),
        });
    }
    if let Some((a, &image)) = map.iter().enumerate().find(|(_, &x)| x >= codomain.order()) {
        return Err(HomError::OutOfRange { a, image });
    }
    let surjective = image_is_full(codomain, &map);
    let hom = RingHom {
        domain: Arc::clone(domain),
        codomain: Arc::clone(codomain),
        map,
        surjective,
    };
    hom.check_laws()?;
    Ok(hom)
}

pub fn projection_hom(q: &QuotientDescriptor) -> RingHom {
    q.projection.clone()
}

/// Greedy additive generating set, in index order.
fn additive_generators(ring: &FiniteRing) -> Vec<usize> {
    let mut span = BitSet::from_indices(ring.order(), [ring.zero()]);
    let mut gens = Vec::new();
    for a in ring.elements() {
        if !span.contains(a) {
            gens.push(a);
            span = extend_subgroup_bits(ring, span, [a]);
        }
    }
    gens
}

/// Every surjective homomorphism `domain → codomain`, sorted by map.
///
/// A candidate is fixed by the images of an additive generating set; images
/// must have additive order dividing the generator's. Each candidate is
/// extended additively and rejected on the first inconsistency.
pub fn enumerate_epimorphisms(domain: &Ring, codomain: &Ring) -> Result<Vec<RingHom>, HomError> {
    let n = domain.order();
    if n > EPI_MAX_ORDER {
        return Err(HomError::OrderTooLarge {
            order: n,
            max: EPI_MAX_ORDER,
        });
    }
    if codomain.order() > n {
        return Ok(Vec::new());
    }
    let gens = additive_generators(domain);
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let ord = domain.additive_order(g);
            codomain
                .elements()
                .filter(|&s| ord.is_multiple_of(codomain.additive_order(s)))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut pick = vec![0usize; gens.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        let images: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend_additively(domain, codomain, &gens, &images) {
            if let Ok(hom) = validate_hom(map, domain, codomain) {
                if hom.is_surjective() {
                    out.push(hom);
                }
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == pick.len() {
                out.sort_by(|a, b| a.map.cmp(&b.map));
                return Ok(out);
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn extend_additively(
    domain: &FiniteRing,
    codomain: &FiniteRing,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; domain.order()];
    map[domain.zero()] = codomain.zero();
    let mut queue = vec![domain.zero()];
    while let Some(x) = queue.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = domain.add(x, g);
            let fy = codomain.add(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}
