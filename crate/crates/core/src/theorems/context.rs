use std::sync::{Arc, OnceLock};

use crate::bits::BitSet;
use crate::constructions::{quotient, QuotientDescriptor};
use crate::corpus::CorpusRing;
use crate::homs::{enumerate_epimorphisms, RingHom, EPI_MAX_ORDER};
use crate::ideal::{arb_bits, principal_bits, product_bits, IdealKind};
use crate::predicates::{violating_pair, Flavor, Universe};
use crate::ring::Ring;

use super::Mutation;

/// Decides primeness flavors, optionally with a deliberately broken rule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Judge {
    pub mutation: Option<Mutation>,
}

impl Judge {
    fn effective(self, flavor: Flavor) -> Flavor {
        match (self.mutation, flavor) {
            (Some(Mutation::AlmostPrimeIgnoresSquare), Flavor::AlmostPrime) => Flavor::Prime,
            (Some(Mutation::WeaklyPrimeIgnoresNonzero), Flavor::WeaklyPrime) => Flavor::Prime,
            _ => flavor,
        }
    }

    pub fn witness(self, universe: &Universe, p: &BitSet, flavor: Flavor) -> Option<(usize, usize)> {
        violating_pair(universe, p, self.effective(flavor))
    }

    pub fn holds(self, universe: &Universe, p: &BitSet, flavor: Flavor) -> bool {
        self.witness(universe, p, flavor).is_none()
    }
}

/// Right and two-sided ideal lattices of one ring.
pub(crate) struct Lattices {
    pub ring: Ring,
    pub right: Universe,
    pub two: Universe,
    pub judge: Judge,
    almost_right: OnceLock<Vec<bool>>,
}

impl Lattices {
    pub fn new(ring: &Ring, judge: Judge) -> Self {
        Lattices {
            ring: Arc::clone(ring),
            right: Universe::new(ring, IdealKind::Right),
            two: Universe::new(ring, IdealKind::TwoSided),
            judge,
            almost_right: OnceLock::new(),
        }
    }

    /// Almost primeness of each right ideal, by universe index; `false` for `R`.
    pub fn almost_right_flags(&self) -> &[bool] {
        self.almost_right.get_or_init(|| {
            self.right
                .ideals()
                .iter()
                .map(|p| p.is_proper() && self.judge.holds(&self.right, p.bits(), Flavor::AlmostPrime))
                .collect()
        })
    }

    pub fn right_index(&self, bits: &BitSet) -> Option<usize> {
        self.right.index_of(bits)
    }

    pub fn holds_right(&self, bits: &BitSet, flavor: Flavor) -> bool {
        self.judge.holds(&self.right, bits, flavor)
    }

    pub fn holds_two(&self, bits: &BitSet, flavor: Flavor) -> bool {
        self.judge.holds(&self.two, bits, flavor)
    }

    /// Every proper right ideal is almost prime.
    pub fn fully_almost_prime(&self) -> bool {
        self.right
            .ideals()
            .iter()
            .zip(self.almost_right_flags())
            .all(|(p, &a)| !p.is_proper() || a)
    }

    pub fn first_non_almost_right(&self) -> Option<usize> {
        self.right
            .ideals()
            .iter()
            .zip(self.almost_right_flags())
            .position(|(p, &a)| p.is_proper() && !a)
    }
}

pub(crate) struct QuotientCtx {
    pub desc: QuotientDescriptor,
    pub lat: Lattices,
}

pub(crate) struct Epi {
    pub hom: RingHom,
    pub kernel: BitSet,
    pub target: Arc<QuotientCtx>,
    pub label: String,
}

pub(crate) struct Principals {
    pub right: Vec<BitSet>,
    pub left: Vec<BitSet>,
    pub two: Vec<BitSet>,
    /// `(a⟩(b⟩`, row-major.
    pub right_products: Vec<BitSet>,
    /// `aRb` as a raw set, row-major.
    pub arb: Vec<BitSet>,
}

/// Per-ring caches shared by every checker in one run.
pub(crate) struct RingContext<'a> {
    pub entry: &'a CorpusRing,
    pub lat: Lattices,
    quotients: Vec<OnceLock<Arc<QuotientCtx>>>,
    epis: OnceLock<Vec<Epi>>,
    principals: OnceLock<Principals>,
}

impl<'a> RingContext<'a> {
    pub fn new(entry: &'a CorpusRing, judge: Judge) -> Self {
        let lat = Lattices::new(&entry.ring, judge);
        let quotients = (0..lat.two.len()).map(|_| OnceLock::new()).collect();
        RingContext {
            entry,
            lat,
            quotients,
            epis: OnceLock::new(),
            principals: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.lat.ring
    }

    pub fn name(&self) -> &str {
        self.lat.ring.name()
    }

    pub fn judge(&self) -> Judge {
        self.lat.judge
    }

    pub fn has_identity(&self) -> bool {
        self.ring().identity().is_some()
    }

    /// `R/I` for the two-sided ideal at index `i`.
    pub fn quotient(&self, i: usize) -> Arc<QuotientCtx> {
        Arc::clone(self.quotients[i].get_or_init(|| {
            let desc = quotient(self.ring(), &self.lat.two.ideals()[i]).expect("universe members are two-sided");
            let lat = Lattices::new(&desc.ring, self.judge());
            Arc::new(QuotientCtx { desc, lat })
        }))
    }

    /// Canonical projections onto every proper quotient, then, for small
    /// rings, every other epimorphism onto those quotients.
    pub fn epis(&self) -> &[Epi] {
        self.epis.get_or_init(|| {
            let mut out = Vec::new();
            let proper: Vec<usize> = self.lat.two.proper().map(|(i, _)| i).collect();
            for &i in &proper {
                let q = self.quotient(i);
                out.push(Epi {
                    hom: q.desc.projection.clone(),
                    kernel: q.desc.modulus.bits().clone(),
                    label: format!("projection onto {}", q.desc.ring.name()),
                    target: q,
                });
            }
            if self.ring().order() <= EPI_MAX_ORDER {
                for &i in &proper {
                    let q = self.quotient(i);
                    let epis = enumerate_epimorphisms(self.ring(), &q.desc.ring).expect("order is within bound");
                    for (k, hom) in epis.into_iter().enumerate() {
                        if hom.map() == q.desc.projection.map() {
                            continue;
                        }
                        out.push(Epi {
                            kernel: hom.kernel_bits(),
                            label: format!("epimorphism #{k} onto {} (map {:?})", q.desc.ring.name(), hom.map()),
                            hom,
                            target: Arc::clone(&q),
                        });
                    }
                }
            }
            out
        })
    }

    pub fn principals(&self) -> &Principals {
        self.principals.get_or_init(|| {
            let r = self.ring();
            let n = r.order();
            let right: Vec<BitSet> = r.elements().map(|a| principal_bits(r, a, IdealKind::Right)).collect();
            let left = r.elements().map(|a| principal_bits(r, a, IdealKind::Left)).collect();
            let two = r
                .elements()
                .map(|a| principal_bits(r, a, IdealKind::TwoSided))
                .collect();
            let mut right_products = Vec::with_capacity(n * n);
            let mut arb = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    right_products.push(product_bits(r, &right[a], &right[b]));
                    arb.push(arb_bits(r, a, b));
                }
            }
            Principals {
                right,
                left,
                two,
                right_products,
                arb,
            }
        })
    }
}
