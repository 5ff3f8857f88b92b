use crate::bits::BitSet;
use crate::ideal::{colon_bits, ColonSide};
use crate::predicates::{element_criteria_bits, ideal_between_zero, Flavor, Universe};
use crate::ring::FiniteRing;

use super::context::{Epi, Judge, Lattices, RingContext};
use super::{RingOutcome, TheoremId, Violation};

pub(crate) fn run(id: TheoremId, ctx: &RingContext<'_>) -> RingOutcome {
    match id {
        TheoremId::DefChain => def_chain(ctx),
        TheoremId::PropRightVsIdeal => prop_right_vs_ideal(ctx),
        TheoremId::PropUnion => prop_union(ctx),
        TheoremId::ThmEquiv5 => thm_equiv_5(ctx),
        TheoremId::ThmColonCollapse => thm_colon_collapse(ctx),
        TheoremId::ThmP2Zero => thm_p2zero(ctx),
        TheoremId::LemBrauer => lem_brauer(ctx),
        TheoremId::CorMinimal => cor_minimal(ctx),
        TheoremId::ThmQuotientWeakly => thm_quotient_weakly(ctx),
        TheoremId::ThmEpiImage => thm_epi_image(ctx),
        TheoremId::ThmEpiPreimage => thm_epi_preimage(ctx),
        TheoremId::ThmQuotientTransfer => thm_quotient_transfer(ctx),
        TheoremId::FullyRingThms => fully_ring_thms(ctx),
        TheoremId::CommThm11 => comm_thm_1_1(ctx),
        TheoremId::CommThm12 => comm_thm_1_2(ctx),
        TheoremId::AsWeaklySquareZero => as_weakly_square_zero(ctx),
        TheoremId::AsProductWeakly => as_product_weakly(ctx),
        TheoremId::HiranoWeaklyEquiv => hirano_weakly_equiv(ctx),
        TheoremId::GroenewaldColon => groenewald_colon(ctx),
    }
}

fn is_zero_set(ring: &FiniteRing, bits: &BitSet) -> bool {
    bits.iter().all(|x| x == ring.zero())
}

/// Adds the first pair `A, B` of `universe` violating `flavor` for `p`.
fn with_witness(v: Violation, judge: Judge, universe: &Universe, p: &BitSet, flavor: Flavor) -> Violation {
    match judge.witness(universe, p, flavor) {
        Some((i, j)) => {
            let ring = universe.ring();
            v.set("A", ring, universe.ideals()[i].bits())
                .set("B", ring, universe.ideals()[j].bits())
                .set("AB", ring, universe.product(i, j))
        }
        None => v,
    }
}

fn minimal(universe: &Universe, i: usize) -> bool {
    let p = universe.ideals()[i].bits();
    !universe.ideals()[i].is_zero() && ideal_between_zero(universe, p).is_none()
}

fn def_chain(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let lat = &ctx.lat;
    let ring = ctx.ring();
    let almost = lat.almost_right_flags();
    for (i, p) in lat.right.proper() {
        out.instances += 1;
        let bits = p.bits();
        let prime = lat.holds_right(bits, Flavor::Prime);
        let weakly = lat.holds_right(bits, Flavor::WeaklyPrime);
        let idem = lat.right.square_of(i) == bits;
        let failure = if prime && !weakly {
            Some(("prime right ideal is not weakly prime", Flavor::WeaklyPrime))
        } else if weakly && !almost[i] {
            Some(("weakly prime right ideal is not almost prime", Flavor::AlmostPrime))
        } else if idem && !almost[i] {
            Some(("idempotent right ideal is not almost prime", Flavor::AlmostPrime))
        } else {
            None
        };
        if let Some((cond, flavor)) = failure {
            let v = Violation::new(TheoremId::DefChain, ctx.name(), cond)
                .set("P", ring, bits)
                .set("P^2", ring, lat.right.square_of(i))
                .fact("P is prime", prime)
                .fact("P is weakly prime", weakly)
                .fact("P is idempotent", idem)
                .fact("P is almost prime", almost[i]);
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.right, bits, flavor));
        }
    }
    out
}

fn prop_right_vs_ideal(ctx: &RingContext<'_>) -> RingOutcome {
    if !ctx.has_identity() {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let lat = &ctx.lat;
    for (_, p) in lat.two.proper() {
        out.instances += 1;
        let right = lat.holds_right(p.bits(), Flavor::AlmostPrime);
        let two = lat.holds_two(p.bits(), Flavor::AlmostPrime);
        if right != two {
            let cond = if two {
                "almost prime as an ideal but not as a right ideal"
            } else {
                "almost prime as a right ideal but not as an ideal"
            };
            let universe = if right { &lat.two } else { &lat.right };
            let v = Violation::new(TheoremId::PropRightVsIdeal, ctx.name(), cond)
                .set("P", ctx.ring(), p.bits())
                .fact("P almost prime over right ideals", right)
                .fact("P almost prime over two-sided ideals", two);
            out.violations
                .push(with_witness(v, ctx.judge(), universe, p.bits(), Flavor::AlmostPrime));
        }
    }
    out
}

fn prop_union(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let ideals = ctx.lat.right.ideals();
    for p in ideals {
        for (ai, a) in ideals.iter().enumerate() {
            for b in &ideals[ai..] {
                let union = a.bits().union(b.bits());
                if !p.bits().is_subset(&union) {
                    continue;
                }
                out.instances += 1;
                if !p.bits().is_subset(a.bits()) && !p.bits().is_subset(b.bits()) {
                    let r = ctx.ring();
                    out.violations.push(
                        Violation::new(TheoremId::PropUnion, ctx.name(), "P lies in A u B but in neither")
                            .set("P", r, p.bits())
                            .set("A", r, a.bits())
                            .set("B", r, b.bits())
                            .fact("P in A u B", true)
                            .fact("P in A or P in B", false),
                    );
                }
            }
        }
    }
    out
}

/// Elements `(a, b)` such that `set(a, b) ⊆ P`, `set(a, b) ⊄ P²` and
/// `a, b ∉ P`.
fn element_pair_failure(n: usize, sets: &[BitSet], p: &BitSet, p2: &BitSet) -> Option<(usize, usize)> {
    for a in (0..n).filter(|&a| !p.contains(a)) {
        for b in (0..n).filter(|&b| !p.contains(b)) {
            let s = &sets[a * n + b];
            if s.is_subset(p) && !s.is_subset(p2) {
                return Some((a, b));
            }
        }
    }
    None
}

fn thm_equiv_5(ctx: &RingContext<'_>) -> RingOutcome {
    if !ctx.has_identity() {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let n = ring.order();
    let lat = &ctx.lat;
    let pr = ctx.principals();
    for (i, p) in lat.two.proper() {
        out.instances += 1;
        let bits = p.bits();
        let p2 = lat.two.square_of(i);
        let c1 = lat.holds_two(bits, Flavor::AlmostPrime);
        let w2 = element_pair_failure(n, &pr.right_products, bits, p2);
        let w3 = element_pair_failure(n, &pr.arb, bits, p2);
        let mut w4 = None;
        let mut w5 = None;
        for a in (0..n).filter(|&a| !bits.contains(a)) {
            let by = &pr.two[a];
            let cp = colon_bits(ring, bits, by, ColonSide::Right);
            let cp2 = colon_bits(ring, p2, by, ColonSide::Right);
            let sp = colon_bits(ring, bits, by, ColonSide::Star);
            let sp2 = colon_bits(ring, p2, by, ColonSide::Star);
            if w4.is_none() && (cp != bits.union(&cp2) || sp != bits.union(&sp2)) {
                w4 = Some(a);
            }
            if w5.is_none() && !((cp == *bits || cp == cp2) && (sp == *bits || sp == sp2)) {
                w5 = Some(a);
            }
        }
        let flags = [c1, w2.is_none(), w3.is_none(), w4.is_none(), w5.is_none()];
        if flags.iter().any(|&f| f != flags[0]) {
            let mut v = Violation::new(TheoremId::ThmEquiv5, ctx.name(), "the five conditions disagree")
                .set("P", ring, bits)
                .set("P^2", ring, p2)
                .fact("(1) P almost prime over two-sided ideals", flags[0])
                .fact("(2) (a>(b> in P, not in P^2 forces a or b in P", flags[1])
                .fact("(3) aRb in P, not in P^2 forces a or b in P", flags[2])
                .fact("(4) P:<a> = P u (P^2:<a>) and starred form, for a outside P", flags[3])
                .fact("(5) P:<a> is P or P^2:<a>, and starred form, for a outside P", flags[4]);
            if let Some((a, b)) = w2 {
                v = v.set(
                    format!("(a>(b> with a={}, b={}", ring.label(a), ring.label(b)),
                    ring,
                    &pr.right_products[a * n + b],
                );
            }
            if let Some((a, b)) = w3 {
                v = v.set(
                    format!("aRb with a={}, b={}", ring.label(a), ring.label(b)),
                    ring,
                    &pr.arb[a * n + b],
                );
            }
            for a in [w4, w5].into_iter().flatten() {
                v = v.set(format!("<a> with a={}", ring.label(a)), ring, &pr.two[a]);
            }
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.two, bits, Flavor::AlmostPrime));
        }
    }
    out
}

fn thm_colon_collapse(ctx: &RingContext<'_>) -> RingOutcome {
    if !ctx.has_identity() {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    let almost = lat.almost_right_flags();
    for (i, p) in lat.right.proper() {
        let bits = p.bits();
        let p2 = lat.right.square_of(i);
        let col = colon_bits(ring, p2, bits, ColonSide::Right);
        if !col.is_subset(bits) {
            continue;
        }
        out.instances += 1;
        let prime = lat.holds_right(bits, Flavor::Prime);
        if prime != almost[i] {
            let v = Violation::new(
                TheoremId::ThmColonCollapse,
                ctx.name(),
                "(P^2:P) lies in P but almost prime and prime differ",
            )
            .set("P", ring, bits)
            .set("P^2", ring, p2)
            .set("(P^2:P)", ring, &col)
            .fact("P is prime", prime)
            .fact("P is almost prime", almost[i]);
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.right, bits, Flavor::Prime));
        }
    }
    out
}

fn thm_p2zero(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    let almost = lat.almost_right_flags();
    for (i, p) in lat.right.proper() {
        if !is_zero_set(ring, lat.right.square_of(i)) {
            continue;
        }
        out.instances += 1;
        let weakly = lat.holds_right(p.bits(), Flavor::WeaklyPrime);
        if weakly != almost[i] {
            let v = Violation::new(
                TheoremId::ThmP2Zero,
                ctx.name(),
                "P^2 = 0 but weakly prime and almost prime differ",
            )
            .set("P", ring, p.bits())
            .fact("P^2 = 0", true)
            .fact("P is weakly prime", weakly)
            .fact("P is almost prime", almost[i]);
            let flavor = if weakly {
                Flavor::AlmostPrime
            } else {
                Flavor::WeaklyPrime
            };
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.right, p.bits(), flavor));
        }
    }
    out
}

fn lem_brauer(ctx: &RingContext<'_>) -> RingOutcome {
    if !ctx.has_identity() {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    let pr = ctx.principals();
    for (i, p) in lat.right.ideals().iter().enumerate() {
        if !minimal(&lat.right, i) {
            continue;
        }
        out.instances += 1;
        let square_zero = is_zero_set(ring, lat.right.square_of(i));
        let generated = p
            .bits()
            .iter()
            .any(|e| ring.is_idempotent_element(e) && pr.right[e] == *p.bits());
        if !square_zero && !generated {
            out.violations.push(
                Violation::new(
                    TheoremId::LemBrauer,
                    ctx.name(),
                    "minimal right ideal with nonzero square and no idempotent generator",
                )
                .set("P", ring, p.bits())
                .set("P^2", ring, lat.right.square_of(i))
                .fact("P^2 = 0", false)
                .fact("P = eR for an idempotent e", false),
            );
        }
    }
    out
}

fn cor_minimal(ctx: &RingContext<'_>) -> RingOutcome {
    if !ctx.has_identity() {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    let almost = lat.almost_right_flags();
    for (i, p) in lat.right.proper() {
        if !minimal(&lat.right, i) {
            continue;
        }
        out.instances += 1;
        let idem = lat.right.square_of(i) == p.bits();
        let weakly = lat.holds_right(p.bits(), Flavor::WeaklyPrime);
        if almost[i] && !idem && !weakly {
            let v = Violation::new(
                TheoremId::CorMinimal,
                ctx.name(),
                "minimal, almost prime and not idempotent, yet not weakly prime",
            )
            .set("P", ring, p.bits())
            .set("P^2", ring, lat.right.square_of(i))
            .fact("P is almost prime", true)
            .fact("P is idempotent", false)
            .fact("P is weakly prime", false);
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.right, p.bits(), Flavor::WeaklyPrime));
        }
    }
    out
}

fn thm_quotient_weakly(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    for (i, p) in lat.two.proper() {
        out.instances += 1;
        let p2 = lat.two.square_of(i);
        let k = lat.two.index_of(p2).expect("P^2 is a two-sided ideal");
        let q = ctx.quotient(k);
        let pbar = q.desc.image_bits(p.bits());
        let lhs = lat.holds_right(p.bits(), Flavor::AlmostPrime);
        let rhs = q.lat.holds_right(&pbar, Flavor::WeaklyPrime);
        if lhs != rhs {
            let cond = if lhs {
                "P almost prime but P/P^2 not weakly prime in R/P^2"
            } else {
                "P/P^2 weakly prime in R/P^2 but P not almost prime"
            };
            let mut v = Violation::new(TheoremId::ThmQuotientWeakly, ctx.name(), cond)
                .set("P", ring, p.bits())
                .set("P^2", ring, p2)
                .set("P/P^2", &q.desc.ring, &pbar)
                .fact("P almost prime in R", lhs)
                .fact("P/P^2 weakly prime in R/P^2", rhs);
            v = if lhs {
                with_witness(v, ctx.judge(), &q.lat.right, &pbar, Flavor::WeaklyPrime)
            } else {
                with_witness(v, ctx.judge(), &lat.right, p.bits(), Flavor::AlmostPrime)
            };
            out.violations.push(v);
        }
    }
    out
}

fn epi_violation(id: TheoremId, ctx: &RingContext<'_>, epi: &Epi, cond: &str) -> Violation {
    Violation::new(id, ctx.name(), format!("{cond} [{}]", epi.label)).set("ker f", ctx.ring(), &epi.kernel)
}

fn target_index(t: &Lattices, bits: &BitSet) -> usize {
    t.right_index(bits)
        .expect("images and preimages of right ideals under epimorphisms are right ideals")
}

fn thm_epi_image(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let lat = &ctx.lat;
    let almost = lat.almost_right_flags();
    for epi in ctx.epis() {
        let t = &epi.target.lat;
        let t_almost = t.almost_right_flags();
        for (i, p) in lat.right.proper() {
            if !epi.kernel.is_subset(p.bits()) {
                continue;
            }
            out.instances += 1;
            let fp = epi.hom.image_bits(p.bits());
            let j = target_index(t, &fp);
            if almost[i] && !t_almost[j] {
                let v = epi_violation(
                    TheoremId::ThmEpiImage,
                    ctx,
                    epi,
                    "P almost prime, ker f in P, f(P) not almost prime",
                )
                .set("P", ctx.ring(), p.bits())
                .set("f(P)", &t.ring, &fp)
                .fact("P almost prime", true)
                .fact("f(P) almost prime", false);
                out.violations
                    .push(with_witness(v, ctx.judge(), &t.right, &fp, Flavor::AlmostPrime));
            }
        }
        for (j, b) in t.right.proper() {
            out.instances += 1;
            let pre = epi.hom.preimage_bits(b.bits());
            let i = target_index(lat, &pre);
            if almost[i] && !t_almost[j] {
                let v = epi_violation(
                    TheoremId::ThmEpiImage,
                    ctx,
                    epi,
                    "f^-1(B) almost prime but B not almost prime",
                )
                .set("B", &t.ring, b.bits())
                .set("f^-1(B)", ctx.ring(), &pre)
                .fact("f^-1(B) almost prime", true)
                .fact("B almost prime", false);
                out.violations
                    .push(with_witness(v, ctx.judge(), &t.right, b.bits(), Flavor::AlmostPrime));
            }
        }
    }
    out
}

fn thm_epi_preimage(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let lat = &ctx.lat;
    let almost = lat.almost_right_flags();
    for epi in ctx.epis() {
        let t = &epi.target.lat;
        let t_almost = t.almost_right_flags();
        for (i, p) in lat.right.proper() {
            if !epi.kernel.is_subset(lat.right.square_of(i)) {
                continue;
            }
            out.instances += 1;
            let fp = epi.hom.image_bits(p.bits());
            let j = target_index(t, &fp);
            if t_almost[j] && !almost[i] {
                let v = epi_violation(
                    TheoremId::ThmEpiPreimage,
                    ctx,
                    epi,
                    "ker f in P^2, f(P) almost prime, P not almost prime",
                )
                .set("P", ctx.ring(), p.bits())
                .set("P^2", ctx.ring(), lat.right.square_of(i))
                .set("f(P)", &t.ring, &fp)
                .fact("f(P) almost prime", true)
                .fact("P almost prime", false);
                out.violations
                    .push(with_witness(v, ctx.judge(), &lat.right, p.bits(), Flavor::AlmostPrime));
            }
        }
        for (j, b) in t.right.proper() {
            let pre = epi.hom.preimage_bits(b.bits());
            let i = target_index(lat, &pre);
            if !epi.kernel.is_subset(lat.right.square_of(i)) {
                continue;
            }
            out.instances += 1;
            if t_almost[j] && !almost[i] {
                let v = epi_violation(
                    TheoremId::ThmEpiPreimage,
                    ctx,
                    epi,
                    "B almost prime, ker f in f^-1(B)^2, f^-1(B) not almost prime",
                )
                .set("B", &t.ring, b.bits())
                .set("f^-1(B)", ctx.ring(), &pre)
                .fact("B almost prime", true)
                .fact("f^-1(B) almost prime", false);
                out.violations
                    .push(with_witness(v, ctx.judge(), &lat.right, &pre, Flavor::AlmostPrime));
            }
        }
    }
    out
}

fn thm_quotient_transfer(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    let almost = lat.almost_right_flags();
    let mut converse: Option<(usize, usize)> = None;
    for (k, ideal) in lat.two.proper() {
        let q = ctx.quotient(k);
        let q_almost = q.lat.almost_right_flags();
        for (i, p) in lat.right.proper() {
            if !ideal.bits().is_subset(p.bits()) {
                continue;
            }
            out.instances += 1;
            let pbar = q.desc.image_bits(p.bits());
            let j = target_index(&q.lat, &pbar);
            if almost[i] && !q_almost[j] {
                let v = Violation::new(
                    TheoremId::ThmQuotientTransfer,
                    ctx.name(),
                    "P almost prime but P/I not almost prime",
                )
                .set("I", ring, ideal.bits())
                .set("P", ring, p.bits())
                .set("P/I", &q.desc.ring, &pbar)
                .fact("P almost prime in R", true)
                .fact("P/I almost prime in R/I", false);
                out.violations
                    .push(with_witness(v, ctx.judge(), &q.lat.right, &pbar, Flavor::AlmostPrime));
            }
            if !almost[i] && q_almost[j] {
                let better = converse.is_none_or(|(ck, ci)| {
                    lat.two.ideals()[ck].bits() != lat.right.ideals()[ci].bits() && ideal.bits() == p.bits()
                });
                if better {
                    converse = Some((k, i));
                }
            }
        }
    }
    if let Some((k, i)) = converse {
        let q = ctx.quotient(k);
        let p = lat.right.ideals()[i].subset();
        out.notes.push(format!(
            "non-converse: in {} with I = {}, P = {} is not almost prime but P/I = {} is almost prime in R/I",
            ctx.name(),
            lat.two.ideals()[k].subset(),
            p,
            crate::ideal::ElementSubset::new(&q.desc.ring, q.desc.image_bits(p.bits())),
        ));
    }
    out
}

fn fully_ring_thms(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    let fully = lat.fully_almost_prime();
    let fully_failure = |l: &Lattices, v: Violation, role: &str| -> Violation {
        match l.first_non_almost_right() {
            Some(i) => {
                let bits = l.right.ideals()[i].bits();
                with_witness(v.set(role, &l.ring, bits), l.judge, &l.right, bits, Flavor::AlmostPrime)
            }
            None => v,
        }
    };
    for epi in ctx.epis() {
        let t = &epi.target.lat;
        let t_fully = t.fully_almost_prime();
        out.instances += 1;
        if fully && !t_fully {
            let v = epi_violation(
                TheoremId::FullyRingThms,
                ctx,
                epi,
                "R fully almost prime, epimorphic image is not",
            )
            .fact("R fully almost prime", true)
            .fact("S fully almost prime", false);
            out.violations
                .push(fully_failure(t, v, "non-almost-prime right ideal of S"));
        }
        let kernel_condition = lat
            .right
            .proper()
            .filter(|(_, p)| !p.is_zero())
            .all(|(i, _)| epi.kernel.is_subset(lat.right.square_of(i)));
        if kernel_condition {
            out.instances += 1;
            if t_fully && !fully {
                let v = epi_violation(
                    TheoremId::FullyRingThms,
                    ctx,
                    epi,
                    "ker f in I^2 for every nonzero proper right ideal I, S fully almost prime, R is not",
                )
                .fact("S fully almost prime", true)
                .fact("R fully almost prime", false);
                out.violations
                    .push(fully_failure(lat, v, "non-almost-prime right ideal of R"));
            }
        }
    }
    for (k, ideal) in lat.two.proper() {
        out.instances += 1;
        let q = ctx.quotient(k);
        if fully && !q.lat.fully_almost_prime() {
            let v = Violation::new(TheoremId::FullyRingThms, ctx.name(), "R fully almost prime, R/I is not")
                .set("I", ring, ideal.bits())
                .fact("R fully almost prime", true)
                .fact("R/I fully almost prime", false);
            out.violations
                .push(fully_failure(&q.lat, v, "non-almost-prime right ideal of R/I"));
        }
    }
    out
}

fn commutative_unital(ctx: &RingContext<'_>) -> bool {
    ctx.has_identity() && ctx.ring().is_commutative()
}

fn comm_thm_1_1(ctx: &RingContext<'_>) -> RingOutcome {
    if !commutative_unital(ctx) {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    for (i, p) in lat.two.proper() {
        out.instances += 1;
        let bits = p.bits();
        let p2 = lat.two.square_of(i);
        let c1 = lat.holds_two(bits, Flavor::AlmostPrime);
        let mut w2 = None;
        let mut w3 = None;
        for a in ring.elements().filter(|&a| !bits.contains(a)) {
            let single = BitSet::from_indices(ring.order(), [a]);
            let cp = colon_bits(ring, bits, &single, ColonSide::Right);
            let cp2 = colon_bits(ring, p2, &single, ColonSide::Right);
            if w2.is_none() && cp != bits.union(&cp2) {
                w2 = Some(a);
            }
            if w3.is_none() && cp != *bits && cp != cp2 {
                w3 = Some(a);
            }
        }
        let flags = [c1, w2.is_none(), w3.is_none()];
        if flags.iter().any(|&f| f != c1) {
            let mut v = Violation::new(
                TheoremId::CommThm11,
                ctx.name(),
                "almost primeness and the colon conditions disagree",
            )
            .set("P", ring, bits)
            .set("P^2", ring, p2)
            .fact("(1) P almost prime", flags[0])
            .fact("(2) P:{a} = P u (P^2:{a}) for a outside P", flags[1])
            .fact("(3) P:{a} is P or P^2:{a} for a outside P", flags[2]);
            if let Some(a) = w2.or(w3) {
                let single = BitSet::from_indices(ring.order(), [a]);
                v = v
                    .set(
                        format!("P:{{{}}}", ring.label(a)),
                        ring,
                        &colon_bits(ring, bits, &single, ColonSide::Right),
                    )
                    .set(
                        format!("P^2:{{{}}}", ring.label(a)),
                        ring,
                        &colon_bits(ring, p2, &single, ColonSide::Right),
                    );
            }
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.two, bits, Flavor::AlmostPrime));
        }
    }
    out
}

fn unital_commutative_factors(ctx: &RingContext<'_>) -> bool {
    ctx.entry.product.as_ref().is_some_and(|p| {
        [&p.left, &p.right]
            .iter()
            .all(|r| r.identity().is_some() && r.is_commutative())
    })
}

fn comm_thm_1_2(ctx: &RingContext<'_>) -> RingOutcome {
    if !unital_commutative_factors(ctx) {
        return RingOutcome::filtered();
    }
    let prod = ctx.entry.product.as_ref().expect("checked above");
    let mut out = RingOutcome::applicable();
    let judge = ctx.judge();
    let left = Lattices::new(&prod.left, judge);
    let right = Lattices::new(&prod.right, judge);
    let whole_l = BitSet::full(prod.left.order());
    let whole_r = BitSet::full(prod.right.order());

    // (form, set) for each of the three shapes.
    let mut forms: Vec<(u8, BitSet)> = Vec::new();
    for (_, i) in left.two.proper() {
        if left.holds_two(i.bits(), Flavor::AlmostPrime) {
            forms.push((1, prod.embed_bits(i.bits(), &whole_r)));
        }
    }
    for (_, j) in right.two.proper() {
        if right.holds_two(j.bits(), Flavor::AlmostPrime) {
            forms.push((2, prod.embed_bits(&whole_l, j.bits())));
        }
    }
    for (a, i) in left.two.ideals().iter().enumerate() {
        for (b, j) in right.two.ideals().iter().enumerate() {
            let idem = left.two.square_of(a) == i.bits() && right.two.square_of(b) == j.bits();
            if idem && (i.is_proper() || j.is_proper()) {
                forms.push((3, prod.embed_bits(i.bits(), j.bits())));
            }
        }
    }

    let ring = ctx.ring();
    let lat = &ctx.lat;
    for (_, x) in lat.two.proper() {
        out.instances += 1;
        let almost = lat.holds_two(x.bits(), Flavor::AlmostPrime);
        let shapes: Vec<u8> = forms.iter().filter(|(_, s)| s == x.bits()).map(|(f, _)| *f).collect();
        if almost != !shapes.is_empty() {
            let cond = if almost {
                "almost prime ideal of the product has none of the three forms"
            } else {
                "ideal of one of the three forms is not almost prime"
            };
            let v = Violation::new(TheoremId::CommThm12, ctx.name(), cond)
                .set("P", ring, x.bits())
                .fact("P almost prime", almost)
                .fact("P = I x S with I almost prime", shapes.contains(&1))
                .fact("P = R x J with J almost prime", shapes.contains(&2))
                .fact("P = I x J with I, J idempotent", shapes.contains(&3));
            out.violations
                .push(with_witness(v, judge, &lat.two, x.bits(), Flavor::AlmostPrime));
        }
    }
    out
}

fn as_weakly_square_zero(ctx: &RingContext<'_>) -> RingOutcome {
    if !commutative_unital(ctx) {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    for (i, p) in lat.two.proper() {
        out.instances += 1;
        let weakly = lat.holds_two(p.bits(), Flavor::WeaklyPrime);
        let prime = lat.holds_two(p.bits(), Flavor::Prime);
        let p2 = lat.two.square_of(i);
        if weakly && !prime && !is_zero_set(ring, p2) {
            let v = Violation::new(
                TheoremId::AsWeaklySquareZero,
                ctx.name(),
                "weakly prime, not prime, P^2 nonzero",
            )
            .set("P", ring, p.bits())
            .set("P^2", ring, p2)
            .fact("P weakly prime", true)
            .fact("P prime", false)
            .fact("P^2 = 0", false);
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.two, p.bits(), Flavor::Prime));
        }
    }
    out
}

fn as_product_weakly(ctx: &RingContext<'_>) -> RingOutcome {
    if !unital_commutative_factors(ctx) {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let lat = &ctx.lat;
    for (_, p) in lat.two.proper() {
        out.instances += 1;
        let weakly = lat.holds_two(p.bits(), Flavor::WeaklyPrime);
        let prime = lat.holds_two(p.bits(), Flavor::Prime);
        if weakly && !prime && !p.is_zero() {
            let v = Violation::new(
                TheoremId::AsProductWeakly,
                ctx.name(),
                "weakly prime, nonzero and not prime",
            )
            .set("P", ctx.ring(), p.bits())
            .fact("P weakly prime", true)
            .fact("P = 0", false)
            .fact("P prime", false);
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.two, p.bits(), Flavor::Prime));
        }
    }
    out
}

fn hirano_weakly_equiv(ctx: &RingContext<'_>) -> RingOutcome {
    if !ctx.has_identity() {
        return RingOutcome::filtered();
    }
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    for (_, p) in lat.two.proper() {
        out.instances += 1;
        let c1 = lat.holds_two(p.bits(), Flavor::WeaklyPrime);
        let c2 = lat.holds_right(p.bits(), Flavor::WeaklyPrime);
        let crit = element_criteria_bits(ring, p.bits());
        let c3 = crit.weakly_prime_holds();
        if c1 != c2 || c1 != c3 {
            let mut v = Violation::new(
                TheoremId::HiranoWeaklyEquiv,
                ctx.name(),
                "the weak primeness conditions disagree",
            )
            .set("P", ring, p.bits())
            .fact("(1) weakly prime over ideals", c1)
            .fact("(2) weakly prime over right ideals", c2)
            .fact("(3) 0 != aRb in P forces a or b in P", c3);
            if let Some((a, b)) = crit.weakly_prime {
                v = v.set(
                    format!("aRb with a={}, b={}", ring.label(a), ring.label(b)),
                    ring,
                    &crate::ideal::arb_bits(ring, a, b),
                );
            }
            let universe = if c1 { &lat.right } else { &lat.two };
            out.violations
                .push(with_witness(v, ctx.judge(), universe, p.bits(), Flavor::WeaklyPrime));
        }
    }
    out
}

fn groenewald_colon(ctx: &RingContext<'_>) -> RingOutcome {
    let mut out = RingOutcome::applicable();
    let ring = ctx.ring();
    let lat = &ctx.lat;
    let pr = ctx.principals();
    let zero = BitSet::from_indices(ring.order(), [ring.zero()]);
    for (_, p) in lat.two.proper() {
        out.instances += 1;
        let bits = p.bits();
        let c1 = lat.holds_two(bits, Flavor::WeaklyPrime);
        let mut w2 = None;
        let mut w3 = None;
        for a in ring.elements().filter(|&a| !bits.contains(a)) {
            let cp = colon_bits(ring, bits, &pr.left[a], ColonSide::Right);
            let c0 = colon_bits(ring, &zero, &pr.left[a], ColonSide::Right);
            if w2.is_none() && cp != bits.union(&c0) {
                w2 = Some(a);
            }
            if w3.is_none() && cp != *bits && cp != c0 {
                w3 = Some(a);
            }
        }
        let flags = [c1, w2.is_none(), w3.is_none()];
        if flags.iter().any(|&f| f != c1) {
            let mut v = Violation::new(
                TheoremId::GroenewaldColon,
                ctx.name(),
                "weak primeness and the colon conditions disagree",
            )
            .set("P", ring, bits)
            .fact("(1) P weakly prime", flags[0])
            .fact("(2) P:<a) = P u (0:<a)) for a outside P", flags[1])
            .fact("(3) P:<a) is P or 0:<a) for a outside P", flags[2]);
            if let Some(a) = w2.or(w3) {
                v = v
                    .set(format!("<a) with a={}", ring.label(a)), ring, &pr.left[a])
                    .set("P:<a)", ring, &colon_bits(ring, bits, &pr.left[a], ColonSide::Right))
                    .set("0:<a)", ring, &colon_bits(ring, &zero, &pr.left[a], ColonSide::Right));
            }
            out.violations
                .push(with_witness(v, ctx.judge(), &lat.two, bits, Flavor::WeaklyPrime));
        }
    }
    out
}
