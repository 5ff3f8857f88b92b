use proptest::prelude::*;
use ringlab::corpus::{Corpus, GeneratorSpec};
use ringlab::homs::{enumerate_epimorphisms, EPI_MAX_ORDER};
use ringlab::ideal::{ideal_intersection, ideal_sum, is_ideal};
use ringlab::theorems::{CheckOptions, TheoremId};
use ringlab::{
    colon, enumerate_ideals, ideal_product, principal, quotient, run_checks, ColonSide, ElementSubset, IdealKind, Ring,
    RingHom,
};

fn build(spec: &str) -> Ring {
    spec.parse::<GeneratorSpec>().unwrap().build(64).unwrap().ring
}

fn spec() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..=12).prop_map(|n| format!("zmod:{n}")),
        Just("tri:2:2".to_string()),
        Just("matrix:2:2".to_string()),
        Just("paper:ex-2-1-ii".to_string()),
        Just("paper:ex-2-1-iii".to_string()),
        ((2usize..=4), (2usize..=3)).prop_map(|(a, b)| format!("product:zmod:{a},zmod:{b}")),
        (2usize..=3).prop_map(|n| format!("product:paper:ex-2-1-ii,zmod:{n}")),
    ]
}

/// Canonical projections onto every quotient, plus all epis for small rings.
fn epis(r: &Ring) -> Vec<RingHom> {
    let mut out = Vec::new();
    for i in enumerate_ideals(r, IdealKind::TwoSided) {
        let q = quotient(r, &i).unwrap();
        if r.order() <= EPI_MAX_ORDER {
            out.extend(enumerate_epimorphisms(r, &q.ring).unwrap());
        } else {
            out.push(q.projection);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn products_are_ideals_inside_their_factors(s in spec()) {
        let r = build(&s);
        for kind in [IdealKind::Right, IdealKind::TwoSided] {
            let ideals = enumerate_ideals(&r, kind);
            for a in &ideals {
                for b in &ideals {
                    let ab = ideal_product(a.subset(), b.subset()).unwrap();
                    prop_assert!(is_ideal(&ab, kind).is_ok());
                    prop_assert!(ab.is_subset(a.subset()));
                    if kind == IdealKind::TwoSided {
                        prop_assert!(ab.is_subset(b.subset()));
                    }
                }
            }
        }
    }

    #[test]
    fn sums_and_intersections_are_lattice_operations(s in spec()) {
        let r = build(&s);
        let ideals = enumerate_ideals(&r, IdealKind::Right);
        for a in &ideals {
            for b in &ideals {
                let sum = ideal_sum(a, b).unwrap();
                let meet = ideal_intersection(a, b).unwrap();
                prop_assert!(ideals.contains(&sum) && ideals.contains(&meet));
                for c in &ideals {
                    let above = a.subset().is_subset(c.subset()) && b.subset().is_subset(c.subset());
                    prop_assert_eq!(above, sum.subset().is_subset(c.subset()));
                    let below = c.subset().is_subset(a.subset()) && c.subset().is_subset(b.subset());
                    prop_assert_eq!(below, c.subset().is_subset(meet.subset()));
                }
            }
        }
    }

    #[test]
    fn union_of_two_ideals_is_one_of_them_when_it_is_an_ideal(s in spec()) {
        let r = build(&s);
        let ideals = enumerate_ideals(&r, IdealKind::Right);
        for a in &ideals {
            for b in &ideals {
                let u = a.subset().union(b.subset()).unwrap();
                if is_ideal(&u, IdealKind::Right).is_ok() {
                    prop_assert!(u == *a.subset() || u == *b.subset());
                }
            }
        }
    }

    #[test]
    fn colons_of_two_sided_ideals_are_two_sided(s in spec()) {
        let r = build(&s);
        let ideals = enumerate_ideals(&r, IdealKind::TwoSided);
        for i in &ideals {
            for j in &ideals {
                for side in [ColonSide::Right, ColonSide::Star] {
                    let c = colon(i.subset(), j.subset(), side).unwrap();
                    prop_assert!(is_ideal(&c, IdealKind::TwoSided).is_ok());
                    prop_assert!(i.subset().is_subset(&c));
                }
            }
        }
    }

    #[test]
    fn principal_ideals_are_the_smallest_containing_their_generator(s in spec()) {
        let r = build(&s);
        for kind in [IdealKind::Right, IdealKind::Left, IdealKind::TwoSided] {
            let ideals = enumerate_ideals(&r, kind);
            for a in r.elements() {
                let p = principal(&r, a, kind).unwrap();
                prop_assert!(p.contains(a));
                prop_assert!(ideals.contains(&p));
                for i in ideals.iter().filter(|i| i.contains(a)) {
                    prop_assert!(p.subset().is_subset(i.subset()));
                }
            }
        }
    }

    #[test]
    fn epimorphisms_satisfy_the_set_identities(s in spec()) {
        let r = build(&s);
        for f in epis(&r) {
            prop_assert!(f.is_surjective());
            let ker = f.kernel();
            prop_assert!(is_ideal(ker.subset(), IdealKind::TwoSided).is_ok());
            for q in enumerate_ideals(f.codomain(), IdealKind::Right) {
                let pre = f.preimage_of_ideal(&q).unwrap();
                prop_assert!(is_ideal(pre.subset(), IdealKind::Right).is_ok());
                prop_assert!(ker.subset().is_subset(pre.subset()));
                prop_assert_eq!(f.image_bits(pre.bits()), q.bits().clone());
            }
            for p in enumerate_ideals(&r, IdealKind::Right) {
                let image = f.image_of_ideal(&p).unwrap();
                prop_assert!(is_ideal(image.subset(), IdealKind::Right).is_ok());
                if ker.subset().is_subset(p.subset()) {
                    prop_assert_eq!(f.preimage_bits(image.bits()), p.bits().clone());
                }
            }
        }
    }

    #[test]
    fn projections_have_the_modulus_as_kernel(s in spec()) {
        let r = build(&s);
        for i in enumerate_ideals(&r, IdealKind::TwoSided) {
            let q = quotient(&r, &i).unwrap();
            prop_assert_eq!(q.projection.kernel_bits(), i.bits().clone());
            prop_assert_eq!(q.ring.order() * i.len(), r.order());
            let zero = ElementSubset::zero(&q.ring);
            prop_assert_eq!(q.projection.preimage_bits(zero.bits()), i.bits().clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn suite_output_is_independent_of_scheduling(specs in prop::collection::vec(spec(), 1..5)) {
        let corpus = Corpus::from_specs(&specs, 64).unwrap();
        let strip = |mut reps: Vec<ringlab::TheoremReport>| {
            for r in &mut reps {
                r.elapsed_ms = 0.0;
            }
            reps
        };
        let a = strip(run_checks(&corpus, TheoremId::ALL, CheckOptions::default()));
        let b = strip(run_checks(&corpus, TheoremId::ALL, CheckOptions::default()));
        prop_assert_eq!(&a, &b);
        for r in &a {
            prop_assert!(r.violations.is_empty(), "{} failed on {:?}", r.theorem_id, specs);
        }
    }
}
