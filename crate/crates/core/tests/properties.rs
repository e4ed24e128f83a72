//! Randomized structural laws: residue arithmetic, unit square roots,
//! identifier canonicalization, invariant denominators, quotient pairs, and
//! the equivalence-relation axioms of the diffeomorphism decision.

use proptest::prelude::*;

use ek_core::{
    char_number_pbar_sq, count_distinct, ek_connected_sum, ek_quotient, ek_quotient_from_sphere,
    ek_sphere, family, is_diffeomorphic, normal_invariant_beta, period_sphere, qn, res_add,
    res_neg, residue_mod1, separation_certificate, unit_sqrts_mod, verify_mu_implication,
    BundleId, QuotientId, Rat, ResMod1,
};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (any::<i32>(), 1..=100_000i64, any::<bool>()).prop_map(|(num, den, flip)| {
        let den = if flip { -den } else { den };
        Rat::new(i64::from(num), den)
    })
}

fn arb_bundle() -> impl Strategy<Value = BundleId> {
    (1u8..=2, -10_000i64..=10_000, 1i64..=500)
        .prop_map(|(n, k, l)| BundleId::new(n, k, l).expect("in-range parameters"))
}

proptest! {
    #[test]
    fn residues_lie_in_the_unit_interval(r in arb_rat()) {
        let v = residue_mod1(&r);
        prop_assert!(!v.value().is_negative());
        prop_assert!(v.value() < &Rat::one());
        // The residue differs from the input by an exact integer.
        prop_assert!((&r - v.value()).is_integer());
    }

    #[test]
    fn residue_is_shift_invariant(r in arb_rat(), m in -50i64..=50) {
        let shifted = &r + &Rat::from_int(m);
        prop_assert_eq!(residue_mod1(&shifted), residue_mod1(&r));
    }

    #[test]
    fn residue_group_laws(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        let (x, y, z) = (residue_mod1(&a), residue_mod1(&b), residue_mod1(&c));
        prop_assert_eq!(res_add(&x, &y), res_add(&y, &x));
        prop_assert_eq!(
            res_add(&res_add(&x, &y), &z),
            res_add(&x, &res_add(&y, &z))
        );
        prop_assert!(res_add(&x, &res_neg(&x)).is_zero());
        prop_assert_eq!(res_add(&x, &ResMod1::zero()), x);
    }

    #[test]
    fn connected_sum_folds_in_any_order(values in prop::collection::vec(arb_rat(), 0..8)) {
        let residues: Vec<ResMod1> = values.iter().map(residue_mod1).collect();
        let mut reversed = residues.clone();
        reversed.reverse();
        let forward = ek_connected_sum(&residues);
        prop_assert_eq!(ek_connected_sum(&reversed), forward.clone());
        let folded = residues
            .iter()
            .fold(ResMod1::zero(), |acc, v| res_add(&acc, v));
        prop_assert_eq!(folded, forward);
    }

    #[test]
    fn unit_sqrt_sets_are_groups(l in 1u64..=2000) {
        let set = unit_sqrts_mod(l).unwrap();
        let roots = set.roots();
        prop_assert!(!roots.is_empty());
        for &g in roots {
            prop_assert_eq!((g * g) % l, 1 % l, "g = {} is not a root mod {}", g, l);
        }
        prop_assert!(set.contains(1 % l), "missing the identity");
        prop_assert!(set.contains((l - 1) % l), "missing the negation of the identity");
        for &g in roots {
            for &h in roots {
                prop_assert!(set.contains((g * h) % l), "not closed: {} * {} mod {}", g, h, l);
            }
        }
    }

    #[test]
    fn normalize_is_idempotent_and_lands_on_positive_euler(
        n in 1u8..=2,
        k in -10_000i64..=10_000,
        l in prop_oneof![-500i64..=-1, 1i64..=500],
    ) {
        let once = BundleId::normalize(n, k, l).unwrap();
        prop_assert!(once.l() >= 1);
        prop_assert!(!once.reversed());
        let twice = BundleId::normalize(once.n(), once.k(), once.l()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn orientation_reversal_is_an_involution_negating_the_invariant(b in arb_bundle()) {
        let r = b.reverse_orientation();
        prop_assert_eq!(r.reverse_orientation(), b);
        prop_assert_eq!(ek_sphere(&r).value, res_neg(&ek_sphere(&b).value));
    }

    /// The invariant times `2^{4n+1} q_n l` is an integer: the denominator
    /// always divides the family's fixed one.
    #[test]
    fn invariant_denominator_divides_the_catalog_value(b in arb_bundle()) {
        let mu = ek_sphere(&b).value;
        let scale = Rat::from_int((1i64 << (4 * u32::from(b.n()) + 1)) * qn(b.n()) * b.l());
        prop_assert!((mu.value() * &scale).is_integer());
    }

    #[test]
    fn quotient_pair_routes_and_branch_sum(n in 1u8..=2, k in -100_000i64..=100_000) {
        let q = QuotientId::new(n, k).unwrap();
        let pair = ek_quotient(&q);
        prop_assert_eq!(&pair, &ek_quotient_from_sphere(&q));
        let sphere = ek_sphere(&BundleId::new(n, k, 1).unwrap()).value;
        prop_assert_eq!(res_add(pair.low(), pair.high()), sphere);
    }

    #[test]
    fn beta_has_period_fifty_six(k in -1_000_000i64..=1_000_000) {
        prop_assert_eq!(normal_invariant_beta(k), normal_invariant_beta(k + 56));
        prop_assert!(normal_invariant_beta(k) < 4);
    }

    #[test]
    fn pbar_square_is_positive_away_from_the_axis(b in arb_bundle()) {
        let value = char_number_pbar_sq(&b);
        if 2 * b.k() + b.l() == 0 {
            prop_assert!(value.is_zero());
        } else {
            prop_assert!(!value.is_zero());
            prop_assert!(!value.is_negative());
        }
    }

    /// Every family member is diffeomorphic to the base point, yet every
    /// pair is separated in moduli: the two relations must coexist.
    #[test]
    fn family_members_are_diffeomorphic_yet_separated(
        n in 1u8..=2,
        k in -50i64..=50,
        l in 1i64..=30,
        m in 2u64..=5,
    ) {
        let b = BundleId::new(n, k, l).unwrap();
        let members = family(&b, m).unwrap();
        prop_assert_eq!(members.len() as u64, m);
        let period = period_sphere(n, l).unwrap();
        for (i, member) in members.iter().enumerate() {
            prop_assert_eq!(member.k(), k + (i as i64) * period);
            let verdict = is_diffeomorphic(&b, member).unwrap();
            prop_assert!(verdict.diffeomorphic, "member {} not diffeomorphic", i);
            if i > 0 {
                let cert = separation_certificate(n, l, b.k(), member.k()).unwrap();
                prop_assert!(cert.separated, "member {} not separated", i);
            }
        }
    }

    #[test]
    fn diffeomorphism_is_an_equivalence_relation(
        n in 1u8..=2,
        l in 1i64..=30,
        k1 in -40i64..=40,
        k2 in -40i64..=40,
        k3 in -40i64..=40,
    ) {
        let a = BundleId::new(n, k1, l).unwrap();
        let b = BundleId::new(n, k2, l).unwrap();
        let c = BundleId::new(n, k3, l).unwrap();
        prop_assert!(is_diffeomorphic(&a, &a).unwrap().diffeomorphic, "reflexivity");
        let ab = is_diffeomorphic(&a, &b).unwrap().diffeomorphic;
        let ba = is_diffeomorphic(&b, &a).unwrap().diffeomorphic;
        prop_assert_eq!(ab, ba, "symmetry");
        let bc = is_diffeomorphic(&b, &c).unwrap().diffeomorphic;
        let ac = is_diffeomorphic(&a, &c).unwrap().diffeomorphic;
        if ab && bc {
            prop_assert!(ac, "transitivity");
        }
    }
}

/// Deterministic (non-random) structural checks that belong with the suite:
/// the small family's quotient implication and count stability.
#[test]
fn small_family_bucket_implication_holds() {
    let outcome = verify_mu_implication(1).unwrap();
    assert!(outcome.holds, "counterexamples: {:?}", outcome.counterexamples);
    let report = count_distinct(1).unwrap();
    assert_eq!((report.sphere_values, report.quotient_pairs), (16, 16));
}
