use num_bigint::BigInt;
use proptest::prelude::*;

use motive_forge::format::{class_from_str, class_to_string};
use motive_forge::lambda::binomial;
use motive_forge::moduli::{omega, pw_classes};
use motive_forge::*;

fn poly() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-4i64..=6, -20i64..=20), 0..5).prop_map(LaurentInt::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentInt> {
    poly().prop_filter("non-zero divisor", |p| !p.is_zero())
}

fn raw_class() -> impl Strategy<Value = (u32, Vec<(usize, LaurentInt)>)> {
    (1u32..=4).prop_flat_map(|g| {
        let entries = prop::collection::vec((0..=2 * g as usize, poly()), 0..6);
        (Just(g), entries)
    })
}

fn class() -> impl Strategy<Value = MotiveClass> {
    raw_class().prop_map(|(g, raw)| MotiveClass::canonicalize(raw, g).unwrap())
}

fn class_pair() -> impl Strategy<Value = (MotiveClass, MotiveClass)> {
    (1u32..=4).prop_flat_map(|g| {
        let one = move || {
            prop::collection::vec((0..=2 * g as usize, poly()), 0..6)
                .prop_map(move |raw| MotiveClass::canonicalize(raw, g).unwrap())
        };
        (one(), one())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laurent_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &LaurentInt::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn canonicalize_is_idempotent_and_keeps_rank((g, raw) in raw_class()) {
        let raw_rank: BigInt = raw
            .iter()
            .map(|(a, p)| binomial(2 * g as u64, *a as u64) * p.coefficient_sum())
            .sum();
        let x = MotiveClass::canonicalize(raw, g).unwrap();
        let again: Vec<_> = x.components().map(|(a, p)| (a, p.clone())).collect();
        prop_assert_eq!(MotiveClass::canonicalize(again, g).unwrap(), x.clone());
        prop_assert_eq!(x.rank(), raw_rank);
    }

    #[test]
    fn module_laws((x, y) in class_pair(), p in poly(), q in poly()) {
        let xy = x.add(&y).unwrap();
        prop_assert_eq!(xy.clone(), y.add(&x).unwrap());
        prop_assert_eq!(xy.scalar_mul(&p), x.scalar_mul(&p).add(&y.scalar_mul(&p)).unwrap());
        prop_assert_eq!(x.scalar_mul(&(&p * &q)), x.scalar_mul(&q).scalar_mul(&p));
        prop_assert_eq!(x.scalar_mul(&(&p + &q)), x.scalar_mul(&p).add(&x.scalar_mul(&q)).unwrap());
        prop_assert!(x.sub(&x).unwrap().is_zero());
    }

    #[test]
    fn dual_is_an_additive_involution((x, y) in class_pair()) {
        prop_assert_eq!(x.dual().dual(), x.clone());
        prop_assert_eq!(x.add(&y).unwrap().dual(), x.dual().add(&y.dual()).unwrap());
        prop_assert_eq!(x.dual().rank(), x.rank());
    }

    #[test]
    fn twists_compose(x in class(), m in -8i64..=8, n in -8i64..=8) {
        prop_assert_eq!(x.tate_twist(n).tate_twist(-n), x.clone());
        prop_assert_eq!(x.tate_twist(m).tate_twist(n), x.tate_twist(m + n));
        prop_assert_eq!(x.tate_twist(n).dual(), x.dual().tate_twist(-n));
    }

    #[test]
    fn exact_division_round_trip(x in class(), p in nonzero_poly()) {
        prop_assert_eq!(x.scalar_mul(&p).exact_divide(&p).unwrap(), x);
    }

    #[test]
    fn series_division_of_exact_multiples(x in class(), c1 in -3i64..=3, c2 in -3i64..=3, lead in prop::bool::ANY) {
        let u = LaurentInt::from_dense(0, &[if lead { 1 } else { -1 }, c1, c2]);
        let (q, flag) = x.scalar_mul(&u).series_divide(&u, 40).unwrap();
        prop_assert!(flag.is_exact());
        prop_assert_eq!(q, x);
    }

    #[test]
    fn weights_are_homogeneous(x in class(), k in -4i64..=4, c in -9i64..=9) {
        let mono = LaurentInt::monomial(k, c);
        for w in x.weights() {
            prop_assert_eq!(
                x.scalar_mul(&mono).weight_part(w + 2 * k).class,
                x.weight_part(w).class.scalar_mul(&mono)
            );
        }
        let total = x.weights().into_iter().fold(MotiveClass::zero(x.genus()), |acc, w| acc.add(&x.weight_part(w).class).unwrap());
        prop_assert_eq!(total, x);
    }

    #[test]
    fn serialization_round_trip(x in class()) {
        prop_assert_eq!(class_from_str(&class_to_string(&x)).unwrap(), x);
    }

    #[test]
    fn hodge_specializes_to_betti(x in class()) {
        let h = hodge(&x);
        prop_assert_eq!(h.diagonal(), betti(&x));
        prop_assert_eq!(h.swap(), h);
        prop_assert_eq!(betti(&x).coefficient_sum(), x.rank());
    }

    #[test]
    fn realizations_are_additive((x, y) in class_pair(), p in poly()) {
        let s = x.add(&y).unwrap();
        prop_assert_eq!(betti(&s), &betti(&x) + &betti(&y));
        prop_assert_eq!(hodge(&s), &hodge(&x) + &hodge(&y));
        prop_assert_eq!(betti(&x.scalar_mul(&p)), &betti(&x) * &p.stretch(2));
    }

    #[test]
    fn binomial_symmetry(g in 1u32..=6, a in -5i64..=5, b in -5i64..=5) {
        let lhs = lambda_binomial(a, b, g).unwrap();
        let rhs = lambda_binomial(b + 1, a, g).unwrap().tate_twist(g as i64);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn big_f_modes_agree(g in 1u32..=3, e in prop::collection::hash_set(-4i64..=4, 3)) {
        let e: Vec<i64> = e.into_iter().collect();
        prop_assert_eq!(
            big_f(e[0], e[1], e[2], g, FMode::Series).unwrap(),
            big_f(e[0], e[1], e[2], g, FMode::Closed).unwrap()
        );
    }

    #[test]
    fn flip_steps_add_up(g in 2u32..=3, d in 1i64..=10, pick in 0usize..16) {
        let w = omega(d);
        prop_assume!(w >= 1);
        let i = 1 + (pick as i64 % w);
        let step = pair_moduli(g, d, i).unwrap().sub(&pair_moduli(g, d, i - 1).unwrap()).unwrap();
        let (plus, minus) = pw_classes(g, d, i).unwrap();
        prop_assert_eq!(step.clone(), plus.sub(&minus).unwrap());
        if d + g as i64 - 1 - 3 * i >= 0 {
            let direct = sym_power_curve(g, i as usize).unwrap().scalar_mul(&range_sum(i, d + g as i64 - 2 - 2 * i));
            prop_assert_eq!(step, direct);
        }
    }

    #[test]
    fn symmetric_power_ranks_match_enumeration(
        ranks in prop::collection::btree_map(0i64..=3, 0u32..=3, 0..4),
        n in 0usize..=4,
    ) {
        let b = GradedRanks::new(ranks);
        prop_assert_eq!(sym_power_ranks(&b, n), sym_power_bruteforce(&b, n).unwrap());
    }
}
