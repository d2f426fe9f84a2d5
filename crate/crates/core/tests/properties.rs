use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use symsugeno::generate::{random_capacity, random_in_interval, seeded_rng};
use symsugeno::integrals::variant1_terms;
use symsugeno::prelude::*;

const K: u32 = 4;

fn level(x: i32) -> ScaleValue<Level> {
    ScaleValue::with_sign(x < 0, Level(x.unsigned_abs()))
}

fn signed_level() -> impl Strategy<Value = ScaleValue<Level>> {
    (-(K as i32)..=K as i32).prop_map(level)
}

/// A capacity on `n` players drawn from a seed, and a profile.
fn instance(max_n: usize) -> impl Strategy<Value = (Capacity<Levels>, Profile<Level>)> {
    (1..=max_n, any::<u64>()).prop_flat_map(|(n, seed)| {
        let v = random_capacity(&Levels::new(K).unwrap(), n, &mut seeded_rng(seed));
        (Just(v), prop::collection::vec(signed_level(), n).prop_map(Profile::new))
    })
}

fn relabel(v: &Capacity<Levels>, f: &Profile<Level>, sigma: &[usize]) -> (Capacity<Levels>, Profile<Level>) {
    let n = v.n();
    let image = |a: Coalition| Coalition::from_indices(a.players().map(|i| sigma[i]));
    let table = Coalition::all(n).map(|a| v.value(image(a))).collect();
    let w = Capacity::from_table(v.scale().clone(), n, table).unwrap();
    let g = Profile::new((0..n).map(|i| f.get(sigma[i])).collect());
    (w, g)
}

fn real_profile(f: &[i64]) -> Vec<BigRational> {
    f.iter().map(|&x| BigRational::new(BigInt::from(x), BigInt::from(4))).collect()
}

proptest! {
    #[test]
    fn sym_max_commutes_and_reflects(a in signed_level(), b in signed_level()) {
        prop_assert_eq!(sym_max(a, b), sym_max(b, a));
        prop_assert_eq!(-sym_max(a, b), sym_max(-a, -b));
        prop_assert!(sym_max(a, -a).is_zero());
    }

    #[test]
    fn sym_min_is_associative(a in signed_level(), b in signed_level(), c in signed_level()) {
        prop_assert_eq!(sym_min(sym_min(a, b), c), sym_min(a, sym_min(b, c)));
    }

    #[test]
    fn rules_agree_without_opposite_extremes(values in prop::collection::vec(signed_level(), 0..8)) {
        prop_assume!(is_fold_unambiguous(&values));
        let floor = fold_sym_max(&values, AggregationRule::Floor);
        prop_assert_eq!(floor, fold_sym_max(&values, AggregationRule::Ceil));
        prop_assert_eq!(floor, fold_sym_max(&values, AggregationRule::Angle));
    }

    #[test]
    fn integrals_are_odd((v, f) in instance(4)) {
        let g = f.reflect();
        let lower = ordinal_mobius_interval(&v).lower;
        prop_assert_eq!(sugeno_symmetric(&v, &g).unwrap(), -sugeno_symmetric(&v, &f).unwrap());
        prop_assert_eq!(sugeno_variant1(&lower, &g).unwrap(), -sugeno_variant1(&lower, &f).unwrap());
        prop_assert_eq!(sugeno_variant2(&v, &g).unwrap(), -sugeno_variant2(&v, &f).unwrap());
        prop_assert_eq!(sugeno_variant3(&v, &g).unwrap(), -sugeno_variant3(&v, &f).unwrap());
    }

    #[test]
    fn symmetric_sugeno_is_monotone((v, f) in instance(4), raise in prop::collection::vec(0..=2 * K as i32, 4)) {
        let higher = Profile::new(
            f.values()
                .iter()
                .zip(&raise)
                .map(|(x, r)| {
                    let signed = if x.is_negative() { -(x.magnitude().0 as i32) } else { x.magnitude().0 as i32 };
                    level((signed + r).min(K as i32))
                })
                .collect(),
        );
        prop_assert!(sugeno_symmetric(&v, &f).unwrap() <= sugeno_symmetric(&v, &higher).unwrap());
    }

    #[test]
    fn symmetric_forms_agree((v, f) in instance(4), seed in any::<u64>()) {
        let interval = ordinal_mobius_interval(&v);
        let m = random_in_interval(v.scale(), &interval, &mut seeded_rng(seed));
        let direct = sugeno_symmetric(&v, &f).unwrap();
        prop_assert_eq!(direct, sugeno_symmetric_explicit(&v, &f).unwrap());
        prop_assert_eq!(direct, sugeno_symmetric_mobius(&m, &f).unwrap().total);
        let plus = f.positive_part();
        prop_assert_eq!(sugeno(&v, &plus).unwrap(), sugeno_mobius(&m, &plus).unwrap());
    }

    #[test]
    fn relabeling_players_preserves_tie_invariant_integrals((v, f) in instance(4), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut sigma: Vec<usize> = (0..v.n()).collect();
        sigma.shuffle(&mut seeded_rng(seed));
        let (w, g) = relabel(&v, &f, &sigma);
        prop_assert_eq!(sugeno_symmetric(&v, &f).unwrap(), sugeno_symmetric(&w, &g).unwrap());
        prop_assert_eq!(sugeno_symmetric_explicit(&v, &f).unwrap(), sugeno_symmetric_explicit(&w, &g).unwrap());
        prop_assert_eq!(sugeno(&v, &f.positive_part()).unwrap(), sugeno(&w, &g.positive_part()).unwrap());
        let (lv, lw) = (ordinal_mobius_interval(&v).lower, ordinal_mobius_interval(&w).lower);
        let mut terms_v = variant1_terms(&lv, &f).unwrap();
        let mut terms_w = variant1_terms(&lw, &g).unwrap();
        terms_v.sort();
        terms_w.sort();
        prop_assert_eq!(terms_v, terms_w);
        prop_assert_eq!(sugeno_variant1(&lv, &f).unwrap(), sugeno_variant1(&lw, &g).unwrap());
    }

    #[test]
    fn choquet_laws(n in 1usize..=4, seed in any::<u64>(), raw in prop::collection::vec(-4i64..=4, 4), c in 0i64..=4) {
        let v = random_capacity(&Unit::with_grid(10), n, &mut seeded_rng(seed)).to_real();
        let f = real_profile(&raw[..n]);
        let neg: Vec<_> = f.iter().map(|x| -x).collect();
        let plus: Vec<_> = f.iter().map(|x| x.clone().max(BigRational::from_integer(0.into()))).collect();
        prop_assert_eq!(choquet_symmetric(&v, &neg).unwrap(), -choquet_symmetric(&v, &f).unwrap());
        prop_assert_eq!(choquet_asymmetric(&v, &plus).unwrap(), choquet(&v, &plus).unwrap());
        prop_assert_eq!(choquet_symmetric(&v, &f).unwrap(), sipos_mobius(&classical_mobius(&v), &f).unwrap());
        let constant = real_profile(&vec![c; n]);
        prop_assert_eq!(choquet(&v, &constant).unwrap(), constant[0].clone());
        prop_assert_eq!(&classical_zeta(&classical_mobius(&v)), &v);
    }
}

#[test]
fn angle_and_ceil_variants_depend_on_tie_order() {
    // v({1}) = 0, v(N) = 2, v = 1 elsewhere; players 1 and 2 tie at -2.
    let table = [0, 0, 1, 1, 1, 1, 1, 2].map(level).to_vec();
    let v = Capacity::from_table(Levels::new(2).unwrap(), 3, table).unwrap();
    let f = Profile::new([-2, -2, 1].map(level).to_vec());
    let (w, g) = relabel(&v, &f, &[1, 0, 2]);
    assert_eq!(g, f);
    assert_eq!(sugeno_symmetric(&v, &f).unwrap(), sugeno_symmetric(&w, &g).unwrap());
    let differs = sugeno_variant2(&v, &f).unwrap() != sugeno_variant2(&w, &g).unwrap()
        || sugeno_variant3(&v, &f).unwrap() != sugeno_variant3(&w, &g).unwrap();
    assert!(differs);
}
