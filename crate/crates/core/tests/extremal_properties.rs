//! The main lower bound, the agreement of its two constructions, sign-choice
//! independence and the regular-input shortcut.

mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use zpz_entropy::extremal::{
    extremal_distribution_by, extremal_distribution_ordered, pair_bound, SquareOrder,
};
use zpz_entropy::random::seeded;
use zpz_entropy::rearrange::is_descending_along;
use zpz_entropy::{
    assign_signs, circular_shift_between, classify_regularity, convolve_many, extremal_distribution,
    extremal_distribution_fast, majorization, make_pmf, mass, rearrange, renyi, verify_main_inequality,
    Alpha, Domain, Error, MajorizationVerdict, NonnegFn, Pmf, Regularity, Sign, SignAssignment,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bound_majorizes_the_convolution(fs in family_strategy(domain_strategy(), 1..=5)) {
        let lhs = convolve_many(&fs).unwrap();
        let bound = extremal_distribution(&fs).unwrap();
        prop_assert_eq!(majorization(&lhs, &bound).unwrap(), MajorizationVerdict::Majorized);
    }

    #[test]
    fn enumerated_and_fast_forms_agree(fs in family_strategy(domain_strategy(), 1..=6)) {
        prop_assert_eq!(extremal_distribution(&fs).unwrap(), extremal_distribution_fast(&fs).unwrap());
    }

    #[test]
    fn fast_form_agrees_on_regular_families(fs in regular_family_strategy(domain_strategy(), 1..=6)) {
        prop_assert_eq!(extremal_distribution(&fs).unwrap(), extremal_distribution_fast(&fs).unwrap());
    }

    #[test]
    fn any_valid_sign_choice_gives_the_same_bound(
        fs in family_strategy(domain_strategy(), 1..=5),
        seed in any::<u64>(),
    ) {
        let mut rng = seeded(seed);
        let reference = extremal_distribution(&fs).unwrap();
        let random_choice = |tags: &[Regularity]| -> zpz_entropy::Result<SignAssignment> {
            let squares: Vec<usize> = (0..tags.len()).filter(|&i| tags[i] == Regularity::Square).collect();
            let mut order = squares.clone();
            order.shuffle(&mut rng);
            let plus_count = squares.len().div_ceil(2);
            let mut signs: Vec<Sign> = tags
                .iter()
                .map(|t| if *t == Regularity::Triangle { Sign::Star } else { Sign::Minus })
                .collect();
            for &i in &order[..plus_count] {
                signs[i] = Sign::Plus;
            }
            Ok(SignAssignment::new(signs))
        };
        prop_assert_eq!(extremal_distribution_by(&fs, Sign::Plus, random_choice).unwrap(), reference);
    }

    #[test]
    fn minus_first_alternation_mirrors(fs in family_strategy(domain_strategy(), 1..=5)) {
        let plus = extremal_distribution(&fs).unwrap();
        let minus = extremal_distribution_ordered(&fs, SquareOrder::MinusFirst).unwrap();
        prop_assert_eq!(minus.as_fn(), &plus.reflect().into_fn());
        for a in Alpha::standard_grid() {
            // Summation order differs between mirrors, so allow rounding.
            prop_assert!(close(renyi(&plus, &a), renyi(&minus, &a)), "alpha {}", a);
        }
    }

    #[test]
    fn bound_is_descending_along_plus_sequence(fs in family_strategy(domain_strategy(), 1..=5)) {
        let bound = extremal_distribution(&fs).unwrap();
        prop_assert!(is_descending_along(&bound, Sign::Plus));
    }

    #[test]
    fn regular_inputs_need_no_decomposition(fs in regular_family_strategy(domain_strategy(), 1..=5)) {
        let tags: Vec<Regularity> = fs.iter().map(|f| classify_regularity(f)).collect();
        let signs = assign_signs(&tags).unwrap();
        let rearranged: Vec<NonnegFn> = fs
            .iter()
            .zip(signs.signs())
            .map(|(f, &s)| rearrange(f, if s == Sign::Star { Sign::Plus } else { s }).unwrap())
            .collect();
        let single = convolve_many(&rearranged).unwrap();
        let bound = extremal_distribution(&fs).unwrap();
        prop_assert!(circular_shift_between(&bound, &single).unwrap().is_some());
    }

    #[test]
    fn two_factor_form_equals_bound(d in domain_strategy(), seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let f = pmf_in(&mut rng, d);
        let g = pmf_in(&mut rng, d);
        prop_assert_eq!(pair_bound(&f, &g).unwrap(), extremal_distribution(&[f, g]).unwrap());
    }

    #[test]
    fn bound_is_invariant_under_translating_factors(
        fs in family_strategy(domain_strategy(), 1..=4),
        shifts in prop::collection::vec(-6i64..=6, 4),
    ) {
        let moved: Vec<Pmf> = fs.iter().zip(&shifts).map(|(f, &c)| f.shift(c)).collect();
        prop_assert_eq!(extremal_distribution(&moved).unwrap(), extremal_distribution(&fs).unwrap());
    }

    #[test]
    fn report_gaps_are_nonnegative(fs in family_strategy(cyclic_strategy(), 2..=3)) {
        let report = verify_main_inequality(&fs, &Alpha::standard_grid()).unwrap();
        prop_assert!(report.majorization.is_majorized());
        for pair in &report.entropies {
            prop_assert!(pair.gap() >= -1e-12, "alpha {}: gap {}", pair.alpha, pair.gap());
        }
    }
}

#[test]
fn point_masses_give_point_masses() {
    let d = Domain::cyclic(11).unwrap();
    let fs = vec![Pmf::point(d, 3).unwrap(), Pmf::point(d, -5).unwrap()];
    let r = verify_main_inequality(&fs, &Alpha::standard_grid()).unwrap();
    assert_eq!(r.extremal, Pmf::point(d, 0).unwrap());
    assert_eq!(r.majorization, MajorizationVerdict::Majorized);
    assert!(r.entropies.iter().all(|p| p.lhs == 0.0 && p.extremal == 0.0));
}

#[test]
fn two_coins_on_the_integers() {
    let coin = Pmf::uniform(Domain::INTEGERS, [0, 1]).unwrap();
    let r = verify_main_inequality(&[coin.clone(), coin], &[Alpha::One]).unwrap();
    let want = make_pmf(Domain::INTEGERS, [(-1, mass(1, 4)), (0, mass(1, 2)), (1, mass(1, 4))]).unwrap();
    assert_eq!(r.extremal, want);
    let h = 1.5 * std::f64::consts::LN_2;
    assert!((r.entropies[0].extremal - h).abs() < 1e-12);
    assert!(r.entropies[0].lhs >= h - 1e-12);
}

#[test]
fn triangle_families_collapse_to_one_cell() {
    let d = Domain::cyclic(7).unwrap();
    let h = make_pmf(d, [(0, mass(1, 2)), (1, mass(1, 4)), (-1, mass(1, 4))]).unwrap();
    let fs = vec![h.clone(), h.shift(2), h.shift(-3)];
    let stars: Vec<NonnegFn> = fs.iter().map(|f| rearrange(f, Sign::Star).unwrap()).collect();
    assert_eq!(extremal_distribution_fast(&fs).unwrap().into_fn(), convolve_many(&stars).unwrap());
}

#[test]
fn two_square_factors_shift_to_the_alternating_form() {
    let d = Domain::cyclic(11).unwrap();
    let s1 = Pmf::uniform(d, [2, 5]).unwrap();
    let s2 = make_pmf(d, [(0, mass(1, 3)), (4, mass(1, 3)), (-2, mass(1, 6)), (3, mass(1, 6))]).unwrap();
    // s- is s+ translated so that s-(z) = s+(z + 1).
    let s2_plus = rearrange(&s2, Sign::Plus).unwrap();
    let s2_minus = rearrange(&s2, Sign::Minus).unwrap();
    assert_eq!(s2_plus.shift(1), s2_minus);
    let direct = convolve_many(&[rearrange(&s1, Sign::Plus).unwrap(), s2_minus]).unwrap();
    assert_eq!(extremal_distribution_fast(&[s1, s2]).unwrap().into_fn(), direct);
}

#[test]
fn enumeration_cap_and_domain_checks() {
    let d = Domain::cyclic(5).unwrap();
    let f = Pmf::uniform(d, [0, 1]).unwrap();
    assert_eq!(extremal_distribution(&vec![f.clone(); 17]), Err(Error::TooManyFactors { n: 17, max: 16 }));
    assert!(extremal_distribution_fast(&vec![f.clone(); 17]).is_ok());
    let g = Pmf::point(Domain::INTEGERS, 0).unwrap();
    assert_eq!(extremal_distribution(&[f, g]), Err(Error::DomainMismatch));
    assert_eq!(extremal_distribution(&[]), Err(Error::EmptySequence));
}

#[test]
fn invalid_sign_choices_are_rejected() {
    let d = Domain::cyclic(7).unwrap();
    let s = Pmf::uniform(d, [0, 3]).unwrap();
    let both_plus = |tags: &[Regularity]| Ok(SignAssignment::new(vec![Sign::Plus; tags.len()]));
    assert!(matches!(
        extremal_distribution_by(&[s.clone(), s], Sign::Plus, both_plus),
        Err(Error::InvalidSigns(_))
    ));
}
