//! Invariants of the basic types, rearrangements and the decomposition.

mod common;

use common::*;
use proptest::prelude::*;
use zpz_entropy::random::seeded;
use zpz_entropy::serial::{parse_pmf, to_canonical};
use zpz_entropy::{
    canonical_ordering, classify_regularity, decompose, layer_cake, make_pmf, mass, rearrange, renyi,
    shape_equivalent, Alpha, NonnegFn, Pmf, Regularity, Sign,
};

fn grid() -> Vec<Alpha> {
    Alpha::standard_grid()
}

fn same_entropies(f: &Pmf, g: &Pmf) -> bool {
    grid().iter().all(|a| {
        let (x, y) = (renyi(f, a), renyi(g, a));
        match a {
            Alpha::Zero | Alpha::Infinity => x == y,
            _ => close(x, y),
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn translation_keeps_every_entropy(f in pmf_strategy(), c in -20i64..=20) {
        let g = f.shift(c);
        prop_assert!(same_entropies(&f, &g));
        if let Some(h) = f.domain().half_width() {
            if c.abs() <= h {
                prop_assert_eq!(f.translate(c).unwrap(), g);
            }
        }
    }

    #[test]
    fn scaling_keeps_value_multiset(f in pmf_strategy(), a in prop_oneof![-9i64..=-1, 1i64..=9]) {
        match f.scale_index(a) {
            Ok(g) => {
                prop_assert_eq!(g.values_desc(), f.values_desc());
                prop_assert!(same_entropies(&f, &g));
            }
            Err(e) => {
                prop_assert_eq!(e, zpz_entropy::Error::ZeroCoefficient);
                prop_assert_eq!(f.domain().reduce(a), 0);
            }
        }
    }

    #[test]
    fn entries_round_trip(f in pmf_strategy()) {
        let entries: Vec<_> = f.iter().map(|(i, v)| (i, v.clone())).collect();
        prop_assert_eq!(make_pmf(f.domain(), entries).unwrap(), f.clone());
        prop_assert_eq!(parse_pmf(&to_canonical(&f)).unwrap(), f);
    }

    #[test]
    fn rearrangement_keeps_entropy_and_regularity(f in pmf_strategy()) {
        let kind = classify_regularity(&f);
        for s in [Sign::Plus, Sign::Minus] {
            let g = Pmf::try_from_fn(rearrange(&f, s).unwrap()).unwrap();
            prop_assert!(same_entropies(&f, &g));
            prop_assert_eq!(classify_regularity(&g), kind);
        }
    }

    #[test]
    fn plus_and_minus_are_mirrors(f in pmf_strategy()) {
        let plus = rearrange(&f, Sign::Plus).unwrap();
        let minus = rearrange(&f, Sign::Minus).unwrap();
        prop_assert_eq!(plus.reflect(), minus.clone());
        for (z, v) in plus.iter() {
            prop_assert_eq!(minus.value(-z), v.clone());
        }
    }

    #[test]
    fn regularity_fixes_support_parity(seed in any::<u64>(), d in domain_strategy()) {
        let f = regular_in(&mut seeded(seed), d);
        match classify_regularity(&f) {
            Regularity::Triangle => prop_assert_eq!(f.support_len() % 2, 1),
            Regularity::Square => prop_assert_eq!(f.support_len() % 2, 0),
            Regularity::Neither => prop_assert!(false, "generator produced an irregular pmf"),
        }
    }

    #[test]
    fn shape_equivalence_is_reflexive_and_symmetric(f in pmf_strategy(), seed in any::<u64>()) {
        let g = pmf_in(&mut seeded(seed), f.domain());
        prop_assert!(shape_equivalent(&f, &f).unwrap());
        prop_assert_eq!(shape_equivalent(&f, &g).unwrap(), shape_equivalent(&g, &f).unwrap());
        let ordering = canonical_ordering(&f);
        prop_assert!(ordering.is_ordering_for(&f));
        // A function built from f's own layers is always shape-equivalent to it.
        let cake = layer_cake(&f);
        let thinned = cake.sum_where(|size| size % 3 != 0);
        prop_assert!(shape_equivalent(&f, &thinned).unwrap());
        prop_assert!(ordering.is_ordering_for(&thinned));
    }

    #[test]
    fn decomposition_reconstructs_with_regular_parts(f in pmf_strategy()) {
        let d = decompose(&f);
        prop_assert_eq!(d.triangle.add(&d.square).unwrap(), f.as_fn().clone());
        prop_assert_eq!(classify_regularity(&d.triangle), Regularity::Triangle);
        prop_assert!(d.square.is_zero() || classify_regularity(&d.square) == Regularity::Square);
        prop_assert!(shape_equivalent(&d.triangle, &f).unwrap());
        prop_assert!(shape_equivalent(&d.square, &f).unwrap());
    }

    #[test]
    fn decomposition_is_unique_among_layer_splits(f in pmf_strategy()) {
        // Every way of sending layers to one part or the other: only the
        // odd/even split yields a triangle-regular plus square-regular pair.
        // The one exception is the full-group layer on Z/pZ, a constant that
        // is regular of both kinds (see the example test below).
        let cake = layer_cake(&f);
        let n = cake.layers().len();
        prop_assume!(n <= 12);
        let canonical = decompose(&f);
        let sizes: Vec<usize> = cake.layers().iter().map(|l| l.size).collect();
        let full = f.domain().modulus().map(|p| p as usize).filter(|&p| sizes.last() == Some(&p));
        let odd_but_full: Vec<usize> = sizes.iter().copied().filter(|&s| s % 2 == 1 && Some(s) != full).collect();
        for mask in 0u32..(1 << n) {
            let chosen: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| sizes[k]).collect();
            let tri = cake.sum_where(|s| chosen.contains(&s));
            let sq = cake.sum_where(|s| !chosen.contains(&s));
            let ok = classify_regularity(&tri) == Regularity::Triangle
                && (sq.is_zero() || classify_regularity(&sq) == Regularity::Square);
            if ok {
                if full.is_some() && chosen == odd_but_full {
                    let c = &cake.layers()[n - 1].coefficient;
                    let all = NonnegFn::indicator(f.domain(), f.domain().indices().unwrap()).unwrap().scale(c);
                    prop_assert_eq!(tri.add(&all).unwrap(), canonical.triangle.clone());
                } else {
                    prop_assert_eq!(&tri, &canonical.triangle);
                    prop_assert_eq!(&sq, &canonical.square);
                }
            }
        }
    }

    #[test]
    fn rearrangement_splits_over_parts(f in pmf_strategy()) {
        let d = decompose(&f);
        let plus = rearrange(&f, Sign::Plus).unwrap();
        let tri_plus = rearrange(&d.triangle, Sign::Plus).unwrap();
        let sq_plus = rearrange(&d.square, Sign::Plus).unwrap();
        prop_assert_eq!(tri_plus.add(&sq_plus).unwrap(), plus.clone());
        let of_plus = decompose(&plus);
        prop_assert_eq!(of_plus.triangle, tri_plus);
        prop_assert_eq!(of_plus.square, sq_plus);
    }
}

#[test]
fn zero_function_is_trivially_regular() {
    let z = NonnegFn::zero(zpz_entropy::Domain::cyclic(5).unwrap());
    assert_eq!(classify_regularity(&z), Regularity::Triangle);
    let d = decompose(&z);
    assert!(d.triangle.is_zero() && d.square.is_zero());
}

#[test]
fn full_group_layer_splits_two_ways_on_cyclic_groups() {
    // On Z/3Z, (6, 6, 4)/16 satisfies f+(z+1) = f-(z) for every z although
    // its support is odd, because the constant layer is shift invariant.
    // Both (4, 4, 4) + (2, 2, 0) and 0 + (6, 6, 4) are then valid
    // shape-equivalent triangle + square splits; decompose returns the first.
    let d = zpz_entropy::Domain::cyclic(3).unwrap();
    let f = make_pmf(d, [(-1, mass(6, 16)), (1, mass(6, 16)), (0, mass(4, 16))]).unwrap();
    assert_eq!(classify_regularity(&f), Regularity::Square);
    assert_eq!(f.support_len(), 3);
    let canonical = decompose(&f);
    assert!(!canonical.triangle.is_zero(), "canonical split keeps the full layer in the triangle part");
    assert_eq!(classify_regularity(&canonical.square), Regularity::Square);
    assert_eq!(canonical.square.support_len(), 2);
}
