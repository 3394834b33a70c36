use proptest::prelude::*;

use cmpp::bijection::{advance, base_partition, retreat, unit, VectorPartition};
use cmpp::diagram::{max_downward_path_sum, pairwise_admissible, CmppPartition, DiagramConfig, Part, Variant};
use cmpp::qseries::{
    gaussian_binomial, poly_inverse_unit, poly_mul_truncated, series_for_family, HeightProfile, QPolynomial,
    SeriesFamily,
};

fn variant() -> impl Strategy<Value = Variant> {
    prop::sample::select(vec![Variant::Standard, Variant::Star, Variant::StarStar, Variant::Reflected])
}

fn family() -> impl Strategy<Value = SeriesFamily> {
    prop::sample::select(vec![
        SeriesFamily::Main,
        SeriesFamily::Star,
        SeriesFamily::StarStar,
        SeriesFamily::Ag,
        SeriesFamily::Bressoud,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_two_sided(tail in prop::collection::vec(-5i64..=5, 0..10), order in 0usize..14) {
        let mut coeffs = vec![1i64];
        coeffs.extend(tail);
        let a = QPolynomial::from_coeffs(coeffs, order);
        let b = poly_inverse_unit(&a).unwrap();
        prop_assert_eq!(poly_mul_truncated(&a, &b).unwrap(), QPolynomial::one(order));
        prop_assert_eq!(poly_mul_truncated(&b, &a).unwrap(), QPolynomial::one(order));
    }

    #[test]
    fn gaussian_symmetry_and_degree(a in 0i64..12, b in 0i64..12) {
        prop_assume!(b <= a);
        let order = 80;
        let g = gaussian_binomial(a, b, order).unwrap();
        prop_assert_eq!(&g, &gaussian_binomial(a, a - b, order).unwrap());
        prop_assert_eq!(g.degree(), Some((b * (a - b)) as usize));
        // value at q = 1 is the ordinary binomial coefficient
        let total: num_bigint::BigInt = g.coeffs().iter().sum();
        let mut binom = num_bigint::BigInt::from(1);
        for t in 0..b {
            binom = binom * (a - t) / (t + 1);
        }
        prop_assert_eq!(total, binom);
    }

    #[test]
    fn truncation_is_monotone(fam in family(), ell in 1usize..=3, idx in 0usize..=4, q in 0usize..16, z in 0usize..6, dq in 0usize..8, dz in 0usize..4) {
        let (lo, hi) = match fam {
            SeriesFamily::Ag | SeriesFamily::Bressoud => (1, ell + 1),
            _ => (0, ell),
        };
        prop_assume!(idx >= lo && idx <= hi);
        let small = series_for_family(fam, ell, idx, q, z).unwrap();
        let big = series_for_family(fam, ell, idx, q + dq, z + dz).unwrap();
        prop_assert!(big.is_nonnegative());
        for j in 0..=z {
            for n in 0..=q {
                prop_assert_eq!(small.coeff(j, n), big.coeff(j, n));
            }
        }
    }

    #[test]
    fn dp_agrees_with_pairwise(v in variant(), ell in 1usize..=3, i in 0usize..=3, raw in prop::collection::btree_set((1usize..24, 0usize..3), 0..6)) {
        prop_assume!(i <= ell);
        let config = DiagramConfig::single(ell, i, v).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        let parts: Vec<Part> = raw
            .into_iter()
            .map(|(m, a)| Part::new(m, a % ell))
            .filter(|p| config.part_is_valid(*p) && seen.insert(*p))
            .collect();
        let p = CmppPartition::new_unchecked(config.clone(), parts);
        let grid = p.frequency_grid();
        prop_assert_eq!(max_downward_path_sum(&config, &grid) <= 1, pairwise_admissible(&config, &p));
        prop_assert_eq!(grid.weight(), p.weight());
        prop_assert_eq!(grid.length(), p.len());
    }

    #[test]
    fn advance_then_retreat(v in variant(), ell in 1usize..=3, i in 0usize..=3, seed in prop::collection::vec(prop::collection::vec(0usize..=4, 0..3), 3)) {
        prop_assume!(i <= ell);
        let config = DiagramConfig::single(ell, i, v).unwrap();
        let components: Vec<Vec<usize>> = seed
            .into_iter()
            .take(ell)
            .map(|mut c| { c.sort(); c })
            .collect();
        let vector = VectorPartition::new(components).unwrap();
        let profile = vector.shape();
        let base = base_partition(&config, &profile).unwrap();
        let lambda = advance(&base, &vector).unwrap();
        let expected: usize = base.weight()
            + vector
                .components()
                .iter()
                .enumerate()
                .map(|(s, c)| unit(v, ell, s) * c.iter().sum::<usize>())
                .sum::<usize>();
        prop_assert_eq!(lambda.weight(), expected);
        let d = retreat(&lambda).unwrap();
        prop_assert_eq!(&d.base, &base);
        prop_assert_eq!(&d.vector, &vector);
        prop_assert_eq!(d.profile, profile);
    }

    #[test]
    fn base_weight_is_quadratic_plus_linear(ell in 1usize..=3, i in 0usize..=3, n in prop::collection::vec(0usize..=2, 3)) {
        prop_assume!(i <= ell);
        let profile = HeightProfile::new(n.into_iter().take(ell).collect());
        let config = DiagramConfig::single(ell, i, Variant::Standard).unwrap();
        let base = base_partition(&config, &profile).unwrap();
        prop_assert!(base.weight() >= profile.quadratic());
        prop_assert_eq!(base.len(), profile.total_parts());
    }
}
