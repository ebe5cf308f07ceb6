use proptest::prelude::*;
use sl3_fusion::closedform::{graded_decomposition_direct, kernel_summands, reduce_plus};
use sl3_fusion::oracle::EvaluationParams;
use sl3_fusion::*;

fn weight(max: u32) -> impl Strategy<Value = DominantWeight> {
    (0..=max, 0..=max).prop_map(|(a, b)| DominantWeight::new(a, b))
}

proptest! {
    #[test]
    fn dimension_identity(l in weight(14), m in weight(14)) {
        let d = graded_character_closed(l, m);
        prop_assert_eq!(d.dimension(), weyl_dim(l) * weyl_dim(m));
        prop_assert_eq!(dimension_via_filtration(l, m), weyl_dim(l) * weyl_dim(m));
    }

    #[test]
    fn specializes_to_tensor_product(l in weight(9), m in weight(9)) {
        let t = tensor_decompose(l, m).unwrap();
        let d = graded_character_closed(l, m);
        for (nu, p) in d.summands() {
            prop_assert_eq!(t.get(nu).copied().unwrap_or(0), p.eval_at_one());
        }
        prop_assert_eq!(t.values().sum::<u64>(), d.summands().values().map(|p| p.eval_at_one()).sum::<u64>());
    }

    #[test]
    fn direct_families_match_recursion(l in weight(10), m in weight(10)) {
        prop_assert_eq!(graded_decomposition_direct(l, m), graded_character_closed(l, m));
    }

    #[test]
    fn symmetric_and_involution_equivariant(l in weight(10), m in weight(10)) {
        let d = graded_character_closed(l, m);
        prop_assert_eq!(&graded_character_closed(m, l), &d);
        prop_assert_eq!(graded_character_closed(l.involution(), m.involution()), d.involuted());
    }

    #[test]
    fn top_grade_and_bound(l in weight(10), m in weight(10)) {
        let d = graded_character_closed(l, m);
        let top = DominantWeight::try_from(l.weight() + m.weight()).unwrap();
        prop_assert_eq!(d.multiplicity(top), qseries::QPolynomial::one());
        prop_assert!(d.max_grade().unwrap() <= l.height().min(m.height()) as usize);
    }

    #[test]
    fn one_reduction_step_splits_the_dimension(l in weight(10), m in weight(10)) {
        let n = normalize_pair(l, m);
        prop_assume!(!n.mu.is_zero());
        let (l2, m2) = reduce_plus(n.lambda, n.mu).unwrap();
        let k = kernel_summands(n.lambda, n.mu).unwrap();
        let kernel: u64 = k.summands.iter().map(|s| s.mult * weyl_dim(DominantWeight::try_from(s.hw).unwrap())).sum::<u64>()
            + k.residual.map_or(0, |r| weyl_dim(r.lambda) * weyl_dim(r.mu));
        prop_assert_eq!(weyl_dim(l2) * weyl_dim(m2) + kernel, weyl_dim(l) * weyl_dim(m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_mass_and_z_independence(l in weight(2), m in weight(2), z1 in -4i64..4, dz in 1i64..5) {
        let z = EvaluationParams::from_integers(z1, z1 + dz).unwrap();
        let g = fusion_graded_character(l, m, &z).unwrap();
        prop_assert_eq!(g.mass(), weyl_dim(l) * weyl_dim(m));
        prop_assert_eq!(g, fusion_graded_character(l, m, &EvaluationParams::default()).unwrap());
    }
}
