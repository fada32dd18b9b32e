use circmat_core::matrix_op::{
    lomp_family, lomp_inverse_residual, matrix_poly_from_sof, matrix_poly_recurrence,
};
use circmat_core::sof::{gram_block, vsof_gram};
use circmat_core::*;
use proptest::prelude::*;

fn arb_head() -> impl Strategy<Value = SchurSequence> {
    prop::collection::vec((0.0..0.8f64, 0.0..std::f64::consts::TAU), 1..6).prop_map(|v| {
        let head = v
            .into_iter()
            .map(|(r, t)| Complex64::from_polar(r, t))
            .collect();
        SchurSequence::with_unit_density(head).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sof_and_recurrence_routes_agree(s in arb_head()) {
        let rec = matrix_poly_recurrence(&s, 10);
        for (n, v) in vsof_family(&s, 10).iter().enumerate() {
            let direct = matrix_poly_from_sof(v).unwrap();
            prop_assert!(direct.relative_diff(&rec[n]) < 1e-10);
        }
        let p = lomp_family(&s, &rec);
        for n in 0..p.len() {
            prop_assert!(lomp_inverse_residual(&s, &rec, &p, n) < 1e-12);
        }
    }

    #[test]
    fn bernstein_szego_gram_is_block_diagonal(s in arb_head()) {
        let m = bernstein_szego_resolved(&s, DEFAULT_NODES, 1e-13).unwrap();
        let gram = vsof_gram(&vsof_family(&s, 5), &m);
        for (n, row) in gram.iter().enumerate() {
            let c = gram_block(&s, n);
            for (k, g) in row.iter().enumerate() {
                let scale = c.max_abs().max(gram_block(&s, k).max_abs());
                let expect = if n == k { c.to_complex() } else { CMat2::zero() };
                prop_assert!((*g - expect).max_abs() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn associated_measure_is_positive(s in arb_head()) {
        let m = bernstein_szego_measure(&s, 1024).unwrap();
        prop_assert!(positivity_check(&associated_matrix_measure(&m)).positive);
    }

    #[test]
    fn standard_lonp_is_orthonormal(s in arb_head()) {
        let m = bernstein_szego_resolved(&s, DEFAULT_NODES, 1e-13).unwrap();
        let omega = associated_matrix_measure(&m);
        let fams = matrix_families(&s, 6).unwrap();
        for q in &fams.q {
            let g = circmat_core::measure::matrix_inner(q, q, &omega);
            prop_assert!((g - Mat2::identity()).max_abs() < 1e-9);
        }
    }
}
