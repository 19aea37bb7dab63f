use degherm::numeric::{
    classical_bivariate, classical_hermite, eval_bvdhp, eval_dhp, even_gf, gf_closed, gf_series, nodhf, ortho_dhp,
    partial_ortho, GFPoint, NodhfKernel, QuadratureConfig,
};
use degherm::{bvdhp, make_param, Variant};
use proptest::prelude::*;

fn lambda() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![-0.5, 0.5, 1.0, 2.0])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gf_series_matches_closed(t in -0.2f64..=0.2, x in -2f64..=2.0, y in -2f64..=2.0, lam in lambda()) {
        let pt = GFPoint::new(t, x, y, make_param(lam).unwrap());
        prop_assert!((gf_series(&pt, 40) - gf_closed(&pt)).abs() <= 1e-10);
    }

    #[test]
    fn even_gf_within_radius(s in -1f64..=1.0, x in -2f64..=2.0, y in -2f64..=2.0, lam in lambda()) {
        let p = make_param(lam).unwrap();
        // largest |t| <= 0.2 with |4tyL| <= 0.3
        let t_max = (0.3 / (4.0 * y.abs() * p.l())).min(0.2);
        let pt = GFPoint::new(s * t_max, x, y, p);
        prop_assert!(pt.even_radius().abs() <= 0.3 + 1e-15);
        let (closed, series) = even_gf(&pt, Variant::Corrected, 30).unwrap();
        prop_assert!((closed - series).abs() <= 1e-8, "{closed} vs {series}");
    }

    #[test]
    fn recurrence_matches_exact(n in 0u32..=25, x in -10f64..=10.0, y in -10f64..=10.0, lam in lambda()) {
        let p = make_param(lam).unwrap();
        let a = eval_bvdhp(n, x, y, &p).unwrap();
        let b = bvdhp(n).eval(&p, x, y).unwrap();
        // cancellation makes plain relative error meaningless near roots;
        // compare against the evaluation at |x|, |y| which bounds every term
        let bound = bvdhp(n).eval(&p, x.abs(), y.abs()).unwrap().abs();
        prop_assert!((a - b).abs() <= 1e-11 * bound.max(1.0), "{a} vs {b}");
    }

    #[test]
    fn classical_limit(n in 0u32..=10, x in -2f64..=2.0, y in -2f64..=2.0) {
        let p = make_param(1e-8).unwrap();
        // near a root the value itself is no scale; the sum of term magnitudes is
        let a = eval_bvdhp(n, x, y, &p).unwrap();
        let b = classical_bivariate(n, x, y);
        let bound = classical_bivariate(n, x.abs(), y.abs());
        prop_assert!((a - b).abs() <= 1e-6 * bound.max(1.0), "{a} vs {b}");
        let a = eval_dhp(n, x, &p).unwrap();
        let b = classical_hermite(n, x);
        let bound = classical_bivariate(n, 2.0 * x.abs(), 1.0);
        prop_assert!((a - b).abs() <= 1e-6 * bound.max(1.0), "{a} vs {b}");
    }

    #[test]
    fn nodhf_initial_value(mu in 0.3f64..=3.0, x in 0.2f64..=3.0, lam in lambda()) {
        let p = make_param(lam).unwrap();
        let v = nodhf(mu, x, 0.0, &p, NodhfKernel::LConsistent, &QuadratureConfig::default()).unwrap();
        let expect = (x * p.l()).powf(-mu);
        prop_assert!(((v - expect) / expect).abs() <= 1e-8);
    }
}

#[test]
fn classical_h3() {
    let p = make_param(1e-8).unwrap();
    let v = eval_dhp(3, 1.0, &p).unwrap();
    assert!((v + 4.0).abs() < 4e-6);
    for x in [-1.5, 0.3, 2.0] {
        let v = eval_dhp(3, x, &p).unwrap();
        let expect = 8.0 * x * x * x - 12.0 * x;
        assert!((v - expect).abs() <= 1e-6 * expect.abs().max(1.0));
    }
}

#[test]
fn quadrature_self_consistency() {
    let loose = QuadratureConfig::default();
    let tight = loose.with_rel_tol(loose.rel_tol / 2.0);
    for lam in [-0.5, 0.5, 1.0, 2.0] {
        let p = make_param(lam).unwrap();
        for (n, m) in [(0, 0), (2, 4), (3, 3), (5, 7), (8, 8)] {
            let a = ortho_dhp(n, m, &p, &loose).unwrap();
            let b = ortho_dhp(n, m, &p, &tight).unwrap();
            assert!((a.value - b.value).abs() <= a.abs_error.max(loose.abs_tol), "n={n} m={m}");
        }
        for (n, m) in [(0, 0), (1, 3), (4, 4)] {
            for variant_y in [-1.0, -2.0] {
                let a = partial_ortho(n, m, variant_y, &p, Variant::Corrected, &loose).unwrap();
                let b = partial_ortho(n, m, variant_y, &p, Variant::Corrected, &tight).unwrap();
                let (degherm::Integral::Converged(a), degherm::Integral::Converged(b)) = (a, b) else {
                    panic!("corrected weight must converge");
                };
                assert!((a.value - b.value).abs() <= a.abs_error.max(loose.abs_tol));
            }
        }
    }
}
