//! The standard checks. Each returns the maximum residual over its grid.

use crate::error::Result;
use crate::hermite::{
    apply_m, apply_p, bvdhp, cosine_integral_x, cosine_integral_y, diff_x_closed, diff_y_closed,
    heat_residual, initial_value, integral_x_identity, integral_y_identity, inverse_expansion,
    monomial_construct, ode_residual, operational_construct, recurrence_next, rodrigues, RodriguesForm,
};
use crate::numeric::eval::{classical_bivariate, classical_hermite};
use crate::numeric::quad::integrate;
use crate::numeric::{
    dhp_norm, eval_bvdhp, eval_dhp, even_gf, even_gf_printed_complex, even_series, gaussian_quartic, gf_closed, gf_series,
    mellin_gauss, nodhf, ortho_dhp, partial_norm, partial_ortho, scaling_checks, GFPoint, Integral, NodhfKernel,
    QuadratureConfig,
};
use crate::param::DegenerateParam;
use crate::poly::{ExactPoly, Var};
use crate::umbral::{umbral_expand, umbral_gf_coefficient};
use crate::Variant;

use super::heat::{heat_fd_residual, HeatGrid};
use super::{CheckSpec, Grid, Outcome, Status};

pub(crate) const NUMERIC_TOL: f64 = 1e-8;
pub(crate) const HEAT_TOL: f64 = 1e-3;

const LAMBDAS: [f64; 4] = [-0.5, 0.5, 1.0, 2.0];
const POINTS: [f64; 5] = [-2.0, -1.0, 0.5, 1.0, 2.0];

fn range(lo: u32, hi: u32) -> Vec<f64> {
    (lo..=hi).map(f64::from).collect()
}

fn scaled(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

fn relative(value: f64, reference: f64) -> f64 {
    ((value - reference) / reference).abs()
}

/// Running maximum that keeps NaN.
fn worst(acc: f64, r: f64) -> f64 {
    if acc.is_nan() || r.is_nan() {
        f64::NAN
    } else {
        acc.max(r)
    }
}

fn exact_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("n", range(0, 25))]
}

fn exact_all(g: &Grid, f: impl Fn(u32) -> Result<bool>) -> Result<Outcome> {
    for n in g.indices("n") {
        if !f(n)? {
            return Ok(Outcome::exact(false));
        }
    }
    Ok(Outcome::exact(true))
}

fn xy_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![
        ("n", range(0, 10)),
        ("x", POINTS.to_vec()),
        ("y", POINTS.to_vec()),
        ("lambda", LAMBDAS.to_vec()),
    ]
}

fn generating_function(g: &Grid, _: Variant) -> Result<Outcome> {
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for &t in g.values("t") {
            for &x in g.values("x") {
                for &y in g.values("y") {
                    let pt = GFPoint::new(t, x, y, p);
                    r = worst(r, (gf_series(&pt, 40) - gf_closed(&pt)).abs());
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn series_vs_operational(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok(operational_construct(n) == bvdhp(n)))
}

fn series_vs_monomial(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok(monomial_construct(n) == bvdhp(n)))
}

fn series_vs_umbral(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| {
        let h = bvdhp(n);
        Ok(umbral_expand(n) == h && umbral_gf_coefficient(n) == h)
    })
}

fn heat_equation_exact(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok(heat_residual(n).is_zero()))
}

fn initial_condition(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok(initial_value(n) == ExactPoly::monomial(1, n, 0, n)))
}

fn diff_x(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok((0..=5).all(|r| diff_x_closed(n, r) == bvdhp(n).diff_n(Var::X, r))))
}

fn diff_y(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok((0..=5).all(|r| diff_y_closed(n, r) == bvdhp(n).diff_n(Var::Y, r))))
}

fn recurrence(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok(recurrence_next(n) == bvdhp(n + 1)))
}

fn commutator(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| {
        let h = bvdhp(n);
        let pm = apply_p(&apply_m(&h))?;
        let mp = apply_m(&apply_p(&h)?);
        Ok(&pm - &mp == h)
    })
}

fn ode(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok(ode_residual(n).is_zero()))
}

fn inverse(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| Ok(inverse_expansion(n)? == ExactPoly::monomial(1, n, 0, 0)))
}

fn rodrigues_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("n", range(0, 10))]
}

fn rodrigues_check(g: &Grid, variant: Variant) -> Result<Outcome> {
    let mut ill = false;
    for n in g.indices("n") {
        match rodrigues(n, variant) {
            RodriguesForm::Poly(p) if p != bvdhp(n) => return Ok(Outcome::exact(false)),
            RodriguesForm::Poly(_) => {}
            RodriguesForm::IllDefined => ill = true,
        }
    }
    Ok(if ill {
        Outcome::forced(Status::IllDefined)
    } else {
        Outcome::exact(true)
    })
}

fn integral_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("n", range(0, 15))]
}

fn integral_x(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| {
        let (l, r) = integral_x_identity(n);
        Ok(l == r)
    })
}

fn integral_y(g: &Grid, _: Variant) -> Result<Outcome> {
    exact_all(g, |n| {
        let (l, r) = integral_y_identity(n);
        Ok(l == r)
    })
}

fn h(n: u32, x: f64, y: f64, p: &DegenerateParam) -> f64 {
    eval_bvdhp(n, x, y, p).unwrap_or(f64::NAN)
}

fn cosine_x(g: &Grid, variant: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for n in g.indices("n") {
            for &x0 in g.values("x") {
                for &y in g.values("y") {
                    let quad = integrate(|z| h(n, z, y, &p) * z.cos(), 0.0, x0, &cfg)?.value;
                    r = worst(r, scaled(cosine_integral_x(n, x0, y, &p, variant), quad));
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn cosine_y(g: &Grid, variant: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for n in g.indices("n") {
            for &x in g.values("x") {
                for &y0 in g.values("y") {
                    let quad = integrate(|e| h(n, x, e, &p) * e.cos(), 0.0, y0, &cfg)?.value;
                    r = worst(r, scaled(cosine_integral_y(n, x, y0, &p, variant), quad));
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn scaling(g: &Grid, _: Variant) -> Result<Outcome> {
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for n in g.indices("n") {
            for &x in g.values("x") {
                for &y in g.values("y") {
                    r = worst(r, scaling_checks(n, x, y, &p)?);
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn mellin_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![
        ("mu", vec![1.0, 2.0, 3.0, 4.0, 5.5]),
        ("y", vec![0.5, 1.0, 2.0]),
        ("lambda", LAMBDAS.to_vec()),
    ]
}

fn mellin(g: &Grid, variant: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for &mu in g.values("mu") {
            for &y in g.values("y") {
                let (quad, rhs) = mellin_gauss(mu, y, &p, variant, &cfg)?;
                r = worst(r, relative(quad, rhs));
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn even_gf_axes(variant: Variant) -> Vec<(&'static str, Vec<f64>)> {
    match variant {
        Variant::Corrected => vec![
            ("t", vec![-0.05, 0.02, 0.05]),
            ("x", POINTS.to_vec()),
            ("y", POINTS.to_vec()),
            ("lambda", LAMBDAS.to_vec()),
        ],
        Variant::Paper => vec![
            ("t", vec![0.05]),
            ("x", vec![1.0]),
            ("y", vec![1.0]),
            ("lambda", vec![1.0]),
        ],
    }
}

/// Largest `|4tyL|` at which the corrected closed form is compared.
const EVEN_GF_RADIUS: f64 = 0.3;

fn even_gf_check(g: &Grid, variant: Variant) -> Result<Outcome> {
    let mut r: f64 = 0.0;
    let mut compared = 0;
    for p in g.params()? {
        for &t in g.values("t") {
            for &x in g.values("x") {
                for &y in g.values("y") {
                    let pt = GFPoint::new(t, x, y, p);
                    match variant {
                        Variant::Corrected => {
                            if pt.even_radius().abs() > EVEN_GF_RADIUS {
                                continue;
                            }
                            let (closed, series) = even_gf(&pt, variant, 30)?;
                            r = worst(r, (closed - series).abs());
                        }
                        Variant::Paper => {
                            // principal branch, since the real form leaves its domain for y > 0
                            let series = even_series(&pt, 30)?;
                            r = worst(r, (even_gf_printed_complex(&pt) - series).norm());
                        }
                    }
                    compared += 1;
                }
            }
        }
    }
    if compared == 0 {
        return Err(crate::Error::Domain(format!(
            "no grid point satisfies |4tyL| <= {EVEN_GF_RADIUS}"
        )));
    }
    Ok(Outcome::residual(r))
}

fn ortho_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("n", range(0, 8)), ("m", range(0, 8)), ("lambda", LAMBDAS.to_vec())]
}

fn ortho_norm_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("n", range(0, 8)), ("lambda", LAMBDAS.to_vec())]
}

fn ortho_offdiag(g: &Grid, _: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for n in g.indices("n") {
            for m in g.indices("m") {
                if n == m {
                    continue;
                }
                let v = ortho_dhp(n, m, &p, &cfg)?.value;
                r = worst(r, v.abs() / (dhp_norm(n, &p) * dhp_norm(m, &p)).sqrt());
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn ortho_norm(g: &Grid, _: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for n in g.indices("n") {
            let v = ortho_dhp(n, n, &p, &cfg)?.value;
            r = worst(r, relative(v, dhp_norm(n, &p)));
        }
    }
    Ok(Outcome::residual(r))
}

fn partial_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![
        ("n", range(0, 6)),
        ("m", range(0, 6)),
        ("y", vec![-1.0, -2.0]),
        ("lambda", LAMBDAS.to_vec()),
    ]
}

fn partial_norm_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("n", range(0, 6)), ("y", vec![-1.0, -2.0]), ("lambda", LAMBDAS.to_vec())]
}

fn partial_offdiag(g: &Grid, variant: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for &y in g.values("y") {
            for n in g.indices("n") {
                for m in g.indices("m") {
                    if n == m {
                        continue;
                    }
                    match partial_ortho(n, m, y, &p, variant, &cfg)? {
                        Integral::Converged(q) => {
                            let scale = (partial_norm(n, y, &p) * partial_norm(m, y, &p)).sqrt();
                            r = worst(r, q.value.abs() / scale);
                        }
                        Integral::Divergent { .. } => return Ok(Outcome::forced(Status::Divergent)),
                    }
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn partial_diag(g: &Grid, variant: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for &y in g.values("y") {
            for n in g.indices("n") {
                match partial_ortho(n, n, y, &p, variant, &cfg)? {
                    Integral::Converged(q) => r = worst(r, relative(q.value, partial_norm(n, y, &p))),
                    Integral::Divergent { .. } => return Ok(Outcome::forced(Status::Divergent)),
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn kernel(variant: Variant) -> NodhfKernel {
    match variant {
        Variant::Corrected => NodhfKernel::LConsistent,
        Variant::Paper => NodhfKernel::Paper,
    }
}

fn nodhf_initial_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![
        ("mu", vec![0.5, 1.0, 2.0]),
        ("x", vec![0.5, 1.0, 2.0]),
        ("lambda", LAMBDAS.to_vec()),
    ]
}

fn nodhf_initial(g: &Grid, variant: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for &mu in g.values("mu") {
            for &x in g.values("x") {
                let v = nodhf(mu, x, 0.0, &p, kernel(variant), &cfg)?;
                r = worst(r, relative(v, (x * p.l()).powf(-mu)));
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn nodhf_derivative_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![
        ("mu", vec![0.5, 1.0, 1.5]),
        ("x", vec![1.0]),
        ("y", vec![1.0]),
        ("lambda", vec![1.0]),
    ]
}

/// Step of the central difference in the derivative-descent check.
const DESCENT_STEP: f64 = 1e-4;

fn nodhf_derivative(g: &Grid, _: Variant) -> Result<Outcome> {
    // tight quadrature so that the difference quotient is not dominated by noise
    let cfg = QuadratureConfig::default().with_rel_tol(1e-12);
    let k = NodhfKernel::LConsistent;
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for &mu in g.values("mu") {
            for &x in g.values("x") {
                for &y in g.values("y") {
                    let h = DESCENT_STEP;
                    let fd = (nodhf(mu, x + h, y, &p, k, &cfg)? - nodhf(mu, x - h, y, &p, k, &cfg)?) / (2.0 * h);
                    let expect = -mu * p.l() * nodhf(mu + 1.0, x, y, &p, k, &cfg)?;
                    r = worst(r, relative(fd, expect));
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn quartic_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("a", vec![1.0, 2.0]), ("b", vec![-1.0, -0.5]), ("lambda", vec![0.5, 1.0])]
}

fn quartic(g: &Grid, _: Variant) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for &a in g.values("a") {
            for &b in g.values("b") {
                let (q, via) = gaussian_quartic(a, b, &p, &cfg)?;
                r = worst(r, relative(q, via));
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn heat_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![("n", vec![4.0]), ("lambda", vec![1.0])]
}

fn heat_fd(g: &Grid, _: Variant) -> Result<Outcome> {
    let mut r: f64 = 0.0;
    for p in g.params()? {
        let grid = HeatGrid::stable(-5.0, 5.0, 0.01, 0.1, &p);
        for n in g.indices("n") {
            r = worst(r, heat_fd_residual(n, &p, &grid)?);
        }
    }
    Ok(Outcome::residual(r))
}

/// `λ` used for the classical-limit regression.
const CLASSICAL_LAMBDA: f64 = 1e-8;

fn classical_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![
        ("n", range(0, 10)),
        ("x", POINTS.to_vec()),
        ("y", POINTS.to_vec()),
        ("lambda", vec![CLASSICAL_LAMBDA]),
    ]
}

fn classical_limit(g: &Grid, _: Variant) -> Result<Outcome> {
    let mut r: f64 = 0.0;
    for p in g.params()? {
        for n in g.indices("n") {
            for &x in g.values("x") {
                r = worst(r, scaled(eval_dhp(n, x, &p)?, classical_hermite(n, x)));
                for &y in g.values("y") {
                    r = worst(r, scaled(eval_bvdhp(n, x, y, &p)?, classical_bivariate(n, x, y)));
                }
            }
        }
    }
    Ok(Outcome::residual(r))
}

fn gf_axes(_: Variant) -> Vec<(&'static str, Vec<f64>)> {
    vec![
        ("t", vec![-0.2, -0.1, 0.1, 0.2]),
        ("x", POINTS.to_vec()),
        ("y", POINTS.to_vec()),
        ("lambda", LAMBDAS.to_vec()),
    ]
}

pub(crate) fn standard() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("generating_function", false, 1e-10, gf_axes, generating_function),
        CheckSpec::new("series_vs_operational", false, 0.0, exact_axes, series_vs_operational),
        CheckSpec::new("series_vs_monomial", false, 0.0, exact_axes, series_vs_monomial),
        CheckSpec::new("series_vs_umbral", false, 0.0, exact_axes, series_vs_umbral),
        CheckSpec::new("heat_equation_exact", false, 0.0, exact_axes, heat_equation_exact),
        CheckSpec::new("initial_condition", false, 0.0, exact_axes, initial_condition),
        CheckSpec::new("diff_x_closed", false, 0.0, exact_axes, diff_x),
        CheckSpec::new("diff_y_closed", false, 0.0, exact_axes, diff_y),
        CheckSpec::new("recurrence", false, 0.0, exact_axes, recurrence),
        CheckSpec::new("commutator_PM", false, 0.0, exact_axes, commutator),
        CheckSpec::new("ode", false, 0.0, exact_axes, ode),
        CheckSpec::new("inverse_expansion", false, 0.0, exact_axes, inverse),
        CheckSpec::new("rodrigues", true, 0.0, rodrigues_axes, rodrigues_check),
        CheckSpec::new("integral_x", false, 0.0, integral_axes, integral_x),
        CheckSpec::new("integral_y", false, 0.0, integral_axes, integral_y),
        CheckSpec::new("cosine_integral_x", true, NUMERIC_TOL, xy_axes, cosine_x),
        CheckSpec::new("cosine_integral_y", true, NUMERIC_TOL, xy_axes, cosine_y),
        CheckSpec::new("scaling_relations", false, NUMERIC_TOL, xy_axes, scaling),
        CheckSpec::new("mellin_gauss", true, 1e-9, mellin_axes, mellin),
        CheckSpec::new("even_gf", true, NUMERIC_TOL, even_gf_axes, even_gf_check),
        CheckSpec::new("ortho_dhp_offdiag", false, NUMERIC_TOL, ortho_axes, ortho_offdiag),
        CheckSpec::new("ortho_dhp_norm", false, NUMERIC_TOL, ortho_norm_axes, ortho_norm),
        CheckSpec::new("partial_ortho_offdiag", true, NUMERIC_TOL, partial_axes, partial_offdiag),
        CheckSpec::new("partial_ortho_norm", true, NUMERIC_TOL, partial_norm_axes, partial_diag),
        CheckSpec::new("nodhf_initial", true, NUMERIC_TOL, nodhf_initial_axes, nodhf_initial),
        CheckSpec::new("nodhf_derivative", false, 1e-5, nodhf_derivative_axes, nodhf_derivative),
        CheckSpec::new("gaussian_quartic", false, NUMERIC_TOL, quartic_axes, quartic),
        CheckSpec::new("heat_fd", false, HEAT_TOL, heat_axes, heat_fd),
        CheckSpec::new("classical_limit", false, 1e-6, classical_axes, classical_limit),
    ]
}
