//! Numerical properties of the Laurent pipeline against independent
//! oracles: exact recovery of random Laurent polynomials, refinement
//! stability in the grid size, scaling covariance, validity of the
//! certified tail bound, and the vanishing/growth dichotomy.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reinhardt_core::corpus::{builtin_domain, builtin_function, poly_random};
use reinhardt_core::laurent::{
    auto_tori, derivative_bound_scan, extend_eval, laurent_window, negative_part_report,
    sample_torus, HoloFunction, IndexSplit, LaurentWindow, TorusSpec,
};

fn window_on(f: &HoloFunction, radii: &[f64], grid: usize) -> LaurentWindow {
    let spec = TorusSpec::new(radii.to_vec(), grid).unwrap();
    laurent_window(&sample_torus(f, &spec).unwrap()).unwrap()
}

/// Random Laurent polynomial with support in (-8, 8)^2 and unit-box
/// complex coefficients.
fn random_laurent_polynomial(rng: &mut ChaCha8Rng) -> (Vec<([i64; 2], Complex64)>, HoloFunction) {
    let mut terms: Vec<([i64; 2], Complex64)> = Vec::new();
    for _ in 0..rng.gen_range(10..=40) {
        let alpha = [rng.gen_range(-7..=7i64), rng.gen_range(-7..=7i64)];
        let coeff = Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        if let Some(slot) = terms.iter_mut().find(|(a, _)| *a == alpha) {
            slot.1 += coeff;
        } else {
            terms.push((alpha, coeff));
        }
    }
    let eval_terms = terms.clone();
    let f = HoloFunction::new("laurent_poly", 2, move |z: &[Complex64]| {
        eval_terms
            .iter()
            .map(|([a0, a1], c)| c * z[0].powi(*a0 as i32) * z[1].powi(*a1 as i32))
            .sum()
    });
    (terms, f)
}

#[test]
fn dft_recovers_random_laurent_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let radii = [0.9, 1.1];
    for case in 0..50 {
        let (terms, f) = random_laurent_polynomial(&mut rng);
        let window = window_on(&f, &radii, 32);
        window.for_each(|alpha, d| {
            let mut expect = Complex64::new(0.0, 0.0);
            if let Some((_, c)) = terms.iter().find(|(a, _)| a == alpha) {
                expect = *c;
            }
            for (&a, &w) in alpha.iter().zip(&radii) {
                expect *= w.powi(a as i32);
            }
            assert!(
                (d - expect).norm() < 1e-12,
                "case {case}, alpha {alpha:?}: {d} vs {expect}"
            );
        });
    }
}

#[test]
fn windows_at_doubled_grid_agree_on_the_common_range() {
    let cases: [(&str, [f64; 2]); 3] = [
        ("exp_linear(1,2)", [0.3, 0.6]),
        ("poly_random(3)", [0.3, 0.6]),
        // geom needs a small radius ratio so ladder aliasing stays low
        ("geom", [0.1, 0.6]),
    ];
    for (name, radii) in cases {
        let f = builtin_function(name).unwrap().function;
        for n in [32usize, 64] {
            let coarse = window_on(&f, &radii, n);
            let fine = window_on(&f, &radii, 2 * n);
            coarse.for_each(|alpha, d| {
                let other = fine.scaled_at(alpha).unwrap();
                assert!(
                    (d - other).norm() < 1e-10,
                    "{name}, N={n}, alpha {alpha:?}: {d} vs {other}"
                );
            });
        }
    }
}

#[test]
fn scaled_coefficients_transform_covariantly_for_monomials() {
    let f = builtin_function("monomial(2,-1)").unwrap().function;
    let (w1, w2) = ([0.3, 0.6], [0.42, 0.77]);
    let a = window_on(&f, &w1, 16);
    let b = window_on(&f, &w2, 16);
    let alpha = [2i64, -1];
    let da = a.scaled_at(&alpha).unwrap();
    let db = b.scaled_at(&alpha).unwrap();
    let expect_ratio: f64 = alpha
        .iter()
        .enumerate()
        .map(|(j, &aj)| (w2[j] / w1[j]).powi(aj as i32))
        .product();
    assert!((db / da - expect_ratio).norm() < 1e-12);
    // raw coefficients agree outright
    assert!((a.coeff_at(&alpha).unwrap() - b.coeff_at(&alpha).unwrap()).norm() < 1e-12);
}

/// Partial Taylor sum from exact coefficients, the reference for tail
/// measurements.
fn true_partial_sum(f: &HoloFunction, z: &[Complex64], degree: usize) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for a0 in 0..=degree as i64 {
        for a1 in 0..=degree as i64 {
            let c = f.known_coefficient(&[a0, a1]).expect("known coefficients");
            if c.norm() > 0.0 {
                sum += c * z[0].powi(a0 as i32) * z[1].powi(a1 as i32);
            }
        }
    }
    sum
}

#[test]
fn tail_bound_dominates_the_true_tail() {
    // measuring the tail in f64 leaves summation noise of this order;
    // bounds in the meaningful regime dwarf it
    const MEASUREMENT_FLOOR: f64 = 1e-12;
    let functions = [
        builtin_function("exp_linear(1,2)").unwrap().function,
        poly_random(7).function,
        builtin_function("monomial(2,1)").unwrap().function,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for draw in 0..100 {
        let f = &functions[draw % functions.len()];
        let w2 = rng.gen_range(0.3..0.9);
        let w1 = rng.gen_range(0.15..0.85) * w2;
        let window = window_on(f, &[w1, w2], 64);
        let degree = rng.gen_range(3..=12usize);
        // keep at least one ratio >= 0.3 so the bound is measurable
        let t0 = rng.gen_range(0.3..0.95);
        let t1 = rng.gen_range(0.05..0.95);
        let z = [
            Complex64::from_polar(t0 * w1, rng.gen_range(0.0..std::f64::consts::TAU)),
            Complex64::from_polar(t1 * w2, rng.gen_range(0.0..std::f64::consts::TAU)),
        ];
        let result = extend_eval(&window, &z, degree).unwrap();
        let actual_tail = (f.eval(&z) - true_partial_sum(f, &z, degree)).norm();
        let scale = 1.0 + f.eval(&z).norm();
        assert!(
            actual_tail <= result.tail_bound + MEASUREMENT_FLOOR * scale,
            "draw {draw} ({}): tail {actual_tail} > bound {}",
            f.name(),
            result.tail_bound
        );
        // the DFT value also sits within the bound plus noise
        let value_error = (f.eval(&z) - result.value).norm();
        assert!(
            value_error <= result.tail_bound + MEASUREMENT_FLOOR * scale,
            "draw {draw} ({}): value error {value_error} > bound {}",
            f.name(),
            result.tail_bound
        );
    }
}

#[test]
fn smooth_functions_pass_clean_on_origin_boundary_domains() {
    let domains = ["hartogs", "H(2,-1)", "H(1,-2)", "H(3,-2)"];
    let functions = [
        "exp_linear(1,2)",
        "monomial(2,1)",
        "poly_random(1)",
        "poly_random(2)",
    ];
    for dname in domains {
        let named = builtin_domain(dname).unwrap();
        assert!(named.domain.origin_on_boundary());
        let tori = auto_tori(&named.domain, 64, 4, 1e-4).unwrap();
        assert!(!tori.is_empty());
        for fname in functions {
            let f = builtin_function(fname).unwrap().function;
            assert_eq!(f.smooth_up_to_boundary(), Some(true));
            let windows: Vec<LaurentWindow> = tori
                .iter()
                .map(|spec| laurent_window(&sample_torus(&f, spec).unwrap()).unwrap())
                .collect();
            let report = negative_part_report(&windows, 1e-8);
            assert!(
                report.is_clean(),
                "{fname} on {dname}: max negative {}",
                report.max_negative_magnitude
            );
        }
    }
}

#[test]
fn obstructions_grow_like_the_inverse_radius() {
    let tori: Vec<TorusSpec> = [0.6, 0.06, 0.006]
        .iter()
        .map(|&w2| TorusSpec::new(vec![w2 / 2.0, w2], 64).unwrap())
        .collect();
    for (name, alpha) in [("ratio", [1i64, -1]), ("geom", [0i64, -1])] {
        let f = builtin_function(name).unwrap().function;
        let report = derivative_bound_scan(&f, &IndexSplit::from_alpha(&alpha), &tori).unwrap();
        for (entry, &w2) in report.entries.iter().zip(&[0.6, 0.06, 0.006]) {
            let law = 1.0 / w2;
            assert!(
                (entry.statistic - law).abs() <= 0.01 * law,
                "{name} at w2={w2}: {} vs {law}",
                entry.statistic
            );
        }
    }
}

#[test]
fn obstructed_catalog_functions_are_flagged() {
    let hartogs = builtin_domain("hartogs").unwrap().domain;
    let tori = auto_tori(&hartogs, 64, 4, 1e-4).unwrap();
    for name in ["ratio", "geom", "monomial(2,-1)"] {
        let f = builtin_function(name).unwrap().function;
        assert_eq!(f.smooth_up_to_boundary(), Some(false));
        let windows: Vec<LaurentWindow> = tori
            .iter()
            .map(|spec| laurent_window(&sample_torus(&f, spec).unwrap()).unwrap())
            .collect();
        let report = negative_part_report(&windows, 1e-8);
        assert!(!report.is_clean(), "{name} must be obstructed");
    }
}
