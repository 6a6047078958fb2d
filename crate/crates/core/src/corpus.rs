//! Built-in domains and test functions with known Laurent data.
//!
//! Domains: the Hartogs triangle, the unit polydisc, generalized
//! triangles `H(p,q) = {z in D^n : |z^(p,q)| < 1}` for mixed-sign integer
//! exponents, and a nonconvex union of two lobes. Functions: monomials,
//! exponentials of linear forms, the ratio `z1/z2`, the geometric
//! obstruction `1/(z2 - z1)` with its full ladder of negative indices,
//! and seeded random polynomials. Every function carries exact Laurent
//! coefficients, so oracle tests can compare FFT output against truth.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::domain::{MonomialInequality, ReinhardtDomain};
use crate::laurent::HoloFunction;
use crate::rat::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("invalid parameter in {name}: {reason}")]
    InvalidParameter { name: String, reason: String },
}

/// A catalog domain with its expected predicate values.
#[derive(Debug, Clone)]
pub struct NamedDomain {
    pub name: String,
    pub domain: ReinhardtDomain,
    pub origin_on_boundary: bool,
    pub log_convex: bool,
    pub description: String,
}

/// A catalog function and the catalog domains it is safe to sample on.
#[derive(Debug, Clone)]
pub struct NamedFunction {
    pub function: HoloFunction,
    pub valid_on: Vec<String>,
    pub description: String,
}

/// Split `"name(a,b,...)"` into the head and raw arguments.
fn parse_call(text: &str) -> Option<(&str, Vec<&str>)> {
    let text = text.trim();
    let open = text.find('(')?;
    let close = text.strip_suffix(')')?;
    let head = &text[..open];
    let args = close[open + 1..]
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Some((head, args))
}

fn int_args(name: &str, args: &[&str]) -> Result<Vec<i64>, CorpusError> {
    args.iter()
        .map(|a| {
            a.parse::<i64>().map_err(|_| CorpusError::InvalidParameter {
                name: name.to_string(),
                reason: format!("expected an integer, got {a:?}"),
            })
        })
        .collect()
}

pub fn builtin_domain(name: &str) -> Result<NamedDomain, CorpusError> {
    match name.trim() {
        "hartogs" => {
            let ineq = MonomialInequality::new(vec![1, 0], vec![0, 1], Rat::zero())
                .expect("static data");
            let domain = ReinhardtDomain::build(2, vec![vec![ineq]], Rat::zero())
                .expect("static data");
            Ok(NamedDomain {
                name: "hartogs".into(),
                domain,
                origin_on_boundary: true,
                log_convex: true,
                description: "Hartogs triangle |z1| < |z2| < 1".into(),
            })
        }
        "polydisc" => Ok(NamedDomain {
            name: "polydisc".into(),
            domain: ReinhardtDomain::build(2, vec![vec![]], Rat::zero()).expect("static data"),
            origin_on_boundary: false,
            log_convex: true,
            description: "unit bidisc |z1| < 1, |z2| < 1".into(),
        }),
        "nonconvex_union" => {
            let a = MonomialInequality::new(vec![1, 0], vec![0, 0], Rat::from_int(-2))
                .expect("static data");
            let b = MonomialInequality::new(vec![0, 1], vec![0, 0], Rat::from_int(-2))
                .expect("static data");
            let domain = ReinhardtDomain::build(2, vec![vec![a], vec![b]], Rat::zero())
                .expect("static data");
            Ok(NamedDomain {
                name: "nonconvex_union".into(),
                domain,
                origin_on_boundary: false,
                log_convex: false,
                description: "union of {|z1| < 1/e^2} x D and D x {|z2| < 1/e^2}".into(),
            })
        }
        other => {
            if let Some(("H", args)) = parse_call(other) {
                return generalized_triangle(other, &int_args(other, &args)?);
            }
            Err(CorpusError::UnknownName(other.to_string()))
        }
    }
}

/// `H(alpha) = {z in D^n : |z^alpha| < 1}` for a mixed-sign multi-index.
fn generalized_triangle(name: &str, alpha: &[i64]) -> Result<NamedDomain, CorpusError> {
    let n = alpha.len();
    if !(2..=3).contains(&n) {
        return Err(CorpusError::InvalidParameter {
            name: name.to_string(),
            reason: "H(alpha) takes 2 or 3 integer exponents".into(),
        });
    }
    let has_positive = alpha.iter().any(|&a| a > 0);
    let has_negative = alpha.iter().any(|&a| a < 0);
    if !has_positive || !has_negative {
        return Err(CorpusError::InvalidParameter {
            name: name.to_string(),
            reason: "exponents must mix signs (neither alpha nor -alpha in N^n)".into(),
        });
    }
    let beta: Vec<u32> = alpha.iter().map(|&a| a.max(0) as u32).collect();
    let gamma: Vec<u32> = alpha.iter().map(|&a| (-a).max(0) as u32).collect();
    let ineq = MonomialInequality::new(beta, gamma, Rat::zero()).expect("mixed-sign alpha");
    let domain = ReinhardtDomain::build(n, vec![vec![ineq]], Rat::zero())
        .expect("generalized triangles are nonempty");
    Ok(NamedDomain {
        name: format!(
            "H({})",
            alpha.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
        ),
        domain,
        origin_on_boundary: true,
        log_convex: true,
        description: format!("generalized Hartogs triangle |z^{alpha:?}| < 1 in the polydisc"),
    })
}

pub fn builtin_function(name: &str) -> Result<NamedFunction, CorpusError> {
    let trimmed = name.trim();
    match trimmed {
        "ratio" => {
            let function = HoloFunction::new("ratio", 2, |z: &[Complex64]| z[0] / z[1])
                .with_known_coefficients(|alpha: &[i64]| {
                    if alpha == [1, -1] {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
                .with_smoothness(false);
            return Ok(NamedFunction {
                function,
                valid_on: vec![
                    "hartogs".into(),
                    "H(2,-1)".into(),
                    "H(1,-2)".into(),
                    "H(3,-2)".into(),
                ],
                description: "z1/z2, the single-index obstruction".into(),
            });
        }
        "geom" => {
            let function = HoloFunction::new("geom", 2, |z: &[Complex64]| {
                1.0 / (z[1] - z[0])
            })
            .with_known_coefficients(|alpha: &[i64]| {
                if alpha[0] >= 0 && alpha[1] == -alpha[0] - 1 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .with_smoothness(false);
            return Ok(NamedFunction {
                function,
                valid_on: vec!["hartogs".into()],
                description: "1/(z2 - z1) = sum of z1^m z2^(-m-1), a full negative ladder".into(),
            });
        }
        _ => {}
    }
    let Some((head, args)) = parse_call(trimmed) else {
        return Err(CorpusError::UnknownName(trimmed.to_string()));
    };
    match head {
        "monomial" => {
            let alpha = int_args(trimmed, &args)?;
            if alpha.is_empty() || alpha.len() > 3 {
                return Err(CorpusError::InvalidParameter {
                    name: trimmed.to_string(),
                    reason: "monomial takes 1..=3 integer exponents".into(),
                });
            }
            let smooth = alpha.iter().all(|&a| a >= 0);
            let canonical = format!(
                "monomial({})",
                alpha.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            );
            let expo = alpha.clone();
            let known = alpha.clone();
            let function = HoloFunction::new(canonical, alpha.len(), move |z: &[Complex64]| {
                z.iter()
                    .zip(&expo)
                    .map(|(&zj, &a)| zj.powi(a as i32))
                    .product()
            })
            .with_known_coefficients(move |a: &[i64]| {
                if a == known.as_slice() {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .with_smoothness(smooth);
            let valid_on = if smooth {
                all_domain_names()
            } else {
                vec![
                    "hartogs".into(),
                    "H(2,-1)".into(),
                    "H(1,-2)".into(),
                    "H(3,-2)".into(),
                ]
            };
            Ok(NamedFunction {
                function,
                valid_on,
                description: "a single Laurent monomial z^alpha".into(),
            })
        }
        "exp_linear" => {
            let coeffs: Vec<f64> = args
                .iter()
                .map(|a| {
                    a.parse::<f64>().map_err(|_| CorpusError::InvalidParameter {
                        name: trimmed.to_string(),
                        reason: format!("expected a number, got {a:?}"),
                    })
                })
                .collect::<Result<_, _>>()?;
            if coeffs.is_empty() || coeffs.len() > 3 {
                return Err(CorpusError::InvalidParameter {
                    name: trimmed.to_string(),
                    reason: "exp_linear takes 1..=3 coefficients".into(),
                });
            }
            let canonical = format!(
                "exp_linear({})",
                args.to_vec().join(",")
            );
            let a_eval = coeffs.clone();
            let a_known = coeffs.clone();
            let function = HoloFunction::new(canonical, coeffs.len(), move |z: &[Complex64]| {
                z.iter()
                    .zip(&a_eval)
                    .map(|(&zj, &aj)| zj * aj)
                    .sum::<Complex64>()
                    .exp()
            })
            .with_known_coefficients(move |alpha: &[i64]| {
                let mut c = 1.0;
                for (&a, &aj) in alpha.iter().zip(&a_known) {
                    if a < 0 {
                        return Complex64::new(0.0, 0.0);
                    }
                    c *= aj.powi(a as i32) / factorial(a as u32);
                }
                Complex64::new(c, 0.0)
            })
            .with_smoothness(true);
            Ok(NamedFunction {
                function,
                valid_on: all_domain_names(),
                description: "exp(a . z), an entire function".into(),
            })
        }
        "poly_random" => {
            let seed = int_args(trimmed, &args)?;
            let [seed] = seed.as_slice() else {
                return Err(CorpusError::InvalidParameter {
                    name: trimmed.to_string(),
                    reason: "poly_random takes one integer seed".into(),
                });
            };
            Ok(poly_random(*seed as u64))
        }
        _ => Err(CorpusError::UnknownName(trimmed.to_string())),
    }
}

/// Seeded random polynomial in two variables: integer coefficients in
/// [-5, 5] on total degree <= 6, reproducible across runs.
pub fn poly_random(seed: u64) -> NamedFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms: Vec<([i64; 2], f64)> = Vec::new();
    for a0 in 0..=6i64 {
        for a1 in 0..=(6 - a0) {
            let c = rng.gen_range(-5..=5i64);
            if c != 0 {
                terms.push(([a0, a1], c as f64));
            }
        }
    }
    let eval_terms = terms.clone();
    let known_terms = terms.clone();
    let function = HoloFunction::new(format!("poly_random({seed})"), 2, move |z: &[Complex64]| {
        eval_terms
            .iter()
            .map(|([a0, a1], c)| z[0].powi(*a0 as i32) * z[1].powi(*a1 as i32) * *c)
            .sum()
    })
    .with_known_coefficients(move |alpha: &[i64]| {
        known_terms
            .iter()
            .find(|(a, _)| a == alpha)
            .map_or(Complex64::new(0.0, 0.0), |(_, c)| Complex64::new(*c, 0.0))
    })
    .with_smoothness(true);
    NamedFunction {
        function,
        valid_on: all_domain_names(),
        description: "seeded integer polynomial of total degree <= 6".into(),
    }
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, v| acc * v as f64)
}

fn all_domain_names() -> Vec<String> {
    domain_catalog().into_iter().map(|d| d.name).collect()
}

/// The canonical catalog instances (parameterized names like `H(5,-4)` or
/// `poly_random(7)` resolve beyond this list).
pub fn domain_catalog() -> Vec<NamedDomain> {
    ["hartogs", "polydisc", "H(2,-1)", "H(1,-2)", "H(3,-2)", "nonconvex_union"]
        .iter()
        .map(|name| builtin_domain(name).expect("catalog names are valid"))
        .collect()
}

pub fn function_catalog() -> Vec<NamedFunction> {
    [
        "monomial(2,-1)",
        "exp_linear(1,2)",
        "ratio",
        "geom",
        "poly_random(42)",
    ]
    .iter()
    .map(|name| builtin_function(name).expect("catalog names are valid"))
    .collect()
}

/// Seeded random bounded 2-D monomial domain for hull-law testing: one to
/// three nonempty pieces of one or two inequalities each.
pub fn random_domain_2d(seed: u64) -> ReinhardtDomain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // (beta, gamma) patterns with disjoint supports
    let patterns: [([u32; 2], [u32; 2]); 8] = [
        ([1, 0], [0, 1]),
        ([2, 0], [0, 1]),
        ([1, 0], [0, 2]),
        ([0, 1], [1, 0]),
        ([0, 2], [1, 0]),
        ([1, 0], [0, 0]),
        ([0, 1], [0, 0]),
        ([1, 1], [0, 0]),
    ];
    loop {
        let box_log_radius = Rat::from_int(rng.gen_range(0..=1));
        let piece_count = rng.gen_range(1..=3);
        let mut pieces = Vec::with_capacity(piece_count);
        for _ in 0..piece_count {
            let ineq_count = rng.gen_range(1..=2);
            let mut piece = Vec::with_capacity(ineq_count);
            for _ in 0..ineq_count {
                let (beta, gamma) = patterns[rng.gen_range(0..patterns.len())];
                let rho = Rat::from_pair(rng.gen_range(-6..=2), rng.gen_range(1..=2));
                piece.push(
                    MonomialInequality::new(beta.to_vec(), gamma.to_vec(), rho)
                        .expect("patterns are disjoint"),
                );
            }
            pieces.push(piece);
        }
        if let Ok(domain) = ReinhardtDomain::build(2, pieces, box_log_radius) {
            return domain;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{laurent_window, sample_torus, TorusSpec};

    #[test]
    fn domain_metadata_matches_computed_predicates() {
        for named in domain_catalog() {
            assert_eq!(
                named.domain.origin_on_boundary(),
                named.origin_on_boundary,
                "{}",
                named.name
            );
            let convex = match named.domain.is_log_convex(128, 11) {
                crate::domain::ConvexityVerdict::Convex => true,
                crate::domain::ConvexityVerdict::ProbablyConvex { .. } => true,
                crate::domain::ConvexityVerdict::NotConvex { .. } => false,
            };
            assert_eq!(convex, named.log_convex, "{}", named.name);
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            builtin_domain("mystery"),
            Err(CorpusError::UnknownName(_))
        ));
        assert!(matches!(
            builtin_domain("H(1,2)"),
            Err(CorpusError::InvalidParameter { .. })
        ));
        assert!(matches!(
            builtin_function("nope(3)"),
            Err(CorpusError::UnknownName(_))
        ));
        assert!(matches!(
            builtin_function("monomial(1,2,3,4)"),
            Err(CorpusError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn three_dimensional_triangles_resolve() {
        let named = builtin_domain("H(1,1,-2)").unwrap();
        assert_eq!(named.domain.dimension(), 3);
        assert!(named.domain.origin_on_boundary());
        assert!(named.domain.contains_modulus(&[0.5, 0.5, 0.6]));
        assert!(!named.domain.contains_modulus(&[0.9, 0.9, 0.5]));
    }

    #[test]
    fn monomial_and_geom_evaluate_as_documented() {
        let monomial = builtin_function("monomial(2,-1)").unwrap().function;
        let v = monomial.eval(&[Complex64::new(0.3, 0.0), Complex64::new(0.6, 0.0)]);
        assert!((v - Complex64::new(0.15, 0.0)).norm() < 1e-15);

        let geom = builtin_function("geom").unwrap().function;
        let v = geom.eval(&[Complex64::new(0.25, 0.0), Complex64::new(0.5, 0.0)]);
        assert!((v - Complex64::new(4.0, 0.0)).norm() < 1e-14);

        let exp = builtin_function("exp_linear(1,2)").unwrap().function;
        let c = exp.known_coefficient(&[2, 1]).unwrap();
        assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn known_coefficients_match_windows_on_a_reference_torus() {
        // geom folds its ladder into the window at ~(w1/w2)^(N/2) / w2;
        // these radii at N = 64 keep that alias near 1e-12
        let spec = TorusSpec::new(vec![0.25, 0.6], 64).unwrap();
        for named in function_catalog() {
            let f = &named.function;
            let window = laurent_window(&sample_torus(f, &spec).unwrap()).unwrap();
            window.for_each(|alpha, d| {
                let mut expected = f.known_coefficient(alpha).expect("catalog has coefficients");
                for (&a, &w) in alpha.iter().zip(spec.radii()) {
                    expected *= w.powi(a as i32);
                }
                assert!(
                    (d - expected).norm() < 1e-10,
                    "{} at {alpha:?}: {d} vs {expected}",
                    f.name()
                );
            });
        }
    }

    #[test]
    fn random_domains_are_reproducible_and_valid() {
        for seed in 0..20u64 {
            let a = random_domain_2d(seed);
            let b = random_domain_2d(seed);
            assert_eq!(a, b, "seed {seed}");
            assert!(!a.pieces().is_empty());
        }
        assert_ne!(random_domain_2d(1), random_domain_2d(2));
    }

    #[test]
    fn poly_random_is_seed_stable() {
        let f = poly_random(42).function;
        let g = poly_random(42).function;
        let z = [Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4)];
        assert_eq!(f.eval(&z), g.eval(&z));
        assert!(f.known_coefficient(&[7, 0]).unwrap().norm() == 0.0);
    }
}
