//! Command implementations shared by the binary entry point.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Value};

use reinhardt_core::corpus::{builtin_domain, builtin_function, domain_catalog, function_catalog};
use reinhardt_core::domain::ReinhardtDomain;
use reinhardt_core::geometry::GeometryError;
use reinhardt_core::hulls::{complete_hull, envelope, HullError, HullResult};
use reinhardt_core::laurent::{
    auto_tori, derivative_bound_scan, laurent_window, multi_torus_extend, negative_part_report,
    sample_torus, HoloFunction, IndexSplit, LaurentError, LaurentWindow, ObstructionReport,
    TorusSpec,
};

use crate::svg;
use crate::{Failure, OutputFormat};

/// Load a domain from a JSON file path or resolve a builtin name. Parse
/// failures report the line and column.
pub fn load_domain(source: &str) -> Result<ReinhardtDomain, Failure> {
    let path = Path::new(source);
    if path.exists() {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {source}: {e}")))?;
        return serde_json::from_str(&text).map_err(|e| {
            Failure::Input(format!(
                "{source}: schema error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        });
    }
    builtin_domain(source)
        .map(|named| named.domain)
        .map_err(|e| Failure::Input(e.to_string()))
}

fn load_function(name: &str) -> Result<HoloFunction, Failure> {
    builtin_function(name)
        .map(|named| named.function)
        .map_err(|e| Failure::Input(e.to_string()))
}

fn hull_failure(e: HullError) -> Failure {
    match e {
        HullError::Geometry(GeometryError::UnsupportedDimension(n)) => {
            Failure::UnsupportedDimension(format!("hull computation supports dimension <= 3, got {n}"))
        }
        other => Failure::Input(other.to_string()),
    }
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn rat_str(r: &reinhardt_core::Rat) -> Value {
    Value::String(r.to_string())
}

fn provenance_json(result: &HullResult) -> Value {
    Value::Array(
        result
            .provenance
            .iter()
            .enumerate()
            .map(|(piece, facets)| {
                json!({
                    "piece": piece,
                    "facets": facets.iter().map(|f| json!({
                        "normal": f.normal.iter().map(rat_str).collect::<Vec<_>>(),
                        "bound": rat_str(&f.bound),
                        "vertices": f.vertices.iter().map(|v| {
                            v.iter().map(rat_str).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                        "rays": f.rays.iter().map(|r| {
                            r.iter().map(rat_str).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn cmd_envelope(domain_source: &str, out: Option<&Path>) -> Result<u8, Failure> {
    let domain = load_domain(domain_source)?;
    let complete = complete_hull(&domain).map_err(hull_failure)?;
    let convex = envelope(&domain).map_err(hull_failure)?;
    let report = json!({
        "domain": serde_json::to_value(&domain).expect("domain serializes"),
        "complete_hull": serde_json::to_value(&complete.hull).expect("hull serializes"),
        "envelope": serde_json::to_value(&convex.hull).expect("hull serializes"),
        "provenance": {
            "complete_hull": provenance_json(&complete),
            "envelope": provenance_json(&convex),
        },
    });
    write_output(out, &serde_json::to_string_pretty(&report).expect("valid json"))?;
    if domain.dimension() == 2 {
        if let Some(path) = out {
            let svg_path = path.with_extension("svg");
            let picture = svg::render(&domain, Some(&complete.hull), Some(&convex.hull), &[]);
            fs::write(&svg_path, picture)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", svg_path.display())))?;
        }
    }
    Ok(0)
}

/// Resolve the `--tori` flag: "auto" marches toward the origin, anything
/// else parses as a JSON list of radius vectors.
fn resolve_tori(
    spec_text: &str,
    domain: &ReinhardtDomain,
    grid: usize,
) -> Result<Vec<TorusSpec>, Failure> {
    if spec_text == "auto" {
        let tori = auto_tori(domain, grid, 4, 1e-4)
            .map_err(|e| Failure::Input(e.to_string()))?;
        if tori.is_empty() {
            return Err(Failure::NoValidTorus(
                "no valid torus found inside the domain".into(),
            ));
        }
        return Ok(tori);
    }
    let radii: Vec<Vec<f64>> = serde_json::from_str(spec_text)
        .map_err(|e| Failure::Input(format!("--tori: expected \"auto\" or a JSON list: {e}")))?;
    if radii.is_empty() {
        return Err(Failure::NoValidTorus("empty torus list".into()));
    }
    let mut tori = Vec::with_capacity(radii.len());
    for w in radii {
        let spec =
            TorusSpec::new(w, grid).map_err(|e| Failure::Input(format!("--tori: {e}")))?;
        if !spec.inside(domain) {
            return Err(Failure::NoValidTorus(format!(
                "torus {:?} is not inside the domain",
                spec.radii()
            )));
        }
        tori.push(spec);
    }
    Ok(tori)
}

fn validated_grid(grid: usize) -> Result<usize, Failure> {
    if grid < 4 || !grid.is_power_of_two() {
        return Err(Failure::Input(format!(
            "--grid must be a power of two >= 4, got {grid}"
        )));
    }
    Ok(grid)
}

fn sample_windows(
    f: &HoloFunction,
    tori: &[TorusSpec],
) -> Result<Vec<LaurentWindow>, Failure> {
    tori.iter()
        .map(|spec| {
            let grid = sample_torus(f, spec).map_err(laurent_failure)?;
            laurent_window(&grid).map_err(laurent_failure)
        })
        .collect()
}

fn laurent_failure(e: LaurentError) -> Failure {
    match e {
        LaurentError::NoDominatingTorus => Failure::NoDominatingTorus(e.to_string()),
        LaurentError::UnsupportedDimension(_) => Failure::UnsupportedDimension(e.to_string()),
        other => Failure::Input(other.to_string()),
    }
}

/// Index scanned by `check`: the worst negative index when obstructed,
/// otherwise the last coordinate axis singleton.
fn scan_index(report: &ObstructionReport, dimension: usize) -> Vec<i64> {
    match &report.worst {
        Some((alpha, _)) if !report.is_clean() => alpha.clone(),
        _ => {
            let mut alpha = vec![0i64; dimension];
            alpha[dimension - 1] = -1;
            alpha
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_check(
    domain_source: &str,
    function_name: &str,
    grid: usize,
    tol: f64,
    tori_text: &str,
    _seed: u64,
    out: Option<&Path>,
    format: OutputFormat,
) -> Result<u8, Failure> {
    let grid = validated_grid(grid)?;
    if tol <= 0.0 {
        return Err(Failure::Input("--tol must be positive".into()));
    }
    let domain = load_domain(domain_source)?;
    let f = load_function(function_name)?;
    if f.dimension() != domain.dimension() {
        return Err(Failure::Input(format!(
            "{} is {}-dimensional but the domain has dimension {}",
            function_name,
            f.dimension(),
            domain.dimension()
        )));
    }

    let mut warnings: Vec<String> = Vec::new();
    if !domain.origin_on_boundary() {
        warnings.push(
            "origin is not a boundary point of the domain; the extension hypothesis fails, \
             proceeding anyway"
                .into(),
        );
    }
    if let Ok(named) = builtin_function(function_name) {
        if builtin_domain(domain_source).is_ok()
            && !named.valid_on.iter().any(|d| d == domain_source)
        {
            warnings.push(format!(
                "{function_name} is not listed as valid on {domain_source}; \
                 evaluation may fail on poles"
            ));
        }
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }

    let tori = resolve_tori(tori_text, &domain, grid)?;
    let windows = sample_windows(&f, &tori)?;
    let report = negative_part_report(&windows, tol);
    let alpha = scan_index(&report, domain.dimension());
    let growth = derivative_bound_scan(&f, &IndexSplit::from_alpha(&alpha), &tori)
        .map_err(laurent_failure)?;

    match format {
        OutputFormat::Json => {
            let doc = json!({
                "domain": domain_source,
                "function": f.name(),
                "warnings": warnings,
                "obstruction": report.to_json(),
                "growth": growth.to_json(),
            });
            write_output(out, &serde_json::to_string_pretty(&doc).expect("valid json"))?;
        }
        OutputFormat::Csv => match out {
            Some(path) => {
                let negative = path.with_extension("negative.csv");
                fs::write(&negative, report.to_csv()).map_err(|e| {
                    Failure::Input(format!("cannot write {}: {e}", negative.display()))
                })?;
                let growth_path = path.with_extension("growth.csv");
                fs::write(&growth_path, growth.to_csv()).map_err(|e| {
                    Failure::Input(format!("cannot write {}: {e}", growth_path.display()))
                })?;
            }
            None => {
                println!("# negative-index magnitudes");
                print!("{}", report.to_csv());
                println!("# derivative growth statistic");
                print!("{}", growth.to_csv());
            }
        },
    }
    Ok(if report.is_clean() { 0 } else { 1 })
}

/// Parse a target point: `[0.5, 0.25]` or `[[0.5, 0.1], [0.25, 0]]`.
pub fn parse_target(text: &str, dimension: usize) -> Result<Vec<Complex64>, Failure> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Failure::Input(format!("--target: invalid JSON: {e}")))?;
    let Value::Array(items) = value else {
        return Err(Failure::Input("--target: expected a JSON array".into()));
    };
    let mut z = Vec::with_capacity(items.len());
    for item in &items {
        match item {
            Value::Number(n) => z.push(Complex64::new(
                n.as_f64().ok_or_else(|| Failure::Input("--target: bad number".into()))?,
                0.0,
            )),
            Value::Array(pair) if pair.len() == 2 => {
                let re = pair[0]
                    .as_f64()
                    .ok_or_else(|| Failure::Input("--target: bad [re, im] pair".into()))?;
                let im = pair[1]
                    .as_f64()
                    .ok_or_else(|| Failure::Input("--target: bad [re, im] pair".into()))?;
                z.push(Complex64::new(re, im));
            }
            other => {
                return Err(Failure::Input(format!(
                    "--target: expected numbers or [re, im] pairs, got {other}"
                )))
            }
        }
    }
    if z.len() != dimension {
        return Err(Failure::Input(format!(
            "--target has {} coordinates but the domain has dimension {dimension}",
            z.len()
        )));
    }
    Ok(z)
}

pub fn cmd_extend(
    domain_source: &str,
    function_name: &str,
    target_text: &str,
    grid: usize,
    degree: usize,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let grid = validated_grid(grid)?;
    if degree >= grid / 2 {
        return Err(Failure::Input(format!(
            "--degree must satisfy degree < grid/2, got {degree} with grid {grid}"
        )));
    }
    let domain = load_domain(domain_source)?;
    let f = load_function(function_name)?;
    let z = parse_target(target_text, domain.dimension())?;
    let result = multi_torus_extend(&f, &domain, &z, grid, degree).map_err(laurent_failure)?;
    let doc = json!({
        "domain": domain_source,
        "function": f.name(),
        "target": z.iter().map(|c| json!([c.re, c.im])).collect::<Vec<_>>(),
        "result": result.to_json(),
    });
    write_output(out, &serde_json::to_string_pretty(&doc).expect("valid json"))?;
    Ok(0)
}

pub fn cmd_plot(
    domain_source: &str,
    tori_text: &str,
    grid: usize,
    _seed: u64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let grid = validated_grid(grid)?;
    let domain = load_domain(domain_source)?;
    if domain.dimension() != 2 {
        return Err(Failure::UnsupportedDimension(format!(
            "plot renders two-dimensional shadows, got dimension {}",
            domain.dimension()
        )));
    }
    let complete = complete_hull(&domain).map_err(hull_failure)?;
    let convex = envelope(&domain).map_err(hull_failure)?;
    let tori = if tori_text == "none" {
        Vec::new()
    } else {
        resolve_tori(tori_text, &domain, grid)?
    };
    let picture = svg::render(&domain, Some(&complete.hull), Some(&convex.hull), &tori);
    write_output(out, &picture)?;
    Ok(0)
}

pub fn cmd_list_domains() -> Result<u8, Failure> {
    let doc: Vec<Value> = domain_catalog()
        .iter()
        .map(|d| {
            json!({
                "name": d.name,
                "dimension": d.domain.dimension(),
                "origin_on_boundary": d.origin_on_boundary,
                "log_convex": d.log_convex,
                "description": d.description,
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "domains": doc,
            "note": "H(p,q) accepts any mixed-sign integer exponents, e.g. H(5,-4)",
        }))
        .expect("valid json")
    );
    Ok(0)
}

pub fn cmd_list_functions() -> Result<u8, Failure> {
    let doc: Vec<Value> = function_catalog()
        .iter()
        .map(|f| {
            json!({
                "name": f.function.name(),
                "dimension": f.function.dimension(),
                "smooth_up_to_boundary": f.function.smooth_up_to_boundary(),
                "valid_on": f.valid_on,
                "description": f.description,
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "functions": doc,
            "note": "monomial(..), exp_linear(..) and poly_random(seed) accept parameters",
        }))
        .expect("valid json")
    );
    Ok(0)
}
