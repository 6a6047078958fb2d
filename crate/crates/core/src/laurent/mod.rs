//! Torus sampling, FFT Laurent coefficients, obstruction and growth
//! reports, and certified Taylor extension.
//!
//! The primary data are the scaled coefficients `d_alpha = c_alpha w^alpha`
//! read off a torus of radii `w`: they are exactly what the trapezoidal
//! discretization of the Cauchy integral produces, they are bounded by
//! `sup |f|` on the torus, and they stay finite where raw `c_alpha` would
//! overflow. Raw coefficients are derived on demand.

mod fft;
mod report;

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::domain::ReinhardtDomain;
use crate::geometry::lp::{LpProblem, LpSolution};
use crate::geometry::lp_feasible;
use crate::rat::Rat;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LaurentError {
    #[error("evaluator returned a non-finite value at grid index {grid_index:?}")]
    EvaluationFailure { grid_index: Vec<usize> },
    #[error("bad grid: {0}")]
    BadGrid(String),
    #[error("alpha has no negative part; the growth statistic needs gamma != 0")]
    GammaZero,
    #[error("ratio {ratio} on axis {axis} is outside [0, 1)")]
    RatioOutOfRange { axis: usize, ratio: f64 },
    #[error("target leaves the polydisc of the torus on axis {axis}")]
    OutsidePolydisc { axis: usize },
    #[error("degree {degree} needs grid size > {}", 2 * degree)]
    DegreeExceedsWindow { degree: usize },
    #[error("index {0:?} is outside the coefficient window")]
    IndexOutsideWindow(Vec<i64>),
    #[error("no torus in the domain dominates the target point")]
    NoDominatingTorus,
    #[error("torus sampling supports dimension 1..=3, got {0}")]
    UnsupportedDimension(usize),
    #[error("function is {function}-dimensional but the context is {context}-dimensional")]
    DimensionMismatch { function: usize, context: usize },
}

pub type Evaluator = Arc<dyn Fn(&[Complex64]) -> Complex64 + Send + Sync>;
pub type CoefficientMap = Arc<dyn Fn(&[i64]) -> Complex64 + Send + Sync>;

/// A holomorphic function given by a black-box evaluator, optionally with
/// exact Laurent coefficients and a smoothness-up-to-the-boundary tag.
#[derive(Clone)]
pub struct HoloFunction {
    name: String,
    dimension: usize,
    evaluator: Evaluator,
    known_coefficients: Option<CoefficientMap>,
    smooth_up_to_boundary: Option<bool>,
}

impl HoloFunction {
    pub fn new(
        name: impl Into<String>,
        dimension: usize,
        evaluator: impl Fn(&[Complex64]) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        HoloFunction {
            name: name.into(),
            dimension,
            evaluator: Arc::new(evaluator),
            known_coefficients: None,
            smooth_up_to_boundary: None,
        }
    }

    pub fn with_known_coefficients(
        mut self,
        map: impl Fn(&[i64]) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        self.known_coefficients = Some(Arc::new(map));
        self
    }

    pub fn with_smoothness(mut self, smooth: bool) -> Self {
        self.smooth_up_to_boundary = Some(smooth);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        (self.evaluator)(z)
    }

    /// Exact Laurent coefficient, when the function carries them.
    pub fn known_coefficient(&self, alpha: &[i64]) -> Option<Complex64> {
        self.known_coefficients.as_ref().map(|m| m(alpha))
    }

    pub fn has_known_coefficients(&self) -> bool {
        self.known_coefficients.is_some()
    }

    pub fn smooth_up_to_boundary(&self) -> Option<bool> {
        self.smooth_up_to_boundary
    }
}

impl std::fmt::Debug for HoloFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HoloFunction")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("smooth_up_to_boundary", &self.smooth_up_to_boundary)
            .finish()
    }
}

/// Radii and per-axis grid size of a sampling torus `{|z_j| = w_j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusSpec {
    radii: Vec<f64>,
    grid: usize,
}

impl TorusSpec {
    pub fn new(radii: Vec<f64>, grid: usize) -> Result<Self, LaurentError> {
        let n = radii.len();
        if n == 0 || n > 3 {
            return Err(LaurentError::UnsupportedDimension(n));
        }
        if radii.iter().any(|&w| !w.is_finite() || w <= 0.0) {
            return Err(LaurentError::BadGrid(
                "torus radii must be positive and finite".into(),
            ));
        }
        if grid < 4 || !grid.is_power_of_two() {
            return Err(LaurentError::BadGrid(format!(
                "grid size must be a power of two >= 4, got {grid}"
            )));
        }
        Ok(TorusSpec { radii, grid })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn grid(&self) -> usize {
        self.grid
    }

    pub fn dimension(&self) -> usize {
        self.radii.len()
    }

    /// Torus lies inside the domain (radii vector is a member modulus).
    pub fn inside(&self, d: &ReinhardtDomain) -> bool {
        d.contains_modulus(&self.radii)
    }

    fn total_points(&self) -> usize {
        self.grid.pow(self.dimension() as u32)
    }
}

/// Sampled values of a function on the full grid of a torus.
#[derive(Debug, Clone)]
pub struct TorusGrid {
    spec: TorusSpec,
    values: Vec<Complex64>,
}

impl TorusGrid {
    pub fn spec(&self) -> &TorusSpec {
        &self.spec
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

fn decode_index(mut flat: usize, axes: usize, size: usize) -> Vec<usize> {
    let mut k = vec![0usize; axes];
    for slot in k.iter_mut().take(axes) {
        *slot = flat % size;
        flat /= size;
    }
    k
}

/// Evaluate `f` at `z_j = w_j exp(2 pi i k_j / N)` over the whole grid.
pub fn sample_torus(f: &HoloFunction, spec: &TorusSpec) -> Result<TorusGrid, LaurentError> {
    let n = spec.dimension();
    if f.dimension() != n {
        return Err(LaurentError::DimensionMismatch {
            function: f.dimension(),
            context: n,
        });
    }
    let size = spec.grid();
    let phases: Vec<Vec<Complex64>> = spec
        .radii()
        .iter()
        .map(|&w| {
            (0..size)
                .map(|k| {
                    Complex64::from_polar(w, 2.0 * std::f64::consts::PI * k as f64 / size as f64)
                })
                .collect()
        })
        .collect();

    let mut values = Vec::with_capacity(spec.total_points());
    let mut z = vec![Complex64::new(0.0, 0.0); n];
    for flat in 0..spec.total_points() {
        let k = decode_index(flat, n, size);
        for (j, &kj) in k.iter().enumerate() {
            z[j] = phases[j][kj];
        }
        let v = f.eval(&z);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(LaurentError::EvaluationFailure { grid_index: k });
        }
        values.push(v);
    }
    Ok(TorusGrid {
        spec: spec.clone(),
        values,
    })
}

/// Scaled Laurent coefficients `d_alpha ~ c_alpha w^alpha` on the index
/// window `[-N/2, N/2)^n`, from the n-dimensional DFT of a torus sample.
#[derive(Debug, Clone)]
pub struct LaurentWindow {
    spec: TorusSpec,
    scaled: Vec<Complex64>,
}

/// Trapezoidal discretization of the Cauchy coefficient integral: exact
/// for Laurent polynomials supported in the window, up to N-aliasing.
pub fn laurent_window(grid: &TorusGrid) -> Result<LaurentWindow, LaurentError> {
    let spec = grid.spec.clone();
    if grid.values.len() != spec.total_points() {
        return Err(LaurentError::BadGrid(format!(
            "expected {} grid values, got {}",
            spec.total_points(),
            grid.values.len()
        )));
    }
    let mut scaled = grid.values.clone();
    fft::forward_dft_nd(&mut scaled, spec.dimension(), spec.grid());
    let norm = 1.0 / spec.total_points() as f64;
    for v in &mut scaled {
        *v *= norm;
    }
    Ok(LaurentWindow { spec, scaled })
}

impl LaurentWindow {
    pub fn spec(&self) -> &TorusSpec {
        &self.spec
    }

    /// Half-width of the index window: indices run in `[-half, half)`.
    pub fn half(&self) -> i64 {
        (self.spec.grid() / 2) as i64
    }

    fn bin_of(&self, alpha: &[i64]) -> Option<usize> {
        if alpha.len() != self.spec.dimension() {
            return None;
        }
        let size = self.spec.grid() as i64;
        let half = self.half();
        let mut flat = 0usize;
        let mut stride = 1usize;
        for &a in alpha {
            if a < -half || a >= half {
                return None;
            }
            let bin = if a < 0 { a + size } else { a } as usize;
            flat += bin * stride;
            stride *= size as usize;
        }
        Some(flat)
    }

    /// Scaled coefficient `d_alpha`; `None` outside the window.
    pub fn scaled_at(&self, alpha: &[i64]) -> Option<Complex64> {
        self.bin_of(alpha).map(|i| self.scaled[i])
    }

    /// Raw coefficient `c_alpha = d_alpha / w^alpha`.
    pub fn coeff_at(&self, alpha: &[i64]) -> Option<Complex64> {
        let d = self.scaled_at(alpha)?;
        let mut scale = 1.0;
        for (&a, &w) in alpha.iter().zip(self.spec.radii()) {
            scale *= w.powi(a as i32);
        }
        Some(d / scale)
    }

    /// Visit every `(alpha, d_alpha)` pair in the window.
    pub fn for_each(&self, mut visit: impl FnMut(&[i64], Complex64)) {
        let n = self.spec.dimension();
        let size = self.spec.grid() as i64;
        let half = self.half();
        let mut alpha = vec![0i64; n];
        for (flat, &d) in self.scaled.iter().enumerate() {
            let mut rest = flat;
            for slot in alpha.iter_mut() {
                let bin = (rest % size as usize) as i64;
                *slot = if bin < half { bin } else { bin - size };
                rest /= size as usize;
            }
            visit(&alpha, d);
        }
    }

    /// Largest `|d_alpha|` over the whole window.
    pub fn max_abs(&self) -> f64 {
        self.scaled.iter().map(|d| d.norm()).fold(0.0, f64::max)
    }

    /// Worst negative-index magnitude: max over `alpha` with some
    /// `alpha_j < 0`, with the attaining index.
    pub fn max_abs_negative(&self) -> Option<(Vec<i64>, f64)> {
        let mut worst: Option<(Vec<i64>, f64)> = None;
        self.for_each(|alpha, d| {
            if alpha.iter().any(|&a| a < 0) {
                let mag = d.norm();
                let better = worst.as_ref().is_none_or(|(_, m)| mag > *m);
                if better {
                    worst = Some((alpha.to_vec(), mag));
                }
            }
        });
        worst
    }

    /// Decay heuristic: max `|d_alpha|` on the outer index shell
    /// `max_j |alpha_j| in {N/2 - 2, N/2 - 1}`.
    pub fn shell_max(&self) -> f64 {
        let half = self.half();
        let mut max = 0.0f64;
        self.for_each(|alpha, d| {
            let m = alpha.iter().map(|a| a.abs()).max().unwrap_or(0);
            if m == half - 1 || m == half - 2 {
                max = max.max(d.norm());
            }
        });
        max
    }
}

/// Split of a multi-index into positive and negative parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSplit {
    alpha: Vec<i64>,
    beta: Vec<u32>,
    gamma: Vec<u32>,
}

impl IndexSplit {
    pub fn from_alpha(alpha: &[i64]) -> Self {
        IndexSplit {
            alpha: alpha.to_vec(),
            beta: alpha.iter().map(|&a| a.max(0) as u32).collect(),
            gamma: alpha.iter().map(|&a| (-a).max(0) as u32).collect(),
        }
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    pub fn gamma_is_zero(&self) -> bool {
        self.gamma.iter().all(|&g| g == 0)
    }
}

pub use report::{
    ConsistencyEntry, ConsistencyReport, ExtensionResult, GrowthEntry, GrowthReport,
    ObstructionEntry, ObstructionReport, ObstructionVerdict,
};

/// Collect all negative-index magnitudes across windows and compare the
/// worst against the tolerance. The effective tolerance is relative to
/// the largest scaled coefficient seen (floored at 1), the noise scale of
/// a double-precision DFT.
pub fn negative_part_report(windows: &[LaurentWindow], tolerance: f64) -> ObstructionReport {
    let mut max_abs = 0.0f64;
    let mut max_negative = 0.0f64;
    let mut worst: Option<(Vec<i64>, usize)> = None;
    let mut table: std::collections::BTreeMap<Vec<i64>, Vec<Option<f64>>> =
        std::collections::BTreeMap::new();

    for (wi, window) in windows.iter().enumerate() {
        max_abs = max_abs.max(window.max_abs());
        window.for_each(|alpha, d| {
            if alpha.iter().any(|&a| a < 0) {
                let mag = d.norm();
                let row = table
                    .entry(alpha.to_vec())
                    .or_insert_with(|| vec![None; windows.len()]);
                row[wi] = Some(mag);
                if mag > max_negative {
                    max_negative = mag;
                    worst = Some((alpha.to_vec(), wi));
                }
            }
        });
    }

    let effective_tolerance = tolerance * max_abs.max(1.0);
    let verdict = if max_negative < effective_tolerance {
        ObstructionVerdict::Clean
    } else {
        ObstructionVerdict::Obstructed
    };
    ObstructionReport {
        tolerance,
        effective_tolerance,
        max_abs,
        max_negative_magnitude: max_negative,
        worst,
        tori: windows.iter().map(|w| w.spec().clone()).collect(),
        entries: table
            .into_iter()
            .map(|(alpha, abs_scaled)| ObstructionEntry { alpha, abs_scaled })
            .collect(),
        verdict,
    }
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, v| acc * v as f64)
}

/// The growth statistic `t(w) = |c_alpha| beta! / w^gamma` per torus,
/// computed stably as `|d_alpha| beta! / w^beta`. Each value is a lower
/// bound (up to quadrature error) for the sup of the beta-derivative, so
/// unbounded growth as `w -> 0` refutes smoothness up to the boundary.
pub fn derivative_bound_scan(
    f: &HoloFunction,
    split: &IndexSplit,
    tori: &[TorusSpec],
) -> Result<GrowthReport, LaurentError> {
    if split.gamma_is_zero() {
        return Err(LaurentError::GammaZero);
    }
    let beta_factorial: f64 = split.beta().iter().map(|&b| factorial(b)).product();
    let mut entries = Vec::with_capacity(tori.len());
    for spec in tori {
        let window = laurent_window(&sample_torus(f, spec)?)?;
        let d = window
            .scaled_at(split.alpha())
            .ok_or_else(|| LaurentError::IndexOutsideWindow(split.alpha().to_vec()))?;
        let mut w_beta = 1.0;
        for (&b, &w) in split.beta().iter().zip(spec.radii()) {
            w_beta *= w.powi(b as i32);
        }
        let abs_coefficient = window.coeff_at(split.alpha()).expect("checked index").norm();
        entries.push(GrowthEntry {
            torus: spec.clone(),
            abs_coefficient,
            statistic: d.norm() * beta_factorial / w_beta,
        });
    }
    Ok(GrowthReport {
        alpha: split.alpha().to_vec(),
        beta: split.beta().to_vec(),
        gamma: split.gamma().to_vec(),
        entries,
    })
}

/// Upper bound for the Taylor tail beyond degree `K`: if every scaled
/// coefficient satisfies `|c_alpha w^alpha| <= M` and `t_j = |z_j| / w_j`,
/// the missing terms are dominated by the geometric sum
/// `M (prod 1/(1-t_j) - prod (1-t_j^(K+1))/(1-t_j))`.
pub fn taylor_tail_bound(m: f64, ratios: &[f64], degree: usize) -> Result<f64, LaurentError> {
    assert!(m >= 0.0, "coefficient bound must be nonnegative");
    for (axis, &t) in ratios.iter().enumerate() {
        if !(0.0..1.0).contains(&t) {
            return Err(LaurentError::RatioOutOfRange { axis, ratio: t });
        }
    }
    let full: f64 = ratios.iter().map(|&t| 1.0 / (1.0 - t)).product();
    let partial: f64 = ratios
        .iter()
        .map(|&t| (1.0 - t.powi(degree as i32 + 1)) / (1.0 - t))
        .product();
    Ok((m * (full - partial)).max(0.0))
}

/// Truncated Taylor evaluation of the extension at a point of the
/// polydisc `P_w`: negative-index coefficients are ignored, the value is
/// `sum over [0, K]^n of d_alpha (z/w)^alpha`, and the tail bound comes
/// from [`taylor_tail_bound`] with `M = max |d_alpha|` over the window.
/// The aliasing estimate is reported separately and never folded into the
/// certified bound.
pub fn extend_eval(
    window: &LaurentWindow,
    z: &[Complex64],
    degree: usize,
) -> Result<ExtensionResult, LaurentError> {
    let n = window.spec().dimension();
    if z.len() != n {
        return Err(LaurentError::DimensionMismatch {
            function: z.len(),
            context: n,
        });
    }
    for (axis, (&zj, &wj)) in z.iter().zip(window.spec().radii()).enumerate() {
        if zj.norm() >= wj {
            return Err(LaurentError::OutsidePolydisc { axis });
        }
    }
    if degree as i64 >= window.half() {
        return Err(LaurentError::DegreeExceedsWindow { degree });
    }

    let ratios: Vec<Complex64> = z
        .iter()
        .zip(window.spec().radii())
        .map(|(&zj, &wj)| zj / wj)
        .collect();
    let powers: Vec<Vec<Complex64>> = ratios
        .iter()
        .map(|&q| {
            let mut row = Vec::with_capacity(degree + 1);
            let mut p = Complex64::new(1.0, 0.0);
            for _ in 0..=degree {
                row.push(p);
                p *= q;
            }
            row
        })
        .collect();

    let mut value = Complex64::new(0.0, 0.0);
    let mut alpha = vec![0i64; n];
    let terms = (degree + 1).pow(n as u32);
    for flat in 0..terms {
        let mut rest = flat;
        let mut monomial = Complex64::new(1.0, 0.0);
        for (j, slot) in alpha.iter_mut().enumerate() {
            let a = rest % (degree + 1);
            rest /= degree + 1;
            *slot = a as i64;
            monomial *= powers[j][a];
        }
        value += window.scaled_at(&alpha).expect("degree < N/2") * monomial;
    }

    let abs_ratios: Vec<f64> = ratios.iter().map(|q| q.norm()).collect();
    let tail_bound = taylor_tail_bound(window.max_abs(), &abs_ratios, degree)?;
    Ok(ExtensionResult {
        value,
        tail_bound,
        aliasing_estimate: window.shell_max(),
        degree,
        torus: window.spec().clone(),
    })
}

/// Choose a torus in the domain whose polydisc contains `z`, by an exact
/// LP on each piece's log shadow: maximize the joint slack by which the
/// log point stays inside the piece and above `log |z_j|`. Positive
/// optimal slack yields a torus strictly inside the domain strictly
/// dominating the target; if no piece admits one, the target is outside
/// the complete hull.
pub fn multi_torus_extend(
    f: &HoloFunction,
    d: &ReinhardtDomain,
    z: &[Complex64],
    grid: usize,
    degree: usize,
) -> Result<ExtensionResult, LaurentError> {
    let spec = dominating_torus(d, z, grid)?;
    let window = laurent_window(&sample_torus(f, &spec)?)?;
    extend_eval(&window, z, degree)
}

/// The torus-selection LP of [`multi_torus_extend`], exposed for reuse.
pub fn dominating_torus(
    d: &ReinhardtDomain,
    z: &[Complex64],
    grid: usize,
) -> Result<TorusSpec, LaurentError> {
    let n = d.dimension();
    if z.len() != n {
        return Err(LaurentError::DimensionMismatch {
            function: z.len(),
            context: n,
        });
    }
    let log_abs: Vec<Option<Rat>> = z
        .iter()
        .map(|zj| {
            let m = zj.norm();
            if m > 0.0 {
                Rat::from_f64_exact(m.ln())
            } else {
                None
            }
        })
        .collect();

    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for piece in 0..d.pieces().len() {
        let poly = d.piece_polyhedron(piece);
        let mut lp = LpProblem::new(n + 1);
        for h in poly.halfspaces() {
            let mut row = h.normal().to_vec();
            row.push(Rat::one());
            lp.add_le(row, h.bound().clone());
        }
        for (j, lj) in log_abs.iter().enumerate() {
            if let Some(lj) = lj {
                let mut row = vec![Rat::zero(); n + 1];
                row[j] = Rat::from_int(-1);
                row[n] = Rat::one();
                lp.add_le(row, -lj.clone());
            }
        }
        let mut cap = vec![Rat::zero(); n + 1];
        cap[n] = Rat::one();
        lp.add_le(cap.clone(), Rat::one());
        lp.set_objective(cap);
        if let LpSolution::Optimal { value, mut point } = lp.solve() {
            if value.is_positive() && best.as_ref().is_none_or(|(v, _)| value > *v) {
                point.truncate(n);
                best = Some((value, point));
            }
        }
    }
    let Some((_, log_point)) = best else {
        return Err(LaurentError::NoDominatingTorus);
    };
    let radii: Vec<f64> = log_point.iter().map(|x| x.to_f64().exp()).collect();
    let spec = TorusSpec::new(radii, grid)?;
    // guard the exact solution against exp/log rounding at the border
    let dominates = z
        .iter()
        .zip(spec.radii())
        .all(|(zj, &wj)| zj.norm() < wj);
    if !dominates || !spec.inside(d) {
        return Err(LaurentError::NoDominatingTorus);
    }
    Ok(spec)
}

/// Cross-torus agreement of raw coefficients on the common index window.
/// Deviations are relative to `max(1, |c_alpha|)`; entries above the
/// tolerance are flagged.
pub fn consistency_across_tori(windows: &[LaurentWindow], tolerance: f64) -> ConsistencyReport {
    if windows.len() < 2 {
        return ConsistencyReport {
            tolerance,
            entries: Vec::new(),
            flagged: Vec::new(),
        };
    }
    let n = windows[0].spec().dimension();
    let half = windows.iter().map(LaurentWindow::half).min().expect("nonempty");
    let mut entries = Vec::new();
    let mut flagged = Vec::new();
    let mut alpha = vec![0i64; n];
    let width = (2 * half) as usize;
    for flat in 0..width.pow(n as u32) {
        let mut rest = flat;
        for slot in alpha.iter_mut() {
            *slot = (rest % width) as i64 - half;
            rest /= width;
        }
        let coeffs: Vec<Complex64> = windows
            .iter()
            .map(|w| w.coeff_at(&alpha).expect("alpha within common window"))
            .collect();
        let max_abs = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut max_dev = 0.0f64;
        for i in 0..coeffs.len() {
            for j in i + 1..coeffs.len() {
                max_dev = max_dev.max((coeffs[i] - coeffs[j]).norm());
            }
        }
        let relative = max_dev / max_abs.max(1.0);
        if relative > tolerance {
            flagged.push(alpha.clone());
        }
        entries.push(ConsistencyEntry {
            alpha: alpha.clone(),
            max_abs_coefficient: max_abs,
            max_relative_deviation: relative,
        });
    }
    ConsistencyReport {
        tolerance,
        entries,
        flagged,
    }
}

/// Tori marching toward the origin for obstruction checks: an interior
/// point of a piece whose recession cone reaches the origin, advanced
/// along the witness direction until the radius floor, at most
/// `max_count` tori. Falls back to the single interior torus of the
/// first piece when the origin is not in the closure.
pub fn auto_tori(
    d: &ReinhardtDomain,
    grid: usize,
    max_count: usize,
    min_radius: f64,
) -> Result<Vec<TorusSpec>, LaurentError> {
    let (piece, direction) = match d.origin_recession_witness() {
        Some((piece, direction)) => (piece, Some(direction)),
        None => (0, None),
    };
    let base = lp_feasible(d.piece_polyhedron(piece))
        .map_err(|e| LaurentError::BadGrid(e.to_string()))?
        .witness()
        .expect("validated piece is nonempty")
        .to_vec();
    let mut tori = Vec::new();
    let steps = if direction.is_some() { max_count } else { 1 };
    for k in 0..steps {
        let point: Vec<Rat> = match &direction {
            Some(dir) => base
                .iter()
                .zip(dir)
                .map(|(b, d)| b + &(&Rat::from_int(k as i64) * d))
                .collect(),
            None => base.clone(),
        };
        let radii: Vec<f64> = point.iter().map(|x| x.to_f64().exp()).collect();
        if radii.iter().any(|&w| w < min_radius) {
            break;
        }
        let spec = TorusSpec::new(radii, grid)?;
        if spec.inside(d) {
            tori.push(spec);
        }
    }
    Ok(tori)
}
