//! Reinhardt domains as finite unions of monomial polyhedra.
//!
//! A domain is described on moduli by inequalities `r^beta < e^rho r^gamma`
//! with disjoint-support exponents, evaluated with the convention `0^0 = 1`
//! so membership is plain arithmetic even on the coordinate hyperplanes.
//! Every domain carries a bounding box `r_j < e^rho_max`, so all log
//! shadows are bounded above and hull computations stay finite.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    self, lp_feasible, GeometryError, HalfSpace, LogPolyhedron,
};
use crate::rat::{ln_approx, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("piece {0} is empty")]
    EmptyPiece(usize),
    #[error("bad exponent in piece {piece}, inequality {inequality}: {reason}")]
    BadExponent {
        piece: usize,
        inequality: usize,
        reason: String,
    },
    #[error("a domain needs at least one piece")]
    NoPieces,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// One defining inequality `r^beta < e^rho * r^gamma` on moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialInequality {
    num_exponent: Vec<u32>,
    den_exponent: Vec<u32>,
    log_bound: Rat,
    approx_bound: bool,
}

impl MonomialInequality {
    pub fn new(
        num_exponent: Vec<u32>,
        den_exponent: Vec<u32>,
        log_bound: Rat,
    ) -> Result<Self, String> {
        if num_exponent.len() != den_exponent.len() {
            return Err("exponent vectors differ in length".into());
        }
        if num_exponent.iter().zip(&den_exponent).any(|(&b, &g)| b > 0 && g > 0) {
            return Err("numerator and denominator exponents overlap".into());
        }
        if num_exponent.iter().all(|&b| b == 0) && den_exponent.iter().all(|&g| g == 0) {
            return Err("both exponent vectors are zero".into());
        }
        Ok(MonomialInequality {
            num_exponent,
            den_exponent,
            log_bound,
            approx_bound: false,
        })
    }

    /// Convenience form `r^beta < c * r^gamma` for a rational scale `c > 0`.
    /// Stores `ln c` as a rational correct to 30 decimal digits and marks
    /// the inequality (and any domain built from it) approximate, since
    /// exact hull equality is only meaningful for exact log bounds.
    pub fn with_scale(
        num_exponent: Vec<u32>,
        den_exponent: Vec<u32>,
        scale: &Rat,
    ) -> Result<Self, String> {
        if !scale.is_positive() {
            return Err("scale must be positive".into());
        }
        let mut ineq = MonomialInequality::new(num_exponent, den_exponent, ln_approx(scale, 30))?;
        ineq.approx_bound = true;
        Ok(ineq)
    }

    pub fn dimension(&self) -> usize {
        self.num_exponent.len()
    }

    pub fn num_exponent(&self) -> &[u32] {
        &self.num_exponent
    }

    pub fn den_exponent(&self) -> &[u32] {
        &self.den_exponent
    }

    pub fn log_bound(&self) -> &Rat {
        &self.log_bound
    }

    /// Evaluate at a modulus vector with the `0^0 = 1` convention.
    pub fn holds_at(&self, r: &[f64]) -> bool {
        let mut lhs = 1.0;
        for (&b, &v) in self.num_exponent.iter().zip(r) {
            if b > 0 {
                lhs *= v.powi(b as i32);
            }
        }
        let mut rhs = self.log_bound.to_f64().exp();
        for (&g, &v) in self.den_exponent.iter().zip(r) {
            if g > 0 {
                rhs *= v.powi(g as i32);
            }
        }
        lhs < rhs
    }

    /// Log-coordinate halfspace `<beta - gamma, x> < rho`.
    pub fn halfspace(&self) -> HalfSpace {
        let normal: Vec<Rat> = self
            .num_exponent
            .iter()
            .zip(&self.den_exponent)
            .map(|(&b, &g)| Rat::from_int(b as i64 - g as i64))
            .collect();
        HalfSpace::new(normal, self.log_bound.clone(), true).expect("nonzero exponent vector")
    }
}

/// Verdict of the randomized log-convexity test.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexityVerdict {
    Convex,
    NotConvex { witness_modulus: Vec<f64> },
    ProbablyConvex { samples: usize },
}

/// A bounded Reinhardt domain: a finite union of monomial polyhedra
/// inside the polydisc of log radius `box_log_radius`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DomainDto", into = "DomainDto")]
pub struct ReinhardtDomain {
    dimension: usize,
    pieces: Vec<Vec<MonomialInequality>>,
    box_log_radius: Rat,
    approximate_bounds: bool,
    #[serde(skip)]
    piece_polyhedra: Vec<LogPolyhedron>,
}

impl ReinhardtDomain {
    /// Validated constructor: every piece must be nonempty inside the box.
    pub fn build(
        dimension: usize,
        pieces: Vec<Vec<MonomialInequality>>,
        box_log_radius: Rat,
    ) -> Result<Self, DomainError> {
        if pieces.is_empty() {
            return Err(DomainError::NoPieces);
        }
        let mut approximate = false;
        for (pi, piece) in pieces.iter().enumerate() {
            for (ii, ineq) in piece.iter().enumerate() {
                if ineq.dimension() != dimension {
                    return Err(DomainError::BadExponent {
                        piece: pi,
                        inequality: ii,
                        reason: format!(
                            "exponent length {} does not match dimension {}",
                            ineq.dimension(),
                            dimension
                        ),
                    });
                }
                approximate |= ineq.approx_bound;
            }
        }
        let piece_polyhedra: Vec<LogPolyhedron> = pieces
            .iter()
            .map(|piece| piece_polyhedron_raw(dimension, piece, &box_log_radius))
            .collect::<Result<_, _>>()?;
        for (pi, poly) in piece_polyhedra.iter().enumerate() {
            if !lp_feasible(poly)?.is_feasible() {
                return Err(DomainError::EmptyPiece(pi));
            }
        }
        Ok(ReinhardtDomain {
            dimension,
            pieces,
            box_log_radius,
            approximate_bounds: approximate,
            piece_polyhedra,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn pieces(&self) -> &[Vec<MonomialInequality>] {
        &self.pieces
    }

    pub fn box_log_radius(&self) -> &Rat {
        &self.box_log_radius
    }

    /// True when some defining bound was converted from a scale factor and
    /// is a 30-digit approximation rather than an exact log.
    pub fn has_approximate_bounds(&self) -> bool {
        self.approximate_bounds
    }

    /// Log-coordinate polyhedron of one piece, box constraints included.
    pub fn piece_polyhedron(&self, piece: usize) -> &LogPolyhedron {
        &self.piece_polyhedra[piece]
    }

    /// Membership of a modulus vector: some piece satisfies all of its
    /// inequalities and the box. Non-finite or negative inputs are never
    /// members.
    pub fn contains_modulus(&self, r: &[f64]) -> bool {
        if r.len() != self.dimension || r.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return false;
        }
        let box_radius = self.box_log_radius.to_f64().exp();
        if r.iter().any(|&v| v >= box_radius) {
            return false;
        }
        self.pieces
            .iter()
            .any(|piece| piece.iter().all(|ineq| ineq.holds_at(r)))
    }

    /// Exact membership of a rational log point in some piece's shadow.
    pub fn log_contains(&self, x: &[Rat]) -> bool {
        self.piece_polyhedra.iter().any(|p| p.contains(x))
    }

    /// The origin is outside the (open) domain but in its closure, the
    /// latter decided by a joint negative recession direction of some
    /// piece. This is the hypothesis under which negative Laurent
    /// indices of boundary-smooth functions vanish.
    pub fn origin_on_boundary(&self) -> bool {
        let zeros = vec![0.0; self.dimension];
        if self.contains_modulus(&zeros) {
            return false;
        }
        let all: Vec<usize> = (0..self.dimension).collect();
        self.piece_polyhedra.iter().any(|p| {
            geometry::joint_negative_recession(p, &all).unwrap_or(false)
        })
    }

    /// Interior witness direction for the origin, when it lies in the
    /// closure: a recession direction with every component <= -1.
    pub fn origin_recession_witness(&self) -> Option<(usize, Vec<Rat>)> {
        let all: Vec<usize> = (0..self.dimension).collect();
        for (i, p) in self.piece_polyhedra.iter().enumerate() {
            if let Ok(Some(d)) = geometry::joint_negative_recession_witness(p, &all) {
                return Some((i, d));
            }
        }
        None
    }

    /// Randomized log-convexity check. A single polyhedral piece is convex
    /// outright. For unions, sample pairs of jittered interior points and
    /// test their log-space midpoints exactly; the first midpoint outside
    /// every piece refutes convexity (it lies in the log-convex hull by
    /// construction). Surviving `samples` rounds is only evidence.
    pub fn is_log_convex(&self, samples: usize, seed: u64) -> ConvexityVerdict {
        if self.pieces.len() == 1 {
            return ConvexityVerdict::Convex;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let witnesses: Vec<Vec<Rat>> = self
            .piece_polyhedra
            .iter()
            .map(|p| {
                lp_feasible(p)
                    .expect("validated piece")
                    .witness()
                    .expect("validated piece is nonempty")
                    .to_vec()
            })
            .collect();
        for _ in 0..samples {
            let i = rng.gen_range(0..self.pieces.len());
            let mut j = rng.gen_range(0..self.pieces.len());
            if self.pieces.len() > 1 && j == i {
                j = (j + 1) % self.pieces.len();
            }
            let a = self.jitter_inside(&mut rng, i, &witnesses[i]);
            let b = self.jitter_inside(&mut rng, j, &witnesses[j]);
            let midpoint: Vec<Rat> = a
                .iter()
                .zip(&b)
                .map(|(p, q)| (p + q) / Rat::from_int(2))
                .collect();
            if !self.log_contains(&midpoint) {
                let witness_modulus = midpoint.iter().map(|x| x.to_f64().exp()).collect();
                return ConvexityVerdict::NotConvex { witness_modulus };
            }
        }
        ConvexityVerdict::ProbablyConvex { samples }
    }

    fn jitter_inside(&self, rng: &mut ChaCha8Rng, piece: usize, base: &[Rat]) -> Vec<Rat> {
        let poly = &self.piece_polyhedra[piece];
        let mut scale = Rat::from_pair(1, 2);
        for _ in 0..5 {
            let candidate: Vec<Rat> = base
                .iter()
                .map(|x| {
                    let noise = Rat::from_pair(rng.gen_range(-1000..=1000), 1000);
                    x + &(noise * scale.clone())
                })
                .collect();
            if poly.contains(&candidate) {
                return candidate;
            }
            scale = scale / Rat::from_int(2);
        }
        base.to_vec()
    }
}

fn piece_polyhedron_raw(
    dimension: usize,
    piece: &[MonomialInequality],
    box_log_radius: &Rat,
) -> Result<LogPolyhedron, DomainError> {
    let mut halfspaces: Vec<HalfSpace> = piece.iter().map(MonomialInequality::halfspace).collect();
    for j in 0..dimension {
        let mut normal = vec![Rat::zero(); dimension];
        normal[j] = Rat::one();
        halfspaces.push(HalfSpace::new(normal, box_log_radius.clone(), true)?);
    }
    Ok(LogPolyhedron::new(dimension, halfspaces)?)
}

// ---------------------------------------------------------------------------
// JSON schema

#[derive(Serialize, Deserialize, Clone)]
struct InequalityDto {
    num_exponent: Vec<u32>,
    den_exponent: Vec<u32>,
    log_bound: Rat,
}

#[derive(Serialize, Deserialize, Clone)]
struct DomainDto {
    n: usize,
    box_log_radius: Rat,
    pieces: Vec<Vec<InequalityDto>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    approximate_bounds: bool,
}

impl TryFrom<DomainDto> for ReinhardtDomain {
    type Error = String;

    fn try_from(dto: DomainDto) -> Result<Self, Self::Error> {
        let pieces: Vec<Vec<MonomialInequality>> = dto
            .pieces
            .iter()
            .enumerate()
            .map(|(pi, piece)| {
                piece
                    .iter()
                    .enumerate()
                    .map(|(ii, ineq)| {
                        MonomialInequality::new(
                            ineq.num_exponent.clone(),
                            ineq.den_exponent.clone(),
                            ineq.log_bound.clone(),
                        )
                        .map_err(|reason| format!("piece {pi}, inequality {ii}: {reason}"))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let mut domain = ReinhardtDomain::build(dto.n, pieces, dto.box_log_radius)
            .map_err(|e| e.to_string())?;
        domain.approximate_bounds |= dto.approximate_bounds;
        Ok(domain)
    }
}

impl From<ReinhardtDomain> for DomainDto {
    fn from(d: ReinhardtDomain) -> DomainDto {
        DomainDto {
            n: d.dimension,
            box_log_radius: d.box_log_radius.clone(),
            pieces: d
                .pieces
                .iter()
                .map(|piece| {
                    piece
                        .iter()
                        .map(|ineq| InequalityDto {
                            num_exponent: ineq.num_exponent.clone(),
                            den_exponent: ineq.den_exponent.clone(),
                            log_bound: ineq.log_bound.clone(),
                        })
                        .collect()
                })
                .collect(),
            approximate_bounds: d.approximate_bounds,
        }
    }
}
