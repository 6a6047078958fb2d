//! Complete and log-convex complete Reinhardt hulls.
//!
//! In log coordinates, completing a Reinhardt domain is down-closure:
//! every piece gains the rays `-e_1, ..., -e_n` before its facets are
//! recomputed. The log-convex complete hull additionally convexifies,
//! pooling the generators of all pieces into a single hull. Both are
//! computed exactly in V-representation and converted back, so results
//! are canonical H-representations suited to exact equality tests.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::domain::{DomainError, MonomialInequality, ReinhardtDomain};
use crate::geometry::{
    enumerate_generators, hull_from_generators, lp_feasible, GeometryError, HalfSpace, HullHrep,
};
use crate::rat::Rat;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HullError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("domains live in different dimensions")]
    DimensionMismatch,
}

/// One hull facet with the generators that span it.
#[derive(Debug, Clone)]
pub struct FacetProvenance {
    pub normal: Vec<Rat>,
    pub bound: Rat,
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

/// A computed hull plus, per output piece, where its facets came from.
#[derive(Debug, Clone)]
pub struct HullResult {
    pub hull: ReinhardtDomain,
    pub provenance: Vec<Vec<FacetProvenance>>,
}

fn provenance_of(hrep: &HullHrep, vertices: &[Vec<Rat>], rays: &[Vec<Rat>]) -> Vec<FacetProvenance> {
    hrep.facets
        .iter()
        .map(|f| FacetProvenance {
            normal: f.halfspace.normal().to_vec(),
            bound: f.halfspace.bound().clone(),
            vertices: f.tight_vertices.iter().map(|&i| vertices[i].clone()).collect(),
            rays: f.tight_rays.iter().map(|&i| rays[i].clone()).collect(),
        })
        .collect()
}

/// Convert a hull facet back to a monomial inequality. Hull facets are
/// normalized to coprime integer normals, so the positive part goes to
/// the numerator exponent and the negative part to the denominator.
fn halfspace_to_inequality(h: &HalfSpace) -> MonomialInequality {
    let mut beta = Vec::with_capacity(h.dimension());
    let mut gamma = Vec::with_capacity(h.dimension());
    for a in h.normal() {
        let v = a.to_i64().expect("normalized integer normal");
        beta.push(v.max(0) as u32);
        gamma.push((-v).max(0) as u32);
    }
    MonomialInequality::new(beta, gamma, h.bound().clone()).expect("nonzero facet normal")
}

fn is_box_facet(h: &HalfSpace, box_log_radius: &Rat) -> bool {
    h.bound() == box_log_radius
        && h.normal().iter().filter(|v| !v.is_zero()).count() == 1
        && h.normal().iter().any(|v| *v == Rat::one())
}

fn unit_down_rays(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|j| {
            let mut r = vec![Rat::zero(); n];
            r[j] = Rat::from_int(-1);
            r
        })
        .collect()
}

fn piece_from_hrep(
    hrep: &HullHrep,
    box_log_radius: &Rat,
) -> (Vec<MonomialInequality>, Vec<FacetProvenance>) {
    let vertices = &hrep.polyhedron.generators().expect("hull caches generators").vertices;
    let rays = &hrep.polyhedron.generators().expect("hull caches generators").rays;
    let provenance = provenance_of(hrep, vertices, rays);
    let inequalities = hrep
        .polyhedron
        .halfspaces()
        .iter()
        .filter(|h| !is_box_facet(h, box_log_radius))
        .map(halfspace_to_inequality)
        .collect();
    (inequalities, provenance)
}

/// Smallest complete Reinhardt domain containing `d`: the union over its
/// points of the polydiscs they span. Computed piece by piece, so the
/// result is a union and need not be convex.
pub fn complete_hull(d: &ReinhardtDomain) -> Result<HullResult, HullError> {
    let n = d.dimension();
    let mut pieces = Vec::with_capacity(d.pieces().len());
    let mut provenance = Vec::with_capacity(d.pieces().len());
    for i in 0..d.pieces().len() {
        let (vertices, mut rays) = enumerate_generators(d.piece_polyhedron(i))?;
        for down in unit_down_rays(n) {
            if !rays.contains(&down) {
                rays.push(down);
            }
        }
        rays.sort();
        let hrep = hull_from_generators(&vertices, &rays)?;
        let (inequalities, piece_provenance) = piece_from_hrep(&hrep, d.box_log_radius());
        pieces.push(inequalities);
        provenance.push(piece_provenance);
    }
    let hull = ReinhardtDomain::build(n, pieces, d.box_log_radius().clone())?;
    Ok(HullResult { hull, provenance })
}

/// Smallest complete log-convex Reinhardt domain containing `d`: the
/// convex hull (in log coordinates) of all pieces' generators together
/// with the down-closure rays. Always a single convex piece.
pub fn envelope(d: &ReinhardtDomain) -> Result<HullResult, HullError> {
    let n = d.dimension();
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    let mut rays: Vec<Vec<Rat>> = unit_down_rays(n);
    for i in 0..d.pieces().len() {
        let (v, r) = enumerate_generators(d.piece_polyhedron(i))?;
        for x in v {
            if !vertices.contains(&x) {
                vertices.push(x);
            }
        }
        for x in r {
            if !rays.contains(&x) {
                rays.push(x);
            }
        }
    }
    vertices.sort();
    rays.sort();
    let hrep = hull_from_generators(&vertices, &rays)?;
    let (inequalities, piece_provenance) = piece_from_hrep(&hrep, d.box_log_radius());
    let hull = ReinhardtDomain::build(n, vec![inequalities], d.box_log_radius().clone())?;
    Ok(HullResult {
        hull,
        provenance: vec![piece_provenance],
    })
}

/// Verdict of a subset test between two domains.
#[derive(Debug, Clone, PartialEq)]
pub enum SubsetVerdict {
    /// `b` is a single convex piece and every generator of `a` passed the
    /// exact check against its halfspaces.
    CertifiedOnConvexB,
    ProbablySubset { probes: usize },
    NotSubset { witness_modulus: Vec<f64> },
}

/// Is `a` a subset of `b`? Exact certification when `b` is convex (one
/// piece): every vertex of `a` must weakly satisfy the halfspaces of `b`
/// and every ray must lie in its recession cone. Otherwise randomized
/// probing of interior points of `a`, with an exact counterexample on
/// failure.
pub fn domain_subset(
    a: &ReinhardtDomain,
    b: &ReinhardtDomain,
    probes: usize,
    seed: u64,
) -> Result<SubsetVerdict, HullError> {
    if a.dimension() != b.dimension() {
        return Err(HullError::DimensionMismatch);
    }
    if b.pieces().len() == 1 {
        let b_poly = b.piece_polyhedron(0);
        for i in 0..a.pieces().len() {
            let a_poly = a.piece_polyhedron(i);
            let (vertices, rays) = enumerate_generators(a_poly)?;
            let interior = lp_feasible(a_poly)?
                .witness()
                .expect("validated piece is nonempty")
                .to_vec();
            for v in &vertices {
                if let Some(h) = b_poly.halfspaces().iter().find(|h| !h.weakly_admits(v)) {
                    let witness = escape_towards_vertex(a, i, &interior, v, h);
                    return Ok(not_subset(a, b, witness));
                }
            }
            for r in &rays {
                if let Some(h) = b_poly
                    .halfspaces()
                    .iter()
                    .find(|h| h.eval(r).is_positive())
                {
                    let witness = escape_along_ray(&interior, r, h);
                    return Ok(not_subset(a, b, witness));
                }
            }
        }
        return Ok(SubsetVerdict::CertifiedOnConvexB);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..probes {
        let piece = rng.gen_range(0..a.pieces().len());
        let base = lp_feasible(a.piece_polyhedron(piece))?
            .witness()
            .expect("validated piece is nonempty")
            .to_vec();
        let x = jitter_in_piece(a, piece, &base, &mut rng);
        if !b.log_contains(&x) {
            return Ok(not_subset(a, b, x));
        }
    }
    Ok(SubsetVerdict::ProbablySubset { probes })
}

fn not_subset(a: &ReinhardtDomain, b: &ReinhardtDomain, x: Vec<Rat>) -> SubsetVerdict {
    debug_assert!(a.log_contains(&x), "witness must lie in a");
    debug_assert!(!b.log_contains(&x), "witness must avoid b");
    SubsetVerdict::NotSubset {
        witness_modulus: x.iter().map(|v| v.to_f64().exp()).collect(),
    }
}

/// Walk from an interior point of piece `i` of `a` toward a closure
/// vertex that violates `h`, staying strictly inside `a` while crossing
/// out of `b`. The open segment from an interior point to a closure point
/// stays interior, so some dyadic fraction along it works.
fn escape_towards_vertex(
    a: &ReinhardtDomain,
    piece: usize,
    interior: &[Rat],
    vertex: &[Rat],
    h: &HalfSpace,
) -> Vec<Rat> {
    let mut lambda = Rat::from_pair(1, 2);
    loop {
        let x: Vec<Rat> = interior
            .iter()
            .zip(vertex)
            .map(|(p, v)| p + &(&lambda * &(v - p)))
            .collect();
        if h.eval(&x) > *h.bound() {
            debug_assert!(a.piece_polyhedron(piece).contains(&x));
            return x;
        }
        lambda = Rat::one() - (Rat::one() - lambda) / Rat::from_int(2);
    }
}

/// Walk from an interior point along a recession ray on which `h` grows.
fn escape_along_ray(interior: &[Rat], ray: &[Rat], h: &HalfSpace) -> Vec<Rat> {
    let growth = h.eval(ray);
    debug_assert!(growth.is_positive());
    let gap = h.bound() - &h.eval(interior) + Rat::one();
    let t = (gap / growth).max(Rat::one());
    interior
        .iter()
        .zip(ray)
        .map(|(p, r)| p + &(&t * r))
        .collect()
}

fn jitter_in_piece(
    d: &ReinhardtDomain,
    piece: usize,
    base: &[Rat],
    rng: &mut ChaCha8Rng,
) -> Vec<Rat> {
    let poly = d.piece_polyhedron(piece);
    let mut scale = Rat::from_pair(1, 2);
    for _ in 0..5 {
        let candidate: Vec<Rat> = base
            .iter()
            .map(|x| x + &(Rat::from_pair(rng.gen_range(-1000..=1000), 1000) * scale.clone()))
            .collect();
        if poly.contains(&candidate) {
            return candidate;
        }
        scale = scale / Rat::from_int(2);
    }
    base.to_vec()
}
