//! Exact rational polyhedral machinery in log-coordinate space.
//!
//! A Reinhardt domain's modulus set is studied through its log shadow,
//! a polyhedron cut out by halfspaces with rational data. Everything in
//! this module is exact: feasibility of strict systems is decided by
//! maximizing a slack variable, generator enumeration intersects facet
//! hyperplanes, and H-representations are canonicalized by an LP
//! redundancy check so set equality is a plain comparison.

pub mod linalg;
pub mod lp;

mod generators;

pub use generators::{enumerate_generators, hull_from_generators, FacetInfo, HullHrep};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rat::Rat;
use linalg::to_coprime_integers;
use lp::{LpProblem, LpSolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("halfspaces disagree on the ambient dimension")]
    DimensionMismatch,
    #[error("operation supports dimension 1..=3, got {0}")]
    UnsupportedDimension(usize),
    #[error("polyhedron is empty")]
    EmptyPolyhedron,
    #[error("degenerate generator input (polyhedron is not full-dimensional)")]
    DegenerateInput { point: Option<Vec<Rat>> },
    #[error("halfspace normal must not be the zero vector")]
    ZeroNormal,
    #[error("recession cone contains a line; generator enumeration needs a pointed polyhedron")]
    NotPointed,
}

/// One linear inequality `<normal, x> < bound` (strict) or `<= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpace {
    normal: Vec<Rat>,
    bound: Rat,
    strict: bool,
}

impl HalfSpace {
    pub fn new(normal: Vec<Rat>, bound: Rat, strict: bool) -> Result<Self, GeometryError> {
        if normal.iter().all(Rat::is_zero) {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(HalfSpace {
            normal,
            bound,
            strict,
        })
    }

    /// Strict halfspace with small integer data, mostly for tests.
    pub fn strict_int(normal: &[i64], bound: i64) -> Self {
        HalfSpace::new(
            normal.iter().map(|&v| Rat::from_int(v)).collect(),
            Rat::from_int(bound),
            true,
        )
        .expect("nonzero normal")
    }

    pub fn dimension(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[Rat] {
        &self.normal
    }

    pub fn bound(&self) -> &Rat {
        &self.bound
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.normal
            .iter()
            .zip(x)
            .map(|(a, v)| a * v)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    /// Membership honoring the strict flag.
    pub fn admits(&self, x: &[Rat]) -> bool {
        let v = self.eval(x);
        if self.strict {
            v < self.bound
        } else {
            v <= self.bound
        }
    }

    /// Closure membership (always `<=`).
    pub fn weakly_admits(&self, x: &[Rat]) -> bool {
        self.eval(x) <= self.bound
    }

    /// Scale by a positive rational so the normal has coprime integer
    /// entries. The inequality direction is unchanged, so this is a
    /// canonical form for comparing halfspaces.
    pub fn normalized(&self) -> HalfSpace {
        let ints = to_coprime_integers(&self.normal);
        // bound scales by the same positive factor: find it from any
        // nonzero entry.
        let k = self
            .normal
            .iter()
            .position(|v| !v.is_zero())
            .expect("nonzero normal");
        let factor = &ints[k] / &self.normal[k];
        debug_assert!(factor.is_positive());
        HalfSpace {
            normal: ints,
            bound: &self.bound * &factor,
            strict: self.strict,
        }
    }

    fn sort_key(&self) -> (Vec<Rat>, Rat, bool) {
        (self.normal.clone(), self.bound.clone(), self.strict)
    }
}

/// Vertices and extreme rays of a polyhedron (V-representation).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Generators {
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

/// Intersection of halfspaces in a fixed dimension, optionally carrying
/// its generators as a cache.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogPolyhedron {
    dimension: usize,
    halfspaces: Vec<HalfSpace>,
    generators: Option<Generators>,
}

impl LogPolyhedron {
    pub fn new(dimension: usize, halfspaces: Vec<HalfSpace>) -> Result<Self, GeometryError> {
        if halfspaces.iter().any(|h| h.dimension() != dimension) {
            return Err(GeometryError::DimensionMismatch);
        }
        Ok(LogPolyhedron {
            dimension,
            halfspaces,
            generators: None,
        })
    }

    pub fn with_generators(
        dimension: usize,
        halfspaces: Vec<HalfSpace>,
        generators: Generators,
    ) -> Result<Self, GeometryError> {
        let mut p = LogPolyhedron::new(dimension, halfspaces)?;
        for v in &generators.vertices {
            if v.len() != dimension {
                return Err(GeometryError::DimensionMismatch);
            }
            debug_assert!(p.closure_contains(v), "cached vertex violates a halfspace");
        }
        for r in &generators.rays {
            if r.len() != dimension {
                return Err(GeometryError::DimensionMismatch);
            }
            debug_assert!(
                p.halfspaces.iter().all(|h| !h.eval(r).is_positive()),
                "cached ray leaves the recession cone"
            );
        }
        p.generators = Some(generators);
        Ok(p)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn generators(&self) -> Option<&Generators> {
        self.generators.as_ref()
    }

    /// Exact membership honoring strictness flags.
    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.dimension && self.halfspaces.iter().all(|h| h.admits(x))
    }

    /// Exact membership in the closure (all inequalities weak).
    pub fn closure_contains(&self, x: &[Rat]) -> bool {
        x.len() == self.dimension && self.halfspaces.iter().all(|h| h.weakly_admits(x))
    }

    /// Canonical minimal H-representation: normalized halfspaces, exact
    /// duplicates merged, LP-redundant ones dropped, sorted. Assumes the
    /// polyhedron is nonempty; two nonempty full-dimensional polyhedra
    /// describe the same point set iff their canonical forms are equal.
    pub fn canonical_halfspaces(&self) -> Vec<HalfSpace> {
        let mut hs: Vec<HalfSpace> = self.halfspaces.iter().map(HalfSpace::normalized).collect();
        hs.sort_by_key(HalfSpace::sort_key);
        hs.dedup_by(|a, b| a.normal == b.normal && a.bound == b.bound);

        let mut i = 0;
        while i < hs.len() {
            if hs.len() == 1 {
                break;
            }
            let target = hs[i].clone();
            let mut lp = LpProblem::new(self.dimension);
            for (j, h) in hs.iter().enumerate() {
                if j != i {
                    lp.add_le(h.normal.clone(), h.bound.clone());
                }
            }
            lp.set_objective(target.normal.clone());
            let redundant = match lp.solve() {
                LpSolution::Optimal { value, .. } => value <= target.bound,
                LpSolution::Unbounded => false,
                LpSolution::Infeasible => false,
            };
            if redundant {
                hs.remove(i);
            } else {
                i += 1;
            }
        }
        hs
    }

    /// Set equality via canonical H-representations.
    pub fn same_set_as(&self, other: &LogPolyhedron) -> bool {
        self.dimension == other.dimension
            && self.canonical_halfspaces() == other.canonical_halfspaces()
    }
}

/// Outcome of an exact feasibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rat>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rat]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

/// Exact feasibility of the (possibly strict) system. Strict
/// inequalities are tightened by a shared slack variable `t <= 1`; the
/// system has an interior point iff the maximal slack is positive.
pub fn lp_feasible(p: &LogPolyhedron) -> Result<Feasibility, GeometryError> {
    let n = p.dimension;
    if p.halfspaces.iter().any(|h| h.dimension() != n) {
        return Err(GeometryError::DimensionMismatch);
    }
    let mut lp = LpProblem::new(n + 1);
    for h in &p.halfspaces {
        let mut coeffs = h.normal.clone();
        coeffs.push(if h.strict { Rat::one() } else { Rat::zero() });
        lp.add_le(coeffs, h.bound.clone());
    }
    let mut cap = vec![Rat::zero(); n + 1];
    cap[n] = Rat::one();
    lp.add_le(cap.clone(), Rat::one());
    lp.set_objective(cap);
    match lp.solve() {
        LpSolution::Infeasible => Ok(Feasibility::Infeasible),
        LpSolution::Optimal { value, mut point } => {
            if value.is_positive() {
                point.truncate(n);
                Ok(Feasibility::Feasible(point))
            } else {
                Ok(Feasibility::Infeasible)
            }
        }
        LpSolution::Unbounded => unreachable!("slack objective is capped at 1"),
    }
}

/// True iff `d` lies in the recession cone `<normal_i, d> <= 0` for all
/// halfspaces. Vacuously computed on empty polyhedra; callers guarantee
/// nonemptiness where it matters.
pub fn recession_contains(p: &LogPolyhedron, d: &[Rat]) -> Result<bool, GeometryError> {
    if d.len() != p.dimension {
        return Err(GeometryError::DimensionMismatch);
    }
    Ok(p.halfspaces.iter().all(|h| !h.eval(d).is_positive()))
}

/// True iff the recession cone contains a direction with `d_j <= -1` for
/// every coordinate in `coords`: one exact LP feasibility question.
pub fn joint_negative_recession(
    p: &LogPolyhedron,
    coords: &[usize],
) -> Result<bool, GeometryError> {
    Ok(joint_negative_recession_witness(p, coords)?.is_some())
}

/// As [`joint_negative_recession`], returning the witness direction.
pub fn joint_negative_recession_witness(
    p: &LogPolyhedron,
    coords: &[usize],
) -> Result<Option<Vec<Rat>>, GeometryError> {
    let n = p.dimension;
    if coords.iter().any(|&j| j >= n) {
        return Err(GeometryError::DimensionMismatch);
    }
    if !lp_feasible(p)?.is_feasible() {
        return Err(GeometryError::EmptyPolyhedron);
    }
    let mut lp = LpProblem::new(n);
    for h in &p.halfspaces {
        lp.add_le(h.normal.clone(), Rat::zero());
    }
    for &j in coords {
        let mut row = vec![Rat::zero(); n];
        row[j] = Rat::one();
        lp.add_le(row, Rat::from_int(-1));
    }
    match lp.solve() {
        LpSolution::Optimal { point, .. } => Ok(Some(point)),
        LpSolution::Infeasible => Ok(None),
        LpSolution::Unbounded => unreachable!("zero objective"),
    }
}

#[cfg(test)]
pub(crate) fn rat_vec(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| Rat::from_int(v)).collect()
}
