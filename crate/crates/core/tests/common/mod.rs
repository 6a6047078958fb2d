#![allow(dead_code)]

//! Shared independent oracles for the integration suites: a naive
//! Fourier-Motzkin eliminator for exact feasibility and a grid
//! down-closure oracle for complete hulls. Both are deliberately written
//! from first principles, independent of the library's LP and hull code
//! paths.

use reinhardt_core::domain::ReinhardtDomain;
use reinhardt_core::geometry::{HalfSpace, LogPolyhedron};
use reinhardt_core::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Lt,
    Le,
}

/// One inequality `<coeffs, x> REL bound`.
pub type FmRow = (Vec<Rat>, Rel, Rat);

/// Exact feasibility by eliminating variables one at a time. Combining a
/// lower and an upper bound on the eliminated variable keeps strictness
/// if either side was strict.
pub fn fm_feasible(dim: usize, rows: &[FmRow]) -> bool {
    let mut rows: Vec<FmRow> = rows.to_vec();
    for var in 0..dim {
        let mut kept: Vec<FmRow> = Vec::new();
        let mut uppers: Vec<FmRow> = Vec::new();
        let mut lowers: Vec<FmRow> = Vec::new();
        for row in rows {
            if row.0[var].is_zero() {
                kept.push(row);
            } else if row.0[var].is_positive() {
                uppers.push(row);
            } else {
                lowers.push(row);
            }
        }
        for (lc, lrel, lb) in &lowers {
            for (uc, urel, ub) in &uppers {
                // lower: lc[var] < 0. Chain through x_var:
                //   u_k * (sum_j lc_j x_j - lb) <= |lc_k| * (ub - sum_j uc_j x_j)
                let u_k = uc[var].clone();
                let l_k = lc[var].abs();
                let coeffs: Vec<Rat> = (0..dim)
                    .map(|j| {
                        if j == var {
                            Rat::zero()
                        } else {
                            &u_k * &lc[j] + &l_k * &uc[j]
                        }
                    })
                    .collect();
                let bound = &u_k * lb + &l_k * ub;
                let rel = if *lrel == Rel::Lt || *urel == Rel::Lt {
                    Rel::Lt
                } else {
                    Rel::Le
                };
                kept.push((coeffs, rel, bound));
            }
        }
        rows = kept;
    }
    rows.iter().all(|(_, rel, bound)| match rel {
        Rel::Lt => bound.is_positive(),
        Rel::Le => !bound.is_negative(),
    })
}

pub fn polyhedron_to_fm_rows(p: &LogPolyhedron) -> Vec<FmRow> {
    p.halfspaces()
        .iter()
        .map(|h| {
            (
                h.normal().to_vec(),
                if h.is_strict() { Rel::Lt } else { Rel::Le },
                h.bound().clone(),
            )
        })
        .collect()
}

/// A square rational grid over `[lo, hi]^2` with exact membership of a
/// domain's log shadow and the induced down-closure reachability: a grid
/// point is reachable iff some grid point weakly above-right of it lies
/// in the domain.
pub struct GridOracle {
    pub coords: Vec<Rat>,
    pub cells: usize,
    pub member: Vec<bool>,
    pub reachable: Vec<bool>,
}

impl GridOracle {
    pub fn new(domain: &ReinhardtDomain, lo: &Rat, hi: &Rat, cells: usize) -> GridOracle {
        assert_eq!(domain.dimension(), 2, "grid oracle is two-dimensional");
        let span = hi - lo;
        let coords: Vec<Rat> = (0..cells)
            .map(|i| lo + &(&span * &Rat::from_pair(i as i64, cells as i64 - 1)))
            .collect();
        let mut member = vec![false; cells * cells];
        for i in 0..cells {
            for j in 0..cells {
                let x = vec![coords[i].clone(), coords[j].clone()];
                member[i + cells * j] = domain.log_contains(&x);
            }
        }
        let mut reachable = member.clone();
        for i in (0..cells).rev() {
            for j in (0..cells).rev() {
                let mut r = reachable[i + cells * j];
                if i + 1 < cells {
                    r = r || reachable[i + 1 + cells * j];
                }
                if j + 1 < cells {
                    r = r || reachable[i + cells * (j + 1)];
                }
                reachable[i + cells * j] = r;
            }
        }
        GridOracle {
            coords,
            cells,
            member,
            reachable,
        }
    }

    pub fn cell_size(&self) -> Rat {
        &self.coords[1] - &self.coords[0]
    }

    pub fn is_reachable(&self, i: usize, j: usize) -> bool {
        self.reachable[i + self.cells * j]
    }

    pub fn any_member(&self) -> bool {
        self.member.iter().any(|&m| m)
    }

    /// True when the grid point is within one cell (L-infinity) of the
    /// hyperplane of some halfspace in the list.
    pub fn near_any_facet(&self, x: &[Rat], facets: &[HalfSpace]) -> bool {
        let h = self.cell_size();
        facets.iter().any(|f| {
            let slack = (f.eval(x) - f.bound()).abs();
            let l1: Rat = f
                .normal()
                .iter()
                .map(Rat::abs)
                .fold(Rat::zero(), |acc, v| acc + v);
            slack <= &l1 * &h
        })
    }
}

/// All halfspaces of all pieces of a domain, for facet-proximity tests.
pub fn all_piece_halfspaces(domain: &ReinhardtDomain) -> Vec<HalfSpace> {
    (0..domain.pieces().len())
        .flat_map(|i| domain.piece_polyhedron(i).halfspaces().to_vec())
        .collect()
}

/// True when the set of domain points dominating `x` still contains an
/// L-infinity ball of radius `h` after eroding every piece constraint.
/// If it does, a grid point of spacing `h` must dominate `x`, so a
/// hull-vs-oracle mismatch at `x` would be a genuine bug; if it does not,
/// the grid simply cannot resolve the dominating set there.
fn dominating_set_survives_erosion(domain: &ReinhardtDomain, x: &[Rat], h: &Rat) -> bool {
    let n = domain.dimension();
    (0..domain.pieces().len()).any(|p| {
        let mut halfspaces: Vec<HalfSpace> = domain
            .piece_polyhedron(p)
            .halfspaces()
            .iter()
            .map(|f| {
                let l1: Rat = f
                    .normal()
                    .iter()
                    .map(Rat::abs)
                    .fold(Rat::zero(), |acc, v| acc + v);
                HalfSpace::new(f.normal().to_vec(), f.bound() - &(&l1 * h), true)
                    .expect("nonzero normal")
            })
            .collect();
        for (j, xj) in x.iter().enumerate() {
            let mut normal = vec![Rat::zero(); n];
            normal[j] = Rat::from_int(-1);
            halfspaces.push(
                HalfSpace::new(normal, -(xj + h), false).expect("nonzero normal"),
            );
        }
        let eroded = LogPolyhedron::new(n, halfspaces).expect("consistent dimension");
        reinhardt_core::geometry::lp_feasible(&eroded)
            .expect("well-formed")
            .is_feasible()
    })
}

/// Compare a computed complete hull against the down-closure oracle.
/// Direction one is unconditional: every reachable grid point must lie in
/// the hull. Direction two allows mismatches only within one grid cell of
/// a facet; with `erosion_fallback` it additionally tolerates points
/// whose dominating set is thinner than a cell (exact erosion LP), which
/// arises for steep piece inequalities.
pub fn check_hull_against_oracle(
    domain: &ReinhardtDomain,
    hull: &ReinhardtDomain,
    lo: &Rat,
    hi: &Rat,
    cells: usize,
    erosion_fallback: bool,
) -> Result<(), String> {
    let oracle = GridOracle::new(domain, lo, hi, cells);
    let mut facets = all_piece_halfspaces(domain);
    facets.extend(all_piece_halfspaces(hull));
    let h = oracle.cell_size();
    for i in 0..cells {
        for j in 0..cells {
            let x = vec![oracle.coords[i].clone(), oracle.coords[j].clone()];
            let in_hull = hull.log_contains(&x);
            let reach = oracle.is_reachable(i, j);
            if reach && !in_hull {
                return Err(format!(
                    "oracle point ({}, {}) escapes the computed hull",
                    x[0], x[1]
                ));
            }
            if in_hull
                && !reach
                && !oracle.near_any_facet(&x, &facets)
                && (!erosion_fallback || dominating_set_survives_erosion(domain, &x, &h))
            {
                return Err(format!(
                    "hull point ({}, {}) is invisible to the oracle away from facet cells",
                    x[0], x[1]
                ));
            }
        }
    }
    Ok(())
}
