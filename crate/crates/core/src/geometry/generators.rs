//! Double description in dimension <= 3 by brute force: vertices from
//! n-subsets of facet hyperplanes, extreme rays from (n-1)-subsets of
//! recession-cone normals, and facets of a V-representation from
//! n-subsets of homogenized generators.

use crate::rat::Rat;

use super::linalg::{affine_rank, nullspace_direction, rank, solve_square};
use super::{lp_feasible, GeometryError, Generators, HalfSpace, LogPolyhedron};

/// All k-subsets of 0..m in lexicographic order.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..m {
            current.push(i);
            rec(i + 1, m, k, current, out);
            current.pop();
        }
    }
    rec(0, m, k, &mut current, &mut out);
    out
}

/// Exact V-representation of a nonempty pointed polyhedron: the closure
/// of `p` equals conv(vertices) + cone(rays).
#[allow(clippy::type_complexity)]
pub fn enumerate_generators(
    p: &LogPolyhedron,
) -> Result<(Vec<Vec<Rat>>, Vec<Vec<Rat>>), GeometryError> {
    let n = p.dimension();
    if n == 0 || n > 3 {
        return Err(GeometryError::UnsupportedDimension(n));
    }
    if !lp_feasible(p)?.is_feasible() {
        return Err(GeometryError::EmptyPolyhedron);
    }
    let normals: Vec<Vec<Rat>> = p.halfspaces().iter().map(|h| h.normal().to_vec()).collect();
    if rank(&normals) < n {
        return Err(GeometryError::NotPointed);
    }
    let m = normals.len();

    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    for subset in subsets(m, n) {
        let a: Vec<Vec<Rat>> = subset.iter().map(|&i| normals[i].clone()).collect();
        let b: Vec<Rat> = subset
            .iter()
            .map(|&i| p.halfspaces()[i].bound().clone())
            .collect();
        if let Some(x) = solve_square(&a, &b) {
            if p.closure_contains(&x) && !vertices.contains(&x) {
                vertices.push(x);
            }
        }
    }
    vertices.sort();

    let mut rays: Vec<Vec<Rat>> = Vec::new();
    for subset in subsets(m, n - 1) {
        let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| normals[i].clone()).collect();
        let Some(dir) = nullspace_direction(&rows, n) else {
            continue;
        };
        for candidate in [dir.clone(), dir.iter().map(|v| -v).collect::<Vec<Rat>>()] {
            let in_cone = p
                .halfspaces()
                .iter()
                .all(|h| !h.eval(&candidate).is_positive());
            if in_cone && !rays.contains(&candidate) {
                rays.push(candidate);
            }
        }
    }
    rays.sort();

    Ok((vertices, rays))
}

/// One facet of a hull together with the input generators lying on it.
#[derive(Debug, Clone)]
pub struct FacetInfo {
    pub halfspace: HalfSpace,
    pub tight_vertices: Vec<usize>,
    pub tight_rays: Vec<usize>,
}

/// Minimal H-representation of conv(vertices) + cone(rays).
#[derive(Debug, Clone)]
pub struct HullHrep {
    pub polyhedron: LogPolyhedron,
    pub facets: Vec<FacetInfo>,
}

/// Convert a V-representation to its minimal H-representation; the
/// output inequalities are all strict (hulls of open domains are open).
///
/// Works by homogenizing: vertices become rays `(v, 1)` and rays `(r, 0)`
/// of a cone in dimension n+1, whose facets are spanned by n generators.
pub fn hull_from_generators(
    vertices: &[Vec<Rat>],
    rays: &[Vec<Rat>],
) -> Result<HullHrep, GeometryError> {
    let Some(first) = vertices.first() else {
        return Err(GeometryError::DegenerateInput { point: None });
    };
    let n = first.len();
    if n == 0 || n > 3 {
        return Err(GeometryError::UnsupportedDimension(n));
    }
    if vertices.iter().any(|v| v.len() != n) || rays.iter().any(|r| r.len() != n) {
        return Err(GeometryError::DimensionMismatch);
    }
    if affine_rank(vertices, rays) < n {
        let point = (rays.is_empty() && vertices.iter().all(|v| v == first))
            .then(|| first.clone());
        return Err(GeometryError::DegenerateInput { point });
    }

    let mut gens: Vec<Vec<Rat>> = Vec::with_capacity(vertices.len() + rays.len());
    for v in vertices {
        let mut g = v.clone();
        g.push(Rat::one());
        gens.push(g);
    }
    for r in rays {
        let mut g = r.clone();
        g.push(Rat::zero());
        gens.push(g);
    }

    let dot = |u: &[Rat], g: &[Rat]| -> Rat {
        u.iter()
            .zip(g)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, t| acc + t)
    };

    let mut facet_normals: Vec<Vec<Rat>> = Vec::new();
    for subset in subsets(gens.len(), n) {
        let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| gens[i].clone()).collect();
        let Some(u) = nullspace_direction(&rows, n + 1) else {
            continue;
        };
        let neg: Vec<Rat> = u.iter().map(|v| -v).collect();
        for candidate in [u, neg] {
            if gens.iter().all(|g| !dot(&candidate, g).is_positive()) {
                if candidate[..n].iter().all(Rat::is_zero) {
                    // hyperplane at infinity: no constraint on x
                    continue;
                }
                if !facet_normals.contains(&candidate) {
                    facet_normals.push(candidate);
                }
                break;
            }
        }
    }
    facet_normals.sort();

    let mut halfspaces = Vec::with_capacity(facet_normals.len());
    let mut facets = Vec::with_capacity(facet_normals.len());
    for u in facet_normals {
        let normal = u[..n].to_vec();
        let bound = -u[n].clone();
        let halfspace = HalfSpace::new(normal, bound, true)?;
        let tight_vertices = (0..vertices.len())
            .filter(|&i| dot(&u, &gens[i]).is_zero())
            .collect();
        let tight_rays = (0..rays.len())
            .filter(|&i| dot(&u, &gens[vertices.len() + i]).is_zero())
            .collect();
        facets.push(FacetInfo {
            halfspace: halfspace.clone(),
            tight_vertices,
            tight_rays,
        });
        halfspaces.push(halfspace);
    }

    let polyhedron = LogPolyhedron::with_generators(
        n,
        halfspaces,
        Generators {
            vertices: vertices.to_vec(),
            rays: rays.to_vec(),
        },
    )?;
    Ok(HullHrep { polyhedron, facets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat_vec;

    fn poly(halfspaces: Vec<HalfSpace>) -> LogPolyhedron {
        let n = halfspaces[0].dimension();
        LogPolyhedron::new(n, halfspaces).unwrap()
    }

    #[test]
    fn unit_square_corners() {
        let p = poly(vec![
            HalfSpace::strict_int(&[1, 0], 0),
            HalfSpace::strict_int(&[0, 1], 0),
            HalfSpace::strict_int(&[-1, 0], 1),
            HalfSpace::strict_int(&[0, -1], 1),
        ]);
        let (vertices, rays) = enumerate_generators(&p).unwrap();
        assert_eq!(
            vertices,
            vec![
                rat_vec(&[-1, -1]),
                rat_vec(&[-1, 0]),
                rat_vec(&[0, -1]),
                rat_vec(&[0, 0]),
            ]
        );
        assert!(rays.is_empty());
    }

    #[test]
    fn clipped_hartogs_shadow() {
        let p = poly(vec![
            HalfSpace::strict_int(&[1, -1], 0),
            HalfSpace::strict_int(&[0, 1], 0),
            HalfSpace::strict_int(&[-1, 0], 10),
            HalfSpace::strict_int(&[0, -1], 10),
        ]);
        let (vertices, rays) = enumerate_generators(&p).unwrap();
        assert_eq!(
            vertices,
            vec![rat_vec(&[-10, -10]), rat_vec(&[-10, 0]), rat_vec(&[0, 0])]
        );
        assert!(rays.is_empty());
    }

    #[test]
    fn negative_quadrant_generators() {
        let p = poly(vec![
            HalfSpace::strict_int(&[1, 0], 0),
            HalfSpace::strict_int(&[0, 1], 0),
        ]);
        let (vertices, rays) = enumerate_generators(&p).unwrap();
        assert_eq!(vertices, vec![rat_vec(&[0, 0])]);
        assert_eq!(rays, vec![rat_vec(&[-1, 0]), rat_vec(&[0, -1])]);
    }

    #[test]
    fn rejects_unsupported_dimension_and_lineality() {
        let p4 = LogPolyhedron::new(4, vec![HalfSpace::strict_int(&[1, 0, 0, 0], 0)]).unwrap();
        assert!(matches!(
            enumerate_generators(&p4),
            Err(GeometryError::UnsupportedDimension(4))
        ));
        // a slab in the plane: recession cone contains the x2 axis
        let slab = poly(vec![
            HalfSpace::strict_int(&[1, 0], 0),
            HalfSpace::strict_int(&[-1, 0], 1),
        ]);
        assert!(matches!(
            enumerate_generators(&slab),
            Err(GeometryError::NotPointed)
        ));
    }

    #[test]
    fn quadrant_from_generators() {
        let hull = hull_from_generators(
            &[rat_vec(&[0, 0])],
            &[rat_vec(&[-1, 0]), rat_vec(&[0, -1])],
        )
        .unwrap();
        assert_eq!(
            hull.polyhedron.canonical_halfspaces(),
            vec![
                HalfSpace::strict_int(&[0, 1], 0),
                HalfSpace::strict_int(&[1, 0], 0),
            ]
        );
    }

    #[test]
    fn interior_vertex_is_absorbed() {
        let hull = hull_from_generators(
            &[rat_vec(&[0, 0]), rat_vec(&[-1, -1])],
            &[rat_vec(&[-1, 0]), rat_vec(&[0, -1])],
        )
        .unwrap();
        assert_eq!(
            hull.polyhedron.canonical_halfspaces(),
            vec![
                HalfSpace::strict_int(&[0, 1], 0),
                HalfSpace::strict_int(&[1, 0], 0),
            ]
        );
    }

    #[test]
    fn triangle_facets() {
        let hull = hull_from_generators(
            &[rat_vec(&[0, 0]), rat_vec(&[-2, 0]), rat_vec(&[0, -2])],
            &[],
        )
        .unwrap();
        assert_eq!(
            hull.polyhedron.canonical_halfspaces(),
            vec![
                HalfSpace::strict_int(&[-1, -1], 2),
                HalfSpace::strict_int(&[0, 1], 0),
                HalfSpace::strict_int(&[1, 0], 0),
            ]
        );
        // every facet has two tight generators in the plane
        for facet in &hull.facets {
            assert_eq!(facet.tight_vertices.len(), 2);
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            hull_from_generators(&[], &[]),
            Err(GeometryError::DegenerateInput { point: None })
        ));
        let p = rat_vec(&[1, 2]);
        match hull_from_generators(&[p.clone(), p.clone()], &[]) {
            Err(GeometryError::DegenerateInput { point: Some(q) }) => assert_eq!(q, p),
            other => panic!("expected point-polyhedron flag, got {other:?}"),
        }
        // collinear but not coincident: degenerate without a point flag
        assert!(matches!(
            hull_from_generators(&[rat_vec(&[0, 0]), rat_vec(&[1, 1])], &[]),
            Err(GeometryError::DegenerateInput { point: None })
        ));
    }

    #[test]
    fn three_dimensional_box_and_cone() {
        let p = poly(vec![
            HalfSpace::strict_int(&[1, 0, 0], 0),
            HalfSpace::strict_int(&[0, 1, 0], 0),
            HalfSpace::strict_int(&[0, 0, 1], 0),
        ]);
        let (vertices, rays) = enumerate_generators(&p).unwrap();
        assert_eq!(vertices, vec![rat_vec(&[0, 0, 0])]);
        assert_eq!(rays.len(), 3);
        let hull = hull_from_generators(&vertices, &rays).unwrap();
        assert!(hull.polyhedron.same_set_as(&p));
    }
}
