// indexed loops mirror the usual row-operation notation
#![allow(clippy::needless_range_loop)]

//! Small dense exact-rational linear algebra: rank, square solves and
//! one-dimensional null spaces, enough for vertex and ray enumeration in
//! dimension <= 3.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rat::Rat;

/// Row-reduce a copy of `rows` and return its rank.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][c].recip();
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Solve the square system `a x = b` exactly; `None` when `a` is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, pivot);
        let inv = m[c][c].recip();
        for j in c..=n {
            m[c][j] = &m[c][j] * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..=n {
                    let delta = &factor * &m[c][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Direction spanning the null space of `rows` when that null space is
/// one-dimensional (rank = dim - 1); `None` otherwise. The result is
/// scaled to a coprime integer vector.
pub fn nullspace_direction(rows: &[Vec<Rat>], dim: usize) -> Option<Vec<Rat>> {
    if rank(rows) + 1 != dim {
        return None;
    }
    // Reduced row echelon form, then set the single free variable to 1.
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..dim {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..dim {
                    let delta = &factor * &m[r][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut dir = vec![Rat::zero(); dim];
    dir[free] = Rat::one();
    for (row, &pc) in m.iter().zip(&pivots) {
        dir[pc] = -row[free].clone();
    }
    Some(to_coprime_integers(&dir))
}

/// Scale a nonzero rational vector by a positive factor so all entries are
/// coprime integers. Used to put normals and ray directions in canonical
/// form; the direction of the vector is preserved.
pub fn to_coprime_integers(v: &[Rat]) -> Vec<Rat> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for i in &ints {
        gcd = gcd.gcd(i);
    }
    if gcd.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|i| Rat::from_bigint(i / &gcd))
        .collect()
}

/// Affine rank of a point set together with a ray set: the dimension of
/// the polyhedron conv(points) + cone(rays).
pub fn affine_rank(points: &[Vec<Rat>], rays: &[Vec<Rat>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for p in &points[1..] {
        rows.push(p.iter().zip(base).map(|(a, b)| a - b).collect());
    }
    rows.extend(rays.iter().cloned());
    rank(&rows)
}
