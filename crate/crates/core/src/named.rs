//! Named complexes: small textbook examples and the two finite-geometry complexes.
//!
//! The geometry complexes are built from coordinates directly, independently of
//! the matroid rank oracle.

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Boundary of a triangle.
pub fn hollow_triangle() -> Complex {
    Complex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).expect("valid")
}

/// Clique complex of a graph: missing faces are the non-edges.
pub fn clique_complex(n: usize, edges: &[(usize, usize)]) -> Result<Complex> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
        }
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut missing = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                missing.push(vec![a, b]);
            }
        }
    }
    Complex::from_missing_faces(n, &missing)
}

/// Independence complex of a graph: missing faces are the edges.
pub fn independence_complex(n: usize, edges: &[(usize, usize)]) -> Result<Complex> {
    let missing: Vec<Vec<usize>> = edges.iter().map(|&(a, b)| vec![a.min(b), a.max(b)]).collect();
    Complex::from_missing_faces(n, &missing)
}

/// Clique complex of the complete `r`-partite graph with parts of size `l`;
/// part `j` is `{j l, ..., j l + l - 1}`.
pub fn complete_multipartite(r: usize, l: usize) -> Result<Complex> {
    if r == 0 || l == 0 {
        return Err(Error::NoVertices);
    }
    let mut missing = Vec::new();
    for part in 0..r {
        for a in 0..l {
            for b in a + 1..l {
                missing.push(vec![part * l + a, part * l + b]);
            }
        }
    }
    if missing.is_empty() {
        return Complex::simplex(r * l);
    }
    Complex::from_missing_faces(r * l, &missing)
}

/// The 12 lines of the affine plane over `F_3`, point `(x, y)` labelled `3x + y`.
pub fn ag23_lines() -> Vec<Vec<usize>> {
    let p = |x: usize, y: usize| 3 * (x % 3) + (y % 3);
    let mut lines = Vec::new();
    // directions (0,1), (1,0), (1,1), (1,2) through every point, deduplicated
    for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        for x in 0..3 {
            for y in 0..3 {
                let mut l: Vec<usize> = (0..3).map(|t| p(x + t * dx, y + t * dy)).collect();
                l.sort_unstable();
                if !lines.contains(&l) {
                    lines.push(l);
                }
            }
        }
    }
    lines.sort();
    lines
}

/// Complex on the 9 affine points whose missing faces are the lines.
pub fn ag23() -> Complex {
    Complex::from_missing_faces(9, &ag23_lines()).expect("valid")
}

/// Points of projective 3-space over `F_3`: normalised vectors (first nonzero
/// coordinate 1) in lexicographic order.
pub fn pg33_points() -> Vec<[u8; 4]> {
    let mut pts = Vec::new();
    for code in 0..81u32 {
        let v = [(code / 27) as u8, (code / 9 % 3) as u8, (code / 3 % 3) as u8, (code % 3) as u8];
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            pts.push(v);
        }
    }
    pts
}

fn normalise(mut v: [u8; 4]) -> [u8; 4] {
    if let Some(&lead) = v.iter().find(|&&c| c != 0) {
        if lead == 2 {
            for c in v.iter_mut() {
                *c = (*c * 2) % 3;
            }
        }
    }
    v
}

/// The 130 lines of projective 3-space over `F_3`, each as 4 sorted point labels.
pub fn pg33_lines() -> Vec<Vec<usize>> {
    let pts = pg33_points();
    let index = |v: [u8; 4]| pts.iter().position(|&p| p == v).expect("normalised point");
    let mut lines = Vec::new();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            let mut line: Vec<usize> = (0..3u8)
                .map(|t| {
                    let mut v = [0u8; 4];
                    for i in 0..4 {
                        v[i] = (pts[a][i] * t + pts[b][i]) % 3;
                    }
                    index(normalise(v))
                })
                .collect();
            line.push(a);
            line.sort_unstable();
            lines.push(line);
        }
    }
    lines.sort();
    lines.dedup();
    lines
}

/// Complex on the 40 projective points whose faces meet every line in at most
/// two points; its missing faces are the 520 collinear triples.
pub fn pg33() -> Complex {
    let mut missing = Vec::new();
    for line in pg33_lines() {
        for skip in 0..4 {
            missing.push(line.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect());
        }
    }
    Complex::from_missing_faces(40, &missing).expect("valid")
}

/// Looks up a named complex: `hollow-triangle`, `ag23`, `pg33`, `simplex:N`,
/// `multipartite:R,L`, `two-points`, `octahedron`.
pub fn by_name(name: &str) -> Result<Complex> {
    let bad = || Error::InvalidInput(format!("unknown complex name {name:?}"));
    let nums = |s: &str| -> Result<Vec<usize>> {
        s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect()
    };
    match name {
        "hollow-triangle" => Ok(hollow_triangle()),
        "ag23" => Ok(ag23()),
        "pg33" => Ok(pg33()),
        "two-points" => Complex::from_missing_faces(2, &[vec![0, 1]]),
        "octahedron" => complete_multipartite(3, 2),
        _ => {
            if let Some(rest) = name.strip_prefix("simplex:") {
                let v = nums(rest)?;
                match v.as_slice() {
                    [n] => Complex::simplex(*n),
                    _ => Err(bad()),
                }
            } else if let Some(rest) = name.strip_prefix("multipartite:") {
                match nums(rest)?.as_slice() {
                    [r, l] => complete_multipartite(*r, *l),
                    _ => Err(bad()),
                }
            } else {
                Err(bad())
            }
        }
    }
}
