//! Shared corpus fixtures: the named complexes plus a seeded generator of
//! random face-closed subcomplexes of full skeletons.
#![allow(dead_code)] // each test target uses a different slice of the corpus

use dualcx_core::complex::Cell;
use dualcx_core::SimplicialComplex;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn path_abc() -> SimplicialComplex {
    SimplicialComplex::from_str_facets(&[&["a", "b"], &["b", "c"]]).unwrap()
}

/// Cycle with k vertices c0..c(k-1).
pub fn cycle(k: usize) -> SimplicialComplex {
    assert!((3..10).contains(&k));
    let facets: Vec<Vec<String>> = (0..k)
        .map(|i| vec![format!("c{i}"), format!("c{}", (i + 1) % k)])
        .collect();
    SimplicialComplex::from_facets(facets).unwrap()
}

pub fn boundary_tetrahedron() -> SimplicialComplex {
    SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d"]), 2).unwrap()
}

/// Minimal 6-vertex triangulation of the real projective plane.
pub fn rp2_six() -> SimplicialComplex {
    let facets: &[&[usize]] = &[
        &[1, 2, 5],
        &[1, 2, 6],
        &[1, 3, 4],
        &[1, 3, 6],
        &[1, 4, 5],
        &[2, 3, 4],
        &[2, 3, 5],
        &[2, 4, 6],
        &[3, 5, 6],
        &[4, 5, 6],
    ];
    from_indexed("p", facets)
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
pub fn torus_seven() -> SimplicialComplex {
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for i in 0..7usize {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    let refs: Vec<&[usize]> = facets.iter().map(|f| f.as_slice()).collect();
    from_indexed("t", &refs)
}

/// An 8-vertex Klein bottle: closed surface, chi = 0, H1 = Z + Z/2.
/// Found by exhaustive search over edge-double-covers and classified by
/// homology; re-verified by the homology tests.
pub fn klein_eight() -> SimplicialComplex {
    let facets: &[&[usize]] = &[
        &[0, 4, 5],
        &[0, 4, 6],
        &[0, 5, 7],
        &[0, 6, 7],
        &[1, 2, 3],
        &[1, 2, 5],
        &[1, 3, 7],
        &[1, 5, 6],
        &[1, 6, 7],
        &[2, 3, 6],
        &[2, 4, 6],
        &[2, 4, 7],
        &[2, 5, 7],
        &[3, 4, 5],
        &[3, 4, 7],
        &[3, 5, 6],
    ];
    from_indexed("k", facets)
}

fn from_indexed(prefix: &str, facets: &[&[usize]]) -> SimplicialComplex {
    let named: Vec<Vec<String>> = facets
        .iter()
        .map(|f| f.iter().map(|i| format!("{prefix}{i}")).collect())
        .collect();
    SimplicialComplex::from_facets(named).unwrap()
}

/// The named corpus, smallest first.
pub fn named_corpus() -> Vec<(&'static str, SimplicialComplex)> {
    let mut out = vec![("path", path_abc())];
    for k in 3..=8 {
        let name: &'static str = match k {
            3 => "cycle3",
            4 => "cycle4",
            5 => "cycle5",
            6 => "cycle6",
            7 => "cycle7",
            _ => "cycle8",
        };
        out.push((name, cycle(k)));
    }
    out.push(("boundary_tetrahedron", boundary_tetrahedron()));
    out.push(("rp2_6", rp2_six()));
    out.push(("torus_7", torus_seven()));
    out.push(("klein_8", klein_eight()));
    out
}

/// Random face-closed subcomplex of full_skeleton(m, n) containing every
/// vertex (stars of cells of dimension >= 1 are removed repeatedly).
pub fn random_subcomplex(m: usize, n: usize, rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let names: Vec<String> = (0..m).map(|i| format!("v{i}")).collect();
    let mut c = SimplicialComplex::full_skeleton(&names, n).unwrap();
    let removals = rng.gen_range(0..=12);
    for _ in 0..removals {
        let candidates: Vec<Cell> = c.cells().filter(|c| c.len() >= 2).cloned().collect();
        if candidates.is_empty() {
            break;
        }
        let pick = candidates[rng.gen_range(0..candidates.len())].clone();
        c = c.remove_star(&pick).unwrap();
    }
    c
}
