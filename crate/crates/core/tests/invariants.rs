//! Corpus-level invariants: subdivision preserves homology, surgery counts,
//! pseudomanifold verdicts, the torus-from-skeleton reconstruction, and the
//! cross-checks between the homology routes.

mod common;

use common::*;
use itertools::Itertools;
use num_bigint::BigInt;

use dualcx_core::blowup::{blowup_step, excess_cells, SncModel};
use dualcx_core::complex::{FVector, PseudomanifoldVerdict};
use dualcx_core::delta::DeltaComplex;
use dualcx_core::homology::{homology, ChainComplex};
use dualcx_core::rational::RationalMatrix;
use dualcx_core::{
    barycentric_subdivision, double_cover_complex, run_construction, SimplicialComplex,
};

#[test]
fn stellar_subdivision_preserves_euler_and_homology() {
    for (name, c) in named_corpus() {
        let base = homology(&c).unwrap();
        let chi = c.euler_characteristic();
        for cell in c.cells().cloned().collect::<Vec<_>>() {
            let sub = c.stellar_subdivision(&cell, "fresh").unwrap();
            assert!(sub.is_valid(), "{name}: invalid after subdividing {cell:?}");
            assert_eq!(
                sub.euler_characteristic(),
                chi,
                "{name}: chi changed at {cell:?}"
            );
            let h = homology(&sub).unwrap();
            assert_eq!(h.betti, base.betti, "{name}: betti changed at {cell:?}");
            assert_eq!(
                h.torsion, base.torsion,
                "{name}: torsion changed at {cell:?}"
            );
        }
    }
}

/// RP^2 as a single bigon: one vertex, one loop, two fan triangles over the
/// loop traversed twice.
fn rp2_bigon() -> DeltaComplex {
    let mut b = DeltaComplex::builder();
    let v = b.add_vertex("v");
    let a = b.add_cell(vec![v, v]).unwrap();
    let apex = b.add_vertex("apex");
    let s0 = b.add_cell(vec![v, apex]).unwrap();
    let s1 = b.add_cell(vec![v, apex]).unwrap();
    b.add_cell(vec![a, s1, s0]).unwrap();
    b.add_cell(vec![a, s0, s1]).unwrap();
    b.build()
}

#[test]
fn barycentric_subdivision_preserves_homology() {
    // circle with identified endpoints
    let mut b = DeltaComplex::builder();
    let v = b.add_vertex("v");
    b.add_cell(vec![v, v]).unwrap();
    let circle = b.build();
    let sq = barycentric_subdivision(&circle, 2).unwrap();
    assert!(sq.vertices().len() >= 3);
    assert_eq!(homology(&sq).unwrap().betti, vec![1, 1]);

    let rp2 = rp2_bigon();
    let before = homology(&rp2).unwrap();
    assert_eq!(before.betti, vec![1, 0, 0]);
    assert_eq!(before.torsion[1], vec![BigInt::from(2)]);
    let simplicial = barycentric_subdivision(&rp2, 2).unwrap();
    let after = homology(&simplicial).unwrap();
    assert_eq!(after.betti, vec![1, 0, 0]);
    assert_eq!(after.torsion[1], vec![BigInt::from(2)]);

    // already-simplicial complexes survive a single round
    let (hollow, _) = DeltaComplex::from_simplicial(&cycle(3));
    let hex = barycentric_subdivision(&hollow, 1).unwrap();
    assert_eq!(hex.f_vector(), FVector(vec![6, 6]));
    assert_eq!(homology(&hex).unwrap().betti, vec![1, 1]);
}

/// Removing the stars of the 21 non-torus triples from the 2-skeleton of the
/// 7-vertex simplex yields exactly the 7-vertex torus.
#[test]
fn torus_from_full_skeleton_by_star_removal() {
    let torus = torus_seven();
    let names: Vec<String> = torus.vertices().to_vec();
    let mut c = SimplicialComplex::full_skeleton(&names, 2).unwrap();
    assert_eq!(c.f_vector(), FVector(vec![7, 21, 35]));
    let excess: Vec<Vec<String>> = c
        .cells()
        .filter(|cell| cell.len() == 3 && !torus.contains(cell))
        .cloned()
        .collect();
    assert_eq!(excess.len(), 21);
    for cell in excess {
        c = c.remove_star(&cell).unwrap();
    }
    assert_eq!(c.f_vector(), FVector(vec![7, 21, 14]));
    assert!(c.isomorphic_labeled(&torus));
}

#[test]
fn torus_blowup_schedule() {
    let torus = torus_seven();
    let model = SncModel::initial(torus.vertices(), 2).unwrap();
    let excess = excess_cells(&model, &torus, 0).unwrap();
    assert_eq!(excess.len(), 21);
    let after0 = blowup_step(&model, &torus, 0).unwrap();
    assert_eq!(after0.dual_complex().f_vector(), FVector(vec![7, 21, 14]));
    let after1 = blowup_step(&after0, &torus, 1).unwrap();
    assert_eq!(after1.history().last().unwrap().cells_removed, 0);
    assert!(after1.dual_complex().isomorphic_labeled(&torus));
}

/// The 15x10 second boundary matrix of the 6-vertex projective plane has
/// full column rank 10 (forced by betti (1,0,0)), through both rank routes.
#[test]
fn rp2_boundary_rank_both_routes() {
    let rp2 = rp2_six();
    let d2 = rp2.boundary_matrix(2).unwrap();
    assert_eq!((d2.rows(), d2.cols()), (15, 10));
    assert_eq!(dualcx_core::homology::smith_normal_form(&d2).rank, 10);
    assert_eq!(RationalMatrix::from_integer(&d2).rank(), 10);
}

#[test]
fn doubling_counts_over_corpus() {
    for (name, c) in named_corpus() {
        let d = c.dim().unwrap();
        let f = c.f_vector();
        let dc = double_cover_complex(&c).unwrap();
        let doubled = dc.delta().f_vector();
        for k in 0..d {
            assert_eq!(doubled.0[k], f.0[k], "{name}: dimension {k} changed");
        }
        assert_eq!(
            doubled.0[d],
            2 * f.0[d],
            "{name}: top dimension not doubled"
        );
    }
}

#[test]
fn pseudomanifold_verdicts_on_surfaces() {
    for (name, c) in [
        ("torus_7", torus_seven()),
        ("klein_8", klein_eight()),
        ("rp2_6", rp2_six()),
    ] {
        let verdict = c.is_normal_pseudomanifold().unwrap();
        assert!(verdict.is_normal(), "{name}: {verdict:?}");
    }
    assert!(matches!(
        path_abc().is_normal_pseudomanifold().unwrap(),
        PseudomanifoldVerdict::RidgeCount { .. }
    ));
    for k in 3..=8 {
        assert!(cycle(k).is_normal_pseudomanifold().unwrap().is_normal());
    }
}

/// Unlabeled isomorphism of two vertex-orderings of RP^2 agrees with brute
/// force over all 6! label bijections.
#[test]
fn rp2_reorderings_isomorphic_with_bruteforce_oracle() {
    let a = rp2_six();
    // relabel p1..p6 -> q6..q1 (reversing the order)
    let relabel = |v: &str| -> String {
        let idx: usize = v[1..].parse().unwrap();
        format!("q{}", 7 - idx)
    };
    let facets: Vec<Vec<String>> = a
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| relabel(v)).collect())
        .collect();
    let b = SimplicialComplex::from_facets(facets).unwrap();
    let found = a
        .isomorphic_unlabeled(&b)
        .expect("relabelings are isomorphic");
    // the returned map carries cells to cells
    for cell in a.cells() {
        let image: Vec<String> = cell.iter().map(|v| found[v].clone()).collect();
        assert!(b.contains(&image));
    }
    // brute force over all bijections
    let bv: Vec<String> = b.vertices().to_vec();
    let mut exists = false;
    for perm in bv.iter().permutations(bv.len()) {
        let map: std::collections::BTreeMap<&String, &String> =
            a.vertices().iter().zip(perm).collect();
        let ok = a.cells().all(|cell| {
            let image: Vec<String> = cell.iter().map(|v| map[v].clone()).collect();
            b.contains(&image)
        });
        if ok {
            exists = true;
            break;
        }
    }
    assert!(exists);
    // and a negative: torus vs klein have equal f-vectors but differ
    assert!(torus_seven().isomorphic_unlabeled(&klein_eight()).is_none());
}

#[test]
fn euler_characteristic_matches_betti_over_corpus() {
    for (name, c) in named_corpus() {
        let h = homology(&c).unwrap();
        assert_eq!(
            h.euler_characteristic(),
            c.euler_characteristic(),
            "{name}: chi mismatch"
        );
    }
}

/// Redundant cross-check path: the realized complex has the homology of the
/// input (stronger equality is already certified).
#[test]
fn realization_preserves_homology() {
    for (name, c) in named_corpus() {
        let trace = run_construction(&c, None).unwrap();
        assert_eq!(
            homology(&trace.final_complex).unwrap(),
            homology(&c).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn klein_bottle_homology_profile() {
    let h = homology(&klein_eight()).unwrap();
    assert_eq!(h.betti, vec![1, 1, 0]);
    assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
    assert_eq!(klein_eight().f_vector(), FVector(vec![8, 24, 16]));
}
