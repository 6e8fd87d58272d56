use std::prelude::rust_2021::*;

use super::*;
use crate::stability::Budget;

fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|e| e - 1).collect()
}

#[test]
fn fano_bases() {
    let f = fano();
    assert_eq!(f.bases().len(), 28);
    assert_eq!(f.rank(), 3);
    assert!(f.is_basis(&one_based(&[1, 2, 4])));
    assert!(!f.is_basis(&one_based(&[2, 4, 6])));
    assert!(crate::combstruct::is_matroid_bases(f.bases(), 7).unwrap().holds());
}

#[test]
fn fano_quotient_graph_67() {
    let g = quotient_graph(&fano(), 5, 6).unwrap();
    let mut expected: Vec<(usize, usize)> =
        [(4, 5), (3, 4), (3, 5), (2, 3), (1, 3), (1, 2)].iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    expected.sort();
    assert_eq!(g.vertices, expected);
    assert!(g.connected);
}

#[test]
fn fano_all_quotient_graphs_connected() {
    let graphs = all_quotient_graphs(&fano()).unwrap();
    assert_eq!(graphs.len(), 21);
    for g in graphs {
        assert!(g.connected, "G_{},{}", g.x, g.y);
        assert_eq!(g.vertices.len(), 6);
    }
}

#[test]
fn uniform_quotient_graphs_connected() {
    let m = Matroid::uniform(3, 5).unwrap();
    for g in all_quotient_graphs(&m).unwrap() {
        assert!(g.connected);
    }
}

#[test]
fn quotient_graph_rejects_equal_elements() {
    assert_eq!(quotient_graph(&fano(), 2, 2), Err(Error::SameElement));
}

#[test]
fn fano_relations_include_line_relations() {
    let rels = key_relations(&fano()).unwrap();
    assert!(!rels.is_empty());
    // line {1,2,3} with a = 1, d = 4, e = 5:
    // a(1,2,4)·a(1,3,5) = a(1,2,5)·a(1,3,4)
    let eq = equation(
        one_based(&[1, 2, 4]),
        one_based(&[1, 3, 5]),
        one_based(&[1, 2, 5]),
        one_based(&[1, 3, 4]),
    );
    assert!(rels.equations.contains(&eq));
    for ([p, q], [r, t]) in &rels.equations {
        for b in [p, q, r, t] {
            assert!(fano().is_basis(b));
        }
    }
    for rel in &rels.relations {
        assert!(!fano().is_basis(&set3(rel.s, rel.i, rel.j)));
    }
}

#[test]
fn uniform_has_no_relations() {
    assert!(key_relations(&Matroid::uniform(3, 4).unwrap()).unwrap().is_empty());
    assert_eq!(
        key_relations(&Matroid::uniform(2, 3).unwrap()),
        Err(Error::WrongRank { expected: 3, found: 2 })
    );
}

#[test]
fn fano_lambda_and_factorization() {
    let m = fano();
    let rels = key_relations(&m).unwrap();
    let LambdaConsistency::Consistent(map) = lambda_consistency(&m, &rels).unwrap() else {
        std::panic!("Fano quotients should be consistent")
    };
    assert_eq!(map.representatives.len(), 21);
    let FactorizationOutcome::Factored(w) = weight_factorization(&m, &map, &rels).unwrap() else {
        std::panic!("Fano weights should factor")
    };
    assert_eq!(w.triples.len(), 35);
    assert_eq!(w.product_dimension, 7);
    assert_eq!(w.solution_dimension, 7);
}

#[test]
fn uniform_lambda_uncovered() {
    let m = Matroid::uniform(3, 5).unwrap();
    let rels = key_relations(&m).unwrap();
    assert!(matches!(lambda_consistency(&m, &rels).unwrap(), LambdaConsistency::Uncovered { .. }));
}

#[test]
fn u34_quotients_are_single_vertices() {
    // each G_xy has the single vertex formed by the two other elements
    let m = Matroid::uniform(3, 4).unwrap();
    let rels = key_relations(&m).unwrap();
    let LambdaConsistency::Consistent(map) = lambda_consistency(&m, &rels).unwrap() else {
        std::panic!("no edges to cover")
    };
    assert_eq!(map.edges_covered, 0);
    assert!(matches!(
        weight_factorization(&m, &map, &rels).unwrap(),
        FactorizationOutcome::TripleFailed(_)
    ));
}

#[test]
fn fano_exchange_path() {
    let m = fano();
    let path = exchange_path(&m, &one_based(&[1, 2, 4]), &one_based(&[5, 6, 7])).unwrap();
    assert!(path.len() <= 4);
    for w in path.windows(2) {
        assert_eq!(w[0].iter().filter(|e| w[1].contains(e)).count(), 2);
    }
}

#[test]
fn refute_uniform_examples() {
    let budget = Budget::default();
    assert!(refute_uniform(&Matroid::uniform(2, 3).unwrap(), &budget, 0).unwrap().is_none());
    assert!(refute_uniform(&Matroid::free(3), &budget, 0).unwrap().is_none());
}

#[test]
fn fano_is_not_hpp() {
    let report = hpp_obstruction(&fano(), &Budget::default(), 0).unwrap();
    assert_eq!(report.status, ObstructionStatus::NotHpp, "{:?}", report.steps);
    assert!(report.steps.iter().all(|s| s.ok));
    let f = basis_generating_poly(&fano()).unwrap();
    let w = report.witness.unwrap();
    assert!(matches!(w, Witness::Rayleigh(_)));
    assert!(w.revalidate(&f));
}

#[test]
fn uniform_36_inconclusive() {
    let report = hpp_obstruction(&Matroid::uniform(3, 6).unwrap(), &Budget::default(), 0).unwrap();
    assert_eq!(report.status, ObstructionStatus::Inconclusive);
    assert_eq!(report.failure, Some(STEP_RELATIONS));
}

#[test]
fn fano_deletion_is_not_claimed() {
    let m = fano().delete(6).unwrap();
    assert_eq!(m.rank(), 3);
    let report = hpp_obstruction(&m, &Budget::default(), 0).unwrap();
    assert_eq!(report.status, ObstructionStatus::Inconclusive);
}

#[test]
fn wrong_rank_rejected() {
    assert!(hpp_obstruction(&Matroid::uniform(2, 4).unwrap(), &Budget::default(), 0).is_err());
}
