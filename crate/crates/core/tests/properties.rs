mod common;

use std::collections::HashSet;

use num_bigint::BigInt;
use ohminor::duality::{
    contributor_dual, diagonally_reduced_set, extended_char_polynomial, verify_spectral_duality, Side,
};
use ohminor::equivalence::{class_csgn_sum, class_is_edge_monic, partition, reverse_cycles, Mode};
use ohminor::minors::{
    all_pairings, determinant_oracle, diagonal_char_polynomial, symbolic_determinant,
    total_minor_computation, traditional_char_polynomial,
};
use ohminor::perm;
use ohminor::polynomial::{Monomial, PositionVariable};
use ohminor::{ContributorLike, EnumerationConfig, Enumerator, IntegerMatrix, OrientedHypergraph};
use proptest::prelude::*;

use common::Matrix;

const CAP: u64 = 200_000_000;

fn config() -> EnumerationConfig {
    EnumerationConfig { cap: CAP }
}

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
    })
}

fn graph(m: &Matrix) -> OrientedHypergraph {
    OrientedHypergraph::from_integer_matrix(&IntegerMatrix::from_rows(m).unwrap())
}

fn to_i128(c: &BigInt) -> i128 {
    c.try_into().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_text_round_trips(m in matrix(5, 5, 9)) {
        let im = IntegerMatrix::from_rows(&m).unwrap();
        let parsed: IntegerMatrix = im.to_string().parse().unwrap();
        prop_assert_eq!(parsed, im);
    }

    #[test]
    fn hypergraph_realizes_its_matrix(m in matrix(4, 4, 3)) {
        let im = IntegerMatrix::from_rows(&m).unwrap();
        let g = OrientedHypergraph::from_integer_matrix(&im);
        prop_assert_eq!(g.incidence_matrix(), im.clone());
        let expected: usize = m.iter().flatten().map(|x| x.unsigned_abs() as usize).sum();
        prop_assert_eq!(g.incidences().len(), expected);
        prop_assert_eq!(OrientedHypergraph::from_json(&g.to_json(false)).unwrap(), g.clone());
        prop_assert_eq!(g.incidence_dual().incidence_dual(), g.clone());
        prop_assert_eq!(g.incidence_dual().incidence_matrix(), im.transpose());
    }

    #[test]
    fn laplacian_is_h_times_h_transpose(m in matrix(4, 4, 3)) {
        let g = graph(&m);
        let lap = g.laplacian();
        let expected = common::laplacian(&m);
        prop_assert!(lap.matrix.is_symmetric());
        for (i, row) in expected.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                prop_assert_eq!(lap.matrix.get(i, j), &BigInt::from(x));
                let split = lap.degree.get(i, j) - lap.adjacency.get(i, j);
                prop_assert_eq!(split, BigInt::from(x));
            }
        }
    }

    #[test]
    fn total_minor_matches_expansion(m in matrix(3, 4, 2)) {
        let g = graph(&m);
        let oracle = common::total_minor_terms(&common::laplacian(&m));
        let full = total_minor_computation(&g, false, config()).unwrap();
        let monic = total_minor_computation(&g, true, config()).unwrap();
        prop_assert_eq!(&full.polynomial, &monic.polynomial);
        prop_assert!(monic.visited <= full.visited);
        prop_assert_eq!(full.polynomial.len(), oracle.len());
        for (key, c) in &oracle {
            let got = full.polynomial.coefficient(&Monomial::from_pairs(key.iter().copied()));
            prop_assert_eq!(to_i128(&got), *c);
        }
        prop_assert_eq!(determinant_oracle(&g).unwrap(), full.polynomial);
    }

    #[test]
    fn total_minor_has_minor_shape(m in matrix(3, 3, 2)) {
        let g = graph(&m);
        let n = g.vertex_count();
        let p = total_minor_computation(&g, true, config()).unwrap().polynomial;
        prop_assert!(p.terms().all(|(m, _)| m.is_minor_shaped()));
        prop_assert_eq!(p.total_degree(), Some(n as u32));
        let top = p.filter(|m| m.degree() == n as u32);
        let det_x = symbolic_determinant(&IntegerMatrix::zeros(n, n)).unwrap();
        prop_assert_eq!(top, det_x);
    }

    #[test]
    fn trace_relation(m in matrix(4, 4, 3)) {
        let g = graph(&m);
        let n = g.vertex_count();
        let diag = diagonal_char_polynomial(&g, config()).unwrap();
        let sum: BigInt = (0..n)
            .map(|v| {
                let mono: Monomial = (0..n).filter(|&u| u != v).map(PositionVariable::diagonal).collect();
                diag.coefficient(&mono)
            })
            .sum();
        let trace: i64 = (0..n).map(|i| common::laplacian(&m)[i][i]).sum();
        prop_assert_eq!(sum, BigInt::from(-trace));
    }

    #[test]
    fn constant_term_is_det_of_minus_l(m in matrix(4, 4, 3)) {
        let l = common::laplacian(&m);
        let neg: Matrix = l.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let p = determinant_oracle(&graph(&m)).unwrap();
        prop_assert_eq!(to_i128(&p.coefficient(&Monomial::one())), common::determinant(&neg));
    }

    #[test]
    fn characteristic_polynomial_matches(m in matrix(4, 4, 3)) {
        let g = graph(&m);
        let p = traditional_char_polynomial(&g, config()).unwrap();
        let expected = common::char_poly(&common::laplacian(&m));
        let got: Vec<i128> = p.coefficients().iter().map(to_i128).collect();
        let mut expected = expected;
        while expected.last() == Some(&0) {
            expected.pop();
        }
        prop_assert_eq!(got, expected);
        prop_assert_eq!(diagonal_char_polynomial(&g, config()).unwrap().collapse_diagonal(), p);
    }

    #[test]
    fn contributor_count_is_a_permanent(m in matrix(4, 4, 2)) {
        let g = graph(&m);
        let abs: Matrix = m.iter().map(|r| r.iter().map(|x| x.abs()).collect()).collect();
        let weights = common::laplacian(&abs);
        let cs = Enumerator::new(&g, config()).enumerate_contributors().unwrap();
        prop_assert_eq!(cs.len() as i128, common::permanent(&weights));
        for c in &cs {
            prop_assert!(perm::is_permutation(&c.permutation()));
        }
    }

    #[test]
    fn visitor_sign_agrees_with_components(m in matrix(3, 3, 2)) {
        let g = graph(&m);
        let e = Enumerator::new(&g, config());
        for pairing in all_pairings(g.vertex_count()) {
            e.visit(&pairing, false, |rc, s| assert_eq!(rc.csgn(), s)).unwrap();
        }
    }

    #[test]
    fn non_edge_monic_classes_cancel(m in matrix(3, 3, 2)) {
        let g = graph(&m);
        let e = Enumerator::new(&g, config());
        for pairing in all_pairings(g.vertex_count()) {
            let rs = e.enumerate_reduced(&pairing, false).unwrap();
            for mode in [Mode::Tail, Mode::Head] {
                let classes = partition(&rs, mode);
                prop_assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), rs.len());
                for cls in classes {
                    let flag = class_is_edge_monic(&cls).unwrap();
                    prop_assert!(cls.members.iter().all(|c| c.is_edge_monic() == flag));
                    if !flag {
                        prop_assert_eq!(class_csgn_sum(&cls), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_is_an_involution(m in matrix(3, 4, 2)) {
        let g = graph(&m);
        for c in Enumerator::new(&g, config()).enumerate_contributors().unwrap() {
            let r = reverse_cycles(&c);
            prop_assert_eq!(r.permutation(), perm::inverse(&c.permutation()));
            prop_assert_eq!(r.tail_key(), c.head_key());
            prop_assert_eq!(r.csgn(), c.csgn());
            prop_assert_eq!(reverse_cycles(&r), c);
        }
    }

    #[test]
    fn spectral_duality_holds(m in matrix(4, 4, 3)) {
        let report = verify_spectral_duality(&graph(&m), config()).unwrap();
        prop_assert!(report.holds, "{} vs {}", report.lhs, report.rhs);
    }

    #[test]
    fn duals_are_an_involution(m in matrix(3, 4, 2)) {
        let g = graph(&m);
        let star = g.incidence_dual();
        let set = diagonally_reduced_set(&g, config()).unwrap();
        let mut images = HashSet::new();
        for c in &set {
            let d = contributor_dual(&g, c).unwrap();
            prop_assert_eq!(d.csgn(), c.csgn());
            prop_assert_eq!(&contributor_dual(&star, &d).unwrap(), c);
            images.insert(d);
        }
        let dual_set: HashSet<_> = diagonally_reduced_set(&star, config()).unwrap().into_iter().collect();
        prop_assert_eq!(dual_set, images);
        prop_assert_eq!(
            extended_char_polynomial(&g, Side::Primal, config()).unwrap(),
            extended_char_polynomial(&g, Side::Dual, config()).unwrap()
        );
    }
}

#[test]
fn single_edge_cycle_counts_follow_stirling_numbers() {
    for n in 1..=6 {
        let g = ohminor::fixtures::single_edge(n);
        let cs = Enumerator::new(&g, config()).enumerate_contributors().unwrap();
        let counts: Vec<u64> = ohminor::equivalence::cycle_count_histogram(&cs)
            .into_iter()
            .map(|c| c as u64)
            .collect();
        assert_eq!(counts, common::stirling_first(n), "n = {n}");
    }
}

#[test]
fn random_bidirected_classes_are_lattices() {
    let mut rng = common::seeded(7);
    for _ in 0..20 {
        let h = common::random_bidirected(&mut rng, 5, 6);
        let g = graph(&h);
        assert!(g.is_bidirected());
        let cs = Enumerator::new(&g, config()).enumerate_contributors().unwrap();
        for cls in partition(&cs, Mode::Tail) {
            let report = ohminor::equivalence::boolean_lattice_structure(&g, &cls).unwrap();
            assert_eq!(report.rank_sizes.iter().sum::<usize>(), cls.len());
        }
    }
}

#[test]
fn ordinary_graph_classes_alternate_to_zero() {
    // each edge has one positive and one negative end
    let h: Matrix = vec![vec![1, 0, -1, 1], vec![-1, 1, 0, 0], vec![0, -1, 1, -1]];
    let g = graph(&h);
    let cs = Enumerator::new(&g, config()).enumerate_contributors().unwrap();
    for cls in partition(&cs, Mode::Tail) {
        let report = ohminor::equivalence::boolean_lattice_structure(&g, &cls).unwrap();
        assert!(report.k > 0);
        for pair in report.rank_csgn_sums.windows(2) {
            assert!(pair[0] * pair[1] < 0, "{:?}", report.rank_csgn_sums);
        }
        assert_eq!(report.rank_csgn_sums.iter().sum::<i64>(), 0);
    }
}
