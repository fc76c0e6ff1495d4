//! Corpus-level invariants beyond the acceptance gate: seeded random graphs
//! on 7-9 vertices, and series/log/reconstruction identities over small
//! exhaustive corpora.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use flagineq::engine::{
    alpha_sequence, check_inequalities_with_order, dseries_from_alpha, dseries_from_f_direct,
    v_by_peeling,
};
use flagineq::harness::{enumerate_labeled_graphs, run_corpus, CorpusKind, CorpusSpec, EdgeProb};
use flagineq::series::TruncatedSeries;

#[test]
fn thousand_random_graphs_on_7_to_9_vertices_are_clean() {
    for (vertices, trials, seed) in [(7usize, 334u64, 11u64), (8, 333, 12), (9, 333, 13)] {
        let spec = CorpusSpec {
            kind: CorpusKind::Random { edge_prob: EdgeProb::new(1, 2), trials, seed },
            vertices,
            max_n: 10,
            order: 16,
        };
        let result = run_corpus(&spec, None).unwrap();
        assert_eq!(result.total, trials);
        assert!(result.is_clean(), "m = {vertices}: {:?}", result.violations);
    }
}

#[test]
fn series_identity_holds_on_clique_fvectors_up_to_5_vertices() {
    for m in 0..=5usize {
        for g in enumerate_labeled_graphs(m).unwrap() {
            let f = g.clique_fvector();
            assert_eq!(
                dseries_from_alpha(&alpha_sequence(&f, 16)),
                dseries_from_f_direct(&f, 16),
                "graph {}",
                g.encode()
            );
        }
    }
}

#[test]
fn peeled_factors_reconstruct_q_across_the_4_vertex_corpus() {
    for g in enumerate_labeled_graphs(4).unwrap() {
        let f = g.clique_fvector();
        let q = dseries_from_alpha(&alpha_sequence(&f, 10)).inverse().unwrap();
        let v = v_by_peeling(&q).unwrap();
        let mut product = TruncatedSeries::one(10);
        for i in 1..=10usize {
            let mut coeffs = vec![BigRational::zero(); 11];
            coeffs[0] = BigRational::one();
            coeffs[i] = if i % 2 == 0 { -BigRational::one() } else { BigRational::one() };
            let base = TruncatedSeries::from_coeffs(coeffs).unwrap();
            let exponent = if i % 2 == 1 { v.get(i).clone() } else { -v.get(i) };
            let exponent = i64::try_from(&exponent.to_integer()).unwrap();
            product = product.mul(&base.int_pow(exponent).unwrap());
        }
        assert_eq!(product, q, "graph {}", g.encode());
    }
}

#[test]
fn flag_inputs_always_have_non_negative_integral_v() {
    // the theorem statement itself, on the 5-vertex corpus with margin in N
    for g in enumerate_labeled_graphs(5).unwrap() {
        let report = check_inequalities_with_order(&g.clique_fvector(), 12, 16);
        assert!(report.all_hold && report.routes_agree, "graph {}", g.encode());
        for e in &report.entries {
            assert!(e.v_integral && !e.v.is_negative(), "graph {}", g.encode());
        }
    }
}
