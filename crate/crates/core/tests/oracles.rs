mod common;

use std::collections::{BTreeMap, BTreeSet};

use degmatch::enumeration::{enumerate_realizations, nu_bar_sequence, EnumerationCaps};
use degmatch::graph::{delete_vertex, pinch};
use degmatch::graphicality::{is_graphic_eg, is_graphic_hh, realize_hh};
use degmatch::matching::{greedy_maximal_matching, matching_number, max_matching, min_maximal_matching};
use degmatch::{DegreeSequence, Edge, Graph, Matching};

use common::*;

#[test]
fn blossom_matches_exhaustive_search_on_all_small_graphs() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            assert_eq!(matching_number(&g), brute_nu(&g), "{:?}", g.edges());
        }
    }
}

#[test]
fn blossom_matches_exhaustive_search_on_random_graphs() {
    for seed in 0..600 {
        let n = 2 + (seed % 9) as usize;
        let g = random_graph(n, [0.15, 0.3, 0.5, 0.7][(seed % 4) as usize], seed);
        let m = max_matching(&g);
        assert_eq!(m.len(), brute_nu(&g), "seed {seed}");
    }
}

#[test]
fn min_maximal_matching_matches_exhaustive_search() {
    for n in 1..=6 {
        for g in all_graphs(n).step_by(7) {
            assert_eq!(min_maximal_matching(&g).unwrap().len(), brute_nu_bar(&g));
        }
    }
    for seed in 0..200 {
        let g = random_graph(10, 0.4, seed);
        assert_eq!(min_maximal_matching(&g).unwrap().len(), brute_nu_bar(&g), "seed {seed}");
    }
}

#[test]
fn greedy_is_bracketed_by_exact_values() {
    for seed in 0..200 {
        let g = random_graph(9, 0.35, seed);
        let lo = brute_nu_bar(&g);
        let hi = brute_nu(&g);
        for s in 0..10 {
            let m = greedy_maximal_matching(&g, s).len();
            assert!(lo <= m && m <= hi, "seed {seed}/{s}: {lo} <= {m} <= {hi}");
        }
    }
}

#[test]
fn enumeration_is_complete_for_small_n() {
    for n in 1..=6 {
        let mut by_labelled_degrees: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for g in all_graphs(n) {
            *by_labelled_degrees.entry(g.degrees()).or_default() += 1;
        }
        for (labelled, &count) in &by_labelled_degrees {
            if labelled.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let d = DegreeSequence::from_degrees(labelled.iter().copied());
            let found: Vec<Graph> =
                enumerate_realizations(&d, EnumerationCaps::complete(n)).unwrap().collect();
            let distinct: BTreeSet<Vec<Edge>> = found.iter().map(Graph::edges).collect();
            assert_eq!(found.len(), count, "{d}");
            assert_eq!(distinct.len(), count, "{d}: duplicates");
            assert!(found.iter().all(|g| g.degrees() == *labelled));
        }
    }
}

#[test]
fn enumeration_yields_nothing_for_non_graphic_lists() {
    for n in 1..=6 {
        let lists = realizable_lists(n);
        for d in degmatch::enumeration::positive_arranged_sequences(n, n) {
            let graphic = lists.contains(d.degrees());
            let any = enumerate_realizations(&d, EnumerationCaps { max_n: n, max_degree_sum: 36 })
                .unwrap()
                .next()
                .is_some();
            assert_eq!(graphic, any, "{d}");
        }
    }
}

#[test]
fn sequence_nu_bar_is_minimum_over_realizations() {
    for d in degmatch::enumeration::graphic_sequences(5) {
        let n = d.len();
        let brute = all_graphs(n)
            .filter(|g| {
                let mut x = g.degrees();
                x.sort_unstable_by(|a, b| b.cmp(a));
                x == d.degrees()
            })
            .map(|g| brute_nu_bar(&g))
            .min()
            .unwrap();
        assert_eq!(nu_bar_sequence(&d, EnumerationCaps::default()).unwrap(), brute, "{d}");
    }
}

#[test]
fn realizations_have_requested_degrees() {
    for n in 1..=7 {
        for d in realizable_lists(n) {
            let seq = DegreeSequence::from_degrees(d.iter().copied());
            assert!(is_graphic_eg(&seq).is_graphic && is_graphic_hh(&seq));
            assert_eq!(realize_hh(&seq).unwrap().degrees(), d);
        }
    }
}

#[test]
fn pinch_then_delete_restores_the_graph() {
    for seed in 0..300 {
        let g = random_graph(8, 0.45, seed);
        let m: Matching = greedy_maximal_matching(&g, seed);
        let take = (seed as usize % m.len().max(1)) + 1;
        let sub = m.restrict(&(0..take.min(m.len())).collect::<Vec<_>>());
        let p = pinch(&g, &sub).unwrap();
        assert_eq!(p.graph.degree(p.new_vertex), 2 * sub.len());
        let (back, _) = delete_vertex(&p.graph, p.new_vertex).unwrap();
        let mut restored = back;
        for &(u, v) in sub.edges() {
            restored.add_edge(u, v).unwrap();
        }
        assert_eq!(restored, g, "seed {seed}");
    }
}
