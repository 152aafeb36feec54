mod common;

use std::collections::BTreeSet;

use common::MatrixGroup;
use orbits_core::coxeter::{CartanMatrix, GroupConfig, RootSystem, WeylGroup};
use orbits_core::{Error, SimpleSet, Trichotomy, WeightFunction};

fn group(t: &str) -> WeylGroup {
    WeylGroup::from_type(t).unwrap()
}

fn from_cartan(rows: Vec<Vec<i32>>) -> WeylGroup {
    let roots = RootSystem::new(CartanMatrix::new(rows).unwrap(), &[]).unwrap();
    WeylGroup::new(roots, GroupConfig::default()).unwrap()
}

fn set(ix: &[usize]) -> SimpleSet {
    SimpleSet::from_indices(ix.iter().copied())
}

const SMALL: [&str; 11] = [
    "A0", "A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA2", "A1xA1xA1",
];

#[test]
fn root_systems_from_cartan_literals() {
    let a1 = from_cartan(vec![vec![2]]);
    assert_eq!(a1.root_system().positive_roots().len(), 1);
    assert_eq!(a1.order(), 2);
    let a2 = from_cartan(vec![vec![2, -1], vec![-1, 2]]);
    assert_eq!(a2.root_system().positive_roots().len(), 3);
    assert_eq!(a2.order(), 6);
    let b2 = from_cartan(vec![vec![2, -2], vec![-1, 2]]);
    assert_eq!(b2.root_system().positive_roots().len(), 4);
    assert_eq!(b2.order(), 8);
}

#[test]
fn affine_matrix_rejected_with_reason() {
    let err = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap_err();
    match err {
        Error::InvalidCartan(msg) => assert!(msg.contains("positive definite"), "{msg}"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn group_orders_match_matrix_closure() {
    for t in SMALL.iter().chain(&["D4", "F4"]) {
        let g = group(t);
        let mg = MatrixGroup::new(g.root_system().cartan());
        let all: Vec<usize> = (0..g.rank()).collect();
        assert_eq!(g.order(), mg.subgroup_order(&all), "{t}");
    }
    assert_eq!(group("E6").order(), 51840);
}

#[test]
fn enumeration_is_shortlex_and_complete() {
    assert_eq!(group("A1").elements().len(), 2);
    assert_eq!(group("A2").elements().len(), 6);
    assert_eq!(group("B2").elements().len(), 8);
    for t in SMALL {
        let g = group(t);
        let keys: Vec<(usize, Vec<u8>)> = g
            .elements()
            .map(|w| (g.length(w), g.word(w).to_vec()))
            .collect();
        assert!(keys.windows(2).all(|p| p[0] < p[1]), "{t}");
        let mg = MatrixGroup::new(g.root_system().cartan());
        let mats: BTreeSet<_> = g.elements().map(|w| mg.element_matrix(&g, w)).collect();
        assert_eq!(mats.len(), g.order(), "{t}: elements not distinct");
    }
}

#[test]
fn cap_is_enforced() {
    let roots = RootSystem::from_type("A3").unwrap();
    let err = WeylGroup::new(roots, GroupConfig { cap: 23 }).unwrap_err();
    assert_eq!(err, Error::CapExceeded { cap: 23 });
    let roots = RootSystem::from_type("A3").unwrap();
    assert!(WeylGroup::new(roots, GroupConfig { cap: 24 }).is_ok());
}

/// All reduced words, by peeling left descents.
fn reduced_words(g: &WeylGroup, w: orbits_core::WeylElement) -> Vec<Vec<u8>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in g.left_descents(w).iter() {
        for mut rest in reduced_words(g, g.left_mul_generator(i, w)) {
            rest.insert(0, i as u8);
            out.push(rest);
        }
    }
    out
}

#[test]
fn canonical_word_is_lex_min_reduced_word() {
    for t in ["A2", "B2", "G2", "A3", "B3"] {
        let g = group(t);
        let mg = MatrixGroup::new(g.root_system().cartan());
        let roots = mg.positive_roots();
        for w in g.elements() {
            let words = reduced_words(&g, w);
            assert_eq!(words.iter().min().unwrap().as_slice(), g.word(w), "{t}");
            let m = mg.element_matrix(&g, w);
            assert!(words.iter().all(|x| mg.word_matrix(x) == m));
            assert_eq!(mg.inversion_count(&m, &roots), g.length(w));
            assert_eq!(g.inversions(w).len(), g.length(w));
            assert_eq!(g.parse_word(&g.word_string(w)).unwrap(), w);
        }
    }
}

#[test]
fn inversion_sets_determine_elements() {
    for t in SMALL {
        let g = group(t);
        let sets: BTreeSet<Vec<usize>> = g.elements().map(|w| g.inversions(w)).collect();
        assert_eq!(sets.len(), g.order(), "{t}");
        for w in g.elements() {
            let mut right = g.inversions(w);
            let mut left = g.left_inversions(g.inverse(w));
            right.sort();
            left.sort();
            assert_eq!(right, left);
        }
    }
}

#[test]
fn multiply_examples() {
    let g = group("A2");
    let (a, b) = (g.generator(0), g.generator(1));
    for w in g.elements() {
        assert_eq!(g.multiply(g.identity(), w).unwrap(), w);
    }
    assert_eq!(g.multiply(a, a).unwrap(), g.identity());
    let ab = g.mul(a, b);
    let aba = g.multiply(ab, a).unwrap();
    assert_eq!(g.length(aba), 3);
    assert_eq!(aba, g.longest());
    assert_eq!(g.word_string(aba), "1.2.1");
}

#[test]
fn multiplication_matches_matrices() {
    for t in ["A2", "B2", "G2", "A3"] {
        let g = group(t);
        let mg = MatrixGroup::new(g.root_system().cartan());
        let n = g.rank();
        for u in g.elements() {
            for v in g.elements() {
                let uv = g.mul(u, v);
                let want = common::mat_mul(&mg.element_matrix(&g, u), &mg.element_matrix(&g, v), n);
                assert_eq!(mg.element_matrix(&g, uv), want);
                assert!(g.length(uv) <= g.length(u) + g.length(v));
            }
            assert_eq!(g.mul(u, g.inverse(u)), g.identity());
        }
    }
}

#[test]
fn mixed_parents_rejected() {
    let g = group("A2");
    let h = group("A2");
    assert_eq!(
        g.multiply(g.identity(), h.identity()),
        Err(Error::MixedParents)
    );
    assert_eq!(
        g.bruhat_leq(h.identity(), g.identity()),
        Err(Error::MixedParents)
    );
}

#[test]
fn bruhat_examples() {
    let g = group("A2");
    let (a, b) = (g.generator(0), g.generator(1));
    for w in g.elements() {
        assert!(g.bruhat_leq(g.identity(), w).unwrap());
    }
    assert!(g.bruhat_leq(a, g.mul(a, b)).unwrap());
    assert!(!g.bruhat_leq(a, b).unwrap());
}

#[test]
fn bruhat_matches_subwords_on_rank_three_types() {
    for t in ["A1xA1", "B3", "C3", "A1xA2"] {
        let g = group(t);
        let mg = MatrixGroup::new(g.root_system().cartan());
        for w in g.elements() {
            let subs = mg.subword_products(g.word(w));
            for u in g.elements() {
                assert_eq!(g.leq(u, w), subs.contains(&mg.element_matrix(&g, u)), "{t}");
            }
        }
    }
}

#[test]
fn longest_element_examples() {
    let a1 = group("A1");
    assert_eq!(a1.longest_element(SimpleSet::EMPTY), a1.identity());
    assert_eq!(a1.longest_element(SimpleSet::full(1)), a1.generator(0));
    let a2 = group("A2");
    assert_eq!(a2.length(a2.longest_element(SimpleSet::full(2))), 3);
    for t in SMALL {
        let g = group(t);
        for j in SimpleSet::all(g.rank()) {
            let w0j = g.longest_element(j);
            let max = g
                .parabolic_subgroup(j)
                .iter()
                .map(|&w| g.length(w))
                .max()
                .unwrap();
            assert_eq!(g.length(w0j), max);
            assert!(g.parabolic_subgroup(j).iter().all(|&w| g.leq(w, w0j)));
        }
    }
}

#[test]
fn coset_decompose_examples() {
    let g = group("A2");
    let (a, b) = (g.generator(0), g.generator(1));
    let jb = set(&[1]);
    assert_eq!(g.coset_decompose(b, jb), (g.identity(), b));
    let ab = g.mul(a, b);
    assert_eq!(g.coset_decompose(ab, SimpleSet::EMPTY), (ab, g.identity()));
    assert_eq!(g.coset_decompose(ab, jb), (a, b));
}

#[test]
fn coset_machinery_invariants() {
    for t in SMALL {
        let g = group(t);
        for j in SimpleSet::all(g.rank()) {
            let reps = g.min_coset_reps(j);
            let par = g.parabolic_subgroup(j);
            assert_eq!(reps.len() * par.len(), g.order(), "{t} {j}");
            let by_roots: Vec<_> = g
                .elements()
                .filter(|&w| g.sends_subset_positive(w, j))
                .collect();
            assert_eq!(reps, by_roots.as_slice());
            for &s in reps {
                for &x in par {
                    assert_eq!(g.length(g.mul(s, x)), g.length(s) + g.length(x));
                }
            }
            for w in g.elements() {
                let (m, p) = g.coset_decompose(w, j);
                assert_eq!(g.mul(m, p), w);
                assert_eq!(g.length(m) + g.length(p), g.length(w));
                assert!(g.is_min_coset_rep(m, j) && g.in_parabolic(p, j));
            }
        }
    }
}

#[test]
fn min_coset_rep_examples() {
    let a2 = group("A2");
    assert_eq!(a2.min_coset_reps(SimpleSet::EMPTY).len(), 6);
    assert_eq!(a2.min_coset_reps(set(&[0])).len(), 3);
    let a1 = group("A1");
    assert_eq!(a1.min_coset_reps(SimpleSet::full(1)), &[a1.identity()]);
}

#[test]
fn trichotomy_examples() {
    let g = group("A2");
    let (a, b) = (g.generator(0), g.generator(1));
    let e = g.identity();
    assert_eq!(
        g.parabolic_trichotomy(e, set(&[0]), 0).unwrap(),
        Trichotomy::Exchange(0)
    );
    assert_eq!(
        g.parabolic_trichotomy(e, set(&[1]), 0).unwrap(),
        Trichotomy::AscentInWJ
    );
    let ab = g.mul(a, b);
    assert_eq!(
        g.parabolic_trichotomy(ab, set(&[0]), 0).unwrap(),
        Trichotomy::DescentInWJ
    );
    assert!(matches!(
        g.parabolic_trichotomy(b, set(&[1]), 0),
        Err(Error::NotMinimalRepresentative(_))
    ));
}

#[test]
fn trichotomy_is_exhaustive_and_exact() {
    for t in SMALL {
        let g = group(t);
        for j in SimpleSet::all(g.rank()) {
            for &s in g.min_coset_reps(j) {
                for a in 0..g.rank() {
                    let sa = g.left_mul_generator(a, s);
                    match g.parabolic_trichotomy(s, j, a).unwrap() {
                        Trichotomy::DescentInWJ => {
                            assert!(g.is_min_coset_rep(sa, j) && g.length(sa) + 1 == g.length(s))
                        }
                        Trichotomy::AscentInWJ => {
                            assert!(g.is_min_coset_rep(sa, j) && g.length(sa) == g.length(s) + 1)
                        }
                        Trichotomy::Exchange(beta) => {
                            assert!(j.contains(beta));
                            assert_eq!(sa, g.right_mul_generator(s, beta));
                            assert_eq!(g.length(sa), g.length(s) + 1);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn weighted_length_examples() {
    let b2 = group("B2");
    let c = WeightFunction::from_simple(b2.root_system(), &[(1, 2)].into_iter().collect()).unwrap();
    assert_eq!(b2.weighted_length(b2.generator(1), &c), 2);
    assert_eq!(b2.weighted_length(b2.generator(0), &c), 1);
    assert_eq!(b2.weighted_length(b2.identity(), &c), 0);
    // d(w₀) = 2·2 + 2·1 over two short and two long roots
    assert_eq!(b2.weighted_length(b2.longest(), &c), 6);
    for t in SMALL {
        let g = group(t);
        let unit = WeightFunction::unit(g.root_system());
        assert!(g
            .elements()
            .all(|w| g.weighted_length(w, &unit) == g.length(w) as u64));
    }
}

#[test]
fn non_reduced_system_keeps_weyl_group() {
    let cartan = CartanMatrix::from_type("B2").unwrap();
    let roots = RootSystem::new(cartan, &[1]).unwrap();
    assert_eq!(roots.positive_roots().len(), 6);
    assert_eq!(roots.nondivisible_positive().len(), 4);
    let g = WeylGroup::new(roots, GroupConfig::default()).unwrap();
    assert_eq!(g.order(), 8);
    let c = WeightFunction::from_simple(g.root_system(), &[(1, 3)].into_iter().collect()).unwrap();
    assert_eq!(g.weighted_length(g.longest(), &c), 2 * 3 + 2);
}

#[test]
fn rank_zero_group() {
    let g = group("A0");
    assert_eq!(g.order(), 1);
    assert_eq!(g.longest(), g.identity());
    assert_eq!(g.word_string(g.identity()), "e");
}
