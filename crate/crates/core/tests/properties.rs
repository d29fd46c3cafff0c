use distspec::bounds::{forcing_closure, zero_forcing_number, zf_eigenvalue_bound};
use distspec::closed_forms::*;
use distspec::distance::{distance_matrix, transmission_profile};
use distspec::exact::{
    det_exact, distinct_eigenvalue_count, inertia_exact, quotient_matrix, rank_exact,
};
use distspec::graph::*;
use distspec::numeric::{numeric_eigenvalues, numeric_spectrum, sym_eigenvalues, DEFAULT_EIG_TOL};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

/// Random connected graph: a random tree (each vertex after the first picks
/// an earlier parent) plus a random subset of extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[idx] && idx % 3 == 0 {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            make_graph(n, &edges).unwrap()
        })
}

fn zero_tol(spectral_radius: f64) -> f64 {
    1e-6 * spectral_radius.max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distance_one_exactly_on_edges(g in connected_graph(12)) {
        let d = distance_matrix(&g).unwrap();
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(d.get(u, v) == &BigInt::from(1), g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn trace_vanishes_and_top_is_simple(g in connected_graph(12)) {
        let s = numeric_spectrum(&distance_matrix(&g).unwrap()).unwrap();
        prop_assert!(s.trace_f64().abs() < g.order() as f64 * 1e-8);
        prop_assert_eq!(s.largest().unwrap().1, 1);
    }

    #[test]
    fn inertia_agrees_with_numeric_signs(g in connected_graph(10)) {
        let d = distance_matrix(&g).unwrap();
        let s = numeric_spectrum(&d).unwrap();
        let rho = s.largest().unwrap().0.to_f64();
        let (p, z, n) = s.sign_counts(zero_tol(rho));
        let i = inertia_exact(&d);
        prop_assert_eq!((i.n_plus, i.n_zero, i.n_minus), (p, z, n));
    }

    #[test]
    fn determinant_sign_follows_inertia(g in connected_graph(10), shift in -3i64..=3) {
        let d = distance_matrix(&g).unwrap().shifted(&BigInt::from(shift));
        let det = det_exact(&d);
        let i = inertia_exact(&d);
        prop_assert_eq!(det.is_zero(), i.n_zero > 0);
        if i.n_zero == 0 {
            prop_assert_eq!(det.is_negative(), i.n_minus % 2 == 1);
        }
        prop_assert_eq!(rank_exact(&d), i.n_plus + i.n_minus);
    }

    #[test]
    fn closure_is_monotone(g in connected_graph(12), a in any::<u16>(), b in any::<u16>()) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|&v| a >> v & 1 == 1).collect();
        let t: Vec<usize> = (0..n).filter(|&v| (a | b) >> v & 1 == 1).collect();
        let cs = forcing_closure(&g, &s).unwrap();
        let ct = forcing_closure(&g, &t).unwrap();
        prop_assert!(cs.iter().all(|v| ct.contains(v)));
        prop_assert!(s.iter().all(|v| cs.contains(v)));
    }

    #[test]
    fn multiplicities_bounded_by_zero_forcing(g in connected_graph(10)) {
        let d = distance_matrix(&g).unwrap();
        let z = zero_forcing_number(&complement(&g)).unwrap();
        let s = numeric_spectrum(&d).unwrap();
        for (v, m) in s.entries() {
            prop_assert!(*m <= z + 1, "{} has multiplicity {} > Z + 1 = {}", v, m, z + 1);
            let x = v.to_f64();
            if (x - x.round()).abs() < 1e-9 {
                let shifted = d.shifted(&BigInt::from(-(x.round() as i64)));
                prop_assert_eq!(g.order() - rank_exact(&shifted), *m);
            }
        }
        let q = distinct_eigenvalue_count(&d).unwrap();
        let bound = zf_eigenvalue_bound(&g).unwrap().ceil().to_integer().to_usize().unwrap();
        prop_assert!(q >= bound);
    }

    #[test]
    fn cartesian_degree_sets(g in connected_graph(7), h in connected_graph(7)) {
        let p = cartesian_product(&g, &h);
        let sums: std::collections::BTreeSet<usize> = g
            .degree_set()
            .iter()
            .flat_map(|a| h.degree_set().into_iter().map(move |b| a + b))
            .collect();
        prop_assert_eq!(p.degree_set(), sums);
    }

    #[test]
    fn equitable_quotient_spectrum_embeds(k in 2usize..=6, m in 2usize..=6, l in 0usize..=4) {
        let d = distance_matrix(&generalized_barbell(k, m, l).unwrap()).unwrap();
        let q = quotient_matrix(&d, &barbell_partition(k, m, l).unwrap()).unwrap();
        prop_assert!(q.is_equitable);
        let full = numeric_eigenvalues(&d, DEFAULT_EIG_TOL).unwrap();
        let sub = sym_eigenvalues(&q.symmetrized_f64(), q.matrix.dim(), DEFAULT_EIG_TOL).unwrap();
        let mut pool = full.clone();
        for x in sub {
            let pos = pool.iter().position(|y| (x - y).abs() < 1e-7 * x.abs().max(1.0));
            prop_assert!(pos.is_some(), "quotient eigenvalue {} missing", x);
            pool.remove(pos.unwrap());
        }
    }

    #[test]
    fn closed_form_multiplicities_sum_to_order(
        pick in 0usize..8, a in 2usize..=7, b in 1usize..=3,
    ) {
        let (cf, g) = match pick {
            0 => (hamming_spectrum(b, a), hamming(b, a)),
            1 => (johnson_spectrum(a + 2, b.min(a + 1)), johnson(a + 2, b.min(a + 1))),
            2 => (kneser_spectrum(2 * b + 1 + a % 3, b), kneser(2 * b + 1 + a % 3, b)),
            3 => (cycle_spectrum(a + 1), cycle(a + 1)),
            4 => (cocktail_party_spectrum(a), cocktail_party(a)),
            5 => (complete_spectrum(a), complete(a)),
            6 => (halved_cube_spectrum(a.max(4)), halved_cube(a.max(4))),
            _ => (double_odd_spectrum(b + 1), double_odd(b + 1)),
        };
        let cf = cf.unwrap();
        prop_assert_eq!(cf.order(), g.unwrap().order());
        if cf.spectrum.is_exact() {
            prop_assert!(cf.spectrum.exact_trace().unwrap().is_zero());
        } else {
            prop_assert!(cf.spectrum.trace_f64().abs() < 1e-8 * cf.order() as f64);
        }
    }
}

/// Lemma identities other than the squared even sum hold over the whole
/// grid; the squared even sum holds for `d >= 3`.
#[test]
fn lemma_identities_on_grid() {
    for selector in 1..=6u8 {
        for x in 0..=20u32 {
            for b in 0..=10u32 {
                if selector != 6 && b > 0 {
                    continue;
                }
                let Ok(id) = LemmaIdentity::from_selector(selector, x, b) else {
                    continue;
                };
                if selector == 5 && x == 2 {
                    continue;
                }
                let (lhs, rhs) = lemma_identities(id);
                assert_eq!(lhs, rhs, "identity {selector} at x = {x}, b = {b}");
            }
        }
    }
}

#[test]
fn leaf_interlacing() {
    for d in 3..=4 {
        let mut outer = numeric_eigenvalues(
            &distance_matrix(&hypercube_with_leaf(d).unwrap()).unwrap(),
            DEFAULT_EIG_TOL,
        )
        .unwrap();
        let mut inner = numeric_eigenvalues(
            &distance_matrix(&hypercube(d).unwrap()).unwrap(),
            DEFAULT_EIG_TOL,
        )
        .unwrap();
        outer.sort_by(f64::total_cmp);
        inner.sort_by(f64::total_cmp);
        for (i, x) in inner.iter().enumerate() {
            assert!(
                outer[i] <= x + 1e-9 && *x <= outer[i + 1] + 1e-9,
                "d = {d}, i = {i}"
            );
        }
    }
}

#[test]
fn distance_regular_generators_are_transmission_regular() {
    let graphs = [
        hypercube(4).unwrap(),
        hamming(3, 3).unwrap(),
        shrikhande(),
        doob(1, 1).unwrap(),
        johnson(7, 3).unwrap(),
        odd_graph(3).unwrap(),
        double_odd(2).unwrap(),
        halved_cube(6).unwrap(),
        cocktail_party(5).unwrap(),
        petersen(),
        icosahedron(),
        dodecahedron(),
        paley(13).unwrap(),
        cycle(9).unwrap(),
    ];
    for g in graphs {
        assert!(g.is_connected());
        assert!(transmission_profile(&g).unwrap().is_transmission_regular);
    }
}

/// Doob graphs built from coordinates: Shrikhande coordinates in `Z_4²`
/// followed by `K_4` coordinates, indexed row-major.
#[test]
fn doob_matches_coordinate_construction() {
    fn shrikhande_adjacent(a: usize, b: usize) -> bool {
        let (x, y) = ((a / 4 + 4 - b / 4) % 4, (a % 4 + 4 - b % 4) % 4);
        matches!((x, y), (0, 1) | (0, 3) | (1, 0) | (3, 0) | (1, 1) | (3, 3))
    }
    for (m, d) in [(1usize, 0usize), (1, 1), (2, 0)] {
        let coords = m + d;
        let n = 16usize.pow(m as u32) * 4usize.pow(d as u32);
        let digits = |v: usize| {
            let mut out = vec![0; coords];
            let mut r = v;
            for i in (0..coords).rev() {
                let base = if i < m { 16 } else { 4 };
                out[i] = r % base;
                r /= base;
            }
            out
        };
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (digits(u), digits(v));
                let diff: Vec<usize> = (0..coords).filter(|&i| a[i] != b[i]).collect();
                if diff.len() == 1 {
                    let i = diff[0];
                    if i >= m || shrikhande_adjacent(a[i], b[i]) {
                        edges.push((u, v));
                    }
                }
            }
        }
        assert_eq!(
            doob(m, d).unwrap(),
            make_graph(n, &edges).unwrap(),
            "D({m}, {d})"
        );
    }
}

#[test]
fn bipartite_double_has_parity_blocks() {
    for r in 2..=3 {
        let g = double_odd(r).unwrap();
        let d = distance_matrix(&g).unwrap();
        let half = g.order() / 2;
        for i in 0..g.order() {
            for j in 0..g.order() {
                let same_side = (i < half) == (j < half);
                let even = (d.get(i, j) % 2u32).is_zero();
                assert_eq!(even, same_side, "r = {r}, ({i}, {j})");
                assert_eq!(
                    d.get(i, j),
                    d.get((i + half) % g.order(), (j + half) % g.order())
                );
            }
        }
    }
}

#[test]
fn line_graph_of_complete_is_triangular() {
    for m in 3..=8 {
        let l = line_graph(&complete(m).unwrap()).unwrap();
        assert_eq!(l.order(), m * (m - 1) / 2);
        assert_eq!(l.regular_degree(), Some(2 * m - 4));
    }
}
