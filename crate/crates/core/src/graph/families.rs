//! Generators for every graph family used in the distance-spectrum results.
//!
//! Subset-labelled families (hypercube, Johnson, Kneser, halved cube, double
//! odd) use bitmasks as vertex labels and list vertices in increasing numeric
//! order of the mask.

use super::{cartesian_product, Graph, GraphError};

fn check(ok: bool, family: &'static str, constraint: &str) -> Result<(), GraphError> {
    if ok {
        Ok(())
    } else {
        Err(GraphError::param(family, constraint))
    }
}

/// All `r`-element subsets of `{0, .., n-1}` as bitmasks, in increasing order.
pub fn subsets_of_size(n: usize, r: usize) -> Vec<u64> {
    assert!(n < 64, "ground set too large for bitmask labels");
    if r > n {
        return Vec::new();
    }
    if r == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut s: u64 = (1u64 << r) - 1;
    let limit = 1u64 << n;
    while s < limit {
        out.push(s);
        // Gosper's hack: next mask with the same popcount
        let c = s & s.wrapping_neg();
        let t = s + c;
        s = (((t ^ s) >> 2) / c) | t;
    }
    out
}

/// Builds a graph on labelled vertices with an adjacency predicate.
fn from_labels<T>(labels: &[T], adjacent: impl Fn(&T, &T) -> bool) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().skip(i + 1) {
            if adjacent(a, b) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(labels.len(), edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    check(n >= 2, "complete", "n >= 2")?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    check(n >= 3, "cycle", "n >= 3")?;
    Graph::new(n, (0..n).map(|u| (u, (u + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    check(n >= 2, "path", "n >= 2")?;
    Graph::new(n, (1..n).map(|u| (u - 1, u)))
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    check(a >= 1 && b >= 1, "complete_bipartite", "a >= 1 and b >= 1")?;
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// The `d`-cube on all subsets of `[d]`, adjacent when they differ in one element.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    check((1..=20).contains(&d), "hypercube", "1 <= d <= 20")?;
    let n = 1usize << d;
    Graph::new(
        n,
        (0..n).flat_map(|u| {
            (0..d)
                .map(move |b| (u, u ^ (1 << b)))
                .filter(|&(u, v)| u < v)
        }),
    )
}

/// Hamming graph `H(d, n)` on `d`-tuples over an `n`-letter alphabet. The
/// tuple `(x_1, .., x_d)` has index `sum x_i n^(d-i)`, which matches the
/// row-major `K_n □ .. □ K_n` convention.
pub fn hamming(d: usize, n: usize) -> Result<Graph, GraphError> {
    check(d >= 1 && n >= 2, "hamming", "d >= 1 and n >= 2")?;
    let kn = complete(n)?;
    let mut g = kn.clone();
    for _ in 1..d {
        g = cartesian_product(&g, &kn);
    }
    Ok(g)
}

/// Shrikhande graph on `Z_4 x Z_4`, with `(a, b)` at index `4a + b` and
/// `(a, b) ~ (c, d)` iff the difference is in `{±(0,1), ±(1,0), ±(1,1)}`.
pub fn shrikhande() -> Graph {
    const DIFFS: [(usize, usize); 6] = [(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)];
    let labels: Vec<(usize, usize)> = (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).collect();
    from_labels(&labels, |&(a, b), &(c, d)| {
        DIFFS.contains(&((a + 4 - c) % 4, (b + 4 - d) % 4))
    })
    .expect("shrikhande graph is well formed")
}

/// Doob graph `D(m, d)`: `m` Shrikhande factors followed by `H(d, 4)`.
pub fn doob(m: usize, d: usize) -> Result<Graph, GraphError> {
    check(m >= 1, "doob", "m >= 1")?;
    let s = shrikhande();
    let mut g = s.clone();
    for _ in 1..m {
        g = cartesian_product(&g, &s);
    }
    if d > 0 {
        g = cartesian_product(&g, &hamming(d, 4)?);
    }
    Ok(g)
}

/// Johnson graph `J(n, r)`: `r`-subsets adjacent when they share `r - 1` elements.
pub fn johnson(n: usize, r: usize) -> Result<Graph, GraphError> {
    check(r >= 1 && r < n && n < 64, "johnson", "1 <= r < n < 64")?;
    from_labels(&subsets_of_size(n, r), |a, b| {
        (a & b).count_ones() as usize == r - 1
    })
}

/// Kneser graph `K(n, r)`: `r`-subsets adjacent when disjoint. For `n <= 2r`
/// the result may be edgeless or disconnected; it is still a valid graph.
pub fn kneser(n: usize, r: usize) -> Result<Graph, GraphError> {
    check(r >= 1 && r < n && n < 64, "kneser", "1 <= r < n < 64")?;
    from_labels(&subsets_of_size(n, r), |a, b| a & b == 0)
}

/// Odd graph `O(r) = K(2r+1, r)`.
pub fn odd_graph(r: usize) -> Result<Graph, GraphError> {
    check(r >= 1, "odd_graph", "r >= 1")?;
    kneser(2 * r + 1, r)
}

/// Double odd graph `DO(r)` on the `r`- and `(r+1)`-subsets of `[2r+1]`,
/// adjacent under containment.
///
/// Vertex `i < N = C(2r+1, r)` is the `i`-th `r`-subset `S_i`; vertex `N + i`
/// is the complement of `S_i`. This is the `O(r) × P_2` labelling with the
/// `P_2` coordinate taken as the major index, so the distance matrix has the
/// block form `[[D_e, D_o], [D_o, D_e]]`.
pub fn double_odd(r: usize) -> Result<Graph, GraphError> {
    check(r >= 1 && 2 * r + 1 < 64, "double_odd", "1 <= r <= 31")?;
    let full = (1u64 << (2 * r + 1)) - 1;
    let small = subsets_of_size(2 * r + 1, r);
    let big: Vec<u64> = small.iter().map(|s| full & !s).collect();
    let count = small.len();
    let mut edges = Vec::new();
    for (i, s) in small.iter().enumerate() {
        for (j, t) in big.iter().enumerate() {
            if s & t == *s {
                edges.push((i, count + j));
            }
        }
    }
    Graph::new(2 * count, edges)
}

/// Halved cube `½Q_d` on the even subsets of `[d]`, adjacent at symmetric
/// difference 2.
pub fn halved_cube(d: usize) -> Result<Graph, GraphError> {
    check((2..=20).contains(&d), "halved_cube", "2 <= d <= 20")?;
    let labels: Vec<u64> = (0..1u64 << d).filter(|x| x.count_ones() % 2 == 0).collect();
    from_labels(&labels, |a, b| (a ^ b).count_ones() == 2)
}

/// Cocktail party graph `CP(m) = K_{2,..,2}`; vertices `2t` and `2t+1` form
/// the `t`-th non-adjacent pair. `CP(1)` is the edgeless graph on two vertices.
pub fn cocktail_party(m: usize) -> Result<Graph, GraphError> {
    check(m >= 1, "cocktail_party", "m >= 1")?;
    let n = 2 * m;
    Graph::new(
        n,
        (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |v| v / 2 != u / 2)
                .map(move |v| (u, v))
        }),
    )
}

/// Generalized barbell `B(k; m; l)`: a `k`-clique on `0..k`, an `m`-clique on
/// `k..k+m`, and a path on `k+m..k+m+l`. Vertex `k-1` is joined to the first
/// path vertex and `k+m-1` to the last; with `l = 0` the two cliques are
/// joined by the edge `(k-1, k+m-1)`.
pub fn generalized_barbell(k: usize, m: usize, l: usize) -> Result<Graph, GraphError> {
    check(k >= 2 && m >= 2, "generalized_barbell", "k >= 2 and m >= 2")?;
    let n = k + m + l;
    let mut edges = Vec::new();
    for u in 0..k {
        edges.extend((u + 1..k).map(|v| (u, v)));
    }
    for u in k..k + m {
        edges.extend((u + 1..k + m).map(|v| (u, v)));
    }
    for u in k + m + 1..n {
        edges.push((u - 1, u));
    }
    if l == 0 {
        edges.push((k - 1, k + m - 1));
    } else {
        edges.push((k - 1, k + m));
        edges.push((k + m - 1, n - 1));
    }
    Graph::new(n, edges)
}

/// Barbell `B(k, l) = B(k; k; l)`.
pub fn barbell(k: usize, l: usize) -> Result<Graph, GraphError> {
    generalized_barbell(k, k, l).map_err(|_| GraphError::param("barbell", "k >= 2"))
}

/// Lollipop `L(k, l)`: a `k`-clique on `0..k` with vertex `k-1` joined to the
/// end of a path on `k..k+l`.
pub fn lollipop(k: usize, l: usize) -> Result<Graph, GraphError> {
    check(k >= 2, "lollipop", "k >= 2")?;
    let n = k + l;
    let mut edges = Vec::new();
    for u in 0..k {
        edges.extend((u + 1..k).map(|v| (u, v)));
    }
    for u in k..n {
        edges.push((u - 1, u));
    }
    Graph::new(n, edges)
}

/// `Q_d` with a leaf (vertex `2^d`) attached to vertex 0.
pub fn hypercube_with_leaf(d: usize) -> Result<Graph, GraphError> {
    let q = hypercube(d).map_err(|_| GraphError::param("hypercube_with_leaf", "1 <= d <= 20"))?;
    let n = q.order();
    Graph::new(n + 1, q.edges().iter().copied().chain([(0, n)]))
}

/// Paley graph on `Z_q` for a prime `q ≡ 1 (mod 4)`: `x ~ y` when `x − y`
/// is a nonzero square.
pub fn paley(q: usize) -> Result<Graph, GraphError> {
    let prime = q >= 5 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0);
    check(
        prime && q % 4 == 1 && q <= 4096,
        "paley",
        "q prime, q = 1 mod 4, q <= 4096",
    )?;
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    let labels: Vec<usize> = (0..q).collect();
    from_labels(&labels, |&a, &b| square[(b + q - a) % q])
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("K(5,2) is well formed")
}

const ICOSAHEDRON_EDGES: [(usize, usize); 30] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 2),
    (1, 5),
    (1, 6),
    (1, 10),
    (2, 3),
    (2, 6),
    (2, 7),
    (3, 4),
    (3, 7),
    (3, 8),
    (4, 5),
    (4, 8),
    (4, 9),
    (5, 9),
    (5, 10),
    (6, 7),
    (6, 10),
    (6, 11),
    (7, 8),
    (7, 11),
    (8, 9),
    (8, 11),
    (9, 10),
    (9, 11),
    (10, 11),
];

const DODECAHEDRON_EDGES: [(usize, usize); 30] = [
    (0, 1),
    (0, 9),
    (0, 10),
    (1, 2),
    (1, 11),
    (2, 3),
    (2, 12),
    (3, 4),
    (3, 13),
    (4, 5),
    (4, 14),
    (5, 6),
    (5, 15),
    (6, 7),
    (6, 16),
    (7, 8),
    (7, 17),
    (8, 9),
    (8, 18),
    (9, 19),
    (10, 12),
    (10, 18),
    (11, 13),
    (11, 19),
    (12, 14),
    (13, 15),
    (14, 16),
    (15, 17),
    (16, 18),
    (17, 19),
];

/// Icosahedral graph: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Graph {
    Graph::new(12, ICOSAHEDRON_EDGES).expect("static edge list")
}

/// Dodecahedral graph as the generalized Petersen graph `GP(10, 2)`: outer
/// 10-cycle on 0..=9, spokes `i ~ 10+i`, inner edges `10+i ~ 10+(i+2 mod 10)`.
pub fn dodecahedron() -> Graph {
    Graph::new(20, DODECAHEDRON_EDGES).expect("static edge list")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{line_graph, tensor_product};

    /// Brute-force SRG parameters via common-neighbour counts.
    fn srg_counts(g: &Graph) -> Option<(usize, usize, usize, usize)> {
        let k = g.regular_degree()?;
        let (mut lam, mut mu) = (None, None);
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let common = g.neighbors(u).iter().filter(|w| g.has_edge(**w, v)).count();
                let slot = if g.has_edge(u, v) { &mut lam } else { &mut mu };
                match slot {
                    None => *slot = Some(common),
                    Some(c) if *c != common => return None,
                    _ => {}
                }
            }
        }
        Some((g.order(), k, lam?, mu?))
    }

    #[test]
    fn gosper_order_is_increasing() {
        let s = subsets_of_size(5, 2);
        assert_eq!(s.len(), 10);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert!(s.iter().all(|x| x.count_ones() == 2));
        assert_eq!(subsets_of_size(4, 0), vec![0]);
        assert_eq!(subsets_of_size(3, 3), vec![7]);
    }

    #[test]
    fn shrikhande_is_strongly_regular() {
        let s = shrikhande();
        assert_eq!(srg_counts(&s), Some((16, 6, 2, 2)));
    }

    #[test]
    fn paley_parameters() {
        for q in [5usize, 13, 17, 29] {
            let g = paley(q).unwrap();
            assert_eq!(
                srg_counts(&g),
                Some((q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4))
            );
        }
        assert!(paley(7).is_err());
        assert!(paley(25).is_err());
    }

    #[test]
    fn doob_orders() {
        let g = doob(1, 1).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (64, Some(9)));
        assert!(doob(0, 1).is_err());
    }

    #[test]
    fn small_barbell_layout() {
        let g = generalized_barbell(3, 2, 1).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2), (2, 5), (3, 4), (4, 5)]);
        let g0 = generalized_barbell(2, 2, 0).unwrap();
        assert!(g0.is_tree());
        assert_eq!(g0.edges(), &[(0, 1), (1, 3), (2, 3)]);
    }

    #[test]
    fn petersen_is_kneser_5_2() {
        let p = petersen();
        assert_eq!(srg_counts(&p), Some((10, 3, 0, 1)));
        assert_eq!(odd_graph(2).unwrap(), p);
    }

    #[test]
    fn halved_cube_small_cases() {
        assert_eq!(halved_cube(2).unwrap(), complete(2).unwrap());
        assert_eq!(halved_cube(3).unwrap(), complete(4).unwrap());
        let h4 = halved_cube(4).unwrap();
        assert_eq!((h4.order(), h4.regular_degree()), (8, Some(6)));
        assert_eq!(srg_counts(&h4), srg_counts(&cocktail_party(4).unwrap()));
    }

    #[test]
    fn double_odd_matches_tensor_product() {
        for r in 1..=3 {
            let odd = odd_graph(r).unwrap();
            let n = odd.order();
            let t = tensor_product(&odd, &path(2).unwrap());
            // (S, c) at index 2s + c maps to c * N + s
            let perm: Vec<usize> = (0..2 * n).map(|x| (x % 2) * n + x / 2).collect();
            assert_eq!(t.relabel(&perm).unwrap(), double_odd(r).unwrap(), "r = {r}");
        }
        let do2 = double_odd(2).unwrap();
        assert_eq!(do2.order(), 20);
        assert!(do2.is_bipartite() && do2.is_connected());
    }

    #[test]
    fn parameter_errors_name_constraint() {
        let err = johnson(3, 3).unwrap_err();
        assert!(err.to_string().contains("1 <= r < n"));
        assert!(cycle(2).is_err());
        assert!(generalized_barbell(1, 2, 0).is_err());
        assert!(lollipop(1, 3).is_err());
    }

    #[test]
    fn family_orders_and_regularity() {
        assert_eq!(johnson(6, 3).unwrap().regular_degree(), Some(9));
        assert_eq!(kneser(7, 3).unwrap().regular_degree(), Some(4));
        assert_eq!(icosahedron().regular_degree(), Some(5));
        assert_eq!(dodecahedron().regular_degree(), Some(3));
        assert_eq!(cocktail_party(3).unwrap().regular_degree(), Some(4));
        assert_eq!(hypercube_with_leaf(4).unwrap().order(), 17);
        assert_eq!(lollipop(4, 3).unwrap().size(), 6 + 3);
        assert!(!kneser(4, 2).unwrap().is_connected());
        let lk = line_graph(&complete(6).unwrap()).unwrap();
        assert_eq!((lk.order(), lk.regular_degree()), (15, Some(8)));
    }

    #[test]
    fn cartesian_degree_sets_add() {
        let g = lollipop(3, 2).unwrap();
        let h = path(3).unwrap();
        let prod = cartesian_product(&g, &h);
        let expect: std::collections::BTreeSet<usize> = g
            .degree_set()
            .iter()
            .flat_map(|a| h.degree_set().into_iter().map(move |b| a + b))
            .collect();
        assert_eq!(prod.degree_set(), expect);
    }
}
