//! All-pairs shortest-path distances of connected graphs.

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::IntSymMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),
}

/// Distances as machine integers, one BFS per source (run in parallel; the
/// result does not depend on scheduling).
pub fn distance_table(g: &Graph) -> Result<Vec<Vec<usize>>, DistanceError> {
    // connectivity is decided from vertex 0 so the reported pair is stable
    if let Some(t) = g.bfs_distances(0).iter().position(Option::is_none) {
        return Err(DistanceError::Disconnected(0, t));
    }
    Ok((0..g.order())
        .into_par_iter()
        .map(|s| {
            g.bfs_distances(s)
                .into_iter()
                .map(|d| d.unwrap_or(0))
                .collect()
        })
        .collect())
}

/// The distance matrix `D(G)`.
pub fn distance_matrix(g: &Graph) -> Result<IntSymMatrix, DistanceError> {
    let table = distance_table(g)?;
    Ok(IntSymMatrix::from_upper(g.order(), |i, j| {
        BigInt::from(table[i][j])
    }))
}

pub fn diameter(g: &Graph) -> Result<usize, DistanceError> {
    Ok(distance_table(g)?
        .iter()
        .flat_map(|r| r.iter().copied())
        .max()
        .unwrap_or(0))
}

/// Row sums of `D(G)` (vertex transmissions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmissionProfile {
    pub row_sums: Vec<usize>,
    pub is_transmission_regular: bool,
}

pub fn transmission_profile(g: &Graph) -> Result<TransmissionProfile, DistanceError> {
    let row_sums: Vec<usize> = distance_table(g)?.iter().map(|r| r.iter().sum()).collect();
    let is_transmission_regular = row_sums.windows(2).all(|w| w[0] == w[1]);
    Ok(TransmissionProfile {
        row_sums,
        is_transmission_regular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use num_traits::ToPrimitive;

    fn small(m: &IntSymMatrix) -> Vec<Vec<i64>> {
        (0..m.dim())
            .map(|i| m.row(i).iter().map(|x| x.to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn complete_graph_distances() {
        let d = small(&distance_matrix(&complete(5).unwrap()).unwrap());
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, (i != j) as i64);
            }
        }
    }

    #[test]
    fn path_distances() {
        let d = small(&distance_matrix(&path(4).unwrap()).unwrap());
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, (i as i64 - j as i64).abs());
            }
        }
    }

    #[test]
    fn diameter_two_regular_graph_identity() {
        // D = 2(J - I) - A for regular graphs of diameter 2
        let p = petersen();
        let d = small(&distance_matrix(&p).unwrap());
        for i in 0..10 {
            for j in 0..10 {
                let expect = if i == j {
                    0
                } else {
                    2 - p.has_edge(i, j) as i64
                };
                assert_eq!(d[i][j], expect);
            }
        }
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = make_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            distance_matrix(&g).unwrap_err(),
            DistanceError::Disconnected(0, 2)
        );
        assert!(diameter(&kneser(4, 2).unwrap()).is_err());
    }

    #[test]
    fn diameters() {
        for d in 1..=5 {
            assert_eq!(diameter(&hypercube(d).unwrap()).unwrap(), d);
        }
        assert_eq!(diameter(&hypercube_with_leaf(4).unwrap()).unwrap(), 5);
    }

    #[test]
    fn transmission_regularity() {
        let c5 = transmission_profile(&cycle(5).unwrap()).unwrap();
        assert!(c5.is_transmission_regular);
        assert_eq!(c5.row_sums, vec![6; 5]);
        assert!(
            transmission_profile(&hamming(2, 3).unwrap())
                .unwrap()
                .is_transmission_regular
        );
        assert!(
            transmission_profile(&johnson(6, 2).unwrap())
                .unwrap()
                .is_transmission_regular
        );
        assert!(
            !transmission_profile(&lollipop(3, 2).unwrap())
                .unwrap()
                .is_transmission_regular
        );
    }
}
