//! Named graph families with their generators and, where one exists, the
//! closed-form distance spectrum.

use std::fmt;

use thiserror::Error;

use crate::closed_forms::{self as cf, ClosedFormError, ClosedFormSpectrum};
use crate::graph::{self, cartesian_product, Graph, GraphError};
use crate::srg::{srg_eigen_data, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown family '{0}'")]
    Unknown(String),
    #[error("{family} takes {expected} parameter(s), got {found}")]
    Arity {
        family: &'static str,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    Hypercube(usize),
    Hamming { d: usize, n: usize },
    Shrikhande,
    ShrikhandePower(usize),
    Doob { m: usize, d: usize },
    Johnson { n: usize, r: usize },
    Kneser { n: usize, r: usize },
    Odd(usize),
    DoubleOdd(usize),
    HalvedCube(usize),
    CocktailParty(usize),
    Paley(usize),
    Barbell { k: usize, m: usize, l: usize },
    Lollipop { k: usize, l: usize },
    HypercubeWithLeaf(usize),
    Petersen,
    Icosahedron,
    Dodecahedron,
}

/// Family names accepted by [`Family::parse`] with their parameter names.
pub const FAMILY_NAMES: [(&str, &[&str]); 22] = [
    ("complete", &["n"]),
    ("cycle", &["n"]),
    ("path", &["n"]),
    ("complete-bipartite", &["a", "b"]),
    ("hypercube", &["d"]),
    ("hamming", &["d", "n"]),
    ("shrikhande", &[]),
    ("shrikhande-power", &["m"]),
    ("doob", &["m", "d"]),
    ("johnson", &["n", "r"]),
    ("kneser", &["n", "r"]),
    ("odd", &["r"]),
    ("double-odd", &["r"]),
    ("halved-cube", &["d"]),
    ("cocktail-party", &["m"]),
    ("paley", &["q"]),
    ("barbell", &["k", "m", "l"]),
    ("lollipop", &["k", "l"]),
    ("hypercube-leaf", &["d"]),
    ("petersen", &[]),
    ("icosahedron", &[]),
    ("dodecahedron", &[]),
];

impl Family {
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, CatalogError> {
        let (family, names) = FAMILY_NAMES
            .iter()
            .find(|(f, _)| *f == name)
            .ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
        if params.len() != names.len() {
            return Err(CatalogError::Arity {
                family,
                expected: names.len(),
                found: params.len(),
            });
        }
        let p = |i: usize| params[i];
        Ok(match *family {
            "complete" => Family::Complete(p(0)),
            "cycle" => Family::Cycle(p(0)),
            "path" => Family::Path(p(0)),
            "complete-bipartite" => Family::CompleteBipartite(p(0), p(1)),
            "hypercube" => Family::Hypercube(p(0)),
            "hamming" => Family::Hamming { d: p(0), n: p(1) },
            "shrikhande" => Family::Shrikhande,
            "shrikhande-power" => Family::ShrikhandePower(p(0)),
            "doob" => Family::Doob { m: p(0), d: p(1) },
            "johnson" => Family::Johnson { n: p(0), r: p(1) },
            "kneser" => Family::Kneser { n: p(0), r: p(1) },
            "odd" => Family::Odd(p(0)),
            "double-odd" => Family::DoubleOdd(p(0)),
            "halved-cube" => Family::HalvedCube(p(0)),
            "cocktail-party" => Family::CocktailParty(p(0)),
            "paley" => Family::Paley(p(0)),
            "barbell" => Family::Barbell {
                k: p(0),
                m: p(1),
                l: p(2),
            },
            "lollipop" => Family::Lollipop { k: p(0), l: p(1) },
            "hypercube-leaf" => Family::HypercubeWithLeaf(p(0)),
            "petersen" => Family::Petersen,
            "icosahedron" => Family::Icosahedron,
            _ => Family::Dodecahedron,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::CompleteBipartite(..) => "complete-bipartite",
            Family::Hypercube(_) => "hypercube",
            Family::Hamming { .. } => "hamming",
            Family::Shrikhande => "shrikhande",
            Family::ShrikhandePower(_) => "shrikhande-power",
            Family::Doob { .. } => "doob",
            Family::Johnson { .. } => "johnson",
            Family::Kneser { .. } => "kneser",
            Family::Odd(_) => "odd",
            Family::DoubleOdd(_) => "double-odd",
            Family::HalvedCube(_) => "halved-cube",
            Family::CocktailParty(_) => "cocktail-party",
            Family::Paley(_) => "paley",
            Family::Barbell { .. } => "barbell",
            Family::Lollipop { .. } => "lollipop",
            Family::HypercubeWithLeaf(_) => "hypercube-leaf",
            Family::Petersen => "petersen",
            Family::Icosahedron => "icosahedron",
            Family::Dodecahedron => "dodecahedron",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::Complete(a)
            | Family::Cycle(a)
            | Family::Path(a)
            | Family::Hypercube(a)
            | Family::ShrikhandePower(a)
            | Family::Odd(a)
            | Family::DoubleOdd(a)
            | Family::HalvedCube(a)
            | Family::CocktailParty(a)
            | Family::Paley(a)
            | Family::HypercubeWithLeaf(a) => vec![a],
            Family::CompleteBipartite(a, b) => vec![a, b],
            Family::Hamming { d, n } => vec![d, n],
            Family::Doob { m, d } => vec![m, d],
            Family::Johnson { n, r } | Family::Kneser { n, r } => vec![n, r],
            Family::Barbell { k, m, l } => vec![k, m, l],
            Family::Lollipop { k, l } => vec![k, l],
            Family::Shrikhande | Family::Petersen | Family::Icosahedron | Family::Dodecahedron => {
                vec![]
            }
        }
    }

    pub fn graph(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Complete(n) => graph::complete(n),
            Family::Cycle(n) => graph::cycle(n),
            Family::Path(n) => graph::path(n),
            Family::CompleteBipartite(a, b) => graph::complete_bipartite(a, b),
            Family::Hypercube(d) => graph::hypercube(d),
            Family::Hamming { d, n } => graph::hamming(d, n),
            Family::Shrikhande => Ok(graph::shrikhande()),
            Family::ShrikhandePower(m) => {
                if !(1..=2).contains(&m) {
                    return Err(GraphError::Parameter {
                        family: "shrikhande_power",
                        constraint: "1 <= m <= 2".into(),
                    });
                }
                let s = graph::shrikhande();
                Ok((1..m).fold(s.clone(), |acc, _| cartesian_product(&acc, &s)))
            }
            Family::Doob { m, d } => graph::doob(m, d),
            Family::Johnson { n, r } => graph::johnson(n, r),
            Family::Kneser { n, r } => graph::kneser(n, r),
            Family::Odd(r) => graph::odd_graph(r),
            Family::DoubleOdd(r) => graph::double_odd(r),
            Family::HalvedCube(d) => graph::halved_cube(d),
            Family::CocktailParty(m) => graph::cocktail_party(m),
            Family::Paley(q) => graph::paley(q),
            Family::Barbell { k, m, l } => graph::generalized_barbell(k, m, l),
            Family::Lollipop { k, l } => graph::lollipop(k, l),
            Family::HypercubeWithLeaf(d) => graph::hypercube_with_leaf(d),
            Family::Petersen => Ok(graph::petersen()),
            Family::Icosahedron => Ok(graph::icosahedron()),
            Family::Dodecahedron => Ok(graph::dodecahedron()),
        }
    }

    /// Closed-form distance spectrum, or `None` for families without one.
    pub fn closed_form(&self) -> Option<Result<ClosedFormSpectrum, ClosedFormError>> {
        Some(match *self {
            Family::Complete(n) => cf::complete_spectrum(n),
            Family::Cycle(n) => cf::cycle_spectrum(n),
            Family::Hypercube(d) => cf::hamming_spectrum(d, 2),
            Family::Hamming { d, n } => cf::hamming_spectrum(d, n),
            Family::Shrikhande => Ok(cf::shrikhande_spectrum()),
            Family::ShrikhandePower(m) => cf::shrikhande_power_spectrum(m),
            Family::Doob { m, d } => cf::doob_spectrum(m, d),
            Family::Johnson { n, r } => cf::johnson_spectrum(n, r),
            Family::Kneser { n, r } => cf::kneser_spectrum(n, r),
            Family::Odd(r) => cf::kneser_spectrum(2 * r + 1, r),
            Family::DoubleOdd(r) => cf::double_odd_spectrum(r),
            Family::HalvedCube(d) => cf::halved_cube_spectrum(d),
            Family::CocktailParty(m) => cf::cocktail_party_spectrum(m),
            Family::Paley(q) => paley_spectrum(q),
            Family::Petersen => Ok(cf::petersen_spectrum()),
            Family::Icosahedron => Ok(cf::icosahedron_spectrum()),
            Family::Dodecahedron => Ok(cf::dodecahedron_spectrum()),
            Family::Path(_)
            | Family::CompleteBipartite(..)
            | Family::Barbell { .. }
            | Family::Lollipop { .. }
            | Family::HypercubeWithLeaf(_) => return None,
        })
    }
}

fn paley_spectrum(q: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    let bad = || ClosedFormError::Parameter {
        family: "paley",
        constraint: format!("q = {q} must be a prime with q = 1 mod 4"),
    };
    if graph::paley(q).is_err() {
        return Err(bad());
    }
    let q = q as u64;
    let p = SrgParams::new(q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4).map_err(|_| bad())?;
    Ok(ClosedFormSpectrum::new(
        srg_eigen_data(&p).distance_spectrum(),
        "strongly regular",
    ))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.name(), params.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for (name, names) in FAMILY_NAMES {
            let params = vec![3; names.len()];
            let f = Family::parse(name, &params).unwrap();
            assert_eq!(f.name(), name);
            assert_eq!(f.params(), params);
        }
        assert!(matches!(
            Family::parse("moebius", &[]),
            Err(CatalogError::Unknown(_))
        ));
        assert!(matches!(
            Family::parse("johnson", &[7]),
            Err(CatalogError::Arity { .. })
        ));
        assert_eq!(
            Family::parse("johnson", &[7, 3]).unwrap().to_string(),
            "johnson(7, 3)"
        );
    }

    #[test]
    fn closed_form_orders_match_generators() {
        let families = [
            Family::Complete(5),
            Family::Cycle(9),
            Family::Hypercube(4),
            Family::Hamming { d: 2, n: 3 },
            Family::Shrikhande,
            Family::Doob { m: 1, d: 1 },
            Family::Johnson { n: 7, r: 3 },
            Family::Kneser { n: 7, r: 2 },
            Family::Odd(3),
            Family::DoubleOdd(2),
            Family::HalvedCube(5),
            Family::CocktailParty(4),
            Family::Paley(13),
            Family::Petersen,
            Family::Icosahedron,
            Family::Dodecahedron,
        ];
        for f in families {
            let cf = f.closed_form().unwrap().unwrap();
            assert_eq!(cf.order(), f.graph().unwrap().order(), "{f}");
        }
        assert!(Family::Path(5).closed_form().is_none());
        assert!(matches!(
            Family::HalvedCube(3).closed_form(),
            Some(Err(ClosedFormError::HalvedCubeScope(3)))
        ));
        assert!(Family::ShrikhandePower(3).graph().is_err());
    }
}
