//! File formats for graphs, ideals and generator orders.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::ideals::{GeneratorOrder, Monomial, MonomialIdeal};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    numvars: usize,
    generators: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct OrderJson {
    order: Vec<usize>,
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(s).map_err(parse_err)?;
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    let g = Graph::new(raw.n, &edges)?;
    match raw.labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    let raw = GraphJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&raw).expect("graph serializes")
}

/// First line `n`, then one `i j` edge per line. Blank lines and lines
/// starting with `#` are skipped.
pub fn graph_from_text(s: &str) -> Result<Graph> {
    let mut lines = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?
        .parse()
        .map_err(parse_err)?;
    let mut edges = Vec::new();
    for line in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected `i j`, got `{line}`")));
        }
        let a = parts[0].parse().map_err(parse_err)?;
        let b = parts[1].parse().map_err(parse_err)?;
        edges.push((a, b));
    }
    Graph::new(n, &edges)
}

/// JSON when the content starts with `{`, plain text otherwise.
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.trim_start().starts_with('{') {
        graph_from_json(s)
    } else {
        graph_from_text(s)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn ideal_from_json(s: &str) -> Result<MonomialIdeal> {
    let raw: IdealJson = serde_json::from_str(s).map_err(parse_err)?;
    let gens: Vec<Monomial> = raw
        .generators
        .into_iter()
        .map(|e| {
            if e.len() == raw.numvars {
                Ok(Monomial::new(e))
            } else {
                Err(Error::MixedArity(e.len(), raw.numvars))
            }
        })
        .collect::<Result<_>>()?;
    MonomialIdeal::new(raw.numvars, &gens)
}

pub fn ideal_to_json(i: &MonomialIdeal) -> String {
    let raw = IdealJson {
        numvars: i.numvars(),
        generators: i
            .generators()
            .iter()
            .map(|m| m.exponents().to_vec())
            .collect(),
    };
    serde_json::to_string(&raw).expect("ideal serializes")
}

/// `{"order": [...]}`, generator indices largest first.
pub fn order_from_json(s: &str) -> Result<GeneratorOrder> {
    let raw: OrderJson = serde_json::from_str(s).map_err(parse_err)?;
    GeneratorOrder::from_perm(raw.order)
}

pub fn order_to_json(o: &GeneratorOrder) -> String {
    serde_json::to_string(&OrderJson {
        order: o.perm().to_vec(),
    })
    .expect("order serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_formats_agree() {
        let a = graph_from_json(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        let b = graph_from_text("3\n0 1\n# comment\n1 2\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_graph(&graph_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn graph_rejections() {
        assert!(matches!(
            graph_from_json(r#"{"n":2,"edges":[[0,2]]}"#),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            graph_from_text("2\n1 1\n"),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            graph_from_text("3\n0 1\n1 0\n"),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(graph_from_text("x\n"), Err(Error::Parse(_))));
        assert!(matches!(graph_from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn ideal_and_order_round_trip() {
        let s = r#"{"numvars":3,"generators":[[1,1,0],[0,1,1]]}"#;
        let i = ideal_from_json(s).unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(ideal_from_json(&ideal_to_json(&i)).unwrap(), i);
        let o = order_from_json(r#"{"order":[1,0]}"#).unwrap();
        assert_eq!(order_to_json(&o), r#"{"order":[1,0]}"#);
        assert!(matches!(
            order_from_json(r#"{"order":[0,0]}"#),
            Err(Error::InvalidOrder(_))
        ));
    }
}
