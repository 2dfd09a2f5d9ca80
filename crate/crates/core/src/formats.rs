//! File formats and the family mini-language.
//!
//! * Graph JSON: `{"edges": [[u, v], ...], "n": count}` with `u < v` and
//!   edges sorted.
//! * Edge-list text: a header line `n <count>`, then one `u v` per line.
//! * Complex JSON: `{"facets": [[v, ...], ...], "ground": count}`; `[[]]`
//!   is the empty complex and `[]` the void complex.
//!
//! Every JSON document is written with sorted keys.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, categorical_product, generate, join_graphs, random_cactus, random_graph,
    FamilySpec, Graph, VertexSet,
};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    ground: usize,
    facets: Vec<Vec<usize>>,
}

/// Pretty JSON with object keys in sorted order.
pub fn to_stable_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

pub fn graph_to_json(g: &Graph) -> Result<String> {
    to_stable_json(&GraphJson {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    })
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text)?;
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::new(raw.n, &edges)
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list is empty".into()))?;
    let n = header
        .strip_prefix('n')
        .and_then(|t| t.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("expected header `n <count>`, got {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    Graph::new(n, &edges)
}

/// Reads either graph format, telling them apart by the first character.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        graph_from_json(&text)
    } else {
        graph_from_edge_list(&text)
    }
}

pub fn complex_to_json(k: &SimplicialComplex) -> Result<String> {
    to_stable_json(&complex_value(k))
}

fn complex_value(k: &SimplicialComplex) -> ComplexJson {
    ComplexJson {
        ground: k.ground(),
        facets: k.facets().iter().map(VertexSet::to_vec).collect(),
    }
}

/// Complex JSON plus `dim`, `euler` and `f_vector` fields.
pub fn complex_to_json_with_stats(k: &SimplicialComplex) -> Result<String> {
    let mut v = serde_json::to_value(complex_value(k))?;
    let obj = v.as_object_mut().expect("complex json is an object");
    obj.insert("dim".into(), serde_json::to_value(k.dim())?);
    obj.insert("euler".into(), serde_json::to_value(k.euler_characteristic())?);
    obj.insert("f_vector".into(), serde_json::to_value(k.f_vector())?);
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

/// Reads complex JSON; extra keys are ignored.
pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let raw: ComplexJson = serde_json::from_str(text)?;
    let facets: Vec<VertexSet> = raw
        .facets
        .iter()
        .map(|f| f.iter().copied().collect())
        .collect();
    let k = SimplicialComplex::new(raw.ground, facets)?;
    if k.facets().len() != raw.facets.len() {
        return Err(Error::input("facet list is not an antichain"));
    }
    Ok(k)
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    complex_from_json(&std::fs::read_to_string(path)?)
}

/// Help text for the mini-language accepted by [`parse_family`].
pub const FAMILY_HELP: &str = "\
path:N  cycle:N  complete:N  empty:N  multipartite:A,B,...  bipartite:N,M
doublestar:R,S  wheel:N (rim size)  cyclechord:R,K  petersen  rp2  bowtie
ladder:K (P_2 x P_K)  knxkm:N,M  k2k2kn:N  torsion (P_4 * rp2)
cactus:BLOCKS,MAXCYCLE and random:N,P need --seed";

/// Builds a graph from `name:params`, e.g. `doublestar:3,3` or
/// `multipartite:2,2,3`. Randomized families take their seed separately.
pub fn parse_family(spec: &str, seed: Option<u64>) -> Result<Graph> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let name = name.trim().to_ascii_lowercase();
    let nums = || -> Result<Vec<usize>> {
        if params.trim().is_empty() {
            return Ok(Vec::new());
        }
        params
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad parameter {t:?} in {spec:?}")))
            })
            .collect()
    };
    let arity = |k: usize| -> Result<Vec<usize>> {
        let v = nums()?;
        if v.len() == k {
            Ok(v)
        } else {
            Err(Error::Parse(format!("{name} takes {k} parameter(s), got {spec:?}")))
        }
    };
    let need_seed = || {
        seed.ok_or_else(|| Error::input(format!("{name} is randomized and needs an explicit --seed")))
    };
    let fam = |s: FamilySpec| generate(&s);
    match name.as_str() {
        "path" => fam(FamilySpec::Path(arity(1)?[0])),
        "cycle" => fam(FamilySpec::Cycle(arity(1)?[0])),
        "complete" => fam(FamilySpec::Complete(arity(1)?[0])),
        "empty" => Ok(Graph::empty(arity(1)?[0])),
        "multipartite" => fam(FamilySpec::CompleteMultipartite(nums()?)),
        "bipartite" => {
            let v = arity(2)?;
            fam(FamilySpec::CompleteMultipartite(v))
        }
        "doublestar" => {
            let v = arity(2)?;
            fam(FamilySpec::DoubleStar(v[0], v[1]))
        }
        "wheel" => fam(FamilySpec::Wheel(arity(1)?[0])),
        "cyclechord" => {
            let v = arity(2)?;
            fam(FamilySpec::CycleWithChord(v[0], v[1]))
        }
        "petersen" => {
            arity(0)?;
            fam(FamilySpec::Petersen)
        }
        "rp2" => {
            arity(0)?;
            fam(FamilySpec::Rp2BarycentricComplement)
        }
        "bowtie" => {
            arity(0)?;
            Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        }
        "ladder" => {
            let k = arity(1)?[0];
            Ok(cartesian_product(&fam(FamilySpec::Path(2))?, &fam(FamilySpec::Path(k))?))
        }
        "knxkm" => {
            let v = arity(2)?;
            Ok(categorical_product(
                &fam(FamilySpec::Complete(v[0]))?,
                &fam(FamilySpec::Complete(v[1]))?,
            ))
        }
        "k2k2kn" => {
            let n = arity(1)?[0];
            let k2 = fam(FamilySpec::Complete(2))?;
            Ok(categorical_product(
                &categorical_product(&k2, &k2),
                &fam(FamilySpec::Complete(n))?,
            ))
        }
        "torsion" => {
            arity(0)?;
            Ok(join_graphs(
                &fam(FamilySpec::Path(4))?,
                &fam(FamilySpec::Rp2BarycentricComplement)?,
            ))
        }
        "cactus" => {
            let v = arity(2)?;
            if v[0] == 0 || v[1] < 3 {
                return Err(Error::input("cactus needs blocks >= 1 and max cycle >= 3"));
            }
            Ok(random_cactus(need_seed()?, v[0], v[1]))
        }
        "random" => {
            let (n, p) = params
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("random takes N,P, got {spec:?}")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex count in {spec:?}")))?;
            let p: f64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad probability in {spec:?}")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input("edge probability must lie in [0, 1]"));
            }
            Ok(random_graph(need_seed()?, n, p))
        }
        _ => Err(Error::Parse(format!("unknown family {name:?}; known:\n{FAMILY_HELP}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_json_round_trip() {
        let g = parse_family("doublestar:2,3", None).unwrap();
        let text = graph_to_json(&g).unwrap();
        assert!(text.find("\"edges\"").unwrap() < text.find("\"n\"").unwrap());
        assert_eq!(graph_from_json(&text).unwrap(), g);
        let compact: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(compact["edges"][0], serde_json::json!([0, 1]));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_family("petersen", None).unwrap();
        let text = graph_to_edge_list(&g);
        assert!(text.starts_with("n 10\n"));
        assert_eq!(graph_from_edge_list(&text).unwrap(), g);
        assert!(graph_from_edge_list("n 3\n0 3\n").is_err());
        assert!(graph_from_edge_list("3\n").is_err());
    }

    #[test]
    fn complex_json_conventions() {
        let empty = SimplicialComplex::empty(3);
        let void = SimplicialComplex::void(3);
        assert!(complex_to_json(&empty).unwrap().contains("[]\n  ]"));
        assert_eq!(complex_from_json(&complex_to_json(&empty).unwrap()).unwrap(), empty);
        assert_eq!(complex_from_json(&complex_to_json(&void).unwrap()).unwrap(), void);
        let s = SimplicialComplex::simplex_boundary(4);
        let text = complex_to_json_with_stats(&s).unwrap();
        assert_eq!(complex_from_json(&text).unwrap(), s);
        assert!(complex_from_json(r#"{"ground": 3, "facets": [[0], [0, 1]]}"#).is_err());
    }

    #[test]
    fn family_language() {
        assert_eq!(parse_family("multipartite:2,2,3", None).unwrap().n(), 7);
        assert_eq!(parse_family("ladder:3", None).unwrap().edge_count(), 7);
        assert_eq!(parse_family("knxkm:2,3", None).unwrap().edge_count(), 6);
        assert_eq!(parse_family("wheel:5", None).unwrap().n(), 6);
        assert_eq!(parse_family("torsion", None).unwrap().n(), 35);
        assert!(parse_family("cactus:3,5", None).is_err());
        assert_eq!(
            parse_family("cactus:3,5", Some(1)).unwrap(),
            parse_family("cactus:3,5", Some(1)).unwrap()
        );
        assert!(parse_family("random:6,0.5", Some(2)).is_ok());
        assert!(parse_family("cycle:2", None).is_err());
        assert!(parse_family("cycle", None).is_err());
        assert!(parse_family("mystery:1", None).is_err());
    }
}
