//! File formats: edge lists, `treedecomp.v1`, `fanpartition.v1`,
//! `productembedding.v1` JSON and `sweep.v1` CSV.

use serde::{Deserialize, Serialize};

use crate::decomp::TreeDecomposition;
use crate::embedding::ProductEmbedding;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::lemmas::SweepRow;
use crate::partition::FanPartition;
use crate::rational::{to_f64, Rational};

/// Parses `n m` followed by `m` lines `u v`. Blank lines and `#` comments are skipped.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, msg: &str| Error::Parse(format!("line {}: {msg}", line + 1));
    let pair = |line: usize, s: &str| -> Result<(usize, usize)> {
        let mut it = s.split_whitespace();
        let a = it
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| bad(line, "expected two integers"))?;
        let b = it
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| bad(line, "expected two integers"))?;
        if it.next().is_some() {
            return Err(bad(line, "expected two integers"));
        }
        Ok((a, b))
    };
    let (first, header) = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = pair(first, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref() {
        let (u, v) = pair(line, text)?;
        if u == v {
            return Err(bad(line, &format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(bad(line, &format!("edge ({u}, {v}) out of range for n = {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges).map_err(|e| Error::Parse(e.to_string()))
}

/// Header `n m`, then the edges `u v` with `u < v` in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
struct FanPartitionV1 {
    n: usize,
    central: Vec<usize>,
    path_parts: Vec<Vec<usize>>,
}

fn set_of(v: Vec<usize>) -> Result<VertexSet> {
    VertexSet::try_from_vec(v).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_fan_partition(text: &str) -> Result<FanPartition> {
    let raw: FanPartitionV1 = parse_json(text, "fanpartition.v1")?;
    let central = set_of(raw.central)?;
    let parts = raw.path_parts.into_iter().map(set_of).collect::<Result<Vec<_>>>()?;
    Ok(FanPartition {
        central,
        path_parts: parts,
        graph_n: raw.n,
    })
}

pub fn write_fan_partition(fp: &FanPartition) -> String {
    to_json(&FanPartitionV1 {
        n: fp.graph_n,
        central: fp.central.as_slice().to_vec(),
        path_parts: fp.path_parts.iter().map(|p| p.as_slice().to_vec()).collect(),
    })
}

#[derive(Serialize, Deserialize)]
struct TreeDecompV1 {
    parent: Vec<i64>,
    bags: Vec<Vec<usize>>,
    #[serde(default)]
    apex: Vec<Vec<usize>>,
}

impl TreeDecompV1 {
    fn from_td(td: &TreeDecomposition) -> Self {
        TreeDecompV1 {
            parent: td.tree().parents().iter().map(|p| p.map_or(-1, |p| p as i64)).collect(),
            bags: td.bags().iter().map(|b| b.as_slice().to_vec()).collect(),
            apex: td.apexes().iter().map(|b| b.as_slice().to_vec()).collect(),
        }
    }

    fn into_td(self) -> Result<TreeDecomposition> {
        let parent = self
            .parent
            .iter()
            .map(|&p| match p {
                -1 => Ok(None),
                p if p >= 0 => Ok(Some(p as usize)),
                p => Err(Error::Parse(format!("invalid parent {p}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let n = self.bags.len();
        let bags = self.bags.into_iter().map(set_of).collect::<Result<Vec<_>>>()?;
        let apex = if self.apex.is_empty() {
            vec![VertexSet::new(); n]
        } else {
            self.apex.into_iter().map(set_of).collect::<Result<Vec<_>>>()?
        };
        TreeDecomposition::with_apex(parent, bags, apex)
    }
}

pub fn read_tree_decomposition(text: &str) -> Result<TreeDecomposition> {
    parse_json::<TreeDecompV1>(text, "treedecomp.v1")?.into_td()
}

pub fn write_tree_decomposition(td: &TreeDecomposition) -> String {
    to_json(&TreeDecompV1::from_td(td))
}

#[derive(Serialize, Deserialize)]
struct ProductEmbeddingV1 {
    host_n: usize,
    host_edges: Vec<(usize, usize)>,
    host_td: TreeDecompV1,
    path_len: usize,
    coords: Vec<(usize, usize)>,
}

pub fn read_product_embedding(text: &str) -> Result<ProductEmbedding> {
    let raw: ProductEmbeddingV1 = parse_json(text, "productembedding.v1")?;
    Ok(ProductEmbedding {
        host_h: Graph::from_edges(raw.host_n, &raw.host_edges).map_err(|e| Error::Parse(e.to_string()))?,
        host_td: raw.host_td.into_td()?,
        path_len: raw.path_len,
        coords: raw.coords,
    })
}

pub fn write_product_embedding(pe: &ProductEmbedding) -> String {
    to_json(&ProductEmbeddingV1 {
        host_n: pe.host_h.n(),
        host_edges: pe.host_h.edges().collect(),
        host_td: TreeDecompV1::from_td(&pe.host_td),
        path_len: pe.path_len,
        coords: pe.coords.clone(),
    })
}

fn decimal(r: &Rational) -> String {
    format!("{:.6}", to_f64(r))
}

#[derive(Serialize)]
struct SweepRecord {
    d: String,
    n: usize,
    central_size: usize,
    bound_k: String,
    path_width: usize,
    bound_w: String,
    pass: bool,
}

/// `sweep.v1`: `d, n, central_size, bound_k, path_width, bound_w, pass`.
pub fn write_sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(SweepRecord {
            d: decimal(&r.d),
            n: r.n,
            central_size: r.central_size,
            bound_k: decimal(&r.bound_k),
            path_width: r.path_width,
            bound_w: decimal(&r.bound_w),
            pass: r.pass,
        })
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_fan, make_ktree};
    use crate::rational::int;

    #[test]
    fn edge_list_round_trip() {
        let g = make_fan(6).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("6 9\n0 1\n"));
        assert_eq!(read_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_normalises_direction() {
        let g = read_edge_list("3 2\n1 0\n2 1\n").unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        for text in [
            "",
            "3 1\n0 0\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n1 0\n",
            "3 2\n0 1\n",
            "3 1\n0 x\n",
            "2 1\n0 1 1\n",
        ] {
            assert!(matches!(read_edge_list(text), Err(Error::Parse(_))), "{text:?}");
        }
    }

    #[test]
    fn fan_partition_round_trip() {
        let fp = FanPartition::new(5, VertexSet::from([4]), vec![[0, 2].into(), [1, 3].into()]).unwrap();
        let text = write_fan_partition(&fp);
        assert_eq!(read_fan_partition(&text).unwrap(), fp);
        let unsorted = r#"{"n": 3, "central": [], "path_parts": [[2, 0], [1]]}"#;
        assert_eq!(
            read_fan_partition(unsorted).unwrap().path_parts[0],
            VertexSet::from([0, 2])
        );
        assert!(read_fan_partition("{not json").is_err());
    }

    #[test]
    fn tree_decomposition_round_trip() {
        let mut td = make_ktree(12, 2, 3).unwrap().decomposition;
        td.set_apex(1, VertexSet::singleton(td.bag(1).as_slice()[0]));
        assert_eq!(read_tree_decomposition(&write_tree_decomposition(&td)).unwrap(), td);
        let no_apex = r#"{"parent": [-1, 0], "bags": [[0, 1], [1, 2]]}"#;
        assert_eq!(read_tree_decomposition(no_apex).unwrap().max_apex(), 0);
        assert!(read_tree_decomposition(r#"{"parent": [-1, -1], "bags": [[0], [1]]}"#).is_err());
    }

    #[test]
    fn product_embedding_round_trip() {
        let g = crate::graph::make_path(4).unwrap();
        let pe = ProductEmbedding::trivial(&g, &crate::decomp::heuristic_treedecomp(&g));
        assert_eq!(read_product_embedding(&write_product_embedding(&pe)).unwrap(), pe);
    }

    #[test]
    fn sweep_csv_layout() {
        let row = SweepRow {
            d: Rational::new(3, 2),
            n: 10,
            central_size: 4,
            bound_k: int(20),
            path_width: 3,
            bound_w: int(3),
            pass: true,
            canonical: false,
        };
        let csv = write_sweep_csv(&[row]);
        assert_eq!(
            csv,
            "d,n,central_size,bound_k,path_width,bound_w,pass\n1.500000,10,4,20.000000,3,3.000000,true\n"
        );
    }
}
