use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// `G * H`: `h` is relabeled to `g.n()..`, and every cross pair is an edge.
pub fn join_graphs(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.n(), h.n());
    let left = VertexSet::full(n1);
    let right = VertexSet::full(n2).shifted(n1);
    let mut adj = Vec::with_capacity(n1 + n2);
    adj.extend((0..n1).map(|v| g.neighbors(v).union(&right)));
    adj.extend((0..n2).map(|v| h.neighbors(v).shifted(n1).union(&left)));
    Graph::from_adjacency(adj)
}

/// `G ⊔ H` with `h` relabeled to `g.n()..`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.n();
    let mut adj: Vec<VertexSet> = (0..n1).map(|v| g.neighbors(v).clone()).collect();
    adj.extend((0..h.n()).map(|v| h.neighbors(v).shifted(n1)));
    Graph::from_adjacency(adj)
}

/// `G □ H`. Vertex `(i, j)` is flattened to `i * |V(H)| + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    product(g, h, |gu, hv, same_u, same_v| {
        (same_u && hv) || (gu && same_v)
    })
}

/// `G × H` (categorical / tensor product), flattened like
/// [`cartesian_product`].
pub fn categorical_product(g: &Graph, h: &Graph) -> Graph {
    product(g, h, |gu, hv, _, _| gu && hv)
}

fn product(g: &Graph, h: &Graph, rule: impl Fn(bool, bool, bool, bool) -> bool) -> Graph {
    let m = h.n();
    let n = g.n() * m;
    let mut adj = vec![VertexSet::new(); n];
    for a in 0..n {
        let (u1, v1) = (a / m, a % m);
        for b in a + 1..n {
            let (u2, v2) = (b / m, b % m);
            if rule(g.has_edge(u1, u2), h.has_edge(v1, v2), u1 == u2, v1 == v2) {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
    Graph::from_adjacency(adj)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let all = VertexSet::full(n);
    Graph::from_adjacency(
        (0..n)
            .map(|v| all.difference(g.neighbors(v)).without(v))
            .collect(),
    )
}

/// `G[s]`, relabeled order-preservingly to `0..|s|`.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph> {
    if !s.is_within(g.n()) {
        return Err(Error::input("induced subgraph: vertex set out of range"));
    }
    let keep = s.to_vec();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let adj = keep
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .mapped(|w| (index[w] != usize::MAX).then(|| index[w]))
        })
        .collect();
    Ok(Graph::from_adjacency(adj))
}

/// `G - v`, with vertices above `v` shifted down by one.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    induced_subgraph(g, &g.vertices().without(v))
}

/// `G - e`; the vertex set is unchanged.
pub fn delete_edge(g: &Graph, e: (usize, usize)) -> Result<Graph> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::input(format!("({u},{v}) is not an edge")));
    }
    let mut adj: Vec<VertexSet> = (0..g.n()).map(|w| g.neighbors(w).clone()).collect();
    adj[u].remove(v);
    adj[v].remove(u);
    Ok(Graph::from_adjacency(adj))
}
