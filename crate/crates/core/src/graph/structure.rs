use std::collections::VecDeque;
use std::fmt;

use super::{Graph, VertexSet};
use crate::complex::DegreeBound;

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Whether `G[s]` is a forest with maximum degree within `d`.
pub fn induced_forest_check(g: &Graph, s: &VertexSet, d: DegreeBound) -> bool {
    if let DegreeBound::Finite(cap) = d {
        if s.iter().any(|v| g.neighbors(v).intersection_len(s) > cap) {
            return false;
        }
    }
    let mut uf = UnionFind::new(g.n());
    for u in s.iter() {
        for v in g.neighbors(u).iter().filter(|&v| v > u && s.contains(v)) {
            if !uf.union(u, v) {
                return false;
            }
        }
    }
    true
}

/// Girth by breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Connected components, each as a vertex set, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = VertexSet::new();
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u).iter() {
                if comp.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen = seen.union(&comp);
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn fam(s: FamilySpec) -> Graph {
        generate(&s).unwrap()
    }

    #[test]
    fn forest_checks_on_cycle() {
        let c5 = fam(FamilySpec::Cycle(5));
        let arc: VertexSet = (0..4).collect();
        assert!(induced_forest_check(&c5, &arc, DegreeBound::Unbounded));
        assert!(!induced_forest_check(&c5, &c5.vertices(), DegreeBound::Unbounded));
    }

    #[test]
    fn forest_check_degree_cap() {
        // u_0 has neighbours u_1, u_2, v_0 inside the set: degree 3.
        let st = fam(FamilySpec::DoubleStar(2, 2));
        let s: VertexSet = [0, 1, 2, 3].into_iter().collect();
        assert!(!induced_forest_check(&st, &s, DegreeBound::Finite(1)));
        assert!(!induced_forest_check(&st, &s, DegreeBound::Finite(2)));
        assert!(induced_forest_check(&st, &s, DegreeBound::Finite(3)));
    }

    #[test]
    fn known_girths() {
        assert_eq!(girth(&fam(FamilySpec::Petersen)), Girth::Finite(5));
        assert_eq!(girth(&fam(FamilySpec::Path(9))), Girth::Infinite);
        assert_eq!(
            girth(&fam(FamilySpec::CompleteMultipartite(vec![3, 3]))),
            Girth::Finite(4)
        );
        assert_eq!(girth(&fam(FamilySpec::Complete(4))), Girth::Finite(3));
    }
}
