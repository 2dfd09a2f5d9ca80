use super::{Graph, VertexSet};

/// Blocks (maximal 2-connected subgraphs, bridges and isolated vertices),
/// cut vertices and the saturation counts used for cactus graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by least vertex, then lexicographically.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub bridges: Vec<(usize, usize)>,
    /// Blocks all of whose vertices are cut vertices.
    pub saturated_blocks: Vec<usize>,
    /// Vertices lying in two or more saturated blocks.
    pub saturated_vertices: VertexSet,
    /// Every block is a cycle, a single edge or an isolated vertex.
    pub is_cactus: bool,
}

impl BlockDecomposition {
    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn sb(&self) -> usize {
        self.saturated_blocks.len()
    }

    pub fn sv(&self) -> usize {
        self.saturated_vertices.len()
    }

    /// No bridge and no isolated-vertex blocks.
    pub fn all_cycle_blocks(&self) -> bool {
        self.blocks.iter().all(|b| b.len() >= 3)
    }
}

/// Hopcroft–Tarjan biconnected components with an explicit edge stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if neighbors[root].is_empty() {
            disc[root] = timer;
            timer += 1;
            blocks.push(VertexSet::singleton(root));
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (u, parent, next) = *top;
            if next < neighbors[u].len() {
                let w = neighbors[u][next];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = VertexSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }

    blocks.sort_by(|a, b| a.first().cmp(&b.first()).then_with(|| a.cmp(b)));

    let mut membership = vec![0usize; n];
    for b in &blocks {
        for v in b.iter() {
            membership[v] += 1;
        }
    }
    let cut_vertices: VertexSet = (0..n).filter(|&v| membership[v] >= 2).collect();
    let bridges = blocks
        .iter()
        .filter(|b| b.len() == 2)
        .map(|b| (b.first().unwrap(), b.last().unwrap()))
        .collect();
    let saturated_blocks: Vec<usize> = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.is_subset(&cut_vertices))
        .map(|(i, _)| i)
        .collect();
    let mut sat_count = vec![0usize; n];
    for &i in &saturated_blocks {
        for v in blocks[i].iter() {
            sat_count[v] += 1;
        }
    }
    let saturated_vertices = (0..n).filter(|&v| sat_count[v] >= 2).collect();
    let is_cactus = blocks.iter().all(|b| {
        let k = b.len();
        k <= 2 || g.induced_edge_count(b) == k
    });

    BlockDecomposition {
        blocks,
        cut_vertices,
        bridges,
        saturated_blocks,
        saturated_vertices,
        is_cactus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{components, generate, FamilySpec};

    fn bowtie() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn bowtie_blocks() {
        let bd = block_decomposition(&bowtie());
        assert_eq!(bd.b(), 2);
        assert_eq!(bd.cut_vertices, VertexSet::singleton(2));
        assert_eq!((bd.sb(), bd.sv()), (0, 0));
        assert!(bd.is_cactus && bd.bridges.is_empty());
    }

    #[test]
    fn triangles_joined_by_bridge() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.b(), 3);
        assert_eq!(bd.bridges, vec![(2, 3)]);
        // The bridge block {2,3} has only cut vertices.
        assert_eq!(bd.sb(), 1);
        assert!(bd.is_cactus);
    }

    #[test]
    fn complete_graph_is_one_block() {
        let bd = block_decomposition(&generate(&FamilySpec::Complete(4)).unwrap());
        assert_eq!((bd.b(), bd.sb()), (1, 0));
        assert!(!bd.is_cactus);
    }

    #[test]
    fn saturated_middle_triangle() {
        // Triangle 0-1-2 with a pendant triangle on each corner.
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        for (c, a) in [(0, 3), (1, 5), (2, 7)] {
            edges.extend([(c, a), (a, a + 1), (c, a + 1)]);
        }
        let g = Graph::new(9, &edges).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.b(), 4);
        assert_eq!(bd.sb(), 1);
        assert_eq!(bd.sv(), 0);
        assert!(bd.is_cactus && bd.all_cycle_blocks());
    }

    #[test]
    fn block_sizes_account_for_vertices() {
        for spec in [
            FamilySpec::Petersen,
            FamilySpec::DoubleStar(3, 2),
            FamilySpec::Wheel(5),
            FamilySpec::Path(1),
        ] {
            let g = generate(&spec).unwrap();
            let bd = block_decomposition(&g);
            let total: usize = bd.blocks.iter().map(|b| b.len() - 1).sum();
            assert_eq!(total, g.n() - components(&g).len(), "{spec:?}");
        }
    }
}
