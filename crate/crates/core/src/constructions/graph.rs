use crate::error::{Error, Result};
use crate::ground::{GroundSet, Label};
use crate::matroid::{check_cap, Matroid};
use crate::set::{self, Set, DEFAULT_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: Label,
}

/// A multigraph on vertices `0..vertices`. Parallel edges are allowed;
/// a self-loop becomes a loop of the cycle matroid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: usize,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(vertices: usize) -> Self {
        Graph {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, label: impl Into<Label>) -> Result<()> {
        let label = label.into();
        if u >= self.vertices || v >= self.vertices {
            return Err(Error::BadParameters(format!(
                "edge {label} uses a vertex outside 0..{}",
                self.vertices
            )));
        }
        if self.edges.iter().any(|e| e.label == label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        self.edges.push(Edge { u, v, label });
        Ok(())
    }

    /// Adds edges labeled `1, 2, ...` in the given order.
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(vertices);
        for (k, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(u, v, k + 1)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of connected components (isolated vertices included).
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.vertices;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    pub fn describe(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| format!("{}-{}", e.u + 1, e.v + 1))
            .collect();
        format!("{}v[{}]", self.vertices, edges.join(","))
    }
}

/// Cycle matroid: circuits are the edge sets of cycles.
///
/// Each cycle is found exactly once, from its least edge `(u, v)`, as a
/// simple path from `v` back to `u` through higher-numbered edges.
pub fn graphic(g: &Graph) -> Result<Matroid> {
    check_cap(g.edges.len(), DEFAULT_CAP)?;
    let ground = GroundSet::new(g.edges.iter().map(|e| e.label.clone()))?;
    // edge position in `g.edges` -> ground index
    let index: Vec<usize> = g
        .edges
        .iter()
        .map(|e| ground.index_of(&e.label).expect("edge label"))
        .collect();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vertices];
    for (k, e) in g.edges.iter().enumerate() {
        adjacency[e.u].push((e.v, k));
        if e.u != e.v {
            adjacency[e.v].push((e.u, k));
        }
    }

    let mut circuits: Vec<Set> = Vec::new();
    for (k, e) in g.edges.iter().enumerate() {
        if e.u == e.v {
            circuits.push(set::bit(index[k]));
            continue;
        }
        let mut visited = vec![false; g.vertices];
        visited[e.v] = true;
        let mut path: Vec<usize> = vec![k];
        paths_back(&adjacency, e.v, e.u, k, &mut visited, &mut path, &mut |p| {
            circuits.push(p.iter().fold(0, |acc, &j| acc | set::bit(index[j])));
        });
    }
    Ok(Matroid::from_masks_unchecked(ground, circuits))
}

fn paths_back(
    adjacency: &[Vec<(usize, usize)>],
    at: usize,
    target: usize,
    min_edge: usize,
    visited: &mut [bool],
    path: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    for &(w, k) in &adjacency[at] {
        if k <= min_edge || w == at {
            continue;
        }
        if w == target {
            path.push(k);
            emit(path);
            path.pop();
        } else if !visited[w] {
            visited[w] = true;
            path.push(k);
            paths_back(adjacency, w, target, min_edge, visited, path, emit);
            path.pop();
            visited[w] = false;
        }
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameters(
            "cycle needs at least one vertex".into(),
        ));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Wheel with `n` rim vertices: rim edges `1..=n`, then spokes.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameters(
            "wheel needs at least 3 rim vertices".into(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (n, i)));
    Graph::from_edges(n + 1, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameters("complete graph needs a vertex".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::BadParameters("both sides need a vertex".into()));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::labels;

    #[test]
    fn small_graphs() {
        let tri = graphic(&cycle(3).unwrap()).unwrap();
        assert_eq!(tri, Matroid::circuit(GroundSet::numbered(3)).unwrap());
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            graphic(&tree).unwrap(),
            Matroid::free(GroundSet::numbered(3))
        );
        let kb = complete_bipartite(2, 3).unwrap();
        assert_eq!((kb.vertex_count(), kb.edges().len()), (5, 6));
        assert_eq!(graphic(&complete(4).unwrap()).unwrap().rank(), 3);
    }

    #[test]
    fn parallel_edges_and_self_loops() {
        let g = Graph::from_edges(2, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        let m = graphic(&g).unwrap();
        assert_eq!(m.circuits(), vec![labels([3]), labels([1, 2])]);
    }

    #[test]
    fn k4_has_seven_cycles() {
        let m = graphic(&complete(4).unwrap()).unwrap();
        assert_eq!(m.circuit_masks().len(), 7);
        m.validate().unwrap();
        let w = graphic(&wheel(4).unwrap()).unwrap();
        assert_eq!(w.rank(), 4);
        w.validate().unwrap();
    }

    #[test]
    fn bad_edges() {
        let mut g = Graph::new(2);
        assert!(g.add_edge(0, 2, 1).is_err());
        g.add_edge(0, 1, 1).unwrap();
        assert_eq!(g.add_edge(1, 0, 1), Err(Error::DuplicateLabel("1".into())));
    }
}
