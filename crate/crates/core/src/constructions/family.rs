//! Deterministic corpora of matroids for sweeps.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;

use super::graph::{complete, complete_bipartite, graphic, wheel, Graph};
use super::uniform;

/// Largest `max_edges` accepted by [`family_graphs`].
pub const MAX_FAMILY_EDGES: usize = 9;

type Adjacency = Vec<Vec<u8>>;

/// Vertex colors from iterated degree refinement. Colors are ranks of
/// sorted signatures, so they do not depend on the vertex numbering.
fn refine(adj: &Adjacency) -> Vec<usize> {
    let n = adj.len();
    let degree: Vec<usize> = adj
        .iter()
        .map(|row| row.iter().map(|&m| m as usize).sum())
        .collect();
    let mut colors = rank_values(&degree);
    loop {
        let signatures: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u8)> = (0..n)
                    .filter(|&w| adj[v][w] > 0)
                    .map(|w| (colors[w], adj[v][w]))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank_values(&signatures);
        let before = colors.iter().max().map_or(0, |c| c + 1);
        let after = next.iter().max().map_or(0, |c| c + 1);
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn rank_values<T: Ord + Clone>(values: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort();
    sorted.dedup();
    values
        .iter()
        .map(|v| sorted.binary_search(v).expect("present"))
        .collect()
}

fn code(adj: &Adjacency, perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(adj[perm[i]][perm[j]]);
        }
    }
    out
}

/// Canonical form: the smallest upper-triangle code over all vertex
/// orderings that list color classes in color order.
fn canonical(adj: &Adjacency) -> (Vec<u8>, Vec<usize>) {
    let colors = refine(adj);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut perm = Vec::with_capacity(adj.len());
    search(
        adj,
        &classes,
        0,
        &mut vec![false; adj.len()],
        &mut perm,
        &mut best,
    );
    best.expect("at least one ordering")
}

fn search(
    adj: &Adjacency,
    classes: &[Vec<usize>],
    class: usize,
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    best: &mut Option<(Vec<u8>, Vec<usize>)>,
) {
    if class == classes.len() {
        let c = code(adj, perm);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            *best = Some((c, perm.clone()));
        }
        return;
    }
    let members = &classes[class];
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        search(adj, classes, class + 1, used, perm, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        perm.push(v);
        search(adj, classes, class, used, perm, best);
        perm.pop();
        used[v] = false;
    }
}

#[allow(clippy::needless_range_loop)]
fn to_graph(adj: &Adjacency) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for _ in 0..adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// All connected loopless multigraphs with `1..=max_edges` edges, one per
/// isomorphism class, ordered by edge count, vertex count, then canonical
/// code. Built by adding one edge at a time (between existing vertices or
/// to a new pendant vertex), which reaches every connected graph.
pub fn family_graphs(max_edges: usize) -> Result<Vec<Graph>> {
    if max_edges > MAX_FAMILY_EDGES {
        return Err(Error::BadParameters(format!(
            "max_edges {max_edges} exceeds {MAX_FAMILY_EDGES}"
        )));
    }
    let mut out = Vec::new();
    let mut level: BTreeMap<(usize, Vec<u8>), Adjacency> = BTreeMap::new();
    level.insert((1, Vec::new()), vec![vec![0]]);
    for _ in 0..max_edges {
        let mut next: BTreeMap<(usize, Vec<u8>), Adjacency> = BTreeMap::new();
        for adj in level.values() {
            let n = adj.len();
            let mut candidates: Vec<Adjacency> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let mut a = adj.clone();
                    a[u][v] += 1;
                    a[v][u] += 1;
                    candidates.push(a);
                }
                let mut a: Adjacency = adj
                    .iter()
                    .map(|row| {
                        let mut r = row.clone();
                        r.push(0);
                        r
                    })
                    .collect();
                a.push(vec![0; n + 1]);
                a[u][n] = 1;
                a[n][u] = 1;
                candidates.push(a);
            }
            for a in candidates {
                let (c, perm) = canonical(&a);
                let key = (a.len(), c);
                next.entry(key).or_insert_with(|| {
                    perm.iter()
                        .map(|&i| perm.iter().map(|&j| a[i][j]).collect())
                        .collect()
                });
            }
        }
        out.extend(next.values().map(to_graph));
        level = next;
    }
    Ok(out)
}

/// Named parametric corpora.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Every connected loopless multigraph up to the edge bound.
    Graphic { max_edges: usize },
    /// `U_{r,n}` for `1 <= r <= n <= max_n`.
    Uniform { max_n: usize },
    /// Wheels with `3..=max_n` rim vertices.
    Wheel { max_n: usize },
    /// `K_n` for `2 <= n <= max_n`.
    Complete { max_n: usize },
    /// `K_{a,b}` for `1 <= a <= b`, `a + b <= max_n`.
    CompleteBipartite { max_n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Graphic { .. } => "graphic",
            Family::Uniform { .. } => "uniform",
            Family::Wheel { .. } => "wheel",
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete-bipartite",
        }
    }

    /// The members with stable identifiers, in a fixed order.
    pub fn members(&self) -> Result<Vec<(String, Matroid)>> {
        let too_big = |what: &str, n: usize, cap: usize| {
            Err(Error::BadParameters(format!("{what} {n} exceeds {cap}")))
        };
        let mut out = Vec::new();
        match *self {
            Family::Graphic { max_edges } => {
                for g in family_graphs(max_edges)? {
                    out.push((format!("graph:{}", g.describe()), graphic(&g)?));
                }
            }
            Family::Uniform { max_n } => {
                if max_n > 12 {
                    return too_big("max_n", max_n, 12);
                }
                for n in 1..=max_n {
                    for r in 1..=n {
                        out.push((format!("U({r},{n})"), uniform(r, n)?));
                    }
                }
            }
            Family::Wheel { max_n } => {
                if max_n > 10 {
                    return too_big("max_n", max_n, 10);
                }
                for n in 3..=max_n {
                    out.push((format!("W{n}"), graphic(&wheel(n)?)?));
                }
            }
            Family::Complete { max_n } => {
                if max_n > 6 {
                    return too_big("max_n", max_n, 6);
                }
                for n in 2..=max_n {
                    out.push((format!("K{n}"), graphic(&complete(n)?)?));
                }
            }
            Family::CompleteBipartite { max_n } => {
                if max_n > 9 {
                    return too_big("max_n", max_n, 9);
                }
                for a in 1..=max_n / 2 {
                    for b in a..=max_n - a {
                        out.push((format!("K{a},{b}"), graphic(&complete_bipartite(a, b)?)?));
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_present(graphs: &[Graph]) -> bool {
        graphs
            .iter()
            .any(|g| g.vertex_count() == 3 && g.edges().len() == 3)
    }

    #[test]
    fn small_counts() {
        // connected loopless multigraphs by edge count: 1, 2, 5, 12
        let gs = family_graphs(4).unwrap();
        let by_edges: Vec<usize> = (1..=4)
            .map(|k| gs.iter().filter(|g| g.edges().len() == k).count())
            .collect();
        assert_eq!(by_edges, vec![1, 2, 5, 12]);
        assert!(triangle_present(&gs));
        assert!(gs.iter().all(|g| g.component_count() == 1));
    }

    #[test]
    fn enumeration_is_stable() {
        assert_eq!(family_graphs(5).unwrap(), family_graphs(5).unwrap());
        assert!(family_graphs(MAX_FAMILY_EDGES + 1).is_err());
    }

    #[test]
    fn canonical_form_ignores_numbering() {
        let a: Adjacency = vec![vec![0, 1, 0], vec![1, 0, 2], vec![0, 2, 0]];
        let b: Adjacency = vec![vec![0, 2, 1], vec![2, 0, 0], vec![1, 0, 0]];
        assert_eq!(canonical(&a).0, canonical(&b).0);
    }

    #[test]
    fn named_families() {
        assert_eq!(Family::Uniform { max_n: 3 }.members().unwrap().len(), 6);
        let kb = Family::CompleteBipartite { max_n: 5 }.members().unwrap();
        assert!(kb.iter().any(|(id, m)| id == "K2,3" && m.rank() == 4));
        assert!(Family::Complete { max_n: 9 }.members().is_err());
    }
}
