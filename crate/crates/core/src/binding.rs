//! Binding graphs and τ-stability via a global minimum cut.

use std::collections::{BinaryHeap, HashMap};

use crate::geometry::Point;
use crate::model::{Assembly, ModelError, TileSet};

/// Occupied points with weighted edges between abutting, matching glues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BindingGraph {
    pub vertices: Vec<Point>,
    /// `(i, j, weight)` with `i < j`, indices into `vertices`.
    pub edges: Vec<(usize, usize, u32)>,
}

impl BindingGraph {
    pub fn weight_between(&self, p: Point, q: Point) -> Option<u32> {
        let i = self.vertices.binary_search(&p).ok()?;
        let j = self.vertices.binary_search(&q).ok()?;
        let (a, b) = (i.min(j), i.max(j));
        self.edges
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .map(|&(_, _, w)| w)
    }
}

pub fn binding_graph(assembly: &Assembly, tiles: &TileSet) -> Result<BindingGraph, ModelError> {
    if assembly.dim() != tiles.dim() {
        return Err(ModelError::DimensionMismatch);
    }
    let vertices: Vec<Point> = assembly.points().collect();
    let index: HashMap<Point, usize> = vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (i, &p) in vertices.iter().enumerate() {
        let t = assembly.get(p).expect("vertex is occupied");
        let tt = tiles.get(t).ok_or(ModelError::UnknownTileInAssembly(t))?;
        for &d in tiles.dim().directions() {
            let q = p.step(d);
            let Some(&j) = index.get(&q) else { continue };
            if j < i {
                continue;
            }
            let u = assembly.get(q).expect("neighbour is occupied");
            let ut = tiles.get(u).ok_or(ModelError::UnknownTileInAssembly(u))?;
            let g = tt.glue(d);
            if g.binds(ut.glue(d.opposite())) {
                edges.push((i, j, g.strength));
            }
        }
    }
    Ok(BindingGraph { vertices, edges })
}

/// Weight of a global minimum cut, or `None` for graphs with fewer than two
/// vertices (which have no cuts).
///
/// Stoer–Wagner: repeated maximum-adjacency orderings, merging the last two
/// vertices of each phase.
pub fn min_cut(graph: &BindingGraph) -> Option<u64> {
    let n = graph.vertices.len();
    if n < 2 {
        return None;
    }
    let mut adj: Vec<HashMap<usize, u64>> = vec![HashMap::new(); n];
    for &(i, j, w) in &graph.edges {
        *adj[i].entry(j).or_insert(0) += w as u64;
        *adj[j].entry(i).or_insert(0) += w as u64;
    }
    if !connected(&adj) {
        return Some(0);
    }
    let mut alive: Vec<bool> = vec![true; n];
    let mut best = u64::MAX;
    for phase in 0..n - 1 {
        let start = (0..n)
            .find(|&v| alive[v])
            .expect("at least two live vertices");
        let mut key: HashMap<usize, u64> = HashMap::new();
        let mut added = vec![false; n];
        let mut heap = BinaryHeap::new();
        heap.push((0u64, std::cmp::Reverse(start)));
        key.insert(start, 0);
        let mut prev = None;
        let mut last = start;
        let mut last_key = 0;
        let live = n - phase;
        let mut count = 0;
        while count < live {
            let Some((k, std::cmp::Reverse(v))) = heap.pop() else {
                break;
            };
            if added[v] || key.get(&v) != Some(&k) {
                continue;
            }
            added[v] = true;
            count += 1;
            prev = Some(last);
            last = v;
            last_key = k;
            for (&u, &w) in &adj[v] {
                if !added[u] {
                    let e = key.entry(u).or_insert(0);
                    *e += w;
                    heap.push((*e, std::cmp::Reverse(u)));
                }
            }
        }
        best = best.min(last_key);
        if best == 0 {
            return Some(0);
        }
        // Merge `last` into `prev`.
        let s = prev.expect("phase added at least two vertices");
        let t = last;
        let t_edges: Vec<(usize, u64)> = adj[t].drain().collect();
        for (u, w) in t_edges {
            adj[u].remove(&t);
            if u != s {
                *adj[s].entry(u).or_insert(0) += w;
                *adj[u].entry(s).or_insert(0) += w;
            }
        }
        alive[t] = false;
    }
    Some(best)
}

fn connected(adj: &[HashMap<usize, u64>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in adj[v].keys() {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == adj.len()
}

/// True iff every cut of the binding graph has weight at least `tau`.
/// Singletons are always stable.
pub fn is_tau_stable(assembly: &Assembly, tiles: &TileSet, tau: i64) -> Result<bool, ModelError> {
    let g = binding_graph(assembly, tiles)?;
    Ok(match min_cut(&g) {
        None => true,
        Some(c) => c as i64 >= tau,
    })
}
