use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{dist, PointConfig, TolerancePolicy};
use crate::error::{invalid, Error, Result};

/// Which length a distance graph joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceKind {
    UnitDistance,
    Diameter,
}

/// Graph on point indices whose edges are pairs at `target_length`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceGraph {
    pub n: usize,
    /// Sorted pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
    pub target_length: f64,
    pub kind: DistanceKind,
}

impl DistanceGraph {
    /// Graph with the given edges (normalised, deduplicated, self-loops
    /// dropped). Mostly useful for tests and hand-built fixtures.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut e: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        e.sort_unstable();
        e.dedup();
        assert!(e.iter().all(|&(_, b)| b < n), "edge index out of range");
        DistanceGraph {
            n,
            edges: e,
            target_length: 1.0,
            kind: DistanceKind::UnitDistance,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

/// Largest pairwise distance.
pub fn diameter_of(config: &PointConfig) -> Result<f64> {
    if config.len() < 2 {
        return Err(invalid("diameter needs at least 2 points"));
    }
    config.validate()?;
    let mut best = 0.0f64;
    for (i, p) in config.points.iter().enumerate() {
        for q in &config.points[i + 1..] {
            best = best.max(dist(p, q));
        }
    }
    Ok(best)
}

/// All-pairs unit-distance or diameter graph.
pub fn build_distance_graph(
    config: &PointConfig,
    kind: DistanceKind,
    tol: &TolerancePolicy,
) -> Result<DistanceGraph> {
    if config.is_empty() {
        return Err(invalid("empty configuration"));
    }
    config.validate()?;
    let target_length = match kind {
        DistanceKind::UnitDistance => 1.0,
        DistanceKind::Diameter => diameter_of(config)?,
    };
    let mut edges = Vec::new();
    for (i, p) in config.points.iter().enumerate() {
        for (j, q) in config.points.iter().enumerate().skip(i + 1) {
            if tol.matches(dist(p, q), target_length) {
                edges.push((i, j));
            }
        }
    }
    Ok(DistanceGraph {
        n: config.len(),
        edges,
        target_length,
        kind,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteWitness {
    pub bipartite: bool,
    /// Vertices of an odd cycle in order, present iff not bipartite.
    pub odd_cycle: Option<Vec<usize>>,
}

/// Two-colouring by BFS; on failure returns an odd cycle through the
/// offending edge.
pub fn is_bipartite_with_witness(g: &DistanceGraph) -> BipartiteWitness {
    let adj = g.adjacency();
    let mut color: Vec<Option<bool>> = vec![None; g.n];
    let mut parent = vec![usize::MAX; g.n];
    let mut depth = vec![0usize; g.n];
    for root in 0..g.n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        let cycle = tree_cycle(u, v, &parent, &depth);
                        return BipartiteWitness {
                            bipartite: false,
                            odd_cycle: Some(cycle),
                        };
                    }
                    _ => {}
                }
            }
        }
    }
    BipartiteWitness {
        bipartite: true,
        odd_cycle: None,
    }
}

fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Every simple cycle (length >= 3) exactly once, each starting at its
/// smallest vertex. Fails with `ResourceLimit` past `max_cycles`.
pub fn simple_cycles(g: &DistanceGraph, max_cycles: usize) -> Result<Vec<Vec<usize>>> {
    let adj = g.adjacency();
    let mut cycles = Vec::new();
    let mut on_path = vec![false; g.n];
    for start in 0..g.n {
        let mut path = vec![start];
        on_path[start] = true;
        cycle_dfs(
            start,
            start,
            &adj,
            &mut path,
            &mut on_path,
            &mut cycles,
            max_cycles,
        )?;
        on_path[start] = false;
    }
    Ok(cycles)
}

fn cycle_dfs(
    start: usize,
    u: usize,
    adj: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    cycles: &mut Vec<Vec<usize>>,
    max_cycles: usize,
) -> Result<()> {
    for &v in &adj[u] {
        if v == start && path.len() >= 3 && path[1] < path[path.len() - 1] {
            if cycles.len() >= max_cycles {
                return Err(Error::ResourceLimit(format!(
                    "more than {max_cycles} cycles"
                )));
            }
            cycles.push(path.clone());
        } else if v > start && !on_path[v] {
            on_path[v] = true;
            path.push(v);
            cycle_dfs(start, v, adj, path, on_path, cycles, max_cycles)?;
            path.pop();
            on_path[v] = false;
        }
    }
    Ok(())
}

/// Largest `classes * class_size` accepted by
/// [`contains_complete_multipartite`].
pub const MULTIPARTITE_VERTEX_LIMIT: usize = 64;

#[derive(Clone, PartialEq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }
    /// Clears every index `<= floor`.
    fn clear_through(&mut self, floor: usize) {
        let (w, b) = (floor / 64, floor % 64);
        self.0[..w].iter_mut().for_each(|x| *x = 0);
        if let Some(x) = self.0.get_mut(w) {
            *x &= if b == 63 { 0 } else { !0u64 << (b + 1) };
        }
    }
    fn count_and(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &a)| {
            let mut word = a;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }
}

struct MultipartiteSearch {
    classes: usize,
    class_size: usize,
    adj: Vec<Bits>,
    members: Vec<Vec<usize>>,
}

impl MultipartiteSearch {
    /// Lower bound (exclusive) on the next member of class `k`: members
    /// increase within a class and classes are ordered by first member.
    fn floor(&self, k: usize) -> Option<usize> {
        match self.members[k].last() {
            Some(&v) => Some(v),
            None => self.members[..k]
                .iter()
                .rev()
                .find_map(|m| m.first().copied()),
        }
    }

    /// Drops candidates of a class that lack enough neighbours among some
    /// other class's candidates; false if a class runs short.
    fn propagate(&self, cand: &mut [Bits]) -> bool {
        let need: Vec<usize> = (0..self.classes)
            .map(|k| self.class_size - self.members[k].len())
            .collect();
        loop {
            let mut changed = false;
            for k in (0..self.classes).filter(|&k| need[k] > 0) {
                let drop: Vec<usize> = cand[k]
                    .iter()
                    .filter(|&x| {
                        (0..self.classes).any(|l| {
                            l != k && need[l] > 0 && self.adj[x].count_and(&cand[l]) < need[l]
                        })
                    })
                    .collect();
                for x in drop {
                    cand[k].clear(x);
                    changed = true;
                }
                if cand[k].count() < need[k] {
                    return false;
                }
            }
            if !changed {
                let mut union = Bits::new(self.adj.len());
                for k in (0..self.classes).filter(|&k| need[k] > 0) {
                    for (a, b) in union.0.iter_mut().zip(&cand[k].0) {
                        *a |= b;
                    }
                }
                return union.count() >= need.iter().sum::<usize>();
            }
        }
    }

    /// Places one more vertex per call. `masks[k]` holds the common neighbours of every member of the other
    /// classes, minus vertices already used.
    fn extend(&mut self, pos: usize, masks: &[Bits]) -> bool {
        if pos == self.classes * self.class_size {
            return true;
        }
        let mut cand = masks.to_vec();
        for (k, m) in cand.iter_mut().enumerate() {
            if let Some(f) = self.floor(k) {
                m.clear_through(f);
            }
        }
        if !self.propagate(&mut cand) {
            return false;
        }
        // fewest candidates first, among started classes and the first
        // unstarted one (whose floor needs every earlier class started)
        let first_empty = self.members.iter().position(Vec::is_empty);
        let c = (0..self.classes)
            .filter(|&k| {
                self.members[k].len() < self.class_size
                    && (!self.members[k].is_empty() || Some(k) == first_empty)
            })
            .min_by_key(|&k| (cand[k].count(), k))
            .expect("an unfilled class remains");
        let choices: Vec<usize> = cand[c].iter().collect();
        for v in choices {
            let mut next = cand.clone();
            for (k, m) in next.iter_mut().enumerate() {
                m.clear(v);
                if k != c {
                    m.and_assign(&self.adj[v]);
                }
            }
            self.members[c].push(v);
            let found = self.extend(pos + 1, &next);
            self.members[c].pop();
            if found {
                return true;
            }
            // v is excluded from later siblings of this slot
            cand[c].clear(v);
        }
        false
    }
}

/// Whether `g` contains the complete `classes`-partite graph with
/// `class_size` vertices per class as a (not necessarily induced) subgraph.
pub fn contains_complete_multipartite(
    g: &DistanceGraph,
    classes: usize,
    class_size: usize,
) -> Result<bool> {
    if classes == 0 || class_size == 0 {
        return Err(invalid("classes and class_size must be positive"));
    }
    let total = classes * class_size;
    if total > MULTIPARTITE_VERTEX_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "K_{classes}({class_size}) has {total} vertices, limit is {MULTIPARTITE_VERTEX_LIMIT}"
        )));
    }
    if total > g.n {
        return Ok(false);
    }
    // Degree pruning down to the ((classes - 1) * class_size)-core.
    let need_degree = (classes - 1) * class_size;
    let adj_list = g.adjacency();
    let mut alive = vec![true; g.n];
    let mut degree: Vec<usize> = adj_list.iter().map(Vec::len).collect();
    let mut stack: Vec<usize> = (0..g.n).filter(|&v| degree[v] < need_degree).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for &w in &adj_list[v] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] < need_degree {
                    alive[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    let mut live = Bits::new(g.n);
    let mut adj = vec![Bits::new(g.n); g.n];
    for v in (0..g.n).filter(|&v| alive[v]) {
        live.set(v);
        for &w in adj_list[v].iter().filter(|&&w| alive[w]) {
            adj[v].set(w);
        }
    }
    if live.count() < total {
        return Ok(false);
    }
    let mut search = MultipartiteSearch {
        classes,
        class_size,
        adj,
        members: vec![Vec::new(); classes],
    };
    let masks = vec![live; classes];
    Ok(search.extend(0, &masks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pentagon() -> PointConfig {
        let r = 1.0 / (2.0 * (PI / 10.0).cos());
        let pts = (0..5)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / 5.0;
                vec![r * t.cos(), r * t.sin()]
            })
            .collect();
        PointConfig::new(2, pts).unwrap()
    }

    fn square() -> PointConfig {
        PointConfig::new(
            2,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 1.0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn unit_square_counts() {
        let tol = TolerancePolicy::default();
        let g = build_distance_graph(&square(), DistanceKind::UnitDistance, &tol).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!((diameter_of(&square()).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn pentagon_diameters_form_pentagram() {
        let tol = TolerancePolicy::default();
        let g = build_distance_graph(&pentagon(), DistanceKind::Diameter, &tol).unwrap();
        // brute force: the diagonals (k, k+2) are the longest chords
        let mut expected: Vec<(usize, usize)> = (0..5)
            .map(|k| (k.min((k + 2) % 5), k.max((k + 2) % 5)))
            .collect();
        expected.sort_unstable();
        assert_eq!(g.edges, expected);
        assert!((g.target_length - 1.0).abs() < 1e-12);
        let w = is_bipartite_with_witness(&g);
        assert!(!w.bipartite);
        let cycle = w.odd_cycle.unwrap();
        assert_eq!(cycle.len(), 5);
        for k in 0..cycle.len() {
            assert!(g.has_edge(cycle[k], cycle[(k + 1) % cycle.len()]));
        }
    }

    #[test]
    fn errors_on_bad_input() {
        let tol = TolerancePolicy::default();
        let empty = PointConfig::empty(2);
        assert!(build_distance_graph(&empty, DistanceKind::UnitDistance, &tol).is_err());
        let one = PointConfig::new(2, vec![vec![0.0, 0.0]]).unwrap();
        assert!(build_distance_graph(&one, DistanceKind::Diameter, &tol).is_err());
        let nan = PointConfig {
            dim: 2,
            points: vec![vec![0.0, f64::NAN], vec![1.0, 0.0]],
            meta: Default::default(),
        };
        assert!(matches!(
            build_distance_graph(&nan, DistanceKind::UnitDistance, &tol),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn path_is_bipartite() {
        let g = DistanceGraph::from_edges(3, [(0, 1), (1, 2)]);
        let w = is_bipartite_with_witness(&g);
        assert!(w.bipartite && w.odd_cycle.is_none());
    }

    #[test]
    fn cycle_enumeration_counts() {
        // K4 has 4 triangles and 3 four-cycles
        let g = DistanceGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let cycles = simple_cycles(&g, 100).unwrap();
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
        assert!(simple_cycles(&g, 3).is_err());
    }

    #[test]
    fn multipartite_small_cases() {
        let k33 = DistanceGraph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))));
        assert!(contains_complete_multipartite(&k33, 2, 3).unwrap());
        assert!(!contains_complete_multipartite(&k33, 3, 2).unwrap());
        assert!(!contains_complete_multipartite(&k33, 2, 4).unwrap());
        let empty = DistanceGraph::from_edges(5, []);
        assert!(!contains_complete_multipartite(&empty, 2, 1).unwrap());
        assert!(contains_complete_multipartite(&empty, 1, 3).unwrap());
        assert!(matches!(
            contains_complete_multipartite(&k33, 9, 8),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn multipartite_finds_hidden_copy() {
        // K_3(2) on vertices {1,4},{2,7},{5,9} inside a 10-vertex graph with noise
        let classes = [[1, 4], [2, 7], [5, 9]];
        let mut edges = vec![(0, 3), (3, 6), (6, 8)];
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                for &x in a {
                    for &y in b {
                        edges.push((x, y));
                    }
                }
            }
        }
        let g = DistanceGraph::from_edges(10, edges.clone());
        assert!(contains_complete_multipartite(&g, 3, 2).unwrap());
        edges.retain(|&e| e != (4, 9));
        let g = DistanceGraph::from_edges(10, edges);
        assert!(!contains_complete_multipartite(&g, 3, 2).unwrap());
    }
}
