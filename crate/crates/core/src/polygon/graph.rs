use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::{FanoPolygon, MutationData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    /// Mutation applied to the normal form stored at `from`.
    pub mutation: MutationData,
}

/// Breadth-first mutation graph. Nodes are normal forms, in discovery order;
/// node 0 is the normal form of the start polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationGraph {
    pub nodes: Vec<FanoPolygon>,
    pub depths: Vec<usize>,
    pub edges: Vec<GraphEdge>,
    /// Set when a bound stopped the exploration before the component was exhausted.
    pub truncated: bool,
}

impl MutationGraph {
    pub fn index_of(&self, p: &FanoPolygon) -> Option<usize> {
        let nf = p.normal_form();
        self.nodes.iter().position(|n| *n == nf)
    }

    /// True iff every node is reachable from node 0 along (undirected) edges.
    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            if i < seen.len() && !seen[i] {
                seen[i] = true;
                stack.extend(adj[i].iter().copied());
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// One step of a mutation path between normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub source: FanoPolygon,
    pub mutation: MutationData,
    /// Normal form of `source.mutate(mutation)`.
    pub target: FanoPolygon,
}

/// Largest vertex coordinate admitted into a graph. Some mutation classes grow
/// doubly exponentially with depth; beyond this bound the search is truncated
/// instead of overflowing.
pub const COORDINATE_LIMIT: i64 = 1 << 24;

fn image_fits(p: &FanoPolygon, m: &MutationData) -> bool {
    let (v, w, k) = (m.v(), m.w(), i128::from(m.k()));
    let wmax = i128::from(w.max_abs());
    p.vertices().iter().all(|q| {
        let h = i128::from(q.x) * i128::from(v.x) + i128::from(q.y) * i128::from(v.y);
        i128::from(q.max_abs()) + h.abs() * k * wmax <= i128::from(COORDINATE_LIMIT)
    })
}

struct Explorer {
    nodes: Vec<FanoPolygon>,
    depths: Vec<usize>,
    parent: Vec<Option<(usize, MutationData)>>,
    index: BTreeMap<FanoPolygon, usize>,
}

impl Explorer {
    fn new(start: &FanoPolygon) -> Self {
        let nf = start.normal_form();
        let mut index = BTreeMap::new();
        index.insert(nf.clone(), 0);
        Self { nodes: vec![nf], depths: vec![0], parent: vec![None], index }
    }

    /// Neighbours of node `i`, and whether some were skipped for size.
    fn neighbours(&self, i: usize) -> (Vec<(MutationData, FanoPolygon)>, bool) {
        let p = &self.nodes[i];
        let mut skipped = false;
        let mut out = Vec::new();
        for m in p.admissible_mutations() {
            if !image_fits(p, &m) {
                skipped = true;
                continue;
            }
            out.push((m, p.mutate(&m).expect("admissible mutation").normal_form()));
        }
        (out, skipped)
    }
}

/// Explores the mutation graph of `start` breadth first, up to `max_nodes`
/// nodes and `max_depth` mutation steps.
pub fn mutation_graph(start: &FanoPolygon, max_nodes: usize, max_depth: usize) -> MutationGraph {
    let mut ex = Explorer::new(start);
    let mut edges = Vec::new();
    let mut edge_set = BTreeSet::new();
    let mut truncated = false;
    let mut head = 0;
    while head < ex.nodes.len() {
        let i = head;
        head += 1;
        let at_limit = ex.depths[i] >= max_depth;
        let (neighbours, skipped) = ex.neighbours(i);
        truncated |= skipped;
        for (m, q) in neighbours {
            let j = match ex.index.get(&q) {
                Some(&j) => j,
                None if at_limit || ex.nodes.len() >= max_nodes.max(1) => {
                    truncated = true;
                    continue;
                }
                None => {
                    let j = ex.nodes.len();
                    ex.index.insert(q.clone(), j);
                    ex.nodes.push(q);
                    ex.depths.push(ex.depths[i] + 1);
                    ex.parent.push(Some((i, m)));
                    j
                }
            };
            if j != i && edge_set.insert((i, j)) {
                edges.push(GraphEdge { from: i, to: j, mutation: m });
            }
        }
    }
    MutationGraph { nodes: ex.nodes, depths: ex.depths, edges, truncated }
}

/// Shortest mutation path from `start` to a polygon equivalent to `target`,
/// searching at most `max_nodes` nodes and `max_depth` steps.
pub fn find_mutation_path(
    start: &FanoPolygon,
    target: &FanoPolygon,
    max_nodes: usize,
    max_depth: usize,
) -> Option<Vec<PathStep>> {
    let goal = target.normal_form();
    let mut ex = Explorer::new(start);
    let mut found = (ex.nodes[0] == goal).then_some(0);
    let mut head = 0;
    while found.is_none() && head < ex.nodes.len() {
        let i = head;
        head += 1;
        if ex.depths[i] >= max_depth {
            continue;
        }
        for (m, q) in ex.neighbours(i).0 {
            if ex.index.contains_key(&q) || ex.nodes.len() >= max_nodes.max(1) {
                continue;
            }
            let j = ex.nodes.len();
            let hit = q == goal;
            ex.index.insert(q.clone(), j);
            ex.nodes.push(q);
            ex.depths.push(ex.depths[i] + 1);
            ex.parent.push(Some((i, m)));
            if hit {
                found = Some(j);
                break;
            }
        }
    }
    let mut j = found?;
    let mut steps = Vec::new();
    while let Some((i, m)) = ex.parent[j] {
        steps.push(PathStep { source: ex.nodes[i].clone(), mutation: m, target: ex.nodes[j].clone() });
        j = i;
    }
    steps.reverse();
    Some(steps)
}
