//! Undirected simple graphs and connectedness through the covering they induce.
//!
//! Every edge `uv` contributes the block `{u, v}` to the family `F(G)`. When the
//! graph has no isolated vertex that family is a covering `C(G)`, and the graph
//! is connected exactly when no nonempty proper vertex set is a fixpoint of the
//! upper approximation under `C(G)`.

use std::collections::{HashSet, VecDeque};

use crate::covering::{validate_covering, Covering, CoveringValidation, SetFamily};
use crate::error::Error;
use crate::set::{Partition, Subset, Universe};

/// An undirected graph without loops or multiple edges.
///
/// Edges keep their input order (it fixes incidence-matrix columns) and are
/// stored with the smaller endpoint index first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Universe,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: Universe, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Error> {
        let n = vertices.len();
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::Loop(vertices.label(u).to_string()));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(
                    vertices.label(key.0).to_string(),
                    vertices.label(key.1).to_string(),
                ));
            }
            kept.push(key);
        }
        Ok(Self { vertices, edges: kept })
    }

    /// Builds a graph from vertex labels and labeled endpoint pairs.
    pub fn from_labels<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self, Error> {
        let universe = Universe::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        let lookup = |s: &S| {
            universe
                .index_of(s.as_ref())
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
        };
        let pairs = edges
            .iter()
            .map(|(u, v)| Ok((lookup(u)?, lookup(v)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        Self::new(universe, pairs)
    }

    pub fn vertices(&self) -> &Universe {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Vertices meeting no edge, in index order.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// `F(G)`: one two-element block per edge, in edge order.
    pub fn induce_family(&self) -> SetFamily {
        let n = self.vertex_count();
        let blocks = self.edges.iter().map(|&(u, v)| Subset::from_indices(n, [u, v]));
        SetFamily::new(self.vertices.clone(), blocks).expect("edge blocks lie in the vertex universe")
    }

    /// `C(G)`, available only when no vertex is isolated.
    pub fn induce_covering(&self) -> Result<Covering, Error> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyVertexSet);
        }
        match validate_covering(self.induce_family()) {
            CoveringValidation::Ok(c) => Ok(c),
            CoveringValidation::Violations(_) => Err(Error::IsolatedVertices(self.isolated_labels())),
        }
    }

    fn isolated_labels(&self) -> Vec<String> {
        self.isolated_vertices()
            .into_iter()
            .map(|i| self.vertices.label(i).to_string())
            .collect()
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut entries = vec![vec![0u8; self.edge_count()]; self.vertex_count()];
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            entries[u][j] = 1;
            entries[v][j] = 1;
        }
        IncidenceMatrix {
            rows: self.vertex_count(),
            cols: self.edge_count(),
            entries,
        }
    }

    /// `G_K`: vertices `k` (in universe order), edges with both endpoints in `k`.
    pub fn vertex_induced_subgraph(&self, k: &Subset) -> Result<Graph, Error> {
        self.vertices.check(k)?;
        if k.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let kept: Vec<usize> = k.iter().collect();
        let mut remap = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let universe = Universe::new(kept.iter().map(|&i| self.vertices.label(i).to_string()))?;
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| k.contains(u) && k.contains(v))
            .map(|&(u, v)| (remap[u], remap[v]));
        Graph::new(universe, edges)
    }

    /// A shortest chain of `C(G)` blocks linking `u` to `v`, or `None` when the
    /// two vertices lie in different components.
    ///
    /// The search runs breadth-first over the block-intersection graph starting
    /// from the blocks that contain `v`, visiting blocks in edge order, and stops
    /// at the first block containing `u`. The chain is returned starting at `u`.
    pub fn connection_witness(&self, u: usize, v: usize) -> Result<Option<Vec<Subset>>, Error> {
        let n = self.vertex_count();
        if u >= n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::SameVertex);
        }
        let covering = self.induce_covering()?;
        let blocks = covering.blocks();

        let mut parent: Vec<Option<usize>> = vec![None; blocks.len()];
        let mut visited = vec![false; blocks.len()];
        let mut queue = VecDeque::new();
        for (i, block) in blocks.iter().enumerate() {
            if block.contains(v) {
                visited[i] = true;
                queue.push_back(i);
            }
        }
        while let Some(i) = queue.pop_front() {
            if blocks[i].contains(u) {
                let mut chain = vec![blocks[i].clone()];
                let mut at = i;
                while let Some(p) = parent[at] {
                    chain.push(blocks[p].clone());
                    at = p;
                }
                assert!(
                    verify_chain(&covering, u, v, &chain),
                    "connection witness failed verification"
                );
                return Ok(Some(chain));
            }
            for (j, block) in blocks.iter().enumerate() {
                if !visited[j] && block.intersects(&blocks[i]) {
                    visited[j] = true;
                    parent[j] = Some(i);
                    queue.push_back(j);
                }
            }
        }
        Ok(None)
    }

    fn check_applicable(&self) -> Result<Covering, Error> {
        if self.vertex_count() < 2 {
            return Err(Error::Inapplicable(format!(
                "graph has {} vertex; at least 2 are required",
                self.vertex_count()
            )));
        }
        self.induce_covering().map_err(|e| match e {
            Error::IsolatedVertices(v) => Error::Inapplicable(format!("isolated vertices: {}", v.join(", "))),
            other => other,
        })
    }

    /// A nonempty proper outer definable vertex set, if one exists: the upper
    /// closure of the first vertex. `None` means the graph is connected.
    pub fn outer_definable_witness(&self) -> Result<Option<Subset>, Error> {
        let covering = self.check_applicable()?;
        let closure = covering.closure_upper(&self.vertices.singleton(0))?;
        Ok(if closure.is_full() { None } else { Some(closure) })
    }

    /// Connectedness via the upper operator on `C(G)`.
    ///
    /// Outer definable sets are unions of singleton closures, so it suffices to
    /// check that one vertex closes up to the whole vertex set.
    pub fn is_connected_covering(&self) -> Result<bool, Error> {
        Ok(self.outer_definable_witness()?.is_none())
    }

    /// Connectedness via the lower operator on `C(G)`: no nonempty proper
    /// vertex set is a lower fixpoint.
    ///
    /// The greatest lower fixpoint inside `V − {v}` is empty exactly when no
    /// nonempty proper fixpoint avoids `v`; since complements of lower
    /// fixpoints are again lower fixpoints, that settles every proper set.
    pub fn lower_characterization_connected(&self) -> Result<bool, Error> {
        let covering = self.check_applicable()?;
        let mut rest = self.vertices.full_set();
        rest.remove(0);
        Ok(covering.interior_lower(&rest)?.is_empty())
    }

    /// Classes of the connection relation by breadth-first traversal, ordered
    /// by smallest vertex index.
    pub fn connected_components_bfs(&self) -> Partition {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut block = Subset::empty(n);
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(x) = queue.pop_front() {
                block.insert(x);
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            blocks.push(block);
        }
        Partition::new(self.vertices.clone(), blocks).expect("traversal classes partition the vertices")
    }

    /// Index pairs of vertices as labels, e.g. for printing.
    pub fn edge_labels(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(u, v)| (self.vertices.label(u), self.vertices.label(v)))
    }
}

/// Checks a chain against `C(G)`: `u` in the first block, `v` in the last,
/// every block in the covering, and consecutive blocks intersecting.
pub fn verify_chain(covering: &Covering, u: usize, v: usize, chain: &[Subset]) -> bool {
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return false;
    };
    first.contains(u)
        && last.contains(v)
        && chain.iter().all(|k| covering.blocks().contains(k))
        && chain.windows(2).all(|w| w[0].intersects(&w[1]))
}

/// A vertex-by-edge 0/1 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    /// `rows` is the number of vertices; each inner vector is one vertex row.
    pub fn new(rows: usize, cols: usize, entries: Vec<Vec<u8>>) -> Result<Self, Error> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch);
        }
        for (i, row) in entries.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x > 1) {
                return Err(Error::BadEntry { row: i, col: j });
            }
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row][col]
    }

    fn column(&self, j: usize) -> impl Iterator<Item = u8> + '_ {
        self.entries.iter().map(move |r| r[j])
    }
}

/// Rebuilds a graph from its incidence matrix; columns become edges in order.
pub fn graph_from_incidence<S: AsRef<str>>(m: &IncidenceMatrix, labels: &[S]) -> Result<Graph, Error> {
    if labels.len() != m.rows() {
        return Err(Error::ShapeMismatch);
    }
    let universe = Universe::new(labels.iter().map(|s| s.as_ref().to_string()))?;
    let mut edges = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        let ends: Vec<usize> = m
            .column(j)
            .enumerate()
            .filter(|&(_, x)| x == 1)
            .map(|(i, _)| i)
            .collect();
        match ends[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::BadColumn(j)),
        }
    }
    Graph::new(universe, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Five-vertex example: edges ab, ac, bc, cd, da and isolated e.
    pub(crate) fn graph_one() -> Graph {
        Graph::from_labels(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap()
    }

    /// Four-vertex connected example with the same five edges.
    pub(crate) fn graph_two() -> Graph {
        Graph::from_labels(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap()
    }

    fn two_disjoint_edges() -> Graph {
        Graph::from_labels(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::new(Universe::numbered(n), edges).unwrap()
    }

    fn show(g: &Graph, sets: &[Subset]) -> Vec<String> {
        sets.iter().map(|s| g.vertices().format(s)).collect()
    }

    #[test]
    fn construction_rejects_loops_and_duplicates() {
        assert!(matches!(Graph::from_labels(&["a"], &[("a", "a")]), Err(Error::Loop(_))));
        assert!(matches!(
            Graph::from_labels(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            Graph::new(Universe::numbered(2), [(0, 2)]),
            Err(Error::UnknownVertex(2))
        ));
    }

    #[test]
    fn family_of_graph_one() {
        let g = graph_one();
        let f = g.induce_family();
        assert_eq!(show(&g, f.blocks()), ["{a,b}", "{a,c}", "{b,c}", "{c,d}", "{a,d}"]);
        let edgeless = Graph::new(Universe::numbered(3), []).unwrap();
        assert!(edgeless.induce_family().blocks().is_empty());
        let single = Graph::from_labels(&["u", "v"], &[("u", "v")]).unwrap();
        assert_eq!(show(&single, single.induce_family().blocks()), ["{u,v}"]);
    }

    #[test]
    fn covering_requires_no_isolated_vertices() {
        assert_eq!(graph_one().induce_covering(), Err(Error::IsolatedVertices(vec!["e".into()])));
        assert_eq!(graph_two().induce_covering().unwrap().blocks().len(), 5);
        let lone = Graph::from_labels::<&str>(&["v"], &[]).unwrap();
        assert_eq!(lone.induce_covering(), Err(Error::IsolatedVertices(vec!["v".into()])));
    }

    #[test]
    fn incidence_examples() {
        let single = Graph::from_labels(&["u", "v"], &[("u", "v")]).unwrap();
        assert_eq!(single.incidence_matrix().entries(), &[vec![1], vec![1]]);

        let tri = complete(3);
        let m = tri.incidence_matrix();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        for j in 0..3 {
            assert_eq!(m.column(j).map(u32::from).sum::<u32>(), 2);
        }
        for row in m.entries() {
            assert_eq!(row.iter().map(|&x| u32::from(x)).sum::<u32>(), 2);
        }
        assert_eq!(graph_from_incidence(&m, &["1", "2", "3"]).unwrap(), tri);

        let edgeless = Graph::new(Universe::numbered(3), []).unwrap().incidence_matrix();
        assert_eq!((edgeless.rows(), edgeless.cols()), (3, 0));
    }

    #[test]
    fn incidence_errors() {
        let m = IncidenceMatrix::new(2, 1, vec![vec![1], vec![1]]).unwrap();
        let g = graph_from_incidence(&m, &["u", "v"]).unwrap();
        assert_eq!(g.edge_labels().collect::<Vec<_>>(), [("u", "v")]);

        let zero = IncidenceMatrix::new(2, 1, vec![vec![0], vec![0]]).unwrap();
        assert_eq!(graph_from_incidence(&zero, &["u", "v"]), Err(Error::BadColumn(0)));
        let dup = IncidenceMatrix::new(2, 2, vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(matches!(graph_from_incidence(&dup, &["u", "v"]), Err(Error::DuplicateEdge(..))));
        assert_eq!(graph_from_incidence(&m, &["u"]), Err(Error::ShapeMismatch));
        assert_eq!(
            IncidenceMatrix::new(1, 1, vec![vec![2]]),
            Err(Error::BadEntry { row: 0, col: 0 })
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = graph_one();
        let k = g.vertices().parse_subset("b,c,d").unwrap();
        let sub = g.vertex_induced_subgraph(&k).unwrap();
        assert_eq!(sub.vertices().labels(), ["b", "c", "d"]);
        assert_eq!(sub.edge_labels().collect::<Vec<_>>(), [("b", "c"), ("c", "d")]);

        assert_eq!(g.vertex_induced_subgraph(&g.vertices().full_set()).unwrap(), g);
        let one = g.vertex_induced_subgraph(&g.vertices().singleton(2)).unwrap();
        assert_eq!((one.vertex_count(), one.edge_count()), (1, 0));
        assert_eq!(g.vertex_induced_subgraph(&g.vertices().empty_set()), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn witness_examples() {
        let g = graph_two();
        let chain = g.connection_witness(1, 3).unwrap().unwrap();
        assert_eq!(show(&g, &chain), ["{b,c}", "{c,d}"]);

        let chain = g.connection_witness(0, 1).unwrap().unwrap();
        assert_eq!(show(&g, &chain), ["{a,b}"]);

        assert_eq!(two_disjoint_edges().connection_witness(0, 2).unwrap(), None);
        assert_eq!(g.connection_witness(1, 1), Err(Error::SameVertex));
        assert!(matches!(graph_one().connection_witness(0, 1), Err(Error::IsolatedVertices(_))));
    }

    #[test]
    fn connectedness_examples() {
        assert_eq!(graph_two().is_connected_covering(), Ok(true));
        assert_eq!(two_disjoint_edges().is_connected_covering(), Ok(false));
        assert_eq!(complete(4).is_connected_covering(), Ok(true));

        assert_eq!(graph_two().lower_characterization_connected(), Ok(true));
        assert_eq!(two_disjoint_edges().lower_characterization_connected(), Ok(false));
        assert_eq!(complete(2).lower_characterization_connected(), Ok(true));

        let g = two_disjoint_edges();
        let w = g.outer_definable_witness().unwrap().unwrap();
        assert_eq!(g.vertices().format(&w), "{a,b}");
    }

    #[test]
    fn covering_method_inapplicable_cases() {
        assert!(matches!(graph_one().is_connected_covering(), Err(Error::Inapplicable(_))));
        let lone = Graph::from_labels::<&str>(&["v"], &[]).unwrap();
        assert!(matches!(lone.is_connected_covering(), Err(Error::Inapplicable(_))));
        assert!(matches!(lone.lower_characterization_connected(), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn components_examples() {
        let g = graph_one();
        let p = g.connected_components_bfs();
        assert_eq!(show(&g, p.blocks()), ["{a,b,c,d}", "{e}"]);
        assert_eq!(graph_two().connected_components_bfs().block_count(), 1);
        let edgeless = Graph::new(Universe::numbered(3), []).unwrap();
        assert_eq!(edgeless.connected_components_bfs().block_count(), 3);
    }

    fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n)
            .prop_flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                (Just(n), proptest::collection::vec(any::<bool>(), pairs))
            })
            .prop_map(|(n, bits)| {
                let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let edges = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                Graph::new(Universe::numbered(n), edges).unwrap()
            })
    }

    /// Reachability by repeated edge relaxation, sharing nothing with the BFS.
    fn reach(g: &Graph, u: usize) -> Vec<bool> {
        let mut r = vec![false; g.vertex_count()];
        r[u] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &(a, b) in g.edges() {
                if r[a] != r[b] {
                    r[a] = true;
                    r[b] = true;
                    changed = true;
                }
            }
        }
        r
    }

    /// Edge count of a shortest path, by layered relaxation.
    fn distance(g: &Graph, u: usize, v: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[u] = 0;
        for round in 0..g.vertex_count() {
            for &(a, b) in g.edges() {
                if dist[a] == round && dist[b] == usize::MAX {
                    dist[b] = round + 1;
                }
                if dist[b] == round && dist[a] == usize::MAX {
                    dist[a] = round + 1;
                }
            }
        }
        (dist[v] != usize::MAX).then_some(dist[v])
    }

    proptest! {
        #[test]
        fn covering_verdicts_agree_with_traversal(g in graph_strategy(9)) {
            let components = g.connected_components_bfs();
            match g.is_connected_covering() {
                Ok(connected) => {
                    prop_assert_eq!(connected, components.block_count() == 1);
                    prop_assert_eq!(g.lower_characterization_connected().unwrap(), connected);
                }
                Err(Error::Inapplicable(_)) => {
                    prop_assert!(g.vertex_count() < 2 || !g.isolated_vertices().is_empty());
                }
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }

        #[test]
        fn witness_iff_same_component(g in graph_strategy(8), a in 0usize..8, b in 0usize..8) {
            let n = g.vertex_count();
            let (u, v) = (a % n, b % n);
            prop_assume!(u != v && g.isolated_vertices().is_empty());
            let witness = g.connection_witness(u, v).unwrap();
            prop_assert_eq!(witness.is_some(), reach(&g, u)[v]);
            if let Some(chain) = witness {
                prop_assert!(verify_chain(&g.induce_covering().unwrap(), u, v, &chain));
                prop_assert_eq!(Some(chain.len()), distance(&g, u, v));
            }
        }

        #[test]
        fn incidence_round_trip(g in graph_strategy(10)) {
            let labels = g.vertices().labels().to_vec();
            prop_assert_eq!(graph_from_incidence(&g.incidence_matrix(), &labels).unwrap(), g);
        }
    }
}
