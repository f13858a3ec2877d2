//! Matroids given by their circuits, the graph `G(M)` they induce, and
//! connectedness decided three ways.
//!
//! Two distinct ground elements are joined in `G(M)` when some circuit holds
//! both. Reachability in `G(M)` collapses to adjacency, so the components of
//! `G(M)` are complete graphs or isolated vertices and coincide with the
//! classes of the matroid's `γ` relation.

use std::collections::HashSet;
use std::fmt;

use crate::covering::Covering;
use crate::error::Error;
use crate::graph::Graph;
use crate::set::{Partition, Subset, Universe};

/// Largest edge count accepted by [`cycle_matroid`].
pub const CYCLE_MATROID_MAX_EDGES: usize = 20;
/// Largest ground set accepted by [`uniform_matroid`].
pub const UNIFORM_MAX_N: usize = 16;

/// A circuit family that passed [`validate_circuits`]. Input order of the
/// circuits is kept (after collapsing duplicates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    ground: Universe,
    circuits: Vec<Subset>,
}

/// One failed circuit axiom with the sets that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// C1: the empty set is listed as a circuit.
    EmptyCircuit,
    /// C2: one circuit properly contains another.
    Containment { smaller: Subset, larger: Subset },
    /// C3: `first` and `second` share `element`, yet no circuit fits inside
    /// `(first ∪ second) − {element}`.
    Elimination {
        first: Subset,
        second: Subset,
        element: usize,
    },
}

impl AxiomViolation {
    pub fn axiom(&self) -> Axiom {
        match self {
            AxiomViolation::EmptyCircuit => Axiom::C1,
            AxiomViolation::Containment { .. } => Axiom::C2,
            AxiomViolation::Elimination { .. } => Axiom::C3,
        }
    }

    /// Line-oriented report such as `C2 violated: {1} ⊂ {1,2}`.
    pub fn describe(&self, ground: &Universe) -> String {
        match self {
            AxiomViolation::EmptyCircuit => "C1 violated: ∅ is a circuit".to_string(),
            AxiomViolation::Containment { smaller, larger } => format!(
                "C2 violated: {} ⊂ {}",
                ground.format(smaller),
                ground.format(larger)
            ),
            AxiomViolation::Elimination { first, second, element } => {
                let mut rest = first.union(second);
                rest.remove(*element);
                format!(
                    "C3 violated: {} and {} share {} but no circuit ⊆ {}",
                    ground.format(first),
                    ground.format(second),
                    ground.label(*element),
                    ground.format(&rest)
                )
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    C1,
    C2,
    C3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircuitValidation {
    Ok(CircuitFamily),
    Violations {
        ground: Universe,
        violations: Vec<AxiomViolation>,
    },
}

impl CircuitValidation {
    pub fn is_ok(&self) -> bool {
        matches!(self, CircuitValidation::Ok(_))
    }

    pub fn family(self) -> Option<CircuitFamily> {
        match self {
            CircuitValidation::Ok(m) => Some(m),
            CircuitValidation::Violations { .. } => None,
        }
    }

    pub fn violations(&self) -> &[AxiomViolation] {
        match self {
            CircuitValidation::Ok(_) => &[],
            CircuitValidation::Violations { violations, .. } => violations,
        }
    }

    pub fn axiom_holds(&self, axiom: Axiom) -> bool {
        self.violations().iter().all(|v| v.axiom() != axiom)
    }

    /// `circuit axioms: C1 ok, C2 violated, C3 ok`
    pub fn summary(&self) -> String {
        let parts: Vec<String> = [Axiom::C1, Axiom::C2, Axiom::C3]
            .iter()
            .map(|&a| format!("{a} {}", if self.axiom_holds(a) { "ok" } else { "violated" }))
            .collect();
        format!("circuit axioms: {}", parts.join(", "))
    }
}

/// Checks the circuit axioms exhaustively. C3 is tested on every unordered
/// pair of distinct circuits and every shared element.
pub fn validate_circuits(
    ground: Universe,
    circuits: impl IntoIterator<Item = Subset>,
) -> Result<CircuitValidation, Error> {
    let mut seen = HashSet::new();
    let mut list = Vec::new();
    for c in circuits {
        ground.check(&c)?;
        if seen.insert(c.clone()) {
            list.push(c);
        }
    }

    let mut violations = Vec::new();
    if list.iter().any(Subset::is_empty) {
        violations.push(AxiomViolation::EmptyCircuit);
    }
    for a in &list {
        for b in &list {
            if a.is_proper_subset(b) {
                violations.push(AxiomViolation::Containment {
                    smaller: a.clone(),
                    larger: b.clone(),
                });
            }
        }
    }
    for (i, a) in list.iter().enumerate() {
        for b in &list[i + 1..] {
            let union = a.union(b);
            for x in a.intersection(b).iter() {
                let mut rest = union.clone();
                rest.remove(x);
                if !list.iter().any(|c| c.is_subset(&rest)) {
                    violations.push(AxiomViolation::Elimination {
                        first: a.clone(),
                        second: b.clone(),
                        element: x,
                    });
                }
            }
        }
    }

    Ok(if violations.is_empty() {
        CircuitValidation::Ok(CircuitFamily { ground, circuits: list })
    } else {
        CircuitValidation::Violations { ground, violations }
    })
}

/// How [`CircuitFamily::is_connected`] reaches its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// One `γ` class.
    Gamma,
    /// `G(M)` is connected.
    InducedGraph,
    /// Loop check, covering check, then the upper closure of one element.
    CircuitCovering,
}

/// Outcome of the loop / covering / closure procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepVerdict {
    /// A one-element ground set is its own `γ` class.
    SingleElement,
    /// Step 1 found loops.
    Loops(Subset),
    /// Step 2 found elements in no circuit.
    Uncovered(Subset),
    /// Step 3: upper approximation of `{element}` under the circuit covering.
    Closure { element: usize, closure: Subset },
}

impl StepVerdict {
    pub fn connected(&self) -> bool {
        match self {
            StepVerdict::SingleElement => true,
            StepVerdict::Loops(_) | StepVerdict::Uncovered(_) => false,
            StepVerdict::Closure { closure, .. } => closure.is_full(),
        }
    }
}

impl CircuitFamily {
    pub fn ground(&self) -> &Universe {
        &self.ground
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    /// Elements forming a one-element circuit.
    pub fn loops(&self) -> Subset {
        let mut out = self.ground.empty_set();
        for c in self.circuits.iter().filter(|c| c.len() == 1) {
            out.union_with(c);
        }
        out
    }

    pub fn circuit_union(&self) -> Subset {
        let mut out = self.ground.empty_set();
        for c in &self.circuits {
            out.union_with(c);
        }
        out
    }

    /// Whether every ground element lies in some circuit.
    pub fn circuits_cover(&self) -> bool {
        !self.ground.is_empty() && self.circuit_union().is_full()
    }

    /// The circuits as a covering of the ground set; requires a loopless
    /// family whose circuits cover the ground.
    pub fn circuit_covering(&self) -> Result<Covering, Error> {
        let loops = self.loops();
        if !loops.is_empty() {
            return Err(Error::NotACovering(format!("loops {}", self.ground.format(&loops))));
        }
        if !self.circuits_cover() {
            let missing = self.circuit_union().complement();
            return Err(Error::NotACovering(format!("{} uncovered", self.ground.format(&missing))));
        }
        Covering::new(self.ground.clone(), self.circuits.iter().cloned())
    }

    /// Upper approximation of `x` with the circuits as covering blocks.
    pub fn upper_via_circuits(&self, x: &Subset) -> Result<Subset, Error> {
        self.circuit_covering()?.upper(x)
    }

    /// `G(M)`: edges in lexicographic index order.
    pub fn induce_graph(&self) -> Graph {
        let n = self.ground.len();
        let mut adjacent = vec![vec![false; n]; n];
        for c in &self.circuits {
            let members: Vec<usize> = c.iter().collect();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    adjacent[u][v] = true;
                }
            }
        }
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = edges.filter(|&(u, v)| adjacent[u][v]).collect();
        Graph::new(self.ground.clone(), edges).expect("pairs of distinct ground elements")
    }

    /// `γ` classes by merging the members of every circuit.
    pub fn gamma_components(&self) -> Partition {
        let n = self.ground.len();
        let mut dsu = DisjointSets::new(n);
        for c in &self.circuits {
            let mut members = c.iter();
            if let Some(first) = members.next() {
                for other in members {
                    dsu.union(first, other);
                }
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut block_of_root = vec![usize::MAX; n];
        for e in 0..n {
            let root = dsu.find(e);
            if block_of_root[root] == usize::MAX {
                block_of_root[root] = blocks.len();
                blocks.push(Subset::empty(n));
            }
            blocks[block_of_root[root]].insert(e);
        }
        Partition::new(self.ground.clone(), blocks).expect("union-find classes partition the ground set")
    }

    /// Loop check, then covering check, then the closure of the first element.
    pub fn three_step(&self) -> Result<StepVerdict, Error> {
        if self.ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        if self.ground.len() == 1 {
            return Ok(StepVerdict::SingleElement);
        }
        let loops = self.loops();
        if !loops.is_empty() {
            return Ok(StepVerdict::Loops(loops));
        }
        if !self.circuits_cover() {
            return Ok(StepVerdict::Uncovered(self.circuit_union().complement()));
        }
        let element = 0;
        let closure = self.upper_via_circuits(&self.ground.singleton(element))?;
        Ok(StepVerdict::Closure { element, closure })
    }

    pub fn is_connected(&self, method: Method) -> Result<bool, Error> {
        if self.ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        match method {
            Method::Gamma => Ok(self.gamma_components().block_count() == 1),
            Method::InducedGraph => {
                if self.ground.len() == 1 {
                    return Ok(true);
                }
                let graph = self.induce_graph();
                match graph.is_connected_covering() {
                    Ok(connected) => Ok(connected),
                    // an isolated vertex among two or more cannot reach the rest
                    Err(Error::Inapplicable(_)) => Ok(false),
                    Err(e) => Err(e),
                }
            }
            Method::CircuitCovering => Ok(self.three_step()?.connected()),
        }
    }

    /// Strong circuit elimination, checked exhaustively: for intersecting
    /// distinct circuits `A`, `B` and every `e1 ∈ A − B`, `e2 ∈ B − A`, some
    /// circuit `C` has `e1, e2 ∈ C ⊆ A ∪ B`.
    pub fn check_strong_elimination(&self) -> bool {
        for a in &self.circuits {
            for b in &self.circuits {
                if a == b || !a.intersects(b) {
                    continue;
                }
                let union = a.union(b);
                for e1 in a.difference(b).iter() {
                    for e2 in b.difference(a).iter() {
                        let found = self
                            .circuits
                            .iter()
                            .any(|c| c.contains(e1) && c.contains(e2) && c.is_subset(&union));
                        if !found {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

pub fn is_connected_matroid(m: &CircuitFamily, method: Method) -> Result<bool, Error> {
    m.is_connected(method)
}

/// Cycle matroid of `g`: ground set is the edge set (labels `u-v`), circuits
/// are the edge sets of simple cycles.
pub fn cycle_matroid(g: &Graph) -> Result<CircuitFamily, Error> {
    if g.edge_count() > CYCLE_MATROID_MAX_EDGES {
        return Err(Error::TooLarge {
            what: "edge set",
            limit: CYCLE_MATROID_MAX_EDGES,
            found: g.edge_count(),
        });
    }
    let ground = Universe::new(g.edge_labels().map(|(u, v)| format!("{u}-{v}")))?;
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut edge_index = vec![vec![usize::MAX; n]; n];
    let mut adj = vec![Vec::new(); n];
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        edge_index[u][v] = j;
        edge_index[v][u] = j;
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut circuits = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        let mut path = vec![start];
        on_path[start] = true;
        extend_cycles(start, &adj, &mut path, &mut on_path, &mut |cycle| {
            let edges = cycle
                .iter()
                .zip(cycle.iter().cycle().skip(1))
                .map(|(&a, &b)| edge_index[a][b]);
            circuits.push(Subset::from_indices(m, edges));
        });
        on_path[start] = false;
    }

    Ok(CircuitFamily { ground, circuits })
}

/// Depth-first extension of `path` through vertices above `path[0]`. A cycle
/// is reported once: when it closes back to its smallest vertex and its second
/// vertex is below its last, which fixes rotation and reflection.
fn extend_cycles(
    start: usize,
    adj: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    emit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().expect("path starts at its root");
    for &next in &adj[last] {
        if next == start && path.len() >= 3 && path[1] < last {
            emit(path);
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            path.push(next);
            extend_cycles(start, adj, path, on_path, emit);
            path.pop();
            on_path[next] = false;
        }
    }
}

/// `U(k, n)` on ground `1..=n`: circuits are all `(k+1)`-subsets in
/// lexicographic order, none when `k = n`.
pub fn uniform_matroid(k: usize, n: usize) -> Result<CircuitFamily, Error> {
    if k > n {
        return Err(Error::BadParams(format!("rank {k} exceeds ground size {n}")));
    }
    if n > UNIFORM_MAX_N {
        return Err(Error::TooLarge {
            what: "uniform matroid ground set",
            limit: UNIFORM_MAX_N,
            found: n,
        });
    }
    let circuits = if k == n {
        Vec::new()
    } else {
        combinations(n, k + 1)
            .into_iter()
            .map(|c| Subset::from_indices(n, c))
            .collect()
    };
    Ok(CircuitFamily {
        ground: Universe::numbered(n),
        circuits,
    })
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(from: usize, n: usize, r: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for i in from..n {
            if n - i < r - current.len() {
                break;
            }
            current.push(i);
            go(i + 1, n, r, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Direct sum of matroids on disjoint copies of their ground sets. Element
/// `x` of part `i` (1-based) is labeled `i:x`.
pub fn direct_sum(parts: &[CircuitFamily]) -> CircuitFamily {
    let total: usize = parts.iter().map(|p| p.ground.len()).sum();
    let labels = parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.ground.labels().iter().map(move |l| format!("{}:{l}", i + 1)));
    let ground = Universe::new(labels).expect("part prefixes keep labels distinct");
    let mut circuits = Vec::new();
    let mut offset = 0;
    for p in parts {
        for c in &p.circuits {
            circuits.push(Subset::from_indices(total, c.iter().map(|e| e + offset)));
        }
        offset += p.ground.len();
    }
    CircuitFamily { ground, circuits }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut at = x;
        while self.parent[at] != root {
            let next = self.parent[at];
            self.parent[at] = root;
            at = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_matroid() -> CircuitFamily {
        let ground = Universe::numbered(7);
        let circuits = ["1,2,3", "6", "2,4,5", "1,3,4,5"].map(|c| ground.parse_subset(c).unwrap());
        validate_circuits(ground, circuits).unwrap().family().unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_labels(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::new(Universe::numbered(n), edges).unwrap()
    }

    fn two_triangles() -> Graph {
        Graph::new(
            Universe::numbered(6),
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap()
    }

    /// Independent C3 check on raw bitmasks.
    fn weak_elimination_by_masks(circuits: &[u32]) -> bool {
        circuits.iter().all(|&a| {
            circuits.iter().all(|&b| {
                a == b
                    || (0..32).filter(|x| (a & b) >> x & 1 == 1).all(|x| {
                        let rest = (a | b) & !(1 << x);
                        circuits.iter().any(|&c| c & !rest == 0)
                    })
            })
        })
    }

    /// Edge subsets of `g` that are connected and 2-regular on their support.
    fn cycles_by_subset_enumeration(g: &Graph) -> usize {
        let m = g.edge_count();
        let mut count = 0;
        for mask in 1u32..(1 << m) {
            let chosen: Vec<(usize, usize)> =
                (0..m).filter(|j| mask >> j & 1 == 1).map(|j| g.edges()[j]).collect();
            let mut deg = vec![0; g.vertex_count()];
            for &(u, v) in &chosen {
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d != 0 && d != 2) {
                continue;
            }
            let sub = Graph::new(g.vertices().clone(), chosen).unwrap();
            let comps = sub.connected_components_bfs();
            if comps.blocks().iter().filter(|b| b.len() > 1).count() == 1 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn sample_matroid_validates() {
        let m = sample_matroid();
        let masks: Vec<u32> = m
            .circuits()
            .iter()
            .map(|c| c.iter().fold(0, |acc, i| acc | 1 << i))
            .collect();
        assert!(weak_elimination_by_masks(&masks));
        assert_eq!(m.circuits().len(), 4);
    }

    #[test]
    fn axiom_violations_reported() {
        let ground = Universe::numbered(2);
        let v = validate_circuits(ground.clone(), [ground.empty_set()]).unwrap();
        assert!(!v.axiom_holds(Axiom::C1));
        assert_eq!(v.violations()[0].describe(&ground), "C1 violated: ∅ is a circuit");

        let v = validate_circuits(
            ground.clone(),
            [ground.parse_subset("1").unwrap(), ground.parse_subset("1,2").unwrap()],
        )
        .unwrap();
        assert!(!v.axiom_holds(Axiom::C2));
        assert_eq!(v.violations()[0].describe(&ground), "C2 violated: {1} ⊂ {1,2}");
        assert_eq!(v.summary(), "circuit axioms: C1 ok, C2 violated, C3 violated");
    }

    #[test]
    fn elimination_violation_found() {
        // {1,2} and {2,3} share 2, but nothing fits inside {1,3}
        let ground = Universe::numbered(3);
        let v = validate_circuits(
            ground.clone(),
            ["1,2", "2,3"].map(|c| ground.parse_subset(c).unwrap()),
        )
        .unwrap();
        assert_eq!(v.violations().len(), 1);
        assert_eq!(
            v.violations()[0].describe(&ground),
            "C3 violated: {1,2} and {2,3} share 2 but no circuit ⊆ {1,3}"
        );
        assert!(!weak_elimination_by_masks(&[0b011, 0b110]));
    }

    #[test]
    fn loops_examples() {
        let m = sample_matroid();
        assert_eq!(m.ground().format(&m.loops()), "{6}");
        assert!(uniform_matroid(2, 4).unwrap().loops().is_empty());
        let ground = Universe::numbered(2);
        let both = validate_circuits(ground.clone(), [ground.singleton(0), ground.singleton(1)])
            .unwrap()
            .family()
            .unwrap();
        assert!(both.loops().is_full());
    }

    #[test]
    fn cover_examples() {
        let m = sample_matroid();
        assert!(!m.circuits_cover());
        assert_eq!(m.ground().format(&m.circuit_union()), "{1,2,3,4,5,6}");
        assert!(uniform_matroid(2, 4).unwrap().circuits_cover());
        let empty = validate_circuits(Universe::numbered(3), []).unwrap().family().unwrap();
        assert!(!empty.circuits_cover());
    }

    #[test]
    fn induced_graph_examples() {
        let m = sample_matroid();
        let g = m.induce_graph();
        let labels: Vec<String> = g.isolated_vertices().iter().map(|&i| g.vertices().label(i).to_string()).collect();
        assert_eq!(labels, ["6", "7"]);
        for u in 0..5 {
            for v in u + 1..5 {
                assert!(g.has_edge(u, v));
            }
        }
        assert_eq!(g.edge_count(), 10);

        assert_eq!(uniform_matroid(2, 4).unwrap().induce_graph(), complete(4));

        let ground = Universe::numbered(1);
        let single = validate_circuits(ground.clone(), [ground.singleton(0)]).unwrap().family().unwrap();
        let g = single.induce_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn gamma_examples() {
        let m = sample_matroid();
        let blocks: Vec<String> = m.gamma_components().blocks().iter().map(|b| m.ground().format(b)).collect();
        assert_eq!(blocks, ["{1,2,3,4,5}", "{6}", "{7}"]);
        assert_eq!(uniform_matroid(2, 4).unwrap().gamma_components().block_count(), 1);
        let free = validate_circuits(Universe::numbered(2), []).unwrap().family().unwrap();
        assert_eq!(free.gamma_components().block_count(), 2);
    }

    #[test]
    fn connectedness_examples() {
        let all = [Method::Gamma, Method::InducedGraph, Method::CircuitCovering];
        let sample = sample_matroid();
        let uniform = uniform_matroid(2, 4).unwrap();
        let split = cycle_matroid(&two_triangles()).unwrap();
        for method in all {
            assert_eq!(sample.is_connected(method), Ok(false), "{method:?}");
            assert_eq!(uniform.is_connected(method), Ok(true), "{method:?}");
            assert_eq!(split.is_connected(method), Ok(false), "{method:?}");
        }
        assert_eq!(sample.three_step().unwrap(), StepVerdict::Loops(sample.ground().parse_subset("6").unwrap()));
        let gamma: Vec<usize> = split.gamma_components().blocks().iter().map(Subset::len).collect();
        assert_eq!(gamma, [3, 3]);
    }

    #[test]
    fn single_element_and_empty_ground() {
        let ground = Universe::numbered(1);
        let free = validate_circuits(ground.clone(), []).unwrap().family().unwrap();
        let looped = validate_circuits(ground.clone(), [ground.singleton(0)]).unwrap().family().unwrap();
        for method in [Method::Gamma, Method::InducedGraph, Method::CircuitCovering] {
            assert_eq!(free.is_connected(method), Ok(true));
            assert_eq!(looped.is_connected(method), Ok(true));
        }
        let empty = validate_circuits(Universe::numbered(0), []).unwrap().family().unwrap();
        assert_eq!(empty.is_connected(Method::Gamma), Err(Error::EmptyGround));
        assert_eq!(empty.three_step(), Err(Error::EmptyGround));
    }

    #[test]
    fn upper_via_circuits_examples() {
        let u = uniform_matroid(2, 4).unwrap();
        assert!(u.upper_via_circuits(&u.ground().singleton(0)).unwrap().is_full());
        assert_eq!(u.upper_via_circuits(&u.ground().empty_set()).unwrap(), u.ground().empty_set());
        let tri = cycle_matroid(&triangle()).unwrap();
        assert!(tri.upper_via_circuits(&tri.ground().singleton(0)).unwrap().is_full());
        assert!(matches!(sample_matroid().upper_via_circuits(&Subset::empty(7)), Err(Error::NotACovering(_))));
    }

    #[test]
    fn strong_elimination_examples() {
        assert!(sample_matroid().check_strong_elimination());
        assert!(uniform_matroid(2, 5).unwrap().check_strong_elimination());
        assert!(cycle_matroid(&complete(4)).unwrap().check_strong_elimination());
    }

    #[test]
    fn strong_elimination_fails_on_non_matroid() {
        // passes C1, C2; C3 fails on 2, and no circuit contains both 1 and 3
        let ground = Universe::numbered(3);
        let circuits = ["1,2", "2,3"].map(|c| ground.parse_subset(c).unwrap());
        let fake = CircuitFamily { ground, circuits: circuits.to_vec() };
        assert!(!fake.check_strong_elimination());
    }

    #[test]
    fn cycle_matroid_examples() {
        let tri = cycle_matroid(&triangle()).unwrap();
        assert_eq!(tri.ground().labels(), ["a-b", "b-c", "a-c"]);
        assert_eq!(tri.circuits(), &[tri.ground().full_set()]);

        let path = Graph::new(Universe::numbered(4), [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(cycle_matroid(&path).unwrap().circuits().is_empty());

        let k4 = complete(4);
        let m = cycle_matroid(&k4).unwrap();
        assert_eq!(cycles_by_subset_enumeration(&k4), 7);
        assert_eq!(m.circuits().len(), 7);
        let mut sizes: Vec<usize> = m.circuits().iter().map(Subset::len).collect();
        sizes.sort();
        assert_eq!(sizes, [3, 3, 3, 3, 4, 4, 4]);

        for g in [complete(5), two_triangles(), complete(4)] {
            let m = cycle_matroid(&g).unwrap();
            assert_eq!(m.circuits().len(), cycles_by_subset_enumeration(&g));
            assert!(validate_circuits(m.ground().clone(), m.circuits().iter().cloned()).unwrap().is_ok());
        }

        let big = complete(7);
        assert!(matches!(cycle_matroid(&big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn uniform_examples() {
        let u = uniform_matroid(2, 4).unwrap();
        assert_eq!(u.circuits().len(), 4);
        assert!(u.circuits().iter().all(|c| c.len() == 3));
        let loops = uniform_matroid(0, 3).unwrap();
        assert!(loops.loops().is_full());
        assert_eq!(loops.circuits().len(), 3);
        assert!(uniform_matroid(5, 5).unwrap().circuits().is_empty());
        assert!(matches!(uniform_matroid(4, 3), Err(Error::BadParams(_))));
        assert!(matches!(uniform_matroid(1, 17), Err(Error::TooLarge { .. })));
        for n in 0..=6 {
            for k in 0..=n {
                let m = uniform_matroid(k, n).unwrap();
                assert!(validate_circuits(m.ground().clone(), m.circuits().iter().cloned()).unwrap().is_ok());
            }
        }
    }

    #[test]
    fn direct_sum_keeps_parts_apart() {
        let sum = direct_sum(&[uniform_matroid(1, 2).unwrap(), uniform_matroid(0, 1).unwrap()]);
        assert_eq!(sum.ground().labels(), ["1:1", "1:2", "2:1"]);
        assert_eq!(sum.gamma_components().block_count(), 2);
        assert!(validate_circuits(sum.ground().clone(), sum.circuits().iter().cloned()).unwrap().is_ok());
    }
}
