//! k-uniform hypergraph data model: validation, deletions, components,
//! induced subtrees, canonical forms and the named generator families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::Error;

/// k-uniform hypergraph. Vertices carry arbitrary (not necessarily dense)
/// 0-based identifiers; edges are sorted k-subsets, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    k: usize,
    vertices: Vec<usize>,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(k: usize, vertices: Vec<usize>, edges: Vec<Vec<usize>>) -> Result<Self, Error> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<Vec<usize>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort();
        let h = Hypergraph { k, vertices, edges };
        h.validate()?;
        Ok(h)
    }

    /// Checks every structural invariant, naming the offending edge or vertex.
    pub fn validate(&self) -> Result<(), Error> {
        if self.k < 2 {
            return Err(Error::InvalidHypergraph(format!("k = {} < 2", self.k)));
        }
        let vset: HashSet<usize> = self.vertices.iter().copied().collect();
        let mut seen: HashSet<&[usize]> = HashSet::new();
        for e in &self.edges {
            if e.len() != self.k {
                return Err(Error::InvalidHypergraph(format!(
                    "edge size {} != {} for edge {:?}",
                    e.len(),
                    self.k,
                    e
                )));
            }
            let distinct: HashSet<usize> = e.iter().copied().collect();
            if distinct.len() != self.k {
                return Err(Error::InvalidHypergraph(format!(
                    "repeated vertex in edge {:?}",
                    e
                )));
            }
            for &v in e {
                if !vset.contains(&v) {
                    return Err(Error::InvalidHypergraph(format!(
                        "edge {:?} uses unknown vertex {}",
                        e, v
                    )));
                }
            }
            if !seen.insert(e.as_slice()) {
                return Err(Error::InvalidHypergraph(format!("duplicate edge {:?}", e)));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Edges incident to v.
    pub fn incident_edges(&self, v: usize) -> Vec<&Vec<usize>> {
        self.edges.iter().filter(|e| e.contains(&v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn max_degree_vertex(&self) -> Option<usize> {
        self.vertices
            .iter()
            .copied()
            .max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
    }

    /// H - u: remove u and every edge incident to u. Other vertices of the
    /// removed edges remain, possibly isolated.
    pub fn delete_vertex(&self, u: usize) -> Result<Hypergraph, Error> {
        if !self.has_vertex(u) {
            return Err(Error::UnknownVertex(u));
        }
        let vertices = self.vertices.iter().copied().filter(|&v| v != u).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(&u))
            .cloned()
            .collect();
        Ok(Hypergraph {
            k: self.k,
            vertices,
            edges,
        })
    }

    /// H - e: the induced sub-hypergraph on V \ e.
    pub fn remove_edge_induced(&self, e: &[usize]) -> Result<Hypergraph, Error> {
        let mut key = e.to_vec();
        key.sort_unstable();
        if self.edges.binary_search(&key).is_err() {
            return Err(Error::UnknownEdge(key));
        }
        let remaining: Vec<usize> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !key.contains(v))
            .collect();
        Ok(self.induced(&remaining))
    }

    /// Same vertex set, edge set E \ {e}.
    pub fn remove_edge_weak(&self, e: &[usize]) -> Result<Hypergraph, Error> {
        let mut key = e.to_vec();
        key.sort_unstable();
        match self.edges.binary_search(&key) {
            Err(_) => Err(Error::UnknownEdge(key)),
            Ok(i) => {
                let mut edges = self.edges.clone();
                edges.remove(i);
                Ok(Hypergraph {
                    k: self.k,
                    vertices: self.vertices.clone(),
                    edges,
                })
            }
        }
    }

    /// Induced sub-hypergraph on a vertex subset: keeps exactly the edges
    /// fully contained in the subset.
    pub fn induced(&self, subset: &[usize]) -> Hypergraph {
        let sset: BTreeSet<usize> = subset.iter().copied().collect();
        let vertices: Vec<usize> = sset.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| sset.contains(v)))
            .cloned()
            .collect();
        Hypergraph {
            k: self.k,
            vertices,
            edges,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_vertex_sets().len() <= 1
    }

    fn connected_vertex_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut remaining: BTreeSet<usize> = self.vertices.iter().copied().collect();
        let mut incidence: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                incidence.entry(v).or_default().push(i);
            }
        }
        let mut components = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            remaining.remove(&start);
            comp.insert(start);
            while let Some(v) = queue.pop_front() {
                for &ei in incidence.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                    for &w in &self.edges[ei] {
                        if remaining.remove(&w) {
                            comp.insert(w);
                            queue.push_back(w);
                        }
                    }
                }
            }
            components.push(comp);
        }
        components
    }

    /// Maximal connected pieces with their induced edges; isolated vertices
    /// become singleton components. Sorted by smallest vertex.
    pub fn connected_components(&self) -> Vec<Hypergraph> {
        self.connected_vertex_sets()
            .into_iter()
            .map(|c| self.induced(&c.into_iter().collect::<Vec<_>>()))
            .collect()
    }

    /// Connected and acyclic: |V| = m(k-1) + 1.
    pub fn is_hypertree(&self) -> bool {
        self.is_connected()
            && self.vertex_count() == self.edge_count() * (self.k - 1) + 1
    }

    /// Every component is a hypertree (isolated vertices allowed).
    pub fn is_hyperforest(&self) -> bool {
        self.connected_components().iter().all(|c| c.is_hypertree())
    }

    /// Cut vertices per the shrink-and-delete procedure: replace each edge
    /// e incident to u by e \ {u}, delete u, and test connectivity of the
    /// resulting non-uniform structure.
    pub fn cut_vertices(&self) -> Result<BTreeSet<usize>, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut out = BTreeSet::new();
        for &u in &self.vertices {
            let shrunk: Vec<Vec<usize>> = self
                .edges
                .iter()
                .map(|e| e.iter().copied().filter(|&v| v != u).collect())
                .collect();
            let others: Vec<usize> = self.vertices.iter().copied().filter(|&v| v != u).collect();
            if !connected_generic(&others, &shrunk) {
                out.insert(u);
            }
        }
        Ok(out)
    }

    /// All induced sub-hypertrees: every connected edge-subset closure plus
    /// every single vertex, deduplicated by vertex set.
    pub fn enumerate_induced_subtrees(&self) -> Result<SubtreeCatalog, Error> {
        if !self.is_hypertree() {
            return Err(Error::NotHypertree);
        }
        let m = self.edge_count();
        // edge adjacency
        let adj: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| j != i && self.edges[i].iter().any(|v| self.edges[j].contains(v)))
                    .collect()
            })
            .collect();
        // grow connected edge subsets by BFS over the subset lattice
        let mut subsets: HashSet<Vec<usize>> = HashSet::new();
        let mut queue: VecDeque<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
        for s in &queue {
            subsets.insert(s.clone());
        }
        while let Some(s) = queue.pop_front() {
            for &i in &s {
                for &j in &adj[i] {
                    if !s.contains(&j) {
                        let mut t = s.clone();
                        t.push(j);
                        t.sort_unstable();
                        if subsets.insert(t.clone()) {
                            queue.push_back(t);
                        }
                    }
                }
            }
        }
        let mut entries = Vec::new();
        let mut seen_vsets: HashSet<Vec<usize>> = HashSet::new();
        for &v in &self.vertices {
            seen_vsets.insert(vec![v]);
            let sub = self.induced(&[v]);
            entries.push(SubtreeEntry {
                vertices: vec![v],
                key: sub.canonical_key()?,
                subtree: sub,
            });
        }
        let mut sorted_subsets: Vec<Vec<usize>> = subsets.into_iter().collect();
        sorted_subsets.sort();
        for s in sorted_subsets {
            let mut vset: BTreeSet<usize> = BTreeSet::new();
            for &i in &s {
                vset.extend(self.edges[i].iter().copied());
            }
            let vs: Vec<usize> = vset.into_iter().collect();
            if seen_vsets.insert(vs.clone()) {
                let sub = self.induced(&vs);
                debug_assert!(sub.is_hypertree());
                entries.push(SubtreeEntry {
                    vertices: vs,
                    key: sub.canonical_key()?,
                    subtree: sub,
                });
            }
        }
        Ok(SubtreeCatalog { entries })
    }

    /// Canonical key of a hyperforest: equal keys iff isomorphic. Each
    /// hypertree component is encoded by center-rooted AHU over the
    /// vertex/hyperedge incidence tree; the forest key is the sorted
    /// multiset of component keys.
    pub fn canonical_key(&self) -> Result<Vec<u8>, Error> {
        let mut keys = Vec::new();
        for comp in self.connected_components() {
            if !comp.is_hypertree() {
                return Err(Error::NotHypertree);
            }
            keys.push(component_key(&comp));
        }
        keys.sort();
        Ok(keys.join(&b';'))
    }

    pub fn relabeled(&self, map: &BTreeMap<usize, usize>) -> Result<Hypergraph, Error> {
        let vertices = self.vertices.iter().map(|v| map[v]).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|v| map[v]).collect())
            .collect();
        Hypergraph::new(self.k, vertices, edges)
    }

    /// Relabel vertices to 0..n-1 in sorted order.
    pub fn densified(&self) -> Hypergraph {
        let map: BTreeMap<usize, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        self.relabeled(&map).expect("densify preserves validity")
    }

    pub fn to_json(&self) -> HypergraphJson {
        let d = self.densified();
        HypergraphJson {
            k: d.k,
            n: d.vertex_count(),
            edges: d.edges.clone(),
        }
    }

    pub fn from_json(j: &HypergraphJson) -> Result<Hypergraph, Error> {
        Hypergraph::new(j.k, (0..j.n).collect(), j.edges.clone())
    }
}

/// Connectivity of a general (possibly non-uniform) edge list over a given
/// vertex set; isolated vertices count as their own components.
fn connected_generic(vertices: &[usize], edges: &[Vec<usize>]) -> bool {
    if vertices.is_empty() {
        return true;
    }
    let mut remaining: BTreeSet<usize> = vertices.iter().copied().collect();
    let mut incidence: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            incidence.entry(v).or_default().push(i);
        }
    }
    let start = *remaining.iter().next().unwrap();
    let mut queue = VecDeque::from([start]);
    remaining.remove(&start);
    while let Some(v) = queue.pop_front() {
        for &ei in incidence.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            for &w in &edges[ei] {
                if remaining.remove(&w) {
                    queue.push_back(w);
                }
            }
        }
    }
    remaining.is_empty()
}

/// AHU encoding of one hypertree component over its incidence tree
/// (vertex nodes and hyperedge nodes), rooted at the tree center.
fn component_key(comp: &Hypergraph) -> Vec<u8> {
    let nv = comp.vertex_count();
    let ne = comp.edge_count();
    // nodes 0..nv are vertices (in sorted order), nv..nv+ne are edges
    let vindex: BTreeMap<usize, usize> = comp
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let total = nv + ne;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (i, e) in comp.edges().iter().enumerate() {
        for &v in e {
            adj[vindex[&v]].push(nv + i);
            adj[nv + i].push(vindex[&v]);
        }
    }
    let centers = tree_centers(&adj);
    centers
        .into_iter()
        .map(|c| rooted_encoding(&adj, c, usize::MAX, nv))
        .min()
        .expect("component has at least one node")
}

fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 1 {
        return vec![0];
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&i| deg[i] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &u in &layer {
            for &v in &adj[u] {
                if deg[v] > 1 {
                    deg[v] -= 1;
                    if deg[v] == 1 {
                        next.push(v);
                    }
                }
            }
            deg[u] = 0;
        }
        layer = next;
    }
    layer
}

fn rooted_encoding(adj: &[Vec<usize>], node: usize, parent: usize, nv: usize) -> Vec<u8> {
    let tag = if node < nv { b'v' } else { b'e' };
    let mut kids: Vec<Vec<u8>> = adj[node]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_encoding(adj, c, node, nv))
        .collect();
    kids.sort();
    let mut out = vec![tag, b'('];
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}

#[derive(Clone, Debug)]
pub struct SubtreeEntry {
    pub vertices: Vec<usize>,
    pub key: Vec<u8>,
    pub subtree: Hypergraph,
}

/// All induced sub-hypertrees of a hypertree, distinct as vertex subsets.
#[derive(Clone, Debug)]
pub struct SubtreeCatalog {
    pub entries: Vec<SubtreeEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    SingleEdge,
    LoosePath,
    Hyperstar,
    PowerHypertree,
    RandomHypertree,
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "single_edge" => Ok(GeneratorKind::SingleEdge),
            "loose_path" => Ok(GeneratorKind::LoosePath),
            "hyperstar" => Ok(GeneratorKind::Hyperstar),
            "power_hypertree" => Ok(GeneratorKind::PowerHypertree),
            "random_hypertree" => Ok(GeneratorKind::RandomHypertree),
            other => Err(Error::BadGenerator(format!("unknown kind {:?}", other))),
        }
    }
}

/// Single k-edge on vertices 0..k-1.
pub fn single_edge(k: usize) -> Result<Hypergraph, Error> {
    if k < 2 {
        return Err(Error::BadGenerator("k must be >= 2".into()));
    }
    Hypergraph::new(k, (0..k).collect(), vec![(0..k).collect()])
}

/// Loose path with m edges: edge i covers i(k-1) .. i(k-1)+k-1, so
/// consecutive edges share exactly one vertex.
pub fn loose_path(k: usize, m: usize) -> Result<Hypergraph, Error> {
    if k < 2 {
        return Err(Error::BadGenerator("k must be >= 2".into()));
    }
    let n = m * (k - 1) + 1;
    let edges = (0..m)
        .map(|i| (i * (k - 1)..i * (k - 1) + k).collect())
        .collect();
    Hypergraph::new(k, (0..n).collect(), edges)
}

/// Hyperstar with m edges all sharing the center vertex 0; edge i covers
/// 0 plus the fresh block 1+i(k-1) .. i(k-1)+k-1.
pub fn hyperstar(k: usize, m: usize) -> Result<Hypergraph, Error> {
    if k < 2 {
        return Err(Error::BadGenerator("k must be >= 2".into()));
    }
    if m == 0 {
        return Hypergraph::new(k, vec![0], vec![]);
    }
    let n = m * (k - 1) + 1;
    let edges = (0..m)
        .map(|i| {
            let mut e: Vec<usize> = vec![0];
            e.extend(1 + i * (k - 1)..1 + (i + 1) * (k - 1));
            e
        })
        .collect();
    Hypergraph::new(k, (0..n).collect(), edges)
}

/// k-power hypergraph of a base graph/hypergraph: appends k - base.k fresh
/// vertices (numbered from n upward, in edge order) to every edge.
pub fn power_hypertree(base: &Hypergraph, k: usize) -> Result<Hypergraph, Error> {
    if k < base.k() {
        return Err(Error::BadGenerator(format!(
            "target k {} smaller than base edge size {}",
            k,
            base.k()
        )));
    }
    let dense = base.densified();
    let mut next = dense.vertex_count();
    let extra = k - dense.k();
    let mut edges = Vec::with_capacity(dense.edge_count());
    for e in dense.edges() {
        let mut new_edge = e.clone();
        for _ in 0..extra {
            new_edge.push(next);
            next += 1;
        }
        edges.push(new_edge);
    }
    Hypergraph::new(k, (0..next).collect(), edges)
}

/// Random hypertree: grow m edges, each attached at a uniformly random
/// existing vertex, with k-1 fresh vertices. Deterministic given the seed.
pub fn random_hypertree(k: usize, m: usize, seed: u64) -> Result<Hypergraph, Error> {
    if k < 2 {
        return Err(Error::BadGenerator("k must be >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 1usize;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let attach = rng.gen_range(0..n);
        let mut e = vec![attach];
        e.extend(n..n + k - 1);
        n += k - 1;
        edges.push(e);
    }
    Hypergraph::new(k, (0..n).collect(), edges)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct HypergraphJson {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(k: usize, n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(k, (0..n).collect(), edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(h(3, 3, &[&[0, 1, 2]]).validate().is_ok());
        let bad = Hypergraph::new(3, (0..3).collect(), vec![vec![0, 1]]);
        assert!(matches!(bad, Err(Error::InvalidHypergraph(msg)) if msg.contains("edge size 2")));
        let dup = Hypergraph::new(3, (0..3).collect(), vec![vec![0, 1, 2], vec![2, 1, 0]]);
        assert!(matches!(dup, Err(Error::InvalidHypergraph(msg)) if msg.contains("duplicate")));
        let unk = Hypergraph::new(3, (0..2).collect(), vec![vec![0, 1, 5]]);
        assert!(matches!(unk, Err(Error::InvalidHypergraph(msg)) if msg.contains("unknown vertex 5")));
    }

    #[test]
    fn hypertree_recognition() {
        assert!(h(3, 3, &[&[0, 1, 2]]).is_hypertree());
        // two disjoint edges: disconnected
        assert!(!h(3, 6, &[&[0, 1, 2], &[3, 4, 5]]).is_hypertree());
        // cyclic-ish overlap: 5 vertices but count says 7 needed
        assert!(!h(3, 5, &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4]]).is_hypertree());
    }

    #[test]
    fn deletions() {
        let single = h(3, 3, &[&[0, 1, 2]]);
        let d = single.delete_vertex(0).unwrap();
        assert_eq!(d.vertices(), &[1, 2]);
        assert!(d.edges().is_empty());
        assert!(single.delete_vertex(9).is_err());

        let path = loose_path(3, 2).unwrap();
        let d = path.delete_vertex(2).unwrap();
        assert_eq!(d.vertices(), &[0, 1, 3, 4]);
        assert!(d.edges().is_empty());
        let d = path.delete_vertex(0).unwrap();
        assert_eq!(d.vertices(), &[1, 2, 3, 4]);
        assert_eq!(d.edges(), &[vec![2, 3, 4]]);

        // induced edge removal
        let e = single.remove_edge_induced(&[0, 1, 2]).unwrap();
        assert_eq!(e.vertex_count(), 0);
        let e = path.remove_edge_induced(&[0, 1, 2]).unwrap();
        assert_eq!(e.vertices(), &[3, 4]);
        assert!(e.edges().is_empty());
        let star = hyperstar(3, 3).unwrap();
        let e = star.remove_edge_induced(&[0, 1, 2]).unwrap();
        assert_eq!(e.vertices(), &[3, 4, 5, 6]);
        assert!(e.edges().is_empty());

        // weak edge removal keeps the vertex set
        let w = single.remove_edge_weak(&[0, 1, 2]).unwrap();
        assert_eq!(w.vertex_count(), 3);
        assert!(w.edges().is_empty());
        let w = path.remove_edge_weak(&[0, 1, 2]).unwrap();
        assert_eq!(w.vertex_count(), 5);
        assert_eq!(w.edges(), &[vec![2, 3, 4]]);
        assert!(path.remove_edge_weak(&[0, 1, 3]).is_err());
    }

    #[test]
    fn components() {
        let two = h(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.vertex_count() == 3));
        assert_eq!(loose_path(3, 2).unwrap().connected_components().len(), 1);
        let centerless = loose_path(3, 2).unwrap().delete_vertex(2).unwrap();
        assert_eq!(centerless.connected_components().len(), 4);
    }

    #[test]
    fn subtree_enumeration() {
        let single = single_edge(3).unwrap();
        let cat = single.enumerate_induced_subtrees().unwrap();
        // 3 singletons + the full edge
        assert_eq!(cat.entries.len(), 4);

        // brute-force subset filter oracle
        let check = |t: &Hypergraph, expected_edge_subsets: usize| {
            let m = t.edge_count();
            let mut count = 0;
            for mask in 0u32..(1 << m) {
                let mut vset: BTreeSet<usize> = BTreeSet::new();
                for i in 0..m {
                    if mask & (1 << i) != 0 {
                        vset.extend(t.edges()[i].iter().copied());
                    }
                }
                if mask == 0 {
                    count += 1; // empty subset counted once
                    continue;
                }
                let sub = t.induced(&vset.iter().copied().collect::<Vec<_>>());
                if sub.is_connected() && sub.edge_count() == mask.count_ones() as usize {
                    count += 1;
                }
            }
            assert_eq!(count, expected_edge_subsets);
        };
        let path = loose_path(3, 2).unwrap();
        check(&path, 4); // {}, {e1}, {e2}, {e1,e2}
        let cat = path.enumerate_induced_subtrees().unwrap();
        // 5 singletons + 2 single-edge subsets + 1 full
        assert_eq!(cat.entries.len(), 8);

        let star = hyperstar(3, 3).unwrap();
        check(&star, 8); // all 2^3 subsets share the center
        let cat = star.enumerate_induced_subtrees().unwrap();
        assert_eq!(cat.entries.len(), 7 + 3 + 3 + 1);

        // loose path edge-subset count: m(m+1)/2 + 1 connected subsets
        for m in 1..=5 {
            let p = loose_path(3, m).unwrap();
            let cat = p.enumerate_induced_subtrees().unwrap();
            let edged = cat.entries.iter().filter(|e| e.subtree.edge_count() > 0).count();
            assert_eq!(edged, m * (m + 1) / 2);
        }
    }

    #[test]
    fn canonical_keys() {
        let path = loose_path(3, 2).unwrap();
        let map: BTreeMap<usize, usize> =
            [(0, 4), (1, 2), (2, 0), (3, 1), (4, 3)].into_iter().collect();
        let relabeled = path.relabeled(&map).unwrap();
        assert_eq!(path.canonical_key().unwrap(), relabeled.canonical_key().unwrap());

        let p3 = loose_path(3, 3).unwrap();
        let s3 = hyperstar(3, 3).unwrap();
        assert_ne!(p3.canonical_key().unwrap(), s3.canonical_key().unwrap());

        let with_isolated = Hypergraph::new(3, (0..6).collect(), path.edges().to_vec()).unwrap();
        assert_ne!(path.canonical_key().unwrap(), with_isolated.canonical_key().unwrap());
    }

    #[test]
    fn canonical_key_relabel_property() {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for seed in 0..20 {
            let t = random_hypertree(3, 4, seed).unwrap();
            let mut perm: Vec<usize> = (0..t.vertex_count()).collect();
            perm.shuffle(&mut rng);
            let map: BTreeMap<usize, usize> =
                t.vertices().iter().copied().zip(perm).collect();
            let r = t.relabeled(&map).unwrap();
            assert_eq!(t.canonical_key().unwrap(), r.canonical_key().unwrap());
        }
    }

    #[test]
    fn cut_vertex_examples() {
        assert!(single_edge(3).unwrap().cut_vertices().unwrap().is_empty());
        let star2 = hyperstar(3, 2).unwrap();
        assert_eq!(star2.cut_vertices().unwrap(), BTreeSet::from([0]));
        let path = loose_path(3, 2).unwrap();
        assert_eq!(path.cut_vertices().unwrap(), BTreeSet::from([2]));
        let two = h(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert!(two.cut_vertices().is_err());
    }

    #[test]
    fn cut_vertices_are_high_degree_vertices() {
        for seed in 0..20 {
            let t = random_hypertree(3, 5, seed).unwrap();
            let cuts = t.cut_vertices().unwrap();
            let high: BTreeSet<usize> = t
                .vertices()
                .iter()
                .copied()
                .filter(|&v| t.degree(v) >= 2)
                .collect();
            assert_eq!(cuts, high);
        }
    }

    #[test]
    fn generators() {
        let p = loose_path(3, 2).unwrap();
        assert_eq!(p.edges(), &[vec![0, 1, 2], vec![2, 3, 4]]);
        let s = hyperstar(3, 3).unwrap();
        assert_eq!(s.edges(), &[vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]);
        // power hypertree of the path graph P3 is the loose path with 2 edges
        let p3 = Hypergraph::new(2, vec![0, 1, 2], vec![vec![0, 1], vec![1, 2]]).unwrap();
        let pw = power_hypertree(&p3, 3).unwrap();
        assert!(pw.is_hypertree());
        assert_eq!(pw.canonical_key().unwrap(), loose_path(3, 2).unwrap().canonical_key().unwrap());
        // every generated hypertree satisfies the vertex-count identity
        for (k, m) in [(3, 1), (3, 4), (4, 3), (5, 2)] {
            for t in [loose_path(k, m).unwrap(), hyperstar(k, m).unwrap(), random_hypertree(k, m, 11).unwrap()] {
                assert!(t.is_hypertree());
                assert_eq!(t.vertex_count(), m * (k - 1) + 1);
            }
        }
    }

    #[test]
    fn delete_vertex_edge_count() {
        for seed in 0..10 {
            let t = random_hypertree(3, 5, seed).unwrap();
            for &v in t.vertices() {
                let d = t.delete_vertex(v).unwrap();
                assert!(d.validate().is_ok());
                assert_eq!(d.edge_count(), t.edge_count() - t.degree(v));
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let t = random_hypertree(4, 3, 5).unwrap();
        let j = t.to_json();
        let back = Hypergraph::from_json(&j).unwrap();
        assert_eq!(t, back);
    }
}
