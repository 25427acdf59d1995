//! Labeled simple graphs on `[n]`, closedness with respect to the
//! labeling, components, maximal cliques, interval facets and the
//! exhaustive enumerations the verification sweeps run over.
//!
//! Everything here is about the *labeled* object: relabeling a graph
//! changes its associated ideal, so enumeration never quotients by
//! isomorphism.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

const MAX_VERTICES: usize = 16;

/// A simple graph on vertices `1..=n` with the labeling intrinsic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledGraph {
    n: usize,
    /// adjacency bitmask per vertex, 0-based
    adj: Vec<u32>,
    /// sorted edge list, 1-based pairs (i, j) with i < j
    edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count",
                max: MAX_VERTICES,
                got: n,
            });
        }
        let mut adj = vec![0u32; n];
        let mut list = BTreeSet::new();
        for &(i, j) in edges {
            if i == j {
                return Err(Error::InvalidInput(format!("loop at vertex {i}")));
            }
            if i < 1 || j < 1 || i > n || j > n {
                return Err(Error::InvalidInput(format!(
                    "edge {{{i},{j}}} out of range 1..={n}"
                )));
            }
            let (a, b) = (i.min(j), i.max(j));
            if !list.insert((a, b)) {
                return Err(Error::InvalidInput(format!("duplicate edge {{{a},{b}}}")));
            }
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Ok(LabeledGraph {
            n,
            adj,
            edges: list.into_iter().collect(),
        })
    }

    /// The line graph `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        LabeledGraph::from_edges(n, &edges).expect("path is simple")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        LabeledGraph::from_edges(n, &edges).expect("complete graph is simple")
    }

    /// Graph whose edges are the union of interval cliques `[a, b]`.
    pub fn from_cliques(n: usize, cliques: &[(usize, usize)]) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for &(a, b) in cliques {
            if a < 1 || b > n || a > b {
                return Err(Error::InvalidInput(format!(
                    "clique interval [{a},{b}] out of range 1..={n}"
                )));
            }
            for i in a..=b {
                for j in (i + 1)..=b {
                    edges.insert((i, j));
                }
            }
        }
        let edges: Vec<_> = edges.into_iter().collect();
        LabeledGraph::from_edges(n, &edges)
    }

    /// Decode an edge bitmask in lexicographic edge order
    /// `(1,2) < (1,3) < ... < (1,n) < (2,3) < ...`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if mask & (1 << bit) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        LabeledGraph::from_edges(n, &edges).expect("mask edges are simple")
    }

    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut bit = 0;
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i - 1] & (1 << (j - 1)) != 0
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Closedness of the given labeling: whenever `{i,j}` and `{i,k}` are
    /// edges with `j`, `k` on the same side of `i`, `{j,k}` is an edge.
    pub fn is_closed_labeling(&self) -> bool {
        for i in 0..self.n {
            let upper = self.adj[i] & !((1u32 << (i + 1)) - 1);
            let lower = self.adj[i] & ((1u32 << i) - 1);
            for side in [upper, lower] {
                let mut rest = side;
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    // all other same-side neighbors must be adjacent to j
                    if (side & !(1 << j)) & !self.adj[j] != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components as vertex blocks, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut block = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                block.push(v + 1);
                let mut nbrs = self.adj[v];
                while nbrs != 0 {
                    let w = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Shortest path between two vertices (BFS), as a 1-based vertex
    /// sequence including both endpoints; `None` when disconnected.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let (s, t) = (from - 1, to - 1);
        let mut prev = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        prev[s] = s;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            let mut nbrs = self.adj[v];
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if prev[t] == usize::MAX {
            return None;
        }
        let mut path = vec![t + 1];
        let mut v = t;
        while v != s {
            v = prev[v];
            path.push(v + 1);
        }
        path.reverse();
        Some(path)
    }

    /// All maximal cliques via pivoting Bron-Kerbosch, each a sorted
    /// 1-based vertex list; deterministic output order. Isolated vertices
    /// appear as singleton cliques.
    pub fn maximal_cliques(&self) -> Result<Vec<Vec<usize>>> {
        if self.n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "maximal clique enumeration",
                max: MAX_VERTICES,
                got: self.n,
            });
        }
        let all: u32 = if self.n == 32 { u32::MAX } else { (1 << self.n) - 1 };
        let mut out = Vec::new();
        self.bron_kerbosch(0, all, 0, &mut out);
        let mut cliques: Vec<Vec<usize>> = out
            .into_iter()
            .map(|mask| {
                (0..self.n)
                    .filter(|v| mask & (1 << v) != 0)
                    .map(|v| v + 1)
                    .collect()
            })
            .collect();
        cliques.sort();
        Ok(cliques)
    }

    fn bron_kerbosch(&self, r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // pivot: vertex of p|x with most neighbors in p
        let mut pivot = usize::MAX;
        let mut best = -1i32;
        let mut cand = p | x;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let score = (p & self.adj[u]).count_ones() as i32;
            if score > best {
                best = score;
                pivot = u;
            }
        }
        let mut ext = p & !self.adj[pivot];
        while ext != 0 {
            let v = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let vbit = 1u32 << v;
            self.bron_kerbosch(r | vbit, p & self.adj[v], x & self.adj[v], out);
            p &= !vbit;
            x |= vbit;
        }
    }

    /// Relabel: vertex `v` becomes `perm[v-1]` (perm is a bijection of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> LabeledGraph {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(i, j)| (perm[i - 1], perm[j - 1]))
            .collect();
        LabeledGraph::from_edges(self.n, &edges).expect("relabeling preserves simplicity")
    }
}

/// Interval facets of the clique complex of a closed labeling, ordered by
/// left endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueIntervals {
    intervals: Vec<(usize, usize)>,
}

impl CliqueIntervals {
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Maximal cliques of a closed labeling expressed as intervals `[a_i, b_i]`
/// with `a_1 < a_2 < ...`.
///
/// Fails with `NotClosed` when the labeling is not closed, and with
/// `NonIntervalCliques` when it is closed but some maximal clique is not a
/// contiguous interval (possible only when components interleave; for
/// connected closed graphs the intervals always exist).
pub fn clique_intervals(g: &LabeledGraph) -> Result<CliqueIntervals> {
    if !g.is_closed_labeling() {
        return Err(Error::NotClosed);
    }
    let cliques = g.maximal_cliques()?;
    let mut intervals = Vec::with_capacity(cliques.len());
    for c in &cliques {
        let a = *c.first().expect("cliques are nonempty");
        let b = *c.last().expect("cliques are nonempty");
        if c.len() != b - a + 1 {
            return Err(Error::NonIntervalCliques);
        }
        intervals.push((a, b));
    }
    intervals.sort_unstable();
    // maximality forces strictly increasing endpoints on both sides
    for w in intervals.windows(2) {
        debug_assert!(w[0].0 < w[1].0 && w[0].1 < w[1].1);
    }
    Ok(CliqueIntervals { intervals })
}

/// Search for a permutation of the labels making the graph closed.
/// Exhaustive over assignments with prefix pruning; `None` when no
/// labeling works.
pub fn find_closed_labeling(g: &LabeledGraph) -> Result<Option<Vec<usize>>> {
    let n = g.num_vertices();
    if n > 8 {
        return Err(Error::SizeLimit {
            what: "closed labeling search",
            max: 8,
            got: n,
        });
    }
    // assign[new_label - 1] = original vertex; prune as soon as the
    // closedness condition fails among already-assigned labels
    let mut assign: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    if search_labeling(g, &mut assign, &mut used) {
        // perm maps original vertex -> new label
        let mut perm = vec![0usize; n];
        for (new_label, &orig) in assign.iter().enumerate() {
            perm[orig - 1] = new_label + 1;
        }
        return Ok(Some(perm));
    }
    Ok(None)
}

fn search_labeling(g: &LabeledGraph, assign: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let n = g.num_vertices();
    if assign.len() == n {
        return true;
    }
    for cand in 1..=n {
        if used[cand] {
            continue;
        }
        assign.push(cand);
        used[cand] = true;
        if prefix_closed(g, assign) && search_labeling(g, assign, used) {
            return true;
        }
        used[cand] = false;
        assign.pop();
    }
    false
}

/// Closedness restricted to the assigned prefix of new labels. Only the
/// constraints whose three vertices are all assigned can be decided; a
/// violated one can never be repaired by later assignments.
fn prefix_closed(g: &LabeledGraph, assign: &[usize]) -> bool {
    let m = assign.len();
    for i in 0..m {
        for j in 0..m {
            for k in (j + 1)..m {
                if i == j || i == k {
                    continue;
                }
                let same_side = (j > i && k > i) || (j < i && k < i);
                if !same_side {
                    continue;
                }
                if g.has_edge(assign[i], assign[j])
                    && g.has_edge(assign[i], assign[k])
                    && !g.has_edge(assign[j], assign[k])
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Parse the graph text format: a `n <count>` line followed by
/// `e <i> <j>` lines, `#` comments, blank lines allowed. The one-line
/// shorthand `cliques [a1,b1] [a2,b2] ...` builds the union of interval
/// cliques instead (vertex count defaults to the largest right endpoint).
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cliques: Option<Vec<(usize, usize)>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().expect("nonempty line");
        let err = |msg: String| Error::Parse { line: line_no, msg };
        match head {
            "n" => {
                let count: usize = tokens
                    .next()
                    .ok_or_else(|| err("expected a vertex count after 'n'".into()))?
                    .parse()
                    .map_err(|_| err("vertex count must be a positive integer".into()))?;
                if count == 0 || count > MAX_VERTICES {
                    return Err(err(format!("vertex count must be in 1..={MAX_VERTICES}")));
                }
                if n.replace(count).is_some() {
                    return Err(err("duplicate 'n' line".into()));
                }
            }
            "e" => {
                let n = n.ok_or_else(|| err("'e' line before the 'n' line".into()))?;
                let mut next_vertex = || -> Result<usize> {
                    tokens
                        .next()
                        .ok_or_else(|| Error::Parse {
                            line: line_no,
                            msg: "expected two vertices after 'e'".into(),
                        })?
                        .parse()
                        .map_err(|_| Error::Parse {
                            line: line_no,
                            msg: "vertices must be integers".into(),
                        })
                };
                let i = next_vertex()?;
                let j = next_vertex()?;
                if i == j {
                    return Err(err(format!("loop at vertex {i} is not allowed")));
                }
                if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                    return Err(err(format!("edge {{{i},{j}}} out of range 1..={n}")));
                }
                let e = (i.min(j), i.max(j));
                if edges.contains(&e) {
                    return Err(err(format!("duplicate edge {{{},{}}}", e.0, e.1)));
                }
                edges.push(e);
            }
            "cliques" => {
                let rest: String = line["cliques".len()..].to_string();
                cliques = Some(parse_clique_list(&rest).map_err(err)?);
            }
            other => {
                return Err(err(format!("unknown directive {other:?}")));
            }
        }
    }

    if let Some(cliques) = cliques {
        if !edges.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "'cliques' shorthand cannot be mixed with 'e' lines".into(),
            });
        }
        let max_b = cliques.iter().map(|&(_, b)| b).max().unwrap_or(1);
        let n = n.unwrap_or(max_b).max(max_b);
        return LabeledGraph::from_cliques(n, &cliques);
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        msg: "missing 'n' line".into(),
    })?;
    LabeledGraph::from_edges(n, &edges)
}

/// Parse a bracket list like `[1,4] [3,5] [4,6]`.
pub fn parse_clique_list(text: &str) -> std::result::Result<Vec<(usize, usize)>, String> {
    let mut out = Vec::new();
    let body = text.trim();
    if body.is_empty() {
        return Err("expected at least one interval [a,b]".into());
    }
    for chunk in body.split_inclusive(']') {
        let chunk = chunk.trim().trim_start_matches(',').trim();
        if chunk.is_empty() {
            continue;
        }
        let inner = chunk
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| format!("malformed interval {chunk:?}, expected [a,b]"))?;
        let mut parts = inner.split(',');
        let a: usize = parts
            .next()
            .ok_or_else(|| "empty interval".to_string())?
            .trim()
            .parse()
            .map_err(|_| format!("bad left endpoint in {chunk:?}"))?;
        let b: usize = parts
            .next()
            .ok_or_else(|| format!("missing right endpoint in {chunk:?}"))?
            .trim()
            .parse()
            .map_err(|_| format!("bad right endpoint in {chunk:?}"))?;
        if parts.next().is_some() {
            return Err(format!("too many components in {chunk:?}"));
        }
        if a > b {
            return Err(format!("interval {chunk:?} has a > b"));
        }
        out.push((a, b));
    }
    Ok(out)
}

/// Filters for graph enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFilter {
    All,
    Connected,
    Closed,
    ConnectedClosed,
}

impl GraphFilter {
    pub fn accepts(&self, g: &LabeledGraph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::Connected => g.is_connected(),
            GraphFilter::Closed => g.is_closed_labeling(),
            GraphFilter::ConnectedClosed => g.is_closed_labeling() && g.is_connected(),
        }
    }

    fn needs_closed(&self) -> bool {
        matches!(self, GraphFilter::Closed | GraphFilter::ConnectedClosed)
    }
}

/// Every labeled graph on `[n]` passing the filter, each exactly once, in
/// edge-bitmask order. Budget: `n <= 7` in general, `n <= 8` for the
/// closed filters (those are enumerated directly instead of scanning all
/// `2^C(n,2)` masks).
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<LabeledGraph>> {
    if filter.needs_closed() {
        if n > 8 {
            return Err(Error::SizeLimit {
                what: "closed graph enumeration",
                max: 8,
                got: n,
            });
        }
        let mut masks = enumerate_closed_masks(n);
        masks.sort_unstable();
        let graphs = masks
            .into_iter()
            .map(|m| LabeledGraph::from_mask(n, m))
            .filter(|g| filter.accepts(g))
            .collect();
        return Ok(graphs);
    }
    if n > 7 {
        return Err(Error::SizeLimit {
            what: "graph enumeration",
            max: 7,
            got: n,
        });
    }
    let bits = n * (n - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << bits) {
        let g = LabeledGraph::from_mask(n, mask);
        if filter.accepts(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Enumerate closed labelings without scanning all edge subsets: choose
/// upper neighborhoods vertex by vertex from the top label down. A set of
/// upper neighbors is admissible when it is a clique among the already
/// decided vertices and it absorbs the previously assigned lower
/// neighbors of each of its members.
fn enumerate_closed_masks(n: usize) -> Vec<u64> {
    let mut adj = vec![0u32; n + 1]; // 1-based
    let mut out = Vec::new();
    choose_upper(n, n.saturating_sub(1), &mut adj, &mut out);
    out
}

fn choose_upper(n: usize, i: usize, adj: &mut Vec<u32>, out: &mut Vec<u64>) {
    if i == 0 {
        out.push(mask_of_adj(n, adj));
        return;
    }
    let upper_candidates: Vec<usize> = ((i + 1)..=n).collect();
    let m = upper_candidates.len();
    'subset: for subset in 0u32..(1 << m) {
        let chosen: Vec<usize> = (0..m)
            .filter(|b| subset & (1 << b) != 0)
            .map(|b| upper_candidates[b])
            .collect();
        // chosen must be a clique in the decided part
        for (a_idx, &a) in chosen.iter().enumerate() {
            for &b in &chosen[a_idx + 1..] {
                if adj[a] & (1 << (b - 1)) == 0 {
                    continue 'subset;
                }
            }
        }
        // each chosen j's existing lower neighbors (> i) must be chosen too
        let chosen_mask: u32 = chosen.iter().fold(0, |acc, &v| acc | (1 << (v - 1)));
        for &j in &chosen {
            let lower_of_j = adj[j] & ((1u32 << (j - 1)) - 1) & !((1u32 << i) - 1);
            if lower_of_j & !chosen_mask != 0 {
                continue 'subset;
            }
        }
        for &j in &chosen {
            adj[i] |= 1 << (j - 1);
            adj[j] |= 1 << (i - 1);
        }
        choose_upper(n, i - 1, adj, out);
        for &j in &chosen {
            adj[i] &= !(1 << (j - 1));
            adj[j] &= !(1 << (i - 1));
        }
    }
}

fn mask_of_adj(n: usize, adj: &[u32]) -> u64 {
    let mut mask = 0u64;
    let mut bit = 0;
    for (i, &row) in adj.iter().enumerate().take(n + 1).skip(1) {
        for j in (i + 1)..=n {
            if row & (1 << (j - 1)) != 0 {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_star_a() -> LabeledGraph {
        // the labeling with dimension 3 in the ideal pipeline
        LabeledGraph::from_edges(6, &[(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]).unwrap()
    }

    #[test]
    fn closedness_examples() {
        assert!(LabeledGraph::path(5).is_closed_labeling());
        assert!(LabeledGraph::complete(6).is_closed_labeling());
        // vertex 2 has upper neighbors 3 and 4 without the edge {3,4}
        assert!(!two_star_a().is_closed_labeling());
        // disjoint edges are vacuously closed, even interleaved ones
        assert!(LabeledGraph::from_edges(4, &[(1, 3), (2, 4)])
            .unwrap()
            .is_closed_labeling());
    }

    #[test]
    fn component_blocks() {
        assert_eq!(LabeledGraph::path(4).connected_components().len(), 1);
        let empty = LabeledGraph::from_edges(5, &[]).unwrap();
        assert_eq!(empty.connected_components().len(), 5);
        let two_triangles =
            LabeledGraph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
                .unwrap();
        assert_eq!(
            two_triangles.connected_components(),
            vec![vec![1, 2, 3], vec![4, 5, 6]]
        );
    }

    #[test]
    fn maximal_cliques_examples() {
        assert_eq!(
            LabeledGraph::complete(5).maximal_cliques().unwrap(),
            vec![vec![1, 2, 3, 4, 5]]
        );
        assert_eq!(
            LabeledGraph::path(4).maximal_cliques().unwrap(),
            vec![vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        // three overlapping interval cliques on six vertices
        let g = LabeledGraph::from_cliques(6, &[(1, 4), (3, 5), (4, 6)]).unwrap();
        assert_eq!(
            g.maximal_cliques().unwrap(),
            vec![vec![1, 2, 3, 4], vec![3, 4, 5], vec![4, 5, 6]]
        );
    }

    #[test]
    fn interval_facets() {
        let g = LabeledGraph::from_cliques(6, &[(1, 4), (3, 5), (4, 6)]).unwrap();
        let ci = clique_intervals(&g).unwrap();
        assert_eq!(ci.intervals(), &[(1, 4), (3, 5), (4, 6)]);
        assert_eq!(
            clique_intervals(&LabeledGraph::complete(4)).unwrap().intervals(),
            &[(1, 4)]
        );
        let line = clique_intervals(&LabeledGraph::path(4)).unwrap();
        assert_eq!(line.intervals(), &[(1, 2), (2, 3), (3, 4)]);
        assert!(matches!(
            clique_intervals(&two_star_a()),
            Err(Error::NotClosed)
        ));
        // closed labeling whose component {1,3} is not an interval
        let skew = LabeledGraph::from_edges(3, &[(1, 3)]).unwrap();
        assert!(matches!(
            clique_intervals(&skew),
            Err(Error::NonIntervalCliques)
        ));
    }

    #[test]
    fn coverage_of_interval_facets() {
        // the interval edge sets cover E(G) exactly, and each interval is a
        // maximal clique
        for g in enumerate_graphs(6, GraphFilter::ConnectedClosed).unwrap() {
            let ci = clique_intervals(&g).unwrap();
            let rebuilt = LabeledGraph::from_cliques(6, ci.intervals()).unwrap();
            assert_eq!(rebuilt.edges(), g.edges());
            let (a1, _) = ci.intervals()[0];
            let (_, br) = *ci.intervals().last().unwrap();
            assert_eq!((a1, br), (1, 6));
            for w in ci.intervals().windows(2) {
                assert!(w[1].0 <= w[0].1, "consecutive intervals must overlap");
            }
        }
    }

    #[test]
    fn closed_labeling_search() {
        let k4 = LabeledGraph::complete(4);
        assert_eq!(find_closed_labeling(&k4).unwrap(), Some(vec![1, 2, 3, 4]));
        // the two-star graph contains a claw, so no labeling is closed
        assert_eq!(find_closed_labeling(&two_star_a()).unwrap(), None);
        // scrambled path admits a closed relabeling
        let scrambled = LabeledGraph::from_edges(5, &[(3, 5), (5, 1), (1, 4), (4, 2)]).unwrap();
        let perm = find_closed_labeling(&scrambled).unwrap().expect("path is closed");
        assert!(scrambled.relabel(&perm).is_closed_labeling());
    }

    #[test]
    fn search_matches_unpruned_reference() {
        // soundness + completeness of the pruned search on all graphs on [4]
        fn any_closed_relabeling(g: &LabeledGraph) -> bool {
            let n = g.num_vertices();
            let mut perm: Vec<usize> = (1..=n).collect();
            // Heap's algorithm, checking every permutation
            fn heaps(k: usize, perm: &mut Vec<usize>, g: &LabeledGraph, found: &mut bool) {
                if *found {
                    return;
                }
                if k == 1 {
                    if g.relabel(perm).is_closed_labeling() {
                        *found = true;
                    }
                    return;
                }
                for i in 0..k {
                    heaps(k - 1, perm, g, found);
                    if k.is_multiple_of(2) {
                        perm.swap(i, k - 1);
                    } else {
                        perm.swap(0, k - 1);
                    }
                }
            }
            let mut found = false;
            heaps(n, &mut perm, g, &mut found);
            found
        }
        for g in enumerate_graphs(4, GraphFilter::All).unwrap() {
            let pruned = find_closed_labeling(&g).unwrap();
            assert_eq!(pruned.is_some(), any_closed_relabeling(&g), "graph {:?}", g.edges());
            if let Some(perm) = pruned {
                assert!(g.relabel(&perm).is_closed_labeling());
            }
        }
        // deterministic samples at n = 5 and 6 against the same reference
        for (n, count) in [(5usize, 40u64), (6, 16)] {
            let bits = (n * (n - 1) / 2) as u64;
            for i in 0..count {
                let mask = i * (1 << bits) / count;
                let g = LabeledGraph::from_mask(n, mask);
                let pruned = find_closed_labeling(&g).unwrap();
                assert_eq!(
                    pruned.is_some(),
                    any_closed_relabeling(&g),
                    "n={n} graph {:?}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(2, GraphFilter::All).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(3, GraphFilter::All).unwrap().len(), 8);
        assert_eq!(enumerate_graphs(4, GraphFilter::All).unwrap().len(), 64);
        // closed graphs on [3]: all but the two single-violation graphs
        assert_eq!(enumerate_graphs(3, GraphFilter::Closed).unwrap().len(), 6);
        let cc3 = enumerate_graphs(3, GraphFilter::ConnectedClosed).unwrap();
        assert_eq!(cc3.len(), 2);
        assert!(cc3.iter().any(|g| g.edges() == LabeledGraph::path(3).edges()));
        assert!(cc3.iter().any(|g| g.is_complete()));
        assert!(enumerate_graphs(9, GraphFilter::Closed).is_err());
        assert!(enumerate_graphs(8, GraphFilter::All).is_err());
    }

    #[test]
    fn closed_enumeration_agrees_with_mask_scan() {
        for n in 1..=5 {
            let direct = enumerate_graphs(n, GraphFilter::Closed).unwrap();
            let bits = n * (n - 1) / 2;
            let scanned: Vec<LabeledGraph> = (0u64..(1 << bits))
                .map(|m| LabeledGraph::from_mask(n, m))
                .filter(|g| g.is_closed_labeling())
                .collect();
            assert_eq!(direct, scanned, "n = {n}");
        }
        // connected closed graphs are counted by the Catalan numbers
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=8 {
            let count = enumerate_graphs(n, GraphFilter::ConnectedClosed)
                .unwrap()
                .len();
            assert_eq!(count, catalan[n - 1], "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(LabeledGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(LabeledGraph::from_edges(3, &[(1, 4)]).is_err());
        assert!(LabeledGraph::from_edges(3, &[(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn parse_graph_formats() {
        let p3 = parse_graph("n 3\ne 1 2\ne 2 3").unwrap();
        assert_eq!(p3.edges(), LabeledGraph::path(3).edges());
        // comments and blank lines
        let g = parse_graph("# a path\nn 3\n\ne 1 2  # first edge\ne 2 3\n").unwrap();
        assert_eq!(g.edges(), p3.edges());
        // clique shorthand
        let g = parse_graph("cliques [1,4] [3,5] [4,6]").unwrap();
        assert_eq!(
            g.edges(),
            LabeledGraph::from_cliques(6, &[(1, 4), (3, 5), (4, 6)])
                .unwrap()
                .edges()
        );
        // loops, duplicates, range and syntax errors carry line numbers
        assert!(matches!(
            parse_graph("n 3\ne 1 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("n 3\ne 1 2\ne 2 1"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("n 3\ne 1 4"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("n 3\nedge 1 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_graph("e 1 2").is_err());
        assert!(parse_graph("cliques [4,1]").is_err());
    }
}
