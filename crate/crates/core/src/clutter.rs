//! Clutters and simple graphs on at most 64 vertices, with exact cover,
//! matching and minor computations on bit masks.

use std::collections::HashSet;

use crate::budget::Budget;
use crate::error::{precondition, Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Inclusion-minimal members, sorted by (size, mask).
pub(crate) fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|m| (m.count_ones(), *m));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for m in sets {
        if !kept.iter().any(|k| k & m == *k) {
            kept.push(m);
        }
    }
    kept
}

/// Minimal transversals of a family of non-empty sets (Berge's algorithm).
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut tr: Vec<u64> = vec![0];
    for &e in edges {
        let mut next = Vec::with_capacity(tr.len() * 2);
        for &t in &tr {
            if t & e != 0 {
                next.push(t);
            } else {
                next.extend(bits(e).map(|v| t | (1 << v)));
            }
        }
        tr = minimal_sets(next);
    }
    tr
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clutter {
    s: usize,
    edges: Vec<u64>,
}

impl Clutter {
    /// Edges are bit masks over 0..s; non-minimal edges are discarded.
    pub fn from_masks(s: usize, edges: Vec<u64>) -> Result<Self> {
        if s == 0 || s > 64 {
            return precondition("clutters need between 1 and 64 vertices");
        }
        if edges.is_empty() {
            return Err(Error::EmptyInput);
        }
        let full = if s == 64 { u64::MAX } else { (1u64 << s) - 1 };
        for &e in &edges {
            if e == 0 {
                return precondition("edges must be non-empty");
            }
            if e & !full != 0 {
                return precondition("edge mentions a vertex outside the vertex set");
            }
        }
        Ok(Clutter { s, edges: minimal_sets(edges) })
    }

    pub fn from_ideal(i: &MonomialIdeal) -> Result<Self> {
        if !i.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Clutter::from_masks(i.nvars(), i.generators().iter().map(|g| g.support_mask()).collect())
    }

    /// The clutter of supports of an arbitrary monomial ideal.
    pub fn of_supports(i: &MonomialIdeal) -> Result<Self> {
        Clutter::from_masks(i.nvars(), i.generators().iter().map(|g| g.support_mask()).collect())
    }

    pub fn nvars(&self) -> usize {
        self.s
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| bits(e).collect()).collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.edges
                .iter()
                .map(|&e| ExponentVector::from_mask(self.s, e))
                .collect(),
        )
        .expect("clutters are non-empty")
    }

    /// Every vertex lies in some edge (no zero row in the incidence matrix).
    pub fn covers_all_vertices(&self) -> bool {
        let all = self.edges.iter().fold(0, |a, e| a | e);
        all.count_ones() as usize == self.s
    }

    /// Minimal vertex covers, i.e. the edges of the blocker.
    pub fn minimal_covers(&self) -> Vec<u64> {
        minimal_transversals(&self.edges)
    }

    pub fn blocker(&self) -> Clutter {
        Clutter { s: self.s, edges: self.minimal_covers() }
    }

    /// α₀: size of a smallest vertex cover.
    pub fn covering_number(&self, budget: &Budget) -> Result<usize> {
        Ok(self.minimum_cover(budget)?.count_ones() as usize)
    }

    /// A smallest vertex cover; ties broken toward low vertex indices.
    pub fn minimum_cover(&self, budget: &Budget) -> Result<u64> {
        budget.check_search_vertices(self.s)?;
        let mut best = self.edges.iter().fold(0, |a, e| a | e);
        let mut best_size = best.count_ones();
        cover_search(&self.edges, 0, 0, &mut best, &mut best_size, budget)?;
        Ok(best)
    }

    /// β₁: largest family of pairwise disjoint edges.
    pub fn matching_number(&self, budget: &Budget) -> Result<usize> {
        Ok(self.maximum_matching(budget)?.len())
    }

    pub fn maximum_matching(&self, budget: &Budget) -> Result<Vec<u64>> {
        budget.check_search_vertices(self.s)?;
        let mut best = Vec::new();
        let mut cur = Vec::new();
        matching_search(&self.edges, 0, 0, &mut cur, &mut best, budget)?;
        Ok(best)
    }

    pub fn is_konig(&self, budget: &Budget) -> Result<bool> {
        Ok(self.covering_number(budget)? == self.matching_number(budget)?)
    }

    /// All minimal vertex covers have the same size.
    pub fn is_unmixed(&self) -> bool {
        let covers = self.minimal_covers();
        let k = covers[0].count_ones();
        covers.iter().all(|c| c.count_ones() == k)
    }

    /// Minor obtained by deleting `zeros` and contracting `ones`.
    pub fn minor(&self, zeros: u64, ones: u64) -> ClutterMinor {
        let mut out = Vec::new();
        for &e in &self.edges {
            if e & zeros != 0 {
                continue;
            }
            let f = e & !ones;
            if f == 0 {
                return ClutterMinor::Unit;
            }
            out.push(f);
        }
        if out.is_empty() {
            ClutterMinor::Zero
        } else {
            ClutterMinor::Proper(Clutter { s: self.s, edges: minimal_sets(out) })
        }
    }

    /// Packing property: every proper minor (the clutter included) is König.
    /// Returns the first failing assignment as (zeros, ones) masks.
    pub fn packing_violation(&self, budget: &Budget) -> Result<Option<(u64, u64)>> {
        budget.check_packing_vertices(self.s)?;
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        // Assignment digits: 0 leaves t_i free, 1 sets t_i = 0, 2 sets t_i = 1.
        let total = 3u64.pow(self.s as u32);
        for code in 0..total {
            let (mut zeros, mut ones, mut c) = (0u64, 0u64, code);
            for i in (0..self.s).rev() {
                match c % 3 {
                    1 => zeros |= 1 << i,
                    2 => ones |= 1 << i,
                    _ => {}
                }
                c /= 3;
            }
            if let ClutterMinor::Proper(m) = self.minor(zeros, ones) {
                if !seen.insert(m.edges.clone()) {
                    continue;
                }
                budget.charge_points(1)?;
                if !m.is_konig(budget)? {
                    return Ok(Some((zeros, ones)));
                }
            }
        }
        Ok(None)
    }

    pub fn has_packing_property(&self, budget: &Budget) -> Result<bool> {
        Ok(self.packing_violation(budget)?.is_none())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClutterMinor {
    Proper(Clutter),
    Unit,
    Zero,
}

fn cover_search(
    edges: &[u64],
    chosen: u64,
    start: usize,
    best: &mut u64,
    best_size: &mut u32,
    budget: &Budget,
) -> Result<()> {
    budget.charge_points(1)?;
    let mut idx = start;
    while idx < edges.len() && edges[idx] & chosen != 0 {
        idx += 1;
    }
    if idx == edges.len() {
        let c = chosen.count_ones();
        if c < *best_size || (c == *best_size && chosen < *best) {
            *best = chosen;
            *best_size = c;
        }
        return Ok(());
    }
    // Greedy disjoint uncovered edges give a lower bound on what remains.
    let mut used = chosen;
    let mut lb = 0;
    for &e in &edges[idx..] {
        if e & used == 0 {
            used |= e;
            lb += 1;
        }
    }
    if chosen.count_ones() + lb > *best_size {
        return Ok(());
    }
    for v in bits(edges[idx]) {
        cover_search(edges, chosen | (1 << v), idx + 1, best, best_size, budget)?;
    }
    Ok(())
}

fn matching_search(
    edges: &[u64],
    start: usize,
    used: u64,
    cur: &mut Vec<u64>,
    best: &mut Vec<u64>,
    budget: &Budget,
) -> Result<()> {
    budget.charge_points(1)?;
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    let free: Vec<usize> = (start..edges.len()).filter(|&i| edges[i] & used == 0).collect();
    if cur.len() + free.len() <= best.len() {
        return Ok(());
    }
    for (k, &i) in free.iter().enumerate() {
        if cur.len() + (free.len() - k) <= best.len() {
            break;
        }
        cur.push(edges[i]);
        matching_search(edges, i + 1, used | edges[i], cur, best, budget)?;
        cur.pop();
    }
    Ok(())
}

/// A simple graph on vertices 0..s; loops only when flagged as a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    s: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    loops: u64,
    multigraph: bool,
}

impl Graph {
    pub fn new(s: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::build(s, edges, false)
    }

    pub fn new_multigraph(s: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::build(s, edges, true)
    }

    fn build(s: usize, edges: &[(usize, usize)], multigraph: bool) -> Result<Self> {
        if s == 0 || s > 64 {
            return precondition("graphs need between 1 and 64 vertices");
        }
        let mut adj = vec![0u64; s];
        let mut loops = 0u64;
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= s || b >= s {
                return precondition(format!("edge ({a}, {b}) mentions a vertex outside 0..{s}"));
            }
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            if u == v {
                if !multigraph {
                    return precondition("loops are only accepted in multigraph mode");
                }
                if loops >> u & 1 == 1 {
                    return precondition(format!("repeated loop at vertex {u}"));
                }
                loops |= 1 << u;
            } else {
                if adj[u] >> v & 1 == 1 {
                    return precondition(format!("repeated edge ({u}, {v})"));
                }
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph { s, adj, edges: list, loops, multigraph })
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).expect("valid complete graph")
    }

    pub fn nvars(&self) -> usize {
        self.s
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    pub fn loops(&self) -> u64 {
        self.loops
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v] | (self.loops & (1 << v))
    }

    /// N_G(S): vertices adjacent to some vertex of S.
    pub fn neighborhood(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.neighbors(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops >> u & 1 == 1
        } else {
            self.adj[u] >> v & 1 == 1
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn all_vertices(&self) -> u64 {
        if self.s == 64 {
            u64::MAX
        } else {
            (1u64 << self.s) - 1
        }
    }

    /// Vertex sets of the connected components, in order of least vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.s {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let next = self.neighborhood(frontier) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-colouring of the vertices of `comp`, or None when an odd cycle
    /// (or loop) lives there. The returned mask is the side of the least vertex.
    pub fn two_colouring(&self, comp: u64) -> Option<u64> {
        if self.loops & comp != 0 {
            return None;
        }
        let first = comp.trailing_zeros() as usize;
        let mut colour = vec![u8::MAX; self.s];
        colour[first] = 0;
        let mut stack = vec![first];
        while let Some(v) = stack.pop() {
            for w in bits(self.adj[v]) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return None;
                }
            }
        }
        Some(bits(comp).filter(|&v| colour[v] == 0).fold(0, |m, v| m | (1 << v)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.components().into_iter().all(|c| self.two_colouring(c).is_some())
    }

    pub fn is_tree(&self) -> bool {
        self.loops == 0 && self.is_connected() && self.edges.len() + 1 == self.s
    }

    /// Graph induced on `mask`, relabelled to 0..|mask| in increasing order.
    pub fn induced_subgraph(&self, mask: u64) -> Result<Graph> {
        let verts: Vec<usize> = bits(mask).collect();
        let mut index = vec![usize::MAX; self.s];
        for (k, &v) in verts.iter().enumerate() {
            index[v] = k;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::build(verts.len(), &edges, self.multigraph)
    }

    /// The edge ideal; a loop at t_i contributes t_i².
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        let gens: Vec<ExponentVector> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let mut e = vec![0u32; self.s];
                e[u] += 1;
                e[v] += 1;
                ExponentVector::new(e).expect("non-empty")
            })
            .collect();
        if gens.is_empty() {
            return precondition("a graph without edges has the zero edge ideal");
        }
        MonomialIdeal::new(gens)
    }

    pub fn clutter(&self) -> Result<Clutter> {
        if self.loops != 0 {
            return precondition("loops have no squarefree clutter");
        }
        Clutter::from_masks(self.s, self.edges.iter().map(|&(u, v)| (1 << u) | (1 << v)).collect())
    }

    /// All maximal independent sets have the same size.
    pub fn is_well_covered(&self) -> Result<bool> {
        if self.edges.is_empty() {
            return Ok(true);
        }
        Ok(self.clutter()?.is_unmixed())
    }

    pub fn isolated_vertices(&self) -> u64 {
        (0..self.s)
            .filter(|&v| self.neighbors(v) == 0)
            .fold(0, |m, v| m | (1 << v))
    }
}

/// Free functions mirroring the operation names used in reports.
pub fn covering_number(c: &Clutter, budget: &Budget) -> Result<usize> {
    c.covering_number(budget)
}

pub fn matching_number(c: &Clutter, budget: &Budget) -> Result<usize> {
    c.matching_number(budget)
}

pub fn is_konig(c: &Clutter, budget: &Budget) -> Result<bool> {
    c.is_konig(budget)
}

pub fn has_packing_property(i: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    Clutter::from_ideal(i)?.has_packing_property(budget)
}
