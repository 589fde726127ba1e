//! Unmixed and Cohen–Macaulay tests for bipartite graphs and trees.

use crate::budget::Budget;
use crate::clutter::{bits, Clutter, Graph};
use crate::error::{precondition, Result};

/// All minimal vertex covers have the same size.
pub fn is_unmixed(c: &Clutter, budget: &Budget) -> Result<bool> {
    budget.check_search_vertices(c.nvars())?;
    Ok(c.is_unmixed())
}

/// Bipartitions (x_1..x_g, y_1..y_g) of the non-isolated vertices matched by
/// x_i y_i ∈ E. Each is handed to `accept` as the adjacency x_i ~ y_j.
fn matched_bipartitions(
    g: &Graph,
    budget: &Budget,
    mut accept: impl FnMut(&[Vec<bool>]) -> bool,
) -> Result<bool> {
    if g.is_multigraph() && g.loops() != 0 {
        return precondition("graph has loops");
    }
    if g.edges().is_empty() {
        return precondition("graph has no edges");
    }
    let comps: Vec<u64> = g.components().into_iter().filter(|c| c.count_ones() > 1).collect();
    let mut sides = Vec::with_capacity(comps.len());
    for &c in &comps {
        match g.two_colouring(c) {
            Some(one) => sides.push((one, c & !one)),
            None => return precondition("graph is not bipartite"),
        }
    }
    for flips in 0u64..1 << comps.len() {
        let (mut xs, mut ys) = (0u64, 0u64);
        for (k, &(a, b)) in sides.iter().enumerate() {
            let (a, b) = if flips >> k & 1 == 1 { (b, a) } else { (a, b) };
            xs |= a;
            ys |= b;
        }
        if xs.count_ones() != ys.count_ones() {
            continue;
        }
        let x: Vec<usize> = bits(xs).collect();
        let y: Vec<usize> = bits(ys).collect();
        let mut partner = Vec::with_capacity(x.len());
        if matchings(g, &x, &y, 0, &mut partner, budget, &mut accept)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn matchings(
    g: &Graph,
    x: &[usize],
    y: &[usize],
    used: u64,
    partner: &mut Vec<usize>,
    budget: &Budget,
    accept: &mut impl FnMut(&[Vec<bool>]) -> bool,
) -> Result<bool> {
    let i = partner.len();
    if i == x.len() {
        budget.charge_points(1)?;
        let adj: Vec<Vec<bool>> = (0..x.len())
            .map(|a| partner.iter().map(|&b| g.has_edge(x[a], y[b])).collect())
            .collect();
        return Ok(accept(&adj));
    }
    for j in 0..y.len() {
        if used >> j & 1 == 0 && g.has_edge(x[i], y[j]) {
            partner.push(j);
            let found = matchings(g, x, y, used | 1 << j, partner, budget, accept)?;
            partner.pop();
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// The combinatorial unmixedness test: some labelling has x_i y_i ∈ E and
/// x_i y_j, x_j y_k ∈ E ⇒ x_i y_k ∈ E for distinct i, j, k.
pub fn unmixed_bipartite_check(g: &Graph, budget: &Budget) -> Result<bool> {
    matched_bipartitions(g, budget, |adj| {
        let n = adj.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                j == i || !adj[i][j] || (0..n).all(|k| k == i || k == j || !adj[j][k] || adj[i][k])
            })
        })
    })
}

/// Some labelling with x_i y_i ∈ E, x_i y_j ∈ E ⇒ i ≤ j, and transitivity
/// along increasing indices. With the matching fixed, the relation i → j for
/// x_i y_j ∈ E must be a strict partial order; its linear extensions are the
/// admissible orderings.
pub fn cm_bipartite(g: &Graph, budget: &Budget) -> Result<bool> {
    matched_bipartitions(g, budget, |adj| {
        let n = adj.len();
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| j == i || !adj[i][j] || (0..n).all(|k| k == j || !adj[j][k] || (k != i && adj[i][k])))
        });
        // transitive and free of 2-cycles means acyclic
        transitive && (0..n).all(|i| (0..n).all(|j| i == j || !(adj[i][j] && adj[j][i])))
    })
}

/// A tree is CM iff it is a whisker graph G₀ ∪ W(Y) over a tree G₀.
pub fn cm_tree(g: &Graph) -> Result<bool> {
    if !g.is_tree() {
        return precondition("graph is not a tree");
    }
    let s = g.nvars();
    if s == 1 {
        return precondition("graph has no edges");
    }
    if s == 2 {
        return Ok(true);
    }
    let leaves: u64 = (0..s).filter(|&v| g.degree(v) == 1).fold(0, |m, v| m | 1 << v);
    Ok(2 * leaves.count_ones() as usize == s
        && (0..s).all(|v| leaves >> v & 1 == 1 || (g.neighbors(v) & leaves).count_ones() == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn whiskered_path3() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn unmixed_examples() {
        let c4 = Graph::cycle(4);
        assert!(is_unmixed(&c4.clutter().unwrap(), &b()).unwrap());
        assert!(unmixed_bipartite_check(&c4, &b()).unwrap());
        assert!(!is_unmixed(&path(3).clutter().unwrap(), &b()).unwrap());
        assert!(!unmixed_bipartite_check(&path(3), &b()).unwrap());
        let w = whiskered_path3();
        assert!(is_unmixed(&w.clutter().unwrap(), &b()).unwrap());
        assert!(unmixed_bipartite_check(&w, &b()).unwrap());
    }

    #[test]
    fn cm_examples() {
        assert!(cm_bipartite(&path(2), &b()).unwrap());
        assert!(cm_tree(&path(2)).unwrap());
        assert!(!cm_bipartite(&Graph::cycle(4), &b()).unwrap());
        assert!(cm_bipartite(&whiskered_path3(), &b()).unwrap());
        assert!(cm_tree(&whiskered_path3()).unwrap());
        assert!(!cm_tree(&path(3)).unwrap());
        assert!(cm_tree(&path(4)).unwrap());
        assert!(!cm_tree(&path(5)).unwrap());
        assert!(cm_bipartite(&Graph::cycle(3), &b()).is_err());
    }

    #[test]
    fn trees_agree_on_small_paths_and_stars() {
        for n in 2..=8 {
            assert_eq!(cm_tree(&path(n)).unwrap(), cm_bipartite(&path(n), &b()).unwrap(), "P{n}");
        }
        for n in 3..=7 {
            let star = Graph::new(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
            assert!(!cm_tree(&star).unwrap());
            assert!(!cm_bipartite(&star, &b()).unwrap());
        }
    }
}
