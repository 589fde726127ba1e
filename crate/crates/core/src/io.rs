//! Text formats for ideals, graphs and point sets.
//!
//! Blank lines and anything after `#` are ignored. Parse failures carry the
//! 1-based line and column of the offending token.

use crate::clutter::Graph;
use crate::codes::PointSetOverFq;
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Non-empty lines as token lists, comments stripped.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(st)) => {
                    let column = body[..st].chars().count() + 1;
                    toks.push(Token { line: k + 1, column, text: &body[st..pos] });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

fn number<T: std::str::FromStr>(t: &Token<'_>, what: &str) -> Result<T> {
    t.text
        .parse()
        .map_err(|_| parse_error(t.line, t.column, format!("expected {what}, found {:?}", t.text)))
}

/// One generator per line as space-separated exponents.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let rows = lines(text);
    let Some(first) = rows.first() else {
        return Err(parse_error(1, 1, "no generators"));
    };
    let s = first.len();
    let mut gens = Vec::with_capacity(rows.len());
    for row in &rows {
        if row.len() != s {
            let t = row.get(s).unwrap_or(&row[row.len() - 1]);
            return Err(parse_error(
                t.line,
                t.column,
                format!("{} exponents where the first generator has {s}", row.len()),
            ));
        }
        let v = row.iter().map(|t| number::<u32>(t, "an exponent")).collect::<Result<Vec<_>>>()?;
        if v.iter().all(|&e| e == 0) {
            return Err(parse_error(row[0].line, row[0].column, "the generator 1 gives the unit ideal"));
        }
        gens.push(ExponentVector::new(v)?);
    }
    MonomialIdeal::new(gens)
}

/// First line s, then one edge per line as two 1-based vertices. A repeated
/// vertex is a loop and is accepted only when `multigraph` is set.
pub fn parse_graph(text: &str, multigraph: bool) -> Result<Graph> {
    let rows = lines(text);
    let Some(head) = rows.first() else {
        return Err(parse_error(1, 1, "missing vertex count"));
    };
    if head.len() != 1 {
        return Err(parse_error(head[1].line, head[1].column, "the first line holds only s"));
    }
    let s: usize = number(&head[0], "the vertex count")?;
    if s == 0 || s > 64 {
        return Err(parse_error(head[0].line, head[0].column, "s must lie in 1..=64"));
    }
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for row in &rows[1..] {
        if row.len() != 2 {
            let t = row.get(2).unwrap_or(&row[0]);
            return Err(parse_error(t.line, t.column, "an edge is two vertex indices"));
        }
        let mut ends = [0usize; 2];
        for (e, t) in ends.iter_mut().zip(row) {
            let v: usize = number(t, "a vertex index")?;
            if v == 0 || v > s {
                return Err(parse_error(t.line, t.column, format!("vertex {v} outside 1..={s}")));
            }
            *e = v - 1;
        }
        if ends[0] == ends[1] && !multigraph {
            return Err(parse_error(row[1].line, row[1].column, "loop outside multigraph mode"));
        }
        if !seen.insert((ends[0].min(ends[1]), ends[0].max(ends[1]))) {
            return Err(parse_error(row[0].line, row[0].column, "repeated edge"));
        }
        edges.push((ends[0], ends[1]));
    }
    if multigraph {
        Graph::new_multigraph(s, &edges)
    } else {
        Graph::new(s, &edges)
    }
}

/// First line "q s", then one point per line with coordinates in 0..q.
pub fn parse_point_set(text: &str) -> Result<PointSetOverFq> {
    let rows = lines(text);
    let Some(head) = rows.first() else {
        return Err(parse_error(1, 1, "missing \"q s\" header"));
    };
    if head.len() != 2 {
        let t = head.get(2).unwrap_or(&head[0]);
        return Err(parse_error(t.line, t.column, "the header is \"q s\""));
    }
    let q: u8 = number(&head[0], "the field size")?;
    if !matches!(q, 2 | 3 | 4 | 5 | 7 | 8 | 9) {
        return Err(parse_error(head[0].line, head[0].column, format!("q = {q} is not a prime power up to 9")));
    }
    let s: usize = number(&head[1], "the number of coordinates")?;
    if s == 0 {
        return Err(parse_error(head[1].line, head[1].column, "s must be positive"));
    }
    let mut points = Vec::new();
    for row in &rows[1..] {
        if row.len() != s {
            let t = row.get(s).unwrap_or(&row[row.len() - 1]);
            return Err(parse_error(t.line, t.column, format!("{} coordinates, expected {s}", row.len())));
        }
        let mut p = Vec::with_capacity(s);
        for t in row {
            let c: u8 = number(t, "a coordinate")?;
            if c >= q {
                return Err(parse_error(t.line, t.column, format!("coordinate {c} not in 0..{q}")));
            }
            p.push(c);
        }
        if p.iter().all(|&c| c == 0) {
            return Err(parse_error(row[0].line, row[0].column, "the zero vector is not a projective point"));
        }
        points.push(p);
    }
    PointSetOverFq::new(q, s, points)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.nvars());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// The normalized points, in input order.
pub fn point_set_to_text(x: &PointSetOverFq) -> String {
    let mut out = format!("{} {}\n", x.order(), x.nvars());
    for p in x.points() {
        let row: Vec<String> = p.iter().map(|c| c.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(e: Error) -> (usize, usize) {
        match e {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn ideals_round_trip() {
        let i = parse_ideal("# C4\n1 1 0 0\n0 1 1 0\n\n0 0 1 1\n1 0 0 1  # last\n").unwrap();
        assert_eq!(i.len(), 4);
        assert_eq!(parse_ideal(&i.to_text()).unwrap(), i);
    }

    #[test]
    fn ideal_errors_have_positions() {
        assert_eq!(pos(parse_ideal("1 1\n1 x\n").unwrap_err()), (2, 3));
        assert_eq!(pos(parse_ideal("1 1\n  1 0 1\n").unwrap_err()), (2, 7));
        assert_eq!(pos(parse_ideal("0 0\n").unwrap_err()), (1, 1));
        assert_eq!(pos(parse_ideal("\n# nothing\n").unwrap_err()), (1, 1));
        assert_eq!(pos(parse_ideal("1 -1\n").unwrap_err()), (1, 3));
    }

    #[test]
    fn graphs() {
        let g = parse_graph("4\n1 2\n2 3\n3 4\n4 1\n", false).unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(parse_graph(&graph_to_text(&g), false).unwrap(), g);
        assert_eq!(pos(parse_graph("3\n1 1\n", false).unwrap_err()), (2, 3));
        assert!(parse_graph("3\n1 1\n1 2\n", true).unwrap().loops() == 1);
        assert_eq!(pos(parse_graph("3\n1 4\n", false).unwrap_err()), (2, 3));
        assert_eq!(pos(parse_graph("3\n1 2\n2 1\n", false).unwrap_err()), (3, 1));
        assert_eq!(pos(parse_graph("3 1\n", false).unwrap_err()), (1, 3));
    }

    #[test]
    fn point_sets() {
        let x = parse_point_set("3 2\n2 2\n0 1\n1 2\n").unwrap();
        assert_eq!(x.points(), &[vec![1, 1], vec![0, 1], vec![1, 2]]);
        assert_eq!(parse_point_set(&point_set_to_text(&x)).unwrap().points(), x.points());
        assert_eq!(pos(parse_point_set("3 2\n1 3\n").unwrap_err()), (2, 3));
        assert_eq!(pos(parse_point_set("6 2\n1 0\n").unwrap_err()), (1, 1));
        assert_eq!(pos(parse_point_set("2 2\n0 0\n").unwrap_err()), (2, 1));
        assert!(matches!(parse_point_set("2 2\n1 1\n"), Err(Error::Precondition(_))));
    }
}
