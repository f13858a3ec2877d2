//! Line-oriented text formats for coverings, graphs, incidence matrices and
//! circuit families. `#` starts a comment; blank lines are ignored. Errors
//! carry 1-based line numbers.
//!
//! ```text
//! universe: a b c d        vertices: a b c d       ground: 1 2 3
//! block: a b               edge a b                circuit: 1 2 3
//! block: c d               edge c d
//! ```
//!
//! Incidence matrices are written as a `<rows> <cols>` header, one line of
//! space-separated 0/1 digits per vertex, and a trailing `labels:` line.

use std::fmt::Write as _;

use crate::covering::{describe_violations, validate_covering, Covering, CoveringValidation, SetFamily};
use crate::error::Error;
use crate::graph::{Graph, IncidenceMatrix};
use crate::matroid::CircuitFamily;
use crate::set::{Subset, Universe};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Splits `key: rest`, accepting `key:rest` as well.
fn keyed<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.strip_prefix(key)?.trim_start().strip_prefix(':').map(str::trim)
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<(usize, Universe), Error> {
    let (no, line) = lines.next().ok_or_else(|| parse_error(1, format!("missing `{key}:` line")))?;
    let rest = keyed(line, key).ok_or_else(|| parse_error(no, format!("expected `{key}: <label> ...`")))?;
    let universe = Universe::new(rest.split_whitespace()).map_err(|e| parse_error(no, e.to_string()))?;
    Ok((no, universe))
}

fn labels_to_subset(universe: &Universe, labels: &str, line: usize) -> Result<Subset, Error> {
    let labels: Vec<&str> = labels.split_whitespace().collect();
    universe.subset(&labels).map_err(|e| parse_error(line, e.to_string()))
}

pub fn parse_family(text: &str) -> Result<SetFamily, Error> {
    let mut lines = content_lines(text);
    let (no, universe) = header(&mut lines, "universe")?;
    if universe.is_empty() {
        return Err(parse_error(no, "universe is empty"));
    }
    let mut blocks = Vec::new();
    for (no, line) in lines {
        let rest = keyed(line, "block").ok_or_else(|| parse_error(no, "expected `block: <label> ...`"))?;
        blocks.push(labels_to_subset(&universe, rest, no)?);
    }
    SetFamily::new(universe, blocks)
}

/// Parses a family and requires it to be a covering.
pub fn parse_covering(text: &str) -> Result<Covering, Error> {
    let family = parse_family(text)?;
    let universe = family.universe().clone();
    match validate_covering(family) {
        CoveringValidation::Ok(c) => Ok(c),
        CoveringValidation::Violations(v) => Err(Error::NotACovering(describe_violations(&universe, &v))),
    }
}

pub fn write_covering(c: &Covering) -> String {
    let mut out = format!("universe: {}\n", c.universe());
    for block in c.blocks() {
        let labels: Vec<&str> = c.universe().labels_of(block).collect();
        writeln!(out, "block: {}", labels.join(" ")).unwrap();
    }
    out
}

/// Parses a graph; loops and repeated edges are rejected, not repaired.
pub fn parse_graph(text: &str) -> Result<Graph, Error> {
    let mut lines = content_lines(text);
    let (_, universe) = header(&mut lines, "vertices")?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (no, line) in lines {
        let mut words = line.split_whitespace();
        if words.next() != Some("edge") {
            return Err(parse_error(no, "expected `edge <u> <v>`"));
        }
        let ends: Vec<&str> = words.collect();
        let [u, v] = ends[..] else {
            return Err(parse_error(no, "an edge needs exactly two endpoints"));
        };
        let index = |label: &str| {
            universe
                .index_of(label)
                .ok_or_else(|| parse_error(no, format!("unknown vertex `{label}`")))
        };
        let (u, v) = (index(u)?, index(v)?);
        if u == v {
            return Err(parse_error(no, format!("loop at `{}`", universe.label(u))));
        }
        let key = (u.min(v), u.max(v));
        if edges.contains(&key) {
            return Err(parse_error(
                no,
                format!("duplicate edge {} {}", universe.label(u), universe.label(v)),
            ));
        }
        edges.push(key);
    }
    Graph::new(universe, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("vertices: {}\n", g.vertices());
    for (u, v) in g.edge_labels() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    out
}

/// Parses an incidence matrix and its row labels.
pub fn parse_incidence(text: &str) -> Result<(IncidenceMatrix, Vec<String>), Error> {
    let mut lines = content_lines(text);
    let (no, dims) = lines.next().ok_or_else(|| parse_error(1, "missing `<rows> <cols>` line"))?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| parse_error(no, "expected `<rows> <cols>`"))?;
    let [rows, cols] = dims[..] else {
        return Err(parse_error(no, "expected `<rows> <cols>`"));
    };

    let mut entries = Vec::with_capacity(rows);
    let mut last = no;
    // zero-column rows are blank and therefore skipped as content
    let expected_rows = if cols == 0 { 0 } else { rows };
    if cols == 0 {
        entries.resize(rows, Vec::new());
    }
    for r in 0..expected_rows {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_error(last + 1, format!("missing matrix row {}", r + 1)))?;
        last = no;
        let row: Vec<u8> = line
            .split_whitespace()
            .map(|d| match d {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(parse_error(no, format!("entry `{other}` is not 0 or 1"))),
            })
            .collect::<Result<_, _>>()?;
        if row.len() != cols {
            return Err(parse_error(no, format!("row has {} entries, expected {cols}", row.len())));
        }
        entries.push(row);
    }

    let (no, line) = lines
        .next()
        .ok_or_else(|| parse_error(last + 1, "missing `labels:` line"))?;
    let rest = keyed(line, "labels").ok_or_else(|| parse_error(no, "expected `labels: <label> ...`"))?;
    let labels: Vec<String> = rest.split_whitespace().map(String::from).collect();
    if labels.len() != rows {
        return Err(parse_error(no, format!("{} labels for {rows} rows", labels.len())));
    }
    if let Some((no, _)) = lines.next() {
        return Err(parse_error(no, "unexpected content after `labels:` line"));
    }
    let matrix = IncidenceMatrix::new(rows, cols, entries).map_err(|e| parse_error(no, e.to_string()))?;
    Ok((matrix, labels))
}

pub fn write_incidence<S: AsRef<str>>(m: &IncidenceMatrix, labels: &[S]) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for row in m.entries() {
        let digits: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(out, "{}", digits.join(" ")).unwrap();
    }
    let labels: Vec<&str> = labels.iter().map(AsRef::as_ref).collect();
    writeln!(out, "labels: {}", labels.join(" ")).unwrap();
    out
}

/// Parses a ground set and its candidate circuits; validation is separate.
pub fn parse_matroid(text: &str) -> Result<(Universe, Vec<Subset>), Error> {
    let mut lines = content_lines(text);
    let (_, ground) = header(&mut lines, "ground")?;
    let mut circuits = Vec::new();
    for (no, line) in lines {
        let rest = keyed(line, "circuit").ok_or_else(|| parse_error(no, "expected `circuit: <label> ...`"))?;
        circuits.push(labels_to_subset(&ground, rest, no)?);
    }
    Ok((ground, circuits))
}

pub fn write_matroid(m: &CircuitFamily) -> String {
    let mut out = format!("ground: {}\n", m.ground());
    for c in m.circuits() {
        let labels: Vec<&str> = m.ground().labels_of(c).collect();
        writeln!(out, "circuit: {}", labels.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{uniform_matroid, validate_circuits};

    const GRAPH_TWO: &str = "\
# connected example
vertices: a b c d
edge a b
edge a c   # second
edge b c

edge c d
edge d a
";

    #[test]
    fn graph_round_trip() {
        let g = parse_graph(GRAPH_TWO).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_cite_lines() {
        let err = parse_graph("vertices: a b\nedge a a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_graph("vertices: a b\nedge a b\n# c\nedge b a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = parse_graph("vertices: a b\nedge a z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("edge a b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(parse_graph("vertices: a a\n").is_err());
        assert!(parse_graph("vertices: a b c\nedge a b c\n").is_err());
    }

    #[test]
    fn covering_parse_and_validate() {
        let text = "universe: a b c d e\nblock: a b\nblock: a c\nblock: b c\nblock: c d\nblock: d a\n";
        let fam = parse_family(text).unwrap();
        assert_eq!(fam.blocks().len(), 5);
        match parse_covering(text) {
            Err(Error::NotACovering(msg)) => assert_eq!(msg, "e uncovered"),
            other => panic!("unexpected {other:?}"),
        }
        let c = parse_covering("universe: a b\nblock: a b\n").unwrap();
        assert_eq!(parse_covering(&write_covering(&c)).unwrap(), c);
        assert!(matches!(parse_family("universe:\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_family("universe: a\nblok: a\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn incidence_parse() {
        let text = "3 3\n1 0 1\n1 1 0\n0 1 1\nlabels: a b c\n";
        let (m, labels) = parse_incidence(text).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(labels, ["a", "b", "c"]);
        assert_eq!(write_incidence(&m, &labels), text);

        assert!(matches!(parse_incidence("2 1\n1\n2\nlabels: a b\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_incidence("2 1\n1\n1\nlabels: a\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_incidence("2 1\n1 1\n1\nlabels: a b\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_incidence("2 1\n1\n"), Err(Error::Parse { .. })));
        let empty = IncidenceMatrix::new(3, 0, vec![vec![]; 3]).unwrap();
        let text = write_incidence(&empty, &["a", "b", "c"]);
        assert_eq!(parse_incidence(&text).unwrap().0, empty);
    }

    #[test]
    fn matroid_parse() {
        let text = "ground: 1 2 3 4 5 6 7\ncircuit: 1 2 3\ncircuit: 6\ncircuit: 2 4 5\ncircuit: 1 3 4 5\n";
        let (ground, circuits) = parse_matroid(text).unwrap();
        let m = validate_circuits(ground, circuits).unwrap().family().unwrap();
        assert_eq!(write_matroid(&m), text);
        let (_, circuits) = parse_matroid("ground: 1\ncircuit:\n").unwrap();
        assert!(circuits[0].is_empty());
        let u = uniform_matroid(1, 3).unwrap();
        let (g, c) = parse_matroid(&write_matroid(&u)).unwrap();
        assert_eq!(validate_circuits(g, c).unwrap().family().unwrap(), u);
    }
}
