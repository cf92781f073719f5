//! Graph file formats.
//!
//! JSON: `{"n": 4, "edges": [[0,1],[1,2]], "leaders": [0]}`.
//!
//! Plain text:
//!
//! ```text
//! 4 3 1
//! 0 1
//! 1 2
//! 2 3
//! 0
//! ```
//!
//! The header holds node, edge, and leader counts; one `u v` line per edge
//! follows, then a single line of leader ids. Both parsers reject anything
//! after the last expected token.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Network, RawNetwork};

pub fn parse_json(input: &str) -> Result<Network> {
    let raw: RawNetwork = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    Network::from_raw(&raw)
}

pub fn to_json(net: &Network) -> String {
    serde_json::to_string(&net.to_raw()).expect("network serializes")
}

pub fn parse_text(input: &str) -> Result<Network> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let header = numbers(lineno, header)?;
    let [n, edge_count, leader_count] = header[..] else {
        return Err(Error::Parse(format!(
            "line {lineno}: header needs 3 integers, got {}",
            header.len()
        )));
    };

    let mut edges = Vec::with_capacity(edge_count);
    for _ in 0..edge_count {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {edge_count} edge lines")))?;
        match numbers(lineno, line)?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("line {lineno}: edge needs 2 integers"))),
        }
    }

    let (lineno, line) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing leader line".into()))?;
    let leaders = numbers(lineno, line)?;
    if leaders.len() != leader_count {
        return Err(Error::Parse(format!(
            "line {lineno}: expected {leader_count} leaders, got {}",
            leaders.len()
        )));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse(format!("line {lineno}: trailing content")));
    }
    Network::new(n, &edges, &leaders)
}

pub fn to_text(net: &Network) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {}",
        net.node_count(),
        net.edges().len(),
        net.leader_count()
    );
    for (u, v) in net.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    let leaders: Vec<String> = net.leaders().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "{}", leaders.join(" "));
    out
}

/// Picks the parser from the first non-blank character.
pub fn parse_auto(input: &str) -> Result<Network> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn numbers(lineno: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::Parse(format!("line {lineno}: bad integer {tok:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_parses_and_rejects_garbage() {
        let net = parse_json(r#"{"n": 3, "edges": [[1, 0], [1, 2]], "leaders": [0]}"#).unwrap();
        assert_eq!(net.edges(), &[(0, 1), (1, 2)]);
        assert!(matches!(parse_json(r#"{"n": 3, "edges": [], "leaders": [0]} x"#), Err(Error::Parse(_))));
        assert!(matches!(parse_json("{not json"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_json(r#"{"n": 1, "edges": [], "leaders": [0], "extra": 1}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn text_parses_and_rejects_garbage() {
        let net = parse_text("4 3 2\n0 1\n1 2\n2 3\n0 3\n").unwrap();
        assert_eq!(net.leaders(), &[0, 3]);
        assert_eq!(net.edges().len(), 3);
        assert!(parse_text("4 3 2\n0 1\n1 2\n2 3\n0 3\n5\n").is_err());
        assert!(parse_text("4 3 2\n0 1\n1 2\n2 3\n0\n").is_err());
        assert!(parse_text("2 1 1\n0 1 1\n0\n").is_err());
        assert!(parse_text("2 1 1\n0 x\n0\n").is_err());
        assert!(parse_text("").is_err());
    }

    #[test]
    fn text_and_json_agree() {
        let net = parse_text("3 2 1\n0 1\n1 2\n2\n").unwrap();
        assert_eq!(parse_text(&to_text(&net)).unwrap(), net);
        assert_eq!(parse_auto(&to_json(&net)).unwrap(), net);
    }
}
