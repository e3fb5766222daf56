//! graph6 and edge-list readers and writers.

use std::fmt;

use ctl_core::{Error as CoreError, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "graph6" | "g6" => Some(Format::Graph6),
            "edge-list" | "edges" | "el" => Some(Format::EdgeList),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    Header(String),
    Body(String),
    Graph(CoreError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Header(m) => write!(f, "malformed header: {m}"),
            FormatError::Body(m) => write!(f, "malformed input: {m}"),
            FormatError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<CoreError> for FormatError {
    fn from(e: CoreError) -> Self {
        FormatError::Graph(e)
    }
}

const G6_HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encode without trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Body(format!("byte {b} outside the graph6 range")));
    }
    let digits = |from: usize, count: usize| -> Result<usize, FormatError> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| FormatError::Header("truncated vertex count".into()))?;
        Ok(chunk.iter().fold(0, |acc, &b| acc << 6 | usize::from(b - 63)))
    };
    let (n, body) = match bytes {
        [] => return Err(FormatError::Header("empty input".into())),
        [126, 126, ..] => (digits(2, 6)?, 8),
        [126, ..] => (digits(1, 3)?, 4),
        [b, ..] => (usize::from(b - 63), 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let want = pairs.div_ceil(6);
    let data = &bytes[body..];
    if data.len() != want {
        return Err(FormatError::Body(format!(
            "expected {want} data bytes for {n} vertices, found {}",
            data.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if want > 0 && pairs % 6 != 0 {
        let pad = 6 - pairs % 6;
        if (data[want - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(FormatError::Body("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// First line `n`, then one `u v` line per edge (`u < v`, lexicographic).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(s: &str) -> Result<Graph, FormatError> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, head) = lines.next().ok_or_else(|| FormatError::Header("missing vertex count".into()))?;
    let n: usize = head
        .parse()
        .map_err(|_| FormatError::Header(format!("vertex count {head:?} is not a number")))?;
    let mut edges = Vec::new();
    for (line, text) in lines {
        let nums: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = nums.as_slice() else {
            return Err(FormatError::Body(format!("line {line}: expected two vertices")));
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| FormatError::Body(format!("line {line}: {t:?} is not a vertex index")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// A lone line of graph6 characters is graph6; anything with digits or
/// whitespace-separated tokens is an edge list.
pub fn detect(s: &str) -> Format {
    let first = s
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with(G6_HEADER) || (!first.is_empty() && first.bytes().all(|b| (63..=126).contains(&b))) {
        Format::Graph6
    } else {
        Format::EdgeList
    }
}

pub fn parse_graph(s: &str, format: Option<Format>) -> Result<Graph, FormatError> {
    match format.unwrap_or_else(|| detect(s)) {
        Format::Graph6 => from_graph6(s),
        Format::EdgeList => from_edge_list(s),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        Format::EdgeList => to_edge_list(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(to_graph6(&g), "D?{");
        // Petersen graph in its usual graph6 form.
        let p = from_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6(">>graph6<<C~").unwrap().edge_count(), 6);
    }

    #[test]
    fn graph6_long_form() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn size_header_forms() {
        let mut out = Vec::new();
        push_size(&mut out, 258_048);
        assert_eq!(out, [126, 126, 63, 63, 63, 126, 63, 63]);
        out.clear();
        push_size(&mut out, 258_047);
        assert_eq!(out, [126, 125, 126, 126]);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D?").is_err());
        assert!(from_graph6("D?{{").is_err());
        assert!(from_graph6("A@").is_err(), "padding bit set");
        assert!(from_graph6("A_").is_ok());
    }

    #[test]
    fn edge_list_examples() {
        let g = from_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        assert!(matches!(from_edge_list("2\n0 0"), Err(FormatError::Graph(CoreError::SelfLoop(0)))));
        assert!(matches!(from_edge_list("2\n0 1\n1 0"), Err(FormatError::Graph(CoreError::MultiEdge(..)))));
        assert!(from_edge_list("2\n0 2").is_err());
        assert!(from_edge_list("x\n").is_err());
        assert!(from_edge_list("3\n0 1 2").is_err());
        let c = from_edge_list("# a comment\n3 # n\n\n0 1 # edge\n").unwrap();
        assert_eq!(c.edge_count(), 1);
    }

    #[test]
    fn detection() {
        assert_eq!(detect("D?{\n"), Format::Graph6);
        assert_eq!(detect("3\n0 1\n"), Format::EdgeList);
        assert_eq!(detect("# c\n3\n"), Format::EdgeList);
        assert_eq!(detect(">>graph6<<C~"), Format::Graph6);
    }
}
