//! Line-oriented graph files.
//!
//! ```text
//! n 6 m 12 rot tri
//! 0 1
//! ...            (m edge lines, "u v" with u < v, sorted)
//! rot
//! 0: 3 4 1 5
//! ...            (n rows, cyclic neighbor order)
//! col 3
//! 0: 1
//! ...            (n rows)
//! ```
//!
//! The `rot`/`tri` header flags and both blocks are optional. `#` starts
//! a comment line. Serialization is canonical, so parse-serialize round
//! trips are byte-stable on sorted input.

use std::fmt::Write as _;

use twocc_core::{Coloring, PlaneGraph};

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse: {}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn bad(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: PlaneGraph,
    pub coloring: Option<Coloring>,
    /// The file claims the graph is a triangulation.
    pub triangulation: bool,
}

impl GraphFile {
    pub fn new(graph: PlaneGraph) -> Self {
        let triangulation = graph.is_triangulation().is_ok();
        GraphFile { graph, coloring: None, triangulation }
    }

    pub fn with_coloring(mut self, phi: Coloring) -> Self {
        self.coloring = Some(phi);
        self
    }

    pub fn parse(text: &str) -> Result<GraphFile, FormatError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let mut toks = header.split_whitespace();
        let mut n = None;
        let mut m = None;
        let mut has_rot = false;
        let mut tri = false;
        while let Some(t) = toks.next() {
            match t {
                "n" => n = Some(parse_num(toks.next(), "n")?),
                "m" => m = Some(parse_num(toks.next(), "m")?),
                "rot" => has_rot = true,
                "tri" => tri = true,
                other => return Err(bad(format!("unknown header token {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| bad("header missing n"))?;
        let m = m.ok_or_else(|| bad("header missing m"))?;
        let mut g = PlaneGraph::new(n);
        for _ in 0..m {
            let line = lines.next().ok_or_else(|| bad("fewer edge lines than m"))?;
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), "edge endpoint")?;
            let v = parse_num(it.next(), "edge endpoint")?;
            if it.next().is_some() {
                return Err(bad(format!("trailing tokens on edge line {line:?}")));
            }
            g.add_edge(u, v).map_err(|e| bad(format!("{e}")))?;
        }
        if g.edge_count() != m {
            return Err(bad("duplicate edge lines"));
        }
        let mut coloring = None;
        let mut next = lines.next();
        if has_rot {
            if next != Some("rot") {
                return Err(bad("header declares rot but block is missing"));
            }
            let mut rot = vec![Vec::new(); n];
            #[allow(clippy::needless_range_loop)]
            for v in 0..n {
                let line = lines.next().ok_or_else(|| bad("rotation block truncated"))?;
                let (head, rest) =
                    line.split_once(':').ok_or_else(|| bad("rotation row needs 'v:'"))?;
                let vv: usize = parse_num(Some(head.trim()), "rotation vertex")?;
                if vv != v {
                    return Err(bad(format!("rotation rows out of order at {v}")));
                }
                rot[v] = rest
                    .split_whitespace()
                    .map(|t| parse_num(Some(t), "rotation entry"))
                    .collect::<Result<_, _>>()?;
            }
            g.set_rotation(rot).map_err(|e| bad(format!("{e}")))?;
            next = lines.next();
        }
        if let Some(line) = next {
            let mut it = line.split_whitespace();
            if it.next() != Some("col") {
                return Err(bad(format!("expected 'col' block, got {line:?}")));
            }
            let k: u32 = parse_num(it.next(), "palette")? as u32;
            let mut colors = vec![0u32; n];
            #[allow(clippy::needless_range_loop)]
            for v in 0..n {
                let line = lines.next().ok_or_else(|| bad("coloring block truncated"))?;
                let (head, rest) =
                    line.split_once(':').ok_or_else(|| bad("coloring row needs 'v:'"))?;
                let vv: usize = parse_num(Some(head.trim()), "coloring vertex")?;
                if vv != v {
                    return Err(bad(format!("coloring rows out of order at {v}")));
                }
                colors[v] = parse_num(Some(rest.trim()), "color")? as u32;
            }
            coloring = Some(Coloring::new(colors, k).map_err(|e| bad(format!("{e}")))?);
            next = lines.next();
        }
        if let Some(extra) = next {
            return Err(bad(format!("trailing content: {extra:?}")));
        }
        if tri {
            g.is_triangulation().map_err(|e| bad(format!("tri flag but {e}")))?;
        }
        Ok(GraphFile { graph: g, coloring, triangulation: tri })
    }

    pub fn serialize(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        write!(out, "n {} m {}", g.n(), g.edge_count()).unwrap();
        if g.has_rotation() {
            out.push_str(" rot");
        }
        if self.triangulation {
            out.push_str(" tri");
        }
        out.push('\n');
        for (u, v) in g.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        if let Some(rot) = g.rotation() {
            out.push_str("rot\n");
            for (v, row) in rot.iter().enumerate() {
                write!(out, "{v}:").unwrap();
                for w in row {
                    write!(out, " {w}").unwrap();
                }
                out.push('\n');
            }
        }
        if let Some(phi) = &self.coloring {
            writeln!(out, "col {}", phi.palette()).unwrap();
            for v in 0..g.n() {
                writeln!(out, "{v}: {}", phi.color(v)).unwrap();
            }
        }
        out
    }
}

fn parse_num(tok: Option<&str>, what: &str) -> Result<usize, FormatError> {
    tok.ok_or_else(|| bad(format!("missing {what}")))?
        .parse()
        .map_err(|_| bad(format!("bad {what}: {tok:?}")))
}

/// Edge list files ("u v" per line) for avoidance sets.
pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>, FormatError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), "edge endpoint")?;
            let v = parse_num(it.next(), "edge endpoint")?;
            Ok((u, v))
        })
        .collect()
}
