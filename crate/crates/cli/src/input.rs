//! Reading graphs and trigraphs from files or standard input.

use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use tricut_core::graph6::parse_graph6;
use tricut_core::oracles::alpha1;
use tricut_core::trigraph::parse_trigraph_json;
use tricut_core::{Graph, Trigraph};

/// What an input file turned out to hold.
pub enum Input {
    Graph(Graph),
    Trigraph(Trigraph),
}

/// How a plain graph becomes a trigraph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Split {
    /// Every edge in `S`; the graph must be triangle-free.
    #[default]
    All,
    /// A maximum triangle-independent set in `S`, the other edges in `C`.
    Alpha1,
}

pub fn read_text(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(text)
        }
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    let Some(first) = text.lines().map(str::trim).find(|l| !l.is_empty()) else {
        return false;
    };
    let fields: Vec<&str> = first.split_whitespace().collect();
    fields.len() == 2 && fields.iter().all(|f| f.chars().all(|c| c.is_ascii_digit()))
}

/// Trigraph JSON if the text starts with `{`, an edge list if the first line
/// is two integers, otherwise a single graph6 line.
pub fn parse_input(text: &str) -> Result<Input, String> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let candidate = parse_trigraph_json(text).map_err(|e| e.to_string())?;
        return candidate
            .into_trigraph()
            .map(Input::Trigraph)
            .map_err(|e| e.to_string());
    }
    if looks_like_edge_list(text) {
        return Graph::parse_edge_list(text)
            .map(Input::Graph)
            .map_err(|e| e.to_string());
    }
    let lines: Vec<&str> = trimmed.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    match lines.as_slice() {
        [line] => parse_graph6(line).map(Input::Graph).map_err(|e| e.to_string()),
        [] => Err("empty input".into()),
        _ => Err(format!("expected one graph6 line, found {}", lines.len())),
    }
}

pub fn read_input(path: Option<&Path>) -> Result<Input, String> {
    parse_input(&read_text(path)?)
}

pub fn read_graph(path: Option<&Path>) -> Result<Graph, String> {
    match read_input(path)? {
        Input::Graph(g) => Ok(g),
        Input::Trigraph(_) => Err("expected a graph (graph6 or edge list), got a trigraph".into()),
    }
}

pub fn graph_to_trigraph(g: &Graph, split: Split) -> Result<Trigraph, String> {
    match split {
        Split::All => Trigraph::from_triangle_free_graph(g)
            .map_err(|e| format!("{e}; use --split alpha1 to put a maximum triangle-independent set in S")),
        Split::Alpha1 => {
            let witness = alpha1(g).map_err(|e| e.to_string())?;
            Trigraph::from_graph_and_tis(g, witness.edges()).map_err(|e| e.to_string())
        }
    }
}

pub fn read_trigraph(path: Option<&Path>, split: Split) -> Result<Trigraph, String> {
    match read_input(path)? {
        Input::Trigraph(t) => Ok(t),
        Input::Graph(g) => graph_to_trigraph(&g, split),
    }
}
