//! Hasse-diagram export.

use std::fmt::Write;
use std::hash::Hash;

use serde::Serialize;
use serde_json::{json, Value};

use super::FinitePoset;

impl<K: Clone + Eq + Hash + Send + Sync> FinitePoset<K> {
    /// Graphviz text: one node per element, one edge per cover, and one
    /// `rank=same` cluster per height.
    pub fn to_dot<F: Fn(&K) -> String>(&self, name: &str, label: F) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        out.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for (i, e) in self.elements().iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(&label(e)));
        }
        let heights = self.heights();
        let top = heights.iter().copied().max().unwrap_or(0);
        for h in 0..=top {
            let nodes: Vec<String> = (0..self.len())
                .filter(|&i| heights[i] == h)
                .map(|i| format!("n{i}"))
                .collect();
            if !nodes.is_empty() {
                let _ = writeln!(
                    out,
                    "  subgraph cluster_rank{h} {{ rank=same; label=\"rank {h}\"; {}; }}",
                    nodes.join("; ")
                );
            }
        }
        for (i, j) in self.covers() {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }

    /// `{"elements": [...], "covers": [[i, j], ...]}`.
    pub fn to_json(&self) -> Value
    where
        K: Serialize,
    {
        let covers: Vec<[usize; 2]> = self.covers().into_iter().map(|(i, j)| [i, j]).collect();
        json!({ "elements": self.elements(), "covers": covers })
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports() {
        let p = FinitePoset::build(vec![1u32, 2, 3, 6], |a, b| b % a == 0).unwrap();
        let dot = p.to_dot("d6", |x| x.to_string());
        assert!(dot.starts_with("digraph \"d6\" {"));
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("n0 [label=\"1\"]"));
        assert!(dot.contains("cluster_rank2"));
        assert_eq!(
            p.to_json(),
            json!({"elements": [1, 2, 3, 6], "covers": [[0, 1], [0, 2], [1, 3], [2, 3]]})
        );
    }
}
