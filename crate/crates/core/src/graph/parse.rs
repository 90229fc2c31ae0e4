use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format.
///
/// One edge per line as `labelA labelB`; `node label` declares a node that
/// may have no edges; `#` starts a comment. Labels map to indices in order
/// of first appearance and repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    fn intern<'a>(
        label: &'a str,
        index: &mut HashMap<&'a str, usize>,
        labels: &mut Vec<String>,
    ) -> usize {
        *index.entry(label).or_insert_with(|| {
            labels.push(label.to_string());
            labels.len() - 1
        })
    }

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["node", label] => {
                intern(label, &mut index, &mut labels);
            }
            [a, b] => {
                if a == b {
                    return Err(Error::ParseSelfLoop {
                        line: line_no,
                        label: a.to_string(),
                    });
                }
                let u = intern(a, &mut index, &mut labels);
                let v = intern(b, &mut index, &mut labels);
                edges.push((u, v));
            }
            _ => {
                return Err(Error::ParseMalformed {
                    line: line_no,
                    text: raw.trim().to_string(),
                })
            }
        }
    }

    if labels.is_empty() {
        return Err(Error::ParseEmpty);
    }
    Ok(Graph::new(labels.len(), edges)?.with_labels(labels))
}
