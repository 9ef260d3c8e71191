//! Resolving the input graph from a name, a graph6 string or stdin.

use std::io::Read;

use prismatic::graph::{named, parse_graph6};
use prismatic::Graph;

/// Where the graph came from, as echoed in reports.
pub struct Input {
    pub graph: Graph,
    pub descriptor: String,
}

pub fn resolve(name: Option<&str>, g6: Option<&str>) -> Result<Input, String> {
    match (name, g6) {
        (Some(_), Some(_)) => Err("give at most one of --name and --g6".into()),
        (Some(name), None) => {
            let graph = named::by_name(name).map_err(|e| e.to_string())?;
            Ok(Input { graph, descriptor: format!("name:{name}") })
        }
        (None, Some(text)) => {
            let graph = parse_graph6(text.trim()).map_err(|e| e.to_string())?;
            Ok(Input { graph, descriptor: format!("graph6:{}", text.trim()) })
        }
        (None, None) => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("reading stdin: {e}"))?;
            let line = buf
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or("no graph given: use --name, --g6 or pipe graph6 on stdin")?;
            let graph = parse_graph6(line).map_err(|e| e.to_string())?;
            Ok(Input { graph, descriptor: "stdin".into() })
        }
    }
}

/// Recovers `g` from its complementary prism when `p` uses the standard labelling.
pub fn prism_base(p: &Graph) -> Option<Graph> {
    if p.n() == 0 || !p.n().is_multiple_of(2) {
        return None;
    }
    let base: Vec<usize> = (0..p.n() / 2).collect();
    let g = p.induced(&base);
    (g.complementary_prism() == *p).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use prismatic::graph::named::{cycle, paley};

    #[test]
    fn prism_base_inverts_prism() {
        let g = paley(9).unwrap();
        assert_eq!(prism_base(&g.complementary_prism()).unwrap(), g);
        assert!(prism_base(&cycle(6)).is_none());
    }

    #[test]
    fn both_sources_is_an_error() {
        assert!(resolve(Some("cycle:5"), Some("Dhc")).is_err());
    }
}
