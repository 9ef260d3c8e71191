use super::{Graph, PrismVertex, Side};

impl Graph {
    /// The complement: `u ~ v` iff `u != v` and they are not adjacent here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::from_fn(self.n, |u, v| !self.adjacent(u, v));
        g.name = self.name.as_ref().map(|s| format!("co-{s}"));
        g
    }

    /// Complementary prism: this graph on `0..n`, its complement on `n..2n`,
    /// and the matching `v ~ n + v`.
    pub fn complementary_prism(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(2 * n);
        for u in 0..n {
            g.set_edge(u, n + u);
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    g.set_edge(u, v);
                } else {
                    g.set_edge(n + u, n + v);
                }
            }
        }
        g.name = self.name.as_ref().map(|s| format!("prism({s})"));
        g
    }

    /// Lexicographic product: `(a, b)` sits at `a * other.n() + b`; adjacent iff the
    /// first coordinates are adjacent, or equal with adjacent second coordinates.
    pub fn lexicographic_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        Graph::from_fn(self.n * m, |x, y| {
            let (a1, b1) = (x / m, x % m);
            let (a2, b2) = (y / m, y % m);
            self.adjacent(a1, a2) || (a1 == a2 && other.adjacent(b1, b2))
        })
    }

    /// Disjoint union with `other` placed after this graph.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(n + u, n + v);
        }
        g
    }

    /// Copy with the given edges added (endpoints must be in range and distinct).
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            assert!(u != v && u < self.n && v < self.n);
            g.set_edge(u, v);
        }
        g
    }

    /// Copy with the given edges removed.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.clear_edge(u, v);
        }
        g
    }

    /// Index of `(base, side)` in the prism of a graph with this many vertices.
    pub fn prism_index(&self, base: usize, side: Side) -> usize {
        PrismVertex::new(base, side).index(self.n)
    }
}
