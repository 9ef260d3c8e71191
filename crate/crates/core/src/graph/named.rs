//! Named graphs and fixtures.

use super::{FamilyKind, FamilySpec, Graph};
use crate::error::{Error, Result};
use crate::fields::{FieldElement, FieldSpec};

const FIGURE_F9: [&str; 4] = [
    include_str!("../../fixtures/self_complementary_nine_1.txt"),
    include_str!("../../fixtures/self_complementary_nine_2.txt"),
    include_str!("../../fixtures/self_complementary_nine_3.txt"),
    include_str!("../../fixtures/self_complementary_nine_4.txt"),
];
const EXA1: &str = include_str!("../../fixtures/exa1.txt");

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)).with_name(format!("C{n}"))
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1).with_name(format!("P{n}"))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true).with_name(format!("K{n}"))
}

/// Star `K_{1,n-1}` on `n` vertices with centre 0.
pub fn star(n: usize) -> Graph {
    Graph::from_fn(n, |u, _| u == 0).with_name(format!("K1,{}", n.saturating_sub(1)))
}

/// Petersen graph: outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
pub fn petersen() -> Graph {
    Graph::from_fn(10, |u, v| {
        if v < 5 {
            (v + 5 - u) % 5 == 1 || (v + 5 - u) % 5 == 4
        } else if u < 5 {
            v == u + 5
        } else {
            (v - u) % 5 == 2 || (v - u) % 5 == 3
        }
    })
    .with_name("Petersen")
}

/// Paley graph on GF(q): `x ~ y` iff `x - y` is a nonzero square. Vertex `i` is the
/// field element with integer encoding `i`.
pub fn paley(q: u64) -> Result<Graph> {
    if q % 4 != 1 {
        return Err(Error::InvalidParameter(format!("Paley graph needs q ≡ 1 (mod 4), got {q}")));
    }
    let f = FieldSpec::new(q)?;
    let (squares, _) = f.squares_and_nonsquare()?;
    let mut is_sq = vec![false; q as usize];
    for s in squares {
        is_sq[s.0 as usize] = true;
    }
    Ok(Graph::from_fn(q as usize, |a, b| {
        is_sq[f.sub(FieldElement(a as u32), FieldElement(b as u32)).0 as usize]
    })
    .with_name(format!("Paley({q})")))
}

/// Order of GF(9) elements used by the adjacency matrix fixture of Paley(9):
/// `0, -1, 1, -a, a, -1-a, -1+a, 1-a, 1+a` with `a² = -1`.
pub fn paley9_fixture_order() -> [usize; 9] {
    [0, 2, 1, 6, 3, 8, 5, 7, 4]
}

/// `r`-subsets of `{1..n}` as bitmasks (bit `i-1` for element `i`) in colex order.
pub fn kneser_subsets(n: usize, r: usize) -> Vec<u32> {
    assert!(n <= 31);
    (0u32..1 << n).filter(|m| m.count_ones() as usize == r).collect()
}

/// Kneser graph `K(n, r)`: `r`-subsets of `{1..n}`, adjacent when disjoint.
pub fn kneser(n: usize, r: usize) -> Result<Graph> {
    if 2 * r >= n || r == 0 || n > 20 {
        return Err(Error::InvalidParameter(format!("Kneser graph K({n},{r}) needs 0 < 2r < n ≤ 20")));
    }
    let sets = kneser_subsets(n, r);
    Ok(Graph::from_fn(sets.len(), |a, b| sets[a] & sets[b] == 0).with_name(format!("K({n},{r})")))
}

/// The deleted Kneser edge `{{1,2,3,4}, {2,3,4,5}}` as indices into `kneser_subsets(10, 4)`.
pub fn kneser_special_edge() -> (usize, usize) {
    let sets = kneser_subsets(10, 4);
    let a = sets.iter().position(|&m| m == 0b0_0000_1111).unwrap();
    let b = sets.iter().position(|&m| m == 0b0_0001_1110).unwrap();
    (a, b)
}

/// The four regular self-complementary graphs on nine vertices, `i` in `1..=4`;
/// `self_complementary_nine(1)` is Paley(9).
pub fn self_complementary_nine(i: usize) -> Result<Graph> {
    let text = FIGURE_F9
        .get(i.wrapping_sub(1))
        .ok_or_else(|| Error::InvalidParameter(format!("self_complementary_nine index must be 1..=4, got {i}")))?;
    Ok(Graph::from_matrix_text(text)?.with_name(format!("F9_{i}")))
}

/// The 13-vertex 6-regular self-complementary graph whose prism has core `K5`.
pub fn exa1() -> Graph {
    Graph::from_matrix_text(EXA1).expect("fixture is valid").with_name("exa1")
}

/// The antimorphism of [`exa1`] given with it (0-indexed).
pub fn exa1_antimorphism() -> Vec<usize> {
    [1, 8, 9, 10, 11, 12, 13, 5, 4, 3, 2, 7, 6].iter().map(|v| v - 1).collect()
}

/// Retraction of the prism of [`exa1`] onto the clique `{(i,1) : i = 1..5}`:
/// each listed prism vertex (1-indexed base, side) goes to `(i,1)`.
pub fn exa1_retraction() -> Vec<usize> {
    const CLASSES: [&[(usize, usize)]; 5] = [
        &[(1, 1), (8, 1), (9, 1), (10, 1), (4, 2), (5, 2), (11, 2)],
        &[(2, 1), (6, 1), (7, 1), (1, 2), (3, 2)],
        &[(3, 1), (11, 1), (2, 2), (8, 2)],
        &[(4, 1), (12, 1), (7, 2), (9, 2), (13, 2)],
        &[(5, 1), (13, 1), (6, 2), (10, 2), (12, 2)],
    ];
    let n = 13;
    let mut img = vec![usize::MAX; 2 * n];
    for (target, class) in CLASSES.iter().enumerate() {
        for &(b, s) in class.iter() {
            img[(s - 1) * n + b - 1] = target;
        }
    }
    img
}

/// Regular 9-vertex graph whose core is the non-regular Moser spindle on `0..7`;
/// the retraction sends 7 to 3 and 8 to 4 and fixes everything else.
pub fn spindle_nine() -> Graph {
    let edges = [
        (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 6), (0, 5), (5, 6), (4, 6), (4, 5), (3, 4),
        (7, 1), (7, 2), (7, 4), (8, 3), (8, 5), (8, 6), (7, 8),
    ];
    Graph::from_edges(9, edges).expect("valid edges").with_name("F11")
}

pub fn spindle_nine_retraction() -> Vec<usize> {
    vec![0, 1, 2, 3, 4, 5, 6, 3, 4]
}

/// Disjoint union of a triangle and a pentagon.
pub fn triangle_pentagon() -> Graph {
    complete(3).disjoint_union(&cycle(5)).with_name("K3+C5")
}

/// Vertices of `Cay(F49 × F4, S)` in fixed order: `(x, y)` pairs, x-major, except that
/// `(0, 1)` and `(0, ι)` are moved to the last two positions.
pub fn cay_f49xf4_vertices() -> Vec<(FieldElement, FieldElement)> {
    let mut rest = Vec::with_capacity(196);
    for x in 0..49 {
        for y in 0..4 {
            if !(x == 0 && (y == 1 || y == 2)) {
                rest.push((FieldElement(x), FieldElement(y)));
            }
        }
    }
    rest.push((FieldElement(0), FieldElement(1)));
    rest.push((FieldElement(0), FieldElement(2)));
    rest
}

/// `Cay(F49 × F4, S)` with `S = {(x, y) : x ≠ 0, y ∈ {0, 1}}`, vertices as in
/// [`cay_f49xf4_vertices`].
pub fn cay_f49xf4() -> Graph {
    let f4 = FieldSpec::new(4).unwrap();
    let verts = cay_f49xf4_vertices();
    Graph::from_fn(verts.len(), |a, b| {
        let (xa, ya) = verts[a];
        let (xb, yb) = verts[b];
        let dy = f4.sub(ya, yb);
        xa != xb && (dy == f4.zero() || dy == f4.one())
    })
    .with_name("Cay(F49xF4)")
}

/// Index layout of [`mysterious505`].
pub mod m505 {
    pub const N: usize = 505;
    pub const KNESER_START: usize = 99;
    pub const CAYLEY_START: usize = 309;

    /// `v_i`, `i` in `1..=99`.
    pub fn v(i: usize) -> usize {
        debug_assert!((1..=99).contains(&i));
        i - 1
    }

    /// `w_j`, `j` in `1..=196`.
    pub fn w(j: usize) -> usize {
        debug_assert!((1..=196).contains(&j));
        CAYLEY_START + j - 1
    }

    /// Endpoints `u1, u2` of the deleted Kneser edge.
    pub fn u() -> (usize, usize) {
        let (a, b) = super::kneser_special_edge();
        (KNESER_START + a, KNESER_START + b)
    }
}

/// 194-regular graph on 505 vertices: `K̄99`, `K̄(10,4) − e` and `Cay(F49 × F4, S)`
/// joined by the prescribed extra edges. See [`m505`] for the layout.
pub fn mysterious505() -> Graph {
    use m505::*;
    let kneser = kneser(10, 4).unwrap();
    let (a, b) = kneser_special_edge();
    let kbar = kneser.complement().without_edges(&[(a, b)]);
    let cay = cay_f49xf4();
    let mut g = Graph::empty(N);
    for (s, t) in kbar.edges() {
        g.set_edge(KNESER_START + s, KNESER_START + t);
    }
    for (s, t) in cay.edges() {
        g.set_edge(CAYLEY_START + s, CAYLEY_START + t);
    }
    let (u1, u2) = u();
    g.set_edge(w(195), u1);
    g.set_edge(w(196), u2);
    for i in 1..=97 {
        g.set_edge(w(195), v(i));
        g.set_edge(w(196), v(i));
    }
    for j in 1..=194 {
        g.set_edge(w(j), v(98));
        g.set_edge(w(j), v(99));
    }
    for i in 1..=97 {
        for s in 1..=194 {
            if s != i && s != i + 97 {
                g.set_edge(v(i), w(s));
            }
        }
    }
    g.with_name("mysterious505")
}

/// Retraction of the prism of [`mysterious505`] given with it, as an image array on
/// prism indices (`x` for `(x,1)`, `505 + x` for `(x,2)`).
pub fn mysterious505_retraction() -> Vec<usize> {
    use m505::*;
    let side2 = |x: usize| N + x;
    let mut img: Vec<usize> = (0..2 * N).collect();
    let verts = cay_f49xf4_vertices();
    let (u1, u2) = u();
    for j in 1..=196 {
        let (x, y) = verts[j - 1];
        img[w(j)] = match j {
            195 => side2(u1),
            196 => side2(u2),
            _ => side2(v(1 + x.0 as usize)),
        };
        img[side2(w(j))] = match j {
            50..=53 => side2(v(j + 4)),
            147..=150 => side2(v(j - 89)),
            _ => side2(v(50 + y.0 as usize)),
        };
    }
    for i in 1..=99 {
        img[v(i)] = if i == 62 { side2(v(63)) } else { side2(v(62)) };
    }
    img
}

/// Prism vertices fixed by [`mysterious505_retraction`]: both copies of the Kneser
/// block and the side-two copies of `v1..v99`.
pub fn mysterious505_fixed_set() -> Vec<usize> {
    use m505::*;
    let mut s: Vec<usize> = (KNESER_START..CAYLEY_START).collect();
    s.extend((KNESER_START..CAYLEY_START).map(|x| N + x));
    s.extend((1..=99).map(|i| N + v(i)));
    s.sort_unstable();
    s
}

/// Resolves names such as `cycle:5`, `paley:13`, `kneser:10:4`, `self_complementary_nine:2`,
/// `exa1`, `petersen`, `star:4`, `family:c5:<graph6>`.
pub fn by_name(spec: &str) -> Result<Graph> {
    let mut parts = spec.split(':');
    let head = parts.next().unwrap_or("").to_ascii_lowercase();
    let args: Vec<&str> = parts.collect();
    let num = |i: usize| -> Result<usize> {
        args.get(i)
            .ok_or_else(|| Error::UnknownName(format!("{spec}: missing argument {}", i + 1)))?
            .parse::<usize>()
            .map_err(|_| Error::UnknownName(format!("{spec}: argument {} is not a number", i + 1)))
    };
    let g = match head.as_str() {
        "cycle" | "c" => {
            let n = num(0)?;
            if n < 3 {
                return Err(Error::InvalidParameter("cycle needs n ≥ 3".into()));
            }
            cycle(n)
        }
        "path" | "p" => path(num(0)?),
        "complete" | "k" => complete(num(0)?),
        "empty" => Graph::empty(num(0)?),
        "star" => star(num(0)?),
        "petersen" => petersen(),
        "paley" => paley(num(0)? as u64)?,
        "kneser" => kneser(num(0)?, num(1)?)?,
        "self_complementary_nine" | "sc9" => self_complementary_nine(num(0)?)?,
        "spindle_nine" => spindle_nine(),
        "exa1" => exa1(),
        "mysterious505" => mysterious505(),
        "cay_f49xf4" => cay_f49xf4(),
        "triangle_pentagon" => triangle_pentagon(),
        "family" => {
            let kind = match args.first().map(|s| s.to_ascii_lowercase()) {
                Some(k) if k == "c5" => FamilyKind::C5Lambda,
                Some(k) if k == "a" => FamilyKind::ALambda,
                _ => return Err(Error::UnknownName(format!("{spec}: family kind must be c5 or a"))),
            };
            let inner = match args.get(1) {
                Some(s) => super::parse_graph6(s)?,
                None => Graph::empty(0),
            };
            FamilySpec::new(kind, inner).graph()
        }
        _ => return Err(Error::UnknownName(spec.to_string())),
    };
    Ok(g)
}
