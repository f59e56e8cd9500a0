//! Peeling one vertex off a degree matrix and splicing it back into a
//! realization of the smaller instance.

use crate::degseq::{find_common_leaves, DegreeMatrix};
use crate::egraph::{Color, ColoredGraph, RainbowMatching, Vertex};
use crate::error::BuildError;

/// Witness `(v, w, i)`: `v` is a leaf in row `i` and has degree 2 in every
/// other row, and `w` has degree above 2 in row `i`. Indices refer to the
/// matrix before the reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    pub v: Vertex,
    pub w: Vertex,
    pub i: Color,
}

impl Reduction {
    /// Index of `w` once column `v` is removed.
    pub fn reduced_w(&self) -> Vertex {
        if self.w > self.v {
            self.w - 1
        } else {
            self.w
        }
    }

    pub fn holds_for(&self, m: &DegreeMatrix) -> bool {
        let Reduction { v, w, i } = *self;
        v < m.n()
            && w < m.n()
            && i < m.k()
            && v != w
            && m.get(i, v) == 1
            && (0..m.k()).all(|j| j == i || m.get(j, v) == 2)
            && m.get(i, w) > 2
    }
}

/// First witness by smallest row `i`, then smallest `v`, then smallest `w`.
pub fn find_reduction(m: &DegreeMatrix) -> Result<Reduction, BuildError> {
    if let Some(c) = find_common_leaves(m) {
        return Err(BuildError::CommonLeaves {
            vertex: c.vertex,
            first: c.first,
            second: c.second,
        });
    }
    if m.all_paths() {
        return Err(BuildError::AllPaths);
    }
    for i in 0..m.k() {
        let Some(w) = (0..m.n()).find(|&w| m.get(i, w) > 2) else {
            continue;
        };
        let peelable = (0..m.n()).find(|&v| m.get(i, v) == 1 && (0..m.k()).all(|j| j == i || m.get(j, v) == 2));
        if let Some(v) = peelable {
            return Ok(Reduction { v, w, i });
        }
    }
    // impossible for tree matrices without common leaves
    Err(BuildError::Precondition("no reduction exists; rows are not tree degree sequences".into()))
}

/// Drops column `v` and lowers `d_w^{(i)}` by one.
pub fn apply_reduction(m: &DegreeMatrix, r: &Reduction) -> Result<DegreeMatrix, BuildError> {
    if !r.holds_for(m) {
        return Err(BuildError::InvalidReduction { v: r.v, w: r.w, i: r.i });
    }
    let n = m.n() - 1;
    let mut entries = Vec::with_capacity(m.k() * n);
    for row in 0..m.k() {
        entries.extend((0..m.n()).filter(|&x| x != r.v).map(|x| m.get(row, x)));
    }
    let mut out = DegreeMatrix::from_entries(m.k(), n, entries);
    let w = r.reduced_w();
    out.set(r.i, w, m.get(r.i, r.w) - 1);
    Ok(out)
}

/// Inserts vertex `r.v` into a realization `g` of the reduced matrix: joins
/// it to `w` in color `i`, and for each rainbow pick `(a, b)` of color `c`
/// replaces the edge by `(v, a)` and `(v, b)` of color `c`.
///
/// `rm` lives in the reduced labeling and must hold one edge of every color
/// other than `i`, none touching `w`.
pub fn extend_realization(g: &ColoredGraph, r: &Reduction, rm: &RainbowMatching) -> Result<ColoredGraph, BuildError> {
    let k = g.k();
    let w = r.reduced_w();
    if r.v > g.n() || w >= g.n() || r.i >= k {
        return Err(BuildError::Precondition("reduction does not fit the graph".into()));
    }
    if rm.touches(w) {
        return Err(BuildError::Precondition(format!("rainbow matching touches vertex {}", w + 1)));
    }
    let mut colors: Vec<Color> = rm.picks().iter().map(|e| e.color).collect();
    colors.sort_unstable();
    if colors != (0..k).filter(|&c| c != r.i).collect::<Vec<_>>() {
        return Err(BuildError::Precondition(format!(
            "rainbow matching must use each color except {} once",
            r.i + 1
        )));
    }
    if !rm.lies_in(g) {
        return Err(BuildError::Precondition("rainbow matching is not part of the graph".into()));
    }
    let v = r.v;
    let lift = |x: Vertex| if x >= v { x + 1 } else { x };
    let mut out = ColoredGraph::new(g.n() + 1, k);
    for e in g.edges() {
        out.add_edge(lift(e.u), lift(e.v), e.color)?;
    }
    out.add_edge(v, lift(w), r.i)?;
    for e in rm.picks() {
        let (a, b) = (lift(e.u), lift(e.v));
        out.remove_edge(a, b, e.color)?;
        out.add_edge(v, a, e.color)?;
        out.add_edge(v, b, e.color)?;
    }
    Ok(out)
}
