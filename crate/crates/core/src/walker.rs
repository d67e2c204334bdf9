//! Letter streams as edge-crossing paths in the triangulated integer grid.
//!
//! The plane is triangulated by horizontal edges `(i,j)-(i+1,j)`, vertical
//! edges `(i,j)-(i,j+1)` and slope-one diagonals `(i,j)-(i+1,j+1)`; lattice
//! points are punctures.  A directed edge records which way a curve crossed
//! it; each letter moves the curve out of the triangle it just entered,
//! through the left (`L`) or right (`R`) of the two remaining edges.  The
//! crossing points are edge midpoints, so the whole construction lives on
//! half-integer coordinates and every quantity here is computed in exact
//! integer arithmetic (doubled coordinates).

use std::fmt;

use thiserror::Error;

use crate::codeword::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
    Diagonal,
}

impl EdgeKind {
    pub fn as_char(self) -> char {
        match self {
            EdgeKind::Horizontal => 'H',
            EdgeKind::Vertical => 'V',
            EdgeKind::Diagonal => 'D',
        }
    }
}

/// Which side the curve crossed from.  `Positive` crossings move up
/// (horizontal edges), right (vertical edges) or up-left (diagonals).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingOrientation {
    Positive,
    Negative,
}

impl CrossingOrientation {
    pub fn flipped(self) -> Self {
        match self {
            CrossingOrientation::Positive => CrossingOrientation::Negative,
            CrossingOrientation::Negative => CrossingOrientation::Positive,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            CrossingOrientation::Positive => '+',
            CrossingOrientation::Negative => '-',
        }
    }
}

/// An oriented crossing of one triangulation edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirectedEdge {
    pub kind: EdgeKind,
    pub base: (i64, i64),
    pub orientation: CrossingOrientation,
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({},{}){}",
            self.kind.as_char(),
            self.base.0,
            self.base.1,
            self.orientation.as_char()
        )
    }
}

impl DirectedEdge {
    /// Endpoints of the undirected edge.
    pub fn endpoints(&self) -> ((i64, i64), (i64, i64)) {
        let (i, j) = self.base;
        match self.kind {
            EdgeKind::Horizontal => ((i, j), (i + 1, j)),
            EdgeKind::Vertical => ((i, j), (i, j + 1)),
            EdgeKind::Diagonal => ((i, j), (i + 1, j + 1)),
        }
    }

    /// Midpoint in doubled coordinates.
    pub fn midpoint2(&self) -> (i64, i64) {
        let ((ax, ay), (bx, by)) = self.endpoints();
        (ax + bx, ay + by)
    }

    pub fn reversed(&self) -> DirectedEdge {
        DirectedEdge {
            orientation: self.orientation.flipped(),
            ..*self
        }
    }

    pub fn translated(&self, v: (i64, i64)) -> DirectedEdge {
        DirectedEdge {
            base: (self.base.0 + v.0, self.base.1 + v.1),
            ..*self
        }
    }
}

/// Horizontal edge at the origin, crossed upward.
pub const DEFAULT_START: DirectedEdge = DirectedEdge {
    kind: EdgeKind::Horizontal,
    base: (0, 0),
    orientation: CrossingOrientation::Positive,
};

/// The next crossing after exiting the entered triangle to the left or
/// right.  A letter `L` cuts off the triangle vertex on the curve's left,
/// `R` the one on its right.
pub fn step(edge: DirectedEdge, letter: Letter) -> DirectedEdge {
    use CrossingOrientation::{Negative, Positive};
    use EdgeKind::{Diagonal, Horizontal, Vertical};
    let (i, j) = edge.base;
    let (kind, orientation, base) = match (edge.kind, edge.orientation, letter) {
        (Horizontal, Positive, Letter::L) => (Diagonal, Positive, (i, j)),
        (Horizontal, Positive, Letter::R) => (Vertical, Positive, (i + 1, j)),
        (Horizontal, Negative, Letter::L) => (Diagonal, Negative, (i, j - 1)),
        (Horizontal, Negative, Letter::R) => (Vertical, Negative, (i, j - 1)),
        (Vertical, Positive, Letter::L) => (Horizontal, Positive, (i, j + 1)),
        (Vertical, Positive, Letter::R) => (Diagonal, Negative, (i, j)),
        (Vertical, Negative, Letter::L) => (Horizontal, Negative, (i - 1, j)),
        (Vertical, Negative, Letter::R) => (Diagonal, Positive, (i - 1, j)),
        (Diagonal, Positive, Letter::L) => (Vertical, Negative, (i, j)),
        (Diagonal, Positive, Letter::R) => (Horizontal, Positive, (i, j + 1)),
        (Diagonal, Negative, Letter::L) => (Vertical, Positive, (i + 1, j)),
        (Diagonal, Negative, Letter::R) => (Horizontal, Negative, (i, j)),
    };
    DirectedEdge {
        kind,
        base,
        orientation,
    }
}

/// A walk through directed edges; consecutive crossings bound a common
/// triangle and the midpoint polyline avoids all lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pub crossings: Vec<DirectedEdge>,
}

impl LatticePath {
    /// Midpoint polyline in doubled coordinates.
    pub fn polyline2(&self) -> Vec<(i64, i64)> {
        self.crossings.iter().map(|e| e.midpoint2()).collect()
    }

    /// Midpoint polyline in plain coordinates, for display.
    pub fn polyline(&self) -> Vec<(f64, f64)> {
        self.crossings
            .iter()
            .map(|e| {
                let (x2, y2) = e.midpoint2();
                (x2 as f64 / 2.0, y2 as f64 / 2.0)
            })
            .collect()
    }

    /// The path is closed when it ends on the crossing it started with.
    pub fn is_closed(&self) -> bool {
        self.crossings.len() > 1 && self.crossings.first() == self.crossings.last()
    }
}

/// Realize a letter stream as a path: one crossing per letter after the
/// starting edge.
pub fn trace(letters: &[Letter], start: DirectedEdge) -> LatticePath {
    let mut crossings = Vec::with_capacity(letters.len() + 1);
    crossings.push(start);
    let mut cur = start;
    for &letter in letters {
        cur = step(cur, letter);
        crossings.push(cur);
    }
    LatticePath { crossings }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkerError {
    #[error("StartEndMismatch: one period ends on {end}, which is not a translate of {start}")]
    StartEndMismatch {
        start: DirectedEdge,
        end: DirectedEdge,
    },
}

/// The deck translation of one period of a cyclic word: the lattice vector
/// carrying the start crossing of the trace to its end crossing.
///
/// Defined when the end crossing is a parallel translate of the start,
/// which happens exactly when the letter counts satisfy
/// `#L - #R ≡ 0 (mod 6)`; cutting sequences of closed curves always do.
pub fn deck_translation(letters: &[Letter]) -> Result<(i64, i64), WalkerError> {
    let path = trace(letters, DEFAULT_START);
    let start = path.crossings[0];
    let end = *path.crossings.last().expect("nonempty");
    if start.kind != end.kind || start.orientation != end.orientation {
        return Err(WalkerError::StartEndMismatch { start, end });
    }
    Ok((end.base.0 - start.base.0, end.base.1 - start.base.1))
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.0 as i128 + a.1 as i128 * b.1 as i128
}

/// Order of two nonzero directions by angle in `[0, 2π)` from the positive
/// x-axis.
fn cmp_angle(u: (i64, i64), v: (i64, i64)) -> std::cmp::Ordering {
    fn class(w: (i64, i64)) -> u8 {
        debug_assert!(w != (0, 0));
        if w.1 > 0 {
            1
        } else if w.1 < 0 {
            3
        } else if w.0 > 0 {
            0
        } else {
            2
        }
    }
    let (cu, cv) = (class(u), class(v));
    if cu != cv {
        return cu.cmp(&cv);
    }
    if cu == 0 || cu == 2 {
        return std::cmp::Ordering::Equal;
    }
    // Same open half-plane: u before v iff v lies counter-clockwise of u.
    match cross(u, v) {
        c if c > 0 => std::cmp::Ordering::Less,
        c if c < 0 => std::cmp::Ordering::Greater,
        _ => {
            debug_assert!(dot(u, v) > 0);
            std::cmp::Ordering::Equal
        }
    }
}

/// Signed winding of the midpoint polyline around a lattice point,
/// counter-clockwise positive, computed exactly.
///
/// Closed paths get the usual integer winding number.  Open paths report
/// the number of turns that is stable under sliding the crossing points
/// along their edges: full turns completed strictly, so a path whose swept
/// angle is exactly `2πn` reports `n - 1` turns.  That is the count the
/// crossing sequence certifies on its own.
pub fn winding_number(path: &LatticePath, center: (i64, i64)) -> i64 {
    let pts = path.polyline2();
    if pts.len() < 2 {
        return 0;
    }
    let c = (2 * center.0, 2 * center.1);
    let rel: Vec<(i64, i64)> = pts.iter().map(|&(x, y)| (x - c.0, y - c.1)).collect();
    debug_assert!(rel.iter().all(|&p| p != (0, 0)), "polyline through center");

    // Signed crossings of the ray {angle = 0}: up-crossings on the right of
    // the center count +1, down-crossings -1.
    let mut w: i64 = 0;
    for seg in rel.windows(2) {
        let (a, b) = (seg[0], seg[1]);
        if a.1 < 0 && b.1 >= 0 {
            if cross(a, b) > 0 {
                w += 1;
            }
        } else if b.1 < 0 && a.1 >= 0 && cross(a, b) < 0 {
            w -= 1;
        }
    }

    if path.is_closed() {
        return w;
    }

    let start = rel[0];
    let end = *rel.last().expect("nonempty");
    match cmp_angle(end, start) {
        std::cmp::Ordering::Equal => {
            if w > 0 {
                w - 1
            } else if w < 0 {
                w + 1
            } else {
                0
            }
        }
        std::cmp::Ordering::Greater => {
            if w >= 0 {
                w
            } else {
                w + 1
            }
        }
        std::cmp::Ordering::Less => {
            if w > 0 {
                w - 1
            } else {
                w
            }
        }
    }
}

/// Lattice points inside the path's bounding box with nonzero winding.
pub fn nonzero_windings(path: &LatticePath) -> Vec<((i64, i64), i64)> {
    let pts = path.polyline2();
    if pts.len() < 2 {
        return Vec::new();
    }
    let min_x = pts.iter().map(|p| p.0).min().unwrap().div_euclid(2);
    let max_x = pts.iter().map(|p| p.0).max().unwrap().div_euclid(2) + 1;
    let min_y = pts.iter().map(|p| p.1).min().unwrap().div_euclid(2);
    let max_y = pts.iter().map(|p| p.1).max().unwrap().div_euclid(2) + 1;
    let mut out = Vec::new();
    for j in min_y..=max_y {
        for i in min_x..=max_x {
            let w = winding_number(path, (i, j));
            if w != 0 {
                out.push(((i, j), w));
            }
        }
    }
    out
}

/// Rendering options for [`render_svg`].  `half_cell_px` is the pixel size
/// of half a lattice cell, so every drawn coordinate is an integer.
#[derive(Clone, Copy, Debug)]
pub struct RenderOptions {
    pub half_cell_px: i64,
    pub margin_cells: i64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            half_cell_px: 20,
            margin_cells: 1,
        }
    }
}

/// Deterministic SVG figure: the triangulated grid, lattice punctures, and
/// the midpoint polyline.  The canvas fits the path bounding box plus the
/// configured margin; an empty path shows one cell around the origin.
pub fn render_svg(path: &LatticePath, options: &RenderOptions) -> String {
    let s = options.half_cell_px.max(1);
    let margin = options.margin_cells.max(0);
    let pts = path.polyline2();

    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0i64, 2, 0, 2);
    if !pts.is_empty() {
        min_x = pts.iter().map(|p| p.0).min().unwrap().div_euclid(2);
        max_x = pts.iter().map(|p| p.0).max().unwrap().div_euclid(2) + 1;
        min_y = pts.iter().map(|p| p.1).min().unwrap().div_euclid(2);
        max_y = pts.iter().map(|p| p.1).max().unwrap().div_euclid(2) + 1;
    }
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;

    // Doubled lattice coordinates -> pixels, with the y-axis flipped so the
    // figure keeps the mathematical orientation.
    let px = |x2: i64| (x2 - 2 * min_x) * s;
    let py = |y2: i64| (2 * max_y - y2) * s;
    let width = px(2 * max_x);
    let height = py(2 * min_y);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
    ));

    svg.push_str("<g stroke=\"#c8c8c8\" stroke-width=\"1\">\n");
    for j in min_y..=max_y {
        for i in min_x..max_x {
            svg.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                px(2 * i),
                py(2 * j),
                px(2 * i + 2),
                py(2 * j)
            ));
        }
    }
    for i in min_x..=max_x {
        for j in min_y..max_y {
            svg.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                px(2 * i),
                py(2 * j),
                px(2 * i),
                py(2 * j + 2)
            ));
        }
    }
    for i in min_x..max_x {
        for j in min_y..max_y {
            svg.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                px(2 * i),
                py(2 * j),
                px(2 * i + 2),
                py(2 * j + 2)
            ));
        }
    }
    svg.push_str("</g>\n");

    svg.push_str("<g fill=\"#ffffff\" stroke=\"#303030\" stroke-width=\"2\">\n");
    for j in min_y..=max_y {
        for i in min_x..=max_x {
            svg.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
                px(2 * i),
                py(2 * j),
                (s / 5).max(2)
            ));
        }
    }
    svg.push_str("</g>\n");

    if pts.len() >= 2 {
        let points: Vec<String> = pts
            .iter()
            .map(|&(x2, y2)| format!("{},{}", px(x2), py(y2)))
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"{}\"/>\n",
            points.join(" ")
        ));
    }
    if let Some(&(x2, y2)) = pts.first() {
        svg.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#c0392b\"/>\n",
            px(x2),
            py(y2),
            (s / 6).max(2)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeword::letters_from_str;

    fn letters(text: &str) -> Vec<Letter> {
        letters_from_str(text).unwrap()
    }

    #[test]
    fn lr_ends_on_parallel_translate() {
        let path = trace(&letters("LR"), DEFAULT_START);
        assert_eq!(path.crossings.len(), 3);
        let (start, end) = (path.crossings[0], path.crossings[2]);
        assert_eq!(start.kind, end.kind);
        assert_eq!(start.orientation, end.orientation);
        assert_eq!(deck_translation(&letters("LR")).unwrap(), (0, 1));
    }

    #[test]
    fn r6_closes_around_a_vertex() {
        let path = trace(&letters("RRRRRR"), DEFAULT_START);
        assert!(path.is_closed());
        assert_eq!(winding_number(&path, (1, 0)), -1);
        assert_eq!(deck_translation(&letters("RRRRRR")).unwrap(), (0, 0));
    }

    #[test]
    fn lr7l_winds_once_clockwise() {
        let path = trace(&letters("LRRRRRRRL"), DEFAULT_START);
        assert_eq!(path.crossings.len(), 10);
        assert_eq!(winding_number(&path, (1, 1)), -1);
    }

    #[test]
    fn central_exponent_determines_winding() {
        for k in 1u64..=5 {
            for r in 0u64..=5 {
                let m = 6 * k + r;
                let cw = letters(&format!("LR^{m}L"));
                let path = trace(&cw, DEFAULT_START);
                assert_eq!(winding_number(&path, (1, 1)), -(k as i64), "LR^{m}L");
                let ccw = letters(&format!("RL^{m}R"));
                let path = trace(&ccw, DEFAULT_START);
                assert_eq!(winding_number(&path, (1, 1)), k as i64, "RL^{m}R");
            }
        }
    }

    #[test]
    fn winding_of_r_runs_steps_every_six() {
        for m in 1u64..=36 {
            let path = trace(&letters(&format!("R^{m}")), DEFAULT_START);
            let expect = -((m / 6) as i64);
            assert_eq!(winding_number(&path, (1, 0)), expect, "R^{m}");
        }
    }

    #[test]
    fn far_centers_have_zero_winding() {
        let path = trace(&letters("LRRRRRRRLLRR"), DEFAULT_START);
        assert_eq!(winding_number(&path, (50, 50)), 0);
        assert_eq!(winding_number(&path, (-40, 3)), 0);
    }

    #[test]
    fn left_and_right_are_mirrors() {
        let edges = [EdgeKind::Horizontal, EdgeKind::Vertical, EdgeKind::Diagonal];
        let orients = [CrossingOrientation::Positive, CrossingOrientation::Negative];
        for kind in edges {
            for orientation in orients {
                let e = DirectedEdge {
                    kind,
                    base: (3, -2),
                    orientation,
                };
                assert_eq!(step(step(e, Letter::L).reversed(), Letter::R), e.reversed());
                assert_eq!(step(step(e, Letter::R).reversed(), Letter::L), e.reversed());
            }
        }
    }

    #[test]
    fn consecutive_crossings_share_a_triangle() {
        // Every step must land on one of the two other edges of the entered
        // triangle; verified via midpoint distance (shared triangle means
        // the midpoints are at most one cell apart).
        let path = trace(&letters("LLRRLRLLRRRRRRLL"), DEFAULT_START);
        for seg in path.polyline2().windows(2) {
            let dx = (seg[1].0 - seg[0].0).abs();
            let dy = (seg[1].1 - seg[0].1).abs();
            assert!(dx <= 1 && dy <= 1 && (dx, dy) != (0, 0));
        }
    }

    #[test]
    fn translation_equivariance() {
        let word = letters("LLRRLRRRRRRL");
        let base = trace(&word, DEFAULT_START);
        let shifted = trace(&word, DEFAULT_START.translated((5, -7)));
        for (a, b) in base.crossings.iter().zip(&shifted.crossings) {
            assert_eq!(&a.translated((5, -7)), b);
        }
    }

    #[test]
    fn double_word_doubles_translation() {
        let word = letters("LLRR");
        let v = deck_translation(&word).unwrap();
        let doubled: Vec<Letter> = word.iter().chain(word.iter()).copied().collect();
        let v2 = deck_translation(&doubled).unwrap();
        assert_eq!(v2, (2 * v.0, 2 * v.1));
    }

    #[test]
    fn unbalanced_words_have_no_translation() {
        assert!(matches!(
            deck_translation(&letters("LRR")),
            Err(WalkerError::StartEndMismatch { .. })
        ));
    }

    #[test]
    fn winding_concatenation_is_nearly_additive() {
        let word = letters("LR^13L");
        let path = trace(&word, DEFAULT_START);
        for cut in 1..word.len() {
            let head = LatticePath {
                crossings: path.crossings[..=cut].to_vec(),
            };
            let tail = LatticePath {
                crossings: path.crossings[cut..].to_vec(),
            };
            let whole = winding_number(&path, (1, 1));
            let parts = winding_number(&head, (1, 1)) + winding_number(&tail, (1, 1));
            assert!(
                (whole - parts).abs() <= 1,
                "cut at {cut}: {whole} vs {parts}"
            );
        }
        // Closed loops split at a repeated crossing are exactly additive.
        let loop12 = trace(&letters("R^12"), DEFAULT_START);
        let half = trace(&letters("R^6"), DEFAULT_START);
        assert_eq!(
            winding_number(&loop12, (1, 0)),
            2 * winding_number(&half, (1, 0))
        );
    }

    #[test]
    fn empty_path_renders_grid_only() {
        let path = trace(&[], DEFAULT_START);
        let svg = render_svg(&path, &RenderOptions::default());
        assert!(svg.contains("<svg"));
        assert!(svg.contains("<line"));
        assert!(!svg.contains("<polyline"));
    }

    #[test]
    fn svg_is_well_formed() {
        let path = trace(&letters("LRRRRRRRL"), DEFAULT_START);
        let svg = render_svg(&path, &RenderOptions::default());
        // Minimal structural XML check: declaration, balanced tags.
        assert!(svg.starts_with("<?xml"));
        let mut stack: Vec<String> = Vec::new();
        let mut rest = svg.as_str();
        while let Some(open) = rest.find('<') {
            rest = &rest[open + 1..];
            let close = rest.find('>').expect("unclosed tag");
            let tag = &rest[..close];
            rest = &rest[close + 1..];
            if tag.starts_with('?') {
                continue;
            }
            if let Some(name) = tag.strip_prefix('/') {
                assert_eq!(stack.pop().as_deref(), Some(name));
            } else if !tag.ends_with('/') {
                let name: String = tag
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric())
                    .collect();
                stack.push(name);
            }
        }
        assert!(stack.is_empty(), "unbalanced tags: {stack:?}");
    }

    #[test]
    fn svg_bytes_are_deterministic() {
        let path = trace(&letters("LR^7L"), DEFAULT_START);
        let a = render_svg(&path, &RenderOptions::default());
        let b = render_svg(&path, &RenderOptions::default());
        assert_eq!(a, b);
    }

    #[test]
    fn svg_matches_golden_figure() {
        let path = trace(&letters("LR^7L"), DEFAULT_START);
        let svg = render_svg(&path, &RenderOptions::default());
        assert_eq!(svg, include_str!("../tests/golden/lr7l.svg"));
    }
}
