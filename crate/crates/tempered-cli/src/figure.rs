//! Deterministic SVG rendering of a lattice pair: ambient points as filled
//! dots, sublattice points additionally ringed, and circles at the two
//! minimal lengths.
//!
//! Point selection and classification stay exact (rational window cutoff);
//! floating point appears only in the emitted coordinates, rounded to six
//! decimals.

use tempered_core::verifier::{classify, short_vectors, Gram, PairLattice};
use tempered_core::{Int, Rational};

/// What to draw: the pair, a window radius measured in units of the
/// sublattice's minimal vector length, and styling.
#[derive(Clone, Debug)]
pub struct FigureSpec {
    pub pair: PairLattice,
    /// Window radius as a multiple of `sqrt(m_M)`; must be positive.
    pub window: Rational,
    pub draw_circles: bool,
    pub point_radius: f64,
}

fn to_f64(r: Rational) -> f64 {
    (*r.numer() as f64) / (*r.denom() as f64)
}

/// Renders the figure; byte-identical output for identical specs.
pub fn render_figure(spec: &FigureSpec) -> Result<String, String> {
    if spec.window <= Rational::from_integer(0) {
        return Err("window radius must be positive".into());
    }
    let g = spec.pair.gram;
    let c = classify(&spec.pair);
    // Exact cutoff: keep v with v G v^T <= window^2 * m_M.
    let cutoff = spec.window * spec.window * c.min_inside;
    let mut points: Vec<[Int; 2]> = vec![[0, 0]];
    for v in short_vectors(&g, cutoff) {
        points.push(v);
        points.push([-v[0], -v[1]]);
    }
    points.sort_unstable();

    // Isometric embedding of the basis: e1 = (sqrt(g11), 0),
    // e2 = (g12 / sqrt(g11), sqrt(det / g11)).
    let g11 = to_f64(g.g11);
    let e1x = g11.sqrt();
    let e2x = to_f64(g.g12) / e1x;
    let e2y = (to_f64(g.det()) / g11).sqrt();

    let window_len = to_f64(cutoff).sqrt();
    let half = 200.0;
    let scale = (half - 20.0) / window_len;
    let place = |v: [Int; 2]| -> (f64, f64) {
        let px = v[0] as f64 * e1x + v[1] as f64 * e2x;
        let py = v[1] as f64 * e2y;
        (half + scale * px, half - scale * py)
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        (2.0 * half) as i64
    ));
    svg.push_str(&format!(
        "<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n",
        (2.0 * half) as i64
    ));
    if spec.draw_circles {
        for r in [c.min_outside, c.min_inside] {
            svg.push_str(&format!(
                "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"/>\n",
                half,
                half,
                scale * to_f64(r).sqrt()
            ));
        }
    }
    for &v in &points {
        let (x, y) = place(v);
        if spec.pair.contains(v) {
            svg.push_str(&format!(
                "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n",
                x,
                y,
                2.2 * spec.point_radius
            ));
        }
        svg.push_str(&format!(
            "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"black\"/>\n",
            x, y, spec.point_radius
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Convenience: the number of lattice points drawn for a spec (origin
/// included), used by tests.
pub fn point_count(spec: &FigureSpec) -> Result<usize, String> {
    if spec.window <= Rational::from_integer(0) {
        return Err("window radius must be positive".into());
    }
    let c = classify(&spec.pair);
    let cutoff = spec.window * spec.window * c.min_inside;
    Ok(1 + 2 * short_vectors(&spec.pair.gram, cutoff).len())
}

/// The hexagonal pair of an index-`ell` Eisenstein sublattice given by its
/// matrix rows, as a ready-to-render pair.
pub fn hexagonal_pair(rows: [[Int; 2]; 2], ell: Int) -> Result<PairLattice, String> {
    PairLattice::new(Gram::hexagonal(), rows, ell).map_err(|e| e.to_string())
}
