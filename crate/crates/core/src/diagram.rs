//! Rank-2 root diagrams as SVG or ASCII.
//!
//! This is the only place scalars become floats: each real component is
//! converted with [`Scalar::to_f64`] (binary64, nearest) and printed with
//! four decimals, so output stays byte-deterministic.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lie::RootVector;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::verifier::root_table;

/// Half-width of the fixed drawing window `[−3, 3]²`.
pub const EXTENT: f64 = 3.0;

/// Ladder generators of `p` that have a root, with that root.
pub fn labeled_roots(p: &Presentation) -> Result<Vec<(String, RootVector)>> {
    if p.rank() != 2 {
        return Err(Error::RankNotTwo(p.rank()));
    }
    Ok(root_table(p)
        .into_iter()
        .filter_map(|e| Some((e.label.clone(), e.root()?.clone())))
        .collect())
}

fn points(roots: &[(String, RootVector)]) -> Result<Vec<(&str, f64, f64)>> {
    if roots.is_empty() {
        return Err(Error::EmptyRootSet);
    }
    roots
        .iter()
        .map(|(label, r)| {
            if r.rank() != 2 {
                return Err(Error::RankNotTwo(r.rank()));
            }
            if !r.components().iter().all(Scalar::is_real) {
                return Err(Error::NonRealRoot(label.clone()));
            }
            Ok((label.as_str(), r.0[0].to_f64().0, r.0[1].to_f64().0))
        })
        .collect()
}

/// Whether the root set is mapped to itself by `(x, y) ↦ (y, x)`.
pub fn swap_invariant(roots: &[(String, RootVector)]) -> bool {
    let set: BTreeSet<Vec<String>> = roots
        .iter()
        .map(|(_, r)| r.0.iter().map(|c| c.to_string()).collect())
        .collect();
    set.iter().all(|v| {
        let mut swapped = v.clone();
        swapped.reverse();
        v.len() == 2 && set.contains(&swapped)
    })
}

fn num(x: f64) -> String {
    // avoid "-0.0000"
    let s = format!("{x:.4}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.0000".to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(roots: &[(String, RootVector)]) -> Result<String> {
    let pts = points(roots)?;
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-3 -3 6 6\" width=\"480\" height=\"480\">\n",
    );
    out.push_str(concat!(
        "  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" ",
        "markerWidth=\"4\" markerHeight=\"4\" orient=\"auto\">",
        "<path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n"
    ));
    out.push_str("  <g stroke=\"#bbb\" stroke-width=\"0.01\">\n");
    out.push_str("    <line x1=\"-3\" y1=\"0\" x2=\"3\" y2=\"0\"/>\n");
    out.push_str("    <line x1=\"0\" y1=\"-3\" x2=\"0\" y2=\"3\"/>\n");
    out.push_str("  </g>\n");
    out.push_str("  <g stroke=\"#000\" stroke-width=\"0.03\" marker-end=\"url(#head)\">\n");
    for (_, x, y) in &pts {
        // SVG y grows downward
        let _ = writeln!(
            out,
            "    <line x1=\"0\" y1=\"0\" x2=\"{}\" y2=\"{}\"/>",
            num(*x),
            num(-y)
        );
    }
    out.push_str("  </g>\n");
    out.push_str("  <g font-family=\"sans-serif\" font-size=\"0.22\" text-anchor=\"middle\">\n");
    for (label, x, y) in &pts {
        let len = x.hypot(*y);
        let (dx, dy) = if len > 0.0 { (x / len, y / len) } else { (0.0, 1.0) };
        let _ = writeln!(
            out,
            "    <text x=\"{}\" y=\"{}\">{}</text>",
            num(x + 0.25 * dx),
            num(-(y + 0.25 * dy) + 0.07),
            escape(label)
        );
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

const COLS_PER_UNIT: f64 = 4.0;
const ROWS_PER_UNIT: f64 = 2.0;

pub fn render_ascii(roots: &[(String, RootVector)]) -> Result<String> {
    let pts = points(roots)?;
    let w = (2.0 * EXTENT * COLS_PER_UNIT) as usize + 1;
    let h = (2.0 * EXTENT * ROWS_PER_UNIT) as usize + 1;
    let (cx, cy) = (w / 2, h / 2);
    let mut grid = vec![vec![' '; w]; h];
    for (c, cell) in grid[cy].iter_mut().enumerate() {
        *cell = if c == cx { '+' } else { '-' };
    }
    for row in grid.iter_mut() {
        if row[cx] == ' ' {
            row[cx] = '|';
        }
    }
    for (_, x, y) in &pts {
        let c = (cx as f64 + x * COLS_PER_UNIT).round();
        let r = (cy as f64 - y * ROWS_PER_UNIT).round();
        if (0.0..w as f64).contains(&c) && (0.0..h as f64).contains(&r) {
            grid[r as usize][c as usize] = '*';
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push('\n');
    for ((label, root), (_, x, y)) in roots.iter().zip(&pts) {
        let _ = writeln!(out, "{label} {root} ~ ({}, {})", num(*x), num(*y));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn sl3c_is_swap_symmetric() {
        let roots = labeled_roots(&presets::sl3c()).unwrap();
        assert_eq!(roots.len(), 6);
        assert!(swap_invariant(&roots));
        let svg = render_svg(&roots).unwrap();
        assert!(svg.contains("viewBox=\"-3 -3 6 6\""));
        assert_eq!(svg.matches("<line x1=\"0\" y1=\"0\"").count(), 6);
    }

    #[test]
    fn gellmann_is_not_swap_symmetric() {
        let roots = labeled_roots(&presets::su3_gellmann()).unwrap();
        assert!(!swap_invariant(&roots));
    }

    #[test]
    fn single_root_and_errors() {
        let one = vec![("E".to_string(), RootVector(vec![s("1"), s("0")]))];
        let svg = render_svg(&one).unwrap();
        assert!(svg.contains("x2=\"1.0000\" y2=\"0.0000\""));
        let ascii = render_ascii(&one).unwrap();
        assert!(ascii.contains("E (1, 0) ~ (1.0000, 0.0000)"));

        assert!(matches!(render_svg(&[]), Err(Error::EmptyRootSet)));
        let rank3 = vec![("E".to_string(), RootVector(vec![s("1"), s("0"), s("0")]))];
        assert!(matches!(render_svg(&rank3), Err(Error::RankNotTwo(3))));
        let complex = vec![("E".to_string(), RootVector(vec![s("i"), s("0")]))];
        assert!(matches!(render_ascii(&complex), Err(Error::NonRealRoot(_))));
    }
}
