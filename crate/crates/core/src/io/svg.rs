//! SVG drawings of three-dimensional fans intersected with `x+y+z=1`.

use std::fmt::Write;

use thiserror::Error;

use crate::algebra::marked::MarkedBasis;
use crate::algebra::rational::Rational;
use crate::fan::{cone_of, FanError};
use crate::linalg::rref_integer;
use crate::lp::homogeneity_space;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("rendering needs 3 effective variables, found {0}")]
    WrongDimension(usize),
    #[error("nothing to render")]
    Empty,
    #[error(transparent)]
    Fan(#[from] FanError),
}

type Point = [Rational; 3];

const SCALE: f64 = 400.0;
const MARGIN: f64 = 20.0;

fn point(a: i64, b: i64, c: i64) -> Point {
    [Rational::from(a), Rational::from(b), Rational::from(c)]
}

fn eval(alpha: &[Rational; 3], p: &Point) -> Rational {
    alpha.iter().zip(p).map(|(x, y)| x * y).sum()
}

/// Keeps the part of `poly` where `alpha . p >= 0`.
fn clip(poly: &[Point], alpha: &[Rational; 3]) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let p = &poly[i];
        let q = &poly[(i + 1) % poly.len()];
        let fp = eval(alpha, p);
        let fq = eval(alpha, q);
        if !fp.is_negative() {
            out.push(p.clone());
        }
        if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
            let t = &fp / &(&fp - &fq);
            out.push(std::array::from_fn(|k| &p[k] + &(&t * &(&q[k] - &p[k]))));
        }
    }
    out
}

/// Chart coordinates: `a` at the right, `b` at the left, `c` at the top.
fn project(p: &Point) -> (f64, f64) {
    let s3 = 3f64.sqrt() / 2.0;
    let (a, b, c) = (p[0].to_f64(), p[1].to_f64(), p[2].to_f64());
    let x = s3 * (a - b);
    let y = c - 0.5 * (a + b);
    (MARGIN + SCALE * (x + s3), MARGIN + SCALE * (1.0 - y))
}

fn coords(p: &Point) -> String {
    let (x, y) = project(p);
    format!("{x:.3},{y:.3}")
}

fn path(poly: &[Point]) -> String {
    poly.iter().map(coords).collect::<Vec<_>>().join(" ")
}

fn on_simplex_boundary(p: &Point, q: &Point) -> bool {
    (0..3).any(|k| p[k].is_zero() && q[k].is_zero())
}

/// Maximal cones intersected with the standard simplex `a+b+c = 1`, drawn
/// as filled polygons over the shaded simplex, with the walls between them
/// as line segments. With more than three variables the lineality space
/// must have dimension `n - 3`; its pivot coordinates are dropped.
pub fn render_slice_svg(bases: &[MarkedBasis]) -> Result<String, RenderError> {
    let first = bases.first().ok_or(RenderError::Empty)?;
    let n = first.nvars();
    let kept: Vec<usize> = if n == 3 {
        (0..3).collect()
    } else {
        let (lineality, h) = homogeneity_space(&first.differences(), n);
        if n - h != 3 {
            return Err(RenderError::WrongDimension(n - h));
        }
        let pivots = rref_integer(&lineality, n).pivots;
        (0..n).filter(|j| !pivots.contains(j)).collect()
    };
    let simplex = vec![point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)];
    let width = 2.0 * MARGIN + SCALE * 3f64.sqrt();
    let height = 2.0 * MARGIN + SCALE * 1.5;
    let mut regions = Vec::new();
    let mut walls = std::collections::BTreeSet::new();
    for g in bases {
        let c = cone_of(g)?;
        let mut poly = simplex.clone();
        for a in &c.inequalities {
            let alpha: [Rational; 3] =
                std::array::from_fn(|k| Rational::from(&a.entries()[kept[k]]));
            poly = clip(&poly, &alpha);
            if poly.is_empty() {
                break;
            }
        }
        if poly.len() < 3 {
            continue;
        }
        for i in 0..poly.len() {
            let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
            if !on_simplex_boundary(p, q) {
                let (a, b) = (coords(p), coords(q));
                walls.insert(if a <= b { (a, b) } else { (b, a) });
            }
        }
        regions.push(poly);
    }
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.3} {height:.3}\">"
    )
    .expect("string write");
    writeln!(
        out,
        "<polygon points=\"{}\" fill=\"#d0d0d0\" stroke=\"none\"/>",
        path(&simplex)
    )
    .expect("string write");
    for (i, poly) in regions.iter().enumerate() {
        let hue = (i * 137) % 360;
        writeln!(
            out,
            "<polygon class=\"cone\" points=\"{}\" fill=\"hsl({hue},60%,70%)\" fill-opacity=\"0.6\" stroke=\"none\"/>",
            path(poly)
        )
        .expect("string write");
    }
    for ((x1, y1), (x2, y2)) in walls.iter().map(|(a, b)| (split(a), split(b))) {
        writeln!(
            out,
            "<line class=\"wall\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"black\" stroke-width=\"0.8\"/>"
        )
        .expect("string write");
    }
    writeln!(
        out,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"#606060\" stroke-width=\"2\"/>",
        path(&simplex)
    )
    .expect("string write");
    out.push_str("</svg>\n");
    Ok(out)
}

fn split(s: &str) -> (&str, &str) {
    s.split_once(',').expect("formatted point")
}

/// Number of cone regions in an SVG produced by `render_slice_svg`.
pub fn region_count(svg: &str) -> usize {
    svg.matches("class=\"cone\"").count()
}
