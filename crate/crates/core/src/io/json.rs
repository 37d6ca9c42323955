//! JSON output. Every number is written as an exact decimal string and keys
//! are sorted, so output is byte-stable.

use serde_json::{json, Value};

use crate::algebra::marked::MarkedBasis;
use crate::algebra::monomial::IntegerVector;
use crate::algebra::rational::{primitive_integer_vector, Rational};
use crate::fan::{cone_of, Counters, FacetNormal, FanError, FanSummary, RunStats};
use crate::linalg::rref_integer;
use crate::lp::{faces_all, homogeneity_space, relative_interior_point, Cone};

use super::text::{format_marked, format_polynomial};

pub fn vector_json(v: &IntegerVector) -> Value {
    Value::Array(
        v.entries()
            .iter()
            .map(|x| Value::String(x.to_string()))
            .collect(),
    )
}

pub fn rationals_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn basis_json(g: &MarkedBasis, vars: &[String]) -> Value {
    Value::Array(
        g.elements()
            .iter()
            .map(|p| Value::String(format_marked(p.body(), p.marked(), vars)))
            .collect(),
    )
}

pub fn cone_json(c: &Cone) -> Value {
    json!({
        "n": c.n.to_string(),
        "equations": c.equations.iter().map(vector_json).collect::<Vec<_>>(),
        "inequalities": c.inequalities.iter().map(vector_json).collect::<Vec<_>>(),
    })
}

pub fn facets_json(facets: &[FacetNormal]) -> Value {
    Value::Array(
        facets
            .iter()
            .map(|f| json!({ "normal": vector_json(&f.alpha), "flippable": f.flippable }))
            .collect(),
    )
}

pub fn counters_json(c: &Counters) -> Value {
    json!({
        "facets": c.facets.to_string(),
        "shoots": c.shoots.to_string(),
        "flips": c.flips.to_string(),
        "lp_solves": c.lp_solves.to_string(),
    })
}

/// Cone count, counters and wall time in milliseconds.
pub fn stats_json(s: &RunStats, cones: u64) -> Value {
    json!({
        "cones": cones.to_string(),
        "counters": counters_json(&s.counters),
        "wall_time_ms": s.wall_time.as_millis().to_string(),
    })
}

/// Primitive directions of the rays of a cone modulo its lineality space,
/// each reduced so that the pivot coordinates of the lineality space vanish.
pub fn rays(c: &Cone, lineality: &[IntegerVector]) -> Vec<IntegerVector> {
    let h = lineality.len();
    let r = rref_integer(lineality, c.n);
    let mut out: Vec<IntegerVector> = faces_all(c)
        .into_iter()
        .filter(|f| f.dimension() == h + 1)
        .map(|f| {
            IntegerVector::new(primitive_integer_vector(
                &r.reduce(&relative_interior_point(&f)),
            ))
        })
        .collect();
    out.sort();
    out
}

/// The document for a finished enumeration. With `geometry` each cone also
/// lists its facet normals and rays.
pub fn summary_json(
    s: &FanSummary,
    vars: &[String],
    geometry: bool,
    warnings: &[String],
) -> Result<Value, FanError> {
    let lineality = match s.maximal_cones.first() {
        Some(g) => homogeneity_space(&g.differences(), g.nvars()).0,
        None => Vec::new(),
    };
    let mut cones = Vec::with_capacity(s.maximal_cones.len());
    for (i, g) in s.maximal_cones.iter().enumerate() {
        let mut entry = serde_json::Map::new();
        entry.insert("basis".into(), basis_json(g, vars));
        if let Some(sizes) = &s.orbit_sizes {
            entry.insert("orbit_size".into(), Value::String(sizes[i].to_string()));
        }
        if geometry {
            let c = cone_of(g)?;
            entry.insert(
                "facets".into(),
                Value::Array(c.inequalities.iter().map(vector_json).collect()),
            );
            entry.insert(
                "rays".into(),
                Value::Array(rays(&c, &lineality).iter().map(vector_json).collect()),
            );
        }
        cones.push(Value::Object(entry));
    }
    Ok(json!({
        "variables": vars,
        "h": s.h.to_string(),
        "total_cones": s.total_cones().to_string(),
        "maximal_cones": cones,
        "f_vector": s.f_vector.as_ref().map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        "universal_basis": s.universal_basis.as_ref().map(|u| u.iter().map(|p| format_polynomial(p, vars)).collect::<Vec<_>>()),
        "counters": counters_json(&s.counters),
        "warnings": warnings,
    }))
}

/// Pretty-printed with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
