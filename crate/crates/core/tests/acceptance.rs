//! One line per acceptance criterion: `PASS` or `FAIL`, the criterion, and
//! what was measured. Exits non-zero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grobfan::fan::{bfs_enumerate, f_vector, homogeneity, reverse_search_collect, symmetric_bfs};
use grobfan::io::svg::region_count;
use grobfan::io::{parse_symmetry, render_slice_svg};
use grobfan::lp::{cone_combination, faces_all, lp_solve, strict_feasibility, Feasibility};
use grobfan::{
    buchberger, Cone, Counters, IntegerVector, LpStatus, MarkedBasis, PermutationGroup, Rational,
    TermOrderMatrix,
};

use common::{
    brute_force_face_dimensions, load, random_ideal, verify_basis, verify_flips, verify_gordan,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(t: Duration, limit: Duration) -> Result<(), String> {
    check(t < limit, format!("took {t:.1?}, limit {limit:?}"))
}

/// For a complete fan with lineality space of dimension `h` in `n`
/// variables, the alternating sum of the f-vector (indexed by dimension
/// modulo the lineality space) is `(-1)^(n-h)`.
fn euler(f: &[u64], n: usize, h: usize) -> Result<(), String> {
    let sum: i64 = f
        .iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum();
    let expected = if (n - h) % 2 == 0 { 1 } else { -1 };
    check(
        sum == expected,
        format!("alternating sum {sum}, expected {expected}"),
    )
}

fn enumerate(name: &str) -> (Vec<MarkedBasis>, Duration) {
    let d = load(name);
    let start = Instant::now();
    let all = reverse_search_collect(&d.generators, &TermOrderMatrix::default_for(d.nvars()))
        .expect("enumeration");
    (all, start.elapsed())
}

fn small_example() -> Outcome {
    let start = Instant::now();
    let (all, _) = enumerate("small.gf");
    let f = f_vector(&all).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    check(all.len() == 7, format!("{} cones", all.len()))?;
    check(f == [1, 8, 14, 7], format!("f-vector {f:?}"))?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("7 cones, f-vector {f:?}, {t:.2?}"))
}

fn three_variable_system() -> Outcome {
    let (all, t) = enumerate("system_abc.gf");
    check(all.len() == 360, format!("{} cones", all.len()))?;
    within(t, Duration::from_secs(600))?;
    let svg = render_slice_svg(&all).map_err(|e| e.to_string())?;
    check(
        region_count(&svg) == 360,
        format!("{} SVG regions", region_count(&svg)),
    )?;
    Ok(format!("360 cones, 360 SVG regions, {t:.2?}"))
}

fn grassmannian() -> Outcome {
    let start = Instant::now();
    let (all, _) = enumerate("grass25.gf");
    let h = homogeneity(&all[0]);
    let f = f_vector(&all).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    check(h == 5, format!("h = {h}"))?;
    check(f == [1, 20, 120, 300, 330, 132], format!("f-vector {f:?}"))?;
    euler(&f, 10, h)?;
    within(t, Duration::from_secs(1800))?;
    Ok(format!("h = 5, f-vector {f:?}, {t:.2?}"))
}

fn determinantal() -> Outcome {
    let start = Instant::now();
    let (all, _) = enumerate("det334.gf");
    let h = homogeneity(&all[0]);
    check(all.len() == 96, format!("{} cones", all.len()))?;
    check(h == 6, format!("h = {h}"))?;
    let f = f_vector(&all).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    check(
        f == [1, 12, 66, 204, 342, 288, 96],
        format!("f-vector {f:?} (stretch goal)"),
    )?;
    euler(&f, 12, h)?;
    within(t, Duration::from_secs(7200))?;
    Ok(format!("96 cones, h = 6, stretch f-vector {f:?}, {t:.2?}"))
}

fn symmetric_grassmannian() -> Outcome {
    let d = load("grass25.gf");
    let n = d.nvars();
    let start = Instant::now();
    let perms = parse_symmetry(d.symmetry.as_deref().expect("symmetry directive"), n)
        .map_err(|e| e.to_string())?;
    let group = PermutationGroup::new(n, perms).map_err(|e| e.to_string())?;
    let order = TermOrderMatrix::default_for(n);
    let sym = symmetric_bfs(&d.generators, &group, &order).map_err(|e| e.to_string())?;
    let plain = bfs_enumerate(&buchberger(&d.generators, &order).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let t = start.elapsed();
    check(
        sym.total_cones() == plain.len() as u64,
        format!("orbits sum to {} vs {}", sym.total_cones(), plain.len()),
    )?;
    check(plain.len() == 132, format!("{} cones", plain.len()))?;
    let expanded: HashSet<MarkedBasis> = sym.all_bases(&group).into_iter().collect();
    let direct: HashSet<MarkedBasis> = plain.into_iter().collect();
    check(
        expanded == direct,
        "orbit expansion differs from the plain traversal",
    )?;
    within(t, Duration::from_secs(3600))?;
    Ok(format!(
        "group order {}, {} orbits summing to 132, {t:.2?}",
        group.order(),
        sym.maximal_cones.len()
    ))
}

fn random_cone(rng: &mut ChaCha8Rng) -> Cone {
    let n = rng.gen_range(2..=4);
    let row = |rng: &mut ChaCha8Rng| {
        IntegerVector::from_i64(&(0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>())
    };
    let m = rng.gen_range(1..=6);
    let ineqs = (0..m).map(|_| row(rng)).collect();
    let eqs = if rng.gen_bool(0.2) {
        vec![row(rng)]
    } else {
        vec![]
    };
    Cone::new(n, eqs, ineqs)
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20240607);
    let order = TermOrderMatrix::default_for(3);
    let mut cones = 0;
    let mut edges = 0;
    for k in 0..20 {
        let gens = random_ideal(&mut rng);
        let before = Counters::snapshot();
        let rs = reverse_search_collect(&gens, &order).map_err(|e| format!("ideal {k}: {e}"))?;
        let counters = Counters::since(before);
        let set: HashSet<MarkedBasis> = rs.iter().cloned().collect();
        check(
            set.len() == rs.len(),
            format!("ideal {k}: reverse search repeated a basis"),
        )?;
        // (a)
        let bfs: HashSet<MarkedBasis> = bfs_enumerate(&rs[0])
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        check(
            bfs == set,
            format!("ideal {k}: reverse search and breadth-first search differ"),
        )?;
        let mut graph_edges = 0;
        for g in &rs {
            // (b)
            verify_basis(g).map_err(|e| format!("ideal {k}: {e}"))?;
            // (c)
            graph_edges += verify_flips(g, &set).map_err(|e| format!("ideal {k}: {e}"))?;
        }
        if !rs[0].is_unit() {
            check(
                counters.facets == rs.len() as u64,
                format!("ideal {k}: facet count {}", counters.facets),
            )?;
            check(
                counters.flips * 2 == graph_edges as u64,
                format!("ideal {k}: flip count {}", counters.flips),
            )?;
        }
        // (d)
        for _ in 0..100 {
            let w: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=50)).collect();
            let wo = TermOrderMatrix::weighted(&w, &order).map_err(|e| e.to_string())?;
            let g = buchberger(&gens, &wo).map_err(|e| e.to_string())?;
            check(
                set.contains(&g),
                format!("ideal {k}: basis for weight {w:?} not enumerated"),
            )?;
        }
        cones += rs.len();
        edges += graph_edges / 2;
    }
    // (e)
    for k in 0..60 {
        let c = random_cone(&mut rng);
        let oracle = brute_force_face_dimensions(&c).map_err(|e| format!("cone {k}: {e}"))?;
        let mut dims: Vec<usize> = faces_all(&c).iter().map(Cone::dimension).collect();
        dims.sort();
        check(
            dims == oracle,
            format!("cone {k} {c:?}: faces {dims:?} vs oracle {oracle:?}"),
        )?;
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "20 ideals, {cones} cones, {edges} edges, 2000 weights, 60 cones vs oracle, {t:.2?}"
    ))
}

fn exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut points = 0;
    let mut certificates = 0;
    let mut memberships = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=4);
        let row = |rng: &mut ChaCha8Rng| {
            IntegerVector::from_i64(&(0..n).map(|_| rng.gen_range(-4..=4)).collect::<Vec<_>>())
        };
        let strict: Vec<IntegerVector> = (0..rng.gen_range(1..=5)).map(|_| row(&mut rng)).collect();
        let eqs: Vec<IntegerVector> = (0..rng.gen_range(0..=1)).map(|_| row(&mut rng)).collect();
        match strict_feasibility(&eqs, &strict, n) {
            Feasibility::Point(x) => {
                let dot = |a: &IntegerVector| -> Rational {
                    a.entries()
                        .iter()
                        .zip(&x)
                        .map(|(p, q)| &Rational::from(p) * q)
                        .sum()
                };
                check(
                    eqs.iter().all(|e| dot(e).is_zero()),
                    "point violates an equation",
                )?;
                check(
                    strict.iter().all(|a| dot(a).is_positive()),
                    "point is not strictly feasible",
                )?;
                points += 1;
            }
            Feasibility::Certificate(l) => {
                verify_gordan(&eqs, &strict, &l, n)?;
                certificates += 1;
            }
        }
        // membership, with a Farkas separator for negative answers
        let gens: Vec<Vec<Rational>> = strict.iter().map(IntegerVector::to_rationals).collect();
        let target = row(&mut rng).to_rationals();
        match cone_combination(&target, &gens) {
            Some(m) => {
                check(m.iter().all(|x| !x.is_negative()), "negative multiplier")?;
                let sum: Vec<Rational> = (0..n)
                    .map(|j| gens.iter().zip(&m).map(|(g, x)| &g[j] * x).sum())
                    .collect();
                check(sum == target, "combination misses the target")?;
            }
            None => {
                // max -target.y  s.t.  -g.y <= 0, -target.y <= 1
                let mut a: Vec<Vec<Rational>> = gens
                    .iter()
                    .map(|g| g.iter().map(|x| -x).collect())
                    .collect();
                a.push(target.iter().map(|x| -x).collect());
                let mut b = vec![Rational::zero(); gens.len()];
                b.push(Rational::one());
                let obj: Vec<Rational> = target.iter().map(|x| -x).collect();
                let r = lp_solve(&a, &b, &obj).map_err(|e| e.to_string())?;
                check(
                    r.status == LpStatus::Optimal,
                    "separator program not optimal",
                )?;
                let y = r.point.expect("optimal point");
                let dot =
                    |v: &[Rational]| -> Rational { v.iter().zip(&y).map(|(p, q)| p * q).sum() };
                check(
                    gens.iter().all(|g| !dot(g).is_negative()),
                    "separator cuts a generator",
                )?;
                check(
                    dot(&target).is_negative(),
                    "separator does not cut the target",
                )?;
            }
        }
        memberships += 1;
    }
    // the suites above substitute every weight, witness and certificate exactly
    Ok(format!("{points} points, {certificates} Gordan certificates, {memberships} memberships verified with zero tolerance"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        (
            "small example: 7 cones, f-vector (1,8,14,7), < 5 s",
            small_example,
        ),
        (
            "three-variable example: 360 cones, < 10 min",
            three_variable_system,
        ),
        (
            "Grass(2,5): h = 5, f-vector (1,20,120,300,330,132), < 30 min",
            grassmannian,
        ),
        ("Det(3,3,4): 96 cones, h = 6", determinantal),
        (
            "symmetric vs plain traversal on Grass(2,5) under the 5-cycle, < 1 h",
            symmetric_grassmannian,
        ),
        (
            "property suite on 20 random ideals, < 10 min",
            property_suite,
        ),
        (
            "exactness of LP certificates and cone memberships",
            exactness,
        ),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS  {name}  [{detail}]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}  [{detail}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
