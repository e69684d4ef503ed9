//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use metrikos::balls::{ball_boundary, check_nesting, Ball, PlaneMetric};
use metrikos::isometry::{is_isometry, PlaneMap, SphereMap};
use metrikos::path::{count_geodesics, grid_graph, polyline_arc_distance, shortest_path_distance};
use metrikos::plane::{euclidean_distance, real_line_distance, taxicab_distance};
use metrikos::sample::{
    connected_graph, gaussian3, plane_point, polyline, sphere_point, sphere_point_at,
};
use metrikos::sphere::{
    chord_distance, circle_extremal_points, circular_projection, comparability_delta,
    great_circle_distance, r0_construction, sinc, Circle2D, Circle3D, SpherePoint,
};
use metrikos::{
    distance, verify_axioms, Axiom, DistanceMatrix, MetricSpec, Point, ToleranceConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn worked_distances() -> Outcome {
    let o = Point::from([0.0, 0.0]);
    let d = |spec: MetricSpec, q: [f64; 2]| distance(&spec, &o, &Point::from(q)).map_err(err);
    let cases = [
        (MetricSpec::Euclidean, [1.0, 1.0], 2f64.sqrt()),
        (MetricSpec::Taxicab, [1.0, 1.0], 2.0),
        (MetricSpec::Chebyshev, [1.0, 1.0], 1.0),
        (MetricSpec::Euclidean, [1.0, 0.0], 1.0),
        (MetricSpec::Taxicab, [1.0, 0.0], 1.0),
        (MetricSpec::Chebyshev, [1.0, 0.0], 1.0),
    ];
    for (spec, q, want) in cases {
        let name = spec.name();
        let got = d(spec, q)?;
        ensure!((got - want).abs() <= 1e-12, "{name} {q:?}: {got} vs {want}");
    }
    Ok("6 values".into())
}

fn builtin_samples(r: &mut ChaCha8Rng) -> Vec<(MetricSpec, Vec<Point>)> {
    let n = 64;
    let plane: Vec<Point> = (0..n).map(|_| plane_point(r, 2, 10.0)).collect();
    let indices: Vec<Point> = (0..n).map(Point::index).collect();
    vec![
        (MetricSpec::Euclidean, plane.clone()),
        (MetricSpec::Taxicab, plane.clone()),
        (MetricSpec::Chebyshev, plane.clone()),
        (MetricSpec::Discrete, plane),
        (
            MetricSpec::RealLine,
            (0..n).map(|_| plane_point(r, 1, 10.0)).collect(),
        ),
        (
            MetricSpec::GreatCircle,
            (0..n).map(|_| sphere_point(r).to_point()).collect(),
        ),
        (
            MetricSpec::graph(connected_graph(r, n, 2 * n)),
            indices.clone(),
        ),
        (MetricSpec::polyline(polyline(r, n)), indices),
    ]
}

fn axiom_certification() -> Outcome {
    let tol = ToleranceConfig::default();
    let mut r = rng(2);
    for (spec, sample) in builtin_samples(&mut r) {
        let start = Instant::now();
        let report = verify_axioms(&spec, &sample, &tol).map_err(err)?;
        let elapsed = start.elapsed();
        ensure!(
            report.all_ok(),
            "{spec} failed: {:?}",
            report.witnesses.first()
        );
        ensure!(elapsed < Duration::from_secs(2), "{spec} took {elapsed:?}");
    }
    let planted = DistanceMatrix::from_rows(vec![
        vec![0.0, 1.0, 4.0],
        vec![1.0, 0.0, 1.0],
        vec![4.0, 1.0, 0.0],
    ])
    .map_err(err)?;
    let pts = planted.index_points();
    let report = verify_axioms(&MetricSpec::matrix(planted), &pts, &tol).map_err(err)?;
    ensure!(!report.holds(Axiom::Triangle), "planted matrix passed");
    let w = report
        .witnesses_for(Axiom::Triangle)
        .next()
        .ok_or("no witness")?;
    ensure!(
        w.points == [0, 1, 2] && w.lhs == 4.0 && w.rhs == 2.0,
        "witness {w}"
    );
    Ok("8 metrics on 64 points; planted witness (0, 1, 2): 4 > 2".into())
}

fn triple_product(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn spherical_metric() -> Outcome {
    let mut r = rng(3);
    for _ in 0..100 {
        let p = sphere_point(&mut r);
        let d = great_circle_distance(&p, &p.antipode());
        ensure!((d - PI).abs() <= 1e-12, "antipodal distance {d}");
    }
    for _ in 0..100_000 {
        let (p, q) = (sphere_point(&mut r), sphere_point(&mut r));
        let (chord, arc) = (chord_distance(&p, &q), great_circle_distance(&p, &q));
        ensure!(
            (2.0 * (arc / 2.0).sin() - chord).abs() <= 1e-12,
            "round trip at {p:?}, {q:?}"
        );
        ensure!(chord <= arc, "chord {chord} > arc {arc}");
    }
    let mut strict = 0;
    for _ in 0..100_000 {
        let (p, q, z) = (
            sphere_point(&mut r),
            sphere_point(&mut r),
            sphere_point(&mut r),
        );
        let lhs = great_circle_distance(&p, &z);
        let rhs = great_circle_distance(&p, &q) + great_circle_distance(&q, &z);
        ensure!(lhs <= rhs + 1e-9, "triangle {lhs} > {rhs}");
        if triple_product(p.coords(), q.coords(), z.coords()).abs() > 1e-3 {
            ensure!(
                rhs - lhs > 1e-9,
                "margin {} on a non-coplanar triple",
                rhs - lhs
            );
            strict += 1;
        }
    }
    Ok(format!("1e5 pairs, 1e5 triples ({strict} non-coplanar)"))
}

fn sinc_monotone() -> Outcome {
    ensure!(sinc(0.0).map_err(err)? == 1.0, "sinc(0) != 1");
    let n = 10_000;
    let mut prev = 1.0;
    for k in 1..=n {
        let s = sinc(FRAC_PI_2 * k as f64 / n as f64).map_err(err)?;
        ensure!(s <= prev, "increase at step {k}");
        prev = s;
    }
    Ok("1e4 grid points".into())
}

fn comparability_bound() -> Outcome {
    let eps = 0.001;
    let delta = comparability_delta(eps).map_err(err)?;
    let mut r = rng(5);
    let t_max = 2.0 * (delta / 2.0).asin();
    let mut checked = 0;
    while checked < 100_000 {
        let p = sphere_point(&mut r);
        let angle = r.gen_range(0.0..t_max);
        let q = sphere_point_at(&mut r, &p, angle);
        let d = chord_distance(&p, &q);
        if d >= delta {
            continue;
        }
        ensure!(
            great_circle_distance(&p, &q) <= (1.0 + eps) * d,
            "bound fails at d = {d}"
        );
        checked += 1;
    }
    // search chord lengths in (delta, 1.1 delta] for a violation
    let p = sphere_point(&mut r);
    let found = (1..=1000).find_map(|k| {
        let d = delta * (1.0 + 0.1 * k as f64 / 1000.0);
        let q = sphere_point_at(&mut r, &p, 2.0 * (d / 2.0).asin());
        let d = chord_distance(&p, &q);
        (d > delta && d <= 1.1 * delta && great_circle_distance(&p, &q) > (1.0 + eps) * d)
            .then_some(d)
    });
    let d = found.ok_or("no violation above delta")?;
    Ok(format!("delta = {delta:.12}; violation at d = {d:.12}"))
}

/// Distance range from `x` to a sampled circle, computed in a frame of our own.
fn brute_force_extremes(x: &Point, c: &Circle3D, samples: usize) -> (f64, f64) {
    let n = c.normal();
    let seed = if n[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let k: f64 = (0..3).map(|i| seed[i] * n[i]).sum();
    let mut u = [0, 1, 2].map(|i| seed[i] - k * n[i]);
    let un = u.iter().map(|v| v * v).sum::<f64>().sqrt();
    u = u.map(|v| v / un);
    let v = [
        n[1] * u[2] - n[2] * u[1],
        n[2] * u[0] - n[0] * u[2],
        n[0] * u[1] - n[1] * u[0],
    ];
    let w: Vec<f64> = (0..3)
        .map(|i| x.coords()[i] - c.center().coords()[i])
        .collect();
    let (wu, wv) = (
        (0..3).map(|i| w[i] * u[i]).sum::<f64>(),
        (0..3).map(|i| w[i] * v[i]).sum::<f64>(),
    );
    let ww: f64 = w.iter().map(|a| a * a).sum();
    let rad = c.radius();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
    for k in 0..samples {
        let (s, co) = (TAU * k as f64 / samples as f64).sin_cos();
        let d2 = ww + rad * rad - 2.0 * rad * (co * wu + s * wv);
        lo = lo.min(d2);
        hi = hi.max(d2);
    }
    (lo.max(0.0).sqrt(), hi.sqrt())
}

fn circular_projection_checks() -> Outcome {
    let mut r = rng(6);
    let circle = Circle2D::new(&Point::from([0.5, -1.0]), 2.0).map_err(err)?;
    let exterior = |r: &mut ChaCha8Rng| loop {
        let p = plane_point(r, 2, 8.0);
        if euclidean_distance(&p, &Point::from([0.5, -1.0])).unwrap() >= 2.0 {
            return p;
        }
    };
    for _ in 0..100_000 {
        let (p, q) = (exterior(&mut r), exterior(&mut r));
        let (pp, pq) = (
            circular_projection(&circle, &p).map_err(err)?,
            circular_projection(&circle, &q).map_err(err)?,
        );
        let (before, after) = (
            euclidean_distance(&p, &q).map_err(err)?,
            euclidean_distance(&pp, &pq).map_err(err)?,
        );
        ensure!(
            after <= before * (1.0 + 1e-12) + 1e-12,
            "projection stretched {before} to {after}"
        );
    }
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let c = Circle3D::new(
            &plane_point(&mut r, 3, 3.0),
            r.gen_range(0.2..2.0),
            gaussian3(&mut r),
        )
        .map_err(err)?;
        let x = plane_point(&mut r, 3, 4.0);
        let (near, far) = circle_extremal_points(&x, &c).map_err(err)?;
        let (lo, hi) = brute_force_extremes(&x, &c, 1_000_000);
        let dn = (euclidean_distance(&x, &near).map_err(err)? - lo).abs();
        let df = (euclidean_distance(&x, &far).map_err(err)? - hi).abs();
        worst = worst.max(dn).max(df);
        ensure!(
            dn <= 1e-6 && df <= 1e-6,
            "extremal mismatch {dn:e} / {df:e}"
        );
    }
    Ok(format!(
        "1e5 exterior pairs; 100 circles, worst gap {worst:.1e}"
    ))
}

fn r0_chain() -> Outcome {
    let mut r = rng(7);
    let mut checked = 0;
    while checked < 1_000 {
        let (p, q, z) = (
            sphere_point(&mut r),
            sphere_point(&mut r),
            sphere_point(&mut r),
        );
        let r0 = r0_construction(&p, &q, &z).map_err(err)?;
        let tp = triple_product(p.coords(), q.coords(), r0.coords());
        ensure!(tp.abs() <= 1e-9, "r0 off the plane of p, q: {tp:e}");
        let (pr, pr0) = (
            great_circle_distance(&p, &z),
            great_circle_distance(&p, &r0),
        );
        let (pq, qr) = (great_circle_distance(&p, &q), great_circle_distance(&q, &z));
        ensure!(
            pr <= pr0 + 1e-9 && pr0 <= pq + qr + 1e-9,
            "chain {pr} <= {pr0} <= {}",
            pq + qr
        );
        checked += 1;
    }
    Ok("1e3 triples".into())
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn grid_metric() -> Outcome {
    for w in 1..=12 {
        for h in 1..=12 {
            let g = grid_graph(w, h).map_err(err)?;
            for u in 0..w * h {
                let row = g.distances_from(u).map_err(err)?;
                let pu = g.position(u).ok_or("missing coords")?;
                for (v, d) in row.iter().enumerate() {
                    let want = taxicab_distance(&pu, &g.position(v).ok_or("missing coords")?)
                        .map_err(err)?;
                    ensure!(
                        *d == Some(want),
                        "{w}x{h}: d({u}, {v}) = {d:?}, taxicab {want}"
                    );
                }
            }
        }
    }
    let g = grid_graph(21, 21).map_err(err)?;
    for m in 0..=20 {
        for n in 0..=20 - m {
            let count = count_geodesics(&g, 0, n * 21 + m).map_err(err)?;
            ensure!(
                count == binomial((m + n) as u64, m as u64),
                "({m}, {n}): {count}"
            );
            ensure!(
                shortest_path_distance(&g, 0, n * 21 + m).map_err(err)? == (m + n) as f64,
                "length"
            );
        }
    }
    Ok("all grids up to 12x12; counts for m + n <= 20".into())
}

fn intrinsic_extrinsic() -> Outcome {
    let mut r = rng(9);
    for _ in 0..1_000 {
        let len = r.gen_range(2..40);
        let c = polyline(&mut r, len);
        let spec = MetricSpec::polyline(c.clone());
        let s = c.arc_parameters();
        for i in 0..c.len() {
            for j in 0..c.len() {
                let arc = polyline_arc_distance(&c, i, j).map_err(err)?;
                let chord = euclidean_distance(&c.vertices()[i], &c.vertices()[j]).map_err(err)?;
                ensure!(chord <= arc, "chord {chord} > arc {arc}");
                ensure!(
                    arc == real_line_distance(s[i], s[j]).map_err(err)?,
                    "arc not flat at ({i}, {j})"
                );
                ensure!(
                    distance(&spec, &Point::index(i), &Point::index(j)).map_err(err)? == arc,
                    "metric"
                );
            }
        }
    }
    Ok("1e3 polylines".into())
}

fn random_orthogonal(r: &mut ChaCha8Rng) -> [[f64; 3]; 3] {
    let mut rows: Vec<[f64; 3]> = Vec::new();
    while rows.len() < 3 {
        let mut v = gaussian3(r);
        for u in &rows {
            let k: f64 = (0..3).map(|i| u[i] * v[i]).sum();
            v = [0, 1, 2].map(|i| v[i] - k * u[i]);
        }
        let n = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if n > 1e-3 {
            rows.push(v.map(|a| a / n));
        }
    }
    [rows[0], rows[1], rows[2]]
}

fn isometries() -> Outcome {
    let mut r = rng(10);
    let tol = ToleranceConfig::default();
    let plane: Vec<Point> = (0..32).map(|_| plane_point(&mut r, 2, 10.0)).collect();
    let rot = PlaneMap::rotation(FRAC_PI_4);
    ensure!(
        is_isometry(&rot, &MetricSpec::Euclidean, &plane, &tol)
            .map_err(err)?
            .holds,
        "rotation on euclidean"
    );
    for spec in [MetricSpec::Taxicab, MetricSpec::Chebyshev] {
        let v = is_isometry(&rot, &spec, &plane, &tol).map_err(err)?;
        ensure!(
            !v.holds && v.witness.is_some(),
            "rotation certified for {spec}"
        );
    }
    let maps = [
        PlaneMap::translation(3.5, -1.25),
        PlaneMap::reflect_origin(),
        PlaneMap::reflect_x1(),
        PlaneMap::reflect_x2(),
        PlaneMap::swap_axes(),
        PlaneMap::reflect_about_point(-2.0, 0.75),
    ];
    for spec in [
        MetricSpec::Euclidean,
        MetricSpec::Taxicab,
        MetricSpec::Chebyshev,
    ] {
        for m in &maps {
            ensure!(
                is_isometry(m, &spec, &plane, &tol).map_err(err)?.holds,
                "{m:?} on {spec}"
            );
        }
    }
    let sphere: Vec<Point> = (0..32).map(|_| sphere_point(&mut r).to_point()).collect();
    for _ in 0..100 {
        let m = SphereMap::new(random_orthogonal(&mut r)).map_err(err)?;
        ensure!(
            is_isometry(&m, &MetricSpec::GreatCircle, &sphere, &tol)
                .map_err(err)?
                .holds,
            "{m:?}"
        );
    }
    Ok("rotation, 6 plane maps x 3 metrics, 100 orthogonal maps".into())
}

fn nesting_config(
    spec: &MetricSpec,
    r: &mut ChaCha8Rng,
    point: &dyn Fn(&mut ChaCha8Rng) -> Point,
    probe: &dyn Fn(&mut ChaCha8Rng, &Point, f64) -> Point,
) -> Result<usize, String> {
    let (p, q) = (point(r), point(r));
    let dpq = distance(spec, &p, &q).map_err(err)?;
    let rad = dpq + r.gen_range(0.01..3.0);
    let t = (rad - dpq) * r.gen_range(0.01..=1.0);
    let probes: Vec<Point> = (0..100).map(|_| probe(r, &q, t)).collect();
    let v = check_nesting(spec, &p, rad, &q, t, &probes).map_err(err)?;
    ensure!(v.holds, "{spec}: probe {:?} escapes", v.violating_probe);
    Ok(v.probes_inside)
}

fn balls() -> Outcome {
    let mut r = rng(11);
    let box_probe = |r: &mut ChaCha8Rng, q: &Point, t: f64| {
        Point::new(q.coords().iter().map(|c| c + r.gen_range(-t..t)).collect()).unwrap()
    };
    let graph = MetricSpec::graph(connected_graph(&mut r, 40, 60));
    let line = MetricSpec::polyline(polyline(&mut r, 30));
    let mut inside = 0;
    for _ in 0..1_000 {
        for spec in [
            MetricSpec::Euclidean,
            MetricSpec::Taxicab,
            MetricSpec::Chebyshev,
        ] {
            inside += nesting_config(&spec, &mut r, &|r| plane_point(r, 2, 5.0), &box_probe)?;
        }
        inside += nesting_config(
            &MetricSpec::RealLine,
            &mut r,
            &|r| plane_point(r, 1, 5.0),
            &box_probe,
        )?;
        inside += nesting_config(
            &MetricSpec::Discrete,
            &mut r,
            &|r| Point::from([r.gen_range(0..3) as f64, 0.0]),
            &|r, q, _| {
                if r.gen_bool(0.5) {
                    q.clone()
                } else {
                    Point::from([r.gen_range(0..3) as f64, 0.0])
                }
            },
        )?;
        inside += nesting_config(
            &MetricSpec::GreatCircle,
            &mut r,
            &|r| sphere_point(r).to_point(),
            &|r, q, t| {
                let q = SpherePoint::from_point(q).unwrap();
                let angle = r.gen_range(0.0..t.min(PI));
                sphere_point_at(r, &q, angle).to_point()
            },
        )?;
        inside += nesting_config(
            &graph,
            &mut r,
            &|r| Point::index(r.gen_range(0..40)),
            &|r, _, _| Point::index(r.gen_range(0..40)),
        )?;
        inside += nesting_config(
            &line,
            &mut r,
            &|r| Point::index(r.gen_range(0..30)),
            &|r, _, _| Point::index(r.gen_range(0..30)),
        )?;
    }

    let unit = Ball::new(MetricSpec::RealLine, Point::new(vec![0.0]).unwrap(), 1.0).map_err(err)?;
    let has = |x: f64| unit.contains(&Point::new(vec![x]).unwrap()).unwrap();
    ensure!(!has(1.0) && !has(-1.0), "endpoint included");
    ensure!(
        has(1f64.next_down()) && has((-1f64).next_up()) && has(0.0),
        "interior excluded"
    );
    ensure!(!has(1f64.next_up()), "exterior included");

    let center = Point::from([0.5, -0.25]);
    let rad = 2.0;
    let corners =
        |metric: PlaneMetric, exact: &dyn Fn(&Point) -> bool| -> Result<Vec<[f64; 2]>, String> {
            let b = ball_boundary(metric, &center, rad, 256).map_err(err)?;
            Ok(b.samples
                .iter()
                .filter(|p| exact(p))
                .map(|p| [p.coords()[0], p.coords()[1]])
                .collect())
        };
    let (cx, cy) = (0.5, -0.25);
    let diamond = corners(PlaneMetric::Taxicab, &|p| {
        p.coords()[0] == cx || p.coords()[1] == cy
    })?;
    let want = vec![
        [cx + rad, cy],
        [cx, cy + rad],
        [cx - rad, cy],
        [cx, cy - rad],
    ];
    ensure!(diamond == want, "diamond vertices {diamond:?}");
    let square = corners(PlaneMetric::Chebyshev, &|p| {
        (p.coords()[0] - cx).abs() == rad && (p.coords()[1] - cy).abs() == rad
    })?;
    let mut sorted = square.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let want = vec![
        [cx - rad, cy - rad],
        [cx - rad, cy + rad],
        [cx + rad, cy - rad],
        [cx + rad, cy + rad],
    ];
    ensure!(sorted == want, "square corners {square:?}");
    Ok(format!(
        "8 metrics x 1e3 configurations ({inside} probes inside); interval open; corners exact"
    ))
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metrikos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn path_vertices(svg: &str) -> Result<Vec<(f64, f64)>, String> {
    let doc = roxmltree::Document::parse(svg).map_err(err)?;
    let root = doc.root_element();
    ensure!(
        root.tag_name().name() == "svg" && root.attribute("version") == Some("1.1"),
        "not SVG 1.1"
    );
    let d = root
        .descendants()
        .filter(|n| n.has_tag_name("path") && n.attribute("stroke") == Some("black"))
        .find_map(|n| n.attribute("d"))
        .ok_or("no boundary path")?;
    let nums: Vec<f64> = d
        .split_whitespace()
        .filter(|t| !matches!(*t, "M" | "L" | "Z"))
        .map(|t| t.parse::<f64>().map_err(err))
        .collect::<Result<_, _>>()?;
    Ok(nums.chunks(2).map(|c| (c[0], c[1])).collect())
}

fn cli_black_box() -> Outcome {
    let dir = tempfile::tempdir().map_err(err)?;
    let good = dir.path().join("good.csv");
    let bad = dir.path().join("bad.csv");
    std::fs::write(&good, "0,1\n1,0\n").map_err(err)?;
    std::fs::write(&bad, "0,1,4\n1,0,1\n4,1,0\n").map_err(err)?;
    let (good, bad) = (good.to_str().unwrap(), bad.to_str().unwrap());
    let rot = r#"{"map": "rotation", "theta": 0.7853981633974483}"#;
    let contract: [(&[&str], i32); 12] = [
        (
            &["dist", "--metric", "euclidean", "-p", "0,0", "-q", "1,1"],
            0,
        ),
        (
            &["dist", "--metric", "euclidean", "-p", "0,0", "-q", "1"],
            2,
        ),
        (&["check", "--matrix", good], 0),
        (&["check", "--matrix", bad], 1),
        (&["check", "--matrix", "/nonexistent.csv"], 2),
        (&["ball-svg", "--metric", "taxicab"], 0),
        (&["ball-svg", "--metric", "discrete"], 2),
        (&["isometry", "--map", rot, "--metric", "euclidean"], 0),
        (&["isometry", "--map", rot, "--metric", "taxicab"], 1),
        (&["isometry", "--map", "{", "--metric", "taxicab"], 2),
        (
            &["grid", "--width", "10", "--height", "10", "--to", "2,2"],
            0,
        ),
        (
            &["grid", "--width", "10", "--height", "10", "--to", "10,2"],
            2,
        ),
    ];
    for (args, want) in contract {
        let o = cli(args);
        ensure!(
            code(&o) == want,
            "{args:?} exited {} instead of {want}",
            code(&o)
        );
    }
    let out = String::from_utf8(
        cli(&[
            "dist",
            "--metric",
            "greatcircle",
            "-p",
            "0,0,1",
            "-q",
            "0,0,-1",
        ])
        .stdout,
    )
    .map_err(err)?;
    ensure!(out == "3.14159265359\n", "dist printed {out:?}");
    let grid =
        String::from_utf8(cli(&["grid", "--width", "10", "--height", "10", "--to", "2,2"]).stdout)
            .map_err(err)?;
    ensure!(grid == "distance 4\ngeodesics 6\n", "grid printed {grid:?}");

    for args in [
        &[
            "check", "--metric", "taxicab", "--random", "64", "--seed", "42",
        ][..],
        &[
            "isometry",
            "--map",
            rot,
            "--metric",
            "chebyshev",
            "--random",
            "20",
            "--seed",
            "42",
        ],
        &["ball-svg", "--metric", "euclidean", "--radius", "2.5"],
    ] {
        ensure!(
            cli(args).stdout == cli(args).stdout,
            "{args:?} is not deterministic"
        );
    }

    let svg = |metric: &str| -> Result<Vec<(f64, f64)>, String> {
        let path = dir.path().join(format!("{metric}.svg"));
        let o = cli(&[
            "ball-svg",
            "--metric",
            metric,
            "--radius",
            "1",
            "--out",
            path.to_str().unwrap(),
        ]);
        ensure!(code(&o) == 0, "ball-svg {metric} exited {}", code(&o));
        path_vertices(&std::fs::read_to_string(&path).map_err(err)?)
    };
    let diamond = svg("taxicab")?;
    for v in [(360.0, 200.0), (200.0, 40.0), (40.0, 200.0), (200.0, 360.0)] {
        ensure!(diamond.contains(&v), "diamond misses {v:?}");
    }
    let square = svg("chebyshev")?;
    for v in [(360.0, 40.0), (40.0, 40.0), (40.0, 360.0), (360.0, 360.0)] {
        ensure!(square.contains(&v), "square misses {v:?}");
    }
    let circle = svg("euclidean")?;
    ensure!(circle.len() == 256, "circle has {} vertices", circle.len());
    for (x, y) in &circle {
        let r = ((x - 200.0).powi(2) + (y - 200.0).powi(2)).sqrt();
        ensure!(
            (r - 160.0).abs() <= 1e-5,
            "circle vertex at pixel radius {r}"
        );
    }
    Ok("12 exit codes, determinism, 3 shapes".into())
}

type Check = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Check, Option<Duration>); 12] = [
        (
            "worked distances",
            worked_distances,
            Some(Duration::from_millis(1)),
        ),
        ("axiom certification", axiom_certification, None),
        (
            "spherical metric",
            spherical_metric,
            Some(Duration::from_secs(5)),
        ),
        (
            "sinc monotonicity",
            sinc_monotone,
            Some(Duration::from_millis(100)),
        ),
        (
            "comparability bound",
            comparability_bound,
            Some(Duration::from_secs(2)),
        ),
        (
            "circular projection",
            circular_projection_checks,
            Some(Duration::from_secs(10)),
        ),
        ("r0 construction", r0_chain, None),
        (
            "grid path metric",
            grid_metric,
            Some(Duration::from_secs(5)),
        ),
        ("intrinsic and extrinsic", intrinsic_extrinsic, None),
        ("isometries", isometries, Some(Duration::from_secs(2))),
        ("balls", balls, Some(Duration::from_secs(5))),
        ("cli black box", cli_black_box, None),
    ];
    let mut failed = 0;
    for (k, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 12 criteria failed");
        ExitCode::FAILURE
    }
}
