//! Implementations of the theorem-keyed checks.
//!
//! Each check builds its default parameter sets (overridable from flags),
//! fans the sweep out over rayon, and merges per-combination [`Recorder`]s
//! in deterministic order.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{CheckConfig, Recorder, ReportBuilder, VerificationReport, DEFAULT_TOL};
use crate::analysis::{
    beta_root, check_concavity_weighted, check_monotone_weighted, gamma_root,
    power_ratio_monotonicity, threshold_predicate, ConcavityKind, Curvature, Direction, GridSpec,
    MonotonicityKind, Region, ThresholdPrediction,
};
use crate::error::Error;
use crate::hyp2f1::{f21, ratio_coeffs, series_coeffs, EvalResult, HypParams};
use crate::logtype::{
    bernoulli_sides, big_g_eval, f1_bound, f2_bound, f_ratio_eval, g_eval, g_logistic_eval,
    h_xy_eval, omega_eval, t_ratio_b_eval, t_ratio_ba, t_ratio_ba_eval, PhiExponents, RatioKind,
    ZeroBalancedPair,
};
use crate::special_fn::{beta_pos, r_constant_pos};
use crate::Result;

const LN2: f64 = std::f64::consts::LN_2;

fn pair(c: f64, d: f64) -> Result<ZeroBalancedPair> {
    ZeroBalancedPair::new(c, d)
}

fn exps(a: f64, b: f64) -> Result<PhiExponents> {
    PhiExponents::new(a, b)
}

/// Deterministic list of admissible pairs (`1/c + 1/d ≥ 1`), spread across a
/// log-spaced scan of the `(c, d)` plane.
fn admissible_pairs(n: usize) -> Vec<ZeroBalancedPair> {
    let cs = GridSpec::log(0.25, 3.5, 10).unwrap().points();
    let mut found = Vec::new();
    for &c in &cs {
        for &d in &cs {
            let p = ZeroBalancedPair::new(c, d).unwrap();
            if p.admissible() {
                found.push(p);
            }
        }
    }
    take_spread(found, n)
}

/// Hand-picked pairs with `a₀ > 1` (not admissible).
fn non_admissible_pairs() -> Vec<ZeroBalancedPair> {
    [
        (3.0, 3.0),
        (2.5, 2.5),
        (4.0, 4.0),
        (2.2, 2.2),
        (3.0, 4.0),
        (4.0, 3.0),
        (5.0, 2.5),
        (2.5, 5.0),
        (6.0, 1.5),
        (2.1, 2.1),
    ]
    .iter()
    .map(|&(c, d)| ZeroBalancedPair::new(c, d).unwrap())
    .collect()
}

/// Take `n` elements alternating from the front and back of the list, so a
/// row-major plane scan still yields a spread of regimes.
fn take_spread<T>(mut v: Vec<T>, n: usize) -> Vec<T> {
    if v.len() <= n {
        return v;
    }
    let mut out = Vec::with_capacity(n);
    let mut from_front = true;
    while out.len() < n {
        if from_front {
            out.push(v.remove(0));
        } else {
            out.push(v.pop().expect("nonempty"));
        }
        from_front = !from_front;
    }
    out
}

fn override_pair(cfg: &CheckConfig) -> Result<Option<ZeroBalancedPair>> {
    match (cfg.c, cfg.d) {
        (Some(c), Some(d)) => Ok(Some(pair(c, d)?)),
        (None, None) => Ok(None),
        _ => Err(Error::domain(
            "overriding the pair requires both --c and --d".to_string(),
        )),
    }
}

fn override_exps(cfg: &CheckConfig) -> Result<Option<PhiExponents>> {
    match (cfg.a, cfg.b) {
        (Some(a), Some(b)) => Ok(Some(exps(a, b)?)),
        (None, None) => Ok(None),
        _ => Err(Error::domain(
            "overriding the exponents requires both --a and --b".to_string(),
        )),
    }
}

/// Run `work` over `items` on the rayon pool; recorders merge in input order.
fn par_recorders<T, F>(items: &[T], tol: f64, work: F) -> Result<Recorder>
where
    T: Sync,
    F: Fn(&T, &mut Recorder) -> Result<()> + Sync,
{
    let partials: Vec<Recorder> = items
        .par_iter()
        .map(|item| {
            let mut rec = Recorder::new(tol);
            work(item, &mut rec)?;
            Ok(rec)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut merged = Recorder::new(tol);
    for rec in partials {
        merged.merge(rec);
    }
    Ok(merged)
}

// ---------------------------------------------------------------------------
// Bernoulli-type inequalities
// ---------------------------------------------------------------------------

/// Classical Bernoulli inequality `log(1+ct) ≤ c·log(1+t)` for `c ≥ 1, t > 0`.
pub(super) fn check_bern(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("bern", tol);
    let unit = exps(1.0, 1.0)?;

    let c_grid = match cfg.c {
        Some(c) => vec![c],
        None => GridSpec::log(1.0, 100.0, 32)?.points(),
    };
    let t_grid = GridSpec::log(1e-4, 1e4, cfg.n_or(256))?;
    builder.grid("t", t_grid);
    builder.param("n_c", c_grid.len());

    let t_points = t_grid.points();
    let rec = par_recorders(&c_grid, tol, |&c, rec| {
        for &t in &t_points {
            let (lhs, rhs) = bernoulli_sides(c, t, &unit)?;
            rec.record(&[c, t], lhs, rhs);
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// Envelope Bernoulli inequality
/// `log(1+c·φ(t)) ≤ c·max{logᵃ(1+t), b·log(1+t)}`.
pub(super) fn check_kmvthm(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("kmvthm", tol);

    let exps_list = match override_exps(cfg)? {
        Some(e) => vec![e],
        None => [
            (0.25, 1.0),
            (0.5, 1.5),
            (0.75, 2.0),
            (1.0, 1.0),
            (0.4, 4.0),
            (0.9, 1.1),
        ]
        .iter()
        .map(|&(a, b)| exps(a, b))
        .collect::<Result<Vec<_>>>()?,
    };
    let c_grid = match cfg.c {
        Some(c) => vec![c],
        None => GridSpec::log(1.0, 100.0, 16)?.points(),
    };
    let t_grid = GridSpec::log(1e-4, 1e4, cfg.n_or(128))?;
    builder.grid("t", t_grid);
    builder.param("n_exponent_pairs", exps_list.len());
    builder.param("n_c", c_grid.len());

    let t_points = t_grid.points();
    let rec = par_recorders(&exps_list, tol, |e, rec| {
        for &c in &c_grid {
            for &t in &t_points {
                let (lhs, rhs) = bernoulli_sides(c, t, e)?;
                rec.record(&[e.a(), e.b(), c, t], lhs, rhs);
            }
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// Two-sided bounds on the piecewise ratios: the `log^p` ratio lies in
/// `[(log 2)^{p(1−a)}, 1]` with minimum at `x = 1`, and the iterated-log
/// ratio lies in `[(log 2·log(1+log 2))^{1−a}, 1]` likewise.
pub(super) fn check_ssthm2(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("ssthm2", tol);

    let a_list = match cfg.a {
        Some(a) => vec![a],
        None => vec![0.1, 0.3, 0.5, 0.7, 0.9],
    };
    let p_list = match cfg.p {
        Some(p) => vec![p],
        None => vec![0.5, 1.0, 2.0, 4.0],
    };
    let x_grid = GridSpec::log(1e-2, 1e2, cfg.n_or(1024))?;
    builder.grid("x", x_grid);
    builder.param("a_values", json!(a_list));
    builder.param("p_values", json!(p_list));

    let x_points = x_grid.points();
    // Log-grid step near x = 1.
    let step_near_1 = (x_grid.hi / x_grid.lo).ln() / (x_grid.n_points - 1) as f64;

    let combos: Vec<(f64, f64)> = a_list
        .iter()
        .flat_map(|&a| p_list.iter().map(move |&p| (a, p)))
        .collect();

    let rec = par_recorders(&combos, tol, |&(a, p), rec| {
        let c1 = LN2.powf(p * (1.0 - a));
        let c3 = (LN2 * LN2.ln_1p()).powf(1.0 - a);

        let mut min1 = (f64::INFINITY, 0.0);
        let mut min2 = (f64::INFINITY, 0.0);
        for &x in &x_points {
            let v1 = f1_bound(a, p, x)?;
            rec.record(&[a, p, x, 1.0], c1, v1);
            rec.record(&[a, p, x, 1.0], v1, 1.0);
            if v1 < min1.0 {
                min1 = (v1, x);
            }

            let v2 = f2_bound(a, x)?;
            rec.record(&[a, p, x, 2.0], c3, v2);
            rec.record(&[a, p, x, 2.0], v2, 1.0);
            if v2 < min2.0 {
                min2 = (v2, x);
            }
        }
        // Minimum attained at x = 1 within grid resolution.
        rec.record(&[a, p, min1.1, 1.0], (min1.1.ln()).abs(), 1.5 * step_near_1);
        rec.record(&[a, p, min2.1, 2.0], (min2.1.ln()).abs(), 1.5 * step_near_1);
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// Monotonicity classifier consistency: predictions from the curvature of
/// `log f(eˣ)` must match grid verdicts for `f(xᶜ)/f(x)ᶜ`, exercised on a
/// log-concave family (`log(1+x)`) and a log-convex one (`exp`).
pub(super) fn check_ssthm(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("ssthm", tol);
    let n = cfg.n_or(256);

    let c_list = match cfg.c {
        Some(c) => vec![c],
        None => vec![1.0 / 3.0, 0.5, 2.0, 3.0, -1.0],
    };
    builder.param("c_values", json!(c_list));
    builder.param("families", json!(["log1p", "exp"]));
    let unit_grid = GridSpec::linear(0.01, 0.99, n)?;
    builder.grid("x_unit", unit_grid);

    // family id, curvature of log f(e^x), f itself, grid above 1.
    struct Family {
        id: f64,
        curvature: Curvature,
        f: fn(f64) -> f64,
        above: GridSpec,
    }
    let families = [
        Family {
            id: 0.0,
            curvature: Curvature::Concave,
            f: f64::ln_1p,
            above: GridSpec::log(1.01, 1e3, n)?,
        },
        Family {
            id: 1.0,
            curvature: Curvature::Convex,
            f: f64::exp,
            above: GridSpec::log(1.01, 5.0, n)?,
        },
    ];
    builder.grid("x_above_log1p", families[0].above);
    builder.grid("x_above_exp", families[1].above);

    let mut rec = Recorder::new(tol);
    for fam in &families {
        for &c in &c_list {
            for (region_id, region, grid) in [
                (0.0, Region::UnitInterval, unit_grid),
                (1.0, Region::AboveOne, fam.above),
            ] {
                let predicted = power_ratio_monotonicity(fam.curvature, c, region)?;
                let f = fam.f;
                let ratio = move |x: f64| -> Result<EvalResult> {
                    Ok(EvalResult::exact(f(x.powf(c)) / f(x).powf(c)))
                };
                let verdict = check_monotone_weighted(ratio, &grid, predicted, tol)?;
                let ok = verdict.kind != MonotonicityKind::NonMonotone;
                rec.record_verdict(&[fam.id, c, region_id], ok, verdict.worst_margin);
            }
        }
    }
    Ok(builder.finish(rec))
}

/// `ω(c,d,p,r)` is nondecreasing in `p` for admissible pairs and `r ∈ (0,1)`,
/// including the `p = 1/2` vs `p = 1` special case.
pub(super) fn check_2ndmain(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("2ndmain", tol);

    let (pairs, theorem_domain) = match override_pair(cfg)? {
        Some(p) => {
            let dom = p.admissible();
            (vec![p], dom)
        }
        None => (admissible_pairs(50), true),
    };
    let r_grid = GridSpec::linear(0.05, 0.95, 20)?;
    let p_grid = GridSpec::log(1e-2, 1e2, cfg.n_or(64))?;
    builder.grid("r", r_grid);
    builder.grid("p", p_grid);
    builder.param("n_pairs", pairs.len());
    builder.param("theorem_domain", theorem_domain);

    let r_points = r_grid.points();
    let p_points = match cfg.p {
        // A pinned p still needs a neighbor for the forward difference.
        Some(p) => vec![p, p * 1.05],
        None => p_grid.points(),
    };

    let rec = par_recorders(&pairs, tol, |zb, rec| {
        for &r in &r_points {
            let mut prev = omega_eval(zb, p_points[0], r)?;
            for &p in &p_points[1..] {
                let cur = omega_eval(zb, p, r)?;
                let w = tol.max(10.0 * (prev.abs_err_estimate + cur.abs_err_estimate));
                rec.record_tol(&[zb.c(), zb.d(), r, p], prev.value, cur.value, w);
                prev = cur;
            }
            // Special case: ω at p = 1/2 never exceeds ω at p = 1.
            let lo = omega_eval(zb, 0.5, r)?;
            let hi = omega_eval(zb, 1.0, r)?;
            rec.record(&[zb.c(), zb.d(), r, 0.5], lo.value, hi.value);
        }
        Ok(())
    })?;

    if theorem_domain {
        Ok(builder.finish(rec))
    } else {
        Ok(builder.finish_exploratory(rec))
    }
}

// ---------------------------------------------------------------------------
// The classical bounded-ratio suite
// ---------------------------------------------------------------------------

/// Per-pair constants available to the range/endpoint closures.
struct RatioCtx {
    a: f64,
    b: f64,
    b_const: f64,
    r_const: f64,
}

type EndpointFn = fn(&RatioCtx) -> f64;

struct RatioPlan {
    kind: RatioKind,
    direction: Direction,
    /// (lower, upper) range bounds.
    range: fn(&RatioCtx) -> (f64, f64),
    /// endpoints (at 0⁺, at 1⁻) to verify within 1e-3 — `None` when the
    /// convergence toward the endpoint is logarithmically slow.
    endpoints: (Option<EndpointFn>, Option<EndpointFn>),
}

/// Shared sweep for the monotone-ratio parts: monotonicity (with slack
/// widened by evaluation error near 1), range containment, and any
/// fast-converging endpoint limits.
fn ratio_sweep(
    pairs: &[(f64, f64)],
    plan: &RatioPlan,
    grid: &GridSpec,
    tol: f64,
) -> Result<Recorder> {
    let points = grid.points();
    par_recorders(pairs, tol, |&(a, b), rec| {
        let hp = HypParams::new(a, b, a + b)?;
        let ctx = RatioCtx {
            a,
            b,
            b_const: beta_pos(a, b),
            r_const: r_constant_pos(a, b),
        };
        let (lower, upper) = (plan.range)(&ctx);

        let verdict = check_monotone_weighted(
            |x| f_ratio_eval(&hp, x, plan.kind),
            grid,
            plan.direction,
            tol,
        )?;
        rec.record_verdict(
            &[a, b],
            verdict.kind != MonotonicityKind::NonMonotone,
            verdict.worst_margin,
        );

        for &x in &points {
            let e = f_ratio_eval(&hp, x, plan.kind)?;
            let w = tol.max(10.0 * e.abs_err_estimate);
            rec.record_tol(&[a, b, x], lower, e.value, w);
            rec.record_tol(&[a, b, x], e.value, upper, w);
        }

        let endpoint_tol = 1e-3;
        if let Some(at0) = plan.endpoints.0 {
            let e = f_ratio_eval(&hp, points[0], plan.kind)?;
            rec.record_tol(
                &[a, b, points[0]],
                (e.value - at0(&ctx)).abs(),
                0.0,
                endpoint_tol,
            );
        }
        if let Some(at1) = plan.endpoints.1 {
            let last = points[points.len() - 1];
            let e = f_ratio_eval(&hp, last, plan.kind)?;
            // Near-1 endpoint: widened by the evaluation error estimate.
            rec.record_tol(
                &[a, b, last],
                (e.value - at1(&ctx)).abs(),
                0.0,
                endpoint_tol + 10.0 * e.abs_err_estimate,
            );
        }
        Ok(())
    })
}

fn ratio_suite(
    id: &str,
    pairs: &[(f64, f64)],
    plan: &RatioPlan,
    cfg: &CheckConfig,
) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new(id, tol);
    let grid = GridSpec::default_x(cfg.n_or(2048));
    builder.grid("x", grid);
    builder.param("pairs", json!(pairs));
    let rec = ratio_sweep(pairs, plan, &grid, tol)?;
    Ok(builder.finish(rec))
}

const ANY_PAIRS: [(f64, f64); 5] = [(0.5, 0.5), (0.3, 0.8), (1.0, 2.0), (2.0, 3.0), (1.5, 0.4)];
const SMALL_PAIRS: [(f64, f64); 5] = [(0.5, 0.5), (0.3, 0.8), (0.9, 0.2), (0.7, 0.7), (0.25, 0.95)];
const BIG_PAIRS: [(f64, f64); 5] = [(2.0, 3.0), (1.5, 1.5), (4.0, 1.2), (2.5, 2.5), (1.1, 3.0)];

/// Parts 1–7 of the classical monotone-ratio theorem for zero-balanced `F`.
pub(super) fn check_157(part: u8, cfg: &CheckConfig) -> Result<VerificationReport> {
    let override_pairs = override_pair(cfg)?.map(|p| vec![(p.c(), p.d())]);
    let pick = |defaults: &[(f64, f64)]| -> Vec<(f64, f64)> {
        override_pairs.clone().unwrap_or_else(|| defaults.to_vec())
    };

    match part {
        // f₁ = (F−1)/log(1/(1−x)) increasing from ab/(a+b) onto 1/B; the
        // near-1 endpoint converges only logarithmically.
        1 => ratio_suite(
            "1.57-1",
            &pick(&ANY_PAIRS),
            &RatioPlan {
                kind: RatioKind::F1,
                direction: Direction::Increasing,
                range: |c| (c.a * c.b / (c.a + c.b), 1.0 / c.b_const),
                endpoints: (Some(|c| c.a * c.b / (c.a + c.b)), None),
            },
            cfg,
        ),
        // f₂ = B·F + log(1−x) decreasing from B onto R; both endpoints
        // converge fast and are pinned within 1e-3.
        2 => ratio_suite(
            "1.57-2",
            &pick(&ANY_PAIRS),
            &RatioPlan {
                kind: RatioKind::F2,
                direction: Direction::Decreasing,
                range: |c| (c.r_const, c.b_const),
                endpoints: (Some(|c| c.b_const), Some(|c| c.r_const)),
            },
            cfg,
        ),
        // f₃ = B·F + (1/x)·log(1−x) increasing from B−1 onto R for a,b < 1.
        3 => ratio_suite(
            "1.57-3",
            &pick(&SMALL_PAIRS),
            &RatioPlan {
                kind: RatioKind::F3,
                direction: Direction::Increasing,
                range: |c| (c.b_const - 1.0, c.r_const),
                endpoints: (Some(|c| c.b_const - 1.0), Some(|c| c.r_const)),
            },
            cfg,
        ),
        // f₃ decreasing from R onto B−1 for a,b > 1.
        4 => ratio_suite(
            "1.57-4",
            &pick(&BIG_PAIRS),
            &RatioPlan {
                kind: RatioKind::F3,
                direction: Direction::Decreasing,
                range: |c| (c.r_const, c.b_const - 1.0),
                endpoints: (Some(|c| c.b_const - 1.0), Some(|c| c.r_const)),
            },
            cfg,
        ),
        // f₄ = x·F/log(1/(1−x)) decreasing from 1 onto 1/B for a,b < 1.
        5 => ratio_suite(
            "1.57-5",
            &pick(&SMALL_PAIRS),
            &RatioPlan {
                kind: RatioKind::F4,
                direction: Direction::Decreasing,
                range: |c| (1.0 / c.b_const, 1.0),
                endpoints: (Some(|_| 1.0), None),
            },
            cfg,
        ),
        // f₄ increasing from 1 onto 1/B for a,b > 1.
        6 => ratio_suite(
            "1.57-6",
            &pick(&BIG_PAIRS),
            &RatioPlan {
                kind: RatioKind::F4,
                direction: Direction::Increasing,
                range: |c| (1.0, 1.0 / c.b_const),
                endpoints: (Some(|_| 1.0), None),
            },
            cfg,
        ),
        // f₄ ≡ 1 at a = b = 1, within 1e-10.
        7 => {
            let tol = cfg.tol_or(1e-10);
            let mut builder = ReportBuilder::new("1.57-7", tol);
            let grid = GridSpec::default_x(cfg.n_or(2048));
            builder.grid("x", grid);
            let hp = HypParams::new(1.0, 1.0, 2.0)?;
            let mut rec = Recorder::new(tol);
            for &x in &grid.points() {
                let v = f_ratio_eval(&hp, x, RatioKind::F4)?;
                let w = tol.max(10.0 * v.abs_err_estimate);
                rec.record_tol(&[x], (v.value - 1.0).abs(), 0.0, w);
            }
            Ok(builder.finish(rec))
        }
        _ => Err(Error::UnknownId(format!("1.57-{part}"))),
    }
}

/// Refinement of the f₄ parts: decreasing with range `(1/B, 1)` whenever
/// `d ≤ 1/c`, increasing with range `(1, 1/B)` when `c > 1/2` and
/// `d ≥ c/(2c−1)`.
pub(super) fn check_pvlem(cfg: &CheckConfig) -> Result<VerificationReport> {
    let decreasing: [(f64, f64); 6] = [
        (0.5, 2.0),
        (2.0, 0.5),
        (1.0, 1.0),
        (0.3, 3.0),
        (1.5, 2.0 / 3.0),
        (0.25, 4.0),
    ];
    let increasing: [(f64, f64); 6] = [
        (1.0, 2.0),
        (2.0, 1.0),
        (2.0, 2.0),
        (0.75, 2.0),
        (0.6, 3.0),
        (5.0, 0.6),
    ];
    for &(c, d) in &decreasing {
        debug_assert!(d <= 1.0 / c + 1e-12);
    }
    for &(c, d) in &increasing {
        debug_assert!(c > 0.5 && d >= c / (2.0 * c - 1.0) - 1e-12);
    }

    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("pvlem", tol);
    let grid = GridSpec::default_x(cfg.n_or(2048));
    builder.grid("x", grid);
    builder.param("decreasing_pairs", json!(decreasing));
    builder.param("increasing_pairs", json!(increasing));

    let mut rec = ratio_sweep(
        &decreasing,
        &RatioPlan {
            kind: RatioKind::F4,
            direction: Direction::Decreasing,
            range: |c| (1.0 / c.b_const, 1.0),
            endpoints: (Some(|_| 1.0), None),
        },
        &grid,
        tol,
    )?;
    rec.merge(ratio_sweep(
        &increasing,
        &RatioPlan {
            kind: RatioKind::F4,
            direction: Direction::Increasing,
            range: |c| (1.0, 1.0 / c.b_const),
            endpoints: (Some(|_| 1.0), None),
        },
        &grid,
        tol,
    )?);
    Ok(builder.finish(rec))
}

/// Ratio coefficients of `F′/F` form a nonincreasing convex sequence when
/// `max{a,b} ≤ c`, and reconstruct the derivative series under convolution.
pub(super) fn check_kulemma(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(1e-12);
    let mut builder = ReportBuilder::new("kuLemma", tol);
    let n_coeff = cfg.n_or(50);
    builder.param("n_coeffs", n_coeff);

    let triples: Vec<(f64, f64, f64)> = match (cfg.a, cfg.b, cfg.c) {
        (Some(a), Some(b), Some(c)) => vec![(a, b, c)],
        _ => vec![
            (0.5, 0.5, 1.0),
            (1.0, 1.0, 2.0),
            (0.5, 1.5, 2.0),
            (1.0, 2.0, 3.0),
            (2.0, 2.0, 4.0),
            (0.3, 0.7, 1.0),
            (1.2, 0.8, 2.0),
            (2.0, 3.0, 5.0),
            (0.5, 0.5, 0.5),
            (1.0, 1.0, 3.0),
            (2.0, 2.0, 3.0),
            (0.7, 0.3, 0.7),
            (1.5, 2.5, 4.0),
            (3.0, 3.0, 6.0),
            (0.9, 1.1, 2.0),
            (2.0, 1.0, 2.0),
            (0.4, 0.6, 1.0),
            (1.0, 3.0, 4.0),
            (2.5, 2.5, 5.0),
            (0.8, 0.8, 1.6),
        ],
    };
    for &(a, b, c) in &triples {
        if a.max(b) > c + 1e-12 {
            return Err(Error::domain(format!(
                "coefficient monotonicity requires max(a,b) <= c, got ({a},{b},{c})"
            )));
        }
    }
    builder.param("n_triples", triples.len());

    let rec = par_recorders(&triples, tol, |&(a, b, c), rec| {
        let hp = HypParams::new(a, b, c)?;
        let coeffs = ratio_coeffs(&hp, n_coeff);
        for n in 1..coeffs.len() {
            rec.record(&[a, b, c, n as f64], coeffs[n], coeffs[n - 1]);
        }
        for n in 1..coeffs.len() - 1 {
            // Convexity: aₙ₋₁ − 2aₙ + aₙ₊₁ ≥ −tol.
            let d2 = coeffs[n - 1] - 2.0 * coeffs[n] + coeffs[n + 1];
            rec.record(&[a, b, c, n as f64], -d2, 0.0);
        }
        // Series-division inverse: (Σ aₙ xⁿ)·F = F′ coefficientwise; the
        // tolerance scales with the coefficient magnitude (they grow for
        // parameters like (2,2,2)).
        let n_rec = 30.min(n_coeff);
        let t = series_coeffs(&hp, n_rec + 1);
        for m in 0..=n_rec {
            let mut conv = 0.0;
            for k in 0..=m {
                conv += coeffs[k] * t[m - k];
            }
            let deriv = (m as f64 + 1.0) * t[m + 1];
            let scale = tol * deriv.abs().max(1.0);
            rec.record_tol(&[a, b, c, m as f64], (conv - deriv).abs(), 0.0, scale);
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// The softplus positivity witness stays positive and the iterated softplus
/// is log-concave.
pub(super) fn check_mylemma1(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("mylemma1", tol);
    let grid = GridSpec::linear(-20.0, 20.0, cfg.n_or(2048))?;
    builder.grid("x", grid);

    let mut rec = Recorder::new(tol);
    for &x in &grid.points() {
        // Strict positivity of the witness; no slack credit for w itself.
        let w = crate::logtype::w_fn(x);
        rec.record_verdict(&[x], w > 0.0, w.min(1.0));
    }
    let verdict = check_concavity_weighted(
        |x| Ok(EvalResult::exact(crate::logtype::v_fn(x).ln())),
        &grid,
        tol,
    )?;
    rec.record_verdict(
        &[0.0],
        verdict.kind == ConcavityKind::Concave,
        -verdict.max_upward_excess,
    );
    Ok(builder.finish(rec))
}

/// Substituting `z = 1 − (1−x)^{1/p}` (`p ≥ 1`) contracts toward the origin:
/// `B ≥ B·h(z) ≥ B·h(x) ≥ 1` and `F(z) ≥ F(x)/p` for `c,d ∈ (0,1]`, with
/// equalities in the `h`-chain at `c = d = 1`.
pub(super) fn check_mylemma2(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("mylemma2", tol);

    let pairs = match override_pair(cfg)? {
        Some(p) => {
            if p.c() > 1.0 || p.d() > 1.0 {
                return Err(Error::domain(
                    "this claim requires c, d in (0, 1]".to_string(),
                ));
            }
            vec![p]
        }
        None => [
            (1.0, 1.0),
            (0.5, 0.5),
            (0.3, 0.9),
            (1.0, 0.5),
            (0.7, 0.7),
            (0.2, 1.0),
        ]
        .iter()
        .map(|&(c, d)| pair(c, d))
        .collect::<Result<Vec<_>>>()?,
    };
    let p_list = match cfg.p {
        Some(p) => vec![p],
        None => vec![1.0, 1.5, 2.0, 4.0, 10.0],
    };
    let x_grid = GridSpec::linear(1e-3, 1.0 - 1e-3, cfg.n_or(128))?;
    builder.grid("x", x_grid);
    builder.param("n_pairs", pairs.len());
    builder.param("p_values", json!(p_list));

    let x_points = x_grid.points();
    let rec = par_recorders(&pairs, tol, |zb, rec| {
        let hp = zb.hyp_params();
        let bb = beta_pos(zb.c(), zb.d());
        let unit = zb.c() == 1.0 && zb.d() == 1.0;
        for &p in &p_list {
            for &x in &x_points {
                let z = 1.0 - (1.0 - x).powf(1.0 / p);
                let hx = f_ratio_eval(&hp, x, RatioKind::F4)?;
                let hz = f_ratio_eval(&hp, z, RatioKind::F4)?;
                let pt = [zb.c(), zb.d(), p, x];
                rec.record(&pt, bb * hz.value, bb);
                rec.record(&pt, bb * hx.value, bb * hz.value);
                rec.record(&pt, 1.0, bb * hx.value);
                let fx = f21(&hp, x)?;
                let fz = f21(&hp, z)?;
                rec.record(&pt, fx.value / p, fz.value);
                if unit {
                    // h ≡ 1/B at c = d = 1, so the whole chain collapses.
                    rec.record(&pt, (bb * hz.value - 1.0).abs(), 0.0);
                    rec.record(&pt, (bb * hx.value - 1.0).abs(), 0.0);
                }
            }
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// Log-concavity of `g` through the logistic substitution holds exactly for
/// admissible pairs; non-admissible pairs must show an upward second
/// difference (verdict `Neither`).
pub(super) fn check_ssthm5(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("ssthm5", tol);
    let grid = GridSpec::linear(-10.0, 10.0, cfg.n_or(1024))?;
    builder.grid("u", grid);

    let pairs = match override_pair(cfg)? {
        Some(p) => vec![p],
        None => admissible_pairs(25),
    };
    builder.param("n_pairs", pairs.len());

    struct ConcavityScan {
        c: f64,
        d: f64,
        ok: bool,
        margin: f64,
        kind: String,
        witness: Option<f64>,
    }
    let results: Vec<ConcavityScan> = pairs
        .par_iter()
        .map(|zb| -> Result<_> {
            let verdict = check_concavity_weighted(|u| big_g_eval(zb, u), &grid, tol)?;
            let expect_concave = zb.admissible();
            let (ok, margin) = if expect_concave {
                (
                    verdict.kind == ConcavityKind::Concave,
                    -verdict.max_upward_excess,
                )
            } else {
                (
                    verdict.kind == ConcavityKind::Neither,
                    verdict.max_upward_excess.min(verdict.max_downward_excess),
                )
            };
            Ok(ConcavityScan {
                c: zb.c(),
                d: zb.d(),
                ok,
                margin,
                kind: format!("{:?}", verdict.kind),
                witness: verdict.witness_upward,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rec = Recorder::new(tol);
    let mut observed = Vec::new();
    for scan in results {
        rec.record_verdict(&[scan.c, scan.d], scan.ok, scan.margin);
        observed.push(json!({
            "c": scan.c, "d": scan.d, "verdict": scan.kind,
            "expected": if pair(scan.c, scan.d)?.admissible() { "Concave" } else { "Neither" },
            "inflection_witness": scan.witness,
        }));
    }
    builder.param("verdicts", Value::from(observed));
    Ok(builder.finish(rec))
}

/// Pairs just past admissibility must have an inflection: a located positive
/// second difference together with a negative one.
pub(super) fn check_myrmk43(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("myrmk43", tol);
    let grid = GridSpec::linear(-10.0, 10.0, cfg.n_or(1024))?;
    builder.grid("u", grid);

    let pairs = match override_pair(cfg)? {
        Some(p) => {
            if p.admissible() {
                return Err(Error::domain(
                    "inflection claim requires a0 = cd/(c+d) > 1".to_string(),
                ));
            }
            vec![p]
        }
        None => non_admissible_pairs(),
    };
    builder.param("n_pairs", pairs.len());

    struct InflectionScan {
        c: f64,
        d: f64,
        ok: bool,
        margin: f64,
        up: Option<f64>,
        down: Option<f64>,
    }
    let results: Vec<InflectionScan> = pairs
        .par_iter()
        .map(|zb| -> Result<_> {
            let v = check_concavity_weighted(|u| big_g_eval(zb, u), &grid, tol)?;
            let ok = v.kind == ConcavityKind::Neither
                && v.witness_upward.is_some()
                && v.witness_downward.is_some();
            Ok(InflectionScan {
                c: zb.c(),
                d: zb.d(),
                ok,
                margin: v.max_upward_excess.min(v.max_downward_excess),
                up: v.witness_upward,
                down: v.witness_downward,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rec = Recorder::new(tol);
    let mut witnesses = Vec::new();
    for scan in results {
        rec.record_verdict(&[scan.c, scan.d], scan.ok, scan.margin);
        witnesses.push(json!({
            "c": scan.c, "d": scan.d,
            "positive_second_difference_at": scan.up,
            "negative_second_difference_at": scan.down,
        }));
    }
    builder.param("witnesses", Value::from(witnesses));
    Ok(builder.finish(rec))
}

/// Threshold classification of `β` against `1/2` must match the actual root
/// side whenever it speaks.
pub(super) fn check_ssthm55(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("ssthm55", tol);

    let pairs = match override_pair(cfg)? {
        Some(p) => vec![p],
        None => [
            (1.0, 1.0),
            (0.5, 0.5),
            (2.0, 2.0),
            (3.0, 3.0),
            (2.5, 2.5),
            (1.5, 1.5),
            (2.0, 3.0),
            (4.0, 2.0),
            (0.5, 3.0),
            (2.15, 2.15),
        ]
        .iter()
        .map(|&(c, d)| pair(c, d))
        .collect::<Result<Vec<_>>>()?,
    };
    let exps_list = match override_exps(cfg)? {
        Some(e) => vec![e],
        None => [(0.5, 2.0), (0.3, 1.5), (1.0, 1.0), (0.8, 4.0)]
            .iter()
            .map(|&(a, b)| exps(a, b))
            .collect::<Result<Vec<_>>>()?,
    };
    builder.param("n_pairs", pairs.len());
    builder.param("n_exponent_pairs", exps_list.len());

    let combos: Vec<(ZeroBalancedPair, PhiExponents)> = pairs
        .iter()
        .flat_map(|&p| exps_list.iter().map(move |&e| (p, e)))
        .collect();

    type ThresholdOutcome = (Vec<f64>, Option<(bool, f64)>);
    let results: Vec<ThresholdOutcome> = combos
        .par_iter()
        .map(|(zb, e)| -> Result<_> {
            let point = vec![zb.c(), zb.d(), e.a(), e.b()];
            let outcome = match threshold_predicate(zb) {
                ThresholdPrediction::Inconclusive => None,
                pred => {
                    let beta = beta_root(zb, e)?;
                    let margin = match pred {
                        ThresholdPrediction::PredictGt => beta - 0.5,
                        ThresholdPrediction::PredictLt => 0.5 - beta,
                        ThresholdPrediction::Inconclusive => unreachable!(),
                    };
                    Some((margin > 0.0, margin))
                }
            };
            Ok((point, outcome))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rec = Recorder::new(tol);
    let mut inconclusive = 0usize;
    for (point, outcome) in results {
        match outcome {
            Some((ok, margin)) => rec.record_verdict(&point, ok, margin),
            None => inconclusive += 1,
        }
    }
    builder.param("n_inconclusive", inconclusive);
    Ok(builder.finish(rec))
}

/// `g(1/2) < 1` whenever `a₀ ≤ 1`.
pub(super) fn check_my49(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("my49", tol);
    let pairs = match override_pair(cfg)? {
        Some(p) => {
            if !p.admissible() {
                return Err(Error::domain("claim requires a0 <= 1".to_string()));
            }
            vec![p]
        }
        None => {
            let mut v = admissible_pairs(25);
            // Boundary case a₀ = 1 exactly.
            v.push(pair(2.0, 2.0)?);
            v
        }
    };
    builder.param("n_pairs", pairs.len());

    let rec = par_recorders(&pairs, tol, |zb, rec| {
        let g_half = g_logistic_eval(zb, 0.0)?;
        rec.record(&[zb.c(), zb.d()], g_half.value, 1.0);
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// `g(sᵖ/(1+sᵖ))/p` is nonincreasing in `p` when `cd ≤ 1`.
pub(super) fn check_logconlemma(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("logconlemma", tol);

    let pairs = cd_le_one_pairs(cfg)?;
    let s_grid = GridSpec::log(1e-2, 1e2, 32)?;
    let p_grid = GridSpec::log(0.05, 6.0, cfg.n_or(128))?;
    builder.grid("s", s_grid);
    builder.grid("p", p_grid);
    builder.param("n_pairs", pairs.len());

    let s_points = s_grid.points();
    let p_points = p_grid.points();
    let rec = par_recorders(&pairs, tol, |zb, rec| {
        for &s in &s_points {
            let ln_s = s.ln();
            let at = |p: f64| -> Result<(f64, f64)> {
                let g = g_logistic_eval(zb, p * ln_s)?;
                Ok((g.value / p, g.abs_err_estimate / p))
            };
            let mut prev = at(p_points[0])?;
            for &p in &p_points[1..] {
                let cur = at(p)?;
                let w = tol.max(10.0 * (prev.1 + cur.1));
                rec.record_tol(&[zb.c(), zb.d(), s, p], cur.0, prev.0, w);
                prev = cur;
            }
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

fn cd_le_one_pairs(cfg: &CheckConfig) -> Result<Vec<ZeroBalancedPair>> {
    match override_pair(cfg)? {
        Some(p) => {
            if p.c() * p.d() > 1.0 + 1e-12 {
                return Err(Error::domain(format!(
                    "claim requires cd <= 1, got cd = {}",
                    p.c() * p.d()
                )));
            }
            Ok(vec![p])
        }
        None => [
            (1.0, 1.0),
            (0.5, 0.5),
            (0.5, 2.0),
            (2.0, 0.5),
            (0.3, 3.0),
            (1.0, 0.9),
        ]
        .iter()
        .map(|&(c, d)| pair(c, d))
        .collect(),
    }
}

/// `1 ≤ g(sᵇ/(1+sᵇ))/g(sᵃ/(1+sᵃ)) ≤ b/a` for `s ≥ 1`, `b ≥ a > 0`, `cd ≤ 1`.
pub(super) fn check_logcor(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("logcor", tol);

    let pairs = cd_le_one_pairs(cfg)?;
    let exponents: Vec<(f64, f64)> = match (cfg.a, cfg.b) {
        (Some(a), Some(b)) => {
            if !(0.0 < a && a <= b) {
                return Err(Error::domain("requires 0 < a <= b".to_string()));
            }
            vec![(a, b)]
        }
        _ => vec![(0.5, 2.0), (1.0, 3.0), (0.3, 0.9), (2.0, 5.0), (0.1, 1.0)],
    };
    let s_grid = GridSpec::log(1.0, 1e3, cfg.n_or(256))?;
    builder.grid("s", s_grid);
    builder.param("n_pairs", pairs.len());
    builder.param("exponents", json!(exponents));

    let s_points = s_grid.points();
    let rec = par_recorders(&pairs, tol, |zb, rec| {
        for &(a, b) in &exponents {
            for &s in &s_points {
                let ln_s = s.ln();
                let ga = g_logistic_eval(zb, a * ln_s)?;
                let gb = g_logistic_eval(zb, b * ln_s)?;
                let ratio = gb.value / ga.value;
                let err = gb.abs_err_estimate / ga.value + ratio * ga.abs_err_estimate / ga.value;
                let w = tol.max(10.0 * err);
                let pt = [zb.c(), zb.d(), a, b, s];
                rec.record_tol(&pt, 1.0, ratio, w);
                rec.record_tol(&pt, ratio, b / a, w);
            }
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// Superadditivity `g(sᵖ/(1+sᵖ)) + g(s^q/(1+s^q)) ≥ g(s^{p+q}/(1+s^{p+q}))`
/// for `s, p, q > 0`, `cd ≤ 1`.
pub(super) fn check_logcor1(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("logcor1", tol);

    let pairs = cd_le_one_pairs(cfg)?;
    let s_grid = GridSpec::log(0.05, 20.0, 16)?;
    let pq_grid = GridSpec::log(0.1, 10.0, cfg.n_or(16))?;
    builder.grid("s", s_grid);
    builder.grid("pq", pq_grid);
    builder.param("n_pairs", pairs.len());

    let s_points = s_grid.points();
    let pq_points = pq_grid.points();
    let rec = par_recorders(&pairs, tol, |zb, rec| {
        for &s in &s_points {
            let ln_s = s.ln();
            for &p in &pq_points {
                for &q in &pq_points {
                    let gp = g_logistic_eval(zb, p * ln_s)?;
                    let gq = g_logistic_eval(zb, q * ln_s)?;
                    let gpq = g_logistic_eval(zb, (p + q) * ln_s)?;
                    let w = tol.max(
                        10.0 * (gp.abs_err_estimate + gq.abs_err_estimate + gpq.abs_err_estimate),
                    );
                    rec.record_tol(
                        &[zb.c(), zb.d(), s, p, q],
                        gpq.value,
                        gp.value + gq.value,
                        w,
                    );
                }
            }
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// Default `(c,d)` × `(a,b)` combinations for the final bound theorems:
/// `cd ≤ 1` with `0 < a < 1 < b`.
pub(super) fn bound_combos(cfg: &CheckConfig) -> Result<Vec<(ZeroBalancedPair, PhiExponents)>> {
    let pairs: Vec<ZeroBalancedPair> = match override_pair(cfg)? {
        Some(p) => {
            if p.c() * p.d() > 1.0 + 1e-12 {
                return Err(Error::domain("claim requires cd <= 1".to_string()));
            }
            vec![p]
        }
        None => [(1.0, 1.0), (0.5, 0.5), (0.5, 2.0), (0.3, 1.0), (0.25, 4.0)]
            .iter()
            .map(|&(c, d)| pair(c, d))
            .collect::<Result<Vec<_>>>()?,
    };
    let exps_list: Vec<PhiExponents> = match override_exps(cfg)? {
        Some(e) => vec![e],
        None => [(0.5, 2.0), (0.3, 1.5), (0.8, 1.25), (0.6, 3.0)]
            .iter()
            .map(|&(a, b)| exps(a, b))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(pairs
        .iter()
        .flat_map(|&p| exps_list.iter().map(move |&e| (p, e)))
        .collect())
}

fn bound_check(
    id: &str,
    cfg: &CheckConfig,
    ratio: fn(&ZeroBalancedPair, &PhiExponents, f64, f64) -> Result<EvalResult>,
    bound: fn(&PhiExponents) -> f64,
) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new(id, tol);
    let combos = bound_combos(cfg)?;
    let s_grid = GridSpec::default_s(cfg.n_or(2048));
    builder.grid("s", s_grid);
    builder.param("n_combos", combos.len());

    let s_points = s_grid.points();
    let rec = par_recorders(&combos, tol, |(zb, e), rec| {
        let gamma = gamma_root(zb)?;
        let cap = bound(e);
        for &s in &s_points {
            let t = ratio(zb, e, s, gamma)?;
            let w = tol.max(10.0 * t.abs_err_estimate);
            let pt = [zb.c(), zb.d(), e.a(), e.b(), s];
            rec.record_tol(&pt, t.value, cap, w);
            if s <= 1.0 {
                // First-branch values stay below 1.
                rec.record_tol(&pt, t.value, 1.0, w);
            }
        }
        Ok(())
    })?;
    Ok(builder.finish(rec))
}

/// `T(s) ≤ b/a` over the admissible combinations.
pub(super) fn check_tbound(cfg: &CheckConfig) -> Result<VerificationReport> {
    bound_check("T-bound", cfg, t_ratio_ba_eval, |e| e.b() / e.a())
}

/// `t(s) ≤ b` over the admissible combinations.
pub(super) fn check_ssthm7(cfg: &CheckConfig) -> Result<VerificationReport> {
    bound_check("ssthm7", cfg, t_ratio_b_eval, |e| e.b())
}

// ---------------------------------------------------------------------------
// Exploratory question sweeps
// ---------------------------------------------------------------------------

pub(super) const MYQ3_PAIRS_CD_LE_1: [(f64, f64); 6] = [
    (1.0, 1.0),
    (0.5, 0.5),
    (0.5, 2.0),
    (0.3, 1.0),
    (0.8, 1.25),
    (1.0, 0.9),
];
pub(super) const MYQ3_PAIRS_CD_GT_1: [(f64, f64); 4] =
    [(1.5, 1.5), (2.0, 2.0), (3.0, 1.2), (1.1, 1.1)];

/// Addition-ratio sweep: `h(x,y)` stays ≥ 1 on the `cd ≤ 1` side and ≤ 1 on
/// the `c,d > 1` side. Exploratory: extrema are recorded, never asserted.
pub(super) fn check_myq3(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(1e-6);
    let mut builder = ReportBuilder::new("myq3", tol);
    let n = cfg.n_or(48);
    let grid = GridSpec::linear(0.02, 0.98, n)?;
    builder.grid("x", grid);
    builder.grid("y", grid);

    let (le_pairs, gt_pairs) = match override_pair(cfg)? {
        Some(p) => {
            if p.c() * p.d() <= 1.0 {
                (vec![p], vec![])
            } else {
                (vec![], vec![p])
            }
        }
        None => (
            MYQ3_PAIRS_CD_LE_1
                .iter()
                .map(|&(c, d)| pair(c, d))
                .collect::<Result<Vec<_>>>()?,
            MYQ3_PAIRS_CD_GT_1
                .iter()
                .map(|&(c, d)| pair(c, d))
                .collect::<Result<Vec<_>>>()?,
        ),
    };

    let points = grid.points();
    // Extremes both raw and discounted by the propagated evaluation error,
    // so near-1 boundary-form error cannot fake a conjecture violation.
    struct HScan {
        c: f64,
        d: f64,
        min_h: f64,
        max_h: f64,
        min_h_certified: f64,
        max_h_certified: f64,
        at_min: (f64, f64),
        at_max: (f64, f64),
    }
    let scan = |pairs: &[ZeroBalancedPair]| -> Result<Vec<HScan>> {
        pairs
            .par_iter()
            .map(|zb| -> Result<HScan> {
                let mut out = HScan {
                    c: zb.c(),
                    d: zb.d(),
                    min_h: f64::INFINITY,
                    max_h: f64::NEG_INFINITY,
                    min_h_certified: f64::INFINITY,
                    max_h_certified: f64::NEG_INFINITY,
                    at_min: (0.0, 0.0),
                    at_max: (0.0, 0.0),
                };
                for &x in &points {
                    for &y in &points {
                        let h = h_xy_eval(zb, x, y)?;
                        if h.value < out.min_h {
                            out.min_h = h.value;
                            out.at_min = (x, y);
                        }
                        if h.value > out.max_h {
                            out.max_h = h.value;
                            out.at_max = (x, y);
                        }
                        let widen = 10.0 * h.abs_err_estimate;
                        out.min_h_certified = out.min_h_certified.min(h.value + widen);
                        out.max_h_certified = out.max_h_certified.max(h.value - widen);
                    }
                }
                Ok(out)
            })
            .collect()
    };

    let mut rec = Recorder::new(tol);
    let mut summary = Vec::new();
    for s in scan(&le_pairs)? {
        // Conjectured side: h ≥ 1 when cd ≤ 1.
        rec.record(&[s.c, s.d, s.at_min.0, s.at_min.1], 1.0, s.min_h_certified);
        summary.push(json!({
            "c": s.c, "d": s.d, "cd_le_1": true,
            "min_h": s.min_h, "max_h": s.max_h,
            "min_h_error_adjusted": s.min_h_certified,
            "at_min": [s.at_min.0, s.at_min.1],
        }));
    }
    for s in scan(&gt_pairs)? {
        rec.record(&[s.c, s.d, s.at_max.0, s.at_max.1], s.max_h_certified, 1.0);
        summary.push(json!({
            "c": s.c, "d": s.d, "cd_le_1": false,
            "min_h": s.min_h, "max_h": s.max_h,
            "max_h_error_adjusted": s.max_h_certified,
            "at_max": [s.at_max.0, s.at_max.1],
        }));
    }
    builder.param("per_pair", Value::from(summary));
    Ok(builder.finish_exploratory(rec))
}

/// Empirical constant search: record `sup T(s)` per combination and which of
/// the candidate constants (`b/a` improved vs `b²/a` conjectured) bounds it.
pub(super) fn check_my44(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("my44", tol);
    let combos = bound_combos(cfg)?;
    let s_grid = GridSpec::log(1e-4, 1e4, cfg.n_or(256))?;
    builder.grid("s", s_grid);

    let s_points = s_grid.points();
    let results: Vec<Value> = combos
        .par_iter()
        .map(|(zb, e)| -> Result<Value> {
            let gamma = gamma_root(zb)?;
            let mut sup = f64::NEG_INFINITY;
            let mut at = 0.0;
            for &s in &s_points {
                let t = t_ratio_ba(zb, e, s, gamma)?;
                if t > sup {
                    sup = t;
                    at = s;
                }
            }
            let b_over_a = e.b() / e.a();
            let b2_over_a = e.b() * e.b() / e.a();
            let smallest = if sup <= 1.0 + tol {
                "1"
            } else if sup <= b_over_a + tol {
                "b/a"
            } else if sup <= b2_over_a + tol {
                "b^2/a"
            } else {
                "none"
            };
            Ok(json!({
                "c": zb.c(), "d": zb.d(), "a": e.a(), "b": e.b(),
                "sup_T": sup, "at_s": at,
                "b_over_a": b_over_a, "b2_over_a": b2_over_a,
                "smallest_bounding_constant": smallest,
            }))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rec = Recorder::new(tol);
    for (combo, r) in combos.iter().zip(&results) {
        let sup = r["sup_T"].as_f64().expect("sup recorded");
        let (zb, e) = combo;
        rec.record(&[zb.c(), zb.d(), e.a(), e.b()], sup, e.b() * e.b() / e.a());
    }
    builder.param("per_combo", Value::from(results));
    Ok(builder.finish_exploratory(rec))
}

/// Three-segment structure of `t(x) = g(x)/(b·φ(g(...)))` on `(0,1)`:
/// segment monotonicity and the conjectured floor/ceiling are recorded only
/// (the question is open).
pub(super) fn check_my46(cfg: &CheckConfig) -> Result<VerificationReport> {
    let tol = cfg.tol_or(DEFAULT_TOL);
    let mut builder = ReportBuilder::new("my46", tol);

    let pairs: Vec<ZeroBalancedPair> = match override_pair(cfg)? {
        Some(p) => vec![p],
        None => [(0.5, 0.5), (0.3, 0.8), (0.9, 0.9)]
            .iter()
            .map(|&(c, d)| pair(c, d))
            .collect::<Result<Vec<_>>>()?,
    };
    let exps_list: Vec<PhiExponents> = match override_exps(cfg)? {
        Some(e) => vec![e],
        None => [(0.5, 2.0), (0.3, 1.5)]
            .iter()
            .map(|&(a, b)| exps(a, b))
            .collect::<Result<Vec<_>>>()?,
    };
    let grid = GridSpec::linear(1e-3, 1.0 - 1e-3, cfg.n_or(512))?;
    builder.grid("x", grid);

    let combos: Vec<(ZeroBalancedPair, PhiExponents)> = pairs
        .iter()
        .flat_map(|&p| exps_list.iter().map(move |&e| (p, e)))
        .collect();

    let points = grid.points();
    let results: Vec<Value> = combos
        .par_iter()
        .map(|(zb, e)| -> Result<Value> {
            let beta = beta_root(zb, e)?;
            let alpha = 0.5;
            let t_at = |x: f64| -> Result<f64> { my46_t(zb, e, x) };

            let values: Vec<f64> = points.iter().map(|&x| t_at(x)).collect::<Result<_>>()?;
            let t_half = t_at(alpha)?;
            let t_beta = t_at(beta)?;
            let t_end = *values.last().expect("nonempty grid");
            let floor = t_half.min(t_end);

            let lo = alpha.min(beta);
            let hi = alpha.max(beta);
            let seg_of = |x: f64| -> usize {
                if x < lo {
                    0
                } else if x < hi {
                    1
                } else {
                    2
                }
            };
            let mut seg_monotone = [true, true, true];
            let mut seg_dir = [0i8, 0, 0];
            for w in values.windows(2).zip(points.windows(2)) {
                let (vals, xs) = w;
                if seg_of(xs[0]) != seg_of(xs[1]) {
                    continue;
                }
                let s = seg_of(xs[0]);
                let d = vals[1] - vals[0];
                let sign = if d > tol {
                    1
                } else if d < -tol {
                    -1
                } else {
                    0
                };
                if sign != 0 {
                    if seg_dir[s] == 0 {
                        seg_dir[s] = sign;
                    } else if seg_dir[s] != sign {
                        seg_monotone[s] = false;
                    }
                }
            }
            let above_floor = values.iter().all(|&v| v >= floor - 1e-9);
            let below_t_beta = values.iter().all(|&v| v <= t_beta + 1e-9);

            Ok(json!({
                "c": zb.c(), "d": zb.d(), "a": e.a(), "b": e.b(),
                "alpha": alpha, "beta": beta,
                "t_at_half": t_half, "t_at_beta": t_beta, "t_at_1minus": t_end,
                "segment_monotone": seg_monotone,
                "t_ge_min_of_t_half_t_1minus": above_floor,
                "t_le_t_beta": below_t_beta,
            }))
        })
        .collect::<Result<Vec<_>>>()?;

    builder.param("per_combo", Value::from(results));
    builder.param("note", "question open; sweeps recorded, nothing asserted");
    Ok(builder.finish_exploratory(Recorder::new(tol)))
}

/// `t(x) = g(x) / (b·φ(g(w/(1+w))))` with `w = φ⁻¹(x/(1−x))`.
pub(super) fn my46_t(zb: &ZeroBalancedPair, e: &PhiExponents, x: f64) -> Result<f64> {
    let gx = g_eval(zb, x)?.value;
    let ln_y = x.ln() - (1.0 - x).ln();
    let ln_w = if ln_y >= 0.0 {
        ln_y / e.b()
    } else {
        ln_y / e.a()
    };
    let inner = g_logistic_eval(zb, ln_w)?.value;
    let denom = e.b() * crate::logtype::phi(e, inner)?;
    Ok(gx / denom)
}
