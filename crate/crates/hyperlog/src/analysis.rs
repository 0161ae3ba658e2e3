//! Grid machinery, finite-difference monotonicity/concavity checkers, a
//! deterministic bracketing root solver, and the named roots and threshold
//! predicates of the verification suites.

use serde::Serialize;

use crate::error::Error;
use crate::hyp2f1::EvalResult;
use crate::logtype::{g_logistic_eval, s_fn, PhiExponents, ZeroBalancedPair};
use crate::Result;

/// Default absolute slack on finite-difference margins: below evaluation
/// error, well above the ~1e-2 violations seen in non-admissible regimes.
pub const DEFAULT_SLACK: f64 = 1e-9;

/// Factor applied to propagated evaluation-error estimates when widening
/// slacks near `x = 1`.
pub const ERR_WIDEN: f64 = 10.0;

const MAX_ROOT_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Spacing {
    Linear,
    Log,
}

/// A one-dimensional sweep grid.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n_points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, n_points: usize, spacing: Spacing) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::domain(format!(
                "grid requires finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        if n_points < 3 {
            return Err(Error::domain(format!(
                "grid requires at least 3 points, got {n_points}"
            )));
        }
        if spacing == Spacing::Log && lo <= 0.0 {
            return Err(Error::domain(format!(
                "log spacing requires lo > 0, got {lo}"
            )));
        }
        Ok(GridSpec {
            lo,
            hi,
            n_points,
            spacing,
        })
    }

    pub fn linear(lo: f64, hi: f64, n_points: usize) -> Result<Self> {
        Self::new(lo, hi, n_points, Spacing::Linear)
    }

    pub fn log(lo: f64, hi: f64, n_points: usize) -> Result<Self> {
        Self::new(lo, hi, n_points, Spacing::Log)
    }

    /// Default argument grid: linear on `(1e-6, 1−1e-6)`, 2048 points.
    pub fn default_x(n_points: usize) -> Self {
        Self::linear(1e-6, 1.0 - 1e-6, n_points).expect("valid default grid")
    }

    /// Default scale grid: log on `(1e-4, 1e4)`, 2048 points.
    pub fn default_s(n_points: usize) -> Self {
        Self::log(1e-4, 1e4, n_points).expect("valid default grid")
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.n_points;
        let denom = (n - 1) as f64;
        let mut pts: Vec<f64> = match self.spacing {
            Spacing::Linear => (0..n)
                .map(|i| self.lo + (self.hi - self.lo) * i as f64 / denom)
                .collect(),
            Spacing::Log => {
                let llo = self.lo.ln();
                let lhi = self.hi.ln();
                (0..n)
                    .map(|i| (llo + (lhi - llo) * i as f64 / denom).exp())
                    .collect()
            }
        };
        // Endpoints land exactly despite ln/exp round trips.
        pts[0] = self.lo;
        pts[n - 1] = self.hi;
        pts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MonotonicityKind {
    Increasing,
    Decreasing,
    NonMonotone,
}

/// Outcome of a grid monotonicity check.
///
/// `worst_margin` is the smallest oriented consecutive difference after
/// discounting any per-point slack widening, so `kind != NonMonotone` always
/// implies `worst_margin ≥ −base_slack`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MonotonicityVerdict {
    pub kind: MonotonicityKind,
    pub worst_margin: f64,
    pub witness: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConcavityKind {
    Concave,
    Convex,
    Neither,
}

/// Outcome of a grid second-difference check.
///
/// Excesses measure how far a second difference exceeded its slack: positive
/// `max_upward_excess` breaks concavity, positive `max_downward_excess`
/// breaks convexity; both positive mean an inflection.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConcavityVerdict {
    pub kind: ConcavityKind,
    pub max_upward_excess: f64,
    pub max_downward_excess: f64,
    pub witness_upward: Option<f64>,
    pub witness_downward: Option<f64>,
}

fn eval_grid<F>(f: F, points: &[f64]) -> Result<Vec<EvalResult>>
where
    F: Fn(f64) -> Result<EvalResult>,
{
    points.iter().map(|&x| f(x)).collect()
}

/// Monotonicity check with per-point error estimates: the slack between two
/// neighbors is `base_slack.max(ERR_WIDEN·(errᵢ + errᵢ₊₁))`.
pub fn check_monotone_weighted<F>(
    f: F,
    grid: &GridSpec,
    direction: Direction,
    base_slack: f64,
) -> Result<MonotonicityVerdict>
where
    F: Fn(f64) -> Result<EvalResult>,
{
    let points = grid.points();
    let evals = eval_grid(f, &points)?;
    for (x, e) in points.iter().zip(&evals) {
        if !e.value.is_finite() {
            return Err(Error::Eval { at: *x });
        }
    }

    let mut worst = f64::INFINITY;
    let mut witness = None;
    let mut violated = false;
    for i in 0..evals.len() - 1 {
        let d = match direction {
            Direction::Increasing => evals[i + 1].value - evals[i].value,
            Direction::Decreasing => evals[i].value - evals[i + 1].value,
        };
        let slack =
            base_slack.max(ERR_WIDEN * (evals[i].abs_err_estimate + evals[i + 1].abs_err_estimate));
        // Discount the widened part so margins stay comparable to base_slack.
        let discounted = d + (slack - base_slack);
        if discounted < worst {
            worst = discounted;
            witness = Some(points[i]);
        }
        if d < -slack {
            violated = true;
        }
    }

    let kind = if violated {
        MonotonicityKind::NonMonotone
    } else {
        match direction {
            Direction::Increasing => MonotonicityKind::Increasing,
            Direction::Decreasing => MonotonicityKind::Decreasing,
        }
    };
    Ok(MonotonicityVerdict {
        kind,
        worst_margin: worst,
        witness: if violated { witness } else { None },
    })
}

/// Monotonicity check for a plain function with the default slack.
pub fn check_monotone<F>(f: F, grid: &GridSpec, direction: Direction) -> Result<MonotonicityVerdict>
where
    F: Fn(f64) -> Result<f64>,
{
    check_monotone_weighted(
        |x| Ok(EvalResult::exact(f(x)?)),
        grid,
        direction,
        DEFAULT_SLACK,
    )
}

/// Second-difference concavity/convexity check with per-point error
/// estimates. The outermost two grid points on each side are excluded, where
/// finite differences would be one-sided.
pub fn check_concavity_weighted<F>(
    f: F,
    grid: &GridSpec,
    base_slack: f64,
) -> Result<ConcavityVerdict>
where
    F: Fn(f64) -> Result<EvalResult>,
{
    let points = grid.points();
    let evals = eval_grid(f, &points)?;
    for (x, e) in points.iter().zip(&evals) {
        if !e.value.is_finite() {
            return Err(Error::Eval { at: *x });
        }
    }

    let n = evals.len();
    let mut up_excess = f64::NEG_INFINITY;
    let mut down_excess = f64::NEG_INFINITY;
    let mut up_at = None;
    let mut down_at = None;
    for i in 2..n - 2 {
        let d2 = evals[i - 1].value - 2.0 * evals[i].value + evals[i + 1].value;
        let slack = base_slack.max(
            ERR_WIDEN
                * (evals[i - 1].abs_err_estimate
                    + evals[i].abs_err_estimate
                    + evals[i + 1].abs_err_estimate),
        );
        if d2 - slack > up_excess {
            up_excess = d2 - slack;
            up_at = Some(points[i]);
        }
        if -d2 - slack > down_excess {
            down_excess = -d2 - slack;
            down_at = Some(points[i]);
        }
    }

    let kind = if up_excess <= 0.0 {
        ConcavityKind::Concave
    } else if down_excess <= 0.0 {
        ConcavityKind::Convex
    } else {
        ConcavityKind::Neither
    };
    Ok(ConcavityVerdict {
        kind,
        max_upward_excess: up_excess,
        max_downward_excess: down_excess,
        witness_upward: if up_excess > 0.0 { up_at } else { None },
        witness_downward: if down_excess > 0.0 { down_at } else { None },
    })
}

/// Concavity check for a plain function with the default slack.
pub fn check_concavity<F>(f: F, grid: &GridSpec) -> Result<ConcavityVerdict>
where
    F: Fn(f64) -> Result<f64>,
{
    check_concavity_weighted(|x| Ok(EvalResult::exact(f(x)?)), grid, DEFAULT_SLACK)
}

/// Bracketing root solver: secant proposals safeguarded by bisection, so the
/// bracket at least halves every iteration. Deterministic; capped at 200
/// iterations.
///
/// Returns a point with `|f| ≤ tol` or the midpoint of a bracket of width
/// `≤ tol`.
pub fn bracket_root<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::domain(format!(
            "bracket requires finite lo < hi, got [{lo}, {hi}]"
        )));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }

    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a)?;
    if !fa.is_finite() {
        return Err(Error::Eval { at: a });
    }
    if fa == 0.0 {
        return Ok(a);
    }
    let mut fb = f(b)?;
    if !fb.is_finite() {
        return Err(Error::Eval { at: b });
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if (fa < 0.0) == (fb < 0.0) {
        return Err(Error::Bracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
            diagnostic: String::new(),
        });
    }

    let mut step =
        |a: &mut f64, b: &mut f64, fa: &mut f64, fb: &mut f64, x: f64| -> Result<Option<f64>> {
            let fx = f(x)?;
            if !fx.is_finite() {
                return Err(Error::Eval { at: x });
            }
            if fx == 0.0 || fx.abs() <= tol {
                return Ok(Some(x));
            }
            if (fx < 0.0) == (*fa < 0.0) {
                *a = x;
                *fa = fx;
            } else {
                *b = x;
                *fb = fx;
            }
            Ok(None)
        };

    for _ in 0..MAX_ROOT_ITER {
        if b - a <= tol {
            return Ok(0.5 * (a + b));
        }
        let width = b - a;
        // Secant proposal, pulled to the midpoint when degenerate or too
        // close to an endpoint to make progress.
        let mut x = b - fb * (b - a) / (fb - fa);
        if !x.is_finite() || x <= a || x >= b || (x - a).min(b - x) < 1e-3 * width {
            x = 0.5 * (a + b);
        }
        if let Some(root) = step(&mut a, &mut b, &mut fa, &mut fb, x)? {
            return Ok(root);
        }
        // Enforce geometric shrinkage: when the secant update kept more than
        // half the bracket, bisect as well.
        if b - a > 0.5 * width {
            let mid = 0.5 * (a + b);
            if let Some(root) = step(&mut a, &mut b, &mut fa, &mut fb, mid)? {
                return Ok(root);
            }
        }
    }
    // 200 at-least-halving iterations shrink any finite bracket below tol.
    Ok(0.5 * (a + b))
}

/// Internal root tolerance used by the named roots.
const ROOT_TOL: f64 = 1e-12;

/// Solve `g(s/(1+s)) = 1` for `s > 0`, valid for any pair (the left side is
/// an increasing homeomorphism of `(0, ∞)` onto `(0, ∞)`).
fn unit_level_root(pair: &ZeroBalancedPair) -> Result<f64> {
    let q = |s: f64| -> Result<f64> { Ok(g_logistic_eval(pair, s.ln())?.value - 1.0) };
    let lo = 1e-8;
    let mut hi = 2.0;
    let mut q_hi = q(hi)?;
    while q_hi <= 0.0 {
        hi *= 4.0;
        if hi > 1e15 {
            let g_half = g_logistic_eval(pair, 0.0)?.value;
            return Err(Error::Bracket {
                lo,
                hi,
                f_lo: q(lo)?,
                f_hi: q_hi,
                diagnostic: format!("; g(1/2) = {g_half}"),
            });
        }
        q_hi = q(hi)?;
    }
    bracket_root(q, lo, hi, ROOT_TOL)
}

/// The unit level `γ`: unique solution of `g(s/(1+s)) = 1`, required here
/// with `cd ≤ 1`, which forces `γ > 1` (since then `g(1/2) < 1`).
pub fn gamma_root(pair: &ZeroBalancedPair) -> Result<f64> {
    if pair.c() * pair.d() > 1.0 + 1e-12 {
        return Err(Error::domain(format!(
            "gamma root requires cd <= 1, got cd = {}",
            pair.c() * pair.d()
        )));
    }
    let root = unit_level_root(pair)?;
    let residual = g_logistic_eval(pair, root.ln())?.value - 1.0;
    if residual.abs() > 1e-10 {
        return Err(Error::Contract(format!(
            "gamma root residual {residual} exceeds 1e-10"
        )));
    }
    if root <= 1.0 {
        let g_half = g_logistic_eval(pair, 0.0)?.value;
        return Err(Error::Contract(format!(
            "gamma root {root} <= 1 despite cd <= 1; g(1/2) = {g_half}"
        )));
    }
    Ok(root)
}

/// The unique positive solution `x₀ ≈ 2.4555` of
/// `log(1+x)·log(1+log(1+x)) = 1`.
pub fn x0_root() -> Result<f64> {
    bracket_root(|x| Ok(s_fn(x)? - 1.0), 1.0, 5.0, ROOT_TOL)
}

/// The level `β ∈ (0, 1)`: unique solution in `x` of
/// `g(φ⁻¹(x/(1−x)) / (1 + φ⁻¹(x/(1−x)))) = 1`.
///
/// Defined for any positive pair — the threshold classification needs both
/// `β > 1/2` (admissible) and `β < 1/2` (`a₀ > 1`) cases.
pub fn beta_root(pair: &ZeroBalancedPair, e: &PhiExponents) -> Result<f64> {
    // ln φ⁻¹(y) = ln(y)/a for y < 1, ln(y)/b for y ≥ 1; the inner logistic
    // argument is exactly that logarithm.
    let q = |x: f64| -> Result<f64> {
        let ln_y = x.ln() - (1.0 - x).ln();
        let ln_w = if ln_y >= 0.0 {
            ln_y / e.b()
        } else {
            ln_y / e.a()
        };
        Ok(g_logistic_eval(pair, ln_w)?.value - 1.0)
    };
    let lo = 1e-9;
    let mut hi = 1.0 - 1e-6;
    let mut q_hi = q(hi)?;
    while q_hi <= 0.0 {
        let gap = (1.0 - hi) / 64.0;
        if gap < 1e-15 {
            return Err(Error::Bracket {
                lo,
                hi,
                f_lo: q(lo)?,
                f_hi: q_hi,
                diagnostic: String::new(),
            });
        }
        hi = 1.0 - gap;
        q_hi = q(hi)?;
    }
    let root = bracket_root(q, lo, hi, ROOT_TOL)?;
    let residual = q(root)?;
    if residual.abs() > 1e-10 {
        return Err(Error::Contract(format!(
            "beta root residual {residual} exceeds 1e-10"
        )));
    }
    Ok(root)
}

/// Threshold classification of `β` against `1/2` from the coefficient data
/// alone: `β > 1/2` when `(a₀−1)/h ≤ c₀`, `β < 1/2` when `(a₀−1)/h ≥ c₁`,
/// with `c₀ = 1 − 1/(2 log 2)` and `c₁ = 1/log 2 − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThresholdPrediction {
    PredictGt,
    PredictLt,
    Inconclusive,
}

pub fn threshold_predicate(pair: &ZeroBalancedPair) -> ThresholdPrediction {
    let c0 = 1.0 - 1.0 / (2.0 * std::f64::consts::LN_2);
    let c1 = 1.0 / std::f64::consts::LN_2 - 1.0;
    let ratio = (pair.a0() - 1.0) / pair.a0_minus_a1();
    if ratio <= c0 {
        ThresholdPrediction::PredictGt
    } else if ratio >= c1 {
        ThresholdPrediction::PredictLt
    } else {
        ThresholdPrediction::Inconclusive
    }
}

/// Curvature of `h(x) = log f(eˣ)` for the power-ratio classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curvature {
    Convex,
    Concave,
}

/// Argument region of the power-ratio classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// `x ∈ (0, 1)`
    UnitInterval,
    /// `x > 1`
    AboveOne,
}

/// Predicted monotonicity of `x ↦ f(xᶜ)/f(x)ᶜ` from the curvature of
/// `log f(eˣ)`.
///
/// When `h` is neither convex nor concave the ratio is not monotone; that
/// case surfaces from the numeric checker, not from this table. `c = 1`
/// makes the ratio constant and is reported as `Increasing` (vacuous).
pub fn power_ratio_monotonicity(curvature: Curvature, c: f64, region: Region) -> Result<Direction> {
    if !c.is_finite() || c == 0.0 {
        return Err(Error::domain(format!(
            "classifier requires c != 0, got {c}"
        )));
    }
    if c == 1.0 {
        return Ok(Direction::Increasing);
    }
    let mid = c > 0.0 && c < 1.0;
    let convex_verdict = match region {
        Region::UnitInterval => {
            if mid {
                Direction::Increasing
            } else {
                Direction::Decreasing
            }
        }
        Region::AboveOne => {
            if mid {
                Direction::Decreasing
            } else {
                Direction::Increasing
            }
        }
    };
    Ok(match curvature {
        Curvature::Convex => convex_verdict,
        Curvature::Concave => match convex_verdict {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        },
    })
}

#[cfg(test)]
// Reference constants below are frozen verbatim from a multiprecision oracle.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn grid_construction_and_points() {
        let g = GridSpec::linear(0.0, 1.0, 5).unwrap();
        assert_eq!(g.points(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let g = GridSpec::log(1e-2, 1e2, 5).unwrap();
        let pts = g.points();
        assert_abs_diff_eq!(pts[2], 1.0, epsilon = 1e-12);
        assert!(GridSpec::linear(1.0, 0.0, 5).is_err());
        assert!(GridSpec::linear(0.0, 1.0, 2).is_err());
        assert!(GridSpec::log(0.0, 1.0, 5).is_err());
    }

    #[test]
    fn monotone_checker_basics() {
        let grid = GridSpec::linear(0.1, 2.0, 64).unwrap();
        let v = check_monotone(|x| Ok(x * x), &grid, Direction::Increasing).unwrap();
        assert_eq!(v.kind, MonotonicityKind::Increasing);
        assert!(v.worst_margin > 0.0);

        let v = check_monotone(|x| Ok(x * x), &grid, Direction::Decreasing).unwrap();
        assert_eq!(v.kind, MonotonicityKind::NonMonotone);
        assert!(v.witness.is_some());

        // A flat function passes both directions within slack.
        let v = check_monotone(|_| Ok(1.0), &grid, Direction::Increasing).unwrap();
        assert_eq!(v.kind, MonotonicityKind::Increasing);
        let v = check_monotone(|_| Ok(1.0), &grid, Direction::Decreasing).unwrap();
        assert_eq!(v.kind, MonotonicityKind::Decreasing);
    }

    #[test]
    fn concavity_checker_basics() {
        let grid = GridSpec::linear(-2.0, 2.0, 128).unwrap();
        let v = check_concavity(|x| Ok(x * x), &grid).unwrap();
        assert_eq!(v.kind, ConcavityKind::Convex);
        let v = check_concavity(|x: f64| Ok(-(x * x)), &grid).unwrap();
        assert_eq!(v.kind, ConcavityKind::Concave);
        let v = check_concavity(|x: f64| Ok(x * x * x), &grid).unwrap();
        assert_eq!(v.kind, ConcavityKind::Neither);
        assert!(v.witness_upward.is_some());
        assert!(v.witness_downward.is_some());
    }

    #[test]
    fn bracket_root_basics() {
        let r = bracket_root(|x| Ok(x * x - 2.0), 1.0, 2.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r, std::f64::consts::SQRT_2, epsilon = 1e-10);
        assert!(bracket_root(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn bracket_root_deterministic() {
        let f = |x: f64| Ok((x - 0.7324).powi(3) + 1e-6 * x);
        let a = bracket_root(f, 0.0, 5.0, 1e-13).unwrap();
        let b = bracket_root(f, 0.0, 5.0, 1e-13).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn named_roots() {
        let x0 = x0_root().unwrap();
        assert!((x0 - 2.4555).abs() <= 5e-4);
        assert_abs_diff_eq!(x0, 2.4555370538957273, epsilon = 1e-9);

        let unit = ZeroBalancedPair::new(1.0, 1.0).unwrap();
        let g = gamma_root(&unit).unwrap();
        assert_abs_diff_eq!(g, std::f64::consts::E - 1.0, epsilon = 1e-9);

        let half = ZeroBalancedPair::new(0.5, 0.5).unwrap();
        let g = gamma_root(&half).unwrap();
        assert!(g > 1.0);
        assert_abs_diff_eq!(g, 2.7943953018153135, epsilon = 1e-8);

        // cd > 1 violates the precondition.
        assert!(gamma_root(&ZeroBalancedPair::new(2.0, 2.0).unwrap()).is_err());
    }

    #[test]
    fn gamma_root_exceeds_one_when_cd_small() {
        for &(c, d) in &[(1.0, 1.0), (0.5, 0.5), (0.5, 2.0), (0.3, 3.0), (0.1, 0.1)] {
            let pair = ZeroBalancedPair::new(c, d).unwrap();
            assert!(gamma_root(&pair).unwrap() > 1.0, "pair ({c},{d})");
        }
    }

    #[test]
    fn beta_root_closed_form() {
        let pair = ZeroBalancedPair::new(1.0, 1.0).unwrap();
        let e = PhiExponents::new(1.0, 1.0).unwrap();
        let b = beta_root(&pair, &e).unwrap();
        assert_abs_diff_eq!(b, 1.0 - (-1.0f64).exp(), epsilon = 1e-9);
    }

    #[test]
    fn beta_root_reference_value() {
        let pair = ZeroBalancedPair::new(0.5, 0.5).unwrap();
        let e = PhiExponents::new(0.5, 2.0).unwrap();
        let b = beta_root(&pair, &e).unwrap();
        assert_abs_diff_eq!(b, 0.886475162941769634, epsilon = 1e-8);
    }

    #[test]
    fn beta_matches_envelope_of_gamma() {
        // β = φ(γ)/(1+φ(γ)) by the substitution that defines both roots.
        use crate::logtype::phi;
        for &(c, d, a, b) in &[
            (1.0, 1.0, 0.5, 2.0),
            (0.5, 0.5, 0.3, 1.5),
            (0.5, 2.0, 0.8, 4.0),
        ] {
            let pair = ZeroBalancedPair::new(c, d).unwrap();
            let e = PhiExponents::new(a, b).unwrap();
            let gamma = gamma_root(&pair).unwrap();
            let expect = phi(&e, gamma).unwrap() / (1.0 + phi(&e, gamma).unwrap());
            let got = beta_root(&pair, &e).unwrap();
            assert_abs_diff_eq!(got, expect, epsilon = 1e-8);
        }
    }

    #[test]
    fn threshold_examples() {
        let unit = ZeroBalancedPair::new(1.0, 1.0).unwrap();
        // (a₀−1)/h = −6 for the unit pair.
        assert_abs_diff_eq!(
            (unit.a0() - 1.0) / unit.a0_minus_a1(),
            -6.0,
            epsilon = 1e-12
        );
        assert_eq!(threshold_predicate(&unit), ThresholdPrediction::PredictGt);

        // Any a₀ ≤ 1 pair predicts GT.
        for &(c, d) in &[(0.5, 0.5), (2.0, 2.0), (0.3, 3.0)] {
            let p = ZeroBalancedPair::new(c, d).unwrap();
            assert_eq!(threshold_predicate(&p), ThresholdPrediction::PredictGt);
        }

        // Found by scanning the (c,d) plane: ratio ≈ 0.344 ∈ (c₀, c₁).
        let mid = ZeroBalancedPair::new(2.15, 2.15).unwrap();
        assert_eq!(threshold_predicate(&mid), ThresholdPrediction::Inconclusive);

        let big = ZeroBalancedPair::new(3.0, 3.0).unwrap();
        assert_eq!(threshold_predicate(&big), ThresholdPrediction::PredictLt);
    }

    #[test]
    fn classifier_table() {
        use Curvature::*;
        use Direction::*;
        use Region::*;
        assert_eq!(
            power_ratio_monotonicity(Convex, 0.5, UnitInterval).unwrap(),
            Increasing
        );
        assert_eq!(
            power_ratio_monotonicity(Concave, 0.5, AboveOne).unwrap(),
            Increasing
        );
        assert_eq!(
            power_ratio_monotonicity(Concave, 3.0, AboveOne).unwrap(),
            Decreasing
        );
        assert_eq!(
            power_ratio_monotonicity(Convex, -1.0, AboveOne).unwrap(),
            Increasing
        );
        assert!(power_ratio_monotonicity(Convex, 0.0, AboveOne).is_err());
    }
}
