//! The logarithmic-type function family built on the zero-balanced
//! hypergeometric: `g(x) = x·F(c,d;c+d;x)` (which reduces to `log(1/(1−x))`
//! at `c = d = 1`), the max-power envelope `φ(t) = max{tᵃ, tᵇ}` and its exact
//! inverse, the power mean `ω`, the four classical bounded ratios of `F`,
//! piecewise Bernoulli-ratio bounds, and the elementary softplus-based
//! helpers used by their proofs.

use crate::error::Error;
use crate::hyp2f1::{f21, f21_impl, EvalResult, HypParams};
use crate::special_fn::beta_pos;
use crate::Result;

/// Half-width around piecewise breakpoints inside which both branches are
/// evaluated and must agree.
const BREAKPOINT_BAND: f64 = 1e-9;

/// Maximum allowed disagreement between adjacent branches at a breakpoint.
const BRANCH_AGREE_TOL: f64 = 1e-6;

/// Exponent pair of the envelope `φ(t) = max{tᵃ, tᵇ}` with `0 < a ≤ 1 ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiExponents {
    a: f64,
    b: f64,
}

impl PhiExponents {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a <= 0.0 || a > 1.0 || b < 1.0 {
            return Err(Error::domain(format!(
                "envelope exponents must satisfy 0 < a <= 1 <= b, got a={a}, b={b}"
            )));
        }
        Ok(PhiExponents { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// Positive pair `(c, d)` parameterizing the zero-balanced function
/// `g(x) = x·F(c,d;c+d;x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroBalancedPair {
    c: f64,
    d: f64,
}

impl ZeroBalancedPair {
    pub fn new(c: f64, d: f64) -> Result<Self> {
        for (name, v) in [("c", c), ("d", d)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::domain(format!(
                    "{name} must be a finite positive real, got {v}"
                )));
            }
        }
        Ok(ZeroBalancedPair { c, d })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// Leading ratio coefficient `a₀ = cd/(c+d)`.
    pub fn a0(&self) -> f64 {
        self.c * self.d / (self.c + self.d)
    }

    /// Coefficient drop `a₀ − a₁ = c²d²/((c+d)²(c+d+1))`.
    pub fn a0_minus_a1(&self) -> f64 {
        let a0 = self.a0();
        a0 * a0 / (self.c + self.d + 1.0)
    }

    /// Admissibility condition `1/c + 1/d ≥ 1` (equivalently `a₀ ≤ 1`).
    pub fn admissible(&self) -> bool {
        1.0 / self.c + 1.0 / self.d >= 1.0
    }

    pub fn hyp_params(&self) -> HypParams {
        HypParams::new(self.c, self.d, self.c + self.d).expect("validated positive pair")
    }
}

/// Numerically stable logistic `eᵘ/(1+eᵘ)`.
pub(crate) fn logistic(u: f64) -> f64 {
    if u >= 0.0 {
        1.0 / (1.0 + (-u).exp())
    } else {
        let e = u.exp();
        e / (1.0 + e)
    }
}

/// `log(1 + eˣ)` (softplus), stable across the whole real line.
pub fn r_fn(x: f64) -> f64 {
    if x > 34.0 {
        x
    } else if x < -37.0 {
        x.exp()
    } else {
        x.exp().ln_1p()
    }
}

/// Iterated softplus `v(x) = log(1 + log(1 + eˣ))`.
pub fn v_fn(x: f64) -> f64 {
    r_fn(x).ln_1p()
}

/// Positivity witness `w(x) = eˣ + v(x)·(eˣ − 1 − log(1+eˣ))` certifying the
/// log-concavity of `v`.
pub fn w_fn(x: f64) -> f64 {
    let ex = x.exp();
    ex + v_fn(x) * (ex - 1.0 - r_fn(x))
}

/// `s(x) = log(1+x)·log(1+log(1+x))` for `x ≥ 0`.
pub fn s_fn(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!("s requires x >= 0, got {x}")));
    }
    let l = x.ln_1p();
    Ok(l * l.ln_1p())
}

/// `g(x) = x·F(c,d;c+d;x)` for `x ∈ [0, 1)`, with error estimate and method.
pub fn g_eval(pair: &ZeroBalancedPair, x: f64) -> Result<EvalResult> {
    if !x.is_finite() || !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!("g requires 0 <= x < 1, got {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    Ok(f21(&pair.hyp_params(), x)?.scaled(x))
}

/// `g(x)` value only.
pub fn g_fn(pair: &ZeroBalancedPair, x: f64) -> Result<f64> {
    Ok(g_eval(pair, x)?.value)
}

/// `g` evaluated at the logistic point `x = eᵘ/(1+eᵘ)`.
///
/// Works for any real `u`: `log(1−x) = −softplus(u)` is fed to the evaluator
/// exactly, so arguments far past the crossover (where `x` itself rounds to
/// 1) remain well-defined.
pub fn g_logistic_eval(pair: &ZeroBalancedPair, u: f64) -> Result<EvalResult> {
    if !u.is_finite() {
        return Err(Error::domain(format!(
            "logistic argument must be finite, got {u}"
        )));
    }
    let x = logistic(u);
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    let f = f21_impl(&pair.hyp_params(), x, -r_fn(u))?;
    Ok(f.scaled(x))
}

/// Envelope `φ(t) = max{tᵃ, tᵇ}` for `t ≥ 0`.
pub fn phi(e: &PhiExponents, t: f64) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain(format!("phi requires t >= 0, got {t}")));
    }
    Ok(t.powf(e.a).max(t.powf(e.b)))
}

/// Exact inverse `φ⁻¹(y) = min{y^{1/a}, y^{1/b}}` for `y ≥ 0`.
pub fn phi_inv(e: &PhiExponents, y: f64) -> Result<f64> {
    if !y.is_finite() || y < 0.0 {
        return Err(Error::domain(format!("phi_inv requires y >= 0, got {y}")));
    }
    Ok(y.powf(1.0 / e.a).min(y.powf(1.0 / e.b)))
}

/// Power mean `ω(c,d,p,r) = g(rᵖ/(1+rᵖ))^{1/p}`.
///
/// The governing monotonicity claim concerns `r ∈ (0, 1)`; larger `r` is
/// accepted (the non-monotone regime) and it is up to report layers to tag
/// such points as outside the theorem domain.
pub fn omega_eval(pair: &ZeroBalancedPair, p: f64, r: f64) -> Result<EvalResult> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::domain(format!("omega requires p > 0, got {p}")));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::domain(format!("omega requires r > 0, got {r}")));
    }
    let g = g_logistic_eval(pair, p * r.ln())?;
    let value = (g.value.ln() / p).exp();
    // dω/dg = ω/(p·g).
    let abs_err = if g.value > 0.0 {
        value * g.abs_err_estimate / (p * g.value)
    } else {
        0.0
    };
    Ok(EvalResult {
        value,
        abs_err_estimate: abs_err,
        method: g.method,
    })
}

/// `ω` value only.
pub fn omega(pair: &ZeroBalancedPair, p: f64, r: f64) -> Result<f64> {
    Ok(omega_eval(pair, p, r)?.value)
}

/// Whether `r` lies in the domain of the `ω`-monotonicity theorem.
pub fn omega_theorem_domain(r: f64) -> bool {
    r > 0.0 && r < 1.0
}

/// The four classical bounded ratios of the zero-balanced `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioKind {
    /// `(F − 1)/log(1/(1−x))`, increasing from `ab/(a+b)` to `1/B`.
    F1,
    /// `B·F + log(1−x)`, decreasing from `B` to `R`.
    F2,
    /// `B·F + (1/x)·log(1−x)`, monotone between `B−1` and `R`.
    F3,
    /// `x·F/log(1/(1−x))`, monotone between `1` and `1/B`.
    F4,
}

/// Ratio `f₁..f₄` at `x ∈ (0,1)` for zero-balanced parameters, with the
/// hypergeometric error estimate propagated through the combination.
pub fn f_ratio_eval(p: &HypParams, x: f64, kind: RatioKind) -> Result<EvalResult> {
    if !p.zero_balanced() {
        return Err(Error::domain(
            "ratio functions require zero-balanced parameters (c = a + b)".to_string(),
        ));
    }
    if !x.is_finite() || x <= 0.0 || x >= 1.0 {
        return Err(Error::domain(format!(
            "ratio functions require 0 < x < 1, got {x}"
        )));
    }
    let f = f21(p, x)?;
    let ln1mx = (1.0 - x).ln();
    let log_inv = -ln1mx;
    let bb = beta_pos(p.a(), p.b());
    let (value, abs_err) = match kind {
        RatioKind::F1 => ((f.value - 1.0) / log_inv, f.abs_err_estimate / log_inv),
        RatioKind::F2 => (bb * f.value + ln1mx, bb * f.abs_err_estimate),
        RatioKind::F3 => (bb * f.value + ln1mx / x, bb * f.abs_err_estimate),
        RatioKind::F4 => (x * f.value / log_inv, x * f.abs_err_estimate / log_inv),
    };
    Ok(EvalResult {
        value,
        abs_err_estimate: abs_err,
        method: f.method,
    })
}

/// Ratio value only.
pub fn f_ratio(p: &HypParams, x: f64, kind: RatioKind) -> Result<f64> {
    Ok(f_ratio_eval(p, x, kind)?.value)
}

/// Evaluate a two-breakpoint piecewise function, checking branch agreement
/// within `1e-9` of each breakpoint (guards against breakpoint error
/// propagation, e.g. from a root solved numerically).
fn piecewise3(
    x: f64,
    bp1: f64,
    bp2: f64,
    f1: impl Fn(f64) -> Result<f64>,
    f2: impl Fn(f64) -> Result<f64>,
    f3: impl Fn(f64) -> Result<f64>,
) -> Result<f64> {
    debug_assert!(bp1 < bp2);
    let near = |bp: f64| (x - bp).abs() <= BREAKPOINT_BAND;
    let agree = |left: f64, right: f64| -> Result<f64> {
        if (left - right).abs() > BRANCH_AGREE_TOL {
            return Err(Error::BranchMismatch { at: x, left, right });
        }
        Ok(left)
    };
    if near(bp1) {
        agree(f1(x)?, f2(x)?)
    } else if near(bp2) {
        agree(f2(x)?, f3(x)?)
    } else if x <= bp1 {
        f1(x)
    } else if x <= bp2 {
        f2(x)
    } else {
        f3(x)
    }
}

/// Bounded ratio `log^p(1+φ(x)) / φ(log^p(1+x))` with envelope exponents
/// `(a, 1)`; piecewise with breakpoints at `1` and `e − 1`, bounded between
/// `(log 2)^{p(1−a)}` and `1`.
pub fn f1_bound(a: f64, p: f64, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&a) || a == 0.0 {
        return Err(Error::domain(format!("requires a in (0,1), got {a}")));
    }
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::domain(format!("requires p > 0, got {p}")));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("requires x > 0, got {x}")));
    }
    piecewise3(
        x,
        1.0,
        std::f64::consts::E - 1.0,
        |x| Ok(x.powf(a).ln_1p().powf(p) / x.ln_1p().powf(p * a)),
        |x| Ok(x.ln_1p().powf(p * (1.0 - a))),
        |_| Ok(1.0),
    )
}

/// Bounded ratio `s(φ(x))-style` combination with `s(x) = log(1+x)·log(1+log(1+x))`;
/// piecewise with breakpoints at `1` and the root `x₀` of `s(x) = 1`, bounded
/// between `(log 2 · log(1+log 2))^{1−a}` and `1`.
pub fn f2_bound(a: f64, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&a) || a == 0.0 {
        return Err(Error::domain(format!("requires a in (0,1), got {a}")));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("requires x > 0, got {x}")));
    }
    // x0 is a universal constant; solve once.
    static X0: std::sync::LazyLock<f64> = std::sync::LazyLock::new(|| {
        crate::analysis::x0_root().expect("bracket [1,5] has a sign change")
    });
    let x0 = *X0;
    piecewise3(
        x,
        1.0,
        x0,
        |x| Ok(s_fn(x.powf(a))? / s_fn(x)?.powf(a)),
        |x| Ok(s_fn(x)?.powf(1.0 - a)),
        |_| Ok(1.0),
    )
}

fn check_gamma_root(gamma_root: f64) -> Result<()> {
    if !gamma_root.is_finite() || gamma_root <= 0.0 {
        return Err(Error::Contract(format!(
            "gamma root must be a positive real, got {gamma_root}"
        )));
    }
    Ok(())
}

/// Branch value `g(s^num/(1+s^num)) / g(s/(1+s))^den` with first-order error
/// propagation from both hypergeometric evaluations.
fn envelope_branch(
    pair: &ZeroBalancedPair,
    num_exp: f64,
    den_exp: f64,
    s: f64,
) -> Result<EvalResult> {
    let ln_s = s.ln();
    let num = g_logistic_eval(pair, num_exp * ln_s)?;
    let den = g_logistic_eval(pair, ln_s)?;
    let dpow = den.value.powf(den_exp);
    let value = num.value / dpow;
    let abs_err =
        num.abs_err_estimate / dpow + den_exp.abs() * value * den.abs_err_estimate / den.value;
    Ok(EvalResult {
        value,
        abs_err_estimate: abs_err,
        method: num.method.max(den.method),
    })
}

fn t_ratio_impl(
    pair: &ZeroBalancedPair,
    e: &PhiExponents,
    s: f64,
    gamma_root: f64,
    last_den_exp: f64,
) -> Result<EvalResult> {
    check_gamma_root(gamma_root)?;
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain(format!("requires s > 0, got {s}")));
    }
    let eval = |num_exp: f64, den_exp: f64| envelope_branch(pair, num_exp, den_exp, s);
    let near = |bp: f64| (s - bp).abs() <= BREAKPOINT_BAND;
    let agree = |left: EvalResult, right: EvalResult| -> Result<EvalResult> {
        if (left.value - right.value).abs() > BRANCH_AGREE_TOL {
            return Err(Error::BranchMismatch {
                at: s,
                left: left.value,
                right: right.value,
            });
        }
        Ok(left)
    };
    if near(1.0) {
        agree(eval(e.a, e.a)?, eval(e.b, e.a)?)
    } else if near(gamma_root) {
        agree(eval(e.b, e.a)?, eval(e.b, last_den_exp)?)
    } else if s <= 1.0 {
        eval(e.a, e.a)
    } else if s <= gamma_root {
        eval(e.b, e.a)
    } else {
        eval(e.b, last_den_exp)
    }
}

/// Piecewise ratio bounded by `b/a`: branch exponents switch at `s = 1` and
/// at the unit level `s = γ` where `g(s/(1+s)) = 1`.
pub fn t_ratio_ba(
    pair: &ZeroBalancedPair,
    e: &PhiExponents,
    s: f64,
    gamma_root: f64,
) -> Result<f64> {
    Ok(t_ratio_impl(pair, e, s, gamma_root, 1.0)?.value)
}

/// [`t_ratio_ba`] with the propagated error estimate.
pub fn t_ratio_ba_eval(
    pair: &ZeroBalancedPair,
    e: &PhiExponents,
    s: f64,
    gamma_root: f64,
) -> Result<EvalResult> {
    t_ratio_impl(pair, e, s, gamma_root, 1.0)
}

/// Piecewise ratio bounded by `b`: like [`t_ratio_ba`] but the last branch
/// divides by `g^b`.
pub fn t_ratio_b(
    pair: &ZeroBalancedPair,
    e: &PhiExponents,
    s: f64,
    gamma_root: f64,
) -> Result<f64> {
    Ok(t_ratio_impl(pair, e, s, gamma_root, e.b())?.value)
}

/// [`t_ratio_b`] with the propagated error estimate.
pub fn t_ratio_b_eval(
    pair: &ZeroBalancedPair,
    e: &PhiExponents,
    s: f64,
    gamma_root: f64,
) -> Result<EvalResult> {
    t_ratio_impl(pair, e, s, gamma_root, e.b())
}

/// Addition ratio `h(x,y) = (g(x)+g(y))/g(x+y−xy)`; identically 1 at
/// `c = d = 1` by the logarithm addition identity.
pub fn h_xy_eval(pair: &ZeroBalancedPair, x: f64, y: f64) -> Result<EvalResult> {
    for (name, v) in [("x", x), ("y", y)] {
        if !v.is_finite() || v <= 0.0 || v >= 1.0 {
            return Err(Error::domain(format!(
                "h requires {name} in (0,1), got {v}"
            )));
        }
    }
    let gx = g_eval(pair, x)?;
    let gy = g_eval(pair, y)?;
    let z = x + y - x * y;
    let gz = g_eval(pair, z)?;
    let value = (gx.value + gy.value) / gz.value;
    let abs_err = (gx.abs_err_estimate + gy.abs_err_estimate) / gz.value
        + value * gz.abs_err_estimate / gz.value;
    Ok(EvalResult {
        value,
        abs_err_estimate: abs_err,
        method: gx.method.max(gy.method).max(gz.method),
    })
}

/// `h(x,y)` value only.
pub fn h_xy(pair: &ZeroBalancedPair, x: f64, y: f64) -> Result<f64> {
    Ok(h_xy_eval(pair, x, y)?.value)
}

/// Addition defect `d(x,y) = g(x) + g(y) − g(x+y−xy)`.
pub fn d_xy(pair: &ZeroBalancedPair, x: f64, y: f64) -> Result<f64> {
    for (name, v) in [("x", x), ("y", y)] {
        if !v.is_finite() || v <= 0.0 || v >= 1.0 {
            return Err(Error::domain(format!(
                "d requires {name} in (0,1), got {v}"
            )));
        }
    }
    let z = x + y - x * y;
    Ok(g_fn(pair, x)? + g_fn(pair, y)? - g_fn(pair, z)?)
}

/// `G(u) = log g(eᵘ/(1+eᵘ))`, the log-concavity test function: concave on
/// all of ℝ exactly when `1/c + 1/d ≥ 1`.
pub fn big_g_eval(pair: &ZeroBalancedPair, u: f64) -> Result<EvalResult> {
    let g = g_logistic_eval(pair, u)?;
    let value = g.value.ln();
    let abs_err = if g.value > 0.0 {
        g.abs_err_estimate / g.value
    } else {
        0.0
    };
    Ok(EvalResult {
        value,
        abs_err_estimate: abs_err,
        method: g.method,
    })
}

/// `G(u)` value only.
pub fn big_g(pair: &ZeroBalancedPair, u: f64) -> Result<f64> {
    Ok(big_g_eval(pair, u)?.value)
}

/// Both sides of the envelope Bernoulli inequality
/// `log(1 + c·φ(t)) ≤ c·max{logᵃ(1+t), b·log(1+t)}` for `c ≥ 1, t > 0`.
/// With `a = b = 1` this is the classical Bernoulli inequality.
pub fn bernoulli_sides(c: f64, t: f64, e: &PhiExponents) -> Result<(f64, f64)> {
    if !c.is_finite() || c < 1.0 {
        return Err(Error::domain(format!("requires c >= 1, got {c}")));
    }
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::domain(format!("requires t > 0, got {t}")));
    }
    let lhs = (c * phi(e, t)?).ln_1p();
    let l = t.ln_1p();
    let rhs = c * l.powf(e.a).max(e.b * l);
    Ok((lhs, rhs))
}
