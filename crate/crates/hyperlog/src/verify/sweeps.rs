//! Named CSV sweeps for the exploratory questions. Each sweep produces the
//! row data `(point, lhs, rhs, gap)` in deterministic order plus the same
//! summary report as the corresponding check.

use std::fmt::Write as _;

use super::checks::{bound_combos, my46_t, MYQ3_PAIRS_CD_GT_1, MYQ3_PAIRS_CD_LE_1};
use super::{checks, CheckConfig, VerificationReport};
use crate::analysis::{beta_root, gamma_root, GridSpec};
use crate::error::Error;
use crate::logtype::{g_eval, g_logistic_eval, t_ratio_ba, ZeroBalancedPair};
use crate::Result;

/// A sweep result: the summary report plus rendered CSV rows.
pub struct SweepOutput {
    pub report: VerificationReport,
    pub csv: String,
}

/// Identifiers accepted by [`run_sweep`].
pub fn sweep_ids() -> &'static [&'static str] {
    &["myq3", "my44", "my46"]
}

/// Run a named sweep.
pub fn run_sweep(name: &str, cfg: &CheckConfig) -> Result<SweepOutput> {
    match name {
        "myq3" => sweep_myq3(cfg),
        "my44" => sweep_my44(cfg),
        "my46" => sweep_my46(cfg),
        other => Err(Error::UnknownId(other.to_string())),
    }
}

fn sweep_myq3(cfg: &CheckConfig) -> Result<SweepOutput> {
    let n = cfg.grid_n.unwrap_or(24).max(8);
    let grid = GridSpec::linear(0.02, 0.98, n)?;
    let points = grid.points();

    let mut pairs: Vec<(f64, f64)> = Vec::new();
    match (cfg.c, cfg.d) {
        (Some(c), Some(d)) => pairs.push((c, d)),
        _ => {
            pairs.extend_from_slice(&MYQ3_PAIRS_CD_LE_1);
            pairs.extend_from_slice(&MYQ3_PAIRS_CD_GT_1);
        }
    }

    let mut csv = String::from("c,d,x,y,lhs,rhs,gap\n");
    for &(c, d) in &pairs {
        let zb = ZeroBalancedPair::new(c, d)?;
        for &x in &points {
            for &y in &points {
                let lhs = g_eval(&zb, x)?.value + g_eval(&zb, y)?.value;
                let rhs = g_eval(&zb, x + y - x * y)?.value;
                writeln!(csv, "{c},{d},{x},{y},{lhs},{rhs},{}", lhs - rhs).expect("string write");
            }
        }
    }
    Ok(SweepOutput {
        report: checks::check_myq3(cfg)?,
        csv,
    })
}

fn sweep_my44(cfg: &CheckConfig) -> Result<SweepOutput> {
    let combos = bound_combos(cfg)?;
    let s_grid = GridSpec::log(1e-4, 1e4, cfg.n_or(256))?;
    let s_points = s_grid.points();

    // lhs = g(φ(s)/(1+φ(s))), rhs = (b/a)·max{gᵃ, g} — the improved constant;
    // T(s) = lhs/max{gᵃ, g}.
    let mut csv = String::from("c,d,a,b,s,lhs,rhs,gap,t_ratio\n");
    for (zb, e) in &combos {
        let gamma = gamma_root(zb)?;
        for &s in &s_points {
            let ln_s = s.ln();
            let envelope_exp = if s <= 1.0 { e.a() } else { e.b() };
            let lhs = g_logistic_eval(zb, envelope_exp * ln_s)?.value;
            let g = g_logistic_eval(zb, ln_s)?.value;
            let denom = g.powf(e.a()).max(g);
            let rhs = (e.b() / e.a()) * denom;
            let t = t_ratio_ba(zb, e, s, gamma)?;
            writeln!(
                csv,
                "{},{},{},{},{s},{lhs},{rhs},{},{t}",
                zb.c(),
                zb.d(),
                e.a(),
                e.b(),
                lhs - rhs
            )
            .expect("string write");
        }
    }
    Ok(SweepOutput {
        report: checks::check_my44(cfg)?,
        csv,
    })
}

fn sweep_my46(cfg: &CheckConfig) -> Result<SweepOutput> {
    let pairs: Vec<(f64, f64)> = match (cfg.c, cfg.d) {
        (Some(c), Some(d)) => vec![(c, d)],
        _ => vec![(0.5, 0.5), (0.3, 0.8), (0.9, 0.9)],
    };
    let exps: Vec<(f64, f64)> = match (cfg.a, cfg.b) {
        (Some(a), Some(b)) => vec![(a, b)],
        _ => vec![(0.5, 2.0), (0.3, 1.5)],
    };
    let grid = GridSpec::linear(1e-3, 1.0 - 1e-3, cfg.n_or(512))?;
    let points = grid.points();

    // lhs = g(x), rhs = b(1+b−a)·φ(g(...)) — the generalized inequality as
    // posed; t is the sharper ratio with constant b alone.
    let mut csv = String::from("c,d,a,b,x,lhs,rhs,gap,t,segment\n");
    for &(c, d) in &pairs {
        let zb = ZeroBalancedPair::new(c, d)?;
        for &(a, b) in &exps {
            let e = crate::logtype::PhiExponents::new(a, b)?;
            let beta = beta_root(&zb, &e)?;
            let lo = 0.5f64.min(beta);
            let hi = 0.5f64.max(beta);
            for &x in &points {
                let t = my46_t(&zb, &e, x)?;
                let lhs = g_eval(&zb, x)?.value;
                // b·φ(g(...)) = lhs/t, so the posed right side is (1+b−a)/t·lhs.
                let rhs = (1.0 + b - a) * lhs / t;
                let seg = if x < lo {
                    0
                } else if x < hi {
                    1
                } else {
                    2
                };
                writeln!(
                    csv,
                    "{c},{d},{a},{b},{x},{lhs},{rhs},{},{t},{seg}",
                    lhs - rhs
                )
                .expect("string write");
            }
        }
    }
    Ok(SweepOutput {
        report: checks::check_my46(cfg)?,
        csv,
    })
}
