//! Property-based invariants over randomized parameters.

use proptest::prelude::*;

use hyperlog::analysis::{bracket_root, GridSpec, Spacing};
use hyperlog::hyp2f1::{f21, pochhammer, HypParams};
use hyperlog::logtype::{g_logistic_eval, h_xy, phi, phi_inv, PhiExponents, ZeroBalancedPair};
use hyperlog::special_fn::r_constant;

/// A handful of admissible pairs (`1/c + 1/d ≥ 1`) to randomize over.
const ADMISSIBLE: [(f64, f64); 5] = [(1.0, 1.0), (0.5, 0.5), (0.5, 2.0), (2.0, 0.5), (0.3, 1.0)];

proptest! {
    /// φ(φ⁻¹(y)) = y on the envelope's whole range.
    #[test]
    fn phi_inverse_round_trip(
        a in 0.05f64..=1.0,
        b in 1.0f64..20.0,
        y in 0.0f64..1e6,
    ) {
        let e = PhiExponents::new(a, b).unwrap();
        let t = phi_inv(&e, y).unwrap();
        let back = phi(&e, t).unwrap();
        prop_assert!((back - y).abs() <= 1e-9 * y.abs().max(1.0), "{back} vs {y}");
    }

    /// Rising factorial satisfies its defining recurrence.
    #[test]
    fn pochhammer_recurrence(a in -10.0f64..10.0, n in 0u32..30) {
        let lhs = pochhammer(a, n + 1);
        let rhs = pochhammer(a, n) * (a + n as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }

    /// R(a,b) is bitwise symmetric.
    #[test]
    fn r_constant_symmetry(a in 0.01f64..50.0, b in 0.01f64..50.0) {
        prop_assert_eq!(
            r_constant(a, b).unwrap().to_bits(),
            r_constant(b, a).unwrap().to_bits()
        );
    }

    /// F is at least 1 and increasing in x for positive parameters.
    #[test]
    fn f21_monotone_and_bounded(
        c in 0.2f64..3.0,
        d in 0.2f64..3.0,
        x1 in 0.0f64..0.98,
        dx in 0.001f64..0.02,
    ) {
        let p = HypParams::new(c, d, c + d).unwrap();
        let x2 = (x1 + dx).min(0.99);
        let v1 = f21(&p, x1).unwrap();
        let v2 = f21(&p, x2).unwrap();
        prop_assert!(v1.value >= 1.0);
        prop_assert!(v2.value + v2.abs_err_estimate + v1.abs_err_estimate >= v1.value);
    }

    /// The addition identity makes h ≡ 1 for the unit pair.
    #[test]
    fn addition_ratio_unit_pair(x in 0.01f64..0.95, y in 0.01f64..0.95) {
        let p = ZeroBalancedPair::new(1.0, 1.0).unwrap();
        let h = h_xy(&p, x, y).unwrap();
        prop_assert!((h - 1.0).abs() <= 1e-8, "h = {h}");
    }

    /// Midpoint log-concavity in the exponent:
    /// g(xᵖ/(1+xᵖ))·g(x^q/(1+x^q)) ≤ g²(x^{(p+q)/2}/(1+x^{(p+q)/2}))
    /// for admissible pairs and x > 0.
    #[test]
    fn g_logistic_midpoint_log_concave(
        which in 0usize..ADMISSIBLE.len(),
        x in 0.05f64..20.0,
        p in 0.1f64..10.0,
        q in 0.1f64..10.0,
    ) {
        let (c, d) = ADMISSIBLE[which];
        let pair = ZeroBalancedPair::new(c, d).unwrap();
        let ln_x = x.ln();
        let gp = g_logistic_eval(&pair, p * ln_x).unwrap();
        let gq = g_logistic_eval(&pair, q * ln_x).unwrap();
        let gm = g_logistic_eval(&pair, 0.5 * (p + q) * ln_x).unwrap();
        let lhs = gp.value * gq.value;
        let rhs = gm.value * gm.value;
        let widen = 10.0
            * (gp.abs_err_estimate * gq.value
                + gq.abs_err_estimate * gp.value
                + 2.0 * gm.abs_err_estimate * gm.value);
        prop_assert!(lhs <= rhs + 1e-9 + widen, "({c},{d}) x={x} p={p} q={q}: {lhs} vs {rhs}");
    }

    /// The solver is deterministic and lands on the bracketed root.
    #[test]
    fn bracket_root_finds_square_roots(k in 0.5f64..1e4) {
        let f = |x: f64| Ok(x * x - k);
        let lo = 0.0;
        let hi = k.max(1.0) + 1.0;
        let r1 = bracket_root(f, lo, hi, 1e-12).unwrap();
        let r2 = bracket_root(f, lo, hi, 1e-12).unwrap();
        prop_assert_eq!(r1.to_bits(), r2.to_bits());
        prop_assert!((r1 - k.sqrt()).abs() <= 1e-7 * k.sqrt());
    }

    /// Grid points stay inside the bounds, sorted, with exact endpoints.
    #[test]
    fn grid_points_sorted_in_bounds(
        lo in -100.0f64..100.0,
        width in 0.1f64..100.0,
        n in 3usize..200,
        log_spacing in any::<bool>(),
    ) {
        let (lo, spacing) = if log_spacing {
            (lo.abs().max(1e-3), Spacing::Log)
        } else {
            (lo, Spacing::Linear)
        };
        let g = GridSpec::new(lo, lo + width, n, spacing).unwrap();
        let pts = g.points();
        prop_assert_eq!(pts.len(), n);
        prop_assert_eq!(pts[0], lo);
        prop_assert!((pts[n - 1] - (lo + width)).abs() <= 1e-9 * (lo + width).abs().max(1.0));
        for w in pts.windows(2) {
            prop_assert!(w[1] > w[0]);
        }
    }
}
