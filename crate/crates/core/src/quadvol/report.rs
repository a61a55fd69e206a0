//! One-stop evaluation of every volume route at a configuration, with CSV
//! output for the `verify-volume` command.

use super::montecarlo::v_montecarlo;
use super::{a_of, b_of, c_of, crossing::v_quadrature, v_formula, v_target};
use crate::error::Result;
use crate::format::fmt_f64;
use crate::hypgeom::HConfig;
use crate::real::Real;

/// All three volume routes plus the A, B, C ingredients and the analytic
/// target `8 L(1 − x)`.
#[derive(Debug, Clone, Copy)]
pub struct VolumeReport<R> {
    pub alpha: R,
    pub x: R,
    pub l: R,
    pub a_val: R,
    pub b_val: R,
    pub c_val: R,
    pub v_formula: R,
    pub v_quadrature: R,
    pub v_montecarlo: R,
    pub mc_stderr: R,
    pub target: R,
}

impl<R: Real> VolumeReport<R> {
    /// Signed defect of the closed route against the analytic target.
    pub fn residual(&self) -> R {
        self.v_formula - self.target
    }

    pub const CSV_HEADER: &'static str =
        "alpha,x,l,A,B,C,V_formula,V_quadrature,V_mc,mc_stderr,target,residual";

    pub fn csv_row(&self) -> String {
        let cols = [
            self.alpha,
            self.x,
            self.l,
            self.a_val,
            self.b_val,
            self.c_val,
            self.v_formula,
            self.v_quadrature,
            self.v_montecarlo,
            self.mc_stderr,
            self.target,
            self.residual(),
        ];
        cols.iter()
            .map(|v| fmt_f64(v.as_f64()))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Evaluate every route at `cfg`.  `tol` bounds the quadrature error of the
/// formula route (the direct 2D route runs at the same tolerance; it is the
/// slower, coarser check).
pub fn volume_report<R: Real>(
    cfg: &HConfig<R>,
    tol: R,
    n_samples: u64,
    seed: u64,
) -> Result<VolumeReport<R>> {
    let alpha = cfg.alpha();
    let fine = tol * R::of(0.1);
    let mc = v_montecarlo(cfg, n_samples, seed)?;
    Ok(VolumeReport {
        alpha,
        x: cfg.x(),
        l: cfg.length(),
        a_val: a_of(alpha, fine)?,
        b_val: b_of(alpha, fine)?,
        c_val: c_of(alpha, fine)?,
        v_formula: v_formula(alpha, fine)?,
        v_quadrature: v_quadrature(cfg, tol.max(R::of(1e-8)))?,
        v_montecarlo: mc.estimate,
        mc_stderr: mc.stderr,
        target: v_target(cfg)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_at_symmetric_point() {
        let cfg = HConfig::from_alpha(std::f64::consts::FRAC_PI_2).unwrap();
        let rep = volume_report(&cfg, 1e-5, 20_000, 0).unwrap();
        assert!(rep.residual().abs() < 1e-6);
        assert!((rep.v_quadrature - rep.v_formula).abs() < 1e-4);
        assert!((rep.v_montecarlo - rep.target).abs() < 4.0 * rep.mc_stderr);
        // VolumeReport invariants
        assert!((rep.v_formula - rep.target).abs() < 1e-5);
        let row = rep.csv_row();
        assert_eq!(row.split(',').count(), 12);
        assert_eq!(VolumeReport::<f64>::CSV_HEADER.split(',').count(), 12);
    }
}
