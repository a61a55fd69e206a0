use orthospectrum::hypgeom::HConfig;
use orthospectrum::quadvol::{v_formula, v_quadrature};

fn main() {
    let pi = std::f64::consts::PI;
    let mut worst = 0.0f64;
    let mut total = std::time::Duration::ZERO;
    for k in 0..20 {
        let alpha = 0.2 + (pi - 0.4) * k as f64 / 19.0;
        let cfg = HConfig::from_alpha(alpha).unwrap();
        let vf = v_formula(alpha, 1e-8).unwrap();
        let t0 = std::time::Instant::now();
        let vq = v_quadrature(&cfg, 1e-5).unwrap();
        total += t0.elapsed();
        let d = (vq - vf).abs();
        if d > worst { worst = d; }
        println!("alpha {alpha:.4}  diff {d:.3e}  [{:?}]", t0.elapsed());
    }
    println!("worst {worst:.3e}, total {total:?}");
}
