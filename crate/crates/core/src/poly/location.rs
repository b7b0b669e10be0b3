use std::f64::consts::PI;

use num_complex::Complex64;

/// Maps `z = e^{i2πs/N}` to `s`, with the distance of `arg(z)·N/2π` from
/// the chosen integer.
pub fn root_to_location(z: Complex64, n: usize) -> (usize, f64) {
    let x = z.arg() * n as f64 / (2.0 * PI);
    let r = x.round();
    let snap = (x - r).abs();
    let s = (r as i64).rem_euclid(n as i64) as usize;
    (s, snap)
}
