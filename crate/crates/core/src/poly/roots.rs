use num_complex::Complex64;

use super::{DecodeError, PolyCoefficients};

const NEWTON_STEPS: usize = 2;

/// Evaluates the monic polynomial and its derivative at `z` by Horner's rule.
pub fn evaluate(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &cj in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + cj;
    }
    (p, dp)
}

/// Roots of `z^a + c_{a-1} z^{a-1} + … + c_0` for `a ≤ 4` by radicals,
/// each followed by up to two Newton steps that are kept only when they
/// reduce `|P(z)|`.
pub fn roots_closed_form(coeffs: &PolyCoefficients) -> Result<Vec<Complex64>, DecodeError> {
    let c = &coeffs.c;
    let mut roots = match c.len() {
        1 => vec![-c[0]],
        2 => quadratic(c[1], c[0]).to_vec(),
        3 => cubic(c[2], c[1], c[0]).to_vec(),
        4 => quartic(c[3], c[2], c[1], c[0]).to_vec(),
        a => return Err(DecodeError::InvalidInput(format!("no closed form for degree {a}"))),
    };
    for z in roots.iter_mut() {
        *z = polish(c, *z);
    }
    if roots.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(DecodeError::DegenerateBranch);
    }
    Ok(roots)
}

fn polish(c: &[Complex64], mut z: Complex64) -> Complex64 {
    let (mut p, mut dp) = evaluate(c, z);
    for _ in 0..NEWTON_STEPS {
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let next = z - p / dp;
        let (np, ndp) = evaluate(c, next);
        // A NaN step is rejected too.
        if !(np.norm() < p.norm()) {
            break;
        }
        z = next;
        p = np;
        dp = ndp;
    }
    z
}

/// `z^2 + c1 z + c0`.
fn quadratic(c1: Complex64, c0: Complex64) -> [Complex64; 2] {
    let disc = (c1 * c1 - 4.0 * c0).sqrt();
    // Pick the sign that avoids cancellation, then use the product of roots.
    let q = if (-c1 - disc).norm() >= (-c1 + disc).norm() {
        0.5 * (-c1 - disc)
    } else {
        0.5 * (-c1 + disc)
    };
    if q.norm() == 0.0 {
        return [q, q];
    }
    [q, c0 / q]
}

/// `z^3 + c2 z^2 + c1 z + c0` by Cardano's formula.
fn cubic(c2: Complex64, c1: Complex64, c0: Complex64) -> [Complex64; 3] {
    let shift = -c2 / 3.0;
    let p = c1 / 3.0 - c2 * c2 / 9.0;
    let q = c0 / 2.0 - c1 * c2 / 6.0 + c2 * c2 * c2 / 27.0;
    let s = (q * q + p * p * p).sqrt();
    // Either cube root works; the larger one keeps -p/A well conditioned.
    let u = (q - s).cbrt();
    let v = (q + s).cbrt();
    let a = if u.norm() >= v.norm() { u } else { v };
    if a.norm() == 0.0 {
        return [shift; 3];
    }
    let b = -p / a;
    let w1 = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let w2 = w1.conj();
    [shift - a - b, shift - w1 * a - w2 * b, shift - w2 * a - w1 * b]
}

/// `z^4 + c3 z^3 + c2 z^2 + c1 z + c0` by Ferrari's method: write it as
/// `(z^2 + c3 z/2 + Y)^2 - (A z + B)^2` with `Y` a root of the resolvent
/// cubic, then split into two quadratics.
fn quartic(c3: Complex64, c2: Complex64, c1: Complex64, c0: Complex64) -> [Complex64; 4] {
    let resolvent = cubic(
        -c2 / 2.0,
        (c1 * c3 - 4.0 * c0) / 4.0,
        (4.0 * c0 * c2 - c1 * c1 - c0 * c3 * c3) / 8.0,
    );
    let (y, a) = resolvent
        .iter()
        .map(|&y| (y, (c3 * c3 / 4.0 - c2 + 2.0 * y).sqrt()))
        .max_by(|l, r| l.1.norm().total_cmp(&r.1.norm()))
        .expect("three resolvent roots");
    let scale = 1.0 + [c0, c1, c2, c3].iter().map(|v| v.norm()).fold(0.0, f64::max);
    let target = c3 * y - c1;
    let b = if a.norm() > 1e-6 * scale {
        target / (2.0 * a)
    } else {
        let b = (y * y - c0).sqrt();
        if (2.0 * a * b - target).norm() <= (-2.0 * a * b - target).norm() {
            b
        } else {
            -b
        }
    };
    let [r0, r1] = quadratic(c3 / 2.0 - a, y - b);
    let [r2, r3] = quadratic(c3 / 2.0 + a, y + b);
    [r0, r1, r2, r3]
}
