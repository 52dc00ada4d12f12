//! Special functions and hyperbolic volumes: the Lobachevsky function, the
//! dilogarithm on the closed unit disk, the saddle-point volume of a
//! hyperbolic-type 6-tuple, the dilogarithm volume formula for truncated
//! tetrahedra, and D-block volumes.
//!
//! The two volume routes share no code: `volume_lob` solves `g(z0) = 1`
//! by bisection and evaluates a sum of Lobachevsky values, `volume_my`
//! finds the critical points `z±` of an eight-dilogarithm potential in
//! closed form. Under `α_i = |2π(θ_i - ½)|` they satisfy
//! `volume_lob(θ) = 2·volume_my(T(α))`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::sixj::{ThetaClass, ThetaSix, TRIPLES};

/// Truncation faces of a tetrahedron and the indices of the three dihedral
/// angles incident to each (same index pattern as the admissible triples).
pub const FACES: [[usize; 3]; 4] = TRIPLES;

// ---------------------------------------------------------------------------
// Lobachevsky function
// ---------------------------------------------------------------------------

/// ζ(s) for integer s ≥ 2 by direct summation with Euler–Maclaurin tail.
fn zeta(s: i32) -> f64 {
    let n = 1000u32;
    let mut sum = 0.0;
    for j in (1..=n).rev() {
        sum += (j as f64).powi(-s);
    }
    let nf = n as f64;
    let s = s as f64;
    sum += nf.powf(1.0 - s) / (s - 1.0) - 0.5 * nf.powf(-s) + s * nf.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * nf.powf(-s - 3.0) / 720.0;
    sum
}

/// Coefficients of the log-sine expansion
/// `Cl₂(θ) = θ - θ·ln θ + Σ_k c_k θ^{2k+1}`, `c_k = ζ(2k)/(k(2k+1)(2π)^{2k})`.
static CL2_COEFFS: Lazy<Vec<f64>> = Lazy::new(|| {
    (1..=40)
        .map(|k| {
            let kf = k as f64;
            zeta(2 * k) / (kf * (2.0 * kf + 1.0) * (2.0 * PI).powi(2 * k))
        })
        .collect()
});

/// Clausen function `Cl₂(θ) = -∫₀^θ ln|2 sin(t/2)| dt` for `θ ∈ [0, π]`.
///
/// The Fourier series `Σ sin(kθ)/k²` is resummed into the log-sine
/// expansion above, which converges geometrically with ratio `(θ/2π)² ≤ ¼`.
fn cl2(theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let mut sum = theta - theta * theta.ln();
    let t2 = theta * theta;
    let mut power = theta; // θ^{2k+1} built incrementally
    for &c in CL2_COEFFS.iter() {
        power *= t2;
        let term = c * power;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Lobachevsky function `Λ(x) = -∫₀^x ln|2 sin s| ds`.
///
/// π-periodic and odd; the argument is reduced mod π first. Accuracy is
/// close to machine precision (well under the 1e-12 the callers rely on).
pub fn lobachevsky(x: f64) -> f64 {
    let r = x.rem_euclid(PI);
    if r > FRAC_PI_2 {
        -0.5 * cl2(2.0 * (PI - r))
    } else {
        0.5 * cl2(2.0 * r)
    }
}

/// Volume of the regular ideal octahedron, `8·Λ(π/4)`. Computed, never
/// hard-coded.
pub fn vol_oct() -> f64 {
    8.0 * lobachevsky(PI / 4.0)
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------

const DILOG_DOMAIN_SLACK: f64 = 1e-12;

/// `B_k` for k = 0..=30 (odd indices above 1 vanish).
const BERNOULLI: [f64; 31] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
];

/// `B_k / (k+1)!` for the Debye-type expansion of Li₂ in `u = -ln(1-z)`.
static DILOG_U_COEFFS: Lazy<Vec<f64>> = Lazy::new(|| {
    let mut factorial = 1.0f64;
    BERNOULLI
        .iter()
        .enumerate()
        .map(|(k, &b)| {
            factorial *= (k + 1) as f64;
            b / factorial
        })
        .collect()
});

/// Power series `Σ z^k/k²`, for `|z| ≤ ½`.
fn dilog_series(z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zk = Complex64::new(1.0, 0.0);
    for k in 1..=80 {
        zk *= z;
        let term = zk / (k * k) as f64;
        sum += term;
        if term.norm_sqr() < 1e-36 * (1.0 + sum.norm_sqr()) {
            break;
        }
    }
    sum
}

/// `Li₂(z) = Σ_k B_k u^{k+1}/(k+1)!` with `u = -ln(1-z)`; converges for
/// `|u| < 2π`, used on the band `|z| > ½, |1-z| > ½` where `|u| ≤ 1.8`.
fn dilog_u_series(u: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut uk = Complex64::new(1.0, 0.0);
    for &c in DILOG_U_COEFFS.iter() {
        uk *= u;
        if c != 0.0 {
            sum += c * uk;
        }
    }
    sum
}

/// Principal-branch dilogarithm `Li₂(z) = -∫₀^z ln(1-t)/t dt` on the closed
/// unit disk, to better than 1e-11.
///
/// Three regimes: the power series for `|z| ≤ ½`, the reflection
/// `Li₂(z) = π²/6 - ln(z)ln(1-z) - Li₂(1-z)` near `z = 1`, and the
/// `u = -ln(1-z)` expansion on the remaining band.
pub fn dilog(z: Complex64) -> Result<Complex64> {
    let r = z.norm();
    if !r.is_finite() || r > 1.0 + DILOG_DOMAIN_SLACK {
        return Err(Error::DilogDomain { modulus: r });
    }
    if r <= 0.5 {
        return Ok(dilog_series(z));
    }
    let omz = Complex64::new(1.0, 0.0) - z;
    let pi2_6 = Complex64::new(PI * PI / 6.0, 0.0);
    if omz.norm() <= 0.5 {
        if omz.norm() == 0.0 {
            return Ok(pi2_6);
        }
        return Ok(pi2_6 - z.ln() * omz.ln() - dilog_series(omz));
    }
    Ok(dilog_u_series(-omz.ln()))
}

// ---------------------------------------------------------------------------
// The saddle-point (Lobachevsky) volume route
// ---------------------------------------------------------------------------

/// `v(θ0,θ1,θ2) = Λ(π(θ0+θ1+θ2)) - Λ(π(θ0+θ1-θ2)) - Λ(π(θ0+θ2-θ1)) - Λ(π(θ1+θ2-θ0))`.
pub fn v_triangle(t0: f64, t1: f64, t2: f64) -> f64 {
    lobachevsky(PI * (t0 + t1 + t2))
        - lobachevsky(PI * (t0 + t1 - t2))
        - lobachevsky(PI * (t0 + t2 - t1))
        - lobachevsky(PI * (t1 + t2 - t0))
}

/// Saddle point and associated values for a hyperbolic-type 6-tuple.
#[derive(Clone, Copy, Debug)]
pub struct SaddleData {
    theta: ThetaSix,
    z0: f64,
    f_at_z0: f64,
    v_sum: f64,
}

impl SaddleData {
    pub fn theta(&self) -> &ThetaSix {
        &self.theta
    }

    /// The unique root of `g(z) = 1` on `(T, min(2π, Q_min))`.
    pub fn z0(&self) -> f64 {
        self.z0
    }

    /// `F(z0)` with `F(x) = 2(Λ(2π-x) + Σ_j Λ(Q_j-x) + Σ_i Λ(x-T_i))`.
    pub fn f_at_z0(&self) -> f64 {
        self.f_at_z0
    }

    /// Sum of the four `v` values over the triangle triples.
    pub fn v_sum(&self) -> f64 {
        self.v_sum
    }
}

/// `ln g(z)` for the saddle equation; strictly decreasing on the interval.
pub fn ln_g(theta: &ThetaSix, z: f64) -> f64 {
    let mut v = (2.0 * PI - z).sin().ln();
    for q in theta.squares() {
        v += (q - z).sin().ln();
    }
    for t in theta.triangles() {
        v -= (z - t).sin().ln();
    }
    v
}

/// `F(x) = 2(Λ(2π-x) + Σ_j Λ(Q_j-x) + Σ_i Λ(x-T_i))`, maximized at `z0`.
pub fn f_potential(theta: &ThetaSix, x: f64) -> f64 {
    let mut v = lobachevsky(2.0 * PI - x);
    for q in theta.squares() {
        v += lobachevsky(q - x);
    }
    for t in theta.triangles() {
        v += lobachevsky(x - t);
    }
    2.0 * v
}

const BISECT_TOL: f64 = 1e-12;
const BISECT_MAX_ITER: usize = 200;
const ENDPOINT_SHRINK: f64 = 1e-9;

/// Solve `g(z0) = 1` on `(T, min(2π, Q_min))` by bisection; `ln g` is
/// strictly decreasing there. Endpoints are pulled in by 1e-9, clear of
/// the log singularities.
pub fn solve_z0(theta: &ThetaSix) -> Result<SaddleData> {
    if theta.class() != ThetaClass::Hyperbolic {
        return Err(Error::NotHyperbolic {
            class: theta.class(),
        });
    }
    let mut lo = theta.t_max() + ENDPOINT_SHRINK;
    let mut hi = theta.q_min().min(2.0 * PI) - ENDPOINT_SHRINK;
    if !(ln_g(theta, lo) > 0.0 && ln_g(theta, hi) < 0.0) {
        return Err(Error::SaddleBracket);
    }
    for _ in 0..BISECT_MAX_ITER {
        if hi - lo <= BISECT_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if ln_g(theta, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let z0 = 0.5 * (lo + hi);
    let t = theta.theta();
    let mut v_sum = 0.0;
    for tr in TRIPLES {
        v_sum += v_triangle(t[tr[0]], t[tr[1]], t[tr[2]]);
    }
    Ok(SaddleData {
        theta: *theta,
        z0,
        f_at_z0: f_potential(theta, z0),
        v_sum,
    })
}

/// Saddle-point volume: `F(z0) + Σ v`; equals `Vol(D(u)) = 2·Vol(T(α))`
/// with `α_i = |2π(θ_i - ½)|`.
pub fn volume_lob(theta: &ThetaSix) -> Result<f64> {
    let s = solve_z0(theta)?;
    Ok(s.f_at_z0 + s.v_sum)
}

// ---------------------------------------------------------------------------
// The dilogarithm (Murakami–Yano) volume route
// ---------------------------------------------------------------------------

/// A truncated hyperbolic tetrahedron given by its six dihedral angles
/// `α ∈ [0, π)⁶` (opposite pairs `(α0,α3)`, `(α1,α4)`, `(α2,α5)`), carrying
/// the existence certificate: at each truncation face the three incident
/// angles sum below π.
#[derive(Clone, Copy, Debug)]
pub struct TruncTetra {
    alpha: [f64; 6],
    a: [Complex64; 6],
}

/// True iff a truncated tetrahedron with these angles exists (each face's
/// incident angles sum below π). Errors on angles outside `[0, π)`.
pub fn tetra_exists(alpha: &[f64; 6]) -> Result<bool> {
    for (index, &value) in alpha.iter().enumerate() {
        if !value.is_finite() || !(0.0..PI).contains(&value) {
            return Err(Error::AngleOutOfRange { index, value });
        }
    }
    Ok(FACES
        .iter()
        .all(|f| alpha[f[0]] + alpha[f[1]] + alpha[f[2]] < PI))
}

impl TruncTetra {
    pub fn new(alpha: [f64; 6]) -> Result<TruncTetra> {
        if !tetra_exists(&alpha)? {
            let (face, f) = FACES
                .iter()
                .enumerate()
                .find(|(_, f)| alpha[f[0]] + alpha[f[1]] + alpha[f[2]] >= PI)
                .expect("some face violates the criterion");
            return Err(Error::NoTetrahedron {
                face,
                sum: alpha[f[0]] + alpha[f[1]] + alpha[f[2]],
            });
        }
        let a = alpha.map(|x| Complex64::from_polar(1.0, x));
        Ok(TruncTetra { alpha, a })
    }

    /// Angles from a hyperbolic-type 6-tuple: `α_i = |2π(θ_i - ½)|`.
    pub fn from_theta(theta: &ThetaSix) -> Result<TruncTetra> {
        if theta.class() != ThetaClass::Hyperbolic {
            return Err(Error::NotHyperbolic {
                class: theta.class(),
            });
        }
        TruncTetra::new(theta.theta().map(|t| (2.0 * PI * (t - 0.5)).abs()))
    }

    pub fn angles(&self) -> [f64; 6] {
        self.alpha
    }

    /// The unit complex numbers `A_i = e^{iα_i}`.
    pub fn unit_angles(&self) -> [Complex64; 6] {
        self.a
    }
}

/// The eight-dilogarithm potential `U(z, T)`.
///
/// Positive terms take `z` times the three square products (and `z`
/// itself), negative terms `-z` times the four triangle products of the
/// `A_i`; the eighth argument is the symmetric `-z·A3·A4·A2`.
pub fn u_of_z(z: Complex64, tetra: &TruncTetra) -> Result<Complex64> {
    let a = tetra.a;
    let square_args = [
        z,
        z * a[0] * a[1] * a[3] * a[4],
        z * a[0] * a[2] * a[3] * a[5],
        z * a[2] * a[1] * a[5] * a[4],
    ];
    let triangle_args = [
        -z * a[0] * a[1] * a[2],
        -z * a[0] * a[4] * a[5],
        -z * a[3] * a[1] * a[5],
        -z * a[3] * a[4] * a[2],
    ];
    let mut sum = Complex64::new(0.0, 0.0);
    for w in square_args {
        sum += dilog(w)?;
    }
    for w in triangle_args {
        sum -= dilog(w)?;
    }
    Ok(0.5 * sum)
}

/// One face term of `Δ̂`: `-¼(Li₂(-ab/c) + Li₂(-bc/a) + Li₂(-ac/b)
/// + Li₂(-1/(abc)) + ln²a + ln²b + ln²c)`.
fn delta_hat_face(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    let sum = dilog(-a * b / c)?
        + dilog(-b * c / a)?
        + dilog(-a * c / b)?
        + dilog(-(a * b * c).inv())?
        + a.ln() * a.ln()
        + b.ln() * b.ln()
        + c.ln() * c.ln();
    Ok(-0.25 * sum)
}

/// The correction term `Δ̂(T)`: four face terms plus the half log-log
/// cross terms over opposite pairs. Principal logarithms throughout.
pub fn delta_hat(tetra: &TruncTetra) -> Result<Complex64> {
    let a = tetra.a;
    let mut sum = delta_hat_face(a[0], a[1], a[2])?
        + delta_hat_face(a[0], a[4], a[5])?
        + delta_hat_face(a[3], a[1], a[5])?
        + delta_hat_face(a[3], a[4], a[2])?;
    sum += 0.5 * (a[0].ln() * a[3].ln() + a[1].ln() * a[4].ln() + a[2].ln() * a[5].ln());
    Ok(sum)
}

/// The two non-trivial critical points of `U(·, T)`.
///
/// Exponentiating `dU/dz = 0` gives `∏(1 - z·E_i) = ∏(1 + z·F_j)` with
/// `E` the square products (and 1) and `F` the triangle products. Degrees
/// 0 and 4 cancel, the `z = 0` root deflates, and the remaining quadratic
/// is solved in closed form. Both roots have unit modulus; they carry
/// `Im(U(z) + Δ̂) = ±Vol` and `z_+` is the one with the positive sign.
/// (For tetrahedra whose roots straddle the real axis this is the root
/// with positive imaginary part, but both roots can share a half plane —
/// α = (0.2π)⁶ is an example — so the volume sign is what disambiguates.)
pub fn solve_z_pm(tetra: &TruncTetra) -> Result<(Complex64, Complex64)> {
    let a = tetra.a;
    let e = [
        Complex64::new(1.0, 0.0),
        a[0] * a[1] * a[3] * a[4],
        a[0] * a[2] * a[3] * a[5],
        a[2] * a[1] * a[5] * a[4],
    ];
    let f = [
        a[0] * a[1] * a[2],
        a[0] * a[4] * a[5],
        a[3] * a[1] * a[5],
        a[3] * a[4] * a[2],
    ];

    // coefficients of prod(1 - z e_i) and prod(1 + z f_j)
    let mut lhs = [Complex64::new(0.0, 0.0); 5];
    lhs[0] = Complex64::new(1.0, 0.0);
    for ei in e {
        for k in (1..5).rev() {
            let t = lhs[k - 1] * (-ei);
            lhs[k] += t;
        }
    }
    let mut rhs = [Complex64::new(0.0, 0.0); 5];
    rhs[0] = Complex64::new(1.0, 0.0);
    for fj in f {
        for k in (1..5).rev() {
            let t = rhs[k - 1] * fj;
            rhs[k] += t;
        }
    }
    let d1 = lhs[1] - rhs[1];
    let d2 = lhs[2] - rhs[2];
    let d3 = lhs[3] - rhs[3];
    debug_assert!((lhs[4] - rhs[4]).norm() < 1e-10);

    // d3 z² + d2 z + d1 = 0
    let scale = d1.norm().max(d2.norm()).max(d3.norm());
    if d3.norm() <= 1e-12 * scale {
        return Err(Error::DegenerateRoots);
    }
    let disc = d2 * d2 - 4.0 * d3 * d1;
    let mut sq = disc.sqrt();
    if (d2.conj() * sq).re < 0.0 {
        sq = -sq;
    }
    let qq = -0.5 * (d2 + sq);
    if qq.norm() <= 1e-14 * scale {
        return Err(Error::DegenerateRoots);
    }
    let r1 = qq / d3;
    let r2 = d1 / qq;

    let dh = delta_hat(tetra)?;
    let v1 = (u_of_z(r1, tetra)? + dh).im;
    let v2 = (u_of_z(r2, tetra)? + dh).im;
    if v1.abs() < 1e-12 && v2.abs() < 1e-12 {
        return Err(Error::DegenerateRoots);
    }
    Ok(if v1 >= v2 { (r1, r2) } else { (r2, r1) })
}

/// Dilogarithm volume of the truncated tetrahedron:
/// `Vol = Im(U(z_+, T) + Δ̂(T))`, cross-checked against
/// `-Im(U(z_-, T) + Δ̂(T))` to 1e-9.
pub fn volume_my(tetra: &TruncTetra) -> Result<f64> {
    let (zp, zm) = solve_z_pm(tetra)?;
    let dh = delta_hat(tetra)?;
    let plus = (u_of_z(zp, tetra)? + dh).im;
    let minus = -(u_of_z(zm, tetra)? + dh).im;
    if (plus - minus).abs() > 1e-9 {
        return Err(Error::VolumeMismatch { plus, minus });
    }
    Ok(plus)
}

/// Volume of the D-block `D(u)`: two copies of `T(u/2)` glued along their
/// faces, so `2·Vol(T(u/2))`.
pub fn dblock_volume(u: &[f64; 6]) -> Result<f64> {
    let half = [u[0] / 2.0, u[1] / 2.0, u[2] / 2.0, u[3] / 2.0, u[4] / 2.0, u[5] / 2.0];
    let tetra = TruncTetra::new(half)?;
    Ok(2.0 * volume_my(&tetra)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    /// Quadrature oracle for Λ on [0, π]: the singular part of the
    /// integrand integrates in closed form, the smooth remainder goes
    /// through adaptive Simpson.
    mod quadrature {
        use std::f64::consts::{FRAC_PI_2, PI};

        fn smooth(s: f64) -> f64 {
            if s == 0.0 {
                0.0
            } else {
                (s.sin() / s).ln()
            }
        }

        fn simpson(a: f64, b: f64) -> f64 {
            (b - a) / 6.0 * (smooth(a) + 4.0 * smooth(0.5 * (a + b)) + smooth(b))
        }

        fn adaptive(a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
            let m = 0.5 * (a + b);
            let left = simpson(a, m);
            let right = simpson(m, b);
            if depth == 0 || (left + right - whole).abs() < 15.0 * tol {
                return left + right + (left + right - whole) / 15.0;
            }
            adaptive(a, m, left, tol / 2.0, depth - 1) + adaptive(m, b, right, tol / 2.0, depth - 1)
        }

        /// ∫₀^y ln(2 sin s) ds for y ∈ [0, π/2].
        fn a_integral(y: f64) -> f64 {
            if y == 0.0 {
                return 0.0;
            }
            let analytic = y * (2.0 * y).ln() - y;
            analytic + adaptive(0.0, y, simpson(0.0, y), 1e-14, 40)
        }

        pub fn lobachevsky(x: f64) -> f64 {
            assert!((0.0..=PI).contains(&x));
            if x <= FRAC_PI_2 {
                -a_integral(x)
            } else {
                -(2.0 * a_integral(FRAC_PI_2) - a_integral(PI - x))
            }
        }
    }

    #[test]
    fn lobachevsky_anchors() {
        assert_eq!(lobachevsky(0.0), 0.0);
        close(lobachevsky(FRAC_PI_2), 0.0, 1e-15);
        // quadrature oracle at π/4 (≈ 0.457983)
        let q = quadrature::lobachevsky(PI / 4.0);
        close(lobachevsky(PI / 4.0), q, 1e-12);
        close(lobachevsky(PI / 4.0), 0.457983, 1e-6);
    }

    #[test]
    fn lobachevsky_periodic_and_odd() {
        for i in 0..1000 {
            let x = -4.0 + 8.0 * (i as f64) / 999.0;
            close(lobachevsky(x + PI), lobachevsky(x), 1e-11);
            close(lobachevsky(-x), -lobachevsky(x), 1e-11);
        }
    }

    #[test]
    fn lobachevsky_series_vs_quadrature() {
        for i in 0..=100 {
            let x = PI * (i as f64) / 100.0;
            close(lobachevsky(x), quadrature::lobachevsky(x), 1e-10);
        }
    }

    #[test]
    fn dilog_anchors() {
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(dilog(z).unwrap(), z);

        // series-with-tail oracle at z = 1
        let mut s = 0.0f64;
        let k_max = 100_000u64;
        for k in (1..=k_max).rev() {
            s += 1.0 / (k * k) as f64;
        }
        let kf = k_max as f64;
        s += 1.0 / kf - 1.0 / (2.0 * kf * kf) + 1.0 / (6.0 * kf * kf * kf);
        let v = dilog(Complex64::new(1.0, 0.0)).unwrap();
        close(v.re, s, 1e-11);
        close(v.re, PI * PI / 6.0, 1e-12);
        close(v.im, 0.0, 1e-15);

        // Li2(-1) = -π²/12
        let v = dilog(Complex64::new(-1.0, 0.0)).unwrap();
        close(v.re, -PI * PI / 12.0, 1e-12);

        // domain error
        assert!(dilog(Complex64::new(1.1, 0.0)).is_err());
    }

    /// The three expansion regimes agree where they overlap.
    #[test]
    fn dilog_branch_consistency() {
        // |z| = 0.5 boundary: series vs u-series
        for arg in [0.5f64, 1.7, 3.0, -2.2] {
            let z = Complex64::from_polar(0.5, arg);
            let a = dilog_series(z);
            let b = dilog_u_series(-(Complex64::new(1.0, 0.0) - z).ln());
            assert!((a - b).norm() < 1e-13, "arg {arg}: {a} vs {b}");
        }
        // near 1: reflection vs u-series at |1-z| = 0.5
        for arg in [1.2f64, 2.0, -1.8] {
            let z = Complex64::new(1.0, 0.0) - Complex64::from_polar(0.5, arg);
            if z.norm() > 1.0 {
                continue;
            }
            let omz = Complex64::new(1.0, 0.0) - z;
            let refl = Complex64::new(PI * PI / 6.0, 0.0) - z.ln() * omz.ln() - dilog_series(omz);
            let u = dilog_u_series(-omz.ln());
            assert!((refl - u).norm() < 1e-12);
        }
    }

    /// `Im Li₂(e^{ix}) = 2Λ(x/2)` and the closed-form real part.
    #[test]
    fn dilog_on_circle() {
        for x in [0.3f64, 1.0, 2.5] {
            let v = dilog(Complex64::from_polar(1.0, x)).unwrap();
            close(v.im, 2.0 * lobachevsky(x / 2.0), 1e-11);
            close(v.re, PI * PI / 6.0 - PI * x / 2.0 + x * x / 4.0, 1e-11);
        }
    }

    #[test]
    fn v_triangle_values() {
        close(v_triangle(0.5, 0.5, 0.5), 0.0, 1e-14);
        let expected = lobachevsky(1.8 * PI) - 3.0 * lobachevsky(0.6 * PI);
        close(v_triangle(0.6, 0.6, 0.6), expected, 1e-13);
        // symmetry
        for (a, b, c) in [(0.55, 0.6, 0.7), (0.62, 0.58, 0.53)] {
            let v = v_triangle(a, b, c);
            close(v_triangle(b, a, c), v, 1e-14);
            close(v_triangle(c, b, a), v, 1e-14);
        }
    }

    #[test]
    fn saddle_symmetric_half() {
        let theta = ThetaSix::classify([0.5; 6]).unwrap();
        let s = solve_z0(&theta).unwrap();
        close(s.z0(), 7.0 * PI / 4.0, 1e-10);
        close(s.f_at_z0(), 16.0 * lobachevsky(PI / 4.0), 1e-10);
        close(s.v_sum(), 0.0, 1e-13);
    }

    #[test]
    fn saddle_residual_and_grid_oracle() {
        // residual at a generic hyperbolic 6-tuple
        let theta = ThetaSix::classify([0.55, 0.6, 0.65, 0.6, 0.55, 0.6]).unwrap();
        let s = solve_z0(&theta).unwrap();
        assert!(ln_g(&theta, s.z0()).abs() < 1e-11);
        assert!(s.z0() > theta.t_max() && s.z0() < 2.0 * PI);

        // refining grid scan as an independent locator
        let theta = ThetaSix::classify([0.6; 6]).unwrap();
        let s = solve_z0(&theta).unwrap();
        let (mut lo, mut hi) = (theta.t_max() + 1e-9, theta.q_min().min(2.0 * PI) - 1e-9);
        let mut best = lo;
        for _ in 0..4 {
            let mut best_val = f64::INFINITY;
            for i in 0..=1000 {
                let z = lo + (hi - lo) * (i as f64) / 1000.0;
                let v = ln_g(&theta, z).abs();
                if v < best_val {
                    best_val = v;
                    best = z;
                }
            }
            let step = (hi - lo) / 1000.0;
            lo = (best - step).max(theta.t_max() + 1e-9);
            hi = (best + step).min(theta.q_min().min(2.0 * PI) - 1e-9);
        }
        close(s.z0(), best, 1e-9);
    }

    #[test]
    fn saddle_rejects_non_hyperbolic() {
        let theta = ThetaSix::classify([0.1; 6]).unwrap();
        assert!(matches!(
            solve_z0(&theta),
            Err(Error::NotHyperbolic { .. })
        ));
    }

    /// ln g is strictly decreasing; F has its unique interior maximum at z0.
    #[test]
    fn monotone_g_and_f_maximum() {
        let theta = ThetaSix::classify([0.55, 0.6, 0.65, 0.6, 0.55, 0.6]).unwrap();
        let lo = theta.t_max() + 1e-6;
        let hi = theta.q_min().min(2.0 * PI) - 1e-6;
        let mut prev = f64::INFINITY;
        for i in 0..=500 {
            let z = lo + (hi - lo) * (i as f64) / 500.0;
            let v = ln_g(&theta, z);
            assert!(v < prev, "ln g not strictly decreasing at z = {z}");
            prev = v;
        }

        let s = solve_z0(&theta).unwrap();
        let h = 1e-5;
        let d1 = (f_potential(&theta, s.z0() + h) - f_potential(&theta, s.z0() - h)) / (2.0 * h);
        let d2 = (f_potential(&theta, s.z0() + h) - 2.0 * s.f_at_z0()
            + f_potential(&theta, s.z0() - h))
            / (h * h);
        assert!(d1.abs() < 1e-6, "F'(z0) = {d1}");
        assert!(d2 < 0.0, "F''(z0) = {d2}");
        assert!(s.f_at_z0() >= f_potential(&theta, s.z0() + 1e-3));
        assert!(s.f_at_z0() >= f_potential(&theta, s.z0() - 1e-3));
    }

    #[test]
    fn volume_lob_anchors() {
        let theta = ThetaSix::classify([0.5; 6]).unwrap();
        close(volume_lob(&theta).unwrap(), 16.0 * lobachevsky(PI / 4.0), 1e-10);

        // even symmetry: θ'_0 = 1 - θ_0 leaves the volume unchanged
        let a = ThetaSix::classify([0.6; 6]).unwrap();
        let b = ThetaSix::classify([0.4, 0.6, 0.6, 0.6, 0.6, 0.6]).unwrap();
        assert_eq!(b.class(), ThetaClass::Hyperbolic);
        close(volume_lob(&a).unwrap(), volume_lob(&b).unwrap(), 1e-8);
    }

    #[test]
    fn tetra_existence() {
        assert!(tetra_exists(&[0.0; 6]).unwrap());
        assert!(!tetra_exists(&[0.5 * PI, 0.5 * PI, 0.5 * PI, 0.0, 0.0, 0.0]).unwrap());
        assert!(tetra_exists(&[-0.1, 0.0, 0.0, 0.0, 0.0, 0.0]).is_err());
        assert!(TruncTetra::new([0.5 * PI, 0.5 * PI, 0.5 * PI, 0.0, 0.0, 0.0]).is_err());
        // hyperbolic-type θ always passes
        for t in [[0.5; 6], [0.6; 6], [0.55, 0.6, 0.65, 0.6, 0.55, 0.6]] {
            let theta = ThetaSix::classify(t).unwrap();
            assert!(TruncTetra::from_theta(&theta).is_ok());
        }
    }

    #[test]
    fn u_potential_values() {
        let t = TruncTetra::new([0.0; 6]).unwrap();
        let u0 = u_of_z(Complex64::new(0.0, 0.0), &t).unwrap();
        assert!(u0.norm() < 1e-15);

        // α = 0: U(z) = 2Li₂(z) - 2Li₂(-z)
        let z = Complex64::from_polar(0.8, 1.1);
        let u = u_of_z(z, &t).unwrap();
        let expected = 2.0 * (dilog(z).unwrap() - dilog(-z).unwrap());
        assert!((u - expected).norm() < 1e-12);
    }

    /// x ↦ Im U(e^{-2ix}, T) is stationary at x = z0: the saddle of the
    /// Lobachevsky route is the critical point of the dilogarithm route.
    #[test]
    fn u_stationary_at_saddle() {
        let theta = ThetaSix::classify([0.6; 6]).unwrap();
        let s = solve_z0(&theta).unwrap();
        let t = TruncTetra::from_theta(&theta).unwrap();
        let im_u = |x: f64| {
            u_of_z(Complex64::from_polar(1.0, -2.0 * x), &t)
                .unwrap()
                .im
        };
        let h = 1e-5;
        let d1 = (im_u(s.z0() + h) - im_u(s.z0() - h)) / (2.0 * h);
        assert!(d1.abs() < 1e-6, "d/dx Im U = {d1}");
        // and F(x) = 2 Im U(e^{-2ix}, T) on the whole interval
        for i in 1..10 {
            let x = theta.t_max() + (theta.q_min().min(2.0 * PI) - theta.t_max()) * (i as f64) / 10.0;
            close(f_potential(&theta, x), 2.0 * im_u(x), 1e-10);
        }
    }

    #[test]
    fn delta_hat_values() {
        let t = TruncTetra::new([0.0; 6]).unwrap();
        let d = delta_hat(&t).unwrap();
        close(d.re, PI * PI / 3.0, 1e-12);
        close(d.im, 0.0, 1e-15);

        // invariance under pair permutation of the angles
        let alpha = [0.3, 0.5, 0.7, 0.4, 0.35, 0.25];
        let t1 = TruncTetra::new(alpha).unwrap();
        let t2 = TruncTetra::new([0.5, 0.3, 0.7, 0.35, 0.4, 0.25]).unwrap();
        let d1 = delta_hat(&t1).unwrap();
        let d2 = delta_hat(&t2).unwrap();
        assert!((d1 - d2).norm() < 1e-13);
    }

    #[test]
    fn critical_points() {
        // α = 0: the quadratic reduces to 8z² + 8 = 0, roots ±i
        let t = TruncTetra::new([0.0; 6]).unwrap();
        let (zp, zm) = solve_z_pm(&t).unwrap();
        assert!((zp - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!((zm + Complex64::new(0.0, 1.0)).norm() < 1e-12);

        // |z±| = 1 on sampled hyperbolic tetrahedra
        for alpha in [
            [0.3, 0.5, 0.7, 0.4, 0.35, 0.25],
            [0.9, 0.2, 0.8, 0.15, 0.85, 0.3],
            [0.62831853; 6],
        ] {
            let t = TruncTetra::new(alpha).unwrap();
            let (zp, zm) = solve_z_pm(&t).unwrap();
            close(zp.norm(), 1.0, 1e-10);
            close(zm.norm(), 1.0, 1e-10);
            // the two branches of the volume agree
            let dh = delta_hat(&t).unwrap();
            let plus = (u_of_z(zp, &t).unwrap() + dh).im;
            let minus = (u_of_z(zm, &t).unwrap() + dh).im;
            close(plus + minus, 0.0, 1e-9);
        }
    }

    /// The saddle z0 reappears as the volume-carrying critical point via
    /// z_+ = e^{-2i z0}.
    #[test]
    fn critical_point_matches_saddle() {
        for th in [[0.5; 6], [0.6; 6], [0.55, 0.6, 0.65, 0.6, 0.55, 0.6]] {
            let theta = ThetaSix::classify(th).unwrap();
            let s = solve_z0(&theta).unwrap();
            let t = TruncTetra::from_theta(&theta).unwrap();
            let (zp, _) = solve_z_pm(&t).unwrap();
            let w = Complex64::from_polar(1.0, -2.0 * s.z0());
            let d = (w - zp).norm();
            assert!(d < 1e-9, "e^(-2i z0) is {d} away from z_+");
        }
    }

    #[test]
    fn volume_my_anchors() {
        let t = TruncTetra::new([0.0; 6]).unwrap();
        close(volume_my(&t).unwrap(), vol_oct(), 1e-10);
        close(vol_oct(), 3.663862377, 1e-8);

        // cross-formula: α = (0.2π)⁶ is half of volume_lob((0.6)⁶)
        let t = TruncTetra::new([0.2 * PI; 6]).unwrap();
        let theta = ThetaSix::classify([0.6; 6]).unwrap();
        close(
            volume_my(&t).unwrap(),
            0.5 * volume_lob(&theta).unwrap(),
            1e-8,
        );
    }

    /// Volume strictly decreases along the diagonal α = (s)⁶, s ∈ [0, 0.3π].
    #[test]
    fn volume_monotone_spot_check() {
        let mut prev = f64::INFINITY;
        for i in 0..=10 {
            let s = 0.3 * PI * (i as f64) / 10.0;
            let v = volume_my(&TruncTetra::new([s; 6]).unwrap()).unwrap();
            assert!(v < prev, "volume not decreasing at s = {s}");
            prev = v;
        }
    }

    #[test]
    fn dblock_values() {
        close(dblock_volume(&[0.0; 6]).unwrap(), 2.0 * vol_oct(), 1e-10);
        close(dblock_volume(&[0.0; 6]).unwrap(), 7.327724754, 2e-8);

        let u = [0.4 * PI; 6];
        let t = TruncTetra::new([0.2 * PI; 6]).unwrap();
        close(dblock_volume(&u).unwrap(), 2.0 * volume_my(&t).unwrap(), 1e-12);

        // symmetry under pair-respecting permutations of u
        let u = [0.3, 0.5, 0.7, 0.4, 0.35, 0.25];
        let v = dblock_volume(&u).unwrap();
        close(dblock_volume(&[0.5, 0.3, 0.7, 0.35, 0.4, 0.25]).unwrap(), v, 1e-11);
        close(dblock_volume(&[0.7, 0.5, 0.3, 0.25, 0.35, 0.4]).unwrap(), v, 1e-11);

        assert!(dblock_volume(&[2.0 * PI, 0.0, 0.0, 0.0, 0.0, 0.0]).is_err());
    }
}
