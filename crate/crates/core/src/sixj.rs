//! Admissible 6-tuples, classification of their real limits, and 6j-symbol
//! evaluation — in log domain at `q_n` and as a generic-`q` complex oracle.
//!
//! A 6-tuple of half-integers `(b0..b5)` with opposite pairs `(b0,b3)`,
//! `(b1,b4)`, `(b2,b5)` is admissible when its four triangle triples
//! satisfy the triangle inequalities and have integer sums. The 6j-symbol
//! is the product of four `Δ` factors and a z-sum of quantum-factorial
//! ratios; everything here reduces to [`crate::rootval`] arithmetic.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::half::Half;
use crate::rootval::{lead_sum, qint_lead, LaurentLead, Sign, SineTable};

/// Index triples of the four triangles: `(b0,b1,b2)`, `(b0,b4,b5)`,
/// `(b3,b1,b5)`, `(b3,b4,b2)`.
pub const TRIPLES: [[usize; 3]; 4] = [[0, 1, 2], [0, 4, 5], [3, 1, 5], [3, 4, 2]];

/// Index quadruples of the three squares: `b0+b3+b1+b4`, `b0+b3+b2+b5`,
/// `b1+b4+b2+b5`.
pub const SQUARES: [[usize; 4]; 3] = [[0, 3, 1, 4], [0, 3, 2, 5], [1, 4, 2, 5]];

/// Margin below which a real 6-tuple counts as sitting on the degenerate
/// boundary of the hyperbolic region and is rejected.
const BOUNDARY_MARGIN: f64 = 1e-9;

/// True iff the triple satisfies the triangle inequalities and has an
/// integer sum. Entries must be nonnegative.
pub fn admissible_triple(b0: Half, b1: Half, b2: Half) -> bool {
    let (d0, d1, d2) = (b0.doubled(), b1.doubled(), b2.doubled());
    d0 >= 0
        && d1 >= 0
        && d2 >= 0
        && (d0 + d1 + d2) % 2 == 0
        && d0 + d1 >= d2
        && d0 + d2 >= d1
        && d1 + d2 >= d0
}

/// An admissible 6-tuple of half-integer colors with its derived triangle
/// sums `U_0..U_3` and square sums `R_1..R_3` (all integers).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibleSix {
    b: [Half; 6],
    triangles: [i64; 4],
    squares: [i64; 3],
}

impl AdmissibleSix {
    pub fn new(b: [Half; 6]) -> Result<AdmissibleSix> {
        for (index, t) in TRIPLES.iter().enumerate() {
            if !admissible_triple(b[t[0]], b[t[1]], b[t[2]]) {
                return Err(Error::NotAdmissible { index });
            }
        }
        let triangles = TRIPLES.map(|t| (b[t[0]].doubled() + b[t[1]].doubled() + b[t[2]].doubled()) / 2);
        let squares = SQUARES.map(|s| {
            (b[s[0]].doubled() + b[s[1]].doubled() + b[s[2]].doubled() + b[s[3]].doubled()) / 2
        });
        debug_assert!(squares
            .iter()
            .all(|r| triangles.iter().all(|u| r - u >= 0)));
        Ok(AdmissibleSix { b, triangles, squares })
    }

    pub fn entries(&self) -> [Half; 6] {
        self.b
    }

    /// Triangle sums `U_i`, nonnegative integers.
    pub fn triangles(&self) -> [i64; 4] {
        self.triangles
    }

    /// Square sums `R_j`, nonnegative integers; `R_j - U_i >= 0` always.
    pub fn squares(&self) -> [i64; 3] {
        self.squares
    }

    /// Twice the sum of all six entries (an integer).
    pub fn doubled_sum(&self) -> i64 {
        self.b.iter().map(|h| h.doubled()).sum()
    }
}

/// Classification of a real 6-tuple in `[0,1]^6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaClass {
    NotRAdmissible,
    ReshetikhinTuraev,
    Hyperbolic,
    RAdmissibleOther,
}

impl ThetaClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ThetaClass::NotRAdmissible => "not-R-admissible",
            ThetaClass::ReshetikhinTuraev => "RT-type",
            ThetaClass::Hyperbolic => "hyperbolic-type",
            ThetaClass::RAdmissibleOther => "R-admissible-other",
        }
    }
}

/// A real 6-tuple with its classification and derived triangle/square sums
/// (in radians: `T_i = π·(θ triple sum)`, `Q_j = π·(θ square sum)`).
#[derive(Clone, Copy, Debug)]
pub struct ThetaSix {
    theta: [f64; 6],
    class: ThetaClass,
    triangles: [f64; 4],
    squares: [f64; 3],
}

impl ThetaSix {
    /// Classify per the R-admissibility definition. RT-type and
    /// hyperbolic-type are mutually exclusive; 6-tuples within
    /// `1e-9` of the hyperbolic boundary are rejected as non-hyperbolic.
    pub fn classify(theta: [f64; 6]) -> Result<ThetaSix> {
        for (index, &value) in theta.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::ThetaOutOfRange { index, value });
            }
        }
        let pi = std::f64::consts::PI;
        let triangles = TRIPLES.map(|t| pi * (theta[t[0]] + theta[t[1]] + theta[t[2]]));
        let squares =
            SQUARES.map(|s| pi * (theta[s[0]] + theta[s[1]] + theta[s[2]] + theta[s[3]]));

        let mut r_admissible = true;
        let mut rt = true;
        let mut hyperbolic = true;
        for t in TRIPLES {
            let (a, b, c) = (theta[t[0]], theta[t[1]], theta[t[2]]);
            let sum = a + b + c;
            let diffs = [a + b - c, a + c - b, b + c - a];
            r_admissible &= diffs.iter().all(|&d| d > 0.0);
            rt &= a < 0.5 && b < 0.5 && c < 0.5 && sum < 1.0;
            hyperbolic &= sum > 1.0 + BOUNDARY_MARGIN && sum < 2.0 - BOUNDARY_MARGIN;
            hyperbolic &= diffs
                .iter()
                .all(|&d| d > BOUNDARY_MARGIN && d < 1.0 - BOUNDARY_MARGIN);
        }

        let class = if !r_admissible {
            ThetaClass::NotRAdmissible
        } else if rt {
            ThetaClass::ReshetikhinTuraev
        } else if hyperbolic {
            ThetaClass::Hyperbolic
        } else {
            ThetaClass::RAdmissibleOther
        };
        Ok(ThetaSix { theta, class, triangles, squares })
    }

    pub fn theta(&self) -> [f64; 6] {
        self.theta
    }

    pub fn class(&self) -> ThetaClass {
        self.class
    }

    /// `T_i = π(θ triple sums)`; for hyperbolic-type all lie in `(π, 2π)`.
    pub fn triangles(&self) -> [f64; 4] {
        self.triangles
    }

    /// `Q_j = π(θ square sums)`; for hyperbolic-type `0 < Q_j - T_i < π`.
    pub fn squares(&self) -> [f64; 3] {
        self.squares
    }

    pub fn t_max(&self) -> f64 {
        self.triangles.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn q_min(&self) -> f64 {
        self.squares.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

/// Leading coefficient of `Δ²(b0,b1,b2)` at `q_n`, assembled from quantum
/// factorials: `Δ² = {1}·{b0+b1-b2}!{b0+b2-b1}!{b1+b2-b0}!/{b0+b1+b2+1}!`.
pub fn delta_sq_lead(b0: Half, b1: Half, b2: Half, table: &SineTable) -> Result<LaurentLead> {
    if !admissible_triple(b0, b1, b2) {
        return Err(Error::NotAdmissible { index: 0 });
    }
    let arg = |h: Half| (h.doubled() / 2) as u32;
    let num = [b0 + b1 - b2, b0 + b2 - b1, b1 + b2 - b0];
    let top = (b0 + b1 + b2).doubled() / 2 + 1;
    let mut lead = qint_lead(1, table.n());
    for h in num {
        lead = lead * table.qfact_lead(arg(h))?;
    }
    lead.try_div(table.qfact_lead(top as u32)?)
}

/// Sign contributed by `i^{-d}` for integer `d`: real for even `d`,
/// indeterminate for odd `d` (the magnitude is unaffected either way).
fn i_power_sign(d: i64) -> Sign {
    match d.rem_euclid(4) {
        0 => Sign::Plus,
        2 => Sign::Minus,
        _ => Sign::Indeterminate,
    }
}

/// Leading Laurent coefficient of the 6j-symbol at `q_n`.
///
/// Product of the four `Δ²` leads halved through the magnitude square
/// root, times the z-sum accumulated with [`lead_sum`] over
/// `z ∈ [max U_i, min R_j]`, divided by `{1}`, with the global
/// `(√-1)^{-2Σb}` folded into the sign.
pub fn sixj_lead(b: &AdmissibleSix, table: &SineTable) -> Result<LaurentLead> {
    let e = b.entries();
    let mut delta_prod = LaurentLead::one();
    for t in TRIPLES {
        delta_prod = delta_prod * delta_sq_lead(e[t[0]], e[t[1]], e[t[2]], table)?;
    }
    let delta_half = delta_prod.sqrt_mag()?;

    let u_max = *b.triangles().iter().max().expect("four triangles");
    let r_min = *b.squares().iter().min().expect("three squares");
    if u_max > r_min {
        return Ok(LaurentLead::zero());
    }
    let mut terms = Vec::with_capacity((r_min - u_max + 1) as usize);
    for z in u_max..=r_min {
        let mut term = table.qfact_lead((z + 1) as u32)?;
        for u in b.triangles() {
            term = term.try_div(table.qfact_lead((z - u) as u32)?)?;
        }
        for r in b.squares() {
            term = term.try_div(table.qfact_lead((r - z) as u32)?)?;
        }
        if z % 2 != 0 {
            term = -term;
        }
        terms.push(term);
    }
    let z_sum = lead_sum(terms)?;

    let one_q = qint_lead(1, table.n());
    Ok((delta_half * z_sum.try_div(one_q)?).scaled_by(i_power_sign(b.doubled_sum())))
}

/// Direct complex evaluation of the 6j-symbol at a generic unit-modulus
/// `q` (taken by its argument, with `q^{1/2} = e^{i·arg(q)/2}`), summing
/// term by term with normalized quantum factorials. No log domain — this
/// is the independent oracle for small colors.
pub fn sixj_generic_eval(b: &AdmissibleSix, q: Complex64) -> Result<Complex64> {
    let phi = q.arg();
    let half = 0.5 * phi;
    let s1 = half.sin();
    if s1.abs() < 1e-300 {
        return Err(Error::ZeroDivision);
    }
    // normalized quantum factorial [m]! = prod sin(j*phi/2)/sin(phi/2)
    let top = b.squares().iter().map(|r| r + 1).max().expect("squares") as usize;
    let mut nfact = Vec::with_capacity(top + 1);
    nfact.push(1.0f64);
    for j in 1..=top {
        let f = (j as f64 * half).sin() / s1;
        nfact.push(nfact[j - 1] * f);
    }
    let fact = |m: i64| -> Result<f64> {
        let v = nfact[m as usize];
        if v.abs() < 1e-300 {
            return Err(Error::ZeroDivision);
        }
        Ok(v)
    };

    let e = b.entries();
    let mut delta_prod = Complex64::new(1.0, 0.0);
    for t in TRIPLES {
        let (b0, b1, b2) = (e[t[0]], e[t[1]], e[t[2]]);
        let a0 = (b0 + b1 - b2).doubled() / 2;
        let a1 = (b0 + b2 - b1).doubled() / 2;
        let a2 = (b1 + b2 - b0).doubled() / 2;
        let t1 = (b0 + b1 + b2).doubled() / 2 + 1;
        let ratio = fact(a0)? * fact(a1)? * fact(a2)? / fact(t1)?;
        delta_prod *= Complex64::new(ratio, 0.0).sqrt();
    }

    let u_max = *b.triangles().iter().max().expect("triangles");
    let r_min = *b.squares().iter().min().expect("squares");
    let mut sum = 0.0f64;
    for z in u_max..=r_min {
        let mut term = nfact[(z + 1) as usize];
        for u in b.triangles() {
            term /= fact(z - u)?;
        }
        for r in b.squares() {
            term /= fact(r - z)?;
        }
        if z % 2 != 0 {
            term = -term;
        }
        sum += term;
    }

    let phase = match b.doubled_sum().rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    Ok(phase * delta_prod * sum)
}
