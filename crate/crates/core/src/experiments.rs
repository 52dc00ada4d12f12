//! Convergence experiments: build admissible color sequences from real
//! targets and tabulate the `(2π/n)·log|ev|` quantities against their
//! volume targets.
//!
//! Rows for distinct `n` are independent and computed in parallel; output
//! ordering is by `n` regardless of completion order, and each row's
//! numerics are single-threaded, so results are bit-reproducible.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::half::Half;
use crate::hypgeom::volume_lob;
use crate::rootval::{qint_lead, SineTable};
use crate::shadow::{colored_jones_lead, complement_volume, HolonomyParams, ShadowLink};
use crate::sixj::{sixj_lead, AdmissibleSix, ThetaClass, ThetaSix, TRIPLES};

/// One convergence record: the measured `(2π/n)·log|ev|` value, its
/// volume target, and the observed Laurent order.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConvergenceRow {
    pub n: u32,
    pub value: f64,
    pub target: f64,
    pub error: f64,
    pub order_observed: i64,
    pub runtime_ms: f64,
}

/// Largest factorial argument the 6j-symbol of `b` needs.
pub fn required_table_arg(b: &AdmissibleSix) -> u32 {
    let t_max = *b.triangles().iter().max().expect("triangles");
    let u_max = t_max;
    let r_min = *b.squares().iter().min().expect("squares");
    let r_max = *b.squares().iter().max().expect("squares");
    (t_max + 1).max(r_min + 1).max(r_max - u_max) as u32
}

/// Triples incident to each entry index (every entry sits in exactly two
/// of the four triangle triples).
const ENTRY_TRIPLES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [2, 3], [1, 3], [1, 2]];

/// Canonical admissible color sequence for a hyperbolic-type 6-tuple:
/// `b_i = round(2nθ_i)/2` followed by deterministic parity repair.
///
/// While some triple sum is non-integer, the smallest-index entry both of
/// whose incident triples are violated gets incremented by ½; odd parities
/// come in even-sized sets, so this terminates within two steps and keeps
/// `|b_i/n - θ_i| ≤ 3/(2n)`.
pub fn color_sequence(theta: &ThetaSix, n: u32) -> Result<AdmissibleSix> {
    if theta.class() != ThetaClass::Hyperbolic {
        return Err(Error::NotHyperbolic {
            class: theta.class(),
        });
    }
    let t = theta.theta();
    let mut doubled = [0i64; 6];
    for i in 0..6 {
        doubled[i] = (2.0 * n as f64 * t[i]).round() as i64;
    }
    for _ in 0..12 {
        let violated = TRIPLES.map(|tr| (doubled[tr[0]] + doubled[tr[1]] + doubled[tr[2]]) % 2 != 0);
        if !violated.iter().any(|&v| v) {
            break;
        }
        let entry = (0..6)
            .find(|&e| violated[ENTRY_TRIPLES[e][0]] && violated[ENTRY_TRIPLES[e][1]]);
        match entry {
            Some(e) => doubled[e] += 1,
            None => return Err(Error::NTooSmall { n }),
        }
    }
    for i in 0..6 {
        debug_assert!(
            (doubled[i] as f64 - 2.0 * n as f64 * t[i]).abs() <= 3.0,
            "color drifted beyond 3/(2n)"
        );
    }
    AdmissibleSix::new(doubled.map(Half::from_doubled)).map_err(|_| Error::NTooSmall { n })
}

fn table_for(n: u32, need: u32) -> SineTable {
    SineTable::new(n, need.max((2.6 * n as f64).ceil() as u32))
}

/// Convergence of `(2π/n)·log|ev([n]·6j(bⁿ))|` toward the doubled
/// truncated-tetrahedron volume `volume_lob(θ)`, for the canonical color
/// sequence. Rows sorted by `n`.
pub fn converge_sixj(theta: &ThetaSix, ns: &[u32]) -> Result<Vec<ConvergenceRow>> {
    let target = volume_lob(theta)?;
    let mut rows = ns
        .par_iter()
        .map(|&n| -> Result<ConvergenceRow> {
            let started = Instant::now();
            let b = color_sequence(theta, n)?;
            let table = table_for(n, required_table_arg(&b));
            let lead = sixj_lead(&b, &table)?;
            let normalized = qint_lead(n, n).try_div(qint_lead(1, n))? * lead;
            let value = 2.0 * std::f64::consts::PI / n as f64 * normalized.log_mag();
            Ok(ConvergenceRow {
                n,
                value,
                target,
                error: value - target,
                order_observed: lead.order(),
                runtime_ms: started.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

/// Convergence of `(2π/n)·log|ev(J_{bⁿ})|` toward the deformed complement
/// volume, with integer colors `bⁿ_i = round(n(1+a_i)/2)`. Takes even `n`
/// only. Rows sorted by `n`.
pub fn converge_gcv(
    link: &ShadowLink,
    params: &HolonomyParams,
    ns: &[u32],
) -> Result<Vec<ConvergenceRow>> {
    if let Some(&n) = ns.iter().find(|&&n| n % 2 != 0) {
        return Err(Error::OddN { n });
    }
    let target = complement_volume(link, params)?;
    let mut rows = ns
        .par_iter()
        .map(|&n| -> Result<ConvergenceRow> {
            let started = Instant::now();
            let b: Vec<Half> = params
                .a
                .iter()
                .map(|&a| Half::from_int((n as f64 * (1.0 + a) / 2.0).round() as i64))
                .collect();
            let mut need = 0u32;
            for vertex in 0..link.g {
                if let Ok(six) = AdmissibleSix::new(link.induced_colors(vertex, &b)) {
                    need = need.max(required_table_arg(&six));
                }
            }
            let table = table_for(n, need);
            let lead = colored_jones_lead(link, &b, &table)?;
            let value = 2.0 * std::f64::consts::PI / n as f64 * lead.log_mag();
            Ok(ConvergenceRow {
                n,
                value,
                target,
                error: value - target,
                order_observed: lead.order(),
                runtime_ms: started.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

/// Richardson extrapolation of the value column under an assumed `c/n`
/// error model; entry `k` extrapolates rows `k` and `k+1`. Offered as an
/// optional diagnostic, never used by the convergence assertions.
pub fn richardson(rows: &[ConvergenceRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|w| {
            let (a, b) = (&w[0], &w[1]);
            (b.n as f64 * b.value - a.n as f64 * a.value) / (b.n as f64 - a.n as f64)
        })
        .collect()
}

/// Format with 12 significant digits, decimal point, plain notation where
/// the exponent allows and scientific otherwise.
pub fn format_sig(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-4..DIGITS).contains(&exp) {
        format!("{:.*e}", (DIGITS - 1) as usize, x)
    } else {
        format!("{:.*}", (DIGITS - 1 - exp).max(0) as usize, x)
    }
}

/// Render rows as CSV: header `n,value,target,error,order,runtime_ms`,
/// 12 significant digits, LF line endings.
pub fn csv_string(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from("n,value,target,error,order,runtime_ms\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            format_sig(r.value),
            format_sig(r.target),
            format_sig(r.error),
            r.order_observed,
            format_sig(r.runtime_ms),
        ));
    }
    out
}
