//! Abstract fundamental shadow links.
//!
//! A link is modeled by its vertex/slot incidence alone: `g` vertices of a
//! 4-valent graph, each carrying six strand slots in opposite pairs
//! `(0,3)`, `(1,4)`, `(2,5)`, and a map from slots to the `r` link
//! components. That is exactly the data the colored Jones product formula
//! and the D-block decomposition consume. The link lives in the connected
//! sum of `g + 1` copies of `S²×S¹`; its colored Jones invariant is one
//! 6j-symbol per vertex, and its (deformed) complement volume is one
//! D-block per vertex.

use serde::Deserialize;
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::half::Half;
use crate::hypgeom::{dblock_volume, vol_oct};
use crate::rootval::{LaurentLead, SineTable};
use crate::sixj::{sixj_lead, AdmissibleSix};

/// A fundamental shadow link given by vertex/slot incidence.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShadowLink {
    /// Vertex count of the underlying 4-valent graph (the shadow complexity).
    pub g: usize,
    /// Component count.
    pub r: usize,
    /// `slots[i][j]` is the component whose strand passes through slot `j`
    /// of vertex `i`; opposite slot pairs are `(0,3)`, `(1,4)`, `(2,5)`.
    pub slots: Vec<[usize; 6]>,
}

/// One structural violation found by [`ShadowLink::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroVertices,
    ZeroComponents,
    VertexCountMismatch { expected: usize, actual: usize },
    ComponentOutOfRange { vertex: usize, slot: usize, component: usize },
    UnusedComponent { component: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroVertices => write!(f, "g must be at least 1"),
            Violation::ZeroComponents => write!(f, "r must be at least 1"),
            Violation::VertexCountMismatch { expected, actual } => {
                write!(f, "slots has {actual} rows but g = {expected}")
            }
            Violation::ComponentOutOfRange { vertex, slot, component } => write!(
                f,
                "vertex {vertex}, slot {slot}: component {component} is outside [0, r)"
            ),
            Violation::UnusedComponent { component } => {
                write!(f, "component {component} occurs in no slot")
            }
        }
    }
}

impl ShadowLink {
    pub fn new(g: usize, r: usize, slots: Vec<[usize; 6]>) -> Result<ShadowLink> {
        let link = ShadowLink { g, r, slots };
        let violations = link.validate();
        if violations.is_empty() {
            Ok(link)
        } else {
            Err(Error::InvalidLink { violations })
        }
    }

    /// Empty iff all structural invariants hold; each violation names the
    /// vertex, slot, or component concerned.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.g == 0 {
            out.push(Violation::ZeroVertices);
        }
        if self.r == 0 {
            out.push(Violation::ZeroComponents);
        }
        if self.slots.len() != self.g {
            out.push(Violation::VertexCountMismatch {
                expected: self.g,
                actual: self.slots.len(),
            });
        }
        let mut used = vec![false; self.r];
        for (vertex, row) in self.slots.iter().enumerate() {
            for (slot, &component) in row.iter().enumerate() {
                if component >= self.r {
                    out.push(Violation::ComponentOutOfRange { vertex, slot, component });
                } else {
                    used[component] = true;
                }
            }
        }
        for (component, &u) in used.iter().enumerate() {
            if !u {
                out.push(Violation::UnusedComponent { component });
            }
        }
        out
    }

    fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidLink { violations })
        }
    }

    /// Number of `S²×S¹` summands of the ambient manifold: `k = g + 1`.
    pub fn ambient_summands(&self) -> usize {
        self.g + 1
    }

    /// Parse the JSON document `{"g": .., "r": .., "slots": [[..6] x g]}`
    /// with strict field checking.
    pub fn from_json_str(text: &str) -> Result<ShadowLink> {
        let link: ShadowLink = serde_json::from_str(text).map_err(|e| Error::LinkParse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        link.ensure_valid()?;
        Ok(link)
    }

    pub fn from_path<P: AsRef<Path>>(path: P) -> Result<ShadowLink> {
        ShadowLink::from_json_str(&std::fs::read_to_string(path)?)
    }

    /// The 6-tuple of colors induced at a vertex by a component coloring.
    pub fn induced_colors(&self, vertex: usize, b: &[Half]) -> [Half; 6] {
        self.slots[vertex].map(|c| b[c])
    }
}

/// Meridian deformation parameters, one per component; `a = 0` is the
/// complete structure.
#[derive(Clone, Debug, PartialEq)]
pub struct HolonomyParams {
    pub a: Vec<f64>,
}

impl HolonomyParams {
    pub fn new(a: Vec<f64>) -> HolonomyParams {
        HolonomyParams { a }
    }

    pub fn complete(r: usize) -> HolonomyParams {
        HolonomyParams { a: vec![0.0; r] }
    }

    /// The angle 6-tuple induced at a vertex: `u_j = 2π|a at slot j|`.
    pub fn induced_angles(&self, link: &ShadowLink, vertex: usize) -> [f64; 6] {
        link.slots[vertex].map(|c| 2.0 * std::f64::consts::PI * self.a[c].abs())
    }
}

/// Leading coefficient of the colored Jones invariant at `q_n`: the
/// product over vertices of the 6j-symbol leads on the induced colors.
/// A vertex with non-admissible induced colors makes the invariant the
/// zero function.
pub fn colored_jones_lead(link: &ShadowLink, b: &[Half], table: &SineTable) -> Result<LaurentLead> {
    link.ensure_valid()?;
    if b.len() != link.r {
        return Err(Error::LengthMismatch {
            what: "component colors",
            expected: link.r,
            actual: b.len(),
        });
    }
    let mut product = LaurentLead::one();
    for vertex in 0..link.g {
        let colors = link.induced_colors(vertex, b);
        let six = match AdmissibleSix::new(colors) {
            Ok(six) => six,
            Err(Error::NotAdmissible { .. }) => return Ok(LaurentLead::zero()),
            Err(e) => return Err(e),
        };
        product = product * sixj_lead(&six, table)?;
    }
    Ok(product)
}

/// Volume of the deformed complement: one D-block per vertex, with angles
/// `u(i)_j = 2π|a at slot j|`. Fails naming the vertex whose induced
/// angles admit no truncated tetrahedron.
pub fn complement_volume(link: &ShadowLink, params: &HolonomyParams) -> Result<f64> {
    link.ensure_valid()?;
    if params.a.len() != link.r {
        return Err(Error::LengthMismatch {
            what: "holonomy parameters",
            expected: link.r,
            actual: params.a.len(),
        });
    }
    let mut total = 0.0;
    for vertex in 0..link.g {
        let u = params.induced_angles(link, vertex);
        total += dblock_volume(&u).map_err(|_| Error::DeformationOutOfRange { vertex })?;
    }
    Ok(total)
}

/// Volume of the complete structure: `2g·Vol_Oct`.
pub fn complete_volume(link: &ShadowLink) -> f64 {
    2.0 * link.g as f64 * vol_oct()
}
