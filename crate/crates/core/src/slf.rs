//! Height-function fibrations `f_H(x) = <H, x>` on the adjoint orbit of `H0`.
//!
//! Critical points are the Weyl orbit of `H0` inside the Cartan subalgebra.
//! A regular level has the homology of the flag manifold with the `k`
//! critical points removed, so its middle Betti number is `k - 1`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::hodge::{flag_poincare, flag_poincare_product};
use crate::rational::{serialize_rationals, CartanVector, Rational};
use crate::root_system::{ParabolicData, Root, RootSystem};

/// Orbit enumeration cap used when none is given.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

pub const FORM_NORMALIZATION: &str = "<v,w> = v^T B w with B_ij = d_i a_ij and minimal integer \
     symmetrizers (short roots have <a,a> = 2); critical values are defined up to a global \
     positive scalar";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FibrationStatus {
    /// `H` regular and all critical values pairwise distinct.
    Lefschetz,
    /// `H` non-regular or colliding critical values.
    Degenerate,
    /// The orbit exceeded the cap; critical values were not enumerated.
    SizeOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiSource {
    SchubertEnumeration,
    DegreeProduct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalValues {
    pub values: Vec<Rational>,
    /// Index groups (size at least 2) sharing a value, ordered by value.
    pub collisions: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberBetti {
    pub flag_betti: Vec<u64>,
    pub fiber_betti: Vec<u64>,
    pub source: BettiSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    /// One-based simple-root labels.
    pub simple_roots: Vec<usize>,
    #[serde(serialize_with = "serialize_biguint")]
    pub stabilizer_order: BigUint,
    #[serde(serialize_with = "serialize_biguint")]
    pub orbit_index: BigUint,
    pub dominant_representative: CartanVector,
}

impl From<&ParabolicData> for ThetaReport {
    fn from(p: &ParabolicData) -> Self {
        ThetaReport {
            simple_roots: p.theta.iter().map(|i| i + 1).collect(),
            stabilizer_order: p.stabilizer_order.clone(),
            orbit_index: p.orbit_index.clone(),
            dominant_representative: p.dominant.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlfReport {
    pub cartan_type: CartanType,
    pub isomorphism_note: Option<String>,
    pub form_normalization: String,
    pub h0: CartanVector,
    pub h: CartanVector,
    pub h_regular: bool,
    pub h_vanishing_root: Option<Root>,
    pub theta: ThetaReport,
    #[serde(serialize_with = "serialize_biguint")]
    pub k: BigUint,
    pub critical_points_enumerated: bool,
    pub critical_points: Vec<CartanVector>,
    #[serde(serialize_with = "serialize_rationals")]
    pub critical_values: Vec<Rational>,
    pub value_collisions: Vec<Vec<usize>>,
    pub orbit_dim_complex: usize,
    pub orbit_dim_real: usize,
    pub flag_dim_real: usize,
    pub flag_betti: Vec<u64>,
    pub fiber_betti: Vec<u64>,
    pub middle_betti: u64,
    pub betti_source: BettiSource,
    pub status: FibrationStatus,
    pub notes: Vec<String>,
}

fn serialize_biguint<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

/// The Weyl orbit of `h0`.
pub fn critical_set(rs: &RootSystem, h0: &CartanVector, cap: usize) -> Result<Vec<CartanVector>> {
    rs.weyl_orbit(h0, cap)
}

pub fn critical_values(rs: &RootSystem, h: &CartanVector, points: &[CartanVector]) -> Result<CriticalValues> {
    let values = points.iter().map(|x| rs.pairing(h, x)).collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<&Rational, Vec<usize>> = BTreeMap::new();
    for (i, v) in values.iter().enumerate() {
        groups.entry(v).or_default().push(i);
    }
    let collisions = groups.into_values().filter(|g| g.len() > 1).collect();
    Ok(CriticalValues { values, collisions })
}

/// `(complex, real)` dimension of the adjoint orbit of `h0`.
pub fn orbit_dimension(rs: &RootSystem, h0: &CartanVector) -> Result<(usize, usize)> {
    let complex = rs.nonvanishing_root_count(h0)?;
    Ok((complex, 2 * complex))
}

/// Betti numbers of a regular fiber in degrees `0..=d`, `d` the real
/// dimension of the flag manifold: removing `k` points kills the top class
/// and adds `k - 1` classes in degree `d - 1`.
pub fn fiber_betti(rs: &RootSystem, h0: &CartanVector, cap: usize) -> Result<FiberBetti> {
    if h0.is_zero() {
        // checks the length as a side effect
        rs.stabilizer_data(h0)?;
        return Err(Error::PointOrbit);
    }
    let data = rs.stabilizer_data(h0)?;
    let (flag_betti, source) = match flag_poincare(rs, &data.theta, cap) {
        Ok(b) => (b, BettiSource::SchubertEnumeration),
        Err(Error::OrbitTooLarge { .. }) => (flag_poincare_product(rs, &data.theta)?, BettiSource::DegreeProduct),
        Err(e) => return Err(e),
    };
    let k = data
        .orbit_index
        .to_u64()
        .ok_or_else(|| Error::Overflow(format!("orbit index {}", data.orbit_index)))?;
    let d = flag_betti.len() - 1;
    let mut fiber = flag_betti.clone();
    fiber[d - 1] += k - 1;
    fiber[d] = 0;
    Ok(FiberBetti { flag_betti, fiber_betti: fiber, source })
}

pub fn slf_report(rs: &RootSystem, h0: &CartanVector, h: &CartanVector, cap: usize) -> Result<SlfReport> {
    let regularity = rs.is_regular(h)?;
    let data = rs.stabilizer_data(h0)?;
    let betti = fiber_betti(rs, h0, cap)?;
    let (orbit_dim_complex, orbit_dim_real) = orbit_dimension(rs, h0)?;
    let mut notes = Vec::new();

    let (enumerated, points, values) = match critical_set(rs, h0, cap) {
        Ok(points) => {
            let values = critical_values(rs, h, &points)?;
            (true, points, Some(values))
        }
        Err(Error::OrbitTooLarge { cap, orbit_index }) => {
            notes.push(format!(
                "orbit of size {orbit_index} exceeds cap {cap}; critical points and values omitted"
            ));
            (false, Vec::new(), None)
        }
        Err(e) => return Err(e),
    };

    let mut status = FibrationStatus::Lefschetz;
    if let Some(root) = &regularity.witness {
        notes.push(format!("H is not regular: the root {root} vanishes on H"));
        status = FibrationStatus::Degenerate;
    }
    let (critical_values, value_collisions) = match values {
        Some(v) => {
            if !v.collisions.is_empty() {
                notes.push(format!("{} group(s) of critical points share a critical value", v.collisions.len()));
                status = FibrationStatus::Degenerate;
            }
            (v.values, v.collisions)
        }
        None => {
            if status == FibrationStatus::Lefschetz {
                status = FibrationStatus::SizeOnly;
            }
            (Vec::new(), Vec::new())
        }
    };

    let middle_betti = betti.fiber_betti[betti.fiber_betti.len() - 2];
    Ok(SlfReport {
        cartan_type: rs.cartan_type(),
        isomorphism_note: rs.cartan_type().isomorphism_note().map(String::from),
        form_normalization: FORM_NORMALIZATION.to_string(),
        h0: h0.clone(),
        h: h.clone(),
        h_regular: regularity.regular,
        h_vanishing_root: regularity.witness,
        theta: ThetaReport::from(&data),
        k: data.orbit_index.clone(),
        critical_points_enumerated: enumerated,
        critical_points: points,
        critical_values,
        value_collisions,
        orbit_dim_complex,
        orbit_dim_real,
        flag_dim_real: orbit_dim_complex,
        flag_betti: betti.flag_betti,
        fiber_betti: betti.fiber_betti,
        middle_betti,
        betti_source: betti.source,
        status,
        notes,
    })
}

impl SlfReport {
    /// Multi-line human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("type            {}", self.cartan_type));
        if let Some(note) = &self.isomorphism_note {
            out.push(format!("note            {note}"));
        }
        out.push(format!("H0              {}", self.h0));
        out.push(format!("H               {} (regular: {})", self.h, self.h_regular));
        out.push(format!("status          {:?}", self.status));
        out.push(format!("k               {}", self.k));
        out.push(format!(
            "orbit dim       {} complex / {} real; flag manifold real dim {}",
            self.orbit_dim_complex, self.orbit_dim_real, self.flag_dim_real
        ));
        out.push(format!("flag Betti      {:?}", self.flag_betti));
        out.push(format!("fiber Betti     {:?} (middle {})", self.fiber_betti, self.middle_betti));
        if self.critical_points_enumerated {
            out.push("critical points and values:".to_string());
            for (x, v) in self.critical_points.iter().zip(&self.critical_values) {
                out.push(format!("  {x}  ->  {}", crate::rational::format_rational(v)));
            }
            if !self.value_collisions.is_empty() {
                out.push(format!("collisions      {:?}", self.value_collisions));
            }
        }
        for note in &self.notes {
            out.push(format!("! {note}"));
        }
        out.join("\n")
    }
}
