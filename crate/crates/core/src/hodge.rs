//! Flag-manifold topology from Weyl combinatorics, Hodge diamonds, and the
//! 45-degree mirror reflection.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::RootSystem;

/// Number of minimal coset representatives of `W / W_theta` in each length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthProfile {
    pub counts: Vec<u64>,
}

impl LengthProfile {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Betti numbers `b_0..b_{2m}`; odd degrees vanish.
    pub fn betti(&self) -> Vec<u64> {
        let mut out = vec![0; 2 * self.counts.len() - 1];
        for (l, &c) in self.counts.iter().enumerate() {
            out[2 * l] = c;
        }
        out
    }
}

fn check_theta(rs: &RootSystem, theta: &[usize]) -> Result<()> {
    match theta.iter().find(|&&i| i >= rs.rank()) {
        Some(&index) => Err(Error::SimpleIndexOutOfRange { index, rank: rs.rank() }),
        None => Ok(()),
    }
}

fn coset_count(rs: &RootSystem, theta: &[usize]) -> BigUint {
    rs.weyl_order() / rs.parabolic_order(theta)
}

/// Enumerates minimal coset representatives by breadth-first search on the
/// orbit of `sum_{i not in theta} omega_i`; the search depth is the length.
pub fn flag_length_profile(rs: &RootSystem, theta: &[usize], cap: usize) -> Result<LengthProfile> {
    check_theta(rs, theta)?;
    let index = coset_count(rs, theta);
    if index > BigUint::from(cap) {
        return Err(Error::OrbitTooLarge { cap, orbit_index: index });
    }
    let n = rs.rank();
    let a = rs.cartan_matrix();
    let start: Vec<i64> = (0..n).map(|i| i64::from(!theta.contains(&i))).collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: VecDeque<Vec<i64>> = VecDeque::new();
    seen.insert(start.clone());
    frontier.push_back(start);
    let mut counts = Vec::new();
    while !frontier.is_empty() {
        counts.push(frontier.len() as u64);
        let mut next_level = VecDeque::new();
        for weight in frontier {
            for i in 0..n {
                // Only reflections pushing the weight away from the dominant
                // chamber increase the length.
                if weight[i] <= 0 {
                    continue;
                }
                let ci = weight[i];
                let next: Vec<i64> = (0..n).map(|j| weight[j] - ci * a[j][i]).collect();
                if seen.insert(next.clone()) {
                    next_level.push_back(next);
                }
            }
        }
        frontier = next_level;
    }
    Ok(LengthProfile { counts })
}

/// Poincare polynomial coefficients of `G/P_theta` by Schubert-cell
/// enumeration.
pub fn flag_poincare(rs: &RootSystem, theta: &[usize], cap: usize) -> Result<Vec<u64>> {
    Ok(flag_length_profile(rs, theta, cap)?.betti())
}

fn q_integer(d: usize) -> Vec<BigInt> {
    vec![BigInt::one(); d]
}

fn poly_mul(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Exact division by a polynomial with leading and constant coefficient 1.
fn poly_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut quot = vec![BigInt::zero(); num.len() + 1 - dl];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dl - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Poincare polynomial of `G/P_theta` from the quotient of the q-factorials
/// `prod [d_i]_q` of `W` and `W_theta`. No enumeration; valid for any type.
pub fn flag_poincare_product(rs: &RootSystem, theta: &[usize]) -> Result<Vec<u64>> {
    check_theta(rs, theta)?;
    let all: Vec<usize> = (0..rs.rank()).collect();
    let product = |exps: Vec<usize>| {
        exps.into_iter().fold(vec![BigInt::one()], |acc, e| poly_mul(&acc, &q_integer(e + 1)))
    };
    let full = product(rs.parabolic_exponents(&all));
    let sub = product(rs.parabolic_exponents(theta));
    let quotient = poly_div_monic(&full, &sub);
    let counts = quotient
        .iter()
        .map(|c| c.to_u64().ok_or_else(|| Error::Overflow(format!("Schubert cell count {c}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(LengthProfile { counts }.betti())
}

/// Hodge numbers `h[p][q]` of a compact complex manifold of dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiamond")]
pub struct HodgeDiamond {
    pub n: usize,
    pub h: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct RawDiamond {
    n: usize,
    h: Vec<Vec<u64>>,
}

impl TryFrom<RawDiamond> for HodgeDiamond {
    type Error = Error;

    fn try_from(raw: RawDiamond) -> Result<Self> {
        HodgeDiamond::new(raw.n, raw.h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondChecks {
    pub serre: bool,
    pub conjugation: bool,
    pub connected: bool,
    /// The mirror pair `(d, reflect(d))` fails one of the three checks:
    /// neither can be dropped as a candidate Kaehler diamond. The flag is
    /// invariant under reflection.
    pub vampire_flag: bool,
}

impl HodgeDiamond {
    pub fn new(n: usize, h: Vec<Vec<u64>>) -> Result<Self> {
        if h.len() != n + 1 || h.iter().any(|row| row.len() != n + 1) {
            return Err(Error::InvalidDiamond(format!("grid must be {0}x{0} for n = {n}", n + 1)));
        }
        Ok(HodgeDiamond { n, h })
    }

    pub fn zero(n: usize) -> Self {
        HodgeDiamond { n, h: vec![vec![0; n + 1]; n + 1] }
    }

    pub fn diagonal(entries: &[u64]) -> Self {
        let mut d = HodgeDiamond::zero(entries.len() - 1);
        for (p, &e) in entries.iter().enumerate() {
            d.h[p][p] = e;
        }
        d
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.h[p][q]
    }

    /// `h'[p][q] = h[n - p][q]`.
    pub fn mirror_reflect(&self) -> HodgeDiamond {
        let n = self.n;
        let h = (0..=n).map(|p| (0..=n).map(|q| self.h[n - p][q]).collect()).collect();
        HodgeDiamond { n, h }
    }

    pub fn is_serre_symmetric(&self) -> bool {
        let n = self.n;
        (0..=n).all(|p| (0..=n).all(|q| self.h[p][q] == self.h[n - p][n - q]))
    }

    pub fn is_conjugation_symmetric(&self) -> bool {
        (0..=self.n).all(|p| (0..=self.n).all(|q| self.h[p][q] == self.h[q][p]))
    }

    pub fn is_connected(&self) -> bool {
        self.h[0][0] == 1
    }

    fn passes_all(&self) -> bool {
        self.is_serre_symmetric() && self.is_conjugation_symmetric() && self.is_connected()
    }

    pub fn checks(&self) -> DiamondChecks {
        DiamondChecks {
            serre: self.is_serre_symmetric(),
            conjugation: self.is_conjugation_symmetric(),
            connected: self.is_connected(),
            vampire_flag: !(self.passes_all() && self.mirror_reflect().passes_all()),
        }
    }

    /// Betti numbers `b_k = sum_{p+q=k} h[p][q]`.
    pub fn betti(&self) -> Vec<u64> {
        let n = self.n;
        (0..=2 * n)
            .map(|k| (0..=n).filter(|&p| k >= p && k - p <= n).map(|p| self.h[p][k - p]).sum())
            .collect()
    }

    /// Pyramid layout with `h^{n,n}` on top, `h^{0,0}` at the bottom and
    /// `h^{n,0}` at the far left.
    pub fn pyramid(&self) -> String {
        let n = self.n;
        let width = self.h.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        let step = width + 1;
        let mut lines = Vec::with_capacity(2 * n + 1);
        for s in (0..=2 * n).rev() {
            let mut line = String::new();
            for p in (0..=n).rev() {
                if s < p || s - p > n {
                    continue;
                }
                let q = s - p;
                let col = (n + q - p) * step;
                while line.len() < col {
                    line.push(' ');
                }
                line.push_str(&format!("{:^width$}", self.h[p][q]));
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pyramid())
    }
}

pub fn mirror_reflect(d: &HodgeDiamond) -> HodgeDiamond {
    d.mirror_reflect()
}

pub fn diamond_checks(d: &HodgeDiamond) -> DiamondChecks {
    d.checks()
}

/// Hodge diamond of `G/P_theta`: Schubert classes are all of type `(p, p)`.
pub fn flag_diamond(rs: &RootSystem, theta: &[usize], cap: usize) -> Result<HodgeDiamond> {
    let profile = flag_length_profile(rs, theta, cap)?;
    Ok(HodgeDiamond::diagonal(&profile.counts))
}
