//! Fibers of the potential `g = y` on the threefold
//! `X = { u y = v (x + 1 + 1/x) } in C x C* x P^1` with coordinates
//! `(y, x, [u:v])`.
//!
//! Over `y = c != 0` the fiber is the graph `[u:v] = [x^2 + x + 1 : c x]`
//! over `x in C*`. Over `y = 0` it splits as `{v = 0}` (a copy of `C*`) and
//! the two lines `{x = omega}`, `{x = omega^2}` where `omega` is a primitive
//! cube root of unity; each line meets `{v = 0}` once and the lines are
//! disjoint.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fukaya::lg2_category;
use crate::rational::{deserialize_rational, format_rational, parse_rational, serialize_rational, CartanVector, Rational};
use crate::root_system::RootSystem;
use crate::slf::{slf_report, DEFAULT_ORBIT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComplexRational {
    #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
    pub re: Rational,
    #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational { re, im: Rational::zero() }
    }

    pub fn zero() -> Self {
        ComplexRational::real(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Parses `re` or `re,im`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.split_once(',') {
            Some((re, im)) => Ok(ComplexRational::new(parse_rational(re)?, parse_rational(im)?)),
            None => Ok(ComplexRational::real(parse_rational(text)?)),
        }
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rational(&self.re))
        } else {
            write!(f, "{} + ({})i", format_rational(&self.re), format_rational(&self.im))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyTag {
    /// `C*`, Euler characteristic 0.
    AffineLineMinusPoint,
    /// `P^1`, Euler characteristic 2.
    ProjectiveLine,
}

impl TopologyTag {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            TopologyTag::AffineLineMinusPoint => 0,
            TopologyTag::ProjectiveLine => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberComponent {
    pub description: String,
    pub topology: TopologyTag,
    pub equations: Vec<String>,
}

/// A root of `x^2 + x + 1`, kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeRootOfUnity {
    pub minimal_polynomial: String,
    /// `omega = exp(2 pi i / 3)` or its square.
    pub root: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberNode {
    pub y: ComplexRational,
    pub x: CubeRootOfUnity,
    pub uv: String,
    /// Indices into the component list.
    pub components: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorFiberReport {
    pub level: ComplexRational,
    pub is_critical: bool,
    pub components: Vec<FiberComponent>,
    pub nodes: Vec<FiberNode>,
    pub euler_characteristic: i64,
}

impl MirrorFiberReport {
    /// `sum chi(component) - #nodes`.
    pub fn inclusion_exclusion_euler(&self) -> i64 {
        self.components.iter().map(|c| c.topology.euler_characteristic()).sum::<i64>() - self.nodes.len() as i64
    }

    pub fn summary(&self) -> String {
        let mut out = vec![format!(
            "level {}: {} ({} component(s), {} node(s), euler characteristic {})",
            self.level,
            if self.is_critical { "critical" } else { "regular" },
            self.components.len(),
            self.nodes.len(),
            self.euler_characteristic
        )];
        for (i, c) in self.components.iter().enumerate() {
            out.push(format!("  [{i}] {:?}: {} ({})", c.topology, c.description, c.equations.join(", ")));
        }
        for n in &self.nodes {
            out.push(format!(
                "  node y = {}, x = {} ({}), [u:v] = {} on components {:?}",
                n.y, n.x.root, n.x.minimal_polynomial, n.uv, n.components
            ));
        }
        out.join("\n")
    }
}

fn omega(label: &str) -> CubeRootOfUnity {
    CubeRootOfUnity { minimal_polynomial: "x^2 + x + 1".into(), root: label.into() }
}

pub fn classify_fiber(level: &ComplexRational) -> MirrorFiberReport {
    let mut report = if level.is_zero() {
        let components = vec![
            FiberComponent {
                description: "section at infinity of P^1 over x in C*".into(),
                topology: TopologyTag::AffineLineMinusPoint,
                equations: vec!["y = 0".into(), "v = 0".into()],
            },
            FiberComponent {
                description: "line over x = omega".into(),
                topology: TopologyTag::ProjectiveLine,
                equations: vec!["y = 0".into(), "x = omega".into()],
            },
            FiberComponent {
                description: "line over x = omega^2".into(),
                topology: TopologyTag::ProjectiveLine,
                equations: vec!["y = 0".into(), "x = omega^2".into()],
            },
        ];
        let nodes = ["omega", "omega^2"]
            .iter()
            .enumerate()
            .map(|(i, root)| FiberNode { y: ComplexRational::zero(), x: omega(root), uv: "[1:0]".into(), components: (0, i + 1) })
            .collect();
        MirrorFiberReport { level: level.clone(), is_critical: true, components, nodes, euler_characteristic: 0 }
    } else {
        let c = level.to_string();
        let components = vec![FiberComponent {
            description: format!("graph [u:v] = [x^2 + x + 1 : ({c}) x] over x in C*"),
            topology: TopologyTag::AffineLineMinusPoint,
            equations: vec![format!("y = {c}"), format!("({c}) u = v (x + 1 + 1/x)")],
        }];
        MirrorFiberReport { level: level.clone(), is_critical: false, components, nodes: Vec::new(), euler_characteristic: 0 }
    };
    report.euler_characteristic = report.inclusion_exclusion_euler();
    report
}

/// Levels of `g` over which the fiber is singular.
pub fn critical_levels() -> Vec<ComplexRational> {
    vec![ComplexRational::zero()]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyRow {
    pub side: String,
    pub quantity: String,
    pub value: u64,
    pub provenance: String,
}

/// Side-by-side rank-level data of the two-thimble model and its mirror.
/// Nothing here asserts an equivalence of categories.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub rows: Vec<ConsistencyRow>,
    pub equivalence_claimed: bool,
    pub note: String,
}

impl ConsistencyReport {
    pub fn value(&self, quantity: &str) -> Option<u64> {
        self.rows.iter().find(|r| r.quantity == quantity).map(|r| r.value)
    }

    pub fn table(&self) -> String {
        let w_side = self.rows.iter().map(|r| r.side.len()).max().unwrap_or(4).max(4);
        let w_q = self.rows.iter().map(|r| r.quantity.len()).max().unwrap_or(8).max(8);
        let mut out = vec![format!("{:<w_side$}  {:<w_q$}  {:>5}  provenance", "side", "quantity", "value")];
        for r in &self.rows {
            out.push(format!("{:<w_side$}  {:<w_q$}  {:>5}  {}", r.side, r.quantity, r.value, r.provenance));
        }
        out.push(self.note.clone());
        out.join("\n")
    }
}

pub fn mirror_consistency_report() -> ConsistencyReport {
    let cat = lg2_category();
    let a1 = RootSystem::new("A1".parse().expect("valid type"));
    let alpha = CartanVector::from_integers(&[1]);
    let report = slf_report(&a1, &alpha, &alpha, DEFAULT_ORBIT_CAP).expect("sl2 report");
    let distinct_values = {
        let mut v = report.critical_values.clone();
        v.sort();
        v.dedup();
        v.len() as u64
    };
    let critical_fiber = classify_fiber(&ComplexRational::zero());
    let row = |side: &str, quantity: &str, value: u64, provenance: &str| ConsistencyRow {
        side: side.into(),
        quantity: quantity.into(),
        value,
        provenance: provenance.into(),
    };
    ConsistencyReport {
        rows: vec![
            row("A", "thimbles", cat.len() as u64, "input: rank data of the two-thimble category"),
            row("A", "critical_values_of_f_H", distinct_values, "computed: slf_report(A1, H = H0 = alpha)"),
            row("B", "critical_levels_of_g", critical_levels().len() as u64, "computed: critical_levels()"),
            row("B", "nodes_of_critical_fiber", critical_fiber.nodes.len() as u64, "computed: classify_fiber(0)"),
            row(
                "B",
                "components_of_critical_fiber",
                critical_fiber.components.len() as u64,
                "computed: classify_fiber(0)",
            ),
        ],
        equivalence_claimed: false,
        note: "rank-level juxtaposition only; no equivalence of categories is verified".into(),
    }
}
