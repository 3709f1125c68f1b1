//! Rank-level model of the directed category of vanishing cycles.
//!
//! Objects are thimbles `L_0..L_r` ordered by increasing critical value.
//! `Hom(L_i, L_j)` is a graded free module recorded by its `(degree, rank)`
//! pairs: the identity in degree 0 for `i = j`, supplied intersection data
//! for `i < j`, and zero for `i > j`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{opt_rational, CartanVector, Rational};
use crate::slf::{FibrationStatus, SlfReport};

/// Graded ranks `(degree, rank)` of one Hom complex, sorted by degree.
pub type GradedRanks = Vec<(i64, u64)>;

/// Supplied Hom data keyed by `(source, target)` with `source < target`.
pub type IntersectionData = BTreeMap<(usize, usize), GradedRanks>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thimble {
    pub label: String,
    #[serde(default)]
    pub critical_point: Option<CartanVector>,
    #[serde(default, with = "opt_rational")]
    pub critical_value: Option<Rational>,
}

impl Thimble {
    fn bare(index: usize) -> Self {
        Thimble { label: format!("L{index}"), critical_point: None, critical_value: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCategory")]
pub struct DirectedCategory {
    pub objects: Vec<Thimble>,
    /// `hom_ranks[i][j]` for every ordered pair.
    pub hom_ranks: Vec<Vec<GradedRanks>>,
    /// Higher products vanish except compositions with identities. Holds
    /// whenever no two non-identity morphisms are composable, with the
    /// supplied ranks read as those of a minimal model (zero differential).
    pub products_all_vanish_except_identity: bool,
}

#[derive(Deserialize)]
struct RawCategory {
    objects: Vec<Thimble>,
    hom_ranks: Vec<Vec<GradedRanks>>,
    products_all_vanish_except_identity: bool,
}

impl TryFrom<RawCategory> for DirectedCategory {
    type Error = Error;

    fn try_from(raw: RawCategory) -> Result<Self> {
        let n = raw.objects.len();
        if raw.hom_ranks.len() != n || raw.hom_ranks.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidHomData(format!("hom_ranks must be {n}x{n}")));
        }
        let mut data = IntersectionData::new();
        for (i, row) in raw.hom_ranks.iter().enumerate() {
            for (j, ranks) in row.iter().enumerate() {
                if i < j {
                    data.insert((i, j), ranks.clone());
                } else if i == j && normalize(ranks) != vec![(0, 1)] {
                    return Err(Error::InvalidHomData(format!("End(L{i}) must be rank 1 in degree 0")));
                } else if i > j && !normalize(ranks).is_empty() {
                    return Err(Error::InvalidHomData(format!("Hom(L{i}, L{j}) must vanish")));
                }
            }
        }
        let mut cat = build_directed_category(n, &data)?;
        if raw.products_all_vanish_except_identity != cat.products_all_vanish_except_identity {
            return Err(Error::InvalidHomData("products flag disagrees with the Hom ranks".into()));
        }
        cat.objects = raw.objects;
        Ok(cat)
    }
}

fn normalize(ranks: &[(i64, u64)]) -> GradedRanks {
    let mut merged: BTreeMap<i64, u64> = BTreeMap::new();
    for &(deg, rank) in ranks {
        *merged.entry(deg).or_default() += rank;
    }
    merged.into_iter().filter(|&(_, r)| r > 0).collect()
}

pub fn build_directed_category(num_objects: usize, data: &IntersectionData) -> Result<DirectedCategory> {
    if num_objects == 0 {
        return Err(Error::InvalidHomData("a category needs at least one object".into()));
    }
    let mut hom_ranks = vec![vec![GradedRanks::new(); num_objects]; num_objects];
    for (i, row) in hom_ranks.iter_mut().enumerate() {
        row[i] = vec![(0, 1)];
    }
    for (&(i, j), ranks) in data {
        if i >= j {
            return Err(Error::InvalidHomData(format!(
                "data supplied for ({i}, {j}); only source < target is allowed"
            )));
        }
        if j >= num_objects {
            return Err(Error::ObjectOutOfRange { index: j, count: num_objects });
        }
        hom_ranks[i][j] = normalize(ranks);
    }
    let nonzero = |i: usize, j: usize| !hom_ranks[i][j].is_empty();
    let composable = (0..num_objects).any(|j| {
        (0..j).any(|i| nonzero(i, j)) && (j + 1..num_objects).any(|k| nonzero(j, k))
    });
    Ok(DirectedCategory {
        objects: (0..num_objects).map(Thimble::bare).collect(),
        hom_ranks,
        products_all_vanish_except_identity: !composable,
    })
}

/// The two-thimble category with `Hom(L_0, L_1) = Z + Z[-1]`.
pub fn lg2_category() -> DirectedCategory {
    let mut data = IntersectionData::new();
    data.insert((0, 1), vec![(0, 1), (1, 1)]);
    build_directed_category(2, &data).expect("fixed data is valid")
}

impl DirectedCategory {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::ObjectOutOfRange { index: i, count: self.len() })
        }
    }

    pub fn hom(&self, i: usize, j: usize) -> Result<&GradedRanks> {
        self.check(i)?;
        self.check(j)?;
        Ok(&self.hom_ranks[i][j])
    }

    pub fn total_rank(&self, i: usize, j: usize) -> Result<u64> {
        Ok(self.hom(i, j)?.iter().map(|&(_, r)| r).sum())
    }

    /// Alternating rank sum of the Hom complex.
    pub fn hom_euler(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self
            .hom(i, j)?
            .iter()
            .map(|&(deg, rank)| if deg.rem_euclid(2) == 0 { rank as i64 } else { -(rank as i64) })
            .sum())
    }

    /// Equality of the categorical data, ignoring object labels and metadata.
    pub fn same_structure(&self, other: &DirectedCategory) -> bool {
        self.hom_ranks == other.hom_ranks
            && self.products_all_vanish_except_identity == other.products_all_vanish_except_identity
    }
}

pub fn hom_euler(cat: &DirectedCategory, i: usize, j: usize) -> Result<i64> {
    cat.hom_euler(i, j)
}

/// One thimble per critical point, ordered by increasing critical value.
pub fn category_from_slf(report: &SlfReport, data: &IntersectionData) -> Result<DirectedCategory> {
    if !report.critical_points_enumerated {
        return Err(Error::ObjectOrderUndefined("critical values were not enumerated".into()));
    }
    if !report.value_collisions.is_empty() {
        return Err(Error::ObjectOrderUndefined(format!(
            "critical values collide in groups {:?}",
            report.value_collisions
        )));
    }
    if report.status != FibrationStatus::Lefschetz {
        return Err(Error::ObjectOrderUndefined("H is not regular".into()));
    }
    let mut order: Vec<usize> = (0..report.critical_points.len()).collect();
    order.sort_by(|&a, &b| report.critical_values[a].cmp(&report.critical_values[b]));
    let mut cat = build_directed_category(order.len(), data)?;
    for (slot, &idx) in order.iter().enumerate() {
        cat.objects[slot].critical_point = Some(report.critical_points[idx].clone());
        cat.objects[slot].critical_value = Some(report.critical_values[idx].clone());
    }
    Ok(cat)
}
