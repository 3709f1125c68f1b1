//! Cartan types of the simple Lie algebras and their Cartan matrices.
//!
//! Labels follow Bourbaki. The matrix convention is
//! `a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            // C2 is accepted and reported as isomorphic to B2.
            Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{}{rank}", series.letter())))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Exceptional isomorphisms worth flagging on output.
    pub fn isomorphism_note(&self) -> Option<&'static str> {
        match (self.series, self.rank) {
            (Series::C, 2) => Some("C2 is isomorphic to B2 (simple roots relabelled)"),
            _ => None,
        }
    }

    /// Every type of rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            for series in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
                if let Ok(t) = CartanType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let simple_edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A => {
                for i in 0..n.saturating_sub(1) {
                    simple_edge(&mut a, i, i + 1);
                }
            }
            Series::B => {
                for i in 0..n - 2 {
                    simple_edge(&mut a, i, i + 1);
                }
                // alpha_{n-1} long, alpha_n short
                a[n - 2][n - 1] = -1;
                a[n - 1][n - 2] = -2;
            }
            Series::C => {
                for i in 0..n - 2 {
                    simple_edge(&mut a, i, i + 1);
                }
                // alpha_{n-1} short, alpha_n long
                a[n - 2][n - 1] = -2;
                a[n - 1][n - 2] = -1;
            }
            Series::D => {
                for i in 0..n - 2 {
                    simple_edge(&mut a, i, i + 1);
                }
                simple_edge(&mut a, n - 3, n - 1);
            }
            Series::E => {
                simple_edge(&mut a, 0, 2);
                simple_edge(&mut a, 1, 3);
                for i in 2..n - 1 {
                    simple_edge(&mut a, i, i + 1);
                }
            }
            Series::F => {
                simple_edge(&mut a, 0, 1);
                a[1][2] = -1;
                a[2][1] = -2;
                simple_edge(&mut a, 2, 3);
            }
            Series::G => {
                // alpha_1 short, alpha_2 long
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        a
    }

    /// Order of the Weyl group from the classical closed formulas.
    pub fn classical_weyl_order(&self) -> BigUint {
        let n = self.rank as u64;
        let factorial = |m: u64| (1..=m).fold(BigUint::one(), |acc, k| acc * k);
        let two_pow = |m: u64| BigUint::one() << m;
        match self.series {
            Series::A => factorial(n + 1),
            Series::B | Series::C => two_pow(n) * factorial(n),
            Series::D => two_pow(n - 1) * factorial(n),
            Series::E => BigUint::from(match n {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Series::F => BigUint::from(1152u32),
            Series::G => BigUint::from(12u32),
        }
    }

    /// Number of positive roots from the classical closed formulas.
    pub fn classical_positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut chars = t.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        CartanType::new(series, rank).map_err(|_| bad())
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
