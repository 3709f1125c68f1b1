//! Brute-force Weyl group: every element as an integer matrix acting on
//! simple-root coordinates, reached by breadth-first search over words in
//! the simple reflections. The search depth of an element is its length.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use lefschetz_core::{CartanVector, Rational};
use num_bigint::BigInt;

pub type Matrix = Vec<Vec<i64>>;

pub struct WordGroup {
    pub rank: usize,
    /// element -> length
    pub elements: HashMap<Matrix, usize>,
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mul(x: &Matrix, y: &Matrix) -> Matrix {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum()).collect())
        .collect()
}

/// `s_i(v)_i = v_i - sum_j a[i][j] v_j`, other coordinates fixed.
pub fn simple_reflection_matrix(cartan: &[Vec<i64>], i: usize) -> Matrix {
    let n = cartan.len();
    let mut m = identity(n);
    for j in 0..n {
        m[i][j] -= cartan[i][j];
    }
    m
}

impl WordGroup {
    pub fn new(cartan: &[Vec<i64>]) -> Self {
        let n = cartan.len();
        let gens: Vec<Matrix> = (0..n).map(|i| simple_reflection_matrix(cartan, i)).collect();
        let mut elements = HashMap::new();
        let mut queue = VecDeque::new();
        elements.insert(identity(n), 0usize);
        queue.push_back(identity(n));
        while let Some(w) = queue.pop_front() {
            let len = elements[&w];
            for g in &gens {
                let next = mul(&w, g);
                if !elements.contains_key(&next) {
                    elements.insert(next.clone(), len + 1);
                    queue.push_back(next);
                }
            }
        }
        WordGroup { rank: n, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Counts of minimal coset representatives of `W / W_theta` by length:
    /// elements sending every simple root in `theta` to a positive root.
    pub fn minimal_coset_profile(&self, theta: &[usize]) -> Vec<u64> {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for (w, &len) in &self.elements {
            let keeps_positive = theta.iter().all(|&i| (0..self.rank).all(|r| w[r][i] >= 0));
            if keeps_positive {
                *counts.entry(len).or_default() += 1;
            }
        }
        let max = counts.keys().copied().max().unwrap_or(0);
        (0..=max).map(|l| counts.get(&l).copied().unwrap_or(0)).collect()
    }

    pub fn apply(w: &Matrix, v: &CartanVector) -> CartanVector {
        CartanVector(
            w.iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coords())
                        .map(|(&a, x)| x * Rational::from_integer(BigInt::from(a)))
                        .sum()
                })
                .collect(),
        )
    }

    pub fn orbit(&self, v: &CartanVector) -> BTreeSet<CartanVector> {
        self.elements.keys().map(|w| Self::apply(w, v)).collect()
    }

    pub fn stabilizer_order(&self, v: &CartanVector) -> usize {
        self.elements.keys().filter(|w| &Self::apply(w, v) == v).count()
    }

    /// All roots: images of simple roots under every element.
    pub fn roots(&self) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        for w in self.elements.keys() {
            for i in 0..self.rank {
                out.insert((0..self.rank).map(|r| w[r][i]).collect());
            }
        }
        out
    }
}
