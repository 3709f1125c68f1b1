//! Root systems, Weyl-group orbits and parabolic stabilizers, all in exact
//! arithmetic.
//!
//! Vectors of the Cartan subalgebra are written in the basis of simple roots,
//! with the subalgebra identified with its dual through the invariant form
//! `B[i][j] = d_i a[i][j]`. The symmetrizers `d_i` are the minimal positive
//! integers making `B` symmetric, so short roots have `(alpha, alpha) = 2`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::rational::{integer, sign, solve_exact, CartanVector, Rational};

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn to_vector(&self) -> CartanVector {
        CartanVector::from_integers(&self.0)
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan_matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    form_matrix: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    weyl_order: BigUint,
}

/// Result of a regularity test: when `regular` is false, `witness` is a
/// positive root vanishing on the vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    pub witness: Option<Root>,
}

/// The parabolic subgroup fixing a vector, read off its dominant conjugate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    /// Zero-based simple-root indices vanishing on the dominant conjugate.
    pub theta: Vec<usize>,
    pub stabilizer_order: BigUint,
    pub orbit_index: BigUint,
    pub dominant: CartanVector,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan_matrix = cartan_type.cartan_matrix();
        let symmetrizers = symmetrizers(&cartan_matrix);
        let n = cartan_matrix.len();
        let form_matrix = (0..n)
            .map(|i| (0..n).map(|j| symmetrizers[i] * cartan_matrix[i][j]).collect())
            .collect();
        let positive_roots = generate_positive_roots(&cartan_matrix);
        let mut rs = RootSystem {
            cartan_type,
            cartan_matrix,
            symmetrizers,
            form_matrix,
            positive_roots,
            weyl_order: BigUint::one(),
        };
        rs.weyl_order = rs.parabolic_order(&(0..n).collect::<Vec<_>>());
        rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_matrix.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn form_matrix(&self) -> &[Vec<i64>] {
        &self.form_matrix
    }

    /// Positive roots ordered by height, then with earlier simple roots first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn weyl_order(&self) -> &BigUint {
        &self.weyl_order
    }

    fn check_len(&self, v: &CartanVector) -> Result<()> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank(), found: v.len() })
        }
    }

    /// The invariant form `v^T B w`.
    pub fn pairing(&self, v: &CartanVector, w: &CartanVector) -> Result<Rational> {
        self.check_len(v)?;
        self.check_len(w)?;
        Ok(self.pairing_unchecked(v, w))
    }

    fn pairing_unchecked(&self, v: &CartanVector, w: &CartanVector) -> Rational {
        let mut acc = Rational::zero();
        for (i, vi) in v.coords().iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let bw = self.form_row_times(i, w);
            acc += vi * bw;
        }
        acc
    }

    fn form_row_times(&self, i: usize, w: &CartanVector) -> Rational {
        self.form_matrix[i]
            .iter()
            .zip(w.coords())
            .filter(|(b, _)| **b != 0)
            .map(|(&b, x)| x * integer(b))
            .sum()
    }

    /// `(beta, v)` for a root given by integer coordinates.
    pub fn root_pairing(&self, root: &Root, v: &CartanVector) -> Rational {
        root.0
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, &c)| self.form_row_times(i, v) * integer(c))
            .sum()
    }

    fn simple_pairing(&self, i: usize, v: &CartanVector) -> Rational {
        self.form_row_times(i, v)
    }

    /// `<alpha_i^vee, v> = sum_j a[i][j] v_j`.
    fn coroot_value(&self, i: usize, v: &CartanVector) -> Rational {
        self.cartan_matrix[i]
            .iter()
            .zip(v.coords())
            .filter(|(a, _)| **a != 0)
            .map(|(&a, x)| x * integer(a))
            .sum()
    }

    pub fn is_root(&self, root: &Root) -> bool {
        root.0.len() == self.rank()
            && (self.positive_roots.contains(root) || self.positive_roots.contains(&root.neg()))
    }

    /// Simple reflection `s_i`; only coordinate `i` changes.
    pub fn simple_reflection(&self, i: usize, v: &CartanVector) -> Result<CartanVector> {
        if i >= self.rank() {
            return Err(Error::SimpleIndexOutOfRange { index: i, rank: self.rank() });
        }
        self.check_len(v)?;
        Ok(self.simple_reflection_unchecked(i, v))
    }

    fn simple_reflection_unchecked(&self, i: usize, v: &CartanVector) -> CartanVector {
        let shift = self.coroot_value(i, v);
        let mut out = v.clone();
        out.0[i] -= shift;
        out
    }

    /// Reflection in the hyperplane orthogonal to `root`.
    pub fn reflect(&self, root: &Root, v: &CartanVector) -> Result<CartanVector> {
        self.check_len(v)?;
        if !self.is_root(root) {
            return Err(Error::NotARoot {
                cartan_type: self.cartan_type.to_string(),
                root: root.to_string(),
            });
        }
        let rv = root.to_vector();
        let num = self.pairing_unchecked(&rv, v) * integer(2);
        let den = self.pairing_unchecked(&rv, &rv);
        let coeff = num / den;
        Ok(CartanVector(
            v.coords().iter().zip(rv.coords()).map(|(x, r)| x - &coeff * r).collect(),
        ))
    }

    /// Converts fundamental-weight coordinates to simple-root coordinates.
    pub fn from_fundamental_weights(&self, weights: &CartanVector) -> Result<CartanVector> {
        self.check_len(weights)?;
        let a: Vec<Vec<Rational>> = self
            .cartan_matrix
            .iter()
            .map(|row| row.iter().map(|&x| integer(x)).collect())
            .collect();
        let solved = solve_exact(&a, weights.coords()).expect("Cartan matrices are invertible");
        Ok(CartanVector(solved))
    }

    /// Fundamental-weight coordinates `<alpha_i^vee, v>`.
    pub fn to_fundamental_weights(&self, v: &CartanVector) -> Result<CartanVector> {
        self.check_len(v)?;
        Ok(CartanVector((0..self.rank()).map(|i| self.coroot_value(i, v)).collect()))
    }

    /// The unique conjugate of `v` in the closed dominant chamber.
    pub fn dominant(&self, v: &CartanVector) -> Result<CartanVector> {
        self.check_len(v)?;
        let mut cur = v.clone();
        while let Some(i) = (0..self.rank()).find(|&i| sign(&self.coroot_value(i, &cur)) < 0) {
            cur = self.simple_reflection_unchecked(i, &cur);
        }
        Ok(cur)
    }

    /// Degrees-minus-one of the reflection subgroup generated by the simple
    /// roots in `theta`, read off the height distribution of its positive roots.
    pub fn parabolic_exponents(&self, theta: &[usize]) -> Vec<usize> {
        let mut by_height: Vec<usize> = Vec::new();
        for root in &self.positive_roots {
            let supported = root.0.iter().enumerate().all(|(i, &c)| c == 0 || theta.contains(&i));
            if supported {
                let h = root.height() as usize;
                if by_height.len() < h {
                    by_height.resize(h, 0);
                }
                by_height[h - 1] += 1;
            }
        }
        // The exponents form the partition conjugate to the height counts.
        let mut exponents = Vec::new();
        for (k, &count) in by_height.iter().enumerate() {
            let next = by_height.get(k + 1).copied().unwrap_or(0);
            for _ in 0..count.saturating_sub(next) {
                exponents.push(k + 1);
            }
        }
        exponents
    }

    pub fn exponents(&self) -> Vec<usize> {
        self.parabolic_exponents(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// `|W_theta|` as the product of the degrees of the parabolic subgroup.
    pub fn parabolic_order(&self, theta: &[usize]) -> BigUint {
        self.parabolic_exponents(theta)
            .into_iter()
            .fold(BigUint::one(), |acc, e| acc * BigUint::from(e + 1))
    }

    pub fn is_regular(&self, h: &CartanVector) -> Result<Regularity> {
        self.check_len(h)?;
        let witness = self
            .positive_roots
            .iter()
            .find(|root| self.root_pairing(root, h).is_zero())
            .cloned();
        Ok(Regularity { regular: witness.is_none(), witness })
    }

    pub fn stabilizer_data(&self, h0: &CartanVector) -> Result<ParabolicData> {
        let dominant = self.dominant(h0)?;
        let theta: Vec<usize> =
            (0..self.rank()).filter(|&i| self.simple_pairing(i, &dominant).is_zero()).collect();
        let stabilizer_order = self.parabolic_order(&theta);
        let (orbit_index, rem) = self.weyl_order.div_rem(&stabilizer_order);
        debug_assert!(rem.is_zero());
        Ok(ParabolicData { theta, stabilizer_order, orbit_index, dominant })
    }

    /// Number of roots of both signs that do not vanish on `h0`.
    pub fn nonvanishing_root_count(&self, h0: &CartanVector) -> Result<usize> {
        self.check_len(h0)?;
        Ok(2 * self.positive_roots.iter().filter(|r| !self.root_pairing(r, h0).is_zero()).count())
    }

    /// The Weyl orbit of `v` in lexicographic order of coordinates.
    ///
    /// Fails with [`Error::OrbitTooLarge`] before enumerating when the orbit
    /// index exceeds `cap`.
    pub fn weyl_orbit(&self, v: &CartanVector, cap: usize) -> Result<Vec<CartanVector>> {
        let data = self.stabilizer_data(v)?;
        if data.orbit_index > BigUint::from(cap) {
            return Err(Error::OrbitTooLarge { cap, orbit_index: data.orbit_index });
        }
        let mut seen: BTreeSet<CartanVector> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(v.clone());
        queue.push_back(v.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank() {
                if self.coroot_value(i, &cur).is_zero() {
                    continue;
                }
                let next = self.simple_reflection_unchecked(i, &cur);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitTooLarge { cap, orbit_index: data.orbit_index });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

fn symmetrizers(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && a[i][j] != 0 && d[j].is_none() {
                    // d_i a_ij = d_j a_ji
                    let di = d[i].clone().expect("visited");
                    d[j] = Some(di * integer(a[i][j]) / integer(a[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("all visited")).collect();
    let lcm = d.iter().fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<num_bigint::BigInt> = d.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = scaled.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    scaled
        .iter()
        .map(|x| {
            let v: i64 = (x / &g).try_into().expect("small symmetrizer");
            v
        })
        .collect()
}

fn generate_positive_roots(a: &[Vec<i64>]) -> Vec<Root> {
    let n = a.len();
    let mut seen: BTreeSet<Root> = BTreeSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 0..n {
        let r = Root::simple(n, i);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(root) = queue.pop_front() {
        for i in 0..n {
            let shift: i64 = (0..n).map(|j| a[i][j] * root.0[j]).sum();
            if shift == 0 {
                continue;
            }
            let mut next = root.clone();
            next.0[i] -= shift;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut positive: Vec<Root> = seen.into_iter().filter(Root::is_positive).collect();
    positive.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| y.0.cmp(&x.0)));
    positive
}
