//! Jacobian-criterion oracle for `g = y` on `u y = v (x + 1 + 1/x)`.
//!
//! Points are handled in the Eisenstein field `Q(omega)`, which contains
//! every coordinate the criterion produces. In the chart `v = 1` the local
//! equation is `F = u y - (x + 1 + 1/x)`, in the chart `u = 1` it is
//! `F = y - v (x + 1 + 1/x)`. A point of `F = 0` is critical for `g` exactly
//! when every partial derivative of `F` other than `dF/dy` vanishes there.

#![allow(dead_code)]

use std::ops::{Add, Mul, Neg, Sub};

use lefschetz_core::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `a + b omega` with `omega^2 = -1 - omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eisenstein {
    pub a: Rational,
    pub b: Rational,
}

impl Eisenstein {
    pub fn rational(a: Rational) -> Self {
        Eisenstein { a, b: Rational::zero() }
    }
    pub fn int(a: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(a)))
    }
    pub fn omega() -> Self {
        Eisenstein { a: Rational::zero(), b: Rational::one() }
    }
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    pub fn inv(&self) -> Self {
        // (a + b w)(a + b w^2) = a^2 - a b + b^2, and w^2 = -1 - w.
        let norm = &self.a * &self.a - &self.a * &self.b + &self.b * &self.b;
        assert!(!norm.is_zero(), "inverse of zero");
        Eisenstein { a: (&self.a - &self.b) / &norm, b: -&self.b / &norm }
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein { a: -&self.a, b: -&self.b }
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: &Eisenstein) -> Eisenstein {
        let bd = &self.b * &o.b;
        Eisenstein { a: &self.a * &o.a - &bd, b: &self.a * &o.b + &self.b * &o.a - &bd }
    }
}

/// `x + 1 + 1/x`.
pub fn laurent(x: &Eisenstein) -> Eisenstein {
    &(x + &Eisenstein::int(1)) + &x.inv()
}

/// `d/dx (x + 1 + 1/x) = 1 - 1/x^2`.
pub fn laurent_derivative(x: &Eisenstein) -> Eisenstein {
    let inv = x.inv();
    &Eisenstein::int(1) - &(&inv * &inv)
}

/// Roots in `Q(omega)` of the numerators of the two partial derivatives
/// involving `x`: `x^2 - 1` and `x^2 + x + 1`. Each candidate is checked to
/// be a root before use.
fn candidate_xs() -> Vec<Eisenstein> {
    let w = Eisenstein::omega();
    let cands = vec![Eisenstein::int(1), Eisenstein::int(-1), w.clone(), &w * &w];
    for x in &cands {
        let sq = x * x;
        let r1 = &sq - &Eisenstein::int(1);
        let r2 = &(&sq + x) + &Eisenstein::int(1);
        assert!(r1.is_zero() || r2.is_zero());
    }
    cands
}

/// A critical point `(y, x, chart coordinate)`, `chart` is "v=1" or "u=1".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPoint {
    pub chart: &'static str,
    pub y: Eisenstein,
    pub x: Eisenstein,
    pub fiber_coordinate: Eisenstein,
}

/// All critical points of `g` on the threefold, from both charts.
pub fn critical_points() -> Vec<CriticalPoint> {
    let mut out = Vec::new();
    for x in candidate_xs() {
        // Chart v = 1: dF/du = y and dF/dx = -laurent'(x) must vanish, and
        // then F = -laurent(x) must vanish too.
        if laurent_derivative(&x).is_zero() && laurent(&x).is_zero() {
            out.push(CriticalPoint {
                chart: "v=1",
                y: Eisenstein::int(0),
                x: x.clone(),
                fiber_coordinate: Eisenstein::int(0),
            });
        }
        // Chart u = 1: dF/dv = -laurent(x) and dF/dx = -v laurent'(x).
        if laurent(&x).is_zero() {
            assert!(!laurent_derivative(&x).is_zero(), "v is forced to 0");
            let v = Eisenstein::int(0);
            // F = 0 solves for y.
            let y = &v * &laurent(&x);
            out.push(CriticalPoint { chart: "u=1", y, x: x.clone(), fiber_coordinate: v });
        }
    }
    out
}

pub fn critical_y_values() -> Vec<Eisenstein> {
    let mut ys: Vec<Eisenstein> = Vec::new();
    for p in critical_points() {
        if !ys.contains(&p.y) {
            ys.push(p.y);
        }
    }
    ys
}

/// For a nonzero rational level `c`, checks on sample points of the chart
/// `v = 1` that the fiber is the smooth graph `u = laurent(x) / c`, and that
/// `v = 0` has no points on it.
pub fn generic_fiber_is_smooth_graph(c: &Rational, samples: &[Eisenstein]) -> bool {
    assert!(!c.is_zero());
    let cc = Eisenstein::rational(c.clone());
    // v = 0 (chart u = 1): F = y = c != 0, so no points at infinity of P^1.
    let no_points_at_infinity = !cc.is_zero();
    samples.iter().all(|x| {
        let u = &laurent(x) * &cc.inv();
        let f = &(&u * &cc) - &laurent(x);
        // gradient along the fiber: (dF/dx, dF/du) = (-laurent'(x), c)
        let smooth = !cc.is_zero() || !laurent_derivative(x).is_zero();
        f.is_zero() && smooth
    }) && no_points_at_infinity
}

/// Components and nodes of the zero fiber from the factorisation
/// `F|_{y=0} = -v (x^2 + x + 1) / x` (chart `u = 1`).
pub fn zero_fiber_shape() -> (usize, usize, i64) {
    let w = Eisenstein::omega();
    let line_xs = [w.clone(), &w * &w];
    for x in &line_xs {
        assert!(laurent(x).is_zero());
    }
    // factors: v, (x - omega), (x - omega^2)
    let components = 1 + line_xs.len();
    // v = 0 meets each line once; the lines have different x, so are disjoint.
    let mut nodes = 0;
    for (i, xi) in line_xs.iter().enumerate() {
        nodes += 1; // {v = 0} and {x = xi} meet at (0, xi, [1:0])
        for xj in line_xs.iter().skip(i + 1) {
            if xi == xj {
                nodes += 1;
            }
        }
    }
    let chi = 0 + 2 * line_xs.len() as i64 - nodes as i64;
    (components, nodes, chi)
}
