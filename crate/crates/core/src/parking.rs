//! Parking functions, Dyck paths, and the quotient `Zⁿ/L` with
//! `L = (mn+1)Zⁿ + Zν`.
//!
//! For admissible `τ` both the lattice points of `Δ^{m,n}_τ` and the
//! `(m,n)`-parking functions are complete systems of representatives for
//! `Zⁿ/L`, which gives an `S_n`-equivariant bijection between them:
//! match the two points with the same [`QuotientClass`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::zonotope::{Membership, ZonotopeSpec};

/// A class of `Zⁿ/L`, normalized so that the last entry is 0 and every
/// entry lies in `0..=mn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientClass {
    rep: Vec<i64>,
}

impl QuotientClass {
    pub fn rep(&self) -> &[i64] {
        &self.rep
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LatticePoint::new(self.rep.clone()).fmt(f)
    }
}

/// Subtract `x_n·ν`, then reduce every coordinate modulo `mn + 1`. The
/// ambient dimension is `x.len()`.
pub fn canonical_class(x: &[i64], m: u32) -> QuotientClass {
    let n = x.len() as i64;
    let modulus = i64::from(m) * n + 1;
    let last = x.last().copied().unwrap_or(0);
    QuotientClass {
        rep: x.iter().map(|c| (c - last).rem_euclid(modulus)).collect(),
    }
}

/// Total number of classes, `(mn+1)^{n−1}`.
pub fn class_count(m: u32, n: usize) -> BigInt {
    BigInt::from(u64::from(m) * n as u64 + 1).pow(n.saturating_sub(1) as u32)
}

/// Whether the weakly increasing rearrangement `b` of `a` satisfies
/// `b_j ≤ m(j−1)` (1-based `j`), with every entry nonnegative.
pub fn is_parking_function(a: &[i64], m: u32) -> bool {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(j, &v)| v >= 0 && v <= i64::from(m) * j as i64)
}

/// An `(m,n)`-parking function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    m: u32,
    values: Vec<i64>,
}

impl ParkingFunction {
    pub fn new(m: u32, values: Vec<i64>) -> Result<Self> {
        if values.is_empty() || !is_parking_function(&values, m) {
            return Err(Error::InvalidParkingFunction(
                LatticePoint::new(values).to_string(),
            ));
        }
        Ok(ParkingFunction { m, values })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn class(&self) -> QuotientClass {
        canonical_class(&self.values, self.m)
    }

    /// `σ·a` with `result[perm[i]] = a[i]`; parking functions are closed
    /// under this action.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let p = LatticePoint::new(self.values.clone()).permute(perm);
        ParkingFunction {
            m: self.m,
            values: p.into_coords(),
        }
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LatticePoint::new(self.values.clone()).fmt(f)
    }
}

/// An `(m,n)`-Dyck path: weakly increasing with `a_j ≤ (m−1)(j−1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    m: u32,
    values: Vec<i64>,
}

impl DyckPath {
    pub fn new(m: u32, values: Vec<i64>) -> Result<Self> {
        let weakly_increasing = values.windows(2).all(|w| w[0] <= w[1]);
        let bounded = values
            .iter()
            .enumerate()
            .all(|(j, &v)| v >= 0 && v <= (i64::from(m) - 1) * j as i64);
        if values.is_empty() || !weakly_increasing || !bounded {
            return Err(Error::InvalidParameters(format!(
                "{} is not an ({m},{})-Dyck path",
                LatticePoint::new(values.clone()),
                values.len()
            )));
        }
        Ok(DyckPath { m, values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LatticePoint::new(self.values.clone()).fmt(f)
    }
}

/// All `(m,n)`-parking functions in lexicographic order.
pub fn enumerate_parking_functions(m: u32, n: usize) -> Vec<ParkingFunction> {
    if n == 0 {
        return Vec::new();
    }
    let top = i64::from(m) * (n as i64 - 1);
    let mut out = Vec::new();
    let mut a = vec![0i64; n];
    loop {
        if is_parking_function(&a, m) {
            out.push(ParkingFunction {
                m,
                values: a.clone(),
            });
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if a[i] < top {
                a[i] += 1;
                a[i + 1..].fill(0);
                break;
            }
        }
    }
}

/// All `(m,n)`-Dyck paths in lexicographic order.
pub fn enumerate_dyck_paths(m: u32, n: usize) -> Vec<DyckPath> {
    fn rec(m: i64, j: usize, prefix: &mut Vec<i64>, n: usize, out: &mut Vec<Vec<i64>>) {
        if j == n {
            out.push(prefix.clone());
            return;
        }
        let from = prefix.last().copied().unwrap_or(0);
        for v in from..=(m - 1) * j as i64 {
            prefix.push(v);
            rec(m, j + 1, prefix, n, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    if n > 0 {
        rec(i64::from(m), 0, &mut Vec::with_capacity(n), n, &mut raw);
    }
    raw.into_iter()
        .map(|values| DyckPath { m, values })
        .collect()
}

/// The Fuss-Catalan number `A_n(m,1) = C(mn+1, n) / (mn+1)`.
pub fn fuss_catalan(m: u32, n: usize) -> BigInt {
    let total = BigInt::from(u64::from(m) * n as u64 + 1);
    binomial(total.clone(), BigInt::from(n)) / total
}

/// The same number via `C(mn, n) / ((m−1)n + 1)`.
pub fn fuss_catalan_alt(m: u32, n: usize) -> BigInt {
    let mn = BigInt::from(u64::from(m) * n as u64);
    let denom = BigInt::from((u64::from(m) - 1) * n as u64 + 1);
    binomial(mn, BigInt::from(n)) / denom
}

/// Subtract the staircase `(0, 1, …, n−1)` from a strictly increasing
/// parking function, giving the Dyck path of its regular orbit.
pub fn orbit_to_dyck(rep: &ParkingFunction) -> Result<DyckPath> {
    let values = rep.values();
    if !values.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::NotStrictlyIncreasing(rep.to_string()));
    }
    let shifted = values
        .iter()
        .enumerate()
        .map(|(j, &v)| v - j as i64)
        .collect();
    DyckPath::new(rep.m, shifted)
}

/// Class-indexed lookup tables between `Δ^{m,n}_τ ∩ Zⁿ` and the parking
/// functions, built once per zonotope.
#[derive(Clone, Debug)]
pub struct ParkingBijection {
    spec: ZonotopeSpec,
    to_parking: HashMap<QuotientClass, ParkingFunction>,
    to_lattice: HashMap<QuotientClass, LatticePoint>,
}

impl ParkingBijection {
    pub fn new(spec: &ZonotopeSpec) -> Result<Self> {
        if !spec.is_admissible() {
            return Err(Error::NotAdmissible {
                m: spec.m(),
                n: spec.n(),
                tau: spec.tau().to_string(),
            });
        }
        let m = spec.m();
        let to_lattice: HashMap<_, _> = spec
            .lattice_points()
            .into_iter()
            .map(|x| (canonical_class(&x, m), x))
            .collect();
        let to_parking: HashMap<_, _> = enumerate_parking_functions(m, spec.n())
            .into_iter()
            .map(|a| (a.class(), a))
            .collect();
        Ok(ParkingBijection {
            spec: spec.clone(),
            to_parking,
            to_lattice,
        })
    }

    pub fn spec(&self) -> &ZonotopeSpec {
        &self.spec
    }

    pub fn lattice_to_parking(&self, x: &LatticePoint) -> Result<ParkingFunction> {
        if self.spec.contains(x)? == Membership::Outside {
            return Err(Error::NotInZonotope(x.to_string()));
        }
        self.to_parking
            .get(&canonical_class(x, self.spec.m()))
            .cloned()
            .ok_or_else(|| Error::NotInZonotope(x.to_string()))
    }

    pub fn parking_to_lattice(&self, a: &ParkingFunction) -> Result<LatticePoint> {
        if a.m() != self.spec.m() || a.values().len() != self.spec.n() {
            return Err(Error::InvalidParkingFunction(a.to_string()));
        }
        self.to_lattice
            .get(&a.class())
            .cloned()
            .ok_or_else(|| Error::InvalidParkingFunction(a.to_string()))
    }

    /// All `(lattice point, parking function)` pairs, in lexicographic
    /// order of the lattice point.
    pub fn pairs(&self) -> Vec<(LatticePoint, ParkingFunction)> {
        let mut pairs: Vec<_> = self
            .to_lattice
            .iter()
            .filter_map(|(class, x)| Some((x.clone(), self.to_parking.get(class)?.clone())))
            .collect();
        pairs.sort();
        pairs
    }
}

/// One-shot form of [`ParkingBijection::lattice_to_parking`].
pub fn lattice_to_parking(x: &LatticePoint, spec: &ZonotopeSpec) -> Result<ParkingFunction> {
    ParkingBijection::new(spec)?.lattice_to_parking(x)
}

/// One-shot form of [`ParkingBijection::parking_to_lattice`].
pub fn parking_to_lattice(a: &ParkingFunction, spec: &ZonotopeSpec) -> Result<LatticePoint> {
    ParkingBijection::new(spec)?.parking_to_lattice(a)
}
