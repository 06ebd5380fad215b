//! The shifted zonotope `Δ^{m,n}_τ`.
//!
//! `Δ^{m,n}` is the Minkowski sum of the segments `[0, e_i]` for
//! `1 ≤ i ≤ n` and `[0, (m/2)(e_i − e_j)]` for `i ≠ j`, and
//! `Δ^{m,n}_τ = Δ^{m,n} + τ·ν` with `ν = (1, …, 1)`. Its facets have
//! normals `±w·λ_k` with `λ_k = (1^k, 0^{n−k})` and `w` a permutation, so
//! a point lies in the zonotope iff for every `k` the sum of its `k`
//! largest coordinates is at most [`SupportBounds::upper`] and the sum of
//! its `k` smallest is at least [`SupportBounds::lower`].

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{rational, EpsRational, Rational};
use crate::orbits::SetPartition;
use crate::point::LatticePoint;

/// Coordinates are kept well inside `i64` so that sums of up to `n`
/// coordinates never overflow.
const COORD_LIMIT: i64 = 1 << 40;

/// The parameters `(m, n, τ)` of `Δ^{m,n}_τ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZonotopeSpec {
    m: u32,
    n: usize,
    tau: EpsRational,
}

impl ZonotopeSpec {
    pub fn new(m: u32, n: usize, tau: EpsRational) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "m and n must be positive (m = {m}, n = {n})"
            )));
        }
        let spec = ZonotopeSpec { m, n, tau };
        let b = spec.support_bounds(1)?;
        let lo = b.lower.floor_int();
        let hi = b.upper.ceil_int();
        let limit = BigInt::from(COORD_LIMIT);
        if lo < -limit.clone() || hi > limit {
            return Err(Error::InvalidParameters(format!(
                "tau = {} puts coordinates outside ±2^40",
                spec.tau
            )));
        }
        Ok(spec)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> &EpsRational {
        &self.tau
    }

    /// `mn + 1`, the index-defining modulus of the tiling lattice.
    pub fn modulus(&self) -> i64 {
        i64::from(self.m) * self.n as i64 + 1
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(self.m, self.n, &self.tau)
    }

    /// The same zonotope translated by `shift·ν`.
    pub fn translated(&self, shift: i64) -> Result<Self> {
        ZonotopeSpec::new(self.m, self.n, &self.tau + &rational(shift, 1))
    }

    /// Supporting hyperplane values for the facet pair `±w·λ_k`.
    pub fn support_bounds(&self, k: usize) -> Result<SupportBounds> {
        if k == 0 || k > self.n {
            return Err(Error::KOutOfRange { k, n: self.n });
        }
        let (m, n, k) = (i64::from(self.m), self.n as i64, k as i64);
        let tau_k = self.tau.scale(k);
        let half_width = rational(m * k * (n - k), 2);
        Ok(SupportBounds {
            k: k as usize,
            upper: &(&tau_k + &half_width) + &rational(k, 1),
            lower: &tau_k - &half_width,
        })
    }

    /// Classify `x` as interior, boundary or outside.
    pub fn contains(&self, x: &LatticePoint) -> Result<Membership> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(Thresholds::new(self).classify(x))
    }

    /// All integer points of the closed zonotope, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        enumerate_lattice_points(self)
    }
}

/// The values `⟨w·λ_k, f⁺⟩ = τk + mk(n−k)/2 + k` and
/// `⟨w·λ_k, f⁻⟩ = τk − mk(n−k)/2` of the two supporting hyperplanes with
/// normal `w·λ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportBounds {
    pub k: usize,
    pub upper: EpsRational,
    pub lower: EpsRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

impl Membership {
    pub fn is_inside(self) -> bool {
        self != Membership::Outside
    }
}

/// `τ` is admissible iff `τ − m(n−1)/2` is not a rational number with
/// denominator at most `n`. A value with a nonzero ε-part is never rational.
pub fn is_admissible(m: u32, n: usize, tau: &EpsRational) -> bool {
    if !tau.is_exact() {
        return true;
    }
    let offset: Rational = tau.base() - rational(i64::from(m) * (n as i64 - 1), 2);
    *offset.denom() > BigInt::from(n)
}

/// Integer forms of the `2n` support bounds. Integer sums are compared to
/// `floor`/`ceil` of each bound; tightness is only possible when a bound is
/// itself an integer.
struct Thresholds {
    top_max: Vec<i64>,
    top_tight: Vec<bool>,
    bottom_min: Vec<i64>,
    bottom_tight: Vec<bool>,
}

impl Thresholds {
    fn new(spec: &ZonotopeSpec) -> Self {
        let n = spec.n;
        let mut t = Thresholds {
            top_max: Vec::with_capacity(n),
            top_tight: Vec::with_capacity(n),
            bottom_min: Vec::with_capacity(n),
            bottom_tight: Vec::with_capacity(n),
        };
        for k in 1..=n {
            let b = spec.support_bounds(k).expect("k in range");
            t.top_max.push(small(b.upper.floor_int()));
            t.top_tight.push(b.upper.is_integer());
            t.bottom_min.push(small(b.lower.ceil_int()));
            t.bottom_tight.push(b.lower.is_integer());
        }
        t
    }

    fn classify(&self, x: &[i64]) -> Membership {
        let mut sorted = x.to_vec();
        sorted.sort_unstable();
        let n = sorted.len();
        let mut boundary = false;
        let (mut top, mut bottom) = (0i64, 0i64);
        for k in 0..n {
            top += sorted[n - 1 - k];
            bottom += sorted[k];
            if top > self.top_max[k] || bottom < self.bottom_min[k] {
                return Membership::Outside;
            }
            boundary |= (self.top_tight[k] && top == self.top_max[k])
                || (self.bottom_tight[k] && bottom == self.bottom_min[k]);
        }
        if boundary {
            Membership::Boundary
        } else {
            Membership::Interior
        }
    }
}

fn small(x: BigInt) -> i64 {
    x.to_i64()
        .expect("bounds are range-checked in ZonotopeSpec::new")
}

/// Per-coordinate scan window `[⌊lower(1)⌋, ⌈upper(1)⌉]`.
pub fn scan_window(spec: &ZonotopeSpec) -> (i64, i64) {
    let b = spec.support_bounds(1).expect("n >= 1");
    (small(b.lower.floor_int()), small(b.upper.ceil_int()))
}

/// Every integer point with status other than [`Membership::Outside`], in
/// lexicographic order.
pub fn enumerate_lattice_points(spec: &ZonotopeSpec) -> Vec<LatticePoint> {
    enumerate_with_status(spec)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

/// As [`enumerate_lattice_points`], keeping each point's membership status.
pub fn enumerate_with_status(spec: &ZonotopeSpec) -> Vec<(LatticePoint, Membership)> {
    let n = spec.n;
    let thresholds = Thresholds::new(spec);
    let (lo, hi) = scan_window(spec);
    // The k = n constraint pins the coordinate sum, which bounds the last
    // coordinate once the others are fixed.
    let sum_min = thresholds.bottom_min[n - 1];
    let sum_max = thresholds.top_max[n - 1];

    let mut out = Vec::new();
    let mut x = vec![lo; n];
    loop {
        let prefix: i64 = x[..n - 1].iter().sum();
        let last_lo = lo.max(sum_min - prefix);
        let last_hi = hi.min(sum_max - prefix);
        for last in last_lo..=last_hi {
            x[n - 1] = last;
            let status = thresholds.classify(&x);
            if status.is_inside() {
                out.push((LatticePoint::new(x.clone()), status));
            }
        }
        // advance the odometer on the first n − 1 coordinates
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < hi {
                x[i] += 1;
                for y in &mut x[i + 1..n - 1] {
                    *y = lo;
                }
                break;
            }
        }
    }
}

/// Number of lattice points of `Δ^{m,n}_τ` whose coordinates are constant
/// on every block of `partition`.
pub fn count_invariant_points(spec: &ZonotopeSpec, partition: &SetPartition) -> Result<usize> {
    if partition.ground_size() != spec.n {
        return Err(Error::InvalidPartition {
            n: spec.n,
            reason: format!("partition is of [{}]", partition.ground_size()),
        });
    }
    Ok(enumerate_lattice_points(spec)
        .iter()
        .filter(|x| partition.is_constant_on_blocks(x))
        .count())
}
