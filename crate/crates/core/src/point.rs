use std::fmt;
use std::ops::Deref;

/// An integer vector in `Zⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    /// `(c, c, …, c)` of length `n`.
    pub fn constant(n: usize, c: i64) -> Self {
        LatticePoint { coords: vec![c; n] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    /// Coordinate sum.
    pub fn sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// `self + c·ν` with `ν = (1, …, 1)`.
    pub fn shift(&self, c: i64) -> Self {
        LatticePoint::new(self.coords.iter().map(|x| x + c).collect())
    }

    pub fn add(&self, other: &LatticePoint) -> Self {
        debug_assert_eq!(self.len(), other.len());
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &LatticePoint) -> Self {
        debug_assert_eq!(self.len(), other.len());
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Apply a permutation: the result has `result[perm[i]] = self[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(self.len(), perm.len());
        let mut out = vec![0; self.len()];
        for (i, &p) in perm.iter().enumerate() {
            out[p] = self.coords[i];
        }
        LatticePoint::new(out)
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] < w[1])
    }
}

impl Deref for LatticePoint {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.coords
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(coords: [i64; N]) -> Self {
        LatticePoint {
            coords: coords.to_vec(),
        }
    }
}

/// `[a, b, c]`, the notation used for weights in printed tables.
impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}
