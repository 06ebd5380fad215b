//! Dominant weights `ξ` with `ξ + ρ̂ ∈ Δ^{m,n}_τ`, and their grouping by
//! color `c(ξ) = Σ ξ_i`.
//!
//! Shifting `τ` by an integer shifts every weight by a multiple of `ν`,
//! and `τ` only matters up to which admissible window it lies in, so the
//! tables are indexed by `t = −p/k` with `1 ≤ k ≤ n`, `0 ≤ p < k`.
//!
//! The default convention places `τ` just below `t + m(n−1)/2`; this is
//! the window whose weights match the published tables without any
//! `ν`-shift. [`TauConvention::Literal`] uses `τ = t + m(n−1) + ε`
//! instead, for comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{rational, EpsRational, Rational};
use crate::orbits::regular_orbit_reps;
use crate::point::LatticePoint;
use crate::zonotope::ZonotopeSpec;

/// The staircase `(n−1, n−2, …, 1, 0)`.
pub fn rho_hat(n: usize) -> LatticePoint {
    LatticePoint::new((0..n as i64).rev().collect())
}

/// The distinct values `−p/k` for `1 ≤ k ≤ n`, `0 ≤ p < k`, decreasing.
pub fn t_grid(n: usize) -> Vec<Rational> {
    let mut grid: Vec<Rational> = (1..=n as i64)
        .flat_map(|k| (0..k).map(move |p| rational(-p, k)))
        .collect();
    grid.sort_unstable_by(|a, b| b.cmp(a));
    grid.dedup();
    grid
}

pub fn in_grid(n: usize, t: &Rational) -> bool {
    !t.is_positive() && *t > rational(-1, 1) && *t.denom() <= BigInt::from(n)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TauConvention {
    /// `τ = t + m(n−1)/2 − ε`.
    #[default]
    Printed,
    /// `τ = t + m(n−1) + ε`.
    Literal,
}

impl FromStr for TauConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(TauConvention::Printed),
            "literal" => Ok(TauConvention::Literal),
            _ => Err(Error::Parse(format!("unknown tau convention {s:?}"))),
        }
    }
}

impl fmt::Display for TauConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TauConvention::Printed => "printed",
            TauConvention::Literal => "literal",
        })
    }
}

/// `τ` for grid value `t` under the default convention.
pub fn tau_for_t(m: u32, n: usize, t: &Rational) -> EpsRational {
    tau_for_t_with(m, n, t, TauConvention::Printed)
}

pub fn tau_for_t_with(m: u32, n: usize, t: &Rational, convention: TauConvention) -> EpsRational {
    let m = i64::from(m);
    let n = n as i64;
    match convention {
        TauConvention::Printed => EpsRational::below(t + rational(m * (n - 1), 2)),
        TauConvention::Literal => EpsRational::above(t + rational(m * (n - 1), 1)),
    }
}

/// `u = ⌈nτ⌉ − n(n−1)/2`; the colors of a table lie in `u..u+n`.
pub fn color_offset(n: usize, tau: &EpsRational) -> BigInt {
    let n = n as i64;
    tau.scale(n).ceil_int() - BigInt::from(n * (n - 1) / 2)
}

/// The dominant weights for one admissible `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingTable {
    pub m: u32,
    pub n: usize,
    /// The grid value the table was built from, if any.
    pub t: Option<Rational>,
    pub tau: EpsRational,
    /// Ordered by color ascending, then lexicographically descending.
    pub weights: Vec<LatticePoint>,
}

impl TiltingTable {
    /// Build the table for an arbitrary admissible `τ`.
    pub fn for_tau(m: u32, n: usize, tau: EpsRational) -> Result<Self> {
        let spec = ZonotopeSpec::new(m, n, tau)?;
        if !spec.is_admissible() {
            return Err(Error::NotAdmissible {
                m,
                n,
                tau: spec.tau().to_string(),
            });
        }
        let rho = rho_hat(n);
        let reps = regular_orbit_reps(&spec.lattice_points())?;
        let mut weights: Vec<LatticePoint> = reps.iter().map(|x| x.sub(&rho)).collect();
        weights.sort_by(|a, b| a.sum().cmp(&b.sum()).then_with(|| b.cmp(a)));
        Ok(TiltingTable {
            m,
            n,
            t: None,
            tau: spec.tau().clone(),
            weights,
        })
    }

    pub fn color_offset(&self) -> BigInt {
        color_offset(self.n, &self.tau)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// The table for grid value `t` under the default convention.
pub fn tilting_weights(m: u32, n: usize, t: &Rational) -> Result<TiltingTable> {
    tilting_weights_with(m, n, t, TauConvention::Printed)
}

pub fn tilting_weights_with(
    m: u32,
    n: usize,
    t: &Rational,
    convention: TauConvention,
) -> Result<TiltingTable> {
    if !in_grid(n, t) {
        return Err(Error::NotInGrid(t.to_string()));
    }
    let mut table = TiltingTable::for_tau(m, n, tau_for_t_with(m, n, t, convention))?;
    table.t = Some(t.clone());
    Ok(table)
}

/// Weights of one color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorBlock {
    pub color: i64,
    pub weights: Vec<LatticePoint>,
}

/// Group a table's weights by color, colors ascending; within a block the
/// table order is kept.
pub fn color_blocks(table: &TiltingTable) -> Vec<ColorBlock> {
    let mut by_color: BTreeMap<i64, Vec<LatticePoint>> = BTreeMap::new();
    for w in &table.weights {
        by_color.entry(w.sum()).or_default().push(w.clone());
    }
    by_color
        .into_iter()
        .map(|(color, weights)| ColorBlock { color, weights })
        .collect()
}

/// Colors of `blocks` relative to `u`: `Some(offsets)` if every color lies
/// in `u..u+n`.
pub fn color_offsets_within(blocks: &[ColorBlock], u: &BigInt, n: usize) -> Option<Vec<usize>> {
    blocks
        .iter()
        .map(|b| {
            let d = BigInt::from(b.color) - u;
            if d.is_negative() || d >= BigInt::from(n) {
                None
            } else {
                Some(usize::try_from(d).expect("small"))
            }
        })
        .collect()
}

/// Number of weights per color in `u..u+n`, zero where a color is absent.
pub fn color_histogram(table: &TiltingTable) -> Vec<(i64, usize)> {
    let u = table.color_offset();
    let start = i64::try_from(u).expect("colors fit in i64");
    let blocks = color_blocks(table);
    (0..table.n as i64)
        .map(|d| {
            let c = start + d;
            let count = blocks
                .iter()
                .find(|b| b.color == c)
                .map_or(0, |b| b.weights.len());
            (c, count)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn weights(m: u32, n: usize, t: Rational) -> Vec<Vec<i64>> {
        let mut w: Vec<Vec<i64>> = tilting_weights(m, n, &t)
            .unwrap()
            .weights
            .into_iter()
            .map(LatticePoint::into_coords)
            .collect();
        w.sort();
        w
    }

    #[test]
    fn rho_hat_examples() {
        assert_eq!(rho_hat(2), [1, 0].into());
        assert_eq!(rho_hat(4), [3, 2, 1, 0].into());
        assert_eq!(rho_hat(1), [0].into());
    }

    #[test]
    fn t_grid_examples() {
        assert_eq!(t_grid(2), vec![int(0), rational(-1, 2)]);
        assert_eq!(
            t_grid(3),
            vec![int(0), rational(-1, 3), rational(-1, 2), rational(-2, 3)]
        );
        assert_eq!(
            t_grid(4),
            vec![
                int(0),
                rational(-1, 4),
                rational(-1, 3),
                rational(-1, 2),
                rational(-2, 3),
                rational(-3, 4)
            ]
        );
        for n in 1..=6 {
            assert!(t_grid(n).iter().all(|t| in_grid(n, t)));
        }
        assert!(!in_grid(3, &rational(-1, 4)));
        assert!(!in_grid(3, &rational(1, 3)));
        assert!(!in_grid(3, &int(-1)));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_for_t(2, 2, &int(0)), "1-eps".parse().unwrap());
        assert_eq!(
            tau_for_t(2, 3, &rational(-1, 3)),
            "5/3-eps".parse().unwrap()
        );
        assert_eq!(tau_for_t(2, 4, &int(0)), "3-eps".parse().unwrap());
        assert_eq!(
            tau_for_t_with(2, 2, &int(0), TauConvention::Literal),
            "2+eps".parse().unwrap()
        );
    }

    #[test]
    fn small_table_examples() {
        assert_eq!(weights(2, 2, int(0)), vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(
            weights(2, 3, rational(-1, 2)),
            vec![
                vec![1, 1, 0],
                vec![1, 1, 1],
                vec![2, 0, 0],
                vec![2, 1, 0],
                vec![2, 1, 1]
            ]
        );
    }

    #[test]
    fn table_order_is_color_then_descending() {
        let table = tilting_weights(2, 3, &int(0)).unwrap();
        let w: Vec<Vec<i64>> = table.weights.iter().map(|w| w.to_vec()).collect();
        assert_eq!(
            w,
            vec![
                vec![2, 1, 0],
                vec![1, 1, 1],
                vec![2, 2, 0],
                vec![2, 1, 1],
                vec![2, 2, 1]
            ]
        );
    }

    #[test]
    fn color_examples() {
        let table = tilting_weights(2, 2, &int(0)).unwrap();
        assert_eq!(table.color_offset(), BigInt::from(1));
        let blocks = color_blocks(&table);
        assert_eq!(
            blocks,
            vec![
                ColorBlock {
                    color: 1,
                    weights: vec![[1, 0].into()]
                },
                ColorBlock {
                    color: 2,
                    weights: vec![[1, 1].into()]
                },
            ]
        );

        let table = tilting_weights(2, 4, &int(0)).unwrap();
        assert_eq!(table.color_offset(), BigInt::from(6));
        assert_eq!(
            color_histogram(&table),
            vec![(6, 4), (7, 4), (8, 4), (9, 2)]
        );

        let table = tilting_weights(2, 3, &int(0)).unwrap();
        assert_eq!(table.color_offset(), BigInt::from(3));
        let colors: Vec<i64> = color_blocks(&table).iter().map(|b| b.color).collect();
        assert_eq!(colors, vec![3, 4, 5]);
    }

    #[test]
    fn rejects_off_grid_and_inadmissible() {
        assert!(matches!(
            tilting_weights(2, 3, &rational(-1, 4)),
            Err(Error::NotInGrid(_))
        ));
        assert!(matches!(
            TiltingTable::for_tau(2, 2, "3/2".parse().unwrap()),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn color_offsets_check() {
        let table = tilting_weights(3, 3, &rational(-2, 3)).unwrap();
        let blocks = color_blocks(&table);
        let offsets = color_offsets_within(&blocks, &table.color_offset(), 3).unwrap();
        assert_eq!(offsets, vec![0, 1, 2]);
        assert!(color_offsets_within(&blocks, &(table.color_offset() + 1), 3).is_none());
        assert_eq!(table.len(), 12);
    }
}
