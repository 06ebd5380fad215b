//! Counting lattice points of `Δ^{m,n}_τ` through spanning trees.
//!
//! The zonotope is a translate of `Σ_{f ∈ 𝒱} [0, f]` for the multiset
//! `𝒱 = {m copies of e_i − e_j} ∪ {e_i}`. Bases drawn from `𝒱` correspond
//! to spanning trees of the multigraph `G(m,n)` on `{0, …, n}` with `m`
//! edges between any two of `1..=n` and one edge from `0` to each of them.
//! Contracting the blocks of a set partition counts points with a given
//! symmetry, and Möbius inversion over the partition lattice turns those
//! counts into a count of regular orbits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::orbits::SetPartition;

/// Largest `n` accepted by [`volume_by_bases`].
pub const MAX_BASES_N: usize = 6;

/// A square matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    /// Panics if `rows` is not square.
    pub fn new(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntegerMatrix { rows }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        IntegerMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    /// The submatrix with row and column `index` removed.
    pub fn minor(&self, index: usize) -> IntegerMatrix {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != index)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        IntegerMatrix { rows }
    }

    /// Determinant by Bareiss fraction-free elimination: every division is
    /// exact, so all intermediates stay integral. Pivot is the first
    /// nonzero entry at or below the diagonal.
    pub fn determinant(&self) -> BigInt {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    debug_assert!(v.is_multiple_of(&prev));
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return sign;
        }
        sign * &a[n - 1][n - 1]
    }
}

/// An undirected multigraph without loops on vertices `0..vertex_count()`.
/// Vertex 0 is the distinguished root and is never contracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    mult: Vec<Vec<u64>>,
}

impl MultiGraph {
    /// Symmetric multiplicities; diagonal entries (loops) are discarded.
    pub fn from_multiplicities(mut mult: Vec<Vec<u64>>) -> Result<Self> {
        let v = mult.len();
        if mult.iter().any(|r| r.len() != v) {
            return Err(Error::InvalidParameters(
                "multiplicity matrix must be square".into(),
            ));
        }
        if (0..v).any(|i| (0..i).any(|j| mult[i][j] != mult[j][i])) {
            return Err(Error::InvalidParameters(
                "multiplicity matrix must be symmetric".into(),
            ));
        }
        for (i, row) in mult.iter_mut().enumerate() {
            row[i] = 0;
        }
        Ok(MultiGraph { mult })
    }

    pub fn vertex_count(&self) -> usize {
        self.mult.len()
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.mult[i][j]
    }

    pub fn edge_count(&self) -> u64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, r)| r[i + 1..].iter().sum::<u64>())
            .sum()
    }

    /// Laplacian `D − A` (degree minus adjacency, with multiplicities).
    pub fn laplacian(&self) -> IntegerMatrix {
        let v = self.vertex_count();
        let rows = (0..v)
            .map(|i| {
                let degree: u64 = self.mult[i].iter().sum();
                (0..v)
                    .map(|j| {
                        if i == j {
                            BigInt::from(degree)
                        } else {
                            -BigInt::from(self.mult[i][j])
                        }
                    })
                    .collect()
            })
            .collect();
        IntegerMatrix::new(rows)
    }
}

/// `G(m,n)`: `m` edges between every pair in `1..=n`, one edge `0 — i`.
pub fn build_graph(m: u32, n: usize) -> MultiGraph {
    let mult = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| match (i, j) {
                    _ if i == j => 0,
                    (0, _) | (_, 0) => 1,
                    _ => u64::from(m),
                })
                .collect()
        })
        .collect();
    MultiGraph { mult }
}

/// `G/𝒮`: each block of `partition` (over vertices `1..=n`, stored
/// 0-based) becomes one vertex; parallel edges add up and edges inside a
/// block disappear. Block `b` becomes vertex `b + 1`.
pub fn contract(g: &MultiGraph, partition: &SetPartition) -> Result<MultiGraph> {
    let n = g.vertex_count() - 1;
    if partition.ground_size() != n {
        return Err(Error::InvalidPartition {
            n,
            reason: format!("partition is of [{}]", partition.ground_size()),
        });
    }
    let of = partition.block_of();
    let vertex = |i: usize| if i == 0 { 0 } else { of[i - 1] + 1 };
    let t = partition.len();
    let mut mult = vec![vec![0u64; t + 1]; t + 1];
    for i in 0..=n {
        for j in 0..=n {
            let (a, b) = (vertex(i), vertex(j));
            if a != b {
                mult[a][b] += g.mult[i][j];
            }
        }
    }
    Ok(MultiGraph { mult })
}

/// Number of spanning trees: the Laplacian cofactor at vertex 0, in
/// absolute value. Zero for a disconnected graph.
pub fn spanning_tree_count(g: &MultiGraph) -> BigInt {
    if g.vertex_count() == 0 {
        return BigInt::zero();
    }
    g.laplacian().minor(0).determinant().abs()
}

/// `n_1 ⋯ n_t (mn+1)^{t−1}` for block sizes `n_1, …, n_t`.
pub fn contracted_count_closed_form(m: u32, n: usize, partition: &SetPartition) -> BigInt {
    let sizes: BigInt = partition
        .block_sizes()
        .into_iter()
        .map(BigInt::from)
        .product();
    let base = BigInt::from(u64::from(m) * n as u64 + 1);
    sizes * base.pow(partition.len() as u32 - 1)
}

/// `μ(𝒮) = (−1)^{n−|𝒮|} ∏ (|S|−1)!`, the Möbius function from the bottom
/// of the partition lattice.
pub fn mobius(partition: &SetPartition) -> BigInt {
    let magnitude: BigInt = partition
        .block_sizes()
        .into_iter()
        .map(|s| factorial(s - 1))
        .product();
    if (partition.ground_size() - partition.len()).is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// All partitions of `[n]`.
pub fn enumerate_partitions(n: usize) -> Vec<SetPartition> {
    SetPartition::all(n)
}

/// `(1/n!) Σ_𝒮 μ(𝒮) |τ(G/𝒮)| / ∏|S|`, the number of regular `S_n`-orbits
/// among the lattice points of `Δ^{m,n}_τ` for admissible `τ`.
pub fn regular_orbit_count_mobius(m: u32, n: usize) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters(format!(
            "m and n must be positive (m = {m}, n = {n})"
        )));
    }
    let g = build_graph(m, n);
    let mut total = Rational::zero();
    for partition in enumerate_partitions(n) {
        let trees = spanning_tree_count(&contract(&g, &partition)?);
        let sizes: BigInt = partition
            .block_sizes()
            .into_iter()
            .map(BigInt::from)
            .product();
        total += Rational::new(mobius(&partition) * trees, sizes);
    }
    total /= Rational::from_integer(factorial(n));
    if !total.is_integer() {
        return Err(Error::NonIntegralCount(total.to_string()));
    }
    Ok(total.to_integer())
}

/// Left side of the composition identity:
/// `(−1)ⁿ Σ_{n_1+⋯+n_t=n} (−1)ᵗ (1/t!) X^{t−1} ∏ 1/n_i`, summed over
/// ordered compositions of `n`.
pub fn lemma_fun_lhs(n: usize, x: i64) -> Rational {
    let mut total = Rational::zero();
    if n == 0 {
        return total;
    }
    let x = BigInt::from(x);
    // bit i of `cuts` set means a part ends after position i + 1
    for cuts in 0u64..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut len = 1;
        for i in 0..n - 1 {
            if cuts >> i & 1 == 1 {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        let t = parts.len();
        let prod: BigInt = parts.iter().map(|&p| BigInt::from(p)).product();
        let term = Rational::new(x.pow(t as u32 - 1), factorial(t) * prod);
        if t % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    total
}

/// Right side of the composition identity: `(1/n!) ∏_{j=1}^{n−1} (X − j)`.
pub fn lemma_fun_rhs(n: usize, x: i64) -> Rational {
    let x = BigInt::from(x);
    let prod: BigInt = (1..n).map(|j| &x - BigInt::from(j)).product();
    Rational::new(prod, factorial(n))
}

/// `Σ |det B|` over all `n`-element subsets `B` of the multiset `𝒱` with
/// nonzero determinant. Subsets repeating a vector are singular, so the
/// sum runs over distinct vectors weighted by the product of their
/// multiplicities.
pub fn volume_by_bases(m: u32, n: usize) -> Result<BigInt> {
    if n > MAX_BASES_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_BASES_N,
        });
    }
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters(format!(
            "m and n must be positive (m = {m}, n = {n})"
        )));
    }
    let mut vectors: Vec<(Vec<i64>, u64)> = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        vectors.push((e, 1));
    }
    for i in 0..n {
        for j in 0..i {
            let mut d = vec![0; n];
            d[i] = 1;
            d[j] = -1;
            vectors.push((d, u64::from(m)));
        }
    }
    let mut total = BigInt::zero();
    let mut chosen = Vec::with_capacity(n);
    for_each_subset(vectors.len(), n, 0, &mut chosen, &mut |subset| {
        let rows: Vec<Vec<i64>> = subset.iter().map(|&k| vectors[k].0.clone()).collect();
        let det = IntegerMatrix::from_i64(&rows).determinant();
        if !det.is_zero() {
            let weight: u64 = subset.iter().map(|&k| vectors[k].1).product();
            total += det.abs() * BigInt::from(weight);
        }
    });
    Ok(total)
}

fn for_each_subset(
    len: usize,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == size {
        f(chosen);
        return;
    }
    for k in start..len {
        if len - k < size - chosen.len() {
            break;
        }
        chosen.push(k);
        for_each_subset(len, size, k + 1, chosen, f);
        chosen.pop();
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational};

    fn part(text: &str) -> SetPartition {
        text.parse().unwrap()
    }

    #[test]
    fn graph_examples() {
        let g = build_graph(2, 2);
        assert_eq!(
            (
                g.multiplicity(1, 2),
                g.multiplicity(0, 1),
                g.multiplicity(0, 2)
            ),
            (2, 1, 1)
        );
        let g = build_graph(1, 2);
        assert_eq!(
            (
                g.multiplicity(1, 2),
                g.multiplicity(0, 1),
                g.multiplicity(0, 2)
            ),
            (1, 1, 1)
        );
        let g = build_graph(3, 3);
        for i in 1..=3 {
            assert_eq!(g.multiplicity(0, i), 1);
            assert_eq!(g.multiplicity(i, i), 0);
            for j in (1..=3).filter(|&j| j != i) {
                assert_eq!(g.multiplicity(i, j), 3);
            }
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let l = build_graph(3, 4).laplacian();
        for i in 0..l.size() {
            let s: BigInt = (0..l.size()).map(|j| l.get(i, j).clone()).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn contraction_examples() {
        let g = build_graph(2, 2);
        let c = contract(&g, &part("1,2")).unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.multiplicity(0, 1), 2);
        assert_eq!(contract(&g, &SetPartition::singletons(2)).unwrap(), g);

        let c = contract(&build_graph(2, 3), &part("1,2|3")).unwrap();
        assert_eq!(
            (
                c.multiplicity(0, 1),
                c.multiplicity(0, 2),
                c.multiplicity(1, 2)
            ),
            (2, 1, 4)
        );
        assert!(contract(&g, &part("1,2,3")).is_err());
    }

    #[test]
    fn spanning_tree_examples() {
        assert_eq!(spanning_tree_count(&build_graph(2, 2)), BigInt::from(5));
        assert_eq!(spanning_tree_count(&build_graph(2, 3)), BigInt::from(49));
        let c = contract(&build_graph(2, 2), &part("1,2")).unwrap();
        assert_eq!(spanning_tree_count(&c), BigInt::from(2));
        let disconnected =
            MultiGraph::from_multiplicities(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]])
                .unwrap();
        assert_eq!(spanning_tree_count(&disconnected), BigInt::zero());
    }

    #[test]
    fn determinant_needs_row_swap() {
        let m = IntegerMatrix::from_i64(&[vec![0, 2, 1], vec![1, 0, 0], vec![3, 1, 4]]);
        // expansion along row 2: −1·(2·4 − 1·1) = −7
        assert_eq!(m.determinant(), BigInt::from(-7));
        let singular = IntegerMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.determinant(), BigInt::zero());
        assert_eq!(IntegerMatrix::new(vec![]).determinant(), BigInt::one());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            contracted_count_closed_form(2, 2, &part("1,2")),
            BigInt::from(2)
        );
        assert_eq!(
            contracted_count_closed_form(2, 3, &part("1|2|3")),
            BigInt::from(49)
        );
        assert_eq!(
            contracted_count_closed_form(2, 3, &part("1,2|3")),
            BigInt::from(14)
        );
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(&part("1|2")), BigInt::from(1));
        assert_eq!(mobius(&part("1,2")), BigInt::from(-1));
        assert_eq!(mobius(&part("1,2,3|4,5")), BigInt::from(-2));
    }

    #[test]
    fn mobius_sums_to_zero_over_nontrivial_intervals() {
        // Σ μ(0̂, 𝒮) over the interval [0̂, 1̂] vanishes for n ≥ 2
        for n in 2..=6 {
            let s: BigInt = enumerate_partitions(n).iter().map(mobius).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn regular_orbit_examples() {
        assert_eq!(regular_orbit_count_mobius(2, 2).unwrap(), BigInt::from(2));
        assert_eq!(regular_orbit_count_mobius(2, 3).unwrap(), BigInt::from(5));
        assert_eq!(regular_orbit_count_mobius(1, 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn lemma_fun_examples() {
        assert_eq!(lemma_fun_lhs(2, 7), int(3));
        assert_eq!(lemma_fun_lhs(1, 11), int(1));
        assert_eq!(lemma_fun_lhs(3, 7), int(5));
        assert_eq!(lemma_fun_rhs(3, 7), int(5));
        assert_eq!(lemma_fun_lhs(2, 2), rational(1, 2));
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume_by_bases(2, 2).unwrap(), BigInt::from(5));
        assert_eq!(volume_by_bases(1, 2).unwrap(), BigInt::from(3));
        assert_eq!(volume_by_bases(2, 3).unwrap(), BigInt::from(49));
        assert_eq!(
            volume_by_bases(1, 7),
            Err(Error::TooLarge {
                n: 7,
                max: MAX_BASES_N
            })
        );
    }
}
