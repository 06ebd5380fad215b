//! The permutation action of `S_n` on coordinates: set partitions of
//! `[n]`, stabilizers, and regular orbits.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::point::LatticePoint;

/// A partition of `{0, …, n−1}` into nonempty blocks.
///
/// Elements are stored 0-based. The textual form (`Display`/`FromStr`) is
/// 1-based with blocks joined by `|`, e.g. `1,3|2`. Blocks are sorted
/// internally and ordered by their minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidPartition { n, reason };
        let mut seen = vec![false; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(invalid("empty block".into()));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e >= n {
                    return Err(invalid(format!("element {} out of range", e + 1)));
                }
                if std::mem::replace(&mut seen[e], true) {
                    return Err(invalid(format!("element {} repeated", e + 1)));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(invalid(format!("element {} missing", missing + 1)));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// The bottom element `{{1}, …, {n}}`.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// The top element `{[n]}`.
    pub fn whole(n: usize) -> Self {
        let blocks = if n == 0 {
            vec![]
        } else {
            vec![(0..n).collect()]
        };
        SetPartition { n, blocks }
    }

    /// Build from a block label per element; equal labels share a block.
    pub fn from_labels<T: Ord>(labels: &[T]) -> Self {
        let mut groups: BTreeMap<&T, Vec<usize>> = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            groups.entry(l).or_default().push(i);
        }
        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition {
            n: labels.len(),
            blocks,
        }
    }

    /// All partitions of `[n]`, ordered by their restricted growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == rgs.len() {
                out.push(SetPartition::from_labels(&rgs[..]));
                return;
            }
            for label in 0..=max + 1 {
                rgs[i] = label;
                rec(i + 1, max.max(label), rgs, out);
            }
        }
        if n == 0 {
            return vec![SetPartition::whole(0)];
        }
        // element 0 always opens block 0
        rec(1, 0, &mut rgs, &mut out);
        out
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Index of the block containing each element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                of[e] = b;
            }
        }
        of
    }

    pub fn is_constant_on_blocks(&self, x: &[i64]) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| x[i] == x[b[0]]))
    }

    /// Refinement order: `self ≥ finer` iff every block of `finer` lies
    /// inside a block of `self`.
    pub fn coarsens(&self, finer: &SetPartition) -> bool {
        if self.n != finer.n {
            return false;
        }
        let of = self.block_of();
        finer
            .blocks
            .iter()
            .all(|b| b.iter().all(|&i| of[i] == of[b[0]]))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", e + 1)?;
            }
        }
        Ok(())
    }
}

/// Parses `1,2|3`. The ground set size is the number of listed elements.
impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for block in text.split('|') {
            let mut elems = Vec::new();
            for e in block.split(',') {
                let e: usize = e.trim().parse().map_err(|_| {
                    Error::Parse(format!("bad partition element {e:?} in {text:?}"))
                })?;
                if e == 0 {
                    return Err(Error::Parse(format!(
                        "partition elements are 1-based: {text:?}"
                    )));
                }
                elems.push(e - 1);
            }
            blocks.push(elems);
        }
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::from_blocks(n, blocks)
    }
}

/// Equivalence classes of indices with equal coordinates; the stabilizer of
/// `x` is the Young subgroup of this partition.
pub fn stabilizer_partition(x: &[i64]) -> SetPartition {
    SetPartition::from_labels(x)
}

/// Trivial stabilizer: all coordinates distinct.
pub fn is_regular(x: &[i64]) -> bool {
    let mut seen = HashSet::with_capacity(x.len());
    x.iter().all(|c| seen.insert(c))
}

/// Check that a set of points is closed under coordinate permutations.
///
/// Duplicates are ignored. Each multiset of coordinates must occur exactly
/// `n! / ∏ mult!` times, which is the size of its orbit.
pub fn is_symmetric(points: &[LatticePoint]) -> bool {
    let distinct: HashSet<&LatticePoint> = points.iter().collect();
    let mut orbit_sizes: BTreeMap<Vec<i64>, u128> = BTreeMap::new();
    for p in &distinct {
        let mut key = p.to_vec();
        key.sort_unstable();
        *orbit_sizes.entry(key).or_default() += 1;
    }
    orbit_sizes
        .iter()
        .all(|(sorted, &count)| count == orbit_size(sorted))
}

/// Number of distinct rearrangements of a sorted vector.
fn orbit_size(sorted: &[i64]) -> u128 {
    let mut size: u128 = (1..=sorted.len() as u128).product();
    for run in sorted.chunk_by(|a, b| a == b) {
        size /= (1..=run.len() as u128).product::<u128>();
    }
    size
}

/// One strictly decreasing representative per regular orbit, in
/// lexicographic order.
pub fn regular_orbit_reps(points: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    if !is_symmetric(points) {
        return Err(Error::NotSymmetric);
    }
    let mut reps: Vec<LatticePoint> = points
        .iter()
        .filter(|p| p.is_strictly_decreasing())
        .cloned()
        .collect();
    reps.sort();
    reps.dedup();
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(text: &str) -> SetPartition {
        text.parse().unwrap()
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(stabilizer_partition(&[3, 1, 3]), part("1,3|2"));
        assert_eq!(stabilizer_partition(&[1, 1, 1]), part("1,2,3"));
        assert_eq!(stabilizer_partition(&[4, 2, 0]), part("1|2|3"));
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular(&[2, 1]));
        assert!(!is_regular(&[1, 1]));
        assert!(is_regular(&[0, 2, 4]));
    }

    #[test]
    fn regular_reps_examples() {
        let pts: Vec<LatticePoint> = vec![
            [0, 2].into(),
            [1, 1].into(),
            [1, 2].into(),
            [2, 0].into(),
            [2, 1].into(),
        ];
        assert_eq!(
            regular_orbit_reps(&pts).unwrap(),
            vec![[2, 0].into(), [2, 1].into()]
        );
        assert_eq!(regular_orbit_reps(&[[1, 1].into()]).unwrap(), vec![]);
        assert_eq!(
            regular_orbit_reps(&[[1, 2].into()]),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn partition_text_round_trip() {
        let p = part("3,1|2");
        assert_eq!(p.to_string(), "1,3|2");
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1]]);
        assert!("1,2|2".parse::<SetPartition>().is_err());
        assert!("1,3".parse::<SetPartition>().is_err());
        assert!("0,1".parse::<SetPartition>().is_err());
        assert!("1,,2".parse::<SetPartition>().is_err());
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=7).map(|n| SetPartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203, 877]);
        let all = SetPartition::all(4);
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn refinement_order() {
        let bottom = SetPartition::singletons(3);
        let top = SetPartition::whole(3);
        let mid = part("1,2|3");
        assert!(top.coarsens(&mid) && mid.coarsens(&bottom) && top.coarsens(&bottom));
        assert!(!mid.coarsens(&top));
        assert!(!mid.coarsens(&part("1,3|2")));
        assert!(mid.coarsens(&mid));
    }

    #[test]
    fn symmetry_check() {
        let pts: Vec<LatticePoint> = vec![[1, 2, 2].into(), [2, 1, 2].into(), [2, 2, 1].into()];
        assert!(is_symmetric(&pts));
        assert!(!is_symmetric(&pts[..2]));
    }
}
