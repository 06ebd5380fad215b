//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use zonotope_parking::exact::{parse_rational, rational, Rational};
use zonotope_parking::{EpsRational, LatticePoint, Membership};

/// One row of the golden weight tables.
pub struct GoldenTable {
    pub m: u32,
    pub n: usize,
    pub t: Rational,
    pub weights: BTreeSet<Vec<i64>>,
}

pub fn golden_tables() -> Vec<GoldenTable> {
    include_str!("../data/weight_tables.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let mut fields = line.split_whitespace();
            let m = fields.next().unwrap().parse().unwrap();
            let n = fields.next().unwrap().parse().unwrap();
            let t = parse_rational(fields.next().unwrap()).unwrap();
            let weights = fields
                .map(|w| w.split(',').map(|c| c.parse().unwrap()).collect())
                .collect();
            GoldenTable { m, n, t, weights }
        })
        .collect()
}

/// Leibniz expansion over all permutations.
pub fn leibniz_det(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::from(0);
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let term: BigInt = (0..n).map(|i| BigInt::from(a[i][p[i]])).product();
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    total
}

pub fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut |p| out.push(p.to_vec()));
    out
}

/// Membership by explicit facet inequalities. Facet normals are the
/// primitive vectors orthogonal to `n − 1` independent edge directions
/// `e_i`, `e_i − e_j`; the support value of each is summed over all
/// generators.
pub struct FacetOracle {
    m: i64,
    tau: EpsRational,
    normals: Vec<Vec<i64>>,
}

impl FacetOracle {
    pub fn new(m: u32, n: usize, tau: EpsRational) -> Self {
        let mut dirs: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let mut d = vec![0; n];
                d[i] = 1;
                d[j] = -1;
                dirs.push(d);
            }
        }
        let mut normals = BTreeSet::new();
        choose(dirs.len(), n - 1, &mut |idx| {
            let rows: Vec<Vec<i64>> = idx.iter().map(|&i| dirs[i].clone()).collect();
            let c = cross(&rows, n);
            if c.iter().any(|&v| v != 0) {
                let c = primitive(c);
                normals.insert(c.iter().map(|v| -v).collect::<Vec<_>>());
                normals.insert(c);
            }
        });
        FacetOracle {
            m: i64::from(m),
            tau,
            normals: normals.into_iter().collect(),
        }
    }

    pub fn facet_count(&self) -> usize {
        self.normals.len()
    }

    fn support(&self, c: &[i64]) -> EpsRational {
        let n = c.len();
        let mut h: Rational = rational(c.iter().map(|&v| v.max(0)).sum(), 1);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    h += rational((self.m * (c[i] - c[j])).max(0), 2);
                }
            }
        }
        &self.tau.scale(c.iter().sum()) + &h
    }

    pub fn classify(&self, x: &[i64]) -> Membership {
        let mut boundary = false;
        for c in &self.normals {
            let value = EpsRational::from(rational(dot(c, x), 1));
            match value.cmp(&self.support(c)) {
                std::cmp::Ordering::Greater => return Membership::Outside,
                std::cmp::Ordering::Equal => boundary = true,
                std::cmp::Ordering::Less => {}
            }
        }
        if boundary {
            Membership::Boundary
        } else {
            Membership::Interior
        }
    }

    /// Scan the box `[lo, hi]ⁿ`.
    pub fn points(&self, n: usize, lo: i64, hi: i64) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        let mut x = vec![lo; n];
        loop {
            if self.classify(&x) != Membership::Outside {
                out.push(LatticePoint::new(x.clone()));
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if x[i] < hi {
                    x[i] += 1;
                    for y in &mut x[i + 1..] {
                        *y = lo;
                    }
                    break;
                }
                x[i] = lo;
            }
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Generalized cross product of `n − 1` vectors in `Zⁿ`.
fn cross(rows: &[Vec<i64>], n: usize) -> Vec<i64> {
    (0..n)
        .map(|k| {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != k)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let d = if minor.is_empty() {
                BigInt::from(1)
            } else {
                leibniz_det(&minor)
            };
            let d: i64 = d.try_into().unwrap();
            if k % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

fn primitive(c: Vec<i64>) -> Vec<i64> {
    let g = c.iter().fold(0i64, |g, &v| g.gcd(&v));
    c.into_iter().map(|v| v / g).collect()
}

/// Call `f` on every `k`-subset of `0..n`, as increasing indices.
pub fn choose(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Spanning trees by trying every `(V−1)`-subset of edges.
pub fn brute_spanning_trees(vertices: usize, edges: &[(usize, usize)]) -> u64 {
    if vertices <= 1 {
        return 1;
    }
    let mut count = 0;
    choose(edges.len(), vertices - 1, &mut |idx| {
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let acyclic = idx.iter().all(|&e| {
            let (a, b) = edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
            ra != rb
        });
        if acyclic {
            count += 1;
        }
    });
    count
}

/// Every edge of a multigraph, repeated by multiplicity; loops dropped.
pub fn edge_list(g: &zonotope_parking::MultiGraph) -> Vec<(usize, usize)> {
    let v = g.vertex_count();
    let mut edges = Vec::new();
    for i in 0..v {
        for j in i + 1..v {
            for _ in 0..g.multiplicity(i, j) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// `(m,n)`-parking functions via `#{i : a_i ≤ m(j−1)} ≥ j` for all `j`.
pub fn is_parking_by_counting(a: &[i64], m: i64) -> bool {
    let n = a.len() as i64;
    a.iter().all(|&v| v >= 0)
        && (1..=n).all(|j| a.iter().filter(|&&v| v <= m * (j - 1)).count() as i64 >= j)
}

pub fn binomial_u128(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
