//! Bounded sweep over the library's invariants, one named check at a time.
//!
//! Every check runs over all `1 ≤ n ≤ max_n`, `1 ≤ m ≤ max_m` and a fixed
//! sample of shift parameters (see [`admissible_samples`] and
//! [`inadmissible_samples`]). Checks stop at the first counterexample and
//! report it.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;

use crate::exact::{int, rational, EpsRational, Rational};
use crate::orbits::{is_symmetric, regular_orbit_reps, stabilizer_partition, SetPartition};
use crate::parking::{
    canonical_class, class_count, enumerate_dyck_paths, enumerate_parking_functions, fuss_catalan,
    fuss_catalan_alt, orbit_to_dyck, ParkingBijection, ParkingFunction,
};
use crate::point::LatticePoint;
use crate::tilting::{color_blocks, color_offsets_within, t_grid, tilting_weights, TiltingTable};
use crate::treecount::{
    build_graph, contract, contracted_count_closed_form, enumerate_partitions, lemma_fun_lhs,
    lemma_fun_rhs, regular_orbit_count_mobius, spanning_tree_count, volume_by_bases,
};
use crate::zonotope::{enumerate_with_status, Membership, ZonotopeSpec};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}", self.name),
            Some(why) => write!(f, "FAIL {}: {}", self.name, why),
        }
    }
}

type Check = fn(u32, usize, u32) -> Result<(), String>;

const CHECKS: &[(&str, Check)] = &[
    ("lattice-count", check_lattice_count),
    ("admissible-no-boundary", check_no_boundary),
    ("inadmissible-has-boundary", check_has_boundary),
    ("symmetric-enumeration", check_symmetric),
    ("translation-law", check_translation),
    ("class-bijection", check_class_bijection),
    ("parking-equivariance", check_equivariance),
    ("parking-round-trip", check_round_trip),
    ("fuss-catalan-closed-forms", check_fuss_catalan),
    ("regular-orbits", check_regular_orbits),
    ("dyck-bijection", check_dyck_bijection),
    ("matrix-tree", check_matrix_tree),
    ("contracted-trees", check_contracted),
    ("volume-by-bases", check_volume),
    ("invariant-points", check_invariant_points),
    ("stabilizer-refinement", check_stabilizer_refinement),
    ("mobius-count", check_mobius),
    ("composition-identity", check_composition_identity),
    ("tilting-count", check_tilting_count),
    ("color-window", check_colors),
];

/// Names of all checks, in run order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

/// Run every check for `n ≤ max_n`, `m ≤ max_m`.
pub fn run(max_n: usize, max_m: u32) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|&(name, check)| {
            let failure = (1..=max_n)
                .flat_map(|n| (1..=max_m).map(move |m| (m, n)))
                .find_map(|(m, n)| {
                    check(m, n, max_m)
                        .err()
                        .map(|e| format!("m={m} n={n}: {e}"))
                });
            CheckResult { name, failure }
        })
        .collect()
}

/// Sample of admissible shifts: both sides of every grid window, shifted
/// by `−1, 0, 1`, plus exact rationals `m(n−1)/2 ± 1/d` for
/// `d ∈ {n+1, n+2}`.
pub fn admissible_samples(m: u32, n: usize) -> Vec<EpsRational> {
    let centre = rational(i64::from(m) * (n as i64 - 1), 2);
    let mut out = Vec::new();
    for t in t_grid(n) {
        for shift in -1..=1 {
            let base = &t + &centre + int(shift);
            out.push(EpsRational::below(base.clone()));
            out.push(EpsRational::above(base));
        }
    }
    for d in [n as i64 + 1, n as i64 + 2] {
        out.push(EpsRational::exact(&centre + rational(1, d)));
        out.push(EpsRational::exact(&centre - rational(1, d)));
    }
    out
}

/// Every non-admissible value `m(n−1)/2 + p/k` with `1 ≤ k ≤ n` and
/// `−k ≤ p ≤ k`.
pub fn inadmissible_samples(m: u32, n: usize) -> Vec<EpsRational> {
    let centre = rational(i64::from(m) * (n as i64 - 1), 2);
    let mut values: Vec<Rational> = (1..=n as i64)
        .flat_map(|k| (-k..=k).map(move |p| rational(p, k)))
        .map(|r| &centre + r)
        .collect();
    values.sort();
    values.dedup();
    values.into_iter().map(EpsRational::exact).collect()
}

fn spec(m: u32, n: usize, tau: &EpsRational) -> Result<ZonotopeSpec, String> {
    ZonotopeSpec::new(m, n, tau.clone()).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Permutations exercised by the equivariance checks: every adjacent
/// transposition and the long cycle.
fn sample_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            p
        })
        .collect();
    perms.push((0..n).map(|i| (i + 1) % n).collect());
    perms
}

fn check_lattice_count(m: u32, n: usize, _: u32) -> Result<(), String> {
    let expected = class_count(m, n);
    for tau in admissible_samples(m, n) {
        let count = spec(m, n, &tau)?.lattice_points().len();
        ensure(BigInt::from(count) == expected, || {
            format!("tau={tau}: {count} points, expected {expected}")
        })?;
    }
    Ok(())
}

fn check_no_boundary(m: u32, n: usize, _: u32) -> Result<(), String> {
    for tau in admissible_samples(m, n) {
        let hit = enumerate_with_status(&spec(m, n, &tau)?)
            .into_iter()
            .find(|(_, s)| *s == Membership::Boundary);
        if let Some((x, _)) = hit {
            return Err(format!("tau={tau}: {x} on the boundary"));
        }
    }
    Ok(())
}

fn check_has_boundary(m: u32, n: usize, _: u32) -> Result<(), String> {
    for tau in inadmissible_samples(m, n) {
        let found = enumerate_with_status(&spec(m, n, &tau)?)
            .iter()
            .any(|(_, s)| *s == Membership::Boundary);
        ensure(found, || format!("tau={tau}: no boundary point"))?;
    }
    Ok(())
}

fn check_symmetric(m: u32, n: usize, _: u32) -> Result<(), String> {
    for tau in admissible_samples(m, n) {
        ensure(is_symmetric(&spec(m, n, &tau)?.lattice_points()), || {
            format!("tau={tau}: not closed under S_n")
        })?;
    }
    Ok(())
}

fn check_translation(m: u32, n: usize, _: u32) -> Result<(), String> {
    for tau in admissible_samples(m, n) {
        let s = spec(m, n, &tau)?;
        let shifted: Vec<LatticePoint> = s.lattice_points().iter().map(|x| x.shift(1)).collect();
        let next = s.translated(1).map_err(|e| e.to_string())?.lattice_points();
        ensure(shifted == next, || format!("tau={tau}: Δ_(τ+1) ≠ Δ_τ + ν"))?;
    }
    Ok(())
}

fn check_class_bijection(m: u32, n: usize, _: u32) -> Result<(), String> {
    let expected = class_count(m, n);
    let parking = enumerate_parking_functions(m, n);
    let classes: HashSet<_> = parking.iter().map(ParkingFunction::class).collect();
    ensure(
        BigInt::from(parking.len()) == expected && BigInt::from(classes.len()) == expected,
        || {
            format!(
                "{} parking functions in {} classes",
                parking.len(),
                classes.len()
            )
        },
    )?;
    for tau in admissible_samples(m, n) {
        let points = spec(m, n, &tau)?.lattice_points();
        let image: HashSet<_> = points.iter().map(|x| canonical_class(x, m)).collect();
        ensure(image.len() == points.len() && image == classes, || {
            format!("tau={tau}: classes of lattice points differ from classes of parking functions")
        })?;
    }
    Ok(())
}

fn check_equivariance(m: u32, n: usize, _: u32) -> Result<(), String> {
    for tau in admissible_samples(m, n).into_iter().take(4) {
        let bij = ParkingBijection::new(&spec(m, n, &tau)?).map_err(|e| e.to_string())?;
        for x in spec(m, n, &tau)?.lattice_points() {
            let a = bij.lattice_to_parking(&x).map_err(|e| e.to_string())?;
            for perm in sample_permutations(n) {
                let lhs = bij
                    .lattice_to_parking(&x.permute(&perm))
                    .map_err(|e| e.to_string())?;
                ensure(lhs == a.permute(&perm), || {
                    format!("tau={tau}: x={x} perm={perm:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn check_round_trip(m: u32, n: usize, _: u32) -> Result<(), String> {
    for tau in admissible_samples(m, n).into_iter().take(4) {
        let s = spec(m, n, &tau)?;
        let bij = ParkingBijection::new(&s).map_err(|e| e.to_string())?;
        for x in s.lattice_points() {
            let a = bij.lattice_to_parking(&x).map_err(|e| e.to_string())?;
            let back = bij.parking_to_lattice(&a).map_err(|e| e.to_string())?;
            ensure(back == x, || format!("tau={tau}: {x} -> {a} -> {back}"))?;
        }
        for a in enumerate_parking_functions(m, n) {
            let x = bij.parking_to_lattice(&a).map_err(|e| e.to_string())?;
            let back = bij.lattice_to_parking(&x).map_err(|e| e.to_string())?;
            ensure(back == a, || format!("tau={tau}: {a} -> {x} -> {back}"))?;
        }
    }
    Ok(())
}

fn check_fuss_catalan(m: u32, n: usize, _: u32) -> Result<(), String> {
    let a = fuss_catalan(m, n);
    let b = fuss_catalan_alt(m, n);
    let dyck = enumerate_dyck_paths(m, n).len();
    ensure(a == b && BigInt::from(dyck) == a, || {
        format!("{a} vs {b} vs {dyck} Dyck paths")
    })
}

fn check_regular_orbits(m: u32, n: usize, _: u32) -> Result<(), String> {
    let expected = fuss_catalan(m, n);
    for tau in admissible_samples(m, n) {
        let points = spec(m, n, &tau)?.lattice_points();
        let reps = regular_orbit_reps(&points).map_err(|e| e.to_string())?;
        ensure(BigInt::from(reps.len()) == expected, || {
            format!(
                "tau={tau}: {} regular orbits, expected {expected}",
                reps.len()
            )
        })?;
        let distinct = points
            .iter()
            .filter(|x| crate::orbits::is_regular(x))
            .count();
        let n_fact: usize = (1..=n).product();
        ensure(distinct == reps.len() * n_fact, || {
            format!(
                "tau={tau}: {distinct} regular points for {} orbits",
                reps.len()
            )
        })?;
    }
    Ok(())
}

fn check_dyck_bijection(m: u32, n: usize, _: u32) -> Result<(), String> {
    let increasing: Vec<ParkingFunction> = enumerate_parking_functions(m, n)
        .into_iter()
        .filter(|a| a.values().windows(2).all(|w| w[0] < w[1]))
        .collect();
    let image: Result<HashSet<_>, _> = increasing.iter().map(orbit_to_dyck).collect();
    let image = image.map_err(|e| e.to_string())?;
    let all: HashSet<_> = enumerate_dyck_paths(m, n).into_iter().collect();
    ensure(image.len() == increasing.len() && image == all, || {
        format!(
            "{} increasing parking functions, {} Dyck paths",
            increasing.len(),
            all.len()
        )
    })
}

fn check_matrix_tree(m: u32, n: usize, _: u32) -> Result<(), String> {
    let count = spanning_tree_count(&build_graph(m, n));
    let expected = class_count(m, n);
    ensure(count == expected, || {
        format!("{count} spanning trees, expected {expected}")
    })
}

fn check_contracted(m: u32, n: usize, _: u32) -> Result<(), String> {
    let g = build_graph(m, n);
    for p in enumerate_partitions(n) {
        let count = spanning_tree_count(&contract(&g, &p).map_err(|e| e.to_string())?);
        let expected = contracted_count_closed_form(m, n, &p);
        ensure(count == expected, || {
            format!("G/{p}: {count} vs {expected}")
        })?;
    }
    Ok(())
}

fn check_volume(m: u32, n: usize, _: u32) -> Result<(), String> {
    if n > 4 {
        return Ok(());
    }
    let vol = volume_by_bases(m, n).map_err(|e| e.to_string())?;
    let trees = spanning_tree_count(&build_graph(m, n));
    ensure(vol == trees, || {
        format!("volume {vol} vs {trees} spanning trees")
    })
}

fn block_size_product(p: &SetPartition) -> BigInt {
    p.block_sizes().into_iter().map(BigInt::from).product()
}

fn check_invariant_points(m: u32, n: usize, _: u32) -> Result<(), String> {
    if n > 4 {
        return Ok(());
    }
    let g = build_graph(m, n);
    for tau in admissible_samples(m, n).into_iter().take(4) {
        let points = spec(m, n, &tau)?.lattice_points();
        for p in enumerate_partitions(n) {
            let invariant = points.iter().filter(|x| p.is_constant_on_blocks(x)).count();
            let trees = spanning_tree_count(&contract(&g, &p).map_err(|e| e.to_string())?);
            ensure(trees == block_size_product(&p) * invariant, || {
                format!("tau={tau} 𝒮={p}: {trees} trees, {invariant} invariant points")
            })?;
        }
    }
    Ok(())
}

fn check_stabilizer_refinement(m: u32, n: usize, _: u32) -> Result<(), String> {
    if n > 4 {
        return Ok(());
    }
    let g = build_graph(m, n);
    for tau in admissible_samples(m, n).into_iter().take(4) {
        let mut by_stabilizer: HashMap<SetPartition, usize> = HashMap::new();
        for x in spec(m, n, &tau)?.lattice_points() {
            *by_stabilizer.entry(stabilizer_partition(&x)).or_default() += 1;
        }
        for p in enumerate_partitions(n) {
            let coarser: usize = by_stabilizer
                .iter()
                .filter(|(q, _)| q.coarsens(&p))
                .map(|(_, c)| c)
                .sum();
            let trees = spanning_tree_count(&contract(&g, &p).map_err(|e| e.to_string())?);
            ensure(trees == block_size_product(&p) * coarser, || {
                format!("tau={tau} 𝒮={p}: {trees} trees vs {coarser} points")
            })?;
        }
    }
    Ok(())
}

fn check_mobius(m: u32, n: usize, _: u32) -> Result<(), String> {
    let count = regular_orbit_count_mobius(m, n).map_err(|e| e.to_string())?;
    let expected = fuss_catalan(m, n);
    ensure(count == expected, || format!("{count} vs {expected}"))
}

fn check_composition_identity(m: u32, n: usize, _: u32) -> Result<(), String> {
    // independent of m; run once per n
    if m != 1 {
        return Ok(());
    }
    for x in 2..=20 {
        let (l, r) = (lemma_fun_lhs(n, x), lemma_fun_rhs(n, x));
        ensure(l == r, || format!("X={x}: {l} vs {r}"))?;
    }
    Ok(())
}

fn tables(m: u32, n: usize) -> Result<Vec<TiltingTable>, String> {
    t_grid(n)
        .iter()
        .map(|t| tilting_weights(m, n, t).map_err(|e| e.to_string()))
        .collect()
}

fn check_tilting_count(m: u32, n: usize, _: u32) -> Result<(), String> {
    let expected = fuss_catalan(m, n);
    let rho = crate::tilting::rho_hat(n);
    for table in tables(m, n)? {
        let tau = table.tau.clone();
        ensure(BigInt::from(table.len()) == expected, || {
            format!("tau={tau}: {} weights, expected {expected}", table.len())
        })?;
        for w in &table.weights {
            ensure(
                w.is_weakly_decreasing() && w.add(&rho).is_strictly_decreasing(),
                || format!("tau={tau}: {w} not dominant"),
            )?;
        }
    }
    Ok(())
}

fn check_colors(m: u32, n: usize, _: u32) -> Result<(), String> {
    for table in tables(m, n)? {
        let blocks = color_blocks(&table);
        let u = table.color_offset();
        let offsets = color_offsets_within(&blocks, &u, n)
            .ok_or_else(|| format!("tau={}: colors outside {u}..{u}+{n}", table.tau))?;
        if m >= 2 {
            ensure(offsets.len() == n, || {
                format!(
                    "tau={}: only {} of {n} colors present",
                    table.tau,
                    offsets.len()
                )
            })?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zonotope::is_admissible;

    #[test]
    fn samples_are_classified_correctly() {
        for (m, n) in [(1, 1), (1, 3), (2, 3), (3, 4), (2, 5)] {
            assert!(admissible_samples(m, n)
                .iter()
                .all(|t| is_admissible(m, n, t)));
            assert!(inadmissible_samples(m, n)
                .iter()
                .all(|t| !is_admissible(m, n, t)));
        }
        assert_eq!(admissible_samples(1, 1).len(), 10);
    }

    #[test]
    fn small_sweep_passes() {
        let report = run(3, 2);
        assert_eq!(report.len(), check_names().len());
        for r in &report {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn report_lines() {
        let ok = CheckResult {
            name: "x",
            failure: None,
        };
        let bad = CheckResult {
            name: "y",
            failure: Some("m=1 n=1: boom".into()),
        };
        assert_eq!(ok.to_string(), "PASS x");
        assert_eq!(bad.to_string(), "FAIL y: m=1 n=1: boom");
    }
}
