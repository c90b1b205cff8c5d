//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use polypath::{GroundSet, IndexSet, RankTable, Subset, SupportFamily};
use rand::Rng;

pub fn family(lists: &[&[u32]]) -> SupportFamily {
    SupportFamily::from_lists(lists).unwrap()
}

pub fn staircase9() -> SupportFamily {
    family(&[&[1], &[1], &[1, 2], &[1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4], &[3, 4], &[4]])
}

/// Named examples with their expected excluded-minor type, if any.
pub fn named_examples() -> Vec<(&'static str, SupportFamily, Option<&'static str>)> {
    vec![
        ("coplanar lines", family(&[&[1, 2], &[2, 3], &[1, 3]]), Some("cycle3")),
        ("lines through a vertex", family(&[&[1, 2], &[1, 3], &[1, 4]]), Some("T1")),
        ("three planes", family(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]]), Some("T2")),
        ("two planes and a point", family(&[&[1, 2, 3], &[1, 2, 4], &[1]]), Some("T3")),
        ("solid and two lines", family(&[&[1, 2, 3, 4], &[1, 2], &[1, 3]]), Some("T4")),
        ("solid, plane and line", family(&[&[1, 2, 3, 4], &[1, 2, 5], &[1, 3]]), Some("T4")),
        ("planes and coplanar lines", family(&[&[1, 2], &[1, 2, 3], &[2, 3, 4], &[2, 4]]), Some("F1")),
        ("vertex, lines, triangle", family(&[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]), Some("F1")),
        ("points and their plane", family(&[&[1], &[2], &[3], &[1, 2, 3]]), Some("F2")),
        ("points, line, plane", family(&[&[1], &[2], &[1, 2], &[1, 2, 3]]), Some("F3")),
        ("coned square", family(&[&[1, 2, 5], &[2, 3, 5], &[3, 4, 5], &[1, 4, 5]]), Some("F4")),
        ("square", family(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]), Some("cycle4")),
        ("pentagon", family(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]), Some("cycle5")),
    ]
}

/// Uniformly random supports over `1..=k`, loops allowed.
pub fn random_family(rng: &mut impl Rng, n: usize, k: u32) -> SupportFamily {
    let supports = (0..n).map(|_| IndexSet(rng.gen_range(0..1u32 << k))).collect();
    SupportFamily::new(GroundSet::numbered(n).unwrap(), k, supports).unwrap()
}

/// Rank by counting indices met, straight from the definition.
pub fn rank_oracle(f: &SupportFamily, x: Subset) -> i64 {
    let mut met = BTreeSet::new();
    for e in x.positions() {
        met.extend(f.support(e).indices());
    }
    met.len() as i64
}

/// Multiset of the sets `A_i = {e : i in s(e)}` over used indices.
pub fn member_set_oracle(f: &SupportFamily) -> BTreeMap<Subset, u32> {
    let mut counts = BTreeMap::new();
    for i in 1..=f.universe() {
        let a = Subset::from_positions((0..f.len()).filter(|&e| f.support(e).contains(i)));
        if !a.is_empty() {
            *counts.entry(a).or_insert(0) += 1;
        }
    }
    counts
}

/// The alternating sum for `x` by a direct sum over supersets.
pub fn boolean_sum_oracle(t: &RankTable, x: Subset) -> i64 {
    let n = t.len();
    let total = t.total_rank();
    (0..1u32 << n)
        .map(Subset)
        .filter(|y| x.is_subset(*y))
        .map(|y| {
            let sign = if (y - x).len().is_multiple_of(2) { 1 } else { -1 };
            sign * (total - t.rank(y).unwrap())
        })
        .sum()
}

/// Positions of the ground set of a minor inside the original.
pub fn kept(n: usize, removed: Subset) -> Vec<usize> {
    (0..n).filter(|&p| !removed.contains(p)).collect()
}

/// Canonical form by explicit minimization over element and index
/// permutations of the 0/1 incidence matrix, rows in element order.
pub fn brute_canonical(f: &SupportFamily) -> Vec<Vec<bool>> {
    let n = f.len();
    let k = f.universe() as usize;
    let mut best: Option<Vec<Vec<bool>>> = None;
    for ep in (0..n).permutations(n) {
        for ip in (1..=k as u32).permutations(k) {
            let m: Vec<Vec<bool>> =
                ep.iter().map(|&e| ip.iter().map(|&i| f.support(e).contains(i)).collect()).collect();
            if best.as_ref().is_none_or(|b| m < *b) {
                best = Some(m);
            }
        }
    }
    best.unwrap_or_default()
}

/// All families with `n` elements, nonempty supports and union exactly `1..=k`.
pub fn all_covering_families(n: usize, k: u32) -> Vec<SupportFamily> {
    let full = (1u32 << k) - 1;
    (0..n)
        .map(|_| 1..=full)
        .multi_cartesian_product()
        .filter(|masks| masks.iter().fold(0, |a, m| a | m) == full)
        .map(|masks| {
            let supports = masks.into_iter().map(IndexSet).collect();
            SupportFamily::new(GroundSet::numbered(n).unwrap(), k, supports).unwrap()
        })
        .collect()
}

fn truncated_boolean(rng: &mut impl Rng, n: usize) -> Vec<i64> {
    let k = rng.gen_range(0..=6);
    let f = random_family(rng, n, k);
    let cap = rng.gen_range(0..=k as i64 + 1);
    (0..1u32 << n).map(|m| rank_oracle(&f, Subset(m)).min(cap)).collect()
}

fn uniform(rng: &mut impl Rng, n: usize) -> Vec<i64> {
    let r = rng.gen_range(0..=n as i64);
    (0..1u32 << n).map(|m| (m.count_ones() as i64).min(r)).collect()
}

/// Axiom-valid tables: truncated Boolean tables, uniform tables and sums.
pub fn random_polymatroid(rng: &mut impl Rng, n: usize) -> RankTable {
    let values: Vec<i64> = match rng.gen_range(0..3) {
        0 => truncated_boolean(rng, n),
        1 => uniform(rng, n),
        _ => {
            let a = truncated_boolean(rng, n);
            let b = uniform(rng, n);
            a.into_iter().zip(b).map(|(x, y)| x + y).collect()
        }
    };
    RankTable::from_fn(GroundSet::numbered(n).unwrap(), |s| values[s.bits() as usize])
}

/// A random pair of disjoint subsets of `n` positions.
pub fn random_disjoint(rng: &mut impl Rng, n: usize) -> (Subset, Subset) {
    let mut d = Subset::EMPTY;
    let mut c = Subset::EMPTY;
    for p in 0..n {
        match rng.gen_range(0..3) {
            0 => d = d.with(p),
            1 => c = c.with(p),
            _ => {}
        }
    }
    (d, c)
}

/// Random region sizes in `0..=max` that satisfy the constraints of `tag`.
pub fn random_sizes(rng: &mut impl Rng, tag: polypath::TypeTag, max: u32) -> BTreeMap<String, u32> {
    use polypath::TypeTag::*;
    let names = polypath::region_names(tag).unwrap();
    loop {
        let mut sizes: BTreeMap<String, u32> = names.iter().map(|n| (n.clone(), rng.gen_range(0..=max))).collect();
        let mut set = |names: &[&str], v: u32| {
            for n in names {
                sizes.insert(n.to_string(), v);
            }
        };
        match tag {
            T3 => set(&["V", "X", "Y"], 0),
            T4 => set(&["X", "V"], 0),
            _ => {}
        }
        let size = |n: &str| sizes[n];
        let nonempty: Vec<String> = match tag {
            Cycle(n) => (1..=n).map(|i| format!("Z{}", 2 * i - 1)).collect(),
            T1 => vec!["T".into(), "U".into(), "V".into(), "Z".into()],
            T2 => vec!["W".into(), "X".into(), "Y".into(), "Z".into()],
            T3 => vec!["T".into(), "U".into(), "W".into(), "Z".into()],
            T4 => vec!["T".into(), "W".into(), "Y".into(), "Z".into()],
            F1 => vec!["A".into(), "B".into(), "C".into()],
            F2 => vec!["AD".into(), "BD".into(), "CD".into()],
            F3 => vec!["A0".into(), "AB".into(), "AC".into()],
            _ => names.clone(),
        };
        let t2_ok = tag != T2 || ["T", "U", "V"].iter().any(|r| size(r) == 0);
        let total: u32 = sizes.values().sum();
        if nonempty.iter().all(|r| size(r) > 0) && t2_ok && total <= 32 {
            return sizes;
        }
    }
}

pub fn certified_tags() -> Vec<polypath::TypeTag> {
    use polypath::TypeTag::*;
    vec![Cycle(3), Cycle(4), Cycle(5), Cycle(6), T1, T2, T3, T4, F1, F2, F3, F4]
}
