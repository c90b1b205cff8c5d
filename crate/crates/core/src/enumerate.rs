//! Isomorph-free enumeration of small support families and the exhaustive
//! check that lattice path status coincides with avoiding the excluded-minor
//! types.
//!
//! A family is stored as its supports sorted ascending as bitmasks. Element
//! relabeling only reorders that list, so two families are isomorphic iff
//! some index permutation maps one sorted list onto the other.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::bits::IndexSet;
use crate::boolean::SupportFamily;
use crate::error::{Error, Result};
use crate::excluded::{find_excluded_minor_with, quad_predicates, TypeTag};
use crate::exec::Execution;
use crate::latticepath::recognize_lattice_path;
use crate::polymatroid::GroundSet;

/// Largest element count and used-index count accepted by
/// [`family_canonical_key`].
pub const KEY_LIMIT: usize = 6;
/// Largest `n` and `k` accepted by [`enumerate_families`] and [`verify_theorem`].
pub const ENUMERATION_LIMIT: usize = 5;

/// `[n, k, used]` followed by the least sorted support list, one byte per
/// support, over all relabelings of the used indices onto `1..=used`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyCanonicalKey(pub Vec<u8>);

impl fmt::Display for FamilyCanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// `table[p][m]` is the image of mask `m` under the `p`-th permutation of
/// `0..k` in lexicographic order. Entry 0 is the identity.
fn permutation_tables(k: usize) -> Vec<Vec<u8>> {
    (0..k)
        .permutations(k)
        .map(|perm| {
            (0..1usize << k)
                .map(|m| perm.iter().enumerate().filter(|&(i, _)| m >> i & 1 == 1).fold(0u8, |acc, (_, &j)| acc | 1 << j))
                .collect()
        })
        .collect()
}

fn least_image(masks: &[u8], tables: &[Vec<u8>]) -> Vec<u8> {
    let mut best = masks.to_vec();
    best.sort_unstable();
    let mut image = Vec::with_capacity(masks.len());
    for table in tables {
        image.clear();
        image.extend(masks.iter().map(|&m| table[m as usize]));
        image.sort_unstable();
        if image < best {
            best.clone_from(&image);
        }
    }
    best
}

/// True iff no index permutation sends the sorted list to a smaller one.
fn is_canonical(sorted: &[u8], tables: &[Vec<u8>]) -> bool {
    let mut image = Vec::with_capacity(sorted.len());
    tables.iter().skip(1).all(|table| {
        image.clear();
        image.extend(sorted.iter().map(|&m| table[m as usize]));
        image.sort_unstable();
        image.as_slice() >= sorted
    })
}

pub fn family_canonical_key(family: &SupportFamily) -> Result<FamilyCanonicalKey> {
    let n = family.len();
    let used = family.used_indices();
    if n > KEY_LIMIT || used.len() > KEY_LIMIT {
        return Err(Error::TooLarge(format!(
            "canonical keys are limited to {KEY_LIMIT} elements and {KEY_LIMIT} used indices"
        )));
    }
    let slot: BTreeMap<u32, usize> = used.indices().enumerate().map(|(j, i)| (i, j)).collect();
    let masks: Vec<u8> = family
        .supports()
        .iter()
        .map(|s| s.indices().fold(0u8, |acc, i| acc | 1 << slot[&i]))
        .collect();
    let tables = permutation_tables(used.len());
    let mut bytes = vec![n as u8, family.universe() as u8, used.len() as u8];
    bytes.extend(least_image(&masks, &tables));
    Ok(FamilyCanonicalKey(bytes))
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT || k > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!("enumeration is limited to n, k <= {ENUMERATION_LIMIT}")));
    }
    Ok(())
}

fn family_of(masks: &[u8], k: usize) -> SupportFamily {
    let supports = masks.iter().map(|&m| IndexSet(m as u32)).collect();
    SupportFamily::new(GroundSet::numbered(masks.len()).expect("n is small"), k as u32, supports)
        .expect("masks lie in the universe")
}

fn canonical_mask_lists(n: usize, k: usize, exec: Execution) -> Vec<Vec<u8>> {
    if n == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let full = (1u8 << k) - 1;
    let mut lists = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn extend(current: &mut Vec<u8>, n: usize, full: u8, out: &mut Vec<Vec<u8>>) {
        if current.len() == n {
            if current.iter().fold(0, |a, &m| a | m) == full {
                out.push(current.clone());
            }
            return;
        }
        let from = current.last().copied().unwrap_or(1);
        for m in from..=full {
            current.push(m);
            extend(current, n, full, out);
            current.pop();
        }
    }
    extend(&mut current, n, full, &mut lists);
    let tables = permutation_tables(k);
    exec.filter(lists, |l| is_canonical(l, &tables))
}

pub fn enumerate_families(n: usize, k: usize) -> Result<Vec<SupportFamily>> {
    enumerate_families_with(n, k, Execution::default())
}

/// One key-minimal representative per isomorphism class of loopless families
/// with `n` elements whose supports cover exactly `1..=k`. Representatives
/// come in ascending key order; supports are sorted by mask.
pub fn enumerate_families_with(n: usize, k: usize, exec: Execution) -> Result<Vec<SupportFamily>> {
    check_range(n, k)?;
    Ok(canonical_mask_lists(n, k, exec).iter().map(|l| family_of(l, k)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub key: FamilyCanonicalKey,
    pub family: SupportFamily,
    pub lattice_path: bool,
    pub witness: Option<TypeTag>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n_max: usize,
    pub k_max: usize,
    pub families: usize,
    pub lp_count: usize,
    pub non_lp_count: usize,
    /// Sorted by key.
    pub mismatches: Vec<Mismatch>,
    /// Witness type counts over non lattice path families.
    pub histogram: BTreeMap<TypeTag, usize>,
    /// Four-element families satisfying more than one four-element predicate.
    pub quad_overlaps: usize,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn confirmed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn count(&self, tag: TypeTag) -> usize {
        self.histogram.get(&tag).copied().unwrap_or(0)
    }
}

/// Deterministic text form; the elapsed time is left out.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verified n<={} k<={} families={} mismatches={}",
            self.n_max,
            self.k_max,
            self.families,
            self.mismatches.len()
        )?;
        for tag in TypeTag::excluded_types(self.n_max) {
            writeln!(f, "tag {tag}: {}", self.count(tag))?;
        }
        writeln!(f, "quad-overlaps: {}", self.quad_overlaps)?;
        for m in &self.mismatches {
            let supports = m.family.supports().iter().map(|s| s.to_string()).join(" ");
            let witness = m.witness.map_or("none".to_string(), |t| t.to_string());
            writeln!(f, "mismatch key={} supports={supports} lp={} witness={witness}", m.key, m.lattice_path)?;
        }
        Ok(())
    }
}

pub fn verify_theorem(n_max: usize, k_max: usize) -> Result<VerificationReport> {
    verify_theorem_with(n_max, k_max, Execution::default())
}

struct Outcome {
    lattice_path: bool,
    witness: Option<TypeTag>,
    overlap: bool,
}

/// Runs recognition and the minor search on every enumerated family with
/// `1 <= n <= n_max` and `1 <= k <= k_max`.
pub fn verify_theorem_with(n_max: usize, k_max: usize, exec: Execution) -> Result<VerificationReport> {
    check_range(n_max, k_max)?;
    let start = Instant::now();
    let mut report = VerificationReport {
        n_max,
        k_max,
        families: 0,
        lp_count: 0,
        non_lp_count: 0,
        mismatches: Vec::new(),
        histogram: BTreeMap::new(),
        quad_overlaps: 0,
        elapsed: Duration::ZERO,
    };
    for n in 1..=n_max {
        for k in 1..=k_max {
            let families = enumerate_families_with(n, k, exec)?;
            let outcomes = exec.map(&families, |f| {
                let lattice_path = recognize_lattice_path(f).is_some();
                let witness = find_excluded_minor_with(f, Execution::Sequential)
                    .expect("enumerated families are within the search cap")
                    .map(|w| w.tag);
                let overlap = n == 4 && quad_predicates(f).is_ok_and(|tags| tags.len() > 1);
                Outcome { lattice_path, witness, overlap }
            });
            for (family, o) in families.into_iter().zip(outcomes) {
                report.families += 1;
                if o.lattice_path {
                    report.lp_count += 1;
                } else {
                    report.non_lp_count += 1;
                }
                if let Some(tag) = o.witness {
                    *report.histogram.entry(tag).or_default() += 1;
                }
                report.quad_overlaps += o.overlap as usize;
                if o.lattice_path == o.witness.is_some() {
                    let key = family_canonical_key(&family)?;
                    report.mismatches.push(Mismatch { key, family, lattice_path: o.lattice_path, witness: o.witness });
                }
            }
        }
    }
    report.mismatches.sort_by(|a, b| a.key.cmp(&b.key));
    report.elapsed = start.elapsed();
    Ok(report)
}
