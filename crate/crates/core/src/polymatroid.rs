//! Ground sets, dense rank tables, the polymatroid axioms and minors.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::bits::Subset;
use crate::error::{Error, Result};
use crate::{MAX_CANONICAL, MAX_GROUND};

/// Ordered, labelled ground set of at most [`MAX_GROUND`] elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroundSet {
    names: Vec<String>,
}

pub(crate) fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label.starts_with('#')
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '{' | '}' | ':'))
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(names.len()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !valid_label(name) {
                return Err(Error::InvalidLabel(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(GroundSet { names })
    }

    /// Elements labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<GroundSet> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, pos: usize) -> &str {
        &self.names[pos]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Resolve labels to a subset. Repeated labels are an error.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut set = Subset::EMPTY;
        for label in labels {
            let label = label.as_ref();
            let pos = self
                .position(label)
                .ok_or_else(|| Error::UnknownElement(label.to_string()))?;
            if set.contains(pos) {
                return Err(Error::DuplicateElement(label.to_string()));
            }
            set = set.with(pos);
        }
        Ok(set)
    }

    pub fn check(&self, set: Subset) -> Result<()> {
        if set.is_subset(self.full()) {
            Ok(())
        } else {
            let stray = set.difference(self.full()).positions().next().unwrap_or(0);
            Err(Error::UnknownElement(format!("#{stray}")))
        }
    }

    /// `{a,b}` with members in ground order.
    pub fn format_subset(&self, set: Subset) -> String {
        format!("{{{}}}", set.positions().map(|p| self.name(p)).join(","))
    }

    /// The ground set with `removed` taken out, order preserved.
    pub fn without(&self, removed: Subset) -> GroundSet {
        GroundSet {
            names: self
                .names
                .iter()
                .enumerate()
                .filter(|(p, _)| !removed.contains(*p))
                .map(|(_, n)| n.clone())
                .collect(),
        }
    }

    /// The ground set listed in `order` (a permutation of positions).
    pub(crate) fn reordered(&self, order: &[usize]) -> GroundSet {
        GroundSet { names: order.iter().map(|&p| self.names[p].clone()).collect() }
    }
}

/// Maps each mask over `0..kept.len()` to the mask over the original
/// positions `kept[i]`.
pub(crate) fn expansion_table(kept: &[usize]) -> Vec<u32> {
    let mut table = vec![0u32; 1 << kept.len()];
    for mask in 1..table.len() {
        let low = mask.trailing_zeros() as usize;
        table[mask] = table[mask & (mask - 1)] | 1 << kept[low];
    }
    table
}

/// An explicit rank function on every subset of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankTable {
    ground: GroundSet,
    values: Vec<i64>,
}

/// Builds a table from `(subset, rank)` entries covering every nonempty
/// subset exactly once. The empty set may be listed with rank 0.
pub fn make_rank_table<I>(ground: GroundSet, entries: I) -> Result<RankTable>
where
    I: IntoIterator<Item = (Subset, i64)>,
{
    let size = 1usize << ground.len();
    let mut values: Vec<Option<i64>> = vec![None; size];
    for (set, value) in entries {
        ground.check(set)?;
        if set.is_empty() {
            if value != 0 {
                return Err(Error::NonzeroEmptySet(value));
            }
        } else if value < 0 {
            return Err(Error::NegativeRank { subset: ground.format_subset(set), value });
        }
        let slot = &mut values[set.bits() as usize];
        if slot.is_some() {
            return Err(Error::DuplicateSubset(ground.format_subset(set)));
        }
        *slot = Some(value);
    }
    values[0].get_or_insert(0);
    let values = values
        .into_iter()
        .enumerate()
        .map(|(mask, v)| v.ok_or_else(|| Error::MissingSubset(ground.format_subset(Subset(mask as u32)))))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankTable { ground, values })
}

impl RankTable {
    /// Tabulates `f` over all subsets; no checks beyond the ground-set cap.
    pub fn from_fn(ground: GroundSet, mut f: impl FnMut(Subset) -> i64) -> RankTable {
        let values = (0..1u32 << ground.len()).map(|m| f(Subset(m))).collect();
        RankTable { ground, values }
    }

    pub(crate) fn from_values(ground: GroundSet, values: Vec<i64>) -> RankTable {
        debug_assert_eq!(values.len(), 1 << ground.len());
        RankTable { ground, values }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Values indexed by subset mask.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn rank(&self, set: Subset) -> Result<i64> {
        self.ground.check(set)?;
        Ok(self.values[set.bits() as usize])
    }

    #[inline]
    pub(crate) fn at(&self, set: Subset) -> i64 {
        self.values[set.bits() as usize]
    }

    /// `rho(E)`.
    pub fn total_rank(&self) -> i64 {
        self.values[self.values.len() - 1]
    }

    pub fn delete(&self, removed: Subset) -> Result<RankTable> {
        self.minor(removed, Subset::EMPTY)
    }

    pub fn contract(&self, contracted: Subset) -> Result<RankTable> {
        self.minor(Subset::EMPTY, contracted)
    }

    /// `(rho \ deleted) / contracted` for disjoint sets.
    pub fn minor(&self, deleted: Subset, contracted: Subset) -> Result<RankTable> {
        self.ground.check(deleted)?;
        self.ground.check(contracted)?;
        if !deleted.is_disjoint(contracted) {
            let p = deleted.intersection(contracted).positions().next().unwrap_or(0);
            return Err(Error::DuplicateElement(self.ground.name(p).to_string()));
        }
        let removed = deleted.union(contracted);
        let kept: Vec<usize> = (0..self.len()).filter(|&p| !removed.contains(p)).collect();
        let base = self.at(contracted);
        let values = expansion_table(&kept)
            .into_iter()
            .map(|m| self.values[(m | contracted.bits()) as usize] - base)
            .collect();
        Ok(RankTable { ground: self.ground.without(removed), values })
    }

    /// The same function with elements listed in `order`; the element at
    /// `order[i]` becomes position `i`.
    pub fn permute(&self, order: &[usize]) -> Result<RankTable> {
        if !is_permutation(order, self.len()) {
            return Err(Error::NotAPermutation);
        }
        let values = expansion_table(order)
            .into_iter()
            .map(|m| self.values[m as usize])
            .collect();
        Ok(RankTable { ground: self.ground.reordered(order), values })
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.len();
        let full = self.ground.full().bits();
        let normalized = self.values[0] == 0;

        let mut monotone_violation = None;
        'mono: for a in 0..=full {
            for x in 0..n {
                if a >> x & 1 == 0 {
                    let lower = self.values[a as usize];
                    let upper = self.values[(a | 1 << x) as usize];
                    if lower > upper {
                        monotone_violation =
                            Some(Violation::Monotonicity { base: Subset(a), element: x, lower, upper });
                        break 'mono;
                    }
                }
            }
        }

        // The local exchange inequality over all A, x < y outside A is
        // equivalent to submodularity.
        let mut submodular_violation = None;
        'sub: for a in 0..=full {
            for x in 0..n {
                if a >> x & 1 == 1 {
                    continue;
                }
                for y in x + 1..n {
                    if a >> y & 1 == 1 {
                        continue;
                    }
                    let ax = self.values[(a | 1 << x) as usize];
                    let ay = self.values[(a | 1 << y) as usize];
                    let axy = self.values[(a | 1 << x | 1 << y) as usize];
                    let base = self.values[a as usize];
                    if ax + ay < axy + base {
                        submodular_violation = Some(Violation::Submodularity {
                            base: Subset(a),
                            x,
                            y,
                            with_x: ax,
                            with_y: ay,
                            with_both: axy,
                            without: base,
                        });
                        break 'sub;
                    }
                }
            }
        }

        let monotone = monotone_violation.is_none();
        let submodular = submodular_violation.is_none();
        let first_violation = if !normalized {
            Some(Violation::Normalization { value: self.values[0] })
        } else {
            monotone_violation.or(submodular_violation)
        };
        AxiomReport { normalized, monotone, submodular, first_violation }
    }

    pub fn is_polymatroid(&self) -> bool {
        self.check_axioms().holds()
    }

    /// Isomorphism-invariant key: the least flattened rank vector over all
    /// relabelings of the ground set.
    pub fn canonical_key(&self) -> Result<CanonicalKey> {
        let n = self.len();
        if n > MAX_CANONICAL {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut best: Option<Vec<i64>> = None;
        let mut candidate = vec![0i64; self.values.len()];
        for order in (0..n).permutations(n) {
            let expand = expansion_table(&order);
            for (slot, m) in candidate.iter_mut().zip(&expand) {
                *slot = self.values[*m as usize];
            }
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate.clone());
            }
        }
        let best = best.unwrap_or_else(|| self.values.clone());
        let mut bytes = Vec::with_capacity(1 + 8 * best.len());
        bytes.push(n as u8);
        for v in best {
            bytes.extend_from_slice(&((v as u64) ^ (1 << 63)).to_be_bytes());
        }
        Ok(CanonicalKey(bytes))
    }
}

pub(crate) fn is_permutation(order: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    order.len() == n
        && order.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
}

/// Byte string identifying a rank table up to relabeling of its ground set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<u8>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Normalization { value: i64 },
    /// `rho(base) > rho(base + element)`.
    Monotonicity { base: Subset, element: usize, lower: i64, upper: i64 },
    /// `rho(A+x) + rho(A+y) < rho(A+x+y) + rho(A)`.
    Submodularity {
        base: Subset,
        x: usize,
        y: usize,
        with_x: i64,
        with_y: i64,
        with_both: i64,
        without: i64,
    },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::Normalization { .. } => "normalized",
            Violation::Monotonicity { .. } => "monotone",
            Violation::Submodularity { .. } => "submodular",
        }
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        match *self {
            Violation::Normalization { value } => format!("normalized: rank({{}})={value}"),
            Violation::Monotonicity { base, element, lower, upper } => format!(
                "monotone: A={} x={} rank(A)={lower} rank(A+x)={upper}",
                ground.format_subset(base),
                ground.name(element)
            ),
            Violation::Submodularity { base, x, y, with_x, with_y, with_both, without } => format!(
                "submodular: A={} x={} y={} rank(A+x)={with_x} rank(A+y)={with_y} rank(A+x+y)={with_both} rank(A)={without}",
                ground.format_subset(base),
                ground.name(x),
                ground.name(y)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub normalized: bool,
    pub monotone: bool,
    pub submodular: bool,
    pub first_violation: Option<Violation>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.normalized && self.monotone && self.submodular
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "normalized: {}", yn(self.normalized))?;
        writeln!(f, "monotone: {}", yn(self.monotone))?;
        write!(f, "submodular: {}", yn(self.submodular))
    }
}
