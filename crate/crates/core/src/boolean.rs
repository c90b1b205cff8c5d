//! Boolean polymatroids given by element supports.
//!
//! A support family assigns each element `e` a set `s(e)` of universe
//! indices in `1..=k`; the rank of `X` is the size of the union of the
//! supports of its members. Equivalently the family is the list of sets
//! `A_i = {e : i in s(e)}`, one per universe index.

use std::collections::BTreeMap;

use crate::bits::{IndexSet, Subset};
use crate::error::{Error, Result};
use crate::polymatroid::{GroundSet, RankTable};
use crate::MAX_UNIVERSE;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportFamily {
    ground: GroundSet,
    universe: u32,
    supports: Vec<IndexSet>,
}

impl SupportFamily {
    pub fn new(ground: GroundSet, universe: u32, supports: Vec<IndexSet>) -> Result<SupportFamily> {
        if universe as usize > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(universe as usize));
        }
        if supports.len() != ground.len() {
            return Err(Error::WrongArity { expected: ground.len(), got: supports.len() });
        }
        if let Some(s) = supports.iter().find(|s| !s.is_subset(IndexSet::range(universe))) {
            return Err(Error::UniverseTooLarge(s.max_index() as usize));
        }
        Ok(SupportFamily { ground, universe, supports })
    }

    /// Elements `1..=n` with the given supports; the universe is the
    /// largest index that occurs.
    pub fn from_lists(lists: &[&[u32]]) -> Result<SupportFamily> {
        let supports: Vec<IndexSet> = lists.iter().map(|l| IndexSet::from_indices(l.iter().copied())).collect();
        let universe = supports.iter().map(|s| s.max_index()).max().unwrap_or(0);
        SupportFamily::new(GroundSet::numbered(lists.len())?, universe, supports)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    /// Size `k` of the universe `1..=k`.
    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn supports(&self) -> &[IndexSet] {
        &self.supports
    }

    pub fn support(&self, pos: usize) -> IndexSet {
        self.supports[pos]
    }

    /// Union of all supports.
    pub fn used_indices(&self) -> IndexSet {
        self.supports.iter().fold(IndexSet::EMPTY, |acc, &s| acc | s)
    }

    pub fn loops(&self) -> Subset {
        Subset::from_positions((0..self.len()).filter(|&p| self.supports[p].is_empty()))
    }

    pub fn has_distinct_supports(&self) -> bool {
        let mut sorted = self.supports.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Some pair with `s(e)` a proper subset of `s(f)`.
    pub fn has_nested_supports(&self) -> bool {
        self.supports.iter().enumerate().any(|(i, &a)| {
            self.supports
                .iter()
                .enumerate()
                .any(|(j, &b)| i != j && a != b && a.is_subset(b))
        })
    }

    /// The multiset `{A_i}` over used indices.
    pub fn member_sets(&self) -> SupportMultiset {
        let mut counts = BTreeMap::new();
        for index in self.used_indices().indices() {
            let members = Subset::from_positions((0..self.len()).filter(|&p| self.supports[p].contains(index)));
            *counts.entry(members).or_insert(0u32) += 1;
        }
        SupportMultiset { ground: self.ground.clone(), counts }
    }

    /// `rho(X) = |union of s(e) over e in X|`.
    pub fn rank_table(&self) -> RankTable {
        let n = self.len();
        let mut unions = vec![IndexSet::EMPTY; 1 << n];
        for mask in 1..unions.len() {
            let low = mask.trailing_zeros() as usize;
            unions[mask] = unions[mask & (mask - 1)] | self.supports[low];
        }
        RankTable::from_values(self.ground.clone(), unions.into_iter().map(|u| u.len() as i64).collect())
    }

    pub fn delete(&self, removed: Subset) -> Result<SupportFamily> {
        self.minor(removed, Subset::EMPTY)
    }

    /// Contraction keeps the universe labels; indices in contracted
    /// supports simply become unused.
    pub fn contract(&self, contracted: Subset) -> Result<SupportFamily> {
        self.minor(Subset::EMPTY, contracted)
    }

    pub fn minor(&self, deleted: Subset, contracted: Subset) -> Result<SupportFamily> {
        self.ground.check(deleted)?;
        self.ground.check(contracted)?;
        if !deleted.is_disjoint(contracted) {
            let p = deleted.intersection(contracted).positions().next().unwrap_or(0);
            return Err(Error::DuplicateElement(self.ground.name(p).to_string()));
        }
        Ok(self.minor_unchecked(deleted, contracted))
    }

    pub(crate) fn minor_unchecked(&self, deleted: Subset, contracted: Subset) -> SupportFamily {
        let removed = deleted | contracted;
        let gone = contracted.positions().fold(IndexSet::EMPTY, |acc, p| acc | self.supports[p]);
        let supports = (0..self.len())
            .filter(|&p| !removed.contains(p))
            .map(|p| self.supports[p] - gone)
            .collect();
        SupportFamily { ground: self.ground.without(removed), universe: self.universe, supports }
    }

    /// Restriction to the listed positions, in that order.
    pub fn restrict(&self, positions: &[usize]) -> SupportFamily {
        SupportFamily {
            ground: self.ground.reordered(positions),
            universe: self.universe,
            supports: positions.iter().map(|&p| self.supports[p]).collect(),
        }
    }

    /// Renumbers the used indices onto `1..=u` preserving their order.
    pub fn compressed(&self) -> SupportFamily {
        let used: Vec<u32> = self.used_indices().indices().collect();
        let supports = self
            .supports
            .iter()
            .map(|s| {
                IndexSet::from_indices(
                    used.iter().enumerate().filter(|(_, &i)| s.contains(i)).map(|(j, _)| j as u32 + 1),
                )
            })
            .collect();
        SupportFamily { ground: self.ground.clone(), universe: used.len() as u32, supports }
    }

    pub fn support_graph(&self) -> SupportGraph {
        let n = self.len();
        let mut edges = Vec::new();
        for e in 0..n {
            for f in e + 1..n {
                if !self.supports[e].is_disjoint(self.supports[f]) {
                    edges.push((e, f));
                }
            }
        }
        SupportGraph { vertices: n, edges }
    }
}

/// Rank table of a support family.
pub fn rank_from_supports(family: &SupportFamily) -> RankTable {
    family.rank_table()
}

/// Recovered list of nonempty sets `A_i` with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportMultiset {
    ground: GroundSet,
    counts: BTreeMap<Subset, u32>,
}

impl SupportMultiset {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Nonempty member sets with positive multiplicities, in subset order.
    pub fn counts(&self) -> &BTreeMap<Subset, u32> {
        &self.counts
    }

    pub fn multiplicity(&self, set: Subset) -> u32 {
        self.counts.get(&set).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.counts.values().sum()
    }

    /// A family realizing the multiset: indices are handed out to the sets
    /// in subset order, one per copy.
    pub fn to_family(&self) -> Result<SupportFamily> {
        let k = self.total();
        if k as usize > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(k as usize));
        }
        let mut supports = vec![IndexSet::EMPTY; self.ground.len()];
        let mut index = 0;
        for (&set, &count) in &self.counts {
            for _ in 0..count {
                index += 1;
                for p in set.positions() {
                    supports[p] = supports[p].with(index);
                }
            }
        }
        SupportFamily::new(self.ground.clone(), k, supports)
    }
}

/// Values `sum over Y ⊇ X of (-1)^{|Y-X|} (rho(E) - rho(Y))`, indexed by
/// the mask of `X`, by superset Möbius inversion.
fn boolean_sums(rho: &RankTable) -> Vec<i64> {
    let total = rho.total_rank();
    let mut sums: Vec<i64> = rho.values().iter().map(|v| total - v).collect();
    for bit in 0..rho.len() {
        for mask in 0..sums.len() {
            if mask >> bit & 1 == 0 {
                sums[mask] -= sums[mask | 1 << bit];
            }
        }
    }
    sums
}

/// Witness that a polymatroid is not Boolean.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deficit {
    pub set: Subset,
    pub value: i64,
}

/// Checks the Boolean inequalities. Returns the least subset (in mask
/// order) whose alternating sum is negative, if any.
pub fn is_boolean(rho: &RankTable) -> Result<Option<Deficit>> {
    if !rho.is_polymatroid() {
        return Err(Error::NotAPolymatroid);
    }
    Ok(boolean_sums(rho)
        .into_iter()
        .enumerate()
        .find(|(_, v)| *v < 0)
        .map(|(mask, value)| Deficit { set: Subset(mask as u32), value }))
}

/// Recovers the sets `A_i` of a Boolean polymatroid, taking `k = rho(E)`.
pub fn recover_supports(rho: &RankTable) -> Result<SupportMultiset> {
    if !rho.is_polymatroid() {
        return Err(Error::NotAPolymatroid);
    }
    let full = rho.ground().full();
    let mut counts = BTreeMap::new();
    for (mask, value) in boolean_sums(rho).into_iter().enumerate() {
        if value < 0 {
            return Err(Error::NotBoolean);
        }
        if value > 0 {
            let complement = full - Subset(mask as u32);
            debug_assert!(!complement.is_empty());
            counts.insert(complement, value as u32);
        }
    }
    Ok(SupportMultiset { ground: rho.ground().clone(), counts })
}

pub fn support_delete(family: &SupportFamily, removed: Subset) -> Result<SupportFamily> {
    family.delete(removed)
}

pub fn support_contract(family: &SupportFamily, contracted: Subset) -> Result<SupportFamily> {
    family.contract(contracted)
}

pub fn support_graph(family: &SupportFamily) -> SupportGraph {
    family.support_graph()
}

/// Simple graph on element positions; `edges` sorted with `e < f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SupportGraph {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let next = if a == v { b } else if b == v { a } else { continue };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Coefficients of `-c_E r_{U_{1,E}} + sum c_X r_{U_{1,X} ⊕ U_{0,E-X}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatusCoefficients {
    ground: GroundSet,
    whole: i64,
    proper: BTreeMap<Subset, i64>,
}

impl MatusCoefficients {
    /// `proper` lists `c_X` for nonempty proper subsets (absent means 0);
    /// `whole` is `c_E`.
    pub fn new(ground: GroundSet, whole: i64, proper: BTreeMap<Subset, i64>) -> Result<MatusCoefficients> {
        let n = ground.len();
        if n < 3 {
            return Err(Error::InvalidCoefficients(format!("need at least 3 elements, got {n}")));
        }
        if whole < 1 {
            return Err(Error::InvalidCoefficients(format!("c_E must be positive, got {whole}")));
        }
        let full = ground.full();
        for (&set, &c) in &proper {
            ground.check(set)?;
            if set.is_empty() || set == full {
                return Err(Error::InvalidCoefficients(format!(
                    "{} is not a nonempty proper subset",
                    ground.format_subset(set)
                )));
            }
            if c < 0 {
                return Err(Error::InvalidCoefficients(format!(
                    "c_{} = {c} is negative",
                    ground.format_subset(set)
                )));
            }
        }
        for p in 0..n {
            let hyperplane = full - Subset::singleton(p);
            let c = proper.get(&hyperplane).copied().unwrap_or(0);
            if c < whole {
                return Err(Error::InvalidCoefficients(format!(
                    "c_{} = {c} is below c_E = {whole}",
                    ground.format_subset(hyperplane)
                )));
            }
        }
        Ok(MatusCoefficients { ground, whole, proper })
    }

    /// `c_E = 1`, `c_X = 1` on every `(n-1)`-subset, 0 elsewhere.
    pub fn minimal(ground: GroundSet) -> Result<MatusCoefficients> {
        let full = ground.full();
        let proper = (0..ground.len()).map(|p| (full - Subset::singleton(p), 1)).collect();
        MatusCoefficients::new(ground, 1, proper)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }
}

/// Evaluates the Matus form; the result may or may not satisfy the axioms.
pub fn from_matus_form(c: &MatusCoefficients) -> RankTable {
    let n = c.ground.len();
    let size = 1usize << n;
    // below[m] = sum of c_Z over Z ⊆ m
    let mut below = vec![0i64; size];
    for (&set, &coef) in &c.proper {
        below[set.bits() as usize] += coef;
    }
    for bit in 0..n {
        for mask in 0..size {
            if mask >> bit & 1 == 1 {
                below[mask] += below[mask ^ 1 << bit];
            }
        }
    }
    let total = below[size - 1];
    let full = size - 1;
    let values = (0..size)
        .map(|x| if x == 0 { 0 } else { total - below[full & !x] - c.whole })
        .collect();
    RankTable::from_values(c.ground.clone(), values)
}
