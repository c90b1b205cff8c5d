//! Lattice path recognition.
//!
//! A family is lattice path when its elements and its used universe indices
//! can both be ordered so that every support is an interval `[a_i, b_i]` of
//! the index order with `a` and `b` non-decreasing along the element order.
//!
//! Fix an element order and look at each index `i` from the other side: the
//! elements whose supports contain `i` must form an interval `[l_i, r_i]` of
//! element positions, and no two of these column intervals may be strictly
//! nested (`l_p < l_q` together with `r_q < r_p`). Under those two conditions
//! sorting the indices by `(l, r)` realizes the order, and both are forced
//! by any realization. The search below builds element orders left to right
//! and rejects a prefix as soon as either condition is breached.

use itertools::Itertools;

use crate::bits::{IndexSet, Subset};
use crate::boolean::SupportFamily;
use crate::error::{Error, Result};
use crate::polymatroid::is_permutation;

/// Position range of a support within the universe order, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interval {
    Loop,
    Span(u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePathCertificate {
    /// Element positions of the family, loops first.
    pub element_order: Vec<usize>,
    /// The used universe indices, in order.
    pub universe_order: Vec<u32>,
    /// `intervals[i]` belongs to `element_order[i]`.
    pub intervals: Vec<Interval>,
}

impl LatticePathCertificate {
    pub fn interval_of(&self, element: usize) -> Option<Interval> {
        self.element_order
            .iter()
            .position(|&e| e == element)
            .map(|i| self.intervals[i])
    }
}

const NO_POS: u8 = u8::MAX;

struct Search<'a> {
    supports: &'a [IndexSet],
    candidates: Vec<usize>,
    placed: Vec<usize>,
    placed_mask: Subset,
    closed: IndexSet,
    open: IndexSet,
    first_seen: [u8; 33],
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        if self.placed.len() == self.candidates.len() {
            return true;
        }
        let t = self.placed.len() as u8;
        for ci in 0..self.candidates.len() {
            let x = self.candidates[ci];
            if self.placed_mask.contains(x) {
                continue;
            }
            let sx = self.supports[x];
            // equal supports are interchangeable; take them in input order
            if self.candidates[..ci]
                .iter()
                .any(|&y| !self.placed_mask.contains(y) && self.supports[y] == sx)
            {
                continue;
            }
            if !sx.is_disjoint(self.closed) {
                continue;
            }
            let closing = self.open - sx;
            let continuing = self.open & sx;
            let nested = closing.indices().any(|p| {
                let lp = self.first_seen[p as usize];
                continuing.indices().any(|q| self.first_seen[q as usize] < lp)
            });
            if nested {
                continue;
            }
            let closed = self.closed | closing;
            let blocked = self
                .candidates
                .iter()
                .any(|&y| y != x && !self.placed_mask.contains(y) && !self.supports[y].is_disjoint(closed));
            if blocked {
                continue;
            }

            let opened = sx - self.open;
            for q in opened.indices() {
                self.first_seen[q as usize] = t;
            }
            let (saved_closed, saved_open) = (self.closed, self.open);
            self.closed = closed;
            self.open = sx;
            self.placed.push(x);
            self.placed_mask = self.placed_mask.with(x);
            if self.run() {
                return true;
            }
            self.placed.pop();
            self.placed_mask = Subset(self.placed_mask.bits() & !(1 << x));
            self.closed = saved_closed;
            self.open = saved_open;
            for q in opened.indices() {
                self.first_seen[q as usize] = NO_POS;
            }
        }
        false
    }
}

/// Returns a certificate when the family is lattice path. Loops come first;
/// the remaining elements appear in the lexicographically least valid order
/// by input position.
pub fn recognize_lattice_path(family: &SupportFamily) -> Option<LatticePathCertificate> {
    let supports = family.supports();
    let (loops, candidates): (Vec<usize>, Vec<usize>) =
        (0..family.len()).partition(|&p| supports[p].is_empty());
    let mut search = Search {
        supports,
        candidates,
        placed: Vec::with_capacity(family.len()),
        placed_mask: Subset::EMPTY,
        closed: IndexSet::EMPTY,
        open: IndexSet::EMPTY,
        first_seen: [NO_POS; 33],
    };
    if !search.run() {
        return None;
    }
    let order = search.placed;
    let certificate = certificate_for_order(family, &loops, &order);
    debug_assert_eq!(validate_certificate(family, &certificate), Ok(true));
    Some(certificate)
}

/// Builds the certificate for a valid lattice path order of the nonloop
/// elements: indices sorted by their column intervals `(l, r)`.
fn certificate_for_order(family: &SupportFamily, loops: &[usize], order: &[usize]) -> LatticePathCertificate {
    let supports = family.supports();
    let columns = family.used_indices().indices().map(|i| {
        let mut members = order.iter().positions(|&e| supports[e].contains(i));
        let l = members.next().unwrap_or(0);
        let r = members.next_back().unwrap_or(l);
        (l, r, i)
    });
    let universe_order: Vec<u32> = columns.sorted().map(|(_, _, i)| i).collect();
    let mut position = [0u32; 33];
    for (p, &i) in universe_order.iter().enumerate() {
        position[i as usize] = p as u32 + 1;
    }
    let mut element_order = loops.to_vec();
    element_order.extend_from_slice(order);
    let intervals = element_order
        .iter()
        .map(|&e| {
            let s = supports[e];
            match (s.indices().map(|i| position[i as usize]).minmax()).into_option() {
                None => Interval::Loop,
                Some((a, b)) => Interval::Span(a, b),
            }
        })
        .collect();
    LatticePathCertificate { element_order, universe_order, intervals }
}

/// Checks both certificate conditions against the family.
pub fn validate_certificate(family: &SupportFamily, cert: &LatticePathCertificate) -> Result<bool> {
    let n = family.len();
    if !is_permutation(&cert.element_order, n) {
        return Err(Error::MalformedCertificate("element order is not a permutation of the ground set".into()));
    }
    if cert.intervals.len() != n {
        return Err(Error::MalformedCertificate(format!("{} intervals for {n} elements", cert.intervals.len())));
    }
    let listed = IndexSet::from_indices(cert.universe_order.iter().copied().filter(|i| (1..=32).contains(i)));
    if listed.len() != cert.universe_order.len() || listed != family.used_indices() {
        return Err(Error::MalformedCertificate("universe order does not list exactly the used indices".into()));
    }
    let mut last: Option<(u32, u32)> = None;
    for (&e, &interval) in cert.element_order.iter().zip(&cert.intervals) {
        let support = family.support(e);
        match interval {
            Interval::Loop => {
                if !support.is_empty() {
                    return Ok(false);
                }
            }
            Interval::Span(a, b) => {
                if a < 1 || a > b || b as usize > cert.universe_order.len() {
                    return Ok(false);
                }
                let covered = IndexSet::from_indices(cert.universe_order[a as usize - 1..b as usize].iter().copied());
                if covered != support {
                    return Ok(false);
                }
                if let Some((pa, pb)) = last {
                    if a < pa || b < pb {
                        return Ok(false);
                    }
                }
                last = Some((a, b));
            }
        }
    }
    Ok(true)
}

/// Whether, in `order`, the elements whose supports contain `S` are
/// consecutive for every nonempty `S` inside some support.
///
/// Only singletons of used indices and nonempty pairwise intersections of
/// supports are examined: the elements containing `S` are the intersection
/// of the element sets of its indices, and intervals intersect to intervals.
pub fn check_s3(family: &SupportFamily, order: &[usize]) -> Result<bool> {
    if !is_permutation(order, family.len()) {
        return Err(Error::NotAPermutation);
    }
    let supports: Vec<IndexSet> = order.iter().map(|&e| family.support(e)).collect();
    let consecutive = |s: IndexSet| {
        let hits: Vec<usize> = supports.iter().positions(|&sup| s.is_subset(sup)).collect();
        hits.windows(2).all(|w| w[1] == w[0] + 1)
    };
    let singletons = family.used_indices().indices().map(IndexSet::singleton);
    let pairs = supports
        .iter()
        .tuple_combinations()
        .map(|(&a, &b)| a & b)
        .filter(|s| !s.is_empty());
    Ok(singletons.chain(pairs).all(consecutive))
}

pub const BRUTE_FORCE_LIMIT: usize = 7;

/// Exhaustive search over element and universe orders.
pub fn brute_force_lp(family: &SupportFamily) -> Result<bool> {
    let used: Vec<u32> = family.used_indices().indices().collect();
    if family.len() > BRUTE_FORCE_LIMIT || used.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(format!(
            "exhaustive search is limited to {BRUTE_FORCE_LIMIT} elements and {BRUTE_FORCE_LIMIT} used indices"
        )));
    }
    let elements: Vec<IndexSet> = family.supports().iter().copied().filter(|s| !s.is_empty()).collect();
    let m = elements.len();
    let mut spans = vec![(0usize, 0usize); m];
    for universe in used.iter().copied().permutations(used.len()) {
        let mut position = [0usize; 33];
        for (p, &i) in universe.iter().enumerate() {
            position[i as usize] = p;
        }
        // (S1) does not depend on the element order
        let all_intervals = elements.iter().zip(spans.iter_mut()).all(|(s, span)| {
            let (a, b) = s.indices().map(|i| position[i as usize]).minmax().into_option().unwrap();
            *span = (a, b);
            b - a + 1 == s.len()
        });
        if !all_intervals {
            continue;
        }
        let found = (0..m).permutations(m).any(|order| {
            order
                .windows(2)
                .all(|w| spans[w[0]].0 <= spans[w[1]].0 && spans[w[0]].1 <= spans[w[1]].1)
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}
