//! Excluded minors for the lattice path class inside the Boolean class.
//!
//! Nine types: Boolean `n`-cycles for every `n >= 3`, the three-element
//! types `T1`..`T4` described by empty and nonempty regions of the Venn
//! diagram of the supports, and the four-element types `F1`..`F4` described
//! by the shape of the supports over a few disjoint regions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::bits::{IndexSet, Subset};
use crate::boolean::SupportFamily;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::latticepath::recognize_lattice_path;
use crate::polymatroid::GroundSet;
use crate::{MAX_SEARCH, MAX_UNIVERSE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeTag {
    LatticePath,
    Cycle(usize),
    T1,
    T2,
    T3,
    T4,
    F1,
    F2,
    F3,
    F4,
    Unclassified,
}

impl TypeTag {
    /// The nine excluded-minor types for a given largest cycle length.
    pub fn excluded_types(max_cycle: usize) -> Vec<TypeTag> {
        use TypeTag::*;
        let mut tags: Vec<TypeTag> = (3..=max_cycle).map(Cycle).collect();
        tags.extend([T1, T2, T3, T4, F1, F2, F3, F4]);
        tags
    }

    pub fn is_excluded_type(self) -> bool {
        !matches!(self, TypeTag::LatticePath | TypeTag::Unclassified)
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::LatticePath => f.write_str("lattice-path"),
            TypeTag::Cycle(n) => write!(f, "cycle{n}"),
            TypeTag::Unclassified => f.write_str("none"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for TypeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<TypeTag> {
        use TypeTag::*;
        let lower = s.to_ascii_lowercase();
        let tag = match lower.as_str() {
            "lattice-path" => LatticePath,
            "none" => Unclassified,
            "t1" => T1,
            "t2" => T2,
            "t3" => T3,
            "t4" => T4,
            "f1" => F1,
            "f2" => F2,
            "f3" => F3,
            "f4" => F4,
            _ => {
                let digits = lower
                    .strip_prefix("cycle")
                    .map(|d| d.trim_start_matches(['-', ':', '(']).trim_end_matches(')'));
                match digits.and_then(|d| d.parse::<usize>().ok()) {
                    Some(n) if n >= 3 => Cycle(n),
                    _ => return Err(Error::InvalidSizes(format!("unknown type {s:?}"))),
                }
            }
        };
        Ok(tag)
    }
}

/// Regions of the Venn diagram of three supports `s(e), s(f), s(g)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Venn3Regions {
    /// only `e`
    pub t: IndexSet,
    /// only `f`
    pub u: IndexSet,
    /// only `g`
    pub v: IndexSet,
    /// `e` and `f`, not `g`
    pub w: IndexSet,
    /// `f` and `g`, not `e`
    pub x: IndexSet,
    /// `e` and `g`, not `f`
    pub y: IndexSet,
    /// all three
    pub z: IndexSet,
}

impl Venn3Regions {
    pub fn of(e: IndexSet, f: IndexSet, g: IndexSet) -> Venn3Regions {
        Venn3Regions {
            t: e - (f | g),
            u: f - (e | g),
            v: g - (e | f),
            w: (e & f) - g,
            x: (f & g) - e,
            y: (e & g) - f,
            z: e & f & g,
        }
    }

    fn named(&self) -> Vec<(String, IndexSet)> {
        [("T", self.t), ("U", self.u), ("V", self.v), ("W", self.w), ("X", self.x), ("Y", self.y), ("Z", self.z)]
            .into_iter()
            .map(|(n, s)| (n.to_string(), s))
            .collect()
    }
}

pub fn venn3(family: &SupportFamily, e: usize, f: usize, g: usize) -> Result<Venn3Regions> {
    for p in [e, f, g] {
        if p >= family.len() {
            return Err(Error::UnknownElement(format!("#{p}")));
        }
    }
    if e == f || f == g || e == g {
        let dup = if e == f || e == g { e } else { f };
        return Err(Error::DuplicateElement(family.ground().name(dup).to_string()));
    }
    Ok(Venn3Regions::of(family.support(e), family.support(f), family.support(g)))
}

/// A type tag together with the roles played by the elements of the
/// classified family and the regions that witness the type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub tag: TypeTag,
    /// `(role, element position)`.
    pub roles: Vec<(String, usize)>,
    pub regions: Vec<(String, IndexSet)>,
}

impl Classification {
    fn bare(tag: TypeTag) -> Classification {
        Classification { tag, roles: Vec::new(), regions: Vec::new() }
    }
}

fn require_nonempty(family: &SupportFamily) -> Result<()> {
    match family.loops().positions().next() {
        Some(p) => Err(Error::EmptySupport(family.ground().name(p).to_string())),
        None => Ok(()),
    }
}

fn require_arity(family: &SupportFamily, n: usize) -> Result<()> {
    if family.len() != n {
        return Err(Error::WrongArity { expected: n, got: family.len() });
    }
    require_nonempty(family)
}

fn triple_matches(tag: TypeTag, r: &Venn3Regions) -> bool {
    let ne = |s: IndexSet| !s.is_empty();
    let em = |s: IndexSet| s.is_empty();
    match tag {
        TypeTag::Cycle(3) => em(r.z) && ne(r.w) && ne(r.x) && ne(r.y),
        TypeTag::T1 => ne(r.t) && ne(r.u) && ne(r.v) && ne(r.z),
        TypeTag::T2 => ne(r.w) && ne(r.x) && ne(r.y) && ne(r.z) && (em(r.t) || em(r.u) || em(r.v)),
        TypeTag::T3 => ne(r.t) && ne(r.u) && ne(r.w) && ne(r.z) && em(r.v) && em(r.x) && em(r.y),
        TypeTag::T4 => ne(r.t) && ne(r.w) && ne(r.y) && ne(r.z) && em(r.x) && em(r.v),
        _ => false,
    }
}

const TRIPLE_TAGS: [TypeTag; 5] = [TypeTag::Cycle(3), TypeTag::T1, TypeTag::T2, TypeTag::T3, TypeTag::T4];

fn triple_match(family: &SupportFamily, tag: TypeTag) -> Option<Classification> {
    (0..3).permutations(3).find_map(|p| {
        let r = Venn3Regions::of(family.support(p[0]), family.support(p[1]), family.support(p[2]));
        triple_matches(tag, &r).then(|| Classification {
            tag,
            roles: vec![("e".into(), p[0]), ("f".into(), p[1]), ("g".into(), p[2])],
            regions: r.named(),
        })
    })
}

/// Every three-element type whose predicate holds under some role assignment.
pub fn triple_predicates(family: &SupportFamily) -> Result<Vec<TypeTag>> {
    require_arity(family, 3)?;
    Ok(TRIPLE_TAGS.into_iter().filter(|&t| triple_match(family, t).is_some()).collect())
}

/// Classifies a three-element family as `Cycle(3)`, `T1`..`T4` or
/// `LatticePath`. The five types are mutually exclusive.
pub fn classify_triple(family: &SupportFamily) -> Result<Classification> {
    require_arity(family, 3)?;
    Ok(TRIPLE_TAGS
        .into_iter()
        .find_map(|t| triple_match(family, t))
        .unwrap_or_else(|| Classification::bare(TypeTag::LatticePath)))
}

fn regions(named: &[(&str, IndexSet)]) -> Vec<(String, IndexSet)> {
    named.iter().map(|&(n, s)| (n.to_string(), s)).collect()
}

fn pairwise_disjoint(sets: &[IndexSet]) -> bool {
    sets.iter().tuple_combinations().all(|(a, b)| a.is_disjoint(*b))
}

fn quad_regions(tag: TypeTag, s: [IndexSet; 4]) -> Option<Vec<(String, IndexSet)>> {
    let [s0, s1, s2, s3] = s;
    match tag {
        TypeTag::F1 => {
            // A∪B, A∪B∪C, B∪C∪D, B∪D
            let b = s0 & s3;
            let a = s0 - s3;
            let d = s3 - s0;
            let c = s1 - s0;
            let ok = !a.is_empty()
                && !b.is_empty()
                && !c.is_empty()
                && c.is_disjoint(d)
                && s1 == a | b | c
                && s2 == b | c | d;
            ok.then(|| regions(&[("A", a), ("B", b), ("C", c), ("D", d)]))
        }
        TypeTag::F2 => {
            let (a, b, c, d) = (s0, s1, s2, s3);
            let ok = pairwise_disjoint(&[a, b, c])
                && !(a & d).is_empty()
                && !(b & d).is_empty()
                && !(c & d).is_empty();
            ok.then(|| regions(&[("A", a), ("B", b), ("C", c), ("D", d)]))
        }
        TypeTag::F3 => {
            let (a, a1, b, c) = (s0, s1, s2, s3);
            let rest = a - a1;
            let ok = a1.is_subset(a)
                && a1 != a
                && b.is_disjoint(c)
                && b.is_disjoint(rest)
                && c.is_disjoint(rest)
                && !b.is_disjoint(a1)
                && !c.is_disjoint(a1);
            ok.then(|| regions(&[("A", a), ("A'", a1), ("B", b), ("C", c)]))
        }
        TypeTag::F4 => {
            // A∪B∪C, B∪C∪D, C∪D∪E, A∪C∪E
            let c = s0 & s1 & s2 & s3;
            let a = (s0 & s3) - c;
            let b = (s0 & s1) - c;
            let d = (s1 & s2) - c;
            let e = (s2 & s3) - c;
            let parts = [a, b, c, d, e];
            let ok = parts.iter().all(|p| !p.is_empty())
                && pairwise_disjoint(&parts)
                && s0 == a | b | c
                && s1 == b | c | d
                && s2 == c | d | e
                && s3 == a | c | e;
            ok.then(|| regions(&[("A", a), ("B", b), ("C", c), ("D", d), ("E", e)]))
        }
        _ => None,
    }
}

fn quad_roles(tag: TypeTag) -> [&'static str; 4] {
    match tag {
        TypeTag::F1 => ["AB", "ABC", "BCD", "BD"],
        TypeTag::F2 => ["A", "B", "C", "D"],
        TypeTag::F3 => ["A", "A'", "B", "C"],
        _ => ["ABC", "BCD", "CDE", "ACE"],
    }
}

const QUAD_TAGS: [TypeTag; 5] = [TypeTag::F1, TypeTag::F2, TypeTag::F3, TypeTag::F4, TypeTag::Cycle(4)];

fn quad_match(family: &SupportFamily, tag: TypeTag) -> Option<Classification> {
    if tag == TypeTag::Cycle(4) {
        return cycle_classification(family);
    }
    (0..4).permutations(4).find_map(|p| {
        let s = [p[0], p[1], p[2], p[3]].map(|e| family.support(e));
        quad_regions(tag, s).map(|regions| Classification {
            tag,
            roles: quad_roles(tag).iter().zip(&p).map(|(r, &e)| (r.to_string(), e)).collect(),
            regions,
        })
    })
}

/// Every four-element type whose predicate holds under some role assignment.
pub fn quad_predicates(family: &SupportFamily) -> Result<Vec<TypeTag>> {
    require_arity(family, 4)?;
    Ok(QUAD_TAGS.into_iter().filter(|&t| quad_match(family, t).is_some()).collect())
}

/// Tests `F1`, `F2`, `F3`, `F4` and `Cycle(4)` in that order and reports the
/// first that matches, or `Unclassified`.
pub fn classify_quad(family: &SupportFamily) -> Result<Classification> {
    require_arity(family, 4)?;
    Ok(QUAD_TAGS
        .into_iter()
        .find_map(|t| quad_match(family, t))
        .unwrap_or_else(|| Classification::bare(TypeTag::Unclassified)))
}

/// `s(e_i) = Z_{2i-1} ∪ Z_{2i} ∪ Z_{2i+1}` with indices taken mod `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Element positions `e_1, ..., e_n` in cyclic order.
    pub order: Vec<usize>,
    /// `regions[j]` is `Z_{j+1}`.
    pub regions: Vec<IndexSet>,
}

/// Finds a Boolean cycle structure. Each used index must lie in one support
/// or in the supports of two cyclically adjacent elements, and the pairs
/// realized this way must form a single cycle through every element.
pub fn is_boolean_cycle(family: &SupportFamily) -> Result<Option<CycleDecomposition>> {
    let n = family.len();
    if n < 3 {
        return Err(Error::TooFewElements(n));
    }
    require_nonempty(family)?;
    Ok(find_cycle(family))
}

fn find_cycle(family: &SupportFamily) -> Option<CycleDecomposition> {
    let n = family.len();
    let supports = family.supports();
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in family.used_indices().indices() {
        let holders: Vec<usize> = (0..n).filter(|&e| supports[e].contains(i)).collect();
        match holders[..] {
            [_] => {}
            [a, b] => {
                if !neighbours[a].contains(&b) {
                    neighbours[a].push(b);
                    neighbours[b].push(a);
                }
            }
            _ => return None,
        }
    }
    if neighbours.iter().any(|nb| nb.len() != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut at = *neighbours[0].iter().min()?;
    while at != 0 {
        order.push(at);
        let next = if neighbours[at][0] == prev { neighbours[at][1] } else { neighbours[at][0] };
        prev = at;
        at = next;
        if order.len() > n {
            return None;
        }
    }
    if order.len() != n {
        return None;
    }
    let s = |i: usize| supports[order[i % n]];
    let mut regions = Vec::with_capacity(2 * n);
    for i in 0..n {
        let before = s(i + n - 1);
        let after = s(i + 1);
        regions.push(before & s(i));
        regions.push(s(i) - before - after);
    }
    let ok = (0..n).all(|i| s(i) == regions[2 * i] | regions[2 * i + 1] | regions[(2 * i + 2) % (2 * n)])
        && regions.iter().step_by(2).all(|z| !z.is_empty())
        && pairwise_disjoint(&regions);
    ok.then_some(CycleDecomposition { order, regions })
}

fn cycle_classification(family: &SupportFamily) -> Option<Classification> {
    let d = find_cycle(family)?;
    Some(Classification {
        tag: TypeTag::Cycle(family.len()),
        roles: d.order.iter().enumerate().map(|(i, &e)| (format!("e{}", i + 1), e)).collect(),
        regions: d.regions.iter().enumerate().map(|(i, &z)| (format!("Z{}", i + 1), z)).collect(),
    })
}

/// Excluded-minor type of a loopless family, if it has one.
fn typed(family: &SupportFamily) -> Option<Classification> {
    if !family.loops().is_empty() {
        return None;
    }
    match family.len() {
        0..=2 => None,
        3 => classify_triple(family).ok().filter(|c| c.tag.is_excluded_type()),
        4 => classify_quad(family).ok().filter(|c| c.tag.is_excluded_type()),
        _ => cycle_classification(family),
    }
}

/// Classifies any family: an excluded-minor type when one applies, else
/// `LatticePath` or `Unclassified`. Loops are stripped first.
pub fn classify(family: &SupportFamily) -> Classification {
    let loops = family.loops();
    let loopless;
    let (stripped, kept) = if loops.is_empty() {
        (family, (0..family.len()).collect::<Vec<_>>())
    } else {
        log::warn!("ignoring {} loop element(s) before classification", loops.len());
        let kept: Vec<usize> = (0..family.len()).filter(|&p| !loops.contains(p)).collect();
        loopless = family.restrict(&kept);
        (&loopless, kept)
    };
    match typed(stripped) {
        Some(mut c) => {
            for role in &mut c.roles {
                role.1 = kept[role.1];
            }
            c
        }
        None if recognize_lattice_path(stripped).is_some() => Classification::bare(TypeTag::LatticePath),
        None => Classification::bare(TypeTag::Unclassified),
    }
}

/// Region names accepted by [`generate_type_instance`] for a tag, in the
/// order their index blocks are laid out.
pub fn region_names(tag: TypeTag) -> Result<Vec<String>> {
    let names: Vec<String> = match tag {
        TypeTag::Cycle(n) if n >= 3 => (1..=2 * n).map(|i| format!("Z{i}")).collect(),
        TypeTag::T1 | TypeTag::T2 | TypeTag::T3 | TypeTag::T4 => {
            ["T", "U", "V", "W", "X", "Y", "Z"].map(String::from).to_vec()
        }
        TypeTag::F1 => ["A", "B", "C", "D"].map(String::from).to_vec(),
        TypeTag::F2 => ["A0", "AD", "B0", "BD", "C0", "CD", "D0"].map(String::from).to_vec(),
        TypeTag::F3 => ["A0", "A1", "AB", "AC", "B0", "C0"].map(String::from).to_vec(),
        TypeTag::F4 => ["A", "B", "C", "D", "E"].map(String::from).to_vec(),
        other => return Err(Error::InvalidSizes(format!("no generator for {other}"))),
    };
    Ok(names)
}

/// Regions that must be nonempty and regions that must be empty.
fn size_constraints(tag: TypeTag) -> (Vec<String>, Vec<String>) {
    let v = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    match tag {
        TypeTag::Cycle(n) => ((1..=n).map(|i| format!("Z{}", 2 * i - 1)).collect(), Vec::new()),
        TypeTag::T1 => (v(&["T", "U", "V", "Z"]), v(&[])),
        TypeTag::T2 => (v(&["W", "X", "Y", "Z"]), v(&[])),
        TypeTag::T3 => (v(&["T", "U", "W", "Z"]), v(&["V", "X", "Y"])),
        TypeTag::T4 => (v(&["T", "W", "Y", "Z"]), v(&["X", "V"])),
        TypeTag::F1 => (v(&["A", "B", "C"]), v(&[])),
        TypeTag::F2 => (v(&["AD", "BD", "CD"]), v(&[])),
        TypeTag::F3 => (v(&["A0", "AB", "AC"]), v(&[])),
        TypeTag::F4 => (v(&["A", "B", "C", "D", "E"]), v(&[])),
        _ => (Vec::new(), Vec::new()),
    }
}

/// Builds an instance of `tag` with the requested region sizes; regions get
/// consecutive index blocks in [`region_names`] order and missing regions
/// are empty.
pub fn generate_type_instance(tag: TypeTag, sizes: &BTreeMap<String, u32>) -> Result<SupportFamily> {
    let names = region_names(tag)?;
    if let TypeTag::Cycle(n) = tag {
        if n > crate::MAX_GROUND {
            return Err(Error::InvalidSizes(format!("cycle length {n} exceeds the ground-set cap")));
        }
    }
    if let Some(unknown) = sizes.keys().find(|k| !names.contains(k)) {
        return Err(Error::InvalidSizes(format!("unknown region {unknown:?} for {tag}")));
    }
    let size = |name: &str| sizes.get(name).copied().unwrap_or(0);
    let (nonempty, empty) = size_constraints(tag);
    if let Some(r) = nonempty.iter().find(|r| size(r) == 0) {
        return Err(Error::InvalidSizes(format!("region {r} must be nonempty for {tag}")));
    }
    if let Some(r) = empty.iter().find(|r| size(r) != 0) {
        return Err(Error::InvalidSizes(format!("region {r} must be empty for {tag}")));
    }
    if tag == TypeTag::T2 && ["T", "U", "V"].iter().all(|r| size(r) > 0) {
        return Err(Error::InvalidSizes("one of T, U, V must be empty for T2".into()));
    }
    let total: u32 = names.iter().map(|n| size(n)).sum();
    if total as usize > MAX_UNIVERSE {
        return Err(Error::InvalidSizes(format!("{total} indices exceed the universe cap")));
    }

    let mut blocks: BTreeMap<&str, IndexSet> = BTreeMap::new();
    let mut next = 1;
    for name in &names {
        let n = size(name);
        blocks.insert(name, IndexSet::from_indices(next..next + n));
        next += n;
    }
    let union = |parts: &[&str]| parts.iter().fold(IndexSet::EMPTY, |acc, p| acc | blocks[p]);
    let supports: Vec<IndexSet> = match tag {
        TypeTag::Cycle(n) => {
            let z = |j: usize| blocks[names[(j - 1) % (2 * n)].as_str()];
            (1..=n).map(|i| z(2 * i - 1) | z(2 * i) | z(2 * i + 1)).collect()
        }
        TypeTag::T1 | TypeTag::T2 | TypeTag::T3 | TypeTag::T4 => vec![
            union(&["T", "W", "Y", "Z"]),
            union(&["U", "W", "X", "Z"]),
            union(&["V", "X", "Y", "Z"]),
        ],
        TypeTag::F1 => vec![union(&["A", "B"]), union(&["A", "B", "C"]), union(&["B", "C", "D"]), union(&["B", "D"])],
        TypeTag::F2 => vec![
            union(&["A0", "AD"]),
            union(&["B0", "BD"]),
            union(&["C0", "CD"]),
            union(&["AD", "BD", "CD", "D0"]),
        ],
        TypeTag::F3 => vec![
            union(&["A0", "A1", "AB", "AC"]),
            union(&["A1", "AB", "AC"]),
            union(&["AB", "B0"]),
            union(&["AC", "C0"]),
        ],
        TypeTag::F4 => vec![
            union(&["A", "B", "C"]),
            union(&["B", "C", "D"]),
            union(&["C", "D", "E"]),
            union(&["A", "C", "E"]),
        ],
        _ => unreachable!("rejected by region_names"),
    };
    SupportFamily::new(GroundSet::numbered(supports.len())?, total, supports)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedMinorWitness {
    pub delete: Subset,
    pub contract: Subset,
    pub tag: TypeTag,
    /// `(role, element position in the searched family)`.
    pub roles: Vec<(String, usize)>,
}

impl ExcludedMinorWitness {
    pub fn minor(&self, family: &SupportFamily) -> Result<SupportFamily> {
        family.minor(self.delete, self.contract)
    }

    pub fn report(&self, family: &SupportFamily) -> String {
        let g = family.ground();
        let roles = self.roles.iter().map(|(r, e)| format!("{r}={}", g.name(*e))).join(" ");
        format!(
            "status: excluded-minor-found\ndelete: {}\ncontract: {}\ntype: {}\nroles: {roles}\n",
            g.format_subset(self.delete),
            g.format_subset(self.contract),
            self.tag
        )
    }
}

/// Report for a search result, `status: lattice-path` when nothing was found.
pub fn witness_report(family: &SupportFamily, witness: Option<&ExcludedMinorWitness>) -> String {
    match witness {
        Some(w) => w.report(family),
        None => "status: lattice-path\n".to_string(),
    }
}

pub fn find_excluded_minor(family: &SupportFamily) -> Result<Option<ExcludedMinorWitness>> {
    find_excluded_minor_with(family, Execution::default())
}

/// Searches minors by number of removed elements, then by more deletions
/// first, then lexicographically by deletion and contraction sets. The
/// first minor carrying an excluded-minor type is returned.
pub fn find_excluded_minor_with(family: &SupportFamily, exec: Execution) -> Result<Option<ExcludedMinorWitness>> {
    let n = family.len();
    if n > MAX_SEARCH {
        return Err(Error::TooLarge(format!("minor search is limited to {MAX_SEARCH} elements, got {n}")));
    }
    for removed in 0..=n.saturating_sub(3) {
        for deletions in (0..=removed).rev() {
            let contractions = removed - deletions;
            let candidates: Vec<(Subset, Subset)> = (0..n)
                .combinations(deletions)
                .flat_map(|del| {
                    let rest: Vec<usize> = (0..n).filter(|p| !del.contains(p)).collect();
                    let del = Subset::from_positions(del);
                    rest.into_iter()
                        .combinations(contractions)
                        .map(move |con| (del, Subset::from_positions(con)))
                })
                .collect();
            let hit = exec.find_first(&candidates, |&(del, con)| {
                let minor = family.minor_unchecked(del, con);
                typed(&minor).map(|c| {
                    let kept: Vec<usize> = (0..n).filter(|&p| !(del | con).contains(p)).collect();
                    ExcludedMinorWitness {
                        delete: del,
                        contract: con,
                        tag: c.tag,
                        roles: c.roles.into_iter().map(|(r, e)| (r, kept[e])).collect(),
                    }
                })
            });
            if hit.is_some() {
                return Ok(hit);
            }
        }
    }
    Ok(None)
}

/// Not lattice path, while every single-element deletion and contraction is.
pub fn verify_excluded_minor(family: &SupportFamily) -> bool {
    let lp = |f: &SupportFamily| recognize_lattice_path(f).is_some();
    if family.is_empty() || lp(family) {
        return false;
    }
    (0..family.len()).all(|e| {
        let one = Subset::singleton(e);
        lp(&family.minor_unchecked(one, Subset::EMPTY)) && lp(&family.minor_unchecked(Subset::EMPTY, one))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn fam(lists: &[&[u32]]) -> SupportFamily {
        SupportFamily::from_lists(lists).unwrap()
    }

    fn sizes(pairs: &[(&str, u32)]) -> BTreeMap<String, u32> {
        pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    fn set(l: &[u32]) -> IndexSet {
        IndexSet::from_indices(l.iter().copied())
    }

    #[test]
    fn venn_regions() {
        let r = venn3(&fam(&[&[1, 2], &[1, 3], &[1, 4]]), 0, 1, 2).unwrap();
        assert_eq!((r.z, r.t, r.u, r.v), (set(&[1]), set(&[2]), set(&[3]), set(&[4])));
        assert!(r.w.is_empty() && r.x.is_empty() && r.y.is_empty());
        let r = venn3(&fam(&[&[1], &[2], &[3]]), 0, 1, 2).unwrap();
        assert_eq!((r.t, r.u, r.v), (set(&[1]), set(&[2]), set(&[3])));
        assert!(r.z.is_empty() && r.w.is_empty());
        let r = venn3(&fam(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]]), 0, 1, 2).unwrap();
        assert_eq!((r.z, r.w, r.y, r.x), (set(&[1]), set(&[2]), set(&[3]), set(&[4])));
        assert!(r.t.is_empty() && r.u.is_empty() && r.v.is_empty());
    }

    #[test]
    fn venn_errors() {
        let f = coplanar_lines();
        assert!(matches!(venn3(&f, 0, 1, 5), Err(Error::UnknownElement(_))));
        assert!(matches!(venn3(&f, 0, 1, 1), Err(Error::DuplicateElement(_))));
    }

    #[test]
    fn triple_examples() {
        assert_eq!(classify_triple(&fam(&[&[1, 2, 3], &[1, 2, 4], &[1]])).unwrap().tag, TypeTag::T3);
        assert_eq!(classify_triple(&fam(&[&[1, 2, 3, 4], &[1, 2], &[1, 3]])).unwrap().tag, TypeTag::T4);
        assert_eq!(classify_triple(&fam(&[&[1], &[1, 2], &[2]])).unwrap().tag, TypeTag::LatticePath);
        assert_eq!(classify_triple(&fam(&[&[1, 2], &[1, 3], &[1, 4]])).unwrap().tag, TypeTag::T1);
        assert_eq!(classify_triple(&fam(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]])).unwrap().tag, TypeTag::T2);
        assert_eq!(classify_triple(&coplanar_lines()).unwrap().tag, TypeTag::Cycle(3));
    }

    #[test]
    fn triple_errors() {
        assert!(matches!(classify_triple(&fam(&[&[1], &[2]])), Err(Error::WrongArity { expected: 3, got: 2 })));
        assert!(matches!(classify_triple(&fam(&[&[1], &[], &[2]])), Err(Error::EmptySupport(_))));
    }

    #[test]
    fn quad_examples() {
        assert_eq!(classify_quad(&fam(&[&[1], &[2], &[3], &[1, 2, 3]])).unwrap().tag, TypeTag::F2);
        let c = classify_quad(&fam(&[&[1], &[2], &[1, 2], &[1, 2, 3]])).unwrap();
        assert_eq!(c.tag, TypeTag::F3);
        let role = |r: &str| c.roles.iter().find(|(n, _)| n == r).unwrap().1;
        assert_eq!((role("A"), role("A'")), (3, 2));
        assert_eq!([role("B"), role("C")].iter().copied().sorted().collect::<Vec<_>>(), vec![0, 1]);
        let c = classify_quad(&fam(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 3, 5]])).unwrap();
        assert_eq!(c.tag, TypeTag::F4);
        let regions: Vec<IndexSet> = c.regions.iter().map(|r| r.1).collect();
        assert_eq!(regions, (1..=5).map(IndexSet::singleton).collect::<Vec<_>>());
        assert_eq!(classify_quad(&fam(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]])).unwrap().tag, TypeTag::Cycle(4));
        assert_eq!(classify_quad(&fam(&[&[1], &[2], &[3], &[4]])).unwrap().tag, TypeTag::Unclassified);
    }

    #[test]
    fn cycles() {
        let d = is_boolean_cycle(&coplanar_lines()).unwrap().unwrap();
        assert_eq!(d.order, vec![0, 1, 2]);
        let expect = [set(&[1]), set(&[]), set(&[2]), set(&[]), set(&[3]), set(&[])];
        assert_eq!(d.regions, expect);
        let d = is_boolean_cycle(&fam(&[&[1, 2, 3], &[3, 4, 5], &[5, 6, 1]])).unwrap().unwrap();
        assert_eq!(d.regions, (1..=6).map(IndexSet::singleton).collect::<Vec<_>>());
        assert_eq!(is_boolean_cycle(&fam(&[&[1], &[2], &[3]])).unwrap(), None);
        assert_eq!(is_boolean_cycle(&fam(&[&[1], &[1]])), Err(Error::TooFewElements(2)));
        assert!(matches!(is_boolean_cycle(&fam(&[&[1], &[], &[2]])), Err(Error::EmptySupport(_))));
        // two disjoint triangles are not one cycle
        let two = fam(&[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6]]);
        assert_eq!(is_boolean_cycle(&two).unwrap(), None);
    }

    #[test]
    fn generator_examples() {
        let t1 = generate_type_instance(TypeTag::T1, &sizes(&[("T", 1), ("U", 1), ("V", 1), ("Z", 1)])).unwrap();
        assert_eq!(t1.supports(), &[set(&[1, 4]), set(&[2, 4]), set(&[3, 4])]);
        let mut odd = sizes(&[]);
        for i in (1..=9).step_by(2) {
            odd.insert(format!("Z{i}"), 1);
        }
        let c5 = generate_type_instance(TypeTag::Cycle(5), &odd).unwrap();
        assert_eq!(c5.supports(), &[set(&[1, 2]), set(&[2, 3]), set(&[3, 4]), set(&[4, 5]), set(&[5, 1])]);
        let f4 = generate_type_instance(
            TypeTag::F4,
            &sizes(&[("A", 2), ("B", 2), ("C", 2), ("D", 2), ("E", 2)]),
        )
        .unwrap();
        assert_eq!(f4.universe(), 10);
        assert!(f4.supports().iter().all(|s| s.len() == 6));
        assert_eq!(classify_quad(&f4).unwrap().tag, TypeTag::F4);
    }

    #[test]
    fn generator_rejects_bad_sizes() {
        let bad = [
            (TypeTag::T1, sizes(&[("T", 1), ("U", 1), ("V", 1)])),
            (TypeTag::T2, sizes(&[("T", 1), ("U", 1), ("V", 1), ("W", 1), ("X", 1), ("Y", 1), ("Z", 1)])),
            (TypeTag::T3, sizes(&[("T", 1), ("U", 1), ("W", 1), ("Z", 1), ("Y", 1)])),
            (TypeTag::F1, sizes(&[("A", 1), ("B", 1), ("Q", 1)])),
            (TypeTag::F4, sizes(&[("A", 9), ("B", 9), ("C", 9), ("D", 9), ("E", 9)])),
            (TypeTag::LatticePath, sizes(&[])),
        ];
        for (tag, s) in bad {
            assert!(matches!(generate_type_instance(tag, &s), Err(Error::InvalidSizes(_))), "{tag}");
        }
    }

    #[test]
    fn witness_search() {
        assert_eq!(find_excluded_minor(&staircase9()).unwrap(), None);
        let f2 = fam(&[&[1], &[2], &[3], &[1, 2, 3]]);
        let w = find_excluded_minor(&f2).unwrap().unwrap();
        assert_eq!((w.delete, w.contract, w.tag), (Subset::EMPTY, Subset::EMPTY, TypeTag::F2));
        let big = SupportFamily::from_lists(&[&[1; 0]; 11].map(|_| &[1u32][..])).unwrap();
        assert!(matches!(find_excluded_minor(&big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn witness_with_extra_element() {
        let f = fam(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 3, 5], &[6]]);
        for mode in [Execution::Sequential, Execution::Parallel] {
            let w = find_excluded_minor_with(&f, mode).unwrap().unwrap();
            assert_eq!(w.delete, Subset::singleton(4));
            assert_eq!(w.contract, Subset::EMPTY);
            assert_eq!(w.tag, TypeTag::F4);
            assert_eq!(classify(&w.minor(&f).unwrap()).tag, TypeTag::F4);
        }
        let report = find_excluded_minor(&f).unwrap().unwrap().report(&f);
        assert!(report.starts_with("status: excluded-minor-found\ndelete: {5}\ncontract: {}\ntype: F4\n"));
    }

    #[test]
    fn verification_examples() {
        assert!(!verify_excluded_minor(&staircase9()));
        let f4 = fam(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 3, 5]]);
        assert!(verify_excluded_minor(&f4));
        assert!(!verify_excluded_minor(&f4.delete(Subset::singleton(0)).unwrap()));
        assert!(verify_excluded_minor(&coplanar_lines()));
    }

    #[test]
    fn tag_names_round_trip() {
        for tag in TypeTag::excluded_types(6).into_iter().chain([TypeTag::LatticePath, TypeTag::Unclassified]) {
            assert_eq!(tag.to_string().parse::<TypeTag>().unwrap(), tag);
        }
        assert_eq!("Cycle(4)".parse::<TypeTag>().unwrap(), TypeTag::Cycle(4));
        assert!("cycle2".parse::<TypeTag>().is_err());
    }

    #[test]
    fn classify_strips_loops() {
        let f = fam(&[&[1, 2], &[], &[2, 3], &[1, 3]]);
        let c = classify(&f);
        assert_eq!(c.tag, TypeTag::Cycle(3));
        assert_eq!(c.roles.iter().map(|r| r.1).collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(classify(&staircase9()).tag, TypeTag::LatticePath);
    }
}
