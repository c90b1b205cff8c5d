//! Line-based text formats for rank tables and support families.
//!
//! ```text
//! polymatroid rank
//! elements: a b
//! {a}: 1
//! {b}: 1
//! {a,b}: 1
//! ```
//!
//! ```text
//! polymatroid supports
//! n=2 k=3
//! a: 1 2
//! b: -
//! ```
//!
//! Blank lines and lines starting with `#` are skipped.

use std::fmt::Write;

use crate::bits::{IndexSet, Subset};
use crate::boolean::SupportFamily;
use crate::error::{Error, Result};
use crate::polymatroid::{make_rank_table, GroundSet, RankTable};

pub const RANK_HEADER: &str = "polymatroid rank";
pub const SUPPORTS_HEADER: &str = "polymatroid supports";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Rank(RankTable),
    Supports(SupportFamily),
}

impl Document {
    pub fn ground(&self) -> &GroundSet {
        match self {
            Document::Rank(t) => t.ground(),
            Document::Supports(f) => f.ground(),
        }
    }

    pub fn rank_table(&self) -> RankTable {
        match self {
            Document::Rank(t) => t.clone(),
            Document::Supports(f) => f.rank_table(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Document::Rank(t) => write_rank_table(t),
            Document::Supports(f) => write_support_family(f),
        }
    }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Picks the format from the first content line.
pub fn parse_document(text: &str) -> Result<Document> {
    match content_lines(text).next() {
        Some((_, RANK_HEADER)) => parse_rank_table(text).map(Document::Rank),
        Some((_, SUPPORTS_HEADER)) => parse_support_family(text).map(Document::Supports),
        Some((line, other)) => Err(Error::parse(line, format!("unknown header {other:?}"))),
        None => Err(Error::parse(1, "empty input")),
    }
}

fn expect_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, header: &str) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l == header => Ok(()),
        Some((line, l)) => Err(Error::parse(line, format!("expected {header:?}, found {l:?}"))),
        None => Err(Error::parse(1, format!("expected {header:?}"))),
    }
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Parse { .. } => e,
        e => Error::parse(line, e.to_string()),
    }
}

pub fn parse_rank_table(text: &str) -> Result<RankTable> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, RANK_HEADER)?;
    let (line, elements) = lines.next().ok_or_else(|| Error::parse(2, "missing elements line"))?;
    let names = elements
        .strip_prefix("elements:")
        .ok_or_else(|| Error::parse(line, "expected `elements: ...`"))?;
    let ground = GroundSet::new(names.split_whitespace()).map_err(at_line(line))?;
    let mut entries = Vec::new();
    for (line, l) in lines {
        let (set, value) = l.rsplit_once(':').ok_or_else(|| Error::parse(line, "expected `{...}: <rank>`"))?;
        let set = set.trim();
        if set == "∅" || set == "{}" {
            return Err(Error::parse(line, "the empty set must not be listed"));
        }
        let inner = set
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::parse(line, format!("expected a braced subset, found {set:?}")))?;
        let labels: Vec<&str> = inner.split(',').collect();
        let mut subset = Subset::EMPTY;
        for label in labels {
            let p = ground.position(label).ok_or_else(|| Error::parse(line, format!("unknown element {label:?}")))?;
            if subset.contains(p) {
                return Err(Error::parse(line, format!("element {label} listed twice")));
            }
            subset = subset.with(p);
        }
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| Error::parse(line, format!("invalid rank {:?}", value.trim())))?;
        entries.push((line, subset, value));
    }
    // Report duplicate and negative entries at their line.
    let mut seen = vec![false; 1 << ground.len()];
    for &(line, subset, value) in &entries {
        if std::mem::replace(&mut seen[subset.bits() as usize], true) {
            return Err(Error::parse(line, Error::DuplicateSubset(ground.format_subset(subset)).to_string()));
        }
        if value < 0 {
            let e = Error::NegativeRank { subset: ground.format_subset(subset), value };
            return Err(Error::parse(line, e.to_string()));
        }
    }
    make_rank_table(ground, entries.into_iter().map(|(_, s, v)| (s, v)))
}

pub fn parse_support_family(text: &str) -> Result<SupportFamily> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, SUPPORTS_HEADER)?;
    let (line, sizes) = lines.next().ok_or_else(|| Error::parse(2, "missing `n=<N> k=<K>` line"))?;
    let (n, k) = parse_sizes(sizes).ok_or_else(|| Error::parse(line, format!("expected `n=<N> k=<K>`, found {sizes:?}")))?;
    if k > crate::MAX_UNIVERSE {
        return Err(Error::parse(line, Error::UniverseTooLarge(k).to_string()));
    }
    let mut names = Vec::new();
    let mut supports = Vec::new();
    let mut last = line;
    for (line, l) in lines {
        last = line;
        let (name, rest) = l.split_once(':').ok_or_else(|| Error::parse(line, "expected `<name>: <indices>`"))?;
        let rest = rest.trim();
        let mut support = IndexSet::EMPTY;
        if rest != "-" {
            let mut prev = 0;
            for tok in rest.split_whitespace() {
                let i: u32 = tok.parse().map_err(|_| Error::parse(line, format!("invalid index {tok:?}")))?;
                if i == 0 || i as usize > k {
                    return Err(Error::parse(line, format!("index {i} outside 1..{k}")));
                }
                if i <= prev {
                    return Err(Error::parse(line, "indices must be strictly ascending"));
                }
                prev = i;
                support = support.with(i);
            }
            if prev == 0 {
                return Err(Error::parse(line, "empty support must be written `-`"));
            }
        }
        names.push(name.trim().to_string());
        supports.push(support);
    }
    if names.len() != n {
        return Err(Error::parse(last, format!("expected {n} elements, found {}", names.len())));
    }
    let ground = GroundSet::new(names).map_err(at_line(line))?;
    SupportFamily::new(ground, k as u32, supports)
}

fn parse_sizes(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let n = parts.next()?.strip_prefix("n=")?.parse().ok()?;
    let k = parts.next()?.strip_prefix("k=")?.parse().ok()?;
    parts.next().is_none().then_some((n, k))
}

/// Subsets by size, then by position mask.
pub fn write_rank_table(table: &RankTable) -> String {
    let ground = table.ground();
    let mut out = format!("{RANK_HEADER}\nelements:");
    for name in ground.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    let mut subsets: Vec<Subset> = (1..1u32 << ground.len()).map(Subset).collect();
    subsets.sort_by_key(|s| (s.len(), s.bits()));
    for s in subsets {
        let _ = writeln!(out, "{}: {}", ground.format_subset(s), table.values()[s.bits() as usize]);
    }
    out
}

pub fn write_support_family(family: &SupportFamily) -> String {
    let mut out = format!("{SUPPORTS_HEADER}\nn={} k={}\n", family.len(), family.universe());
    for (name, s) in family.ground().names().iter().zip(family.supports()) {
        if s.is_empty() {
            let _ = writeln!(out, "{name}: -");
        } else {
            let indices: Vec<String> = s.indices().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "{name}: {}", indices.join(" "));
        }
    }
    out
}
