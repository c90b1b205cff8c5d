//! Staircase diagrams of lattice path families.
//!
//! Columns are elements in certificate order, rows are universe indices in
//! certificate order with row 1 at the bottom. Row `i` holds the north steps
//! `x = lo_i ..= hi_i`, each labelled by its element. The lower path `P`
//! climbs at the right end of every row and the upper path `Q` at the left.

use std::fmt::Write;

use crate::bits::IndexSet;
use crate::boolean::SupportFamily;
use crate::error::{Error, Result};
use crate::latticepath::{validate_certificate, LatticePathCertificate};
use crate::polymatroid::GroundSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Row {
    pub index: u32,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub n_cols: usize,
    pub k_rows: usize,
    /// Bottom row first.
    pub rows: Vec<Row>,
    /// Steps over `{E, N}` from `(1, 0)` to `(n, k)`.
    pub path_p: String,
    pub path_q: String,
    pub column_labels: Vec<String>,
}

pub fn render_diagram(family: &SupportFamily, cert: &LatticePathCertificate) -> Result<Diagram> {
    if validate_certificate(family, cert) != Ok(true) {
        return Err(Error::CertificateInvalid);
    }
    if let Some(p) = family.loops().positions().next() {
        return Err(Error::HasLoops(family.ground().name(p).to_string()));
    }
    let unused = IndexSet::range(family.universe()) - family.used_indices();
    if let Some(i) = unused.indices().next() {
        return Err(Error::UnusedIndex(i));
    }
    let n = family.len();
    let rows: Vec<Row> = cert
        .universe_order
        .iter()
        .map(|&index| {
            let cols: Vec<usize> = cert
                .element_order
                .iter()
                .enumerate()
                .filter(|(_, &e)| family.support(e).contains(index))
                .map(|(j, _)| j + 1)
                .collect();
            Row { index, lo: cols[0], hi: cols[cols.len() - 1] }
        })
        .collect();
    let path = |steps: &mut dyn Iterator<Item = usize>| {
        let mut out = String::new();
        let mut x = 1;
        for target in steps {
            out.extend(std::iter::repeat_n('E', target - x));
            out.push('N');
            x = target;
        }
        out.extend(std::iter::repeat_n('E', n - x));
        out
    };
    let path_p = path(&mut rows.iter().map(|r| r.hi));
    let path_q = path(&mut rows.iter().map(|r| r.lo));
    let column_labels = cert
        .element_order
        .iter()
        .map(|&e| family.ground().name(e).to_string())
        .collect();
    Ok(Diagram { n_cols: n, k_rows: rows.len(), rows, path_p, path_q, column_labels })
}

impl Diagram {
    /// Labels on the north steps of each row, bottom row first.
    pub fn row_labels(&self) -> Vec<Vec<&str>> {
        self.rows
            .iter()
            .map(|r| self.column_labels[r.lo - 1..r.hi].iter().map(String::as_str).collect())
            .collect()
    }

    /// Reads the supports back off the rows.
    pub fn rebuild(&self, ground: &GroundSet, universe: u32) -> Result<SupportFamily> {
        let mut supports = vec![IndexSet::EMPTY; ground.len()];
        for (row, labels) in self.rows.iter().zip(self.row_labels()) {
            for label in labels {
                let p = ground
                    .position(label)
                    .ok_or_else(|| Error::UnknownElement(label.to_string()))?;
                supports[p] = supports[p].with(row.index);
            }
        }
        SupportFamily::new(ground.clone(), universe, supports)
    }

    fn vertices(path: &str) -> Vec<(usize, usize)> {
        let mut at = (1, 0);
        let mut out = vec![at];
        for step in path.chars() {
            match step {
                'E' => at.0 += 1,
                _ => at.1 += 1,
            }
            out.push(at);
        }
        out
    }

    pub fn to_ascii(&self) -> String {
        let width = self.column_labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
        let row_names: Vec<String> = self.rows.iter().map(|r| format!("A{}", r.index)).collect();
        let margin = row_names.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (row, name) in self.rows.iter().zip(&row_names).rev() {
            let _ = write!(out, "{name:>margin$} |");
            for (j, label) in self.column_labels.iter().enumerate() {
                let cell = if (row.lo..=row.hi).contains(&(j + 1)) { label.as_str() } else { "." };
                let _ = write!(out, " {cell:>width$}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{:margin$} +{}", "", "-".repeat((width + 1) * self.n_cols));
        let _ = write!(out, "{:margin$}  ", "");
        for label in &self.column_labels {
            let _ = write!(out, " {label:>width$}");
        }
        out.push('\n');
        let _ = writeln!(out, "P: {}", self.path_p);
        let _ = writeln!(out, "Q: {}", self.path_q);
        out
    }

    /// Same geometry in lattice units; `y` is flipped so row 1 is lowest.
    pub fn to_svg(&self) -> String {
        let k = self.k_rows;
        let flip = |y: usize| k - y;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 -1 {} {}" width="{}" height="{}">"#,
            self.n_cols + 1,
            k + 2,
            40 * (self.n_cols + 1),
            40 * (k + 2)
        );
        let _ = writeln!(out, r#"<g stroke="black" stroke-width="0.03" fill="none">"#);
        for (i, row) in self.rows.iter().enumerate() {
            let (bottom, top) = (flip(i), flip(i + 1));
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{top}" width="{}" height="1"/>"#,
                row.lo,
                row.hi - row.lo
            );
            for x in row.lo..=row.hi {
                let _ = writeln!(out, r#"<line x1="{x}" y1="{bottom}" x2="{x}" y2="{top}"/>"#);
            }
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r#"<g font-size="0.4" text-anchor="middle" font-family="monospace">"#);
        for (i, row) in self.rows.iter().enumerate() {
            for x in row.lo..=row.hi {
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}">{}</text>"#,
                    x as f64 - 0.25,
                    flip(i) as f64 - 0.35,
                    escape(&self.column_labels[x - 1])
                );
            }
        }
        let _ = writeln!(out, "</g>");
        for (id, path) in [("P", &self.path_p), ("Q", &self.path_q)] {
            let points: Vec<String> =
                Self::vertices(path).into_iter().map(|(x, y)| format!("{x},{}", flip(y))).collect();
            let _ = writeln!(
                out,
                r#"<polyline id="{id}" points="{}" stroke="black" stroke-width="0.08" fill="none"/>"#,
                points.join(" ")
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
