//! Catalog files of permutation groups.
//!
//! ```text
//! # comment
//! group NAME
//! degree N
//! gen a0 a1 ... a(N-1)      (0-based images, one line per generator)
//! expect order N            (optional, checked on load)
//! expect pseudo (1,1) ...   (optional, checked by `check catalog`)
//! ```

use std::collections::HashSet;
use std::fs;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permgroup::{close_group, Group, Perm};
use crate::pseudoalg::PseudoAlgebra;

/// One `group` block, not yet closed into a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    /// Line of the `group` header.
    pub line: usize,
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub expected_order: Option<(u64, usize)>,
    pub expected_pseudo: Option<(PseudoAlgebra, usize)>,
}

impl CatalogEntry {
    /// Closes the generators and checks `expect order`.
    pub fn build(&self, path: &str, cap: usize) -> Result<Group> {
        let group = close_group(self.degree, self.generators.clone(), &self.name, cap)
            .map_err(|e| catalog_error(path, self.line, format!("group {}: {e}", self.name)))?;
        if let Some((order, line)) = self.expected_order {
            if group.order() as u64 != order {
                return Err(catalog_error(
                    path,
                    line,
                    format!(
                        "group {} has order {}, expected {order}",
                        self.name,
                        group.order()
                    ),
                ));
            }
        }
        Ok(group)
    }
}

/// A loaded catalog: entries in file order with their groups.
pub struct Catalog {
    pub path: String,
    pub entries: Vec<CatalogEntry>,
    pub groups: Vec<Group>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Group> {
        self.entries
            .iter()
            .position(|e| e.name == name)
            .map(|i| &self.groups[i])
    }
}

fn catalog_error(path: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::Catalog {
        path: path.to_string(),
        line,
        msg: msg.into(),
    }
}

/// Parses catalog text without building any group.
pub fn parse_catalog(text: &str, path: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut names = HashSet::new();
    let mut degree_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let err = |msg: String| catalog_error(path, line, msg);
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((content, ""));
        if keyword == "group" {
            if rest.is_empty() || rest.contains(char::is_whitespace) {
                return Err(err("expected `group NAME`".into()));
            }
            if let Some(prev) = entries.last() {
                if !degree_seen {
                    return Err(catalog_error(
                        path,
                        prev.line,
                        format!("group {} has no degree line", prev.name),
                    ));
                }
            }
            if !names.insert(rest.to_string()) {
                return Err(err(format!("duplicate group name {rest:?}")));
            }
            entries.push(CatalogEntry {
                name: rest.to_string(),
                line,
                degree: 0,
                generators: Vec::new(),
                expected_order: None,
                expected_pseudo: None,
            });
            degree_seen = false;
            continue;
        }
        let entry = entries
            .last_mut()
            .ok_or_else(|| err(format!("`{keyword}` before any `group` line")))?;
        match keyword {
            "degree" => {
                if degree_seen {
                    return Err(err("second degree line".into()));
                }
                entry.degree = rest
                    .parse()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| err(format!("bad degree {rest:?}")))?;
                degree_seen = true;
            }
            "gen" => {
                if !degree_seen {
                    return Err(err("gen line before degree line".into()));
                }
                let images = rest
                    .split_whitespace()
                    .map(|x| {
                        x.parse::<usize>()
                            .map_err(|_| err(format!("bad image {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if images.len() != entry.degree {
                    return Err(err(format!(
                        "gen has {} images, degree is {}",
                        images.len(),
                        entry.degree
                    )));
                }
                entry
                    .generators
                    .push(Perm::new(images).map_err(|e| err(e.to_string()))?);
            }
            "expect" => {
                let (what, value) = rest.split_once(char::is_whitespace).ok_or_else(|| {
                    err("expected `expect order N` or `expect pseudo ...`".into())
                })?;
                match what {
                    "order" => {
                        let n = value
                            .trim()
                            .parse()
                            .map_err(|_| err(format!("bad order {value:?}")))?;
                        entry.expected_order = Some((n, line));
                    }
                    "pseudo" => {
                        let p = value.parse().map_err(|e: Error| err(e.to_string()))?;
                        entry.expected_pseudo = Some((p, line));
                    }
                    _ => return Err(err(format!("unknown expectation {what:?}"))),
                }
            }
            _ => return Err(err(format!("unknown keyword {keyword:?}"))),
        }
    }
    if let Some(last) = entries.last() {
        if !degree_seen {
            return Err(catalog_error(
                path,
                last.line,
                format!("group {} has no degree line", last.name),
            ));
        }
    }
    Ok(entries)
}

pub(crate) fn parse_catalog_file(path: &str) -> Result<Vec<CatalogEntry>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    parse_catalog(&text, path)
}

/// Reads, parses and builds every group, checking `expect order` lines.
pub fn load_catalog(path: &str, cap: usize) -> Result<Catalog> {
    let entries = parse_catalog_file(path)?;
    let groups = entries
        .par_iter()
        .map(|e| e.build(path, cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(Catalog {
        path: path.to_string(),
        entries,
        groups,
    })
}
