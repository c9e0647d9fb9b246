//! Line-oriented group files:
//!
//! ```text
//! # comment
//! name A5
//! degree 5
//! order 60
//! solvable false
//! gen (1 2 3 4 5)
//! gen (3 4 5)
//! ```

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub expected_order: Option<BigUint>,
    pub generators: Vec<String>,
    pub solvable: Option<bool>,
    pub in_theorem_b: Option<bool>,
    /// Comment lines, in file order, without the leading `#`.
    pub notes: Vec<String>,
}

impl GroupSpec {
    /// Parses without building the group; `file` labels error messages.
    pub fn parse(file: &str, text: &str) -> Result<Self> {
        let mut name = None;
        let mut degree = None;
        let mut expected_order = None;
        let mut solvable = None;
        let mut in_theorem_b = None;
        let mut generators = Vec::new();
        let mut notes = Vec::new();
        let mut gen_lines = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |reason: String| Error::Syntax {
                file: file.to_string(),
                line,
                reason,
            };
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(note) = trimmed.strip_prefix('#') {
                notes.push(note.trim().to_string());
                continue;
            }
            let (key, value) = trimmed
                .split_once(char::is_whitespace)
                .map(|(k, v)| (k, v.trim()))
                .unwrap_or((trimmed, ""));
            if value.is_empty() {
                return Err(err(format!("`{key}` needs a value")));
            }
            let set_once = |slot: bool| {
                if slot {
                    Err(err(format!("`{key}` given twice")))
                } else {
                    Ok(())
                }
            };
            match key {
                "name" => {
                    set_once(name.is_some())?;
                    name = Some(value.to_string());
                }
                "degree" => {
                    set_once(degree.is_some())?;
                    let d: usize = value
                        .parse()
                        .map_err(|_| err(format!("degree `{value}` is not an integer")))?;
                    if d == 0 {
                        return Err(err("degree must be positive".into()));
                    }
                    degree = Some(d);
                }
                "order" => {
                    set_once(expected_order.is_some())?;
                    expected_order = Some(
                        value
                            .parse::<BigUint>()
                            .map_err(|_| err(format!("order `{value}` is not an integer")))?,
                    );
                }
                "solvable" => {
                    set_once(solvable.is_some())?;
                    solvable = Some(parse_bool(value).ok_or_else(|| err(format!("`{value}` is not a boolean")))?);
                }
                "theorem_b" => {
                    set_once(in_theorem_b.is_some())?;
                    in_theorem_b = Some(parse_bool(value).ok_or_else(|| err(format!("`{value}` is not a boolean")))?);
                }
                "gen" => {
                    generators.push(value.to_string());
                    gen_lines.push(line);
                }
                _ => return Err(err(format!("unknown key `{key}`"))),
            }
        }

        let missing = |what: &str| Error::Syntax {
            file: file.to_string(),
            line: text.lines().count().max(1),
            reason: format!("missing `{what}`"),
        };
        let name = name.ok_or_else(|| missing("name"))?;
        let degree = degree.ok_or_else(|| missing("degree"))?;
        if generators.is_empty() {
            return Err(missing("gen"));
        }
        for (g, &line) in generators.iter().zip(&gen_lines) {
            Permutation::parse(g, degree).map_err(|e| Error::Syntax {
                file: file.to_string(),
                line,
                reason: e.to_string(),
            })?;
        }
        Ok(GroupSpec {
            name,
            degree,
            expected_order,
            generators,
            solvable,
            in_theorem_b,
            notes,
        })
    }

    /// Builds the group and checks the declared order.
    pub fn build(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse(g, self.degree))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::new(self.name.clone(), self.degree, gens)?;
        if let Some(expected) = &self.expected_order {
            let computed = group.order();
            if computed != *expected {
                return Err(Error::OrderMismatch {
                    name: self.name.clone(),
                    declared: expected.to_string(),
                    computed: computed.to_string(),
                });
            }
        }
        Ok(group)
    }
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" | "yes" => Some(true),
        "false" | "no" => Some(false),
        _ => None,
    }
}

/// Reads, parses and validates a group file, including the order check.
pub fn parse_group_file(path: &Path) -> Result<GroupSpec> {
    let text = read(path)?;
    let spec = GroupSpec::parse(&path.display().to_string(), &text)?;
    spec.build()?;
    Ok(spec)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| with_path(e, path))
}

fn with_path(e: std::io::Error, path: &Path) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

/// Group specs with unique names and where each came from.
#[derive(Clone, Debug, Default)]
pub struct FixtureSet {
    pub specs: Vec<GroupSpec>,
    pub sources: Vec<PathBuf>,
}

impl FixtureSet {
    /// All `*.grp` files directly inside `dir`, sorted by file name. Files
    /// are parsed but not built.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .and_then(|entries| entries.map(|e| e.map(|e| e.path())).collect())
            .map_err(|e| with_path(e, dir))?;
        paths.retain(|p| p.extension().is_some_and(|x| x == "grp"));
        paths.sort_by_key(|p| natural_key(p));
        let mut set = FixtureSet::default();
        for path in paths {
            let text = read(&path)?;
            set.push(GroupSpec::parse(&path.display().to_string(), &text)?, path)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, spec: GroupSpec, source: PathBuf) -> Result<()> {
        if self.specs.iter().any(|s| s.name == spec.name) {
            return Err(Error::InvalidArgument(format!(
                "duplicate fixture name `{}` in {}",
                spec.name,
                source.display()
            )));
        }
        self.specs.push(spec);
        self.sources.push(source);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.specs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }

    pub fn names(&self) -> HashSet<&str> {
        self.specs.iter().map(|s| s.name.as_str()).collect()
    }
}

/// Sort key treating digit runs numerically, so `g10` follows `g9`.
fn natural_key(path: &Path) -> Vec<(String, u64)> {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let mut out = Vec::new();
    let mut text = String::new();
    let mut digits = String::new();
    for c in name.chars() {
        if c.is_ascii_digit() {
            digits.push(c);
        } else {
            if !digits.is_empty() {
                out.push((std::mem::take(&mut text), digits.parse().unwrap_or(u64::MAX)));
                digits.clear();
            }
            text.push(c);
        }
    }
    out.push((text, digits.parse().unwrap_or(0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = "# symmetric group\nname S3\ndegree 3\norder 6\nsolvable true\ngen (1 2 3)\ngen (1,2)\n";

    #[test]
    fn parses_and_builds() {
        let spec = GroupSpec::parse("s3.grp", S3).unwrap();
        assert_eq!(spec.name, "S3");
        assert_eq!(spec.solvable, Some(true));
        assert_eq!(spec.notes, vec!["symmetric group"]);
        assert_eq!(spec.build().unwrap().order(), BigUint::from(6u32));
    }

    #[test]
    fn reports_line_numbers() {
        let text = "name X\ndegree 3\ngen (1 2 4)\n";
        match GroupSpec::parse("x.grp", text) {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match GroupSpec::parse("x.grp", "name X\nsize 3\n") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn natural_order() {
        let mut names = vec!["g10.grp", "g9.grp", "g1.grp"];
        names.sort_by_key(|n| natural_key(Path::new(n)));
        assert_eq!(names, vec!["g1.grp", "g9.grp", "g10.grp"]);
    }
}
