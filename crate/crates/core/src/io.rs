//! Group file formats and corpus sources.
//!
//! Cayley format:
//!
//! ```text
//! # label: C4
//! order 4
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//! ```
//!
//! Permutation format: `degree d`, then one generator per line as `d`
//! space-separated images. Lines starting with `#` are comments, except
//! `# label: <text>`, which names the group.

use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{builtin_corpus_with, make_with, FamilySpec};
use crate::group::{FiniteGroup, Limits, PermutationGenSet};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Non-comment lines as (1-based line number, text), plus any label header.
fn content_lines(text: &str) -> (Vec<(usize, &str)>, Option<String>) {
    let mut label = None;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if let Some(comment) = t.strip_prefix('#') {
            if let Some(l) = comment.trim().strip_prefix("label:") {
                label = Some(l.trim().to_string());
            }
            continue;
        }
        if !t.is_empty() {
            lines.push((i + 1, raw));
        }
    }
    (lines, label)
}

/// Whitespace-separated unsigned integers with their 1-based columns.
fn parse_row(line_no: usize, line: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut col = 0;
    for tok in line.split_whitespace() {
        let start = line[col..].find(tok).map(|i| i + col).unwrap_or(col);
        col = start + tok.len();
        let v = tok
            .parse::<usize>()
            .map_err(|_| parse_err(line_no, start + 1, format!("expected a non-negative integer, got {tok:?}")))?;
        out.push(v);
    }
    Ok(out)
}

fn parse_header(line_no: usize, line: &str, keyword: &str) -> Result<usize> {
    let mut parts = line.split_whitespace();
    let (Some(k), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(parse_err(line_no, 1, format!("expected `{keyword} <n>`")));
    };
    if k != keyword {
        return Err(parse_err(line_no, 1, format!("expected `{keyword} <n>`")));
    }
    match v.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(parse_err(line_no, line.find(v).unwrap_or(0) + 1, format!("{keyword} must be a positive integer"))),
    }
}

/// Parses either file format, detected from the first content line.
pub fn parse_group(text: &str, limits: &Limits) -> Result<FiniteGroup> {
    let (lines, label) = content_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(parse_err(1, 1, "empty file: expected `order <n>` or `degree <d>`"));
    };
    let keyword = first.split_whitespace().next().unwrap_or("");
    let group = match keyword {
        "order" => {
            let n = parse_header(first_no, first, "order")?;
            let body = &lines[1..];
            if body.len() != n {
                let line = body.last().map_or(first_no, |l| l.0) + 1;
                return Err(parse_err(line, 1, format!("expected {n} table rows, found {}", body.len())));
            }
            let mut rows = Vec::with_capacity(n);
            for &(no, line) in body {
                let row = parse_row(no, line)?;
                if row.len() != n {
                    return Err(parse_err(no, 1, format!("expected {n} entries, found {}", row.len())));
                }
                rows.push(row);
            }
            FiniteGroup::from_cayley_with(&rows, limits)?
        }
        "degree" => {
            let d = parse_header(first_no, first, "degree")?;
            let mut gens = Vec::new();
            for &(no, line) in &lines[1..] {
                let row = parse_row(no, line)?;
                if row.len() != d {
                    return Err(parse_err(no, 1, format!("expected {d} images, found {}", row.len())));
                }
                gens.push(row);
            }
            let set = PermutationGenSet::new(d, gens).map_err(|e| match e {
                Error::NotAPermutation { index, .. } => {
                    parse_err(lines[index + 1].0, 1, "generator is not a permutation")
                }
                other => other,
            })?;
            FiniteGroup::from_permutations(&set, limits)?
        }
        _ => return Err(parse_err(first_no, 1, "expected `order <n>` or `degree <d>`")),
    };
    Ok(match label {
        Some(l) => group.with_label(l),
        None => group,
    })
}

/// Reads and validates a group file, labelling it by its file name.
pub fn ingest_group(path: &Path, limits: &Limits) -> Result<FiniteGroup> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let group = parse_group(&text, limits)?;
    Ok(group.with_label(name))
}

/// Writes a group in Cayley format.
pub fn write_cayley(g: &FiniteGroup) -> String {
    let mut out = format!("# label: {}\norder {}\n", g.label(), g.order());
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Resolves `family:<spec>` or `file:<path>` (a bare path is treated as a file).
pub fn load_group(source: &str, limits: &Limits) -> Result<FiniteGroup> {
    if let Some(spec) = source.strip_prefix("family:") {
        make_with(&spec.parse::<FamilySpec>()?, limits)
    } else {
        let path = source.strip_prefix("file:").unwrap_or(source);
        ingest_group(Path::new(path), limits)
    }
}

/// Resolves `builtin:<max_order>` or `dir:<path>`. Directory entries are read
/// in lexicographic file-name order and parsed in parallel.
pub fn load_corpus(source: &str, limits: &Limits) -> Result<Vec<FiniteGroup>> {
    let corpus = if let Some(max) = source.strip_prefix("builtin:") {
        let max: usize = max
            .parse()
            .map_err(|_| Error::InvalidParameters(format!("bad builtin corpus size {max:?}")))?;
        if max == 0 {
            Vec::new()
        } else {
            builtin_corpus_with(max, limits)?
        }
    } else if let Some(dir) = source.strip_prefix("dir:") {
        let io_err = |e: std::io::Error| Error::Io { path: dir.to_string(), message: e.to_string() };
        let mut paths: Vec<_> = fs::read_dir(dir)
            .map_err(io_err)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .filter(|p| !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
            .collect();
        paths.sort();
        paths
            .par_iter()
            .map(|p| {
                ingest_group(p, limits).map_err(|e| match e {
                    Error::Io { .. } => e,
                    other => Error::Io { path: p.display().to_string(), message: other.to_string() },
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        return Err(Error::InvalidParameters(format!(
            "corpus must be builtin:<max_order> or dir:<path>, got {source:?}"
        )));
    };
    if corpus.is_empty() {
        return Err(Error::InvalidParameters(format!("corpus {source:?} is empty")));
    }
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cayley_with_label() {
        let text = "# label: C4\norder 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";
        let g = parse_group(text, &Limits::default()).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.label(), "C4");
    }

    #[test]
    fn parses_permutations() {
        let text = "degree 3\n1 0 2\n1 2 0\n";
        assert_eq!(parse_group(text, &Limits::default()).unwrap().order(), 6);
    }

    #[test]
    fn truncated_file() {
        let text = "order 3\n0 1 2\n1 2 0\n";
        assert_eq!(
            parse_group(text, &Limits::default()),
            Err(Error::Parse { line: 4, column: 1, message: "expected 3 table rows, found 2".into() })
        );
    }

    #[test]
    fn bad_token_reports_column() {
        let text = "order 2\n0 1\n1 x\n";
        match parse_group(text, &Limits::default()) {
            Err(Error::Parse { line: 3, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_header() {
        assert!(matches!(parse_group("size 3\n", &Limits::default()), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_group("order 0\n", &Limits::default()), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_group("", &Limits::default()), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_group("degree 3\n0 0 1\n", &Limits::default()),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn group_axiom_errors_pass_through() {
        let text = "order 2\n1 1\n1 1\n";
        assert_eq!(parse_group(text, &Limits::default()), Err(Error::NoIdentity));
    }

    #[test]
    fn empty_builtin_corpus_is_an_error() {
        assert!(load_corpus("builtin:0", &Limits::default()).is_err());
        assert!(load_corpus("nonsense", &Limits::default()).is_err());
    }
}
