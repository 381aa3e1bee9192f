//! Parser for `.grp` generator files.
//!
//! Grammar (UTF-8, line oriented, `#` starts a comment):
//!
//! ```text
//! smallgroup <order> <index>   # optional provenance header, at most once
//! degree <d>                   # required before the first generator
//! gen <cycles>                 # one or more, e.g. gen (1 2 3)(4 5)
//! ```
//!
//! Cycles use 1-based points; fixed points are omitted. A `gen ()` line (the
//! identity) is reported as a warning and skipped rather than rejected.

use std::fs;
use std::path::Path;

use crate::element::Permutation;
use crate::engine::GroupId;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct GrpFile {
    pub degree: u16,
    pub generators: Vec<Permutation>,
    pub header: Option<GroupId>,
    pub warnings: Vec<String>,
}

pub fn parse_file(path: &Path) -> Result<GrpFile> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_str(&text, &path.display().to_string())
}

pub fn parse_str(text: &str, origin: &str) -> Result<GrpFile> {
    let err = |line: usize, msg: String| Error::Parse {
        path: origin.to_string(),
        line,
        msg,
    };

    let mut header: Option<GroupId> = None;
    let mut degree: Option<u16> = None;
    let mut generators: Vec<Permutation> = Vec::new();
    let mut warnings = Vec::new();
    let mut last_line = 0usize;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        last_line = lineno;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "smallgroup" => {
                if header.is_some() {
                    return Err(err(lineno, "duplicate smallgroup header".into()));
                }
                if !generators.is_empty() || degree.is_some() {
                    return Err(err(
                        lineno,
                        "smallgroup header must come before degree and generators".into(),
                    ));
                }
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(err(
                        lineno,
                        "smallgroup expects exactly two integers".into(),
                    ));
                }
                let order: u64 = parts[0]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad order {:?}", parts[0])))?;
                let index: u64 = parts[1]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad index {:?}", parts[1])))?;
                if order == 0 {
                    return Err(err(lineno, "group order cannot be zero".into()));
                }
                header = Some(GroupId { order, index });
            }
            "degree" => {
                if degree.is_some() {
                    return Err(err(lineno, "duplicate degree declaration".into()));
                }
                let d: u32 = rest
                    .parse()
                    .map_err(|_| err(lineno, format!("bad degree {rest:?}")))?;
                if d == 0 {
                    return Err(err(lineno, "degree must be at least 1".into()));
                }
                if d > u16::MAX as u32 {
                    return Err(err(lineno, format!("degree {d} is too large")));
                }
                degree = Some(d as u16);
            }
            "gen" => {
                let d = degree
                    .ok_or_else(|| err(lineno, "degree must be declared before generators".into()))?;
                let cycles = parse_cycles(rest, d)
                    .map_err(|msg| err(lineno, msg))?;
                if cycles.iter().all(|c| c.len() < 2) {
                    warnings.push(format!(
                        "{origin}:{lineno}: generator is the identity; skipped"
                    ));
                    continue;
                }
                let perm = Permutation::from_cycles(d, &cycles)
                    .map_err(|e| err(lineno, e.to_string()))?;
                generators.push(perm);
            }
            other => {
                return Err(err(lineno, format!("unknown directive {other:?}")));
            }
        }
    }

    let degree = degree.ok_or_else(|| err(last_line, "missing degree declaration".into()))?;
    if generators.is_empty() {
        return Err(err(last_line, "file contains no usable generators".into()));
    }
    Ok(GrpFile {
        degree,
        generators,
        header,
        warnings,
    })
}

/// Parses `(1 2 3)(4 5)` into cycles of 1-based points, validating ranges
/// and disjointness.
fn parse_cycles(text: &str, degree: u16) -> std::result::Result<Vec<Vec<u16>>, String> {
    let mut cycles: Vec<Vec<u16>> = Vec::new();
    let mut current: Option<Vec<u16>> = None;
    let mut number: Option<u32> = None;
    let mut used = vec![false; degree as usize + 1];

    let mut flush_number = |current: &mut Option<Vec<u16>>,
                            number: &mut Option<u32>|
     -> std::result::Result<(), String> {
        if let Some(n) = number.take() {
            let cycle = current
                .as_mut()
                .ok_or_else(|| format!("point {n} outside any cycle"))?;
            if n == 0 || n > degree as u32 {
                return Err(format!("point {n} is outside 1..={degree}"));
            }
            if used[n as usize] {
                return Err(format!("point {n} appears twice"));
            }
            used[n as usize] = true;
            cycle.push(n as u16);
        }
        Ok(())
    };

    for ch in text.chars() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err("nested '(' in cycle notation".into());
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush_number(&mut current, &mut number)?;
                let cycle = current
                    .take()
                    .ok_or_else(|| "')' without matching '('".to_string())?;
                cycles.push(cycle);
            }
            c if c.is_ascii_digit() => {
                if current.is_none() {
                    return Err(format!("digit {c:?} outside any cycle"));
                }
                let digit = c.to_digit(10).unwrap();
                number = Some(match number {
                    Some(n) => n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(digit))
                        .ok_or_else(|| "point value too large".to_string())?,
                    None => digit,
                });
            }
            c if c.is_whitespace() => {
                flush_number(&mut current, &mut number)?;
            }
            other => {
                return Err(format!("unexpected character {other:?} in cycle notation"));
            }
        }
    }
    if current.is_some() {
        return Err("unterminated cycle: missing ')'".into());
    }
    if cycles.is_empty() {
        return Err("expected at least one cycle, e.g. (1 2 3)".into());
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_complete_file() {
        let src = "\
# a comment line
smallgroup 6 1   # trailing comment

degree 3
gen (1 2 3)
gen (1 2)
";
        let f = parse_str(src, "test.grp").unwrap();
        assert_eq!(f.degree, 3);
        assert_eq!(f.generators.len(), 2);
        assert_eq!(f.header, Some(GroupId { order: 6, index: 1 }));
        assert!(f.warnings.is_empty());
        assert_eq!(f.generators[0].cycle_string(), "(1 2 3)");
    }

    #[test]
    fn header_is_optional() {
        let f = parse_str("degree 2\ngen (1 2)\n", "t.grp").unwrap();
        assert_eq!(f.header, None);
    }

    #[test]
    fn identity_generator_warns_but_does_not_fail() {
        let f = parse_str("degree 3\ngen ()\ngen (1 3)\n", "t.grp").unwrap();
        assert_eq!(f.generators.len(), 1);
        assert_eq!(f.warnings.len(), 1);
        assert!(f.warnings[0].contains("t.grp:2"));
        assert!(f.warnings[0].contains("identity"));
    }

    #[test]
    fn singleton_cycles_are_fixed_points() {
        let f = parse_str("degree 3\ngen (1)(2 3)\n", "t.grp").unwrap();
        assert_eq!(f.generators[0].cycle_string(), "(2 3)");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let check = |src: &str, line: usize, needle: &str| {
            let e = parse_str(src, "t.grp").unwrap_err();
            match &e {
                Error::Parse { line: l, msg, .. } => {
                    assert_eq!(*l, line, "wrong line for {src:?}: {e}");
                    assert!(msg.contains(needle), "message {msg:?} lacks {needle:?}");
                }
                other => panic!("expected parse error, got {other:?}"),
            }
        };
        check("degree 3\ngen (1 4)\n", 2, "outside");
        check("degree 3\ngen (1 2)(2 3)\n", 2, "twice");
        check("degree 3\ngen (1 2\n", 2, "unterminated");
        check("degree 3\ngen 1 2)\n", 2, "outside any cycle");
        check("degree 3\ngen (1 x)\n", 2, "unexpected character");
        check("gen (1 2)\n", 1, "degree must be declared");
        check("degree 3\ndegree 4\n", 2, "duplicate degree");
        check("degree 0\n", 1, "at least 1");
        check("orbit 5\n", 1, "unknown directive");
        check("degree 3\nsmallgroup 6 1\ngen (1 2)\n", 2, "before degree");
        check("smallgroup 6\n", 1, "two integers");
        check("degree 3\n", 1, "no usable generators");
        check("", 0, "missing degree");
    }

    #[test]
    fn only_identity_generators_is_an_error() {
        let e = parse_str("degree 3\ngen ()\n", "t.grp").unwrap_err();
        assert!(e.to_string().contains("no usable generators"));
    }
}
