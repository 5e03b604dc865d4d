//! The semiring text format.
//!
//! ```text
//! order: <n>
//! add:
//! <n rows of n space-separated integers>
//! mul:
//! <n rows>
//! inv:            (optional)
//! <one row of n integers>
//! ```
//!
//! Lines starting with `#` are comments. A trailing newline is required.
//! Serialization always emits exactly this layout with single spaces, so
//! equal semirings serialize to identical bytes.

use crate::error::Error;
use crate::semiring::{Element, FiniteSemiring, OpTable};

/// Raw parse result before semiring validation.
#[derive(Debug, Clone)]
pub struct ParsedTables {
    pub order: usize,
    pub add: OpTable,
    pub mul: OpTable,
    pub inv: Option<Vec<Element>>,
}

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            iter: text.lines().enumerate(),
            last_line: 0,
        }
    }

    /// Next non-comment, non-blank line with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (idx, line) in self.iter.by_ref() {
            self.last_line = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((idx + 1, trimmed));
        }
        None
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_row(line_no: usize, line: &str, order: usize) -> Result<Vec<Element>, Error> {
    let mut row = Vec::with_capacity(order);
    for tok in line.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| parse_err(line_no, format!("expected an integer, found `{tok}`")))?;
        if v >= order {
            return Err(parse_err(
                line_no,
                format!("entry {v} outside the carrier 0..{order}"),
            ));
        }
        row.push(v);
    }
    if row.len() != order {
        return Err(parse_err(
            line_no,
            format!("expected {order} entries, found {}", row.len()),
        ));
    }
    Ok(row)
}

fn parse_table(lines: &mut Lines<'_>, order: usize, which: &str) -> Result<OpTable, Error> {
    let mut entries = Vec::with_capacity(order * order);
    for _ in 0..order {
        let (no, line) = lines
            .next_content()
            .ok_or_else(|| parse_err(lines.last_line + 1, format!("missing row of `{which}`")))?;
        entries.extend(parse_row(no, line, order)?);
    }
    Ok(OpTable::new(order, entries).expect("rows already range-checked"))
}

/// Parses the text format without semiring validation.
pub fn parse_tables(text: &str) -> Result<ParsedTables, Error> {
    if !text.ends_with('\n') {
        return Err(parse_err(
            text.lines().count().max(1),
            "missing trailing newline",
        ));
    }
    let mut lines = Lines::new(text);
    let (no, line) = lines
        .next_content()
        .ok_or_else(|| parse_err(1, "empty document"))?;
    let order: usize = line
        .strip_prefix("order:")
        .map(str::trim)
        .ok_or_else(|| parse_err(no, "expected `order: <n>`"))?
        .parse()
        .map_err(|_| parse_err(no, "expected `order: <n>`"))?;
    if order == 0 {
        return Err(parse_err(no, "order must be positive"));
    }
    let (no, line) = lines
        .next_content()
        .ok_or_else(|| parse_err(no + 1, "expected `add:`"))?;
    if line != "add:" {
        return Err(parse_err(no, "expected `add:`"));
    }
    let add = parse_table(&mut lines, order, "add")?;
    let (no, line) = lines
        .next_content()
        .ok_or_else(|| parse_err(lines.last_line + 1, "expected `mul:`"))?;
    if line != "mul:" {
        return Err(parse_err(no, "expected `mul:`"));
    }
    let mul = parse_table(&mut lines, order, "mul")?;
    let mut inv = None;
    if let Some((no, line)) = lines.next_content() {
        if line != "inv:" {
            return Err(parse_err(no, format!("unexpected content `{line}`")));
        }
        let (no, line) = lines
            .next_content()
            .ok_or_else(|| parse_err(no + 1, "missing inverse row"))?;
        inv = Some(parse_row(no, line, order)?);
        if let Some((no, line)) = lines.next_content() {
            return Err(parse_err(no, format!("unexpected content `{line}`")));
        }
    }
    Ok(ParsedTables {
        order,
        add,
        mul,
        inv,
    })
}

/// Parses and validates a semiring document.
pub fn parse_semiring(text: &str) -> Result<FiniteSemiring, Error> {
    let t = parse_tables(text)?;
    match t.inv {
        Some(inv) => FiniteSemiring::validate_with_inverse(t.add, t.mul, inv).map_err(Error::from),
        None => FiniteSemiring::validate(t.add, t.mul).map_err(Error::from),
    }
}

fn push_table(out: &mut String, table: &OpTable) {
    let n = table.order();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&table.apply(i, j).to_string());
        }
        out.push('\n');
    }
}

/// Canonical serialization, without the inverse row.
pub fn serialize_semiring(s: &FiniteSemiring) -> String {
    serialize_parts(s, None)
}

/// Canonical serialization with the inverse row when the semiring has one.
pub fn serialize_semiring_with_inverse(s: &FiniteSemiring) -> String {
    serialize_parts(s, s.pseudo_inverse())
}

fn serialize_parts(s: &FiniteSemiring, inv: Option<&[Element]>) -> String {
    let mut out = String::new();
    out.push_str(&format!("order: {}\n", s.order()));
    out.push_str("add:\n");
    push_table(&mut out, s.add_table());
    out.push_str("mul:\n");
    push_table(&mut out, s.mul_table());
    if let Some(inv) = inv {
        out.push_str("inv:\n");
        let row: Vec<String> = inv.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "order: 2\nadd:\n0 1\n1 0\nmul:\n0 0\n0 1\n";
        let s = parse_semiring(text).unwrap();
        assert_eq!(serialize_semiring(&s), text);
        let with_inv = serialize_semiring_with_inverse(&s);
        assert!(with_inv.ends_with("inv:\n0 1\n"));
        assert_eq!(parse_semiring(&with_inv).unwrap(), s);
    }

    #[test]
    fn comments_are_ignored() {
        let text = "# Z2\norder: 2\nadd:\n# xor\n0 1\n1 0\nmul:\n0 0\n0 1\n";
        assert!(parse_semiring(text).is_ok());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "order: 2\nadd:\n0 1\n1 9\nmul:\n0 0\n0 1\n";
        match parse_semiring(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        let text = "order: 2\nadd:\n0 1\n1 0\nmul:\n0 0\n0 1";
        assert!(matches!(parse_semiring(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn axiom_failures_are_not_parse_errors() {
        // mul = 1−j fails distributivity
        let text = "order: 2\nadd:\n0 1\n1 1\nmul:\n1 0\n1 0\n";
        assert!(matches!(parse_semiring(text), Err(Error::Axioms(_))));
    }
}
