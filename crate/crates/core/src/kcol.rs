//! The `.kcol` text format.
//!
//! ```text
//! kcol 1 <n> <k>
//! <colors of {0,1} .. {0,n-1}>
//! <colors of {1,2} .. {1,n-1}>
//! ...
//! ```
//!
//! One line per `u = 0..n-2`, space separated, LF endings, no trailing
//! whitespace.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

pub fn write_kcol(coloring: &EdgeColoring) -> String {
    let mut out = format!("kcol 1 {} {}\n", coloring.n(), coloring.k());
    for row in coloring.rows() {
        let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_kcol(text: &str) -> Result<EdgeColoring> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.len() != 4 || fields[0] != "kcol" || fields[1] != "1" {
        return Err(Error::parse(1, 1, "expected header `kcol 1 <n> <k>`"));
    }
    let n = header_number(fields[2], fields[..2].join(" ").len() + 2)?;
    let k = header_number(fields[3], fields[..3].join(" ").len() + 2)?;
    if n < 2 {
        return Err(Error::parse(
            1,
            header.len(),
            format!("n = {n} must be at least 2"),
        ));
    }
    let mut rows = Vec::with_capacity(n - 1);
    for u in 0..n - 1 {
        let lineno = u + 2;
        let line = lines
            .next()
            .filter(|l| !l.is_empty())
            .ok_or_else(|| Error::parse(lineno, 1, format!("missing row for vertex {u}")))?;
        if line.ends_with(' ') || line.ends_with('\r') {
            return Err(Error::parse(lineno, line.len(), "trailing whitespace"));
        }
        let mut row = Vec::with_capacity(n - 1 - u);
        let mut column = 1;
        for tok in line.split(' ') {
            let c: usize = tok
                .parse()
                .map_err(|_| Error::parse(lineno, column, format!("invalid color id `{tok}`")))?;
            if c >= k {
                return Err(Error::parse(
                    lineno,
                    column,
                    format!("color {c} outside 0..{k}"),
                ));
            }
            row.push(c);
            column += tok.len() + 1;
        }
        if row.len() != n - 1 - u {
            return Err(Error::parse(
                lineno,
                column,
                format!("expected {} colors, found {}", n - 1 - u, row.len()),
            ));
        }
        rows.push(row);
    }
    let rest: Vec<&str> = lines.collect();
    if rest.is_empty() {
        return Err(Error::parse(n, 1, "missing final newline"));
    }
    if rest.len() > 1 || !rest[0].is_empty() {
        return Err(Error::parse(n + 1, 1, "unexpected content after last row"));
    }
    EdgeColoring::from_rows(n, k, &rows).map_err(|e| Error::parse(1, 1, e.to_string()))
}

fn header_number(tok: &str, column: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(1, column, format!("invalid number `{tok}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{k_color_construction, two_color_extremal};

    #[test]
    fn writes_expected_layout() {
        let c = k_color_construction(4, 1).unwrap().coloring;
        let text = write_kcol(&c);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("kcol 1 9 4"));
        // {0,1}..{0,8}: differences 1,2,3,4,4,3,2,1 -> classes 0,1,2,3,3,2,1,0
        assert_eq!(lines.next(), Some("0 1 2 3 3 2 1 0"));
        assert_eq!(text.lines().count(), 9);
        assert!(text.ends_with("0\n"));
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let c = two_color_extremal(11).unwrap().coloring;
        let text = write_kcol(&c);
        let back = parse_kcol(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(write_kcol(&back), text);
    }

    fn err_pos(text: &str) -> (usize, usize) {
        match parse_kcol(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics() {
        assert_eq!(err_pos("kcol 2 3 2\n0 0\n0\n"), (1, 1));
        assert_eq!(err_pos("kcol 1 3 2\n0 0 0\n0\n"), (2, 7));
        assert_eq!(err_pos("kcol 1 3 2\n0 2\n0\n"), (2, 3));
        assert_eq!(err_pos("kcol 1 3 2\n0 0\n"), (3, 1));
        assert_eq!(err_pos("kcol 1 3 2\n0 0 \n0\n"), (2, 4));
        assert_eq!(err_pos("kcol 1 3 2\n0 0\n0\n\n"), (4, 1));
        assert_eq!(err_pos("kcol 1 3 2\n0 0\n0"), (3, 1));
        assert_eq!(err_pos("kcol 1 x 2\n"), (1, 8));
        assert_eq!(err_pos("kcol 1 3 y\n"), (1, 10));
    }
}
