//! DIMACS-style edge lists: `p edge n m`, then `e u v` with 1-indexed vertices.

use crate::error::{Error, Result};

/// Writes the header and one `e u v` line per edge, sorted by `(u, v)`
/// with `u < v`. Input edges are 0-indexed and may come in any orientation.
pub fn write_dimacs(n: usize, edges: &[(usize, usize)]) -> String {
    let mut sorted: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = format!("p edge {} {}\n", n, sorted.len());
    for (u, v) in sorted {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses a DIMACS edge file into `(n, edges)` with 0-indexed vertices.
/// Comment lines (`c ...`) and blank lines are skipped.
pub fn parse_dimacs(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let mut fields = line.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(lineno, 1, "duplicate problem line"));
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge") | Some("col")) {
                    return Err(Error::parse(lineno, 3, "expected `p edge <n> <m>`"));
                }
                let n = parse_field(fields.next(), lineno, line, "vertex count")?;
                let m = parse_field(fields.next(), lineno, line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(lineno, 1, "edge before problem line"));
                };
                let u = parse_field(fields.next(), lineno, line, "edge endpoint")?;
                let v = parse_field(fields.next(), lineno, line, "edge endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::parse(
                            lineno,
                            1,
                            format!("vertex {x} outside 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(Error::parse(lineno, 1, format!("self loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::parse(
                    lineno,
                    1,
                    format!("unknown line type `{other}`"),
                ))
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(1, 1, "missing problem line"))?;
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok((n, edges))
}

fn parse_field(field: Option<&str>, line: usize, raw: &str, what: &str) -> Result<usize> {
    let f = field.ok_or_else(|| Error::parse(line, raw.len() + 1, format!("missing {what}")))?;
    let column = raw.find(f).map_or(1, |c| c + 1);
    f.parse()
        .map_err(|_| Error::parse(line, column, format!("invalid {what} `{f}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_sorted_one_indexed() {
        let text = write_dimacs(3, &[(2, 1), (0, 1)]);
        assert_eq!(text, "p edge 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn parse_round_trip() {
        let text = write_dimacs(4, &[(0, 3), (1, 2)]);
        let (n, edges) = parse_dimacs(&text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(write_dimacs(n, &edges), text);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_dimacs("p edge 3 1\ne 1 x\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 5,
                    ..
                }
            ),
            "{err}"
        );
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 1 4\n").is_err());
    }
}
