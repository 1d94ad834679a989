//! Parsers for command-line values.

use anyhow::{bail, Context, Result};
use qsc_core::{Cell, Composition, Filling};

pub fn composition(s: &str) -> Result<Composition> {
    Ok(s.parse()?)
}

/// A tableau as JSON (`{"rows": [[..], ..]}` or a bare array of rows) or in
/// the compact grammar: rows bottom first, separated by `/`.
pub fn tableau(s: &str) -> Result<Filling> {
    let t = s.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).context("invalid tableau JSON");
    }
    if t.starts_with('[') {
        let rows: Vec<Vec<u32>> = serde_json::from_str(t).context("invalid tableau JSON")?;
        return Ok(Filling::from_rows(rows)?);
    }
    Ok(t.parse()?)
}

/// `col,row`, 1-based, optionally parenthesised.
pub fn cell(s: &str) -> Result<Cell> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    let [col, row] = parts[..] else {
        bail!("expected a cell as col,row, got {s:?}");
    };
    let col: usize = col.parse().with_context(|| format!("bad column in {s:?}"))?;
    let row: usize = row.parse().with_context(|| format!("bad row in {s:?}"))?;
    if col == 0 || row == 0 {
        bail!("cells are 1-based, got {s:?}");
    }
    Ok(Cell::new(col, row))
}

/// Positive integers separated by spaces or commas.
pub fn word(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<u32>() {
            Ok(0) | Err(_) => bail!("bad letter {t:?}"),
            Ok(v) => Ok(v),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_forms_agree() {
        let compact = tableau("2/3,4,7/6,8").unwrap();
        assert_eq!(tableau("[[2],[3,4,7],[6,8]]").unwrap(), compact);
        assert_eq!(tableau(r#"{"rows":[[2],[3,4,7],[6,8]]}"#).unwrap(), compact);
        assert!(tableau("[[2],[x]]").is_err());
    }

    #[test]
    fn cells_and_words() {
        assert_eq!(cell("(2,3)").unwrap(), Cell::new(2, 3));
        assert_eq!(cell("2, 3").unwrap(), Cell::new(2, 3));
        assert!(cell("0,1").is_err());
        assert!(cell("1").is_err());
        assert_eq!(word("4 6,9").unwrap(), vec![4, 6, 9]);
        assert!(word("1 0").is_err());
    }
}
