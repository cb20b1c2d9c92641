//! Finite rectangles of Hilbert-function values and their difference
//! tables.
//!
//! The text form is one row per line of whitespace-separated naturals,
//! `#` comments allowed; the row index is the first coordinate `i`
//! (x-degree), the column index is `j` (y-degree).

use std::fmt;
use std::str::FromStr;

use crate::monomial::BiDegree;
use crate::{Error, Result};

/// A fully populated rectangle of values `H(i,j)` for `0 <= i <= A`,
/// `0 <= j <= B`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HilbertTable {
    values: Vec<Vec<usize>>,
}

impl HilbertTable {
    /// Builds a table from rows; they must be non-empty and rectangular.
    pub fn new(values: Vec<Vec<usize>>) -> Result<Self> {
        if values.is_empty() || values[0].is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "table must be non-empty".into(),
            });
        }
        let width = values[0].len();
        if let Some(row) = values.iter().position(|r| r.len() != width) {
            return Err(Error::Parse {
                line: row + 1,
                msg: format!(
                    "ragged table: row has {} columns, expected {width}",
                    values[row].len()
                ),
            });
        }
        Ok(HilbertTable { values })
    }

    pub fn from_fn(bounds: BiDegree, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let values = (0..=bounds.x)
            .map(|i| (0..=bounds.y).map(|j| f(i, j)).collect())
            .collect();
        HilbertTable { values }
    }

    pub fn bounds(&self) -> BiDegree {
        BiDegree::new(self.values.len() - 1, self.values[0].len() - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.values[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.values
    }

    /// Cells in the canonical visit order: increasing `i + j`, ties by
    /// increasing `i`.
    pub fn cells_diagonal_order(&self) -> Vec<(usize, usize)> {
        let b = self.bounds();
        let mut cells: Vec<(usize, usize)> = (0..=b.x)
            .flat_map(|i| (0..=b.y).map(move |j| (i, j)))
            .collect();
        cells.sort_by_key(|&(i, j)| (i + j, i));
        cells
    }

    /// The second-difference table `c(i,j) = H(i,j) + H(i-1,j-1) -
    /// H(i-1,j) - H(i,j-1)`, with `H` treated as zero at negative indices.
    pub fn delta(&self) -> DeltaTable {
        let b = self.bounds();
        let h = |i: isize, j: isize| -> i64 {
            if i < 0 || j < 0 {
                0
            } else {
                self.values[i as usize][j as usize] as i64
            }
        };
        let values = (0..=b.x as isize)
            .map(|i| {
                (0..=b.y as isize)
                    .map(|j| h(i, j) + h(i - 1, j - 1) - h(i - 1, j) - h(i, j - 1))
                    .collect()
            })
            .collect();
        DeltaTable { values }
    }
}

impl fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.values {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for HilbertTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut width = None;
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("expected a natural number, got {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if let Some(w) = width {
                if row.len() != w {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("row has {} columns, expected {w}", row.len()),
                    });
                }
            } else {
                width = Some(row.len());
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "empty table".into(),
            });
        }
        HilbertTable::new(rows)
    }
}

/// The grid of second differences of a [`HilbertTable`]; entries can be
/// negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTable {
    values: Vec<Vec<i64>>,
}

impl DeltaTable {
    pub fn bounds(&self) -> BiDegree {
        BiDegree::new(self.values.len() - 1, self.values[0].len() - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.values[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.values
    }
}
