//! Brute-force realizability, independent of the partition machinery.
//!
//! On a small rectangle a table is realizable iff one can pick, per cell,
//! a set of monomials to stand inside the ideal, leaving the prescribed
//! number outside, such that each set is closed under raising the x-part
//! or y-part in lex order (an up-set of the dictionary grid) and the
//! family is closed under multiplication by the four variables. This
//! module enumerates those families directly over bitmasks, sharing no
//! search code with the partition route, exactly so the two can be played
//! against each other.
//!
//! Resource limits are hard errors, never silent truncation.

use std::collections::BTreeSet;

use crate::monomial::{BiDegree, BiMonomial};
use crate::table::HilbertTable;
use crate::{Error, Result};

/// Hard size limits for the exhaustive routines.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Largest graded piece (in monomials) that may be enumerated.
    pub max_cells: usize,
    /// Largest rectangle bound accepted by the realizability search.
    pub max_bound: usize,
    /// Largest table value accepted by the realizability search.
    pub max_value: usize,
    /// Largest rectangle bound accepted by the census.
    pub max_census_bound: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_cells: 20,
            max_bound: 3,
            max_value: 16,
            max_census_bound: 2,
        }
    }
}

/// Bit layout for a graded piece `(a, b)`: bit `(p-1) * (b+1) + (q-1)`
/// stands for the dictionary cell `(p, q)`.
fn bit(p: usize, q: usize, b: usize) -> usize {
    (p - 1) * (b + 1) + (q - 1)
}

fn is_up_set(mask: u32, a: usize, b: usize) -> bool {
    for p in 1..=a + 1 {
        for q in 1..=b + 1 {
            if mask & (1 << bit(p, q, b)) == 0 {
                continue;
            }
            // every lex-higher x-part (larger p) and y-part (larger q)
            let row_ok = (p + 1..=a + 1).all(|p2| mask & (1 << bit(p2, q, b)) != 0);
            let col_ok = (q + 1..=b + 1).all(|q2| mask & (1 << bit(p, q2, b)) != 0);
            if !row_ok || !col_ok {
                return false;
            }
        }
    }
    true
}

fn mask_to_monomials(mask: u32, at: BiDegree) -> BTreeSet<BiMonomial> {
    let (a, b) = (at.x, at.y);
    let mut out = BTreeSet::new();
    for p in 1..=a + 1 {
        for q in 1..=b + 1 {
            if mask & (1 << bit(p, q, b)) != 0 {
                out.insert(BiMonomial::new(p - 1, a + 1 - p, q - 1, b + 1 - q));
            }
        }
    }
    out
}

fn up_set_masks(at: BiDegree, limits: &OracleLimits) -> Result<Vec<u32>> {
    let cells = at.dim();
    if cells > limits.max_cells {
        return Err(Error::OracleLimit(format!(
            "graded piece {at} has {cells} monomials, limit is {}",
            limits.max_cells
        )));
    }
    Ok((0u32..1 << cells)
        .filter(|&m| is_up_set(m, at.x, at.y))
        .collect())
}

/// All bilex subsets of the graded piece `at`, smallest first; these are
/// exactly the up-sets of the `(a+1) x (b+1)` dictionary grid.
pub fn enumerate_bilex_sets(
    at: BiDegree,
    limits: &OracleLimits,
) -> Result<Vec<BTreeSet<BiMonomial>>> {
    let mut masks = up_set_masks(at, limits)?;
    masks.sort_by_key(|m| (m.count_ones(), *m));
    Ok(masks
        .into_iter()
        .map(|m| mask_to_monomials(m, at))
        .collect())
}

/// Per-cell spade work for the realizability search, reusable across many
/// tables on the same rectangle.
pub struct BruteForceContext {
    bounds: BiDegree,
    cells: Vec<(usize, usize)>,
    /// `masks[i][j][k]` = up-sets of the piece `(i,j)` with exactly `k`
    /// bits set.
    masks: Vec<Vec<Vec<Vec<u32>>>>,
}

impl BruteForceContext {
    pub fn new(bounds: BiDegree, limits: &OracleLimits) -> Result<Self> {
        if bounds.x > limits.max_bound || bounds.y > limits.max_bound {
            return Err(Error::OracleLimit(format!(
                "bounds {bounds} exceed the brute-force limit ({0},{0})",
                limits.max_bound
            )));
        }
        let mut masks = Vec::with_capacity(bounds.x + 1);
        for i in 0..=bounds.x {
            let mut row = Vec::with_capacity(bounds.y + 1);
            for j in 0..=bounds.y {
                let at = BiDegree::new(i, j);
                let mut by_card = vec![Vec::new(); at.dim() + 1];
                for m in up_set_masks(at, limits)? {
                    by_card[m.count_ones() as usize].push(m);
                }
                row.push(by_card);
            }
            masks.push(row);
        }
        let mut cells: Vec<(usize, usize)> = (0..=bounds.x)
            .flat_map(|i| (0..=bounds.y).map(move |j| (i, j)))
            .collect();
        cells.sort_by_key(|&(i, j)| (i + j, i));
        Ok(BruteForceContext {
            bounds,
            cells,
            masks,
        })
    }

    /// Whether some closed family of up-sets leaves exactly `H(i,j)`
    /// monomials outside at every cell.
    pub fn realizable(&self, table: &HilbertTable) -> bool {
        if table.bounds() != self.bounds {
            return false;
        }
        let mut chosen = vec![vec![0u32; self.bounds.y + 1]; self.bounds.x + 1];
        self.extend(0, table, &mut chosen)
    }

    fn extend(&self, k: usize, table: &HilbertTable, chosen: &mut Vec<Vec<u32>>) -> bool {
        if k == self.cells.len() {
            return true;
        }
        let (i, j) = self.cells[k];
        let dim = (i + 1) * (j + 1);
        let h = table.get(i, j);
        if h > dim {
            return false;
        }
        let required = self.required_mask(i, j, chosen);
        for &mask in &self.masks[i][j][dim - h] {
            if mask & required == required {
                chosen[i][j] = mask;
                if self.extend(k + 1, table, chosen) {
                    return true;
                }
            }
        }
        false
    }

    /// Bits forced into the slice at `(i,j)` by multiplying the chosen
    /// slices below by x1, x2 (from `(i-1,j)`) and y1, y2 (from `(i,j-1)`).
    fn required_mask(&self, i: usize, j: usize, chosen: &[Vec<u32>]) -> u32 {
        let mut req = 0u32;
        if i > 0 {
            let below = chosen[i - 1][j];
            for p in 1..=i {
                for q in 1..=j + 1 {
                    if below & (1 << bit(p, q, j)) != 0 {
                        req |= 1 << bit(p, q, j); // times x2
                        req |= 1 << bit(p + 1, q, j); // times x1
                    }
                }
            }
        }
        if j > 0 {
            let left = chosen[i][j - 1];
            for p in 1..=i + 1 {
                for q in 1..=j {
                    if left & (1 << bit(p, q, j - 1)) != 0 {
                        req |= 1 << bit(p, q, j); // times y2
                        req |= 1 << bit(p, q + 1, j); // times y1
                    }
                }
            }
        }
        req
    }

    /// Every table realized by some closed family on this rectangle.
    fn all_tables(&self) -> BTreeSet<HilbertTable> {
        let mut out = BTreeSet::new();
        let mut chosen = vec![vec![0u32; self.bounds.y + 1]; self.bounds.x + 1];
        self.collect(0, &mut chosen, &mut out);
        out
    }

    fn collect(&self, k: usize, chosen: &mut Vec<Vec<u32>>, out: &mut BTreeSet<HilbertTable>) {
        if k == self.cells.len() {
            let table = HilbertTable::from_fn(self.bounds, |i, j| {
                (i + 1) * (j + 1) - chosen[i][j].count_ones() as usize
            });
            out.insert(table);
            return;
        }
        let (i, j) = self.cells[k];
        let required = self.required_mask(i, j, chosen);
        for by_card in &self.masks[i][j] {
            for &mask in by_card {
                if mask & required == required {
                    chosen[i][j] = mask;
                    self.collect(k + 1, chosen, out);
                }
            }
        }
    }
}

/// Decides realizability of a table by exhausting closed up-set families.
/// Never touches partition arithmetic.
pub fn brute_force_realizable(table: &HilbertTable, limits: &OracleLimits) -> Result<bool> {
    if let Some(&v) = table
        .rows()
        .iter()
        .flatten()
        .find(|&&v| v > limits.max_value)
    {
        return Err(Error::OracleLimit(format!(
            "table value {v} exceeds the brute-force limit {}",
            limits.max_value
        )));
    }
    Ok(BruteForceContext::new(table.bounds(), limits)?.realizable(table))
}

/// The census: every Hilbert table a closed up-set family produces on the
/// rectangle, deduplicated. Includes the table of the unit ideal
/// (`H(0,0) = 0`), which the realizability convention excludes.
pub fn enumerate_realizable_tables(
    bounds: BiDegree,
    limits: &OracleLimits,
) -> Result<BTreeSet<HilbertTable>> {
    if bounds.x > limits.max_census_bound || bounds.y > limits.max_census_bound {
        return Err(Error::OracleLimit(format!(
            "bounds {bounds} exceed the census limit ({0},{0})",
            limits.max_census_bound
        )));
    }
    Ok(BruteForceContext::new(bounds, limits)?.all_tables())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::binomial;

    #[test]
    fn bilex_set_counts_match_box_partitions() {
        let limits = OracleLimits::default();
        // up-sets of an (a+1) x (b+1) grid are counted by C(a+b+2, a+1)
        for (a, b) in [(0, 0), (1, 1), (2, 1), (2, 3)] {
            let n = enumerate_bilex_sets(BiDegree::new(a, b), &limits)
                .unwrap()
                .len();
            assert_eq!(n as u128, binomial((a + b + 2) as u128, (a + 1) as u128));
        }
        let at11 = enumerate_bilex_sets(BiDegree::new(1, 1), &limits).unwrap();
        assert_eq!(at11.len(), 6);
        let at00 = enumerate_bilex_sets(BiDegree::new(0, 0), &limits).unwrap();
        assert_eq!(at00.len(), 2);
    }

    #[test]
    fn bilex_sets_really_are_bilex() {
        use crate::monomial::{is_bilex, VariableOrder};
        let limits = OracleLimits::default();
        let at = BiDegree::new(2, 2);
        for set in enumerate_bilex_sets(at, &limits).unwrap() {
            assert!(is_bilex(&set, at, VariableOrder::STANDARD).unwrap());
        }
    }

    #[test]
    fn limit_is_a_hard_error() {
        let limits = OracleLimits::default();
        assert!(matches!(
            enumerate_bilex_sets(BiDegree::new(4, 4), &limits),
            Err(Error::OracleLimit(_))
        ));
        let too_big = HilbertTable::from_fn(BiDegree::new(4, 4), |_, _| 1);
        assert!(matches!(
            brute_force_realizable(&too_big, &limits),
            Err(Error::OracleLimit(_))
        ));
    }

    #[test]
    fn product_and_constant_tables_are_realizable() {
        let limits = OracleLimits::default();
        let product = HilbertTable::from_fn(BiDegree::new(2, 2), |i, j| (i + 1) * (j + 1));
        assert!(brute_force_realizable(&product, &limits).unwrap());
        let ones = HilbertTable::from_fn(BiDegree::new(2, 2), |_, _| 1);
        assert!(brute_force_realizable(&ones, &limits).unwrap());
    }

    #[test]
    fn growth_trap_table_is_not_realizable() {
        let limits = OracleLimits::default();
        let rows = vec![vec![1, 2, 3], vec![2, 2, 3], vec![3, 3, 0]];
        let t = HilbertTable::new(rows).unwrap();
        assert!(!brute_force_realizable(&t, &limits).unwrap());
    }

    #[test]
    fn census_on_a_point() {
        let limits = OracleLimits::default();
        let tables = enumerate_realizable_tables(BiDegree::new(0, 0), &limits).unwrap();
        let values: Vec<usize> = tables.iter().map(|t| t.get(0, 0)).collect();
        assert_eq!(values, vec![0, 1]);
    }

    #[test]
    fn census_contains_known_realizable_corners() {
        let limits = OracleLimits::default();
        let tables = enumerate_realizable_tables(BiDegree::new(2, 2), &limits).unwrap();
        let corner = HilbertTable::new(vec![vec![1, 2, 3], vec![2, 2, 3], vec![3, 2, 0]]).unwrap();
        assert!(tables.contains(&corner));
        let product = HilbertTable::from_fn(BiDegree::new(2, 2), |i, j| (i + 1) * (j + 1));
        assert!(tables.contains(&product));
    }
}
