//! The decision procedure for realizable Hilbert tables.
//!
//! A table `H` on a rectangle is accepted exactly when it carries a
//! *Ferrers witness*: a partition `alpha_ij` of `H(i,j)` with sides
//! `(i+1, j+1)` per cell, such that each partition is dominated by the row
//! lift of its upper neighbour and the column lift of its left neighbour.
//! Acceptance is constructive both ways: a witness realizes a monomial
//! ideal whose Hilbert table is `H` ([`realize_ideal`]), and rejection
//! pins down the first frontier cell whose candidate set ran dry.
//!
//! Cheap necessary conditions ([`quick_filters`], [`growth_bound_ok`],
//! [`diagonal_osequence_ok`]) reject most bad tables before the search;
//! none of them is sufficient on its own.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ideal::{minimal_generators, MonomialBiIdeal};
use crate::macaulay::{self, OSequenceViolation};
use crate::monomial::{monomial_basis, monomial_set_of, BiDegree};
use crate::partition::{self, SidedPartition};
use crate::table::HilbertTable;
use crate::{Error, Result};

/// A violation of one of the per-cell necessary conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterViolation {
    /// `H(0,0)` must be 1.
    OriginNotOne { value: usize },
    /// `H(i,j)` exceeds the box bound `(i+1)(j+1)`.
    BoxBoundExceeded {
        cell: (usize, usize),
        value: usize,
        bound: usize,
    },
    /// A value sits above a cell that already vanished.
    ZeroRegionViolated {
        zero_cell: (usize, usize),
        cell: (usize, usize),
        value: usize,
    },
    /// The growth pair to the two neighbours is dominated by no size of a
    /// partition of `H(i,j)` in the cell's box.
    GrowthPairUnreachable {
        cell: (usize, usize),
        value: usize,
        row_growth: Option<i64>,
        col_growth: Option<i64>,
    },
    /// The floor growth bound `H(i+1,j) <= H(i,j) + floor(H(i,j)/(i+1))`
    /// (or its column analogue) fails.
    GrowthBoundExceeded {
        cell: (usize, usize),
        value: usize,
        bound: usize,
        along_rows: bool,
    },
}

impl FilterViolation {
    /// The cell the report points at.
    pub fn cell(&self) -> (usize, usize) {
        match self {
            FilterViolation::OriginNotOne { .. } => (0, 0),
            FilterViolation::BoxBoundExceeded { cell, .. }
            | FilterViolation::ZeroRegionViolated { cell, .. }
            | FilterViolation::GrowthPairUnreachable { cell, .. }
            | FilterViolation::GrowthBoundExceeded { cell, .. } => *cell,
        }
    }
}

impl fmt::Display for FilterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterViolation::OriginNotOne { value } => {
                write!(f, "H(0,0) = {value}, must be 1")
            }
            FilterViolation::BoxBoundExceeded { cell, value, bound } => {
                write!(f, "H{cell:?} = {value} exceeds the box bound {bound}")
            }
            FilterViolation::ZeroRegionViolated {
                zero_cell,
                cell,
                value,
            } => {
                write!(
                    f,
                    "H{cell:?} = {value} but H{zero_cell:?} = 0 forces zero from there on"
                )
            }
            FilterViolation::GrowthPairUnreachable {
                cell,
                value,
                row_growth,
                col_growth,
            } => {
                write!(
                    f,
                    "growth pair ({},{}) at {cell:?} is below no size of a partition of {value} in the {}x{} box",
                    row_growth.map_or("-".into(), |g| g.to_string()),
                    col_growth.map_or("-".into(), |g| g.to_string()),
                    cell.0 + 1,
                    cell.1 + 1,
                )
            }
            FilterViolation::GrowthBoundExceeded {
                cell,
                value,
                bound,
                along_rows,
            } => {
                let dir = if *along_rows { "row" } else { "column" };
                write!(
                    f,
                    "H{cell:?} = {value} exceeds the {dir} growth bound {bound}"
                )
            }
        }
    }
}

/// Checks the per-cell necessary conditions, in visit order: the origin
/// value, the box bound, propagation of zeroes, and reachability of each
/// growth pair by some partition size. Passing is necessary but not
/// sufficient for realizability.
pub fn quick_filters(table: &HilbertTable) -> std::result::Result<(), FilterViolation> {
    let bounds = table.bounds();
    let cells = table.cells_diagonal_order();

    if table.get(0, 0) != 1 {
        return Err(FilterViolation::OriginNotOne {
            value: table.get(0, 0),
        });
    }
    for &(i, j) in &cells {
        let h = table.get(i, j);
        let bound = (i + 1) * (j + 1);
        if h > bound {
            return Err(FilterViolation::BoxBoundExceeded {
                cell: (i, j),
                value: h,
                bound,
            });
        }
    }
    let mut zeroed = vec![vec![false; bounds.y + 1]; bounds.x + 1];
    for &(i, j) in &cells {
        let h = table.get(i, j);
        let below_zero = (i > 0 && zeroed[i - 1][j]) || (j > 0 && zeroed[i][j - 1]);
        if below_zero && h > 0 {
            let zero_cell = cells
                .iter()
                .copied()
                .find(|&(u, v)| u <= i && v <= j && table.get(u, v) == 0)
                .expect("a dominated zero cell exists");
            return Err(FilterViolation::ZeroRegionViolated {
                zero_cell,
                cell: (i, j),
                value: h,
            });
        }
        zeroed[i][j] = below_zero || h == 0;
    }
    for &(i, j) in &cells {
        let h = table.get(i, j);
        let row_growth = (i < bounds.x).then(|| table.get(i + 1, j) as i64 - h as i64);
        let col_growth = (j < bounds.y).then(|| table.get(i, j + 1) as i64 - h as i64);
        if row_growth.is_none() && col_growth.is_none() {
            continue;
        }
        let sizes = partition::enumerate_sizes(h, (i + 1, j + 1));
        let reachable = sizes.iter().any(|&(l1, l2)| {
            row_growth.is_none_or(|g| g <= l1 as i64) && col_growth.is_none_or(|g| g <= l2 as i64)
        });
        if !reachable {
            return Err(FilterViolation::GrowthPairUnreachable {
                cell: (i, j),
                value: h,
                row_growth,
                col_growth,
            });
        }
    }
    Ok(())
}

/// Checks the floor growth bound in both directions at every cell with a
/// neighbour inside the rectangle. Necessary but strictly weaker than the
/// size-pair filter.
pub fn growth_bound_ok(table: &HilbertTable) -> std::result::Result<(), FilterViolation> {
    let bounds = table.bounds();
    for (i, j) in table.cells_diagonal_order() {
        let h = table.get(i, j);
        if i < bounds.x {
            let bound = h + h / (i + 1);
            if table.get(i + 1, j) > bound {
                return Err(FilterViolation::GrowthBoundExceeded {
                    cell: (i + 1, j),
                    value: table.get(i + 1, j),
                    bound,
                    along_rows: true,
                });
            }
        }
        if j < bounds.y {
            let bound = h + h / (j + 1);
            if table.get(i, j + 1) > bound {
                return Err(FilterViolation::GrowthBoundExceeded {
                    cell: (i, j + 1),
                    value: table.get(i, j + 1),
                    bound,
                    along_rows: false,
                });
            }
        }
    }
    Ok(())
}

/// Checks that the sums over full anti-diagonals form an O-sequence.
pub fn diagonal_osequence_ok(table: &HilbertTable) -> std::result::Result<(), OSequenceViolation> {
    macaulay::osequence_check(&macaulay::diagonal_sums(table))
}

/// A compatible family of partitions certifying a table: one partition of
/// `H(i,j)` with sides `(i+1, j+1)` per cell, each dominated by the row
/// lift of the cell above and the column lift of the cell to the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersWitness {
    grid: Vec<Vec<SidedPartition>>,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    bounds: (usize, usize),
    alpha: Vec<Vec<Vec<usize>>>,
}

impl FerrersWitness {
    /// Builds a witness from a grid of partitions; cell `(i,j)` must hold
    /// a partition of sides `(i+1, j+1)`.
    pub fn from_grid(grid: Vec<Vec<SidedPartition>>) -> Result<Self> {
        if grid.is_empty() || grid[0].is_empty() {
            return Err(Error::InvalidWitness("empty grid".into()));
        }
        let cols = grid[0].len();
        for (i, row) in grid.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidWitness(format!("ragged grid at row {i}")));
            }
            for (j, alpha) in row.iter().enumerate() {
                if alpha.sides() != (i + 1, j + 1) {
                    return Err(Error::InvalidWitness(format!(
                        "cell ({i},{j}) holds sides {:?}, expected ({},{})",
                        alpha.sides(),
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(FerrersWitness { grid })
    }

    pub fn bounds(&self) -> BiDegree {
        BiDegree::new(self.grid.len() - 1, self.grid[0].len() - 1)
    }

    pub fn alpha(&self, i: usize, j: usize) -> &SidedPartition {
        &self.grid[i][j]
    }

    pub fn grid(&self) -> &[Vec<SidedPartition>] {
        &self.grid
    }

    /// Checks the three witness conditions against a table: weights match
    /// the table, and both lift dominations hold at every cell.
    pub fn validate_for(&self, table: &HilbertTable) -> Result<()> {
        if self.bounds() != table.bounds() {
            return Err(Error::InvalidWitness(format!(
                "witness bounds {} do not match table bounds {}",
                self.bounds(),
                table.bounds()
            )));
        }
        let b = self.bounds();
        for i in 0..=b.x {
            for j in 0..=b.y {
                let alpha = &self.grid[i][j];
                if alpha.weight() != table.get(i, j) {
                    return Err(Error::InvalidWitness(format!(
                        "alpha[{i}][{j}] = {alpha} has weight {}, table wants {}",
                        alpha.weight(),
                        table.get(i, j)
                    )));
                }
                if i > 0 {
                    let lifted = self.grid[i - 1][j].lift_row();
                    if !alpha.leq(&lifted)? {
                        return Err(Error::InvalidWitness(format!(
                            "alpha[{i}][{j}] = {alpha} is not below the row lift {lifted}"
                        )));
                    }
                }
                if j > 0 {
                    let lifted = self.grid[i][j - 1].lift_col()?;
                    if !alpha.leq(&lifted)? {
                        return Err(Error::InvalidWitness(format!(
                            "alpha[{i}][{j}] = {alpha} is not below the column lift {lifted}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// JSON form: `{"bounds": [A, B], "alpha": [[entries...]...]}` with
    /// `alpha[i][j]` an entry array (sides are implied by the cell).
    pub fn to_json(&self) -> String {
        let b = self.bounds();
        let alpha = self
            .grid
            .iter()
            .map(|row| row.iter().map(|p| p.entries().to_vec()).collect())
            .collect();
        serde_json::to_string_pretty(&WitnessJson {
            bounds: (b.x, b.y),
            alpha,
        })
        .expect("witness serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: WitnessJson = serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let (bx, by) = raw.bounds;
        if raw.alpha.len() != bx + 1 {
            return Err(Error::InvalidWitness(format!(
                "bounds claim {} rows, alpha has {}",
                bx + 1,
                raw.alpha.len()
            )));
        }
        let mut grid = Vec::with_capacity(bx + 1);
        for (i, row) in raw.alpha.into_iter().enumerate() {
            if row.len() != by + 1 {
                return Err(Error::InvalidWitness(format!(
                    "bounds claim {} columns, row {i} has {}",
                    by + 1,
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(by + 1);
            for (j, entries) in row.into_iter().enumerate() {
                out.push(SidedPartition::new((i + 1, j + 1), entries)?);
            }
            grid.push(out);
        }
        FerrersWitness::from_grid(grid)
    }
}

/// One failed visit to the certificate cell: the partitions forced on its
/// two neighbours, the cap they imposed, and the weight that had to fit
/// under it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeadEnd {
    pub row_parent: Option<SidedPartition>,
    pub col_parent: Option<SidedPartition>,
    pub cap: Option<SidedPartition>,
    pub required: usize,
}

/// Why a table was rejected: a violated necessary condition, or the cell
/// at which every search branch was exhausted (no branch ever gets past
/// it, so it is both the deepest dead end and the unique always-failing
/// cell), with one record per failed visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureCertificate {
    Filter(FilterViolation),
    Exhausted {
        cell: (usize, usize),
        dead_ends: Vec<DeadEnd>,
    },
}

impl FailureCertificate {
    pub fn cell(&self) -> (usize, usize) {
        match self {
            FailureCertificate::Filter(v) => v.cell(),
            FailureCertificate::Exhausted { cell, .. } => *cell,
        }
    }

    pub fn reason(&self) -> String {
        match self {
            FailureCertificate::Filter(v) => v.to_string(),
            FailureCertificate::Exhausted { cell, dead_ends } => format!(
                "witness search exhausted at ({},{}) after {} failed visit(s)",
                cell.0,
                cell.1,
                dead_ends.len()
            ),
        }
    }

    /// JSON form: `{"cell": [i,j], "reason": "...", "cap": [...]?}` plus a
    /// `dead_ends` array for search exhaustion.
    pub fn to_json(&self) -> String {
        let entries = |p: &Option<SidedPartition>| -> serde_json::Value {
            match p {
                Some(p) => serde_json::json!(p.entries()),
                None => serde_json::Value::Null,
            }
        };
        let mut obj = serde_json::json!({
            "cell": [self.cell().0, self.cell().1],
            "reason": self.reason(),
        });
        if let FailureCertificate::Exhausted { dead_ends, .. } = self {
            if let Some(first) = dead_ends.first() {
                obj["cap"] = entries(&first.cap);
            }
            obj["dead_ends"] = serde_json::Value::Array(
                dead_ends
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "row_parent": entries(&d.row_parent),
                            "col_parent": entries(&d.col_parent),
                            "cap": entries(&d.cap),
                            "required": d.required,
                        })
                    })
                    .collect(),
            );
        }
        serde_json::to_string_pretty(&obj).expect("certificate serializes")
    }
}

/// The verdict of [`is_ferrers`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FerrersDecision {
    Yes(FerrersWitness),
    No(FailureCertificate),
}

impl FerrersDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, FerrersDecision::Yes(_))
    }

    pub fn witness(&self) -> Option<&FerrersWitness> {
        match self {
            FerrersDecision::Yes(w) => Some(w),
            FerrersDecision::No(_) => None,
        }
    }
}

/// Which candidate source the search draws from. The two agree on every
/// verdict; `Maximal` is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Maximal,
    Exhaustive,
}

/// Decides whether the table carries a Ferrers witness.
///
/// The search is a deterministic depth-first pass over the cells in
/// increasing `(i+j, i)` order. Each cell's candidates are the partitions
/// of `H(i,j)` under the meet of the neighbour lifts, tried in descending
/// lexicographic order, so the returned witness is canonical. A `No`
/// carries either the quick-filter violation or the frontier cell at
/// which every branch died.
pub fn is_ferrers(table: &HilbertTable) -> FerrersDecision {
    is_ferrers_with(table, SearchMode::Maximal)
}

/// [`is_ferrers`] with an explicit candidate source.
pub fn is_ferrers_with(table: &HilbertTable, mode: SearchMode) -> FerrersDecision {
    if let Err(v) = quick_filters(table) {
        return FerrersDecision::No(FailureCertificate::Filter(v));
    }
    let bounds = table.bounds();
    let mut search = Search {
        table,
        cells: table.cells_diagonal_order(),
        mode,
        grid: vec![vec![None; bounds.y + 1]; bounds.x + 1],
        deepest: 0,
        dead_ends: Vec::new(),
        any_dead: false,
    };
    if search.extend(0) {
        let grid = search
            .grid
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| c.expect("complete assignment"))
                    .collect()
            })
            .collect();
        FerrersDecision::Yes(FerrersWitness { grid })
    } else {
        assert!(search.any_dead, "a failed search has at least one dead end");
        FerrersDecision::No(FailureCertificate::Exhausted {
            cell: search.cells[search.deepest],
            dead_ends: search.dead_ends,
        })
    }
}

struct Search<'a> {
    table: &'a HilbertTable,
    cells: Vec<(usize, usize)>,
    mode: SearchMode,
    grid: Vec<Vec<Option<SidedPartition>>>,
    deepest: usize,
    dead_ends: Vec<DeadEnd>,
    any_dead: bool,
}

impl Search<'_> {
    fn extend(&mut self, k: usize) -> bool {
        if k == self.cells.len() {
            return true;
        }
        let (i, j) = self.cells[k];
        let row_parent = if i > 0 {
            self.grid[i - 1][j].clone()
        } else {
            None
        };
        let col_parent = if j > 0 {
            self.grid[i][j - 1].clone()
        } else {
            None
        };
        let cap = match (&row_parent, &col_parent) {
            (None, None) => None,
            (Some(r), None) => Some(r.lift_row()),
            (None, Some(c)) => Some(c.lift_col().expect("parent has entries")),
            (Some(r), Some(c)) => {
                let lifted_row = r.lift_row();
                let lifted_col = c.lift_col().expect("parent has entries");
                Some(lifted_row.meet(&lifted_col).expect("lifts share sides"))
            }
        };
        let h = self.table.get(i, j);
        let candidates = match (&cap, self.mode) {
            (Some(cap), SearchMode::Maximal) => partition::maximal_bounded(h, cap),
            (Some(cap), SearchMode::Exhaustive) => partition::enumerate_bounded(h, cap),
            (None, _) => partition::enumerate_partitions(h, (i + 1, j + 1)),
        };
        if candidates.is_empty() {
            self.record_dead_end(
                k,
                DeadEnd {
                    row_parent,
                    col_parent,
                    cap,
                    required: h,
                },
            );
            return false;
        }
        for cand in candidates {
            self.grid[i][j] = Some(cand);
            if self.extend(k + 1) {
                return true;
            }
        }
        self.grid[i][j] = None;
        false
    }

    fn record_dead_end(&mut self, k: usize, dead_end: DeadEnd) {
        if !self.any_dead || k > self.deepest {
            self.any_dead = true;
            self.deepest = k;
            self.dead_ends.clear();
        }
        if k == self.deepest {
            self.dead_ends.push(dead_end);
        }
    }
}

/// Realizes a witnessed table as a monomial ideal: per cell, the monomials
/// outside the partition's monomial set span the ideal's slice; the result
/// is the minimal generator set of the union. Closure of the slices under
/// variable multiplication is re-verified on the way (it cannot fail for a
/// valid witness, but an invalid hand-built one is rejected rather than
/// trusted). The realized ideal's Hilbert table equals the input on the
/// whole rectangle.
pub fn realize_ideal(table: &HilbertTable, witness: &FerrersWitness) -> Result<MonomialBiIdeal> {
    witness.validate_for(table)?;
    let bounds = table.bounds();
    let mut slices = BTreeMap::new();
    for i in 0..=bounds.x {
        for j in 0..=bounds.y {
            let at = BiDegree::new(i, j);
            let against = monomial_set_of(witness.alpha(i, j))?;
            let slice: std::collections::BTreeSet<_> = monomial_basis(at)
                .into_iter()
                .filter(|m| !against.contains(m))
                .collect();
            slices.insert(at, slice);
        }
    }
    Ok(MonomialBiIdeal::new(minimal_generators(&slices, bounds)?))
}

/// A violation of the admissibility conditions on the difference table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibilityViolation {
    /// Some `c(i,j)` exceeds 1.
    ExcessDelta { cell: (usize, usize), value: i64 },
    /// A positive `c` sits above a nonpositive one.
    NonpositiveRegionViolated {
        origin: (usize, usize),
        cell: (usize, usize),
        value: i64,
    },
    /// A row or column prefix sum of `c` went negative.
    PrefixSumNegative {
        along_rows: bool,
        cell: (usize, usize),
        sum: i64,
    },
    /// A row prefix sum exceeds the one in the row above (or the column
    /// analogue).
    PrefixSumIncreases {
        along_rows: bool,
        cell: (usize, usize),
        sum: i64,
        previous: i64,
    },
    /// The window is too small: a `c` on the outermost row or column is
    /// still positive, so the verdict would depend on unseen cells.
    TailPositive { cell: (usize, usize), value: i64 },
}

impl fmt::Display for AdmissibilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibilityViolation::ExcessDelta { cell, value } => {
                write!(f, "c{cell:?} = {value} exceeds 1")
            }
            AdmissibilityViolation::NonpositiveRegionViolated {
                origin,
                cell,
                value,
            } => {
                write!(f, "c{cell:?} = {value} > 0 although c{origin:?} <= 0")
            }
            AdmissibilityViolation::PrefixSumNegative {
                along_rows,
                cell,
                sum,
            } => {
                let dir = if *along_rows { "row" } else { "column" };
                write!(f, "{dir} prefix sum at {cell:?} is {sum} < 0")
            }
            AdmissibilityViolation::PrefixSumIncreases {
                along_rows,
                cell,
                sum,
                previous,
            } => {
                let dir = if *along_rows { "row" } else { "column" };
                write!(f, "{dir} prefix sum at {cell:?} is {sum} > {previous}")
            }
            AdmissibilityViolation::TailPositive { cell, value } => {
                write!(f, "c{cell:?} = {value} > 0 on the window border")
            }
        }
    }
}

fn check_admissible(
    table: &HilbertTable,
    require_tail: bool,
) -> std::result::Result<(), AdmissibilityViolation> {
    let delta = table.delta();
    let b = delta.bounds();
    let (rows, cols) = (b.x + 1, b.y + 1);
    let mut nonpositive = vec![vec![false; cols]; rows];
    let mut row_prefix = vec![vec![0i64; cols]; rows];
    let mut col_prefix = vec![vec![0i64; cols]; rows];
    for (i, j) in table.cells_diagonal_order() {
        let c = delta.get(i, j);
        if c > 1 {
            return Err(AdmissibilityViolation::ExcessDelta {
                cell: (i, j),
                value: c,
            });
        }
        let marked = (i > 0 && nonpositive[i - 1][j]) || (j > 0 && nonpositive[i][j - 1]);
        if marked && c > 0 {
            let origin = table
                .cells_diagonal_order()
                .into_iter()
                .find(|&(u, v)| u <= i && v <= j && delta.get(u, v) <= 0)
                .expect("a dominated nonpositive cell exists");
            return Err(AdmissibilityViolation::NonpositiveRegionViolated {
                origin,
                cell: (i, j),
                value: c,
            });
        }
        nonpositive[i][j] = marked || c <= 0;

        row_prefix[i][j] = c + if j > 0 { row_prefix[i][j - 1] } else { 0 };
        col_prefix[i][j] = c + if i > 0 { col_prefix[i - 1][j] } else { 0 };
        if row_prefix[i][j] < 0 {
            return Err(AdmissibilityViolation::PrefixSumNegative {
                along_rows: true,
                cell: (i, j),
                sum: row_prefix[i][j],
            });
        }
        if i > 0 && row_prefix[i][j] > row_prefix[i - 1][j] {
            return Err(AdmissibilityViolation::PrefixSumIncreases {
                along_rows: true,
                cell: (i, j),
                sum: row_prefix[i][j],
                previous: row_prefix[i - 1][j],
            });
        }
        if col_prefix[i][j] < 0 {
            return Err(AdmissibilityViolation::PrefixSumNegative {
                along_rows: false,
                cell: (i, j),
                sum: col_prefix[i][j],
            });
        }
        if j > 0 && col_prefix[i][j] > col_prefix[i][j - 1] {
            return Err(AdmissibilityViolation::PrefixSumIncreases {
                along_rows: false,
                cell: (i, j),
                sum: col_prefix[i][j],
                previous: col_prefix[i][j - 1],
            });
        }
    }
    if require_tail {
        for j in 0..cols {
            let c = delta.get(rows - 1, j);
            if c > 0 {
                return Err(AdmissibilityViolation::TailPositive {
                    cell: (rows - 1, j),
                    value: c,
                });
            }
        }
        for i in 0..rows {
            let c = delta.get(i, cols - 1);
            if c > 0 {
                return Err(AdmissibilityViolation::TailPositive {
                    cell: (i, cols - 1),
                    value: c,
                });
            }
        }
    }
    Ok(())
}

/// Checks admissibility of the table on the given window: the difference
/// table must stay at most 1, nonpositivity must propagate up-right, row
/// and column prefix sums must be nonnegative and weakly decreasing
/// row-to-row / column-to-column, and the outermost row and column of
/// differences must already be nonpositive (otherwise the window is too
/// small to call). The verdict is relative to the supplied window.
pub fn is_admissible(table: &HilbertTable) -> std::result::Result<(), AdmissibilityViolation> {
    check_admissible(table, true)
}

/// The constructive half of "admissible implies witnessed": entry `r+1`
/// of `alpha(a,b)` is the column prefix sum of the difference table down
/// column `r`. Requires the three per-window admissibility conditions
/// (the border tail condition is not needed for the construction itself).
pub fn admissible_to_witness(
    table: &HilbertTable,
) -> std::result::Result<FerrersWitness, AdmissibilityViolation> {
    check_admissible(table, false)?;
    let delta = table.delta();
    let b = table.bounds();
    let mut grid = Vec::with_capacity(b.x + 1);
    for a in 0..=b.x {
        let mut row = Vec::with_capacity(b.y + 1);
        for bb in 0..=b.y {
            let entries: Vec<usize> = (0..=bb)
                .map(|r| {
                    let sum: i64 = (0..=a).map(|i| delta.get(i, r)).sum();
                    usize::try_from(sum).expect("column prefix sums are nonnegative")
                })
                .collect();
            let alpha = SidedPartition::new((a + 1, bb + 1), entries)
                .expect("admissible prefix sums form a partition");
            row.push(alpha);
        }
        grid.push(row);
    }
    let witness = FerrersWitness { grid };
    debug_assert!(witness.validate_for(table).is_ok());
    Ok(witness)
}
