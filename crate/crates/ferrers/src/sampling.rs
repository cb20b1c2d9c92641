//! Seeded random constructions for the property and acceptance suites.
//!
//! Everything here is deterministic in the seed, so failures replay
//! exactly. The generator is a plain SplitMix64; distribution quality
//! beyond "well scrambled" is irrelevant at these sizes.

use std::collections::BTreeSet;

use crate::engine::{realize_ideal, FerrersWitness};
use crate::ideal::MonomialBiIdeal;
use crate::monomial::{monomial_basis, monomial_set_of, BiDegree, BiMonomial};
use crate::partition::SidedPartition;
use crate::table::HilbertTable;

/// SplitMix64: tiny, seedable, and stable across releases.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw from `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// A random partition componentwise below `cap`, drawn entry by entry.
pub fn random_partition_below(cap: &SidedPartition, rng: &mut SplitMix64) -> SidedPartition {
    let mut prev = usize::MAX;
    let mut entries = Vec::with_capacity(cap.entries().len());
    for &c in cap.entries() {
        let hi = prev.min(c);
        let e = rng.below(hi + 1);
        entries.push(e);
        prev = e;
    }
    SidedPartition::new(cap.sides(), entries).expect("draw respects the invariants")
}

/// A random bilex subset of the graded piece `at`: the complement of the
/// monomial set of a random partition in the full box.
pub fn random_bilex_set(at: BiDegree, rng: &mut SplitMix64) -> BTreeSet<BiMonomial> {
    let alpha = random_partition_below(&SidedPartition::full((at.x + 1, at.y + 1)), rng);
    let inside = monomial_set_of(&alpha).expect("sides are positive");
    monomial_basis(at)
        .into_iter()
        .filter(|m| !inside.contains(m))
        .collect()
}

/// A random witnessed table on the rectangle: cells are visited in
/// diagonal order and each partition is drawn below the meet of its
/// neighbour lifts, so the family is valid by construction. The origin is
/// pinned to weight 1 (the proper-ideal convention).
pub fn random_witnessed_table(
    bounds: BiDegree,
    rng: &mut SplitMix64,
) -> (HilbertTable, FerrersWitness) {
    let mut grid: Vec<Vec<Option<SidedPartition>>> = vec![vec![None; bounds.y + 1]; bounds.x + 1];
    let mut cells: Vec<(usize, usize)> = (0..=bounds.x)
        .flat_map(|i| (0..=bounds.y).map(move |j| (i, j)))
        .collect();
    cells.sort_by_key(|&(i, j)| (i + j, i));
    for (i, j) in cells {
        let alpha = if (i, j) == (0, 0) {
            SidedPartition::full((1, 1))
        } else {
            let row_lift = (i > 0).then(|| grid[i - 1][j].as_ref().unwrap().lift_row());
            let col_lift = (j > 0).then(|| grid[i][j - 1].as_ref().unwrap().lift_col().unwrap());
            let cap = match (row_lift, col_lift) {
                (Some(r), Some(c)) => r.meet(&c).unwrap(),
                (Some(r), None) => r,
                (None, Some(c)) => c,
                (None, None) => unreachable!(),
            };
            random_partition_below(&cap, rng)
        };
        grid[i][j] = Some(alpha);
    }
    let grid: Vec<Vec<SidedPartition>> = grid
        .into_iter()
        .map(|row| row.into_iter().map(Option::unwrap).collect())
        .collect();
    let table = HilbertTable::from_fn(bounds, |i, j| grid[i][j].weight());
    let witness = FerrersWitness::from_grid(grid).expect("sides line up");
    (table, witness)
}

/// A random monomial ideal whose slices on the rectangle are all bilex:
/// the realization of a random witnessed table.
pub fn random_bilex_ideal(bounds: BiDegree, rng: &mut SplitMix64) -> MonomialBiIdeal {
    let (table, witness) = random_witnessed_table(bounds, rng);
    realize_ideal(&table, &witness).expect("a drawn witness realizes")
}
