//! Partitions of a number with prescribed sides.
//!
//! A partition of `h` of sides `(l1, l2)` is a weakly decreasing tuple
//! `(p_1, ..., p_{l2})` with `l1 >= p_1 >= ... >= p_{l2} >= 0` summing to
//! `h`, i.e. a Ferrers diagram inside an `l1 x l2` box, zeros included. The
//! *size* of a partition is the pair `(lambda_1, lambda_2)` where
//! `lambda_1` counts the entries equal to `l1` and `lambda_2` is the last
//! entry; the two lift maps grow a partition into the box one wider or one
//! longer, and the size measures exactly how much weight each lift adds.
//!
//! All operations are pure; everything is safe to share across threads.
//! Entries are machine integers: the crate targets desk-scale boxes, far
//! from any overflow.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A weakly decreasing tuple of naturals inside a declared box.
///
/// Invariants (enforced by [`SidedPartition::new`]): exactly `l2` entries,
/// each at most `l1`, weakly decreasing. The text form is
/// `(3,3,1,1)@(3,4)`: entries, then sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SidedPartition {
    sides: (usize, usize),
    entries: Vec<usize>,
}

impl SidedPartition {
    /// Validates and builds a partition. Rejects tuples of the wrong
    /// length, entries above `l1`, and sequences that are not weakly
    /// decreasing.
    pub fn new(sides: (usize, usize), entries: Vec<usize>) -> Result<Self> {
        let (l1, l2) = sides;
        if entries.len() != l2 {
            return Err(Error::WrongEntryCount {
                l1,
                l2,
                got: entries.len(),
            });
        }
        if let Some(&entry) = entries.iter().find(|&&p| p > l1) {
            return Err(Error::EntryTooLarge { entry, l1 });
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(entries));
        }
        Ok(SidedPartition { sides, entries })
    }

    /// The all-zero partition in the given box.
    pub fn zero(sides: (usize, usize)) -> Self {
        SidedPartition {
            sides,
            entries: vec![0; sides.1],
        }
    }

    /// The full box: `l2` copies of `l1`.
    pub fn full(sides: (usize, usize)) -> Self {
        SidedPartition {
            sides,
            entries: vec![sides.0; sides.1],
        }
    }

    pub fn sides(&self) -> (usize, usize) {
        self.sides
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Sum of the entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().sum()
    }

    /// The size `(lambda_1, lambda_2)`: the number of entries equal to the
    /// first side, and the last entry. Undefined when there are no entries.
    pub fn size(&self) -> Result<(usize, usize)> {
        let (l1, l2) = self.sides;
        if l2 == 0 {
            return Err(Error::EmptyPartition);
        }
        let lambda1 = self.entries.iter().take_while(|&&p| p == l1).count();
        let lambda2 = self.entries[l2 - 1];
        Ok((lambda1, lambda2))
    }

    /// Componentwise minimum. Both operands must live in the same box;
    /// minimum preserves weak decrease, so the result does too.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_sides(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(SidedPartition {
            sides: self.sides,
            entries,
        })
    }

    /// Componentwise order: `self <= other` iff every entry of `self` is
    /// at most the corresponding entry of `other` (equivalently, the meet
    /// is `self`).
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_sides(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(&a, &b)| a <= b))
    }

    /// Row lift: adds 1 to every entry equal to `l1` (the first
    /// `lambda_1` entries) and moves the partition to sides `(l1+1, l2)`.
    /// Adds exactly `lambda_1` to the weight.
    pub fn lift_row(&self) -> Self {
        let (l1, l2) = self.sides;
        let entries = self
            .entries
            .iter()
            .map(|&p| if p == l1 { p + 1 } else { p })
            .collect();
        SidedPartition {
            sides: (l1 + 1, l2),
            entries,
        }
    }

    /// Column lift: repeats the last entry, moving the partition to sides
    /// `(l1, l2+1)`. Adds exactly `lambda_2` to the weight. Rejects
    /// partitions with no entries.
    pub fn lift_col(&self) -> Result<Self> {
        let (l1, l2) = self.sides;
        if l2 == 0 {
            return Err(Error::EmptyPartition);
        }
        let mut entries = self.entries.clone();
        entries.push(entries[l2 - 1]);
        Ok(SidedPartition {
            sides: (l1, l2 + 1),
            entries,
        })
    }

    fn check_sides(&self, other: &Self) -> Result<()> {
        if self.sides != other.sides {
            return Err(Error::SideMismatch(
                self.sides.0,
                self.sides.1,
                other.sides.0,
                other.sides.1,
            ));
        }
        Ok(())
    }
}

impl fmt::Display for SidedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")@({},{})", self.sides.0, self.sides.1)
    }
}

impl FromStr for SidedPartition {
    type Err = Error;

    /// Parses the `(3,3,1,1)@(3,4)` text form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: format!("{msg}: {s:?}"),
        };
        let (entries_part, sides_part) = s
            .trim()
            .split_once('@')
            .ok_or_else(|| bad("expected entries@sides"))?;
        let entries = parse_paren_list(entries_part).ok_or_else(|| bad("malformed entry list"))?;
        let sides = parse_paren_list(sides_part).ok_or_else(|| bad("malformed sides"))?;
        if sides.len() != 2 {
            return Err(bad("sides must be a pair"));
        }
        SidedPartition::new((sides[0], sides[1]), entries)
    }
}

fn parse_paren_list(s: &str) -> Option<Vec<usize>> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?.trim();
    if inner.is_empty() {
        return Some(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| tok.trim().parse::<usize>().ok())
        .collect()
}

/// All partitions of `h` with the given sides, in descending lexicographic
/// order of the entry tuples. This is the canonical enumeration order, so
/// searches that consume it are deterministic. Empty when `h > l1 * l2`.
pub fn enumerate_partitions(h: usize, sides: (usize, usize)) -> Vec<SidedPartition> {
    enumerate_bounded(h, &SidedPartition::full(sides))
}

/// All partitions of `h` with `cap`'s sides that are componentwise at most
/// `cap`, in descending lexicographic order.
pub fn enumerate_bounded(h: usize, cap: &SidedPartition) -> Vec<SidedPartition> {
    // suffix_room[k] = maximum weight a tail starting at position k can carry
    // (ignoring the weak-decrease link to position k-1, which only lowers it).
    let caps = cap.entries();
    let mut suffix_room = vec![0usize; caps.len() + 1];
    for k in (0..caps.len()).rev() {
        suffix_room[k] = suffix_room[k + 1] + caps[k];
    }

    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(caps.len());
    fill(
        h,
        usize::MAX,
        0,
        caps,
        &suffix_room,
        cap.sides(),
        &mut prefix,
        &mut out,
    );
    return out;

    #[allow(clippy::too_many_arguments)]
    fn fill(
        remaining: usize,
        prev: usize,
        k: usize,
        caps: &[usize],
        suffix_room: &[usize],
        sides: (usize, usize),
        prefix: &mut Vec<usize>,
        out: &mut Vec<SidedPartition>,
    ) {
        if k == caps.len() {
            if remaining == 0 {
                out.push(SidedPartition {
                    sides,
                    entries: prefix.clone(),
                });
            }
            return;
        }
        let hi = prev.min(caps[k]).min(remaining);
        // Once this entry is p, the tail (positions k+1..) can carry at most
        // min(suffix_room, p * tail_len).
        for p in (0..=hi).rev() {
            let tail_len = caps.len() - k - 1;
            let tail_max = suffix_room[k + 1].min(p * tail_len);
            if remaining - p > tail_max {
                continue;
            }
            prefix.push(p);
            fill(
                remaining - p,
                p,
                k + 1,
                caps,
                suffix_room,
                sides,
                prefix,
                out,
            );
            prefix.pop();
        }
    }
}

/// The set of sizes of all partitions of `h` with the given sides.
pub fn enumerate_sizes(
    h: usize,
    sides: (usize, usize),
) -> std::collections::BTreeSet<(usize, usize)> {
    enumerate_partitions(h, sides)
        .iter()
        .filter_map(|alpha| alpha.size().ok())
        .collect()
}

/// The maximal elements of [`enumerate_sizes`] under the componentwise
/// partial order on pairs.
pub fn maximal_sizes(
    h: usize,
    sides: (usize, usize),
) -> std::collections::BTreeSet<(usize, usize)> {
    let sizes = enumerate_sizes(h, sides);
    sizes
        .iter()
        .filter(|&&(a, b)| {
            !sizes
                .iter()
                .any(|&(c, d)| (a, b) != (c, d) && a <= c && b <= d)
        })
        .copied()
        .collect()
}

/// The maximal elements of [`enumerate_bounded`] under the componentwise
/// order, in the same canonical order. Distinct partitions of equal weight
/// are never comparable, so this is the bounded enumeration itself; it
/// exists as the pruned candidate source for the witness search.
pub fn maximal_bounded(h: usize, cap: &SidedPartition) -> Vec<SidedPartition> {
    let all = enumerate_bounded(h, cap);
    all.iter()
        .filter(|alpha| {
            !all.iter()
                .any(|beta| *alpha != beta && alpha.leq(beta).unwrap_or(false))
        })
        .cloned()
        .collect()
}
