//! Binomial-representation growth bounds for sequences.
//!
//! A sequence `(s_0, s_1, ...)` is an O-sequence when `s_0 = 1` and each
//! `s_{t+1}` stays within the bound `s_t^<t>` computed from the t-th
//! binomial representation of `s_t` (tops and bottoms each bumped by one).
//! Diagonal sums of a realizable Hilbert table must form an O-sequence,
//! which makes this a cheap necessary-condition filter.

use std::fmt;

use crate::table::HilbertTable;

/// `C(n, k)` as an exact `u128`; saturates instead of overflowing, which
/// at the scales this crate handles never actually triggers.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// The greedy t-th binomial representation of `h`:
/// `h = C(a_t, t) + C(a_{t-1}, t-1) + ... + C(a_s, s)` with
/// `a_t > a_{t-1} > ... > a_s >= s >= 1`. Requires `t >= 1`.
pub fn representation(h: u128, t: usize) -> Vec<(u128, usize)> {
    assert!(t >= 1, "binomial representation needs t >= 1");
    let mut rep = Vec::new();
    let mut remaining = h;
    let mut j = t;
    while remaining > 0 && j >= 1 {
        let mut a = j as u128;
        while binomial(a + 1, j as u128) <= remaining {
            a += 1;
        }
        rep.push((a, j));
        remaining -= binomial(a, j as u128);
        j -= 1;
    }
    debug_assert_eq!(remaining, 0);
    rep
}

/// The Macaulay bound `h^<t>`: every top and bottom of the representation
/// incremented.
pub fn bound(h: u128, t: usize) -> u128 {
    representation(h, t)
        .into_iter()
        .map(|(a, j)| binomial(a + 1, j as u128 + 1))
        .sum()
}

/// Why a sequence fails to be an O-sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OSequenceViolation {
    /// `s_0` must be 1.
    LeadingTerm { value: usize },
    /// `s_t` exceeds the bound grown from `s_{t-1}`.
    Growth { t: usize, value: usize, bound: u128 },
}

impl fmt::Display for OSequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OSequenceViolation::LeadingTerm { value } => {
                write!(f, "s_0 = {value}, an O-sequence starts with 1")
            }
            OSequenceViolation::Growth { t, value, bound } => {
                write!(
                    f,
                    "s_{t} = {value} exceeds the Macaulay bound {bound} from s_{}",
                    t - 1
                )
            }
        }
    }
}

/// Checks Macaulay's growth condition on a finite sequence. The step from
/// `s_0` to `s_1` is unconstrained (the embedding dimension is arbitrary).
pub fn osequence_check(s: &[usize]) -> std::result::Result<(), OSequenceViolation> {
    if s.is_empty() {
        return Ok(());
    }
    if s[0] != 1 {
        return Err(OSequenceViolation::LeadingTerm { value: s[0] });
    }
    for t in 1..s.len().saturating_sub(1) {
        let b = bound(s[t] as u128, t);
        if (s[t + 1] as u128) > b {
            return Err(OSequenceViolation::Growth {
                t: t + 1,
                value: s[t + 1],
                bound: b,
            });
        }
    }
    Ok(())
}

/// Sums over the full anti-diagonals of the rectangle:
/// `s_t = sum_{i+j=t} H(i,j)` for `t = 0..=min(A,B)` (larger `t` would
/// need cells outside the table).
pub fn diagonal_sums(table: &HilbertTable) -> Vec<usize> {
    let b = table.bounds();
    (0..=b.x.min(b.y))
        .map(|t| (0..=t).map(|i| table.get(i, t - i)).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn representation_is_greedy_and_exact() {
        // 8 = C(4,2) + C(2,1)
        assert_eq!(representation(8, 2), vec![(4, 2), (2, 1)]);
        // 10 = C(5,2)
        assert_eq!(representation(10, 2), vec![(5, 2)]);
        for h in 0..60u128 {
            for t in 1..5 {
                let rep = representation(h, t);
                let total: u128 = rep.iter().map(|&(a, j)| binomial(a, j as u128)).sum();
                assert_eq!(total, h);
                // strictly decreasing tops, a_j >= j
                for w in rep.windows(2) {
                    assert!(w[0].0 > w[1].0);
                }
                for &(a, j) in &rep {
                    assert!(a >= j as u128);
                }
            }
        }
    }

    #[test]
    fn bound_values() {
        // 8^<2> = C(5,3) + C(3,2) = 13
        assert_eq!(bound(8, 2), 13);
        assert_eq!(bound(10, 2), 20);
        assert_eq!(bound(20, 3), 35);
        assert_eq!(bound(0, 3), 0);
    }

    #[test]
    fn osequence_examples() {
        assert_eq!(osequence_check(&[1]), Ok(()));
        assert_eq!(osequence_check(&[1, 4, 8, 13]), Ok(()));
        assert_eq!(
            osequence_check(&[1, 4, 8, 14]),
            Err(OSequenceViolation::Growth {
                t: 3,
                value: 14,
                bound: 13
            })
        );
        assert_eq!(
            osequence_check(&[1, 4, 8, 14, 0]),
            Err(OSequenceViolation::Growth {
                t: 3,
                value: 14,
                bound: 13
            })
        );
        assert!(matches!(
            osequence_check(&[2, 1]),
            Err(OSequenceViolation::LeadingTerm { value: 2 })
        ));
        // once the sequence hits zero it must stay there
        assert!(osequence_check(&[1, 3, 0, 1]).is_err());
    }

    #[test]
    fn diagonal_sums_of_rectangle() {
        let rows = vec![
            vec![1, 2, 3, 4, 0],
            vec![2, 2, 3, 0, 0],
            vec![3, 3, 0, 0, 0],
            vec![4, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0],
        ];
        let t = HilbertTable::new(rows).unwrap();
        assert_eq!(diagonal_sums(&t), vec![1, 4, 8, 14, 0]);
    }
}
