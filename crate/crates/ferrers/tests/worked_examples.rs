//! End-to-end checks on a handful of fully worked tables: two ideals with
//! the same two-generator shape but different tables, a merged table that
//! every local filter misjudges differently, a 6x6 table that defeats
//! maximal growths, and an admissible table with its constructive witness.

use ferrers::engine::{
    admissible_to_witness, diagonal_osequence_ok, growth_bound_ok, is_admissible, is_ferrers,
    quick_filters, realize_ideal, FailureCertificate, FerrersDecision, FilterViolation,
};
use ferrers::macaulay::OSequenceViolation;
use ferrers::monomial::{BiDegree, BiMonomial};
use ferrers::partition::SidedPartition;
use ferrers::table::HilbertTable;
use ferrers::MonomialBiIdeal;

fn table(rows: &[&[usize]]) -> HilbertTable {
    HilbertTable::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn mono(s: &str) -> BiMonomial {
    s.parse().unwrap()
}

/// All monomials of total degree 4, i.e. the generators of the fourth
/// power of the irrelevant ideal.
fn irrelevant_power_4() -> Vec<BiMonomial> {
    let mut out = Vec::new();
    for x1 in 0..=4 {
        for x2 in 0..=4 - x1 {
            for y1 in 0..=4 - x1 - x2 {
                out.push(BiMonomial::new(x1, x2, y1, 4 - x1 - x2 - y1));
            }
        }
    }
    assert_eq!(out.len(), 35);
    out
}

fn truncated_ideal(extra: &[&str]) -> MonomialBiIdeal {
    let mut gens = irrelevant_power_4();
    gens.extend(extra.iter().map(|s| mono(s)));
    MonomialBiIdeal::new(gens)
}

#[test]
fn two_truncated_ideals_reproduce_their_tables() {
    let bounds = BiDegree::new(4, 4);

    let first = truncated_ideal(&["x1 y1", "x1 y2"]);
    let expected_first = table(&[
        &[1, 2, 3, 4, 0],
        &[2, 2, 3, 0, 0],
        &[3, 2, 0, 0, 0],
        &[4, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0],
    ]);
    assert_eq!(first.hilbert_table(bounds), expected_first);

    let second = truncated_ideal(&["x1 y1", "x2 y1"]);
    let expected_second = table(&[
        &[1, 2, 3, 4, 0],
        &[2, 2, 2, 0, 0],
        &[3, 3, 0, 0, 0],
        &[4, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0],
    ]);
    assert_eq!(second.hilbert_table(bounds), expected_second);

    // both tables are realizable, and realization reproduces them exactly
    for t in [&expected_first, &expected_second] {
        match is_ferrers(t) {
            FerrersDecision::Yes(w) => {
                let realized = realize_ideal(t, &w).unwrap();
                assert_eq!(realized.hilbert_table(bounds), *t);
            }
            FerrersDecision::No(c) => panic!("expected realizable, got {}", c.reason()),
        }
    }
}

/// The cellwise merge of the two tables above: each entry is achievable,
/// the floor growth bound never fires, yet the diagonal sums already fail
/// the binomial bound and the size filter refuses the corner growth.
fn merged_table() -> HilbertTable {
    table(&[
        &[1, 2, 3, 4, 0],
        &[2, 2, 3, 0, 0],
        &[3, 3, 0, 0, 0],
        &[4, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0],
    ])
}

#[test]
fn merged_table_passes_the_floor_bound_only() {
    let t = merged_table();
    assert!(growth_bound_ok(&t).is_ok());
    assert_eq!(
        quick_filters(&t),
        Err(FilterViolation::GrowthPairUnreachable {
            cell: (1, 1),
            value: 2,
            row_growth: Some(1),
            col_growth: Some(1),
        })
    );
    assert_eq!(
        diagonal_osequence_ok(&t),
        Err(OSequenceViolation::Growth {
            t: 3,
            value: 14,
            bound: 13
        })
    );
    assert!(matches!(
        is_ferrers(&t),
        FerrersDecision::No(FailureCertificate::Filter(_))
    ));
    assert!(is_admissible(&t).is_err());
}

fn maximal_growth_trap() -> HilbertTable {
    table(&[
        &[1, 2, 3, 4, 5, 0],
        &[2, 4, 6, 8, 10, 0],
        &[3, 6, 9, 8, 9, 0],
        &[4, 8, 8, 10, 0, 0],
        &[5, 10, 9, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0],
    ])
}

#[test]
fn trap_table_passes_every_filter_but_is_rejected() {
    let t = maximal_growth_trap();
    assert!(quick_filters(&t).is_ok());
    assert!(growth_bound_ok(&t).is_ok());
    assert!(diagonal_osequence_ok(&t).is_ok());
    match is_ferrers(&t) {
        FerrersDecision::No(FailureCertificate::Exhausted { cell, .. }) => {
            assert_eq!(cell, (3, 3));
        }
        other => panic!("expected search exhaustion, got {other:?}"),
    }
}

fn admissible_table() -> HilbertTable {
    table(&[
        &[1, 2, 3, 4, 5, 5],
        &[2, 4, 6, 8, 10, 10],
        &[3, 6, 8, 9, 10, 10],
        &[4, 8, 10, 10, 10, 10],
        &[5, 10, 10, 10, 10, 10],
        &[5, 10, 10, 10, 10, 10],
    ])
}

fn expected_witness_grid() -> Vec<Vec<SidedPartition>> {
    let rows: Vec<Vec<Vec<usize>>> = vec![
        vec![
            vec![1],
            vec![1, 1],
            vec![1, 1, 1],
            vec![1, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1, 0],
        ],
        vec![
            vec![2],
            vec![2, 2],
            vec![2, 2, 2],
            vec![2, 2, 2, 2],
            vec![2, 2, 2, 2, 2],
            vec![2, 2, 2, 2, 2, 0],
        ],
        vec![
            vec![3],
            vec![3, 3],
            vec![3, 3, 2],
            vec![3, 3, 2, 1],
            vec![3, 3, 2, 1, 1],
            vec![3, 3, 2, 1, 1, 0],
        ],
        vec![
            vec![4],
            vec![4, 4],
            vec![4, 4, 2],
            vec![4, 4, 2, 0],
            vec![4, 4, 2, 0, 0],
            vec![4, 4, 2, 0, 0, 0],
        ],
        vec![
            vec![5],
            vec![5, 5],
            vec![5, 5, 0],
            vec![5, 5, 0, 0],
            vec![5, 5, 0, 0, 0],
            vec![5, 5, 0, 0, 0, 0],
        ],
        vec![
            vec![5],
            vec![5, 5],
            vec![5, 5, 0],
            vec![5, 5, 0, 0],
            vec![5, 5, 0, 0, 0],
            vec![5, 5, 0, 0, 0, 0],
        ],
    ];
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, entries)| SidedPartition::new((i + 1, j + 1), entries).unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn admissible_table_delta_spot_values() {
    let d = admissible_table().delta();
    assert_eq!(d.get(0, 0), 1);
    assert_eq!(d.get(1, 1), 1);
    // 8 + 4 - 6 - 6
    assert_eq!(d.get(2, 2), 0);
    assert_eq!(d.get(2, 3), -1);
    assert_eq!(d.get(4, 2), -2);
}

#[test]
#[allow(clippy::needless_range_loop)]
fn admissible_chain_end_to_end() {
    let t = admissible_table();
    assert!(is_admissible(&t).is_ok());

    let constructed = admissible_to_witness(&t).unwrap();
    let expected = expected_witness_grid();
    for i in 0..=5 {
        for j in 0..=5 {
            assert_eq!(
                *constructed.alpha(i, j),
                expected[i][j],
                "witness mismatch at ({i},{j})"
            );
        }
    }
    constructed.validate_for(&t).unwrap();

    // the deterministic search lands on the same witness
    match is_ferrers(&t) {
        FerrersDecision::Yes(found) => {
            for i in 0..=5 {
                for j in 0..=5 {
                    assert_eq!(found.alpha(i, j), constructed.alpha(i, j));
                }
            }
        }
        FerrersDecision::No(c) => panic!("expected realizable, got {}", c.reason()),
    }

    // realization reproduces the table on the whole rectangle
    let ideal = realize_ideal(&t, &constructed).unwrap();
    assert_eq!(ideal.hilbert_table(t.bounds()), t);

    // every slice of the realized ideal is bilex, so its slice partitions
    // recover the witness
    for i in 0..=5 {
        for j in 0..=5 {
            let at = BiDegree::new(i, j);
            assert_eq!(ideal.alpha_at(at).unwrap(), *constructed.alpha(i, j));
        }
    }
}

#[test]
fn another_ideal_with_the_same_table() {
    // a hand-picked seven-generator ideal with the same Hilbert table as
    // the admissible example, but different slices from row 4 on
    let gens = [
        "x1^2 y1^2",
        "x1 x2 y1^3",
        "x2^3 y1^3",
        "x1^4 y2^2",
        "x1^4 y1 y2",
        "x1^5",
        "y1^5",
    ];
    let ideal: MonomialBiIdeal = gens.iter().map(|s| mono(s)).collect();
    let t = admissible_table();
    assert_eq!(ideal.hilbert_table(t.bounds()), t);

    // its own slice partitions form a valid witness distinct from the
    // constructed one
    assert_eq!(
        ideal.alpha_at(BiDegree::new(4, 2)).unwrap(),
        SidedPartition::new((5, 3), vec![4, 4, 2]).unwrap()
    );
    assert_eq!(
        ideal.alpha_at(BiDegree::new(2, 4)).unwrap(),
        SidedPartition::new((3, 5), vec![3, 3, 2, 1, 1]).unwrap()
    );
}

#[test]
fn osequence_passes_on_the_trap_table() {
    // diagonal sums 1, 4, 10, 20, 35, 36 stay within the binomial bounds
    let t = maximal_growth_trap();
    assert_eq!(
        ferrers::macaulay::diagonal_sums(&t),
        vec![1, 4, 10, 20, 35, 36]
    );
    assert!(diagonal_osequence_ok(&t).is_ok());
}

#[test]
fn merged_table_corner_fails_brute_force_too() {
    use ferrers::oracle::{brute_force_realizable, OracleLimits};
    let corner = table(&[&[1, 2, 3, 4], &[2, 2, 3, 0], &[3, 3, 0, 0], &[4, 0, 0, 0]]);
    assert!(!brute_force_realizable(&corner, &OracleLimits::default()).unwrap());
    assert!(!is_ferrers(&corner).is_yes());
}

#[test]
fn minimal_generators_of_truncated_spans() {
    use ferrers::ideal::minimal_generators;
    use std::collections::{BTreeMap, BTreeSet};

    let ideal = truncated_ideal(&["x1 y1", "x1 y2"]);
    let bounds = BiDegree::new(3, 3);
    let mut slices: BTreeMap<BiDegree, BTreeSet<BiMonomial>> = BTreeMap::new();
    for i in 0..=3 {
        for j in 0..=3 {
            let at = BiDegree::new(i, j);
            slices.insert(at, ideal.slice(at).into_iter().collect());
        }
    }
    let minimal = minimal_generators(&slices, bounds).unwrap();

    // cross-check against a plain divisibility filter over the union
    let union: Vec<BiMonomial> = slices.values().flatten().copied().collect();
    let filtered: BTreeSet<BiMonomial> = union
        .iter()
        .filter(|m| !union.iter().any(|n| n != *m && n.divides(m)))
        .copied()
        .collect();
    assert_eq!(minimal, filtered);

    // the two honest generators survive; everything else is truncation
    // noise of total degree 4 sitting on the rectangle boundary
    assert!(minimal.contains(&mono("x1 y1")));
    assert!(minimal.contains(&mono("x1 y2")));
    for m in &minimal {
        if *m != mono("x1 y1") && *m != mono("x1 y2") {
            let d = m.bidegree();
            assert_eq!(d.x + d.y, 4, "unexpected generator {m}");
        }
    }
}
