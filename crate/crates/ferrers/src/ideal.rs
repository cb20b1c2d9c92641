//! Monomial bigraded ideals: membership by divisibility, Hilbert values,
//! slice partitions, and minimal generators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::monomial::{monomial_basis, t_monomial, BiDegree, BiMonomial, Variable, VARIABLES};
use crate::partition::SidedPartition;
use crate::table::HilbertTable;
use crate::{Error, Result};

/// A monomial ideal given by a finite generator set; the zero ideal is the
/// empty set. Membership, slices and Hilbert values are all derived from
/// componentwise divisibility against the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialBiIdeal {
    generators: BTreeSet<BiMonomial>,
}

impl MonomialBiIdeal {
    pub fn new(generators: impl IntoIterator<Item = BiMonomial>) -> Self {
        MonomialBiIdeal {
            generators: generators.into_iter().collect(),
        }
    }

    /// The zero ideal.
    pub fn zero() -> Self {
        MonomialBiIdeal::default()
    }

    pub fn generators(&self) -> &BTreeSet<BiMonomial> {
        &self.generators
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &BiMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// The monomials of bidegree `at` inside the ideal, in basis order.
    pub fn slice(&self, at: BiDegree) -> Vec<BiMonomial> {
        monomial_basis(at)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// The monomials of bidegree `at` outside the ideal, in basis order.
    pub fn complement_slice(&self, at: BiDegree) -> Vec<BiMonomial> {
        monomial_basis(at)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// `dim R_(a,b) - dim I_(a,b)`: the number of monomials of bidegree
    /// `at` outside the ideal.
    pub fn hilbert_value(&self, at: BiDegree) -> usize {
        self.complement_slice(at).len()
    }

    /// The Hilbert values over the whole rectangle `0..=A x 0..=B`.
    pub fn hilbert_table(&self, bounds: BiDegree) -> HilbertTable {
        HilbertTable::from_fn(bounds, |i, j| self.hilbert_value(BiDegree::new(i, j)))
    }

    /// The slice partition at `at`: entry `q` is the largest `p` with
    /// `T(p,q)` outside the ideal (0 if the whole dictionary column lies
    /// inside). Defined only when the complement is exactly the monomial
    /// set of a partition, i.e. when the ideal's slice is bilex; anything
    /// else is reported as an error rather than repaired.
    pub fn alpha_at(&self, at: BiDegree) -> Result<SidedPartition> {
        let (a, b) = (at.x, at.y);
        let mut profile = Vec::with_capacity(b + 1);
        for q in 1..=b + 1 {
            let p_q = (1..=a + 1)
                .rev()
                .find(|&p| {
                    let m = t_monomial(p, q, at).expect("in range").expect("p,q >= 1");
                    !self.contains(&m)
                })
                .unwrap_or(0);
            profile.push(p_q);
        }
        if profile.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonBilexSlice {
                at,
                detail: format!("column profile {profile:?} is not weakly decreasing"),
            });
        }
        // The profile only records column maxima; the complement must have
        // no holes below them.
        for q in 1..=b + 1 {
            for p in 1..=profile[q - 1] {
                let m = t_monomial(p, q, at).expect("in range").expect("p,q >= 1");
                if self.contains(&m) {
                    return Err(Error::NonBilexSlice {
                        at,
                        detail: format!("{m} lies in the ideal below the column maximum"),
                    });
                }
            }
        }
        SidedPartition::new((a + 1, b + 1), profile)
    }

    /// Parses an ideal file: one monomial per line, `#` comments allowed.
    pub fn parse_text(s: &str) -> Result<Self> {
        let mut gens = BTreeSet::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let m: BiMonomial = line.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: idx + 1, msg },
                other => other,
            })?;
            gens.insert(m);
        }
        Ok(MonomialBiIdeal { generators: gens })
    }
}

impl fmt::Display for MonomialBiIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromIterator<BiMonomial> for MonomialBiIdeal {
    fn from_iter<I: IntoIterator<Item = BiMonomial>>(iter: I) -> Self {
        MonomialBiIdeal::new(iter)
    }
}

/// Reduces a bidegree-wise spanning description to minimal monomial
/// generators: the monomials of the union not divisible by any other
/// monomial of the union.
///
/// The slices must be closed under multiplication by the four variables
/// within the rectangle; a violation is reported with the offending
/// monomial and variable. Missing cells count as empty slices.
pub fn minimal_generators(
    slices: &BTreeMap<BiDegree, BTreeSet<BiMonomial>>,
    bounds: BiDegree,
) -> Result<BTreeSet<BiMonomial>> {
    for (&at, set) in slices {
        for m in set {
            if m.bidegree() != at {
                return Err(Error::MixedBidegree {
                    monomial: *m,
                    got: m.bidegree(),
                    expected: at,
                });
            }
            for v in VARIABLES {
                let target = match v {
                    Variable::X1 | Variable::X2 => BiDegree::new(at.x + 1, at.y),
                    Variable::Y1 | Variable::Y2 => BiDegree::new(at.x, at.y + 1),
                };
                if !target.leq(&bounds) {
                    continue;
                }
                let product = m.mul_var(v);
                if !slices.get(&target).is_some_and(|s| s.contains(&product)) {
                    return Err(Error::ClosureViolation {
                        monomial: *m,
                        variable: v,
                        at: target,
                    });
                }
            }
        }
    }
    let union: Vec<BiMonomial> = slices.values().flatten().copied().collect();
    let minimal = union
        .iter()
        .filter(|m| !union.iter().any(|n| n != *m && n.divides(m)))
        .copied()
        .collect();
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> BiMonomial {
        s.parse().unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialBiIdeal {
        gens.iter().map(|s| mono(s)).collect()
    }

    #[test]
    fn membership_by_divisibility() {
        let i = ideal(&["x1 y1", "x1 y2"]);
        assert!(i.contains(&mono("x1 x2 y1 y2")));
        assert!(!i.contains(&mono("x2^2 y1")));
        assert!(!MonomialBiIdeal::zero().contains(&mono("x1")));
        let principal = ideal(&["x1 y1"]);
        assert!(principal.contains(&mono("x1 y1")));
    }

    #[test]
    fn hilbert_values_of_small_ideals() {
        let zero = MonomialBiIdeal::zero();
        assert_eq!(zero.hilbert_value(BiDegree::new(2, 3)), 12);
        let i = ideal(&["x1 y1", "x1 y2"]);
        assert_eq!(i.hilbert_value(BiDegree::new(1, 1)), 2);
        // value + slice size fills the graded piece
        let at = BiDegree::new(2, 2);
        assert_eq!(i.hilbert_value(at) + i.slice(at).len(), at.dim());
    }

    #[test]
    fn zero_ideal_table_is_the_product() {
        let t = MonomialBiIdeal::zero().hilbert_table(BiDegree::new(2, 2));
        for i in 0..=2 {
            for j in 0..=2 {
                assert_eq!(t.get(i, j), (i + 1) * (j + 1));
            }
        }
    }

    #[test]
    fn alpha_of_bilex_ideal() {
        // generated in a single bidegree (2,3) by a bilex set
        let i = ideal(&["x1 x2 y1^2 y2", "x1 x2 y1^3", "x1^2 y1^2 y2", "x1^2 y1^3"]);
        assert_eq!(i.hilbert_value(BiDegree::new(2, 3)), 8);
        let alpha = i.alpha_at(BiDegree::new(2, 3)).unwrap();
        assert_eq!(
            alpha,
            SidedPartition::new((3, 4), vec![3, 3, 1, 1]).unwrap()
        );
        assert_eq!(alpha.weight(), i.hilbert_value(BiDegree::new(2, 3)));
    }

    #[test]
    fn alpha_of_zero_ideal_is_the_full_box() {
        let at = BiDegree::new(3, 2);
        let alpha = MonomialBiIdeal::zero().alpha_at(at).unwrap();
        assert_eq!(alpha, SidedPartition::full((4, 3)));
    }

    #[test]
    fn alpha_rejects_non_bilex_slices() {
        // (y2) at (1,1): complement {x1 y1, x2 y1} has a decreasing-profile
        // complement in the wrong direction
        let i = ideal(&["y2"]);
        let err = i.alpha_at(BiDegree::new(1, 1)).unwrap_err();
        assert!(matches!(err, Error::NonBilexSlice { .. }));
        // (x2 y2) at (1,1): profile is decreasing but the complement has a
        // hole below a column maximum
        let i = ideal(&["x2 y2"]);
        let err = i.alpha_at(BiDegree::new(1, 1)).unwrap_err();
        assert!(matches!(err, Error::NonBilexSlice { .. }));
    }

    #[test]
    fn minimal_generators_filters_multiples() {
        // the ideal (x1 y1) spanned degree-wise on (2,2)
        let i = ideal(&["x1 y1"]);
        let bounds = BiDegree::new(2, 2);
        let mut slices = BTreeMap::new();
        for a in 0..=2 {
            for b in 0..=2 {
                let at = BiDegree::new(a, b);
                slices.insert(at, i.slice(at).into_iter().collect());
            }
        }
        let gens = minimal_generators(&slices, bounds).unwrap();
        assert_eq!(gens, [mono("x1 y1")].into_iter().collect());
    }

    #[test]
    fn minimal_generators_reports_closure_violations() {
        let mut slices: BTreeMap<BiDegree, BTreeSet<BiMonomial>> = BTreeMap::new();
        slices.insert(BiDegree::new(1, 1), [mono("x1 y1")].into_iter().collect());
        // all other cells empty: x1 * x1y1 is missing at (2,1)
        let err = minimal_generators(&slices, BiDegree::new(2, 2)).unwrap_err();
        assert!(matches!(err, Error::ClosureViolation { .. }));
    }

    #[test]
    fn parse_ideal_file() {
        let text = "# generators\nx1 y1\nx1 y2\n\n";
        let i = MonomialBiIdeal::parse_text(text).unwrap();
        assert_eq!(i.generators().len(), 2);
        let err = MonomialBiIdeal::parse_text("x1\nz9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
