//! Bigraded monomials in `k[x1,x2,y1,y2]` and bilex sets.
//!
//! A monomial `x1^i1 x2^i2 y1^j1 y2^j2` has bidegree `(i1+i2, j1+j2)`; the
//! graded piece of bidegree `(a,b)` has dimension `(a+1)(b+1)`. Within a
//! bidegree the monomials are indexed by dictionary coordinates `(p, q)`
//! with `p = i1 + 1` and `q = j1 + 1`, under which a *bilex* set (closed
//! under raising the x-part or the y-part in lex order) is exactly an
//! up-set of the `(a+1) x (b+1)` grid, and the monomial set of a partition
//! is the complementary down-set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::partition::SidedPartition;
use crate::{Error, Result};

/// A bidegree `(a, b)`: `a` is the total x-degree, `b` the total y-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiDegree {
    pub x: usize,
    pub y: usize,
}

impl BiDegree {
    pub fn new(x: usize, y: usize) -> Self {
        BiDegree { x, y }
    }

    /// Componentwise partial order.
    pub fn leq(&self, other: &BiDegree) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// Dimension of the graded piece: `(a+1)(b+1)`.
    pub fn dim(&self) -> usize {
        (self.x + 1) * (self.y + 1)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// One of the four ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    X1,
    X2,
    Y1,
    Y2,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variable::X1 => "x1",
            Variable::X2 => "x2",
            Variable::Y1 => "y1",
            Variable::Y2 => "y2",
        };
        f.write_str(s)
    }
}

pub const VARIABLES: [Variable; 4] = [Variable::X1, Variable::X2, Variable::Y1, Variable::Y2];

/// An exponent quadruple for `x1^{x1} x2^{x2} y1^{y1} y2^{y2}`.
///
/// The derived `Ord` is structural (for deterministic set storage); the
/// lex order on a graded piece is a separate notion handled through
/// dictionary coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiMonomial {
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
}

impl BiMonomial {
    pub fn new(x1: usize, x2: usize, y1: usize, y2: usize) -> Self {
        BiMonomial { x1, x2, y1, y2 }
    }

    pub fn one() -> Self {
        BiMonomial::new(0, 0, 0, 0)
    }

    pub fn bidegree(&self) -> BiDegree {
        BiDegree::new(self.x1 + self.x2, self.y1 + self.y2)
    }

    /// Componentwise exponent comparison.
    pub fn divides(&self, other: &BiMonomial) -> bool {
        self.x1 <= other.x1 && self.x2 <= other.x2 && self.y1 <= other.y1 && self.y2 <= other.y2
    }

    pub fn mul_var(&self, v: Variable) -> BiMonomial {
        let mut m = *self;
        match v {
            Variable::X1 => m.x1 += 1,
            Variable::X2 => m.x2 += 1,
            Variable::Y1 => m.y1 += 1,
            Variable::Y2 => m.y2 += 1,
        }
        m
    }
}

impl fmt::Display for BiMonomial {
    /// Text form `x1^2 x2 y1^3` with zero exponents omitted and `1` for
    /// the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (Variable::X1, self.x1),
            (Variable::X2, self.x2),
            (Variable::Y1, self.y1),
            (Variable::Y2, self.y2),
        ];
        let mut wrote = false;
        for (v, e) in parts {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl FromStr for BiMonomial {
    type Err = Error;

    /// Accepts the display form (`x1^2 x2 y1^3`, `1`) and the bare
    /// exponent quadruple (`2 1 3 0`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.is_empty() {
            return Err(bad("empty monomial".into()));
        }
        // exponent quadruple form
        if toks.len() == 4 && toks.iter().all(|t| t.chars().all(|c| c.is_ascii_digit())) {
            let e: Vec<usize> = toks.iter().map(|t| t.parse().unwrap()).collect();
            return Ok(BiMonomial::new(e[0], e[1], e[2], e[3]));
        }
        if toks == ["1"] {
            return Ok(BiMonomial::one());
        }
        let mut m = BiMonomial::one();
        for tok in toks {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let exp: usize = e
                        .parse()
                        .map_err(|_| bad(format!("bad exponent in {tok:?}")))?;
                    (n, exp)
                }
                None => (tok, 1),
            };
            let slot = match name {
                "x1" => &mut m.x1,
                "x2" => &mut m.x2,
                "y1" => &mut m.y1,
                "y2" => &mut m.y2,
                _ => return Err(bad(format!("unknown variable {name:?}"))),
            };
            *slot += exp;
        }
        Ok(m)
    }
}

/// Which variable is lex-higher within each pair. The ring convention is
/// `x1 > x2` and `y1 > y2`; the reversed order matters because the
/// monomial set of a partition is bilex only with respect to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariableOrder {
    pub x1_first: bool,
    pub y1_first: bool,
}

impl VariableOrder {
    pub const STANDARD: VariableOrder = VariableOrder {
        x1_first: true,
        y1_first: true,
    };
    pub const REVERSED: VariableOrder = VariableOrder {
        x1_first: false,
        y1_first: false,
    };
}

impl Default for VariableOrder {
    fn default() -> Self {
        VariableOrder::STANDARD
    }
}

/// All monomials of bidegree `(a, b)`, in descending lex order
/// (`x1 > x2 > y1 > y2`).
pub fn monomial_basis(at: BiDegree) -> Vec<BiMonomial> {
    let mut out = Vec::with_capacity(at.dim());
    for i1 in (0..=at.x).rev() {
        for j1 in (0..=at.y).rev() {
            out.push(BiMonomial::new(i1, at.x - i1, j1, at.y - j1));
        }
    }
    out
}

/// The dictionary monomial `T(p,q)` of bidegree `(a,b)`:
/// `x1^{p-1} x2^{a-p+1} y1^{q-1} y2^{b-q+1}`, or `None` when `p` or `q` is
/// zero (the dictionary's zero slot, not a monomial). Coordinates beyond
/// `(a+1, b+1)` are an error.
pub fn t_monomial(p: usize, q: usize, at: BiDegree) -> Result<Option<BiMonomial>> {
    if p > at.x + 1 || q > at.y + 1 {
        return Err(Error::TCoordsOutOfRange {
            p,
            q,
            a: at.x,
            b: at.y,
        });
    }
    if p == 0 || q == 0 {
        return Ok(None);
    }
    Ok(Some(BiMonomial::new(
        p - 1,
        at.x + 1 - p,
        q - 1,
        at.y + 1 - q,
    )))
}

/// Inverse of [`t_monomial`] for a monomial of the right bidegree.
pub fn t_coordinates(m: &BiMonomial) -> (usize, usize) {
    (m.x1 + 1, m.y1 + 1)
}

/// The monomial set of a partition: all `T(p', q')` with `q'` running over
/// the entry positions and `p'` up to that entry. Its cardinality is the
/// weight of the partition, and its complement in the graded piece is a
/// bilex set.
pub fn monomial_set_of(alpha: &SidedPartition) -> Result<BTreeSet<BiMonomial>> {
    let (l1, l2) = alpha.sides();
    if l1 == 0 || l2 == 0 {
        return Err(Error::NoBidegreeForSides(l1, l2));
    }
    let at = BiDegree::new(l1 - 1, l2 - 1);
    let mut out = BTreeSet::new();
    for (idx, &p_q) in alpha.entries().iter().enumerate() {
        let q = idx + 1;
        for p in 1..=p_q {
            out.insert(t_monomial(p, q, at)?.expect("p,q >= 1"));
        }
    }
    Ok(out)
}

/// Whether a set of monomials of bidegree `at` is bilex under the given
/// variable order: for every member `uv`, replacing `u` by any lex-higher
/// x-part keeps it in the set, and likewise for the y-part.
pub fn is_bilex(mons: &BTreeSet<BiMonomial>, at: BiDegree, order: VariableOrder) -> Result<bool> {
    let (a, b) = (at.x, at.y);
    let mut member = vec![vec![false; b + 2]; a + 2];
    for m in mons {
        if m.bidegree() != at {
            return Err(Error::MixedBidegree {
                monomial: *m,
                got: m.bidegree(),
                expected: at,
            });
        }
        let (p, q) = t_coordinates(m);
        member[p][q] = true;
    }
    for p in 1..=a + 1 {
        for q in 1..=b + 1 {
            if !member[p][q] {
                continue;
            }
            // lex-higher x-parts: larger p under x1 > x2, smaller p otherwise
            let higher_p: Vec<usize> = if order.x1_first {
                (p + 1..=a + 1).collect()
            } else {
                (1..p).collect()
            };
            if higher_p.into_iter().any(|p2| !member[p2][q]) {
                return Ok(false);
            }
            let higher_q: Vec<usize> = if order.y1_first {
                (q + 1..=b + 1).collect()
            } else {
                (1..q).collect()
            };
            if higher_q.into_iter().any(|q2| !member[p][q2]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
