//! Violation reports shared by every axiom validator.

use std::fmt;

use crate::lattice::Point;

/// Label of the axiom a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    R1,
    R2,
    /// Off-axis unit step `rank(x̄+ē_i) − rank(x̄) ≤ 1`; a consequence of R1 and R3.
    Step,
    R3,
    F1,
    F2,
    F3,
    FStar,
    C1,
    C2,
    C3,
    CStar,
    I1,
    I2,
    IStar,
    Matroid,
    Polymatroid,
    CC1,
    CC2,
    Quotient,
    ConstituentRank,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::R1 => "R1",
            Axiom::R2 => "R2",
            Axiom::Step => "unit step",
            Axiom::R3 => "R3",
            Axiom::F1 => "F1",
            Axiom::F2 => "F2",
            Axiom::F3 => "F3",
            Axiom::FStar => "F*",
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::CStar => "C*",
            Axiom::I1 => "I1",
            Axiom::I2 => "I2",
            Axiom::IStar => "I*",
            Axiom::Matroid => "matroid",
            Axiom::Polymatroid => "polymatroid",
            Axiom::CC1 => "CC1",
            Axiom::CC2 => "CC2",
            Axiom::Quotient => "quotient",
            Axiom::ConstituentRank => "constituent rank",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Evidence attached to a violation. Directions are 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Point(Point),
    /// An ordered pair; for R2 the first is below the second.
    Pair(Point, Point),
    /// A point and a direction.
    Step(Point, usize),
    /// A point and two directions.
    Diamond(Point, usize, usize),
    /// Two subsets of a matroid ground set, as bitmasks.
    Subsets(u64, u64),
    /// Index of a constituent or a matroid-level failure.
    Index(usize),
    Text(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point(p) => write!(f, "{p}"),
            Witness::Pair(a, b) => write!(f, "{a}, {b}"),
            Witness::Step(p, i) => write!(f, "{p} dir {i}"),
            Witness::Diamond(p, i, j) => write!(f, "{p} dirs {i},{j}"),
            Witness::Subsets(a, b) => write!(f, "A={a:#b}, B={b:#b}"),
            Witness::Index(k) => write!(f, "#{k}"),
            Witness::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Witness,
}

impl Violation {
    pub fn new(axiom: Axiom, witness: Witness) -> Self {
        Violation { axiom, witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at {}", self.axiom, self.witness)
    }
}

/// Whether a validator stops at the first violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scan {
    #[default]
    First,
    All,
}

/// Outcome of a validator. Empty means every axiom holds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok() -> Self {
        Report::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    /// True when a `Scan::First` validator should stop.
    pub(crate) fn done(&self, scan: Scan) -> bool {
        scan == Scan::First && !self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<(), crate::Error> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::Axioms(self))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
