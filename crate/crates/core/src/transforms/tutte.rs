use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::matricube::Matricube;

/// Integer polynomial in `x` and `y`, keyed by `(deg_x, deg_y)`. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoVarPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl TwoVarPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(dx: u32, dy: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(dx, dy, c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (dx, dy, c) in terms {
            p.add_term(dx, dy, c);
        }
        p
    }

    fn add_term(&mut self, dx: u32, dy: u32, c: BigInt) {
        let e = self.terms.entry((dx, dy)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coefficient(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in display order: `deg_x` descending, then `deg_y` descending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().rev().map(|(&(dx, dy), c)| (dx, dy, c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &other.terms {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }

    /// `p(y, x)`.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(dx, dy), c)| (dy, dx, c.clone())))
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| c * x.pow(dx) * y.pow(dy))
            .sum()
    }
}

fn monomial_text(dx: u32, dy: u32) -> String {
    let var = |v: &str, d: u32| match d {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{d}")),
    };
    [var("x", dx), var("y", dy)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for TwoVarPolynomial {
    /// `x^2 - 2*x*y + y^2 + 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (dx, dy, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = monomial_text(dx, dy);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    terms: Vec<(u32, u32, Coeff)>,
}

impl Serialize for TwoVarPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms()
                .map(|(dx, dy, c)| {
                    let c = c
                        .to_i64()
                        .map_or_else(|| Coeff::Big(c.to_string()), Coeff::Small);
                    (dx, dy, c)
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoVarPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::new();
        for (dx, dy, c) in raw.terms {
            let c = match c {
                Coeff::Small(v) => BigInt::from(v),
                Coeff::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            terms.push((dx, dy, c));
        }
        Ok(Self::from_terms(terms))
    }
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k as usize] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `(x−1)^a (y−1)^b`, expanded.
fn shifted_monomial(a: u32, b: u32) -> TwoVarPolynomial {
    let ra = binomial_row(a);
    let rb = binomial_row(b);
    let mut terms = Vec::new();
    for i in 0..=a {
        for j in 0..=b {
            let sign = if (a - i + b - j).is_multiple_of(2) {
                1
            } else {
                -1
            };
            terms.push((i, j, &ra[i as usize] * &rb[j as usize] * sign));
        }
    }
    TwoVarPolynomial::from_terms(terms)
}

/// `T_M(x, y) = Σ_x̄ (x−1)^{r − rk(x̄)} (y−1)^{|x̄| − rk(x̄)}`.
pub fn tutte(m: &Matricube) -> TwoVarPolynomial {
    let cube = m.cube();
    let r = m.rank_of();
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for k in 0..cube.len() {
        let rk = m.rank_at(k);
        let a = (r - rk) as u32;
        let b = (cube.l1_of(k) as i64 - rk) as u32;
        *counts.entry((a, b)).or_default() += 1;
    }
    let mut out = TwoVarPolynomial::zero();
    for ((a, b), n) in counts {
        for (dx, dy, c) in shifted_monomial(a, b).terms() {
            out.add_term(dx, dy, c * BigInt::from(n));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Width;
    use crate::matricube::RankTable;
    use crate::transforms::{direct_sum, dual};
    use crate::uniform;

    #[test]
    fn free_and_zero_squares() {
        let u = uniform(Width::new([1, 1]), 2).unwrap();
        let t = tutte(&u);
        assert_eq!(t, TwoVarPolynomial::monomial(2, 0, 1));
        assert_eq!(t.to_string(), "x^2");
        assert_eq!(tutte(&dual(&u)).to_string(), "y^2");
    }

    #[test]
    fn text_form() {
        let p = TwoVarPolynomial::from_terms([
            (2, 0, BigInt::from(1)),
            (1, 1, BigInt::from(-2)),
            (0, 2, BigInt::from(1)),
            (0, 0, BigInt::from(1)),
        ]);
        assert_eq!(p.to_string(), "x^2 - 2*x*y + y^2 + 1");
        assert_eq!(TwoVarPolynomial::monomial(1, 3, -1).to_string(), "-x*y^3");
        assert_eq!(TwoVarPolynomial::zero().to_string(), "0");
        assert_eq!(TwoVarPolynomial::monomial(0, 0, -4).to_string(), "-4");
    }

    #[test]
    fn json_form_round_trips() {
        let p = TwoVarPolynomial::from_terms([
            (0, 1, BigInt::from(3)),
            (1, 0, BigInt::from(-1)),
            (5, 5, BigInt::from(10).pow(30)),
        ]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[[5,5,"1000000000000000000000000000000"],[1,0,-1],[0,1,3]]}"#
        );
        assert_eq!(serde_json::from_str::<TwoVarPolynomial>(&s).unwrap(), p);
    }

    #[test]
    fn algebra() {
        let a = TwoVarPolynomial::from_terms([(1, 0, BigInt::from(1)), (0, 1, BigInt::from(1))]);
        let sq = a.mul(&a);
        assert_eq!(sq.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(sq.swap(), sq);
        assert_eq!(
            sq.eval(&BigInt::from(2), &BigInt::from(3)),
            BigInt::from(25)
        );
        let z = a.mul(&TwoVarPolynomial::zero());
        assert!(z.is_zero());
    }

    #[test]
    fn identities_on_first_example() {
        let m = Matricube::new(
            RankTable::from_rows(&[
                &[3, 3, 3, 4, 5],
                &[2, 2, 2, 3, 4],
                &[1, 2, 2, 3, 4],
                &[0, 1, 2, 3, 4],
            ])
            .unwrap(),
        )
        .unwrap();
        let t = tutte(&m);
        assert_eq!(tutte(&dual(&m)), t.swap());
        // T(2,2) counts the points
        assert_eq!(t.eval(&BigInt::from(2), &BigInt::from(2)), BigInt::from(20));
        let u = uniform(Width::new([2]), 1).unwrap();
        assert_eq!(tutte(&direct_sum(&m, &u)), t.mul(&tutte(&u)));
    }
}
