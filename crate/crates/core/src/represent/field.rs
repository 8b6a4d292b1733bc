use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The field a cubical matrix lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", try_from = "RawField")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawField {
    Rational,
    Prime { p: u64 },
}

impl TryFrom<RawField> for FieldSpec {
    type Error = Error;

    fn try_from(raw: RawField) -> Result<Self> {
        match raw {
            RawField::Rational => Ok(FieldSpec::Rational),
            RawField::Prime { p } => FieldSpec::prime(p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl FieldSpec {
    /// `GF(p)`; `p` must be prime and fit products in 128 bits.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Malformed(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime { p })
    }

    /// Checks that `x` is an element of the field as written: any fraction
    /// over ℚ, an integer in `[0, p)` over `GF(p)`.
    pub fn check(&self, x: &BigRational) -> Result<()> {
        match self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => {
                let ok = x.is_integer() && !x.is_negative() && x.numer() < &BigInt::from(*p);
                if ok {
                    Ok(())
                } else {
                    Err(Error::Malformed(format!(
                        "{x} is not an element of GF({p})"
                    )))
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

fn rank_rational(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].recip();
        for x in &mut rows[rank][col..] {
            *x = &*x * &inv;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mul = |a: u64, b: u64| (a as u128 * b as u128 % p as u128) as u64;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in &mut rows[rank][col..] {
            *x = mul(*x, inv);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let factor = row[col];
            if r != rank && factor != 0 {
                for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = (*x + p - mul(factor, y)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the row vectors, by exact Gaussian elimination in the field.
pub fn exact_rank(field: &FieldSpec, rows: &[Vec<BigRational>]) -> Result<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Malformed("rows have different lengths".into()));
    }
    for x in rows.iter().flatten() {
        field.check(x)?;
    }
    Ok(match field {
        FieldSpec::Rational => rank_rational(rows.to_vec()),
        FieldSpec::Prime { p } => {
            let rows = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| x.numer().to_u64().expect("checked"))
                        .collect()
                })
                .collect();
            rank_mod(rows, *p)
        }
    })
}

/// Integer entries as field elements.
pub fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Malformed(format!("bad rational entry {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub(crate) fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
