//! Representable matricubes: `rk(x̄) = dim(G^1_{x_1} + … + G^d_{x_d})` where
//! `G^i_j` is spanned by the first `j` vectors listed for direction `i`.

mod field;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Width};
use crate::matricube::{Matricube, RankTable};
use crate::par::{self, Exec};

pub use field::{exact_rank, int_rows, FieldSpec};
use field::{format_rational, parse_rational};

/// For each direction, the ordered vectors whose prefixes span the flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicalMatrix {
    field: FieldSpec,
    m: usize,
    vectors: Vec<Vec<Vec<BigRational>>>,
}

impl CubicalMatrix {
    /// Every vector must have length `m` and entries in the field.
    pub fn new(field: FieldSpec, m: usize, vectors: Vec<Vec<Vec<BigRational>>>) -> Result<Self> {
        for v in vectors.iter().flatten() {
            if v.len() != m {
                return Err(Error::Malformed(format!(
                    "vector of length {} in ambient dimension {m}",
                    v.len()
                )));
            }
            for x in v {
                field.check(x)?;
            }
        }
        Ok(CubicalMatrix { field, m, vectors })
    }

    /// Integer entries, for fixtures.
    pub fn from_ints(field: FieldSpec, m: usize, vectors: &[&[&[i64]]]) -> Result<Self> {
        let vectors = vectors.iter().map(|dir| int_rows(dir)).collect();
        CubicalMatrix::new(field, m, vectors)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Ambient dimension.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vectors(&self) -> &[Vec<Vec<BigRational>>] {
        &self.vectors
    }

    /// `(r_1, …, r_d)`: the number of vectors in each direction.
    pub fn width(&self) -> Width {
        Width::new(self.vectors.iter().map(Vec::len).collect::<Vec<_>>())
    }

    /// Appends `k` zero vectors to direction `i`.
    pub fn pad_with_zero_vectors(&self, i: usize, k: usize) -> Result<Self> {
        let d = self.vectors.len();
        if i >= d {
            return Err(Error::BadDirection { dir: i, dim: d });
        }
        let mut out = self.clone();
        out.vectors[i].extend(std::iter::repeat_n(vec![BigRational::zero(); self.m], k));
        Ok(out)
    }
}

/// Rank table of the flag arrangement, by exact elimination at every point.
pub fn matricube_from_flags(c: &CubicalMatrix) -> Result<Matricube> {
    matricube_from_flags_with(c, Exec::default())
}

pub fn matricube_from_flags_with(c: &CubicalMatrix, exec: Exec) -> Result<Matricube> {
    let cube = Hypercuboid::new(c.width())?;
    let ranks = par::map(exec, 0..cube.len(), |k| {
        let rows: Vec<Vec<BigRational>> = (0..cube.dim())
            .flat_map(|i| c.vectors[i][..cube.coord(k, i)].iter().cloned())
            .collect();
        exact_rank(&c.field, &rows).map(|r| r as i64)
    });
    let values = ranks.into_iter().collect::<Result<Vec<_>>>()?;
    let table = RankTable::new(c.width(), values)?;
    Ok(Matricube::trusted(table))
}

/// Flags with uniformly random entries of `GF(p)` in ambient dimension `r`:
/// with high probability they are in general position.
pub fn general_position_flags(width: &Width, r: usize, p: u64, seed: u64) -> Result<CubicalMatrix> {
    let field = FieldSpec::prime(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors = width
        .entries()
        .iter()
        .map(|&n| {
            (0..n)
                .map(|_| {
                    (0..r)
                        .map(|_| BigRational::from_integer(rng.gen_range(0..p).into()))
                        .collect()
                })
                .collect()
        })
        .collect();
    CubicalMatrix::new(field, r, vectors)
}

/// Sparse random flags for property tests: about half the entries are zero,
/// so degenerate configurations are common.
pub fn random_flags(field: FieldSpec, width: &Width, m: usize, seed: u64) -> CubicalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entry = |rng: &mut ChaCha8Rng| -> BigRational {
        if rng.gen_bool(0.5) {
            return BigRational::zero();
        }
        match field {
            FieldSpec::Rational => {
                let n: i64 = rng.gen_range(-3..=3);
                let d: i64 = rng.gen_range(1..=3);
                BigRational::new(BigInt::from(n), BigInt::from(d))
            }
            FieldSpec::Prime { p } => BigRational::from_integer(rng.gen_range(0..p).into()),
        }
    };
    let vectors = width
        .entries()
        .iter()
        .map(|&n| {
            (0..n)
                .map(|_| (0..m).map(|_| entry(&mut rng)).collect())
                .collect()
        })
        .collect();
    CubicalMatrix::new(field, m, vectors).expect("entries drawn from the field")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CubicalJson {
    field: FieldSpec,
    m: usize,
    vectors: Vec<Vec<Vec<Value>>>,
}

fn entry_from_json(field: &FieldSpec, v: &Value) -> Result<BigRational> {
    let x = match v {
        Value::String(s) => parse_rational(s)?,
        Value::Number(n) => match n.as_i64() {
            Some(i) => BigRational::from_integer(i.into()),
            None => return Err(Error::Malformed(format!("entry {n} is not an integer"))),
        },
        other => return Err(Error::Malformed(format!("bad entry {other}"))),
    };
    if matches!(field, FieldSpec::Prime { .. }) && v.is_string() {
        return Err(Error::Malformed(format!(
            "prime-field entry {v} must be an integer"
        )));
    }
    Ok(x)
}

impl Serialize for CubicalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entry = |x: &BigRational| match self.field {
            FieldSpec::Rational => Value::String(format_rational(x)),
            FieldSpec::Prime { .. } => {
                serde_json::from_str(&x.numer().to_string()).expect("integer")
            }
        };
        CubicalJson {
            field: self.field,
            m: self.m,
            vectors: self
                .vectors
                .iter()
                .map(|dir| dir.iter().map(|v| v.iter().map(entry).collect()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CubicalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CubicalJson::deserialize(d)?;
        let conv = || -> Result<CubicalMatrix> {
            let vectors = raw
                .vectors
                .iter()
                .map(|dir| {
                    dir.iter()
                        .map(|v| v.iter().map(|x| entry_from_json(&raw.field, x)).collect())
                        .collect()
                })
                .collect::<Result<Vec<Vec<Vec<BigRational>>>>>()?;
            CubicalMatrix::new(raw.field, raw.m, vectors)
        };
        conv().map_err(serde::de::Error::custom)
    }
}
