//! Exact rational scalars and vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

/// Exact rational vector.
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qvec(values: &[i64]) -> QVec {
    values.iter().map(|&v| q(v)).collect()
}

pub fn zeros(len: usize) -> QVec {
    vec![Q::zero(); len]
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Q], s: &Q) -> QVec {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Q]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Centroid of a nonempty list of points.
pub fn centroid(points: &[&QVec]) -> QVec {
    let dim = points[0].len();
    let mut acc = zeros(dim);
    for p in points {
        for (a, x) in acc.iter_mut().zip(p.iter()) {
            *a += x;
        }
    }
    let n = q(points.len() as i64);
    acc.iter().map(|a| a / &n).collect()
}

/// Scales a nonzero vector to the primitive integer vector on the same ray.
/// Returns the vector together with the positive factor applied.
pub fn primitive(a: &[Q]) -> (QVec, Q) {
    let lcm = a
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = a.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return (a.to_vec(), Q::one());
    }
    let factor = Q::new(lcm, gcd.clone());
    let out = ints.into_iter().map(|x| Q::from_integer(x / &gcd)).collect();
    (out, factor)
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // numerator or denominator too large for a direct conversion
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn to_f64_vec(a: &[Q]) -> Vec<f64> {
    a.iter().map(to_f64).collect()
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_vec(a: &[Q]) -> String {
    let parts: Vec<String> = a.iter().map(fmt_q).collect();
    format!("({})", parts.join(", "))
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// Wire form of a rational: `{"num": int, "den": int}` in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: i64,
    pub den: i64,
}

impl JsonRational {
    pub fn from_q(x: &Q) -> Option<Self> {
        Some(Self {
            num: x.numer().to_i64()?,
            den: x.denom().to_i64()?,
        })
    }

    pub fn to_q(&self) -> Option<Q> {
        if self.den <= 0 {
            return None;
        }
        let value = qf(self.num, self.den);
        // only the canonical (reduced) form is accepted
        (value.numer().to_i64() == Some(self.num)).then_some(value)
    }
}

/// Serde adapter for a single rational field.
pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        JsonRational::from_q(x)
            .ok_or_else(|| serde::ser::Error::custom("rational out of i64 range"))?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        JsonRational::deserialize(d)?
            .to_q()
            .ok_or_else(|| D::Error::custom("rational not in canonical form"))
    }
}

/// Serde adapter for a rational vector.
pub mod serde_qvec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let wire: Option<Vec<JsonRational>> = v.iter().map(JsonRational::from_q).collect();
        wire.ok_or_else(|| serde::ser::Error::custom("rational out of i64 range"))?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<QVec, D::Error> {
        let wire = Vec::<JsonRational>::deserialize(d)?;
        wire.iter()
            .map(|r| r.to_q().ok_or_else(|| D::Error::custom("rational not in canonical form")))
            .collect()
    }
}

/// Serde adapter for a rational matrix.
pub mod serde_qmat {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[QVec], s: S) -> Result<S::Ok, S::Error> {
        let wire: Option<Vec<Vec<JsonRational>>> = m
            .iter()
            .map(|row| row.iter().map(JsonRational::from_q).collect())
            .collect();
        wire.ok_or_else(|| serde::ser::Error::custom("rational out of i64 range"))?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<QVec>, D::Error> {
        let wire = Vec::<Vec<JsonRational>>::deserialize(d)?;
        wire.iter()
            .map(|row| {
                row.iter()
                    .map(|r| r.to_q().ok_or_else(|| D::Error::custom("rational not in canonical form")))
                    .collect()
            })
            .collect()
    }
}

/// Serde adapter for an optional rational.
pub mod serde_opt_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => super::serde_q::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        let wire = Option::<JsonRational>::deserialize(d)?;
        wire.map(|r| r.to_q().ok_or_else(|| D::Error::custom("rational not in canonical form")))
            .transpose()
    }
}
