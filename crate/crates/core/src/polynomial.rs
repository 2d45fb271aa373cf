//! The domatic polynomial as a sparse map from degree to exact count.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `Σ dp(G,i) x^i` over `i ≥ 1`. Zero coefficients are never stored, so a
/// missing degree means zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DomaticPolynomial {
    coeffs: BTreeMap<usize, BigUint>,
}

impl DomaticPolynomial {
    /// Builds from `(degree, coefficient)` pairs. Degree 0 is rejected: zero is
    /// always a root. Repeated degrees are summed.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, BigUint)>,
    {
        let mut coeffs = BTreeMap::new();
        for (degree, c) in terms {
            if degree == 0 {
                return Err(Error::arg("domatic polynomial has no constant term"));
            }
            if !c.is_zero() {
                *coeffs.entry(degree).or_insert_with(BigUint::zero) += c;
            }
        }
        Ok(DomaticPolynomial { coeffs })
    }

    /// `counts[k]` is the coefficient of `x^(k+1)`.
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        let coeffs = counts
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k + 1, c))
            .collect();
        DomaticPolynomial { coeffs }
    }

    pub fn coefficient(&self, degree: usize) -> BigUint {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// Highest degree with a nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Multiplicity of the root at zero (lowest nonzero degree).
    pub fn zero_root_multiplicity(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    /// Sum of all coefficients, i.e. the value at `x = 1`.
    pub fn total(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, (&d, c)| {
            acc + BigRational::from_integer(c.clone().into()) * pow(x, d)
        })
    }

    /// Value of the `s`-th derivative at `x`.
    pub fn derivative_at(&self, s: usize, x: &BigRational) -> BigRational {
        self.coeffs.range(s..).fold(BigRational::zero(), |acc, (&d, c)| {
            let falling: BigUint = (d - s + 1..=d).map(BigUint::from).product();
            acc + BigRational::from_integer((c * falling).into()) * pow(x, d - s)
        })
    }

    /// The `r`-th derivative when it is a constant: `r!·dp(G,r)` for `r` equal
    /// to the degree, zero for any larger `r`. Smaller `r` leave a
    /// non-constant polynomial and are rejected.
    pub fn derivative_at_top(&self, r: usize) -> Result<BigUint> {
        let top = self.degree();
        if r > top {
            return Ok(BigUint::zero());
        }
        if r < top {
            return Err(Error::arg(format!(
                "derivative of order {r} is not constant for a polynomial of degree {top}"
            )));
        }
        let factorial: BigUint = (1..=r).map(BigUint::from).product();
        Ok(factorial * self.coefficient(r))
    }
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

impl fmt::Display for DomaticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&d, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}")?;
            }
            match d {
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    coefficients: BTreeMap<usize, String>,
}

impl Serialize for DomaticPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            coefficients: self.coeffs.iter().map(|(&d, c)| (d, c.to_str_radix(10))).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DomaticPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = Wire::deserialize(deserializer)?;
        let terms = wire
            .coefficients
            .into_iter()
            .map(|(d, s)| {
                BigUint::parse_bytes(s.as_bytes(), 10)
                    .map(|c| (d, c))
                    .ok_or_else(|| D::Error::custom(format!("coefficient `{s}` is not a decimal integer")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        DomaticPolynomial::from_terms(terms).map_err(D::Error::custom)
    }
}
