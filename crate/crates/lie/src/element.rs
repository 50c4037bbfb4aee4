//! Finitely supported linear combinations of generators.

use corner_exact::GaussianRational;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::{AlgebraKind, GeneratorLabel, LieError};

/// An element of one of the corner algebras: finitely many generators
/// with nonzero Gaussian-rational coefficients, all in one algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    algebra: AlgebraKind,
    coeffs: BTreeMap<GeneratorLabel, GaussianRational>,
}

impl AlgebraElement {
    pub fn zero(algebra: AlgebraKind) -> Self {
        AlgebraElement {
            algebra,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn generator(label: GeneratorLabel) -> Self {
        Self::term(label, GaussianRational::one())
    }

    pub fn term(label: GeneratorLabel, coeff: GaussianRational) -> Self {
        let mut e = Self::zero(label.algebra);
        e.add_term(label, &coeff);
        e
    }

    pub fn from_terms(
        algebra: AlgebraKind,
        terms: impl IntoIterator<Item = (GeneratorLabel, GaussianRational)>,
    ) -> Result<Self, LieError> {
        let mut e = Self::zero(algebra);
        for (l, c) in terms {
            if l.algebra != algebra {
                return Err(LieError::MixedAlgebras {
                    expected: algebra,
                    found: l.algebra,
                });
            }
            e.add_term(l, &c);
        }
        Ok(e)
    }

    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorLabel, &GaussianRational)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, label: &GeneratorLabel) -> GaussianRational {
        self.coeffs
            .get(label)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Adds `coeff · label`, dropping the entry if it cancels.
    /// Panics on algebra mismatch: callers validate at the API boundary.
    pub fn add_term(&mut self, label: GeneratorLabel, coeff: &GaussianRational) {
        assert_eq!(
            label.algebra, self.algebra,
            "label from {:?} added to element of {:?}",
            label.algebra, self.algebra
        );
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(label)
            .or_insert_with(GaussianRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, scale: &GaussianRational) {
        assert_eq!(other.algebra, self.algebra);
        for (l, c) in &other.coeffs {
            self.add_term(*l, &(c * scale));
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &GaussianRational::one());
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &GaussianRational::from_int(-1));
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&GaussianRational::from_int(-1))
    }

    pub fn scale(&self, c: &GaussianRational) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero(self.algebra);
        }
        AlgebraElement {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|(l, k)| (*l, k * c)).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(l, c)| format!("({c})·{l}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a>(&'a GeneratorLabel, &'a GaussianRational);
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (l, c) in &self.coeffs {
            seq.serialize_element(&Term(l, c))?;
        }
        seq.end()
    }
}
