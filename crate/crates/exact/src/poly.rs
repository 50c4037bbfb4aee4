//! Sparse multivariate polynomials over indexed variable families.
//!
//! Variables come in fixed families: `j`, `k`, `p` are the raising
//! variables of the induced modules, `v` and `x` carry the vacuum
//! sectors (with `v_{0,0}` reserved to mean the constant 1 and hence
//! excluded as a label), and `wx`/`wy` are the free-field families.

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{ExactError, GaussianRational};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarFamily {
    J,
    K,
    P,
    V,
    X,
    Wx,
    Wy,
}

impl VarFamily {
    pub fn name(&self) -> &'static str {
        match self {
            VarFamily::J => "j",
            VarFamily::K => "k",
            VarFamily::P => "p",
            VarFamily::V => "v",
            VarFamily::X => "x",
            VarFamily::Wx => "wx",
            VarFamily::Wy => "wy",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "j" => VarFamily::J,
            "k" => VarFamily::K,
            "p" => VarFamily::P,
            "v" => VarFamily::V,
            "x" => VarFamily::X,
            "wx" => VarFamily::Wx,
            "wy" => VarFamily::Wy,
            _ => return None,
        })
    }
}

/// A single indexed variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarLabel {
    J(i64, i64),
    K(i64, i64),
    P(i64, i64),
    V(i64, i64),
    X(i64, i64),
    Wx(i64),
    Wy(i64),
}

impl VarLabel {
    pub fn j(m: i64, n: i64) -> Self {
        VarLabel::J(m, n)
    }

    pub fn k(m: i64, n: i64) -> Self {
        VarLabel::K(m, n)
    }

    pub fn p(m: i64, n: i64) -> Self {
        VarLabel::P(m, n)
    }

    /// `None` for (0,0): the convention `v_{0,0} ≡ 1` lives at the
    /// operator layer, so the label itself is forbidden.
    pub fn v(m: i64, n: i64) -> Option<Self> {
        if m == 0 && n == 0 {
            None
        } else {
            Some(VarLabel::V(m, n))
        }
    }

    pub fn x(m: i64, n: i64) -> Self {
        VarLabel::X(m, n)
    }

    pub fn wx(j: i64) -> Self {
        VarLabel::Wx(j)
    }

    /// `None` unless `j >= 1`.
    pub fn wy(j: i64) -> Option<Self> {
        if j >= 1 {
            Some(VarLabel::Wy(j))
        } else {
            None
        }
    }

    pub fn two_indexed(family: VarFamily, m: i64, n: i64) -> Option<Self> {
        match family {
            VarFamily::J => Some(VarLabel::J(m, n)),
            VarFamily::K => Some(VarLabel::K(m, n)),
            VarFamily::P => Some(VarLabel::P(m, n)),
            VarFamily::V => VarLabel::v(m, n),
            VarFamily::X => Some(VarLabel::X(m, n)),
            VarFamily::Wx | VarFamily::Wy => None,
        }
    }

    pub fn family(&self) -> VarFamily {
        match self {
            VarLabel::J(..) => VarFamily::J,
            VarLabel::K(..) => VarFamily::K,
            VarLabel::P(..) => VarFamily::P,
            VarLabel::V(..) => VarFamily::V,
            VarLabel::X(..) => VarFamily::X,
            VarLabel::Wx(..) => VarFamily::Wx,
            VarLabel::Wy(..) => VarFamily::Wy,
        }
    }

    pub fn indices(&self) -> Vec<i64> {
        match self {
            VarLabel::J(m, n)
            | VarLabel::K(m, n)
            | VarLabel::P(m, n)
            | VarLabel::V(m, n)
            | VarLabel::X(m, n) => vec![*m, *n],
            VarLabel::Wx(j) | VarLabel::Wy(j) => vec![*j],
        }
    }

    fn from_parts(family: &str, idx: &[i64]) -> Result<Self, ExactError> {
        let fam = VarFamily::from_name(family)
            .ok_or_else(|| ExactError::Parse(format!("unknown variable family `{family}`")))?;
        let bad = || {
            ExactError::Parse(format!(
                "invalid indices {idx:?} for variable family `{family}`"
            ))
        };
        match fam {
            VarFamily::Wx => match idx {
                [j] => Ok(VarLabel::Wx(*j)),
                _ => Err(bad()),
            },
            VarFamily::Wy => match idx {
                [j] => VarLabel::wy(*j).ok_or_else(bad),
                _ => Err(bad()),
            },
            _ => match idx {
                [m, n] => VarLabel::two_indexed(fam, *m, *n).ok_or_else(bad),
                _ => Err(bad()),
            },
        }
    }
}

impl fmt::Display for VarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self.indices();
        let idx: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        write!(f, "{}_{{{}}}", self.family().name(), idx.join(","))
    }
}

/// A monomial: finitely many variables with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<VarLabel, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarLabel) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(v, 1);
        Monomial { exps }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarLabel, u32)>) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &rhs.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn mul_var(&self, v: VarLabel) -> Monomial {
        let mut exps = self.exps.clone();
        *exps.entry(v).or_insert(0) += 1;
        Monomial { exps }
    }

    pub fn exponent(&self, v: &VarLabel) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    /// Divide by one power of `v`; `None` when `v` is absent.
    pub fn div_var(&self, v: &VarLabel) -> Option<Monomial> {
        let e = *self.exps.get(v)?;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(v);
        } else {
            exps.insert(*v, e - 1);
        }
        Some(Monomial { exps })
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn degree_in(&self, family: VarFamily) -> u32 {
        self.exps
            .iter()
            .filter(|(v, _)| v.family() == family)
            .map(|(_, e)| *e)
            .sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = (&VarLabel, &u32)> {
        self.exps.iter()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// A sparse polynomial with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality of the
/// term maps is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = Polynomial::default();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(v: VarLabel) -> Self {
        Self::from_monomial(Monomial::var(v), GaussianRational::one())
    }

    pub fn from_monomial(m: Monomial, c: GaussianRational) -> Self {
        let mut p = Polynomial::default();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn mul_var(&self, v: VarLabel) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul_var(v), c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to `v`.
    pub fn diff(&self, v: &VarLabel) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                let reduced = m.div_var(v).expect("exponent checked");
                out.add_term(reduced, &c.scale(&crate::Rational::from_int(e as i64)));
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Distinct variables of `family` appearing anywhere in the support.
    pub fn family_vars(&self, family: VarFamily) -> BTreeSet<VarLabel> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (v, _) in m.vars() {
                if v.family() == family {
                    out.insert(*v);
                }
            }
        }
        out
    }

    pub fn has_family(&self, family: VarFamily) -> bool {
        self.terms
            .keys()
            .any(|m| m.vars().any(|(v, _)| v.family() == family))
    }

    pub fn max_degree_in(&self, family: VarFamily) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(family))
            .max()
            .unwrap_or(0)
    }

    /// Largest absolute variable index in the support.
    pub fn max_abs_index(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|m| m.vars())
            .flat_map(|(v, _)| v.indices())
            .map(|i| i.abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("({c})")
                } else {
                    format!("({c})·{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.exps.len()))?;
        for (v, e) in &self.exps {
            let entry = (v.family().name(), v.indices(), *e);
            seq.serialize_element(&entry)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries: Vec<(String, Vec<i64>, u32)> = Vec::deserialize(deserializer)?;
        let mut exps = BTreeMap::new();
        for (fam, idx, e) in entries {
            let v = VarLabel::from_parts(&fam, &idx).map_err(D::Error::custom)?;
            if e == 0 {
                return Err(D::Error::custom("zero exponent in monomial"));
            }
            if exps.insert(v, e).is_some() {
                return Err(D::Error::custom("duplicate variable in monomial"));
            }
        }
        Ok(Monomial { exps })
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a>(&'a Monomial, &'a GaussianRational);
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Term(m, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries: Vec<(Monomial, GaussianRational)> = Vec::deserialize(deserializer)?;
        let mut p = Polynomial::zero();
        for (m, c) in entries {
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in polynomial"));
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }
}
