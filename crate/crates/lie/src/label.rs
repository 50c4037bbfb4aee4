//! Generator labels across all the corner algebras handled here.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

use crate::LieError;

/// Which Lie algebra a generator belongs to. Bases of the same algebra
/// in different coordinates (Cartesian vs ladder, field basis vs
/// oscillator form) get distinct tags so elements never mix bases.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum AlgebraKind {
    AbelianTorus,
    AbelianSurface,
    NonAbelian,
    NonAbelianLadder,
    OscillatorForm,
    AffineSl2,
}

impl AlgebraKind {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraKind::AbelianTorus => "abelian-torus",
            AlgebraKind::AbelianSurface => "abelian-surface",
            AlgebraKind::NonAbelian => "nonabelian",
            AlgebraKind::NonAbelianLadder => "nonabelian-ladder",
            AlgebraKind::OscillatorForm => "oscillator",
            AlgebraKind::AffineSl2 => "affine-sl2",
        }
    }
}

/// Symbol tags for every generator family in the project.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Symbol {
    // abelian torus field basis
    E,
    Phi,
    Theta,
    // abelian surface field basis
    A,
    G,
    H,
    Gamma,
    // non-abelian Cartesian basis (with lie_index)
    J,
    K,
    P,
    // non-abelian ladder basis
    JPlus,
    JMinus,
    JZ,
    KPlus,
    KMinus,
    KZ,
    PPlus,
    PMinus,
    PZ,
    // affine sl(2) matrix basis (H is shared with the surface)
    X,
    Y,
    // torus oscillator form, Λ = 0
    OscA,
    OscADag,
    OscB,
    OscBDag,
    OscC,
    OscCDag,
    FMinus,
    PhiHat,
    ThetaHat,
    EHat,
    // torus oscillator form, Λ ≠ 0
    OscU,
    OscUDag,
    OscV,
    OscVDag,
    OscW,
    OscWDag,
    UHat,
    VHat,
    WHat,
    PhiBar,
    ThetaBar,
    // surface oscillator form extras
    AHat,
    GHat,
    GammaHat,
    GammaTilde,
    GammaTildeDag,
    // central charge
    Z,
}

impl Symbol {
    pub fn name(&self) -> &'static str {
        match self {
            Symbol::E => "E",
            Symbol::Phi => "Phi",
            Symbol::Theta => "Theta",
            Symbol::A => "A",
            Symbol::G => "G",
            Symbol::H => "H",
            Symbol::Gamma => "gamma",
            Symbol::J => "J",
            Symbol::K => "K",
            Symbol::P => "P",
            Symbol::JPlus => "Jplus",
            Symbol::JMinus => "Jminus",
            Symbol::JZ => "Jz",
            Symbol::KPlus => "Kplus",
            Symbol::KMinus => "Kminus",
            Symbol::KZ => "Kz",
            Symbol::PPlus => "Pplus",
            Symbol::PMinus => "Pminus",
            Symbol::PZ => "Pz",
            Symbol::X => "X",
            Symbol::Y => "Y",
            Symbol::OscA => "a",
            Symbol::OscADag => "adag",
            Symbol::OscB => "b",
            Symbol::OscBDag => "bdag",
            Symbol::OscC => "c",
            Symbol::OscCDag => "cdag",
            Symbol::FMinus => "Fminus",
            Symbol::PhiHat => "PhiHat",
            Symbol::ThetaHat => "ThetaHat",
            Symbol::EHat => "EHat",
            Symbol::OscU => "u",
            Symbol::OscUDag => "udag",
            Symbol::OscV => "v",
            Symbol::OscVDag => "vdag",
            Symbol::OscW => "w",
            Symbol::OscWDag => "wdag",
            Symbol::UHat => "uHat",
            Symbol::VHat => "vHat",
            Symbol::WHat => "wHat",
            Symbol::PhiBar => "PhiBar",
            Symbol::ThetaBar => "ThetaBar",
            Symbol::AHat => "AHat",
            Symbol::GHat => "GHat",
            Symbol::GammaHat => "gammaHat",
            Symbol::GammaTilde => "gammaTilde",
            Symbol::GammaTildeDag => "gammaTildeDag",
            Symbol::Z => "Z",
        }
    }
}

/// Mode indices attached to a generator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Modes {
    None,
    One(i64),
    Two(i64, i64),
}

impl Modes {
    pub fn as_vec(&self) -> Vec<i64> {
        match self {
            Modes::None => vec![],
            Modes::One(m) => vec![*m],
            Modes::Two(m, n) => vec![*m, *n],
        }
    }
}

/// A basis vector of one of the corner algebras.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratorLabel {
    pub algebra: AlgebraKind,
    pub symbol: Symbol,
    pub lie_index: Option<u8>,
    pub modes: Modes,
}

impl GeneratorLabel {
    pub fn new(algebra: AlgebraKind, symbol: Symbol, lie_index: Option<u8>, modes: Modes) -> Self {
        GeneratorLabel {
            algebra,
            symbol,
            lie_index,
            modes,
        }
    }

    /// The central charge of `algebra`.
    pub fn central(algebra: AlgebraKind) -> Self {
        Self::new(algebra, Symbol::Z, None, Modes::None)
    }

    pub fn is_central_charge(&self) -> bool {
        self.symbol == Symbol::Z
    }

    pub fn mode_pair(&self) -> Result<(i64, i64), LieError> {
        match self.modes {
            Modes::Two(m, n) => Ok((m, n)),
            _ => Err(LieError::MalformedLabel(self.to_string())),
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![self.symbol.name().to_string()];
        if let Some(mu) = self.lie_index {
            parts.push(mu.to_string());
        }
        for m in self.modes.as_vec() {
            parts.push(m.to_string());
        }
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for GeneratorLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GeneratorLabel", 4)?;
        s.serialize_field("algebra", self.algebra.name())?;
        s.serialize_field("symbol", self.symbol.name())?;
        s.serialize_field("mu", &self.lie_index)?;
        s.serialize_field("modes", &self.modes.as_vec())?;
        s.end()
    }
}
