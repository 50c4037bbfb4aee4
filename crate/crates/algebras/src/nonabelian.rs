//! The su(2) corner algebra on the torus: Cartesian and ladder bases,
//! the modified triangular decomposition, the zeroth-level isochronous
//! Galilean identification, and the quantized constraint descriptors.

use corner_exact::{GaussianRational, Rational};
use corner_lie::{AlgebraElement, AlgebraKind, BracketTable, GeneratorLabel, LieError, Modes, Symbol};

const NA: AlgebraKind = AlgebraKind::NonAbelian;
const LADDER: AlgebraKind = AlgebraKind::NonAbelianLadder;

pub fn j(mu: u8, m: i64, n: i64) -> GeneratorLabel {
    GeneratorLabel::new(NA, Symbol::J, Some(mu), Modes::Two(m, n))
}

pub fn k(mu: u8, m: i64, n: i64) -> GeneratorLabel {
    GeneratorLabel::new(NA, Symbol::K, Some(mu), Modes::Two(m, n))
}

pub fn p(mu: u8, m: i64, n: i64) -> GeneratorLabel {
    GeneratorLabel::new(NA, Symbol::P, Some(mu), Modes::Two(m, n))
}

pub fn z() -> GeneratorLabel {
    GeneratorLabel::central(NA)
}

pub fn ladder(symbol: Symbol, m: i64, n: i64) -> GeneratorLabel {
    GeneratorLabel::new(LADDER, symbol, None, Modes::Two(m, n))
}

pub fn ladder_z() -> GeneratorLabel {
    GeneratorLabel::central(LADDER)
}

fn gi(n: i64) -> GaussianRational {
    GaussianRational::int_i(n)
}

/// `[t_μ, t_ν] = ε_{μν}^λ t_λ`: returns `(λ, sign)` or `None`.
fn levi_civita(mu: u8, nu: u8) -> Option<(u8, i64)> {
    match (mu, nu) {
        (1, 2) => Some((3, 1)),
        (2, 1) => Some((3, -1)),
        (2, 3) => Some((1, 1)),
        (3, 2) => Some((1, -1)),
        (3, 1) => Some((2, 1)),
        (1, 3) => Some((2, -1)),
        _ => None,
    }
}

/// The Cartesian bracket table: `[J,J] = εJ`, `[J,K] = εK + imδδδZ`,
/// `[J,P] = εP − inδδδZ`, `[K,P] = ΛδδδZ`, all other brackets zero.
pub fn bracket_table(lambda: &Rational) -> BracketTable {
    let lam = GaussianRational::from_rational(lambda.clone());
    BracketTable::new(NA, "nonabelian", move |x, y| {
        let (kx, lx) = x.mode_pair()?;
        let (my, ny) = y.mode_pair()?;
        let mu = x.lie_index.ok_or_else(|| LieError::MalformedLabel(x.to_string()))?;
        let nu = y.lie_index.ok_or_else(|| LieError::MalformedLabel(y.to_string()))?;
        let delta = mu == nu && kx == -my && lx == -ny;
        let mut out = AlgebraElement::zero(NA);
        let eps = levi_civita(mu, nu);
        // canonical orientation only: the table wrapper antisymmetrizes
        match (x.symbol, y.symbol) {
            (Symbol::J, Symbol::J) => {
                if let Some((la, s)) = eps {
                    out.add_term(j(la, kx + my, lx + ny), &GaussianRational::from_int(s));
                }
            }
            (Symbol::J, Symbol::K) => {
                if let Some((la, s)) = eps {
                    out.add_term(k(la, kx + my, lx + ny), &GaussianRational::from_int(s));
                }
                if delta {
                    out.add_term(z(), &gi(my));
                }
            }
            (Symbol::J, Symbol::P) => {
                if let Some((la, s)) = eps {
                    out.add_term(p(la, kx + my, lx + ny), &GaussianRational::from_int(s));
                }
                if delta {
                    out.add_term(z(), &gi(-ny));
                }
            }
            (Symbol::K, Symbol::P) => {
                if delta {
                    out.add_term(z(), &lam);
                }
            }
            _ => {}
        }
        Ok(out)
    })
}

/// Ladder image of a Cartesian generator:
/// `X_1 = ½(X⁺ − X⁻)`, `X_2 = (i/2)(X⁺ + X⁻)`, `X_3 = (i/2)X^z`.
pub fn to_ladder_label(label: &GeneratorLabel) -> Result<AlgebraElement, LieError> {
    if label.algebra != NA {
        return Err(LieError::MixedAlgebras {
            expected: NA,
            found: label.algebra,
        });
    }
    if label.symbol == Symbol::Z {
        return Ok(AlgebraElement::generator(ladder_z()));
    }
    let (m, n) = label.mode_pair()?;
    let (plus, minus, zed) = match label.symbol {
        Symbol::J => (Symbol::JPlus, Symbol::JMinus, Symbol::JZ),
        Symbol::K => (Symbol::KPlus, Symbol::KMinus, Symbol::KZ),
        Symbol::P => (Symbol::PPlus, Symbol::PMinus, Symbol::PZ),
        _ => return Err(LieError::UndefinedOnGenerator(label.to_string())),
    };
    let half = GaussianRational::from_rational(Rational::new(1, 2));
    let half_i = GaussianRational::new(Rational::zero(), Rational::new(1, 2));
    match label.lie_index {
        Some(1) => AlgebraElement::from_terms(
            LADDER,
            [
                (ladder(plus, m, n), half.clone()),
                (ladder(minus, m, n), -&half),
            ],
        ),
        Some(2) => AlgebraElement::from_terms(
            LADDER,
            [
                (ladder(plus, m, n), half_i.clone()),
                (ladder(minus, m, n), half_i),
            ],
        ),
        Some(3) => Ok(AlgebraElement::term(ladder(zed, m, n), half_i)),
        _ => Err(LieError::MalformedLabel(label.to_string())),
    }
}

/// Cartesian image of a ladder generator:
/// `X^± = ±X_1 − iX_2`, `X^z = −2iX_3`.
pub fn from_ladder_label(label: &GeneratorLabel) -> Result<AlgebraElement, LieError> {
    if label.algebra != LADDER {
        return Err(LieError::MixedAlgebras {
            expected: LADDER,
            found: label.algebra,
        });
    }
    if label.symbol == Symbol::Z {
        return Ok(AlgebraElement::generator(z()));
    }
    let (m, n) = label.mode_pair()?;
    let cart = |sym: Symbol, mu: u8| GeneratorLabel::new(NA, sym, Some(mu), Modes::Two(m, n));
    let (sym, kind) = match label.symbol {
        Symbol::JPlus => (Symbol::J, 1i64),
        Symbol::JMinus => (Symbol::J, -1),
        Symbol::JZ => (Symbol::J, 0),
        Symbol::KPlus => (Symbol::K, 1),
        Symbol::KMinus => (Symbol::K, -1),
        Symbol::KZ => (Symbol::K, 0),
        Symbol::PPlus => (Symbol::P, 1),
        Symbol::PMinus => (Symbol::P, -1),
        Symbol::PZ => (Symbol::P, 0),
        _ => return Err(LieError::UndefinedOnGenerator(label.to_string())),
    };
    if kind == 0 {
        Ok(AlgebraElement::term(cart(sym, 3), gi(-2)))
    } else {
        AlgebraElement::from_terms(
            NA,
            [
                (cart(sym, 1), GaussianRational::from_int(kind)),
                (cart(sym, 2), gi(-1)),
            ],
        )
    }
}

pub fn to_ladder(x: &AlgebraElement) -> Result<AlgebraElement, LieError> {
    let mut out = AlgebraElement::zero(LADDER);
    for (l, c) in x.terms() {
        out.add_scaled(&to_ladder_label(l)?, c);
    }
    Ok(out)
}

pub fn from_ladder(x: &AlgebraElement) -> Result<AlgebraElement, LieError> {
    let mut out = AlgebraElement::zero(NA);
    for (l, c) in x.terms() {
        out.add_scaled(&from_ladder_label(l)?, c);
    }
    Ok(out)
}

/// Ladder-basis table, obtained by transporting the Cartesian table
/// through the basis change. The golden-value list for the ladder
/// relations is asserted in the tests against this transported table.
pub fn ladder_table(lambda: &Rational) -> BracketTable {
    let cart = bracket_table(lambda);
    BracketTable::new(LADDER, "nonabelian-ladder", move |x, y| {
        let xa = from_ladder_label(x)?;
        let ya = from_ladder_label(y)?;
        to_ladder(&corner_lie::bracket(&xa, &ya, &cart)?)
    })
}

/// The three MTD summands of a ladder element.
#[derive(Clone, Debug, PartialEq)]
pub struct MTDSplit {
    pub nminus: AlgebraElement,
    pub h: AlgebraElement,
    pub nplus: AlgebraElement,
}

/// Projects onto `𝔫⁻ ⊕ 𝔥 ⊕ 𝔫⁺` with `𝔥 = ⟨Jz, Kz, Pz, Z⟩` and
/// `𝔫^± = ⟨J^±, K^±, P^±⟩`.
pub fn mtd_split(x: &AlgebraElement) -> Result<MTDSplit, LieError> {
    if x.algebra() != LADDER {
        return Err(LieError::MixedAlgebras {
            expected: LADDER,
            found: x.algebra(),
        });
    }
    let mut split = MTDSplit {
        nminus: AlgebraElement::zero(LADDER),
        h: AlgebraElement::zero(LADDER),
        nplus: AlgebraElement::zero(LADDER),
    };
    for (l, c) in x.terms() {
        let target = match l.symbol {
            Symbol::JMinus | Symbol::KMinus | Symbol::PMinus => &mut split.nminus,
            Symbol::JZ | Symbol::KZ | Symbol::PZ | Symbol::Z => &mut split.h,
            Symbol::JPlus | Symbol::KPlus | Symbol::PPlus => &mut split.nplus,
            _ => return Err(LieError::UndefinedOnGenerator(l.to_string())),
        };
        target.add_term(*l, c);
    }
    Ok(split)
}

/// Zeroth-level table: the isochronous Galilean algebra `igal(3)`
/// (`[J,J] = εJ`, `[J,K] = εK`, `[J,P] = εP`) extended for Λ ≠ 0 by
/// `[K_μ, P_ν] = δ_{μν} Λ Z`. Built independently of the full table;
/// agreement with the mode-(0,0) restriction is a test.
pub fn zeroth_level_table(lambda: &Rational) -> BracketTable {
    let lam = GaussianRational::from_rational(lambda.clone());
    BracketTable::new(NA, "zeroth-level", move |x, y| {
        if x.modes != Modes::Two(0, 0) || y.modes != Modes::Two(0, 0) {
            return Err(LieError::LabelOutOfRange(format!(
                "zeroth-level table is defined on modes (0,0); got {x}, {y}"
            )));
        }
        let mu = x.lie_index.ok_or_else(|| LieError::MalformedLabel(x.to_string()))?;
        let nu = y.lie_index.ok_or_else(|| LieError::MalformedLabel(y.to_string()))?;
        let mut out = AlgebraElement::zero(NA);
        // canonical orientation only: the table wrapper antisymmetrizes
        match (x.symbol, y.symbol) {
            (Symbol::J, Symbol::J) => {
                if let Some((la, s)) = levi_civita(mu, nu) {
                    out.add_term(j(la, 0, 0), &GaussianRational::from_int(s));
                }
            }
            (Symbol::J, Symbol::K) => {
                if let Some((la, s)) = levi_civita(mu, nu) {
                    out.add_term(k(la, 0, 0), &GaussianRational::from_int(s));
                }
            }
            (Symbol::J, Symbol::P) => {
                if let Some((la, s)) = levi_civita(mu, nu) {
                    out.add_term(p(la, 0, 0), &GaussianRational::from_int(s));
                }
            }
            (Symbol::K, Symbol::P) => {
                if mu == nu {
                    out.add_term(z(), &lam);
                }
            }
            _ => {}
        }
        Ok(out)
    })
}

/// Constraint variant in the ladder basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstraintVariant {
    Plus,
    Minus,
    Z,
}

impl ConstraintVariant {
    pub fn name(&self) -> &'static str {
        match self {
            ConstraintVariant::Plus => "plus",
            ConstraintVariant::Minus => "minus",
            ConstraintVariant::Z => "z",
        }
    }
}

/// The quantized constraint `f̂` in ladder form: a finite linear part
/// plus an infinitely indexed quadratic family of ordered generator
/// pairs. Only the operator layer ever evaluates the infinite part.
#[derive(Clone, Debug)]
pub struct ConstraintDescriptor {
    pub variant: ConstraintVariant,
    pub r: i64,
    pub s: i64,
    pub lambda: Rational,
}

impl ConstraintDescriptor {
    pub fn new(variant: ConstraintVariant, r: i64, s: i64, lambda: Rational) -> Self {
        ConstraintDescriptor { variant, r, s, lambda }
    }

    /// `−is K^v_{rs} − ir P^v_{rs} (+ Λ J^v_{rs})` in the chosen variant.
    pub fn linear_part(&self) -> AlgebraElement {
        let (jsym, ksym, psym) = match self.variant {
            ConstraintVariant::Plus => (Symbol::JPlus, Symbol::KPlus, Symbol::PPlus),
            ConstraintVariant::Minus => (Symbol::JMinus, Symbol::KMinus, Symbol::PMinus),
            ConstraintVariant::Z => (Symbol::JZ, Symbol::KZ, Symbol::PZ),
        };
        let mut out = AlgebraElement::zero(LADDER);
        out.add_term(ladder(ksym, self.r, self.s), &gi(-self.s));
        out.add_term(ladder(psym, self.r, self.s), &gi(-self.r));
        out.add_term(
            ladder(jsym, self.r, self.s),
            &GaussianRational::from_rational(self.lambda.clone()),
        );
        out
    }

    /// The `(m,n)`-slice of the quadratic family: ordered generator
    /// pairs with weights. For the z-variant
    /// `P⁺_{(r+m)(s+n)} K⁻_{−m,−n} − P⁻_{(r+m)(s+n)} K⁺_{−m,−n}`; for
    /// the ± variants
    /// `½(∓P^±_{(r+m)(s+n)} K^z_{−m,−n} ± P^z_{(r+m)(s+n)} K^±_{−m,−n})`.
    pub fn quadratic_pairs(
        &self,
        m: i64,
        n: i64,
    ) -> Vec<(GeneratorLabel, GeneratorLabel, GaussianRational)> {
        let a = (self.r + m, self.s + n);
        let b = (-m, -n);
        let half = GaussianRational::from_rational(Rational::new(1, 2));
        match self.variant {
            ConstraintVariant::Z => vec![
                (
                    ladder(Symbol::PPlus, a.0, a.1),
                    ladder(Symbol::KMinus, b.0, b.1),
                    GaussianRational::one(),
                ),
                (
                    ladder(Symbol::PMinus, a.0, a.1),
                    ladder(Symbol::KPlus, b.0, b.1),
                    GaussianRational::from_int(-1),
                ),
            ],
            ConstraintVariant::Plus => vec![
                (
                    ladder(Symbol::PPlus, a.0, a.1),
                    ladder(Symbol::KZ, b.0, b.1),
                    -&half,
                ),
                (
                    ladder(Symbol::PZ, a.0, a.1),
                    ladder(Symbol::KPlus, b.0, b.1),
                    half,
                ),
            ],
            ConstraintVariant::Minus => vec![
                (
                    ladder(Symbol::PMinus, a.0, a.1),
                    ladder(Symbol::KZ, b.0, b.1),
                    half.clone(),
                ),
                (
                    ladder(Symbol::PZ, a.0, a.1),
                    ladder(Symbol::KMinus, b.0, b.1),
                    -&half,
                ),
            ],
        }
    }

    /// Human-readable form of the full descriptor.
    pub fn describe(&self) -> String {
        let (r, s) = (self.r, self.s);
        let quad = match self.variant {
            ConstraintVariant::Z => format!(
                "sum over (m,n) of [ Pplus_{{{r}+m,{s}+n}}·Kminus_{{-m,-n}} - Pminus_{{{r}+m,{s}+n}}·Kplus_{{-m,-n}} ]"
            ),
            ConstraintVariant::Plus => format!(
                "sum over (m,n) of 1/2·[ -Pplus_{{{r}+m,{s}+n}}·Kz_{{-m,-n}} + Pz_{{{r}+m,{s}+n}}·Kplus_{{-m,-n}} ]"
            ),
            ConstraintVariant::Minus => format!(
                "sum over (m,n) of 1/2·[ Pminus_{{{r}+m,{s}+n}}·Kz_{{-m,-n}} - Pz_{{{r}+m,{s}+n}}·Kminus_{{-m,-n}} ]"
            ),
        };
        format!("linear: {}\nquadratic: {}", self.linear_part(), quad)
    }
}

/// Window of Cartesian generators with modes in `[-w, w]²`, plus `Z`.
pub fn window_generators(w: i64) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    for mu in 1..=3u8 {
        for m in -w..=w {
            for n in -w..=w {
                out.push(j(mu, m, n));
                out.push(k(mu, m, n));
                out.push(p(mu, m, n));
            }
        }
    }
    out.push(z());
    out
}

/// Window of ladder generators with modes in `[-w, w]²`, plus `Z`.
pub fn ladder_window_generators(w: i64) -> Vec<GeneratorLabel> {
    let symbols = [
        Symbol::JPlus,
        Symbol::JMinus,
        Symbol::JZ,
        Symbol::KPlus,
        Symbol::KMinus,
        Symbol::KZ,
        Symbol::PPlus,
        Symbol::PMinus,
        Symbol::PZ,
    ];
    let mut out = Vec::new();
    for sym in symbols {
        for m in -w..=w {
            for n in -w..=w {
                out.push(ladder(sym, m, n));
            }
        }
    }
    out.push(ladder_z());
    out
}

/// Embedding of the abelian torus algebra onto the MTD Cartan part:
/// `E_{kl} ↦ (i/2)Jz_{kl}`, `Φ_{kl} ↦ (i/2)Kz_{kl}`,
/// `Θ_{kl} ↦ (i/2)Pz_{kl}`, `Z ↦ Z`.
pub fn embed_abelian_label(label: &GeneratorLabel) -> Result<AlgebraElement, LieError> {
    if label.algebra != AlgebraKind::AbelianTorus {
        return Err(LieError::MixedAlgebras {
            expected: AlgebraKind::AbelianTorus,
            found: label.algebra,
        });
    }
    if label.symbol == Symbol::Z {
        return Ok(AlgebraElement::generator(ladder_z()));
    }
    let (m, n) = label.mode_pair()?;
    let half_i = GaussianRational::new(Rational::zero(), Rational::new(1, 2));
    let sym = match label.symbol {
        Symbol::E => Symbol::JZ,
        Symbol::Phi => Symbol::KZ,
        Symbol::Theta => Symbol::PZ,
        _ => return Err(LieError::UndefinedOnGenerator(label.to_string())),
    };
    Ok(AlgebraElement::term(ladder(sym, m, n), half_i))
}
