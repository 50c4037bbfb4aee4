//! The abelian corner algebra on the torus: bracket table, the change
//! of basis onto oscillator ⊕ abelian form, constraint elements, and
//! the physical quotient as a charge-assignment discipline.

use corner_exact::{GaussianRational, Rational};
use corner_lie::{AlgebraElement, AlgebraKind, BracketTable, GeneratorLabel, LieError, Modes, Symbol};
use std::collections::BTreeMap;

const TORUS: AlgebraKind = AlgebraKind::AbelianTorus;
const OSC: AlgebraKind = AlgebraKind::OscillatorForm;

pub fn e(m: i64, n: i64) -> GeneratorLabel {
    GeneratorLabel::new(TORUS, Symbol::E, None, Modes::Two(m, n))
}

pub fn phi(m: i64, n: i64) -> GeneratorLabel {
    GeneratorLabel::new(TORUS, Symbol::Phi, None, Modes::Two(m, n))
}

pub fn theta(m: i64, n: i64) -> GeneratorLabel {
    GeneratorLabel::new(TORUS, Symbol::Theta, None, Modes::Two(m, n))
}

pub fn z() -> GeneratorLabel {
    GeneratorLabel::central(TORUS)
}

fn osc(symbol: Symbol, modes: Modes) -> GeneratorLabel {
    GeneratorLabel::new(OSC, symbol, None, modes)
}

fn one_mode(symbol: Symbol, l: i64) -> Result<GeneratorLabel, LieError> {
    if l == 0 {
        return Err(LieError::LabelOutOfRange(format!(
            "{} requires a nonzero mode",
            symbol.name()
        )));
    }
    Ok(osc(symbol, Modes::One(l)))
}

fn two_mode(symbol: Symbol, k: i64, l: i64) -> Result<GeneratorLabel, LieError> {
    if k == 0 || l == 0 {
        return Err(LieError::LabelOutOfRange(format!(
            "{} requires both modes nonzero",
            symbol.name()
        )));
    }
    Ok(osc(symbol, Modes::Two(k, l)))
}

pub fn osc_a(l: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscA, l)
}

pub fn osc_adag(l: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscADag, l)
}

pub fn osc_b(k: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscB, k)
}

pub fn osc_bdag(k: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscBDag, k)
}

pub fn osc_c(k: i64, l: i64) -> Result<GeneratorLabel, LieError> {
    two_mode(Symbol::OscC, k, l)
}

pub fn osc_cdag(k: i64, l: i64) -> Result<GeneratorLabel, LieError> {
    two_mode(Symbol::OscCDag, k, l)
}

pub fn f_minus(k: i64, l: i64) -> Result<GeneratorLabel, LieError> {
    two_mode(Symbol::FMinus, k, l)
}

pub fn phi_hat(l: i64) -> GeneratorLabel {
    osc(Symbol::PhiHat, Modes::One(l))
}

pub fn theta_hat(k: i64) -> GeneratorLabel {
    osc(Symbol::ThetaHat, Modes::One(k))
}

pub fn e_hat() -> GeneratorLabel {
    osc(Symbol::EHat, Modes::None)
}

pub fn osc_u(l: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscU, l)
}

pub fn osc_udag(l: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscUDag, l)
}

pub fn osc_v(k: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscV, k)
}

pub fn osc_vdag(k: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::OscVDag, k)
}

pub fn osc_w(k: i64, l: i64) -> Result<GeneratorLabel, LieError> {
    two_mode(Symbol::OscW, k, l)
}

pub fn osc_wdag(k: i64, l: i64) -> Result<GeneratorLabel, LieError> {
    two_mode(Symbol::OscWDag, k, l)
}

pub fn u_hat(l: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::UHat, l)
}

pub fn v_hat(k: i64) -> Result<GeneratorLabel, LieError> {
    one_mode(Symbol::VHat, k)
}

pub fn w_hat(k: i64, l: i64) -> Result<GeneratorLabel, LieError> {
    two_mode(Symbol::WHat, k, l)
}

pub fn phi_bar() -> GeneratorLabel {
    osc(Symbol::PhiBar, Modes::None)
}

pub fn theta_bar() -> GeneratorLabel {
    osc(Symbol::ThetaBar, Modes::None)
}

pub fn osc_z() -> GeneratorLabel {
    GeneratorLabel::central(OSC)
}

fn gi(n: i64) -> GaussianRational {
    GaussianRational::int_i(n)
}

/// Bracket table of the finite Fourier mode algebra:
/// `[E_{kl}, Φ_{mn}] = im δ Z`, `[E_{kl}, Θ_{mn}] = −in δ Z`,
/// `[Φ_{kl}, Θ_{mn}] = Λ δ Z`, everything else zero.
pub fn bracket_table(lambda: &Rational) -> BracketTable {
    let lam = GaussianRational::from_rational(lambda.clone());
    BracketTable::new(TORUS, "abelian-torus", move |x, y| {
        let (k, l) = x.mode_pair()?;
        let (m, n) = y.mode_pair()?;
        if k != -m || l != -n {
            return Ok(AlgebraElement::zero(TORUS));
        }
        // canonical orientation only: the table wrapper antisymmetrizes
        let coeff = match (x.symbol, y.symbol) {
            (Symbol::E, Symbol::Phi) => gi(m),
            (Symbol::E, Symbol::Theta) => gi(-n),
            (Symbol::Phi, Symbol::Theta) => lam.clone(),
            _ => GaussianRational::zero(),
        };
        Ok(AlgebraElement::term(z(), coeff))
    })
}

fn is_lambda_zero_symbol(s: Symbol) -> bool {
    matches!(
        s,
        Symbol::OscA
            | Symbol::OscADag
            | Symbol::OscB
            | Symbol::OscBDag
            | Symbol::OscC
            | Symbol::OscCDag
            | Symbol::FMinus
            | Symbol::PhiHat
            | Symbol::ThetaHat
    )
}

fn is_lambda_nonzero_symbol(s: Symbol) -> bool {
    matches!(
        s,
        Symbol::OscU
            | Symbol::OscUDag
            | Symbol::OscV
            | Symbol::OscVDag
            | Symbol::OscW
            | Symbol::OscWDag
            | Symbol::UHat
            | Symbol::VHat
            | Symbol::WHat
            | Symbol::PhiBar
            | Symbol::ThetaBar
    )
}

fn check_sector(label: &GeneratorLabel, lambda_zero: bool) -> Result<(), LieError> {
    let ok = match label.symbol {
        Symbol::EHat | Symbol::Z => true,
        s if is_lambda_zero_symbol(s) => lambda_zero,
        s if is_lambda_nonzero_symbol(s) => !lambda_zero,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(LieError::LabelOutOfRange(format!(
            "oscillator symbol {} not available in the Λ{}0 sector",
            label.symbol.name(),
            if lambda_zero { "=" } else { "≠" }
        )))
    }
}

/// Oscillator-form table. For Λ = 0 the conjugate pairs are
/// `(a, a†)`, `(b, b†)`, `(c, c†)` with `[x, x†] = iZ`; for Λ ≠ 0 they
/// are `(u, u†)`, `(v, v†)`, `(w, w†)` and `(Θ̄, Φ̄)`, again `iZ`.
pub fn oscillator_table(lambda: &Rational) -> BracketTable {
    let lambda_zero = lambda.is_zero();
    BracketTable::new(OSC, "torus-oscillator", move |x, y| {
        check_sector(x, lambda_zero)?;
        check_sector(y, lambda_zero)?;
        let same_modes = x.modes == y.modes;
        // canonical orientation only: the table wrapper antisymmetrizes
        let coeff = match (x.symbol, y.symbol) {
            (Symbol::OscA, Symbol::OscADag)
            | (Symbol::OscB, Symbol::OscBDag)
            | (Symbol::OscC, Symbol::OscCDag)
            | (Symbol::OscU, Symbol::OscUDag)
            | (Symbol::OscV, Symbol::OscVDag)
            | (Symbol::OscW, Symbol::OscWDag)
                if same_modes =>
            {
                gi(1)
            }
            // [Θ̄, Φ̄] = iZ, received here as (Φ̄, Θ̄)
            (Symbol::PhiBar, Symbol::ThetaBar) => gi(-1),
            _ => GaussianRational::zero(),
        };
        Ok(AlgebraElement::term(osc_z(), coeff))
    })
}

/// Image of a torus generator in the oscillator basis.
pub fn to_oscillator_label(
    label: &GeneratorLabel,
    lambda: &Rational,
) -> Result<AlgebraElement, LieError> {
    if label.algebra != TORUS {
        return Err(LieError::MixedAlgebras {
            expected: TORUS,
            found: label.algebra,
        });
    }
    if label.symbol == Symbol::Z {
        return Ok(AlgebraElement::generator(osc_z()));
    }
    let (m, n) = label.mode_pair()?;
    let one = GaussianRational::one();
    let lz = lambda.is_zero();
    // i·Λ, used throughout the Λ ≠ 0 branch
    let i_lam = GaussianRational::new(Rational::zero(), lambda.clone());
    let build = |terms: Vec<(GeneratorLabel, GaussianRational)>| {
        AlgebraElement::from_terms(OSC, terms)
    };
    match label.symbol {
        Symbol::E => match (m == 0, n == 0) {
            (true, true) => Ok(AlgebraElement::generator(e_hat())),
            (true, false) if lz => Ok(AlgebraElement::generator(osc_a(-n)?)),
            (false, true) if lz => Ok(AlgebraElement::generator(osc_b(-m)?)),
            (false, false) if lz => Ok(AlgebraElement::generator(osc_c(-m, -n)?)),
            (true, false) => build(vec![
                (osc_u(-n)?, one.clone()),
                (u_hat(-n)?, -&one),
            ]),
            (false, true) => build(vec![
                (osc_v(-m)?, one.clone()),
                (v_hat(-m)?, -&one),
            ]),
            (false, false) => build(vec![
                (osc_w(-m, -n)?, one.clone()),
                (w_hat(-m, -n)?, -&one),
            ]),
        },
        Symbol::Phi => match (m == 0, n == 0) {
            (true, _) if lz => Ok(AlgebraElement::generator(phi_hat(n))),
            (true, true) => Ok(AlgebraElement::term(phi_bar(), i_lam)),
            (true, false) => {
                // Φ̂_n = −(iΛ/n)(u_{−n} + û_{−n})
                let c = i_lam.scale(&Rational::new(-1, n));
                build(vec![(osc_u(-n)?, c.clone()), (u_hat(-n)?, c)])
            }
            (false, true) => {
                let k = GaussianRational::from_int(m);
                if lz {
                    Ok(AlgebraElement::term(osc_bdag(m)?, k))
                } else {
                    Ok(AlgebraElement::term(osc_vdag(m)?, k))
                }
            }
            (false, false) => {
                let k = GaussianRational::from_int(m);
                if lz {
                    build(vec![
                        (osc_cdag(m, n)?, k.clone()),
                        (f_minus(m, n)?, -&k),
                    ])
                } else {
                    // k·w†_{kl} − (iΛ/2l)(w_{−k,−l} + ŵ_{−k,−l})
                    let c = i_lam.scale(&Rational::new(-1, 2 * n));
                    build(vec![
                        (osc_wdag(m, n)?, k),
                        (osc_w(-m, -n)?, c.clone()),
                        (w_hat(-m, -n)?, c),
                    ])
                }
            }
        },
        Symbol::Theta => match (m == 0, n == 0) {
            (_, true) if lz => Ok(AlgebraElement::generator(theta_hat(m))),
            (true, true) => Ok(AlgebraElement::generator(theta_bar())),
            (false, true) => {
                // Θ̂_m = −(iΛ/m)(v_{−m} + v̂_{−m})
                let c = i_lam.scale(&Rational::new(-1, m));
                build(vec![(osc_v(-m)?, c.clone()), (v_hat(-m)?, c)])
            }
            (true, false) => {
                let c = GaussianRational::from_int(-n);
                if lz {
                    Ok(AlgebraElement::term(osc_adag(n)?, c))
                } else {
                    Ok(AlgebraElement::term(osc_udag(n)?, c))
                }
            }
            (false, false) => {
                let c = GaussianRational::from_int(-n);
                if lz {
                    build(vec![
                        (osc_cdag(m, n)?, c.clone()),
                        (f_minus(m, n)?, c),
                    ])
                } else {
                    let h = i_lam.scale(&Rational::new(-1, 2 * m));
                    build(vec![
                        (osc_wdag(m, n)?, c),
                        (osc_w(-m, -n)?, h.clone()),
                        (w_hat(-m, -n)?, h),
                    ])
                }
            }
        },
        _ => Err(LieError::UndefinedOnGenerator(label.to_string())),
    }
}

/// Inverse of [`to_oscillator_label`]: image of an oscillator-form
/// generator back in the torus field basis.
pub fn from_oscillator_label(
    label: &GeneratorLabel,
    lambda: &Rational,
) -> Result<AlgebraElement, LieError> {
    if label.algebra != OSC {
        return Err(LieError::MixedAlgebras {
            expected: OSC,
            found: label.algebra,
        });
    }
    check_sector(label, lambda.is_zero())?;
    let build = |terms: Vec<(GeneratorLabel, GaussianRational)>| {
        AlgebraElement::from_terms(TORUS, terms)
    };
    let inv_i_lam = if lambda.is_zero() {
        GaussianRational::zero()
    } else {
        GaussianRational::new(Rational::zero(), lambda.clone())
            .inv()
            .expect("nonzero by branch")
    };
    match (label.symbol, label.modes) {
        (Symbol::Z, _) => Ok(AlgebraElement::generator(z())),
        (Symbol::EHat, _) => Ok(AlgebraElement::generator(e(0, 0))),
        (Symbol::OscA, Modes::One(l)) => Ok(AlgebraElement::generator(e(0, -l))),
        (Symbol::OscB, Modes::One(k)) => Ok(AlgebraElement::generator(e(-k, 0))),
        (Symbol::OscC, Modes::Two(k, l)) => Ok(AlgebraElement::generator(e(-k, -l))),
        (Symbol::OscADag, Modes::One(l)) => Ok(AlgebraElement::term(
            theta(0, l),
            GaussianRational::from_rational(Rational::new(-1, l)),
        )),
        (Symbol::OscBDag, Modes::One(k)) => Ok(AlgebraElement::term(
            phi(k, 0),
            GaussianRational::from_rational(Rational::new(1, k)),
        )),
        (Symbol::OscCDag, Modes::Two(k, l)) => build(vec![
            (theta(k, l), GaussianRational::from_rational(Rational::new(-1, 2 * l))),
            (phi(k, l), GaussianRational::from_rational(Rational::new(1, 2 * k))),
        ]),
        (Symbol::FMinus, Modes::Two(k, l)) => build(vec![
            (theta(k, l), GaussianRational::from_rational(Rational::new(-1, 2 * l))),
            (phi(k, l), GaussianRational::from_rational(Rational::new(-1, 2 * k))),
        ]),
        (Symbol::PhiHat, Modes::One(l)) => Ok(AlgebraElement::generator(phi(0, l))),
        (Symbol::ThetaHat, Modes::One(k)) => Ok(AlgebraElement::generator(theta(k, 0))),
        (Symbol::OscUDag, Modes::One(l)) => Ok(AlgebraElement::term(
            theta(0, l),
            GaussianRational::from_rational(Rational::new(-1, l)),
        )),
        (Symbol::OscVDag, Modes::One(k)) => Ok(AlgebraElement::term(
            phi(k, 0),
            GaussianRational::from_rational(Rational::new(1, k)),
        )),
        (Symbol::OscWDag, Modes::Two(k, l)) => build(vec![
            (theta(k, l), GaussianRational::from_rational(Rational::new(-1, 2 * l))),
            (phi(k, l), GaussianRational::from_rational(Rational::new(1, 2 * k))),
        ]),
        (Symbol::OscU, Modes::One(l)) | (Symbol::UHat, Modes::One(l)) => {
            let sign = if label.symbol == Symbol::OscU { 1 } else { -1 };
            build(vec![
                (phi(0, -l), inv_i_lam.scale(&Rational::new(l, 2))),
                (e(0, -l), GaussianRational::from_rational(Rational::new(sign, 2))),
            ])
        }
        (Symbol::OscV, Modes::One(k)) | (Symbol::VHat, Modes::One(k)) => {
            let sign = if label.symbol == Symbol::OscV { 1 } else { -1 };
            build(vec![
                (theta(-k, 0), inv_i_lam.scale(&Rational::new(k, 2))),
                (e(-k, 0), GaussianRational::from_rational(Rational::new(sign, 2))),
            ])
        }
        (Symbol::OscW, Modes::Two(k, l)) | (Symbol::WHat, Modes::Two(k, l)) => {
            let sign = if label.symbol == Symbol::OscW { 1 } else { -1 };
            build(vec![
                (theta(-k, -l), inv_i_lam.scale(&Rational::new(k, 2))),
                (phi(-k, -l), inv_i_lam.scale(&Rational::new(l, 2))),
                (e(-k, -l), GaussianRational::from_rational(Rational::new(sign, 2))),
            ])
        }
        (Symbol::PhiBar, _) => Ok(AlgebraElement::term(phi(0, 0), inv_i_lam)),
        (Symbol::ThetaBar, _) => Ok(AlgebraElement::generator(theta(0, 0))),
        _ => Err(LieError::UndefinedOnGenerator(label.to_string())),
    }
}

/// Linear extension of the classification map to elements.
pub fn to_oscillator(
    x: &AlgebraElement,
    lambda: &Rational,
) -> Result<AlgebraElement, LieError> {
    let mut out = AlgebraElement::zero(OSC);
    for (l, c) in x.terms() {
        out.add_scaled(&to_oscillator_label(l, lambda)?, c);
    }
    Ok(out)
}

pub fn from_oscillator(
    x: &AlgebraElement,
    lambda: &Rational,
) -> Result<AlgebraElement, LieError> {
    let mut out = AlgebraElement::zero(TORUS);
    for (l, c) in x.terms() {
        out.add_scaled(&from_oscillator_label(l, lambda)?, c);
    }
    Ok(out)
}

/// The quantized constraint element `dE_{kl} − Λ E_{kl}
/// = il Φ_{kl} + ik Θ_{kl} − Λ E_{kl}`, central in the algebra.
pub fn constraint(k: i64, l: i64, lambda: &Rational) -> AlgebraElement {
    let mut out = AlgebraElement::zero(TORUS);
    out.add_term(phi(k, l), &gi(l));
    out.add_term(theta(k, l), &gi(k));
    out.add_term(
        e(k, l),
        &GaussianRational::from_rational(lambda.neg()),
    );
    out
}

/// Central generators that survive the quotient by the constraint
/// ideal (besides `Z` itself).
pub fn quotient_survivors(lambda: &Rational) -> Vec<GeneratorLabel> {
    if lambda.is_zero() {
        vec![phi_hat(0), theta_hat(0), e_hat()]
    } else {
        vec![]
    }
}

/// Charges assigned to the central generators of one Λ-sector.
#[derive(Clone, Debug)]
pub struct ChargeAssignment {
    lambda_zero: bool,
    charges: BTreeMap<GeneratorLabel, GaussianRational>,
    chi_z: GaussianRational,
}

impl ChargeAssignment {
    /// All charges zero except `χ_Z = 1`.
    pub fn new(lambda: &Rational) -> Self {
        ChargeAssignment {
            lambda_zero: lambda.is_zero(),
            charges: BTreeMap::new(),
            chi_z: GaussianRational::one(),
        }
    }

    pub fn lambda_zero(&self) -> bool {
        self.lambda_zero
    }

    pub fn set_chi_z(&mut self, value: GaussianRational) {
        self.chi_z = value;
    }

    pub fn chi_z(&self) -> &GaussianRational {
        &self.chi_z
    }

    fn is_central_of_sector(&self, label: &GeneratorLabel) -> bool {
        match label.symbol {
            Symbol::EHat => true,
            Symbol::FMinus | Symbol::PhiHat | Symbol::ThetaHat => self.lambda_zero,
            Symbol::UHat | Symbol::VHat | Symbol::WHat => !self.lambda_zero,
            _ => false,
        }
    }

    pub fn set(&mut self, label: GeneratorLabel, value: GaussianRational) -> Result<(), LieError> {
        if !self.is_central_of_sector(&label) {
            return Err(LieError::LabelOutOfRange(format!(
                "{label} is not a central generator of this Λ-sector"
            )));
        }
        if value.is_zero() {
            self.charges.remove(&label);
        } else {
            self.charges.insert(label, value);
        }
        Ok(())
    }

    pub fn chi(&self, label: &GeneratorLabel) -> GaussianRational {
        if label.symbol == Symbol::Z {
            return self.chi_z.clone();
        }
        self.charges
            .get(label)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&GeneratorLabel, &GaussianRational)> {
        self.charges.iter()
    }
}

/// Outcome of the physicality test for a charge assignment.
#[derive(Clone, Debug)]
pub struct PhysicalReport {
    pub physical: bool,
    pub violations: Vec<GeneratorLabel>,
    pub free_survivors: Vec<GeneratorLabel>,
}

/// A representation with these charges descends to the physical corner
/// algebra iff every charge pinned by the constraints is zero. For
/// Λ = 0 the constraints pin `χ_{F⁻}`, `χ_{Φ̂_l}` (l ≠ 0), and
/// `χ_{Θ̂_k}` (k ≠ 0), leaving `Φ̂_0`, `Θ̂_0`, `Ê` free; for Λ ≠ 0 they
/// pin `χ_{ŵ}`, `χ_{û}`, `χ_{v̂}`, and `χ_{Ê}`, leaving nothing.
pub fn physical_check(c: &ChargeAssignment, lambda: &Rational) -> PhysicalReport {
    let lz = lambda.is_zero();
    let mut violations = Vec::new();
    for (label, value) in c.nonzero() {
        if value.is_zero() {
            continue;
        }
        let pinned = if lz {
            match (label.symbol, label.modes) {
                (Symbol::FMinus, _) => true,
                (Symbol::PhiHat, Modes::One(l)) => l != 0,
                (Symbol::ThetaHat, Modes::One(k)) => k != 0,
                _ => false,
            }
        } else {
            matches!(
                label.symbol,
                Symbol::UHat | Symbol::VHat | Symbol::WHat | Symbol::EHat
            )
        };
        if pinned {
            violations.push(*label);
        }
    }
    PhysicalReport {
        physical: violations.is_empty(),
        violations,
        free_survivors: quotient_survivors(lambda),
    }
}

/// All field-basis generators with modes in `[-w, w]²`, plus `Z`.
pub fn window_generators(w: i64) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    for m in -w..=w {
        for n in -w..=w {
            out.push(e(m, n));
            out.push(phi(m, n));
            out.push(theta(m, n));
        }
    }
    out.push(z());
    out
}

/// All oscillator-form generators with modes in `[-w, w]²`, plus `Z`.
pub fn osc_window_generators(w: i64, lambda: &Rational) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    let lz = lambda.is_zero();
    for l in -w..=w {
        if l != 0 {
            if lz {
                out.push(osc_a(l).unwrap());
                out.push(osc_adag(l).unwrap());
                out.push(osc_b(l).unwrap());
                out.push(osc_bdag(l).unwrap());
            } else {
                out.push(osc_u(l).unwrap());
                out.push(osc_udag(l).unwrap());
                out.push(osc_v(l).unwrap());
                out.push(osc_vdag(l).unwrap());
                out.push(u_hat(l).unwrap());
                out.push(v_hat(l).unwrap());
            }
        }
        out.push(if lz { phi_hat(l) } else { phi_bar() });
        out.push(if lz { theta_hat(l) } else { theta_bar() });
    }
    for k in -w..=w {
        for l in -w..=w {
            if k != 0 && l != 0 {
                if lz {
                    out.push(osc_c(k, l).unwrap());
                    out.push(osc_cdag(k, l).unwrap());
                    out.push(f_minus(k, l).unwrap());
                } else {
                    out.push(osc_w(k, l).unwrap());
                    out.push(osc_wdag(k, l).unwrap());
                    out.push(w_hat(k, l).unwrap());
                }
            }
        }
    }
    out.push(e_hat());
    out.push(osc_z());
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_modes_are_rejected_for_oscillator_pairs() {
        assert!(osc_a(0).is_err());
        assert!(osc_bdag(0).is_err());
        assert!(osc_c(1, 0).is_err());
        assert!(osc_w(0, 2).is_err());
        assert!(f_minus(0, 0).is_err());
    }

    #[test]
    fn sector_mismatch_is_rejected() {
        let one = Rational::one();
        let table = oscillator_table(&one);
        let a = osc_a(1).unwrap();
        let u = osc_udag(1).unwrap();
        assert!(table.generator_bracket(&a, &u).is_err());
        assert!(to_oscillator_label(&e(0, 1), &Rational::zero()).is_ok());
        assert!(from_oscillator_label(&a, &one).is_err());
    }

    #[test]
    fn constraint_at_zero_modes() {
        assert!(constraint(0, 0, &Rational::zero()).is_zero());
        assert_eq!(
            constraint(0, 0, &Rational::one()),
            AlgebraElement::term(e(0, 0), GaussianRational::from_int(-1))
        );
    }
}
