//! Concrete module actions: the abelian oscillator Fock action on the
//! torus and the four polarizations of the su(2) induced modules
//! (standard, repolarized, Λ ≠ 0 standard, Λ ≠ 0 modified).
//!
//! The number conventions follow the source tables verbatim with one
//! deliberate exception, recorded as the `delta_sign` note in reports:
//! the vacuum-sector constants `Δ^Φ̂`/`Δ^Θ̂` enter `Kz`/`Pz` with a plus
//! sign — the sign the commutation relations force — where the stated
//! closed form carries a minus.

use corner_algebras::torus::{self, ChargeAssignment};
use corner_algebras::nonabelian as na;
use corner_exact::{GaussianRational, Polynomial, Rational, VarFamily, VarLabel};
use corner_lie::{bracket, AlgebraElement, AlgebraKind, BracketTable, GeneratorLabel, Modes, Symbol};
use std::sync::Arc;

use crate::op::{op_apply, Bound, EvalConfig, OperatorExpr, SumFamily};
use crate::FockError;

/// Which Fock generators act by multiplication vs differentiation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Polarization {
    Standard,
    Repolarized,
    ModifiedLambda,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepAlgebra {
    AbelianOscillator,
    NonAbelian,
}

/// Internal table selector for the non-abelian actions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableKind {
    StdV,
    Repol,
    LambdaX,
    Modified,
}

/// A representation choice: algebra, cosmological constant, charges,
/// and polarization.
#[derive(Clone)]
pub struct RepContext {
    pub algebra: RepAlgebra,
    pub lambda: Rational,
    pub charges: ChargeAssignment,
    pub polarization: Polarization,
}

impl RepContext {
    /// Oscillator Fock action of the abelian torus algebra.
    pub fn abelian(lambda: Rational, charges: ChargeAssignment) -> Result<Self, FockError> {
        if charges.lambda_zero() != lambda.is_zero() {
            return Err(FockError::BadContext(
                "charge assignment sector does not match Λ".into(),
            ));
        }
        if !lambda.is_zero() {
            // pinned sector: χ_Z = 1, all hat charges zero
            if !charges.chi_z().is_zero() && *charges.chi_z() != GaussianRational::one() {
                return Err(FockError::BadContext(
                    "Λ ≠ 0 contexts pin χ_Z = 1".into(),
                ));
            }
            if charges.nonzero().count() > 0 {
                return Err(FockError::BadContext(
                    "Λ ≠ 0 contexts pin all hat charges to zero".into(),
                ));
            }
        }
        Ok(RepContext {
            algebra: RepAlgebra::AbelianOscillator,
            lambda,
            charges,
            polarization: Polarization::Standard,
        })
    }

    /// Λ = 0 induced module of the su(2) corner algebra; `charges`
    /// parametrizes the vacuum sector, `χ_Z` is pinned to 1.
    pub fn nonabelian_lambda0(
        charges: ChargeAssignment,
        polarization: Polarization,
    ) -> Result<Self, FockError> {
        if !charges.lambda_zero() {
            return Err(FockError::BadContext(
                "Λ = 0 context requires a Λ = 0 charge assignment".into(),
            ));
        }
        if *charges.chi_z() != GaussianRational::one() {
            return Err(FockError::BadContext("the induced modules pin χ_Z = 1".into()));
        }
        if polarization == Polarization::ModifiedLambda {
            return Err(FockError::BadContext(
                "the modified polarization is a Λ ≠ 0 construction".into(),
            ));
        }
        Ok(RepContext {
            algebra: RepAlgebra::NonAbelian,
            lambda: Rational::zero(),
            charges,
            polarization,
        })
    }

    /// Λ ≠ 0 induced module; charges are pinned (χ_Z = 1, hats zero).
    pub fn nonabelian_lambda(
        lambda: Rational,
        polarization: Polarization,
    ) -> Result<Self, FockError> {
        if lambda.is_zero() {
            return Err(FockError::BadContext("Λ ≠ 0 context requires Λ ≠ 0".into()));
        }
        if polarization == Polarization::Repolarized {
            return Err(FockError::BadContext(
                "no repolarized table exists for Λ ≠ 0; use the modified one".into(),
            ));
        }
        Ok(RepContext {
            algebra: RepAlgebra::NonAbelian,
            lambda: lambda.clone(),
            charges: ChargeAssignment::new(&lambda),
            polarization,
        })
    }

    pub fn table_kind(&self) -> Result<TableKind, FockError> {
        match (self.lambda.is_zero(), self.polarization) {
            (true, Polarization::Standard) => Ok(TableKind::StdV),
            (true, Polarization::Repolarized) => Ok(TableKind::Repol),
            (false, Polarization::Standard) => Ok(TableKind::LambdaX),
            (false, Polarization::ModifiedLambda) => Ok(TableKind::Modified),
            _ => Err(FockError::BadContext("unsupported context".into())),
        }
    }

    /// The bracket table this context is expected to represent.
    pub fn bracket_table(&self) -> BracketTable {
        match self.algebra {
            RepAlgebra::AbelianOscillator => torus::oscillator_table(&self.lambda),
            RepAlgebra::NonAbelian => na::ladder_table(&self.lambda),
        }
    }

    /// Records the Δ-sign convention in force (see module docs).
    pub fn delta_sign_note() -> &'static str {
        "delta-sign: +Δ in Kz/Pz (fixed by the commutation relations; \
         the displayed closed form writes -Δ)"
    }
}

fn gi(n: i64) -> GaussianRational {
    GaussianRational::int_i(n)
}

fn gr(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn rational_i(r: Rational) -> GaussianRational {
    GaussianRational::new(Rational::zero(), r)
}

/// `Δ^Φ̂_{kl} = −2i χ_{Φ̂_l} δ_{k,0} + 2ik χ_{F⁻_{kl}} (1 − δ_{l,0})`.
pub(crate) fn delta_phi_hat(ch: &ChargeAssignment, k: i64, l: i64) -> GaussianRational {
    let mut out = GaussianRational::zero();
    if k == 0 {
        out += &(&gi(-2) * &ch.chi(&torus::phi_hat(l)));
    }
    if k != 0 && l != 0 {
        out += &(&gi(2 * k) * &ch.chi(&torus::f_minus(k, l).expect("nonzero modes")));
    }
    out
}

/// `Δ^Θ̂_{kl} = −2i χ_{Θ̂_k} δ_{l,0} + 2il χ_{F⁻_{kl}} (1 − δ_{k,0})`.
pub(crate) fn delta_theta_hat(ch: &ChargeAssignment, k: i64, l: i64) -> GaussianRational {
    let mut out = GaussianRational::zero();
    if l == 0 {
        out += &(&gi(-2) * &ch.chi(&torus::theta_hat(k)));
    }
    if k != 0 && l != 0 {
        out += &(&gi(2 * l) * &ch.chi(&torus::f_minus(k, l).expect("nonzero modes")));
    }
    out
}

/// `Δ^Ê_{kl} = 2 + (−2 − 2i χ_Ê) δ_{k,0} δ_{l,0}`.
pub(crate) fn delta_e_hat(ch: &ChargeAssignment, k: i64, l: i64) -> GaussianRational {
    if k == 0 && l == 0 {
        &gi(-2) * &ch.chi(&torus::e_hat())
    } else {
        gr(2)
    }
}

/// `Δ^K_{kl} = −(i/l)(1−δ_{k,0})(1−δ_{l,0}) − (2i/l) δ_{k,0} (1−δ_{l,0})`.
pub(crate) fn delta_k(k: i64, l: i64) -> GaussianRational {
    if l == 0 {
        return GaussianRational::zero();
    }
    if k != 0 {
        rational_i(Rational::new(-1, l))
    } else {
        rational_i(Rational::new(-2, l))
    }
}

/// `Δ^P_{kl} = −(i/k)(1−δ_{k,0})(1−δ_{l,0}) − (2i/k)(1−δ_{k,0}) δ_{l,0}`.
pub(crate) fn delta_p(k: i64, l: i64) -> GaussianRational {
    if k == 0 {
        return GaussianRational::zero();
    }
    if l != 0 {
        rational_i(Rational::new(-1, k))
    } else {
        rational_i(Rational::new(-2, k))
    }
}

/// Charge mode pairs at which `Δ^Φ̂` can be nonzero.
fn kz_charge_indices(ch: &ChargeAssignment) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (label, _) in ch.nonzero() {
        match (label.symbol, label.modes) {
            (Symbol::PhiHat, Modes::One(l)) => out.push((0, l)),
            (Symbol::FMinus, Modes::Two(k, l)) => out.push((k, l)),
            _ => {}
        }
    }
    out
}

fn pz_charge_indices(ch: &ChargeAssignment) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (label, _) in ch.nonzero() {
        match (label.symbol, label.modes) {
            (Symbol::ThetaHat, Modes::One(k)) => out.push((k, 0)),
            (Symbol::FMinus, Modes::Two(k, l)) => out.push((k, l)),
            _ => {}
        }
    }
    out
}

fn family_indices(p: &Polynomial, fam: VarFamily) -> Vec<(i64, i64)> {
    p.family_vars(fam)
        .into_iter()
        .map(|v| {
            let idx = v.indices();
            (idx[0], idx[1])
        })
        .collect()
}

pub(crate) fn vacuum_family(kind: TableKind) -> VarFamily {
    match kind {
        TableKind::StdV | TableKind::Repol => VarFamily::V,
        TableKind::LambdaX | TableKind::Modified => VarFamily::X,
    }
}

fn vvar(kind: TableKind, m: i64, n: i64) -> Option<VarLabel> {
    match vacuum_family(kind) {
        VarFamily::V => VarLabel::v(m, n),
        _ => Some(VarLabel::x(m, n)),
    }
}

/// The finite (non-`E`) part of the `Kz` image at modes `b`, split into
/// the piece whose convolution index is capped by support, deltas, or
/// charges, and the free multiplication piece.
pub fn kz_coef_capped(
    kind: TableKind,
    b: (i64, i64),
    ch: &ChargeAssignment,
    lambda: &Rational,
) -> OperatorExpr {
    let (k, l) = b;
    match kind {
        TableKind::StdV => OperatorExpr::Scalar(delta_phi_hat(ch, k, l)),
        TableKind::Repol => OperatorExpr::add(vec![
            OperatorExpr::scaled(gi(2 * k), OperatorExpr::diff_or_one(vvar(kind, k, l))),
            OperatorExpr::Scalar(delta_phi_hat(ch, k, l)),
        ]),
        TableKind::LambdaX => {
            let mut terms = Vec::new();
            if k == 0 && l == 0 {
                terms.push(OperatorExpr::scaled(
                    GaussianRational::from_rational(lambda.clone()).scale(&Rational::from_int(2)),
                    OperatorExpr::MulVar(VarLabel::x(0, 0)),
                ));
            }
            terms.push(OperatorExpr::scaled(
                &GaussianRational::from_rational(lambda.clone()) * &delta_k(k, l),
                OperatorExpr::Diff(VarLabel::x(-k, -l)),
            ));
            OperatorExpr::add(terms)
        }
        TableKind::Modified => {
            let mut terms = vec![OperatorExpr::scaled(
                gi(2 * k),
                OperatorExpr::Diff(VarLabel::x(k, l)),
            )];
            if k == 0 && l == 0 {
                terms.push(OperatorExpr::scaled(
                    GaussianRational::from_rational(lambda.clone()).scale(&Rational::from_int(2)),
                    OperatorExpr::MulVar(VarLabel::x(0, 0)),
                ));
            }
            OperatorExpr::add(terms)
        }
    }
}

pub fn kz_coef_uncapped(
    kind: TableKind,
    b: (i64, i64),
    _ch: &ChargeAssignment,
    lambda: &Rational,
) -> OperatorExpr {
    let (k, l) = b;
    match kind {
        TableKind::StdV => OperatorExpr::scaled(gi(-2 * k), OperatorExpr::mul_var_or_one(vvar(kind, k, l))),
        TableKind::Repol => OperatorExpr::zero(),
        TableKind::LambdaX => {
            OperatorExpr::scaled(gi(-2 * k), OperatorExpr::MulVar(VarLabel::x(k, l)))
        }
        TableKind::Modified => OperatorExpr::scaled(
            &GaussianRational::from_rational(lambda.clone()) * &delta_k(k, l),
            OperatorExpr::MulVar(VarLabel::x(-k, -l)),
        ),
    }
}

pub fn pz_coef_capped(
    kind: TableKind,
    b: (i64, i64),
    ch: &ChargeAssignment,
    lambda: &Rational,
) -> OperatorExpr {
    let (k, l) = b;
    match kind {
        TableKind::StdV => OperatorExpr::Scalar(delta_theta_hat(ch, k, l)),
        TableKind::Repol => OperatorExpr::add(vec![
            OperatorExpr::scaled(gi(-2 * l), OperatorExpr::diff_or_one(vvar(kind, k, l))),
            OperatorExpr::Scalar(delta_theta_hat(ch, k, l)),
        ]),
        TableKind::LambdaX => {
            let mut terms = Vec::new();
            if k == 0 && l == 0 {
                terms.push(OperatorExpr::scaled(
                    gr(2),
                    OperatorExpr::Diff(VarLabel::x(0, 0)),
                ));
            }
            terms.push(OperatorExpr::scaled(
                &GaussianRational::from_rational(lambda.clone()) * &delta_p(k, l),
                OperatorExpr::Diff(VarLabel::x(-k, -l)),
            ));
            OperatorExpr::add(terms)
        }
        TableKind::Modified => {
            let mut terms = vec![OperatorExpr::scaled(
                gi(-2 * l),
                OperatorExpr::Diff(VarLabel::x(k, l)),
            )];
            if k == 0 && l == 0 {
                terms.push(OperatorExpr::scaled(gr(2), OperatorExpr::Diff(VarLabel::x(0, 0))));
            }
            OperatorExpr::add(terms)
        }
    }
}

pub fn pz_coef_uncapped(
    kind: TableKind,
    b: (i64, i64),
    _ch: &ChargeAssignment,
    lambda: &Rational,
) -> OperatorExpr {
    let (k, l) = b;
    match kind {
        TableKind::StdV => OperatorExpr::scaled(gi(2 * l), OperatorExpr::mul_var_or_one(vvar(kind, k, l))),
        TableKind::Repol => OperatorExpr::zero(),
        TableKind::LambdaX => {
            OperatorExpr::scaled(gi(2 * l), OperatorExpr::MulVar(VarLabel::x(k, l)))
        }
        TableKind::Modified => OperatorExpr::scaled(
            &GaussianRational::from_rational(lambda.clone()) * &delta_p(k, l),
            OperatorExpr::MulVar(VarLabel::x(-k, -l)),
        ),
    }
}

pub fn kz_coef(
    kind: TableKind,
    b: (i64, i64),
    ch: &ChargeAssignment,
    lambda: &Rational,
) -> OperatorExpr {
    OperatorExpr::add(vec![
        kz_coef_capped(kind, b, ch, lambda),
        kz_coef_uncapped(kind, b, ch, lambda),
    ])
}

pub fn pz_coef(
    kind: TableKind,
    b: (i64, i64),
    ch: &ChargeAssignment,
    lambda: &Rational,
) -> OperatorExpr {
    OperatorExpr::add(vec![
        pz_coef_capped(kind, b, ch, lambda),
        pz_coef_uncapped(kind, b, ch, lambda),
    ])
}

/// `true` when the kind's `Kz`/`Pz` coefficients contain a pure
/// multiplication whose convolution index nothing caps.
pub fn has_uncapped_mult(kind: TableKind) -> bool {
    !matches!(kind, TableKind::Repol)
}

/// Candidate mode pairs at which `kz_coef_capped` can act on `p`.
pub fn kz_probe(kind: TableKind, p: &Polynomial, ch: &ChargeAssignment) -> Vec<(i64, i64)> {
    let mut out = kz_charge_indices(ch);
    match kind {
        TableKind::StdV => {}
        TableKind::Repol => out.extend(family_indices(p, VarFamily::V)),
        TableKind::LambdaX | TableKind::Modified => {
            out.push((0, 0));
            out.extend(family_indices(p, VarFamily::X).into_iter().map(|(m, n)| (-m, -n)));
            if kind == TableKind::Modified {
                out.extend(family_indices(p, VarFamily::X));
            }
        }
    }
    out
}

pub fn pz_probe(kind: TableKind, p: &Polynomial, ch: &ChargeAssignment) -> Vec<(i64, i64)> {
    let mut out = pz_charge_indices(ch);
    match kind {
        TableKind::StdV => {}
        TableKind::Repol => out.extend(family_indices(p, VarFamily::V)),
        TableKind::LambdaX | TableKind::Modified => {
            out.push((0, 0));
            out.extend(family_indices(p, VarFamily::X).into_iter().map(|(m, n)| (-m, -n)));
            if kind == TableKind::Modified {
                out.extend(family_indices(p, VarFamily::X));
            }
        }
    }
    out
}

/// The `Jz` coefficient at modes `b`: `Δ^Ê`-weighted vacuum factor.
pub(crate) fn jz_coef(kind: TableKind, b: (i64, i64), ch: &ChargeAssignment) -> OperatorExpr {
    let (k, l) = b;
    match kind {
        TableKind::StdV => OperatorExpr::scaled(
            delta_e_hat(ch, k, l),
            OperatorExpr::diff_or_one(vvar(kind, -k, -l)),
        ),
        TableKind::Repol => OperatorExpr::scaled(
            delta_e_hat(ch, k, l),
            OperatorExpr::mul_var_or_one(vvar(kind, -k, -l)),
        ),
        TableKind::LambdaX => {
            if k == 0 && l == 0 {
                OperatorExpr::zero()
            } else {
                OperatorExpr::scaled(gr(2), OperatorExpr::Diff(VarLabel::x(-k, -l)))
            }
        }
        TableKind::Modified => {
            if k == 0 && l == 0 {
                OperatorExpr::zero()
            } else {
                OperatorExpr::scaled(gr(2), OperatorExpr::MulVar(VarLabel::x(-k, -l)))
            }
        }
    }
}

fn var_of(fam: VarFamily, m: i64, n: i64) -> VarLabel {
    VarLabel::two_indexed(fam, m, n).expect("j/k/p/x labels always exist")
}

/// `E_{X,Y}(k,l) = Σ_{mn} −2 x_{(k+m)(l+n)} ∂/∂y_{mn}`.
pub fn e_pair(xf: VarFamily, yf: VarFamily, k: i64, l: i64) -> OperatorExpr {
    let name = format!("E_{{{},{}}}({},{})", xf.name(), yf.name(), k, l);
    let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> = Arc::new(move |idx| {
        let (m, n) = (idx[0], idx[1]);
        OperatorExpr::Compose(vec![
            OperatorExpr::Scalar(gr(-2)),
            OperatorExpr::MulVar(var_of(xf, k + m, l + n)),
            OperatorExpr::Diff(var_of(yf, m, n)),
        ])
    });
    let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
        Arc::new(move |p| {
            Ok(family_indices(p, yf)
                .into_iter()
                .map(|(m, n)| vec![m, n])
                .collect())
        });
    OperatorExpr::Sum(Box::new(SumFamily::new(name, 2, Bound::Probe(probe), term)))
}

/// `E_{X,YZ}(k,l) = Σ_{mn,rs} −2 x_{(k+m+r)(l+n+s)} ∂/∂y_{mn} ∂/∂z_{rs}`,
/// optionally halved.
pub fn e_triple(
    xf: VarFamily,
    yf: VarFamily,
    zf: VarFamily,
    k: i64,
    l: i64,
    half: bool,
) -> OperatorExpr {
    let name = format!("E_{{{},{}{}}}({},{})", xf.name(), yf.name(), zf.name(), k, l);
    let coeff = if half {
        GaussianRational::from_rational(Rational::new(-1, 1))
    } else {
        gr(-2)
    };
    let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> = Arc::new(move |idx| {
        let (m, n, r, s) = (idx[0], idx[1], idx[2], idx[3]);
        OperatorExpr::Compose(vec![
            OperatorExpr::Scalar(coeff.clone()),
            OperatorExpr::MulVar(var_of(xf, k + m + r, l + n + s)),
            OperatorExpr::Diff(var_of(yf, m, n)),
            OperatorExpr::Diff(var_of(zf, r, s)),
        ])
    });
    let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
        Arc::new(move |p| {
            let ys = family_indices(p, yf);
            let zs = family_indices(p, zf);
            let mut out = Vec::with_capacity(ys.len() * zs.len());
            for (m, n) in &ys {
                for (r, s) in &zs {
                    out.push(vec![*m, *n, *r, *s]);
                }
            }
            Ok(out)
        });
    OperatorExpr::Sum(Box::new(SumFamily::new(name, 4, Bound::Probe(probe), term)))
}

/// A middle sum `Σ_{mn} C_{(k+m)(l+n)} ∘ ∂/∂(target)_{mn}` where the
/// coefficient may include the mode-shifted central correction.
fn coef_diff_sum(
    name: String,
    target: VarFamily,
    coef: Arc<dyn Fn(i64, i64) -> OperatorExpr + Send + Sync>,
) -> OperatorExpr {
    let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> = Arc::new(move |idx| {
        let (m, n) = (idx[0], idx[1]);
        OperatorExpr::Compose(vec![coef(m, n), OperatorExpr::Diff(var_of(target, m, n))])
    });
    let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
        Arc::new(move |p| {
            Ok(family_indices(p, target)
                .into_iter()
                .map(|(m, n)| vec![m, n])
                .collect())
        });
    OperatorExpr::Sum(Box::new(SumFamily::new(name, 2, Bound::Probe(probe), term)))
}

/// The ladder-generator images. `ch` must be the context's assignment
/// and `lambda` its cosmological constant.
pub(crate) fn ladder_op(
    kind: TableKind,
    symbol: Symbol,
    k: i64,
    l: i64,
    ch: &ChargeAssignment,
    lambda: &Rational,
) -> Result<OperatorExpr, FockError> {
    use VarFamily::{J, K, P};
    let ch = ch.clone();
    let lam = lambda.clone();
    let e_kk_sign = if kind == TableKind::Modified { gr(-1) } else { gr(1) };
    Ok(match symbol {
        Symbol::Z => OperatorExpr::Scalar(ch.chi_z().clone()),
        Symbol::JMinus => OperatorExpr::MulVar(var_of(J, k, l)),
        Symbol::PMinus => OperatorExpr::MulVar(var_of(P, k, l)),
        Symbol::KMinus => {
            if kind == TableKind::Modified {
                OperatorExpr::scaled(gr(-1), OperatorExpr::Diff(var_of(K, -k, -l)))
            } else {
                OperatorExpr::MulVar(var_of(K, k, l))
            }
        }
        Symbol::JZ => OperatorExpr::add(vec![
            jz_coef(kind, (k, l), &ch),
            e_pair(J, J, k, l),
            OperatorExpr::scaled(e_kk_sign, e_pair(K, K, k, l)),
            e_pair(P, P, k, l),
        ]),
        Symbol::KZ => {
            let tail = if kind == TableKind::Modified {
                // Σ 2 ∂/∂k_{(-k-m)(-l-n)} ∂/∂j_{mn}
                let (kk, ll) = (k, l);
                coef_diff_sum(
                    format!("Kz.modified.dkdj({k},{l})"),
                    J,
                    Arc::new(move |m, n| {
                        OperatorExpr::scaled(
                            gr(2),
                            OperatorExpr::Diff(var_of(K, -kk - m, -ll - n)),
                        )
                    }),
                )
            } else {
                e_pair(K, J, k, l)
            };
            OperatorExpr::add(vec![kz_coef(kind, (k, l), &ch, &lam), tail])
        }
        Symbol::PZ => OperatorExpr::add(vec![
            pz_coef(kind, (k, l), &ch, &lam),
            e_pair(P, J, k, l),
        ]),
        Symbol::JPlus => {
            let mut terms = Vec::new();
            // Δ^Ê-weighted vacuum factor against ∂j
            {
                let chc = ch.clone();
                terms.push(coef_diff_sum(
                    format!("Jplus.jzcoef({k},{l})"),
                    J,
                    Arc::new(move |m, n| jz_coef(kind, (k + m, l + n), &chc)),
                ));
            }
            // Kz coefficient (plus central correction) against the K target
            if kind == TableKind::Modified {
                let chc = ch.clone();
                let lamc = lam.clone();
                // capped part: ∂x and delta terms compose with k-multiplication
                let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> =
                    Arc::new(move |idx| {
                        let (m, n) = (idx[0], idx[1]);
                        let coef = OperatorExpr::add(vec![
                            kz_coef_capped(TableKind::Modified, (k + m, l + n), &chc, &lamc),
                            OperatorExpr::Scalar(if k + m == 0 && l + n == 0 {
                                gi(-2 * m)
                            } else {
                                GaussianRational::zero()
                            }),
                        ]);
                        OperatorExpr::Compose(vec![coef, OperatorExpr::MulVar(var_of(K, -m, -n))])
                    });
                let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
                    Arc::new(move |p| {
                        let mut out = vec![vec![-k, -l]];
                        for (a, b) in family_indices(p, VarFamily::X) {
                            out.push(vec![a - k, b - l]);
                        }
                        Ok(out)
                    });
                terms.push(OperatorExpr::Sum(Box::new(SumFamily::new(
                    format!("Jplus.modified.capped({k},{l})"),
                    2,
                    Bound::Probe(probe),
                    term,
                ))));
                // divergent part: Λ Δ^K x-multiplication against k-multiplication
                let chc = ch.clone();
                let lamc = lam.clone();
                let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> =
                    Arc::new(move |idx| {
                        let (m, n) = (idx[0], idx[1]);
                        OperatorExpr::Compose(vec![
                            kz_coef_uncapped(TableKind::Modified, (k + m, l + n), &chc, &lamc),
                            OperatorExpr::MulVar(var_of(K, -m, -n)),
                        ])
                    });
                terms.push(OperatorExpr::Sum(Box::new(SumFamily::new(
                    format!("Jplus.modified.deltaK-xk({k},{l})"),
                    2,
                    Bound::Divergent,
                    term,
                ))));
            } else {
                let chc = ch.clone();
                let lamc = lam.clone();
                terms.push(coef_diff_sum(
                    format!("Jplus.kzcoef({k},{l})"),
                    K,
                    Arc::new(move |m, n| {
                        OperatorExpr::add(vec![
                            kz_coef(kind, (k + m, l + n), &chc, &lamc),
                            OperatorExpr::Scalar(if k + m == 0 && l + n == 0 {
                                gi(-2 * m)
                            } else {
                                GaussianRational::zero()
                            }),
                        ])
                    }),
                ));
            }
            // Pz coefficient (plus central correction) against ∂p
            {
                let chc = ch.clone();
                let lamc = lam.clone();
                terms.push(coef_diff_sum(
                    format!("Jplus.pzcoef({k},{l})"),
                    P,
                    Arc::new(move |m, n| {
                        OperatorExpr::add(vec![
                            pz_coef(kind, (k + m, l + n), &chc, &lamc),
                            OperatorExpr::Scalar(if k + m == 0 && l + n == 0 {
                                gi(2 * n)
                            } else {
                                GaussianRational::zero()
                            }),
                        ])
                    }),
                ));
            }
            terms.push(e_triple(J, J, J, k, l, true));
            terms.push(OperatorExpr::scaled(e_kk_sign, e_triple(K, K, J, k, l, false)));
            terms.push(e_triple(P, P, J, k, l, false));
            OperatorExpr::add(terms)
        }
        Symbol::KPlus => {
            let mut terms = Vec::new();
            if !lam.is_zero() {
                terms.push(OperatorExpr::scaled(
                    GaussianRational::from_rational(lam.neg()).scale(&Rational::from_int(2)),
                    OperatorExpr::Diff(var_of(P, -k, -l)),
                ));
            }
            let chc = ch.clone();
            let lamc = lam.clone();
            terms.push(coef_diff_sum(
                format!("Kplus.kzcoef({k},{l})"),
                J,
                Arc::new(move |m, n| {
                    OperatorExpr::add(vec![
                        kz_coef(kind, (k + m, l + n), &chc, &lamc),
                        OperatorExpr::Scalar(if k + m == 0 && l + n == 0 {
                            gi(-2 * m)
                        } else {
                            GaussianRational::zero()
                        }),
                    ])
                }),
            ));
            if kind == TableKind::Modified {
                // ½ Σ_{mn,rs} 2 ∂k_{(-k-m-r)(-l-n-s)} ∂j_{rs} ∂j_{mn}
                let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> =
                    Arc::new(move |idx| {
                        let (m, n, r, s) = (idx[0], idx[1], idx[2], idx[3]);
                        OperatorExpr::Compose(vec![
                            OperatorExpr::Diff(var_of(K, -k - m - r, -l - n - s)),
                            OperatorExpr::Diff(var_of(J, r, s)),
                            OperatorExpr::Diff(var_of(J, m, n)),
                        ])
                    });
                let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
                    Arc::new(move |p| {
                        let js = family_indices(p, VarFamily::J);
                        let mut out = Vec::new();
                        for (m, n) in &js {
                            for (r, s) in &js {
                                out.push(vec![*m, *n, *r, *s]);
                            }
                        }
                        Ok(out)
                    });
                terms.push(OperatorExpr::Sum(Box::new(SumFamily::new(
                    format!("Kplus.modified.dkdjdj({k},{l})"),
                    4,
                    Bound::Probe(probe),
                    term,
                ))));
            } else {
                terms.push(e_triple(K, J, J, k, l, true));
            }
            OperatorExpr::add(terms)
        }
        Symbol::PPlus => {
            let mut terms = Vec::new();
            if !lam.is_zero() {
                let two_lam =
                    GaussianRational::from_rational(lam.clone()).scale(&Rational::from_int(2));
                if kind == TableKind::Modified {
                    terms.push(OperatorExpr::scaled(
                        two_lam,
                        OperatorExpr::MulVar(var_of(K, k, l)),
                    ));
                } else {
                    terms.push(OperatorExpr::scaled(
                        two_lam,
                        OperatorExpr::Diff(var_of(K, -k, -l)),
                    ));
                }
            }
            let chc = ch.clone();
            let lamc = lam.clone();
            terms.push(coef_diff_sum(
                format!("Pplus.pzcoef({k},{l})"),
                J,
                Arc::new(move |m, n| {
                    OperatorExpr::add(vec![
                        pz_coef(kind, (k + m, l + n), &chc, &lamc),
                        OperatorExpr::Scalar(if k + m == 0 && l + n == 0 {
                            gi(2 * n)
                        } else {
                            GaussianRational::zero()
                        }),
                    ])
                }),
            ));
            terms.push(e_triple(P, J, J, k, l, true));
            OperatorExpr::add(terms)
        }
        _ => {
            return Err(FockError::UnknownLabel(format!(
                "{} is not a ladder symbol",
                symbol.name()
            )))
        }
    })
}

/// The abelian oscillator Fock action. Creation operators multiply by
/// the paired variable and annihilation operators act as `iχ_Z ∂`, so
/// the commutator reproduces `[x, x†] = iZ` exactly.
fn abelian_op(label: &GeneratorLabel, ctx: &RepContext) -> Result<OperatorExpr, FockError> {
    if label.algebra != AlgebraKind::OscillatorForm {
        return Err(FockError::UnknownLabel(format!(
            "abelian context expects oscillator-form labels, got {label}"
        )));
    }
    let ch = &ctx.charges;
    let i_chi = &GaussianRational::i() * ch.chi_z();
    let pair_var = |m: i64, n: i64| -> Result<VarLabel, FockError> {
        if ctx.lambda.is_zero() {
            VarLabel::v(m, n).ok_or_else(|| {
                FockError::UnknownLabel("oscillator pair at modes (0,0)".into())
            })
        } else {
            Ok(VarLabel::x(m, n))
        }
    };
    let lz = ctx.lambda.is_zero();
    Ok(match (label.symbol, label.modes, lz) {
        (Symbol::Z, _, _) => OperatorExpr::Scalar(ch.chi_z().clone()),
        (Symbol::OscADag, Modes::One(l), true) => OperatorExpr::MulVar(pair_var(0, l)?),
        (Symbol::OscA, Modes::One(l), true) => {
            OperatorExpr::scaled(i_chi, OperatorExpr::Diff(pair_var(0, l)?))
        }
        (Symbol::OscBDag, Modes::One(k), true) => OperatorExpr::MulVar(pair_var(k, 0)?),
        (Symbol::OscB, Modes::One(k), true) => {
            OperatorExpr::scaled(i_chi, OperatorExpr::Diff(pair_var(k, 0)?))
        }
        (Symbol::OscCDag, Modes::Two(k, l), true) => OperatorExpr::MulVar(pair_var(k, l)?),
        (Symbol::OscC, Modes::Two(k, l), true) => {
            OperatorExpr::scaled(i_chi, OperatorExpr::Diff(pair_var(k, l)?))
        }
        (Symbol::OscUDag, Modes::One(l), false) => OperatorExpr::MulVar(pair_var(0, l)?),
        (Symbol::OscU, Modes::One(l), false) => {
            OperatorExpr::scaled(i_chi, OperatorExpr::Diff(pair_var(0, l)?))
        }
        (Symbol::OscVDag, Modes::One(k), false) => OperatorExpr::MulVar(pair_var(k, 0)?),
        (Symbol::OscV, Modes::One(k), false) => {
            OperatorExpr::scaled(i_chi, OperatorExpr::Diff(pair_var(k, 0)?))
        }
        (Symbol::OscWDag, Modes::Two(k, l), false) => OperatorExpr::MulVar(pair_var(k, l)?),
        (Symbol::OscW, Modes::Two(k, l), false) => {
            OperatorExpr::scaled(i_chi, OperatorExpr::Diff(pair_var(k, l)?))
        }
        (Symbol::PhiBar, _, false) => OperatorExpr::MulVar(VarLabel::x(0, 0)),
        (Symbol::ThetaBar, _, false) => {
            OperatorExpr::scaled(i_chi, OperatorExpr::Diff(VarLabel::x(0, 0)))
        }
        (Symbol::FMinus, _, true)
        | (Symbol::PhiHat, _, true)
        | (Symbol::ThetaHat, _, true)
        | (Symbol::EHat, _, _)
        | (Symbol::UHat, _, false)
        | (Symbol::VHat, _, false)
        | (Symbol::WHat, _, false) => OperatorExpr::Scalar(ch.chi(label)),
        _ => {
            return Err(FockError::UnknownLabel(format!(
                "{label} does not belong to this Λ-sector"
            )))
        }
    })
}

/// The operator representing one generator in the given context.
pub fn rep_op(label: &GeneratorLabel, ctx: &RepContext) -> Result<OperatorExpr, FockError> {
    match ctx.algebra {
        RepAlgebra::AbelianOscillator => abelian_op(label, ctx),
        RepAlgebra::NonAbelian => match label.algebra {
            AlgebraKind::NonAbelianLadder => {
                let kind = ctx.table_kind()?;
                let (k, l) = if label.symbol == Symbol::Z {
                    (0, 0)
                } else {
                    label.mode_pair().map_err(FockError::Lie)?
                };
                ladder_op(kind, label.symbol, k, l, &ctx.charges, &ctx.lambda)
            }
            AlgebraKind::NonAbelian => {
                // Cartesian generators act through the ladder images
                let ladder = na::to_ladder_label(label).map_err(FockError::Lie)?;
                element_op(&ladder, ctx)
            }
            _ => Err(FockError::UnknownLabel(format!(
                "nonabelian context expects ladder or Cartesian labels, got {label}"
            ))),
        },
    }
}

/// Linear extension of [`rep_op`] to algebra elements.
pub fn element_op(e: &AlgebraElement, ctx: &RepContext) -> Result<OperatorExpr, FockError> {
    let mut terms = Vec::new();
    for (l, c) in e.terms() {
        terms.push(OperatorExpr::scaled(c.clone(), rep_op(l, ctx)?));
    }
    Ok(OperatorExpr::add(terms))
}

/// `ρ(x)ρ(y)p − ρ(y)ρ(x)p − ρ([x,y])p`: zero for a representation.
pub fn rep_commutator_defect(
    x: &GeneratorLabel,
    y: &GeneratorLabel,
    p: &Polynomial,
    ctx: &RepContext,
    table: &BracketTable,
    cfg: &EvalConfig,
) -> Result<Polynomial, FockError> {
    let ox = rep_op(x, ctx)?;
    let oy = rep_op(y, ctx)?;
    let mut out = op_apply(&ox, &op_apply(&oy, p, cfg)?, cfg)?;
    out = out.sub(&op_apply(&oy, &op_apply(&ox, p, cfg)?, cfg)?);
    let b = bracket(
        &AlgebraElement::generator(*x),
        &AlgebraElement::generator(*y),
        table,
    )
    .map_err(FockError::Lie)?;
    if !b.is_zero() {
        let ob = element_op(&b, ctx)?;
        out = out.sub(&op_apply(&ob, p, cfg)?);
    }
    Ok(out)
}

/// A failed commutator check, with the inputs that produced it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DefectWitness {
    pub x: String,
    pub y: String,
    pub input: String,
    pub defect: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SweepOutcome {
    pub pairs_checked: usize,
    pub defects_found: usize,
    pub witnesses: Vec<DefectWitness>,
}

/// Exhaustive commutator-defect sweep over unordered generator pairs
/// and the given inputs. Generator images and their applications to
/// the inputs are computed once; brackets whose support stays inside
/// `lookup_gens` reuse the precomputed applications. Runs on up to
/// `threads` worker threads; at most `max_witnesses` failures are kept
/// per worker.
pub fn defect_sweep(
    ctx: &RepContext,
    pair_gens: &[GeneratorLabel],
    lookup_gens: &[GeneratorLabel],
    monomials: &[Polynomial],
    cfg: &EvalConfig,
    threads: usize,
    max_witnesses: usize,
) -> Result<SweepOutcome, FockError> {
    use std::collections::HashMap;

    let table = ctx.bracket_table();
    let mut index: HashMap<GeneratorLabel, usize> = HashMap::new();
    let mut all_gens: Vec<GeneratorLabel> = Vec::new();
    for g in lookup_gens.iter().chain(pair_gens.iter()) {
        if !index.contains_key(g) {
            index.insert(*g, all_gens.len());
            all_gens.push(*g);
        }
    }
    let ops: Vec<OperatorExpr> = all_gens
        .iter()
        .map(|g| rep_op(g, ctx))
        .collect::<Result<_, _>>()?;

    // applied[g][m] = ρ(g)·monomial_m
    let mut applied: Vec<Vec<Polynomial>> = Vec::with_capacity(all_gens.len());
    for op in &ops {
        let mut row = Vec::with_capacity(monomials.len());
        for m in monomials {
            row.push(op_apply(op, m, cfg)?);
        }
        applied.push(row);
    }

    let mut pair_ids: Vec<(usize, usize)> = Vec::new();
    for (a, x) in pair_gens.iter().enumerate() {
        for y in pair_gens.iter().skip(a + 1) {
            pair_ids.push((index[x], index[y]));
        }
    }

    let threads = threads.max(1);
    let chunk = pair_ids.len().div_ceil(threads).max(1);
    let applied = &applied;
    let ops = &ops;
    let all_gens = &all_gens;
    let index = &index;
    let table = &table;

    let results: Vec<Result<(usize, Vec<DefectWitness>), FockError>> =
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for part in pair_ids.chunks(chunk) {
                handles.push(scope.spawn(move || {
                    let mut checked = 0usize;
                    let mut witnesses = Vec::new();
                    for &(i, j) in part {
                        let b = bracket(
                            &AlgebraElement::generator(all_gens[i]),
                            &AlgebraElement::generator(all_gens[j]),
                            table,
                        )
                        .map_err(FockError::Lie)?;
                        // bracket image per input, via lookup when possible
                        let bracket_apply = |mi: usize, p: &Polynomial| -> Result<Polynomial, FockError> {
                            let mut out = Polynomial::zero();
                            for (g, c) in b.terms() {
                                match index.get(g) {
                                    Some(&gi) => out.add_assign(&applied[gi][mi].scale(c)),
                                    None => {
                                        let og = rep_op(g, ctx)?;
                                        out.add_assign(&op_apply(&og, p, cfg)?.scale(c));
                                    }
                                }
                            }
                            Ok(out)
                        };
                        for (mi, p) in monomials.iter().enumerate() {
                            let mut d = op_apply(&ops[i], &applied[j][mi], cfg)?;
                            d = d.sub(&op_apply(&ops[j], &applied[i][mi], cfg)?);
                            if !b.is_zero() {
                                d = d.sub(&bracket_apply(mi, p)?);
                            }
                            checked += 1;
                            if !d.is_zero() && witnesses.len() < max_witnesses {
                                witnesses.push(DefectWitness {
                                    x: all_gens[i].to_string(),
                                    y: all_gens[j].to_string(),
                                    input: p.to_string(),
                                    defect: d.to_string(),
                                });
                            }
                        }
                    }
                    Ok((checked, witnesses))
                }));
            }
            handles.into_iter().map(|h| h.join().expect("worker")).collect()
        });

    let mut pairs_checked = 0;
    let mut witnesses = Vec::new();
    for r in results {
        let (c, mut w) = r?;
        pairs_checked += c;
        witnesses.append(&mut w);
    }
    Ok(SweepOutcome {
        pairs_checked,
        defects_found: witnesses.len(),
        witnesses,
    })
}

/// The number operator `N = −½ Jz_{0,0} − i χ_Ê` applied to `p`. For a
/// monomial in the standard polarizations this returns the raising
/// degree (the total degree in `j`, `k`, `p`) times the monomial.
pub fn number_op_apply(p: &Polynomial, ctx: &RepContext) -> Result<Polynomial, FockError> {
    if ctx.algebra != RepAlgebra::NonAbelian {
        return Err(FockError::BadContext(
            "the number operator lives on the induced modules".into(),
        ));
    }
    let jz = rep_op(
        &na::ladder(Symbol::JZ, 0, 0),
        ctx,
    )?;
    let half_neg = GaussianRational::from_rational(Rational::new(-1, 2));
    let mut out = op_apply(&jz, p, &EvalConfig::exact())?.scale(&half_neg);
    let chi_e = ctx.charges.chi(&torus::e_hat());
    let shift = &GaussianRational::i() * &chi_e;
    out.add_assign(&p.scale(&shift).neg());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use corner_exact::VarLabel;

    #[test]
    fn context_validation() {
        let zero = Rational::zero();
        let one = Rational::one();
        // sector mismatch between charges and Λ
        assert!(RepContext::abelian(one.clone(), ChargeAssignment::new(&zero)).is_err());
        // Λ = 0 induced modules pin χ_Z = 1
        let mut ch = ChargeAssignment::new(&zero);
        ch.set_chi_z(GaussianRational::from_int(3));
        assert!(RepContext::nonabelian_lambda0(ch, Polarization::Standard).is_err());
        // no repolarized table at Λ ≠ 0, no modified table at Λ = 0
        assert!(RepContext::nonabelian_lambda(one, Polarization::Repolarized).is_err());
        assert!(RepContext::nonabelian_lambda0(
            ChargeAssignment::new(&zero),
            Polarization::ModifiedLambda
        )
        .is_err());
    }

    #[test]
    fn e_pair_golden() {
        // E_{K,J}(0,0) applied to j_{1,1} is −2 k_{1,1}
        let op = e_pair(VarFamily::K, VarFamily::J, 0, 0);
        let p = Polynomial::var(VarLabel::j(1, 1));
        let out = op_apply(&op, &p, &EvalConfig::exact()).unwrap();
        assert_eq!(
            out,
            Polynomial::var(VarLabel::k(1, 1)).scale(&GaussianRational::from_int(-2))
        );
    }

    #[test]
    fn ladder_op_goldens() {
        let zero = Rational::zero();
        let ctx = RepContext::nonabelian_lambda0(
            ChargeAssignment::new(&zero),
            Polarization::Standard,
        )
        .unwrap();
        let cfg = EvalConfig::exact();
        // J⁻_{2,3} acts by multiplication with j_{2,3}
        let op = rep_op(&na::ladder(Symbol::JMinus, 2, 3), &ctx).unwrap();
        let out = op_apply(&op, &Polynomial::one(), &cfg).unwrap();
        assert_eq!(out, Polynomial::var(VarLabel::j(2, 3)));
        // Kz_{1,1} on the vacuum: −2i v_{1,1}
        let op = rep_op(&na::ladder(Symbol::KZ, 1, 1), &ctx).unwrap();
        let out = op_apply(&op, &Polynomial::one(), &cfg).unwrap();
        assert_eq!(
            out,
            Polynomial::var(VarLabel::v(1, 1).unwrap()).scale(&GaussianRational::int_i(-2))
        );
        // and on j_{1,1} the E_{K,J} tail contributes −2 k_{2,2} j-derivative
        let p = Polynomial::var(VarLabel::j(1, 1));
        let out = op_apply(&op, &p, &cfg).unwrap();
        let expect = p
            .mul_var(VarLabel::v(1, 1).unwrap())
            .scale(&GaussianRational::int_i(-2))
            .add(&Polynomial::var(VarLabel::k(2, 2)).scale(&GaussianRational::from_int(-2)));
        assert_eq!(out, expect);
    }
}
