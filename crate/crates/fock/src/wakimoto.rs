//! Free-field realization of affine sl(2) by first- and second-order
//! differential operators with normal-ordered mode sums, on the
//! polynomial spaces in the `wx` (and, for ν ≠ 0, `wy`) families.

use corner_exact::{GaussianRational, Polynomial, Rational, VarFamily, VarLabel};
use corner_lie::{GeneratorLabel, Modes, Symbol};
use std::sync::Arc;

use crate::op::{Bound, OperatorExpr, SumFamily};
use crate::FockError;

/// The two complex parameters of the free-field family. The `ν = 0`
/// branch acts on polynomials in the `wx` family alone.
#[derive(Clone, Debug)]
pub struct WakimotoContext {
    pub mu: GaussianRational,
    pub nu: GaussianRational,
}

impl WakimotoContext {
    pub fn new(mu: GaussianRational, nu: GaussianRational) -> Self {
        WakimotoContext { mu, nu }
    }

    /// The level: `Z ↦ −(2 + ν²/2)`.
    pub fn level(&self) -> GaussianRational {
        let nu_sq_half = (&self.nu * &self.nu).scale(&Rational::new(1, 2));
        -&(&GaussianRational::from_int(2) + &nu_sq_half)
    }
}

fn xv(j: i64) -> VarLabel {
    VarLabel::wx(j)
}

/// `a_j = x_j` for j ≥ 0, `−∂/∂x_j` for j < 0.
fn a_op(j: i64) -> OperatorExpr {
    if j >= 0 {
        OperatorExpr::MulVar(xv(j))
    } else {
        OperatorExpr::scaled(GaussianRational::from_int(-1), OperatorExpr::Diff(xv(j)))
    }
}

/// `a*_j = ∂/∂x_j` for j ≥ 0, `x_j` for j < 0.
fn astar_op(j: i64) -> OperatorExpr {
    if j >= 0 {
        OperatorExpr::Diff(xv(j))
    } else {
        OperatorExpr::MulVar(xv(j))
    }
}

/// `b_j = j·y_j` for j > 0, `0` at j = 0, `−∂/∂y_{−j}` for j < 0.
fn b_op(j: i64) -> OperatorExpr {
    if j > 0 {
        OperatorExpr::scaled(
            GaussianRational::from_int(j),
            OperatorExpr::MulVar(VarLabel::wy(j).expect("positive")),
        )
    } else if j == 0 {
        OperatorExpr::zero()
    } else {
        OperatorExpr::scaled(
            GaussianRational::from_int(-1),
            OperatorExpr::Diff(VarLabel::wy(-j).expect("positive")),
        )
    }
}

fn wx_support(p: &Polynomial) -> Vec<i64> {
    p.family_vars(VarFamily::Wx)
        .into_iter()
        .map(|v| v.indices()[0])
        .collect()
}

fn wy_support(p: &Polynomial) -> Vec<i64> {
    p.family_vars(VarFamily::Wy)
        .into_iter()
        .map(|v| v.indices()[0])
        .collect()
}

/// `E(m) = Σ_j :a_{j+m} a*_j:` with the normal-product correction
/// `:a_i a*_j: = a_i a*_j + Y₋(j) δ_{ij}` folded into each term.
pub(crate) fn e_mode(m: i64) -> OperatorExpr {
    let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> = Arc::new(move |idx| {
        let j = idx[0];
        let mut parts = vec![OperatorExpr::Compose(vec![a_op(j + m), astar_op(j)])];
        if j < 0 && m == 0 {
            parts.push(OperatorExpr::identity());
        }
        OperatorExpr::add(parts)
    });
    let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
        Arc::new(move |p| {
            let supp = wx_support(p);
            let mut out = Vec::new();
            for &s in &supp {
                out.push(vec![s]); // a*_j branch (∂x_j for j ≥ 0, x_j for j < 0)
                out.push(vec![s - m]); // a_{j+m} derivative branch
            }
            // pure-multiplication window: j in [-m, 0)
            for j in -m..0 {
                out.push(vec![j]);
            }
            Ok(out)
        });
    OperatorExpr::Sum(Box::new(SumFamily::new(
        format!("E({m})"),
        1,
        Bound::Probe(probe),
        term,
    )))
}

/// Trial conventions for the normal-ordered Y-sum, used to pin down
/// the summation domain and corrections against the bracket relations.
#[derive(Clone, Copy, Debug)]
pub struct YSumVariant {
    /// 0 = from 0, 1 = from 1, -1 = all of ℤ
    pub domain: i64,
    /// coefficient of the `Y₋(j) a*_n` correction
    pub cj: i64,
    /// coefficient of the `Y₋(j+n) a*_n` correction
    pub cjn: i64,
}

impl YSumVariant {
    /// The convention the bracket relations single out.
    pub fn standard() -> Self {
        YSumVariant {
            domain: -1,
            cj: 0,
            cjn: 1,
        }
    }
}

fn y_e_sum_variant(n: i64, v: YSumVariant) -> OperatorExpr {
    let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> = Arc::new(move |idx| {
        let j = idx[0];
        if v.domain >= 0 && j < v.domain {
            return OperatorExpr::zero();
        }
        let mut parts = vec![OperatorExpr::Compose(vec![e_mode(j), astar_op(j + n)])];
        if v.cj != 0 && j < 0 {
            parts.push(OperatorExpr::scaled(
                GaussianRational::from_int(v.cj),
                astar_op(n),
            ));
        }
        if v.cjn != 0 && j + n < 0 {
            parts.push(OperatorExpr::scaled(
                GaussianRational::from_int(v.cjn),
                astar_op(n),
            ));
        }
        OperatorExpr::add(parts)
    });
    let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
        Arc::new(move |p| {
            let bound = 2 * p.max_abs_index() + n.abs() + 3;
            Ok((-bound..=bound).map(|j| vec![j]).collect())
        });
    OperatorExpr::Sum(Box::new(SumFamily::new(
        format!("Y.esum({n})"),
        1,
        Bound::Probe(probe),
        term,
    )))
}

/// The Y(n)-sum `Σ_{j∈ℤ} :E(j) a*_{j+n}:`. Fully normal-ordered this
/// is the double sum `Σ_{v,t} :a_{v+t−n} a*_v a*_t:`, so each term
/// carries the correction `Y₋(j+n) a*_n` on top of `E(j)`'s interior
/// one; the corrections cancel the infinite tails term by term and a
/// support-derived box is a sound candidate set.
fn y_e_sum(n: i64) -> OperatorExpr {
    y_e_sum_variant(n, YSumVariant::standard())
}

/// The Y(n)-sum `Σ_{j∈ℤ} b_j a*_{j+n}`.
fn y_b_sum(n: i64) -> OperatorExpr {
    let term: Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync> = Arc::new(move |idx| {
        let j = idx[0];
        OperatorExpr::Compose(vec![b_op(j), astar_op(j + n)])
    });
    let probe: Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync> =
        Arc::new(move |p| {
            let mut out = Vec::new();
            for s in wx_support(p) {
                out.push(vec![s - n]); // ∂x_{j+n} branch
            }
            for j in 1..-n {
                out.push(vec![j]); // x_{j+n}-multiplication branch, j > 0
            }
            for s in wy_support(p) {
                out.push(vec![-s]); // b_j = −∂y_{−j} branch
            }
            Ok(out)
        });
    OperatorExpr::Sum(Box::new(SumFamily::new(
        format!("Y.bsum({n})"),
        1,
        Bound::Probe(probe),
        term,
    )))
}

/// [`wakimoto_op`] with an explicit Y-sum convention; used by the
/// tests that pin the convention down.
pub fn wakimoto_op_variant(
    gen: &GeneratorLabel,
    wc: &WakimotoContext,
    v: YSumVariant,
) -> Result<OperatorExpr, FockError> {
    if gen.symbol == Symbol::Y {
        let n = match gen.modes {
            Modes::One(n) => n,
            _ => return Err(FockError::UnknownLabel(gen.to_string())),
        };
        // μ − 1 + n·(level): the n-linear part is the level, not ν²/2
        // alone — the commutation relations force the 2.
        let coeff = &(&wc.mu - &GaussianRational::one())
            + &wc.level().scale(&Rational::from_int(n));
        let mut parts = vec![
            OperatorExpr::scaled(coeff, astar_op(n)),
            OperatorExpr::scaled(GaussianRational::from_int(-1), y_e_sum_variant(n, v)),
        ];
        if !wc.nu.is_zero() {
            parts.push(OperatorExpr::scaled(wc.nu.clone(), y_b_sum(n)));
        }
        return Ok(OperatorExpr::add(parts));
    }
    wakimoto_op(gen, wc)
}

/// The free-field image of an affine sl(2) generator:
/// `Z ↦ −(2 + ν²/2)`, `X(n) ↦ a_{−n}`,
/// `H(n) ↦ 2E(−n) − ν b_{−n} + (1−μ) δ_{n,0}`,
/// `Y(n) ↦ (μ−1−(2+ν²/2)n) a*_n − Σ_j :E(j)a*_{j+n}: + ν Σ_j b_j a*_{j+n}`.
pub fn wakimoto_op(gen: &GeneratorLabel, wc: &WakimotoContext) -> Result<OperatorExpr, FockError> {
    if gen.symbol == Symbol::Z {
        return Ok(OperatorExpr::Scalar(wc.level()));
    }
    let n = match gen.modes {
        Modes::One(n) => n,
        _ => return Err(FockError::UnknownLabel(gen.to_string())),
    };
    Ok(match gen.symbol {
        Symbol::X => a_op(-n),
        Symbol::H => {
            let mut parts = vec![OperatorExpr::Compose(vec![
                OperatorExpr::Scalar(GaussianRational::from_int(2)),
                e_mode(-n),
            ])];
            if !wc.nu.is_zero() {
                parts.push(OperatorExpr::scaled(-&wc.nu, b_op(-n)));
            }
            if n == 0 {
                parts.push(OperatorExpr::Scalar(&GaussianRational::one() - &wc.mu));
            }
            OperatorExpr::add(parts)
        }
        Symbol::Y => {
            let coeff = &(&wc.mu - &GaussianRational::one())
                + &wc.level().scale(&Rational::from_int(n));
            let mut parts = vec![
                OperatorExpr::scaled(coeff, astar_op(n)),
                OperatorExpr::scaled(GaussianRational::from_int(-1), y_e_sum(n)),
            ];
            if !wc.nu.is_zero() {
                parts.push(OperatorExpr::scaled(wc.nu.clone(), y_b_sum(n)));
            }
            OperatorExpr::add(parts)
        }
        _ => {
            return Err(FockError::UnknownLabel(format!(
                "{gen} is not an affine sl(2) generator"
            )))
        }
    })
}
