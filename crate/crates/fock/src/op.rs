//! Symbolic operators on sparse polynomials: variable multiplication,
//! differentiation, scalars, composition, and formally infinite sums
//! evaluated by support-driven summation.
//!
//! A `Sum` family carries a bound describing how the infinite index
//! set collapses to a finite one for a concrete input polynomial:
//! either an explicit delta-capped list, or a probe that inspects the
//! input's variable support (and may report that no finite set exists
//! for this input), or an unconditionally divergent marker. Divergent
//! sums can still be evaluated under an explicit index cutoff.

use corner_exact::{GaussianRational, Polynomial, VarLabel};
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::FockError;

/// Evaluation options; `cutoff = Some(M)` truncates divergent sums to
/// the box `[-M, M]^arity`.
#[derive(Clone, Copy, Debug, Default)]
pub struct EvalConfig {
    pub cutoff: Option<i64>,
}

impl EvalConfig {
    pub fn exact() -> Self {
        EvalConfig { cutoff: None }
    }

    pub fn truncated(m: i64) -> Self {
        EvalConfig { cutoff: Some(m) }
    }
}

type TermFn = Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync>;
type ProbeFn = Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync>;

/// How a sum family's index set collapses for a given input.
#[derive(Clone)]
pub enum Bound {
    /// Kronecker deltas cap the index set independently of the input.
    Delta(Vec<Vec<i64>>),
    /// A finite candidate superset computed from the input's support;
    /// `Err` means this input makes the family genuinely infinite.
    Probe(ProbeFn),
    /// No finite description: only a cutoff can evaluate this family.
    Divergent,
}

/// A formally infinite sum of operators indexed by `ℤ^arity`.
#[derive(Clone)]
pub struct SumFamily {
    pub name: String,
    pub arity: usize,
    pub term: TermFn,
    pub bound: Bound,
}

impl SumFamily {
    pub fn new(name: impl Into<String>, arity: usize, bound: Bound, term: TermFn) -> Self {
        SumFamily {
            name: name.into(),
            arity,
            bound,
            term,
        }
    }
}

/// A composable symbolic operator.
#[derive(Clone)]
pub enum OperatorExpr {
    /// `c · Id`; `Scalar(0)` is the zero operator.
    Scalar(GaussianRational),
    MulVar(VarLabel),
    Diff(VarLabel),
    Add(Vec<OperatorExpr>),
    /// Right-to-left: `Compose([a, b])` applies `b` first.
    Compose(Vec<OperatorExpr>),
    Sum(Box<SumFamily>),
}

impl OperatorExpr {
    pub fn zero() -> Self {
        OperatorExpr::Scalar(GaussianRational::zero())
    }

    pub fn identity() -> Self {
        OperatorExpr::Scalar(GaussianRational::one())
    }

    pub fn scaled(c: GaussianRational, op: OperatorExpr) -> Self {
        if c.is_zero() {
            return OperatorExpr::zero();
        }
        OperatorExpr::Compose(vec![OperatorExpr::Scalar(c), op])
    }

    pub fn add(terms: Vec<OperatorExpr>) -> Self {
        let mut kept: Vec<OperatorExpr> = terms
            .into_iter()
            .filter(|t| !matches!(t, OperatorExpr::Scalar(c) if c.is_zero()))
            .collect();
        match kept.len() {
            0 => OperatorExpr::zero(),
            1 => kept.pop().expect("one element"),
            _ => OperatorExpr::Add(kept),
        }
    }

    /// Variable multiplication with the `v_{0,0} ≡ 1` convention:
    /// `None` stands for the reserved label and collapses to the
    /// identity.
    pub fn mul_var_or_one(v: Option<VarLabel>) -> Self {
        match v {
            Some(v) => OperatorExpr::MulVar(v),
            None => OperatorExpr::identity(),
        }
    }

    /// Differentiation with the `∂/∂v_{0,0} ≡ 1` convention.
    pub fn diff_or_one(v: Option<VarLabel>) -> Self {
        match v {
            Some(v) => OperatorExpr::Diff(v),
            None => OperatorExpr::identity(),
        }
    }
}

fn box_indices(arity: usize, m: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut idx = vec![-m; arity];
    loop {
        out.push(idx.clone());
        let mut pos = 0;
        loop {
            if pos == arity {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] <= m {
                break;
            }
            idx[pos] = -m;
            pos += 1;
        }
    }
}

/// Applies `e` to `p` exactly. Support-driven sums enumerate only the
/// candidate indices their probe reports; a divergent family reachable
/// with possible effect raises [`FockError::DivergentAction`] unless a
/// cutoff is configured.
pub fn op_apply(
    e: &OperatorExpr,
    p: &Polynomial,
    cfg: &EvalConfig,
) -> Result<Polynomial, FockError> {
    match e {
        OperatorExpr::Scalar(c) => Ok(p.scale(c)),
        OperatorExpr::MulVar(v) => Ok(p.mul_var(*v)),
        OperatorExpr::Diff(v) => Ok(p.diff(v)),
        OperatorExpr::Add(terms) => {
            let mut out = Polynomial::zero();
            for t in terms {
                out.add_assign(&op_apply(t, p, cfg)?);
            }
            Ok(out)
        }
        OperatorExpr::Compose(factors) => {
            let mut acc = p.clone();
            for f in factors.iter().rev() {
                if acc.is_zero() {
                    return Ok(Polynomial::zero());
                }
                acc = op_apply(f, &acc, cfg)?;
            }
            Ok(acc)
        }
        OperatorExpr::Sum(fam) => {
            let indices: Vec<Vec<i64>> = match &fam.bound {
                Bound::Delta(list) => list.clone(),
                Bound::Probe(probe) => match probe(p) {
                    Ok(list) => {
                        let dedup: BTreeSet<Vec<i64>> = list.into_iter().collect();
                        dedup.into_iter().collect()
                    }
                    Err(reason) => match cfg.cutoff {
                        Some(m) => box_indices(fam.arity, m),
                        None => {
                            return Err(FockError::DivergentAction {
                                family: fam.name.clone(),
                                reason,
                            })
                        }
                    },
                },
                Bound::Divergent => match cfg.cutoff {
                    Some(m) => box_indices(fam.arity, m),
                    None => {
                        return Err(FockError::DivergentAction {
                            family: fam.name.clone(),
                            reason: "unconditionally divergent".into(),
                        })
                    }
                },
            };
            let mut out = Polynomial::zero();
            for idx in indices {
                let term = (fam.term)(&idx);
                out.add_assign(&op_apply(&term, p, cfg)?);
            }
            Ok(out)
        }
    }
}

/// Reference evaluator for the verification suites: ignores probes and
/// enumerates every sum family over the full box `[-radius, radius]^a`.
/// Independent of the support-driven path by construction.
pub fn naive_apply(e: &OperatorExpr, p: &Polynomial, radius: i64) -> Polynomial {
    match e {
        OperatorExpr::Scalar(c) => p.scale(c),
        OperatorExpr::MulVar(v) => p.mul_var(*v),
        OperatorExpr::Diff(v) => p.diff(v),
        OperatorExpr::Add(terms) => {
            let mut out = Polynomial::zero();
            for t in terms {
                out.add_assign(&naive_apply(t, p, radius));
            }
            out
        }
        OperatorExpr::Compose(factors) => {
            let mut acc = p.clone();
            for f in factors.iter().rev() {
                acc = naive_apply(f, &acc, radius);
            }
            acc
        }
        OperatorExpr::Sum(fam) => {
            let mut out = Polynomial::zero();
            for idx in box_indices(fam.arity, radius) {
                let term = (fam.term)(&idx);
                out.add_assign(&naive_apply(&term, p, radius));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use corner_exact::{Monomial, VarFamily};

    fn jvar(m: i64, n: i64) -> VarLabel {
        VarLabel::j(m, n)
    }

    #[test]
    fn euler_degree_operator() {
        // Σ_{mn} -2 j_{mn} ∂/∂j_{mn} applied to j_{1,2}² gives -4 j_{1,2}²
        let fam = SumFamily::new(
            "euler",
            2,
            Bound::Probe(Arc::new(|p: &Polynomial| {
                Ok(p.family_vars(VarFamily::J)
                    .into_iter()
                    .map(|v| v.indices())
                    .collect())
            })),
            Arc::new(|idx: &[i64]| {
                let v = jvar(idx[0], idx[1]);
                OperatorExpr::Compose(vec![
                    OperatorExpr::Scalar(GaussianRational::from_int(-2)),
                    OperatorExpr::MulVar(v),
                    OperatorExpr::Diff(v),
                ])
            }),
        );
        let op = OperatorExpr::Sum(Box::new(fam));
        let p = Polynomial::from_monomial(
            Monomial::from_pairs([(jvar(1, 2), 2)]),
            GaussianRational::one(),
        );
        let out = op_apply(&op, &p, &EvalConfig::exact()).unwrap();
        assert_eq!(out, p.scale(&GaussianRational::from_int(-4)));
        // and the naive evaluator agrees
        assert_eq!(naive_apply(&op, &p, 4), out);
    }

    #[test]
    fn divergent_without_cutoff_errors() {
        let fam = SumFamily::new(
            "all-mult",
            1,
            Bound::Divergent,
            Arc::new(|idx: &[i64]| OperatorExpr::MulVar(VarLabel::wx(idx[0]))),
        );
        let op = OperatorExpr::Sum(Box::new(fam));
        let p = Polynomial::one();
        let err = op_apply(&op, &p, &EvalConfig::exact()).unwrap_err();
        assert!(matches!(err, FockError::DivergentAction { .. }));
        // cutoff makes it a finite truncation
        let out = op_apply(&op, &p, &EvalConfig::truncated(1)).unwrap();
        assert_eq!(out.num_terms(), 3);
    }

    #[test]
    fn mul_var_or_one_identity_convention() {
        assert!(matches!(
            OperatorExpr::mul_var_or_one(VarLabel::v(0, 0)),
            OperatorExpr::Scalar(_)
        ));
        let p = Polynomial::var(VarLabel::x(1, 1));
        let id = OperatorExpr::diff_or_one(VarLabel::v(0, 0));
        assert_eq!(op_apply(&id, &p, &EvalConfig::exact()).unwrap(), p);
    }
}
