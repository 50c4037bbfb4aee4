//! Action of the quantized constraints on the induced modules.
//!
//! The quadratic part of a constraint is a convolution sum of ordered
//! generator pairs. Evaluated term by term it contains two infinite
//! families that cancel pairwise under a shift of the convolution
//! index (the `E`-type pieces of the paired operators), so the exact
//! evaluator works with the reduced families left after that
//! cancellation. What remains is support- and charge-capped in the
//! repolarized module; in the standard polarizations the coefficient
//! multiplications keep their free convolution index and the action is
//! divergent, which is reported unless an explicit cutoff is in force.

use corner_algebras::nonabelian::{ConstraintDescriptor, ConstraintVariant};
use corner_algebras::torus;
use corner_exact::{GaussianRational, Polynomial, Rational, VarFamily, VarLabel};
use serde::Serialize;
use std::sync::Arc;

use crate::op::{op_apply, Bound, EvalConfig, OperatorExpr, SumFamily};
use crate::rep::{self, Polarization, RepAlgebra, RepContext, TableKind};
use crate::FockError;

fn gi(n: i64) -> GaussianRational {
    GaussianRational::int_i(n)
}

fn jvar(m: i64, n: i64) -> VarLabel {
    VarLabel::j(m, n)
}

fn kvar(m: i64, n: i64) -> VarLabel {
    VarLabel::k(m, n)
}

fn pvar(m: i64, n: i64) -> VarLabel {
    VarLabel::p(m, n)
}

fn family_pairs(p: &Polynomial, fam: VarFamily) -> Vec<(i64, i64)> {
    p.family_vars(fam)
        .into_iter()
        .map(|v| {
            let idx = v.indices();
            (idx[0], idx[1])
        })
        .collect()
}

/// `W^K_B(a,b)`: the `Kz` coefficient at modes `B+(a,b)` plus the
/// central correction `−2ia δ_{B+(a,b),0}` carried by `K⁺`.
fn wk_coef(kind: TableKind, b: (i64, i64), ab: (i64, i64), ctx: &RepContext) -> OperatorExpr {
    let modes = (b.0 + ab.0, b.1 + ab.1);
    let mut parts = vec![rep::kz_coef(kind, modes, &ctx.charges, &ctx.lambda)];
    if modes == (0, 0) {
        parts.push(OperatorExpr::Scalar(gi(-2 * ab.0)));
    }
    OperatorExpr::add(parts)
}

/// `W^P_C(a,b)`: the `Pz` coefficient at `C+(a,b)` plus `+2ib δ`.
fn wp_coef(kind: TableKind, c: (i64, i64), ab: (i64, i64), ctx: &RepContext) -> OperatorExpr {
    let modes = (c.0 + ab.0, c.1 + ab.1);
    let mut parts = vec![rep::pz_coef(kind, modes, &ctx.charges, &ctx.lambda)];
    if modes == (0, 0) {
        parts.push(OperatorExpr::Scalar(gi(2 * ab.1)));
    }
    OperatorExpr::add(parts)
}

/// Mode arguments at which the capped parts of the `Kz` coefficient can
/// act, extended by `(0,0)` for the δ-corrections.
fn kz_core(kind: TableKind, p: &Polynomial, ctx: &RepContext) -> Vec<(i64, i64)> {
    let mut out = rep::kz_probe(kind, p, &ctx.charges);
    out.push((0, 0));
    out
}

fn pz_core(kind: TableKind, p: &Polynomial, ctx: &RepContext) -> Vec<(i64, i64)> {
    let mut out = rep::pz_probe(kind, p, &ctx.charges);
    out.push((0, 0));
    out
}

type Probe = Arc<dyn Fn(&Polynomial) -> Result<Vec<Vec<i64>>, String> + Send + Sync>;
type Term = Arc<dyn Fn(&[i64]) -> OperatorExpr + Send + Sync>;

fn sum_family(name: String, probe: Probe, term: Term) -> OperatorExpr {
    OperatorExpr::Sum(Box::new(SumFamily::new(name, 2, Bound::Probe(probe), term)))
}

fn j_index_probe() -> Probe {
    Arc::new(|p| {
        Ok(family_pairs(p, VarFamily::J)
            .into_iter()
            .map(|(m, n)| vec![m, n])
            .collect())
    })
}

/// Inner sum over the `∂j` index of the z-variant quadratic:
/// `Σ_{ab} [ W^P_C(ab) ∂j_{ab} k_B − p_C W^K_B(ab) ∂j_{ab} ]`.
fn z_inner(b: (i64, i64), r: i64, s: i64, kind: TableKind, ctx: &RepContext) -> OperatorExpr {
    let c = (r - b.0, s - b.1);
    let ctx = ctx.clone();
    let term: Term = Arc::new(move |idx| {
        let ab = (idx[0], idx[1]);
        let t1 = OperatorExpr::Compose(vec![
            wp_coef(kind, c, ab, &ctx),
            OperatorExpr::Diff(jvar(ab.0, ab.1)),
            OperatorExpr::MulVar(kvar(b.0, b.1)),
        ]);
        let t2 = OperatorExpr::Compose(vec![
            OperatorExpr::Scalar(GaussianRational::from_int(-1)),
            OperatorExpr::MulVar(pvar(c.0, c.1)),
            wk_coef(kind, b, ab, &ctx),
            OperatorExpr::Diff(jvar(ab.0, ab.1)),
        ]);
        OperatorExpr::add(vec![t1, t2])
    });
    sum_family(format!("fz.inner({},{})", b.0, b.1), j_index_probe(), term)
}

/// Reduced quadratic part of the constraint in the given context.
fn quadratic_op(d: &ConstraintDescriptor, ctx: &RepContext) -> Result<OperatorExpr, FockError> {
    let kind = ctx.table_kind()?;
    if kind == TableKind::Modified {
        return quadratic_naive(d, ctx);
    }
    let (r, s) = (d.r, d.s);
    let uncapped = rep::has_uncapped_mult(kind);
    let lambda = ctx.lambda.clone();
    let lam_nonzero = !lambda.is_zero();
    let half = GaussianRational::from_rational(Rational::new(1, 2));
    let mut families = Vec::new();

    match d.variant {
        ConstraintVariant::Z => {
            let ctxc = ctx.clone();
            let term: Term =
                Arc::new(move |idx| z_inner((idx[0], idx[1]), r, s, kind, &ctxc));
            let ctxc = ctx.clone();
            let probe: Probe = Arc::new(move |p| {
                let js = family_pairs(p, VarFamily::J);
                if js.is_empty() {
                    return Ok(vec![]);
                }
                if uncapped {
                    return Err("coefficient multiplication with free convolution index".into());
                }
                let mut out = Vec::new();
                for ab in &js {
                    for u in pz_core(kind, p, &ctxc) {
                        out.push(vec![r + ab.0 - u.0, s + ab.1 - u.1]);
                    }
                    for u in kz_core(kind, p, &ctxc) {
                        out.push(vec![u.0 - ab.0, u.1 - ab.1]);
                    }
                }
                Ok(out)
            });
            families.push(sum_family(format!("fz({r},{s}).main"), probe, term));
            if lam_nonzero {
                // 2Λ Σ_B ∂k_{B-(r,s)} ∘ k_B  (from P⁺'s ladder-lowering term)
                let two_lam =
                    GaussianRational::from_rational(lambda.clone()).scale(&Rational::from_int(2));
                let tl = two_lam.clone();
                let term: Term = Arc::new(move |idx| {
                    let b = (idx[0], idx[1]);
                    OperatorExpr::Compose(vec![
                        OperatorExpr::Scalar(tl.clone()),
                        OperatorExpr::Diff(kvar(b.0 - r, b.1 - s)),
                        OperatorExpr::MulVar(kvar(b.0, b.1)),
                    ])
                });
                let probe: Probe = Arc::new(move |p| {
                    if (r, s) == (0, 0) {
                        return Err("ordering ambiguity of the zero-mode z-constraint".into());
                    }
                    Ok(family_pairs(p, VarFamily::K)
                        .into_iter()
                        .map(|(m, n)| vec![m + r, n + s])
                        .collect())
                });
                families.push(sum_family(format!("fz({r},{s}).lambda-k"), probe, term));
                // 2Λ Σ_B p_C ∘ ∂p_{-B}  (from K⁺'s ladder-lowering term)
                let term: Term = Arc::new(move |idx| {
                    let b = (idx[0], idx[1]);
                    OperatorExpr::Compose(vec![
                        OperatorExpr::Scalar(two_lam.clone()),
                        OperatorExpr::MulVar(pvar(r - b.0, s - b.1)),
                        OperatorExpr::Diff(pvar(-b.0, -b.1)),
                    ])
                });
                let probe: Probe = Arc::new(move |p| {
                    Ok(family_pairs(p, VarFamily::P)
                        .into_iter()
                        .map(|(m, n)| vec![-m, -n])
                        .collect())
                });
                families.push(sum_family(format!("fz({r},{s}).lambda-p"), probe, term));
            }
        }
        ConstraintVariant::Minus => {
            let ctxc = ctx.clone();
            let h = half.clone();
            let term: Term = Arc::new(move |idx| {
                let b = (idx[0], idx[1]);
                let c = (r - b.0, s - b.1);
                let t1 = OperatorExpr::Compose(vec![
                    OperatorExpr::Scalar(h.clone()),
                    OperatorExpr::MulVar(pvar(c.0, c.1)),
                    rep::kz_coef_capped(kind, b, &ctxc.charges, &ctxc.lambda),
                ]);
                let t2 = OperatorExpr::Compose(vec![
                    OperatorExpr::Scalar(-&h),
                    rep::pz_coef_capped(kind, c, &ctxc.charges, &ctxc.lambda),
                    OperatorExpr::MulVar(kvar(b.0, b.1)),
                ]);
                OperatorExpr::add(vec![t1, t2])
            });
            let ctxc = ctx.clone();
            let probe: Probe = Arc::new(move |p| {
                let mut out = Vec::new();
                for u in kz_core(kind, p, &ctxc) {
                    out.push(vec![u.0, u.1]);
                }
                for u in pz_core(kind, p, &ctxc) {
                    out.push(vec![r - u.0, s - u.1]);
                }
                Ok(out)
            });
            families.push(sum_family(format!("fminus({r},{s}).capped"), probe, term));
            if uncapped {
                // the multiplication pieces keep a free convolution index
                let ctxc = ctx.clone();
                let h = half.clone();
                let term: Term = Arc::new(move |idx| {
                    let b = (idx[0], idx[1]);
                    let c = (r - b.0, s - b.1);
                    let t1 = OperatorExpr::Compose(vec![
                        OperatorExpr::Scalar(h.clone()),
                        OperatorExpr::MulVar(pvar(c.0, c.1)),
                        rep::kz_coef_uncapped(kind, b, &ctxc.charges, &ctxc.lambda),
                    ]);
                    let t2 = OperatorExpr::Compose(vec![
                        OperatorExpr::Scalar(-&h),
                        rep::pz_coef_uncapped(kind, c, &ctxc.charges, &ctxc.lambda),
                        OperatorExpr::MulVar(kvar(b.0, b.1)),
                    ]);
                    OperatorExpr::add(vec![t1, t2])
                });
                families.push(OperatorExpr::Sum(Box::new(SumFamily::new(
                    format!("fminus({r},{s}).vmult"),
                    2,
                    Bound::Divergent,
                    term,
                ))));
            }
        }
        ConstraintVariant::Plus => {
            let ctxc = ctx.clone();
            let h = half.clone();
            let term: Term = Arc::new(move |idx| {
                let b = (idx[0], idx[1]);
                let c = (r - b.0, s - b.1);
                let fk = rep::kz_coef(kind, b, &ctxc.charges, &ctxc.lambda);
                let fp = rep::pz_coef(kind, c, &ctxc.charges, &ctxc.lambda);
                let e_pjj =
                    rep::e_triple(VarFamily::P, VarFamily::J, VarFamily::J, c.0, c.1, true);
                let e_kjj =
                    rep::e_triple(VarFamily::K, VarFamily::J, VarFamily::J, b.0, b.1, true);
                let ctx2 = ctxc.clone();
                let inner_term: Term = Arc::new(move |jdx| {
                    let ab = (jdx[0], jdx[1]);
                    // −½ W^P_C(ab) ∂j ∘ (FK_B + E_{K,J}(B))
                    let a_part = OperatorExpr::Compose(vec![
                        OperatorExpr::Scalar(GaussianRational::from_rational(Rational::new(
                            -1, 2,
                        ))),
                        wp_coef(kind, c, ab, &ctx2),
                        OperatorExpr::Diff(jvar(ab.0, ab.1)),
                        OperatorExpr::add(vec![
                            rep::kz_coef(kind, b, &ctx2.charges, &ctx2.lambda),
                            rep::e_pair(VarFamily::K, VarFamily::J, b.0, b.1),
                        ]),
                    ]);
                    // +½ (FP_C + E_{P,J}(C)) ∘ W^K_B(ab) ∂j
                    let b_part = OperatorExpr::Compose(vec![
                        OperatorExpr::Scalar(GaussianRational::from_rational(Rational::new(1, 2))),
                        OperatorExpr::add(vec![
                            rep::pz_coef(kind, c, &ctx2.charges, &ctx2.lambda),
                            rep::e_pair(VarFamily::P, VarFamily::J, c.0, c.1),
                        ]),
                        wk_coef(kind, b, ab, &ctx2),
                        OperatorExpr::Diff(jvar(ab.0, ab.1)),
                    ]);
                    OperatorExpr::add(vec![a_part, b_part])
                });
                OperatorExpr::add(vec![
                    sum_family(
                        format!("fplus.inner({},{})", b.0, b.1),
                        j_index_probe(),
                        inner_term,
                    ),
                    // −½ (½E_{P,JJ}(C)) ∘ FK_B  +  ½ FP_C ∘ (½E_{K,JJ}(B))
                    OperatorExpr::Compose(vec![OperatorExpr::Scalar(-&h), e_pjj, fk]),
                    OperatorExpr::Compose(vec![OperatorExpr::Scalar(h.clone()), fp, e_kjj]),
                ])
            });
            let ctxc = ctx.clone();
            let probe: Probe = Arc::new(move |p| {
                if p.max_degree_in(VarFamily::J) == 0 {
                    return Ok(vec![]);
                }
                if uncapped {
                    return Err("coefficient multiplication with free convolution index".into());
                }
                let js = family_pairs(p, VarFamily::J);
                let mut out = Vec::new();
                for u in kz_core(kind, p, &ctxc) {
                    out.push(vec![u.0, u.1]);
                    for ab in &js {
                        out.push(vec![u.0 - ab.0, u.1 - ab.1]);
                    }
                }
                for u in pz_core(kind, p, &ctxc) {
                    out.push(vec![r - u.0, s - u.1]);
                    for ab in &js {
                        out.push(vec![r + ab.0 - u.0, s + ab.1 - u.1]);
                    }
                }
                Ok(out)
            });
            families.push(sum_family(format!("fplus({r},{s}).main"), probe, term));
            if lam_nonzero {
                // −Λ Σ_B [ ∂k_{B-(r,s)} ∘ Kz_B + Pz_C ∘ ∂p_{-B} ]
                let ctxc = ctx.clone();
                let lamg = GaussianRational::from_rational(lambda.clone());
                let term: Term = Arc::new(move |idx| {
                    let b = (idx[0], idx[1]);
                    let c = (r - b.0, s - b.1);
                    let kz_full = OperatorExpr::add(vec![
                        rep::kz_coef(kind, b, &ctxc.charges, &ctxc.lambda),
                        rep::e_pair(VarFamily::K, VarFamily::J, b.0, b.1),
                    ]);
                    let pz_full = OperatorExpr::add(vec![
                        rep::pz_coef(kind, c, &ctxc.charges, &ctxc.lambda),
                        rep::e_pair(VarFamily::P, VarFamily::J, c.0, c.1),
                    ]);
                    OperatorExpr::add(vec![
                        OperatorExpr::Compose(vec![
                            OperatorExpr::Scalar(-&lamg),
                            OperatorExpr::Diff(kvar(b.0 - r, b.1 - s)),
                            kz_full,
                        ]),
                        OperatorExpr::Compose(vec![
                            OperatorExpr::Scalar(-&lamg),
                            pz_full,
                            OperatorExpr::Diff(pvar(-b.0, -b.1)),
                        ]),
                    ])
                });
                let probe: Probe = Arc::new(move |p| {
                    if family_pairs(p, VarFamily::J).contains(&(-r, -s)) {
                        return Err(
                            "Λ ladder-lowering term meets a matching raising variable".into()
                        );
                    }
                    let mut out: Vec<Vec<i64>> = family_pairs(p, VarFamily::K)
                        .into_iter()
                        .map(|(m, n)| vec![m + r, n + s])
                        .collect();
                    out.extend(
                        family_pairs(p, VarFamily::P)
                            .into_iter()
                            .map(|(m, n)| vec![-m, -n]),
                    );
                    Ok(out)
                });
                families.push(sum_family(format!("fplus({r},{s}).lambda"), probe, term));
            }
        }
    }
    Ok(OperatorExpr::add(families))
}

/// Direct truncation of the quadratic convolution, built from the
/// descriptor's pair rule and the representation images; only a cutoff
/// can evaluate it. This is both the modified-polarization route and
/// the cross-check oracle for the reduced families.
pub fn quadratic_naive(
    d: &ConstraintDescriptor,
    ctx: &RepContext,
) -> Result<OperatorExpr, FockError> {
    let name = format!("fquad.naive({},{},{})", d.variant.name(), d.r, d.s);
    let d = d.clone();
    let ctx = ctx.clone();
    let term: Term = Arc::new(move |idx| {
        let (m, n) = (idx[0], idx[1]);
        let mut parts = Vec::new();
        for (x, y, w) in d.quadratic_pairs(m, n) {
            let ox = rep::rep_op(&x, &ctx).expect("ladder label");
            let oy = rep::rep_op(&y, &ctx).expect("ladder label");
            parts.push(OperatorExpr::Compose(vec![OperatorExpr::Scalar(w), ox, oy]));
        }
        OperatorExpr::add(parts)
    });
    Ok(OperatorExpr::Sum(Box::new(SumFamily::new(
        name,
        2,
        Bound::Divergent,
        term,
    ))))
}

/// The full constraint operator in the given context.
pub fn constraint_op(
    d: &ConstraintDescriptor,
    ctx: &RepContext,
) -> Result<OperatorExpr, FockError> {
    if ctx.algebra != RepAlgebra::NonAbelian {
        return Err(FockError::BadContext(
            "constraints act on the induced modules".into(),
        ));
    }
    if d.lambda != ctx.lambda {
        return Err(FockError::BadContext(
            "descriptor and context disagree on Λ".into(),
        ));
    }
    let linear = rep::element_op(&d.linear_part(), ctx)?;
    let quad = quadratic_op(d, ctx)?;
    Ok(OperatorExpr::add(vec![linear, quad]))
}

/// Applies the constraint to a state.
pub fn constraint_apply(
    d: &ConstraintDescriptor,
    p: &Polynomial,
    ctx: &RepContext,
    cfg: &EvalConfig,
) -> Result<Polynomial, FockError> {
    let op = constraint_op(d, ctx)?;
    op_apply(&op, p, cfg)
}

/// Outcome of sweeping the constraint family over the vacuum sector.
#[derive(Clone, Debug, Serialize)]
pub struct VacuumReport {
    pub plus_restriction: String,
    pub z_satisfied: bool,
    pub z_violations: Vec<String>,
    pub minus_witness: Option<String>,
    pub verdict: String,
}

/// Sweeps `f̂^±`, `f̂^z` over modes in `[-w, w]²` against vacuum-sector
/// monomials of degree ≤ 2 and reports the charge restrictions: the
/// plus family imposes none, the z family pins the nonzero-mode hat
/// charges, and the minus family always has a nonzero witness.
pub fn vacuum_constraint_report(ctx: &RepContext, w: i64) -> Result<VacuumReport, FockError> {
    if ctx.polarization != Polarization::Repolarized || !ctx.lambda.is_zero() {
        return Err(FockError::BadContext(
            "the vacuum report is defined for the Λ = 0 repolarized module".into(),
        ));
    }
    let cfg = EvalConfig::exact();
    let mut vacuum = vec![Polynomial::one()];
    let mut vars = Vec::new();
    for m in -w..=w {
        for n in -w..=w {
            if let Some(v) = VarLabel::v(m, n) {
                vars.push(v);
            }
        }
    }
    for (i, a) in vars.iter().enumerate() {
        vacuum.push(Polynomial::var(*a));
        for b in vars.iter().skip(i) {
            vacuum.push(Polynomial::var(*a).mul(&Polynomial::var(*b)));
        }
    }

    let mut plus_clean = true;
    let mut z_violations = Vec::new();
    let mut minus_witness = None;
    for r in -w..=w {
        for s in -w..=w {
            for variant in [
                ConstraintVariant::Plus,
                ConstraintVariant::Z,
                ConstraintVariant::Minus,
            ] {
                let d = ConstraintDescriptor::new(variant, r, s, ctx.lambda.clone());
                for q in &vacuum {
                    let out = constraint_apply(&d, q, ctx, &cfg)?;
                    if out.is_zero() {
                        continue;
                    }
                    match variant {
                        ConstraintVariant::Plus => plus_clean = false,
                        ConstraintVariant::Z => {
                            z_violations.push(format!("fz({r},{s}) on {q} acts by {out}"));
                        }
                        ConstraintVariant::Minus => {
                            if minus_witness.is_none() {
                                minus_witness =
                                    Some(format!("fminus({r},{s}) on {q} gives {out}"));
                            }
                        }
                    }
                }
            }
        }
    }
    let z_satisfied = z_violations.is_empty();
    let verdict = if minus_witness.is_some() {
        "descends only trivially: the minus constraints act nontrivially \
         for every choice of charges"
            .to_string()
    } else {
        "no obstruction detected on the swept window".to_string()
    };
    Ok(VacuumReport {
        plus_restriction: if plus_clean {
            "no restriction".into()
        } else {
            "unexpected nonzero plus-constraint action".into()
        },
        z_satisfied,
        z_violations,
        minus_witness,
        verdict,
    })
}

/// The zeroth-level constraint `f̂_μ = Λ J_μ + ε_{νλ}^μ P_ν K_λ` at
/// modes (0,0), as an operator.
pub fn zeroth_level_constraint_op(mu: u8, ctx: &RepContext) -> Result<OperatorExpr, FockError> {
    use corner_algebras::nonabelian as na;
    let mut parts = Vec::new();
    if !ctx.lambda.is_zero() {
        parts.push(OperatorExpr::scaled(
            GaussianRational::from_rational(ctx.lambda.clone()),
            rep::rep_op(&na::j(mu, 0, 0), ctx)?,
        ));
    }
    for nu in 1..=3u8 {
        for la in 1..=3u8 {
            let sign = match (nu, la, mu) {
                (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
                (2, 1, 3) | (3, 2, 1) | (1, 3, 2) => -1,
                _ => continue,
            };
            parts.push(OperatorExpr::Compose(vec![
                OperatorExpr::Scalar(GaussianRational::from_int(sign)),
                rep::rep_op(&na::p(nu, 0, 0), ctx)?,
                rep::rep_op(&na::k(la, 0, 0), ctx)?,
            ]));
        }
    }
    Ok(OperatorExpr::add(parts))
}

/// Convenience: the Λ = 0 repolarized context with given charges.
pub fn repolarized_context(charges: torus::ChargeAssignment) -> Result<RepContext, FockError> {
    RepContext::nonabelian_lambda0(charges, Polarization::Repolarized)
}
