//! The representation property: commutator defects vanish for every
//! table, plus grading, annihilation, and number-operator behavior.

use corner_algebras::nonabelian as na;
use corner_algebras::torus::{self, ChargeAssignment};
use corner_exact::{GaussianRational, Monomial, Polynomial, Rational, VarFamily, VarLabel};
use corner_fock::{
    number_op_apply, op_apply, rep_commutator_defect, rep_op, EvalConfig, Polarization, RepContext,
};
use corner_lie::GeneratorLabel;

fn monomials_upto_deg2(vars: &[VarLabel]) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    for (i, a) in vars.iter().enumerate() {
        out.push(Polynomial::var(*a));
        for b in vars.iter().skip(i) {
            out.push(Polynomial::from_monomial(
                Monomial::from_pairs([(*a, 1), (*b, 1)]),
                GaussianRational::one(),
            ));
        }
    }
    out
}

fn window_vars(kinds: &[VarFamily], w: i64) -> Vec<VarLabel> {
    let mut out = Vec::new();
    for fam in kinds {
        for m in -w..=w {
            for n in -w..=w {
                if let Some(v) = VarLabel::two_indexed(*fam, m, n) {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn sweep(ctx: &RepContext, gens: &[GeneratorLabel], monomials: &[Polynomial], label: &str) {
    let lookup = match ctx.algebra {
        corner_fock::RepAlgebra::NonAbelian => na::ladder_window_generators(2),
        corner_fock::RepAlgebra::AbelianOscillator => {
            torus::osc_window_generators(2, &ctx.lambda)
        }
    };
    let out = corner_fock::rep::defect_sweep(
        ctx,
        gens,
        &lookup,
        monomials,
        &EvalConfig::exact(),
        2,
        3,
    )
    .unwrap_or_else(|e| panic!("{label}: {e}"));
    assert!(out.pairs_checked > 0);
    assert!(
        out.witnesses.is_empty(),
        "{label}: {} defects, first: {:?}",
        out.defects_found,
        out.witnesses[0]
    );
}

#[test]
fn abelian_fock_representation_property() {
    for lambda in [Rational::zero(), Rational::one()] {
        let ctx =
            RepContext::abelian(lambda.clone(), ChargeAssignment::new(&lambda)).unwrap();
        let gens = torus::osc_window_generators(1, &lambda);
        let fam = if lambda.is_zero() {
            VarFamily::V
        } else {
            VarFamily::X
        };
        let monos = monomials_upto_deg2(&window_vars(&[fam], 1));
        sweep(&ctx, &gens, &monos, &format!("abelian Λ={lambda}"));
    }
}

#[test]
fn abelian_fock_with_nonpinned_charges() {
    // Λ = 0 keeps χ_Z and the hat charges free
    let zero = Rational::zero();
    let mut ch = ChargeAssignment::new(&zero);
    ch.set_chi_z(GaussianRational::from_int(2));
    ch.set(torus::e_hat(), GaussianRational::i()).unwrap();
    ch.set(torus::phi_hat(1), GaussianRational::from_int(3))
        .unwrap();
    let ctx = RepContext::abelian(zero.clone(), ch).unwrap();
    let gens = torus::osc_window_generators(1, &zero);
    let monos = monomials_upto_deg2(&window_vars(&[VarFamily::V], 1));
    sweep(&ctx, &gens, &monos, "abelian charged");
}

fn charge_fixtures() -> Vec<(String, ChargeAssignment)> {
    let zero = Rational::zero();
    let mut out = Vec::new();
    out.push(("all-zero".to_string(), ChargeAssignment::new(&zero)));
    let mut e1 = ChargeAssignment::new(&zero);
    e1.set(torus::e_hat(), GaussianRational::one()).unwrap();
    out.push(("chi_Ehat=1".to_string(), e1));
    let mut t1 = ChargeAssignment::new(&zero);
    t1.set(torus::theta_hat(1), GaussianRational::one()).unwrap();
    out.push(("chi_ThetaHat_1=1".to_string(), t1));
    out
}

#[test]
fn lambda0_standard_representation_property() {
    for (name, ch) in charge_fixtures() {
        let ctx = RepContext::nonabelian_lambda0(ch, Polarization::Standard).unwrap();
        let gens = na::ladder_window_generators(1);
        let monos = monomials_upto_deg2(&window_vars(
            &[VarFamily::J, VarFamily::K, VarFamily::P, VarFamily::V],
            1,
        ));
        sweep(&ctx, &gens, &monos, &format!("Λ=0 standard {name}"));
    }
}

#[test]
fn lambda0_repolarized_representation_property() {
    let zero = Rational::zero();
    let ctx =
        RepContext::nonabelian_lambda0(ChargeAssignment::new(&zero), Polarization::Repolarized)
            .unwrap();
    let gens = na::ladder_window_generators(1);
    let monos = monomials_upto_deg2(&window_vars(
        &[VarFamily::J, VarFamily::K, VarFamily::P, VarFamily::V],
        1,
    ));
    sweep(&ctx, &gens, &monos, "Λ=0 repolarized");
}

#[test]
fn lambda_nonzero_representation_property() {
    let ctx = RepContext::nonabelian_lambda(Rational::one(), Polarization::Standard).unwrap();
    let gens = na::ladder_window_generators(1);
    let monos = monomials_upto_deg2(&window_vars(
        &[VarFamily::J, VarFamily::K, VarFamily::P, VarFamily::X],
        1,
    ));
    sweep(&ctx, &gens, &monos, "Λ=1 standard");
}

#[test]
fn vacuum_computation_golden() {
    // ρ(J⁺_{0,0})ρ(J⁻_{0,0})·1 − ρ(J⁻)ρ(J⁺)·1 = ρ(Jz_{0,0})·1,
    // which at χ_Ê = 0 is zero on the vacuum
    let zero = Rational::zero();
    let ctx =
        RepContext::nonabelian_lambda0(ChargeAssignment::new(&zero), Polarization::Standard)
            .unwrap();
    let cfg = EvalConfig::exact();
    let jz = rep_op(&na::ladder(corner_lie::Symbol::JZ, 0, 0), &ctx).unwrap();
    let out = op_apply(&jz, &Polynomial::one(), &cfg).unwrap();
    assert!(out.is_zero());

    // with χ_Ê = 1 the vacuum picks up −2i χ_Ê
    let mut ch = ChargeAssignment::new(&zero);
    ch.set(torus::e_hat(), GaussianRational::one()).unwrap();
    let ctx = RepContext::nonabelian_lambda0(ch, Polarization::Standard).unwrap();
    let jz = rep_op(&na::ladder(corner_lie::Symbol::JZ, 0, 0), &ctx).unwrap();
    let out = op_apply(&jz, &Polynomial::one(), &cfg).unwrap();
    assert_eq!(out, Polynomial::constant(GaussianRational::int_i(-2)));
}

#[test]
fn annihilation_on_vacuum_sector() {
    let zero = Rational::zero();
    let ctx =
        RepContext::nonabelian_lambda0(ChargeAssignment::new(&zero), Polarization::Standard)
            .unwrap();
    let cfg = EvalConfig::exact();
    let vacuum_polys = monomials_upto_deg2(&window_vars(&[VarFamily::V], 2));
    for sym in [
        corner_lie::Symbol::JPlus,
        corner_lie::Symbol::KPlus,
        corner_lie::Symbol::PPlus,
    ] {
        for k in -2..=2 {
            for l in -2..=2 {
                let op = rep_op(&na::ladder(sym, k, l), &ctx).unwrap();
                for q in &vacuum_polys {
                    let out = op_apply(&op, q, &cfg).unwrap();
                    assert!(out.is_zero(), "plus operator failed to annihilate {q}");
                }
            }
        }
    }
}

#[test]
fn number_operator_grading() {
    let zero = Rational::zero();
    let ctx =
        RepContext::nonabelian_lambda0(ChargeAssignment::new(&zero), Polarization::Standard)
            .unwrap();
    // 1 ↦ 0
    assert!(number_op_apply(&Polynomial::one(), &ctx).unwrap().is_zero());
    // j_{0,0} k_{1,1} v_{2,2} ↦ 2 · itself (v-degree does not count)
    let p = Polynomial::from_monomial(
        Monomial::from_pairs([
            (VarLabel::j(0, 0), 1),
            (VarLabel::k(1, 1), 1),
            (VarLabel::v(2, 2).unwrap(), 1),
        ]),
        GaussianRational::one(),
    );
    assert_eq!(
        number_op_apply(&p, &ctx).unwrap(),
        p.scale(&GaussianRational::from_int(2))
    );
    // p_{1,0}³ ↦ 3 · itself
    let p = Polynomial::from_monomial(
        Monomial::from_pairs([(VarLabel::p(1, 0), 3)]),
        GaussianRational::one(),
    );
    assert_eq!(
        number_op_apply(&p, &ctx).unwrap(),
        p.scale(&GaussianRational::from_int(3))
    );

    // and with χ_Ê ≠ 0 the shift cancels exactly
    let mut ch = ChargeAssignment::new(&zero);
    ch.set(torus::e_hat(), GaussianRational::from_int(5)).unwrap();
    let ctx = RepContext::nonabelian_lambda0(ch, Polarization::Standard).unwrap();
    assert_eq!(
        number_op_apply(&p, &ctx).unwrap(),
        p.scale(&GaussianRational::from_int(3))
    );
}

#[test]
fn generators_shift_the_grade() {
    let zero = Rational::zero();
    let ctx =
        RepContext::nonabelian_lambda0(ChargeAssignment::new(&zero), Polarization::Standard)
            .unwrap();
    let cfg = EvalConfig::exact();
    let p = Polynomial::from_monomial(
        Monomial::from_pairs([(VarLabel::j(1, 0), 1), (VarLabel::k(0, 1), 1)]),
        GaussianRational::one(),
    );
    use corner_lie::Symbol::*;
    for (sym, shift) in [
        (JMinus, 1i64),
        (KMinus, 1),
        (PMinus, 1),
        (JPlus, -1),
        (KPlus, -1),
        (PPlus, -1),
        (JZ, 0),
        (KZ, 0),
        (PZ, 0),
    ] {
        let op = rep_op(&na::ladder(sym, 1, 1), &ctx).unwrap();
        let out = op_apply(&op, &p, &cfg).unwrap();
        if out.is_zero() {
            continue;
        }
        let deg_in = (p.max_degree_in(VarFamily::J)
            + p.max_degree_in(VarFamily::K)
            + p.max_degree_in(VarFamily::P)) as i64;
        for (m, _) in out.terms() {
            let deg_out = (m.degree_in(VarFamily::J)
                + m.degree_in(VarFamily::K)
                + m.degree_in(VarFamily::P)) as i64;
            assert_eq!(deg_out, deg_in + shift, "grade shift failed for {sym:?}");
        }
    }
}
