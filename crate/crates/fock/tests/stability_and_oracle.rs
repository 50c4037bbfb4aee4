//! Cutoff-stability certification for the modified Λ ≠ 0 polarization
//! and exact agreement between support-driven evaluation and the
//! naive box-expansion oracle.

use corner_algebras::nonabelian as na;
use corner_algebras::torus::ChargeAssignment;
use corner_exact::{GaussianRational, Monomial, Polynomial, Rational, VarFamily, VarLabel};
use corner_fock::{
    naive_apply, op_apply, rep_op, wakimoto, EvalConfig, Polarization, RepContext,
};
use corner_lie::{bracket, AlgebraElement, Symbol};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn interior_part(p: &Polynomial, bound: i64) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let max = m
            .vars()
            .flat_map(|(v, _)| v.indices())
            .map(|i| i.abs())
            .max()
            .unwrap_or(0);
        if max <= bound {
            out.add_term(m.clone(), c);
        }
    }
    out
}

/// Modified-polarization commutator defects are not claimed to vanish;
/// the certification is that evaluating at cutoff M and M+2 gives the
/// same interior content for monomials supported in `[-M+1, M-1]²`.
#[test]
fn modified_lambda_window_stability() {
    let ctx = RepContext::nonabelian_lambda(Rational::one(), Polarization::ModifiedLambda)
        .unwrap();
    let table = ctx.bracket_table();

    // generator pairs covering every symbol combination
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
    let mut pairs = Vec::new();
    for (i, a) in symbols.iter().enumerate() {
        for b in symbols.iter().skip(i) {
            pairs.push((na::ladder(*a, 1, 0), na::ladder(*b, -1, 0)));
            pairs.push((na::ladder(*a, 0, 1), na::ladder(*b, 0, 0)));
        }
    }

    let mut states = vec![Polynomial::one()];
    for v in [
        VarLabel::j(0, 0),
        VarLabel::k(1, 0),
        VarLabel::p(0, -1),
        VarLabel::x(0, 0),
        VarLabel::x(1, 1),
    ] {
        states.push(Polynomial::var(v));
    }
    states.push(Polynomial::from_monomial(
        Monomial::from_pairs([(VarLabel::j(0, 0), 1), (VarLabel::x(1, 0), 1)]),
        GaussianRational::one(),
    ));
    states.push(Polynomial::from_monomial(
        Monomial::from_pairs([(VarLabel::k(0, 0), 1), (VarLabel::p(1, 0), 1)]),
        GaussianRational::one(),
    ));

    for m_cut in [3i64, 4] {
        let cfg_a = EvalConfig::truncated(m_cut);
        let cfg_b = EvalConfig::truncated(m_cut + 2);
        // inputs supported strictly inside the window
        let inputs: Vec<&Polynomial> = states
            .iter()
            .filter(|p| p.max_abs_index() <= m_cut - 1)
            .collect();
        for (x, y) in &pairs {
            let ox = rep_op(x, &ctx).unwrap();
            let oy = rep_op(y, &ctx).unwrap();
            let b = bracket(
                &AlgebraElement::generator(*x),
                &AlgebraElement::generator(*y),
                &table,
            )
            .unwrap();
            for p in &inputs {
                let defect = |cfg: &EvalConfig| -> Polynomial {
                    let mut d = op_apply(&ox, &op_apply(&oy, p, cfg).unwrap(), cfg).unwrap();
                    d = d.sub(&op_apply(&oy, &op_apply(&ox, p, cfg).unwrap(), cfg).unwrap());
                    for (g, c) in b.terms() {
                        let og = rep_op(g, &ctx).unwrap();
                        d = d.sub(&op_apply(&og, p, cfg).unwrap().scale(c));
                    }
                    d
                };
                let margin = m_cut - p.max_abs_index() - 2;
                let da = interior_part(&defect(&cfg_a), margin);
                let db = interior_part(&defect(&cfg_b), margin);
                assert_eq!(
                    da, db,
                    "defect at ({x}, {y}) on {p} unstable between cutoffs {m_cut} and {}",
                    m_cut + 2
                );
            }
        }
    }
}

/// The modified table's divergent family is the inherited x·k
/// multiplication sum inside J⁺; without a cutoff it must refuse.
#[test]
fn modified_lambda_jplus_is_divergent_without_cutoff() {
    let ctx = RepContext::nonabelian_lambda(Rational::one(), Polarization::ModifiedLambda)
        .unwrap();
    let op = rep_op(&na::ladder(Symbol::JPlus, 0, 0), &ctx).unwrap();
    let err = op_apply(&op, &Polynomial::one(), &EvalConfig::exact()).unwrap_err();
    assert!(matches!(err, corner_fock::FockError::DivergentAction { .. }));
    assert!(op_apply(&op, &Polynomial::one(), &EvalConfig::truncated(3)).is_ok());
}

fn random_monomial(rng: &mut StdRng, vars: &[VarLabel], max_deg: u32) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut pairs = Vec::new();
    for _ in 0..deg {
        pairs.push((vars[rng.gen_range(0..vars.len())], 1u32));
    }
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    let im = rng.gen_range(-2i64..=2);
    Polynomial::from_monomial(
        Monomial::from_pairs(pairs),
        GaussianRational::new(Rational::new(if num == 0 { 1 } else { num }, den), Rational::from_int(im)),
    )
}

/// Criterion-style oracle equivalence: 200 random (operator, input)
/// pairs, support-driven result equal to the naive box expansion.
#[test]
fn support_driven_agrees_with_naive_oracle() {
    let mut rng = StdRng::seed_from_u64(0xC0FFEE);
    let zero = Rational::zero();
    let contexts = vec![
        RepContext::nonabelian_lambda0(ChargeAssignment::new(&zero), Polarization::Standard)
            .unwrap(),
        RepContext::nonabelian_lambda0(
            ChargeAssignment::new(&zero),
            Polarization::Repolarized,
        )
        .unwrap(),
        RepContext::nonabelian_lambda(Rational::one(), Polarization::Standard).unwrap(),
    ];
    let gens = na::ladder_window_generators(2);

    let mut vars = Vec::new();
    for fam in [VarFamily::J, VarFamily::K, VarFamily::P] {
        for m in -2..=2 {
            for n in -2..=2 {
                vars.push(VarLabel::two_indexed(fam, m, n).unwrap());
            }
        }
    }
    let mut vvars = vars.clone();
    let mut xvars = vars.clone();
    for m in -2..=2 {
        for n in -2..=2 {
            if let Some(v) = VarLabel::v(m, n) {
                vvars.push(v);
            }
            xvars.push(VarLabel::x(m, n));
        }
    }

    let mut checked = 0;
    while checked < 200 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let g = gens[rng.gen_range(0..gens.len())];
        let vars = if ctx.lambda.is_zero() { &vvars } else { &xvars };
        let p = random_monomial(&mut rng, vars, 2);
        let op = rep_op(&g, ctx).unwrap();
        let fast = op_apply(&op, &p, &EvalConfig::exact()).unwrap();
        // box radius covering every index the probes can reach
        let slow = naive_apply(&op, &p, 11);
        assert_eq!(fast, slow, "oracle mismatch for {g} on {p}");
        checked += 1;
    }

    // and for the free-field operators
    let wc = wakimoto::WakimotoContext::new(GaussianRational::one(), GaussianRational::from_int(2));
    let wvars: Vec<VarLabel> = (-2..=2)
        .map(VarLabel::wx)
        .chain((1..=2).filter_map(VarLabel::wy))
        .collect();
    for _ in 0..40 {
        let n = rng.gen_range(-2..=2);
        let g = match rng.gen_range(0..3) {
            0 => corner_algebras::affine::h(n),
            1 => corner_algebras::affine::x(n),
            _ => corner_algebras::affine::y(n),
        };
        let p = random_monomial(&mut rng, &wvars, 2);
        let op = wakimoto::wakimoto_op(&g, &wc).unwrap();
        let fast = op_apply(&op, &p, &EvalConfig::exact()).unwrap();
        let slow = naive_apply(&op, &p, 12);
        assert_eq!(fast, slow, "wakimoto oracle mismatch for {g} on {p}");
    }
}
