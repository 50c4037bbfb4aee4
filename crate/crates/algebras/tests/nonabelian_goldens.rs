//! Golden values for the su(2) corner algebra: Cartesian and ladder
//! bracket lists, MTD axioms, zeroth-level identification, and the
//! constraint descriptors' linear parts.

use corner_algebras::{nonabelian as na, torus};
use corner_exact::{GaussianRational, Rational};
use corner_lie::{bracket, map_defect, AlgebraElement, AlgebraKind, FnMap, Modes, Symbol};

fn gi(n: i64) -> GaussianRational {
    GaussianRational::int_i(n)
}

fn gr(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn gen(l: corner_lie::GeneratorLabel) -> AlgebraElement {
    AlgebraElement::generator(l)
}

#[test]
fn cartesian_goldens() {
    let t0 = na::bracket_table(&Rational::zero());
    let t7 = na::bracket_table(&Rational::from_int(7));

    // [J_{1,0,0}, J_{2,0,0}] = J_{3,0,0}
    assert_eq!(
        bracket(&gen(na::j(1, 0, 0)), &gen(na::j(2, 0, 0)), &t0).unwrap(),
        gen(na::j(3, 0, 0))
    );

    // [J_{1,1,0}, K_{1,-1,0}] = im δ Z with m = -1
    assert_eq!(
        bracket(&gen(na::j(1, 1, 0)), &gen(na::k(1, -1, 0)), &t0).unwrap(),
        AlgebraElement::term(na::z(), gi(-1))
    );

    // [K_{1,2,3}, P_{1,-2,-3}] = Λ Z at Λ = 7
    assert_eq!(
        bracket(&gen(na::k(1, 2, 3)), &gen(na::p(1, -2, -3)), &t7).unwrap(),
        AlgebraElement::term(na::z(), gr(7))
    );

    // [J_{μ,k,l}, P_{ν,m,n}] = ε P - in δ Z
    assert_eq!(
        bracket(&gen(na::j(1, 1, 1)), &gen(na::p(2, 0, 0)), &t0).unwrap(),
        gen(na::p(3, 1, 1))
    );
    assert_eq!(
        bracket(&gen(na::j(2, 1, 1)), &gen(na::p(2, -1, -1)), &t0).unwrap(),
        AlgebraElement::term(na::z(), gi(1))
    );
}

/// The full ladder relation list, asserted against the transported
/// table. Central coefficients carry the `m`/`n` of the second factor.
#[test]
fn ladder_relation_list() {
    for lambda in [Rational::zero(), Rational::from_int(2)] {
        let t = na::ladder_table(&lambda);
        let lam = GaussianRational::from_rational(lambda.clone());
        let b = |x: corner_lie::GeneratorLabel, y: corner_lie::GeneratorLabel| {
            bracket(&gen(x), &gen(y), &t).unwrap()
        };
        let l = na::ladder;
        use Symbol::*;

        // [J⁺_{kl}, J⁻_{mn}] = Jz_{(k+m)(l+n)}
        assert_eq!(b(l(JPlus, 1, 0), l(JMinus, 0, 1)), gen(l(JZ, 1, 1)));
        // [Jz_{kl}, J±_{mn}] = ±2 J±
        assert_eq!(
            b(l(JZ, 1, 0), l(JPlus, 0, 0)),
            gen(l(JPlus, 1, 0)).scale(&gr(2))
        );
        assert_eq!(
            b(l(JZ, 1, 0), l(JMinus, 0, 0)),
            gen(l(JMinus, 1, 0)).scale(&gr(-2))
        );
        // [J⁺_{kl}, K⁻_{mn}] = [K⁺_{kl}, J⁻_{mn}] = Kz - 2im δ Z
        assert_eq!(
            b(l(JPlus, 1, 0), l(KMinus, -1, 0)),
            gen(l(KZ, 0, 0)).add(&AlgebraElement::term(na::ladder_z(), gi(2)))
        );
        assert_eq!(
            b(l(KPlus, 1, 0), l(JMinus, -1, 0)),
            gen(l(KZ, 0, 0)).add(&AlgebraElement::term(na::ladder_z(), gi(2)))
        );
        // [Kz_{kl}, J±_{mn}] = ±2 K±, [Jz, K±] = ±2 K±
        assert_eq!(
            b(l(KZ, 0, 1), l(JPlus, 1, 0)),
            gen(l(KPlus, 1, 1)).scale(&gr(2))
        );
        assert_eq!(
            b(l(JZ, 0, 1), l(KMinus, 1, 0)),
            gen(l(KMinus, 1, 1)).scale(&gr(-2))
        );
        // [Jz_{kl}, Kz_{mn}] = -4im δ Z; at k=1, m=-1 this is +4i Z
        assert_eq!(
            b(l(JZ, 1, 0), l(KZ, -1, 0)),
            AlgebraElement::term(na::ladder_z(), gi(4))
        );
        // [J⁺_{kl}, P⁻_{mn}] = [P⁺_{kl}, J⁻_{mn}] = Pz + 2in δ Z
        assert_eq!(
            b(l(JPlus, 0, 1), l(PMinus, 0, -1)),
            gen(l(PZ, 0, 0)).add(&AlgebraElement::term(na::ladder_z(), gi(-2)))
        );
        assert_eq!(
            b(l(PPlus, 0, 1), l(JMinus, 0, -1)),
            gen(l(PZ, 0, 0)).add(&AlgebraElement::term(na::ladder_z(), gi(-2)))
        );
        // [Pz_{kl}, J±] = ±2 P±, [Jz, P±] = ±2 P±
        assert_eq!(
            b(l(PZ, 1, 1), l(JMinus, 0, 0)),
            gen(l(PMinus, 1, 1)).scale(&gr(-2))
        );
        assert_eq!(
            b(l(JZ, 0, 0), l(PPlus, 1, 1)),
            gen(l(PPlus, 1, 1)).scale(&gr(2))
        );
        // [Jz_{kl}, Pz_{mn}] = 4in δ Z
        assert_eq!(
            b(l(JZ, 0, 2), l(PZ, 0, -2)),
            AlgebraElement::term(na::ladder_z(), gi(-8))
        );
        // [K⁺_{kl}, P⁻_{mn}] = [K⁻_{kl}, P⁺_{mn}] = -2Λ δ Z
        assert_eq!(
            b(l(KPlus, 1, 2), l(PMinus, -1, -2)),
            AlgebraElement::term(na::ladder_z(), (-&lam).scale(&Rational::from_int(2)))
        );
        assert_eq!(
            b(l(KMinus, 1, 2), l(PPlus, -1, -2)),
            AlgebraElement::term(na::ladder_z(), (-&lam).scale(&Rational::from_int(2)))
        );
        // [Kz_{kl}, Pz_{mn}] = -4Λ δ Z
        assert_eq!(
            b(l(KZ, 2, -1), l(PZ, -2, 1)),
            AlgebraElement::term(na::ladder_z(), (-&lam).scale(&Rational::from_int(4)))
        );
        // [K⁺, P⁺] = 0 even at Λ ≠ 0
        assert!(b(l(KPlus, 1, 0), l(PPlus, -1, 0)).is_zero());
        // [K, K] and [P, P] vanish throughout
        assert!(b(l(KPlus, 1, 0), l(KMinus, -1, 0)).is_zero());
        assert!(b(l(PZ, 1, 0), l(PMinus, -1, 0)).is_zero());
    }
}

#[test]
fn ladder_round_trip_and_golden_image() {
    // J_{1,0,0} = ½(J⁺_{0,0} - J⁻_{0,0})
    let img = na::to_ladder(&gen(na::j(1, 0, 0))).unwrap();
    let expect = gen(na::ladder(Symbol::JPlus, 0, 0))
        .sub(&gen(na::ladder(Symbol::JMinus, 0, 0)))
        .scale(&GaussianRational::from_rational(Rational::new(1, 2)));
    assert_eq!(img, expect);

    for g in na::window_generators(2) {
        let x = gen(g);
        assert_eq!(na::from_ladder(&na::to_ladder(&x).unwrap()).unwrap(), x);
    }
    for g in na::ladder_window_generators(2) {
        let x = gen(g);
        assert_eq!(na::to_ladder(&na::from_ladder(&x).unwrap()).unwrap(), x);
    }
}

#[test]
fn to_ladder_is_an_isomorphism() {
    for lambda in [Rational::zero(), Rational::one()] {
        let src = na::bracket_table(&lambda);
        let dst = na::ladder_table(&lambda);
        let phi = FnMap {
            target: AlgebraKind::NonAbelianLadder,
            f: |l: &corner_lie::GeneratorLabel| na::to_ladder_label(l),
        };
        let gens = na::window_generators(1);
        let mut pairs = Vec::new();
        for (i, x) in gens.iter().enumerate() {
            for y in gens.iter().skip(i + 1) {
                pairs.push((gen(*x), gen(*y)));
            }
        }
        let defects = map_defect(&phi, &pairs, &src, &dst).unwrap();
        for (d, (x, y)) in defects.iter().zip(&pairs) {
            assert!(d.is_zero(), "defect {d} at ({x}, {y}), Λ = {lambda}");
        }
    }
}

#[test]
fn mtd_split_goldens_and_axioms() {
    use Symbol::*;
    // direct membership
    let split = na::mtd_split(&gen(na::ladder(JZ, 3, 3))).unwrap();
    assert!(split.nminus.is_zero() && split.nplus.is_zero());
    assert_eq!(split.h, gen(na::ladder(JZ, 3, 3)));

    let x = gen(na::ladder(JPlus, 0, 0)).add(&gen(na::ladder_z()));
    let split = na::mtd_split(&x).unwrap();
    assert!(split.nminus.is_zero());
    assert_eq!(split.h, gen(na::ladder_z()));
    assert_eq!(split.nplus, gen(na::ladder(JPlus, 0, 0)));

    // sum reconstructs the input
    let y = x.add(&gen(na::ladder(KMinus, 1, -1)).scale(&gi(3)));
    let split = na::mtd_split(&y).unwrap();
    assert_eq!(split.nminus.add(&split.h).add(&split.nplus), y);

    // MTD axioms on window pairs: [h,h] ⊆ h, [h,n±] ⊆ n±,
    // [n±,n∓] ⊆ h, [n±,n±] = 0
    for lambda in [Rational::zero(), Rational::one()] {
        let t = na::ladder_table(&lambda);
        let gens = na::ladder_window_generators(1);
        for x in &gens {
            for y in &gens {
                let sx = na::mtd_split(&gen(*x)).unwrap();
                let sy = na::mtd_split(&gen(*y)).unwrap();
                let b = bracket(&gen(*x), &gen(*y), &t).unwrap();
                let sb = na::mtd_split(&b).unwrap();
                let in_h = !sx.h.is_zero() && !sy.h.is_zero();
                let in_plus = (!sx.nplus.is_zero(), !sy.nplus.is_zero());
                let in_minus = (!sx.nminus.is_zero(), !sy.nminus.is_zero());
                if in_h {
                    assert!(sb.nplus.is_zero() && sb.nminus.is_zero());
                }
                if in_plus.0 && in_plus.1 {
                    assert!(b.is_zero(), "[n+,n+] != 0 at ({x},{y})");
                }
                if in_minus.0 && in_minus.1 {
                    assert!(b.is_zero(), "[n-,n-] != 0 at ({x},{y})");
                }
                if (in_plus.0 && in_minus.1) || (in_minus.0 && in_plus.1) {
                    assert!(
                        sb.nplus.is_zero() && sb.nminus.is_zero(),
                        "[n±,n∓] escaped h at ({x},{y})"
                    );
                }
                if in_h && (in_plus.1 || in_minus.1) {
                    assert!(sb.h.is_zero(), "[h,n±] escaped n± at ({x},{y})");
                }
            }
        }
    }
}

#[test]
fn zeroth_level_goldens_and_subtable_equality() {
    let zero = Rational::zero();
    let two = Rational::from_int(2);

    let t0 = na::zeroth_level_table(&zero);
    // [J_1, K_2] = K_3
    assert_eq!(
        bracket(&gen(na::j(1, 0, 0)), &gen(na::k(2, 0, 0)), &t0).unwrap(),
        gen(na::k(3, 0, 0))
    );
    // [K_1, P_1] = 0 at Λ = 0
    assert!(bracket(&gen(na::k(1, 0, 0)), &gen(na::p(1, 0, 0)), &t0)
        .unwrap()
        .is_zero());
    // [K_1, P_1] = Λ Z at Λ = 2
    let t2 = na::zeroth_level_table(&two);
    assert_eq!(
        bracket(&gen(na::k(1, 0, 0)), &gen(na::p(1, 0, 0)), &t2).unwrap(),
        AlgebraElement::term(na::z(), gr(2))
    );

    // sub-table equality with the full table at modes (0,0)
    for lambda in [zero, two] {
        let full = na::bracket_table(&lambda);
        let zeroth = na::zeroth_level_table(&lambda);
        let mut gens = Vec::new();
        for mu in 1..=3 {
            gens.push(na::j(mu, 0, 0));
            gens.push(na::k(mu, 0, 0));
            gens.push(na::p(mu, 0, 0));
        }
        gens.push(na::z());
        for x in &gens {
            for y in &gens {
                assert_eq!(
                    full.generator_bracket(x, y).unwrap(),
                    zeroth.generator_bracket(x, y).unwrap(),
                    "tables disagree at ({x}, {y})"
                );
            }
        }
    }

    // out-of-window labels are rejected
    assert!(bracket(&gen(na::j(1, 1, 0)), &gen(na::k(1, -1, 0)), &t0).is_err());
}

#[test]
fn constraint_descriptor_linear_parts() {
    use na::{ConstraintDescriptor, ConstraintVariant};

    // f̂^z_{1,0} at Λ = 0: -i Pz_{1,0}
    let d = ConstraintDescriptor::new(ConstraintVariant::Z, 1, 0, Rational::zero());
    assert_eq!(
        d.linear_part(),
        AlgebraElement::term(na::ladder(Symbol::PZ, 1, 0), gi(-1))
    );

    // f̂^z_{0,0} at Λ = 0 has no linear part
    let d = ConstraintDescriptor::new(ConstraintVariant::Z, 0, 0, Rational::zero());
    assert!(d.linear_part().is_zero());

    // Λ ≠ 0 adds Λ·Jz_{rs}
    let d = ConstraintDescriptor::new(ConstraintVariant::Z, 1, 0, Rational::from_int(3));
    let mut expect = AlgebraElement::term(na::ladder(Symbol::PZ, 1, 0), gi(-1));
    expect.add_term(na::ladder(Symbol::JZ, 1, 0), &gr(3));
    assert_eq!(d.linear_part(), expect);

    // quadratic slice of the z-variant carries the two ordered pairs
    let d = ConstraintDescriptor::new(ConstraintVariant::Z, 1, 2, Rational::zero());
    let pairs = d.quadratic_pairs(3, -1);
    assert_eq!(pairs.len(), 2);
    assert_eq!(pairs[0].0, na::ladder(Symbol::PPlus, 4, 1));
    assert_eq!(pairs[0].1, na::ladder(Symbol::KMinus, -3, 1));
    assert_eq!(pairs[0].2, GaussianRational::one());
    assert_eq!(pairs[1].0, na::ladder(Symbol::PMinus, 4, 1));
    assert_eq!(pairs[1].1, na::ladder(Symbol::KPlus, -3, 1));
    assert_eq!(pairs[1].2, gr(-1));
}

#[test]
fn abelian_embedding_is_a_homomorphism() {
    for lambda in [Rational::zero(), Rational::one()] {
        let src = torus::bracket_table(&lambda);
        let dst = na::ladder_table(&lambda);
        let phi = FnMap {
            target: AlgebraKind::NonAbelianLadder,
            f: |l: &corner_lie::GeneratorLabel| na::embed_abelian_label(l),
        };
        let gens = torus::window_generators(2);
        let mut pairs = Vec::new();
        for (i, x) in gens.iter().enumerate() {
            for y in gens.iter().skip(i + 1) {
                pairs.push((gen(*x), gen(*y)));
            }
        }
        let defects = map_defect(&phi, &pairs, &src, &dst).unwrap();
        for (d, (x, y)) in defects.iter().zip(&pairs) {
            assert!(d.is_zero(), "embedding defect {d} at ({x}, {y}), Λ = {lambda}");
        }
    }
}

#[test]
fn modes_accessor_errors_on_wrong_arity() {
    let label = corner_lie::GeneratorLabel::new(
        AlgebraKind::NonAbelian,
        Symbol::J,
        Some(1),
        Modes::One(3),
    );
    assert!(label.mode_pair().is_err());
}

#[test]
fn antisymmetry_window3_and_random_elements() {
    use corner_lie::verify;
    for lambda in [Rational::zero(), Rational::one()] {
        let t = na::bracket_table(&lambda);
        let gens = na::window_generators(3);
        assert!(verify::check_antisymmetry(&t, &gens).unwrap().is_empty());
        let mut state = 0xDECAFBADu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        // randomized antisymmetry/bilinearity with the brute-force oracle
        let bad = verify::check_random_elements(&t, &gens, 1000, &mut next).unwrap();
        assert!(bad.is_empty(), "{}", bad[0].description);
    }
    let t = torus::bracket_table(&Rational::one());
    let gens = torus::window_generators(3);
    assert!(verify::check_antisymmetry(&t, &gens).unwrap().is_empty());
}
