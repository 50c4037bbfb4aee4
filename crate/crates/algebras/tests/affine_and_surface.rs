//! Affine sl(2) table vs its loop-basis derivation, and the surface
//! algebra: goldens, Darboux normalization, classification, constraints.

use corner_algebras::surface::{self, fixtures, SpectralData};
use corner_algebras::affine;
use corner_exact::{GaussianRational, Rational};
use corner_lie::{bracket, map_defect, verify, AlgebraElement, AlgebraKind, FnMap};

fn gen(l: corner_lie::GeneratorLabel) -> AlgebraElement {
    AlgebraElement::generator(l)
}

fn gr(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

#[test]
fn affine_closed_form_matches_loop_basis_expansion() {
    let table = affine::bracket_table();
    let loop_table = affine::j_basis_table();
    // oracle: push both arguments through the basis change, bracket in
    // the loop basis, and pull the result back
    let via_loop = |x: &corner_lie::GeneratorLabel, y: &corner_lie::GeneratorLabel| {
        let xs = affine::to_loop_basis(x).unwrap();
        let ys = affine::to_loop_basis(y).unwrap();
        let b = bracket(&xs, &ys, &loop_table).unwrap();
        let mut out = AlgebraElement::zero(AlgebraKind::AffineSl2);
        for (l, c) in b.terms() {
            out.add_scaled(&affine::from_loop_basis(l).unwrap(), c);
        }
        out
    };
    let gens = affine::window_generators(3);
    for x in &gens {
        for y in &gens {
            assert_eq!(
                table.generator_bracket(x, y).unwrap(),
                via_loop(x, y),
                "closed form disagrees with loop expansion at ({x}, {y})"
            );
        }
    }
}

#[test]
fn affine_goldens() {
    let t = affine::bracket_table();
    // [X(1), Y(-1)] = H(0) + Z
    let b = bracket(&gen(affine::x(1)), &gen(affine::y(-1)), &t).unwrap();
    let expect = gen(affine::h(0)).add(&AlgebraElement::term(affine::z(), gr(1)));
    assert_eq!(b, expect);
    // [H(2), X(-1)] = 2X(1)
    assert_eq!(
        bracket(&gen(affine::h(2)), &gen(affine::x(-1)), &t).unwrap(),
        gen(affine::x(1)).scale(&gr(2))
    );
    // [H(1), H(-1)] = 2Z
    assert_eq!(
        bracket(&gen(affine::h(1)), &gen(affine::h(-1)), &t).unwrap(),
        AlgebraElement::term(affine::z(), gr(2))
    );
    // loop-basis round trip
    for g in affine::window_generators(3) {
        let x = gen(g);
        let mut back = AlgebraElement::zero(AlgebraKind::AffineSl2);
        for (l, c) in affine::to_loop_basis(&g).unwrap().terms() {
            back.add_scaled(&affine::from_loop_basis(l).unwrap(), c);
        }
        assert_eq!(back, x);
    }
}

#[test]
fn surface_bracket_goldens() {
    // λ_1 = 2 with R(1) = 3
    let sd = SpectralData::new(
        vec![Rational::from_int(2)],
        vec![1, 3],
        0,
        vec![],
    )
    .unwrap();
    let t0 = surface::bracket_table(&sd, &Rational::zero());

    // [A_{1,2}, H_{1,2}] = -λ_1 Z = -2Z
    assert_eq!(
        bracket(&gen(surface::a(1, 2)), &gen(surface::h(1, 2)), &t0).unwrap(),
        AlgebraElement::term(surface::z(), gr(-2))
    );
    // [G_{1,1}, H_{1,1}] = 0 at Λ = 0
    assert!(bracket(&gen(surface::g(1, 1)), &gen(surface::h(1, 1)), &t0)
        .unwrap()
        .is_zero());
    // [A, G] = 0 always
    assert!(bracket(&gen(surface::a(1, 1)), &gen(surface::g(1, 1)), &t0)
        .unwrap()
        .is_zero());

    // torus-like pairing with Λ = 1: [γ_1, γ_2] = -b_{12} Z = -Z
    let sd = fixtures::torus_like();
    let t1 = surface::bracket_table(&sd, &Rational::one());
    assert_eq!(
        bracket(&gen(surface::gamma(1)), &gen(surface::gamma(2)), &t1).unwrap(),
        AlgebraElement::term(surface::z(), gr(-1))
    );

    // labels out of the spectral ranges are rejected
    assert!(bracket(&gen(surface::a(5, 1)), &gen(surface::h(1, 1)), &t1).is_err());
    assert!(bracket(&gen(surface::a(1, 1)), &gen(surface::h(1, 9)), &t1).is_err());
    assert!(bracket(&gen(surface::gamma(3)), &gen(surface::gamma(1)), &t1).is_err());
}

#[test]
fn darboux_goldens() {
    // already block-diagonal: identity basis, μ = (1)
    let sd = fixtures::torus_like();
    let d = surface::darboux_normalize(&sd).unwrap();
    assert_eq!(d.mu, vec![Rational::one()]);
    assert_eq!(
        d.basis,
        vec![
            vec![Rational::one(), Rational::zero()],
            vec![Rational::zero(), Rational::one()],
        ]
    );

    // b = [[0,3],[-3,0]]: μ = (3)
    let sd = SpectralData::new(
        vec![Rational::one()],
        vec![1, 1],
        2,
        vec![
            vec![Rational::zero(), Rational::from_int(3)],
            vec![Rational::from_int(-3), Rational::zero()],
        ],
    )
    .unwrap();
    let d = surface::darboux_normalize(&sd).unwrap();
    assert_eq!(d.mu, vec![Rational::from_int(3)]);

    // genus-2 fixture: two blocks
    let sd = fixtures::genus2_like();
    let d = surface::darboux_normalize(&sd).unwrap();
    assert_eq!(d.mu.len(), 2);
    assert!(d.mu.iter().all(|m| !m.is_negative() && !m.is_zero()));
    check_congruence(&sd, &d);

    // degenerate pairing is an error
    let degenerate = SpectralData::new(
        vec![Rational::one()],
        vec![1, 1],
        2,
        vec![
            vec![Rational::zero(), Rational::zero()],
            vec![Rational::zero(), Rational::zero()],
        ],
    )
    .unwrap();
    assert!(surface::darboux_normalize(&degenerate).is_err());
}

/// Mᵀ b M = ⊕ μ_i ε, checked entry by entry.
fn check_congruence(sd: &SpectralData, d: &surface::Darboux) {
    let n = sd.h1_dim();
    for i in 0..n {
        for j in 0..n {
            let mut acc = Rational::zero();
            for r in 0..n {
                for c in 0..n {
                    acc = acc.add(&d.basis[i][r].mul(sd.pairing(r, c)).mul(&d.basis[j][c]));
                }
            }
            let expect = if i / 2 == j / 2 {
                if i % 2 == 0 && j == i + 1 {
                    d.mu[i / 2].clone()
                } else if i % 2 == 1 && j + 1 == i {
                    d.mu[i / 2].neg()
                } else {
                    Rational::zero()
                }
            } else {
                Rational::zero()
            };
            assert_eq!(acc, expect, "congruence failed at ({i},{j})");
        }
    }
}

/// Independent oracle: random skew matrices built as Qᵀ(⊕ε)Q for a
/// random unimodular-ish Q are non-degenerate; Darboux output must
/// satisfy the congruence identity exactly.
#[test]
fn darboux_random_four_by_four() {
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..25 {
        let n = 4usize;
        // random integer matrix with det ±1 via random shears
        let mut q: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        for _ in 0..12 {
            let a = (next() % n as u64) as usize;
            let b = (next() % n as u64) as usize;
            if a == b {
                continue;
            }
            let f = (next() % 5) as i64 - 2;
            for c in 0..n {
                q[a][c] += f * q[b][c];
            }
        }
        // b = Qᵀ (ε ⊕ ε) Q, skew and non-degenerate
        let eps = |r: usize, c: usize| -> i64 {
            match (r, c) {
                (0, 1) | (2, 3) => 1,
                (1, 0) | (3, 2) => -1,
                _ => 0,
            }
        };
        let mut b = vec![vec![Rational::zero(); n]; n];
        #[allow(clippy::needless_range_loop)]
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0i64;
                for s in 0..n {
                    for t in 0..n {
                        acc += q[s][r] * eps(s, t) * q[t][c];
                    }
                }
                b[r][c] = Rational::from_int(acc);
            }
        }
        let sd = SpectralData::new(vec![Rational::one()], vec![1, 1], 4, b).unwrap();
        let d = surface::darboux_normalize(&sd).unwrap();
        assert!(d.mu.iter().all(|m| !m.is_negative() && !m.is_zero()));
        check_congruence(&sd, &d);
    }
}

#[test]
fn surface_classification_goldens() {
    let sd = fixtures::torus_like();
    let zero = Rational::zero();
    let four = Rational::from_int(4);

    // A_{1,1} → c_{1,1} at Λ = 0
    let img = surface::to_oscillator(&gen(surface::a(1, 1)), &sd, &zero, None).unwrap();
    assert_eq!(img, gen(surface::osc_c(1, 1)));

    // H_{1,1} → -λ_1 c†_{1,1} (here λ_1 = 1 for the torus fixture)
    let img = surface::to_oscillator(&gen(surface::h(1, 1)), &sd, &zero, None).unwrap();
    assert_eq!(img, gen(surface::osc_cdag(1, 1)).scale(&gr(-1)));

    // [w_{1,1}, w†_{1,1}] = Z at Λ = 4 via the oscillator table
    let osc = surface::oscillator_table(&sd, &four);
    assert_eq!(
        bracket(&gen(surface::osc_w(1, 1)), &gen(surface::osc_wdag(1, 1)), &osc).unwrap(),
        gen(surface::z())
    );
}

#[test]
fn surface_classification_is_a_homomorphism() {
    for sd in [fixtures::torus_like(), fixtures::sphere_like(), fixtures::genus2_like()] {
        for lambda in [Rational::zero(), Rational::one()] {
            let darboux = if lambda.is_zero() || sd.h1_dim() == 0 {
                None
            } else {
                Some(surface::darboux_normalize(&sd).unwrap())
            };
            let src = surface::bracket_table(&sd, &lambda);
            let dst = surface::oscillator_table(&sd, &lambda);
            let sdc = sd.clone();
            let lamc = lambda.clone();
            let phi = FnMap {
                target: AlgebraKind::AbelianSurface,
                f: move |l: &corner_lie::GeneratorLabel| {
                    surface::to_oscillator_label(l, &sdc, &lamc, darboux.as_ref())
                },
            };
            let gens = surface::window_generators(&sd);
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
}

#[test]
fn surface_constraints_and_survivors() {
    let sd = fixtures::torus_like();
    let zero = Rational::zero();
    let two = Rational::from_int(2);

    // (1,1) at Λ = 0 → G_{1,1}
    assert_eq!(
        surface::constraint(1, 1, &zero, &sd).unwrap(),
        gen(surface::g(1, 1))
    );
    // (0,1) at Λ = 0 → 0
    assert!(surface::constraint(0, 1, &zero, &sd).unwrap().is_zero());
    // (0,1) at Λ = 2 → -2 A_{0,1}
    assert_eq!(
        surface::constraint(0, 1, &two, &sd).unwrap(),
        gen(surface::a(0, 1)).scale(&gr(-2))
    );
    // out-of-range index
    assert!(surface::constraint(9, 1, &zero, &sd).is_err());

    // constraints are central
    for lambda in [zero.clone(), two.clone()] {
        let table = surface::bracket_table(&sd, &lambda);
        let gens = surface::window_generators(&sd);
        let mut candidates = Vec::new();
        for l in 0..=sd.max_level() {
            for m in 1..=sd.mult(l).unwrap() as i64 {
                candidates.push(surface::constraint(l, m, &lambda, &sd).unwrap());
            }
        }
        let bad = verify::check_central(&table, &candidates, &gens).unwrap();
        assert!(bad.is_empty(), "{}", bad[0].description);
    }

    // survivor counts: R(0) + dim H¹ at Λ = 0, none otherwise;
    // for a genus-g fixture with R(0) = 1 this is 2g + 1
    assert_eq!(surface::quotient_survivors(&sd, &zero).len(), 3);
    assert_eq!(surface::quotient_survivors(&sd, &two).len(), 0);
    let g2 = fixtures::genus2_like();
    assert_eq!(surface::quotient_survivors(&g2, &zero).len(), 5);
}

#[test]
fn spectral_data_validation_and_json() {
    // invalid: non-increasing eigenvalues
    assert!(SpectralData::new(
        vec![Rational::from_int(2), Rational::from_int(2)],
        vec![1, 1, 1],
        0,
        vec![],
    )
    .is_err());
    // invalid: odd h1
    assert!(SpectralData::new(vec![], vec![1], 1, vec![vec![Rational::zero()]]).is_err());
    // invalid: non-skew pairing
    assert!(SpectralData::new(
        vec![],
        vec![1],
        2,
        vec![
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::zero()],
        ],
    )
    .is_err());

    let sd = fixtures::genus2_like();
    let s = serde_json::to_string(&sd).unwrap();
    let back: SpectralData = serde_json::from_str(&s).unwrap();
    assert_eq!(back, sd);
}
