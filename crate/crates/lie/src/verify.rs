//! Exhaustive and randomized drivers for the Lie axioms. A check
//! returns witnesses of failure; an empty list means the property held
//! on the swept set.

use corner_exact::{GaussianRational, Rational};

use crate::{bracket, jacobi_defect, AlgebraElement, BracketTable, GeneratorLabel, LieError};

/// A violated identity, with the inputs that produced it.
#[derive(Clone, Debug)]
pub struct Witness {
    pub description: String,
    pub defect: AlgebraElement,
}

/// Antisymmetry on every ordered generator pair.
pub fn check_antisymmetry(
    table: &BracketTable,
    gens: &[GeneratorLabel],
) -> Result<Vec<Witness>, LieError> {
    let mut bad = Vec::new();
    for x in gens {
        for y in gens {
            let xy = table.generator_bracket(x, y)?;
            let yx = table.generator_bracket(y, x)?;
            if !xy.add(&yx).is_zero() {
                bad.push(Witness {
                    description: format!("[{x},{y}] + [{y},{x}] != 0"),
                    defect: xy.add(&yx),
                });
            }
        }
    }
    Ok(bad)
}

/// Jacobi identity on unordered generator triples. The defect is fully
/// antisymmetric in its arguments and vanishes identically when two
/// arguments coincide, so distinct unordered triples are exhaustive.
pub fn check_jacobi(
    table: &BracketTable,
    gens: &[GeneratorLabel],
) -> Result<Vec<Witness>, LieError> {
    let mut bad = Vec::new();
    let n = gens.len();
    for i in 0..n {
        let x = AlgebraElement::generator(gens[i]);
        for j in (i + 1)..n {
            let y = AlgebraElement::generator(gens[j]);
            let xy = bracket(&x, &y, table)?;
            for k in (j + 1)..n {
                let z = AlgebraElement::generator(gens[k]);
                let mut defect = bracket(&z, &xy, table)?;
                defect.add_scaled(
                    &bracket(&x, &bracket(&y, &z, table)?, table)?,
                    &GaussianRational::one(),
                );
                defect.add_scaled(
                    &bracket(&y, &bracket(&z, &x, table)?, table)?,
                    &GaussianRational::one(),
                );
                if !defect.is_zero() {
                    bad.push(Witness {
                        description: format!(
                            "jacobi({},{},{}) != 0",
                            gens[i], gens[j], gens[k]
                        ),
                        defect,
                    });
                }
            }
        }
    }
    Ok(bad)
}

/// Antisymmetry and bilinearity on random finitely supported elements,
/// checked against a brute-force double loop; the RNG is any source of
/// `u64`s so callers control seeding.
pub fn check_random_elements(
    table: &BracketTable,
    gens: &[GeneratorLabel],
    rounds: usize,
    next: &mut dyn FnMut() -> u64,
) -> Result<Vec<Witness>, LieError> {
    let mut bad = Vec::new();
    let random_element = |next: &mut dyn FnMut() -> u64| {
        let nterms = (next() % 4 + 1) as usize;
        let mut e = AlgebraElement::zero(table.algebra());
        for _ in 0..nterms {
            let g = gens[(next() % gens.len() as u64) as usize];
            let num = (next() % 9) as i64 - 4;
            let den = (next() % 3) as i64 + 1;
            let re = Rational::new(num, den);
            let im = Rational::new((next() % 5) as i64 - 2, 1);
            e.add_term(g, &GaussianRational::new(re, im));
        }
        e
    };
    for round in 0..rounds {
        let x = random_element(next);
        let y = random_element(next);
        let xy = bracket(&x, &y, table)?;
        let yx = bracket(&y, &x, table)?;
        if !xy.add(&yx).is_zero() {
            bad.push(Witness {
                description: format!("random antisymmetry failure, round {round}"),
                defect: xy.add(&yx),
            });
        }
        // brute-force oracle: expand the double sum over coefficient
        // pairs by hand instead of through `bracket`
        let mut oracle = AlgebraElement::zero(table.algebra());
        for (gx, cx) in x.terms() {
            for (gy, cy) in y.terms() {
                oracle.add_scaled(&table.generator_bracket(gx, gy)?, &(cx * cy));
            }
        }
        if oracle != xy {
            bad.push(Witness {
                description: format!("bilinearity mismatch vs oracle, round {round}"),
                defect: oracle.sub(&xy),
            });
        }
        if !jacobi_defect(&x, &y, &x, table)?.is_zero() {
            bad.push(Witness {
                description: format!("jacobi(x,y,x) != 0, round {round}"),
                defect: jacobi_defect(&x, &y, &x, table)?,
            });
        }
    }
    Ok(bad)
}

/// Centrality of a set of elements: bracket with every window generator
/// must vanish.
pub fn check_central(
    table: &BracketTable,
    candidates: &[AlgebraElement],
    gens: &[GeneratorLabel],
) -> Result<Vec<Witness>, LieError> {
    let mut bad = Vec::new();
    for c in candidates {
        for g in gens {
            let b = bracket(c, &AlgebraElement::generator(*g), table)?;
            if !b.is_zero() {
                bad.push(Witness {
                    description: format!("[{c}, {g}] != 0"),
                    defect: b,
                });
            }
        }
    }
    Ok(bad)
}
