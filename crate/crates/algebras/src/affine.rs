//! Affine sl(2) without the derivation element, in two bases: the
//! `J_{μ,m}` loop basis with
//! `[J_{μm}, J_{νn}] = ε_{μν}^λ J_{λ,m+n} + n δ_{μν} δ_{m,−n} Z`, and
//! the matrix basis `H = −2iJ_3`, `X = J_1 − iJ_2`, `Y = −J_1 − iJ_2`
//! whose central charge is `2Z`. The rescaling puts the relations in
//! the standard form `[X(m), Y(n)] = H(m+n) + m δ_{m,−n} Z`,
//! `[H(m), H(n)] = 2m δ_{m,−n} Z` that the free-field level
//! `−(2 + ν²/2)` refers to.

use corner_exact::{GaussianRational, Rational};
use corner_lie::{AlgebraElement, AlgebraKind, BracketTable, GeneratorLabel, LieError, Modes, Symbol};

const SL2: AlgebraKind = AlgebraKind::AffineSl2;

pub fn h(n: i64) -> GeneratorLabel {
    GeneratorLabel::new(SL2, Symbol::H, None, Modes::One(n))
}

pub fn x(n: i64) -> GeneratorLabel {
    GeneratorLabel::new(SL2, Symbol::X, None, Modes::One(n))
}

pub fn y(n: i64) -> GeneratorLabel {
    GeneratorLabel::new(SL2, Symbol::Y, None, Modes::One(n))
}

pub fn j(mu: u8, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SL2, Symbol::J, Some(mu), Modes::One(m))
}

pub fn z() -> GeneratorLabel {
    GeneratorLabel::central(SL2)
}

fn one_mode(label: &GeneratorLabel) -> Result<i64, LieError> {
    match label.modes {
        Modes::One(m) => Ok(m),
        _ => Err(LieError::MalformedLabel(label.to_string())),
    }
}

/// Matrix-basis table in closed form:
/// `[H(m), X(n)] = 2X(m+n)`, `[H(m), Y(n)] = −2Y(m+n)`,
/// `[X(m), Y(n)] = H(m+n) + m δ_{m+n,0} Z`,
/// `[H(m), H(n)] = 2m δ_{m+n,0} Z`.
pub fn bracket_table() -> BracketTable {
    BracketTable::new(SL2, "affine-sl2", move |a, b| {
        let m = one_mode(a)?;
        let n = one_mode(b)?;
        let mut out = AlgebraElement::zero(SL2);
        // canonical orientation only (H < X < Y in symbol order)
        match (a.symbol, b.symbol) {
            (Symbol::H, Symbol::H) => {
                if m + n == 0 {
                    out.add_term(z(), &GaussianRational::from_int(2 * m));
                }
            }
            (Symbol::H, Symbol::X) => {
                out.add_term(x(m + n), &GaussianRational::from_int(2));
            }
            (Symbol::H, Symbol::Y) => {
                out.add_term(y(m + n), &GaussianRational::from_int(-2));
            }
            (Symbol::X, Symbol::Y) => {
                out.add_term(h(m + n), &GaussianRational::one());
                if m + n == 0 {
                    out.add_term(z(), &GaussianRational::from_int(m));
                }
            }
            _ => {}
        }
        Ok(out)
    })
}

/// Loop-basis table `[J_{μm}, J_{νn}] = ε J_{λ,m+n} + n δδ Z`.
pub fn j_basis_table() -> BracketTable {
    BracketTable::new(SL2, "affine-sl2-loop", move |a, b| {
        let m = one_mode(a)?;
        let n = one_mode(b)?;
        let mu = a.lie_index.ok_or_else(|| LieError::MalformedLabel(a.to_string()))?;
        let nu = b.lie_index.ok_or_else(|| LieError::MalformedLabel(b.to_string()))?;
        if a.symbol != Symbol::J || b.symbol != Symbol::J {
            return Err(LieError::UndefinedOnGenerator(format!("{a}, {b}")));
        }
        let mut out = AlgebraElement::zero(SL2);
        match (mu, nu) {
            (1, 2) => out.add_term(j(3, m + n), &GaussianRational::one()),
            (2, 3) => out.add_term(j(1, m + n), &GaussianRational::one()),
            (1, 3) => out.add_term(j(2, m + n), &GaussianRational::from_int(-1)),
            _ => {}
        }
        if mu == nu && m == -n {
            out.add_term(z(), &GaussianRational::from_int(n));
        }
        Ok(out)
    })
}

/// `H(m) = −2iJ_{3m}`, `X(m) = J_{1m} − iJ_{2m}`, `Y(m) = −J_{1m} − iJ_{2m}`,
/// and the matrix-basis central charge is twice the loop-basis one.
pub fn to_loop_basis(label: &GeneratorLabel) -> Result<AlgebraElement, LieError> {
    if label.symbol == Symbol::Z {
        return Ok(AlgebraElement::term(z(), GaussianRational::from_int(2)));
    }
    let m = one_mode(label)?;
    match label.symbol {
        Symbol::H => Ok(AlgebraElement::term(j(3, m), GaussianRational::int_i(-2))),
        Symbol::X => AlgebraElement::from_terms(
            SL2,
            [
                (j(1, m), GaussianRational::one()),
                (j(2, m), GaussianRational::int_i(-1)),
            ],
        ),
        Symbol::Y => AlgebraElement::from_terms(
            SL2,
            [
                (j(1, m), GaussianRational::from_int(-1)),
                (j(2, m), GaussianRational::int_i(-1)),
            ],
        ),
        _ => Err(LieError::UndefinedOnGenerator(label.to_string())),
    }
}

/// Inverse change of basis: `J_1 = ½(X − Y)`, `J_2 = (i/2)(X + Y)`,
/// `J_3 = (i/2)H`, loop-basis `Z` mapping to half the matrix-basis one.
pub fn from_loop_basis(label: &GeneratorLabel) -> Result<AlgebraElement, LieError> {
    if label.symbol == Symbol::Z {
        return Ok(AlgebraElement::term(
            z(),
            GaussianRational::from_rational(Rational::new(1, 2)),
        ));
    }
    let m = one_mode(label)?;
    let half = GaussianRational::from_rational(Rational::new(1, 2));
    let half_i = GaussianRational::new(Rational::zero(), Rational::new(1, 2));
    match label.lie_index {
        Some(1) => AlgebraElement::from_terms(
            SL2,
            [(x(m), half.clone()), (y(m), -&half)],
        ),
        Some(2) => AlgebraElement::from_terms(
            SL2,
            [(x(m), half_i.clone()), (y(m), half_i)],
        ),
        Some(3) => Ok(AlgebraElement::term(h(m), half_i)),
        _ => Err(LieError::MalformedLabel(label.to_string())),
    }
}

/// Matrix-basis generators with modes in `[-w, w]`, plus `Z`.
pub fn window_generators(w: i64) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    for m in -w..=w {
        out.push(h(m));
        out.push(x(m));
        out.push(y(m));
    }
    out.push(z());
    out
}
