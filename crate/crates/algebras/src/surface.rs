//! The abelian corner algebra on an arbitrary closed oriented surface,
//! parametrized by user-supplied spectral data: Laplacian eigenvalues
//! with multiplicities and the skew pairing on harmonic 1-forms.

use corner_exact::{GaussianRational, Rational};
use corner_lie::{AlgebraElement, AlgebraKind, BracketTable, GeneratorLabel, LieError, Modes, Symbol};
use serde::{Deserialize, Serialize};

const SURF: AlgebraKind = AlgebraKind::AbelianSurface;

/// Spectral input: `eigenvalues[i]` is λ_{i+1} (λ_0 = 0 implicit),
/// `multiplicities[l]` is R(l) for levels 0..=L, `pairing` is the
/// skew-symmetric matrix `b_{rr'} = ∫ γ_r ∧ γ_{r'}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    eigenvalues: Vec<Rational>,
    multiplicities: Vec<u32>,
    h1_dim: usize,
    pairing: Vec<Vec<Rational>>,
}

impl SpectralData {
    pub fn new(
        eigenvalues: Vec<Rational>,
        multiplicities: Vec<u32>,
        h1_dim: usize,
        pairing: Vec<Vec<Rational>>,
    ) -> Result<Self, LieError> {
        if multiplicities.len() != eigenvalues.len() + 1 {
            return Err(LieError::Invalid(
                "need one multiplicity per level, including level 0".into(),
            ));
        }
        if multiplicities.iter().any(|&r| r == 0) {
            return Err(LieError::Invalid("multiplicities must be positive".into()));
        }
        let mut prev = Rational::zero();
        for ev in &eigenvalues {
            if *ev <= prev {
                return Err(LieError::Invalid(
                    "eigenvalues must be strictly increasing and positive".into(),
                ));
            }
            prev = ev.clone();
        }
        if h1_dim % 2 != 0 {
            return Err(LieError::Invalid("dim H¹ must be even".into()));
        }
        if pairing.len() != h1_dim || pairing.iter().any(|row| row.len() != h1_dim) {
            return Err(LieError::Invalid("pairing must be h1_dim × h1_dim".into()));
        }
        for r in 0..h1_dim {
            for c in 0..h1_dim {
                if pairing[r][c] != pairing[c][r].neg() {
                    return Err(LieError::Invalid("pairing must be skew-symmetric".into()));
                }
            }
        }
        Ok(SpectralData {
            eigenvalues,
            multiplicities,
            h1_dim,
            pairing,
        })
    }

    /// Highest level carried by this data.
    pub fn max_level(&self) -> i64 {
        self.eigenvalues.len() as i64
    }

    pub fn lambda_l(&self, l: i64) -> Option<Rational> {
        if l == 0 {
            Some(Rational::zero())
        } else {
            self.eigenvalues.get(l as usize - 1).cloned()
        }
    }

    pub fn mult(&self, l: i64) -> Option<u32> {
        if l < 0 {
            None
        } else {
            self.multiplicities.get(l as usize).copied()
        }
    }

    pub fn h1_dim(&self) -> usize {
        self.h1_dim
    }

    pub fn pairing(&self, r: usize, rp: usize) -> &Rational {
        &self.pairing[r][rp]
    }

    fn check_a(&self, l: i64, m: i64) -> Result<(), LieError> {
        let ok = l >= 0
            && self.mult(l).is_some_and(|r| m >= 1 && m <= r as i64);
        if ok {
            Ok(())
        } else {
            Err(LieError::LabelOutOfRange(format!("A,{l},{m}")))
        }
    }

    fn check_gh(&self, l: i64, m: i64) -> Result<(), LieError> {
        let ok = l >= 1
            && self.mult(l).is_some_and(|r| m >= 1 && m <= r as i64);
        if ok {
            Ok(())
        } else {
            Err(LieError::LabelOutOfRange(format!("G/H,{l},{m}")))
        }
    }

    fn check_gamma(&self, r: i64) -> Result<(), LieError> {
        if r >= 1 && r <= self.h1_dim as i64 {
            Ok(())
        } else {
            Err(LieError::LabelOutOfRange(format!("gamma,{r}")))
        }
    }

    pub fn validate_label(&self, label: &GeneratorLabel) -> Result<(), LieError> {
        match (label.symbol, label.modes) {
            (Symbol::Z, _) => Ok(()),
            (Symbol::A, Modes::Two(l, m)) => self.check_a(l, m),
            (Symbol::G, Modes::Two(l, m)) | (Symbol::H, Modes::Two(l, m)) => self.check_gh(l, m),
            (Symbol::Gamma, Modes::One(r)) => self.check_gamma(r),
            _ => Err(LieError::MalformedLabel(label.to_string())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SpectralDataWire {
    eigenvalues: Vec<String>,
    multiplicities: Vec<u32>,
    h1_dim: usize,
    pairing: Vec<Vec<String>>,
}

impl Serialize for SpectralData {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = SpectralDataWire {
            eigenvalues: self.eigenvalues.iter().map(|r| r.to_string()).collect(),
            multiplicities: self.multiplicities.clone(),
            h1_dim: self.h1_dim,
            pairing: self
                .pairing
                .iter()
                .map(|row| row.iter().map(|r| r.to_string()).collect())
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpectralData {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = SpectralDataWire::deserialize(deserializer)?;
        let parse = |s: &String| -> Result<Rational, D::Error> {
            s.parse().map_err(D::Error::custom)
        };
        let eigenvalues = wire.eigenvalues.iter().map(parse).collect::<Result<_, _>>()?;
        let pairing = wire
            .pairing
            .iter()
            .map(|row| row.iter().map(parse).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        SpectralData::new(eigenvalues, wire.multiplicities, wire.h1_dim, pairing)
            .map_err(D::Error::custom)
    }
}

pub fn a(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::A, None, Modes::Two(l, m))
}

pub fn g(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::G, None, Modes::Two(l, m))
}

pub fn h(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::H, None, Modes::Two(l, m))
}

pub fn gamma(r: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::Gamma, None, Modes::One(r))
}

pub fn z() -> GeneratorLabel {
    GeneratorLabel::central(SURF)
}

pub fn osc_c(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::OscC, None, Modes::Two(l, m))
}

pub fn osc_cdag(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::OscCDag, None, Modes::Two(l, m))
}

pub fn osc_w(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::OscW, None, Modes::Two(l, m))
}

pub fn osc_wdag(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::OscWDag, None, Modes::Two(l, m))
}

pub fn w_hat(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::WHat, None, Modes::Two(l, m))
}

pub fn a_hat(m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::AHat, None, Modes::One(m))
}

pub fn g_hat(l: i64, m: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::GHat, None, Modes::Two(l, m))
}

pub fn gamma_hat(r: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::GammaHat, None, Modes::One(r))
}

pub fn gamma_tilde(k: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::GammaTilde, None, Modes::One(k))
}

pub fn gamma_tilde_dag(k: i64) -> GeneratorLabel {
    GeneratorLabel::new(SURF, Symbol::GammaTildeDag, None, Modes::One(k))
}

/// Field-basis bracket table:
/// `[A_{lm}, H_{l'm'}] = −λ_{l'} δ δ Z`,
/// `[G_{lm}, H_{l'm'}] = −Λ λ_{l'} δ δ Z`,
/// `[γ_r, γ_{r'}] = −Λ b_{rr'} Z`, everything else zero.
pub fn bracket_table(sd: &SpectralData, lambda: &Rational) -> BracketTable {
    let sd = sd.clone();
    let lam = lambda.clone();
    BracketTable::new(SURF, "abelian-surface", move |x, y| {
        sd.validate_label(x)?;
        sd.validate_label(y)?;
        let mut out = AlgebraElement::zero(SURF);
        // canonical orientation only: A < G < H < gamma in symbol order
        match (x.symbol, y.symbol) {
            (Symbol::A, Symbol::H) | (Symbol::G, Symbol::H) => {
                let (l, m) = x.mode_pair()?;
                let (lp, mp) = y.mode_pair()?;
                if l == lp && m == mp {
                    let lam_l = sd.lambda_l(lp).expect("validated");
                    let mut c = lam_l.neg();
                    if x.symbol == Symbol::G {
                        c = c.mul(&lam);
                    }
                    out.add_term(z(), &GaussianRational::from_rational(c));
                }
            }
            (Symbol::Gamma, Symbol::Gamma) => {
                let (r, rp) = match (x.modes, y.modes) {
                    (Modes::One(r), Modes::One(rp)) => (r, rp),
                    _ => unreachable!("validated"),
                };
                let b = sd.pairing(r as usize - 1, rp as usize - 1);
                out.add_term(
                    z(),
                    &GaussianRational::from_rational(b.neg().mul(&lam)),
                );
            }
            _ => {}
        }
        Ok(out)
    })
}

/// Oscillator-form table for the surface: `[c, c†] = Z` (Λ = 0) or
/// `[w, w†] = Z` and `[γ̃_k, γ̃†_k] = Z` (Λ ≠ 0); hats are central.
pub fn oscillator_table(_sd: &SpectralData, lambda: &Rational) -> BracketTable {
    let lambda_zero = lambda.is_zero();
    BracketTable::new(SURF, "surface-oscillator", move |x, y| {
        let coeff = match (x.symbol, y.symbol) {
            (Symbol::OscC, Symbol::OscCDag) if lambda_zero && x.modes == y.modes => {
                GaussianRational::one()
            }
            (Symbol::OscW, Symbol::OscWDag) if !lambda_zero && x.modes == y.modes => {
                GaussianRational::one()
            }
            (Symbol::GammaTilde, Symbol::GammaTildeDag)
                if !lambda_zero && x.modes == y.modes =>
            {
                GaussianRational::one()
            }
            _ => GaussianRational::zero(),
        };
        Ok(AlgebraElement::term(z(), coeff))
    })
}

/// Darboux normalization of the harmonic pairing: an invertible basis
/// change `M` with `Mᵀ b M = ⊕ μ_i ε`, all `μ_i > 0`.
#[derive(Clone, Debug)]
pub struct Darboux {
    /// Columns are the new basis vectors in the old γ coordinates.
    pub basis: Vec<Vec<Rational>>,
    pub mu: Vec<Rational>,
}

fn skew_form(b: &SpectralData, u: &[Rational], v: &[Rational]) -> Rational {
    let n = b.h1_dim();
    let mut acc = Rational::zero();
    for r in 0..n {
        if u[r].is_zero() {
            continue;
        }
        for c in 0..n {
            if v[c].is_zero() {
                continue;
            }
            acc = acc.add(&u[r].mul(b.pairing(r, c)).mul(&v[c]));
        }
    }
    acc
}

/// Symplectic Gram–Schmidt over the rationals.
pub fn darboux_normalize(sd: &SpectralData) -> Result<Darboux, LieError> {
    let n = sd.h1_dim();
    let mut pool: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    let mut basis = Vec::new();
    let mut mu = Vec::new();
    while !pool.is_empty() {
        let mut u = pool.remove(0);
        let partner = pool
            .iter()
            .position(|v| !skew_form(sd, &u, v).is_zero())
            .ok_or_else(|| LieError::Invalid("degenerate harmonic pairing".into()))?;
        let mut v = pool.remove(partner);
        let mut m = skew_form(sd, &u, &v);
        if m.is_negative() {
            std::mem::swap(&mut u, &mut v);
            m = m.neg();
        }
        // sweep the pair out of the remaining vectors
        for w in pool.iter_mut() {
            let cu = skew_form(sd, w, &v).div(&m).expect("mu nonzero");
            let cv = skew_form(sd, w, &u).div(&m).expect("mu nonzero");
            for r in 0..n {
                let shift = cv.mul(&v[r]).sub(&cu.mul(&u[r]));
                w[r] = w[r].add(&shift);
            }
        }
        basis.push(u);
        basis.push(v);
        mu.push(m);
    }
    Ok(Darboux { basis, mu })
}

/// Exact inverse of a square rational matrix given by columns.
fn invert_columns(cols: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, LieError> {
    let n = cols.len();
    // rows of [M | I]
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = (0..n).map(|c| cols[c][r].clone()).collect();
            row.extend((0..n).map(|c| {
                if c == r {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or_else(|| LieError::Invalid("singular basis change".into()))?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inv().expect("nonzero pivot");
        for x in aug[col].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let s = aug[col][c].mul(&f);
                    aug[r][c] = aug[r][c].sub(&s);
                }
            }
        }
    }
    // inverse, as rows
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Classification map onto the oscillator form. For Λ = 0:
/// `c_{lm} = A_{lm}`, `c†_{lm} = −H_{lm}/λ_l`; for Λ ≠ 0:
/// `w_{lm} = ½(A_{lm} + G_{lm}/Λ)`, `ŵ_{lm} = ½(A_{lm} − G_{lm}/Λ)`,
/// `w†_{lm} = −H_{lm}/λ_l`, and the Darboux-normalized harmonic pairs.
pub fn to_oscillator_label(
    label: &GeneratorLabel,
    sd: &SpectralData,
    lambda: &Rational,
    darboux: Option<&Darboux>,
) -> Result<AlgebraElement, LieError> {
    sd.validate_label(label)?;
    let lz = lambda.is_zero();
    match (label.symbol, label.modes) {
        (Symbol::Z, _) => Ok(AlgebraElement::generator(z())),
        (Symbol::A, Modes::Two(0, m)) => Ok(AlgebraElement::generator(a_hat(m))),
        (Symbol::A, Modes::Two(l, m)) => {
            if lz {
                Ok(AlgebraElement::generator(osc_c(l, m)))
            } else {
                AlgebraElement::from_terms(
                    SURF,
                    [
                        (osc_w(l, m), GaussianRational::one()),
                        (w_hat(l, m), GaussianRational::one()),
                    ],
                )
            }
        }
        (Symbol::G, Modes::Two(l, m)) => {
            if lz {
                Ok(AlgebraElement::generator(g_hat(l, m)))
            } else {
                // G = Λ(w − ŵ)
                let lam = GaussianRational::from_rational(lambda.clone());
                AlgebraElement::from_terms(
                    SURF,
                    [(osc_w(l, m), lam.clone()), (w_hat(l, m), -&lam)],
                )
            }
        }
        (Symbol::H, Modes::Two(l, m)) => {
            let lam_l = sd.lambda_l(l).expect("validated");
            let c = GaussianRational::from_rational(lam_l.neg());
            let dag = if lz { osc_cdag(l, m) } else { osc_wdag(l, m) };
            Ok(AlgebraElement::term(dag, c))
        }
        (Symbol::Gamma, Modes::One(r)) => {
            if lz {
                Ok(AlgebraElement::generator(gamma_hat(r)))
            } else {
                let d = darboux.ok_or_else(|| {
                    LieError::Invalid("Λ ≠ 0 surface classification needs Darboux data".into())
                })?;
                let inv = invert_columns(&d.basis)?;
                let mut out = AlgebraElement::zero(SURF);
                let n = sd.h1_dim();
                for jcol in 0..n {
                    let coeff = inv[jcol][r as usize - 1].clone();
                    if coeff.is_zero() {
                        continue;
                    }
                    let pair = jcol / 2;
                    if jcol % 2 == 0 {
                        out.add_term(
                            gamma_tilde(pair as i64 + 1),
                            &GaussianRational::from_rational(coeff),
                        );
                    } else {
                        // ν_{2k+1} = (−Λ μ_k) γ̃†_k
                        let scale = lambda.neg().mul(&d.mu[pair]);
                        out.add_term(
                            gamma_tilde_dag(pair as i64 + 1),
                            &GaussianRational::from_rational(coeff.mul(&scale)),
                        );
                    }
                }
                Ok(out)
            }
        }
        _ => Err(LieError::UndefinedOnGenerator(label.to_string())),
    }
}

pub fn to_oscillator(
    x: &AlgebraElement,
    sd: &SpectralData,
    lambda: &Rational,
    darboux: Option<&Darboux>,
) -> Result<AlgebraElement, LieError> {
    let mut out = AlgebraElement::zero(SURF);
    for (l, c) in x.terms() {
        out.add_scaled(&to_oscillator_label(l, sd, lambda, darboux)?, c);
    }
    Ok(out)
}

/// The constraint element at level `l`, multiplicity `m`:
/// `Ĝ_{lm}` for Λ = 0 (zero at l = 0), `G_{lm} − Λ A_{lm}` for Λ ≠ 0
/// (`−Λ Â_m` at l = 0).
pub fn constraint(
    l: i64,
    m: i64,
    lambda: &Rational,
    sd: &SpectralData,
) -> Result<AlgebraElement, LieError> {
    sd.validate_label(&a(l, m))?;
    let mut out = AlgebraElement::zero(SURF);
    if l != 0 {
        out.add_term(g(l, m), &GaussianRational::one());
    }
    out.add_term(
        a(l, m),
        &GaussianRational::from_rational(lambda.neg()),
    );
    Ok(out)
}

/// Central generators surviving the quotient (besides `Z`): for Λ = 0
/// exactly `Â_m` and `γ̂_r`, i.e. H⁰ ⊕ H¹; for Λ ≠ 0 nothing.
pub fn quotient_survivors(sd: &SpectralData, lambda: &Rational) -> Vec<GeneratorLabel> {
    if !lambda.is_zero() {
        return vec![];
    }
    let mut out = Vec::new();
    for m in 1..=sd.mult(0).unwrap() as i64 {
        out.push(a_hat(m));
    }
    for r in 1..=sd.h1_dim() as i64 {
        out.push(gamma_hat(r));
    }
    out
}

/// Every field-basis generator carried by the spectral data, plus `Z`.
pub fn window_generators(sd: &SpectralData) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    for l in 0..=sd.max_level() {
        for m in 1..=sd.mult(l).unwrap() as i64 {
            out.push(a(l, m));
            if l >= 1 {
                out.push(g(l, m));
                out.push(h(l, m));
            }
        }
    }
    for r in 1..=sd.h1_dim() as i64 {
        out.push(gamma(r));
    }
    out.push(z());
    out
}

/// Ready-made spectral fixtures used by the verification suites.
pub mod fixtures {
    use super::SpectralData;
    use corner_exact::Rational;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// Flat-torus-like data: λ ∈ {1, 2} with multiplicity 4,
    /// dim H⁰ = 1, dim H¹ = 2, pairing the volume form.
    pub fn torus_like() -> SpectralData {
        SpectralData::new(
            vec![rat(1), rat(2)],
            vec![1, 4, 4],
            2,
            vec![
                vec![Rational::zero(), rat(1)],
                vec![rat(-1), Rational::zero()],
            ],
        )
        .expect("valid fixture")
    }

    /// Round-sphere-like data: λ_l = l(l+1) with multiplicity 2l+1,
    /// no harmonic 1-forms.
    pub fn sphere_like() -> SpectralData {
        SpectralData::new(vec![rat(2), rat(6)], vec![1, 3, 5], 0, vec![]).expect("valid fixture")
    }

    /// Genus-2-like data: dim H¹ = 4 with a non-normalized pairing.
    pub fn genus2_like() -> SpectralData {
        let z = Rational::zero;
        SpectralData::new(
            vec![rat(2), rat(3)],
            vec![1, 3, 2],
            4,
            vec![
                vec![z(), rat(1), z(), z()],
                vec![rat(-1), z(), z(), z()],
                vec![z(), z(), z(), rat(2)],
                vec![z(), z(), rat(-2), z()],
            ],
        )
        .expect("valid fixture")
    }
}
