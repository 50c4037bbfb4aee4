//! Bracket tables and their bilinear evaluation.

use corner_exact::GaussianRational;
use std::sync::Arc;

use crate::{AlgebraElement, AlgebraKind, GeneratorLabel, LieError};

type Rule =
    Arc<dyn Fn(&GeneratorLabel, &GeneratorLabel) -> Result<AlgebraElement, LieError> + Send + Sync>;

/// Structure constants for one algebra, evaluated on generator pairs.
///
/// Tables are built from a single orientation of each bracket: the
/// stored rule is antisymmetrized, centrality of `Z` is built in, and
/// `[g, g] = 0` holds identically. Two of the source bracket lists
/// state only one orientation, so nothing downstream may depend on
/// which orientation a builder happened to write down.
#[derive(Clone)]
pub struct BracketTable {
    algebra: AlgebraKind,
    name: String,
    rule: Rule,
}

impl BracketTable {
    /// Builds a table from `oriented`, which may be defined on either
    /// orientation of each pair; the table evaluates the pair in
    /// canonical label order and negates when the arguments arrive
    /// swapped.
    pub fn new<F>(algebra: AlgebraKind, name: &str, oriented: F) -> Self
    where
        F: Fn(&GeneratorLabel, &GeneratorLabel) -> Result<AlgebraElement, LieError>
            + Send
            + Sync
            + 'static,
    {
        let name_owned = name.to_string();
        let rule: Rule = Arc::new(move |x: &GeneratorLabel, y: &GeneratorLabel| {
            if x.is_central_charge() || y.is_central_charge() || x == y {
                return Ok(AlgebraElement::zero(x.algebra));
            }
            if x <= y {
                oriented(x, y)
            } else {
                Ok(oriented(y, x)?.neg())
            }
        });
        BracketTable {
            algebra,
            name: name_owned,
            rule,
        }
    }

    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_bracket(
        &self,
        x: &GeneratorLabel,
        y: &GeneratorLabel,
    ) -> Result<AlgebraElement, LieError> {
        if x.algebra != self.algebra {
            return Err(LieError::MixedAlgebras {
                expected: self.algebra,
                found: x.algebra,
            });
        }
        if y.algebra != self.algebra {
            return Err(LieError::MixedAlgebras {
                expected: self.algebra,
                found: y.algebra,
            });
        }
        (self.rule)(x, y)
    }
}

/// `[x, y]` by bilinear extension of the table.
pub fn bracket(
    x: &AlgebraElement,
    y: &AlgebraElement,
    table: &BracketTable,
) -> Result<AlgebraElement, LieError> {
    if x.algebra() != table.algebra() {
        return Err(LieError::MixedAlgebras {
            expected: table.algebra(),
            found: x.algebra(),
        });
    }
    if y.algebra() != table.algebra() {
        return Err(LieError::MixedAlgebras {
            expected: table.algebra(),
            found: y.algebra(),
        });
    }
    let mut out = AlgebraElement::zero(table.algebra());
    for (gx, cx) in x.terms() {
        for (gy, cy) in y.terms() {
            let b = table.generator_bracket(gx, gy)?;
            if !b.is_zero() {
                out.add_scaled(&b, &(cx * cy));
            }
        }
    }
    Ok(out)
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`; zero exactly when the table
/// satisfies the Jacobi identity on these arguments.
pub fn jacobi_defect(
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
    table: &BracketTable,
) -> Result<AlgebraElement, LieError> {
    let mut out = bracket(x, &bracket(y, z, table)?, table)?;
    out.add_scaled(&bracket(y, &bracket(z, x, table)?, table)?, &GaussianRational::one());
    out.add_scaled(&bracket(z, &bracket(x, y, table)?, table)?, &GaussianRational::one());
    Ok(out)
}

/// A linear map given on generators, for homomorphism testing.
pub trait GeneratorMap {
    fn target(&self) -> AlgebraKind;

    fn image(&self, label: &GeneratorLabel) -> Result<AlgebraElement, LieError>;

    fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement, LieError> {
        let mut out = AlgebraElement::zero(self.target());
        for (l, c) in x.terms() {
            out.add_scaled(&self.image(l)?, c);
        }
        Ok(out)
    }
}

/// A generator map given by a closure together with its target algebra.
pub struct FnMap<F> {
    pub target: AlgebraKind,
    pub f: F,
}

impl<F> GeneratorMap for FnMap<F>
where
    F: Fn(&GeneratorLabel) -> Result<AlgebraElement, LieError>,
{
    fn target(&self) -> AlgebraKind {
        self.target
    }

    fn image(&self, label: &GeneratorLabel) -> Result<AlgebraElement, LieError> {
        (self.f)(label)
    }
}

/// Per pair: `φ([x,y]) − [φ(x), φ(y)]`. All zero iff `φ` is a Lie
/// algebra homomorphism on the tested set.
pub fn map_defect<M: GeneratorMap>(
    phi: &M,
    pairs: &[(AlgebraElement, AlgebraElement)],
    source: &BracketTable,
    target: &BracketTable,
) -> Result<Vec<AlgebraElement>, LieError> {
    let mut out = Vec::with_capacity(pairs.len());
    for (x, y) in pairs {
        let lhs = phi.apply(&bracket(x, y, source)?)?;
        let rhs = bracket(&phi.apply(x)?, &phi.apply(y)?, target)?;
        out.push(lhs.sub(&rhs));
    }
    Ok(out)
}
