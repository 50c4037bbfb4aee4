//! Library surface of the command-line front end: criteria, config
//! parsing, and generator-expression parsing. The binary in `main.rs`
//! is a thin clap wrapper over these.

pub mod criteria;

use corner_algebras::torus::{self, ChargeAssignment};
use corner_exact::{GaussianRational, Rational};
use corner_lie::{AlgebraKind, GeneratorLabel, Modes, Symbol};
use serde::Deserialize;

/// Worker-thread cap: `CORNER_FORGE_THREADS`, else the logical CPU
/// count, floored at 1.
pub fn thread_budget() -> usize {
    if let Ok(v) = std::env::var("CORNER_FORGE_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Parses the shell-friendly generator syntax `Symbol,μ,m,n` with the
/// Lie index present only for the Cartesian su(2) basis, e.g. `E,1,0`,
/// `J,1,1,0`, `Jplus,0,-2`, `gamma,1`, `H,3`, or bare `Z`.
pub fn parse_generator(algebra: AlgebraKind, s: &str) -> Result<GeneratorLabel, String> {
    let parts: Vec<&str> = s.split(',').map(|x| x.trim()).collect();
    let head = parts[0];
    let ints: Vec<i64> = parts[1..]
        .iter()
        .map(|x| x.parse::<i64>().map_err(|_| format!("bad index `{x}` in `{s}`")))
        .collect::<Result<_, _>>()?;
    if head == "Z" {
        if !ints.is_empty() {
            return Err(format!("Z carries no modes, got `{s}`"));
        }
        return Ok(GeneratorLabel::central(algebra));
    }
    let two = |sym: Symbol| -> Result<GeneratorLabel, String> {
        match ints[..] {
            [m, n] => Ok(GeneratorLabel::new(algebra, sym, None, Modes::Two(m, n))),
            _ => Err(format!("`{head}` needs two mode indices, got `{s}`")),
        }
    };
    let one = |sym: Symbol| -> Result<GeneratorLabel, String> {
        match ints[..] {
            [m] => Ok(GeneratorLabel::new(algebra, sym, None, Modes::One(m))),
            _ => Err(format!("`{head}` needs one index, got `{s}`")),
        }
    };
    let cart = |sym: Symbol| -> Result<GeneratorLabel, String> {
        match ints[..] {
            [mu, m, n] if (1..=3).contains(&mu) => Ok(GeneratorLabel::new(
                algebra,
                sym,
                Some(mu as u8),
                Modes::Two(m, n),
            )),
            _ => Err(format!("`{head}` needs μ,m,n with μ in 1..=3, got `{s}`")),
        }
    };
    match (algebra, head) {
        (AlgebraKind::AbelianTorus, "E") => two(Symbol::E),
        (AlgebraKind::AbelianTorus, "Phi") => two(Symbol::Phi),
        (AlgebraKind::AbelianTorus, "Theta") => two(Symbol::Theta),
        (AlgebraKind::AbelianSurface, "A") => two(Symbol::A),
        (AlgebraKind::AbelianSurface, "G") => two(Symbol::G),
        (AlgebraKind::AbelianSurface, "H") => two(Symbol::H),
        (AlgebraKind::AbelianSurface, "gamma") => one(Symbol::Gamma),
        (AlgebraKind::NonAbelian, "J") => cart(Symbol::J),
        (AlgebraKind::NonAbelian, "K") => cart(Symbol::K),
        (AlgebraKind::NonAbelian, "P") => cart(Symbol::P),
        (AlgebraKind::NonAbelianLadder, "Jplus") => two(Symbol::JPlus),
        (AlgebraKind::NonAbelianLadder, "Jminus") => two(Symbol::JMinus),
        (AlgebraKind::NonAbelianLadder, "Jz") => two(Symbol::JZ),
        (AlgebraKind::NonAbelianLadder, "Kplus") => two(Symbol::KPlus),
        (AlgebraKind::NonAbelianLadder, "Kminus") => two(Symbol::KMinus),
        (AlgebraKind::NonAbelianLadder, "Kz") => two(Symbol::KZ),
        (AlgebraKind::NonAbelianLadder, "Pplus") => two(Symbol::PPlus),
        (AlgebraKind::NonAbelianLadder, "Pminus") => two(Symbol::PMinus),
        (AlgebraKind::NonAbelianLadder, "Pz") => two(Symbol::PZ),
        (AlgebraKind::AffineSl2, "H") => one(Symbol::H),
        (AlgebraKind::AffineSl2, "X") => one(Symbol::X),
        (AlgebraKind::AffineSl2, "Y") => one(Symbol::Y),
        _ => Err(format!(
            "unknown generator `{head}` for algebra {}",
            algebra.name()
        )),
    }
}

pub fn parse_algebra(s: &str) -> Result<AlgebraKind, String> {
    Ok(match s {
        "abelian-torus" => AlgebraKind::AbelianTorus,
        "abelian-surface" => AlgebraKind::AbelianSurface,
        "nonabelian" => AlgebraKind::NonAbelian,
        "nonabelian-ladder" => AlgebraKind::NonAbelianLadder,
        "affine-sl2" => AlgebraKind::AffineSl2,
        _ => return Err(format!("unknown algebra `{s}`")),
    })
}

/// On-disk charge assignment. Scalars use the canonical
/// `{"re":"p/q","im":"p/q"}` encoding; all fields are optional.
#[derive(Deserialize, Default)]
pub struct ChargesFile {
    pub chi_z: Option<GaussianRational>,
    pub e_hat: Option<GaussianRational>,
    #[serde(default)]
    pub phi_hat: Vec<(i64, GaussianRational)>,
    #[serde(default)]
    pub theta_hat: Vec<(i64, GaussianRational)>,
    #[serde(default)]
    pub f_minus: Vec<(i64, i64, GaussianRational)>,
    #[serde(default)]
    pub u_hat: Vec<(i64, GaussianRational)>,
    #[serde(default)]
    pub v_hat: Vec<(i64, GaussianRational)>,
    #[serde(default)]
    pub w_hat: Vec<(i64, i64, GaussianRational)>,
}

impl ChargesFile {
    pub fn into_assignment(self, lambda: &Rational) -> Result<ChargeAssignment, String> {
        let mut ch = ChargeAssignment::new(lambda);
        if let Some(z) = self.chi_z {
            ch.set_chi_z(z);
        }
        let err = |e: corner_lie::LieError| e.to_string();
        if let Some(v) = self.e_hat {
            ch.set(torus::e_hat(), v).map_err(err)?;
        }
        for (l, v) in self.phi_hat {
            ch.set(torus::phi_hat(l), v).map_err(err)?;
        }
        for (k, v) in self.theta_hat {
            ch.set(torus::theta_hat(k), v).map_err(err)?;
        }
        for (k, l, v) in self.f_minus {
            ch.set(torus::f_minus(k, l).map_err(err)?, v).map_err(err)?;
        }
        for (l, v) in self.u_hat {
            ch.set(torus::u_hat(l).map_err(err)?, v).map_err(err)?;
        }
        for (k, v) in self.v_hat {
            ch.set(torus::v_hat(k).map_err(err)?, v).map_err(err)?;
        }
        for (k, l, v) in self.w_hat {
            ch.set(torus::w_hat(k, l).map_err(err)?, v).map_err(err)?;
        }
        Ok(ch)
    }
}
