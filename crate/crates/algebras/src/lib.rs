//! The free and physical corner algebras of 4-dimensional BF theory:
//! the abelian algebra on the torus and on arbitrary closed oriented
//! surfaces, the non-abelian su(2) algebra on the torus, and the
//! affine sl(2) algebra of the Chern–Simons corner.

pub mod affine;
pub mod nonabelian;
pub mod surface;
pub mod torus;
