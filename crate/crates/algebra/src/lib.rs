//! Polynomial arithmetic over `F_p`, Gröbner bases and free resolutions of
//! binomial edge ideals.

pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod resolution;

pub use error::AlgebraError;
pub use field::{Field, DEFAULT_CHAR};
pub use groebner::{binomial_edge_ideal, buchberger, normal_form, Ideal, DEFAULT_PAIR_BUDGET};
pub use hilbert::MonomialIdeal;
pub use monomial::{Mon, MonOrder};
pub use poly::{Poly, PolyRing, Term};
