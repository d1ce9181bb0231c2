//! Exact arithmetic in GF(q), F_q[θ], F_q(θ) and F_q((1/θ)).

pub mod binom;
pub mod gf;
pub mod laurent;
pub mod poly;
pub mod ratfunc;
pub mod text;

pub use binom::lucas_binom;
pub use gf::{FieldElem, FieldSpec, GaloisField};
pub use laurent::LaurentSeries;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use text::{parse_poly, parse_ratfunc};
