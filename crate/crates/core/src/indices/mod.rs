//! Indices, the algebra h¹ of their formal combinations, and its products.

mod algebra;
mod index;
mod ipoly;

pub use algebra::{IndexAlgebra, ProductKind, Terms};
pub use index::{Classification, Index};
pub use ipoly::IndexPoly;
