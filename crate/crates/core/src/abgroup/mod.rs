//! Finitely generated abelian groups: integer matrices, Smith normal form,
//! presented groups and their homomorphisms, and symbolic group expressions.

mod expr;
mod group;
mod map;
mod matrix;
mod snf;

pub use expr::{direct_sum, invert_integer, GroupExpr, Symbol};
pub use group::{finite_abelian_from_table, is_isomorphic, FgAbGroup};
pub use map::{cokernel, image, kernel, kernel_generators, AbMap, Presentation};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

pub(crate) use map::in_column_span;
