//! Postcritically finite quadratic morphisms: mapping schemes, moduli
//! equations, stable marked trees and Frobenius cycle types.

pub mod algebra;
pub mod dynamics;
pub mod mapping_scheme;
pub mod moduli;
pub mod monodromy;
pub mod trees;
