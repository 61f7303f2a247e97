//! Character tables, Frobenius–Schur indicators, tensor products and Wedderburn blocks.

mod dixon;
mod real;
mod render;
mod table;
mod tensor;
mod wedderburn;

pub use dixon::{complex_character_table, dixon_prime, fs_indicator};
pub use real::real_character_table;
pub use render::{ClassJson, RowJson, TableJson};
pub use table::{Character, CharacterTable, ClassInfo, TableField};
pub use tensor::{decompose, tensor_by_label, tensor_decompose, TensorDecomposition};
pub use wedderburn::{
    complex_wedderburn, real_wedderburn, wedderburn_from_table, DivisionRing, WedderburnBlock, WedderburnStructure,
};

pub use render::csv_field;

use crate::error::Result;
use crate::groupcore::FiniteGroup;

/// Complex or real table of a group, as chosen by `field`.
pub fn character_table(g: &FiniteGroup, field: TableField) -> Result<CharacterTable> {
    let ct = complex_character_table(g)?;
    match field {
        TableField::Complex => Ok(ct),
        TableField::Real => real_character_table(&ct),
    }
}
