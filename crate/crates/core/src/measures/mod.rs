//! Measure expressions and their exact moment tables.

mod expr;
mod moments;

pub use expr::{MeasureExpr, SupportPiece};
pub use moments::{build_moment_table, inner_product, moment, norm, MomentTable, DEFAULT_MOMENT_CAP};
