//! Input parsing, text and JSON output, SVG rendering.

pub mod json;
pub mod parse;
pub mod spec;
pub mod svg;
pub mod text;

pub use parse::{
    parse_cone, parse_input, parse_marked_basis, InputDocument, ParseError, ParseErrorKind,
};
pub use spec::{parse_order, parse_symmetry, OrderSpecError, SymmetrySpecError};
pub use svg::{render_slice_svg, RenderError};
pub use text::{
    format_cone, format_document, format_marked_basis, format_polynomial, format_stats,
    format_vector,
};
