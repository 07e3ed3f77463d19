//! Command line front end: grammars, renderers and command dispatch.
//!
//! Exit codes: 0 ok, 1 a proven inequality failed, 2 input error, 3 cap exceeded.
//! Parallel work honours `RAYON_NUM_THREADS`.

pub mod commands;
pub mod parse;
pub mod render;

pub use commands::{run, Cli};
pub use parse::{parse_map, parse_polynomial, parse_polynomial_with};
pub use render::{render_diagram, Format};
