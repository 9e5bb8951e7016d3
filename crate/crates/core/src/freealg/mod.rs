//! The free associative algebra over `Q(t1, ..., tk)`.

mod ncpoly;
mod word;

pub(crate) use ncpoly::accumulate;
pub use ncpoly::{default_names, NCPoly};
pub use word::Word;
