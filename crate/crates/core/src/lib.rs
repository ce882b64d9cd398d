pub mod central;
pub mod cli;
pub mod engine;
pub mod error;
pub mod field;
pub mod gauss;
pub mod graded;
pub mod io;
pub mod pbw;
pub mod report;
pub mod ring;
pub mod series;
pub mod serieslab;
pub mod shift;
pub mod verify;

pub use error::{Error, Result};
pub use field::{binom_mod_p, orbit_size_mod_p, FieldElem, Prime};
pub use graded::{in_filtration, leading_term, loop_degree, CurrentAlgebra, LoopGen, UgElement};
pub use pbw::{Element, Gen, Yangian};
pub use ring::Ring;
pub use series::{generator_series, t_matrix, MatrixSeries, Series};
