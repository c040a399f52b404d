//! Exact polynomial and matrix arithmetic, generic over the scalar ring.

mod interval;
mod matrix;
mod poly;
mod sturm;

pub use interval::Interval;
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use sturm::{
    count_roots_in, eval_rational, smallest_root_bracket, square_free_decomposition, SquareFreeDecomposition,
    SturmChain,
};
