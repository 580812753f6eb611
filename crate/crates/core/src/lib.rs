pub mod scalars;
pub mod algebra;
pub mod verma;
pub mod irreps;
pub mod batch;
pub mod cli;
