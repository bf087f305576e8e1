pub mod chart;
pub mod diagnostics;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod identities;
pub mod multivec;
pub mod order;
pub mod poisson;
pub mod poly;
pub mod sample;
