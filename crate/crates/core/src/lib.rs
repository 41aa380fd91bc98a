pub mod linalg;
pub mod rational;
pub mod rootsys;
pub mod polytope;
pub mod repspace;
pub mod sinhsum;
pub mod growth;
pub mod harness;
pub mod repexpr;
pub mod verify;
