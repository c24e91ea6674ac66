//! Exact combinatorics of fat 4-polytopes, their f-vectors and the surface
//! constructions that push fatness up.

pub mod arith;
pub mod complex;
pub mod covers;
pub mod compounds;
pub mod fvec;
pub mod verify;
pub mod zoo;
