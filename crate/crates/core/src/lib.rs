//! Binary functions, the μ-transform and its minors, alternating dimaps with
//! their three reductions, and checks of whether a family of binary functions
//! represents a class of dimaps.

pub mod altmap;
pub mod binfun;
pub mod enumerate;
pub mod io;
pub mod linalg;
pub mod minor;
pub mod reduce;
pub mod represent;
pub mod transform;
pub mod verify;

pub use binfun::{BinFunError, BinaryFunction, BitSequence, RawVector};
pub use num_complex::Complex64;
