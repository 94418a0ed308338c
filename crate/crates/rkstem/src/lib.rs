//! Weighted finite-state transducers with an application stack built on
//! top of them: an Arabic pattern-and-affix stemmer, n-gram string kernels
//! computed by transducer composition, and a precomputed-kernel SVM text
//! classifier.

pub mod error;
pub mod fst;
pub mod semiring;
pub mod stemmer;

pub use error::{Error, Result};
pub use fst::{Arc, Label, StateId, Wfst, EPSILON};
pub use semiring::{RealWeight, Semiring, TropicalWeight};
