//! Semipositive tensors and the tensor complementarity problem at desk scale.
//!
//! * [`tensor`]: sparse tensors, contraction `M u^(r-1)`, subtensors, majorization and the
//!   general tensor product.
//! * [`classes`]: membership checkers for semipositive, P, R and semimonotone classes, and the
//!   witness constructions for the characterization theorems.
//! * [`tcp`]: support-enumeration solvers for the tensor and linear complementarity problems.
//! * [`io`]: the text format; [`cli`]: the command-line front end.
//! * [`verify`]: randomized property suites with reproducible counterexample dumps.

pub mod classes;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod par;
pub mod tcp;
pub mod tensor;
pub mod verify;

pub use classes::{CheckConfig, ClassVerdict, Status};
pub use error::{Error, Result};
pub use tcp::{SolverConfig, TcpSolution};
pub use tensor::{IndexSet, Matrix, Tensor};
