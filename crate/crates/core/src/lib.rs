//! Exact verification of the infinitesimal Moufang operator calculus.
//!
//! A Moufang-Mal'tsev pair `(S, T)` assigns to each element `x` of an
//! anticommutative algebra `Γ` two operators `S_x`, `T_x`; with
//! `P_x = -(S_x + T_x)` the triple generates the Yamagutian
//! `6Y(x;y) = [S_x,S_y] + [T_x,T_y] + [P_x,P_y]`. This crate builds concrete
//! pairs from alternative algebras (`S = L`, `T = R`), checks the operator
//! identities they satisfy with exact rational arithmetic, and provides the
//! ternary Yamaguti bracket calculus on `Γ`.

pub mod algebra;
pub mod axioms;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod linalg;
pub mod pair;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod tensor;
pub mod triality;
pub mod yamaguti;

pub use algebra::{AnticommAlgebra, Bilinear, BinaryAlgebra};
pub use error::{Error, Result};
pub use pair::{pair_from_alternative, MoufangMaltsevPair, PairFlag, Triple};
pub use report::{CheckReport, Verdict, Witness};
pub use scalar::Scalar;
pub use tensor::{Matrix, Tensor3, Tensor4, Vector};
pub use triality::Sampling;
