//! Exact analysis of finitely generated Coxeter systems through their Tits
//! form and geometric reflection representation.
//!
//! All arithmetic happens in the real cyclotomic field `Q(2cos(pi/L))`, where
//! `L` is the least common multiple of the finite orders `>= 3` of the system.
//! Nothing in this crate stores a floating-point value; signs are decided by
//! an exact zero test followed by rational interval refinement.
//!
//! ```
//! use coxeter_tits::{coxeter::CoxeterSystem, tits};
//!
//! let sys: CoxeterSystem = "rank 3\nm 1 2 inf\nm 2 3 inf\nm 1 3 2".parse().unwrap();
//! let form = tits::build_tits_form(&sys);
//! let sig = tits::signature(&form);
//! assert_eq!((sig.p, sig.q, sig.z), (2, 1, 0));
//! ```

pub mod arith;
pub mod cli;
pub mod coxeter;
pub mod geom;
pub mod linalg;
pub mod tits;
pub mod verify;

pub use arith::{FieldElement, RealCyclotomicField, Sign};
pub use coxeter::{CoxeterSystem, Order};
pub use linalg::{FieldPoly, Matrix, Vector};
