//! Unitary irreducible representations of the symmetric, alternating,
//! unitary, special unitary and special orthogonal groups.
//!
//! * [`perm`], [`tableaux`]: permutations, Young diagrams and standard tableaux,
//!   including uniform sampling by hook walk.
//! * [`symrep`]: Young's orthogonal (Young-Yamanouchi) form of S_n irreps.
//! * [`altrep`]: A_n irreps, including the split of self-conjugate shapes.
//! * [`schar`]: exact and randomized normalized characters of S_n.
//! * [`gelfand`]: Gel'fand-Tsetlin patterns and the gl(n) / so(n) algebra actions.
//! * [`liegroup`]: group-level U(n), SU(n), SO(n) representations, Weyl
//!   characters and dimensions.
//! * [`hadamard`]: shot-level simulation of the Hadamard test.

pub mod altrep;
pub mod error;
pub mod gelfand;
pub mod hadamard;
pub mod liegroup;
pub mod linalg;
pub mod perm;
pub mod random;
pub mod sampling;
pub mod schar;
pub mod symrep;
pub mod tableaux;

pub use error::{IrrepError, Result};
