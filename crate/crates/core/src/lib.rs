//! Exact second-moment sums for pencils of cubics `y^2 = P(x) k + Q(x)` over
//! finite fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: arithmetic in `F_q` for `q = p^k` (`k <= 3`), the quadratic
//!   character, square roots and the closed-form quadratic character sum.
//! * [`polyalg`]: exact univariate and bivariate polynomial arithmetic over
//!   the rationals and over finite fields (resultants, discriminants, root
//!   counting, factor counting over `Q` in degree `<= 4`, Sturm sequences).
//! * [`pencil`]: the pencil `(P, Q)`, its minors and derived polynomials, and
//!   the typicality classifier.
//! * [`counting`]: brute-force oracles and the `O(q)` curve-count route to the
//!   second moment, smooth-model corrections and L-polynomial checks.
//! * [`bias`]: per-prime stratification, prime sweeps and averages.
//! * [`cli`]: the `momentforge` command-line surface.

pub mod bias;
pub mod cli;
pub mod counting;
pub mod error;
pub mod field;
pub mod pencil;
pub mod polyalg;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FiniteField, PrimeField, PrimePower};
pub use pencil::{CaseKind, CaseLabel, Pencil};

