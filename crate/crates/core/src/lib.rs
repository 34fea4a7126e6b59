//! Inc-invariant chains of monomial ideals.
//!
//! The crate materializes chains `(I_n)` of monomial ideals in the rings
//! `R_n = K[x[k,j] : 1 <= k <= c, 1 <= j <= n]` that are stable under the
//! monoid of increasing maps fixing the first `i` columns, and computes the
//! invariants that govern their growth: codimension, the cover numbers
//! `gamma_i` and `Gamma_i`, the `q`-invariant, Betti numbers and projective
//! dimension. The [`asymptotics`] module turns tables of these invariants
//! into eventual linear laws and checks them against the cover numbers.

pub mod asymptotics;
pub mod chain;
pub mod cli;
pub mod covers;
pub mod decomposition;
pub mod document;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod random;
pub mod resolution;

pub use chain::{Chain, ChainSpec, Derivation, EVector};
pub use decomposition::{codim, minimal_primes, PrimeSupport};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{Degree, Monomial, Var};
