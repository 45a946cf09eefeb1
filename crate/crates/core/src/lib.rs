//! Exact computer algebra for monomial ideals: ideal arithmetic, primary
//! structure and symbolic powers, multigraded Betti numbers over prime
//! fields, filtrations and binomial sums, Waldschmidt constants via exact
//! linear programming, and constructive synthesis of prescribed depth
//! functions.

pub mod betti;
pub mod corpus;
pub mod decomp;
pub mod field;
pub mod filtration;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod module;
pub mod monomial;
pub mod report;
pub mod ring;
pub mod simplex;
pub mod synth;
pub mod waldschmidt;

pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use ring::PolyRing;
