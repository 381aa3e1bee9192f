//! Exact computations with small finite groups, organized around two
//! element-count statistics: the *order type* (how many elements have each
//! order) and the *exponent type* (how many solutions x^n = 1 has for each
//! n). The two determine each other by Moebius inversion, and exponent
//! types multiply across direct products, so very large products can be
//! handled through their factors alone.
//!
//! The bundled catalog exhibits the phenomenon this crate exists to check:
//! two direct products of order 227598336 = 2^13 * 3^4 * 7^3 with identical
//! order types, exactly one of which is solvable.
//!
//! ```
//! use grouptype::{constructors, spectra};
//!
//! let c12 = constructors::cyclic(12)?;
//! let q8 = constructors::generalized_quaternion(8)?;
//! let product = constructors::direct_product(&c12, &q8)?;
//!
//! // The exponent type of a direct product is the pointwise product of the
//! // factors' exponent types.
//! let direct = spectra::exponent_type(&product);
//! let derived = spectra::exponent_type(&c12).product(&spectra::exponent_type(&q8))?;
//! assert_eq!(direct, derived);
//! # Ok::<(), grouptype::Error>(())
//! ```

pub mod catalog;
pub mod cli;
pub mod constructors;
pub mod element;
pub mod engine;
pub mod error;
pub mod grp;
pub mod report;
pub mod spectra;

pub use element::Element;
pub use engine::{enumerate_closure, FiniteGroup, GroupId, Subgroup};
pub use error::{Error, Result};
pub use spectra::{spectra_equal, spectrum_product, Spectrum, SpectrumKind};
