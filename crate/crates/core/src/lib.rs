//! Finite pointed spaces and the smash product.
//!
//! The exact engine works on finite spaces, represented by their
//! specialization preorders: products, quotients, wedges, n-ary smash
//! products, comparison maps between bracketings, exponentials and finite
//! homotopy models. The [`witness`] module certifies statements about
//! neighbourhoods in products of real intervals with exact rationals.

pub mod expo;
pub mod finspace;
pub mod homotopy;
pub mod json;
pub mod pointed;
pub mod witness;
