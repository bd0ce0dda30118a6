//! Compiles the book's chapters as doctests so the guide and the library
//! cannot drift apart. Each module's docs are a chapter of `book/`.

#[doc = include_str!("../../../README.md")]
pub mod readme {}

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/chain-rings.md")]
pub mod chain_rings {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/factoring.md")]
pub mod factoring {}

#[doc = include_str!("../../../book/src/codes.md")]
pub mod codes {}

#[doc = include_str!("../../../book/src/pir.md")]
pub mod pir {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
