//! Compiles the code listings in `book/src` as doc-tests, one module per
//! chapter so a failure points at its chapter.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/coordinates.md")]
pub mod coordinates {}

#[doc = include_str!("../../../book/src/polygons.md")]
pub mod polygons {}

#[doc = include_str!("../../../book/src/holonomy.md")]
pub mod holonomy {}

#[doc = include_str!("../../../book/src/euler.md")]
pub mod euler {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
