//! Exact computations with permutation groups and finite classical groups:
//! normalizers and centralizers of cyclic subgroups, and tests of factorizations
//! `G = N(<x>) N(<y>)` and `G = C(x) C(y)`.

pub mod error;
pub mod ff;
pub mod grpgen;
pub mod linalg;
pub mod normfact;
pub mod orderarith;
pub mod permgrp;
pub mod table1;

pub use error::{Error, Result};
