#![no_std]

extern crate alloc;

pub mod error;
pub mod laurent;
pub mod rootdata;
pub mod weylgroup;
pub mod hecke;
pub mod weightsets;
pub mod tmodule;
pub mod linalg;
pub mod schur;
pub mod duality;
pub mod g2;
