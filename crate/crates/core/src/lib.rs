mod arith;
pub mod construct;
pub mod data;
pub mod error;
pub mod group;
pub mod modp;
pub mod search;
pub mod sequence;
pub mod theorems;
