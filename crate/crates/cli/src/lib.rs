//! Library half of the `hyperbounds` command-line tool: randomized
//! bound-validation campaigns, the exact identity sweep, and deterministic
//! JSON/CSV rendering.

pub mod campaign;
pub mod identities;
pub mod output;
