//! Plumbing for the `tropnev` binary: the expression grammar parser, run
//! configuration resolution, output assembly, and one handler per
//! subcommand. The binary itself is a thin shim over [`cli::run`].

pub mod cli;
pub mod commands;
pub mod config;
pub mod expr;
pub mod output;
pub mod source;
