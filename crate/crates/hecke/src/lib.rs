//! Std companion to `hecke-core`: file formats, configuration, threading and the `hecke` CLI.

pub mod cli;
pub mod config;
pub mod formats;
pub mod pipeline;
