//! File formats, JSON documents, application demos and the command line
//! for [`tropigraph_core`].

pub mod cli;
pub mod demo;
pub mod formats;
pub mod json;

pub use tropigraph_core as core;
