//! Core algorithms for LLM-assisted vulnerability analysis of stripped binaries.
//!
//! This crate holds everything that is pure computation: container format
//! probing over byte slices, a C-like lexer for decompiled pseudo-code, the
//! semantic-preservation validator that guards code-enhancement rewrites,
//! call-graph condensation and callee-first scheduling, token-budgeted
//! context packing and code chunking, verdict parsing, prompt assembly, and
//! the confusion-matrix / similarity arithmetic used by the evaluation
//! harness.
//!
//! The crate is `no_std`-compatible (`alloc` required); all IO, process
//! handling, persistence, and the CLI live in the companion `vulbin` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod binfmt;
pub mod chunk;
pub mod context;
pub mod enhance;
pub mod graph;
pub mod kb;
pub mod lexer;
pub mod metrics;
pub mod normalize;
pub mod preserve;
pub mod prompt;
pub mod queue;
pub mod similarity;
pub mod tokens;
pub mod verdict;

pub use graph::{CallGraph, FunctionId};
pub use tokens::count_tokens;
