//! Core mathematics for a one-stage multi-person pose estimator.
//!
//! The crate owns everything that does not touch the filesystem: a minimal
//! reverse-mode autodiff engine ([`diffmath`]), box/pose/grid geometry and
//! metrics ([`geometry`]), the dynamic coordinate classifier ([`dcc`]), the
//! training losses ([`losses`]), dynamic label assignment ([`assigner`]), a
//! miniature trainable network ([`net`]), a deterministic synthetic scene
//! generator ([`synth`]), the training/inference engine ([`engine`]) and a
//! keypoint-similarity AP evaluator ([`eval`]).
//!
//! It is `no_std`-compatible (with `alloc`); the companion CLI crate carries
//! file IO, the command-line surface and the on-disk formats.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod assigner;
pub mod checkpoint;
pub mod dcc;
pub mod diffmath;
pub mod engine;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod losses;
pub mod net;
pub mod reference;
pub mod rng;
pub mod synth;
