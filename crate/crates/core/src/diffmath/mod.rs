//! Minimal reverse-mode autodiff over dense f64 arrays.
//!
//! The engine is a Wengert tape with a closed operation set: exactly the ops
//! the rest of the crate needs, each with an individually testable gradient
//! rule. There is no general broadcasting; the few shape-coupling ops that
//! exist (bias add, row gather, channels-last flatten) are explicit variants.
//!
//! Values are recorded once and immutable afterwards. A training step builds
//! a fresh tape, runs [`Tape::backward`] on a scalar loss, and reads
//! per-parameter gradients back out.

mod array;
mod check;
mod linalg;
mod optim;
mod tape;

pub use array::Array;
pub use check::{central_diff_grad, max_rel_error, GradCheck};
pub use linalg::{col2im, im2col, matmul, transpose};
pub use optim::{cosine_lr, AdamW, OptimConfig};
pub use tape::{Tape, ValueId};
