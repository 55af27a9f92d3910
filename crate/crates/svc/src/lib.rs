//! Singing voice cloning at desk scale.
//!
//! The crate trains a small multispeaker autoregressive acoustic model
//! (gated dilated causal convolutions over per-frame control features,
//! conditioned on a learned speaker-embedding table), adapts it to unseen
//! voices from a handful of utterances, and measures the result against a
//! synthetic ground-truth corpus instead of human listeners.
//!
//! Module map:
//!
//! * [`tensor`], [`kernels`], [`tape`] — the minimal reverse-mode engine
//!   the network is built from, with finite-difference validation.
//! * [`model`] — the conditional autoregressive model: teacher-forced
//!   training forward, streaming generation, receptive-field accounting.
//! * [`speakers`] — the embedding table and the trainable-parameter
//!   partitions that define the adaptation regimes.
//! * [`optim`], [`train`], [`checkpoint`] — Adam, Polyak averaging, the
//!   training/adaptation loops and checkpoint persistence.
//! * [`corpus`] — the synthetic-voice corpus generator and dataset I/O.
//! * [`eval`], [`experiments`] — objective metrics, the speaker-similarity
//!   oracle and the T1..T5 experiment harness.
//! * [`textfmt`] — the structured-text format shared by manifests,
//!   checkpoint headers, configs and reports.

pub mod checkpoint;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod experiments;
pub mod kernels;
pub mod model;
pub mod optim;
pub mod rng;
pub mod speakers;
pub mod tape;
pub mod tensor;
pub mod textfmt;
pub mod train;

pub use error::{Error, Result};
pub use tensor::Tensor2D;
