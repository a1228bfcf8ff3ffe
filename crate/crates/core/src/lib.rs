//! Core algorithms for simulating and optimizing a hybrid-IRS-aided
//! amplify-and-forward relay link.
//!
//! A source talks to a destination over two half-duplex time slots through an
//! AF relay, assisted by an intelligent reflecting surface whose `N` elements
//! are split into `K` active (amplifying, noise-injecting, power-consuming)
//! and `N - K` passive (unit-modulus phase-only) elements. The crate provides:
//!
//! * [`channel`] — log-distance path loss and seeded Rayleigh channel draws;
//! * [`model`] — exact end-to-end SNR/rate/power evaluation, the ground truth
//!   every optimized quantity is audited against;
//! * [`forms`] — quadratic-form (vectorized/Kronecker) representations of the
//!   SNR numerator/denominator and the power constraints for each block
//!   coordinate;
//! * [`qcqp`] — a feasible-start log-barrier solver for the canonical concave
//!   QCQP the subproblems reduce to;
//! * [`optimizer`] — the alternating SCA + Dinkelbach fractional-programming
//!   loop over the relay beamformer and the two per-slot reflection vectors;
//! * [`reference`] — closed-form reference optima used as independent checks.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default `std`
//! feature for embedded use. All computation is pure and deterministic given
//! the documented seeds.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod channel;
pub mod forms;
pub mod linalg;
pub mod model;
pub mod optimizer;
pub mod qcqp;
pub mod reference;
pub mod rng;

pub use linalg::{CMat, CVec, C64};
