//! Numerical core for synthesizing 2D quasistatic active exterior cloaks.
//!
//! The device sits near the origin and generates a harmonic field that
//! cancels a known incident field inside a cloaked disk while staying small
//! far away. Everything is built from complex-plane potential theory: the
//! Kelvin transform `w = 1/z` maps the exterior problem to a polynomial
//! approximation problem on two disks, which is solved explicitly by
//! interpolation polynomials with nodes on circles around `0` and `beta`.
//!
//! Modules:
//! - [`geometry`]: cloak configuration, feasibility constraints, Kelvin map.
//! - [`poly`]: dense complex polynomials (the carrier type for everything).
//! - [`lagrange`]: the two-circle Lagrange interpolants `p_{phi,psi}`.
//! - [`ensemble`]: the phase-averaged polynomial `pbar` and its three
//!   evaluation routes.
//! - [`region`]: the peanut-shaped convergence region `D_beta`.
//! - [`field`]: assembly of the device field from `pbar` and the incident
//!   field, plus cloaking error estimates.
//! - [`scatterer`]: electrostatic response of a dielectric disk, used to
//!   demonstrate the cloak on a near-resonant object.
//! - [`grid`]: field sampling, marching-squares contours and color mapping.
//!
//! The crate is `no_std` compatible (`alloc` is required); file formats,
//! parallel sampling and the CLI live in the companion `quasicloak` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ensemble;
pub mod field;
pub mod geometry;
pub mod grid;
pub mod lagrange;
pub mod poly;
pub mod region;
pub mod scatterer;

pub use num_complex::Complex64;
