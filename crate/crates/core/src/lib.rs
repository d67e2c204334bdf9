//! Symbolic dynamics of modular geodesics.
//!
//! A modular geodesic is encoded by a primitive cyclic word `L^{a_1} R^{b_1}
//! ... L^{a_n} R^{b_n}` in the letters `L` and `R`.  This crate parses and
//! canonicalizes such code words, generates `XY` cutting sequences of
//! rational slopes and converts them to `LR` words, detects winding and
//! linear subwords, realizes letter streams as paths in the diagonally
//! triangulated integer grid (with exact winding numbers and SVG output),
//! codes arcs in the once-punctured annulus, and evaluates lower and upper
//! volume bounds for modular link complements as exact rational multiples of
//! the regular ideal tetrahedron volume.
//!
//! The modules mirror the pipeline:
//!
//! * [`codeword`] — parsing, validation, canonical rotation of `LR` words.
//! * [`exponents`] — maximal exponent sets (values ≥ 6, pairwise gaps ≥ 6).
//! * [`bounds`] — volume bounds with exact rational coefficients.
//! * [`cutting`] — `XY` cutting sequences and the `XY -> LR` substitution.
//! * [`subwords`] — winding subwords and bounded linearity detection.
//! * [`walker`] — edge-crossing paths in the triangulated grid, winding
//!   numbers, deck translations, SVG figures.
//! * [`annulus`] — `ab` words for arcs in the once-punctured annulus and
//!   last winding numbers.
//! * [`classify`] — base-order signatures and partition of link collections.

pub mod annulus;
pub mod bounds;
pub mod classify;
pub mod codeword;
pub mod cutting;
pub mod exponents;
pub mod subwords;
pub mod walker;

pub use codeword::{CodeWord, Letter, ModularLink};
pub use cutting::{XYLetter, XYWord};
