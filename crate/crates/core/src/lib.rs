//! Exact combinatorics and commutative algebra for simple polyominoes.
//!
//! The crate computes the reduced Hilbert numerator `h(t)` of the coordinate
//! ring of a simple polyomino by several independent routes (Gröbner bases of
//! the inner-2-minor ideal, descent counting on planar distributive lattices,
//! cell-chain dynamic programming) and compares it with the rook-equivalence
//! polynomial `r̃(t)` obtained from non-attacking rook placements modulo
//! switch moves. It also classifies parallelogram polyominoes as Gorenstein
//! or not by three equivalent criteria (single-square structure, purity of
//! the join-irreducible poset, block conditions on 2-colored Motzkin words).

pub mod algebra;
pub mod enumerate;
pub mod grid;
pub mod io;
pub mod lattice;
pub mod motzkin;
pub mod parallelogram;
pub mod poly;
pub mod rook;
pub mod verify;

pub use grid::{Cell, Direction, GridError, Interval, Point, Polyomino};
pub use poly::IntPoly;
