//! Sandpile groups of undirected multigraphs.
//!
//! The sandpile (critical) group of a connected multigraph is read off the
//! Smith normal form of its reduced Laplacian. This crate provides:
//!
//! - [`graph`]: multigraphs with edge multiplicities, Laplacians and a plain
//!   text file format;
//! - [`linalg`]: dense exact integer matrices, Smith normal form and
//!   fraction-free determinants, generic over the integer scalar;
//! - [`sandpile`]: group structures, group orders and a brute-force
//!   spanning-tree counter;
//! - [`families`]: the cycle-attachment construction `H_i` and the
//!   cycle-chain classes `CH_n(a_1, ..., a_n)` with their hub representative;
//! - [`formulas`]: the recursive and closed-form tree-count polynomials
//!   `F_n` and `G_n`, generic over the ring they are evaluated in;
//! - [`verify`]: seeded randomized property suites used by tests and the CLI.
//!
//! Exact arithmetic is the default: [`IntMatrix`], [`SmithForm`] and
//! [`Int`] all use arbitrary-precision integers.

pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod linalg;
pub mod sandpile;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use families::{build_ch_canonical, build_ch_member, build_h, ChSpec, HSpec};
pub use graph::{Multigraph, VertexId};
pub use linalg::{determinant, smith_normal_form, Matrix, SmithDiagonal};
pub use sandpile::{group_order, groups_isomorphic, sandpile_group, GroupStructure};
pub use scalar::{IntegerScalar, RingScalar};

/// Arbitrary-precision integer used throughout the exact code paths.
pub type Int = num_bigint::BigInt;

/// Dense arbitrary-precision integer matrix.
pub type IntMatrix = Matrix<Int>;

/// Smith normal form diagonal over arbitrary-precision integers.
pub type SmithForm = SmithDiagonal<Int>;

/// Machine-word matrix, handy for small fixtures where overflow is impossible.
pub type SmallMatrix = Matrix<i64>;
