//! Regular graphs with few longest cycles: constructions, exact
//! enumeration of longest cycles and hamiltonian paths, and exact
//! evaluation of the associated counting bounds.
//!
//! The main entry points are
//!
//! * [`graph`], [`graph6`], [`cycle`], [`structure`]: graphs, interchange,
//!   canonical cycles and structural validation;
//! * [`cycle_enum`]: two independent longest-cycle enumerators,
//!   hamiltonian cycle and path counting, and a census over graph streams;
//! * [`constructions`]: the gadget, splice chains, ring constructions and
//!   the non-hamiltonian family, each with a predicted count;
//! * [`bounds`]: exact bound formulas and the base comparison;
//! * [`cli`]: the batch command surface used by the `longcycles` binary.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod cycle;
pub mod cycle_enum;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod structure;

pub use cycle::{canonical_cycle, Cycle, CycleSet};
pub use cycle_enum::{BigCount, EnumResult};
pub use error::{Error, Result};
pub use graph::{edge, Edge, Graph, MarkedGraph};
pub use graph6::{parse_graph6, write_graph6};
pub use structure::{validate, StructureReport};
