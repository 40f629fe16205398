//! Finite groups, quandles built from them, and exhaustive checks of how
//! group automorphisms and antiautomorphisms act on those quandles.

pub mod catalog;
pub mod config;
pub mod construct;
pub mod group;
pub mod harness;
pub mod io;
pub mod maps;
pub mod morphisms;
pub mod quandle;
pub mod verdict;

pub use config::Caps;
pub use construct::{ConstructionError, ConstructionSpec, MapParam, QuandleKind};
pub use group::{FiniteGroup, GroupError, Subset};
pub use maps::{ClassifiedMap, MapError, MapKind, PointMap};
pub use morphisms::{MorphismError, QuandleMap, SemidirectReport, Target};
pub use quandle::{Quandle, QuandleError};
pub use verdict::{Evidence, Relationship, Tally, Verdict};
