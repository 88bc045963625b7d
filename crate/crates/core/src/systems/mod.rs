//! Concrete Cantor minimal dihedral systems: the rotation-with-flip on the
//! doubled circle, the two-sheet system over a rotation, and dihedral
//! odometers.

mod action;
mod config;
mod denjoy;
mod doubled;
mod group;
mod odometer;
mod partition;

pub use action::{rotation_return_bound, DihedralSystem};
pub use config::{ChainSpec, GeneratedChain, Growth, System, SystemSpec};
pub use denjoy::{DenjoyFlip, LevelPartition};
pub use doubled::{DoubledSet, DoubledSystem};
pub use group::GroupElement;
pub use odometer::{top_freeness_check, Odometer, ThreadCount};
pub use partition::{permutation_matrix, WindowPartition};
