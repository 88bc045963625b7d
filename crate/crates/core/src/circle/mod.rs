//! Exact arithmetic on the doubled circle: the circle with every point of
//! `Z + θZ` split in two, on which rotation by `θ` is a Cantor minimal map.

mod clopen;
mod quad;

pub use clopen::{cmp_cut, is_partition, Arc, CirclePoint, ClopenSet, ClopenSetJson, CutPoint};
pub use quad::{QuadExt, Theta};
