//! Interval graphs: clique paths, near-optimal coloring, sparse and
//! approximate independent sets.

mod color;
mod local;
mod mis;
mod path;
pub(crate) mod sparse;

pub use color::{color_interval, color_paths, color_radius, extend_coloring, interval_budget};
pub use local::{color_interval_distributed, distance_k_mis_distributed, distance_k_radius, mis_interval_distributed};
pub use mis::{anchor_pairs, distance_k_mis, mis_interval, mis_interval_k, mis_interval_radius, AnchorPairs};
pub(crate) use path::Layout;
pub use path::{clique_path, remove_dominated, CliquePath};
