//! Constructive forms of the fan-partition lemmas and the decomposition pipeline.

mod apex;
mod pendants;
mod pipeline;
mod power;
mod star_lift;
mod tree_cut;
mod universal_fan;

pub use apex::absorb_apices;
pub use pendants::extend_pendants;
pub use pipeline::{
    decomposition_oracle_width, doubling_schedule, minor_free_pipeline, sweep_flexibility, PipelineConfig,
    PipelineOutput, SweepRow,
};
pub use power::power_path_partition;
pub use star_lift::{build_auxiliary, lift_star_decomposition, AuxiliaryGraph, LiftOutput, Pendant};
pub use tree_cut::{tree_components, tree_deletion_set};
pub use universal_fan::{contract_to_universal_fan, universal_fan_size};
