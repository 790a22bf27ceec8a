//! Entropic information measures between the system and parts of its
//! environment, all in bits.
//!
//! Fragment and partition averages enumerate every subset when the count fits
//! the budget and otherwise draw a seeded sample without replacement.

mod measures;
mod partition;
mod profile;
mod sampling;

pub use measures::{mutual_information, tmi};
pub use partition::{
    averaged_tmi, averaged_tmi_with, partition_tmi_values, tmi_partitions, PartitionScope,
    TMISeries, TmiAverage, TmiOptions, TmiPoint,
};
pub use profile::{
    averaged_mi_profile, averaged_mi_profile_with, classify_profile, redundancy_fraction,
    ClassifyThresholds, MIProfile, ProfileClass, ProfileEntry, ProfileOptions, Redundancy,
    MIN_SYSTEM_ENTROPY,
};
pub use sampling::{select_fragments, select_partitions, FragmentSample, PartitionSample};
