//! Parking functions, permutations, partitions, counts and enumerations.

pub mod counting;
pub mod enumerate;
pub mod partition;
pub mod permutation;
pub mod pollak;
pub mod word;

pub use counting::{binomial, catalan, factorial, rising_factorial, stirling_first_unsigned};
pub use enumerate::{
    enumerate_contingency_tables, enumerate_ipf, enumerate_pf, enumerate_pf_with_override, enumerate_words,
    for_each_contingency_table, IPF_ENUMERATION_CAP, PF_ENUMERATION_CAP,
};
pub use partition::{partition_meet, young_subgroup_order, SetPartition};
pub use permutation::Permutation;
pub use pollak::{pollak_representative, shift_entries};
pub use word::{
    density, density_block, histogram, is_parking_function, weakly_increasing_rearrangement, DensityMatrix,
    Histogram, IncreasingParkingFunction, ParkingFunction, Word,
};
