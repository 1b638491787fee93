//! Nilpotent orbit representatives, gradings and the mod-4 construction.

pub mod partition;
pub mod reps;

pub use partition::{partitions, ABDiagram, Partition};
pub use reps::{
    enumerate_orbit_reps, jordan_matrix, jordan_type, nilpotent_in_classical, validate_rep, Block, ClassicalNilpotent,
    Decoration, OrbitRep, RepCertificate,
};
pub mod grading;

pub use grading::{ad_grading, delta, glue_mod4, height, AdGrading, DeltaRecord};
