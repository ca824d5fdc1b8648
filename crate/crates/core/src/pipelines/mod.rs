//! End-to-end depth computations for named inclusions and the claim audit.

mod bimodule;
mod drinfeld;
mod scenario;
mod young;

pub use bimodule::{bimodule_mult_matrix, bimodule_mult_matrix_of_power, odd_depth_via_bimodules, BimoduleMultMatrix};
pub use drinfeld::{drinfeld_dimension, drinfeld_induction_matrix};
pub use scenario::{
    audit_json, battery, claims_audit, claims_markdown, default_battery, scenario, theta_instance, to_dot,
    ClaimVerdict, DepthReport, Limits, Pipeline, Scenario, TableCache, Verdict,
};
pub use young::{hook_dimension, ordered_partitions, partitions, young_branching_matrix};
