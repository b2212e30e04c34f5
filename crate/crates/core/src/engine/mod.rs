//! Las Vegas machines: a computation run alongside a monitor that may
//! recognize, at some finite stage, that the sampled advice is unsuccessful.

mod compose;
mod estimate;
mod machine;
mod machines;
mod restart;

pub use compose::{lv_compose, Composed};
pub use estimate::{lv_estimate_success, wilson_interval, wilson_z, SuccessEstimate};
pub use machine::{lv_run, LasVegasMachine, Name, Process, RunOutcome};
pub use machines::{FixedInput, Identity, WwklMachine};
pub use restart::{lv_restart_loop, RestartResult};

#[cfg(test)]
mod tests;
