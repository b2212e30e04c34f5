use super::{lv_run, LasVegasMachine, RunOutcome};
use crate::error::Result;
use crate::foundations::{advice_sample, AdviceSeed, RunBudget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartResult<O> {
    pub outcome: RunOutcome<O>,
    pub restarts: u64,
    /// The advice seed of the last run.
    pub advice_seed: AdviceSeed,
}

/// Runs `machine` with fresh advice `seed.split(j)` for `j = 0, 1, …`,
/// resampling only after a recognized failure.
pub fn lv_restart_loop<M: LasVegasMachine + ?Sized>(
    machine: &M,
    input: M::Input,
    seed: AdviceSeed,
    out_len: usize,
    fuel_per_run: RunBudget,
    max_restarts: u64,
) -> Result<RestartResult<M::Out>> {
    let space = machine.advice_space();
    let mut j = 0;
    loop {
        let advice_seed = seed.split(j);
        let advice = advice_sample(&space, advice_seed)?;
        let outcome = lv_run(machine, input.clone(), advice.raw(), out_len, fuel_per_run);
        if !outcome.is_failed() || j == max_restarts {
            return Ok(RestartResult {
                outcome,
                restarts: j,
                advice_seed,
            });
        }
        j += 1;
    }
}
