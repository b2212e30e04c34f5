//! Machines that compute alongside a failure monitor, and their runs.

use std::fmt;
use std::sync::Arc;

use crate::foundations::{AdviceBits, AdviceSpace, RunBudget};

/// A name read symbol by symbol. `None` means the symbol is not available
/// (yet), as for a stream still being produced.
pub struct Name<T>(Arc<dyn Fn(usize) -> Option<T> + Send + Sync>);

impl<T> Clone for Name<T> {
    fn clone(&self) -> Self {
        Name(Arc::clone(&self.0))
    }
}

impl<T> fmt::Debug for Name<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Name")
    }
}

impl<T: Clone + Send + Sync + 'static> Name<T> {
    pub fn from_fn(f: impl Fn(usize) -> Option<T> + Send + Sync + 'static) -> Self {
        Name(Arc::new(f))
    }

    /// A finite name: the symbols of `v`, then nothing.
    pub fn from_vec(v: Vec<T>) -> Self {
        Name::from_fn(move |i| v.get(i).cloned())
    }

    /// `prefix` followed by `tail` forever.
    pub fn with_tail(prefix: Vec<T>, tail: T) -> Self {
        Name::from_fn(move |i| Some(prefix.get(i).cloned().unwrap_or_else(|| tail.clone())))
    }

    pub fn symbol(&self, i: usize) -> Option<T> {
        (self.0)(i)
    }
}

/// One run of a machine on a fixed input: a compute transducer and a
/// monitor sharing whatever state they need.
pub trait Process<O> {
    /// Advances the monitor one step; `true` once failure is recognized.
    fn monitor(&mut self, advice: &dyn AdviceBits) -> bool;
    /// Advances the computation one step, possibly emitting a symbol.
    fn compute(&mut self, advice: &dyn AdviceBits) -> Option<O>;
}

pub trait LasVegasMachine: Sync {
    type Input: Clone;
    type Out: Clone;

    fn advice_space(&self) -> AdviceSpace;

    fn spawn(&self, input: Self::Input) -> Box<dyn Process<Self::Out> + '_>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunOutcome<O> {
    Succeeding { output: Vec<O>, steps: u64 },
    Failed { step: u64, partial: Vec<O> },
    Exhausted { partial: Vec<O> },
}

impl<O> RunOutcome<O> {
    pub fn output(&self) -> &[O] {
        match self {
            RunOutcome::Succeeding { output, .. } => output,
            RunOutcome::Failed { partial, .. } | RunOutcome::Exhausted { partial } => partial,
        }
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, RunOutcome::Failed { .. })
    }

    pub fn is_succeeding(&self) -> bool {
        matches!(self, RunOutcome::Succeeding { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            RunOutcome::Succeeding { .. } => "succeeding",
            RunOutcome::Failed { .. } => "failed",
            RunOutcome::Exhausted { .. } => "exhausted",
        }
    }
}

/// Runs monitor and computation in lockstep for at most `fuel` steps,
/// monitor first within each step.
pub fn lv_run<M: LasVegasMachine + ?Sized>(
    machine: &M,
    input: M::Input,
    advice: &dyn AdviceBits,
    out_len: usize,
    fuel: RunBudget,
) -> RunOutcome<M::Out> {
    let mut process = machine.spawn(input);
    let mut output = Vec::new();
    for step in 1..=fuel.fuel() {
        if process.monitor(advice) {
            return RunOutcome::Failed { step, partial: output };
        }
        if let Some(o) = process.compute(advice) {
            output.push(o);
        }
        if output.len() >= out_len {
            output.truncate(out_len);
            return RunOutcome::Succeeding { output, steps: step };
        }
    }
    RunOutcome::Exhausted { partial: output }
}
