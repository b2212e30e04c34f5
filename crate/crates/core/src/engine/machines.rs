//! Basic machines and adapters.

use std::marker::PhantomData;
use std::sync::Arc;

use super::{LasVegasMachine, Name, Process};
use crate::foundations::{AdviceBits, AdviceSpace};
use crate::sets::CoTree;

/// Path sampling through a tree: emits the advice bit by bit and fails as
/// soon as the advice leaves the tree. Step `s` checks `r|_s`.
#[derive(Debug, Clone, Copy, Default)]
pub struct WwklMachine;

struct WwklProcess {
    tree: Arc<CoTree>,
    checked: usize,
    emitted: usize,
}

impl Process<bool> for WwklProcess {
    fn monitor(&mut self, advice: &dyn AdviceBits) -> bool {
        self.checked += 1;
        self.tree.first_failure(advice, self.checked).is_some()
    }

    fn compute(&mut self, advice: &dyn AdviceBits) -> Option<bool> {
        let b = advice.bit(self.emitted);
        self.emitted += 1;
        Some(b)
    }
}

impl LasVegasMachine for WwklMachine {
    type Input = Arc<CoTree>;
    type Out = bool;

    fn advice_space(&self) -> AdviceSpace {
        AdviceSpace::CantorSpace
    }

    fn spawn(&self, tree: Arc<CoTree>) -> Box<dyn Process<bool> + '_> {
        Box::new(WwklProcess {
            tree,
            checked: 0,
            emitted: 0,
        })
    }
}

/// Runs `M` on a fixed input whatever name it is handed.
pub struct FixedInput<M: LasVegasMachine, T> {
    pub machine: M,
    pub input: M::Input,
    _name: PhantomData<fn() -> T>,
}

impl<M: LasVegasMachine, T> FixedInput<M, T> {
    pub fn new(machine: M, input: M::Input) -> Self {
        FixedInput {
            machine,
            input,
            _name: PhantomData,
        }
    }
}

impl<M, T> LasVegasMachine for FixedInput<M, T>
where
    M: LasVegasMachine,
    M::Input: Sync,
{
    type Input = Name<T>;
    type Out = M::Out;

    fn advice_space(&self) -> AdviceSpace {
        self.machine.advice_space()
    }

    fn spawn(&self, _ignored: Name<T>) -> Box<dyn Process<M::Out> + '_> {
        self.machine.spawn(self.input.clone())
    }
}

/// Copies its input name, never fails, uses no advice.
pub struct Identity<T>(PhantomData<fn() -> T>);

impl<T> Identity<T> {
    pub fn new() -> Self {
        Identity(PhantomData)
    }
}

impl<T> Default for Identity<T> {
    fn default() -> Self {
        Self::new()
    }
}

struct IdentityProcess<T> {
    input: Name<T>,
    pos: usize,
}

impl<T: Clone + Send + Sync + 'static> Process<T> for IdentityProcess<T> {
    fn monitor(&mut self, _advice: &dyn AdviceBits) -> bool {
        false
    }

    fn compute(&mut self, _advice: &dyn AdviceBits) -> Option<T> {
        let s = self.input.symbol(self.pos)?;
        self.pos += 1;
        Some(s)
    }
}

impl<T: Clone + Send + Sync + 'static> LasVegasMachine for Identity<T> {
    type Input = Name<T>;
    type Out = T;

    fn advice_space(&self) -> AdviceSpace {
        AdviceSpace::CantorSpace
    }

    fn spawn(&self, input: Name<T>) -> Box<dyn Process<T> + '_> {
        Box::new(IdentityProcess { input, pos: 0 })
    }
}
