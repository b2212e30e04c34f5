//! Independent composition of two machines.
//!
//! `H⟨p, ⟨r, s⟩⟩ = F⟨G⟨p, s⟩, r⟩`: the advice is split by bit-interleaving,
//! the even positions `r` going to `F` and the odd positions `s` to `G`.
//! `G`'s output is buffered and handed to `F` as its input name, and the
//! composed monitor fires when either component's monitor does.

use std::sync::{Arc, Mutex};

use super::{LasVegasMachine, Name, Process};
use crate::foundations::{AdviceBits, AdviceSpace, ProjectedBits};

pub struct Composed<F, G> {
    pub f: F,
    pub g: G,
}

pub fn lv_compose<F, G>(f: F, g: G) -> Composed<F, G>
where
    G: LasVegasMachine,
    G::Out: Send + Sync + 'static,
    F: LasVegasMachine<Input = Name<G::Out>>,
{
    Composed { f, g }
}

struct ComposedProcess<'a, FO, GO> {
    f: Box<dyn Process<FO> + 'a>,
    g: Box<dyn Process<GO> + 'a>,
    buffer: Arc<Mutex<Vec<GO>>>,
}

impl<FO, GO> Process<FO> for ComposedProcess<'_, FO, GO> {
    fn monitor(&mut self, advice: &dyn AdviceBits) -> bool {
        let g_fired = self.g.monitor(&ProjectedBits::right(advice));
        let f_fired = self.f.monitor(&ProjectedBits::left(advice));
        g_fired || f_fired
    }

    fn compute(&mut self, advice: &dyn AdviceBits) -> Option<FO> {
        if let Some(o) = self.g.compute(&ProjectedBits::right(advice)) {
            self.buffer.lock().expect("buffer lock").push(o);
        }
        self.f.compute(&ProjectedBits::left(advice))
    }
}

impl<F, G> LasVegasMachine for Composed<F, G>
where
    G: LasVegasMachine,
    G::Out: Clone + Send + Sync + 'static,
    F: LasVegasMachine<Input = Name<G::Out>>,
{
    type Input = G::Input;
    type Out = F::Out;

    fn advice_space(&self) -> AdviceSpace {
        AdviceSpace::product(self.f.advice_space(), self.g.advice_space())
    }

    fn spawn(&self, input: G::Input) -> Box<dyn Process<F::Out> + '_> {
        let buffer: Arc<Mutex<Vec<G::Out>>> = Arc::default();
        let view = Arc::clone(&buffer);
        let name = Name::from_fn(move |i| view.lock().expect("buffer lock").get(i).cloned());
        Box::new(ComposedProcess {
            f: self.f.spawn(name),
            g: self.g.spawn(input),
            buffer,
        })
    }
}
