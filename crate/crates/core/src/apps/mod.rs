mod auc;
mod ivt;
mod nash;
mod pwl;
mod rdiv;
mod tree_seq;

pub use auc::{auc_h, auc_k, rdiv_auc_name, rdiv_machine_input, AucMachine, AucName};
pub use ivt::{ivt_advice, ivt_probabilistic, ivt_trisect, rational_bit, IvtMachine, TrisectOutcome, Trisection};
pub use nash::{nash_2x2_family, nash_family_parameter, nash_solve, nash_verify, BimatrixGame, StrategyPair};
pub use pwl::{pwl_eval, pwl_zero_set, PwlFunction};
pub use rdiv::{rdiv, rdiv_accepts, rdiv_stream, RdivOutcome, RdivResult};
pub use tree_seq::ivt_tree_sequence;
