mod cn;
mod interval_code;
mod ldl;
mod majority;
mod wwkl;

pub use cn::{cn_select, CnOutcome, MindChangeLog};
pub use interval_code::{interval_decode, interval_encode, IntervalCode};
pub use ldl::{ldl_search, DensityWitness, LdlOutcome};
pub use majority::{majority_radius, majority_vote, MajorityOutcome};
pub use wwkl::{wwkl_path, WwklOutcome};
