mod amplify;
mod cotree;
mod embed;
mod interval;
mod svc;
mod word;

pub use amplify::product_amplify;
pub use cotree::{
    tree_from_excluded, tree_measure_exact, tree_measure_upper, CoTree, ExclusionEnumeration, LazyCoTree,
};
pub use embed::{baire_cylinder_measure, baire_to_cantor_prefix, cantor_cylinder_measure, signum_preimage_measure};
pub use interval::{hull, remaining_components, ClosedInterval, NegClosedUnit, NegInfo, OpenInterval};
pub use svc::{svc_embed_prefix, svc_interval, svc_remaining_length, SvcTable};
pub use word::Word;
