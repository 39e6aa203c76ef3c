//! The concrete instantiation and end-to-end translation: default parameters
//! over the P-language, the pairing statement of the membership language,
//! the two-way signature bridge, the guarded homomorphism, the first-order
//! reducer, and their composition.

mod bridge;
mod corpus;
mod homo;
mod params;
mod pi;
mod presentations;
mod reduce;
mod tr;

pub use bridge::{bridge, check_bridge_equiv, check_bridge_equiv_sampled, Bridge};
pub use corpus::{reduce_check_corpus, zf_corpus};
pub use homo::{at_pair, h, h_prime, sax_star, triplet_at_x1};
pub use params::{default_basis, default_params, l3_basis, l3_pair_params, membership_e, pair_chain};
pub use pi::{pi, pi_conjuncts, pi_plus, pi_plus_extras, sample_totality_conjunct, sax_mirror_pairs};
pub use presentations::{equation_to_fmd3, fmd3_to_equation, fmd3_to_modal, modal_to_fmd3};
pub use reduce::{distinct_var_count, reduce_f};
pub use tr::{tr, TranslationReport};
