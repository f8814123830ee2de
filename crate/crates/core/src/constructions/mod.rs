//! Builders for the graph families, each validated after construction.

pub mod bases;
pub mod family;
pub mod fixtures;
pub mod gadget;
pub mod ring;
pub mod splice;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::cycle_enum::BigCount;

pub use bases::{cubic_bases, BaseTriple};
pub use family::{build_family, predicted_family_stats, solve_family_order, FamilyParams};
pub use fixtures::{build_royle_composite, load_fixture, load_fixture_from, Fixture};
pub use gadget::{
    build_gadget, clique_minus_edge, gadget_path_count_formula, subgraph_i, subgraph_i_formula,
    GadgetLayout, GadgetSpec, SubgraphI,
};
pub use ring::{build_ring, is_hamiltonian_cycle, remove_ham_edge, RingPair};
pub use splice::{build_chain, splice_once};

/// Expected statistics of a constructed graph, checked by enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub order: usize,
    pub circumference: usize,
    #[serde(serialize_with = "decimal")]
    pub count: BigCount,
    pub formula: String,
}

pub(crate) fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// Prediction for a `k`-fold chain: hamiltonian, with `c1 c2 c3^(k-1)`
/// hamiltonian cycles.
pub fn chain_prediction(
    order: usize,
    c1: &BigCount,
    c2: &BigCount,
    c3: &BigCount,
    k: usize,
) -> Prediction {
    Prediction {
        order,
        circumference: order,
        count: crate::bounds::predicted_chain_count(c1, c2, c3, k),
        formula: "c1*c2*c3^(k-1)".into(),
    }
}
