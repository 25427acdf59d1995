#![forbid(unsafe_code)]

//! Computer algebra for scroll binomial edge ideals of labeled graphs.
//!
//! The crate constructs the ideal of Hankel 2-minors selected by the
//! edges of a labeled graph, computes reduced Groebner bases, initial
//! ideals, dimensions, Hilbert series and regularity, and runs
//! exhaustive verification sweeps over enumerated graph families.

pub mod error;
pub mod graph;
pub mod groebner;
pub mod hilbert;
pub mod monomial_ideal;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod scroll;
pub mod suites;
pub mod text;
pub mod variety;

pub use error::{Error, Result};
pub use graph::{
    clique_intervals, enumerate_graphs, find_closed_labeling, parse_graph, GraphFilter,
    LabeledGraph,
};
pub use groebner::{
    buchberger, eliminate, graded_dim_ideal, ideal_equal, ideal_member, initial_ideal, intersect,
    is_groebner, normal_form, radical_membership, s_polynomial, saturate, GroebnerBasis, Ideal,
};
pub use hilbert::{
    certify_cm, hilbert_numerator, krull_dim_monomial, reduced_series, regularity_bound_check,
    regularity_cm, CmCertificate, HilbertSeries, IntPoly,
};
pub use monomial_ideal::MonomialIdeal;
pub use report::TheoremReport;
pub use ring::{monomial_compare, Coefficient, Monomial, MonomialOrder, PolyRing, Polynomial};
pub use scroll::{
    edge_minor, linear_resolution_test, predicted_initial_ideal, predicted_minimal_primes,
    predicted_radical, radical_check, saturation_certificate, scroll_edge_ideal,
    scroll_full_ideal, stci_witness, SaturationCertificate,
};
pub use variety::{variety_points, variety_union_equal, FieldPoint};
