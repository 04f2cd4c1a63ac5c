//! Packing and covering triangles in edge-weighted multigraphs.
//!
//! The crate computes the four classical parameters of a weighted graph
//! `(G, w)`: the packing number `nu_w`, the transversal number `tau_w`, and
//! their common fractional relaxation `nu*_w = tau*_w`, all exactly. On top
//! of those it provides constructive transversal algorithms that come with
//! checked performance bounds:
//!
//! * [`krivelevich::transversal_2nustar`]: weight at most `2 nu* - sqrt(nu*)/4`,
//! * [`haxell::transversal_292`]: weight at most `(73/25) nu`,
//! * [`planar::reduce_and_certify`]: a packing `P` and transversal `C` with
//!   `w(C) <= 2|P|` for planar inputs.
//!
//! Every result is returned together with a certificate that can be checked
//! independently with [`certificate::verify_packing`] and
//! [`certificate::verify_transversal`].

pub mod batch;
pub mod certificate;
pub mod cuts;
pub mod error;
pub mod exact;
pub mod format;
pub mod generators;
pub mod graph;
pub mod haxell;
pub mod krivelevich;
pub mod par;
pub mod planar;
pub mod rational;

pub use certificate::{
    verify_packing, verify_transversal, weight, FractionalPacking, FractionalTransversal, PackingCertificate,
    TransversalCertificate,
};
pub use error::{Error, Result};
pub use exact::{lp_optimal, nu_exact, tau_exact, tight_sets, LpSolution, TightSets};
pub use graph::{EdgeKey, Multigraph, Triangle};
pub use rational::Rational;
