//! Analysis toolbox for output consensus of heterogeneous LTI networks
//! under diffusive coupling.
//!
//! The crate is organised around one pipeline:
//!
//! 1. [`lti`] — real-rational SISO transfer functions: polynomial arithmetic,
//!    pole/residue analysis, frequency response and state-space realization.
//! 2. [`graph`] — undirected weighted graphs: incidence and Laplacian
//!    matrices, algebraic connectivity, spanning trees and the tree factor
//!    `Q` with `D = D_ST * Q`.
//! 3. [`passivity`] — positive-realness testing of the 2x2 gap operator for
//!    a pair of subsystems and bisection for the pairwise gap index.
//! 4. [`cert`] — the spectral consensus certificate: per-edge heterogeneity
//!    profile, the positive-definiteness check of the certificate matrix and
//!    the explicit consensus gain `rho`.
//! 5. [`sim`] — closed-loop assembly, fixed-step RK4 simulation, truncated
//!    norms and empirical verification of the consensus bound.
//!
//! All operations are pure functions on immutable values and safe to call
//! concurrently. With the `parallel` feature (default) the frequency sweeps,
//! per-edge gap computations and simulation batches use rayon; without it
//! every code path falls back to sequential iterators.

pub mod cert;
pub mod graph;
pub mod lti;
pub mod passivity;
pub mod sim;

mod parallel;

pub use cert::{
    build_m, certify, heterogeneity_profile, lemma3_check, CertError, ConsensusCertificate,
    HeterogeneityProfile, Lemma3Check, Network,
};
pub use graph::{
    tree_factor, Graph, GraphError, GraphSpectrum, IncidenceMatrix, TreeFactor,
};
pub use lti::{LtiError, PoleClass, PoleSet, Polynomial, RationalFunction, StateSpace};
pub use passivity::{
    build_omega, gap_index, ofp_index, pr_test, GapIndex, GapOptions, OmegaMatrix,
    PassivityError, PrTestOptions, PrVerdict,
};
pub use sim::{
    assemble_closed_loop, simulate, truncated_norm, verify_bound, BoundReport, BoundVerdict,
    ClosedLoopSystem, SignalPrimitive, SignalSpec, SimError, SimOptions, SimulationTrace,
};
