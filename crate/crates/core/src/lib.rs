//! Numerics for the complexified planar Kepler problem: the quotient
//! structure of its phase space, the geometry of the fiber curves of the
//! energy–momentum map, period integrals of the fiber 1-forms, analytic
//! continuation of the period lattice along loops in parameter space, and
//! complex-time flow experiments that cross-check the lattice dynamically.
//!
//! The crate is organized bottom-up:
//!
//! * [`path`], [`branch`], [`quad`] — branch-tracked analytic continuation
//!   along paths and adaptive contour quadrature (the numeric substrate);
//! * [`phase`] — the doubled phase space, its invariants, the `C*`-action,
//!   a section of the quotient, and the holomorphic vector fields;
//! * [`curve`] — classification of fiber curves and the normalized chart
//!   with branch points at 0 and 1;
//! * [`period`] — the period integrals and the rank-2 period lattice;
//! * [`monodromy`] — continuation of the lattice along loops in the
//!   parameter plane and extraction of integer classifying matrices;
//! * [`flow`] — adaptive complex-time integration of the two commuting
//!   Hamiltonian flows, used as an independent dynamical oracle;
//! * [`verify`] — the acceptance checks behind the `verify` CLI command.

pub mod branch;
pub mod conventions;
pub mod curve;
pub mod flow;
pub mod monodromy;
pub mod path;
pub mod period;
pub mod phase;
pub mod quad;
pub mod verify;

pub(crate) mod cjson;

pub use branch::{continue_sqrt, continue_sqrt_fn, track_quadratic_roots, BranchTrace, TrackError};
pub use curve::{classify, discriminant, from_u, u_chart, CurveClass, CurveError, CurveParams, UChart};
pub use flow::{integrate, lattice_return, Field, FlowError, FlowResult};
pub use monodromy::{
    continue_periods, extract_monodromy, pole_locus, standard_loop, ContinuationError,
    ContinuationTrace, LoopKind, LoopSpec, MonodromyMatrix, PoleLocus,
};
pub use path::{ComplexPath, PathError};
pub use period::{lattice, mu_nu, period, Cycle, FiberForm, Lattice, PeriodError, PeriodPair};
pub use phase::{act, invariants, lift_config_path, section, vector_field, Invariants, PhaseError, PhasePoint};
pub use quad::{integrate_contour, ContourIntegrand, QuadError, QuadResult, QuadratureConfig};
