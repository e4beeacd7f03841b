//! Finite unital semilattices, their homomorphisms and duals, ideals and
//! quotients, finite presentations and truncated direct systems.

pub mod hom;
pub mod ideal;
pub mod limit;
pub mod present;
pub mod standard;
pub mod usl;

pub use hom::{check_hom, galois_adjoint, HomKind, HomViolation, UslHom};
pub use ideal::{all_ideals, is_ideal, quotient_by_ideal, Ideal, IdealViolation, Quotient};
pub use limit::{limit_equal, DirectSystem, LimitVerdict};
pub use present::{quotient_presentation, PresentedQuotient, PresentedUsl};
pub use standard::{make_standard, named, Family};
pub use usl::{
    check_busl_axioms, dual, AxiomReport, EquationVerdict, FiniteLattice, FiniteUsl, UslTable,
    Verdict,
};
