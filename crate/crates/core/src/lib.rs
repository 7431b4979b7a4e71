//! Randić matrices, exact Randić characteristic polynomials, spectra and
//! Randić energies of simple graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: graphs, the named families and edge deletion / disjoint union
//! * [`edgelist`]: the plain-text edge-list format
//! * [`poly`]: exact rational polynomials
//! * [`matrix`]: symmetric matrices and the Jacobi eigensolver
//! * [`spectral`]: Randić matrix, index, exact charpoly and energies
//! * [`closed_forms`]: closed-form charpolys and energies of the families
//! * [`verify`]: the cross-check harness and its JSON report
//!
//! ```
//! use randic::{charpoly_exact, closed_charpoly, generate, randic_energy, FamilySpec};
//!
//! let spec = FamilySpec::friendship(3);
//! let g = generate(&spec).unwrap();
//! assert_eq!(charpoly_exact(&g), closed_charpoly(&spec).unwrap());
//! assert!((randic_energy(&g, 1e-12).unwrap() - 4.0).abs() < 1e-9);
//! ```

pub mod closed_forms;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod spectral;
pub mod verify;

pub use closed_forms::{
    cheb_u, closed_charpoly, closed_energy, closed_energy_form, closed_form, lambda_poly,
    small_case_charpoly, ClosedForm, EnergyForm, LambdaSeq,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use error::{Error, Result};
pub use graph::{delete_edge, disjoint_union, generate, Family, FamilySpec, Graph};
pub use matrix::{eigenvalues, Spectrum, SymMatrix, DEFAULT_TOL};
pub use poly::{RatPoly, TermOrder};
pub use spectral::{
    charpoly_exact, graph_energy, randic_energy, randic_index, randic_matrix, randic_spectrum,
};
pub use verify::{
    check_edge_deletion_lemmas, check_union_additivity, integer_energy_witnesses, verify_all,
    verify_instance, Report, VerdictRecord,
};
