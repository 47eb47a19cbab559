//! Spectrum-derived diagnostics: scalar summaries, the numerical range,
//! pseudospectra grids, and transient-growth envelopes.

mod pseudo;
mod range;
mod summary;
mod transient;

pub use pseudo::{
    pseudo_abscissa_estimate, pseudo_radius_estimate, pseudospectra_grid, stone_bound_check,
    PseudospectraGrid,
};
pub use range::{
    in_numerical_range, numerical_range_boundary, rotated_hermitian_part, NumericalRangeSupport,
};
pub use summary::{hermitian_part, numerical_radius, spectral_summary, SpectralSummary};
pub use transient::{
    transient_envelope_continuous, transient_envelope_discrete, transient_lower_bound,
};
