//! Lattice-path and parking-function models.
