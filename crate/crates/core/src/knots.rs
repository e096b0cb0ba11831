//! Torus-knot superpolynomial routes and operator matrices.
