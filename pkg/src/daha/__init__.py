"""Double affine Hecke algebras and nonsymmetric Macdonald polynomials with exact arithmetic."""
