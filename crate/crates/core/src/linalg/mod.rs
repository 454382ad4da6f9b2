//! Self-contained dense complex linear algebra: Schur-based eigensolver,
//! smallest-singular-direction extraction, polynomial roots and optimal
//! assignment. Dimensions here are exact-diagonalization scale (<= 1024).

mod assign;
mod eigen;
mod nullspace;
mod polyroots;

pub use assign::min_cost_assignment;
pub use eigen::{eig, EigenDecomposition};
pub use nullspace::smallest_singular_direction;
pub use polyroots::polynomial_roots;
