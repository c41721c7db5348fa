//! Closed-form roots of real polynomials of degree 2 to 4.
//!
//! The unknown is written as `x + omega y` for a root of unity `omega`
//! (`i` for quadratics and quartics, `(1 + i sqrt 3)/2` for cubics); the
//! polynomial splits into a real and an imaginary equation whose elimination
//! is of lower difficulty than the original. [`split`] holds the solvers and
//! the split systems, [`oracle`] an independent Aberth-Ehrlich root finder the
//! results are checked against.
//!
//! ```
//! use splitroots::{parse_polynomial, solve};
//!
//! let p = parse_polynomial("z^3 - 7z + 6").unwrap();
//! let roots = solve(&p).unwrap();
//! assert!(roots.max_residual() < 1e-12);
//! ```

pub mod cli;
pub mod complex;
pub mod corpus;
mod dd;
pub mod oracle;
pub mod parser;
pub mod poly;
pub mod split;

pub use complex::Complex;
pub use oracle::{find_roots, pair_roots, OracleConfig, OracleError, OracleResult};
pub use parser::{parse_polynomial, ParseError, ParseErrorKind};
pub use poly::{
    depress_cubic, depress_quartic, derivative, evaluate, undepress, BranchTag, DepressedCubic,
    DepressedQuartic, PolyError, RealPolynomial, RootSet, Sign,
};
pub use split::{
    cubic_naive_split_residual, cubic_omega_split_residual, naive_cubic_reduction,
    quadratic_split_residual, quartic_resolvent, quartic_split_residual, solve,
    solve_depressed_cubic, solve_depressed_quartic, solve_quadratic, ReducedCubicCoefficients,
    SolveError, SplitAnsatz, SplitResidual,
};
