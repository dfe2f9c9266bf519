//! Exact computer algebra for the Kauffman bracket skein algebra of the
//! torus, over the ring Z[t, t^-1].
//!
//! The basis of the algebra is the set of unoriented curve classes
//! (p, q) on the torus (together with the empty link): (p, q) with
//! gcd |d| denotes |d| parallel copies of a primitive curve threaded
//! along a Chebyshev polynomial of the first kind, and (p, q) is
//! identified with (-p, -q). In this basis multiplication is a two-term
//! product-to-sum rule,
//!
//! ```text
//! (p,q) * (r,s) = t^(ps-qr) (p+r, q+s) + t^(qr-ps) (p-r, q-s),
//! ```
//!
//! making every product of basis elements again a short exact
//! expression. The crate builds the structures around that rule:
//!
//! * [`laurent`] — the coefficient ring Z[t, t^-1] with arbitrary
//!   precision integer coefficients;
//! * [`chebyshev`] — Chebyshev polynomials of the first kind and the
//!   change of basis between monomials and the T_n family;
//! * [`skein`] — the torus algebra itself: normal forms, products,
//!   parallel copies, geometric intersection numbers, and the classical
//!   (t = 1) evaluation;
//! * [`nc_torus`] — the noncommutative torus; the skein algebra embeds
//!   into its symmetric part by (p,q) -> e_{p,q} + e_{-p,-q}, which
//!   turns the product-to-sum rule into plain monomial multiplication;
//! * [`solid_torus`] — the skein module of the solid torus as a module
//!   over the torus algebra: boundary curves act on polynomials in the
//!   core curve;
//! * [`lens`] — skein modules of lens spaces L(p, q), computed by
//!   reducing against a gluing matrix to the finite spanning set
//!   {1 (x) alpha^k : k <= floor(p/2)};
//! * [`jones_wenzl`] — Jones-Wenzl idempotents threaded along curves,
//!   their basis expansions, and their traces;
//! * [`expr`] and [`format`] — the text grammar, evaluator, and
//!   canonical text/JSON renderers used by the command-line tool.
//!
//! All computation is exact; numeric evaluation at a complex t (or at
//! roots of unity) is available at the edges for output and for
//! cross-checks, never inside the algebra.

pub mod chebyshev;
pub mod error;
pub mod expr;
pub mod format;
pub mod jones_wenzl;
pub mod laurent;
pub mod lens;
pub mod nc_torus;
pub mod skein;
pub mod solid_torus;

pub use error::Error;
pub use laurent::LaurentPoly;
pub use lens::{GluingMatrix, LensElement};
pub use nc_torus::NcElement;
pub use skein::{CurveClass, SkeinElement};
pub use solid_torus::SolidTorusElement;
