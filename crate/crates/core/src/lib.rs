//! Exact combinatorics of Harder-Narasimhan polygons for `GL_n`.
//!
//! * [`polygon`]: the [`HNPolygon`] type, its text form and the dominance order.
//! * [`kottwitz`]: generalized Kottwitz sets `B(GL_n, k, delta)` and
//!   HN-decomposability.
//! * [`extensions`]: which polygons occur as extensions of two bundles.
//! * [`interpolate`]: bundle polygons squeezed between two vectors.
//! * [`strata`]: Newton strata versus the weakly admissible locus for
//!   minuscule `mu`.
//! * [`minute`]: fully and weakly fully HN-decomposable pairs.
//! * [`cli`]: the `hn-strata` command-line tool.
//!
//! ```
//! use hn_strata::{ext_enumerate, poly};
//!
//! let set = ext_enumerate(&poly("(0)"), &poly("(-1/3)"));
//! assert_eq!(set, vec![poly("(0,-1/3)"), poly("(-1/4)")]);
//! ```
//!
//! The crate's `examples/` directory has one runnable program per area;
//! run them with `cargo run --release --example <name>`.

pub mod cli;
pub mod error;
pub mod extensions;
pub mod interpolate;
pub mod kottwitz;
pub mod minute;
pub mod polygon;
pub mod rational;
pub mod strata;

pub use error::{Error, Result};
pub use extensions::{ext_contains, ext_enumerate, ext_semistable_pair, tilde_ext_contains, ExtEngine, PathWitness};
pub use interpolate::{interpolate_constant, interpolate_general, interpolate_shifted};
pub use kottwitz::{basic_element, involution_check, is_hn_decomposable, kottwitz_set, KottwitzQuery};
pub use polygon::{parse, poly, EpsilonClass, HNPolygon};
pub use rational::Rational;
pub use strata::{extension_union, stratification_report, stratum_status, StrataConfig, WaStatus};
