//! Extremal theory of forbidden Berge hypergraphs in (0,1)-matrices.
//!
//! A simple matrix is a (0,1)-matrix with no repeated columns, viewed as an
//! element-set incidence structure. For a small forbidden matrix `F` this
//! crate decides Berge and configuration containment, normalizes matrices by
//! shifting into downsets, expands the standard lower-bound constructions,
//! computes the exact extremal value `Bh(m, F)` at small `m` by
//! branch-and-bound over order ideals, and classifies the asymptotic growth
//! of `Bh(m, F)` for matrices with up to five rows.

pub mod classifier;
pub mod constructions;
pub mod containment;
pub mod error;
pub mod graphs;
pub mod matrix;
pub mod naive;
pub mod named;
pub mod solver;
pub mod transform;
pub mod verify;

pub use error::Error;
pub use matrix::BitMatrix;

/// JSON schema tag stamped on all machine-readable CLI output.
pub const SCHEMA: &str = "bergekit/1";

/// Build a thread pool capped by the `BERGEKIT_THREADS` environment variable.
///
/// Corpus runs and theorem verification fan out over this pool; item order in
/// the output is fixed by index, never by completion order.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("BERGEKIT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                builder = builder.num_threads(n);
            }
        }
    }
    builder.build().expect("thread pool")
}
