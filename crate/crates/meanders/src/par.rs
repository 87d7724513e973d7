//! Thin data-parallel shim. With the default `parallel` feature the maps run
//! on rayon; without it they run sequentially. A runtime switch forces
//! sequential execution even when rayon is compiled in, which is what the
//! benchmark suite uses to compare both paths inside one binary.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force sequential execution at runtime (benchmarks and debugging).
pub fn set_force_sequential(v: bool) {
    FORCE_SEQUENTIAL.store(v, Ordering::SeqCst);
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::SeqCst)
}

/// Map `f` over `items`, preserving order.
pub fn map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}

/// Map `f` over `items` and fold the results with an associative,
/// commutative `merge`. Merge order is unspecified, so callers must sort
/// afterwards if they need a canonical result.
pub fn map_merge<T, R, F, M>(items: Vec<T>, identity: impl Fn() -> R + Sync + Send, f: F, merge: M) -> R
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if is_parallel() {
            use rayon::prelude::*;
            return items
                .into_par_iter()
                .map(f)
                .reduce(&identity, &merge);
        }
    }
    items.into_iter().map(f).fold(identity(), merge)
}
