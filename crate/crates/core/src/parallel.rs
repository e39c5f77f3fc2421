//! Order-preserving data-parallel helpers. With the `parallel` feature off
//! these run sequentially with the same signatures.

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Maps every item and folds the results with an associative `merge`.
#[cfg(feature = "parallel")]
pub fn map_reduce<T, U, F, I, M>(items: &[T], f: F, identity: I, merge: M) -> U
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
    I: Fn() -> U + Sync + Send,
    M: Fn(U, U) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).reduce(identity, merge)
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<T, U, F, I, M>(items: &[T], f: F, identity: I, merge: M) -> U
where
    F: Fn(&T) -> U,
    I: Fn() -> U,
    M: Fn(U, U) -> U,
{
    items.iter().map(f).fold(identity(), merge)
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
