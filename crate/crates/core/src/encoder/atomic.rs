//! Lock-free `f64` accumulation.
//!
//! There is no hardware float fetch-add, so [`AtomicF64::fetch_add`] retries a
//! compare-exchange on the value's bit pattern until no other writer has
//! slipped in between the load and the store. An increment is therefore
//! all-or-nothing and never lost. No ordering is promised between distinct
//! cells; joining the worker threads is what publishes the final values.

use std::mem::{align_of, size_of, ManuallyDrop};
use std::sync::atomic::{AtomicU64, Ordering};

#[repr(transparent)]
#[derive(Debug, Default)]
pub struct AtomicF64(AtomicU64);

// The Vec reinterpretations below rely on these.
const _: () = assert!(size_of::<AtomicF64>() == size_of::<u64>());
const _: () = assert!(align_of::<AtomicF64>() == align_of::<u64>());
const _: () = assert!(size_of::<AtomicF64>() == size_of::<f64>());
const _: () = assert!(align_of::<AtomicF64>() == align_of::<f64>());

impl AtomicF64 {
    pub fn new(v: f64) -> Self {
        AtomicF64(AtomicU64::new(v.to_bits()))
    }

    #[inline]
    pub fn load(&self) -> f64 {
        f64::from_bits(self.0.load(Ordering::Relaxed))
    }

    /// Atomically adds `delta`, returning the previous value.
    #[inline]
    pub fn fetch_add(&self, delta: f64) -> f64 {
        let mut current = self.0.load(Ordering::Relaxed);
        loop {
            let next = (f64::from_bits(current) + delta).to_bits();
            match self
                .0
                .compare_exchange_weak(current, next, Ordering::Relaxed, Ordering::Relaxed)
            {
                Ok(prev) => return f64::from_bits(prev),
                Err(actual) => current = actual,
            }
        }
    }

    /// Load, add, store, with nothing stopping another thread from writing in
    /// between. Concurrent callers can lose each other's increments.
    #[inline]
    pub fn add_unsynchronized(&self, delta: f64) {
        let v = f64::from_bits(self.0.load(Ordering::Relaxed)) + delta;
        self.0.store(v.to_bits(), Ordering::Relaxed);
    }

    pub fn into_inner(self) -> f64 {
        f64::from_bits(self.0.into_inner())
    }
}

/// A zero-filled buffer of `len` cells.
///
/// Backed by a zeroed allocation, so pages are only touched when a worker
/// first writes to them.
pub fn zeroed(len: usize) -> Vec<AtomicF64> {
    let raw = ManuallyDrop::new(vec![0u64; len]);
    let (ptr, len, cap) = (raw.as_ptr() as *mut u64, raw.len(), raw.capacity());
    // SAFETY: AtomicF64 is repr(transparent) over AtomicU64, which has the same
    // in-memory representation as u64; size and alignment are checked above.
    // The all-zero bit pattern is 0.0.
    unsafe { Vec::from_raw_parts(ptr as *mut AtomicF64, len, cap) }
}

/// Reinterprets the cells as plain floats without copying.
pub fn into_f64_vec(cells: Vec<AtomicF64>) -> Vec<f64> {
    let raw = ManuallyDrop::new(cells);
    let (ptr, len, cap) = (raw.as_ptr() as *mut AtomicF64, raw.len(), raw.capacity());
    // SAFETY: owning the Vec means no other reference to the cells exists, and
    // an AtomicF64 holds exactly the bits of an f64 of the same size and
    // alignment.
    unsafe { Vec::from_raw_parts(ptr as *mut f64, len, cap) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::thread;

    #[test]
    fn zeroed_reads_zero() {
        let cells = zeroed(17);
        assert!(cells.iter().all(|c| c.load() == 0.0));
        assert_eq!(into_f64_vec(cells), vec![0.0; 17]);
    }

    #[test]
    fn fetch_add_returns_previous() {
        let c = AtomicF64::new(1.5);
        assert_eq!(c.fetch_add(2.0), 1.5);
        assert_eq!(c.load(), 3.5);
        c.add_unsynchronized(0.5);
        assert_eq!(c.into_inner(), 4.0);
    }

    #[test]
    fn no_lost_updates_under_contention() {
        // Every increment is 1.0, so the sum is exact in f64.
        let cell = AtomicF64::new(0.0);
        let threads = 8;
        let per = 20_000;
        thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(|| {
                    for _ in 0..per {
                        cell.fetch_add(1.0);
                    }
                });
            }
        });
        assert_eq!(cell.load(), (threads * per) as f64);
    }
}
