//! Fibonacci numbers as exact integers.
//!
//! `F_1 = F_2 = 1` and `F_k = F_{k-1} + F_{k-2}` for `k >= 3`. Values are
//! kept as `BigInt` from the start; `F_93` already overflows 64 bits and the
//! matrix entries downstream square these numbers.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::sync::Mutex;

/// Memoized Fibonacci sequence, 1-indexed.
#[derive(Debug)]
pub struct FibCache {
    /// `values[k - 1]` holds `F_k`.
    values: Vec<BigInt>,
}

impl FibCache {
    pub fn new() -> Self {
        FibCache {
            values: vec![BigInt::one(), BigInt::one()],
        }
    }

    /// `F_k` for `k >= 1`. Grows the cache as needed.
    pub fn get(&mut self, k: u64) -> Result<BigInt> {
        if k == 0 {
            return Err(Error::domain("fibonacci index must be >= 1"));
        }
        let k = k as usize;
        while self.values.len() < k {
            let n = self.values.len();
            let next = &self.values[n - 1] + &self.values[n - 2];
            self.values.push(next);
        }
        Ok(self.values[k - 1].clone())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl Default for FibCache {
    fn default() -> Self {
        Self::new()
    }
}

static GLOBAL: Mutex<Option<FibCache>> = Mutex::new(None);

/// `F_k`, memoized in a process-wide cache behind a single-writer lock.
pub fn fibonacci(k: u64) -> Result<BigInt> {
    let mut guard = GLOBAL.lock().expect("fib cache poisoned");
    guard.get_or_insert_with(FibCache::new).get(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(fibonacci(1).unwrap(), BigInt::from(1));
        assert_eq!(fibonacci(2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn recurrence_unrolled() {
        assert_eq!(fibonacci(5).unwrap(), BigInt::from(5));
        assert_eq!(fibonacci(10).unwrap(), BigInt::from(55));
    }

    #[test]
    fn rejects_zero() {
        assert!(fibonacci(0).is_err());
    }

    #[test]
    fn big_values_do_not_wrap() {
        // F_93 is the first value past i64::MAX, F_94 the first past u64::MAX
        assert!(fibonacci(93).unwrap() > BigInt::from(i64::MAX));
        let f94 = fibonacci(94).unwrap();
        assert!(f94 > BigInt::from(u64::MAX));
        let f93 = fibonacci(93).unwrap();
        let f92 = fibonacci(92).unwrap();
        assert_eq!(f94, f93 + f92);
    }
}
