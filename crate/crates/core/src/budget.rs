//! Cooperative work caps for exponential searches.

use alloc::sync::Arc;
use core::cell::Cell;
use core::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};

/// Node counter shared by one search (and its sub-searches), with an optional
/// external cancellation flag.
///
/// Exceeding the cap or observing the flag turns into [`Error::BudgetExceeded`];
/// searches never report a wrong answer because of it.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: Cell<u64>,
    cancel: Option<Arc<AtomicBool>>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            ..Budget::default()
        }
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    /// Charge one search node.
    #[inline]
    pub fn tick(&self) -> Result<()> {
        let used = self.used.get() + 1;
        self.used.set(used);
        if let Some(limit) = self.limit {
            if used > limit {
                return Err(Error::BudgetExceeded);
            }
        }
        // poll the flag every 1024 nodes
        if used & 0x3ff == 0 {
            if let Some(flag) = &self.cancel {
                if flag.load(Ordering::Relaxed) {
                    return Err(Error::BudgetExceeded);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_enforced() {
        let b = Budget::nodes(3);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(Error::BudgetExceeded));
    }

    #[test]
    fn cancellation_flag_is_observed() {
        let flag = Arc::new(AtomicBool::new(true));
        let b = Budget::unlimited().with_cancel(flag);
        let mut res = Ok(());
        for _ in 0..2048 {
            res = b.tick();
            if res.is_err() {
                break;
            }
        }
        assert_eq!(res, Err(Error::BudgetExceeded));
    }
}
