//! Resource limits for the exhaustive searches.

use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Limits shared by every search in the crate. Exceeding one yields
/// [`Error::BudgetExceeded`]; no search ever reports a value it has not
/// proved.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Maximum number of orientations an enumeration may materialise.
    pub orientations: usize,
    /// Maximum number of search nodes a single subset search may visit.
    pub nodes: u64,
    /// Maximum number of simple cycles / bonds a graph enumeration may emit.
    pub enumeration: usize,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            orientations: 1 << 16,
            nodes: 200_000_000,
            enumeration: 50_000,
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            orientations: usize::MAX,
            nodes: u64::MAX,
            enumeration: usize::MAX,
            time_limit: None,
        }
    }

    pub fn meter(&self, what: &'static str) -> Meter {
        Meter {
            limit: self.nodes,
            used: Cell::new(0),
            deadline: self.time_limit.map(|d| Instant::now() + d),
            what,
        }
    }
}

/// Node counter for one search.
pub struct Meter {
    limit: u64,
    used: Cell<u64>,
    deadline: Option<Instant>,
    what: &'static str,
}

impl Meter {
    #[inline]
    pub fn tick(&self) -> Result<()> {
        let used = self.used.get() + 1;
        self.used.set(used);
        if used > self.limit {
            return Err(Error::BudgetExceeded(format!(
                "{}: more than {} search nodes",
                self.what, self.limit
            )));
        }
        if used & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Error::BudgetExceeded(format!("{}: time limit", self.what)));
                }
            }
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}
