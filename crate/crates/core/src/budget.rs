//! Node budgets for exhaustive searches.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Default node budget used when none is given.
pub const DEFAULT_NODES: u64 = 200_000_000;

/// Marker returned by a search that ran out of nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetExhausted {
    pub nodes: u64,
}

impl From<BudgetExhausted> for Error {
    fn from(b: BudgetExhausted) -> Self {
        Error::BudgetExhausted(b.nodes)
    }
}

/// A countdown of search nodes shared by the stages of one computation.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExhausted { nodes: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODES)
    }
}

/// Outcome of an exhaustive search: a witness, a proof of absence, or a budget stop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchResult<T> {
    Found(T),
    NotFound,
    Unknown(BudgetExhausted),
}

impl<T> SearchResult<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchResult::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchResult::Found(_))
    }

    pub fn is_not_found(&self) -> bool {
        matches!(self, SearchResult::NotFound)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, SearchResult::Unknown(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchResult<U> {
        match self {
            SearchResult::Found(t) => SearchResult::Found(f(t)),
            SearchResult::NotFound => SearchResult::NotFound,
            SearchResult::Unknown(b) => SearchResult::Unknown(b),
        }
    }

    pub(crate) fn from_search(r: Result<Option<T>, BudgetExhausted>) -> Self {
        match r {
            Ok(Some(t)) => SearchResult::Found(t),
            Ok(None) => SearchResult::NotFound,
            Err(b) => SearchResult::Unknown(b),
        }
    }
}
