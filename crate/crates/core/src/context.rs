use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use serde::Serialize;

use crate::monomial::BaseOrder;

/// Environment variable capping the number of S-pairs a single Gröbner
/// computation may process.
pub const GB_LIMIT_ENV: &str = "FLATLAB_GB_LIMIT";

/// Settings shared by every computation of one run, plus running counters.
///
/// Counters are atomics, so one `Ctx` may be shared by concurrent tasks.
#[derive(Debug)]
pub struct Ctx {
    /// Order used inside each variable block.
    pub order: BaseOrder,
    /// Select S-pairs by sugar degree instead of lcm degree.
    pub sugar: bool,
    /// Abort a Gröbner computation after this many S-pairs.
    pub pair_limit: Option<usize>,
    pairs: AtomicU64,
    max_terms: AtomicUsize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub gb_pairs: u64,
    pub max_poly_terms: usize,
}

impl Ctx {
    pub fn new(order: BaseOrder) -> Self {
        Ctx {
            order,
            sugar: false,
            pair_limit: None,
            pairs: AtomicU64::new(0),
            max_terms: AtomicUsize::new(0),
        }
    }

    /// Reads the pair limit from `FLATLAB_GB_LIMIT` when set.
    pub fn from_env(order: BaseOrder) -> Self {
        let mut ctx = Self::new(order);
        ctx.pair_limit = std::env::var(GB_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok());
        ctx
    }

    pub fn with_sugar(mut self, sugar: bool) -> Self {
        self.sugar = sugar;
        self
    }

    pub fn with_pair_limit(mut self, limit: Option<usize>) -> Self {
        self.pair_limit = limit;
        self
    }

    pub fn stats(&self) -> GbStats {
        GbStats {
            gb_pairs: self.pairs.load(Ordering::Relaxed),
            max_poly_terms: self.max_terms.load(Ordering::Relaxed),
        }
    }

    pub fn reset_stats(&self) {
        self.pairs.store(0, Ordering::Relaxed);
        self.max_terms.store(0, Ordering::Relaxed);
    }

    pub(crate) fn record(&self, pairs: u64, max_terms: usize) {
        self.pairs.fetch_add(pairs, Ordering::Relaxed);
        self.max_terms.fetch_max(max_terms, Ordering::Relaxed);
    }
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx::new(BaseOrder::GrevLex)
    }
}
