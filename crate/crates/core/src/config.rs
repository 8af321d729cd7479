/// Size limits shared by every exhaustive algorithm in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier a [`FiniteRing`](crate::ring::FiniteRing) may have.
    pub carrier_bound: usize,
    /// Rings up to this size keep a full multiplication table.
    pub mul_cache_threshold: usize,
    /// Largest number of enumerated shift prefixes in a Rogers search.
    pub tuple_cap: u64,
    /// Largest rank accepted for an order presentation.
    pub max_order_rank: usize,
    /// Largest lcm of moduli accepted by the integer sieve.
    pub period_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            carrier_bound: 4096,
            mul_cache_threshold: 1024,
            tuple_cap: 10_000_000,
            max_order_rank: 8,
            period_cap: 1_000_000,
        }
    }
}

impl Limits {
    pub fn with_carrier_bound(mut self, bound: usize) -> Self {
        self.carrier_bound = bound;
        self
    }

    pub fn with_tuple_cap(mut self, cap: u64) -> Self {
        self.tuple_cap = cap;
        self
    }

    /// Disables the multiplication table cache entirely.
    pub fn without_mul_cache(mut self) -> Self {
        self.mul_cache_threshold = 0;
        self
    }
}
