//! Exact heterochromatic numbers.
//!
//! `hc(H) = 1 + max { t : some t-block partition leaves no edge rainbow }`,
//! found by exhaustive branch and bound. A returned value always comes with a
//! rainbow-free witness partition that callers can re-check independently.

mod partition;
mod search;

pub use partition::{check_rainbow_free, is_rainbow, Partition};
pub use search::{
    find_rainbow_free_partition, hc, max_rainbow_free, HcOutcome, HcValue, MaxRainbowFree, SearchConfig,
    SearchStats, DEFAULT_NODE_LIMIT,
};
