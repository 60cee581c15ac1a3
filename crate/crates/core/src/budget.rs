use std::time::{Duration, Instant};

/// A wall-clock allowance for long searches.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    start: Instant,
    limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { start: Instant::now(), limit: None }
    }

    pub fn millis(ms: u64) -> Self {
        Budget { start: Instant::now(), limit: Some(Duration::from_millis(ms)) }
    }

    pub fn expired(&self) -> bool {
        self.limit.is_some_and(|l| self.start.elapsed() >= l)
    }

    pub fn elapsed_ms(&self) -> u128 {
        self.start.elapsed().as_millis()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
