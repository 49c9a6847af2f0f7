use std::time::{Duration, Instant};

use crate::error::{Error, Interrupt, Result};

/// Limits for exhaustive searches. Node limits keep outcomes reproducible;
/// wall-clock limits do not, so they are off unless asked for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchLimits {
            max_nodes: Some(max_nodes),
            time_limit: None,
        }
    }

    pub(crate) fn start(&self) -> Budget {
        Budget {
            max_nodes: self.max_nodes,
            deadline: self.time_limit.map(|d| Instant::now() + d),
            nodes: 0,
        }
    }
}

pub(crate) struct Budget {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Budget {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(max) = self.max_nodes {
            if self.nodes > max {
                return Err(Error::Interrupted(Interrupt::NodeLimit));
            }
        }
        if let Some(deadline) = self.deadline {
            if self.nodes & 0x3ff == 0 && Instant::now() > deadline {
                return Err(Error::Interrupted(Interrupt::Timeout));
            }
        }
        Ok(())
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}
