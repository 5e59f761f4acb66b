//! Explicit search budgets. Exceeding a budget yields an explicit
//! inconclusive outcome, never a silent wrong answer.

use std::time::Instant;

/// Limits for one search stage. Both fields must be positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Self {
        assert!(max_nodes > 0 && max_seconds > 0.0, "budgets must be positive");
        SearchBudget {
            max_nodes,
            max_seconds,
        }
    }

    /// Node-limited budget with a generous one-hour wall clock.
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget::new(max_nodes, 3600.0)
    }
}

/// Signals that the running search exhausted its budget.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BudgetHit;

/// Shared consumption tracker; one meter may span several sub-searches of a
/// single stage (a rectangle sweep, a strip-height loop).
#[derive(Debug)]
pub(crate) struct BudgetMeter {
    max_nodes: u64,
    started: Instant,
    max_seconds: f64,
    nodes: u64,
}

impl BudgetMeter {
    pub fn new(budget: SearchBudget) -> Self {
        BudgetMeter {
            max_nodes: budget.max_nodes,
            started: Instant::now(),
            max_seconds: budget.max_seconds,
            nodes: 0,
        }
    }

    /// Counts one node. The wall clock is sampled every 1024 nodes.
    pub fn tick(&mut self) -> Result<(), BudgetHit> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(BudgetHit);
        }
        if self.nodes % 1024 == 0 && self.started.elapsed().as_secs_f64() > self.max_seconds {
            return Err(BudgetHit);
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
