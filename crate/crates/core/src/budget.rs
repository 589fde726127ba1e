//! Explicit enumeration limits.
//!
//! Every search in the crate draws from one of these counters; running out
//! yields [`Error::Budget`](crate::Error::Budget) instead of an unbounded loop.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_POINTS: u64 = 20_000_000;
pub const DEFAULT_CYCLES: u64 = 1_000_000;
pub const DEFAULT_SUBSPACES: u64 = 5_000_000;
pub const DEFAULT_CYCLE_VERTICES: usize = 14;
pub const DEFAULT_SEARCH_VERTICES: usize = 20;
pub const DEFAULT_PACKING_VERTICES: usize = 12;

#[derive(Debug)]
pub struct Budget {
    /// Lattice points, candidate monomials and simplex par-points.
    pub points: u64,
    /// Induced cycles produced by the cycle enumerator.
    pub cycles: u64,
    /// Codewords and subcodes visited by the code routines.
    pub subspaces: u64,
    /// Largest graph handed to the cycle enumerator.
    pub cycle_vertices: usize,
    /// Largest clutter handed to exhaustive cover/matching search.
    pub search_vertices: usize,
    /// Largest clutter for the 3^s minor sweep.
    pub packing_vertices: usize,
    used_points: AtomicU64,
    used_cycles: AtomicU64,
    used_subspaces: AtomicU64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_POINTS, DEFAULT_CYCLES, DEFAULT_SUBSPACES)
    }
}

impl Clone for Budget {
    fn clone(&self) -> Self {
        let mut b = Budget::new(self.points, self.cycles, self.subspaces);
        b.cycle_vertices = self.cycle_vertices;
        b.search_vertices = self.search_vertices;
        b.packing_vertices = self.packing_vertices;
        b
    }
}

impl Budget {
    pub fn new(points: u64, cycles: u64, subspaces: u64) -> Self {
        Budget {
            points,
            cycles,
            subspaces,
            cycle_vertices: DEFAULT_CYCLE_VERTICES,
            search_vertices: DEFAULT_SEARCH_VERTICES,
            packing_vertices: DEFAULT_PACKING_VERTICES,
            used_points: AtomicU64::new(0),
            used_cycles: AtomicU64::new(0),
            used_subspaces: AtomicU64::new(0),
        }
    }

    /// A budget large enough that nothing at desk scale trips it.
    pub fn unlimited() -> Self {
        let mut b = Budget::new(u64::MAX, u64::MAX, u64::MAX);
        b.cycle_vertices = 64;
        b.search_vertices = 64;
        b.packing_vertices = 20;
        b
    }

    fn charge(counter: &AtomicU64, limit: u64, n: u64, what: &'static str) -> Result<()> {
        let before = counter.fetch_add(n, Ordering::Relaxed);
        if before.saturating_add(n) > limit {
            Err(Error::Budget { what, limit })
        } else {
            Ok(())
        }
    }

    pub fn charge_points(&self, n: u64) -> Result<()> {
        Self::charge(&self.used_points, self.points, n, "points")
    }

    pub fn charge_cycles(&self, n: u64) -> Result<()> {
        Self::charge(&self.used_cycles, self.cycles, n, "cycles")
    }

    pub fn charge_subspaces(&self, n: u64) -> Result<()> {
        Self::charge(&self.used_subspaces, self.subspaces, n, "subspaces")
    }

    /// Runs `f` against a fresh budget with the same limits, so one stage
    /// running out does not starve the next. The child's usage is then added
    /// here for reporting, without tripping these limits.
    pub fn scoped<T>(&self, f: impl FnOnce(&Budget) -> T) -> T {
        let child = self.clone();
        let out = f(&child);
        for (mine, theirs) in [
            (&self.used_points, &child.used_points),
            (&self.used_cycles, &child.used_cycles),
            (&self.used_subspaces, &child.used_subspaces),
        ] {
            mine.fetch_add(theirs.load(Ordering::Relaxed), Ordering::Relaxed);
        }
        out
    }

    pub fn used_points(&self) -> u64 {
        self.used_points.load(Ordering::Relaxed).min(self.points)
    }

    pub fn used_cycles(&self) -> u64 {
        self.used_cycles.load(Ordering::Relaxed).min(self.cycles)
    }

    pub fn used_subspaces(&self) -> u64 {
        self.used_subspaces.load(Ordering::Relaxed).min(self.subspaces)
    }

    pub(crate) fn check_cycle_vertices(&self, s: usize) -> Result<()> {
        if s > self.cycle_vertices {
            return Err(Error::Budget {
                what: "cycle-search vertices",
                limit: self.cycle_vertices as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_search_vertices(&self, s: usize) -> Result<()> {
        if s > self.search_vertices {
            return Err(Error::Budget {
                what: "exhaustive-search vertices",
                limit: self.search_vertices as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_packing_vertices(&self, s: usize) -> Result<()> {
        if s > self.packing_vertices {
            return Err(Error::Budget {
                what: "minor-sweep vertices",
                limit: self.packing_vertices as u64,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charging_past_the_limit_fails() {
        let b = Budget::new(10, 1, 1);
        assert!(b.charge_points(6).is_ok());
        assert!(b.charge_points(4).is_ok());
        assert_eq!(
            b.charge_points(1),
            Err(Error::Budget { what: "points", limit: 10 })
        );
        assert_eq!(b.used_points(), 10);
    }

    #[test]
    fn clone_resets_counters() {
        let b = Budget::new(5, 5, 5);
        b.charge_cycles(3).unwrap();
        assert_eq!(b.clone().used_cycles(), 0);
    }

    #[test]
    fn scoped_usage_is_recorded_without_failing() {
        let b = Budget::new(5, 5, 5);
        b.charge_points(4).unwrap();
        assert!(b.scoped(|c| c.charge_points(3)).is_ok());
        assert_eq!(b.used_points(), 5);
        assert!(b.charge_points(1).is_err());
    }
}
