//! Search and enumeration budgets.
//!
//! Exceeding a budget is reported as an explicit error ("undecided at
//! this budget"), never as a mathematical verdict.

/// Caps for the searches that are exponential in the worst case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Cap on the number of candidates `p^dim` the finite-field
    /// full-support search may enumerate.
    pub max_search_candidates: u64,
    /// When set, caps the nullspace dimension for the finite-field search
    /// directly instead of through `max_search_candidates`.
    pub max_nullspace_dim: Option<usize>,
    /// Simplex-count cap for the brute-force minimality oracle.
    pub max_oracle_simplices: usize,
    /// Vertex cap for exhaustive minimal-graph enumeration.
    pub max_graph_vertices: u32,
    /// Vertex cap for hypertree enumeration.
    pub max_hypertree_n: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_search_candidates: 1 << 16,
            max_nullspace_dim: None,
            max_oracle_simplices: 20,
            max_graph_vertices: 7,
            max_hypertree_n: 8,
        }
    }
}

impl Budget {
    /// Default budget with `BC_MAX_NULLSPACE_DIM` (finite-field search
    /// dimension) and `BC_ENUM_BUDGET` (enumeration vertex caps) applied
    /// from the environment. Unparsable values are ignored.
    pub fn from_env() -> Self {
        let mut budget = Budget::default();
        if let Some(dim) = read_env("BC_MAX_NULLSPACE_DIM") {
            budget.max_nullspace_dim = Some(dim as usize);
        }
        if let Some(cap) = read_env("BC_ENUM_BUDGET") {
            budget.max_graph_vertices = cap as u32;
            budget.max_hypertree_n = cap as u32;
        }
        budget
    }

    /// Whether a finite-field search over `p^dim` candidates fits.
    pub fn allows_search(&self, p: u64, dim: usize) -> bool {
        if let Some(max_dim) = self.max_nullspace_dim {
            return dim <= max_dim;
        }
        match (p as u128).checked_pow(dim as u32) {
            Some(candidates) => candidates <= self.max_search_candidates as u128,
            None => false,
        }
    }
}

fn read_env(name: &str) -> Option<u64> {
    std::env::var(name).ok()?.trim().parse().ok()
}
