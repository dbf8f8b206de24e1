//! Arc-family branching: variable selection over aggregated arc flows,
//! right-branch lifting, and the level-limited search driver.
//!
//! Branching works on disjoint groups of arcs. The branch set collects
//! every group whose aggregated flow vanishes in the current LP solution;
//! the left branch removes all of its arcs and is finished off by the
//! bundled MILP solver, while the right branch forces at least one of them
//! back in through a covering row, which keeps the master's rows of
//! covering type and the pricing structure untouched.

use crate::netcore::{reverse_network, ArcFlowSolution, ArcId, Network};

mod driver;

pub use driver::{
    nf_solve, Incumbent, LevelStat, NfConfig, RcvfSpec, SolveOutcome, SolveStatus,
};

/// Disjoint groups of arcs used for aggregated branching.
#[derive(Clone, Debug, Default)]
pub struct ArcFamily {
    groups: Vec<Vec<ArcId>>,
}

impl ArcFamily {
    /// Build a family, checking that the groups are pairwise disjoint.
    pub fn new(groups: Vec<Vec<ArcId>>) -> ArcFamily {
        let mut seen = std::collections::HashSet::new();
        for group in &groups {
            for &a in group {
                assert!(seen.insert(a), "arc {a} appears in two family groups");
            }
        }
        ArcFamily { groups }
    }

    pub fn groups(&self) -> &[Vec<ArcId>] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

/// Flow below this counts as zero when aggregating groups.
const GROUP_FLOW_TOL: f64 = 1e-9;

/// Collect the live arcs of every group whose aggregated flow is zero in
/// the given solution. An empty result means the LP support already spans
/// all groups and further splitting is vacuous.
pub fn select_branch_set(
    family: &ArcFamily,
    net: &Network,
    sol: &ArcFlowSolution,
) -> Vec<ArcId> {
    let mut out = Vec::new();
    for group in &family.groups {
        let live: Vec<ArcId> = group.iter().copied().filter(|&a| net.is_live(a)).collect();
        if live.is_empty() {
            continue;
        }
        let total: f64 = live.iter().map(|&a| sol.value(a).abs()).sum();
        if total <= GROUP_FLOW_TOL {
            out.extend(live);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Drop arcs from a branch set that are redundant in the right-branch
/// covering constraint: an arc whose tail cannot be reached from the source
/// without already using a branch-set arc (or whose head cannot reach the
/// sink likewise) can only appear in solutions that hit the constraint
/// elsewhere. The integer-feasible set of the constraint is unchanged while
/// fractional solutions may be cut off.
///
/// One forward pass over the topological order, then the same pass on the
/// reversed network; linear in the number of arcs.
pub fn lift_branch_set(net: &Network, branch_set: &[ArcId]) -> Vec<ArcId> {
    let forward = drop_unreachable_tails(net, branch_set);
    let reversed = reverse_network(net);
    let mut lifted = drop_unreachable_tails(&reversed, &forward);
    lifted.sort_unstable();
    lifted
}

/// Keep only branch-set arcs whose tail is reachable from the source
/// through live arcs outside the branch set.
fn drop_unreachable_tails(net: &Network, branch_set: &[ArcId]) -> Vec<ArcId> {
    let in_set: std::collections::HashSet<ArcId> = branch_set.iter().copied().collect();
    let mut reachable = vec![false; net.nodes().len()];
    reachable[net.node_index(net.source())] = true;
    for &node in net.topo() {
        if !reachable[net.node_index(node)] {
            continue;
        }
        for &a in net.out_arcs(node) {
            if net.is_live(a) && !in_set.contains(&a) {
                reachable[net.node_index(net.arc(a).head)] = true;
            }
        }
    }
    branch_set
        .iter()
        .copied()
        .filter(|&a| reachable[net.node_index(net.arc(a).tail)])
        .collect()
}
