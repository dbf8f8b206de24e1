//! Acyclic decision networks, source-sink paths, and flow decomposition.
//!
//! A [`Network`] is a directed acyclic graph with a designated source and
//! sink. Every arc carries an integer cost and a sparse integer contribution
//! to a set of side constraints (the [`SideSystem`]). Source-sink paths play
//! the role of master-problem columns: the cost and column of a [`Path`] are
//! the sums of its arcs' costs and contributions.
//!
//! Arc removal is logical: arcs are flagged dead and their ids stay stable,
//! so fixing logs and branching constraints can reference arcs by id across
//! network reductions.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Identifier of a node. Ids need not be contiguous; problem adapters are
/// free to encode meaning into them (e.g. roll positions).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(pub u32);

/// Identifier of an arc. Arc ids are dense indices into [`Network::arcs`]
/// and stay stable across arc removals.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArcId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl ArcId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A decision arc: cost plus a sparse contribution column over side rows.
#[derive(Clone, Debug)]
pub struct Arc {
    pub id: ArcId,
    pub tail: NodeId,
    pub head: NodeId,
    /// Integer arc cost.
    pub cost: i64,
    /// Sparse contribution to the side rows, sorted by row index.
    /// Absent rows contribute zero.
    pub contrib: Vec<(usize, i64)>,
    /// Optional grouping key set by problem adapters (e.g. item index),
    /// consumed when building arc families.
    pub group: Option<u32>,
}

/// Classification of a side row by the signs of its arc coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum RowKind {
    /// All coefficients nonnegative.
    Covering,
    /// All coefficients nonpositive.
    Packing,
    /// Coefficients of both signs.
    Mixed,
}

/// The m side-constraint rows shared by the path-flow and arc-flow views.
/// All rows are stored in `>=` sense; the coefficients live on the arcs.
#[derive(Clone, Debug)]
pub struct SideSystem {
    pub rhs: Vec<i64>,
    pub kinds: Vec<RowKind>,
}

impl SideSystem {
    /// Build a side system by classifying each row from the arcs' signs.
    /// Rows touched by no arc default to covering.
    pub fn classify(rhs: Vec<i64>, arcs: &[Arc]) -> SideSystem {
        let m = rhs.len();
        let mut has_pos = vec![false; m];
        let mut has_neg = vec![false; m];
        for arc in arcs {
            for &(row, coef) in &arc.contrib {
                if coef > 0 {
                    has_pos[row] = true;
                } else if coef < 0 {
                    has_neg[row] = true;
                }
            }
        }
        let kinds = (0..m)
            .map(|k| match (has_pos[k], has_neg[k]) {
                (_, false) => RowKind::Covering,
                (false, true) => RowKind::Packing,
                (true, true) => RowKind::Mixed,
            })
            .collect();
        SideSystem { rhs, kinds }
    }

    pub fn len(&self) -> usize {
        self.rhs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rhs.is_empty()
    }
}

/// An extra `>=` row over a set of arcs, each with coefficient one.
/// Right-branch constraints and per-arc tailoring rows take this shape,
/// which keeps every generated row of covering type.
#[derive(Clone, Debug)]
pub struct CoveringRow {
    /// Member arcs, sorted by id.
    pub arcs: Vec<ArcId>,
    pub rhs: i64,
}

impl CoveringRow {
    pub fn new(mut arcs: Vec<ArcId>, rhs: i64) -> CoveringRow {
        arcs.sort_unstable();
        arcs.dedup();
        CoveringRow { arcs, rhs }
    }
}

/// Combined view of the base side rows plus node-local covering rows.
/// Row indices `0..sides.len()` address the base rows; the extra rows
/// follow in order.
#[derive(Clone, Copy)]
pub struct RowView<'a> {
    pub sides: &'a SideSystem,
    pub extra: &'a [CoveringRow],
}

impl<'a> RowView<'a> {
    pub fn base(sides: &'a SideSystem) -> RowView<'a> {
        RowView { sides, extra: &[] }
    }

    pub fn len(&self) -> usize {
        self.sides.len() + self.extra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rhs(&self, row: usize) -> i64 {
        let m = self.sides.len();
        if row < m {
            self.sides.rhs[row]
        } else {
            self.extra[row - m].rhs
        }
    }

    pub fn kind(&self, row: usize) -> RowKind {
        if row < self.sides.len() {
            self.sides.kinds[row]
        } else {
            RowKind::Covering
        }
    }

    /// Per-arc dual load `a' * prices` for a full price vector (base rows
    /// first, extra rows after).
    pub fn arc_loads(&self, net: &Network, prices: &[f64]) -> Vec<f64> {
        assert_eq!(prices.len(), self.len());
        let m = self.sides.len();
        let mut loads = vec![0.0; net.arcs.len()];
        for arc in &net.arcs {
            let mut v = 0.0;
            for &(row, coef) in &arc.contrib {
                v += coef as f64 * prices[row];
            }
            loads[arc.id.index()] = v;
        }
        for (j, row) in self.extra.iter().enumerate() {
            let price = prices[m + j];
            for &a in &row.arcs {
                loads[a.index()] += price;
            }
        }
        loads
    }

    /// Exact variant of [`RowView::arc_loads`] for prices given as integer
    /// multiples of a common epsilon.
    pub fn arc_loads_scaled(&self, net: &Network, prices: &[i64]) -> Vec<i128> {
        assert_eq!(prices.len(), self.len());
        let m = self.sides.len();
        let mut loads = vec![0i128; net.arcs.len()];
        for arc in &net.arcs {
            let mut v = 0i128;
            for &(row, coef) in &arc.contrib {
                v += coef as i128 * prices[row] as i128;
            }
            loads[arc.id.index()] = v;
        }
        for (j, row) in self.extra.iter().enumerate() {
            let price = prices[m + j] as i128;
            for &a in &row.arcs {
                loads[a.index()] += price;
            }
        }
        loads
    }

    /// Arcs with a nonzero (positive for extra rows) coefficient on `row`.
    pub fn covering_arcs(&self, net: &Network, row: usize) -> Vec<ArcId> {
        let m = self.sides.len();
        if row < m {
            net.arcs
                .iter()
                .filter(|a| a.contrib.iter().any(|&(k, c)| k == row && c != 0))
                .map(|a| a.id)
                .collect()
        } else {
            self.extra[row - m].arcs.clone()
        }
    }
}

/// An acyclic decision network with a single source and sink.
#[derive(Clone, Debug)]
pub struct Network {
    nodes: Vec<NodeId>,
    arcs: Vec<Arc>,
    source: NodeId,
    sink: NodeId,
    /// Topological order of the nodes; shorter than `nodes` iff cyclic.
    topo: Vec<NodeId>,
    dead: Vec<bool>,
    node_index: HashMap<NodeId, usize>,
    out_arcs: Vec<Vec<ArcId>>,
    in_arcs: Vec<Vec<ArcId>>,
}

/// One invariant violation reported by [`validate_network`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    CycleDetected,
    ArcEntersSource(ArcId),
    ArcLeavesSink(ArcId),
    DanglingArc(ArcId),
    SelfLoop(ArcId),
    BadRowClassification { row: usize, expected: RowKind },
    RowOutOfRange { arc: ArcId, row: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::CycleDetected => write!(f, "cycle detected"),
            Diagnostic::ArcEntersSource(a) => write!(f, "arc {a} enters source"),
            Diagnostic::ArcLeavesSink(a) => write!(f, "arc {a} leaves sink"),
            Diagnostic::DanglingArc(a) => write!(f, "arc {a} references unknown node"),
            Diagnostic::SelfLoop(a) => write!(f, "arc {a} is a self-loop"),
            Diagnostic::BadRowClassification { row, expected } => {
                write!(f, "row {row} misclassified, expected {expected:?}")
            }
            Diagnostic::RowOutOfRange { arc, row } => {
                write!(f, "arc {arc} touches row {row} outside the side system")
            }
        }
    }
}

#[derive(Error, Debug)]
pub enum FlowError {
    /// Residual flow got stuck before reaching the sink.
    #[error("flow conservation violated near node {0}")]
    ConservationViolated(NodeId),
}

impl Network {
    /// Assemble a network. `arcs` are given as `(tail, head, cost, contrib,
    /// group)`; ids are assigned in order. The topological order is computed
    /// with Kahn's algorithm, always preferring the smallest node id, so it
    /// is canonical for a given arc set.
    pub fn new(
        mut nodes: Vec<NodeId>,
        raw_arcs: Vec<(NodeId, NodeId, i64, Vec<(usize, i64)>, Option<u32>)>,
        source: NodeId,
        sink: NodeId,
    ) -> Network {
        nodes.sort_unstable();
        nodes.dedup();
        let node_index: HashMap<NodeId, usize> =
            nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let arcs: Vec<Arc> = raw_arcs
            .into_iter()
            .enumerate()
            .map(|(i, (tail, head, cost, mut contrib, group))| {
                contrib.sort_unstable_by_key(|&(row, _)| row);
                contrib.retain(|&(_, c)| c != 0);
                Arc { id: ArcId(i as u32), tail, head, cost, contrib, group }
            })
            .collect();

        let mut out_arcs = vec![Vec::new(); nodes.len()];
        let mut in_arcs = vec![Vec::new(); nodes.len()];
        for arc in &arcs {
            if let (Some(&t), Some(&h)) = (node_index.get(&arc.tail), node_index.get(&arc.head)) {
                out_arcs[t].push(arc.id);
                in_arcs[h].push(arc.id);
            }
        }

        // Kahn with a sorted ready set: smallest node id first.
        let mut indeg: Vec<usize> = in_arcs.iter().map(|v| v.len()).collect();
        let mut ready: std::collections::BTreeSet<NodeId> = nodes
            .iter()
            .enumerate()
            .filter(|&(i, _)| indeg[i] == 0)
            .map(|(_, &n)| n)
            .collect();
        let mut topo = Vec::with_capacity(nodes.len());
        while let Some(&n) = ready.iter().next() {
            ready.remove(&n);
            topo.push(n);
            let ni = node_index[&n];
            for &a in &out_arcs[ni] {
                let head = arcs[a.index()].head;
                if let Some(&hi) = node_index.get(&head) {
                    indeg[hi] -= 1;
                    if indeg[hi] == 0 {
                        ready.insert(head);
                    }
                }
            }
        }

        let dead = vec![false; arcs.len()];
        Network { nodes, arcs, source, sink, topo, dead, node_index, out_arcs, in_arcs }
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> &Arc {
        &self.arcs[id.index()]
    }

    pub fn source(&self) -> NodeId {
        self.source
    }

    pub fn sink(&self) -> NodeId {
        self.sink
    }

    pub fn topo(&self) -> &[NodeId] {
        &self.topo
    }

    pub fn is_acyclic(&self) -> bool {
        self.topo.len() == self.nodes.len()
    }

    pub fn node_index(&self, node: NodeId) -> usize {
        self.node_index[&node]
    }

    pub fn out_arcs(&self, node: NodeId) -> &[ArcId] {
        &self.out_arcs[self.node_index[&node]]
    }

    pub fn in_arcs(&self, node: NodeId) -> &[ArcId] {
        &self.in_arcs[self.node_index[&node]]
    }

    pub fn is_live(&self, id: ArcId) -> bool {
        !self.dead[id.index()]
    }

    /// Flag an arc dead. The id stays valid and is never reused.
    pub fn remove_arc(&mut self, id: ArcId) {
        self.dead[id.index()] = true;
    }

    pub fn remove_arcs<I: IntoIterator<Item = ArcId>>(&mut self, ids: I) {
        for id in ids {
            self.remove_arc(id);
        }
    }

    pub fn live_arc_count(&self) -> usize {
        self.dead.iter().filter(|&&d| !d).count()
    }

    pub fn live_arcs(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(|a| !self.dead[a.id.index()])
    }

    /// Line-oriented dump `arc <id> <tail> <head> <cost> {row:coef,...}` of
    /// the live arcs, used by golden tests.
    pub fn debug_dump(&self) -> String {
        let mut out = String::new();
        for arc in self.live_arcs() {
            let contrib = arc
                .contrib
                .iter()
                .map(|(row, coef)| format!("{row}:{coef}"))
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!(
                "arc {} {} {} {} {{{contrib}}}\n",
                arc.id, arc.tail, arc.head, arc.cost
            ));
        }
        out
    }
}

/// Check all Network/SideSystem invariants; an empty list means valid.
pub fn validate_network(net: &Network, sides: &SideSystem) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    if !net.is_acyclic() {
        out.push(Diagnostic::CycleDetected);
    }
    let mut has_pos = vec![false; sides.len()];
    let mut has_neg = vec![false; sides.len()];
    for arc in net.arcs() {
        if arc.tail == arc.head {
            out.push(Diagnostic::SelfLoop(arc.id));
        }
        if arc.head == net.source() {
            out.push(Diagnostic::ArcEntersSource(arc.id));
        }
        if arc.tail == net.sink() {
            out.push(Diagnostic::ArcLeavesSink(arc.id));
        }
        if !net.node_index.contains_key(&arc.tail) || !net.node_index.contains_key(&arc.head) {
            out.push(Diagnostic::DanglingArc(arc.id));
        }
        for &(row, coef) in &arc.contrib {
            if row >= sides.len() {
                out.push(Diagnostic::RowOutOfRange { arc: arc.id, row });
            } else if coef > 0 {
                has_pos[row] = true;
            } else if coef < 0 {
                has_neg[row] = true;
            }
        }
    }
    for row in 0..sides.len() {
        let expected = match (has_pos[row], has_neg[row]) {
            (_, false) => RowKind::Covering,
            (false, true) => RowKind::Packing,
            (true, true) => RowKind::Mixed,
        };
        if sides.kinds[row] != expected {
            out.push(Diagnostic::BadRowClassification { row, expected });
        }
    }
    out
}

/// A source-sink path with its aggregated cost and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub arcs: Vec<ArcId>,
    pub cost: i64,
    /// Sparse column over side rows, sorted by row index.
    pub column: Vec<(usize, i64)>,
}

impl Path {
    /// Build a path from a chained arc sequence, summing cost and column.
    ///
    /// Panics if the arcs do not chain from source to sink.
    pub fn from_arcs(net: &Network, arcs: Vec<ArcId>) -> Path {
        assert!(!arcs.is_empty(), "a path needs at least one arc");
        assert_eq!(net.arc(arcs[0]).tail, net.source(), "path must start at the source");
        assert_eq!(net.arc(*arcs.last().unwrap()).head, net.sink(), "path must end at the sink");
        for w in arcs.windows(2) {
            assert_eq!(net.arc(w[0]).head, net.arc(w[1]).tail, "arcs must chain head to tail");
        }
        let mut cost = 0i64;
        let mut column: HashMap<usize, i64> = HashMap::new();
        for &a in &arcs {
            let arc = net.arc(a);
            cost += arc.cost;
            for &(row, coef) in &arc.contrib {
                *column.entry(row).or_insert(0) += coef;
            }
        }
        let mut column: Vec<(usize, i64)> = column.into_iter().filter(|&(_, c)| c != 0).collect();
        column.sort_unstable_by_key(|&(row, _)| row);
        Path { arcs, cost, column }
    }

    /// Key identifying the path as a master column: cost plus column.
    /// Distinct paths with equal keys are interchangeable in the master.
    pub fn column_key(&self) -> (i64, Vec<(usize, i64)>) {
        (self.cost, self.column.clone())
    }

    pub fn coef(&self, row: usize) -> i64 {
        self.column
            .iter()
            .find(|&&(k, _)| k == row)
            .map(|&(_, c)| c)
            .unwrap_or(0)
    }
}

/// A (fractional) arc flow, indexed by arc id, with its total source-sink value.
#[derive(Clone, Debug, Default)]
pub struct ArcFlowSolution {
    /// One entry per arc id; dead arcs carry zero.
    pub flow: Vec<f64>,
    /// Total flow leaving the source.
    pub total: f64,
}

impl ArcFlowSolution {
    pub fn value(&self, id: ArcId) -> f64 {
        self.flow.get(id.index()).copied().unwrap_or(0.0)
    }

    /// Objective under the network's arc costs.
    pub fn objective(&self, net: &Network) -> f64 {
        net.arcs()
            .iter()
            .map(|a| a.cost as f64 * self.value(a.id))
            .sum()
    }
}

const FLOW_EPS: f64 = 1e-9;

/// Decompose a conservative arc flow into at most `|A|` weighted paths.
///
/// Greedy extraction: repeatedly trace a source-sink path over strictly
/// positive residual arcs (smallest arc id first) and subtract the
/// bottleneck. The weighted path incidences re-sum to the input flow.
pub fn decompose_flow(
    net: &Network,
    sol: &ArcFlowSolution,
) -> Result<Vec<(Path, f64)>, FlowError> {
    let mut residual = sol.flow.clone();
    residual.resize(net.arcs().len(), 0.0);
    let mut out = Vec::new();
    loop {
        let start = net
            .out_arcs(net.source())
            .iter()
            .copied()
            .filter(|&a| net.is_live(a) && residual[a.index()] > FLOW_EPS)
            .min();
        let Some(first) = start else { break };
        let mut arcs = vec![first];
        let mut node = net.arc(first).head;
        while node != net.sink() {
            let next = net
                .out_arcs(node)
                .iter()
                .copied()
                .filter(|&a| net.is_live(a) && residual[a.index()] > FLOW_EPS)
                .min();
            match next {
                Some(a) => {
                    arcs.push(a);
                    node = net.arc(a).head;
                }
                None => return Err(FlowError::ConservationViolated(node)),
            }
        }
        let bottleneck = arcs
            .iter()
            .map(|a| residual[a.index()])
            .fold(f64::INFINITY, f64::min);
        for a in &arcs {
            residual[a.index()] -= bottleneck;
        }
        out.push((Path::from_arcs(net, arcs), bottleneck));
    }
    Ok(out)
}

/// Reverse every arc, swap source and sink, and reverse the topological
/// order. Arc ids and dead flags are preserved; applying this twice gives
/// back the original network.
pub fn reverse_network(net: &Network) -> Network {
    let raw: Vec<_> = net
        .arcs()
        .iter()
        .map(|a| (a.head, a.tail, a.cost, a.contrib.clone(), a.group))
        .collect();
    let mut rev = Network::new(net.nodes().to_vec(), raw, net.sink(), net.source());
    rev.topo = net.topo.iter().rev().copied().collect();
    rev.dead = net.dead.clone();
    rev
}

/// Enumerate every live source-sink path in deterministic order (smallest
/// arc id first at each node). Returns `None` once more than `cap` paths
/// exist; intended for small networks and test oracles.
pub fn enumerate_paths(net: &Network, cap: usize) -> Option<Vec<Path>> {
    let mut out = Vec::new();
    let mut stack: Vec<ArcId> = Vec::new();
    fn visit(
        net: &Network,
        node: NodeId,
        stack: &mut Vec<ArcId>,
        out: &mut Vec<Path>,
        cap: usize,
    ) -> bool {
        if node == net.sink() {
            if out.len() >= cap {
                return false;
            }
            out.push(Path::from_arcs(net, stack.clone()));
            return true;
        }
        let mut next: Vec<ArcId> = net
            .out_arcs(node)
            .iter()
            .copied()
            .filter(|&a| net.is_live(a))
            .collect();
        next.sort_unstable();
        for a in next {
            stack.push(a);
            let ok = visit(net, net.arc(a).head, stack, out, cap);
            stack.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if visit(net, net.source(), &mut stack, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_arc_net() -> (Network, SideSystem) {
        let s = NodeId(0);
        let t = NodeId(1);
        let arcs = vec![(s, t, 1, vec![(0, 1)], None)];
        let net = Network::new(vec![s, t], arcs, s, t);
        let sides = SideSystem::classify(vec![1], net.arcs());
        (net, sides)
    }

    /// Two parallel two-arc chains source -> {a,b} -> sink.
    fn parallel_chains() -> Network {
        let s = NodeId(0);
        let a = NodeId(1);
        let b = NodeId(2);
        let t = NodeId(3);
        let arcs = vec![
            (s, a, 1, vec![(0, 1)], None),
            (a, t, 0, vec![], None),
            (s, b, 1, vec![(1, 1)], None),
            (b, t, 0, vec![], None),
        ];
        Network::new(vec![s, a, b, t], arcs, s, t)
    }

    #[test]
    fn minimal_valid_network_has_no_diagnostics() {
        let (net, sides) = single_arc_net();
        assert!(validate_network(&net, &sides).is_empty());
    }

    #[test]
    fn arc_leaving_sink_is_flagged() {
        let s = NodeId(0);
        let t = NodeId(1);
        let arcs = vec![(s, t, 1, vec![(0, 1)], None), (t, s, 0, vec![], None)];
        let net = Network::new(vec![s, t], arcs, s, t);
        let sides = SideSystem::classify(vec![1], net.arcs());
        let diags = validate_network(&net, &sides);
        assert!(diags.contains(&Diagnostic::ArcLeavesSink(ArcId(1))));
        assert!(diags.contains(&Diagnostic::ArcEntersSource(ArcId(1))));
    }

    #[test]
    fn two_cycle_is_detected() {
        let s = NodeId(0);
        let a = NodeId(1);
        let b = NodeId(2);
        let t = NodeId(3);
        let arcs = vec![
            (s, a, 0, vec![], None),
            (a, b, 0, vec![], None),
            (b, a, 0, vec![], None),
            (b, t, 0, vec![], None),
        ];
        let net = Network::new(vec![s, a, b, t], arcs, s, t);
        let sides = SideSystem::classify(vec![], net.arcs());
        assert!(validate_network(&net, &sides).contains(&Diagnostic::CycleDetected));
    }

    #[test]
    fn misclassified_row_is_flagged() {
        let (net, _) = single_arc_net();
        let sides = SideSystem { rhs: vec![1], kinds: vec![RowKind::Packing] };
        let diags = validate_network(&net, &sides);
        assert_eq!(
            diags,
            vec![Diagnostic::BadRowClassification { row: 0, expected: RowKind::Covering }]
        );
    }

    #[test]
    fn decompose_single_arc() {
        let (net, _) = single_arc_net();
        let sol = ArcFlowSolution { flow: vec![2.0], total: 2.0 };
        let parts = decompose_flow(&net, &sol).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0.arcs, vec![ArcId(0)]);
        assert_eq!(parts[0].1, 2.0);
    }

    #[test]
    fn decompose_zero_flow_is_empty() {
        let (net, _) = single_arc_net();
        let sol = ArcFlowSolution { flow: vec![0.0], total: 0.0 };
        assert!(decompose_flow(&net, &sol).unwrap().is_empty());
    }

    #[test]
    fn decompose_parallel_halves_resums() {
        let net = parallel_chains();
        let sol = ArcFlowSolution { flow: vec![0.5; 4], total: 1.0 };
        let parts = decompose_flow(&net, &sol).unwrap();
        assert_eq!(parts.len(), 2);
        let mut resum = vec![0.0; 4];
        let mut total = 0.0;
        for (path, mult) in &parts {
            assert_eq!(*mult, 0.5);
            total += mult;
            for a in &path.arcs {
                resum[a.index()] += mult;
            }
        }
        assert_eq!(resum, sol.flow);
        assert_eq!(total, sol.total);
    }

    #[test]
    fn decompose_detects_conservation_violation() {
        let net = parallel_chains();
        // Flow enters node 1 but never leaves it.
        let sol = ArcFlowSolution { flow: vec![1.0, 0.0, 0.0, 0.0], total: 1.0 };
        assert!(decompose_flow(&net, &sol).is_err());
    }

    #[test]
    fn reverse_chain_and_involution() {
        let s = NodeId(0);
        let a = NodeId(1);
        let t = NodeId(2);
        let arcs = vec![(s, a, 1, vec![(0, 1)], None), (a, t, 0, vec![], None)];
        let net = Network::new(vec![s, a, t], arcs, s, t);
        let rev = reverse_network(&net);
        assert_eq!(rev.source(), t);
        assert_eq!(rev.sink(), s);
        assert_eq!(rev.arc(ArcId(0)).tail, a);
        assert_eq!(rev.arc(ArcId(0)).head, s);
        assert_eq!(rev.topo(), [t, a, s]);

        let back = reverse_network(&rev);
        assert_eq!(back.source(), net.source());
        assert_eq!(back.sink(), net.sink());
        assert_eq!(back.topo(), net.topo());
        for (x, y) in back.arcs().iter().zip(net.arcs()) {
            assert_eq!((x.tail, x.head, x.cost), (y.tail, y.head, y.cost));
            assert_eq!(x.contrib, y.contrib);
        }
    }

    #[test]
    fn path_sums_match_enumeration() {
        let net = parallel_chains();
        let paths = enumerate_paths(&net, 100).unwrap();
        assert_eq!(paths.len(), 2);
        for path in paths {
            let cost: i64 = path.arcs.iter().map(|&a| net.arc(a).cost).sum();
            assert_eq!(path.cost, cost);
            let mut col: HashMap<usize, i64> = HashMap::new();
            for &a in &path.arcs {
                for &(row, coef) in &net.arc(a).contrib {
                    *col.entry(row).or_insert(0) += coef;
                }
            }
            for &(row, coef) in &path.column {
                assert_eq!(col.remove(&row), Some(coef));
            }
            assert!(col.values().all(|&c| c == 0));
        }
    }

    #[test]
    fn enumerate_respects_cap() {
        let net = parallel_chains();
        assert!(enumerate_paths(&net, 1).is_none());
    }

    #[test]
    fn debug_dump_format() {
        let (net, _) = single_arc_net();
        assert_eq!(net.debug_dump(), "arc 0 0 1 1 {0:1}\n");
    }
}
