//! Self-contained LP engine for the restricted master problems.
//!
//! Bounded-variable primal revised simplex over a dense basis inverse,
//! minimizing over columns with individual bounds subject to `<=`/`=`/`>=`
//! rows. Columns and rows can be added incrementally; the basis of the last
//! solve is reused when it is still primal feasible, which makes the
//! add-column/re-solve loop of column generation cheap. Feasibility is
//! restored with a phase-one over internal artificial columns, and Bland's
//! rule kicks in after a run of degenerate pivots, so cycling cannot occur.
//!
//! The masters solved here have at most a few hundred rows, so a dense
//! factorization with periodic refactorization is both simple and fast
//! enough.

/// Tolerance on dual feasibility (reduced costs).
pub const LP_DUAL_TOL: f64 = 1e-9;
/// Tolerance on primal bound violations.
pub const LP_PRIMAL_TOL: f64 = 1e-7;
/// Smallest pivot magnitude accepted in the ratio test.
const PIVOT_TOL: f64 = 1e-8;
/// Step sizes below this count as degenerate.
const DEGEN_TOL: f64 = 1e-10;
/// Consecutive degenerate pivots before switching to Bland's rule.
const BLAND_TRIGGER: u64 = 1000;
/// Pivots between refactorizations of the basis inverse.
const REFACTOR_EVERY: u64 = 100;

/// Row sense; the right-hand side is a plain constant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// Pivot budget exhausted; signals numerical trouble. Callers should
    /// invalidate the basis and retry from scratch.
    IterLimit,
}

/// Solution of one [`LpModel::solve`] call.
#[derive(Clone, Debug)]
pub struct LpResult {
    pub status: LpStatus,
    /// Value per structural column.
    pub primal: Vec<f64>,
    /// Dual value per row (`>=` rows get nonnegative duals at a minimum).
    pub duals: Vec<f64>,
    /// Reduced cost per structural column.
    pub reduced: Vec<f64>,
    pub objective: f64,
}

impl LpResult {
    fn failed(status: LpStatus, ncols: usize, nrows: usize) -> LpResult {
        LpResult {
            status,
            primal: vec![0.0; ncols],
            duals: vec![0.0; nrows],
            reduced: vec![0.0; ncols],
            objective: f64::NAN,
        }
    }
}

#[derive(Clone, Debug)]
struct Col {
    obj: f64,
    /// Sparse `(row, coefficient)` entries, sorted by row.
    entries: Vec<(usize, f64)>,
    lo: f64,
    up: f64,
}

#[derive(Clone, Copy, Debug)]
struct Row {
    sense: Sense,
    rhs: f64,
}

/// Stable reference to a basis member across model growth.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VarRef {
    Struct(usize),
    Logical(usize),
    /// Artificial kept basic at level zero on a redundant row.
    Art { row: usize, positive: bool },
}

#[derive(Clone, Debug)]
struct SavedBasis {
    basic: Vec<VarRef>,
    struct_at_upper: Vec<bool>,
    logical_at_upper: Vec<bool>,
}

/// Incremental LP. Column and row ids are insertion indices and never move.
#[derive(Clone, Debug, Default)]
pub struct LpModel {
    cols: Vec<Col>,
    rows: Vec<Row>,
    basis: Option<SavedBasis>,
    pivot_budget: u64,
    dup_index: std::collections::HashMap<Vec<(usize, u64)>, usize>,
    duplicate_of: Vec<Option<usize>>,
}

impl LpModel {
    pub fn new() -> LpModel {
        LpModel { pivot_budget: 10_000_000, ..Default::default() }
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn set_pivot_budget(&mut self, budget: u64) {
        self.pivot_budget = budget;
    }

    /// Add a nonnegative column. Returns its id.
    pub fn add_column(&mut self, obj: f64, entries: &[(usize, f64)]) -> usize {
        self.add_column_bounded(obj, entries, 0.0, f64::INFINITY)
    }

    /// Add a column with explicit bounds (e.g. a forced arc with lower
    /// bound one). Duplicate columns are accepted and recorded; see
    /// [`LpModel::duplicate_of`].
    pub fn add_column_bounded(
        &mut self,
        obj: f64,
        entries: &[(usize, f64)],
        lo: f64,
        up: f64,
    ) -> usize {
        let mut entries: Vec<(usize, f64)> =
            entries.iter().copied().filter(|&(_, v)| v != 0.0).collect();
        entries.sort_unstable_by_key(|&(r, _)| r);
        for &(r, v) in &entries {
            assert!(r < self.rows.len(), "row {r} out of range");
            assert!(v.is_finite());
        }
        assert!(obj.is_finite());
        let id = self.cols.len();
        let mut key: Vec<(usize, u64)> = vec![(usize::MAX, obj.to_bits())];
        key.extend(entries.iter().map(|&(r, v)| (r, v.to_bits())));
        let dup = self.dup_index.get(&key).copied();
        self.dup_index.entry(key).or_insert(id);
        self.duplicate_of.push(dup);
        self.cols.push(Col { obj, entries, lo, up });
        id
    }

    /// Id of an earlier column with identical objective and coefficients.
    pub fn duplicate_of(&self, col: usize) -> Option<usize> {
        self.duplicate_of[col]
    }

    /// Add a row with coefficients over existing columns. Returns its id.
    /// The stored basis stays valid: the new row's logical enters basic.
    pub fn add_row(&mut self, sense: Sense, rhs: f64, entries: &[(usize, f64)]) -> usize {
        assert!(rhs.is_finite());
        let id = self.rows.len();
        self.rows.push(Row { sense, rhs });
        for &(col, v) in entries {
            assert!(col < self.cols.len(), "column {col} out of range");
            if v != 0.0 {
                self.cols[col].entries.push((id, v));
            }
        }
        if let Some(basis) = &mut self.basis {
            basis.basic.push(VarRef::Logical(id));
            basis.logical_at_upper.push(false);
        }
        id
    }

    pub fn col_bounds(&self, col: usize) -> (f64, f64) {
        (self.cols[col].lo, self.cols[col].up)
    }

    pub fn set_col_bounds(&mut self, col: usize, lo: f64, up: f64) {
        assert!(lo <= up);
        self.cols[col].lo = lo;
        self.cols[col].up = up;
    }

    pub fn obj_coef(&self, col: usize) -> f64 {
        self.cols[col].obj
    }

    /// Drop the stored basis; the next solve starts from scratch.
    pub fn invalidate_basis(&mut self) {
        self.basis = None;
    }

    /// Solve the model, reusing the stored basis when it is still primal
    /// feasible. On success the final basis is stored for the next call.
    pub fn solve(&mut self) -> LpResult {
        assert!(!self.cols.is_empty() || !self.rows.is_empty(), "empty model");
        let mut ws = Workspace::build(self);
        let warm = self.basis.as_ref().and_then(|b| ws.try_warm_start(self, b));
        let mut outcome = match warm {
            Some(()) => ws.run_phase2(self),
            None => ws.run_from_scratch(self),
        };
        if outcome == SimplexOutcome::NumericalTrouble {
            // One retry from a fresh basis before giving up.
            ws = Workspace::build(self);
            outcome = ws.run_from_scratch(self);
        }
        match outcome {
            SimplexOutcome::Optimal => {
                self.basis = Some(ws.save_basis(self));
                ws.extract(self)
            }
            SimplexOutcome::Infeasible => {
                self.basis = None;
                LpResult::failed(LpStatus::Infeasible, self.cols.len(), self.rows.len())
            }
            SimplexOutcome::Unbounded => {
                self.basis = None;
                LpResult::failed(LpStatus::Unbounded, self.cols.len(), self.rows.len())
            }
            SimplexOutcome::IterLimit | SimplexOutcome::NumericalTrouble => {
                self.basis = None;
                LpResult::failed(LpStatus::IterLimit, self.cols.len(), self.rows.len())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum SimplexOutcome {
    Optimal,
    Infeasible,
    Unbounded,
    IterLimit,
    NumericalTrouble,
}

/// Solve-local dense state. Variable indexing: structurals first, then one
/// logical per row, then any artificials appended during phase one.
struct Workspace {
    n_struct: usize,
    n_rows: usize,
    /// lower/upper bound per variable.
    lo: Vec<f64>,
    up: Vec<f64>,
    /// sparse column per variable.
    entries: Vec<Vec<(usize, f64)>>,
    /// phase-two objective per variable.
    cost: Vec<f64>,
    /// artificial bookkeeping: (variable index, row, positive sign).
    arts: Vec<(usize, usize, bool)>,
    basic: Vec<usize>,
    basic_slot: Vec<Option<usize>>,
    at_upper: Vec<bool>,
    x_basic: Vec<f64>,
    binv: Vec<f64>,
    pivots: u64,
}

impl Workspace {
    fn build(model: &LpModel) -> Workspace {
        let n = model.cols.len();
        let m = model.rows.len();
        let mut lo = Vec::with_capacity(n + m);
        let mut up = Vec::with_capacity(n + m);
        let mut entries = Vec::with_capacity(n + m);
        let mut cost = Vec::with_capacity(n + m);
        for col in &model.cols {
            lo.push(col.lo);
            up.push(col.up);
            entries.push(col.entries.clone());
            cost.push(col.obj);
        }
        for (r, row) in model.rows.iter().enumerate() {
            let (l, u) = match row.sense {
                Sense::Le => (0.0, f64::INFINITY),
                Sense::Ge => (f64::NEG_INFINITY, 0.0),
                Sense::Eq => (0.0, 0.0),
            };
            lo.push(l);
            up.push(u);
            entries.push(vec![(r, 1.0)]);
            cost.push(0.0);
        }
        Workspace {
            n_struct: n,
            n_rows: m,
            lo,
            up,
            entries,
            cost,
            arts: Vec::new(),
            basic: Vec::new(),
            basic_slot: vec![None; n + m],
            at_upper: vec![false; n + m],
            x_basic: vec![0.0; m],
            binv: Vec::new(),
            pivots: 0,
        }
    }

    fn logical(&self, row: usize) -> usize {
        self.n_struct + row
    }

    fn add_artificial(&mut self, row: usize, positive: bool) -> usize {
        let v = self.lo.len();
        self.lo.push(0.0);
        self.up.push(f64::INFINITY);
        self.entries.push(vec![(row, if positive { 1.0 } else { -1.0 })]);
        self.cost.push(0.0);
        self.basic_slot.push(None);
        self.at_upper.push(false);
        self.arts.push((v, row, positive));
        v
    }

    /// Nonbasic resting value of a variable.
    fn nb_value(&self, v: usize) -> f64 {
        if self.at_upper[v] {
            self.up[v]
        } else {
            self.lo[v]
        }
    }

    /// Default nonbasic state: the finite bound, preferring the lower one.
    fn default_nb(&mut self, v: usize) {
        self.at_upper[v] = !self.lo[v].is_finite() && self.up[v].is_finite();
    }

    fn set_basis(&mut self, basic: Vec<usize>) {
        for slot in self.basic_slot.iter_mut() {
            *slot = None;
        }
        for (k, &v) in basic.iter().enumerate() {
            self.basic_slot[v] = Some(k);
        }
        self.basic = basic;
    }

    /// Rebuild the dense basis inverse by Gauss-Jordan with partial
    /// pivoting; fails on a singular basis.
    fn refactor(&mut self) -> Result<(), ()> {
        let m = self.n_rows;
        let mut mat = vec![0.0; m * m];
        for (k, &v) in self.basic.iter().enumerate() {
            for &(r, coef) in &self.entries[v] {
                mat[r * m + k] = coef;
            }
        }
        let mut inv = vec![0.0; m * m];
        for i in 0..m {
            inv[i * m + i] = 1.0;
        }
        for col in 0..m {
            let mut piv = col;
            let mut best = mat[col * m + col].abs();
            for r in col + 1..m {
                let v = mat[r * m + col].abs();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best < 1e-12 {
                return Err(());
            }
            if piv != col {
                for j in 0..m {
                    mat.swap(col * m + j, piv * m + j);
                    inv.swap(col * m + j, piv * m + j);
                }
            }
            let d = mat[col * m + col];
            for j in 0..m {
                mat[col * m + j] /= d;
                inv[col * m + j] /= d;
            }
            for r in 0..m {
                if r != col {
                    let f = mat[r * m + col];
                    if f != 0.0 {
                        for j in 0..m {
                            mat[r * m + j] -= f * mat[col * m + j];
                            inv[r * m + j] -= f * inv[col * m + j];
                        }
                    }
                }
            }
        }
        // binv rows follow basis slots: binv[k][..] = row k of B^-1 in the
        // permuted system where slot k solves for basic[k].
        let mut binv = vec![0.0; m * m];
        for k in 0..m {
            for j in 0..m {
                binv[k * m + j] = inv[k * m + j];
            }
        }
        self.binv = binv;
        Ok(())
    }

    /// Recompute basic values from the current nonbasic resting points.
    fn recompute_x(&mut self, model: &LpModel) {
        let m = self.n_rows;
        let mut rhs: Vec<f64> = model.rows.iter().map(|r| r.rhs).collect();
        for v in 0..self.lo.len() {
            if self.basic_slot[v].is_none() {
                let x = self.nb_value(v);
                if x != 0.0 {
                    for &(r, coef) in &self.entries[v] {
                        rhs[r] -= coef * x;
                    }
                }
            }
        }
        for k in 0..m {
            let mut s = 0.0;
            for j in 0..m {
                s += self.binv[k * m + j] * rhs[j];
            }
            self.x_basic[k] = s;
        }
    }

    fn primal_infeasibility(&self) -> f64 {
        let mut worst = 0.0f64;
        for (k, &v) in self.basic.iter().enumerate() {
            let x = self.x_basic[k];
            worst = worst.max(self.lo[v] - x).max(x - self.up[v]);
        }
        worst
    }

    /// Install a saved basis if it is compatible and still primal feasible.
    fn try_warm_start(&mut self, model: &LpModel, saved: &SavedBasis) -> Option<()> {
        if saved.basic.len() != self.n_rows {
            return None;
        }
        let mut basic = Vec::with_capacity(self.n_rows);
        for &vr in &saved.basic {
            let v = match vr {
                VarRef::Struct(i) if i < self.n_struct => i,
                VarRef::Logical(r) if r < self.n_rows => self.logical(r),
                VarRef::Art { row, positive } if row < self.n_rows => {
                    let v = self.add_artificial(row, positive);
                    // Stays pinned at zero; it only pads a redundant row.
                    self.up[v] = 0.0;
                    v
                }
                _ => return None,
            };
            basic.push(v);
        }
        for (i, &au) in saved.struct_at_upper.iter().enumerate() {
            if i < self.n_struct {
                self.at_upper[i] = au;
            }
        }
        for (r, &au) in saved.logical_at_upper.iter().enumerate() {
            if r < self.n_rows {
                let v = self.logical(r);
                self.at_upper[v] = au;
            }
        }
        for v in 0..self.lo.len() {
            if self.at_upper[v] && !self.up[v].is_finite() {
                self.at_upper[v] = false;
            }
            if !self.at_upper[v] && !self.lo[v].is_finite() {
                self.at_upper[v] = true;
            }
        }
        self.set_basis(basic);
        if self.refactor().is_err() {
            return None;
        }
        self.recompute_x(model);
        if self.primal_infeasibility() <= LP_PRIMAL_TOL {
            Some(())
        } else {
            None
        }
    }

    /// Fresh start: logicals basic where they can carry the residual,
    /// artificials elsewhere, then phase one if any artificials were needed.
    fn run_from_scratch(&mut self, model: &LpModel) -> SimplexOutcome {
        self.arts.clear();
        for v in 0..self.n_struct {
            self.at_upper[v] = false;
            self.default_nb(v);
            self.basic_slot[v] = None;
        }
        let mut residual: Vec<f64> = model.rows.iter().map(|r| r.rhs).collect();
        for v in 0..self.n_struct {
            let x = self.nb_value(v);
            if x != 0.0 {
                for &(r, coef) in &self.entries[v] {
                    residual[r] -= coef * x;
                }
            }
        }
        let mut basic = Vec::with_capacity(self.n_rows);
        let mut need_phase1 = false;
        for r in 0..self.n_rows {
            let res = residual[r];
            let logical = self.logical(r);
            let ok = match model.rows[r].sense {
                Sense::Le => res >= -LP_PRIMAL_TOL,
                Sense::Ge => res <= LP_PRIMAL_TOL,
                Sense::Eq => res.abs() <= LP_PRIMAL_TOL,
            };
            if ok {
                basic.push(logical);
            } else {
                self.default_nb(logical);
                let art = self.add_artificial(r, res > 0.0);
                basic.push(art);
                need_phase1 = true;
            }
        }
        self.set_basis(basic);
        if self.refactor().is_err() {
            return SimplexOutcome::NumericalTrouble;
        }
        self.recompute_x(model);

        if need_phase1 {
            let mut c1 = vec![0.0; self.lo.len()];
            for &(v, _, _) in &self.arts {
                c1[v] = 1.0;
            }
            match self.simplex(model, &c1) {
                SimplexOutcome::Optimal => {}
                SimplexOutcome::Unbounded => return SimplexOutcome::NumericalTrouble,
                other => return other,
            }
            let infeas: f64 = self
                .arts
                .iter()
                .map(|&(v, _, _)| self.basic_slot[v].map_or(0.0, |k| self.x_basic[k]))
                .sum();
            if infeas > 1e-7 {
                return SimplexOutcome::Infeasible;
            }
            for &(v, _, _) in &self.arts {
                self.up[v] = 0.0; // pin at zero for phase two
            }
        }
        self.run_phase2(model)
    }

    fn run_phase2(&mut self, model: &LpModel) -> SimplexOutcome {
        let cost = self.cost.clone();
        let out = self.simplex(model, &cost);
        if out == SimplexOutcome::Optimal {
            // Fresh basic values for clean extraction.
            if self.refactor().is_err() {
                return SimplexOutcome::NumericalTrouble;
            }
            self.recompute_x(model);
            if self.primal_infeasibility() > LP_PRIMAL_TOL {
                return SimplexOutcome::NumericalTrouble;
            }
        }
        out
    }

    /// Bounded-variable primal simplex minimizing `c`.
    fn simplex(&mut self, model: &LpModel, c: &[f64]) -> SimplexOutcome {
        let m = self.n_rows;
        let mut degen_streak = 0u64;
        let mut bland = false;
        let mut budget = model.pivot_budget;
        loop {
            if budget == 0 {
                return SimplexOutcome::IterLimit;
            }
            budget -= 1;

            // Duals for the current basis: y = c_B' B^-1.
            let mut y = vec![0.0; m];
            for (k, &v) in self.basic.iter().enumerate() {
                let cb = c[v];
                if cb != 0.0 {
                    for j in 0..m {
                        y[j] += cb * self.binv[k * m + j];
                    }
                }
            }

            // Pricing.
            let mut enter: Option<(usize, f64, f64)> = None; // (var, violation, dir)
            for v in 0..self.lo.len() {
                if self.basic_slot[v].is_some() || self.lo[v] == self.up[v] {
                    continue;
                }
                let mut d = c[v];
                for &(r, coef) in &self.entries[v] {
                    d -= y[r] * coef;
                }
                let (viol, dir) = if self.at_upper[v] {
                    (d, -1.0)
                } else {
                    (-d, 1.0)
                };
                if viol > LP_DUAL_TOL {
                    if bland {
                        enter = Some((v, viol, dir));
                        break;
                    }
                    match enter {
                        Some((_, best, _)) if best >= viol => {}
                        _ => enter = Some((v, viol, dir)),
                    }
                }
            }
            let Some((j, _, dir)) = enter else {
                return SimplexOutcome::Optimal;
            };

            // FTRAN: w = B^-1 A_j.
            let mut w = vec![0.0; m];
            for &(r, coef) in &self.entries[j] {
                if coef != 0.0 {
                    for i in 0..m {
                        w[i] += self.binv[i * m + r] * coef;
                    }
                }
            }

            // Ratio test: entering moves by t >= 0 in direction `dir`.
            let own_range = self.up[j] - self.lo[j];
            let mut t_limit = if own_range.is_finite() { own_range } else { f64::INFINITY };
            let mut leave: Option<(usize, f64, bool)> = None; // (slot, |pivot|, to_upper)
            for (k, &v) in self.basic.iter().enumerate() {
                let delta = dir * w[k];
                let (t, to_upper) = if delta > PIVOT_TOL && self.lo[v].is_finite() {
                    ((self.x_basic[k] - self.lo[v]) / delta, false)
                } else if delta < -PIVOT_TOL && self.up[v].is_finite() {
                    ((self.up[v] - self.x_basic[k]) / (-delta), true)
                } else {
                    continue;
                };
                let strictly_better = t < t_limit - 1e-12;
                let tied = !strictly_better && t < t_limit + 1e-12;
                if strictly_better
                    || (tied && better_leave(bland, &leave, delta.abs(), v, &self.basic))
                {
                    leave = Some((k, delta.abs(), to_upper));
                    t_limit = t.max(0.0).min(t_limit);
                }
            }

            if !t_limit.is_finite() {
                return SimplexOutcome::Unbounded;
            }
            let t = t_limit.max(0.0);
            if t <= DEGEN_TOL {
                degen_streak += 1;
                if degen_streak >= BLAND_TRIGGER {
                    bland = true;
                }
            } else {
                degen_streak = 0;
            }

            match leave {
                None => {
                    // Bound flip: entering runs to its other bound.
                    for k in 0..m {
                        self.x_basic[k] -= dir * w[k] * t;
                    }
                    self.at_upper[j] = !self.at_upper[j];
                }
                Some((slot, _, to_upper)) => {
                    let leaving = self.basic[slot];
                    for k in 0..m {
                        if k != slot {
                            self.x_basic[k] -= dir * w[k] * t;
                        }
                    }
                    self.x_basic[slot] = self.nb_value(j) + dir * t;
                    self.basic_slot[leaving] = None;
                    self.at_upper[leaving] = to_upper;
                    self.basic[slot] = j;
                    self.basic_slot[j] = Some(slot);

                    // Eta update of the dense inverse.
                    let piv = w[slot];
                    let inv_piv = 1.0 / piv;
                    for col in 0..m {
                        self.binv[slot * m + col] *= inv_piv;
                    }
                    for i in 0..m {
                        if i != slot && w[i] != 0.0 {
                            let f = w[i];
                            for col in 0..m {
                                self.binv[i * m + col] -= f * self.binv[slot * m + col];
                            }
                        }
                    }

                    self.pivots += 1;
                    if self.pivots % REFACTOR_EVERY == 0 {
                        if self.refactor().is_err() {
                            return SimplexOutcome::NumericalTrouble;
                        }
                        self.recompute_x(model);
                    }
                }
            }
        }
    }

    fn save_basis(&self, _model: &LpModel) -> SavedBasis {
        let basic = self
            .basic
            .iter()
            .map(|&v| {
                if v < self.n_struct {
                    VarRef::Struct(v)
                } else if v < self.n_struct + self.n_rows {
                    VarRef::Logical(v - self.n_struct)
                } else {
                    let &(_, row, positive) =
                        self.arts.iter().find(|&&(av, _, _)| av == v).unwrap();
                    VarRef::Art { row, positive }
                }
            })
            .collect();
        SavedBasis {
            basic,
            struct_at_upper: self.at_upper[..self.n_struct].to_vec(),
            logical_at_upper: (0..self.n_rows)
                .map(|r| self.at_upper[self.logical(r)])
                .collect(),
        }
    }

    fn extract(&self, model: &LpModel) -> LpResult {
        let m = self.n_rows;
        let mut y = vec![0.0; m];
        for (k, &v) in self.basic.iter().enumerate() {
            let cb = self.cost[v];
            if cb != 0.0 {
                for j in 0..m {
                    y[j] += cb * self.binv[k * m + j];
                }
            }
        }
        let mut primal = vec![0.0; self.n_struct];
        for v in 0..self.n_struct {
            primal[v] = match self.basic_slot[v] {
                Some(k) => self.x_basic[k],
                None => self.nb_value(v),
            };
        }
        let mut reduced = vec![0.0; self.n_struct];
        for v in 0..self.n_struct {
            let mut d = self.cost[v];
            for &(r, coef) in &self.entries[v] {
                d -= y[r] * coef;
            }
            reduced[v] = d;
        }
        let objective = primal
            .iter()
            .zip(&model.cols)
            .map(|(&x, col)| x * col.obj)
            .sum();
        LpResult { status: LpStatus::Optimal, primal, duals: y, reduced, objective }
    }
}

/// Leaving-variable preference among ties: Bland picks the smallest
/// variable index; otherwise the largest pivot magnitude wins, ties by
/// smallest variable index.
fn better_leave(
    bland: bool,
    current: &Option<(usize, f64, bool)>,
    pivot_abs: f64,
    var: usize,
    basic: &[usize],
) -> bool {
    match current {
        None => true,
        Some((cur_slot, cur_piv, _)) => {
            if bland {
                var < basic[*cur_slot]
            } else if pivot_abs > *cur_piv + 1e-12 {
                true
            } else if (pivot_abs - *cur_piv).abs() <= 1e-12 {
                var < basic[*cur_slot]
            } else {
                false
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn min_x_subject_to_x_ge_1() {
        let mut lp = LpModel::new();
        let x = lp.add_column(1.0, &[]);
        let _r = lp.add_row(Sense::Ge, 1.0, &[(x, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_close(res.objective, 1.0, 1e-9);
        assert_close(res.duals[0], 1.0, 1e-9);
        assert_close(res.primal[x], 1.0, 1e-9);
    }

    #[test]
    fn two_variable_hand_solvable() {
        // min x1 + x2 s.t. x1 + x2 >= 2, x1 >= 1.
        let mut lp = LpModel::new();
        let x1 = lp.add_column(1.0, &[]);
        let x2 = lp.add_column(1.0, &[]);
        lp.add_row(Sense::Ge, 2.0, &[(x1, 1.0), (x2, 1.0)]);
        lp.add_row(Sense::Ge, 1.0, &[(x1, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_close(res.objective, 2.0, 1e-9);
    }

    #[test]
    fn full_pattern_master() {
        // Roll width 6, items (4,1) and (3,2); all three demand-bounded
        // patterns priced at one roll each.
        let mut lp = LpModel::new();
        let r4 = lp.add_row(Sense::Ge, 1.0, &[]);
        let r3 = lp.add_row(Sense::Ge, 2.0, &[]);
        let _p4 = lp.add_column(1.0, &[(r4, 1.0)]);
        let _p33 = lp.add_column(1.0, &[(r3, 2.0)]);
        let _p3 = lp.add_column(1.0, &[(r3, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_close(res.objective, 2.0, 1e-9);
    }

    #[test]
    fn adding_column_cannot_worsen_minimum() {
        let mut lp = LpModel::new();
        let r = lp.add_row(Sense::Ge, 3.0, &[]);
        let _x = lp.add_column(2.0, &[(r, 1.0)]);
        let before = lp.solve();
        assert_eq!(before.status, LpStatus::Optimal);
        let _y = lp.add_column(1.0, &[(r, 1.0)]);
        let after = lp.solve();
        assert_eq!(after.status, LpStatus::Optimal);
        assert!(after.objective <= before.objective + 1e-9);
        assert_close(after.objective, 3.0, 1e-9);
    }

    #[test]
    fn new_violated_row_gets_positive_dual() {
        // min x1 + x2 s.t. x1 + x2 >= 1; then add x2 >= 1 which the
        // current point (1,0) violates.
        let mut lp = LpModel::new();
        let x1 = lp.add_column(1.0, &[]);
        let x2 = lp.add_column(2.0, &[]);
        lp.add_row(Sense::Ge, 1.0, &[(x1, 1.0), (x2, 1.0)]);
        let first = lp.solve();
        assert_close(first.objective, 1.0, 1e-9);
        assert_close(first.primal[x1], 1.0, 1e-9);
        let r2 = lp.add_row(Sense::Ge, 1.0, &[(x2, 1.0)]);
        let second = lp.solve();
        assert_eq!(second.status, LpStatus::Optimal);
        assert_close(second.objective, 2.0, 1e-9);
        assert_close(second.primal[x2], 1.0, 1e-9);
        assert!(second.duals[r2] > 0.0);
    }

    #[test]
    fn duplicate_column_is_recorded() {
        let mut lp = LpModel::new();
        let r = lp.add_row(Sense::Ge, 1.0, &[]);
        let a = lp.add_column(1.0, &[(r, 1.0)]);
        let b = lp.add_column(1.0, &[(r, 1.0)]);
        let c = lp.add_column(2.0, &[(r, 1.0)]);
        assert_eq!(lp.duplicate_of(a), None);
        assert_eq!(lp.duplicate_of(b), Some(a));
        assert_eq!(lp.duplicate_of(c), None);
    }

    #[test]
    fn equality_row_and_infeasibility() {
        let mut lp = LpModel::new();
        let x = lp.add_column(1.0, &[]);
        lp.add_row(Sense::Eq, 2.0, &[(x, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_close(res.objective, 2.0, 1e-9);

        lp.add_row(Sense::Le, 1.0, &[(x, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_is_detected() {
        let mut lp = LpModel::new();
        let x = lp.add_column(-1.0, &[]);
        lp.add_row(Sense::Ge, 0.0, &[(x, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Unbounded);
    }

    #[test]
    fn forced_lower_bound_column() {
        let mut lp = LpModel::new();
        let r = lp.add_row(Sense::Ge, 1.0, &[]);
        let x = lp.add_column_bounded(1.0, &[(r, 1.0)], 1.0, f64::INFINITY);
        let y = lp.add_column(0.5, &[(r, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_close(res.primal[x], 1.0, 1e-9);
        assert_close(res.primal[y], 0.0, 1e-9);
        assert_close(res.objective, 1.0, 1e-9);
    }

    #[test]
    fn upper_bounds_and_bound_changes() {
        // min -x - 2y s.t. x + y <= 3, x <= 2, y <= 2.
        let mut lp = LpModel::new();
        let x = lp.add_column_bounded(-1.0, &[], 0.0, 2.0);
        let y = lp.add_column_bounded(-2.0, &[], 0.0, 2.0);
        lp.add_row(Sense::Le, 3.0, &[(x, 1.0), (y, 1.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_close(res.objective, -5.0, 1e-9);

        lp.set_col_bounds(y, 0.0, 1.0);
        let res = lp.solve();
        assert_close(res.objective, -4.0, 1e-9);

        lp.set_col_bounds(y, 2.0, 2.0);
        let res = lp.solve();
        assert_close(res.objective, -5.0, 1e-9);
        assert_close(res.primal[x], 1.0, 1e-9);
    }

    #[test]
    fn basic_columns_have_zero_reduced_cost() {
        let mut lp = LpModel::new();
        let r1 = lp.add_row(Sense::Ge, 2.0, &[]);
        let r2 = lp.add_row(Sense::Ge, 1.0, &[]);
        let a = lp.add_column(1.0, &[(r1, 1.0), (r2, 1.0)]);
        let b = lp.add_column(1.0, &[(r1, 2.0)]);
        let res = lp.solve();
        assert_eq!(res.status, LpStatus::Optimal);
        for col in [a, b] {
            if res.primal[col] > 1e-9 {
                assert!(res.reduced[col].abs() <= 1e-9);
            }
        }
    }

    /// Randomized covering LPs: incremental column addition must agree with
    /// a from-scratch solve of the same model.
    #[test]
    fn incremental_matches_scratch_on_random_models() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let m = rng.gen_range(2..=12);
            let n = rng.gen_range(3..=40);
            let rhs: Vec<f64> = (0..m).map(|_| rng.gen_range(1..=5) as f64).collect();
            let cols: Vec<(f64, Vec<(usize, f64)>)> = (0..n)
                .map(|_| {
                    let obj = rng.gen_range(1..=9) as f64;
                    let nnz = rng.gen_range(1..=m.min(4));
                    let mut rows: Vec<usize> = (0..m).collect();
                    for i in (1..rows.len()).rev() {
                        rows.swap(i, rng.gen_range(0..=i));
                    }
                    let entries = rows[..nnz]
                        .iter()
                        .map(|&r| (r, rng.gen_range(1..=3) as f64))
                        .collect();
                    (obj, entries)
                })
                .collect();

            let mut inc = LpModel::new();
            for (r, &b) in rhs.iter().enumerate() {
                let row = inc.add_row(Sense::Ge, b, &[]);
                assert_eq!(row, r);
            }
            // Artificial-ish expensive column keeps every prefix feasible.
            let all: Vec<(usize, f64)> = (0..m).map(|r| (r, 1.0)).collect();
            inc.add_column(100.0, &all);
            let mut last = inc.solve();
            for (obj, entries) in &cols {
                inc.add_column(*obj, entries);
                last = inc.solve();
                assert_eq!(last.status, LpStatus::Optimal);
            }

            let mut scratch = LpModel::new();
            for &b in &rhs {
                scratch.add_row(Sense::Ge, b, &[]);
            }
            scratch.add_column(100.0, &all);
            for (obj, entries) in &cols {
                scratch.add_column(*obj, entries);
            }
            let fresh = scratch.solve();
            assert_eq!(fresh.status, LpStatus::Optimal);
            assert!(
                (fresh.objective - last.objective).abs() <= 1e-7 * (1.0 + fresh.objective.abs()),
                "incremental {} vs scratch {}",
                last.objective,
                fresh.objective
            );

            // Strong duality: dual objective matches primal objective.
            let dual_obj: f64 = rhs.iter().zip(&fresh.duals).map(|(b, y)| b * y).sum();
            assert!(
                (dual_obj - fresh.objective).abs() <= 1e-6 * (1.0 + fresh.objective.abs()),
                "duality gap: {dual_obj} vs {}",
                fresh.objective
            );
        }
    }
}
