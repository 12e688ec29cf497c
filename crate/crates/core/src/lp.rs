//! Self-contained LP / binary-MILP solver: two-phase primal simplex on the
//! relaxation plus best-first branch-and-bound over binary variables.
//!
//! The simplex prices with Dantzig's rule for speed and falls back to Bland's
//! anti-cycling rule after a run of degenerate pivots, so termination is
//! guaranteed on the degenerate big-M instances produced by the encoders.
//! Branch-and-bound re-solves every candidate leaf with its binaries pinned
//! exactly (bounds collapsed to the integer point) before accepting it as an
//! incumbent; this prevents near-integral relaxation values from leaking
//! big-M slack into strict-inequality constraints.

use std::collections::BTreeMap;

/// Feasibility tolerance for constraint satisfaction.
pub const FEASIBILITY_TOL: f64 = 1e-7;
/// Integrality tolerance for binary variables.
pub const INTEGRALITY_TOL: f64 = 1e-6;
/// Simplex pivot cap per LP solve.
pub const PIVOT_CAP: usize = 50_000;
/// Branch-and-bound node cap (LP solves).
pub const NODE_CAP: usize = 1_000_000;

/// Reduced-cost threshold for entering columns.
const PRICE_TOL: f64 = 1e-9;
/// Pivot element magnitude threshold.
const PIVOT_TOL: f64 = 1e-9;
/// Consecutive degenerate pivots before switching to Bland's rule.
const DEGENERATE_STALL: usize = 64;

pub type VarId = usize;

/// Variable domains supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    FreeReal,
    NonNegReal,
    Binary,
}

#[derive(Clone, Debug)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

/// Sparse linear expression: coefficient map plus a constant offset.
#[derive(Clone, Debug, Default)]
pub struct LinExpr {
    terms: BTreeMap<VarId, f64>,
    pub constant: f64,
}

impl LinExpr {
    pub fn new() -> Self {
        LinExpr::default()
    }

    /// Accumulate `coeff` onto variable `id`; zero entries are dropped.
    pub fn add_term(&mut self, id: VarId, coeff: f64) -> &mut Self {
        let entry = self.terms.entry(id).or_insert(0.0);
        *entry += coeff;
        if *entry == 0.0 {
            self.terms.remove(&id);
        }
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (VarId, f64)> + '_ {
        self.terms.iter().map(|(&id, &c)| (id, c))
    }

    /// Evaluate at a full assignment.
    pub fn eval(&self, assignment: &[f64]) -> f64 {
        self.constant + self.terms.iter().map(|(&id, &c)| c * assignment[id]).sum::<f64>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub expr: LinExpr,
    pub relation: Relation,
    pub rhs: f64,
    pub name: String,
}

/// A linear program, possibly with binary variables.
#[derive(Clone, Debug)]
pub struct MilpProblem {
    pub variables: Vec<Variable>,
    pub objective: LinExpr,
    pub sense: Sense,
    pub constraints: Vec<Constraint>,
}

impl MilpProblem {
    pub fn new(sense: Sense) -> Self {
        MilpProblem {
            variables: Vec::new(),
            objective: LinExpr::new(),
            sense,
            constraints: Vec::new(),
        }
    }

    pub fn add_var(
        &mut self,
        name: impl Into<String>,
        kind: VarKind,
        lower: Option<f64>,
        upper: Option<f64>,
    ) -> VarId {
        if kind == VarKind::Binary {
            debug_assert!(lower.is_none() && upper.is_none(), "binary bounds are implicit");
        }
        self.variables.push(Variable { name: name.into(), kind, lower, upper });
        self.variables.len() - 1
    }

    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        expr: LinExpr,
        relation: Relation,
        rhs: f64,
    ) {
        self.constraints.push(Constraint { expr, relation, rhs, name: name.into() });
    }

    pub fn set_objective(&mut self, expr: LinExpr) {
        self.objective = expr;
    }

    pub fn binary_vars(&self) -> Vec<VarId> {
        (0..self.variables.len()).filter(|&i| self.variables[i].kind == VarKind::Binary).collect()
    }

    /// Debug dump in CPLEX LP text format (Maximize / Subject To / Bounds /
    /// Binary sections) for cross-checking against external solvers.
    pub fn to_lp_format(&self) -> String {
        let mut out = String::new();
        out.push_str(match self.sense {
            Sense::Max => "Maximize\n",
            Sense::Min => "Minimize\n",
        });
        out.push_str(" obj:");
        push_expr(&mut out, &self.objective, &self.variables);
        out.push('\n');
        out.push_str("Subject To\n");
        for c in &self.constraints {
            out.push_str(&format!(" {}:", c.name));
            push_expr(&mut out, &c.expr, &self.variables);
            let rel = match c.relation {
                Relation::Le => "<=",
                Relation::Eq => "=",
                Relation::Ge => ">=",
            };
            out.push_str(&format!(" {} {}\n", rel, c.rhs - c.expr.constant));
        }
        out.push_str("Bounds\n");
        for v in &self.variables {
            match v.kind {
                VarKind::Binary => {}
                VarKind::NonNegReal => match v.upper {
                    Some(u) => out.push_str(&format!(" 0 <= {} <= {}\n", v.name, u)),
                    None => out.push_str(&format!(" {} >= 0\n", v.name)),
                },
                VarKind::FreeReal => match (v.lower, v.upper) {
                    (Some(l), Some(u)) => {
                        out.push_str(&format!(" {} <= {} <= {}\n", l, v.name, u))
                    }
                    (Some(l), None) => out.push_str(&format!(" {} >= {}\n", v.name, l)),
                    (None, Some(u)) => out.push_str(&format!(" {} <= {}\n", v.name, u)),
                    (None, None) => out.push_str(&format!(" {} free\n", v.name)),
                },
            }
        }
        let binaries = self.binary_vars();
        if !binaries.is_empty() {
            out.push_str("Binary\n");
            for id in binaries {
                out.push_str(&format!(" {}\n", self.variables[id].name));
            }
        }
        out.push_str("End\n");
        out
    }
}

fn push_expr(out: &mut String, e: &LinExpr, vars: &[Variable]) {
    let mut first = true;
    for (id, c) in e.terms() {
        if first {
            out.push_str(&format!(" {} {}", c, vars[id].name));
            first = false;
        } else if c < 0.0 {
            out.push_str(&format!(" - {} {}", -c, vars[id].name));
        } else {
            out.push_str(&format!(" + {} {}", c, vars[id].name));
        }
    }
    if first {
        out.push_str(" 0");
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
    IterLimit,
}

#[derive(Clone, Debug)]
pub struct MilpSolution {
    pub status: Status,
    pub objective_value: f64,
    pub assignment: Vec<f64>,
}

impl MilpSolution {
    fn without_solution(status: Status) -> Self {
        MilpSolution { status, objective_value: f64::NAN, assignment: Vec::new() }
    }
}

/// Solve a pure LP (no binary variables) by two-phase primal simplex.
pub fn solve_lp(problem: &MilpProblem) -> MilpSolution {
    assert!(
        problem.binary_vars().is_empty(),
        "solve_lp requires a problem without binary variables"
    );
    solve_relaxed(problem, &BTreeMap::new())
}

/// Solve the LP relaxation with binaries relaxed to [0, 1]; `pins` collapses
/// selected variables to exact fixed values (substituted out, not just
/// bounded, so pinned binaries can never carry fractional residue).
pub fn solve_relaxed(problem: &MilpProblem, pins: &BTreeMap<VarId, f64>) -> MilpSolution {
    let nv = problem.variables.len();

    // Per-variable transformation into non-negative simplex columns.
    #[derive(Clone, Copy)]
    enum Map {
        Fixed(f64),
        // x = lo + y, y >= 0, optional row y <= hi - lo.
        Shift { col: usize, lo: f64 },
        // x = hi - y, y >= 0 (upper bound only).
        Mirror { col: usize, hi: f64 },
        // x = y_pos - y_neg.
        Split { pos: usize, neg: usize },
    }

    let mut maps = Vec::with_capacity(nv);
    let mut ncols = 0usize;
    let mut ub_rows: Vec<(usize, f64)> = Vec::new(); // (col, bound on shifted var)
    for (id, v) in problem.variables.iter().enumerate() {
        if let Some(&val) = pins.get(&id) {
            maps.push(Map::Fixed(val));
            continue;
        }
        let (lo, hi) = match v.kind {
            VarKind::Binary => (Some(0.0), Some(1.0)),
            VarKind::NonNegReal => (Some(v.lower.unwrap_or(0.0).max(0.0)), v.upper),
            VarKind::FreeReal => (v.lower, v.upper),
        };
        match (lo, hi) {
            (Some(l), Some(u)) => {
                if u < l - FEASIBILITY_TOL {
                    return MilpSolution::without_solution(Status::Infeasible);
                }
                maps.push(Map::Shift { col: ncols, lo: l });
                ub_rows.push((ncols, u - l));
                ncols += 1;
            }
            (Some(l), None) => {
                maps.push(Map::Shift { col: ncols, lo: l });
                ncols += 1;
            }
            (None, Some(u)) => {
                maps.push(Map::Mirror { col: ncols, hi: u });
                ncols += 1;
            }
            (None, None) => {
                maps.push(Map::Split { pos: ncols, neg: ncols + 1 });
                ncols += 2;
            }
        }
    }

    // Assemble rows: structural coefficients, relation, rhs.
    let nrows = problem.constraints.len() + ub_rows.len();
    let mut rows = vec![vec![0.0; ncols]; nrows];
    let mut rels = vec![Relation::Le; nrows];
    let mut rhs = vec![0.0; nrows];
    for (r, c) in problem.constraints.iter().enumerate() {
        let mut b = c.rhs - c.expr.constant;
        for (id, coeff) in c.expr.terms() {
            match maps[id] {
                Map::Fixed(val) => b -= coeff * val,
                Map::Shift { col, lo } => {
                    rows[r][col] += coeff;
                    b -= coeff * lo;
                }
                Map::Mirror { col, hi } => {
                    rows[r][col] -= coeff;
                    b -= coeff * hi;
                }
                Map::Split { pos, neg } => {
                    rows[r][pos] += coeff;
                    rows[r][neg] -= coeff;
                }
            }
        }
        // Normalize Ge to Le.
        match c.relation {
            Relation::Ge => {
                for x in &mut rows[r] {
                    *x = -*x;
                }
                rels[r] = Relation::Le;
                rhs[r] = -b;
            }
            rel => {
                rels[r] = rel;
                rhs[r] = b;
            }
        }
    }
    for (i, &(col, bound)) in ub_rows.iter().enumerate() {
        let r = problem.constraints.len() + i;
        rows[r][col] = 1.0;
        rels[r] = Relation::Le;
        rhs[r] = bound;
    }

    // Objective in Min form over structural columns.
    let mut cost = vec![0.0; ncols];
    let mut obj_const = problem.objective.constant;
    let sign = match problem.sense {
        Sense::Min => 1.0,
        Sense::Max => -1.0,
    };
    for (id, coeff) in problem.objective.terms() {
        match maps[id] {
            Map::Fixed(val) => obj_const += coeff * val,
            Map::Shift { col, lo } => {
                cost[col] += sign * coeff;
                obj_const += coeff * lo;
            }
            Map::Mirror { col, hi } => {
                cost[col] -= sign * coeff;
                obj_const += coeff * hi;
            }
            Map::Split { pos, neg } => {
                cost[pos] += sign * coeff;
                cost[neg] -= sign * coeff;
            }
        }
    }

    let result = simplex(rows, rels, rhs, &cost);
    match result {
        SimplexResult::Optimal { x, value } => {
            let mut assignment = vec![0.0; nv];
            for (id, m) in maps.iter().enumerate() {
                assignment[id] = match *m {
                    Map::Fixed(v) => v,
                    Map::Shift { col, lo } => lo + x[col],
                    Map::Mirror { col, hi } => hi - x[col],
                    Map::Split { pos, neg } => x[pos] - x[neg],
                };
            }
            // Internal value is min of (sign * objective); undo the sign.
            let objective_value = obj_const + sign * value;
            MilpSolution { status: Status::Optimal, objective_value, assignment }
        }
        SimplexResult::Infeasible => MilpSolution::without_solution(Status::Infeasible),
        SimplexResult::Unbounded => MilpSolution::without_solution(Status::Unbounded),
        SimplexResult::IterLimit => MilpSolution::without_solution(Status::IterLimit),
    }
}

enum SimplexResult {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
    IterLimit,
}

/// Two-phase full-tableau primal simplex on
/// `min c·x  s.t.  rows x (<=|=) rhs,  x >= 0`.
fn simplex(
    mut rows: Vec<Vec<f64>>,
    rels: Vec<Relation>,
    mut rhs: Vec<f64>,
    cost: &[f64],
) -> SimplexResult {
    let m = rows.len();
    let nstruct = cost.len();
    // Column layout: structural | slack (one per Le row) | artificial.
    let nslack = rels.iter().filter(|&&r| r == Relation::Le).count();
    let mut slack_col = vec![usize::MAX; m];
    let mut next = nstruct;
    for r in 0..m {
        if rels[r] == Relation::Le {
            slack_col[r] = next;
            next += 1;
        }
    }
    // Negate rows with negative rhs (slack coefficient flips sign with them).
    let mut slack_sign = vec![1.0; m];
    for r in 0..m {
        if rhs[r] < 0.0 {
            for x in &mut rows[r] {
                *x = -*x;
            }
            rhs[r] = -rhs[r];
            slack_sign[r] = -1.0;
        }
    }
    // Artificials for equality rows and for rows whose slack flipped negative.
    let mut art_col = vec![usize::MAX; m];
    let mut nart = 0usize;
    for r in 0..m {
        if slack_col[r] == usize::MAX || slack_sign[r] < 0.0 {
            art_col[r] = nstruct + nslack + nart;
            nart += 1;
        }
    }
    let ncols = nstruct + nslack + nart;

    // Tableau: m rows of (ncols + rhs) plus a cost row.
    let mut t = vec![vec![0.0; ncols + 1]; m];
    let mut basis = vec![0usize; m];
    for r in 0..m {
        t[r][..nstruct].copy_from_slice(&rows[r]);
        if slack_col[r] != usize::MAX {
            t[r][slack_col[r]] = slack_sign[r];
        }
        t[r][ncols] = rhs[r];
        basis[r] = if art_col[r] != usize::MAX {
            t[r][art_col[r]] = 1.0;
            art_col[r]
        } else {
            slack_col[r]
        };
    }

    let mut pivots = 0usize;

    // Phase 1: minimize sum of artificials (skipped when there are none).
    if nart > 0 {
        let mut z = vec![0.0; ncols + 1];
        for r in 0..m {
            if art_col[r] != usize::MAX {
                z[art_col[r]] = 1.0;
            }
        }
        for r in 0..m {
            if art_col[r] != usize::MAX {
                let zr = z.clone();
                for j in 0..=ncols {
                    z[j] = zr[j] - t[r][j];
                }
                z[art_col[r]] = 0.0;
            }
        }
        match pivot_loop(&mut t, &mut z, &mut basis, ncols, usize::MAX, &mut pivots) {
            LoopEnd::Optimal => {}
            LoopEnd::Unbounded => return SimplexResult::Infeasible, // cannot happen
            LoopEnd::IterLimit => return SimplexResult::IterLimit,
        }
        if -z[ncols] > FEASIBILITY_TOL {
            return SimplexResult::Infeasible;
        }
        // Drive artificials out of the basis where possible.
        for r in 0..m {
            if basis[r] >= nstruct + nslack {
                if let Some(j) = (0..nstruct + nslack).find(|&j| t[r][j].abs() > PIVOT_TOL) {
                    pivot(&mut t, &mut None, &mut basis, r, j, ncols);
                }
                // Otherwise the row is redundant; its artificial stays basic
                // at value zero and artificial columns are barred below.
            }
        }
    }

    // Phase 2: real objective, artificial columns barred.
    let allowed = nstruct + nslack;
    let mut z = vec![0.0; ncols + 1];
    z[..nstruct].copy_from_slice(cost);
    for r in 0..m {
        let b = basis[r];
        if b < nstruct && z[b].abs() > 0.0 {
            let cb = z[b];
            for j in 0..=ncols {
                z[j] -= cb * t[r][j];
            }
            z[b] = 0.0;
        }
    }
    match pivot_loop(&mut t, &mut z, &mut basis, ncols, allowed, &mut pivots) {
        LoopEnd::Optimal => {}
        LoopEnd::Unbounded => return SimplexResult::Unbounded,
        LoopEnd::IterLimit => return SimplexResult::IterLimit,
    }

    let mut x = vec![0.0; nstruct];
    for r in 0..m {
        if basis[r] < nstruct {
            x[basis[r]] = t[r][ncols];
        }
    }
    SimplexResult::Optimal { x, value: -z[ncols] }
}

enum LoopEnd {
    Optimal,
    Unbounded,
    IterLimit,
}

/// Pivot until optimal. `allowed` bounds entering columns (`usize::MAX` for
/// all). Dantzig pricing, with Bland's rule after a degenerate stall.
fn pivot_loop(
    t: &mut [Vec<f64>],
    z: &mut Vec<f64>,
    basis: &mut [usize],
    ncols: usize,
    allowed: usize,
    pivots: &mut usize,
) -> LoopEnd {
    let m = t.len();
    let limit = allowed.min(ncols);
    let mut stall = 0usize;
    let mut sticky_bland = false;
    loop {
        // Entering column. Bland's rule engages after a degenerate stall and,
        // as a termination backstop, permanently once half the pivot budget
        // is spent (quasi-degenerate pivots can otherwise evade the stall
        // counter while making no real progress).
        let bland = sticky_bland || stall >= DEGENERATE_STALL || {
            if *pivots >= PIVOT_CAP / 2 {
                sticky_bland = true;
            }
            sticky_bland
        };
        let mut enter = usize::MAX;
        let mut best = -PRICE_TOL;
        for j in 0..limit {
            if z[j] < best {
                enter = j;
                best = z[j];
                if bland {
                    break;
                }
            }
        }
        if enter == usize::MAX {
            return LoopEnd::Optimal;
        }
        // Ratio test; ties broken by smallest basis index (lexicographic aid).
        let mut leave = usize::MAX;
        let mut best_ratio = f64::INFINITY;
        for r in 0..m {
            let a = t[r][enter];
            if a > PIVOT_TOL {
                let ratio = t[r][ncols] / a;
                if ratio < best_ratio - 1e-12
                    || (ratio < best_ratio + 1e-12
                        && (leave == usize::MAX || basis[r] < basis[leave]))
                {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        if leave == usize::MAX {
            return LoopEnd::Unbounded;
        }
        stall = if best_ratio <= 1e-9 { stall + 1 } else { 0 };
        pivot(t, &mut Some(z), basis, leave, enter, ncols);
        *pivots += 1;
        if *pivots >= PIVOT_CAP {
            return LoopEnd::IterLimit;
        }
    }
}

/// Gauss-Jordan pivot on (row, col), updating the optional cost row.
fn pivot(
    t: &mut [Vec<f64>],
    z: &mut Option<&mut Vec<f64>>,
    basis: &mut [usize],
    row: usize,
    col: usize,
    ncols: usize,
) {
    let m = t.len();
    let p = t[row][col];
    let inv = 1.0 / p;
    for x in t[row].iter_mut() {
        *x *= inv;
    }
    t[row][col] = 1.0; // exact
    for r in 0..m {
        if r == row {
            continue;
        }
        let f = t[r][col];
        if f != 0.0 {
            // Split borrows: copy the pivot row once per elimination row.
            let (pr, tr) = if r < row {
                let (a, b) = t.split_at_mut(row);
                (&b[0], &mut a[r])
            } else {
                let (a, b) = t.split_at_mut(r);
                (&a[row], &mut b[0])
            };
            for j in 0..=ncols {
                tr[j] -= f * pr[j];
            }
            tr[col] = 0.0;
        }
    }
    if let Some(z) = z.as_deref_mut() {
        let f = z[col];
        if f != 0.0 {
            for j in 0..=ncols {
                z[j] -= f * t[row][j];
            }
            z[col] = 0.0;
        }
    }
    basis[row] = col;
}

/// Solve a binary MILP to global optimality by best-first branch-and-bound.
pub fn solve_bilp(problem: &MilpProblem) -> MilpSolution {
    solve_bilp_seeded(problem, f64::NEG_INFINITY)
}

/// As [`solve_bilp`], but with an initial incumbent objective value (in the
/// problem's own sense) used purely for pruning: solutions not strictly
/// better than `incumbent` are discarded. Useful for subproblem sweeps.
pub fn solve_bilp_seeded(problem: &MilpProblem, incumbent: f64) -> MilpSolution {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let binaries = problem.binary_vars();
    let to_score = |obj: f64| match problem.sense {
        Sense::Max => obj,
        Sense::Min => -obj,
    };
    // Pruning gap: 0.5 when the objective is provably integral on binary
    // assignments (all objective weight on binaries, integer coefficients).
    let integral_objective = problem
        .objective
        .terms()
        .all(|(id, c)| binaries.contains(&id) && (c - c.round()).abs() <= 1e-12)
        && (problem.objective.constant - problem.objective.constant.round()).abs() <= 1e-12;
    let gap = if integral_objective { 0.5 } else { FEASIBILITY_TOL };

    #[derive(PartialEq)]
    struct Node {
        score: f64,
        tick: Reverse<u64>,
        pins: BTreeMap<VarId, f64>,
        x: Vec<f64>,
    }
    impl Eq for Node {}
    impl Ord for Node {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.score.total_cmp(&other.score).then_with(|| self.tick.cmp(&other.tick))
        }
    }
    impl PartialOrd for Node {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }

    let mut best_score = to_score(incumbent);
    let mut best: Option<MilpSolution> = None;
    let mut nodes = 0usize;

    let root = solve_relaxed(problem, &BTreeMap::new());
    nodes += 1;
    match root.status {
        Status::Infeasible => return MilpSolution::without_solution(Status::Infeasible),
        Status::Unbounded => return MilpSolution::without_solution(Status::Unbounded),
        Status::IterLimit => return MilpSolution::without_solution(Status::IterLimit),
        Status::Optimal => {}
    }
    let mut heap = BinaryHeap::new();
    let mut tick = 0u64;
    heap.push(Node {
        score: to_score(root.objective_value),
        tick: Reverse(0),
        pins: BTreeMap::new(),
        x: root.assignment,
    });

    let mut hit_cap = false;
    while let Some(node) = heap.pop() {
        if node.score <= best_score + gap {
            continue;
        }
        // Fractionality of the unpinned binaries at the relaxation optimum.
        let frac: Vec<(f64, VarId)> = binaries
            .iter()
            .filter(|id| !node.pins.contains_key(id))
            .map(|&id| ((node.x[id] - node.x[id].round()).abs(), id))
            .collect();
        let branch_var = |cands: &[(f64, VarId)]| {
            // Most fractional; ties broken by lowest variable id.
            cands
                .iter()
                .cloned()
                .max_by(|a, b| a.0.total_cmp(&b.0).then(b.1.cmp(&a.1)))
                .map(|(_, id)| id)
        };
        let strongly_frac: Vec<(f64, VarId)> =
            frac.iter().cloned().filter(|&(f, _)| f > INTEGRALITY_TOL).collect();
        if strongly_frac.is_empty() {
            // Candidate leaf: pin every remaining binary to its rounded value
            // and re-solve so the integer point is enforced exactly.
            let mut leaf = node.pins.clone();
            for &(_, id) in &frac {
                leaf.insert(id, node.x[id].round());
            }
            if nodes >= NODE_CAP {
                hit_cap = true;
                break;
            }
            let sol = solve_relaxed(problem, &leaf);
            nodes += 1;
            if sol.status == Status::Optimal && to_score(sol.objective_value) > best_score {
                best_score = to_score(sol.objective_value);
                best = Some(sol);
            }
            if frac.is_empty() {
                continue;
            }
            // Near-integral but not pinned: branch anyway for completeness.
        }
        let id = branch_var(if strongly_frac.is_empty() { &frac } else { &strongly_frac })
            .expect("branch candidate exists");
        for v in [1.0, 0.0] {
            let mut pins = node.pins.clone();
            pins.insert(id, v);
            if nodes >= NODE_CAP {
                hit_cap = true;
                break;
            }
            let sol = solve_relaxed(problem, &pins);
            nodes += 1;
            match sol.status {
                Status::Optimal => {
                    if to_score(sol.objective_value) > best_score + gap {
                        tick += 1;
                        heap.push(Node {
                            score: to_score(sol.objective_value),
                            tick: Reverse(tick),
                            pins,
                            x: sol.assignment,
                        });
                    }
                }
                // The node LP ran out of pivots: no bound of its own, but the
                // parent's bound is still valid. Keep the subtree alive so a
                // stalled LP can never silently prune feasible solutions;
                // further pins shrink the LP until it solves.
                Status::IterLimit => {
                    tick += 1;
                    heap.push(Node {
                        score: node.score,
                        tick: Reverse(tick),
                        pins,
                        x: node.x.clone(),
                    });
                }
                Status::Infeasible | Status::Unbounded => {}
            }
        }
        if hit_cap {
            break;
        }
    }

    match best {
        Some(mut sol) => {
            if hit_cap {
                sol.status = Status::IterLimit;
            }
            sol
        }
        None => MilpSolution::without_solution(if hit_cap {
            Status::IterLimit
        } else {
            Status::Infeasible
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::SplitMix64;

    fn lp_max(
        nvars: usize,
        objective: &[f64],
        rows: &[(&[f64], Relation, f64)],
        bounds: &[(Option<f64>, Option<f64>)],
    ) -> MilpSolution {
        let mut p = MilpProblem::new(Sense::Max);
        for (i, &(lo, hi)) in bounds.iter().enumerate() {
            p.add_var(format!("x{i}"), VarKind::FreeReal, lo, hi);
        }
        let mut obj = LinExpr::new();
        for (i, &c) in objective.iter().enumerate() {
            obj.add_term(i, c);
        }
        p.set_objective(obj);
        for (r, &(coeffs, rel, rhs)) in rows.iter().enumerate() {
            let mut e = LinExpr::new();
            for (i, &c) in coeffs.iter().enumerate() {
                e.add_term(i, c);
            }
            p.add_constraint(format!("c{r}"), e, rel, rhs);
        }
        assert_eq!(nvars, bounds.len());
        solve_lp(&p)
    }

    #[test]
    fn scalar_box() {
        let sol = lp_max(1, &[1.0], &[(&[1.0], Relation::Le, 3.0)], &[(Some(0.0), None)]);
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective_value - 3.0).abs() < 1e-9);
    }

    #[test]
    fn two_variable_vertex() {
        let sol = lp_max(
            2,
            &[1.0, 1.0],
            &[(&[1.0, 2.0], Relation::Le, 4.0), (&[3.0, 1.0], Relation::Le, 6.0)],
            &[(Some(0.0), None), (Some(0.0), None)],
        );
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective_value - 2.8).abs() < 1e-9);
        assert!((sol.assignment[0] - 1.6).abs() < 1e-9);
        assert!((sol.assignment[1] - 1.2).abs() < 1e-9);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let sol = lp_max(
            1,
            &[1.0],
            &[(&[1.0], Relation::Ge, 5.0), (&[1.0], Relation::Le, 3.0)],
            &[(Some(0.0), None)],
        );
        assert_eq!(sol.status, Status::Infeasible);
        let sol = lp_max(1, &[1.0], &[], &[(Some(0.0), None)]);
        assert_eq!(sol.status, Status::Unbounded);
    }

    #[test]
    fn free_variables_and_equalities() {
        // max y s.t. x + y = 2, y - x <= 0  →  x = y = 1.
        let sol = lp_max(
            2,
            &[0.0, 1.0],
            &[(&[1.0, 1.0], Relation::Eq, 2.0), (&[-1.0, 1.0], Relation::Le, 0.0)],
            &[(None, None), (None, None)],
        );
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective_value - 1.0).abs() < 1e-9);
        // Negative optimum through a free variable: max x s.t. x <= -4.
        let sol = lp_max(1, &[1.0], &[(&[1.0], Relation::Le, -4.0)], &[(None, None)]);
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective_value + 4.0).abs() < 1e-9);
    }

    /// Brute-force LP oracle: enumerate all basis subsets of the (dense)
    /// constraint rows plus active bounds, solve each square system, keep the
    /// best feasible vertex.
    fn vertex_oracle(
        objective: &[f64],
        rows: &[(Vec<f64>, Relation, f64)],
        lo: f64,
        hi: f64,
    ) -> Option<f64> {
        let n = objective.len();
        // Treat bounds as additional rows.
        let mut all: Vec<(Vec<f64>, f64)> = Vec::new();
        for (coeffs, _, rhs) in rows {
            all.push((coeffs.clone(), *rhs));
        }
        for i in 0..n {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            all.push((e.clone(), hi));
            all.push((e, lo));
        }
        let mut best: Option<f64> = None;
        let idx: Vec<usize> = (0..all.len()).collect();
        // All n-subsets.
        fn subsets(idx: &[usize], n: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(idx: &[usize], start: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == n {
                    out.push(cur.clone());
                    return;
                }
                for i in start..idx.len() {
                    cur.push(idx[i]);
                    rec(idx, i + 1, n, cur, out);
                    cur.pop();
                }
            }
            rec(idx, 0, n, &mut cur, &mut out);
            out
        }
        for subset in subsets(&idx, n) {
            // Solve the square system by Gaussian elimination.
            let mut a: Vec<Vec<f64>> = subset.iter().map(|&i| all[i].0.clone()).collect();
            let mut b: Vec<f64> = subset.iter().map(|&i| all[i].1).collect();
            let mut ok = true;
            for col in 0..n {
                let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()));
                let piv = piv.unwrap();
                if a[piv][col].abs() < 1e-9 {
                    ok = false;
                    break;
                }
                a.swap(col, piv);
                b.swap(col, piv);
                let d = a[col][col];
                for j in 0..n {
                    a[col][j] /= d;
                }
                b[col] /= d;
                for r in 0..n {
                    if r != col {
                        let f = a[r][col];
                        if f != 0.0 {
                            for j in 0..n {
                                a[r][j] -= f * a[col][j];
                            }
                            b[r] -= f * b[col];
                        }
                    }
                }
            }
            if !ok {
                continue;
            }
            let x = b;
            // Feasibility w.r.t. all rows and bounds.
            let feasible = rows.iter().all(|(coeffs, rel, rhs)| {
                let lhs: f64 = coeffs.iter().zip(&x).map(|(c, v)| c * v).sum();
                match rel {
                    Relation::Le => lhs <= rhs + 1e-6,
                    Relation::Eq => (lhs - rhs).abs() <= 1e-6,
                    Relation::Ge => lhs >= rhs - 1e-6,
                }
            }) && x.iter().all(|&v| (lo - 1e-6..=hi + 1e-6).contains(&v));
            if feasible {
                let val: f64 = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
                best = Some(best.map_or(val, |b: f64| b.max(val)));
            }
        }
        best
    }

    #[test]
    fn random_lps_match_vertex_enumeration() {
        let mut rng = SplitMix64::new(99);
        for trial in 0..40 {
            let n = 2 + rng.next_below(4); // up to 5 variables
            let m = 2 + rng.next_below(7); // up to 8 constraints
            let objective: Vec<f64> = (0..n).map(|_| rng.next_f64() * 4.0 - 2.0).collect();
            let rows: Vec<(Vec<f64>, Relation, f64)> = (0..m)
                .map(|_| {
                    let coeffs: Vec<f64> = (0..n).map(|_| rng.next_f64() * 4.0 - 2.0).collect();
                    (coeffs, Relation::Le, rng.next_f64() * 5.0)
                })
                .collect();
            // Bounded box keeps the oracle finite.
            let sol = {
                let refs: Vec<(&[f64], Relation, f64)> =
                    rows.iter().map(|(c, r, b)| (c.as_slice(), *r, *b)).collect();
                lp_max(
                    n,
                    &objective,
                    &refs,
                    &vec![(Some(-10.0), Some(10.0)); n],
                )
            };
            let oracle = vertex_oracle(&objective, &rows, -10.0, 10.0);
            let oracle = oracle.expect("box guarantees feasibility of some vertex");
            assert_eq!(sol.status, Status::Optimal, "trial {trial}");
            assert!(
                (sol.objective_value - oracle).abs() <= 1e-6,
                "trial {trial}: simplex {} vs oracle {}",
                sol.objective_value,
                oracle
            );
        }
    }

    fn knapsack() -> MilpProblem {
        let mut p = MilpProblem::new(Sense::Max);
        let e: Vec<VarId> =
            (0..3).map(|i| p.add_var(format!("e{i}"), VarKind::Binary, None, None)).collect();
        let mut obj = LinExpr::new();
        obj.add_term(e[0], 10.0).add_term(e[1], 6.0).add_term(e[2], 4.0);
        p.set_objective(obj);
        let mut cap = LinExpr::new();
        cap.add_term(e[0], 5.0).add_term(e[1], 4.0).add_term(e[2], 3.0);
        p.add_constraint("cap", cap, Relation::Le, 8.0);
        p
    }

    #[test]
    fn bilp_basics() {
        let mut p = MilpProblem::new(Sense::Max);
        let a = p.add_var("e1", VarKind::Binary, None, None);
        let b = p.add_var("e2", VarKind::Binary, None, None);
        let mut obj = LinExpr::new();
        obj.add_term(a, 1.0).add_term(b, 1.0);
        p.set_objective(obj);
        let mut c = LinExpr::new();
        c.add_term(a, 1.0).add_term(b, 1.0);
        p.add_constraint("c", c, Relation::Le, 1.0);
        let sol = solve_bilp(&p);
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective_value - 1.0).abs() < 1e-9);

        // Knapsack with capacity 8: the optimum packs items 0 and 2.
        let sol = solve_bilp(&knapsack());
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective_value - 14.0).abs() < 1e-9);
        assert!((sol.assignment[0] - 1.0).abs() < 1e-6);
        assert!((sol.assignment[2] - 1.0).abs() < 1e-6);
    }

    /// Exhaustive BILP oracle: try all binary assignments, solving the
    /// residual LP over the real variables for each.
    fn bilp_oracle(p: &MilpProblem) -> Option<f64> {
        let binaries = p.binary_vars();
        let mut best: Option<f64> = None;
        for mask in 0u64..1 << binaries.len() {
            let mut pins = BTreeMap::new();
            for (i, &id) in binaries.iter().enumerate() {
                pins.insert(id, f64::from(u32::from(mask >> i & 1 == 1)));
            }
            let sol = solve_relaxed(p, &pins);
            if sol.status == Status::Optimal {
                let v = sol.objective_value;
                best = Some(match (best, p.sense) {
                    (None, _) => v,
                    (Some(b), Sense::Max) => b.max(v),
                    (Some(b), Sense::Min) => b.min(v),
                });
            }
        }
        best
    }

    #[test]
    fn random_bilps_match_exhaustive_oracle() {
        let mut rng = SplitMix64::new(1234);
        for trial in 0..25 {
            let nb = 3 + rng.next_below(10); // up to 12 binaries
            let nr = rng.next_below(4); // up to 3 reals
            let mut p = MilpProblem::new(Sense::Max);
            let bs: Vec<VarId> =
                (0..nb).map(|i| p.add_var(format!("e{i}"), VarKind::Binary, None, None)).collect();
            let rs: Vec<VarId> = (0..nr)
                .map(|i| {
                    p.add_var(format!("x{i}"), VarKind::FreeReal, Some(-5.0), Some(5.0))
                })
                .collect();
            let mut obj = LinExpr::new();
            for &b in &bs {
                obj.add_term(b, (rng.next_below(9) as f64) - 4.0);
            }
            for &r in &rs {
                obj.add_term(r, rng.next_f64() * 2.0 - 1.0);
            }
            p.set_objective(obj);
            let m = 2 + rng.next_below(5);
            for c in 0..m {
                let mut e = LinExpr::new();
                for &b in &bs {
                    e.add_term(b, rng.next_f64() * 6.0 - 3.0);
                }
                for &r in &rs {
                    e.add_term(r, rng.next_f64() * 2.0 - 1.0);
                }
                p.add_constraint(format!("c{c}"), e, Relation::Le, rng.next_f64() * 4.0);
            }
            let sol = solve_bilp(&p);
            let oracle = bilp_oracle(&p);
            match oracle {
                None => assert_eq!(sol.status, Status::Infeasible, "trial {trial}"),
                Some(v) => {
                    assert_eq!(sol.status, Status::Optimal, "trial {trial}");
                    assert!(
                        (sol.objective_value - v).abs() <= 1e-6,
                        "trial {trial}: bnb {} vs oracle {}",
                        sol.objective_value,
                        v
                    );
                }
            }
        }
    }

    #[test]
    fn determinism() {
        let p = knapsack();
        let a = solve_bilp(&p);
        let b = solve_bilp(&p);
        assert_eq!(a.status, b.status);
        assert_eq!(a.objective_value, b.objective_value);
        assert_eq!(a.assignment, b.assignment);
    }

    #[test]
    fn lp_format_dump() {
        let text = knapsack().to_lp_format();
        assert!(text.starts_with("Maximize"));
        assert!(text.contains("Subject To"));
        assert!(text.contains("Bounds"));
        assert!(text.contains("Binary"));
        assert!(text.ends_with("End\n"));
    }
}
