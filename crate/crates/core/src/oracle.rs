//! Exact exponential-time decision and enumeration by depth-first search.
//!
//! Cells are decided in `(q, p)` order, 0 before 1. A branch is cut as soon
//! as a row, column or window can no longer reach its target, or the
//! decided part of a patterned window agrees with no admissible pattern.

use crate::error::{Error, Result};
use crate::grid::{pattern_masks, window_cells, BinaryImage, PatternClass, RecInstance, Relation, WRecInstance};

/// Budgets for one oracle run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_cells: usize,
    pub max_nodes: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_cells: 36,
            max_nodes: 10_000_000,
        }
    }
}

impl OracleLimits {
    pub fn with_max_cells(mut self, max_cells: usize) -> Self {
        self.max_cells = max_cells;
        self
    }

    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = max_nodes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Feasible(BinaryImage),
    Infeasible,
    Limit,
}

impl OracleOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OracleOutcome::Feasible(_))
    }

    pub fn image(&self) -> Option<&BinaryImage> {
        match self {
            OracleOutcome::Feasible(x) => Some(x),
            _ => None,
        }
    }
}

/// Either kind of instance, by reference.
#[derive(Debug, Clone, Copy)]
pub enum Problem<'a> {
    Rec(&'a RecInstance),
    WRec(&'a WRecInstance),
}

impl<'a> From<&'a RecInstance> for Problem<'a> {
    fn from(inst: &'a RecInstance) -> Self {
        Problem::Rec(inst)
    }
}

impl<'a> From<&'a WRecInstance> for Problem<'a> {
    fn from(inst: &'a WRecInstance) -> Self {
        Problem::WRec(inst)
    }
}

#[derive(Debug, Clone)]
struct Window {
    lo: usize,
    hi: usize,
    count: usize,
    undecided: usize,
}

#[derive(Debug, Clone)]
struct PatternWindow {
    allowed: std::rc::Rc<Vec<u32>>,
    decided: u32,
    ones: u32,
}

impl PatternWindow {
    fn extendable(&self, decided: u32, ones: u32) -> bool {
        self.allowed.iter().any(|&a| a & decided == ones)
    }
}

/// Search state of one oracle run.
#[derive(Debug)]
pub struct Oracle {
    m: usize,
    n: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    row_count: Vec<usize>,
    col_count: Vec<usize>,
    windows: Vec<Window>,
    patterns: Vec<PatternWindow>,
    cell_windows: Vec<Vec<usize>>,
    cell_patterns: Vec<Vec<(usize, u32)>>,
    bits: Vec<bool>,
    limits: OracleLimits,
    nodes: u64,
    too_large: bool,
}

enum Flow {
    Continue,
    Stop,
    Budget,
}

impl Oracle {
    pub fn new<'a>(problem: impl Into<Problem<'a>>, limits: OracleLimits) -> Result<Self> {
        let problem = problem.into();
        let (m, n, k, rows, cols, cls) = match problem {
            Problem::Rec(r) => {
                r.validate()?;
                (r.m, r.n, r.k, &r.row_sums, &r.col_sums, r.pattern_class())
            }
            Problem::WRec(w) => {
                w.validate()?;
                (w.m, w.n, w.k, &w.row_sums, &w.col_sums, w.pattern_class())
            }
        };
        let mut oracle = Oracle {
            m,
            n,
            rows: rows.clone(),
            cols: cols.clone(),
            row_count: vec![0; n],
            col_count: vec![0; m],
            windows: Vec::new(),
            patterns: Vec::new(),
            cell_windows: vec![Vec::new(); m * n],
            cell_patterns: vec![Vec::new(); m * n],
            bits: vec![false; m * n],
            limits,
            nodes: 0,
            too_large: m * n > limits.max_cells,
        };
        if oracle.too_large {
            return Ok(oracle);
        }

        let full = k * k;
        let windows: Vec<((usize, usize), usize, usize)> = match problem {
            Problem::Rec(r) => r
                .corners()
                .into_iter()
                .zip(&r.block_values)
                .map(|(a, &v)| (a, 0, v))
                .collect(),
            Problem::WRec(w) => w
                .windows
                .iter()
                .map(|w| match w.rel {
                    Relation::Le => (w.anchor, 0, w.value),
                    Relation::Ge => (w.anchor, w.value, full),
                    Relation::Eq => (w.anchor, w.value, w.value),
                })
                .collect(),
        };
        let allowed = if cls.t == 0 {
            None
        } else {
            match pattern_masks(PatternClass::new(cls.k, cls.t)?) {
                Ok(masks) => Some(std::rc::Rc::new(masks)),
                Err(Error::Resource(_)) => {
                    oracle.too_large = true;
                    return Ok(oracle);
                }
                Err(e) => return Err(e),
            }
        };
        for ((i, j), lo, hi) in windows {
            let w = oracle.windows.len();
            oracle.windows.push(Window {
                lo,
                hi,
                count: 0,
                undecided: full,
            });
            let pat = allowed.as_ref().map(|masks| {
                oracle.patterns.push(PatternWindow {
                    allowed: masks.clone(),
                    decided: 0,
                    ones: 0,
                });
                oracle.patterns.len() - 1
            });
            for (bit, (p, q)) in window_cells(i, j, k).into_iter().enumerate() {
                let idx = (q - 1) * m + (p - 1);
                oracle.cell_windows[idx].push(w);
                if let Some(pi) = pat {
                    oracle.cell_patterns[idx].push((pi, 1 << bit));
                }
            }
        }
        Ok(oracle)
    }

    /// Search nodes expanded so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn balanced(&self) -> bool {
        self.rows.iter().sum::<usize>() == self.cols.iter().sum::<usize>()
    }

    fn admissible(&self, idx: usize, value: bool) -> bool {
        let (p, q) = (idx % self.m + 1, idx / self.m + 1);
        let b = value as usize;
        let rc = self.row_count[q - 1] + b;
        let target = self.rows[q - 1];
        if rc > target || rc + (self.m - p) < target {
            return false;
        }
        let cc = self.col_count[p - 1] + b;
        let target = self.cols[p - 1];
        if cc > target || cc + (self.n - q) < target {
            return false;
        }
        for &w in &self.cell_windows[idx] {
            let win = &self.windows[w];
            let cnt = win.count + b;
            if cnt > win.hi || cnt + win.undecided - 1 < win.lo {
                return false;
            }
        }
        for &(pi, bit) in &self.cell_patterns[idx] {
            let pw = &self.patterns[pi];
            let ones = if value { pw.ones | bit } else { pw.ones };
            if !pw.extendable(pw.decided | bit, ones) {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, idx: usize, value: bool, undo: bool) {
        let (p, q) = (idx % self.m + 1, idx / self.m + 1);
        let b = value as usize;
        if undo {
            self.row_count[q - 1] -= b;
            self.col_count[p - 1] -= b;
        } else {
            self.row_count[q - 1] += b;
            self.col_count[p - 1] += b;
        }
        for &w in &self.cell_windows[idx] {
            let win = &mut self.windows[w];
            if undo {
                win.count -= b;
                win.undecided += 1;
            } else {
                win.count += b;
                win.undecided -= 1;
            }
        }
        for &(pi, bit) in &self.cell_patterns[idx] {
            let pw = &mut self.patterns[pi];
            pw.decided ^= bit;
            if value {
                pw.ones ^= bit;
            }
        }
        self.bits[idx] = value && !undo;
    }

    fn search(&mut self, idx: usize, visit: &mut dyn FnMut(&[bool]) -> bool) -> Flow {
        if idx == self.bits.len() {
            return if visit(&self.bits) {
                Flow::Continue
            } else {
                Flow::Stop
            };
        }
        for value in [false, true] {
            self.nodes += 1;
            if self.nodes > self.limits.max_nodes {
                return Flow::Budget;
            }
            if !self.admissible(idx, value) {
                continue;
            }
            self.assign(idx, value, false);
            let flow = self.search(idx + 1, visit);
            self.assign(idx, value, true);
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    fn image(&self, bits: &[bool]) -> BinaryImage {
        BinaryImage::from_bits(self.m, self.n, bits.to_vec()).expect("sized by construction")
    }

    /// First solution in search order.
    pub fn solve(&mut self) -> OracleOutcome {
        if self.too_large {
            return OracleOutcome::Limit;
        }
        if !self.balanced() {
            return OracleOutcome::Infeasible;
        }
        let mut found = None;
        let flow = self.search(0, &mut |bits| {
            found = Some(bits.to_vec());
            false
        });
        match (flow, found) {
            (_, Some(bits)) => OracleOutcome::Feasible(self.image(&bits)),
            (Flow::Budget, None) => OracleOutcome::Limit,
            _ => OracleOutcome::Infeasible,
        }
    }

    /// Up to `cap` solutions in search order.
    pub fn enumerate(&mut self, cap: usize) -> Result<Vec<BinaryImage>> {
        if self.too_large {
            return Err(Error::Resource(format!(
                "{}x{} grid exceeds the oracle size guard",
                self.m, self.n
            )));
        }
        if !self.balanced() || cap == 0 {
            return Ok(Vec::new());
        }
        let mut found = Vec::new();
        let flow = self.search(0, &mut |bits| {
            found.push(bits.to_vec());
            found.len() < cap
        });
        if matches!(flow, Flow::Budget) {
            return Err(Error::Resource(format!(
                "search budget of {} nodes exhausted",
                self.limits.max_nodes
            )));
        }
        Ok(found.iter().map(|b| self.image(b)).collect())
    }
}

pub fn oracle_solve<'a>(problem: impl Into<Problem<'a>>, limits: OracleLimits) -> Result<OracleOutcome> {
    Ok(Oracle::new(problem, limits)?.solve())
}

pub fn oracle_enumerate<'a>(
    problem: impl Into<Problem<'a>>,
    limits: OracleLimits,
    cap: usize,
) -> Result<Vec<BinaryImage>> {
    Oracle::new(problem, limits)?.enumerate(cap)
}
