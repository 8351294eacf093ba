//! Integral feasibility of binary matrices with prescribed row and column
//! sums, forbidden cells and row-confined capacity groups.
//!
//! The constraint matrix of such a system is totally unimodular, so its
//! integer feasibility coincides with that of the layered network
//!
//! ```text
//! source -> column p -> [group g] -> row q -> sink
//!           cap c_p      cell arcs    cap     cap r_q
//!                        (cap 1)      cap(g)
//! ```
//!
//! which is decided here by an exact max-flow computation.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::grid::{check_sums, BinaryImage, Cell};

/// Cells of one row sharing a capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellGroup {
    pub cells: Vec<Cell>,
    pub cap: usize,
}

impl CellGroup {
    pub fn new(cells: impl IntoIterator<Item = Cell>, cap: usize) -> Self {
        CellGroup {
            cells: cells.into_iter().collect(),
            cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportProblem {
    pub m: usize,
    pub n: usize,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    /// Cells fixed to 0. Takes precedence over group membership.
    pub forbidden: BTreeSet<Cell>,
    /// Pairwise disjoint, each confined to a single row.
    pub groups: Vec<CellGroup>,
}

impl TransportProblem {
    pub fn new(m: usize, n: usize, row_sums: Vec<usize>, col_sums: Vec<usize>) -> Self {
        TransportProblem {
            m,
            n,
            row_sums,
            col_sums,
            forbidden: BTreeSet::new(),
            groups: Vec::new(),
        }
    }

    pub fn forbid(mut self, cells: impl IntoIterator<Item = Cell>) -> Self {
        self.forbidden.extend(cells);
        self
    }

    pub fn group(mut self, group: CellGroup) -> Self {
        self.groups.push(group);
        self
    }

    fn in_grid(&self, (p, q): Cell) -> bool {
        (1..=self.m).contains(&p) && (1..=self.n).contains(&q)
    }

    /// Maps each grouped cell to its group index.
    fn validate(&self) -> Result<HashMap<Cell, usize>> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::input("grid extents must be positive"));
        }
        check_sums(self.m, self.n, &self.row_sums, &self.col_sums)?;
        if let Some(c) = self.forbidden.iter().find(|&&c| !self.in_grid(c)) {
            return Err(Error::input(format!("forbidden cell {c:?} outside grid")));
        }
        let mut owner = HashMap::new();
        for (g, group) in self.groups.iter().enumerate() {
            let mut rows = group.cells.iter().map(|c| c.1);
            if let Some(q) = rows.next() {
                if rows.any(|r| r != q) {
                    return Err(Error::input(format!("group {g} spans several rows")));
                }
            }
            for &c in &group.cells {
                if !self.in_grid(c) {
                    return Err(Error::input(format!("group {g} cell {c:?} outside grid")));
                }
                if owner.insert(c, g).is_some() {
                    return Err(Error::input(format!("cell {c:?} belongs to two groups")));
                }
            }
        }
        Ok(owner)
    }
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

/// Dinic's algorithm over an arc list with paired reverse arcs.
#[derive(Debug, Clone)]
pub(crate) struct MaxFlow {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl MaxFlow {
    pub(crate) fn new(nodes: usize) -> Self {
        MaxFlow {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            next: vec![0; nodes],
        }
    }

    /// Returns the id of the forward arc.
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    /// Flow currently routed through forward arc `id`.
    pub(crate) fn flow_on(&self, id: usize) -> i64 {
        self.arcs[id ^ 1].cap
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.adj[u] {
                let Arc { to, cap } = self.arcs[id];
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64) -> i64 {
        if u == t {
            return limit;
        }
        while self.next[u] < self.adj[u].len() {
            let id = self.adj[u][self.next[u]];
            let Arc { to, cap } = self.arcs[id];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.arcs[id].cap -= pushed;
                    self.arcs[id ^ 1].cap += pushed;
                    return pushed;
                }
            }
            self.next[u] += 1;
        }
        0
    }

    pub(crate) fn run(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(s, t, i64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }
}

/// Finds a 0/1 image meeting all constraints of `tp`, or `None` if none
/// exists. Identical inputs give identical images.
pub fn solve_transport(tp: &TransportProblem) -> Result<Option<BinaryImage>> {
    let owner = tp.validate()?;
    let total: usize = tp.row_sums.iter().sum();
    if total != tp.col_sums.iter().sum::<usize>() {
        return Ok(None);
    }
    if tp.row_sums.iter().any(|&r| r > tp.m) || tp.col_sums.iter().any(|&c| c > tp.n) {
        return Ok(None);
    }

    let (m, n, groups) = (tp.m, tp.n, tp.groups.len());
    let source = 0;
    let col_node = |p: usize| p;
    let group_node = |g: usize| m + 1 + g;
    let row_node = |q: usize| m + groups + q;
    let sink = m + groups + n + 1;
    let mut net = MaxFlow::new(sink + 1);

    for p in 1..=m {
        net.add_arc(source, col_node(p), tp.col_sums[p - 1] as i64);
    }
    let mut cell_arcs = Vec::new();
    for q in 1..=n {
        for p in 1..=m {
            if tp.forbidden.contains(&(p, q)) {
                continue;
            }
            let head = match owner.get(&(p, q)) {
                Some(&g) => group_node(g),
                None => row_node(q),
            };
            cell_arcs.push(((p, q), net.add_arc(col_node(p), head, 1)));
        }
    }
    for (g, group) in tp.groups.iter().enumerate() {
        if let Some(&(_, q)) = group.cells.first() {
            net.add_arc(group_node(g), row_node(q), group.cap as i64);
        }
    }
    for q in 1..=n {
        net.add_arc(row_node(q), sink, tp.row_sums[q - 1] as i64);
    }

    if net.run(source, sink) != total as i64 {
        return Ok(None);
    }
    Ok(Some(BinaryImage::from_cells(
        m,
        n,
        cell_arcs
            .into_iter()
            .filter(|&(_, id)| net.flow_on(id) == 1)
            .map(|(cell, _)| cell),
    )))
}
