//! Polynomial-time solvers for the tractable classes and a dispatching
//! front end.
//!
//! * `k = 1`: every block is a single cell, so the instance is plain
//!   reconstruction with cells fixed to 0 wherever `v = 0`.
//! * `k >= 2, nu = 1, t = 0`: first choose which blocks hold a 1 by solving
//!   the block-level row/column-sum problem, then place one 1 in each chosen
//!   block with [`dr1_construct`].
//! * `k >= 2, t = 2, nu >= k`: block and pattern constraints are equivalent
//!   to "at most `min(1, v)` ones in every block row", a row-confined group
//!   cap handled directly by the flow network.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::dr1::{dr1_construct, dr1_feasible, DR1Instance};
use crate::error::{Error, Result};
use crate::flow::{solve_transport, CellGroup, TransportProblem};
use crate::grid::{BinaryImage, Cell, RecInstance};
use crate::oracle::{oracle_solve, OracleLimits, OracleOutcome};
use crate::verify::verify_rec;

/// Algorithm selector. `Auto` picks by [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Auto,
    Rec1,
    K10,
    Kv2,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Rec1 => "rec1",
            Method::K10 => "k10",
            Method::Kv2 => "kv2",
            Method::Oracle => "oracle",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "rec1" => Ok(Method::Rec1),
            "k10" => Ok(Method::K10),
            "kv2" => Ok(Method::Kv2),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::input(format!("unknown method {other:?}"))),
        }
    }
}

/// Tractability class of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Rec1,
    K10,
    Kv2,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    Feasible(BinaryImage),
    Infeasible,
    OracleLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// The algorithm that produced the verdict; never `Auto`.
    pub method: Method,
}

impl SolveResult {
    fn new(status: SolveStatus, method: Method) -> Self {
        SolveResult { status, method }
    }

    fn from_image(x: Option<BinaryImage>, method: Method) -> Self {
        let status = match x {
            Some(x) => SolveStatus::Feasible(x),
            None => SolveStatus::Infeasible,
        };
        Self::new(status, method)
    }

    pub fn image(&self) -> Option<&BinaryImage> {
        match &self.status {
            SolveStatus::Feasible(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.image().is_some()
    }
}

/// Block occupancy `eta` on the corner points, in corner order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockOccupancy {
    pub eta: Vec<bool>,
}

impl BlockOccupancy {
    pub fn selected(&self, inst: &RecInstance) -> BTreeSet<Cell> {
        self.eta
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(idx, _)| inst.corner_at(idx))
            .collect()
    }
}

pub fn classify(inst: &RecInstance) -> Class {
    match (inst.k, inst.nu, inst.t) {
        (1, _, _) => Class::Rec1,
        (_, 1, 0) => Class::K10,
        (k, nu, 2) if nu >= k => Class::Kv2,
        _ => Class::Unknown,
    }
}

fn require(inst: &RecInstance, class: Class, method: Method) -> Result<()> {
    inst.validate()?;
    let actual = classify(inst);
    if actual != class {
        return Err(Error::input(format!(
            "method {method} does not apply to Rec(k={}, nu={}, t={}) (class {actual:?})",
            inst.k, inst.nu, inst.t
        )));
    }
    Ok(())
}

pub fn solve_rec1(inst: &RecInstance) -> Result<SolveResult> {
    require(inst, Class::Rec1, Method::Rec1)?;
    let forbidden = inst
        .corners()
        .into_iter()
        .zip(&inst.block_values)
        .filter(|(_, &v)| v == 0)
        .map(|(c, _)| c);
    let tp = TransportProblem::new(inst.m, inst.n, inst.row_sums.clone(), inst.col_sums.clone())
        .forbid(forbidden);
    Ok(SolveResult::from_image(solve_transport(&tp)?, Method::Rec1))
}

/// Strip sums `sum_l s[start + l]` for each strip start `1, k+1, ...`.
fn strip_sums(sums: &[usize], k: usize) -> Vec<usize> {
    sums.chunks(k).map(|c| c.iter().sum()).collect()
}

/// Step 1 of the `nu = 1` algorithm: a block occupancy meeting the strip
/// sums, or `None`.
pub fn block_occupancy(inst: &RecInstance) -> Result<Option<BlockOccupancy>> {
    inst.validate()?;
    let k = inst.k;
    let (bm, bn) = (inst.m / k, inst.n / k);
    let forbidden = (0..inst.block_values.len())
        .filter(|&idx| inst.block_values[idx] == 0)
        .map(|idx| (idx % bm + 1, idx / bm + 1));
    let tp = TransportProblem::new(
        bm,
        bn,
        strip_sums(&inst.row_sums, k),
        strip_sums(&inst.col_sums, k),
    )
    .forbid(forbidden);
    Ok(solve_transport(&tp)?.map(|eta| BlockOccupancy {
        eta: eta.bits().to_vec(),
    }))
}

pub fn solve_rec_k10(inst: &RecInstance) -> Result<SolveResult> {
    require(inst, Class::K10, Method::K10)?;
    let Some(occupancy) = block_occupancy(inst)? else {
        return Ok(SolveResult::from_image(None, Method::K10));
    };
    let selected = occupancy.selected(inst);
    let dr1 = DR1Instance::from_full_sums(
        inst.k,
        inst.m,
        inst.n,
        selected,
        &inst.row_sums,
        &inst.col_sums,
    )?;
    if !dr1_feasible(&dr1) {
        return Err(Error::Contract(
            "block occupancy does not yield a feasible one-per-block instance".into(),
        ));
    }
    let x = dr1_construct(&dr1)?;
    // Strips without selected blocks have total 0, so their rows and
    // columns must all be 0.
    if x.row_sums() != inst.row_sums || x.col_sums() != inst.col_sums {
        return Err(Error::Contract(
            "sums outside the selected strips are not zero".into(),
        ));
    }
    Ok(SolveResult::from_image(Some(x), Method::K10))
}

/// Groups of the `nu >= k, t = 2` model: one per block row, capped at
/// `min(1, v)`.
pub fn block_row_groups(inst: &RecInstance) -> Vec<CellGroup> {
    let k = inst.k;
    inst.corners()
        .into_iter()
        .zip(&inst.block_values)
        .flat_map(|((i, j), &v)| {
            (0..k).map(move |l| CellGroup::new((i..i + k).map(|p| (p, j + l)), v.min(1)))
        })
        .collect()
}

pub fn solve_rec_kv2(inst: &RecInstance) -> Result<SolveResult> {
    require(inst, Class::Kv2, Method::Kv2)?;
    let mut tp =
        TransportProblem::new(inst.m, inst.n, inst.row_sums.clone(), inst.col_sums.clone());
    tp.groups = block_row_groups(inst);
    Ok(SolveResult::from_image(solve_transport(&tp)?, Method::Kv2))
}

pub fn solve_oracle(inst: &RecInstance, limits: OracleLimits) -> Result<SolveResult> {
    let status = match oracle_solve(inst, limits)? {
        OracleOutcome::Feasible(x) => SolveStatus::Feasible(x),
        OracleOutcome::Infeasible => SolveStatus::Infeasible,
        OracleOutcome::Limit => SolveStatus::OracleLimit,
    };
    Ok(SolveResult::new(status, Method::Oracle))
}

/// Solves with the requested method (or the class-appropriate one for
/// `Auto`) and re-verifies any returned image.
pub fn solve(inst: &RecInstance, method: Method, limits: OracleLimits) -> Result<SolveResult> {
    inst.validate()?;
    let method = match (method, classify(inst)) {
        (Method::Auto, Class::Rec1) => Method::Rec1,
        (Method::Auto, Class::K10) => Method::K10,
        (Method::Auto, Class::Kv2) => Method::Kv2,
        (Method::Auto, Class::Unknown) => Method::Oracle,
        (m, _) => m,
    };
    let result = match method {
        Method::Rec1 => solve_rec1(inst)?,
        Method::K10 => solve_rec_k10(inst)?,
        Method::Kv2 => solve_rec_kv2(inst)?,
        Method::Oracle => solve_oracle(inst, limits)?,
        Method::Auto => unreachable!(),
    };
    if let Some(x) = result.image() {
        let report = verify_rec(inst, x)?;
        if !report.is_feasible() {
            return Err(Error::Contract(format!(
                "{method} returned an image with violations:\n{report}"
            )));
        }
    }
    Ok(result)
}
