//! Placing exactly one 1 in each selected block so that prescribed row and
//! column sums over the strips of those blocks are met.
//!
//! Feasibility is a per-strip counting criterion: the row sums of every
//! horizontal strip must add up to the number of selected blocks in it, and
//! likewise for columns. A solution is read off directly by assigning the
//! blocks of a strip, in order, to its rows (columns) by cumulative sums.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::grid::{check_divisible, region_and_projections, BinaryImage, Cell};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DR1Instance {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    /// Selected corner points.
    pub selected: BTreeSet<Cell>,
    /// Sums of the rows `j + l` of every touched horizontal strip.
    pub row_sums: BTreeMap<usize, usize>,
    /// Sums of the columns `i + l` of every touched vertical strip.
    pub col_sums: BTreeMap<usize, usize>,
}

impl DR1Instance {
    pub fn new(
        k: usize,
        m: usize,
        n: usize,
        selected: BTreeSet<Cell>,
        row_sums: BTreeMap<usize, usize>,
        col_sums: BTreeMap<usize, usize>,
    ) -> Result<Self> {
        let inst = DR1Instance {
            k,
            m,
            n,
            selected,
            row_sums,
            col_sums,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Restricts full-length sums `r_1..r_n`, `c_1..c_m` to the strips
    /// touched by `selected`.
    pub fn from_full_sums(
        k: usize,
        m: usize,
        n: usize,
        selected: BTreeSet<Cell>,
        rows: &[usize],
        cols: &[usize],
    ) -> Result<Self> {
        if rows.len() != n || cols.len() != m {
            return Err(Error::input("sum vector lengths do not match the grid"));
        }
        let (_, xs, ys) = region_and_projections(&selected, k);
        let row_sums = ys
            .iter()
            .flat_map(|&j| (j..j + k).map(|q| (q, rows.get(q - 1).copied().unwrap_or(0))))
            .collect();
        let col_sums = xs
            .iter()
            .flat_map(|&i| (i..i + k).map(|p| (p, cols.get(p - 1).copied().unwrap_or(0))))
            .collect();
        Self::new(k, m, n, selected, row_sums, col_sums)
    }

    pub fn validate(&self) -> Result<()> {
        check_divisible(self.m, self.n, self.k)?;
        let k = self.k;
        for &(i, j) in &self.selected {
            if i == 0 || j == 0 || (i - 1) % k != 0 || (j - 1) % k != 0 || i > self.m || j > self.n
            {
                return Err(Error::input(format!("({i},{j}) is not a corner point")));
            }
        }
        let (_, xs, ys) = region_and_projections(&self.selected, k);
        let want_rows: BTreeSet<usize> = ys.iter().flat_map(|&j| j..j + k).collect();
        let want_cols: BTreeSet<usize> = xs.iter().flat_map(|&i| i..i + k).collect();
        if !self.row_sums.keys().copied().eq(want_rows.iter().copied()) {
            return Err(Error::input(
                "row sums must cover exactly the rows of the selected strips",
            ));
        }
        if !self.col_sums.keys().copied().eq(want_cols.iter().copied()) {
            return Err(Error::input(
                "column sums must cover exactly the columns of the selected strips",
            ));
        }
        Ok(())
    }

    /// Selected corners in `(j, i)` order.
    fn ordered(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.selected.iter().copied().collect();
        v.sort_by_key(|&(i, j)| (j, i));
        v
    }

    fn strip_sum(sums: &BTreeMap<usize, usize>, start: usize, k: usize) -> usize {
        (start..start + k).map(|x| sums[&x]).sum()
    }
}

/// Selected-block totals per vertical strip (`sigma_i(n)`) and per
/// horizontal strip (`rho_j(m)`).
fn strip_totals(selected: &BTreeSet<Cell>) -> (HashMap<usize, usize>, HashMap<usize, usize>) {
    let mut per_col = HashMap::new();
    let mut per_row = HashMap::new();
    for &(i, j) in selected {
        *per_col.entry(i).or_insert(0) += 1;
        *per_row.entry(j).or_insert(0) += 1;
    }
    (per_col, per_row)
}

pub fn dr1_feasible(inst: &DR1Instance) -> bool {
    let (per_col, per_row) = strip_totals(&inst.selected);
    let k = inst.k;
    inst.selected.iter().all(|&(i, j)| {
        DR1Instance::strip_sum(&inst.row_sums, j, k) == per_row[&j]
            && DR1Instance::strip_sum(&inst.col_sums, i, k) == per_col[&i]
    })
}

/// Smallest `l` in `0..k` with `rank <= sums[start] + ... + sums[start + l]`.
fn first_reaching(sums: &BTreeMap<usize, usize>, start: usize, k: usize, rank: usize) -> Option<usize> {
    let mut acc = 0;
    (0..k).find(|&l| {
        acc += sums[&(start + l)];
        rank <= acc
    })
}

/// The one-per-block solution; fails with a contract error on infeasible
/// instances.
pub fn dr1_construct(inst: &DR1Instance) -> Result<BinaryImage> {
    inst.validate()?;
    if !dr1_feasible(inst) {
        return Err(Error::Contract(
            "dr1_construct called on an infeasible instance".into(),
        ));
    }
    let k = inst.k;
    let mut x = BinaryImage::zeros(inst.m, inst.n);
    // Ranks grow along corner order: sigma_i(j) counts earlier blocks of
    // column strip i, rho_j(i) earlier blocks of row strip j.
    let mut sigma: HashMap<usize, usize> = HashMap::new();
    let mut rho: HashMap<usize, usize> = HashMap::new();
    for (i, j) in inst.ordered() {
        let s = sigma.entry(i).or_insert(0);
        *s += 1;
        let r = rho.entry(j).or_insert(0);
        *r += 1;
        let da = first_reaching(&inst.col_sums, i, k, *s)
            .ok_or_else(|| Error::Contract(format!("no column for block ({i},{j})")))?;
        let db = first_reaching(&inst.row_sums, j, k, *r)
            .ok_or_else(|| Error::Contract(format!("no row for block ({i},{j})")))?;
        x.set(i + da, j + db, true);
    }
    Ok(x)
}

/// Checks `x` against the DR(1) system: support inside the selected
/// blocks, one 1 per selected block, and exact strip-restricted sums.
pub fn dr1_satisfies(inst: &DR1Instance, x: &BinaryImage) -> bool {
    if x.m() != inst.m || x.n() != inst.n {
        return false;
    }
    let (region, _, _) = region_and_projections(&inst.selected, inst.k);
    if x.ones().any(|c| !region.contains(&c)) {
        return false;
    }
    if inst
        .selected
        .iter()
        .any(|&(i, j)| x.window_sum(i, j, inst.k) != 1)
    {
        return false;
    }
    let rows = x.row_sums();
    let cols = x.col_sums();
    inst.row_sums.iter().all(|(&q, &r)| rows[q - 1] == r)
        && inst.col_sums.iter().all(|(&p, &c)| cols[p - 1] == c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(m: usize, n: usize, sel: &[Cell], r: &[usize], c: &[usize]) -> DR1Instance {
        DR1Instance::from_full_sums(2, m, n, sel.iter().copied().collect(), r, c).unwrap()
    }

    #[test]
    fn criterion() {
        assert!(dr1_feasible(&inst(2, 2, &[(1, 1)], &[1, 0], &[1, 0])));
        assert!(!dr1_feasible(&inst(2, 2, &[(1, 1)], &[2, 0], &[1, 0])));
        assert!(dr1_feasible(&inst(2, 2, &[], &[0, 0], &[0, 0])));
    }

    #[test]
    fn upper_right_placement() {
        let d = inst(2, 2, &[(1, 1)], &[0, 1], &[0, 1]);
        assert_eq!(dr1_construct(&d).unwrap(), BinaryImage::from_cells(2, 2, [(2, 2)]));
    }

    #[test]
    fn stacked_blocks_in_one_column_strip() {
        let d = inst(2, 4, &[(1, 1), (1, 3)], &[1, 0, 0, 1], &[1, 1]);
        let x = dr1_construct(&d).unwrap();
        assert_eq!(x, BinaryImage::from_cells(2, 4, [(1, 1), (2, 4)]));
        assert!(dr1_satisfies(&d, &x));
    }

    #[test]
    fn side_by_side_blocks_share_a_row() {
        let d = inst(4, 2, &[(1, 1), (3, 1)], &[2, 0], &[1, 0, 1, 0]);
        let x = dr1_construct(&d).unwrap();
        assert_eq!(x, BinaryImage::from_cells(4, 2, [(1, 1), (3, 1)]));
    }

    #[test]
    fn construct_rejects_infeasible() {
        let d = inst(2, 2, &[(1, 1)], &[2, 0], &[1, 0]);
        assert!(matches!(dr1_construct(&d), Err(Error::Contract(_))));
    }

    #[test]
    fn larger_blocks_reach_far_columns() {
        let sel: BTreeSet<Cell> = [(1, 1), (1, 4), (1, 7)].into_iter().collect();
        let d = DR1Instance::from_full_sums(
            3,
            3,
            9,
            sel,
            &[0, 0, 1, 0, 1, 0, 1, 0, 0],
            &[0, 0, 3],
        )
        .unwrap();
        let x = dr1_construct(&d).unwrap();
        assert_eq!(x, BinaryImage::from_cells(3, 9, [(3, 3), (3, 5), (3, 7)]));
        assert!(dr1_satisfies(&d, &x));
    }

    #[test]
    fn sums_must_cover_touched_strips() {
        let sel: BTreeSet<Cell> = [(1, 1)].into_iter().collect();
        let rows = BTreeMap::from([(1, 1)]);
        let cols = BTreeMap::from([(1, 1), (2, 0)]);
        assert!(DR1Instance::new(2, 2, 2, sel.clone(), rows, cols).is_err());
        let rows = BTreeMap::from([(1, 1), (2, 0)]);
        let cols = BTreeMap::from([(1, 1), (2, 0)]);
        assert!(DR1Instance::new(2, 2, 2, sel, rows, cols).is_ok());
        let off = [(2, 1)].into_iter().collect();
        assert!(DR1Instance::new(2, 4, 2, off, BTreeMap::new(), BTreeMap::new()).is_err());
    }
}
