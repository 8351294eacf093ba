//! Test-only brute-force oracles. These re-derive every constraint from
//! scratch and deliberately share no code with the library's checkers or
//! solvers beyond the plain data types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use tomo::dr1::DR1Instance;
use tomo::flow::{CellGroup, TransportProblem};
use tomo::reductions::ThreeColorInstance;
use tomo::{BinaryImage, Cell, RecInstance, Relation, WRecInstance, WindowConstraint};

/// Every image on `m x n`, in bit order.
pub fn all_images(m: usize, n: usize) -> impl Iterator<Item = BinaryImage> {
    let cells = m * n;
    assert!(cells <= 20, "too many cells to enumerate");
    (0u32..1 << cells).map(move |mask| {
        BinaryImage::from_bits(m, n, (0..cells).map(|b| mask >> b & 1 == 1).collect()).unwrap()
    })
}

fn cell(x: &BinaryImage, p: usize, q: usize) -> usize {
    x.bits()[(q - 1) * x.m() + (p - 1)] as usize
}

fn sums_match(x: &BinaryImage, rows: &[usize], cols: &[usize]) -> bool {
    (1..=x.n()).all(|q| (1..=x.m()).map(|p| cell(x, p, q)).sum::<usize>() == rows[q - 1])
        && (1..=x.m()).all(|p| (1..=x.n()).map(|q| cell(x, p, q)).sum::<usize>() == cols[p - 1])
}

/// Ones per row of the `k x k` window at `(i, j)`, bottom row first.
fn window_rows(x: &BinaryImage, i: usize, j: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|b| (0..k).map(|a| cell(x, i + a, j + b)).sum())
        .collect()
}

fn naive_pattern_ok(x: &BinaryImage, i: usize, j: usize, k: usize, t: u8) -> bool {
    let rows = window_rows(x, i, j, k);
    let total: usize = rows.iter().sum();
    match t {
        0 => true,
        1 => total == 0 || (total == 1 && (cell(x, i, j) == 1 || cell(x, i + k - 1, j + k - 1) == 1)),
        2 => rows.iter().all(|&r| r <= 1),
        3 => rows.iter().all(|&r| r + 1 >= k),
        _ => panic!("bad class"),
    }
}

pub fn naive_rec_ok(inst: &RecInstance, x: &BinaryImage) -> bool {
    if !sums_match(x, &inst.row_sums, &inst.col_sums) {
        return false;
    }
    let k = inst.k;
    let mut idx = 0;
    for j in (1..=inst.n).step_by(k) {
        for i in (1..=inst.m).step_by(k) {
            let ones: usize = window_rows(x, i, j, k).iter().sum();
            if ones > inst.block_values[idx] || !naive_pattern_ok(x, i, j, k, inst.t) {
                return false;
            }
            idx += 1;
        }
    }
    true
}

pub fn naive_wrec_ok(inst: &WRecInstance, x: &BinaryImage) -> bool {
    if !sums_match(x, &inst.row_sums, &inst.col_sums) {
        return false;
    }
    inst.windows.iter().all(|w| {
        let (i, j) = w.anchor;
        let ones: usize = window_rows(x, i, j, inst.k).iter().sum();
        let rel_ok = match w.rel {
            Relation::Le => ones <= w.value,
            Relation::Ge => ones >= w.value,
            Relation::Eq => ones == w.value,
        };
        rel_ok && naive_pattern_ok(x, i, j, inst.k, inst.t)
    })
}

pub fn brute_rec_solutions(inst: &RecInstance) -> Vec<BinaryImage> {
    all_images(inst.m, inst.n).filter(|x| naive_rec_ok(inst, x)).collect()
}

pub fn brute_wrec_solutions(inst: &WRecInstance) -> Vec<BinaryImage> {
    all_images(inst.m, inst.n).filter(|x| naive_wrec_ok(inst, x)).collect()
}

pub fn brute_transport_ok(tp: &TransportProblem, x: &BinaryImage) -> bool {
    sums_match(x, &tp.row_sums, &tp.col_sums)
        && tp.forbidden.iter().all(|&(p, q)| cell(x, p, q) == 0)
        && tp
            .groups
            .iter()
            .all(|g| g.cells.iter().map(|&(p, q)| cell(x, p, q)).sum::<usize>() <= g.cap)
}

/// Bitmask sweep over all `2^(mn)` images (bit `(q-1)*m + (p-1)`).
pub fn brute_transport_feasible(tp: &TransportProblem) -> bool {
    let (m, n) = (tp.m, tp.n);
    assert!(m * n <= 24);
    let bit = |(p, q): Cell| 1u32 << ((q - 1) * m + (p - 1));
    let row_masks: Vec<u32> = (1..=n).map(|q| (1..=m).map(|p| bit((p, q))).sum()).collect();
    let col_masks: Vec<u32> = (1..=m).map(|p| (1..=n).map(|q| bit((p, q))).sum()).collect();
    let forbidden: u32 = tp.forbidden.iter().map(|&c| bit(c)).sum();
    let groups: Vec<(u32, usize)> = tp
        .groups
        .iter()
        .map(|g| (g.cells.iter().map(|&c| bit(c)).sum(), g.cap))
        .collect();
    (0u32..1 << (m * n)).any(|x| {
        x & forbidden == 0
            && row_masks
                .iter()
                .zip(&tp.row_sums)
                .all(|(&r, &s)| (x & r).count_ones() as usize == s)
            && col_masks
                .iter()
                .zip(&tp.col_sums)
                .all(|(&c, &s)| (x & c).count_ones() as usize == s)
            && groups.iter().all(|&(g, cap)| (x & g).count_ones() as usize <= cap)
    })
}

/// A random transport problem: sums of a random image (optionally
/// nudged), random forbidden cells and random row-confined groups.
pub fn random_transport<R: Rng>(rng: &mut R, m: usize, n: usize) -> TransportProblem {
    let density = rng.gen_range(0.1..0.9);
    let x = BinaryImage::from_bits(m, n, (0..m * n).map(|_| rng.gen_bool(density)).collect())
        .unwrap();
    let mut tp = TransportProblem::new(m, n, x.row_sums(), x.col_sums());
    if rng.gen_bool(0.3) {
        let q = rng.gen_range(0..n);
        let p = rng.gen_range(0..m);
        tp.row_sums[q] = rng.gen_range(0..=m);
        tp.col_sums[p] = rng.gen_range(0..=n);
    }
    for q in 1..=n {
        for p in 1..=m {
            if rng.gen_bool(0.15) {
                tp.forbidden.insert((p, q));
            }
        }
    }
    for q in 1..=n {
        let mut p = 1;
        while p <= m {
            let len = rng.gen_range(1..=m + 1 - p);
            if rng.gen_bool(0.4) {
                let cap = rng.gen_range(0..=len);
                tp.groups.push(CellGroup::new((p..p + len).map(|p| (p, q)), cap));
            }
            p += len;
        }
    }
    tp
}

/// A random block instance whose sums come from a random image; block
/// values are random in `{0, nu}`, so it may or may not be feasible.
pub fn random_rec<R: Rng>(rng: &mut R, k: usize, nu: usize, t: u8, m: usize, n: usize) -> RecInstance {
    let density = rng.gen_range(0.05..0.6);
    let x = BinaryImage::from_bits(m, n, (0..m * n).map(|_| rng.gen_bool(density)).collect())
        .unwrap();
    let blocks = (m / k) * (n / k);
    let values = (0..blocks)
        .map(|_| if rng.gen_bool(0.75) { nu } else { 0 })
        .collect();
    RecInstance::new(k, nu, t, m, n, x.row_sums(), x.col_sums(), values).unwrap()
}

pub fn random_image<R: Rng>(rng: &mut R, m: usize, n: usize) -> BinaryImage {
    let density = rng.gen_range(0.0..1.0);
    BinaryImage::from_bits(m, n, (0..m * n).map(|_| rng.gen_bool(density)).collect()).unwrap()
}

/// Images as a sorted list of bit vectors, for set comparison.
pub fn as_set(images: &[BinaryImage]) -> Vec<Vec<bool>> {
    let mut out: Vec<Vec<bool>> = images.iter().map(|x| x.bits().to_vec()).collect();
    out.sort();
    out.dedup();
    out
}

/// Exhaustive search over one cell per selected block.
pub fn brute_dr1_feasible(inst: &DR1Instance) -> bool {
    let blocks: Vec<Cell> = inst.selected.iter().copied().collect();
    let mut rows = vec![0usize; inst.n + 1];
    let mut cols = vec![0usize; inst.m + 1];
    fn go(
        idx: usize,
        blocks: &[Cell],
        inst: &DR1Instance,
        rows: &mut Vec<usize>,
        cols: &mut Vec<usize>,
    ) -> bool {
        if idx == blocks.len() {
            return inst.row_sums.iter().all(|(&q, &r)| rows[q] == r)
                && inst.col_sums.iter().all(|(&p, &c)| cols[p] == c);
        }
        let (i, j) = blocks[idx];
        for b in 0..inst.k {
            for a in 0..inst.k {
                let (p, q) = (i + a, j + b);
                if rows[q] < inst.row_sums[&q] && cols[p] < inst.col_sums[&p] {
                    rows[q] += 1;
                    cols[p] += 1;
                    let found = go(idx + 1, blocks, inst, rows, cols);
                    rows[q] -= 1;
                    cols[p] -= 1;
                    if found {
                        return true;
                    }
                }
            }
        }
        false
    }
    go(0, &blocks, inst, &mut rows, &mut cols)
}

/// Plain enumeration of all 3^(mn) colorings.
pub fn brute_three_color_feasible(tc: &ThreeColorInstance) -> bool {
    let cells = tc.m * tc.n;
    let total = 3usize.pow(cells as u32);
    (0..total).any(|mut code| {
        let mut rows = [vec![0usize; tc.n], vec![0usize; tc.n]];
        let mut cols = [vec![0usize; tc.m], vec![0usize; tc.m]];
        for idx in 0..cells {
            let color = code % 3;
            code /= 3;
            if color > 0 {
                rows[color - 1][idx / tc.m] += 1;
                cols[color - 1][idx % tc.m] += 1;
            }
        }
        rows[0] == tc.r1 && rows[1] == tc.r2 && cols[0] == tc.c1 && cols[1] == tc.c2
    })
}

/// Nudges an instance; several of these keep the sum totals balanced so
/// that infeasibility is not detected by counting alone.
pub fn perturb<R: Rng>(inst: &RecInstance, rng: &mut R, kind: usize) -> RecInstance {
    let mut out = inst.clone();
    let (n, m) = (out.row_sums.len(), out.col_sums.len());
    match kind % 4 {
        0 => {
            let on_rows = rng.gen_bool(0.5);
            let v = if on_rows {
                &mut out.row_sums[rng.gen_range(0..n)]
            } else {
                &mut out.col_sums[rng.gen_range(0..m)]
            };
            if *v == 0 || rng.gen_bool(0.5) {
                *v += 1;
            } else {
                *v -= 1;
            }
        }
        1 => {
            out.row_sums[rng.gen_range(0..n)] += 1;
            out.col_sums[rng.gen_range(0..m)] += 1;
        }
        2 => {
            let from = rng.gen_range(0..n);
            let to = rng.gen_range(0..n);
            if out.row_sums[from] > 0 {
                out.row_sums[from] -= 1;
                out.row_sums[to] += 1;
            } else {
                out.row_sums[to] += 1;
                out.col_sums[rng.gen_range(0..m)] += 1;
            }
        }
        _ => {
            let idx = rng.gen_range(0..out.block_values.len());
            out.block_values[idx] = if out.block_values[idx] == 0 { out.nu } else { 0 };
        }
    }
    out
}

/// Random window instance; anchors may overlap unless `aligned`.
pub fn random_wrec<R: Rng>(
    rng: &mut R,
    k: usize,
    t: u8,
    m: usize,
    n: usize,
    aligned: bool,
    planted: bool,
) -> WRecInstance {
    let x = BinaryImage::from_bits(m, n, (0..m * n).map(|_| rng.gen_bool(0.4)).collect()).unwrap();
    let mut anchors: BTreeSet<Cell> = BTreeSet::new();
    let candidates: Vec<Cell> = if aligned {
        (1..=n)
            .step_by(k)
            .flat_map(|j| (1..=m).step_by(k).map(move |i| (i, j)))
            .collect()
    } else {
        (1..=n + 1 - k)
            .flat_map(|j| (1..=m + 1 - k).map(move |i| (i, j)))
            .collect()
    };
    for c in candidates {
        if rng.gen_bool(0.6) {
            anchors.insert(c);
        }
    }
    let windows = anchors
        .into_iter()
        .map(|(i, j)| {
            let actual = x.window_sum(i, j, k);
            let rel = match rng.gen_range(0..3) {
                0 => Relation::Le,
                1 => Relation::Ge,
                _ => Relation::Eq,
            };
            let value = if planted {
                match rel {
                    Relation::Le => rng.gen_range(actual..=k * k),
                    Relation::Ge => rng.gen_range(0..=actual),
                    Relation::Eq => actual,
                }
            } else {
                rng.gen_range(0..=k * k)
            };
            WindowConstraint::new((i, j), rel, value)
        })
        .collect();
    let (mut rows, mut cols) = (x.row_sums(), x.col_sums());
    if !planted && rng.gen_bool(0.5) {
        let q = rng.gen_range(0..n);
        let p = rng.gen_range(0..m);
        if rows[q] < m && cols[p] < n {
            rows[q] += 1;
            cols[p] += 1;
        }
    }
    WRecInstance::new(k, t, m, n, rows, cols, windows).unwrap()
}
