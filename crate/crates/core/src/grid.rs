//! Grid geometry: images, corner points, blocks and windows, strips,
//! patterns and the two instance records.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A grid position `(p, q)`: column `p`, row `q`, both 1-based.
pub type Cell = (usize, usize);

/// Largest block side for which patterns are enumerated explicitly.
pub const MAX_ENUM_K: usize = 4;

/// A 0/1 image on `[m] x [n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryImage {
    m: usize,
    n: usize,
    bits: Vec<bool>,
}

impl BinaryImage {
    /// All-zero image with `m` columns and `n` rows.
    ///
    /// Panics if either extent is zero.
    pub fn zeros(m: usize, n: usize) -> Self {
        assert!(m > 0 && n > 0, "image extents must be positive");
        BinaryImage {
            m,
            n,
            bits: vec![false; m * n],
        }
    }

    pub fn from_cells(m: usize, n: usize, cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut x = Self::zeros(m, n);
        for (p, q) in cells {
            x.set(p, q, true);
        }
        x
    }

    /// Builds an image from raw bits in row-major order, row 1 first.
    pub fn from_bits(m: usize, n: usize, bits: Vec<bool>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::input("image extents must be positive"));
        }
        if bits.len() != m * n {
            return Err(Error::input(format!(
                "expected {} bits for a {m}x{n} image, got {}",
                m * n,
                bits.len()
            )));
        }
        Ok(BinaryImage { m, n, bits })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw bits in row-major order, row 1 first.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    #[inline]
    fn index(&self, p: usize, q: usize) -> usize {
        assert!(
            (1..=self.m).contains(&p) && (1..=self.n).contains(&q),
            "cell ({p},{q}) outside {}x{} grid",
            self.m,
            self.n
        );
        (q - 1) * self.m + (p - 1)
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> bool {
        self.bits[self.index(p, q)]
    }

    #[inline]
    pub fn set(&mut self, p: usize, q: usize, value: bool) {
        let idx = self.index(p, q);
        self.bits[idx] = value;
    }

    pub fn contains(&self, (p, q): Cell) -> bool {
        (1..=self.m).contains(&p) && (1..=self.n).contains(&q)
    }

    /// Cells holding a 1, in `(q, p)` order.
    pub fn ones(&self) -> impl Iterator<Item = Cell> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(idx, _)| (idx % self.m + 1, idx / self.m + 1))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// `r_1..r_n`.
    pub fn row_sums(&self) -> Vec<usize> {
        self.bits
            .chunks(self.m)
            .map(|row| row.iter().filter(|&&b| b).count())
            .collect()
    }

    /// `c_1..c_m`.
    pub fn col_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.m];
        for row in self.bits.chunks(self.m) {
            for (p, &b) in row.iter().enumerate() {
                sums[p] += b as usize;
            }
        }
        sums
    }

    /// Number of ones in `W_k(i, j)`; cells outside the grid count as 0.
    pub fn window_sum(&self, i: usize, j: usize, k: usize) -> usize {
        window_cells(i, j, k)
            .into_iter()
            .filter(|&c| self.contains(c) && self.get(c.0, c.1))
            .count()
    }

    pub fn complement(&self) -> Self {
        BinaryImage {
            m: self.m,
            n: self.n,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Debug for BinaryImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryImage {}x{}", self.m, self.n)?;
        for q in (1..=self.n).rev() {
            let line: String = (1..=self.m)
                .map(|p| if self.get(p, q) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Lower-left corner points `C(m, n, k)`, ordered by `(j, i)`.
pub fn corner_points(m: usize, n: usize, k: usize) -> Result<Vec<Cell>> {
    check_divisible(m, n, k)?;
    Ok((1..=n)
        .step_by(k)
        .flat_map(|j| (1..=m).step_by(k).map(move |i| (i, j)))
        .collect())
}

pub(crate) fn check_divisible(m: usize, n: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::input("block side k must be positive"));
    }
    if m == 0 || n == 0 {
        return Err(Error::input("grid extents must be positive"));
    }
    if !m.is_multiple_of(k) || !n.is_multiple_of(k) {
        return Err(Error::input(format!(
            "grid {m}x{n} is not divisible by block side {k}"
        )));
    }
    Ok(())
}

/// The `k*k` cells of the square anchored at `(i, j)`, row by row.
pub fn window_cells(i: usize, j: usize, k: usize) -> Vec<Cell> {
    (0..k)
        .flat_map(|b| (0..k).map(move |a| (i + a, j + b)))
        .collect()
}

/// Set of offsets inside a `k x k` square; `(a, b)` is column offset `a`
/// and row offset `b`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    offsets: BTreeSet<(usize, usize)>,
}

impl Pattern {
    pub fn new(offsets: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Pattern {
            offsets: offsets.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The full square `[k-1]_0^2`.
    pub fn full(k: usize) -> Self {
        Self::new((0..k).flat_map(|b| (0..k).map(move |a| (a, b))))
    }

    pub fn offsets(&self) -> &BTreeSet<(usize, usize)> {
        &self.offsets
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn contains(&self, offset: (usize, usize)) -> bool {
        self.offsets.contains(&offset)
    }

    /// Number of offsets in window row `b`.
    pub fn row_count(&self, b: usize) -> usize {
        self.offsets.iter().filter(|o| o.1 == b).count()
    }

    pub fn fits(&self, k: usize) -> bool {
        self.offsets.iter().all(|&(a, b)| a < k && b < k)
    }

    /// Complement within `[k-1]_0^2`.
    pub fn complement(&self, k: usize) -> Self {
        Self::new(
            (0..k)
                .flat_map(|b| (0..k).map(move |a| (a, b)))
                .filter(|o| !self.offsets.contains(o)),
        )
    }

    /// Bit `b * k + a` set for each offset `(a, b)`.
    pub fn to_mask(&self, k: usize) -> u32 {
        debug_assert!(k <= MAX_ENUM_K && self.fits(k));
        self.offsets
            .iter()
            .fold(0, |mask, &(a, b)| mask | 1 << (b * k + a))
    }

    pub fn from_mask(mask: u32, k: usize) -> Self {
        Self::new(
            (0..k * k)
                .filter(|bit| mask >> bit & 1 == 1)
                .map(|bit| (bit % k, bit / k)),
        )
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.offsets.iter()).finish()
    }
}

/// The admissible family `P(k, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternClass {
    pub k: usize,
    pub t: u8,
}

impl PatternClass {
    pub fn new(k: usize, t: u8) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("block side k must be positive"));
        }
        match t {
            0..=2 => Ok(PatternClass { k, t }),
            3 if k >= 2 => Ok(PatternClass { k, t }),
            3 => Err(Error::UnsupportedClass {
                t,
                msg: "P(k,3) requires k >= 2".into(),
            }),
            _ => Err(Error::UnsupportedClass {
                t,
                msg: "pattern class must be in 0..=3".into(),
            }),
        }
    }
}

/// `pat_k(x, i, j)`: offsets of the ones inside `W_k(i, j)`.
pub fn pattern_of(x: &BinaryImage, i: usize, j: usize, k: usize) -> Result<Pattern> {
    if i == 0 || j == 0 || i + k - 1 > x.m() || j + k - 1 > x.n() {
        return Err(Error::input(format!(
            "window ({i},{j}) of side {k} exceeds {}x{} grid",
            x.m(),
            x.n()
        )));
    }
    Ok(Pattern::new(
        window_cells(i, j, k)
            .into_iter()
            .filter(|&(p, q)| x.get(p, q))
            .map(|(p, q)| (p - i, q - j)),
    ))
}

/// Membership of `pattern` in `P(k, t)`.
///
/// `P(k, 1)` also admits the empty block.
pub fn pattern_member(pattern: &Pattern, cls: PatternClass) -> Result<bool> {
    let PatternClass { k, t } = PatternClass::new(cls.k, cls.t)?;
    if !pattern.fits(k) {
        return Err(Error::input(format!(
            "pattern {pattern:?} does not fit a {k}x{k} square"
        )));
    }
    Ok(match t {
        0 => true,
        1 => {
            pattern.is_empty()
                || (pattern.len() == 1
                    && (pattern.contains((0, 0)) || pattern.contains((k - 1, k - 1))))
        }
        2 => (0..k).all(|b| pattern.row_count(b) <= 1),
        3 => (0..k).all(|b| pattern.row_count(b) + 1 >= k),
        _ => unreachable!(),
    })
}

/// All members of `P(k, t)` in ascending mask order. Requires `k <= 4`.
pub fn pattern_enumerate(cls: PatternClass) -> Result<Vec<Pattern>> {
    Ok(pattern_masks(cls)?
        .into_iter()
        .map(|mask| Pattern::from_mask(mask, cls.k))
        .collect())
}

pub(crate) fn pattern_masks(cls: PatternClass) -> Result<Vec<u32>> {
    let cls = PatternClass::new(cls.k, cls.t)?;
    if cls.k > MAX_ENUM_K {
        return Err(Error::Resource(format!(
            "pattern enumeration needs k <= {MAX_ENUM_K}, got {}",
            cls.k
        )));
    }
    let k = cls.k;
    let mut out = Vec::new();
    for mask in 0u32..(1 << (k * k)) {
        if pattern_member(&Pattern::from_mask(mask, k), cls)? {
            out.push(mask);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Vertical,
    Horizontal,
}

/// `Vertical`: `sigma_i(j)`, the selected corners in column strip `i` up to
/// row `j`. `Horizontal`: `rho_j(i)`, the selected corners in row strip `j`
/// up to column `i`.
pub fn strip_rank(selected: &BTreeSet<Cell>, axis: Axis, i: usize, j: usize) -> usize {
    selected
        .iter()
        .filter(|&&(a, b)| match axis {
            Axis::Vertical => a == i && b <= j,
            Axis::Horizontal => b == j && a <= i,
        })
        .count()
}

/// `G(I)`, `Pi_x(I)`, `Pi_y(I)`.
pub fn region_and_projections(
    selected: &BTreeSet<Cell>,
    k: usize,
) -> (BTreeSet<Cell>, BTreeSet<usize>, BTreeSet<usize>) {
    let region = selected
        .iter()
        .flat_map(|&(i, j)| window_cells(i, j, k))
        .collect();
    let xs = selected.iter().map(|c| c.0).collect();
    let ys = selected.iter().map(|c| c.1).collect();
    (region, xs, ys)
}

/// An instance of the block-constrained reconstruction problem
/// `Rec(k, nu, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecInstance {
    pub k: usize,
    pub nu: usize,
    pub t: u8,
    pub m: usize,
    pub n: usize,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    /// One value per corner point, in corner order.
    pub block_values: Vec<usize>,
}

impl RecInstance {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        k: usize,
        nu: usize,
        t: u8,
        m: usize,
        n: usize,
        row_sums: Vec<usize>,
        col_sums: Vec<usize>,
        block_values: Vec<usize>,
    ) -> Result<Self> {
        let inst = RecInstance {
            k,
            nu,
            t,
            m,
            n,
            row_sums,
            col_sums,
            block_values,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.nu == 0 {
            return Err(Error::input("nu must be positive"));
        }
        if self.t > 2 {
            return Err(Error::UnsupportedClass {
                t: self.t,
                msg: "Rec instances use t in 0..=2".into(),
            });
        }
        check_divisible(self.m, self.n, self.k)?;
        check_sums(self.m, self.n, &self.row_sums, &self.col_sums)?;
        let blocks = (self.m / self.k) * (self.n / self.k);
        if self.block_values.len() != blocks {
            return Err(Error::input(format!(
                "expected {blocks} block values, got {}",
                self.block_values.len()
            )));
        }
        if let Some((idx, v)) = self
            .block_values
            .iter()
            .enumerate()
            .find(|(_, &v)| v != 0 && v != self.nu)
        {
            let (i, j) = self.corner_at(idx);
            return Err(Error::input(format!(
                "block value v({i},{j}) = {v} is not in {{0, {}}}",
                self.nu
            )));
        }
        Ok(())
    }

    pub fn pattern_class(&self) -> PatternClass {
        PatternClass {
            k: self.k,
            t: self.t,
        }
    }

    pub fn corners(&self) -> Vec<Cell> {
        corner_points(self.m, self.n, self.k).expect("validated dimensions")
    }

    /// Position of corner `(i, j)` in corner order.
    pub fn block_index(&self, i: usize, j: usize) -> usize {
        debug_assert!((i - 1).is_multiple_of(self.k) && (j - 1).is_multiple_of(self.k));
        ((j - 1) / self.k) * (self.m / self.k) + (i - 1) / self.k
    }

    pub fn corner_at(&self, idx: usize) -> Cell {
        let per_row = self.m / self.k;
        ((idx % per_row) * self.k + 1, (idx / per_row) * self.k + 1)
    }

    pub fn block_value(&self, i: usize, j: usize) -> usize {
        self.block_values[self.block_index(i, j)]
    }

    /// The same instance with the given witness's sums.
    pub fn with_sums_of(mut self, x: &BinaryImage) -> Self {
        self.row_sums = x.row_sums();
        self.col_sums = x.col_sums();
        self
    }
}

pub(crate) fn check_sums(m: usize, n: usize, rows: &[usize], cols: &[usize]) -> Result<()> {
    if rows.len() != n {
        return Err(Error::input(format!(
            "expected {n} row sums, got {}",
            rows.len()
        )));
    }
    if cols.len() != m {
        return Err(Error::input(format!(
            "expected {m} column sums, got {}",
            cols.len()
        )));
    }
    Ok(())
}

/// Comparison used by a window measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn holds(self, actual: usize, value: usize) -> bool {
        match self {
            Relation::Le => actual <= value,
            Relation::Ge => actual >= value,
            Relation::Eq => actual == value,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "<=" => Ok(Relation::Le),
            ">=" => Ok(Relation::Ge),
            "=" => Ok(Relation::Eq),
            other => Err(Error::input(format!("unknown relation {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindowConstraint {
    pub anchor: Cell,
    pub rel: Relation,
    pub value: usize,
}

impl WindowConstraint {
    pub fn new(anchor: Cell, rel: Relation, value: usize) -> Self {
        WindowConstraint { anchor, rel, value }
    }
}

/// An instance of the window-constrained problem. The listed anchors form
/// the anchor set; windows may overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WRecInstance {
    pub k: usize,
    pub t: u8,
    pub m: usize,
    pub n: usize,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    pub windows: Vec<WindowConstraint>,
}

impl WRecInstance {
    pub fn new(
        k: usize,
        t: u8,
        m: usize,
        n: usize,
        row_sums: Vec<usize>,
        col_sums: Vec<usize>,
        windows: Vec<WindowConstraint>,
    ) -> Result<Self> {
        let inst = WRecInstance {
            k,
            t,
            m,
            n,
            row_sums,
            col_sums,
            windows,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        PatternClass::new(self.k, self.t)?;
        check_divisible(self.m, self.n, self.k)?;
        check_sums(self.m, self.n, &self.row_sums, &self.col_sums)?;
        let mut seen = HashSet::new();
        for w in &self.windows {
            let (i, j) = w.anchor;
            if i == 0 || j == 0 || i + self.k - 1 > self.m || j + self.k - 1 > self.n {
                return Err(Error::input(format!(
                    "window at ({i},{j}) of side {} exceeds {}x{} grid",
                    self.k, self.m, self.n
                )));
            }
            if !seen.insert(w.anchor) {
                return Err(Error::input(format!("duplicate window anchor ({i},{j})")));
            }
        }
        Ok(())
    }

    pub fn pattern_class(&self) -> PatternClass {
        PatternClass {
            k: self.k,
            t: self.t,
        }
    }

    pub fn anchors(&self) -> impl Iterator<Item = Cell> + '_ {
        self.windows.iter().map(|w| w.anchor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corners_of_six_block_grid() {
        let c = corner_points(6, 4, 2).unwrap();
        assert_eq!(c, vec![(1, 1), (3, 1), (5, 1), (1, 3), (3, 3), (5, 3)]);
    }

    #[test]
    fn corners_degenerate() {
        assert_eq!(corner_points(2, 2, 2).unwrap(), vec![(1, 1)]);
        assert_eq!(corner_points(3, 3, 1).unwrap().len(), 9);
        assert!(matches!(corner_points(5, 4, 2), Err(Error::Input(_))));
    }

    #[test]
    fn window_cell_lists() {
        let w: BTreeSet<_> = window_cells(1, 1, 2).into_iter().collect();
        assert_eq!(w, BTreeSet::from([(1, 1), (2, 1), (1, 2), (2, 2)]));
        let w: BTreeSet<_> = window_cells(3, 1, 2).into_iter().collect();
        assert_eq!(w, BTreeSet::from([(3, 1), (4, 1), (3, 2), (4, 2)]));
        assert_eq!(window_cells(7, 5, 1), vec![(7, 5)]);
    }

    #[test]
    fn pattern_of_block() {
        let x = BinaryImage::from_cells(4, 2, [(3, 2), (4, 1)]);
        assert_eq!(pattern_of(&x, 3, 1, 2).unwrap(), Pattern::new([(0, 1), (1, 0)]));
        assert!(pattern_of(&BinaryImage::zeros(4, 2), 1, 1, 2).unwrap().is_empty());
        let full = BinaryImage::from_cells(2, 2, [(1, 1), (2, 1), (1, 2), (2, 2)]);
        assert_eq!(pattern_of(&full, 1, 1, 2).unwrap(), Pattern::full(2));
        assert!(pattern_of(&x, 4, 1, 2).is_err());
    }

    #[test]
    fn membership_examples() {
        let c = |t| PatternClass::new(2, t).unwrap();
        assert!(pattern_member(&Pattern::empty(), c(1)).unwrap());
        assert!(!pattern_member(&Pattern::new([(0, 0), (1, 0)]), c(2)).unwrap());
        assert!(pattern_member(&Pattern::new([(0, 0), (0, 1)]), c(3)).unwrap());
        assert!(pattern_member(&Pattern::new([(1, 1)]), c(1)).unwrap());
        assert!(!pattern_member(&Pattern::new([(0, 0), (1, 1)]), c(1)).unwrap());
        assert!(!pattern_member(&Pattern::new([(1, 0)]), c(1)).unwrap());
    }

    #[test]
    fn class_three_needs_k_two() {
        assert!(matches!(
            PatternClass::new(1, 3),
            Err(Error::UnsupportedClass { t: 3, .. })
        ));
        let bad = PatternClass { k: 1, t: 3 };
        assert!(pattern_member(&Pattern::empty(), bad).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |k, t| pattern_enumerate(PatternClass::new(k, t).unwrap()).unwrap().len();
        assert_eq!(count(2, 2), 9);
        assert_eq!(count(2, 0), 16);
        assert_eq!(count(2, 1), 3);
        assert_eq!(count(2, 3), 9);
        assert_eq!(count(3, 2), 64);
        assert_eq!(count(3, 3), 64);
        assert_eq!(count(1, 1), 2);
        assert!(matches!(
            pattern_enumerate(PatternClass::new(5, 0).unwrap()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn class_two_and_three_are_complements() {
        for k in 2..=3 {
            let two: BTreeSet<_> = pattern_enumerate(PatternClass::new(k, 2).unwrap())
                .unwrap()
                .into_iter()
                .map(|p| p.complement(k))
                .collect();
            let three: BTreeSet<_> = pattern_enumerate(PatternClass::new(k, 3).unwrap())
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(two, three);
        }
    }

    #[test]
    fn strip_ranks() {
        let v = BTreeSet::from([(1, 1), (1, 3)]);
        assert_eq!(strip_rank(&v, Axis::Vertical, 1, 1), 1);
        assert_eq!(strip_rank(&v, Axis::Vertical, 1, 3), 2);
        let h = BTreeSet::from([(1, 1), (3, 1), (5, 1)]);
        assert_eq!(strip_rank(&h, Axis::Horizontal, 5, 1), 3);
        let e = BTreeSet::new();
        assert_eq!(strip_rank(&e, Axis::Horizontal, 5, 1), 0);
        assert_eq!(strip_rank(&e, Axis::Vertical, 1, 5), 0);
    }

    #[test]
    fn regions() {
        let (g, xs, ys) = region_and_projections(&BTreeSet::from([(1, 1)]), 2);
        assert_eq!(g.len(), 4);
        assert_eq!(xs, BTreeSet::from([1]));
        assert_eq!(ys, BTreeSet::from([1]));
        let (g, xs, ys) = region_and_projections(&BTreeSet::from([(1, 1), (3, 1)]), 2);
        assert_eq!(g.len(), 8);
        assert_eq!(xs, BTreeSet::from([1, 3]));
        assert_eq!(ys, BTreeSet::from([1]));
        let (g, xs, ys) = region_and_projections(&BTreeSet::new(), 2);
        assert!(g.is_empty() && xs.is_empty() && ys.is_empty());
    }

    #[test]
    fn rec_instance_validation() {
        assert!(RecInstance::new(2, 1, 0, 2, 2, vec![1, 0], vec![0, 1], vec![1]).is_ok());
        assert!(RecInstance::new(2, 1, 0, 2, 2, vec![1, 0], vec![0, 1], vec![2]).is_err());
        assert!(RecInstance::new(2, 1, 0, 3, 2, vec![1, 0], vec![0, 1, 0], vec![1]).is_err());
        assert!(RecInstance::new(2, 1, 3, 2, 2, vec![1, 0], vec![0, 1], vec![1]).is_err());
        let inst = RecInstance::new(2, 1, 0, 6, 4, vec![0; 4], vec![0; 6], vec![1; 6]).unwrap();
        for (idx, c) in inst.corners().into_iter().enumerate() {
            assert_eq!(inst.block_index(c.0, c.1), idx);
            assert_eq!(inst.corner_at(idx), c);
        }
    }

    #[test]
    fn wrec_window_range() {
        let w = |a| vec![WindowConstraint::new(a, Relation::Eq, 1)];
        assert!(WRecInstance::new(2, 0, 4, 2, vec![0; 2], vec![0; 4], w((3, 1))).is_ok());
        assert!(WRecInstance::new(2, 0, 2, 2, vec![0; 2], vec![0; 2], w((2, 1))).is_err());
    }

    #[test]
    fn image_sums() {
        let x = BinaryImage::from_cells(3, 2, [(1, 1), (3, 1), (3, 2)]);
        assert_eq!(x.row_sums(), vec![2, 1]);
        assert_eq!(x.col_sums(), vec![1, 0, 2]);
        assert_eq!(x.ones().collect::<Vec<_>>(), vec![(1, 1), (3, 1), (3, 2)]);
        assert_eq!(x.window_sum(2, 1, 2), 2);
    }
}
