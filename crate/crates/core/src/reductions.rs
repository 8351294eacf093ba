//! Instance transformations with solution maps in both directions:
//!
//! * two-color-plus-blank tomography into `Rec(2, 1, 1)`,
//! * lifting a `k = 2` block instance to larger blocks by zero padding,
//! * color inversion of window instances,
//! * lifting `k = 2` window instances by zero or one padding.

use crate::error::{Error, Result};
use crate::grid::{pattern_of, BinaryImage, Pattern, RecInstance, Relation, WRecInstance, WindowConstraint};

/// Two disjoint binary images described by their per-color row and column
/// sums; the third color is blank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeColorInstance {
    pub m: usize,
    pub n: usize,
    pub r1: Vec<usize>,
    pub r2: Vec<usize>,
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
}

impl ThreeColorInstance {
    pub fn new(
        m: usize,
        n: usize,
        r1: Vec<usize>,
        r2: Vec<usize>,
        c1: Vec<usize>,
        c2: Vec<usize>,
    ) -> Result<Self> {
        let tc = ThreeColorInstance {
            m,
            n,
            r1,
            r2,
            c1,
            c2,
        };
        tc.validate()?;
        Ok(tc)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::input("grid extents must be positive"));
        }
        if self.r1.len() != self.n || self.r2.len() != self.n {
            return Err(Error::input(format!("expected {} row sums per color", self.n)));
        }
        if self.c1.len() != self.m || self.c2.len() != self.m {
            return Err(Error::input(format!("expected {} column sums per color", self.m)));
        }
        Ok(())
    }

    /// The instance whose sums are those of `sol`.
    pub fn from_solution(sol: &ThreeColorSolution) -> Self {
        ThreeColorInstance {
            m: sol.xi1.m(),
            n: sol.xi1.n(),
            r1: sol.xi1.row_sums(),
            r2: sol.xi2.row_sums(),
            c1: sol.xi1.col_sums(),
            c2: sol.xi2.col_sums(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeColorSolution {
    pub xi1: BinaryImage,
    pub xi2: BinaryImage,
}

impl ThreeColorSolution {
    pub fn disjoint(&self) -> bool {
        self.xi1.ones().all(|(p, q)| !self.xi2.get(p, q))
    }

    /// Disjointness plus all four families of sums.
    pub fn satisfies(&self, tc: &ThreeColorInstance) -> bool {
        self.xi1.m() == tc.m
            && self.xi1.n() == tc.n
            && self.xi2.m() == tc.m
            && self.xi2.n() == tc.n
            && self.disjoint()
            && self.xi1.row_sums() == tc.r1
            && self.xi2.row_sums() == tc.r2
            && self.xi1.col_sums() == tc.c1
            && self.xi2.col_sums() == tc.c2
    }
}

/// Odd rows/columns of the reduced instance count color 1, even ones color
/// 2; every 2x2 block holds at most one 1, at its lower-left (color 1) or
/// upper-right (color 2) corner.
pub fn three_color_to_rec(tc: &ThreeColorInstance) -> Result<RecInstance> {
    tc.validate()?;
    let interleave = |a: &[usize], b: &[usize]| -> Vec<usize> {
        a.iter().zip(b).flat_map(|(&x, &y)| [x, y]).collect()
    };
    RecInstance::new(
        2,
        1,
        1,
        2 * tc.m,
        2 * tc.n,
        interleave(&tc.r1, &tc.r2),
        interleave(&tc.c1, &tc.c2),
        vec![1; tc.m * tc.n],
    )
}

/// Reads the color of each 2x2 block of a reduced-instance solution.
pub fn decode_three_color(x: &BinaryImage) -> Result<ThreeColorSolution> {
    if !x.m().is_multiple_of(2) || !x.n().is_multiple_of(2) {
        return Err(Error::input("image extents must be even"));
    }
    let (m, n) = (x.m() / 2, x.n() / 2);
    let mut xi1 = BinaryImage::zeros(m, n);
    let mut xi2 = BinaryImage::zeros(m, n);
    for q in 1..=n {
        for p in 1..=m {
            let pat = pattern_of(x, 2 * p - 1, 2 * q - 1, 2)?;
            if pat == Pattern::new([(0, 0)]) {
                xi1.set(p, q, true);
            } else if pat == Pattern::new([(1, 1)]) {
                xi2.set(p, q, true);
            } else if !pat.is_empty() {
                return Err(Error::input(format!(
                    "block ({},{}) holds {pat:?}, not one of the three block types",
                    2 * p - 1,
                    2 * q - 1
                )));
            }
        }
    }
    Ok(ThreeColorSolution { xi1, xi2 })
}

/// Inverse of [`decode_three_color`].
pub fn encode_three_color(sol: &ThreeColorSolution) -> Result<BinaryImage> {
    if !sol.disjoint() || sol.xi1.m() != sol.xi2.m() || sol.xi1.n() != sol.xi2.n() {
        return Err(Error::input("color layers must be disjoint and equally sized"));
    }
    let mut x = BinaryImage::zeros(2 * sol.xi1.m(), 2 * sol.xi1.n());
    for (p, q) in sol.xi1.ones() {
        x.set(2 * p - 1, 2 * q - 1, true);
    }
    for (p, q) in sol.xi2.ones() {
        x.set(2 * p, 2 * q, true);
    }
    Ok(x)
}

/// Exhaustive search for a solution of a small two-color instance.
pub fn three_color_solve(tc: &ThreeColorInstance) -> Result<Option<ThreeColorSolution>> {
    tc.validate()?;
    struct Search<'a> {
        tc: &'a ThreeColorInstance,
        colors: Vec<u8>,
        rows: [Vec<usize>; 2],
        cols: [Vec<usize>; 2],
    }
    impl Search<'_> {
        fn go(&mut self, idx: usize) -> bool {
            let tc = self.tc;
            if idx == tc.m * tc.n {
                return true;
            }
            let (p, q) = (idx % tc.m, idx / tc.m);
            let row_target = [tc.r1[q], tc.r2[q]];
            let col_target = [tc.c1[p], tc.c2[p]];
            for color in 0..3u8 {
                let ok = (0..2).all(|a| {
                    let add = (color as usize == a + 1) as usize;
                    let rc = self.rows[a][q] + add;
                    let cc = self.cols[a][p] + add;
                    rc <= row_target[a]
                        && rc + (tc.m - 1 - p) >= row_target[a]
                        && cc <= col_target[a]
                        && cc + (tc.n - 1 - q) >= col_target[a]
                });
                if !ok {
                    continue;
                }
                if color > 0 {
                    let a = color as usize - 1;
                    self.rows[a][q] += 1;
                    self.cols[a][p] += 1;
                }
                self.colors[idx] = color;
                if self.go(idx + 1) {
                    return true;
                }
                if color > 0 {
                    let a = color as usize - 1;
                    self.rows[a][q] -= 1;
                    self.cols[a][p] -= 1;
                }
            }
            false
        }
    }
    let mut s = Search {
        tc,
        colors: vec![0; tc.m * tc.n],
        rows: [vec![0; tc.n], vec![0; tc.n]],
        cols: [vec![0; tc.m], vec![0; tc.m]],
    };
    if !s.go(0) {
        return Ok(None);
    }
    let layer = |color: u8| {
        BinaryImage::from_bits(tc.m, tc.n, s.colors.iter().map(|&c| c == color).collect())
            .expect("sized by construction")
    };
    Ok(Some(ThreeColorSolution {
        xi1: layer(1),
        xi2: layer(2),
    }))
}

/// Places each 2-wide strip of a source grid into a `k`-wide strip of a
/// target grid. The two source rows (columns) of a strip go to target
/// offsets `slots`; the remaining target cells are filled with `fill`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StripEmbedding {
    pub k: usize,
    pub slots: [usize; 2],
    pub fill: bool,
}

impl StripEmbedding {
    fn checked(k: usize, slots: [usize; 2], fill: bool) -> Result<Self> {
        if k < 2 {
            return Err(Error::input(format!("target block side must be >= 2, got {k}")));
        }
        Ok(StripEmbedding { k, slots, fill })
    }

    /// Target coordinate of source coordinate `x`.
    pub fn coord(&self, x: usize) -> usize {
        let strip = (x - 1) / 2;
        strip * self.k + self.slots[(x - 1) % 2] + 1
    }

    /// Target corner of source corner `x` (odd).
    pub fn corner(&self, x: usize) -> usize {
        self.k * (x - 1) / 2 + 1
    }

    pub fn extent(&self, source: usize) -> usize {
        source * self.k / 2
    }

    /// Whether target coordinate `x` carries source data.
    pub fn is_data(&self, x: usize) -> bool {
        self.slots.contains(&((x - 1) % self.k))
    }

    /// Target sums: data lines keep `source[..] + shift`, padding lines get
    /// `pad`.
    fn lift_sums(&self, source: &[usize], shift: usize, pad: usize) -> Vec<usize> {
        let mut out = vec![pad; self.extent(source.len())];
        for (idx, &s) in source.iter().enumerate() {
            out[self.coord(idx + 1) - 1] = s + shift;
        }
        out
    }

    pub fn embed(&self, x: &BinaryImage) -> BinaryImage {
        let (m, n) = (self.extent(x.m()), self.extent(x.n()));
        let mut y = BinaryImage::zeros(m, n);
        if self.fill {
            y = y.complement();
            for q in 1..=x.n() {
                for p in 1..=x.m() {
                    y.set(self.coord(p), self.coord(q), false);
                }
            }
        }
        for (p, q) in x.ones() {
            y.set(self.coord(p), self.coord(q), true);
        }
        y
    }

    pub fn extract(&self, y: &BinaryImage) -> Result<BinaryImage> {
        if !y.m().is_multiple_of(self.k) || !y.n().is_multiple_of(self.k) {
            return Err(Error::input(format!(
                "{}x{} image is not a multiple of block side {}",
                y.m(),
                y.n(),
                self.k
            )));
        }
        let (m, n) = (2 * y.m() / self.k, 2 * y.n() / self.k);
        let mut x = BinaryImage::zeros(m, n);
        for q in 1..=n {
            for p in 1..=m {
                x.set(p, q, y.get(self.coord(p), self.coord(q)));
            }
        }
        Ok(x)
    }
}

/// Embedding used by [`pad_to_k`]: source offsets 0 and 1 land on target
/// offsets 0 and `k - 1`, so both corner singletons stay corner singletons.
pub fn pad_embedding(target_k: usize) -> Result<StripEmbedding> {
    StripEmbedding::checked(target_k, [0, target_k.saturating_sub(1)], false)
}

/// Lifts a `k = 2` block instance to block side `target_k` by inserting
/// zero rows and columns; feasibility is preserved in both directions.
pub fn pad_to_k(inst: &RecInstance, target_k: usize) -> Result<RecInstance> {
    inst.validate()?;
    if inst.k != 2 {
        return Err(Error::input(format!("padding needs k = 2, got k = {}", inst.k)));
    }
    let e = pad_embedding(target_k)?;
    RecInstance::new(
        target_k,
        inst.nu,
        inst.t,
        e.extent(inst.m),
        e.extent(inst.n),
        e.lift_sums(&inst.row_sums, 0, 0),
        e.lift_sums(&inst.col_sums, 0, 0),
        inst.block_values.clone(),
    )
}

/// Color inversion: a solves the input iff its complement solves the
/// output. Classes 0, 2 and 3 are supported.
pub fn t1_invert(inst: &WRecInstance) -> Result<WRecInstance> {
    inst.validate()?;
    let t = match inst.t {
        0 => 0,
        2 => 3,
        3 => 2,
        t => {
            return Err(Error::UnsupportedClass {
                t,
                msg: "the complement of P(k,1) is not one of the pattern classes".into(),
            })
        }
    };
    let alpha = inst.k * inst.k;
    let flip = |sums: &[usize], full: usize, what: &str| -> Result<Vec<usize>> {
        sums.iter()
            .map(|&s| {
                full.checked_sub(s)
                    .ok_or_else(|| Error::input(format!("{what} sum {s} exceeds {full}")))
            })
            .collect()
    };
    let windows = inst
        .windows
        .iter()
        .map(|w| {
            let value = alpha.checked_sub(w.value).ok_or_else(|| {
                Error::input(format!(
                    "window value {} at {:?} exceeds window size {alpha}",
                    w.value, w.anchor
                ))
            })?;
            let rel = match w.rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
            Ok(WindowConstraint::new(w.anchor, rel, value))
        })
        .collect::<Result<_>>()?;
    WRecInstance::new(
        inst.k,
        t,
        inst.m,
        inst.n,
        flip(&inst.row_sums, inst.m, "row")?,
        flip(&inst.col_sums, inst.n, "column")?,
        windows,
    )
}

fn check_liftable(inst: &WRecInstance) -> Result<()> {
    inst.validate()?;
    if inst.k != 2 || inst.t != 0 {
        return Err(Error::input(format!(
            "padding needs k = 2 and t = 0, got k = {}, t = {}",
            inst.k, inst.t
        )));
    }
    if let Some(w) = inst
        .windows
        .iter()
        .find(|w| w.anchor.0 % 2 != 1 || w.anchor.1 % 2 != 1)
    {
        return Err(Error::input(format!(
            "window anchor {:?} is not a block corner",
            w.anchor
        )));
    }
    Ok(())
}

/// Embedding used by [`t2_zero_pad`]: data in the first two lines of each
/// strip, zeros elsewhere.
pub fn t2_embedding(target_k: usize) -> Result<StripEmbedding> {
    StripEmbedding::checked(target_k, [0, 1], false)
}

/// Embedding used by [`t3_one_pad`]: data in the first two lines of each
/// strip, ones elsewhere.
pub fn t3_embedding(target_k: usize) -> Result<StripEmbedding> {
    StripEmbedding::checked(target_k, [0, 1], true)
}

fn lift_windows(inst: &WRecInstance, e: &StripEmbedding, add: usize) -> Vec<WindowConstraint> {
    inst.windows
        .iter()
        .map(|w| {
            let (i, j) = w.anchor;
            WindowConstraint::new((e.corner(i), e.corner(j)), w.rel, w.value + add)
        })
        .collect()
}

/// Lifts a `k = 2`, `t = 0` window instance to `target_k` with empty
/// padding rows and columns.
pub fn t2_zero_pad(inst: &WRecInstance, target_k: usize) -> Result<WRecInstance> {
    check_liftable(inst)?;
    let e = t2_embedding(target_k)?;
    WRecInstance::new(
        target_k,
        0,
        e.extent(inst.m),
        e.extent(inst.n),
        e.lift_sums(&inst.row_sums, 0, 0),
        e.lift_sums(&inst.col_sums, 0, 0),
        lift_windows(inst, &e, 0),
    )
}

/// Lifts a `k = 2`, `t = 0` window instance to `target_k` with padding rows
/// and columns full of ones. Data rows also cross every padding column, so
/// their sums grow by `m' - m` (columns by `n' - n`), and each window gains
/// `target_k^2 - 4` ones.
pub fn t3_one_pad(inst: &WRecInstance, target_k: usize) -> Result<WRecInstance> {
    check_liftable(inst)?;
    let e = t3_embedding(target_k)?;
    let (m2, n2) = (e.extent(inst.m), e.extent(inst.n));
    WRecInstance::new(
        target_k,
        0,
        m2,
        n2,
        e.lift_sums(&inst.row_sums, m2 - inst.m, m2),
        e.lift_sums(&inst.col_sums, n2 - inst.n, n2),
        lift_windows(inst, &e, target_k * target_k - 4),
    )
}
