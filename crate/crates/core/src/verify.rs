//! Exhaustive constraint checking of candidate images.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{pattern_member, pattern_of, BinaryImage, Pattern, RecInstance, Relation, WRecInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RowSum {
        q: usize,
        expected: usize,
        actual: usize,
    },
    ColSum {
        p: usize,
        expected: usize,
        actual: usize,
    },
    BlockCap {
        i: usize,
        j: usize,
        cap: usize,
        actual: usize,
    },
    PatternViolation {
        i: usize,
        j: usize,
        pattern: Pattern,
    },
    WindowRel {
        i: usize,
        j: usize,
        rel: Relation,
        value: usize,
        actual: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowSum { q, expected, actual } => {
                write!(f, "row {q}: sum {actual}, expected {expected}")
            }
            Violation::ColSum { p, expected, actual } => {
                write!(f, "column {p}: sum {actual}, expected {expected}")
            }
            Violation::BlockCap { i, j, cap, actual } => {
                write!(f, "block ({i},{j}): {actual} ones exceed cap {cap}")
            }
            Violation::PatternViolation { i, j, pattern } => {
                write!(f, "block ({i},{j}): pattern {pattern:?} not admissible")
            }
            Violation::WindowRel {
                i,
                j,
                rel,
                value,
                actual,
            } => write!(f, "window ({i},{j}): sum {actual} violates {rel} {value}"),
        }
    }
}

/// All violations of one candidate; empty iff the candidate is feasible.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_dims(m: usize, n: usize, x: &BinaryImage) -> Result<()> {
    if x.m() != m || x.n() != n {
        return Err(Error::input(format!(
            "image is {}x{}, instance is {m}x{n}",
            x.m(),
            x.n()
        )));
    }
    Ok(())
}

fn sum_violations(rows: &[usize], cols: &[usize], x: &BinaryImage, out: &mut Vec<Violation>) {
    for (q, (&expected, actual)) in rows.iter().zip(x.row_sums()).enumerate() {
        if expected != actual {
            out.push(Violation::RowSum {
                q: q + 1,
                expected,
                actual,
            });
        }
    }
    for (p, (&expected, actual)) in cols.iter().zip(x.col_sums()).enumerate() {
        if expected != actual {
            out.push(Violation::ColSum {
                p: p + 1,
                expected,
                actual,
            });
        }
    }
}

/// Checks row and column sums, block caps and block patterns.
pub fn verify_rec(inst: &RecInstance, x: &BinaryImage) -> Result<ViolationReport> {
    inst.validate()?;
    check_dims(inst.m, inst.n, x)?;
    let mut violations = Vec::new();
    sum_violations(&inst.row_sums, &inst.col_sums, x, &mut violations);
    let cls = inst.pattern_class();
    for (idx, (i, j)) in inst.corners().into_iter().enumerate() {
        let cap = inst.block_values[idx];
        let actual = x.window_sum(i, j, inst.k);
        if actual > cap {
            violations.push(Violation::BlockCap { i, j, cap, actual });
        }
        if inst.t != 0 {
            let pattern = pattern_of(x, i, j, inst.k)?;
            if !pattern_member(&pattern, cls)? {
                violations.push(Violation::PatternViolation { i, j, pattern });
            }
        }
    }
    Ok(ViolationReport { violations })
}

/// Checks row and column sums, every window relation and the pattern at
/// every anchor.
pub fn verify_wrec(inst: &WRecInstance, x: &BinaryImage) -> Result<ViolationReport> {
    inst.validate()?;
    check_dims(inst.m, inst.n, x)?;
    let mut violations = Vec::new();
    sum_violations(&inst.row_sums, &inst.col_sums, x, &mut violations);
    let cls = inst.pattern_class();
    for w in &inst.windows {
        let (i, j) = w.anchor;
        let actual = x.window_sum(i, j, inst.k);
        if !w.rel.holds(actual, w.value) {
            violations.push(Violation::WindowRel {
                i,
                j,
                rel: w.rel,
                value: w.value,
                actual,
            });
        }
        if inst.t != 0 {
            let pattern = pattern_of(x, i, j, inst.k)?;
            if !pattern_member(&pattern, cls)? {
                violations.push(Violation::PatternViolation { i, j, pattern });
            }
        }
    }
    Ok(ViolationReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::WindowConstraint;

    fn rec(t: u8, v: usize, r: Vec<usize>, c: Vec<usize>) -> RecInstance {
        RecInstance::new(2, 2, t, 2, 2, r, c, vec![v]).unwrap()
    }

    #[test]
    fn zero_image_zero_sums() {
        for t in 0..=2 {
            for v in [0, 2] {
                let inst = rec(t, v, vec![0, 0], vec![0, 0]);
                assert!(verify_rec(&inst, &BinaryImage::zeros(2, 2)).unwrap().is_feasible());
            }
        }
    }

    #[test]
    fn anti_diagonal_in_class_two_but_not_one() {
        let x = BinaryImage::from_cells(2, 2, [(1, 2), (2, 1)]);
        let inst = rec(2, 2, vec![1, 1], vec![1, 1]);
        assert!(verify_rec(&inst, &x).unwrap().is_feasible());
        let inst = rec(1, 2, vec![1, 1], vec![1, 1]);
        let report = verify_rec(&inst, &x).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::PatternViolation {
                i: 1,
                j: 1,
                pattern: Pattern::new([(0, 1), (1, 0)])
            }]
        );
    }

    #[test]
    fn zero_block_value_caps() {
        let inst = rec(0, 0, vec![1, 0], vec![1, 0]);
        let x = BinaryImage::from_cells(2, 2, [(1, 1)]);
        let report = verify_rec(&inst, &x).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::BlockCap {
                i: 1,
                j: 1,
                cap: 0,
                actual: 1
            }]
        );
    }

    #[test]
    fn reports_are_exhaustive_and_ordered() {
        let inst = rec(0, 0, vec![0, 2], vec![2, 1]);
        let x = BinaryImage::from_cells(2, 2, [(1, 1)]);
        let report = verify_rec(&inst, &x).unwrap();
        assert_eq!(report.len(), 5);
        assert!(matches!(report.violations[0], Violation::RowSum { q: 1, .. }));
        assert!(matches!(report.violations[1], Violation::RowSum { q: 2, .. }));
        assert!(matches!(report.violations[2], Violation::ColSum { p: 1, .. }));
        assert!(matches!(report.violations[3], Violation::ColSum { p: 2, .. }));
        assert!(matches!(report.violations[4], Violation::BlockCap { .. }));
    }

    #[test]
    fn dimension_mismatch() {
        let inst = rec(0, 2, vec![0, 0], vec![0, 0]);
        assert!(matches!(
            verify_rec(&inst, &BinaryImage::zeros(4, 2)),
            Err(Error::Input(_))
        ));
    }

    fn wrec(windows: Vec<WindowConstraint>, x: &BinaryImage) -> WRecInstance {
        WRecInstance::new(2, 0, x.m(), x.n(), x.row_sums(), x.col_sums(), windows).unwrap()
    }

    #[test]
    fn window_relations() {
        let x = BinaryImage::from_cells(2, 2, [(1, 1), (2, 2)]);
        let ok = wrec(vec![WindowConstraint::new((1, 1), Relation::Eq, 2)], &x);
        assert!(verify_wrec(&ok, &x).unwrap().is_feasible());
        let bad = wrec(vec![WindowConstraint::new((1, 1), Relation::Ge, 3)], &x);
        assert_eq!(
            verify_wrec(&bad, &x).unwrap().violations,
            vec![Violation::WindowRel {
                i: 1,
                j: 1,
                rel: Relation::Ge,
                value: 3,
                actual: 2
            }]
        );
    }

    #[test]
    fn overlapping_windows_share_cells() {
        let x = BinaryImage::from_cells(4, 2, [(2, 1)]);
        let inst = wrec(
            vec![
                WindowConstraint::new((1, 1), Relation::Eq, 1),
                WindowConstraint::new((2, 1), Relation::Eq, 1),
            ],
            &x,
        );
        assert!(verify_wrec(&inst, &x).unwrap().is_feasible());
    }

    #[test]
    fn class_three_patterns_checked_at_anchors() {
        let x = BinaryImage::from_cells(2, 2, [(1, 1)]);
        let mut inst = wrec(vec![WindowConstraint::new((1, 1), Relation::Le, 4)], &x);
        inst.t = 3;
        let report = verify_wrec(&inst, &x).unwrap();
        assert!(matches!(
            report.violations[..],
            [Violation::PatternViolation { i: 1, j: 1, .. }]
        ));
    }
}
