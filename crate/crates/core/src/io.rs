//! Text formats, planted-instance generation and image rendering.
//!
//! Instance files (LF line endings, single spaces):
//!
//! ```text
//! REC                      WREC                     TCOL
//! k <k> nu <nu> t <t>      k <k> t <t>              m <m> n <n>
//! m <m> n <n>              m <m> n <n>              R1 <r1_1 .. r1_n>
//! R <r_1 .. r_n>           R <r_1 .. r_n>           R2 <r2_1 .. r2_n>
//! C <c_1 .. c_m>           C <c_1 .. c_m>           C1 <c1_1 .. c1_m>
//! V                        W                        C2 <c2_1 .. c2_m>
//! <i> <j> <v>   (corners)  <i> <j> <rel> <val>      END
//! END                      END
//! ```
//!
//! Solution files start with `SOL <m> <n>` followed by `n` lines of `m`
//! characters `0`/`1`, top row (`q = n`) first.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::{corner_points, BinaryImage, Cell, Pattern, RecInstance, Relation, WRecInstance, WindowConstraint};
use crate::reductions::ThreeColorInstance;
use crate::verify::verify_rec;

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyInstance {
    Rec(RecInstance),
    WRec(WRecInstance),
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
            last: 0,
        }
    }

    /// Next non-blank line as (line number, tokens).
    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        for (idx, line) in self.inner.by_ref() {
            self.last = idx + 1;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if !tokens.is_empty() {
                return Ok((idx + 1, tokens));
            }
        }
        Err(Error::parse(self.last + 1, format!("unexpected end of input, expected {what}")))
    }

    fn finish(&mut self) -> Result<()> {
        for (idx, line) in self.inner.by_ref() {
            if !line.trim().is_empty() {
                return Err(Error::parse(idx + 1, "trailing content after END"));
            }
        }
        Ok(())
    }
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, found {tok:?}")))
}

fn keyword(line: usize, tokens: &[&str], word: &str) -> Result<()> {
    if tokens != [word] {
        return Err(Error::parse(line, format!("expected {word:?}")));
    }
    Ok(())
}

/// Parses `key1 <v1> key2 <v2> ...`.
fn keyed(line: usize, tokens: &[&str], keys: &[&str]) -> Result<Vec<usize>> {
    if tokens.len() != 2 * keys.len() || tokens.iter().step_by(2).ne(keys.iter()) {
        let want: Vec<String> = keys.iter().map(|k| format!("{k} <{k}>")).collect();
        return Err(Error::parse(line, format!("expected \"{}\"", want.join(" "))));
    }
    tokens[1..].iter().step_by(2).map(|t| number(line, t)).collect()
}

fn sum_line(lines: &mut Lines, tag: &str, len: usize) -> Result<Vec<usize>> {
    let (line, tokens) = lines.next(tag)?;
    if tokens[0] != tag {
        return Err(Error::parse(line, format!("expected a line starting with {tag:?}")));
    }
    let values = tokens[1..]
        .iter()
        .map(|t| number(line, t))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != len {
        return Err(Error::parse(
            line,
            format!("expected {len} values after {tag:?}, found {}", values.len()),
        ));
    }
    Ok(values)
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

pub fn parse_instance(text: &str) -> Result<AnyInstance> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next("REC or WREC header")?;
    match tokens[..] {
        ["REC"] => parse_rec(&mut lines).map(AnyInstance::Rec),
        ["WREC"] => parse_wrec(&mut lines).map(AnyInstance::WRec),
        _ => Err(Error::parse(line, "expected \"REC\" or \"WREC\"")),
    }
}

fn parse_rec(lines: &mut Lines) -> Result<RecInstance> {
    let (line, tokens) = lines.next("parameters")?;
    let params = keyed(line, &tokens, &["k", "nu", "t"])?;
    let (k, nu, t) = (params[0], params[1], params[2]);
    if t > 2 {
        return Err(Error::parse(line, format!("t must be 0, 1 or 2, found {t}")));
    }
    let (line, tokens) = lines.next("dimensions")?;
    let dims = keyed(line, &tokens, &["m", "n"])?;
    let (m, n) = (dims[0], dims[1]);
    let corners = corner_points(m, n, k).map_err(at_line(line))?;
    let row_sums = sum_line(lines, "R", n)?;
    let col_sums = sum_line(lines, "C", m)?;
    let (line, tokens) = lines.next("V")?;
    keyword(line, &tokens, "V")?;

    let index: BTreeMap<Cell, usize> = corners.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut values: Vec<Option<usize>> = vec![None; corners.len()];
    loop {
        let (line, tokens) = lines.next("block value or END")?;
        if tokens == ["END"] {
            break;
        }
        if tokens.len() != 3 {
            return Err(Error::parse(line, "expected \"<i> <j> <v>\""));
        }
        let (i, j, v) = (
            number(line, tokens[0])?,
            number(line, tokens[1])?,
            number(line, tokens[2])?,
        );
        let &idx = index
            .get(&(i, j))
            .ok_or_else(|| Error::parse(line, format!("({i},{j}) is not a corner point")))?;
        if values[idx].is_some() {
            return Err(Error::parse(line, format!("duplicate block value for ({i},{j})")));
        }
        if v != 0 && v != nu {
            return Err(Error::parse(line, format!("block value {v} is not in {{0, {nu}}}")));
        }
        values[idx] = Some(v);
    }
    let end = lines.last;
    if let Some(idx) = values.iter().position(Option::is_none) {
        let (i, j) = corners[idx];
        return Err(Error::parse(end, format!("missing block value for ({i},{j})")));
    }
    lines.finish()?;
    RecInstance::new(
        k,
        nu,
        t as u8,
        m,
        n,
        row_sums,
        col_sums,
        values.into_iter().flatten().collect(),
    )
    .map_err(at_line(end))
}

fn parse_wrec(lines: &mut Lines) -> Result<WRecInstance> {
    let (line, tokens) = lines.next("parameters")?;
    let params = keyed(line, &tokens, &["k", "t"])?;
    let (k, t) = (params[0], params[1]);
    if t > 3 {
        return Err(Error::parse(line, format!("t must be in 0..=3, found {t}")));
    }
    let (line, tokens) = lines.next("dimensions")?;
    let dims = keyed(line, &tokens, &["m", "n"])?;
    let (m, n) = (dims[0], dims[1]);
    crate::grid::check_divisible(m, n, k).map_err(at_line(line))?;
    let row_sums = sum_line(lines, "R", n)?;
    let col_sums = sum_line(lines, "C", m)?;
    let (line, tokens) = lines.next("W")?;
    keyword(line, &tokens, "W")?;
    let mut windows = Vec::new();
    loop {
        let (line, tokens) = lines.next("window or END")?;
        if tokens == ["END"] {
            break;
        }
        if tokens.len() != 4 {
            return Err(Error::parse(line, "expected \"<i> <j> <rel> <val>\""));
        }
        let anchor = (number(line, tokens[0])?, number(line, tokens[1])?);
        let rel: Relation = tokens[2].parse().map_err(at_line(line))?;
        let value = number(line, tokens[3])?;
        let (i, j) = anchor;
        if i == 0 || j == 0 || i + k - 1 > m || j + k - 1 > n {
            return Err(Error::parse(
                line,
                format!("window at ({i},{j}) of side {k} exceeds {m}x{n} grid"),
            ));
        }
        if windows.iter().any(|w: &WindowConstraint| w.anchor == anchor) {
            return Err(Error::parse(line, format!("duplicate window anchor ({i},{j})")));
        }
        windows.push(WindowConstraint::new(anchor, rel, value));
    }
    let end = lines.last;
    lines.finish()?;
    WRecInstance::new(k, t as u8, m, n, row_sums, col_sums, windows).map_err(at_line(end))
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn tagged(tag: &str, values: &[usize]) -> String {
    if values.is_empty() {
        tag.to_string()
    } else {
        format!("{tag} {}", join(values))
    }
}

pub fn write_rec(inst: &RecInstance) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "REC");
    let _ = writeln!(s, "k {} nu {} t {}", inst.k, inst.nu, inst.t);
    let _ = writeln!(s, "m {} n {}", inst.m, inst.n);
    let _ = writeln!(s, "{}", tagged("R", &inst.row_sums));
    let _ = writeln!(s, "{}", tagged("C", &inst.col_sums));
    let _ = writeln!(s, "V");
    for ((i, j), v) in inst.corners().into_iter().zip(&inst.block_values) {
        let _ = writeln!(s, "{i} {j} {v}");
    }
    let _ = writeln!(s, "END");
    s
}

pub fn write_wrec(inst: &WRecInstance) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "WREC");
    let _ = writeln!(s, "k {} t {}", inst.k, inst.t);
    let _ = writeln!(s, "m {} n {}", inst.m, inst.n);
    let _ = writeln!(s, "{}", tagged("R", &inst.row_sums));
    let _ = writeln!(s, "{}", tagged("C", &inst.col_sums));
    let _ = writeln!(s, "W");
    for w in &inst.windows {
        let _ = writeln!(s, "{} {} {} {}", w.anchor.0, w.anchor.1, w.rel, w.value);
    }
    let _ = writeln!(s, "END");
    s
}

pub fn write_instance(inst: &AnyInstance) -> String {
    match inst {
        AnyInstance::Rec(r) => write_rec(r),
        AnyInstance::WRec(w) => write_wrec(w),
    }
}

pub fn parse_three_color(text: &str) -> Result<ThreeColorInstance> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next("TCOL header")?;
    keyword(line, &tokens, "TCOL")?;
    let (line, tokens) = lines.next("dimensions")?;
    let dims = keyed(line, &tokens, &["m", "n"])?;
    let (m, n) = (dims[0], dims[1]);
    if m == 0 || n == 0 {
        return Err(Error::parse(line, "grid extents must be positive"));
    }
    let r1 = sum_line(&mut lines, "R1", n)?;
    let r2 = sum_line(&mut lines, "R2", n)?;
    let c1 = sum_line(&mut lines, "C1", m)?;
    let c2 = sum_line(&mut lines, "C2", m)?;
    let (line, tokens) = lines.next("END")?;
    keyword(line, &tokens, "END")?;
    lines.finish()?;
    ThreeColorInstance::new(m, n, r1, r2, c1, c2)
}

pub fn write_three_color(tc: &ThreeColorInstance) -> String {
    format!(
        "TCOL\nm {} n {}\n{}\n{}\n{}\n{}\nEND\n",
        tc.m,
        tc.n,
        tagged("R1", &tc.r1),
        tagged("R2", &tc.r2),
        tagged("C1", &tc.c1),
        tagged("C2", &tc.c2)
    )
}

pub fn write_solution(x: &BinaryImage) -> String {
    let mut s = format!("SOL {} {}\n", x.m(), x.n());
    for q in (1..=x.n()).rev() {
        s.extend((1..=x.m()).map(|p| if x.get(p, q) { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

pub fn parse_solution(text: &str) -> Result<BinaryImage> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next("SOL header")?;
    if tokens.len() != 3 || tokens[0] != "SOL" {
        return Err(Error::parse(line, "expected \"SOL <m> <n>\""));
    }
    let (m, n) = (number(line, tokens[1])?, number(line, tokens[2])?);
    if m == 0 || n == 0 {
        return Err(Error::parse(line, "image extents must be positive"));
    }
    let mut x = BinaryImage::zeros(m, n);
    for q in (1..=n).rev() {
        let (line, tokens) = lines.next("image row")?;
        let row = match tokens[..] {
            [row] if row.len() == m => row,
            _ => return Err(Error::parse(line, format!("expected {m} characters '0'/'1'"))),
        };
        for (p, ch) in row.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => x.set(p + 1, q, true),
                other => return Err(Error::parse(line, format!("unexpected character {other:?}"))),
            }
        }
    }
    lines.finish()?;
    Ok(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Pgm,
}

/// ASCII art (`#` for ones) or binary PGM (black ones on white), top row
/// first.
pub fn render(x: &BinaryImage, format: RenderFormat) -> Vec<u8> {
    match format {
        RenderFormat::Ascii => {
            let mut s = String::with_capacity((x.m() + 1) * x.n());
            for q in (1..=x.n()).rev() {
                s.extend((1..=x.m()).map(|p| if x.get(p, q) { '#' } else { '.' }));
                s.push('\n');
            }
            s.into_bytes()
        }
        RenderFormat::Pgm => {
            let mut out = format!("P5\n{} {}\n255\n", x.m(), x.n()).into_bytes();
            for q in (1..=x.n()).rev() {
                out.extend((1..=x.m()).map(|p| if x.get(p, q) { 0u8 } else { 255u8 }));
            }
            out
        }
    }
}

fn ln_choose(n: usize, s: usize) -> f64 {
    (0..s).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// Index drawn with probability proportional to `exp(log_weights[i])`.
fn pick_log_weighted<R: Rng>(rng: &mut R, log_weights: &[f64]) -> usize {
    let top = log_weights.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = log_weights.iter().map(|l| (l - top).exp()).collect();
    WeightedIndex::new(&w).expect("positive weights").sample(rng)
}

/// Uniform draw from the nonempty members of `P(k, t)` with at most `nu`
/// ones.
fn sample_pattern<R: Rng>(rng: &mut R, k: usize, t: u8, nu: usize) -> Pattern {
    match t {
        0 => {
            let cells = k * k;
            let max = nu.min(cells);
            let logs: Vec<f64> = (1..=max).map(|s| ln_choose(cells, s)).collect();
            let size = 1 + pick_log_weighted(rng, &logs);
            Pattern::new(
                rand::seq::index::sample(rng, cells, size)
                    .into_iter()
                    .map(|bit| (bit % k, bit / k)),
            )
        }
        1 => {
            if k == 1 || rng.gen_bool(0.5) {
                Pattern::new([(0, 0)])
            } else {
                Pattern::new([(k - 1, k - 1)])
            }
        }
        2 => {
            let max = nu.min(k);
            let logs: Vec<f64> = (1..=max)
                .map(|s| ln_choose(k, s) + s as f64 * (k as f64).ln())
                .collect();
            let size = 1 + pick_log_weighted(rng, &logs);
            Pattern::new(
                rand::seq::index::sample(rng, k, size)
                    .into_iter()
                    .map(|b| (rng.gen_range(0..k), b)),
            )
        }
        _ => unreachable!("validated class"),
    }
}

/// A random instance together with a witness solution. Each block is
/// filled with probability `density` by a uniformly chosen admissible
/// nonempty pattern; empty blocks get `v = 0` or `v = nu` at random.
pub fn gen_planted(
    m: usize,
    n: usize,
    k: usize,
    nu: usize,
    t: u8,
    density: f64,
    seed: u64,
) -> Result<(RecInstance, BinaryImage)> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::input(format!("density {density} outside [0, 1]")));
    }
    if t > 2 {
        return Err(Error::UnsupportedClass {
            t,
            msg: "planted instances use t in 0..=2".into(),
        });
    }
    if nu == 0 {
        return Err(Error::input("nu must be positive"));
    }
    let corners = corner_points(m, n, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = BinaryImage::zeros(m, n);
    let mut values = Vec::with_capacity(corners.len());
    for (i, j) in corners {
        if rng.gen_bool(density) {
            for &(a, b) in sample_pattern(&mut rng, k, t, nu).offsets() {
                x.set(i + a, j + b, true);
            }
            values.push(nu);
        } else {
            values.push(if rng.gen_bool(0.5) { nu } else { 0 });
        }
    }
    let inst = RecInstance::new(k, nu, t, m, n, x.row_sums(), x.col_sums(), values)?;
    debug_assert!(verify_rec(&inst, &x)?.is_feasible());
    Ok((inst, x))
}
