//! Two-color-plus-blank tomography as a block instance with `nu = 1, t = 1`.

use tomo::io::{render, RenderFormat};
use tomo::oracle::{oracle_solve, OracleLimits};
use tomo::reductions::{decode_three_color, three_color_solve, three_color_to_rec, ThreeColorInstance};

fn main() -> tomo::Result<()> {
    let tc = ThreeColorInstance::new(3, 2, vec![1, 2], vec![1, 1], vec![1, 1, 1], vec![1, 0, 1])?;
    let rec = three_color_to_rec(&tc)?;
    println!(
        "reduced: {}x{}, rows {:?}, columns {:?}",
        rec.m, rec.n, rec.row_sums, rec.col_sums
    );

    let outcome = oracle_solve(&rec, OracleLimits::default())?;
    let x = outcome.image().expect("instance is feasible");
    print!("{}", String::from_utf8_lossy(&render(x, RenderFormat::Ascii)));

    let sol = decode_three_color(x)?;
    println!("color 1:\n{:?}color 2:\n{:?}", sol.xi1, sol.xi2);
    assert!(sol.satisfies(&tc));
    assert!(three_color_solve(&tc)?.is_some());
    Ok(())
}
