//! Block instances with `nu = 1, t = 0`: pick the occupied blocks by a
//! block-level transport, then place one 1 per occupied block.

use tomo::dr1::{dr1_construct, DR1Instance};
use tomo::io::{gen_planted, render, RenderFormat};
use tomo::solvers::{block_occupancy, solve_rec_k10};
use tomo::{verify_rec, RecInstance};

fn main() -> tomo::Result<()> {
    let inst = RecInstance::new(2, 1, 0, 4, 4, vec![1, 1, 0, 1], vec![1, 0, 1, 1], vec![1; 4])?;

    let occupancy = block_occupancy(&inst)?.expect("strip sums are consistent");
    let selected = occupancy.selected(&inst);
    println!("occupied blocks: {selected:?}");

    let dr1 = DR1Instance::from_full_sums(2, 4, 4, selected, &inst.row_sums, &inst.col_sums)?;
    let x = dr1_construct(&dr1)?;
    print!("{}", String::from_utf8_lossy(&render(&x, RenderFormat::Ascii)));
    assert!(verify_rec(&inst, &x)?.is_feasible());

    // The same two steps, packaged, on a larger random instance.
    let (big, _) = gen_planted(128, 128, 4, 1, 0, 0.5, 11)?;
    let start = std::time::Instant::now();
    let res = solve_rec_k10(&big)?;
    let x = res.image().expect("planted instances are feasible");
    println!(
        "128x128, k=4: {} ones in {:.1?}, verified: {}",
        x.count_ones(),
        start.elapsed(),
        verify_rec(&big, x)?.is_feasible()
    );
    Ok(())
}
