//! The two classes that reduce to a single transport problem: `k = 1`
//! (cells with `v = 0` forbidden) and `nu >= k, t = 2` (at most one 1 per
//! row of every nonzero block).

use tomo::solvers::{classify, solve, Method};
use tomo::{verify_rec, OracleLimits, RecInstance};

fn report(name: &str, inst: &RecInstance) -> tomo::Result<()> {
    let res = solve(inst, Method::Auto, OracleLimits::default())?;
    println!("{name}: class {:?}, method {}", classify(inst), res.method);
    match res.image() {
        Some(x) => {
            println!("{x:?}");
            assert!(verify_rec(inst, x)?.is_feasible());
        }
        None => println!("infeasible\n"),
    }
    Ok(())
}

fn main() -> tomo::Result<()> {
    // k = 1: the block values are a 0/1 mask of allowed cells.
    let mask = vec![1, 0, 1, 1, 1, 0, 0, 1, 1];
    let rec1 = RecInstance::new(1, 1, 0, 3, 3, vec![2, 1, 1], vec![1, 1, 2], mask)?;
    report("k=1", &rec1)?;

    // nu = 2, t = 2 on 4x4: two nonzero blocks, one zero block.
    let kv2 = RecInstance::new(2, 2, 2, 4, 4, vec![1, 2, 1, 0], vec![1, 1, 1, 1], vec![2, 2, 2, 0])?;
    report("nu=2, t=2", &kv2)?;

    // Zeroing the upper-left block leaves too little room for row 3.
    let tight = RecInstance::new(2, 2, 2, 4, 4, vec![1, 1, 2, 0], vec![1, 1, 1, 1], vec![2, 2, 0, 2])?;
    report("nu=2, t=2, tight", &tight)?;
    Ok(())
}
