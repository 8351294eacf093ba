//! Exhaustive search on a class without a fast algorithm, and on a window
//! instance with overlapping windows.

use tomo::oracle::{oracle_enumerate, oracle_solve, Oracle, OracleLimits};
use tomo::solvers::classify;
use tomo::{RecInstance, Relation, WRecInstance, WindowConstraint};

fn main() -> tomo::Result<()> {
    // nu = 1, t = 1: each 2x2 block holds nothing or a single corner 1.
    let inst = RecInstance::new(2, 1, 1, 4, 4, vec![1, 1, 1, 1], vec![1, 1, 1, 1], vec![1; 4])?;
    println!("class: {:?}", classify(&inst));
    let all = oracle_enumerate(&inst, OracleLimits::default(), usize::MAX)?;
    println!("{} solutions", all.len());
    for x in &all {
        println!("{x:?}");
    }

    // Overlapping windows along a 6x2 strip: exactly one 1 in each.
    let windows = (1..=5)
        .map(|i| WindowConstraint::new((i, 1), Relation::Eq, 1))
        .collect();
    let wrec = WRecInstance::new(2, 0, 6, 2, vec![1, 2], vec![1, 0, 1, 0, 1, 0], windows)?;
    let mut oracle = Oracle::new(&wrec, OracleLimits::default())?;
    let outcome = oracle.solve();
    println!("window instance after {} nodes: {outcome:?}", oracle.nodes());

    // A budget that is too small is reported, not guessed.
    let tiny = OracleLimits::default().with_max_nodes(3);
    println!("with 3 nodes: {:?}", oracle_solve(&inst, tiny)?);
    Ok(())
}
