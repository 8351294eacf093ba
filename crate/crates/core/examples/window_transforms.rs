//! Transformations between window instances, and the lift of block
//! instances to larger blocks, each with its solution map.

use tomo::oracle::{oracle_solve, OracleLimits};
use tomo::reductions::{pad_embedding, pad_to_k, t1_invert, t2_embedding, t2_zero_pad, t3_embedding, t3_one_pad};
use tomo::{verify_rec, verify_wrec, BinaryImage, RecInstance, Relation, WRecInstance, WindowConstraint};

fn main() -> tomo::Result<()> {
    let x = BinaryImage::from_cells(4, 4, [(1, 1), (2, 3), (4, 2), (3, 4)]);
    let windows = vec![
        WindowConstraint::new((1, 1), Relation::Le, 1),
        WindowConstraint::new((3, 1), Relation::Ge, 1),
        WindowConstraint::new((1, 3), Relation::Eq, 1),
    ];
    let inst = WRecInstance::new(2, 0, 4, 4, x.row_sums(), x.col_sums(), windows)?;
    assert!(verify_wrec(&inst, &x)?.is_feasible());

    let inv = t1_invert(&inst)?;
    println!("inverted rows {:?}, windows {:?}", inv.row_sums, inv.windows);
    assert!(verify_wrec(&inv, &x.complement())?.is_feasible());
    assert_eq!(t1_invert(&inv)?, inst);

    let big = OracleLimits::default().with_max_cells(64);
    for (name, lifted, e) in [
        ("zero padding", t2_zero_pad(&inst, 4)?, t2_embedding(4)?),
        ("one padding", t3_one_pad(&inst, 4)?, t3_embedding(4)?),
    ] {
        let y = e.embed(&x);
        println!("{name}: {}x{}, rows {:?}", lifted.m, lifted.n, lifted.row_sums);
        assert!(verify_wrec(&lifted, &y)?.is_feasible());
        let found = oracle_solve(&lifted, big)?;
        let back = e.extract(found.image().expect("lift keeps feasibility"))?;
        assert!(verify_wrec(&inst, &back)?.is_feasible());
    }

    let rec = RecInstance::new(2, 1, 1, 4, 4, vec![1, 0, 0, 1], vec![1, 0, 0, 1], vec![1, 0, 0, 1])?;
    let padded = pad_to_k(&rec, 4)?;
    let e = pad_embedding(4)?;
    let z = BinaryImage::from_cells(4, 4, [(1, 1), (4, 4)]);
    assert!(verify_rec(&rec, &z)?.is_feasible());
    assert!(verify_rec(&padded, &e.embed(&z))?.is_feasible());
    println!("padded to k=4:\n{:?}", e.embed(&z));
    Ok(())
}
