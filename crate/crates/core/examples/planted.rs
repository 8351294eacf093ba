//! Random instances with a known solution, written to disk in the text
//! formats and rendered as ASCII and PGM.

use std::env;
use std::fs;

use tomo::io::{gen_planted, parse_instance, parse_solution, render, write_rec, write_solution, AnyInstance, RenderFormat};
use tomo::solvers::{solve, Method};
use tomo::OracleLimits;

fn main() -> tomo::Result<()> {
    let (inst, witness) = gen_planted(12, 8, 2, 2, 2, 0.6, 42)?;
    print!("{}", String::from_utf8_lossy(&render(&witness, RenderFormat::Ascii)));

    let dir = env::temp_dir().join("tomo-planted");
    fs::create_dir_all(&dir).expect("temp dir");
    fs::write(dir.join("planted.rec"), write_rec(&inst)).expect("write");
    fs::write(dir.join("planted.sol"), write_solution(&witness)).expect("write");
    fs::write(dir.join("planted.pgm"), render(&witness, RenderFormat::Pgm)).expect("write");
    println!("wrote {}", dir.display());

    let text = fs::read_to_string(dir.join("planted.rec")).expect("read");
    let AnyInstance::Rec(back) = parse_instance(&text)? else {
        unreachable!()
    };
    assert_eq!(back, inst);
    let sol = fs::read_to_string(dir.join("planted.sol")).expect("read");
    assert_eq!(parse_solution(&sol)?, witness);

    // Solutions are rarely unique; the solver may find a different one.
    let res = solve(&back, Method::Auto, OracleLimits::default())?;
    let x = res.image().expect("planted instances are feasible");
    println!("{} found a solution; equal to the witness: {}", res.method, *x == witness);
    Ok(())
}
