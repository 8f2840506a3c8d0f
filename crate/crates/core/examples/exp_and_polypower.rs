//! The doubling family, track products and iterated track powers.
use maclagan::constructions::{seq_exp, seq_polypower, seq_track_product, verify_bad};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for j in 0..=8 {
        let s = seq_exp(j)?;
        println!("seq_exp({j}): {:>3} ideals, max degree {:>2}, {:?}", s.len(), s.max_degree(), verify_bad(&s));
    }
    let one = seq_exp(1)?;
    println!("\nseq_exp(1):");
    for ideal in &one.ideals {
        println!("  {ideal:?}");
    }

    let a = seq_exp(0)?;
    let p = seq_track_product(&a, &a)?;
    println!("\ntrack product of seq_exp(0) with itself, over X_2, X_1, X_0, Y:");
    for ideal in &p.ideals {
        println!("  {ideal:?}");
    }

    for (c, j) in [(0, 3), (1, 1), (1, 2), (1, 3), (2, 2)] {
        let s = seq_polypower(c, j)?;
        println!(
            "polypower(c={c}, j={j}): d = {}, {:>6} ideals, max degree {:>2}, {:?}",
            s.d,
            s.len(),
            s.max_degree(),
            verify_bad(&s)
        );
    }
    Ok(())
}
