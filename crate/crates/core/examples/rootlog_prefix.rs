//! Prefixes of the bad sequence for the parameter c-th root of log.
use maclagan::constructions::{seq_rootlog, verify_bad};
use maclagan::ramsey::{find_adjacent_monotone, reduce_to_coloring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = seq_rootlog(1, 0, 300)?;
    println!("c = 1, d = 0: {} variables, l = {}", s.nvars(), s.l);
    for i in [0, 1, 15, 16, 17, 18, 40, 299] {
        println!("  {i:>3}: {:?}", s.ideals[i]);
    }
    println!("prefix of 300: {:?}", verify_bad(&s));
    let c = reduce_to_coloring(&s)?;
    println!("monotone adjacent triple in its reduction: {:?}", find_adjacent_monotone(&c));

    for (c, d, n) in [(1, 1, 200), (2, 0, 600)] {
        let s = seq_rootlog(c, d, n)?;
        println!("c = {c}, d = {d}, prefix {n}: {:?}", verify_bad(&s));
    }
    Ok(())
}
