//! From bad sequences to colorings of pairs, and tiny adjacent-Ramsey numbers.
use maclagan::constructions::MaclaganBuilder;
use maclagan::ordinals::Ordinal;
use maclagan::ramsey::{
    adjacent_ramsey_number, find_adjacent_monotone, reduce_to_coloring, triple_coloring, RamseyBudget,
};
use num_bigint::BigUint;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha: Ordinal = "w".parse()?;
    let s = MaclaganBuilder::new(1, BigUint::from(1000u32)).full(&alpha, 1)?;
    let c = reduce_to_coloring(&s)?;
    println!("Seq(w, 1) has {} ideals; first colors:", s.len());
    for (x, y, v) in c.iter().take(6) {
        println!("  C({x},{y}) = {v:?}");
    }
    println!("monotone adjacent triple: {:?}", find_adjacent_monotone(&c));
    println!("D(0,1,2) = {}", triple_coloring(&c, 0, 1, 2)?);

    for (l, r, rmax) in [(0, 0, 4), (0, 1, 5), (1, 1, 8), (0, 2, 6)] {
        match adjacent_ramsey_number(l, r, rmax, &RamseyBudget::default()) {
            Ok(n) => {
                println!("\nl = {l}, r = {r}: R = {:?}", n.value);
                if let Some(w) = n.witnesses.last() {
                    println!("  last counterexample: {}", w.to_json());
                }
            }
            Err(e) => println!("\nl = {l}, r = {r}: {e}"),
        }
    }
    Ok(())
}
