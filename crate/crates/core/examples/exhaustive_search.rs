//! Exact longest bad sequences on tiny universes, next to the pigeonhole bound.
use maclagan::hierarchy::{bound_pigeonhole, ParamFn};
use maclagan::search::{enumerate_universe, max_bad_length, SearchBudget, SearchOptions};
use num_bigint::BigUint;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = SearchBudget::default();
    let cap = BigUint::from(1u64 << 62);
    for u in enumerate_universe(0, 1, true, 100)? {
        println!("  {u:?}");
    }

    println!("\n{:>2} {:>2} {:>8} {:>5} {:>5} {:>22}", "d", "l", "f", "zero", "value", "pigeonhole");
    for (d, l) in [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1)] {
        for include_zero in [true, false] {
            let opts = SearchOptions { include_zero, ..SearchOptions::default() };
            let r = max_bad_length(d, l, &ParamFn::Const(0), &opts, &budget)?;
            let bound = bound_pigeonhole(d as u64, l, 0, &cap);
            println!(
                "{d:>2} {l:>2} {:>8} {include_zero:>5} {:>5} {bound:>22}",
                "const:0",
                r.value.map_or("?".into(), |v| v.to_string())
            );
        }
    }

    let r = max_bad_length(0, 1, &ParamFn::Const(0), &SearchOptions::default(), &budget)?;
    println!("\nwitness for d = 0, l = 1:");
    for ideal in &r.witness.ideals {
        println!("  {ideal:?}");
    }

    let small = SearchBudget { max_nodes: 100_000, ..budget };
    let r = max_bad_length(0, 0, &ParamFn::Log, &SearchOptions::default(), &small)?;
    println!("\nf = log, l = 0: exhausted = {}, best length {}", r.exhausted, r.witness.len());
    Ok(())
}
