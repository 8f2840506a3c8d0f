//! Closed-form upper bounds, evaluated exactly up to a cap.
use maclagan::hierarchy::{bound_pigeonhole, bound_slow, fgh};
use maclagan::ordinals::Ordinal;
use num_bigint::BigUint;
use num_traits::One;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cap = BigUint::one() << 200u32;
    for (d, l, c) in [(0, 0, 0), (0, 1, 0), (0, 2, 1), (1, 1, 0), (2, 10, 10)] {
        println!("pigeonhole d={d} l={l} c={c}: {}", bound_pigeonhole(d, l, c, &cap));
    }
    let pow2 = |k: u64| move |l: u64| BigUint::one() << (l + k);
    println!("slow, B(l) = 2^(l+3), d=0 l=0: {}", bound_slow(0, 0, pow2(3), &cap)?);
    println!("slow, B(l) = 2^(l+2): {}", bound_slow(0, 0, pow2(2), &cap).unwrap_err());
    let w: Ordinal = "w".parse()?;
    let big = BigUint::one() << 64u32;
    let b = |l: u64| fgh(&w, l, &big).value().cloned().unwrap_or_else(|| big.clone());
    for l in 0..4 {
        match bound_slow(0, l, b, &cap) {
            Ok(v) => println!("slow, B = F_w, d=0 l={l}: {v}"),
            Err(e) => println!("slow, B = F_w, d=0 l={l}: {e}"),
        }
    }
    Ok(())
}
