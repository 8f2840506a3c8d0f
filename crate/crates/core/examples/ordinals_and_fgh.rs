//! Ordinals below ω^ω, fundamental sequences and the fast-growing hierarchy.
use maclagan::hierarchy::{fgh, fgh_inverse, fgh_with, ParamFn};
use maclagan::ordinals::{Convention, Ordinal};
use num_bigint::BigUint;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cap = BigUint::from(1_000_000u32);
    for s in ["0", "w*2+3", "w^2+w", "w^2*1+w*3+2"] {
        let a: Ordinal = s.parse()?;
        println!("{s:>12} -> {a:<10} {:?}  h_a(d=2) = {}", a.kind(), a.h(2)?);
    }

    let a: Ordinal = "w^2+w*3".parse()?;
    let standard: Vec<String> = (0..4).map(|i| a.fund_seq(i).unwrap().to_string()).collect();
    let shifted: Vec<String> = (0..4)
        .map(|i| a.fund_seq_with(Convention::Shifted, i).unwrap().to_string())
        .collect();
    println!("\n({a})[i], standard: {}", standard.join(", "));
    println!("({a})[i], shifted:  {}", shifted.join(", "));

    println!("\n{:>6} {}", "alpha", (0..6).map(|i| format!("{:>10}", format!("F(.)({i})"))).collect::<String>());
    for s in ["0", "1", "2", "3", "w", "w+1"] {
        let a: Ordinal = s.parse()?;
        let row: String = (0..6)
            .map(|i| format!("{:>10}", fgh(&a, i, &cap).to_u64().map_or("> cap".into(), |v| v.to_string())))
            .collect();
        println!("{s:>6} {row}");
    }
    let w: Ordinal = "w".parse()?;
    println!("\nF_w(2) = {} standard, {} shifted", fgh(&w, 2, &cap), fgh_with(Convention::Shifted, &w, 2, &cap));
    println!("F_2^-1(1000) = {}", fgh_inverse(&"2".parse()?, 1000));

    for f in ["log", "loglog", "rootlog:2", "div:3", "rootlog-fgh:2"] {
        let f: ParamFn = f.parse()?;
        let vals: Vec<u64> = [1, 16, 256, 65536, 1 << 40].iter().map(|&i| f.eval(i)).collect();
        println!("{f:>14} at 1, 16, 256, 2^16, 2^40: {vals:?}");
    }
    Ok(())
}
