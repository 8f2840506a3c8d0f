//! Bad sequences Seq(α, l) for the identity parameter and their certificates.
use maclagan::constructions::{
    verify_bad, verify_degrees, verify_length, DegreeMode, MaclaganBuilder,
};
use maclagan::hierarchy::fgh;
use maclagan::ordinals::{Convention, Ordinal};
use num_bigint::BigUint;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cap = BigUint::from(1u64 << 20);

    let zero = Ordinal::zero();
    let s = MaclaganBuilder::new(0, cap.clone()).full(&zero, 1)?;
    println!("Seq(0, 1):");
    for (i, ideal) in s.ideals.iter().enumerate() {
        println!("  {i}: {ideal:?}");
    }

    println!("\n{:>8} {:>2} {:>2} {:>7} {:>7}  checks", "alpha", "l", "d", "F(l)", "len");
    for (a, l) in [("1", 2), ("2", 2), ("3", 2), ("w", 2), ("w+1", 1), ("w^2", 1), ("w^2+w+1", 1)] {
        let alpha: Ordinal = a.parse()?;
        let d = alpha.min_dimension();
        let builder = MaclaganBuilder::new(d, cap.clone());
        let s = builder.certified(&alpha, l)?;
        let target = fgh(&alpha, l, &cap);
        let bad = verify_bad(&s);
        let deg = verify_degrees(&s, DegreeMode::PlusH)?;
        let long = verify_length(&s, &target)?;
        println!(
            "{a:>8} {l:>2} {d:>2} {target:>7} {:>7}  {bad:?} {deg:?} longer={long}",
            s.len()
        );
    }

    let w: Ordinal = "w".parse()?;
    let shifted = MaclaganBuilder::new(1, cap).convention(Convention::Shifted).certified(&w, 1)?;
    println!(
        "\nshifted convention, Seq(w, 1): {} entries, {:?}, {:?}",
        shifted.len(),
        verify_bad(&shifted),
        verify_degrees(&shifted, DegreeMode::PlusH)?
    );
    Ok(())
}
