//! Monomial ideals as antichains of exponent vectors.
use maclagan::ideals::{contains, degree_ideal, minimalize, Monomial, MonomialIdeal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // two variables: exponents are [X_0, Y]
    let x = MonomialIdeal::from_exps(2, &[&[1, 0]])?;
    let xy2 = MonomialIdeal::from_exps(2, &[&[1, 2]])?;
    let x2_y = MonomialIdeal::from_exps(2, &[&[2, 0], &[0, 1]])?;
    println!("<X> contains <XY^2>: {}", contains(&x, &xy2)?);
    println!("<X^2, Y> contains <X>: {}", contains(&x2_y, &x)?);
    println!("<1> contains <X^2, Y>: {}", contains(&MonomialIdeal::unit(2), &x2_y)?);

    let g = [[1, 0], [1, 1], [0, 3]].map(|e| Monomial::new(e.to_vec()));
    println!("minimalize {{X, XY, Y^3}} = {:?}", minimalize(2, g)?);

    let i = MonomialIdeal::from_exps(2, &[&[2, 1], &[0, 3], &[2, 2]])?;
    println!("deg <X^2Y, Y^3, X^2Y^2> = {} via {i:?}", degree_ideal(&i));

    let sum = x.sum(&MonomialIdeal::from_exps(2, &[&[0, 4]])?)?;
    let scaled = sum.scaled(&Monomial::new(vec![0, 1]))?;
    println!("<X> + <Y^4> = {sum:?}, times Y = {scaled:?}");
    println!("json: {}", serde_json::to_string(&scaled)?);
    Ok(())
}
