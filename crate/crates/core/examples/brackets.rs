//! Structure constants of both algebras and a spot check of the Jacobi identity.

use svmod::bracket::{bracket, bracket_elements};
use svmod::{Generator, LinComb};

fn show(x: Generator, y: Generator) {
    println!("[{x}, {y}] = {:?}", bracket(&x, &y).expect("same algebra"));
}

fn main() {
    show(Generator::l(2), Generator::l(-2));
    show(Generator::l(1), Generator::y(-1));
    show(Generator::y(0), Generator::y(-1));
    show(Generator::l(3), Generator::m(-1));
    show(Generator::wl(2), Generator::w(-2));
    show(Generator::w(1), Generator::w(-1));

    let (x, y, z) = (Generator::l(2), Generator::y(-1), Generator::y(-2));
    let mut sum = bracket_elements(&bracket(&x, &y).unwrap(), &LinComb::basis(z)).unwrap();
    sum.add_assign(&bracket_elements(&bracket(&y, &z).unwrap(), &LinComb::basis(x)).unwrap());
    sum.add_assign(&bracket_elements(&bracket(&z, &x).unwrap(), &LinComb::basis(y)).unwrap());
    println!("Jacobi sum for ({x}, {y}, {z}): {sum:?}");
}
