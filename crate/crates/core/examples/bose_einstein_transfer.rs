//! Words over [n+1] modulo cyclic value shifts are parking functions. The
//! Bose-Einstein chain on all words therefore projects onto the parking
//! chain, with kernels differing by exactly a factor n+1.

use catalan_burnside::bose_einstein::{shift_orbit, BeKernel};
use catalan_burnside::burnside::PfKernel;
use catalan_burnside::combinatorics::{enumerate_pf, pollak_representative};
use catalan_burnside::Word;

fn main() {
    let n = 3;
    let k = n + 1;

    let w = Word::parse("4,4,2", k).unwrap();
    let (rep, c) = pollak_representative(&w).unwrap();
    println!("shift class of {w}:");
    for u in shift_orbit(&w) {
        println!("  {u}");
    }
    println!("representative {rep} reached with shift c = {c}\n");

    let pf = PfKernel::new(n);
    let be = BeKernel::new(n, k);
    let states: Vec<Vec<usize>> = enumerate_pf(n).unwrap().into_iter().map(|x| x.into_entries()).collect();
    let scale = catalan_burnside::Rational::from_integer((k as i64).into());
    let mut checked = 0;
    for x in &states {
        for y in &states {
            assert_eq!(pf.eval(x, y), &scale * be.eval(x, y));
            checked += 1;
        }
    }
    println!("K = {k} K^BE on all {checked} pairs of PF_{n}");
    let x = &states[0];
    println!("e.g. K({x:?}, {x:?}) = {}, K^BE = {}", pf.eval(x, x), be.eval(x, x));
}
