//! Exact transition matrix of the chain on PF_3, with its stationary law and
//! a check of reversibility.

use catalan_burnside::burnside::PfKernel;
use catalan_burnside::combinatorics::{enumerate_pf, word::format_entries};
use catalan_burnside::rational::format_rational;
use catalan_burnside::Rational;

fn main() {
    let n = 3;
    let states: Vec<Vec<usize>> = enumerate_pf(n).unwrap().into_iter().map(|x| x.into_entries()).collect();
    let k = PfKernel::new(n);

    print!("{:>7}", "");
    for y in &states {
        print!("{:>7}", format_entries(y));
    }
    println!();
    for x in &states {
        print!("{:>7}", format_entries(x));
        for y in &states {
            print!("{:>7}", format_rational(&k.eval(x, y)));
        }
        println!();
    }

    println!();
    for x in &states {
        println!("pi({}) = {}", format_entries(x), format_rational(&k.stationary(x)));
    }

    let reversible = states.iter().all(|x| {
        states
            .iter()
            .all(|y| k.stationary(x) * k.eval(x, y) == k.stationary(y) * k.eval(y, x))
    });
    let total: Rational = states.iter().map(|x| k.stationary(x)).sum();
    println!("\nstationary mass {total}, detailed balance: {reversible}");
}
